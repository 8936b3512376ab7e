use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::finfield::{Field, FieldElement};

use super::{GroupElement, GroupError};

/// Square matrix over a [`Field`], entries stored as raw encodings in
/// row-major order.
#[derive(Clone)]
pub struct FieldMatrix {
    field: Field,
    dim: usize,
    entries: Vec<u32>,
}

impl FieldMatrix {
    pub fn identity(field: &Field, dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        FieldMatrix {
            field: field.clone(),
            dim,
            entries,
        }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<FieldElement>]) -> Result<Self, GroupError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(GroupError::InvalidMatrix(format!(
                    "row of length {} in a {dim}x{dim} matrix",
                    row.len()
                )));
            }
            for e in row {
                if e.field() != field {
                    return Err(GroupError::BackendMismatch);
                }
                entries.push(e.raw());
            }
        }
        Ok(FieldMatrix {
            field: field.clone(),
            dim,
            entries,
        })
    }

    /// Matrix with entries taken from the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), dim, "matrix must be square");
                r.iter().map(|&v| field.int_raw(v))
            })
            .collect();
        FieldMatrix {
            field: field.clone(),
            dim,
            entries,
        }
    }

    pub fn diagonal(field: &Field, diag: &[FieldElement]) -> Self {
        let dim = diag.len();
        let mut m = FieldMatrix {
            field: field.clone(),
            dim,
            entries: vec![0; dim * dim],
        };
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * dim + i] = d.raw();
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.field.wrap(self.entries[i * self.dim + j])
    }

    pub fn rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let f = &self.field;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for l in 0..n {
                let a = self.entries[i * n + l];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.entries[l * n + j];
                    if b != 0 {
                        let idx = i * n + j;
                        entries[idx] = f.add_raw(entries[idx], f.mul_raw(a, b));
                    }
                }
            }
        }
        FieldMatrix {
            field: f.clone(),
            dim: n,
            entries,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let f = &self.field;
        FieldMatrix {
            field: f.clone(),
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| f.sub_raw(a, b))
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        FieldMatrix {
            field: self.field.clone(),
            dim: n,
            entries,
        }
    }

    /// Apply beta^i entrywise.
    pub fn frobenius(&self, i: i64) -> Self {
        FieldMatrix {
            field: self.field.clone(),
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|&a| self.field.frob_raw(a, i))
                .collect(),
        }
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let f = &self.field;
        let mut a = self.entries.clone();
        let mut inv = FieldMatrix::identity(f, n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let scale = f.inv_raw(a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul_raw(a[col * n + j], scale);
                inv[col * n + j] = f.mul_raw(inv[col * n + j], scale);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = f.sub_raw(a[r * n + j], f.mul_raw(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub_raw(inv[r * n + j], f.mul_raw(factor, inv[col * n + j]));
                }
            }
        }
        Some(FieldMatrix {
            field: f.clone(),
            dim: n,
            entries: inv,
        })
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .all(|(idx, &v)| v == u32::from(idx / n == idx % n))
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .all(|(idx, &v)| idx / n == idx % n || v == 0)
    }

    pub fn diagonal_entries(&self) -> Vec<FieldElement> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }
}

impl PartialEq for FieldMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }
}

impl Eq for FieldMatrix {}

impl Hash for FieldMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl PartialOrd for FieldMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Element `A * beta^twist` of the semidirect product GL(d, F) ⋊ <beta>,
/// where beta is the Frobenius automorphism acting entrywise.
///
/// Conjugation by beta applies beta: `beta^-1 * A * beta = beta(A)`, hence
/// `(A, i) * (B, j) = (A * beta^-i(B), i + j)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixAutElement {
    matrix: FieldMatrix,
    twist: u32,
}

impl MatrixAutElement {
    pub fn new(matrix: FieldMatrix, twist: i64) -> Result<Self, GroupError> {
        if matrix.inverse().is_none() {
            return Err(GroupError::InvalidMatrix("matrix is singular".into()));
        }
        Ok(Self::new_unchecked(matrix, twist))
    }

    pub(crate) fn new_unchecked(matrix: FieldMatrix, twist: i64) -> Self {
        let k = matrix.field().degree() as i64;
        MatrixAutElement {
            twist: twist.rem_euclid(k) as u32,
            matrix,
        }
    }

    /// The pure matrix `(A, 0)`.
    pub fn from_matrix(matrix: FieldMatrix) -> Result<Self, GroupError> {
        Self::new(matrix, 0)
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }
}

impl GroupElement for MatrixAutElement {
    fn compose(&self, rhs: &Self) -> Self {
        let moved = if self.twist == 0 {
            rhs.matrix.clone()
        } else {
            rhs.matrix.frobenius(-(self.twist as i64))
        };
        MatrixAutElement::new_unchecked(
            self.matrix.mul(&moved),
            self.twist as i64 + rhs.twist as i64,
        )
    }

    fn inverse(&self) -> Self {
        let inv = self
            .matrix
            .inverse()
            .expect("group elements are invertible");
        MatrixAutElement::new_unchecked(inv.frobenius(self.twist as i64), -(self.twist as i64))
    }

    fn identity_like(&self) -> Self {
        MatrixAutElement::new_unchecked(FieldMatrix::identity(self.field(), self.matrix.dim()), 0)
    }

    fn is_identity(&self) -> bool {
        self.twist == 0 && self.matrix.is_identity()
    }
}

impl PartialOrd for MatrixAutElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MatrixAutElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.twist
            .cmp(&other.twist)
            .then_with(|| self.matrix.cmp(&other.matrix))
    }
}

impl fmt::Debug for MatrixAutElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}·β^{}", self.matrix, self.twist)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_identity() {
        let f = Field::new(11, 5).unwrap();
        let g = f.primitive_element();
        let m = FieldMatrix::from_rows(&f, &[vec![g.clone(), f.one()], vec![f.zero(), g.pow(3)]])
            .unwrap();
        let x = MatrixAutElement::new(m, 1).unwrap();
        assert!(x.compose(&x.inverse()).is_identity());
        assert!(x.inverse().compose(&x).is_identity());
        assert!(MatrixAutElement::new(FieldMatrix::from_ints(&f, &[&[1, 1], &[1, 1]]), 0).is_err());
    }

    #[test]
    fn twist_conjugation_applies_frobenius() {
        let f = Field::new(11, 5).unwrap();
        let g = f.primitive_element();
        let beta = MatrixAutElement::new(FieldMatrix::identity(&f, 1), 1).unwrap();
        let h =
            MatrixAutElement::new(FieldMatrix::diagonal(&f, std::slice::from_ref(&g)), 0).unwrap();
        // beta^-1 h beta = beta(h) = h^11
        assert_eq!(h.conjugate_by(&beta).matrix().get(0, 0), g.pow(11));
        assert_eq!(beta.element_order(), 5);
    }

    #[test]
    fn gauss_jordan_inverse() {
        let f = Field::new(7, 1).unwrap();
        let m = FieldMatrix::from_ints(&f, &[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
    }
}
