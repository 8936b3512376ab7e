//! Fixed points of F under conjugation by diagonal-times-β^i elements, and
//! centralisers in G = FD of elements of D.
//!
//! For w = (Λ, i) with Λ = diag(λ_1, .., λ_4), conjugation acts entrywise:
//! m_jl ↦ β^i(κ_jl · m_jl) with κ_jl = λ_l / λ_j. Such a w maps F to itself
//! exactly when λ_1 λ_4 = λ_2 λ_3; then the relation d = b - x·a is carried
//! along, so a fixed point is any choice of fixed a, b, c, x.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::finfield::{Field, FieldElement};
use crate::groups::{GroupElement, MatrixAutElement, Subgroup};

use super::{ExampleGroup, FCoords, PaperError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedPointMethod {
    /// Kernel of the GF(p)-linear map m ↦ β^i(κm) - m.
    Linear,
    /// The linear route, cross-checked by enumerating every field element.
    LinearAndEnumerate,
}

/// Fixed space of one free coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateSpace {
    pub name: &'static str,
    pub scalar: FieldElement,
    /// Dimension over the prime field.
    pub dim: usize,
    pub basis: Vec<FieldElement>,
}

/// C_F(w) described by the fixed subspaces of the free coordinates a, b, c
/// and x; d follows from the relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoints {
    pub twist: u32,
    pub coords: Vec<CoordinateSpace>,
    pub order: BigUint,
    pub method: FixedPointMethod,
}

impl FixedPoints {
    pub fn is_trivial(&self) -> bool {
        self.coords.iter().all(|c| c.dim == 0)
    }

    pub fn coord(&self, name: &str) -> &CoordinateSpace {
        self.coords
            .iter()
            .find(|c| c.name == name)
            .expect("coordinate names are a, b, c, x")
    }

    /// Whether the point lies in the fixed set, by direct evaluation of the
    /// per-entry equations.
    pub fn contains(&self, p: &FCoords) -> bool {
        let value = |name: &str| match name {
            "a" => &p.a,
            "b" => &p.b,
            "c" => &p.c,
            _ => &p.x,
        };
        p.satisfies_relation()
            && self.coords.iter().all(|s| {
                let m = value(s.name);
                (&s.scalar * m).frobenius(self.twist as i64) == *m
            })
    }
}

/// (name, row, col) of the free coordinates.
const FREE: [(&str, usize, usize); 4] = [("a", 1, 0), ("b", 2, 0), ("c", 3, 0), ("x", 2, 1)];

/// C_F(w) for w = (Λ, i) with Λ diagonal.
pub fn fixed_points_in_f(
    w: &MatrixAutElement,
    method: FixedPointMethod,
) -> Result<FixedPoints, PaperError> {
    let m = w.matrix();
    if m.dim() != 4 || !m.is_diagonal() {
        return Err(PaperError::NotNormalizing);
    }
    let lambda = m.diagonal_entries();
    if &lambda[0] * &lambda[3] != &lambda[1] * &lambda[2] {
        return Err(PaperError::NotNormalizing);
    }
    let field = w.field().clone();
    let twist = w.twist();
    let mut coords = Vec::new();
    let mut total_dim = 0;
    for (name, j, l) in FREE {
        let scalar = &lambda[l] * &lambda[j].inv()?;
        let basis = semilinear_kernel(&field, &scalar, twist);
        if method == FixedPointMethod::LinearAndEnumerate {
            let count = count_by_enumeration(&field, &scalar, twist);
            let expected = field.characteristic().pow(basis.len() as u32);
            if count != expected {
                return Err(PaperError::CheckFailed {
                    check: "fixed_points".into(),
                    detail: format!(
                        "coordinate {name}: enumeration found {count} solutions, linear algebra {expected}"
                    ),
                });
            }
        }
        total_dim += basis.len();
        coords.push(CoordinateSpace {
            name,
            scalar,
            dim: basis.len(),
            basis,
        });
    }
    Ok(FixedPoints {
        twist,
        coords,
        order: BigUint::from(field.characteristic()).pow(total_dim as u32),
        method,
    })
}

fn count_by_enumeration(field: &Field, scalar: &FieldElement, twist: u32) -> u64 {
    let n = field.order() as u32;
    let s = scalar.raw();
    (0..n)
        .into_par_iter()
        .filter(|&m| field.frob_raw(field.mul_raw(s, m), twist as i64) == m)
        .count() as u64
}

/// Basis over GF(p) of {m : β^i(κm) = m}.
fn semilinear_kernel(field: &Field, scalar: &FieldElement, twist: u32) -> Vec<FieldElement> {
    let p = field.characteristic();
    let k = field.degree();
    // Column j is the image of the basis element X^j (encoding p^j).
    let columns: Vec<Vec<u64>> = (0..k)
        .map(|j| {
            let e = p.pow(j as u32) as u32;
            let image = field.frob_raw(field.mul_raw(scalar.raw(), e), twist as i64);
            let diff = field.sub_raw(image, e);
            field.coeffs_raw(diff).into_iter().map(u64::from).collect()
        })
        .collect();
    nullspace_mod_p(&columns, k, p)
        .into_iter()
        .map(|v| field.from_coeffs(&v).expect("reduced coefficients"))
        .collect()
}

/// Null space of the k×k matrix given by columns, over GF(p).
fn nullspace_mod_p(columns: &[Vec<u64>], k: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            columns
                .iter()
                .map(|c| c.get(i).copied().unwrap_or(0))
                .collect()
        })
        .collect();
    let inv = |a: u64| crate::numtheory::mod_pow(a, p - 2, p);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(pr) = (row..k).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(row, pr);
        let s = inv(rows[row][col]);
        for v in rows[row].iter_mut() {
            *v = *v * s % p;
        }
        let pivot_row = rows[row].clone();
        for (r, target) in rows.iter_mut().enumerate() {
            if r != row && target[col] != 0 {
                let factor = target[col];
                for (t, &v) in target.iter_mut().zip(&pivot_row) {
                    *t = (*t + p * p - factor * v % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..k)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; k];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][free]) % p;
            }
            v
        })
        .collect()
}

/// C_G(w) = C_F(w) · C_D(w) for w in D.
#[derive(Clone, Debug)]
pub struct CentralizerInG {
    pub d_part: Subgroup,
    pub f_part: FixedPoints,
    pub order: BigUint,
}

/// Centraliser in G of an element of D. Writing g = f·d' with f in F and
/// d' in D, g commutes with w iff f^{-1} w f = d' w d'^{-1}; the left side
/// lies in wF and the right in D, and D ∩ wF = {w}.
pub fn centralizer_in_g(
    eg: &ExampleGroup,
    w: &MatrixAutElement,
) -> Result<CentralizerInG, PaperError> {
    let idx = eg.d_group.index_of(w).ok_or(PaperError::NotInD)?;
    if w.is_identity() {
        return Err(PaperError::NotInD);
    }
    let d_part = eg.d_group.centralizer(idx);
    let f_part = eg.fixed_points(w)?;
    let order = BigUint::from(d_part.order()) * &f_part.order;
    Ok(CentralizerInG {
        d_part,
        f_part,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_small() {
        // x + y = 0 over GF(5): kernel spanned by (4, 1)
        let cols = vec![vec![1, 1], vec![1, 1]];
        let ns = nullspace_mod_p(&cols, 2, 5);
        assert_eq!(ns, vec![vec![4, 1]]);
        let full = nullspace_mod_p(&[vec![0, 0], vec![0, 0]], 2, 5);
        assert_eq!(full.len(), 2);
    }

    #[test]
    fn semilinear_matches_enumeration() {
        let f = Field::new(3, 4).unwrap();
        for s in [
            f.one(),
            f.from_int(2),
            f.primitive_element(),
            f.primitive_element().pow(20),
        ] {
            for twist in 0..4 {
                let basis = semilinear_kernel(&f, &s, twist);
                let count = count_by_enumeration(&f, &s, twist);
                assert_eq!(
                    3u64.pow(basis.len() as u32),
                    count,
                    "scalar {s:?} twist {twist}"
                );
                for b in &basis {
                    assert_eq!((&s * b).frobenius(twist as i64), *b);
                }
            }
        }
    }
}
