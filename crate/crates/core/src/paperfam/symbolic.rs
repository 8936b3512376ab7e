//! Symbolic matrix computations over polynomial rings: symplecticity of a
//! generic element of F, the commutator certificate for the two
//! one-parameter families, Z(F), and the nilpotency class of F.

use num_bigint::BigUint;

use crate::finfield::{BiPoly, Field, FieldElement, MPoly};
use crate::groups::{FieldMatrix, GroupElement};

use super::{c_family, explicit_g, is_symplectic, symplectic_form, ExampleGroup, PaperError};

/// Square matrix with polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn identity(field: &Field, nvars: usize, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|i| {
                if i / n == i % n {
                    MPoly::one(field, nvars)
                } else {
                    MPoly::zero(field, nvars)
                }
            })
            .collect();
        PolyMatrix { n, entries }
    }

    pub fn constant(m: &FieldMatrix, nvars: usize) -> Self {
        let n = m.dim();
        let entries = (0..n * n)
            .map(|i| MPoly::constant(&m.get(i / n, i % n), nvars))
            .collect();
        PolyMatrix { n, entries }
    }

    /// Generic element of F in the indeterminates `vars = [a, b, c, x]`,
    /// with d = b - x·a substituted.
    pub fn generic_f(field: &Field, nvars: usize, vars: [usize; 4]) -> Self {
        let v = |i: usize| MPoly::var(field, nvars, vars[i]);
        let (a, b, c, x) = (v(0), v(1), v(2), v(3));
        let d = &b - &(&x * &a);
        let mut m = PolyMatrix::identity(field, nvars, 4);
        m.set(1, 0, a.clone());
        m.set(2, 0, b);
        m.set(2, 1, x);
        m.set(3, 0, c);
        m.set(3, 1, d);
        m.set(3, 2, -&a);
        m
    }

    /// The family {a ↦ (a at (1,0), -a at (3,2))} in indeterminate `var`.
    pub fn c_family(field: &Field, nvars: usize, var: usize) -> Self {
        let a = MPoly::var(field, nvars, var);
        let mut m = PolyMatrix::identity(field, nvars, 4);
        m.set(1, 0, a.clone());
        m.set(3, 2, -&a);
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, p: MPoly) {
        self.entries[i * self.n + j] = p;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.n;
        let field = self.entries[0].field().clone();
        let nvars = self.entries[0].nvars();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = MPoly::zero(&field, nvars);
                for l in 0..n {
                    let (a, b) = (self.get(i, l), rhs.get(l, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        PolyMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        PolyMatrix {
            n,
            entries: (0..n * n).map(|i| self.get(i % n, i / n).clone()).collect(),
        }
    }

    /// Inverse of I + N with N nilpotent: Σ (-N)^i.
    pub fn unipotent_inverse(&self) -> Self {
        let field = self.entries[0].field().clone();
        let nvars = self.entries[0].nvars();
        let id = PolyMatrix::identity(&field, nvars, self.n);
        let neg_n = id.sub(self);
        let mut term = id.clone();
        let mut acc = id;
        for _ in 1..self.n {
            term = term.mul(&neg_n);
            acc = acc.add(&term);
        }
        acc
    }

    fn add(&self, rhs: &Self) -> Self {
        PolyMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// [A, B] = A^-1 B^-1 A B for unipotent A, B.
    pub fn unipotent_commutator(&self, rhs: &Self) -> Self {
        self.unipotent_inverse()
            .mul(&rhs.unipotent_inverse())
            .mul(self)
            .mul(rhs)
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.entries.iter().enumerate().all(|(i, p)| {
            if i / n == i % n {
                p.as_monomial()
                    .is_some_and(|(c, e)| c.is_one() && e.iter().all(|&x| x == 0))
            } else {
                p.is_zero()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MPoly::is_zero)
    }

    /// Entries of `self - I` that are nonzero, as (row, col, poly).
    pub fn off_identity(&self) -> Vec<(usize, usize, MPoly)> {
        let field = self.entries[0].field().clone();
        let nvars = self.entries[0].nvars();
        let diff = self.sub(&PolyMatrix::identity(&field, nvars, self.n));
        (0..self.n * self.n)
            .filter(|&i| !diff.entries[i].is_zero())
            .map(|i| (i / self.n, i % self.n, diff.entries[i].clone()))
            .collect()
    }

    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldMatrix, PaperError> {
        let field = self.entries[0].field().clone();
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).eval(point))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FieldMatrix::from_rows(&field, &rows)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticReport {
    pub identity: bool,
    pub z: bool,
    pub c: bool,
    pub g: bool,
    /// A J A^T = J as a polynomial identity for the generic element of F.
    pub generic_f: bool,
}

impl SymplecticReport {
    pub fn all(&self) -> bool {
        self.identity && self.z && self.c && self.g && self.generic_f
    }
}

pub fn verify_symplectic(eg: &ExampleGroup) -> SymplecticReport {
    let field = &eg.field;
    let generic = PolyMatrix::generic_f(field, 4, [0, 1, 2, 3]);
    let j = PolyMatrix::constant(&symplectic_form(field), 4);
    SymplecticReport {
        identity: is_symplectic(&FieldMatrix::identity(field, 4)),
        z: is_symplectic(eg.z.matrix()),
        c: is_symplectic(eg.c.matrix()),
        g: is_symplectic(eg.g.matrix()),
        generic_f: generic.mul(&j).mul(&generic.transpose()) == j,
    }
}

/// An entry of [M(a), M(b)^g] - I equal to a nonzero constant times
/// a^i b^j with i, j ≥ 1, which vanishes only when a = 0 or b = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M3Certificate {
    pub row: usize,
    pub col: usize,
    pub entry: BiPoly,
    pub coefficient: FieldElement,
    pub a_exp: u16,
    pub b_exp: u16,
    /// g^-1 M(b) g, entry by entry, for the report.
    pub conjugate_family: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum M3Outcome {
    Symbolic(M3Certificate),
    /// Every pair of nonidentity elements checked over a smaller field of
    /// the same characteristic.
    Exhaustive {
        field_order: u64,
        pairs: u64,
    },
}

/// No nonidentity element of C_F(c) commutes with a nonidentity element of
/// C_F(c)^g.
pub fn verify_m3(eg: &ExampleGroup) -> Result<M3Outcome, PaperError> {
    match m3_certificate(&eg.field) {
        Some(cert) => Ok(M3Outcome::Symbolic(cert)),
        None => {
            let small = Field::new(eg.params.q, 1)?;
            let pairs = verify_m3_exhaustive(&small)?;
            Ok(M3Outcome::Exhaustive {
                field_order: small.order(),
                pairs,
            })
        }
    }
}

fn m3_certificate(field: &Field) -> Option<M3Certificate> {
    let family_a = PolyMatrix::c_family(field, 2, 0);
    let g = explicit_g(field);
    let g_inv = g.inverse().expect("g is invertible");
    let conj_b = PolyMatrix::constant(&g_inv, 2)
        .mul(&PolyMatrix::c_family(field, 2, 1))
        .mul(&PolyMatrix::constant(&g, 2));
    let comm = family_a.unipotent_commutator(&conj_b);
    let names = ["a", "b"];
    let conjugate_family: Vec<Vec<String>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| conj_b.get(i, j).display_with(&names))
                .collect()
        })
        .collect();
    comm.off_identity().into_iter().find_map(|(row, col, p)| {
        let (coefficient, e) = p.as_monomial()?;
        (e[0] >= 1 && e[1] >= 1).then(|| M3Certificate {
            row,
            col,
            coefficient,
            a_exp: e[0],
            b_exp: e[1],
            entry: BiPoly::from(p),
            conjugate_family: conjugate_family.clone(),
        })
    })
}

/// Check [M(a), g^-1 M(b) g] ≠ 1 for all nonzero a, b in `field`. Returns
/// the number of pairs checked.
pub fn verify_m3_exhaustive(field: &Field) -> Result<u64, PaperError> {
    let g = crate::groups::MatrixAutElement::new(explicit_g(field), 0)?;
    let nonzero: Vec<FieldElement> = field.elements().filter(|e| !e.is_zero()).collect();
    let mut pairs = 0;
    for a in &nonzero {
        let m = c_family(a).to_element();
        for b in &nonzero {
            let n = c_family(b).to_element().conjugate_by(&g);
            if m.commutes_with(&n) {
                return Err(PaperError::CheckFailed {
                    check: "m3".into(),
                    detail: format!("M({a}) commutes with M({b})^g"),
                });
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// Z(F) as a set of coordinates forced to zero and coordinates left free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterOfF {
    pub free: Vec<&'static str>,
    pub forced_zero: Vec<&'static str>,
    pub order: BigUint,
}

const COORD_NAMES: [&str; 4] = ["a", "b", "c", "x"];

/// Solve NM = MN for N against a generic M of F: every coefficient (in
/// M's indeterminates) of every entry of NM - MN must vanish. Constraints
/// of the form const·v^k force v = 0; these are applied until nothing
/// is left.
pub fn center_of_f(field: &Field) -> Result<CenterOfF, PaperError> {
    let n = PolyMatrix::generic_f(field, 8, [0, 1, 2, 3]);
    let m = PolyMatrix::generic_f(field, 8, [4, 5, 6, 7]);
    let diff = n.mul(&m).sub(&m.mul(&n));
    let mut constraints: Vec<MPoly> = diff
        .entries
        .iter()
        .flat_map(|e| e.coefficients_in(&[4, 5, 6, 7]).into_values())
        .collect();
    let mut zero = [false; 4];
    loop {
        constraints.retain(|p| !p.is_zero());
        if constraints.is_empty() {
            break;
        }
        let var = constraints.iter().find_map(|p| {
            let (_, e) = p.as_monomial()?;
            let nonzero: Vec<usize> = (0..4).filter(|&v| e[v] > 0).collect();
            (nonzero.len() == 1).then(|| nonzero[0])
        });
        let Some(v) = var else {
            return Err(PaperError::SymbolicFailure(format!(
                "cannot solve remaining constraints: {}",
                constraints[0].display_with(&["a", "b", "c", "x", "a'", "b'", "c'", "x'"])
            )));
        };
        zero[v] = true;
        constraints = constraints.iter().map(|p| p.set_zero(v)).collect();
    }
    let free: Vec<&'static str> = (0..4)
        .filter(|&v| !zero[v])
        .map(|v| COORD_NAMES[v])
        .collect();
    let forced_zero = (0..4)
        .filter(|&v| zero[v])
        .map(|v| COORD_NAMES[v])
        .collect();
    let order = BigUint::from(field.order()).pow(free.len() as u32);
    Ok(CenterOfF {
        free,
        forced_zero,
        order,
    })
}

/// Left-normed commutators of generic elements of F.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class3Report {
    /// A nonzero off-identity entry of [M1, M2].
    pub commutator_entry: Option<(usize, usize, String)>,
    /// A nonzero off-identity entry of [M1, M2, M3].
    pub triple_entry: Option<(usize, usize, String)>,
    /// Whether [M1, M2, M3, M4] = 1 identically.
    pub quadruple_trivial: bool,
}

impl Class3Report {
    pub fn class_is_three(&self) -> bool {
        self.commutator_entry.is_some() && self.triple_entry.is_some() && self.quadruple_trivial
    }
}

pub fn verify_f_class3(field: &Field) -> Class3Report {
    let generic =
        |k: usize| PolyMatrix::generic_f(field, 16, [4 * k, 4 * k + 1, 4 * k + 2, 4 * k + 3]);
    let (m1, m2, m3, m4) = (generic(0), generic(1), generic(2), generic(3));
    let names: Vec<String> = (1..=4)
        .flat_map(|k| COORD_NAMES.iter().map(move |c| format!("{c}{k}")))
        .collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let first = |m: &PolyMatrix| {
        m.off_identity()
            .into_iter()
            .next()
            .map(|(i, j, p)| (i, j, p.display_with(&names)))
    };
    let c2 = m1.unipotent_commutator(&m2);
    let c3 = c2.unipotent_commutator(&m3);
    let c4 = c3.unipotent_commutator(&m4);
    Class3Report {
        commutator_entry: first(&c2),
        triple_entry: first(&c3),
        quadruple_trivial: c4.is_identity(),
    }
}
