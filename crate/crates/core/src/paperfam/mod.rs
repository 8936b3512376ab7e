//! The diameter-8 family: G = FD inside Sp(4, q^r) ⋊ <β>, where F is a
//! unipotent subgroup of order q^{4r} and D = <x, c> with x = zβ.
//!
//! F is never enumerated. Everything about F is computed on its
//! coordinates (a, b, c, d, x) or symbolically; only D (order r²t) is
//! materialised.

mod checks;
mod fixed;
mod params;
mod symbolic;

pub use checks::{
    run_suite, run_suite_with_cap, verify_dstruct, verify_not_frobenius_structure, witness_path8,
    CheckEntry, CheckStatus, DStructReport, NotFrobeniusReport, SuiteReport, WitnessPath,
};
pub use fixed::{
    centralizer_in_g, fixed_points_in_f, CentralizerInG, FixedPointMethod, FixedPoints,
};
pub use params::{find_params, norm_quotient, search_params, ParamSearch, ParamTriple};
pub use symbolic::{
    center_of_f, verify_f_class3, verify_m3, verify_m3_exhaustive, verify_symplectic, CenterOfF,
    Class3Report, M3Certificate, M3Outcome, PolyMatrix, SymplecticReport,
};

use num_bigint::BigUint;
use thiserror::Error;

use crate::finfield::{Field, FieldElement, FieldError, DEFAULT_FIELD_CAP};
use crate::groups::{FieldMatrix, FiniteGroup, GroupElement, GroupError, MatrixAutElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PaperError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no element of order {order} in the field")]
    NoSuchParams { order: u64 },
    #[error("no pair d, e of order r^2 with four distinct values d^r, d^-r, e^r, e^-r")]
    EigenvalueClash,
    #[error("element does not normalise F")]
    NotNormalizing,
    #[error("element is not in D")]
    NotInD,
    #[error("matrix is not in F: {0}")]
    NotInF(String),
    #[error("symbolic check failed: {0}")]
    SymbolicFailure(String),
    #[error("path broken at edge {edge}: {detail}")]
    PathBroken { edge: usize, detail: String },
    #[error("check {check} failed: {detail}")]
    CheckFailed { check: String, detail: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Coordinates of an element of F:
///
/// ```text
/// [1  0  0  0]
/// [a  1  0  0]
/// [b  x  1  0]
/// [c  d -a  1]
/// ```
///
/// subject to d = b - x·a.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCoords {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
    pub x: FieldElement,
}

impl FCoords {
    /// Free coordinates; d is determined by the relation.
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, x: FieldElement) -> Self {
        let d = &b - &(&x * &a);
        FCoords { a, b, c, d, x }
    }

    pub fn identity(field: &Field) -> Self {
        FCoords::new(field.zero(), field.zero(), field.zero(), field.zero())
    }

    pub fn satisfies_relation(&self) -> bool {
        self.d == &self.b - &(&self.x * &self.a)
    }

    pub fn to_matrix(&self) -> FieldMatrix {
        let f = self.a.field();
        let (o, z) = (f.one(), f.zero());
        FieldMatrix::from_rows(
            f,
            &[
                vec![o.clone(), z.clone(), z.clone(), z.clone()],
                vec![self.a.clone(), o.clone(), z.clone(), z.clone()],
                vec![self.b.clone(), self.x.clone(), o.clone(), z],
                vec![self.c.clone(), self.d.clone(), -&self.a, o],
            ],
        )
        .expect("entries share one field")
    }

    pub fn to_element(&self) -> MatrixAutElement {
        MatrixAutElement::new_unchecked(self.to_matrix(), 0)
    }

    pub fn from_matrix(m: &FieldMatrix) -> Result<Self, PaperError> {
        if m.dim() != 4 {
            return Err(PaperError::NotInF(format!("dimension {}", m.dim())));
        }
        let f = m.field();
        for i in 0..4 {
            if !m.get(i, i).is_one() {
                return Err(PaperError::NotInF(format!(
                    "diagonal entry ({i},{i}) is not 1"
                )));
            }
            for j in i + 1..4 {
                if !m.get(i, j).is_zero() {
                    return Err(PaperError::NotInF(format!(
                        "entry ({i},{j}) above the diagonal"
                    )));
                }
            }
        }
        if m.get(3, 2) != -&m.get(1, 0) {
            return Err(PaperError::NotInF("entry (3,2) is not -a".into()));
        }
        let coords = FCoords {
            a: m.get(1, 0),
            b: m.get(2, 0),
            c: m.get(3, 0),
            d: m.get(3, 1),
            x: m.get(2, 1),
        };
        if !coords.satisfies_relation() {
            return Err(PaperError::NotInF("d differs from b - x*a".into()));
        }
        debug_assert_eq!(coords.a.field(), f);
        Ok(coords)
    }
}

/// The form matrix J of the symplectic space.
pub fn symplectic_form(field: &Field) -> FieldMatrix {
    FieldMatrix::from_ints(
        field,
        &[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[-1, 0, 0, 0]],
    )
}

/// A J A^T = J.
pub fn is_symplectic(m: &FieldMatrix) -> bool {
    let j = symplectic_form(m.field());
    m.mul(&j).mul(&m.transpose()) == j
}

/// q^{4r} r² t.
pub fn example_group_order(params: &ParamTriple) -> BigUint {
    f_order(params) * BigUint::from(params.r * params.r) * BigUint::from(params.t)
}

/// |F| = q^{4r}.
pub fn f_order(params: &ParamTriple) -> BigUint {
    BigUint::from(params.q).pow(4 * params.r as u32)
}

/// The concrete data of one member of the family.
#[derive(Clone, Debug)]
pub struct ExampleGroup {
    pub params: ParamTriple,
    pub field: Field,
    /// Diagonal entries d, e of z and f of c.
    pub eig_d: FieldElement,
    pub eig_e: FieldElement,
    pub eig_f: FieldElement,
    pub z: MatrixAutElement,
    pub c: MatrixAutElement,
    /// x = zβ.
    pub x: MatrixAutElement,
    /// The fixed element g of F used to define y = x^g.
    pub g: MatrixAutElement,
    /// D = <x, c>, enumerated.
    pub d_group: FiniteGroup<MatrixAutElement>,
}

impl ExampleGroup {
    pub fn x_r(&self) -> MatrixAutElement {
        self.x.pow(self.params.r)
    }

    pub fn y(&self) -> MatrixAutElement {
        self.x.conjugate_by(&self.g)
    }

    /// The one-parameter family in C_F(c): a in position (1,0), -a in (3,2).
    pub fn c_family(&self, a: &FieldElement) -> MatrixAutElement {
        c_family(a).to_element()
    }

    /// Central element of F with only the c-coordinate nonzero.
    pub fn central(&self, c: &FieldElement) -> MatrixAutElement {
        let z = self.field.zero();
        FCoords::new(z.clone(), z.clone(), c.clone(), z).to_element()
    }

    pub fn fixed_points(&self, w: &MatrixAutElement) -> Result<FixedPoints, PaperError> {
        let method = if self.field.order() <= crate::finfield::TABLE_LIMIT {
            FixedPointMethod::LinearAndEnumerate
        } else {
            FixedPointMethod::Linear
        };
        fixed_points_in_f(w, method)
    }
}

pub fn c_family(a: &FieldElement) -> FCoords {
    let z = a.field().zero();
    FCoords::new(a.clone(), z.clone(), z.clone(), z)
}

/// The explicit element g of F: b = x = d = 1, a = c = 0.
pub fn explicit_g(field: &Field) -> FieldMatrix {
    FieldMatrix::from_ints(
        field,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 0, 1]],
    )
}

pub fn build_example(params: ParamTriple) -> Result<ExampleGroup, PaperError> {
    build_example_with_cap(params, DEFAULT_FIELD_CAP)
}

/// Build with `cap` bounding both the field order and |D|.
pub fn build_example_with_cap(params: ParamTriple, cap: u64) -> Result<ExampleGroup, PaperError> {
    params.validate()?;
    let ParamTriple { q, r, t } = params;
    let field = Field::with_cap(q, r as usize, cap)?;
    let r2 = r * r;
    let candidates = field
        .elements_of_order(r2)
        .map_err(|_| PaperError::NoSuchParams { order: r2 })?;
    let (eig_d, eig_e) = candidates
        .iter()
        .flat_map(|d| candidates.iter().map(move |e| (d, e)))
        .find(|(d, e)| {
            let mut set = vec![
                d.pow(r),
                d.pow(r).inv().unwrap(),
                e.pow(r),
                e.pow(r).inv().unwrap(),
            ];
            set.sort();
            set.dedup();
            set.len() == 4
        })
        .map(|(d, e)| (d.clone(), e.clone()))
        .ok_or(PaperError::EigenvalueClash)?;
    let eig_f = field
        .element_of_order(t)
        .map_err(|_| PaperError::NoSuchParams { order: t })?;

    let z_mat = FieldMatrix::diagonal(
        &field,
        &[eig_d.clone(), eig_e.clone(), eig_e.inv()?, eig_d.inv()?],
    );
    let c_mat = FieldMatrix::diagonal(
        &field,
        &[eig_f.clone(), eig_f.clone(), eig_f.inv()?, eig_f.inv()?],
    );
    let z = MatrixAutElement::new(z_mat.clone(), 0)?;
    let c = MatrixAutElement::new(c_mat, 0)?;
    let x = MatrixAutElement::new(z_mat, 1)?;
    let g = MatrixAutElement::new(explicit_g(&field), 0)?;
    let d_group =
        FiniteGroup::generate(&[x.clone(), c.clone()], cap.min(usize::MAX as u64) as usize)?;
    Ok(ExampleGroup {
        params,
        field,
        eig_d,
        eig_e,
        eig_f,
        z,
        c,
        x,
        g,
        d_group,
    })
}
