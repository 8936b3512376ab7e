//! Finite groups given by generators: element backends and the algorithms
//! that work on a fully enumerated group.

mod finite;
mod handle;
mod matrix;
mod perm;
mod structure;

pub use finite::{generate_elements, FiniteGroup, Subgroup, DEFAULT_GROUP_CAP};
pub use handle::{Backend, Element, GroupFile, GroupHandle, MatrixEntry, MatrixGenerator};
pub use matrix::{FieldMatrix, MatrixAutElement};
pub use perm::Permutation;
pub use structure::Quotient;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::finfield::FieldError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group closure exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("element is not a member of the group")]
    NotMember,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("generators do not share one backend and ambient space")]
    BackendMismatch,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("malformed group file: {0}")]
    Parse(String),
}

/// An element of some ambient group. `Ord` is the canonical order used for
/// every deterministic choice.
pub trait GroupElement: Clone + Eq + Hash + Ord + Debug + Send + Sync {
    fn compose(&self, rhs: &Self) -> Self;

    fn inverse(&self) -> Self;

    /// The identity of the ambient group this element lives in.
    fn identity_like(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    fn commutes_with(&self, other: &Self) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// x^g = g^-1 x g.
    fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().compose(self).compose(g)
    }

    fn pow(&self, n: u64) -> Self {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Order by repeated multiplication.
    fn element_order(&self) -> u64 {
        let mut cur = self.clone();
        let mut n = 1;
        while !cur.is_identity() {
            cur = cur.compose(self);
            n += 1;
        }
        n
    }
}

/// Commutator [a, b] = a^-1 b^-1 a b.
pub fn commutator<E: GroupElement>(a: &E, b: &E) -> E {
    a.inverse().compose(&b.inverse()).compose(a).compose(b)
}
