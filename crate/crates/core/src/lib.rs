//! Commuting graphs of finite groups.
//!
//! * [`finfield`]: exact GF(p^k) arithmetic and sparse polynomials.
//! * [`groups`]: permutation and twisted-matrix element backends plus the
//!   finite-group algorithms (centralisers, Sylow subgroups, Fitting
//!   subgroup, quotients).
//! * [`commgraph`]: the commuting graph on non-central elements, compressed
//!   to centraliser classes, with BFS distances, diameter and components.
//! * [`classify`]: Frobenius and 2-Frobenius detection and the
//!   disconnected-or-diameter-at-most-8 verdict for soluble groups.
//! * [`paperfam`]: the diameter-8 family over GF(q^r) and its checks.

pub mod classify;
pub mod commgraph;
pub mod finfield;
pub mod groups;
pub mod numtheory;
pub mod paperfam;

pub use classify::{classify_group, ClassificationVerdict, VerdictKind};
pub use commgraph::{CommutingGraph, Distance, DistanceReport, GraphError, GraphSummary};
pub use finfield::{BiPoly, Field, FieldElement, FieldError, FieldSpec, MPoly};
pub use groups::{
    Element, FiniteGroup, GroupElement, GroupError, GroupHandle, MatrixAutElement, Permutation,
    Subgroup,
};
