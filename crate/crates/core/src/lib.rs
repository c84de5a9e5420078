//! Three-dimensional omega-Lie algebras: structure constants, the
//! omega-Jacobi identity, and a constructive classification over ℂ and ℝ
//! that returns a canonical class together with an explicit basis change.

// `!(x < t)` comparisons are deliberate: they reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod eigen;
pub mod error;
pub mod iso;
pub mod label;
pub mod linalg;
pub mod oracle;

pub use algebra::{
    adjoint, derived_rank, induced_omega, jacobiator, omega_radical, transform, validate, Algebra, Bracket, Convention,
    Field, OmegaForm, Tolerances, ValidationReport, Witness,
};
pub use classify::{classify, complexify, lie_classify, ClassificationReport};
pub use error::{Error, Result};
pub use iso::{is_isomorphic, search_witness, IsoResult, SearchConfig, Via};
pub use label::{canonicalize_ratio, ClassLabel};
pub use linalg::{Matrix3, Scalar, Vector3};
