//! Exact computations with finite-dimensional Hopf algebras given by
//! structure constants: axiom checks, structural probes, matched pairs,
//! bicrossed products, their morphisms, and Drinfel'd doubles.

pub mod bicrossed;
pub mod double;
pub mod error;
pub mod field;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod matched_pair;
pub mod morphism;
pub mod presets;
pub mod probe;
pub mod report;

pub use bicrossed::bicrossed_product;
pub use double::{canonical_double_actions, drinfeld_double};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use hopf::{check_hopf_axioms, dual, tensor_product, twist, Axiom, AxiomReport, HopfAlgebra, Violation};
pub use linalg::{Matrix, SubspaceBasis, Tensor3, Vector};
pub use matched_pair::{canonical_pair, check_matched_pair, trivial_pair, Action, MatchedPair, Side};
pub use report::{Check, Report};
