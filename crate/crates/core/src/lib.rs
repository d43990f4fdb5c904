pub mod calculus;
pub mod cli;
pub mod cohomology;
pub mod document;
pub mod error;
pub mod field;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod spectral;
pub mod hopf_lie;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Mat, QuotientSpace, Subspace};
