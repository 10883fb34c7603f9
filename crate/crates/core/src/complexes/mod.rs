//! Graded spaces, chain complexes over `Q`, homology, chain maps, tensor
//! products and the graded symmetric algebra.

mod chain_map;
mod graded;
pub mod koszul;
mod symmetric;
mod tensor;

pub use chain_map::{ChainMap, ChainMapReport, MapDegreeCheck};
pub use graded::{ChainComplex, ComplexReport, DegreeCheck, GradedSpace, Homology, Label};
pub use symmetric::{graded_symmetric_algebra, mono_mul, symmetric_algebra_complex, Monomial};
pub use tensor::{tensor, tensor_power, unit_complex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("malformed complex: {0}")]
    Structure(String),
    #[error("boundary squares to a nonzero map in degree {degree}")]
    NotAComplex { degree: usize },
    #[error("homology in degree {degree} needs degree {} but the complex stops at {pmax}", degree + 1)]
    Truncated { degree: usize, pmax: usize },
    #[error("degree mismatch in chain map at degree {degree}: {detail}")]
    DegreeMismatch { degree: usize, detail: String },
    #[error("generator of degree 0 in a graded symmetric algebra")]
    DegreeZeroGenerator,
}
