//! Finite-dimensional associative algebras given by structure constants,
//! matrix Lie algebras over them, and finite windows of pro-algebras.

mod corpus;
mod lie;
mod pro;
mod structure;

pub use corpus::{named, NAMED};
pub use lie::{LieAxiomReport, MatrixLieAlgebra};
pub use pro::{is_pro_zero, ProAlgebra, ProAlgebraJson, ProDecision};
pub use structure::{AlgebraJson, AssociativityReport, StructAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("basis has {names} names but dim is {dim}")]
    BasisLength { dim: usize, names: usize },
    #[error("structure constant index {index} out of range for dim {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("repeated structure constant for e{0}*e{1} -> e{2}")]
    RepeatedConstant(usize, usize, usize),
    #[error("not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("connecting map into level {level} is {rows}x{cols}, expected {exp_rows}x{exp_cols}")]
    MapShape { level: usize, rows: usize, cols: usize, exp_rows: usize, exp_cols: usize },
    #[error("connecting map into level {level} is not multiplicative on e{1} e{2}", level = .0)]
    NotHomomorphism(usize, usize, usize),
    #[error("levels {n}..{m} outside window 1..={window}")]
    OutOfWindow { n: usize, m: usize, window: usize },
    #[error("window {window} but {levels} levels and {maps} maps")]
    WindowShape { window: usize, levels: usize, maps: usize },
    #[error("subspace is not closed under multiplication")]
    NotSubalgebra,
}
