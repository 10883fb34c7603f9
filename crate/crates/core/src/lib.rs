//! Exact computation of the complexes, decompositions and comparison maps
//! relating Lie algebra homology of matrices to cyclic homology.

pub mod algebras;
pub mod complexes;
pub mod exact_linear;
pub mod homology_builders;
pub mod lqt_maps;
pub mod rep_theory;
pub mod tables;
pub mod verify;
