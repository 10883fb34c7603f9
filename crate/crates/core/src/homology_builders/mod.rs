//! Builders for the Chevalley–Eilenberg complex of `gl_n A`, the Connes
//! cyclic complex and the bar complex, plus bar homology of pro-algebras.

mod bar;
mod ce;
mod cyclic;
mod hunital;

pub use bar::{bar_complex, tensor_map_word, BarWord};
pub use ce::{chevalley_eilenberg, wedge_insert, wedge_mul, wedge_of_vectors, WedgeWord, WedgeVec};
pub use cyclic::{canonical_cyclic, connes_complex, CyclicWord};
pub use hunital::{h_unital_check_pro, induced_homology_map, BuilderError, HUnitalDegree, HUnitalReport};
