use serde::Serialize;

use crate::algebras::{is_pro_zero, ProAlgebra, ProDecision};
use crate::complexes::{ChainComplex, ComplexError, Homology, Label};
use crate::exact_linear::{SparseMat, SparseVec, Solver};

use super::{bar_complex, tensor_map_word, BarWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuilderError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("image of a homology representative is not a cycle at level {level}, degree {degree}")]
    NotACycle { level: usize, degree: usize },
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HUnitalDegree {
    pub r: usize,
    pub level_dims: Vec<usize>,
    pub decision: ProDecision,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HUnitalReport {
    pub window: usize,
    pub degrees: Vec<HUnitalDegree>,
}

impl HUnitalReport {
    /// Certified H-unital in every checked degree.
    pub fn h_unital(&self) -> bool {
        self.degrees.iter().all(|d| d.decision == ProDecision::Zero)
    }
}

/// Matrix of the map induced on homology by `f` (given on chain vectors of
/// degree `p`), in the representative bases of `src` and `tgt`.
pub fn induced_homology_map<L: Label>(
    tgt_complex: &ChainComplex<L>,
    src: &Homology,
    tgt: &Homology,
    f: impl Fn(&SparseVec) -> SparseVec,
) -> Option<SparseMat> {
    let mut gens: Vec<SparseVec> = tgt.boundaries.basis().to_vec();
    let nb = gens.len();
    gens.extend(tgt.representatives.iter().cloned());
    let solver = Solver::new(tgt_complex.dim(tgt.degree), &gens).expect("independent");
    let cols = src
        .representatives
        .iter()
        .map(|r| {
            let c = solver.solve(&f(r))?;
            Some(SparseVec::from_dense(&c[nb..]))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(SparseMat::from_columns(tgt.dim, cols))
}

/// For each `1 ≤ r ≤ rmax`, decides within the window whether the system
/// `{H^bar_r(A_n)}` is pro-zero.
pub fn h_unital_check_pro(a: &ProAlgebra, rmax: usize) -> Result<HUnitalReport, BuilderError> {
    let complexes: Vec<ChainComplex<BarWord>> =
        a.levels().iter().map(|l| bar_complex(l, rmax + 1)).collect();
    let mut degrees = Vec::new();
    for r in 1..=rmax {
        let hs: Vec<Homology> = complexes.iter().map(|c| c.homology(r)).collect::<Result<_, _>>()?;
        let mut maps = Vec::new();
        for (k, sigma) in a.maps().iter().enumerate() {
            let tgt_c = &complexes[k];
            let m = induced_homology_map(tgt_c, &hs[k + 1], &hs[k], |v| {
                let src_c = &complexes[k + 1];
                SparseVec::from_pairs(v.iter().flat_map(|(i, c)| {
                    tensor_map_word(sigma, src_c.space().label(r, *i)).into_iter().map(move |(w, x)| {
                        (tgt_c.space().index_of(r, &w).expect("bar word"), &x * c)
                    })
                }))
            })
            .ok_or(BuilderError::NotACycle { level: k + 1, degree: r })?;
            maps.push(m);
        }
        let level_dims: Vec<usize> = hs.iter().map(|h| h.dim).collect();
        let decision = is_pro_zero(&level_dims, &maps);
        degrees.push(HUnitalDegree { r, level_dims, decision });
    }
    Ok(HUnitalReport { window: a.window(), degrees })
}
