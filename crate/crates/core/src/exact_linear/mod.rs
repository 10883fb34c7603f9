//! Sparse exact linear algebra over the rationals.

mod echelon;
mod rat;
mod solve;
mod sparse;
mod subspace;

pub use echelon::{rank_of_vectors, Echelon};
pub use rat::{ParseRatError, Rat};
pub use solve::Solver;
pub use sparse::{SparseMat, SparseVec};
pub use subspace::{Subspace, SubspaceRecord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the ambient subspace")]
    NotASubspace,
}

pub fn rank(m: &SparseMat) -> usize {
    if m.rows() <= m.cols() {
        rank_of_vectors(m.rows(), m.columns())
    } else {
        rank_of_vectors(m.cols(), &m.row_vectors())
    }
}

/// Right kernel `{x : m x = 0}` as a canonical subspace of `Q^cols`.
pub fn kernel_basis(m: &SparseMat) -> Subspace {
    let n = m.cols();
    let mut ech = Echelon::new(n);
    for r in m.row_vectors() {
        if ech.rank() == n {
            break;
        }
        ech.insert(&r);
    }
    let rref = ech.into_rref();
    let mut is_pivot = vec![false; n];
    let pivots: Vec<usize> = rref.iter().map(|r| r.leading().expect("nonzero").0).collect();
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut free_entries: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); n];
    for (row, &p) in rref.iter().zip(&pivots) {
        for (j, c) in row.iter() {
            if *j != p {
                free_entries[*j].push((p, -c.clone()));
            }
        }
    }
    let vecs: Vec<SparseVec> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut e = std::mem::take(&mut free_entries[f]);
            e.push((f, Rat::one()));
            SparseVec::from_pairs(e)
        })
        .collect();
    Subspace::from_vectors(n, &vecs)
}

/// Column space of `m` as a canonical subspace of `Q^rows`.
pub fn image_basis(m: &SparseMat) -> Subspace {
    Subspace::from_vectors(m.rows(), m.columns())
}
