use serde::{Deserialize, Serialize};

use super::echelon::Echelon;
use super::{LinearError, Rat, SparseMat, SparseVec};

/// A subspace of `Q^ambient_dim`, stored as the reduced row echelon form of
/// a basis. Two subspaces are equal iff their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: (0..ambient_dim).map(SparseVec::unit).collect() }
    }

    pub fn from_vectors<'a, I>(ambient_dim: usize, vecs: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for v in vecs {
            debug_assert!(v.max_index().is_none_or(|m| m < ambient_dim));
            if ech.rank() == ambient_dim {
                break;
            }
            ech.insert(v);
        }
        Subspace { ambient_dim, basis: ech.into_rref() }
    }

    /// Span of coordinate vectors.
    pub fn coordinate(ambient_dim: usize, idx: &[usize]) -> Self {
        let mut idx = idx.to_vec();
        idx.sort_unstable();
        idx.dedup();
        Subspace { ambient_dim, basis: idx.into_iter().map(SparseVec::unit).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|v| v.leading().expect("nonzero").0).collect()
    }

    /// The basis as the columns of an `ambient_dim x dim` matrix.
    pub fn basis_matrix(&self) -> SparseMat {
        SparseMat::from_columns(self.ambient_dim, self.basis.clone())
    }

    fn check(&self, other: &Subspace) -> Result<(), LinearError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinearError::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for v in &self.basis {
            e.insert(v);
        }
        e
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rat>> {
        let coords: Vec<Rat> = self.pivots().iter().map(|p| v.get(*p)).collect();
        let mut recon = SparseVec::new();
        for (c, b) in coords.iter().zip(&self.basis) {
            recon = recon.axpy(c, b);
        }
        (recon == *v).then_some(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinearError> {
        self.check(other)?;
        Ok(Subspace::from_vectors(self.ambient_dim, self.basis.iter().chain(&other.basis)))
    }

    /// Intersection via the Zassenhaus construction.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinearError> {
        self.check(other)?;
        let n = self.ambient_dim;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(n));
        }
        let mut ech = Echelon::new(2 * n);
        for v in &self.basis {
            let mut e = v.entries().to_vec();
            e.extend(v.iter().map(|(i, c)| (i + n, c.clone())));
            ech.insert(&SparseVec::from_sorted_unchecked(e));
        }
        for v in &other.basis {
            ech.insert(v);
        }
        let meet: Vec<SparseVec> = ech
            .rows()
            .iter()
            .filter(|r| r.leading().expect("nonzero").0 >= n)
            .map(|r| r.map_indices(|i| i - n))
            .collect();
        Ok(Subspace::from_vectors(n, &meet))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinearError> {
        self.check(other)?;
        let e = other.echelon();
        Ok(self.basis.iter().all(|v| e.contains(v)))
    }

    /// `dim self - dim sub`, requiring `sub` to lie inside `self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize, LinearError> {
        if !sub.is_subspace_of(self)? {
            return Err(LinearError::NotASubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Vectors of `self` (taken from its basis) completing a basis of `sub`
    /// to one of `self + sub`.
    pub fn complement_of(&self, sub: &Subspace) -> Result<Vec<SparseVec>, LinearError> {
        self.check(sub)?;
        let mut e = sub.echelon();
        Ok(self.basis.iter().filter(|v| e.insert(v)).cloned().collect())
    }

    /// Image under a linear map whose source is this subspace's ambient space.
    pub fn image(&self, m: &SparseMat) -> Result<Subspace, LinearError> {
        if m.cols() != self.ambient_dim {
            return Err(LinearError::AmbientMismatch(m.cols(), self.ambient_dim));
        }
        let imgs: Vec<SparseVec> = self.basis.iter().map(|v| m.apply(v)).collect();
        Ok(Subspace::from_vectors(m.rows(), &imgs))
    }

    /// Embeds into a larger ambient space along an index map.
    pub fn embed(&self, ambient_dim: usize, index: &[usize]) -> Subspace {
        let vs: Vec<SparseVec> = self.basis.iter().map(|v| v.map_indices(|i| index[i])).collect();
        Subspace::from_vectors(ambient_dim, &vs)
    }

    pub fn to_record(&self) -> SubspaceRecord {
        SubspaceRecord {
            ambient_dim: self.ambient_dim,
            basis: self
                .basis
                .iter()
                .map(|v| v.iter().map(|(i, c)| (*i, c.clone())).collect())
                .collect(),
        }
    }
}

/// Serializable form: each basis vector as `[index, "p/q"]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<(usize, Rat)>>,
}

impl SubspaceRecord {
    pub fn to_subspace(&self) -> Subspace {
        let vs: Vec<SparseVec> =
            self.basis.iter().map(|v| SparseVec::from_pairs(v.iter().cloned())).collect();
        Subspace::from_vectors(self.ambient_dim, &vs)
    }
}
