use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::exact_linear::{
    image_basis, kernel_basis, rank, Echelon, Rat, SparseMat, SparseVec, Subspace,
};

use super::ComplexError;

/// Requirements on basis labels.
pub trait Label: Clone + Eq + Hash + Ord + Debug + Send + Sync {}
impl<T: Clone + Eq + Hash + Ord + Debug + Send + Sync> Label for T {}

/// Graded vector space with an ordered basis of labels in each degree
/// `0..=pmax`. Degrees above `pmax` are unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace<L: Label> {
    degrees: Vec<Vec<L>>,
    index: Vec<HashMap<L, usize>>,
}

impl<L: Label> GradedSpace<L> {
    /// Panics if a label repeats within a degree.
    pub fn new(degrees: Vec<Vec<L>>) -> Self {
        let index = degrees
            .iter()
            .map(|ls| {
                let m: HashMap<L, usize> = ls.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
                assert_eq!(m.len(), ls.len(), "repeated basis label");
                m
            })
            .collect();
        GradedSpace { degrees, index }
    }

    pub fn empty(pmax: usize) -> Self {
        GradedSpace::new(vec![Vec::new(); pmax + 1])
    }

    pub fn pmax(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    pub fn dim(&self, p: usize) -> usize {
        self.degrees.get(p).map_or(0, |d| d.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    pub fn basis(&self, p: usize) -> &[L] {
        self.degrees.get(p).map_or(&[], |d| d.as_slice())
    }

    pub fn label(&self, p: usize, i: usize) -> &L {
        &self.degrees[p][i]
    }

    pub fn index_of(&self, p: usize, l: &L) -> Option<usize> {
        self.index.get(p).and_then(|m| m.get(l).copied())
    }

    /// Degree-shifted copy with `(V[-1])_{p+1} = V_p`.
    pub fn shift_down(&self) -> GradedSpace<L> {
        let mut degrees = vec![Vec::new()];
        degrees.extend(self.degrees.iter().cloned());
        GradedSpace::new(degrees)
    }

    /// Drops degrees above `pmax`.
    pub fn truncate(&self, pmax: usize) -> GradedSpace<L> {
        GradedSpace::new(self.degrees.iter().take(pmax + 1).cloned().collect())
    }
}

/// Chain complex over `Q`. `boundary[p]` maps degree `p` to degree `p - 1`
/// (`boundary[0]` is the zero map to nothing). An optional block grading
/// that the boundary respects lets homology split into independent pieces.
#[derive(Clone, Debug)]
pub struct ChainComplex<L: Label> {
    space: GradedSpace<L>,
    boundary: Vec<SparseMat>,
    blocks: Option<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: usize,
    pub ok: bool,
    /// `(basis index in degree p, basis index in degree p-2)` of a nonzero entry of `d∘d`.
    pub witness: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComplexReport {
    pub pmax: usize,
    pub checks: Vec<DegreeCheck>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn first_failure(&self) -> Option<&DegreeCheck> {
        self.checks.iter().find(|c| !c.ok)
    }
}

#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: usize,
    pub dim: usize,
    pub cycles: Subspace,
    pub boundaries: Subspace,
    /// Cycles spanning a complement of the boundaries.
    pub representatives: Vec<SparseVec>,
}

impl Homology {
    pub fn representative_span(&self) -> Subspace {
        Subspace::from_vectors(self.cycles.ambient_dim(), &self.representatives)
    }
}

impl<L: Label> ChainComplex<L> {
    pub fn new(space: GradedSpace<L>, boundary: Vec<SparseMat>) -> Result<Self, ComplexError> {
        if boundary.len() != space.pmax() + 1 {
            return Err(ComplexError::Structure(format!(
                "{} boundary maps for {} degrees",
                boundary.len(),
                space.pmax() + 1
            )));
        }
        for (p, d) in boundary.iter().enumerate() {
            let rows = if p == 0 { 0 } else { space.dim(p - 1) };
            if d.cols() != space.dim(p) || d.rows() != rows {
                return Err(ComplexError::Structure(format!(
                    "boundary in degree {p} is {}x{}, expected {rows}x{}",
                    d.rows(),
                    d.cols(),
                    space.dim(p)
                )));
            }
        }
        Ok(ChainComplex { space, boundary, blocks: None })
    }

    /// Builds boundary matrices column by column from a function giving the
    /// boundary of each basis label as `(label, coefficient)` pairs.
    pub fn from_fn<F>(space: GradedSpace<L>, mut d: F) -> Self
    where
        F: FnMut(usize, &L) -> Vec<(L, Rat)>,
    {
        let mut boundary = vec![SparseMat::zero(0, space.dim(0))];
        for p in 1..=space.pmax() {
            let cols = space
                .basis(p)
                .iter()
                .map(|l| {
                    SparseVec::from_pairs(d(p, l).into_iter().map(|(t, c)| {
                        let i = space
                            .index_of(p - 1, &t)
                            .unwrap_or_else(|| panic!("boundary term {t:?} not in degree {}", p - 1));
                        (i, c)
                    }))
                })
                .collect();
            boundary.push(SparseMat::from_columns(space.dim(p - 1), cols));
        }
        ChainComplex { space, boundary, blocks: None }
    }

    /// Attaches a block grading (one key per basis element per degree).
    pub fn with_blocks(mut self, blocks: Vec<Vec<u32>>) -> Self {
        assert_eq!(blocks.len(), self.space.pmax() + 1);
        for (p, b) in blocks.iter().enumerate() {
            assert_eq!(b.len(), self.space.dim(p));
        }
        self.blocks = Some(blocks);
        self
    }

    pub fn blocks(&self) -> Option<&Vec<Vec<u32>>> {
        self.blocks.as_ref()
    }

    pub fn space(&self) -> &GradedSpace<L> {
        &self.space
    }

    pub fn pmax(&self) -> usize {
        self.space.pmax()
    }

    pub fn dim(&self, p: usize) -> usize {
        self.space.dim(p)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.space.dims()
    }

    pub fn boundary(&self, p: usize) -> &SparseMat {
        &self.boundary[p]
    }

    pub fn boundary_mut(&mut self, p: usize) -> &mut SparseMat {
        &mut self.boundary[p]
    }

    /// The complex `C[-1]`: same boundaries, degrees raised by one.
    pub fn shift_down(&self) -> ChainComplex<L> {
        let space = self.space.shift_down();
        let mut boundary = vec![SparseMat::zero(0, 0), SparseMat::zero(0, self.dim(0))];
        boundary.extend(self.boundary.iter().skip(1).cloned());
        ChainComplex {
            space,
            boundary,
            blocks: self.blocks.as_ref().map(|b| {
                let mut v = vec![Vec::new()];
                v.extend(b.iter().cloned());
                v
            }),
        }
    }

    pub fn truncate(&self, pmax: usize) -> ChainComplex<L> {
        ChainComplex {
            space: self.space.truncate(pmax),
            boundary: self.boundary.iter().take(pmax + 1).cloned().collect(),
            blocks: self.blocks.as_ref().map(|b| b.iter().take(pmax + 1).cloned().collect()),
        }
    }

    /// Exact check of `d∘d = 0` in every degree `2..=pmax`.
    pub fn verify(&self) -> ComplexReport {
        let checks = (2..=self.pmax())
            .map(|p| {
                let dd = self.boundary[p - 1].mul(&self.boundary[p]);
                let witness = dd.triplets().next().map(|(r, c, _)| (c, r));
                DegreeCheck { degree: p, ok: witness.is_none(), witness }
            })
            .collect();
        ComplexReport { pmax: self.pmax(), checks }
    }

    fn block_indices(&self, p: usize) -> BTreeMap<u32, Vec<usize>> {
        let mut m: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        match &self.blocks {
            Some(b) if p < b.len() => {
                for (i, k) in b[p].iter().enumerate() {
                    m.entry(*k).or_default().push(i);
                }
            }
            _ => {
                m.insert(0, (0..self.dim(p)).collect());
            }
        }
        m
    }

    fn check_homology_degree(&self, p: usize) -> Result<(), ComplexError> {
        if p + 1 > self.pmax() {
            return Err(ComplexError::Truncated { degree: p, pmax: self.pmax() });
        }
        for q in [p, p + 1] {
            if q >= 2 && !self.boundary[q - 1].mul(&self.boundary[q]).is_zero() {
                return Err(ComplexError::NotAComplex { degree: q });
            }
        }
        Ok(())
    }

    /// Rank of `d_p`, computed blockwise when a grading is attached.
    pub fn boundary_rank(&self, p: usize) -> usize {
        if p == 0 || p > self.pmax() {
            return 0;
        }
        let rows = self.block_indices(p - 1);
        self.block_indices(p)
            .iter()
            .map(|(k, cols)| match rows.get(k) {
                Some(r) => rank(&self.boundary[p].select_columns(cols).select_rows(r)),
                None => 0,
            })
            .sum()
    }

    /// `dim H_p` from ranks alone.
    pub fn homology_dim(&self, p: usize) -> Result<usize, ComplexError> {
        self.check_homology_degree(p)?;
        Ok(self.dim(p) - self.boundary_rank(p) - self.boundary_rank(p + 1))
    }

    pub fn cycles(&self, p: usize) -> Subspace {
        if p == 0 || p > self.pmax() {
            return Subspace::full(self.dim(p));
        }
        let rows = self.block_indices(p - 1);
        let mut vecs = Vec::new();
        for (k, cols) in self.block_indices(p) {
            let block = match rows.get(&k) {
                Some(r) => self.boundary[p].select_columns(&cols).select_rows(r),
                None => SparseMat::zero(0, cols.len()),
            };
            let ker = kernel_basis(&block);
            vecs.extend(ker.basis().iter().map(|v| v.map_indices(|i| cols[i])));
        }
        Subspace::from_vectors(self.dim(p), &vecs)
    }

    pub fn boundaries(&self, p: usize) -> Subspace {
        if p + 1 > self.pmax() {
            return Subspace::zero(self.dim(p));
        }
        image_basis(&self.boundary[p + 1])
    }

    pub fn homology(&self, p: usize) -> Result<Homology, ComplexError> {
        self.check_homology_degree(p)?;
        let cycles = self.cycles(p);
        let boundaries = self.boundaries(p);
        let representatives = cycles.complement_of(&boundaries).expect("same ambient space");
        Ok(Homology { degree: p, dim: representatives.len(), cycles, boundaries, representatives })
    }

    /// Is `v` (a vector in degree `p`) a boundary?
    pub fn is_boundary(&self, p: usize, v: &SparseVec) -> bool {
        let mut e = Echelon::new(self.dim(p));
        if p < self.pmax() {
            for c in self.boundary[p + 1].columns() {
                e.insert(c);
            }
        }
        e.contains(v)
    }
}
