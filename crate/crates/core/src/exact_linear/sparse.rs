use std::collections::BTreeMap;
use std::fmt;

use super::Rat;

/// Sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rat)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rat::one())] }
    }

    /// Builds from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rat)>>(pairs: I) -> Self {
        let mut m: BTreeMap<usize, Rat> = BTreeMap::new();
        for (i, c) in pairs {
            *m.entry(i).or_default() += &c;
        }
        SparseVec { entries: m.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Caller guarantees sorted distinct indices and nonzero values.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Rat)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Rat]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dim];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rat)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Rat)] {
        &self.entries
    }

    pub fn leading(&self) -> Option<(usize, &Rat)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Rat {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn scale(&self, c: &Rat) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// `self + c * other`
    pub fn axpy(&self, c: &Rat, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i >= a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, &b[j].1 * c));
                j += 1;
            } else {
                let s = &a[i].1 + &(&b[j].1 * c);
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Rat::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-Rat::one(), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Rat {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut s = Rat::zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    s += &(&a[i].1 * &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        s
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, c)| (i, c))).finish()
    }
}

/// Sparse matrix stored by columns.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { rows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < rows)));
        SparseMat { rows, cols }
    }

    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, Rat)>>(
        rows: usize,
        cols: usize,
        triplets: I,
    ) -> Self {
        let mut per_col: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); cols];
        for (r, c, x) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of range {rows}x{cols}");
            per_col[c].push((r, x));
        }
        SparseMat { rows, cols: per_col.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn from_dense(d: &[Vec<Rat>]) -> Self {
        let rows = d.len();
        let cols = d.first().map_or(0, |r| r.len());
        SparseMat::from_triplets(
            rows,
            cols,
            d.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, x)| (i, j, x.clone()))),
        )
    }

    pub fn from_ints(d: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rat>> =
            d.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect();
        SparseMat::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rat {
        self.cols[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// Nonzero entries as `(row, col, value)`, column-major.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, x)| (*i, j, x)))
    }

    pub fn transpose(&self) -> SparseMat {
        let mut per_col: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                per_col[*i].push((j, x.clone()));
            }
        }
        SparseMat {
            rows: self.cols.len(),
            cols: per_col.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    /// Row vectors (as sparse vectors over column indices).
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().cols
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (j, x) in v.iter() {
            for (i, y) in self.cols[*j].iter() {
                *acc.entry(*i).or_default() += &(x * y);
            }
        }
        SparseVec::from_sorted_unchecked(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols(), other.rows, "inner dimensions differ");
        SparseMat { rows: self.rows, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert!(self.rows == other.rows && self.cols() == other.cols());
        SparseMat {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        assert!(self.rows == other.rows && self.cols() == other.cols());
        SparseMat {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> SparseMat {
        SparseMat { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    /// Restricts to the given columns, in order.
    pub fn select_columns(&self, idx: &[usize]) -> SparseMat {
        SparseMat { rows: self.rows, cols: idx.iter().map(|&j| self.cols[j].clone()).collect() }
    }

    /// Keeps the given rows, renumbered in order. Entries in dropped rows are discarded.
    pub fn select_rows(&self, idx: &[usize]) -> SparseMat {
        let mut pos = vec![usize::MAX; self.rows];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        SparseMat {
            rows: idx.len(),
            cols: self
                .cols
                .iter()
                .map(|c| {
                    SparseVec::from_pairs(
                        c.iter().filter(|(i, _)| pos[*i] != usize::MAX).map(|(i, x)| (pos[*i], x.clone())),
                    )
                })
                .collect(),
        }
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols(), other.cols());
        let off = self.rows;
        SparseMat {
            rows: self.rows + other.rows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| {
                    let mut e = a.entries().to_vec();
                    e.extend(b.iter().map(|(i, x)| (i + off, x.clone())));
                    SparseVec::from_sorted_unchecked(e)
                })
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        let mut d = vec![vec![Rat::zero(); self.cols()]; self.rows];
        for (i, j, x) in self.triplets() {
            d[i][j] = x.clone();
        }
        d
    }

    /// First entry where `self` and `other` differ, as `(row, col)`.
    pub fn first_difference(&self, other: &SparseMat) -> Option<(usize, usize)> {
        assert!(self.rows == other.rows && self.cols() == other.cols());
        for (j, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a != b {
                let d = a.sub(b);
                return Some((d.leading().expect("nonzero").0, j));
            }
        }
        None
    }
}

impl fmt::Debug for SparseMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMat {}x{} [", self.rows, self.cols())?;
        for (i, j, x) in self.triplets() {
            writeln!(f, "  ({i},{j}) = {x}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels() {
        let a = SparseVec::from_pairs([(0, Rat::one()), (3, Rat::from_int(2))]);
        let b = SparseVec::from_pairs([(3, Rat::one())]);
        let c = a.axpy(&Rat::from_int(-2), &b);
        assert_eq!(c, SparseVec::unit(0));
    }

    #[test]
    fn matmul_and_transpose() {
        let a = SparseMat::from_ints(&[&[1, 2], &[0, 1]]);
        let b = SparseMat::from_ints(&[&[1, 0], &[3, 1]]);
        assert_eq!(a.mul(&b), SparseMat::from_ints(&[&[7, 2], &[3, 1]]));
        assert_eq!(a.transpose(), SparseMat::from_ints(&[&[1, 0], &[2, 1]]));
        assert_eq!(a.first_difference(&a), None);
        assert_eq!(a.first_difference(&b), Some((1, 0)));
    }

    #[test]
    fn stacking_and_selection() {
        let a = SparseMat::from_ints(&[&[1, 2, 3]]);
        let b = SparseMat::from_ints(&[&[4, 5, 6]]);
        let s = a.vstack(&b);
        assert_eq!(s.rows(), 2);
        assert_eq!(s.select_rows(&[1]), b);
        assert_eq!(s.select_columns(&[2]).to_dense()[1][0], Rat::from_int(6));
    }
}
