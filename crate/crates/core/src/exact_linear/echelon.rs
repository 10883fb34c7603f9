use std::collections::HashMap;

use super::SparseVec;

/// Incremental row echelon form. Stored rows have distinct leading indices
/// and leading coefficient one.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Reduces until the leading index is not a pivot (or the vector vanishes).
    pub fn reduce_leading(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        while let Some((lead, c)) = v.leading() {
            match self.pivot_row.get(&lead) {
                Some(&k) => {
                    let c = -c.clone();
                    v = v.axpy(&c, &self.rows[k]);
                }
                None => break,
            }
        }
        v
    }

    /// Clears every pivot position of `v`.
    pub fn reduce_full(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        loop {
            let hit = v
                .iter()
                .find(|(i, _)| *i >= cursor && self.pivot_row.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            match hit {
                Some((i, c)) => {
                    v = v.axpy(&-c, &self.rows[self.pivot_row[&i]]);
                    cursor = i + 1;
                }
                None => return v,
            }
        }
    }

    /// Inserts `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce_leading(v);
        match r.leading() {
            None => false,
            Some((lead, c)) => {
                let r = if c.is_one() { r.clone() } else { r.scale(&c.recip()) };
                self.pivot_row.insert(lead, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_leading(v).is_zero()
    }

    /// Reduced row echelon form, rows sorted by pivot.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.leading().map(|(i, _)| i));
        let pivots: Vec<usize> = rows.iter().map(|r| r.leading().expect("nonzero").0).collect();
        for i in (0..rows.len()).rev() {
            let p = pivots[i];
            let (before, rest) = rows.split_at_mut(i);
            let pr = &rest[0];
            for row in before.iter_mut() {
                let c = row.get(p);
                if !c.is_zero() {
                    *row = row.axpy(&-c, pr);
                }
            }
        }
        rows
    }
}

/// Rank of a list of vectors using a sparsity-driven pivot order: indices
/// that occur in fewer vectors are eliminated first, and sparser vectors are
/// inserted first.
pub fn rank_of_vectors(dim: usize, vecs: &[SparseVec]) -> usize {
    let mut count = vec![0usize; dim];
    for v in vecs {
        for (i, _) in v.iter() {
            count[*i] += 1;
        }
    }
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&i| (count[i], i));
    let mut relabel = vec![0usize; dim];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
    }
    let mut idx: Vec<usize> = (0..vecs.len()).collect();
    idx.sort_by_key(|&k| vecs[k].nnz());
    let mut ech = Echelon::new(dim);
    for k in idx {
        if ech.rank() == dim {
            break;
        }
        let v = vecs[k].map_indices(|i| relabel[i]);
        ech.insert(&v);
    }
    ech.rank()
}
