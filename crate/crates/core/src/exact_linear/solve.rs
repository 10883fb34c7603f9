use super::{Echelon, Rat, SparseVec};

/// Expresses vectors as combinations of a fixed independent family.
#[derive(Clone, Debug)]
pub struct Solver {
    dim: usize,
    count: usize,
    ech: Echelon,
}

impl Solver {
    /// Returns `None` if `gens` are linearly dependent.
    pub fn new(dim: usize, gens: &[SparseVec]) -> Option<Self> {
        let mut ech = Echelon::new(dim + gens.len());
        for (k, g) in gens.iter().enumerate() {
            let mut e = g.entries().to_vec();
            e.push((dim + k, Rat::one()));
            if !ech.insert(&SparseVec::from_sorted_unchecked(e)) {
                return None;
            }
            let lead = ech.rows().last().and_then(|r| r.leading()).map(|(i, _)| i);
            if lead.is_none_or(|i| i >= dim) {
                return None;
            }
        }
        Some(Solver { dim, count: gens.len(), ech })
    }

    /// Coefficients `c` with `v = Σ c_k gens[k]`, if `v` is in the span.
    pub fn solve(&self, v: &SparseVec) -> Option<Vec<Rat>> {
        let r = self.ech.reduce_leading(v);
        if r.leading().is_some_and(|(i, _)| i < self.dim) {
            return None;
        }
        let mut c = vec![Rat::zero(); self.count];
        for (i, x) in r.iter() {
            c[i - self.dim] = -x.clone();
        }
        Some(c)
    }
}
