use std::collections::HashMap;

use serde::Serialize;

use crate::exact_linear::{Rat, SparseMat, SparseVec, Solver};

use super::Partition;

/// Largest `m` for which Specht modules are built.
pub const MAX_SPECHT_SIZE: usize = 6;

/// Filling of a Young diagram by `1..=m`, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// 1-based row containing `i`.
    pub fn row_of(&self, i: usize) -> usize {
        self.rows.iter().position(|r| r.contains(&i)).expect("entry present") + 1
    }

    fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }

    fn relabel(&self, perm: &[usize]) -> Tableau {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|&e| perm[e - 1] + 1).collect()).collect() }
    }

    /// Row index (0-based) of each entry, identifying the tabloid.
    fn tabloid(&self) -> Vec<u8> {
        let mut t = vec![0u8; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                t[e - 1] = r as u8;
            }
        }
        t
    }
}

/// All standard tableaux of the given shape, in lexicographic order of rows.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let m = shape.size();
    let parts = shape.parts().to_vec();
    let mut out = Vec::new();
    // place 1..m one at a time at the end of a row, keeping a partition shape
    fn rec(k: usize, m: usize, parts: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if k > m {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..parts.len() {
            let len = rows[r].len();
            if len < parts[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                rec(k + 1, m, parts, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, m, &parts, &mut vec![Vec::new(); parts.len()], &mut out);
    out.sort();
    out
}

/// `m! / Π hooks`.
pub fn hook_length_count(shape: &Partition) -> u64 {
    let parts = shape.parts();
    let conj = |c: usize| parts.iter().filter(|&&p| p > c).count();
    let mut prod: u64 = 1;
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            prod *= ((len - c - 1) + (conj(c) - r - 1) + 1) as u64;
        }
    }
    (1..=shape.size() as u64).product::<u64>() / prod
}

/// Specht module realized on standard polytabloids.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    pub shape: Partition,
    pub basis: Vec<Tableau>,
    tabloids: HashMap<Vec<u8>, usize>,
    solver: Solver,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("Specht modules are built only for m ≤ {max}, got {m}")]
pub struct SpechtSizeError {
    pub m: usize,
    pub max: usize,
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Result<Self, SpechtSizeError> {
        let m = shape.size();
        if m > MAX_SPECHT_SIZE {
            return Err(SpechtSizeError { m, max: MAX_SPECHT_SIZE });
        }
        let basis = standard_tableaux(shape);
        let mut tabloids = HashMap::new();
        let mut polys = Vec::new();
        for t in &basis {
            polys.push(Self::polytabloid(t, &mut tabloids));
        }
        // pad the ambient index space to every tabloid seen later via `tabloids` growth
        let solver = Solver::new(Self::ambient(shape), &polys).expect("standard polytabloids are independent");
        Ok(SpechtModule { shape: shape.clone(), basis, tabloids, solver })
    }

    /// Number of tabloids, `m! / Π α_i!`.
    fn ambient(shape: &Partition) -> usize {
        let f = |k: usize| (1..=k).product::<usize>().max(1);
        f(shape.size()) / shape.parts().iter().map(|&p| f(p)).product::<usize>()
    }

    fn polytabloid(t: &Tableau, index: &mut HashMap<Vec<u8>, usize>) -> SparseVec {
        SparseVec::from_pairs(polytabloid_terms(t).into_iter().map(|(tab, sign)| {
            let next = index.len();
            (*index.entry(tab).or_insert(next), Rat::from_int(sign as i64))
        }))
    }

    /// Expansion of the polytabloid of the `k`-th standard tableau as signed
    /// tabloids, each given by the 0-based row of every entry `1..=m`.
    pub fn polytabloid_expansion(&self, k: usize) -> Vec<(Vec<u8>, i32)> {
        polytabloid_terms(&self.basis[k])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn m(&self) -> usize {
        self.shape.size()
    }

    /// Matrix of `σ` (with `perm[i] = σ(i)`, 0-based) via `σ e_t = e_{σ t}`.
    pub fn action(&self, perm: &[usize]) -> SparseMat {
        let mut index = self.tabloids.clone();
        let cols = self
            .basis
            .iter()
            .map(|t| {
                let v = Self::polytabloid(&t.relabel(perm), &mut index);
                assert!(index.len() <= Self::ambient(&self.shape));
                let c = self.solver.solve(&v).expect("Specht module is invariant");
                SparseVec::from_dense(&c)
            })
            .collect();
        SparseMat::from_columns(self.dim(), cols)
    }

    /// Matrices of the adjacent transpositions `(i, i+1)`, `i = 1..m-1`.
    pub fn generators(&self) -> Vec<SparseMat> {
        let m = self.m();
        (0..m.saturating_sub(1))
            .map(|i| {
                let mut p: Vec<usize> = (0..m).collect();
                p.swap(i, i + 1);
                self.action(&p)
            })
            .collect()
    }

    /// First violated Coxeter relation, if any.
    pub fn coxeter_violation(&self) -> Option<String> {
        let g = self.generators();
        let id = SparseMat::identity(self.dim());
        for (i, s) in g.iter().enumerate() {
            if s.mul(s) != id {
                return Some(format!("s{}^2", i + 1));
            }
            if let Some(t) = g.get(i + 1) {
                let st = s.mul(t);
                if st.mul(&st).mul(&st) != id {
                    return Some(format!("(s{} s{})^3", i + 1, i + 2));
                }
            }
            for (j, t) in g.iter().enumerate().skip(i + 2) {
                if s.mul(t) != t.mul(s) {
                    return Some(format!("s{} s{} = s{} s{}", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }
        None
    }
}

/// `e_t = Σ_{q ∈ C(t)} sgn(q) {q t}` as signed tabloids.
fn polytabloid_terms(t: &Tableau) -> Vec<(Vec<u8>, i32)> {
    let cols = t.columns();
    let m = t.size();
    let col_perms: Vec<Vec<(Vec<usize>, i32)>> = cols
        .iter()
        .map(|c| {
            all_perms(c.len())
                .into_iter()
                .map(|p| {
                    let s = crate::complexes::koszul::sign_of_permutation(&p);
                    (p, s)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; cols.len()];
    loop {
        let mut perm: Vec<usize> = (0..m).collect();
        let mut sign = 1;
        for (ci, c) in cols.iter().enumerate() {
            let (p, s) = &col_perms[ci][choice[ci]];
            sign *= s;
            for (k, &e) in c.iter().enumerate() {
                perm[e - 1] = c[p[k]] - 1;
            }
        }
        out.push((t.relabel(&perm).tabloid(), sign));
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == cols.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < col_perms[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

pub(crate) fn all_perms(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_perms(m - 1) {
        for pos in 0..m {
            let mut q = p.clone();
            q.insert(pos, m - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}
