use std::collections::{BTreeMap, HashMap};

use crate::algebras::MatrixLieAlgebra;
use crate::complexes::{ChainComplex, GradedSpace};
use crate::exact_linear::{Rat, SparseMat, SparseVec};

/// Strictly increasing list of `gl_n A` basis indices.
pub type WedgeWord = Vec<u16>;

/// Linear combination of wedge words.
pub type WedgeVec = BTreeMap<WedgeWord, Rat>;

/// Inserts letter `t` into a sorted word; returns the word and the sign of
/// moving `t` from the front into place, or `None` if `t` is present.
pub fn wedge_insert(rest: &[u16], t: u16) -> Option<(WedgeWord, i32)> {
    match rest.binary_search(&t) {
        Ok(_) => None,
        Err(pos) => {
            let mut w = Vec::with_capacity(rest.len() + 1);
            w.extend_from_slice(&rest[..pos]);
            w.push(t);
            w.extend_from_slice(&rest[pos..]);
            Some((w, if pos % 2 == 0 { 1 } else { -1 }))
        }
    }
}

/// Product of two wedge combinations.
pub fn wedge_mul(a: &WedgeVec, b: &WedgeVec) -> WedgeVec {
    let mut out = WedgeVec::new();
    for (x, c) in a {
        for (y, d) in b {
            let mut letters = x.clone();
            letters.extend_from_slice(y);
            if let Some((w, s)) = crate::complexes::koszul::sort_wedge(&letters) {
                let v = c * d;
                let e = out.entry(w).or_insert_with(Rat::zero);
                if s > 0 {
                    *e += &v;
                } else {
                    *e -= &v;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `v_1 ∧ ... ∧ v_p` for vectors of `gl_n A`.
pub fn wedge_of_vectors(vs: &[SparseVec]) -> WedgeVec {
    let mut acc = WedgeVec::from([(Vec::new(), Rat::one())]);
    for v in vs {
        let f: WedgeVec = v.iter().map(|(i, c)| (vec![*i as u16], c.clone())).collect();
        acc = wedge_mul(&acc, &f);
    }
    acc
}

fn combinations(dim: usize, p: usize) -> Vec<WedgeWord> {
    let mut out = Vec::new();
    let mut cur: Vec<u16> = Vec::with_capacity(p);
    fn rec(dim: usize, p: usize, start: usize, cur: &mut Vec<u16>, out: &mut Vec<WedgeWord>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in start..=dim - (p - cur.len()) {
            cur.push(x as u16);
            rec(dim, p, x + 1, cur, out);
            cur.pop();
        }
    }
    if p <= dim {
        rec(dim, p, 0, &mut cur, &mut out);
    }
    out
}

/// `C(gl_n A) = (Λ gl_n A, ∂)` in degrees `0..=pmax`, with
/// `∂(g_1∧...∧g_p) = Σ_{i<j} (-1)^{i+j+1} [g_i,g_j] ∧ g_1 ... ĝ_i ... ĝ_j ... g_p`
/// so that `∂(u∧v) = [u,v]`. Blocks are the `gl_n k` weights.
pub fn chevalley_eilenberg(g: &MatrixLieAlgebra, pmax: usize) -> ChainComplex<WedgeWord> {
    assert!(g.dim() <= u16::MAX as usize, "gl_n A too large for wedge labels");
    let space = GradedSpace::new((0..=pmax).map(|p| combinations(g.dim(), p)).collect());
    let mut boundary = vec![SparseMat::zero(0, space.dim(0))];
    for p in 1..=pmax {
        let cols = space
            .basis(p)
            .iter()
            .map(|w| {
                let mut e: Vec<(usize, Rat)> = Vec::new();
                let mut rest: Vec<u16> = Vec::with_capacity(p);
                for a in 0..p {
                    for b in a + 1..p {
                        let br = g.bracket_basis(w[a] as usize, w[b] as usize);
                        if br.is_zero() {
                            continue;
                        }
                        rest.clear();
                        rest.extend(w.iter().enumerate().filter(|(k, _)| *k != a && *k != b).map(|(_, x)| *x));
                        let outer = if (a + b) % 2 == 0 { -1 } else { 1 };
                        for (t, c) in br.iter() {
                            if let Some((word, s)) = wedge_insert(&rest, *t as u16) {
                                let idx = space.index_of(p - 1, &word).expect("wedge word in basis");
                                let c = if outer * s > 0 { c.clone() } else { -c.clone() };
                                e.push((idx, c));
                            }
                        }
                    }
                }
                SparseVec::from_pairs(e)
            })
            .collect();
        boundary.push(SparseMat::from_columns(space.dim(p - 1), cols));
    }
    let mut interner: HashMap<Vec<i16>, u32> = HashMap::new();
    let blocks = (0..=pmax)
        .map(|p| {
            space
                .basis(p)
                .iter()
                .map(|w| {
                    let mut wt = vec![0i16; g.n()];
                    for &x in w {
                        let (i, j) = g.weight(x as usize);
                        wt[i] += 1;
                        wt[j] -= 1;
                    }
                    let next = interner.len() as u32;
                    *interner.entry(wt).or_insert(next)
                })
                .collect()
        })
        .collect();
    ChainComplex::new(space, boundary).expect("consistent shapes").with_blocks(blocks)
}
