use std::collections::BTreeMap;

use crate::algebras::MatrixLieAlgebra;
use crate::complexes::koszul::sign_of_permutation;
use crate::exact_linear::Rat;
use crate::homology_builders::BarWord;
use crate::rep_theory::{all_permutations, SigmaLabel, Tableau};

use super::concat_sign;

/// `ε_ij(g_1 ∧ ... ∧ g_p)`: antisymmetrize into the bar complex of the
/// matrix algebra, then take the `(i,j)` entry of the matrix product
/// (0-based `i`, `j`). Zero on the empty word.
pub fn epsilon_ij_word(g: &MatrixLieAlgebra, letters: &[u16], i: usize, j: usize) -> BTreeMap<BarWord, Rat> {
    let mut out: BTreeMap<BarWord, Rat> = BTreeMap::new();
    let p = letters.len();
    if p == 0 {
        return out;
    }
    let dec: Vec<(usize, usize, usize)> = letters.iter().map(|&x| g.decode(x as usize)).collect();
    for perm in all_permutations(p) {
        let first = dec[perm[0]].0;
        let last = dec[perm[p - 1]].1;
        if first != i || last != j || (0..p - 1).any(|t| dec[perm[t]].1 != dec[perm[t + 1]].0) {
            continue;
        }
        let word: BarWord = perm.iter().map(|&k| dec[k].2 as u16).collect();
        let e = out.entry(word).or_insert_with(Rat::zero);
        *e += &Rat::from_int(sign_of_permutation(&perm) as i64);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `ε = Σ_{x,y} ε_{ρ(x),ρ(y)} ⊗ x ⊗ y` for fixed tableaux bases.
pub struct EpsilonMap<'a> {
    g: &'a MatrixLieAlgebra,
    /// `(row index, column index)` per tensor factor, for each tableau pair.
    pairs: Vec<((usize, usize), Vec<(usize, usize)>)>,
    m: usize,
}

impl<'a> EpsilonMap<'a> {
    pub fn new(g: &'a MatrixLieAlgebra, xs: &[Tableau], ys: &[Tableau]) -> Self {
        let n = g.n();
        let m = xs.first().map_or(0, |t| t.size());
        let mut pairs = Vec::new();
        for (xi, x) in xs.iter().enumerate() {
            for (yi, y) in ys.iter().enumerate() {
                let idx = (1..=m).map(|t| (x.row_of(t) - 1, n - y.row_of(t))).collect();
                pairs.push(((xi, yi), idx));
            }
        }
        EpsilonMap { g, pairs, m }
    }

    /// `ε` of a word of letters as a combination of sigma labels.
    pub fn apply(&self, letters: &[u16]) -> BTreeMap<SigmaLabel, Rat> {
        let mut out: BTreeMap<SigmaLabel, Rat> = BTreeMap::new();
        let p = letters.len();
        let all: Vec<usize> = (0..p).collect();
        if self.m == 0 {
            if p == 0 {
                for (xy, _) in &self.pairs {
                    out.insert((Vec::new(), *xy), Rat::one());
                }
            }
            return out;
        }
        if p < self.m {
            return out;
        }
        for blocks in surjections(&all, self.m) {
            let refs: Vec<&[usize]> = blocks.iter().map(|b| b.as_slice()).collect();
            let sign = concat_sign(&refs);
            for (xy, idx) in &self.pairs {
                let mut acc: Vec<(Vec<BarWord>, Rat)> = vec![(Vec::new(), Rat::from_int(sign as i64))];
                for (b, &(i, j)) in blocks.iter().zip(idx) {
                    let sub: Vec<u16> = b.iter().map(|&k| letters[k]).collect();
                    let f = epsilon_ij_word(self.g, &sub, i, j);
                    if f.is_empty() {
                        acc.clear();
                        break;
                    }
                    acc = acc
                        .into_iter()
                        .flat_map(|(ws, c)| {
                            f.iter().map(move |(w, d)| {
                                let mut ws2 = ws.clone();
                                ws2.push(w.clone());
                                (ws2, &c * d)
                            })
                        })
                        .collect();
                }
                for (ws, c) in acc {
                    let e = out.entry((ws, *xy)).or_insert_with(Rat::zero);
                    *e += &c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Ordered partitions of `elems` into `m` nonempty blocks, each block
/// keeping the original order.
pub(crate) fn surjections(elems: &[usize], m: usize) -> Vec<Vec<Vec<usize>>> {
    let p = elems.len();
    let mut out = Vec::new();
    if m == 0 {
        if p == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut assign = vec![0usize; p];
    loop {
        let mut blocks = vec![Vec::new(); m];
        for (k, &a) in assign.iter().enumerate() {
            blocks[a].push(elems[k]);
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            out.push(blocks);
        }
        let mut k = 0;
        loop {
            if k == p {
                return out;
            }
            assign[k] += 1;
            if assign[k] < m {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}
