use std::collections::{BTreeMap, HashMap};

use crate::algebras::MatrixLieAlgebra;
use crate::complexes::{mono_mul, Monomial};
use crate::exact_linear::Rat;
use crate::homology_builders::{canonical_cyclic, CyclicWord, WedgeWord};
use crate::rep_theory::all_permutations;

use super::{bits, concat_sign};

/// `θ¹` on the letters `g_1 ∧ ... ∧ g_p` (basis indices of `gl_n A`):
/// `(1/p) Σ_σ sg(σ) Σ_chains [(g_σ1)_{i1 i2} ⊗ ... ⊗ (g_σp)_{ip i1}]`
/// as canonical cyclic words of length `p`.
pub fn theta1_word(g: &MatrixLieAlgebra, letters: &[u16]) -> BTreeMap<CyclicWord, Rat> {
    let p = letters.len();
    let mut out: BTreeMap<CyclicWord, Rat> = BTreeMap::new();
    if p == 0 {
        return out;
    }
    let dec: Vec<(usize, usize, usize)> = letters.iter().map(|&x| g.decode(x as usize)).collect();
    // the trace only sees closed index chains, so the weights must cancel
    let mut wt = vec![0i64; g.n()];
    for &(i, j, _) in &dec {
        wt[i] += 1;
        wt[j] -= 1;
    }
    if wt.iter().any(|&x| x != 0) {
        return out;
    }
    for perm in all_permutations(p) {
        let closed = (0..p).all(|t| dec[perm[t]].1 == dec[perm[(t + 1) % p]].0);
        if !closed {
            continue;
        }
        let word: Vec<u16> = perm.iter().map(|&k| dec[k].2 as u16).collect();
        if let Some((w, s)) = canonical_cyclic(&word) {
            let s = s * crate::complexes::koszul::sign_of_permutation(&perm);
            let e = out.entry(w).or_insert_with(Rat::zero);
            *e += &Rat::new(s as i64, p as i64);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Unshuffle coproduct of a wedge word: `Σ_S sign(S, S^c) w_S ⊗ w_{S^c}`.
pub fn coproduct_word(w: &WedgeWord) -> Vec<((WedgeWord, WedgeWord), Rat)> {
    let p = w.len();
    (0u32..1 << p)
        .map(|mask| {
            let s = bits(mask, p);
            let c = bits(!mask & ((1 << p) - 1), p);
            let sign = concat_sign(&[&s, &c]);
            let left = s.iter().map(|&i| w[i]).collect();
            let right = c.iter().map(|&i| w[i]).collect();
            ((left, right), Rat::from_int(sign as i64))
        })
        .collect()
}

pub(crate) type LambdaVec = BTreeMap<Monomial<CyclicWord>, Rat>;

/// `θ = π ∘ T(θ¹) ∘ Δ̃` evaluated on sub-words, memoized by bitmask.
pub struct ThetaMap<'a> {
    g: &'a MatrixLieAlgebra,
    letters: Vec<u16>,
    memo: HashMap<u32, LambdaVec>,
}

impl<'a> ThetaMap<'a> {
    pub fn new(g: &'a MatrixLieAlgebra, letters: &[u16]) -> Self {
        ThetaMap { g, letters: letters.to_vec(), memo: HashMap::new() }
    }

    /// `θ` of the sub-word selected by `mask`: the sum over ordered
    /// partitions into nonempty blocks of the signed product of `θ¹` values.
    pub fn on_mask(&mut self, mask: u32) -> LambdaVec {
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let p = self.letters.len();
        let mut out = LambdaVec::new();
        if mask == 0 {
            out.insert(Vec::new(), Rat::one());
        } else {
            // nonempty submasks B of mask
            let mut b = mask;
            while b != 0 {
                let first = bits(b, p);
                let rest_mask = mask & !b;
                let rest = bits(rest_mask, p);
                let sign = concat_sign(&[&first, &rest]);
                let sub: Vec<u16> = first.iter().map(|&i| self.letters[i]).collect();
                let t1 = theta1_word(self.g, &sub);
                if !t1.is_empty() {
                    let tail = self.on_mask(rest_mask);
                    for (w, c) in &t1 {
                        let gen: Monomial<CyclicWord> = vec![(w.clone(), w.len())];
                        for (m, d) in &tail {
                            if let Some((prod, s)) = mono_mul(&gen, m) {
                                let coef = c * d;
                                let e = out.entry(prod).or_insert_with(Rat::zero);
                                if s * sign > 0 {
                                    *e += &coef;
                                } else {
                                    *e -= &coef;
                                }
                            }
                        }
                    }
                }
                b = (b - 1) & mask;
            }
            out.retain(|_, c| !c.is_zero());
        }
        self.memo.insert(mask, out.clone());
        out
    }

    pub fn full(&mut self) -> LambdaVec {
        let p = self.letters.len();
        self.on_mask(((1u64 << p) - 1) as u32)
    }
}
