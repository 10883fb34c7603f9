use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebras::{MatrixLieAlgebra, StructAlgebra};
use crate::complexes::{ChainMap, ChainMapReport};
use crate::exact_linear::{rank, Rat, SparseMat, SparseVec};
use crate::homology_builders::WedgeWord;
use crate::rep_theory::WeightLabel;

use super::epsilon::EpsilonMap;
use super::setup::{LqtError, LqtSetup, RLabel};
use super::theta::ThetaMap;
use super::{bits, concat_sign};

/// `φ'(g_1 ∧ ... ∧ g_p) = Σ_S ± θ(g_S) ⊗ ε(g_{S^c})` as a map of labels.
pub fn phi_prime_word(
    g: &MatrixLieAlgebra,
    eps: &EpsilonMap<'_>,
    letters: &[u16],
) -> BTreeMap<RLabel, Rat> {
    let p = letters.len();
    let full = ((1u64 << p) - 1) as u32;
    let mut theta = ThetaMap::new(g, letters);
    let mut out: BTreeMap<RLabel, Rat> = BTreeMap::new();
    for mask in 0..=full {
        let s = bits(mask, p);
        let c = bits(full & !mask, p);
        let rest: Vec<u16> = c.iter().map(|&k| letters[k]).collect();
        let e = eps.apply(&rest);
        if e.is_empty() {
            continue;
        }
        let t = theta.on_mask(mask);
        if t.is_empty() {
            continue;
        }
        let sign = concat_sign(&[&s, &c]);
        for (mono, a) in &t {
            for (sl, b) in &e {
                let v = a * b;
                let entry = out.entry((mono.clone(), sl.clone())).or_insert_with(Rat::zero);
                if sign > 0 {
                    *entry += &v;
                } else {
                    *entry -= &v;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl LqtSetup {
    pub(crate) fn epsilon(&self) -> EpsilonMap<'_> {
        let (xs, ys) = self.tableaux();
        EpsilonMap::new(&self.ce.g, xs, ys)
    }

    fn r_vector(&self, p: usize, m: &BTreeMap<RLabel, Rat>) -> SparseVec {
        let space = self.rprime.space();
        SparseVec::from_pairs(
            m.iter().map(|(l, c)| (space.index_of(p, l).expect("φ' lands in R'"), c.clone())),
        )
    }

    /// Matrix of `φ'_p : C_p → R'_p`.
    pub fn phi_prime_matrix(&self, p: usize) -> SparseMat {
        let eps = self.epsilon();
        let cols: Vec<SparseVec> = self
            .ce
            .complex
            .space()
            .basis(p)
            .par_iter()
            .map(|w| self.r_vector(p, &phi_prime_word(&self.ce.g, &eps, w)))
            .collect();
        SparseMat::from_columns(self.rprime.dim(p), cols)
    }

    /// `φ'` on an arbitrary chain of `C_p`.
    pub fn phi_prime_apply(&self, p: usize, v: &SparseVec) -> SparseVec {
        let eps = self.epsilon();
        let space = self.ce.complex.space();
        let mut acc = SparseVec::new();
        for (k, c) in v.iter() {
            let w = phi_prime_word(&self.ce.g, &eps, space.label(p, *k));
            acc = acc.axpy(c, &self.r_vector(p, &w));
        }
        acc
    }

    pub fn phi_chain_map(&self) -> ChainMapReport {
        let maps = (0..=self.pmax).map(|p| self.phi_prime_matrix(p)).collect();
        ChainMap::new(&self.ce.complex, &self.rprime, maps).expect("shapes agree").verify()
    }

    /// Exact checks on `φ_p = φ'|_M` in one degree.
    pub fn phi_report(&self, p: usize) -> PhiReport {
        let m = self.highest(p);
        let basis = m.basis_matrix();
        let phi = self.phi_prime_matrix(p).mul(&basis);
        let proj = self.projector(p);
        let invariant_ok = proj.mul(&phi).first_difference(&phi).is_none();
        let r_dim = rank(&proj);
        let image_rank = rank(&phi);
        let n = self.n();
        let bound = p + self.label.alpha.len() + self.label.beta.len();
        let bijective_expected = n + self.m() >= bound;
        PhiReport {
            degree: p,
            label: self.label.to_string(),
            n,
            m_dim: m.dim(),
            r_dim,
            image_rank,
            invariant_ok,
            injective: image_rank == m.dim(),
            bijective: image_rank == m.dim() && image_rank == r_dim,
            bijective_expected,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PhiReport {
    pub degree: usize,
    pub label: String,
    pub n: usize,
    /// `dim M_{[α,β]_n} C_p`.
    pub m_dim: usize,
    /// `dim R_p`.
    pub r_dim: usize,
    pub image_rank: usize,
    /// `φ(M)` is fixed by the averaging projector.
    pub invariant_ok: bool,
    pub injective: bool,
    pub bijective: bool,
    /// `n ≥ p + l(α) + l(β) - m`.
    pub bijective_expected: bool,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.invariant_ok && self.injective && (!self.bijective_expected || self.bijective)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StabilityReport {
    pub n: usize,
    pub degree: usize,
    pub checked: usize,
    /// Index of the first basis vector of `M_n` whose images disagree.
    pub witness: Option<usize>,
}

/// For the trivial label, `φ^{n+1} ∘ incl = φ^n` on `M_{[∅,∅]_n} C_p`.
pub fn phi_stability(a: &StructAlgebra, n: usize, p: usize) -> Result<StabilityReport, LqtError> {
    let small = LqtSetup::new(a, n, &WeightLabel::trivial(n), p)?;
    let big = LqtSetup::new(a, n + 1, &WeightLabel::trivial(n + 1), p)?;
    let incl = small.ce.g.inclusion_into(&big.ce.g);
    let (ss, bs) = (small.ce.complex.space(), big.ce.complex.space());
    let m = small.highest(p);
    let mut witness = None;
    for (k, v) in m.basis().iter().enumerate() {
        let mut img = SparseVec::new();
        for (i, c) in v.iter() {
            let w: WedgeWord = ss.label(p, *i).iter().map(|&x| incl[x as usize] as u16).collect();
            // inclusion preserves the order of letters
            let j = bs.index_of(p, &w).expect("included word");
            img = img.axpy(c, &SparseVec::unit(j));
        }
        let lhs = small.phi_prime_apply(p, v);
        let rhs = big.phi_prime_apply(p, &img);
        let same = small.rprime.dim(p) == big.rprime.dim(p)
            && (0..small.rprime.dim(p)).all(|r| {
                let l = small.rprime.space().label(p, r);
                big.rprime.space().index_of(p, l) == Some(r)
            })
            && lhs == rhs;
        if !same {
            witness = Some(k);
            break;
        }
    }
    Ok(StabilityReport { n, degree: p, checked: m.dim(), witness })
}
