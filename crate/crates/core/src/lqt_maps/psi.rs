use serde::Serialize;

use crate::algebras::MatrixLieAlgebra;
use crate::complexes::Monomial;
use crate::exact_linear::{image_basis, Rat, SparseMat, SparseVec, Subspace};
use crate::homology_builders::{wedge_mul, CyclicWord, WedgeVec};
use crate::rep_theory::SigmaLabel;

use super::setup::{LqtSetup, RLabel};

/// `e_ij(a_1 ⊗ ... ⊗ a_q) = Σ_l e_{i,l_2}(a_1) ∧ ... ∧ e_{l_q,j}(a_q)`.
pub fn e_hat_ij(g: &MatrixLieAlgebra, word: &[u16], i: usize, j: usize) -> WedgeVec {
    let n = g.n();
    // states: current row index -> accumulated wedge
    let mut acc: Vec<WedgeVec> = vec![WedgeVec::new(); n];
    acc[i] = WedgeVec::from([(Vec::new(), Rat::one())]);
    for (t, &a) in word.iter().enumerate() {
        let last = t + 1 == word.len();
        let mut next = vec![WedgeVec::new(); n];
        for (r, v) in acc.iter().enumerate() {
            if v.is_empty() {
                continue;
            }
            for c in 0..n {
                if last && c != j {
                    continue;
                }
                let letter = WedgeVec::from([(vec![g.index(r, c, a as usize) as u16], Rat::one())]);
                let prod = wedge_mul(v, &letter);
                for (w, x) in prod {
                    let e = next[c].entry(w).or_insert_with(Rat::zero);
                    *e += &x;
                }
            }
        }
        for v in next.iter_mut() {
            v.retain(|_, c| !c.is_zero());
        }
        acc = next;
    }
    if word.is_empty() {
        return if i == j { acc.swap_remove(i) } else { WedgeVec::new() };
    }
    acc.swap_remove(j)
}

/// `θ̂` on a single cyclic generator: `Σ_l e_ll(w)`.
pub fn theta_hat_generator(g: &MatrixLieAlgebra, w: &CyclicWord) -> WedgeVec {
    let mut out = WedgeVec::new();
    for l in 0..g.n() {
        for (k, c) in e_hat_ij(g, w, l, l) {
            let e = out.entry(k).or_insert_with(Rat::zero);
            *e += &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `θ̂` on a monomial: the product of factor images in monomial order.
pub fn theta_hat(g: &MatrixLieAlgebra, mono: &Monomial<CyclicWord>) -> WedgeVec {
    let mut acc = WedgeVec::from([(Vec::new(), Rat::one())]);
    for (w, _) in mono {
        acc = wedge_mul(&acc, &theta_hat_generator(g, w));
    }
    acc
}

impl LqtSetup {
    /// Row/column index pairs `(ρ_t(x)-1, n-ρ_t(y))` for tableau indices.
    fn epsilon_indices(&self, xi: usize, yi: usize) -> Vec<(usize, usize)> {
        let (xs, ys) = self.tableaux();
        let n = self.n();
        (1..=self.m()).map(|t| (xs[xi].row_of(t) - 1, n - ys[yi].row_of(t))).collect()
    }

    /// `ε̂(c_1 ⊗ ... ⊗ c_m ⊗ x ⊗ y)` with `x`, `y` read as standard tableaux.
    pub fn epsilon_hat(&self, sl: &SigmaLabel) -> WedgeVec {
        let (words, (xi, yi)) = sl;
        self.epsilon_hat_rows(words, &self.epsilon_indices(*xi, *yi))
    }

    fn epsilon_hat_rows(&self, words: &[Vec<u16>], idx: &[(usize, usize)]) -> WedgeVec {
        let mut acc = WedgeVec::from([(Vec::new(), Rat::one())]);
        for (c, &(i, j)) in words.iter().zip(idx) {
            acc = wedge_mul(&acc, &e_hat_ij(&self.ce.g, c, i, j));
        }
        acc
    }

    /// `ε̂` with `x`, `y` read as polytabloids: the signed sum over the
    /// tabloids of both, where `ρ` only depends on the tabloid.
    pub fn epsilon_hat_polytabloid(&self, sl: &SigmaLabel) -> WedgeVec {
        let (words, (xi, yi)) = sl;
        let n = self.n();
        let mut out = WedgeVec::new();
        for (tx, sx) in self.spa.polytabloid_expansion(*xi) {
            for (ty, sy) in self.spb.polytabloid_expansion(*yi) {
                let idx: Vec<(usize, usize)> =
                    tx.iter().zip(&ty).map(|(&r, &s)| (r as usize, n - 1 - s as usize)).collect();
                let sign = Rat::from_int((sx * sy) as i64);
                for (w, c) in self.epsilon_hat_rows(words, &idx) {
                    let e = out.entry(w).or_insert_with(Rat::zero);
                    *e += &(&c * &sign);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `ψ'` with the polytabloid reading of the Specht factors. It agrees
    /// with [`Self::psi_prime_label`] when `m ≤ 1` or both shapes are rows.
    pub fn psi_polytabloid_label(&self, l: &RLabel) -> WedgeVec {
        wedge_mul(&theta_hat(&self.ce.g, &l.0), &self.epsilon_hat_polytabloid(&l.1))
    }

    pub fn psi_polytabloid_matrix(&self, p: usize) -> SparseMat {
        let cols = self
            .rprime
            .space()
            .basis(p)
            .iter()
            .map(|l| self.c_vector(p, &self.psi_polytabloid_label(l)))
            .collect();
        SparseMat::from_columns(self.ce.dim(p), cols)
    }

    /// `ψ'` on a basis label of `R'`.
    pub fn psi_prime_label(&self, l: &RLabel) -> WedgeVec {
        wedge_mul(&theta_hat(&self.ce.g, &l.0), &self.epsilon_hat(&l.1))
    }

    fn c_vector(&self, p: usize, w: &WedgeVec) -> SparseVec {
        let space = self.ce.complex.space();
        SparseVec::from_pairs(w.iter().map(|(k, c)| (space.index_of(p, k).expect("ψ' lands in C_p"), c.clone())))
    }

    /// Matrix of `ψ'_p : R'_p → C_p`.
    pub fn psi_prime_matrix(&self, p: usize) -> SparseMat {
        let cols = self
            .rprime
            .space()
            .basis(p)
            .iter()
            .map(|l| self.c_vector(p, &self.psi_prime_label(l)))
            .collect();
        SparseMat::from_columns(self.ce.dim(p), cols)
    }

    /// `ψ = ψ' ∘ (averaging projector)` in the polytabloid reading, which
    /// factors through coinvariants; this is `ψ` on `R_p ≅ (R'_p)_{Σ_m}`.
    pub fn psi_matrix(&self, p: usize) -> SparseMat {
        self.psi_polytabloid_matrix(p).mul(&self.projector(p))
    }

    /// Standard-tableau `ψ'_p(R'_p) = M_{[α,β]_n} C_p`?
    pub fn psi_prime_image_is_highest(&self, p: usize) -> bool {
        image_basis(&self.psi_prime_matrix(p)) == self.highest(p)
    }

    /// Polytabloid `ψ'_p(R'_p) = M_{[α,β]_n} C_p`?
    pub fn psi_image_is_highest(&self, p: usize) -> bool {
        self.psi_image(p) == self.highest(p)
    }

    /// Column space of the polytabloid `ψ'_p`.
    pub fn psi_image(&self, p: usize) -> Subspace {
        image_basis(&self.psi_polytabloid_matrix(p))
    }

    /// Does the standard-tableau `ψ'_p` vanish on `(1 - P) R'_p`?
    pub fn psi_prime_descends(&self, p: usize) -> bool {
        let psi = self.psi_prime_matrix(p);
        psi.mul(&self.projector(p)).first_difference(&psi).is_none()
    }

    /// Does the polytabloid `ψ'_p` vanish on `(1 - P) R'_p`?
    pub fn psi_polytabloid_descends(&self, p: usize) -> bool {
        let psi = self.psi_polytabloid_matrix(p);
        psi.mul(&self.projector(p)).first_difference(&psi).is_none()
    }
}

/// A basis element `x` of `R'` with `ψ'(∂x) ≠ ∂ψ'(x)`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PsiWitness {
    pub degree: usize,
    pub label: String,
    /// Sparse `ψ'(∂x) - ∂ψ'(x)` over the basis of `C_{p-1}`, as `(word, coefficient)`.
    pub discrepancy: Vec<(String, Rat)>,
}

/// Readable form of an `R'` basis element, e.g. `[u]·[u⊗v]`.
fn rlabel_name(s: &LqtSetup, (mono, sigma): &RLabel) -> String {
    let names = s.ce.g.coeff().basis_names();
    let factors: Vec<String> = mono
        .iter()
        .map(|(w, _)| format!("[{}]", w.iter().map(|&x| names[x as usize].as_str()).collect::<Vec<_>>().join("⊗")))
        .collect();
    let body = if factors.is_empty() { "1".to_string() } else { factors.join("·") };
    let (words, (i, j)) = sigma;
    if words.is_empty() {
        return body;
    }
    let tensors: Vec<String> =
        words.iter().map(|w| w.iter().map(|&x| names[x as usize].as_str()).collect::<Vec<_>>().join("⊗")).collect();
    format!("{body} ⊗ ({}) tableaux {i},{j}", tensors.join(" | "))
}

/// Searches degree `p` for a basis element on which `ψ'` fails to commute
/// with the boundaries.
pub fn psi_not_chain_witness(s: &LqtSetup, p: usize) -> Option<PsiWitness> {
    if p == 0 || p > s.pmax {
        return None;
    }
    {
        let psi_p = s.psi_prime_matrix(p);
        let psi_q = s.psi_prime_matrix(p - 1);
        let lhs = psi_q.mul(s.rprime.boundary(p));
        let rhs = s.ce.complex.boundary(p).mul(&psi_p);
        for k in 0..s.rprime.dim(p) {
            let diff = lhs.column(k).sub(rhs.column(k));
            if !diff.is_zero() {
                let label = s.rprime.space().label(p, k);
                let space = s.ce.complex.space();
                let discrepancy = diff
                    .iter()
                    .map(|(i, c)| {
                        let w = space.label(p - 1, *i);
                        let names: Vec<String> = w.iter().map(|&x| s.ce.g.name(x as usize)).collect();
                        (names.join("∧"), c.clone())
                    })
                    .collect();
                return Some(PsiWitness { degree: p, label: rlabel_name(s, label), discrepancy });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::named;
    use crate::rep_theory::WeightLabel;

    #[test]
    fn remark_witness_on_uv_in_degree_three() {
        let s = LqtSetup::new(&named("uv").unwrap(), 1, &WeightLabel::trivial(1), 3).unwrap();
        let w = psi_not_chain_witness(&s, 3).expect("ψ' is not a chain map");
        assert_eq!(w.degree, 3);
        assert_eq!(w.label, "[u]·[u⊗v]");
        assert_eq!(w.discrepancy, vec![("e11⊗u∧e11⊗v".to_string(), Rat::from_int(-1))]);
    }

    #[test]
    fn theta_hat_on_length_one_is_the_diagonal_sum() {
        let g = MatrixLieAlgebra::new(&named("uv").unwrap(), 2);
        let t = theta_hat_generator(&g, &vec![1]);
        let expect: WedgeVec =
            [(vec![g.index(0, 0, 1) as u16], Rat::one()), (vec![g.index(1, 1, 1) as u16], Rat::one())].into();
        assert_eq!(t, expect);
    }
}
