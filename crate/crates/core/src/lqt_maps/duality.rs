use serde::Serialize;

use crate::complexes::{tensor, Monomial};
use crate::exact_linear::{Rat, SparseMat, SparseVec};
use crate::homology_builders::CyclicWord;

use super::epsilon::epsilon_ij_word;
use super::psi::{e_hat_ij, theta_hat_generator};
use super::setup::LqtSetup;
use super::theta::{coproduct_word, theta1_word};

/// One square of the duality, checked exactly in one degree.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DualitySquare {
    pub name: String,
    pub degree: usize,
    pub ok: bool,
    /// `(row, column)` of the first differing entry.
    pub witness: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DualityReport {
    pub squares: Vec<DualitySquare>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.squares.iter().all(|s| s.ok)
    }
}

fn square(name: &str, degree: usize, lhs: &SparseMat, rhs: &SparseMat) -> DualitySquare {
    let witness = if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        Some((usize::MAX, usize::MAX))
    } else {
        lhs.first_difference(rhs)
    };
    DualitySquare { name: name.to_string(), degree, ok: witness.is_none(), witness }
}

/// Order of the rotation stabilizer of a word.
fn stabilizer(w: &[u16]) -> usize {
    let l = w.len();
    (0..l).filter(|&k| (0..l).all(|t| w[t] == w[(t + k) % l])).count()
}

/// Pairing of a cyclic class with its dual class: `L · |Stab(w)|`.
fn cyclic_pairing(w: &CyclicWord) -> i64 {
    (w.len() * stabilizer(w)) as i64
}

/// Pairing of a monomial of `q` factors with its dual monomial:
/// `(1/q!) Σ_σ ±∏⟨x_i, x*_σ(i)⟩ = ∏ (repeats)! · ∏ pairing(factor) / q!`.
/// The `1/q!` matches `π` against the multiplicative `θ̂`.
fn monomial_pairing(mono: &Monomial<CyclicWord>) -> Rat {
    let mut acc = Rat::one();
    let mut run = 0usize;
    for (k, (w, _)) in mono.iter().enumerate() {
        run = if k > 0 && mono[k - 1].0 == *w { run + 1 } else { 1 };
        acc *= &Rat::new(run as i64 * cyclic_pairing(w), k as i64 + 1);
    }
    acc
}

fn monomial_norm(mono: &Monomial<CyclicWord>) -> Rat {
    Rat::from_int(mono.iter().map(|(w, _)| w.len() as i64).product())
}

fn diag(vals: Vec<Rat>) -> SparseMat {
    let n = vals.len();
    SparseMat::from_triplets(n, n, vals.into_iter().enumerate().map(|(i, v)| (i, i, v)))
}

/// Exact check of the duality between `φ'` and `ψ'`, degree by degree up to
/// `pmax`: the big square, its two building blocks for `θ¹` and `ε_ij`,
/// coproduct against product, and the equivariance of the identification.
pub fn duality_check(s: &LqtSetup) -> DualityReport {
    let mut squares = Vec::new();
    let g = &s.ce.g;
    let n = s.n();
    let cspace = s.ce.complex.space();
    let cc = tensor(&s.ce.complex, &s.ce.complex, s.pmax);
    for p in 0..=s.pmax {
        let dim_c = s.ce.dim(p);
        // φ' against (ψ' N)^t
        let rspace = s.rprime.space();
        let gr = diag(rspace.basis(p).iter().map(|l| monomial_pairing(&l.0)).collect());
        let nn = diag(rspace.basis(p).iter().map(|l| monomial_norm(&l.0)).collect());
        let lhs = gr.mul(&s.phi_prime_matrix(p));
        let rhs = nn.mul(&s.psi_prime_matrix(p).transpose());
        squares.push(square("phi-psi", p, &lhs, &rhs));

        if p >= 1 {
            // θ¹ against θ̂^t N on generators of length p
            let cyc = s.cyclic.space();
            let words = cyc.basis(p - 1);
            let t1 = SparseMat::from_columns(
                words.len(),
                cspace
                    .basis(p)
                    .iter()
                    .map(|w| {
                        SparseVec::from_pairs(
                            theta1_word(g, w).into_iter().map(|(k, c)| (cyc.index_of(p - 1, &k).expect("cyclic"), c)),
                        )
                    })
                    .collect(),
            );
            let th = SparseMat::from_columns(
                dim_c,
                words
                    .iter()
                    .map(|w| {
                        SparseVec::from_pairs(
                            theta_hat_generator(g, w).into_iter().map(|(k, c)| (cspace.index_of(p, &k).unwrap(), c)),
                        )
                    })
                    .collect(),
            );
            let gc = diag(words.iter().map(|w| Rat::from_int(cyclic_pairing(w))).collect());
            let nc = diag(words.iter().map(|w| Rat::from_int(w.len() as i64)).collect());
            squares.push(square("theta1", p, &gc.mul(&t1), &nc.mul(&th.transpose())));

            // ε_ij against ε̂_ij^t
            let bspace = s.bar.space();
            let mut ok = true;
            let mut witness = None;
            'ij: for i in 0..n {
                for j in 0..n {
                    let e = SparseMat::from_columns(
                        bspace.dim(p),
                        cspace
                            .basis(p)
                            .iter()
                            .map(|w| {
                                SparseVec::from_pairs(
                                    epsilon_ij_word(g, w, i, j)
                                        .into_iter()
                                        .map(|(k, c)| (bspace.index_of(p, &k).unwrap(), c)),
                                )
                            })
                            .collect(),
                    );
                    let eh = SparseMat::from_columns(
                        dim_c,
                        bspace
                            .basis(p)
                            .iter()
                            .map(|w| {
                                SparseVec::from_pairs(
                                    e_hat_ij(g, w, i, j).into_iter().map(|(k, c)| (cspace.index_of(p, &k).unwrap(), c)),
                                )
                            })
                            .collect(),
                    );
                    if let Some(wit) = e.first_difference(&eh.transpose()) {
                        ok = false;
                        witness = Some(wit);
                        break 'ij;
                    }
                }
            }
            squares.push(DualitySquare { name: "epsilon-ij".into(), degree: p, ok, witness });
        }

        // Δ against μ^t
        let ccs = cc.space();
        let delta = SparseMat::from_columns(
            cc.dim(p),
            cspace
                .basis(p)
                .iter()
                .map(|w| {
                    SparseVec::from_pairs(
                        coproduct_word(w).into_iter().map(|(k, c)| (ccs.index_of(p, &k).expect("split"), c)),
                    )
                })
                .collect(),
        );
        let mu = SparseMat::from_columns(
            dim_c,
            ccs.basis(p)
                .iter()
                .map(|(a, b)| {
                    let mut letters = a.clone();
                    letters.extend_from_slice(b);
                    match crate::complexes::koszul::sort_wedge(&letters) {
                        Some((w, sg)) => SparseVec::from_pairs([(cspace.index_of(p, &w).unwrap(), Rat::from_int(sg as i64))]),
                        None => SparseVec::new(),
                    }
                })
                .collect(),
        );
        squares.push(square("coproduct", p, &delta, &mu.transpose()));

        // equivariance of the identification
        let mut witness = None;
        'act: for i in 0..n {
            for j in 0..n {
                let a = s.ce.action_matrix(i, j, p).transpose();
                let b = s.ce.action_matrix(j, i, p);
                if let Some(w) = a.first_difference(&b) {
                    witness = Some(w);
                    break 'act;
                }
            }
        }
        squares.push(DualitySquare { name: "equivariance".into(), degree: p, ok: witness.is_none(), witness });
    }
    DualityReport { squares }
}
