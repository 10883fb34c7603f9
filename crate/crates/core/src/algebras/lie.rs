use serde::Serialize;

use crate::exact_linear::{Rat, SparseVec};

use super::StructAlgebra;

/// `gl_n A` with basis `e_ij ⊗ a_s` at index `(i*n + j)*dim A + s`
/// (0-based `i`, `j`).
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    n: usize,
    coeff: StructAlgebra,
    brackets: Vec<SparseVec>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LieAxiomReport {
    pub antisymmetry: Option<(usize, usize)>,
    pub jacobi: Option<(usize, usize, usize)>,
}

impl LieAxiomReport {
    pub fn passed(&self) -> bool {
        self.antisymmetry.is_none() && self.jacobi.is_none()
    }
}

impl MatrixLieAlgebra {
    pub fn new(coeff: &StructAlgebra, n: usize) -> Self {
        let d = coeff.dim();
        let dim = n * n * d;
        let mut brackets = Vec::with_capacity(dim * dim);
        for x in 0..dim {
            let (i, j, a) = (x / d / n, x / d % n, x % d);
            for y in 0..dim {
                let (k, l, b) = (y / d / n, y / d % n, y % d);
                // [e_ij a, e_kl b] = δ_jk e_il ab - δ_li e_kj ba
                let mut v = SparseVec::new();
                if j == k {
                    let base = (i * n + l) * d;
                    v = v.add(&coeff.mul_basis(a, b).map_indices(|s| base + s));
                }
                if l == i {
                    let base = (k * n + j) * d;
                    v = v.sub(&coeff.mul_basis(b, a).map_indices(|s| base + s));
                }
                brackets.push(v);
            }
        }
        MatrixLieAlgebra { n, coeff: coeff.clone(), brackets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self) -> &StructAlgebra {
        &self.coeff
    }

    pub fn dim(&self) -> usize {
        self.n * self.n * self.coeff.dim()
    }

    pub fn index(&self, i: usize, j: usize, s: usize) -> usize {
        (i * self.n + j) * self.coeff.dim() + s
    }

    /// `(i, j, s)` of a basis index.
    pub fn decode(&self, x: usize) -> (usize, usize, usize) {
        let d = self.coeff.dim();
        (x / d / self.n, x / d % self.n, x % d)
    }

    pub fn name(&self, x: usize) -> String {
        let (i, j, s) = self.decode(x);
        format!("e{}{}⊗{}", i + 1, j + 1, self.coeff.basis_names()[s])
    }

    pub fn bracket_basis(&self, x: usize, y: usize) -> &SparseVec {
        &self.brackets[x * self.dim() + y]
    }

    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (x, a) in u.iter() {
            for (y, b) in v.iter() {
                acc = acc.axpy(&(a * b), self.bracket_basis(*x, *y));
            }
        }
        acc
    }

    /// Weight `ε_i - ε_j` of `e_ij ⊗ a` under the diagonal of `gl_n k`.
    pub fn weight(&self, x: usize) -> (usize, usize) {
        let (i, j, _) = self.decode(x);
        (i, j)
    }

    /// Index map of the corner inclusion `gl_n A ⊂ gl_{n+1} A`.
    pub fn inclusion_into(&self, bigger: &MatrixLieAlgebra) -> Vec<usize> {
        assert!(bigger.n >= self.n && bigger.coeff == self.coeff);
        (0..self.dim())
            .map(|x| {
                let (i, j, s) = self.decode(x);
                bigger.index(i, j, s)
            })
            .collect()
    }

    pub fn check_axioms(&self) -> LieAxiomReport {
        let dim = self.dim();
        let mut antisymmetry = None;
        'a: for x in 0..dim {
            for y in 0..dim {
                if *self.bracket_basis(x, y) != self.bracket_basis(y, x).scale(&Rat::from_int(-1)) {
                    antisymmetry = Some((x, y));
                    break 'a;
                }
            }
        }
        let mut jacobi = None;
        'j: for x in 0..dim {
            for y in 0..dim {
                for z in 0..dim {
                    let ux = SparseVec::unit(x);
                    let uy = SparseVec::unit(y);
                    let uz = SparseVec::unit(z);
                    let s = self
                        .bracket(&ux, self.bracket_basis(y, z))
                        .add(&self.bracket(&uy, self.bracket_basis(z, x)))
                        .add(&self.bracket(&uz, self.bracket_basis(x, y)));
                    if !s.is_zero() {
                        jacobi = Some((x, y, z));
                        break 'j;
                    }
                }
            }
        }
        LieAxiomReport { antisymmetry, jacobi }
    }
}
