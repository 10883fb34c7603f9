use serde::Serialize;

use crate::algebras::MatrixLieAlgebra;
use crate::complexes::ChainComplex;
use crate::exact_linear::{kernel_basis, Echelon, Rat, SparseMat, SparseVec, Subspace};
use crate::homology_builders::{chevalley_eilenberg, wedge_insert, WedgeWord};

use super::{labels_up_to, WeightLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("isotypic components in degree {degree} span {got} of {expected} dimensions")]
    DecompositionDeficit { degree: usize, got: usize, expected: usize },
    #[error("isotypic components in degree {degree} are not independent")]
    NotDirect { degree: usize },
    #[error("isotypic component {label} in degree {degree} is not stable under the boundary")]
    NotStable { label: String, degree: usize },
    #[error("weight vector has length {got}, expected {n}")]
    WeightLength { got: usize, n: usize },
}

/// `C(gl_n A)` together with its `gl_n k`-module structure.
#[derive(Clone, Debug)]
pub struct CeModule {
    pub g: MatrixLieAlgebra,
    pub complex: ChainComplex<WedgeWord>,
}

#[derive(Clone, Debug)]
pub struct Isotype {
    pub label: WeightLabel,
    pub highest: Subspace,
    pub component: Subspace,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsotypeRow {
    pub label: String,
    pub highest_dim: usize,
    pub component_dim: usize,
}

impl CeModule {
    pub fn new(g: MatrixLieAlgebra, pmax: usize) -> Self {
        let complex = chevalley_eilenberg(&g, pmax);
        CeModule { g, complex }
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn pmax(&self) -> usize {
        self.complex.pmax()
    }

    pub fn dim(&self, p: usize) -> usize {
        self.complex.dim(p)
    }

    /// `e_ij · w` for a basis wedge word, extended as a derivation with
    /// `e_ij · (e_kl ⊗ a) = [e_ij, e_kl] ⊗ a` (0-based `i`, `j`).
    pub fn act_word(&self, i: usize, j: usize, p: usize, w: &WedgeWord) -> SparseVec {
        let mut e: Vec<(usize, Rat)> = Vec::new();
        let mut rest: Vec<u16> = Vec::with_capacity(p);
        for (pos, &x) in w.iter().enumerate() {
            let (k, l, s) = self.g.decode(x as usize);
            // [e_ij, e_kl] = δ_jk e_il - δ_li e_kj
            let mut terms: Vec<(usize, i64)> = Vec::new();
            if j == k {
                terms.push((self.g.index(i, l, s), 1));
            }
            if l == i {
                terms.push((self.g.index(k, j, s), -1));
            }
            if terms.is_empty() {
                continue;
            }
            rest.clear();
            rest.extend(w.iter().enumerate().filter(|(q, _)| *q != pos).map(|(_, y)| *y));
            for (t, c) in terms {
                // the new letter sits at position `pos`; moving it to the front costs (-1)^pos
                if let Some((word, s)) = wedge_insert(&rest, t as u16) {
                    let sign = if pos % 2 == 0 { s } else { -s } as i64 * c;
                    let idx = self.complex.space().index_of(p, &word).expect("word in basis");
                    e.push((idx, Rat::from_int(sign)));
                }
            }
        }
        SparseVec::from_pairs(e)
    }

    pub fn act(&self, i: usize, j: usize, p: usize, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (k, c) in v.iter() {
            acc = acc.axpy(c, &self.act_word(i, j, p, self.complex.space().label(p, *k)));
        }
        acc
    }

    pub fn action_matrix(&self, i: usize, j: usize, p: usize) -> SparseMat {
        let cols = self.complex.space().basis(p).iter().map(|w| self.act_word(i, j, p, w)).collect();
        SparseMat::from_columns(self.dim(p), cols)
    }

    /// Weight of a basis word.
    pub fn word_weight(&self, w: &WedgeWord) -> Vec<i64> {
        let mut wt = vec![0i64; self.n()];
        for &x in w {
            let (i, j) = self.g.weight(x as usize);
            wt[i] += 1;
            wt[j] -= 1;
        }
        wt
    }

    /// Indices of basis words of weight `mu` in degree `p`.
    pub fn weight_indices(&self, p: usize, mu: &[i64]) -> Vec<usize> {
        self.complex
            .space()
            .basis(p)
            .iter()
            .enumerate()
            .filter(|(_, w)| self.word_weight(w) == mu)
            .map(|(k, _)| k)
            .collect()
    }

    /// `w_μ` in degree `p`: basis words are weight vectors, so this is a coordinate subspace.
    pub fn weight_space(&self, p: usize, mu: &[i64]) -> Result<Subspace, RepError> {
        if mu.len() != self.n() {
            return Err(RepError::WeightLength { got: mu.len(), n: self.n() });
        }
        Ok(Subspace::coordinate(self.dim(p), &self.weight_indices(p, mu)))
    }

    /// `M_μ`: weight vectors killed by the raising operators `e_{i,i+1}`.
    pub fn highest_weight_space(&self, p: usize, label: &WeightLabel) -> Subspace {
        let idx = self.weight_indices(p, &label.vector());
        if idx.is_empty() {
            return Subspace::zero(self.dim(p));
        }
        let mut stacked: Option<SparseMat> = None;
        for i in 0..self.n().saturating_sub(1) {
            let cols = idx
                .iter()
                .map(|&k| self.act_word(i, i + 1, p, self.complex.space().label(p, k)))
                .collect();
            let m = SparseMat::from_columns(self.dim(p), cols);
            stacked = Some(match stacked {
                None => m,
                Some(s) => s.vstack(&m),
            });
        }
        let ker = match stacked {
            Some(m) => kernel_basis(&m),
            None => Subspace::full(idx.len()),
        };
        ker.embed(self.dim(p), &idx)
    }

    /// Smallest `gl_n k`-submodule containing `s`, by breadth-first saturation.
    pub fn module_closure(&self, p: usize, s: &Subspace) -> Subspace {
        let n = self.n();
        let mut ech = Echelon::new(self.dim(p));
        let mut frontier: Vec<SparseVec> = Vec::new();
        for v in s.basis() {
            if ech.insert(v) {
                frontier.push(v.clone());
            }
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for i in 0..n {
                    for j in 0..n {
                        let w = self.act(i, j, p, v);
                        if !w.is_zero() && ech.insert(&w) {
                            next.push(w);
                        }
                    }
                }
            }
            frontier = next;
        }
        Subspace::from_vectors(self.dim(p), ech.rows())
    }

    /// Isotypic components `U(gl_n k)·M_{[α,β]_n}` of degree `p`, with the
    /// direct-sum and boundary-stability checks.
    pub fn isotypic_decomposition(&self, p: usize) -> Result<Vec<Isotype>, RepError> {
        let mut out = Vec::new();
        let mut ech = Echelon::new(self.dim(p));
        let mut total = 0;
        for label in labels_up_to(self.n(), p) {
            let highest = self.highest_weight_space(p, &label);
            if highest.is_zero() {
                continue;
            }
            let component = self.module_closure(p, &highest);
            total += component.dim();
            for v in component.basis() {
                if !ech.insert(v) {
                    return Err(RepError::NotDirect { degree: p });
                }
            }
            out.push(Isotype { label, highest, component });
        }
        if total != self.dim(p) {
            return Err(RepError::DecompositionDeficit { degree: p, got: total, expected: self.dim(p) });
        }
        Ok(out)
    }

    /// `∂(V_p) ⊆ V_{p-1}` for a component given in both degrees.
    pub fn boundary_stable(&self, p: usize, vp: &Subspace, vq: &Subspace) -> bool {
        p == 0 || vp.basis().iter().all(|v| vq.contains(&self.complex.boundary(p).apply(v)))
    }

    /// Dimension table of the decomposition: rows `(label, dim M, dim V)`.
    pub fn isotype_table(&self, p: usize) -> Result<Vec<IsotypeRow>, RepError> {
        Ok(self
            .isotypic_decomposition(p)?
            .into_iter()
            .map(|i| IsotypeRow {
                label: i.label.to_string(),
                highest_dim: i.highest.dim(),
                component_dim: i.component.dim(),
            })
            .collect())
    }

    /// Span of `e_ij·v` over `i ≠ j` and `v ∈ s`: the sum of the nontrivial
    /// isotypes of the module generated by `s`, when `s` spans a submodule.
    pub fn nontrivial_part(&self, p: usize, vs: &[SparseVec]) -> Vec<SparseVec> {
        let n = self.n();
        let mut out = Vec::new();
        for v in vs {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let w = self.act(i, j, p, v);
                        if !w.is_zero() {
                            out.push(w);
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{named, StructAlgebra};

    fn module(name: &str, n: usize, pmax: usize) -> CeModule {
        CeModule::new(MatrixLieAlgebra::new(&named(name).unwrap(), n), pmax)
    }

    fn unit_word(m: &CeModule, p: usize, w: &[usize]) -> SparseVec {
        let w: WedgeWord = w.iter().map(|&x| x as u16).collect();
        SparseVec::unit(m.complex.space().index_of(p, &w).unwrap())
    }

    #[test]
    fn elementary_actions() {
        let m = module("k", 2, 2);
        let e12 = m.g.index(0, 1, 0);
        let v = unit_word(&m, 1, &[e12]);
        assert_eq!(m.act(0, 0, 1, &v), v);
        assert_eq!(m.act(1, 1, 1, &v), v.scale(&Rat::from_int(-1)));
        assert!(m.act(0, 1, 1, &v).is_zero());
    }

    #[test]
    fn identity_acts_trivially() {
        let m = module("uv", 2, 3);
        for p in 0..=3 {
            let id = m.action_matrix(0, 0, p).add(&m.action_matrix(1, 1, p));
            assert!(id.is_zero());
        }
    }

    #[test]
    fn weight_spaces_of_gl2() {
        let m = module("k", 2, 2);
        assert_eq!(m.weight_space(1, &[0, 0]).unwrap().dim(), 2);
        let w = m.weight_space(1, &[1, -1]).unwrap();
        assert_eq!(w, Subspace::coordinate(4, &[m.g.index(0, 1, 0)]));
    }

    #[test]
    fn highest_weights_in_degree_one() {
        let m = module("zero2", 3, 2);
        let triv = m.highest_weight_space(1, &WeightLabel::trivial(3));
        assert_eq!(triv.dim(), 2);
        let adj = WeightLabel::new("1".parse().unwrap(), "1".parse().unwrap(), 3).unwrap();
        let h = m.highest_weight_space(1, &adj);
        assert_eq!(h, Subspace::coordinate(m.dim(1), &[m.g.index(0, 2, 0), m.g.index(0, 2, 1)]));
        let big = WeightLabel::new("2".parse().unwrap(), "2".parse().unwrap(), 3).unwrap();
        assert!(m.highest_weight_space(1, &big).is_zero());
    }

    #[test]
    fn closure_of_e12_is_sl2() {
        let m = module("k", 2, 1);
        let s = Subspace::coordinate(4, &[m.g.index(0, 1, 0)]);
        assert_eq!(m.module_closure(1, &s).dim(), 3);
        assert!(m.module_closure(1, &Subspace::zero(4)).is_zero());
    }

    #[test]
    fn degree_one_decomposition() {
        let m = module("k", 2, 1);
        let dims: Vec<usize> = m.isotypic_decomposition(1).unwrap().iter().map(|i| i.component.dim()).collect();
        assert_eq!(dims, vec![1, 3]);
        let z = CeModule::new(MatrixLieAlgebra::new(&StructAlgebra::zero_mult(2), 2), 1);
        let dims: Vec<usize> = z.isotypic_decomposition(1).unwrap().iter().map(|i| i.component.dim()).collect();
        assert_eq!(dims, vec![2, 6]);
    }

    #[test]
    fn boundary_is_equivariant() {
        let m = module("uv", 2, 3);
        for p in 1..=3 {
            for i in 0..2 {
                for j in 0..2 {
                    let lhs = m.complex.boundary(p).mul(&m.action_matrix(i, j, p));
                    let rhs = m.action_matrix(i, j, p - 1).mul(m.complex.boundary(p));
                    assert_eq!(lhs, rhs, "p={p} e{i}{j}");
                }
            }
        }
    }
}
