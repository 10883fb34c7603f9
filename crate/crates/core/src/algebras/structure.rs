use serde::{Deserialize, Serialize};

use crate::exact_linear::{Rat, SparseMat, SparseVec, Subspace};

use super::AlgebraError;

/// Associative, not necessarily unital algebra over `Q` with basis
/// `e_0..e_{dim-1}` and products `e_i e_j = Σ_s c_ij^s e_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructAlgebra {
    basis: Vec<String>,
    table: Vec<SparseVec>,
}

/// On-disk form: `{"dim": D, "basis": [...], "mult": [[i, j, s, "p/q"], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<(usize, usize, usize, Rat)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AssociativityReport {
    pub ok: bool,
    pub triples_checked: usize,
    pub witness: Option<(usize, usize, usize)>,
}

impl StructAlgebra {
    /// Builds from structure constants without checking associativity.
    pub fn from_constants(
        basis: Vec<String>,
        mult: impl IntoIterator<Item = (usize, usize, usize, Rat)>,
    ) -> Result<Self, AlgebraError> {
        let d = basis.len();
        let mut entries: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); d * d];
        let mut seen = std::collections::HashSet::new();
        for (i, j, s, c) in mult {
            for index in [i, j, s] {
                if index >= d {
                    return Err(AlgebraError::IndexOutOfRange { index, dim: d });
                }
            }
            if !seen.insert((i, j, s)) {
                return Err(AlgebraError::RepeatedConstant(i, j, s));
            }
            entries[i * d + j].push((s, c));
        }
        let table = entries.into_iter().map(SparseVec::from_pairs).collect();
        Ok(StructAlgebra { basis, table })
    }

    /// Builds and checks associativity.
    pub fn new(
        basis: Vec<String>,
        mult: impl IntoIterator<Item = (usize, usize, usize, Rat)>,
    ) -> Result<Self, AlgebraError> {
        let a = StructAlgebra::from_constants(basis, mult)?;
        match a.check_associativity().witness {
            Some((i, j, k)) => Err(AlgebraError::NotAssociative(i, j, k)),
            None => Ok(a),
        }
    }

    pub fn zero_mult(dim: usize) -> Self {
        let basis = (0..dim).map(|i| format!("x{i}")).collect();
        StructAlgebra::from_constants(basis, []).expect("no constants")
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self, AlgebraError> {
        if j.basis.len() != j.dim {
            return Err(AlgebraError::BasisLength { dim: j.dim, names: j.basis.len() });
        }
        StructAlgebra::new(j.basis.clone(), j.mult.iter().cloned())
    }

    pub fn to_json(&self) -> AlgebraJson {
        let d = self.dim();
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (s, c) in self.table[i * d + j].iter() {
                    mult.push((i, j, *s, c.clone()));
                }
            }
        }
        AlgebraJson { dim: d, basis: self.basis.clone(), mult }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc = acc.axpy(&(a * b), self.mul_basis(*i, *j));
            }
        }
        acc
    }

    pub fn is_zero_mult(&self) -> bool {
        self.table.iter().all(|v| v.is_zero())
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// Replaces one structure constant (test helper for negative controls).
    pub fn with_constant(&self, i: usize, j: usize, s: usize, c: Rat) -> Self {
        let mut out = self.clone();
        let d = self.dim();
        let v = &out.table[i * d + j];
        let delta = c - v.get(s);
        out.table[i * d + j] = v.add(&SparseVec::from_pairs([(s, delta)]));
        out
    }

    pub fn check_associativity(&self) -> AssociativityReport {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let left = self.mul(ij, &SparseVec::unit(k));
                    let right = self.mul(&SparseVec::unit(i), self.mul_basis(j, k));
                    if left != right {
                        return AssociativityReport {
                            ok: false,
                            triples_checked: (i * d + j) * d + k + 1,
                            witness: Some((i, j, k)),
                        };
                    }
                }
            }
        }
        AssociativityReport { ok: true, triples_checked: d * d * d, witness: None }
    }

    /// Span of all products of `k` elements.
    pub fn power(&self, k: usize) -> Subspace {
        let d = self.dim();
        let mut cur = Subspace::full(d);
        for _ in 1..k {
            let mut prods = Vec::new();
            for v in cur.basis() {
                for j in 0..d {
                    prods.push(self.mul(v, &SparseVec::unit(j)));
                }
            }
            cur = Subspace::from_vectors(d, &prods);
        }
        cur
    }

    /// The subalgebra on a multiplicatively closed subspace, in the
    /// subspace's echelon basis, with its inclusion matrix.
    pub fn subalgebra(&self, s: &Subspace) -> Result<(StructAlgebra, SparseMat), AlgebraError> {
        let b = s.basis();
        let mut mult = Vec::new();
        for (i, x) in b.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let c = s.coordinates(&self.mul(x, y)).ok_or(AlgebraError::NotSubalgebra)?;
                for (k, c) in c.into_iter().enumerate() {
                    if !c.is_zero() {
                        mult.push((i, j, k, c));
                    }
                }
            }
        }
        let names = (0..b.len()).map(|i| format!("b{i}")).collect();
        let sub = StructAlgebra::from_constants(names, mult)?;
        Ok((sub, s.basis_matrix()))
    }

    /// Is `m: other -> self` multiplicative on basis products? Returns the
    /// first failing pair.
    pub fn homomorphism_witness(&self, other: &StructAlgebra, m: &SparseMat) -> Option<(usize, usize)> {
        for i in 0..other.dim() {
            for j in 0..other.dim() {
                let lhs = m.apply(other.mul_basis(i, j));
                let rhs = self.mul(m.column(i), m.column(j));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}
