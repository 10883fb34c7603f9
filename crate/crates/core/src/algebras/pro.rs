use serde::{Deserialize, Serialize};

use crate::exact_linear::{Rat, SparseMat};

use super::{AlgebraError, AlgebraJson, StructAlgebra};

/// Levels `A_1..A_N` of an inverse system with connecting maps
/// `σ_{n+1}: A_{n+1} -> A_n` (`maps[n-1]` is `σ_{n+1}`).
#[derive(Clone, Debug)]
pub struct ProAlgebra {
    levels: Vec<StructAlgebra>,
    maps: Vec<SparseMat>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProAlgebraJson {
    pub window: usize,
    pub levels: Vec<AlgebraJson>,
    pub maps: Vec<Vec<(usize, usize, Rat)>>,
}

/// Outcome of a pro-zero test restricted to a finite window. A window can
/// never certify that a system is nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum ProDecision {
    Zero,
    NotDecidedInWindow,
}

impl ProAlgebra {
    pub fn new(levels: Vec<StructAlgebra>, maps: Vec<SparseMat>) -> Result<Self, AlgebraError> {
        if levels.is_empty() || maps.len() + 1 != levels.len() {
            return Err(AlgebraError::WindowShape { window: levels.len(), levels: levels.len(), maps: maps.len() });
        }
        for (k, m) in maps.iter().enumerate() {
            let (tgt, src) = (&levels[k], &levels[k + 1]);
            if m.rows() != tgt.dim() || m.cols() != src.dim() {
                return Err(AlgebraError::MapShape {
                    level: k + 1,
                    rows: m.rows(),
                    cols: m.cols(),
                    exp_rows: tgt.dim(),
                    exp_cols: src.dim(),
                });
            }
            if let Some((i, j)) = tgt.homomorphism_witness(src, m) {
                return Err(AlgebraError::NotHomomorphism(k + 1, i, j));
            }
        }
        Ok(ProAlgebra { levels, maps })
    }

    pub fn from_json(j: &ProAlgebraJson) -> Result<Self, AlgebraError> {
        if j.levels.len() != j.window || j.maps.len() + 1 != j.window {
            return Err(AlgebraError::WindowShape { window: j.window, levels: j.levels.len(), maps: j.maps.len() });
        }
        let levels = j.levels.iter().map(StructAlgebra::from_json).collect::<Result<Vec<_>, _>>()?;
        let mut maps = Vec::new();
        for (k, trip) in j.maps.iter().enumerate() {
            let (rows, cols) = (levels[k].dim(), levels[k + 1].dim());
            for &(r, c, _) in trip {
                if r >= rows || c >= cols {
                    return Err(AlgebraError::MapShape { level: k + 1, rows: r + 1, cols: c + 1, exp_rows: rows, exp_cols: cols });
                }
            }
            maps.push(SparseMat::from_triplets(rows, cols, trip.iter().cloned()));
        }
        ProAlgebra::new(levels, maps)
    }

    pub fn to_json(&self) -> ProAlgebraJson {
        ProAlgebraJson {
            window: self.window(),
            levels: self.levels.iter().map(|a| a.to_json()).collect(),
            maps: self.maps.iter().map(|m| m.triplets().map(|(r, c, x)| (r, c, x.clone())).collect()).collect(),
        }
    }

    /// The constant system with identity connecting maps.
    pub fn constant(a: &StructAlgebra, window: usize) -> Self {
        let levels = vec![a.clone(); window];
        let maps = vec![SparseMat::identity(a.dim()); window.saturating_sub(1)];
        ProAlgebra::new(levels, maps).expect("identities are homomorphisms")
    }

    /// Powers `A ⊃ A² ⊃ ... ⊃ A^N` with inclusions.
    pub fn powers(a: &StructAlgebra, window: usize) -> Self {
        let subs: Vec<_> = (1..=window).map(|k| a.power(k)).collect();
        let levels: Vec<StructAlgebra> =
            subs.iter().map(|s| a.subalgebra(s).expect("powers are ideals").0).collect();
        let maps = (0..window.saturating_sub(1))
            .map(|k| {
                // express the basis of A^{k+2} in the basis of A^{k+1}
                let cols = subs[k + 1]
                    .basis()
                    .iter()
                    .map(|v| {
                        let c = subs[k].coordinates(v).expect("A^{k+1} contains A^{k+2}");
                        crate::exact_linear::SparseVec::from_dense(&c)
                    })
                    .collect();
                SparseMat::from_columns(subs[k].dim(), cols)
            })
            .collect();
        ProAlgebra::new(levels, maps).expect("inclusions are homomorphisms")
    }

    pub fn window(&self) -> usize {
        self.levels.len()
    }

    /// Level `n` (1-based).
    pub fn level(&self, n: usize) -> &StructAlgebra {
        &self.levels[n - 1]
    }

    pub fn levels(&self) -> &[StructAlgebra] {
        &self.levels
    }

    pub fn maps(&self) -> &[SparseMat] {
        &self.maps
    }

    /// `σ_{n+1} ∘ ... ∘ σ_m : A_m -> A_n`.
    pub fn composite(&self, n: usize, m: usize) -> Result<SparseMat, AlgebraError> {
        composite(&self.levels.iter().map(|a| a.dim()).collect::<Vec<_>>(), &self.maps, n, m)
    }
}

fn composite(dims: &[usize], maps: &[SparseMat], n: usize, m: usize) -> Result<SparseMat, AlgebraError> {
    if n < 1 || n > m || m > dims.len() {
        return Err(AlgebraError::OutOfWindow { n, m, window: dims.len() });
    }
    let mut acc = SparseMat::identity(dims[m - 1]);
    for k in (n..m).rev() {
        acc = maps[k - 1].mul(&acc);
    }
    Ok(acc)
}

/// Window test for a pro-vector space given by level dimensions and maps
/// `maps[n-1]: V_{n+1} -> V_n`.
pub fn is_pro_zero(dims: &[usize], maps: &[SparseMat]) -> ProDecision {
    assert_eq!(maps.len() + 1, dims.len().max(1));
    let all = (1..=dims.len()).all(|n| {
        (n..=dims.len()).any(|m| composite(dims, maps, n, m).expect("in window").is_zero())
    });
    if all {
        ProDecision::Zero
    } else {
        ProDecision::NotDecidedInWindow
    }
}
