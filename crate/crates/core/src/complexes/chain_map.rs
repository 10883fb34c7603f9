use serde::Serialize;

use crate::exact_linear::SparseMat;

use super::{ChainComplex, ComplexError, Label};

/// Degree-preserving map of complexes, one matrix per degree.
#[derive(Clone, Debug)]
pub struct ChainMap<'a, L1: Label, L2: Label> {
    pub source: &'a ChainComplex<L1>,
    pub target: &'a ChainComplex<L2>,
    pub maps: Vec<SparseMat>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MapDegreeCheck {
    pub degree: usize,
    pub ok: bool,
    /// `(source basis index in degree p, target basis index in degree p-1)`
    /// of a nonzero entry of `d f - f d`.
    pub witness: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ChainMapReport {
    pub checks: Vec<MapDegreeCheck>,
}

impl ChainMapReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn first_failure(&self) -> Option<&MapDegreeCheck> {
        self.checks.iter().find(|c| !c.ok)
    }
}

impl<'a, L1: Label, L2: Label> ChainMap<'a, L1, L2> {
    pub fn new(
        source: &'a ChainComplex<L1>,
        target: &'a ChainComplex<L2>,
        maps: Vec<SparseMat>,
    ) -> Result<Self, ComplexError> {
        for (p, m) in maps.iter().enumerate() {
            if m.cols() != source.dim(p) || m.rows() != target.dim(p) {
                return Err(ComplexError::DegreeMismatch {
                    degree: p,
                    detail: format!(
                        "matrix is {}x{}, complexes have dims {} -> {}",
                        m.rows(),
                        m.cols(),
                        source.dim(p),
                        target.dim(p)
                    ),
                });
            }
        }
        if maps.len() > source.pmax() + 1 || maps.len() > target.pmax() + 1 {
            return Err(ComplexError::DegreeMismatch {
                degree: maps.len() - 1,
                detail: "map defined beyond the truncation of a complex".into(),
            });
        }
        Ok(ChainMap { source, target, maps })
    }

    pub fn zero(source: &'a ChainComplex<L1>, target: &'a ChainComplex<L2>) -> Self {
        let top = source.pmax().min(target.pmax());
        let maps = (0..=top).map(|p| SparseMat::zero(target.dim(p), source.dim(p))).collect();
        ChainMap { source, target, maps }
    }

    /// Exact check of `d f_p = f_{p-1} d` for every degree where both sides are defined.
    pub fn verify(&self) -> ChainMapReport {
        let checks = (1..self.maps.len())
            .map(|p| {
                let lhs = self.target.boundary(p).mul(&self.maps[p]);
                let rhs = self.maps[p - 1].mul(self.source.boundary(p));
                let witness = lhs.first_difference(&rhs).map(|(r, c)| (c, r));
                MapDegreeCheck { degree: p, ok: witness.is_none(), witness }
            })
            .collect();
        ChainMapReport { checks }
    }
}
