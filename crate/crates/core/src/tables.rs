//! Serializable homology and isotype tables shared by the command line and
//! the web front end.

use std::str::FromStr;

use serde::Serialize;

use crate::algebras::{MatrixLieAlgebra, StructAlgebra};
use crate::complexes::{ChainComplex, Label};
use crate::exact_linear::Rat;
use crate::homology_builders::{bar_complex, chevalley_eilenberg, connes_complex};
use crate::rep_theory::{CeModule, IsotypeRow};
use crate::verify::binomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("requested basis has {size} elements ({what}), above the limit {limit}")]
    Oversize { what: String, size: u128, limit: u128 },
    #[error("unknown complex `{0}`, expected ce, cyclic or bar")]
    UnknownComplex(String),
    #[error("{0}")]
    Compute(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Ce,
    Cyclic,
    Bar,
}

impl FromStr for ComplexKind {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, TableError> {
        match s {
            "ce" => Ok(ComplexKind::Ce),
            "cyclic" => Ok(ComplexKind::Cyclic),
            "bar" => Ok(ComplexKind::Bar),
            _ => Err(TableError::UnknownComplex(s.to_string())),
        }
    }
}

impl ComplexKind {
    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::Ce => "ce",
            ComplexKind::Cyclic => "cyclic",
            ComplexKind::Bar => "bar",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologyDegree {
    pub degree: usize,
    pub dim: usize,
    /// Cycles completing a basis of the boundaries, as `(basis element, coefficient)` lists.
    pub representatives: Vec<Vec<(String, Rat)>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologyTable {
    pub complex: String,
    pub algebra: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub chain_dims: Vec<usize>,
    pub degrees: Vec<HomologyDegree>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecomposeDegree {
    pub degree: usize,
    pub total: usize,
    pub isotypes: Vec<IsotypeRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecomposeTable {
    pub algebra: String,
    pub n: usize,
    pub degrees: Vec<DecomposeDegree>,
}

fn guard(what: String, size: u128, limit: u128) -> Result<(), TableError> {
    if size > limit {
        return Err(TableError::Oversize { what, size, limit });
    }
    Ok(())
}

/// Number of words of length `len` over `dim` letters, saturating.
fn words(dim: usize, len: usize) -> u128 {
    (0..len).fold(1u128, |acc, _| acc.saturating_mul(dim as u128))
}

fn degrees<L: Label>(
    c: &ChainComplex<L>,
    max_degree: usize,
    name: impl Fn(&L) -> String,
) -> Result<Vec<HomologyDegree>, TableError> {
    (0..=max_degree)
        .map(|p| {
            let h = c.homology(p).map_err(|e| TableError::Compute(e.to_string()))?;
            let representatives = h
                .representatives
                .iter()
                .map(|v| v.iter().map(|(i, q)| (name(c.space().label(p, *i)), q.clone())).collect())
                .collect();
            Ok(HomologyDegree { degree: p, dim: h.dim, representatives })
        })
        .collect()
}

fn word_name(a: &StructAlgebra, w: &[u16]) -> String {
    let b = a.basis_names();
    w.iter().map(|&x| b[x as usize].as_str()).collect::<Vec<_>>().join("⊗")
}

/// Homology in degrees `0..=max_degree`. The complex is built one degree
/// higher so that the top requested group is defined; `limit` caps the size
/// of that top chain group.
pub fn homology_table(
    kind: ComplexKind,
    name: &str,
    a: &StructAlgebra,
    n: usize,
    max_degree: usize,
    limit: u128,
) -> Result<HomologyTable, TableError> {
    let top = max_degree + 1;
    let (n, chain_dims, degrees) = match kind {
        ComplexKind::Ce => {
            let gens = n * n * a.dim();
            guard(format!("C({gens},{top}) for Λ^{top} gl_{n}"), binomial(gens as u128, top as u128), limit)?;
            let g = MatrixLieAlgebra::new(a, n);
            let c = chevalley_eilenberg(&g, top);
            let d = degrees(&c, max_degree, |w| w.iter().map(|&x| g.name(x as usize)).collect::<Vec<_>>().join(" ∧ "))?;
            (Some(n), c.dims(), d)
        }
        ComplexKind::Cyclic => {
            guard(format!("{}^{} tensor words", a.dim(), top + 1), words(a.dim(), top + 1), limit)?;
            let c = connes_complex(a, top);
            let d = degrees(&c, max_degree, |w| format!("[{}]", word_name(a, w)))?;
            (None, c.dims(), d)
        }
        ComplexKind::Bar => {
            guard(format!("{}^{} tensor words", a.dim(), top + 1), words(a.dim(), top + 1), limit)?;
            let c = bar_complex(a, top);
            let d = degrees(&c, max_degree, |w| word_name(a, w))?;
            (None, c.dims(), d)
        }
    };
    Ok(HomologyTable {
        complex: kind.name().into(),
        algebra: name.into(),
        n,
        chain_dims: chain_dims[..=max_degree].to_vec(),
        degrees,
    })
}

/// Isotypic decomposition of `Λ^p gl_n A` for `p ≤ max_degree`.
pub fn decompose_table(
    name: &str,
    a: &StructAlgebra,
    n: usize,
    max_degree: usize,
    limit: u128,
) -> Result<DecomposeTable, TableError> {
    let gens = n * n * a.dim();
    let worst = (0..=max_degree).map(|p| binomial(gens as u128, p as u128)).max().unwrap_or(1);
    guard(format!("largest C({gens},p) for p ≤ {max_degree}"), worst, limit)?;
    let ce = CeModule::new(MatrixLieAlgebra::new(a, n), max_degree);
    let degrees = (0..=max_degree)
        .map(|p| {
            let isotypes = ce.isotype_table(p).map_err(|e| TableError::Compute(e.to_string()))?;
            Ok(DecomposeDegree { degree: p, total: ce.dim(p), isotypes })
        })
        .collect::<Result<_, TableError>>()?;
    Ok(DecomposeTable { algebra: name.into(), n, degrees })
}

impl DecomposeTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,label,highest_dim,component_dim\n");
        for d in &self.degrees {
            for r in &d.isotypes {
                out.push_str(&format!("{},\"{}\",{},{}\n", d.degree, r.label, r.highest_dim, r.component_dim));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::named;

    #[test]
    fn cyclic_table_of_k() {
        let t = homology_table(ComplexKind::Cyclic, "k", &named("k").unwrap(), 1, 4, u128::MAX).unwrap();
        let dims: Vec<usize> = t.degrees.iter().map(|d| d.dim).collect();
        assert_eq!(dims, vec![1, 0, 1, 0, 1]);
        assert_eq!(t.chain_dims.len(), 5);
    }

    #[test]
    fn oversize_and_parse_errors() {
        let e = homology_table(ComplexKind::Ce, "zero2", &named("zero2").unwrap(), 7, 5, 300_000).unwrap_err();
        assert!(matches!(e, TableError::Oversize { size: 1_052_618_392, .. }));
        assert_eq!("cyclic".parse::<ComplexKind>().unwrap(), ComplexKind::Cyclic);
        assert!("hochschild".parse::<ComplexKind>().is_err());
    }

    #[test]
    fn decompose_totals() {
        let t = decompose_table("k", &named("k").unwrap(), 2, 3, u128::MAX).unwrap();
        assert_eq!(t.degrees.iter().map(|d| d.total).collect::<Vec<_>>(), vec![1, 4, 6, 4]);
        assert!(t.to_csv().contains("1,\"[(1),(1)]_2\",1,3"));
    }
}
