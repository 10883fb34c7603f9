use serde::{Deserialize, Serialize};

use crate::algebras::{named, AlgebraJson, ProAlgebra, ProAlgebraJson, StructAlgebra};
use crate::rep_theory::{labels_up_to, Partition, WeightLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("unknown named algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("{0}")]
    Bounds(String),
    #[error("this sweep needs a `pro` entry")]
    MissingPro,
    #[error("this sweep needs at least one algebra")]
    MissingAlgebra,
}

/// A corpus name or an inline structure-constant table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Named(String),
    Inline(AlgebraJson),
}

impl AlgebraSpec {
    pub fn resolve(&self, idx: usize) -> Result<(String, StructAlgebra), ConfigError> {
        match self {
            AlgebraSpec::Named(s) => {
                named(s).map(|a| (s.clone(), a)).ok_or_else(|| ConfigError::UnknownAlgebra(s.clone()))
            }
            AlgebraSpec::Inline(j) => StructAlgebra::from_json(j)
                .map(|a| (format!("inline{idx}"), a))
                .map_err(|e| ConfigError::InvalidAlgebra(e.to_string())),
        }
    }
}

/// An explicit pro-algebra, or one built from an algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ProSpec {
    Built {
        /// `constant` or `powers`.
        system: String,
        algebra: AlgebraSpec,
        window: usize,
    },
    Inline(ProAlgebraJson),
}

impl ProSpec {
    pub fn resolve(&self) -> Result<(String, ProAlgebra), ConfigError> {
        match self {
            ProSpec::Built { system, algebra, window } => {
                if *window == 0 {
                    return Err(ConfigError::Bounds("window must be positive".into()));
                }
                let (name, a) = algebra.resolve(0)?;
                match system.as_str() {
                    "constant" => Ok((format!("constant({name})"), ProAlgebra::constant(&a, *window))),
                    "powers" => Ok((format!("powers({name})"), ProAlgebra::powers(&a, *window))),
                    s => Err(ConfigError::Bounds(format!("unknown pro system `{s}`"))),
                }
            }
            ProSpec::Inline(j) => ProAlgebra::from_json(j)
                .map(|p| ("inline".to_string(), p))
                .map_err(|e| ConfigError::InvalidAlgebra(e.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelSpec {
    pub alpha: Partition,
    pub beta: Partition,
}

fn one() -> usize {
    1
}

/// Input of every sweep. Unused fields are ignored by sweeps that do not
/// need them, but unknown fields are rejected.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub algebras: Vec<AlgebraSpec>,
    #[serde(default)]
    pub pro: Option<ProSpec>,
    #[serde(default = "one")]
    pub n_min: usize,
    pub n_max: usize,
    #[serde(default)]
    pub p_max: usize,
    /// Labels `(α, β)`; all labels with `m ≤ p` and `l(α)+l(β) ≤ n` when absent.
    #[serde(default)]
    pub labels: Option<Vec<LabelSpec>>,
    #[serde(default = "one")]
    pub r_max: usize,
    /// Seed for the random coefficient vectors used in spot checks.
    #[serde(default)]
    pub seed: u64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_min == 0 || self.n_max < self.n_min {
            return Err(ConfigError::Bounds(format!("need 1 ≤ n_min ≤ n_max, got {}..{}", self.n_min, self.n_max)));
        }
        if self.r_max == 0 {
            return Err(ConfigError::Bounds("r_max must be positive".into()));
        }
        Ok(())
    }

    pub fn ns(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }

    pub fn resolved_algebras(&self) -> Result<Vec<(String, StructAlgebra)>, ConfigError> {
        if self.algebras.is_empty() {
            return Err(ConfigError::MissingAlgebra);
        }
        self.algebras.iter().enumerate().map(|(i, s)| s.resolve(i)).collect()
    }

    /// Labels for `gl_n` with `m ≤ mmax`.
    pub fn labels_for(&self, n: usize, mmax: usize) -> Vec<WeightLabel> {
        match &self.labels {
            None => labels_up_to(n, mmax),
            Some(ls) => ls
                .iter()
                .filter(|l| l.alpha.size() <= mmax)
                .filter_map(|l| WeightLabel::new(l.alpha.clone(), l.beta.clone(), n))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_named_and_inline() {
        let c: SweepConfig = serde_json::from_str(
            r#"{"algebras":["uv",{"dim":1,"basis":["x"],"mult":[]}],"n_max":2,"p_max":2,
                "labels":[{"alpha":[1],"beta":[1]}]}"#,
        )
        .unwrap();
        c.validate().unwrap();
        let algs = c.resolved_algebras().unwrap();
        assert_eq!(algs[0].0, "uv");
        assert_eq!(algs[1].0, "inline1");
        assert_eq!(c.labels_for(2, 1).len(), 1);
        assert_eq!(c.labels_for(2, 0).len(), 0);
    }

    #[test]
    fn rejects_unknown_fields_and_bad_bounds() {
        assert!(serde_json::from_str::<SweepConfig>(r#"{"n_max":2,"bogus":1}"#).is_err());
        let c: SweepConfig = serde_json::from_str(r#"{"n_min":3,"n_max":2}"#).unwrap();
        assert!(c.validate().is_err());
        let c: SweepConfig = serde_json::from_str(r#"{"algebras":["nope"],"n_max":2}"#).unwrap();
        assert_eq!(c.resolved_algebras().unwrap_err(), ConfigError::UnknownAlgebra("nope".into()));
    }

    #[test]
    fn pro_specs() {
        let p: ProSpec = serde_json::from_str(r#"{"system":"powers","algebra":"nil3","window":3}"#).unwrap();
        let (name, pa) = p.resolve().unwrap();
        assert_eq!(name, "powers(nil3)");
        assert_eq!(pa.window(), 3);
    }
}
