//! Theorem-level verification sweeps producing machine-readable reports.

mod config;
mod lemmas;
mod lqt;
mod report;
mod theorem;

pub use config::{AlgebraSpec, ConfigError, LabelSpec, ProSpec, SweepConfig};
pub use lemmas::{verify_lemma21, verify_lemma22, verify_lemma23};
pub use lqt::{verify_lqt_level, verify_lqt_pro, LqtLevelReport, LqtProReport};
pub use report::{Cell, Check, Report};
pub use theorem::{verify_duality, verify_phi_chainmap, verify_phi_iso, verify_psi_not_chainmap, verify_stability};

use rayon::prelude::*;

use crate::exact_linear::Subspace;

/// Default cap on `C(n²·dim A, p)`.
pub const DEFAULT_MAX_BASIS: u128 = 300_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("basis of Λ^{p} gl_{n}A with dim A = {dim} has C({gens},{p}) = {size} elements, above the limit {limit}")]
    Oversize { n: usize, dim: usize, p: usize, gens: usize, size: u128, limit: u128 },
    #[error("{0}")]
    Unsupported(String),
}

/// Which sweep to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyKind {
    PhiChainmap,
    PhiIso,
    PsiNotChainmap,
    Duality,
    Lemma21,
    Lemma22,
    Lemma23,
    Stability,
    Lqt,
    LqtPro,
}

impl VerifyKind {
    pub const ALL: [VerifyKind; 10] = [
        VerifyKind::PhiChainmap,
        VerifyKind::PhiIso,
        VerifyKind::PsiNotChainmap,
        VerifyKind::Duality,
        VerifyKind::Lemma21,
        VerifyKind::Lemma22,
        VerifyKind::Lemma23,
        VerifyKind::Stability,
        VerifyKind::Lqt,
        VerifyKind::LqtPro,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyKind::PhiChainmap => "phi-chainmap",
            VerifyKind::PhiIso => "phi-iso",
            VerifyKind::PsiNotChainmap => "psi-not-chainmap",
            VerifyKind::Duality => "duality",
            VerifyKind::Lemma21 => "lemma21",
            VerifyKind::Lemma22 => "lemma22",
            VerifyKind::Lemma23 => "lemma23",
            VerifyKind::Stability => "stability",
            VerifyKind::Lqt => "lqt",
            VerifyKind::LqtPro => "lqt-pro",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// Execution limits shared by all sweeps.
#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// Worker threads; `0` means the rayon default.
    pub jobs: usize,
    pub max_basis: u128,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { jobs: 0, max_basis: DEFAULT_MAX_BASIS }
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Refuses a cell whose exterior power exceeds the limit.
pub fn check_size(n: usize, dim: usize, p: usize, limit: u128) -> Result<(), VerifyError> {
    let gens = n * n * dim;
    let size = binomial(gens as u128, p as u128);
    if size > limit {
        return Err(VerifyError::Oversize { n, dim, p, gens, size, limit });
    }
    Ok(())
}

/// First basis vector of `a` outside `b` (or of `b` outside `a`), reported by
/// its leading coordinate.
pub(crate) fn subspace_mismatch(a: &Subspace, b: &Subspace, names: (&str, &str)) -> Option<serde_json::Value> {
    let outside = |x: &Subspace, y: &Subspace| x.basis().iter().find(|v| !y.contains(v)).and_then(|v| v.leading().map(|(i, _)| i));
    if let Some(i) = outside(a, b) {
        return Some(serde_json::json!({ "vector_in": names.0, "missing_from": names.1, "leading_index": i }));
    }
    outside(b, a).map(|i| serde_json::json!({ "vector_in": names.1, "missing_from": names.0, "leading_index": i }))
}

/// Runs independent cells on a bounded pool; results keep the input order.
pub(crate) fn run_cells<C: Sync, T: Send>(cells: &[C], jobs: usize, f: impl Fn(&C) -> T + Sync + Send) -> Vec<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| cells.par_iter().map(&f).collect())
}

/// Runs the sweep `kind` on `cfg`.
pub fn run(kind: VerifyKind, cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    cfg.validate()?;
    let start = std::time::Instant::now();
    let mut report = match kind {
        VerifyKind::PhiChainmap => verify_phi_chainmap(cfg, opts),
        VerifyKind::PhiIso => verify_phi_iso(cfg, opts),
        VerifyKind::PsiNotChainmap => verify_psi_not_chainmap(cfg, opts),
        VerifyKind::Duality => verify_duality(cfg, opts),
        VerifyKind::Lemma21 => verify_lemma21(cfg, opts),
        VerifyKind::Lemma22 => verify_lemma22(cfg, opts),
        VerifyKind::Lemma23 => verify_lemma23(cfg, opts),
        VerifyKind::Stability => verify_stability(cfg, opts),
        VerifyKind::Lqt => lqt::verify_lqt_sweep(cfg, opts),
        VerifyKind::LqtPro => lqt::verify_lqt_pro_sweep(cfg, opts),
    }?;
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_guard() {
        assert_eq!(binomial(18, 4), 3060);
        assert_eq!(binomial(49, 3), 18424);
        assert_eq!(binomial(3, 5), 0);
        assert!(check_size(3, 2, 4, DEFAULT_MAX_BASIS).is_ok());
        let e = check_size(7, 2, 5, DEFAULT_MAX_BASIS).unwrap_err();
        assert!(matches!(e, VerifyError::Oversize { gens: 98, .. }));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in VerifyKind::ALL {
            assert_eq!(VerifyKind::parse(k.name()), Some(k));
        }
        assert_eq!(VerifyKind::parse("nope"), None);
    }
}
