use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebras::StructAlgebra;
use crate::exact_linear::{Rat, SparseVec};
use crate::lqt_maps::{duality_check, phi_stability, psi_not_chain_witness, LqtSetup};
use crate::rep_theory::WeightLabel;

use super::{check_size, run_cells, subspace_mismatch, Cell, Check, Report, RunOptions, SweepConfig, VerifyError};

type LabelCell = (String, StructAlgebra, usize, WeightLabel);

fn label_cells(cfg: &SweepConfig, opts: RunOptions, extra_n: usize) -> Result<Vec<LabelCell>, VerifyError> {
    let mut cells = Vec::new();
    for (name, a) in cfg.resolved_algebras()? {
        for n in cfg.ns() {
            check_size(n + extra_n, a.dim(), cfg.p_max, opts.max_basis)?;
            for l in cfg.labels_for(n, cfg.p_max) {
                cells.push((name.clone(), a.clone(), n, l));
            }
        }
    }
    Ok(cells)
}

fn setup(a: &StructAlgebra, n: usize, l: &WeightLabel, pmax: usize) -> Result<LqtSetup, VerifyError> {
    LqtSetup::new(a, n, l, pmax).map_err(|e| VerifyError::Unsupported(e.to_string()))
}

fn collect(kind: &str, results: Vec<Result<Vec<Check>, VerifyError>>) -> Result<Report, VerifyError> {
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    Ok(Report::new(kind, checks))
}

/// `φ'` commutes with the boundaries on full bases, plus a seeded random
/// chain in the top degree.
pub fn verify_phi_chainmap(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    let cells = label_cells(cfg, opts, 0)?;
    let results = run_cells(&cells, opts.jobs, |(name, a, n, l)| {
        let s = setup(a, *n, l, cfg.p_max)?;
        let cell = Cell::new(name, *n).label(l);
        let rep = s.phi_chain_map();
        let mut c = Check::new("phi-chainmap", cell.clone(), rep.passed()).with("pmax", cfg.p_max);
        if let Some(f) = rep.first_failure() {
            c = c.witness(f);
        }
        let p = cfg.p_max;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((*n as u64) << 32));
        let v = SparseVec::from_pairs(
            (0..s.ce.dim(p)).map(|i| (i, Rat::from_int(rng.gen_range(-3i64..=3)))).filter(|(_, c)| !c.is_zero()),
        );
        // leading coordinate of φ'(∂v) - ∂φ'(v)
        let diff = if p == 0 {
            None
        } else {
            let lhs = s.phi_prime_apply(p - 1, &s.ce.complex.boundary(p).apply(&v));
            let rhs = s.rprime.boundary(p).apply(&s.phi_prime_apply(p, &v));
            lhs.sub(&rhs).leading().map(|(i, _)| i)
        };
        let mut r = Check::new("phi-chainmap-random", cell.degree(p), diff.is_none()).with("seed", cfg.seed);
        if let Some(i) = diff {
            r = r.witness(serde_json::json!({ "seed": cfg.seed, "row": i }));
        }
        Ok(vec![c, r])
    });
    collect("phi-chainmap", results)
}

/// Theorem-level properties of `φ` in each degree: invariance of the image,
/// injectivity, bijectivity in the stable range.
pub fn verify_phi_iso(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    let cells = label_cells(cfg, opts, 0)?;
    let results = run_cells(&cells, opts.jobs, |(name, a, n, l)| {
        let s = setup(a, *n, l, cfg.p_max)?;
        Ok((0..=cfg.p_max)
            .map(|p| {
                let r = s.phi_report(p);
                let mut c = Check::new("phi-iso", Cell::new(name, *n).label(l).degree(p), r.passed())
                    .with("dim_M", r.m_dim)
                    .with("dim_R", r.r_dim)
                    .with("rank_phi", r.image_rank)
                    .with("invariant", r.invariant_ok)
                    .with("injective", r.injective)
                    .with("bijective", r.bijective)
                    .with("bijective_expected", r.bijective_expected);
                if !r.passed() {
                    c = c.witness(&r);
                }
                c
            })
            .collect())
    });
    collect("phi-iso", results)
}

/// `ψ` is not a chain map (trivial label, degree `p_max`), while its image is
/// the highest weight space in every cell of the sweep.
pub fn verify_psi_not_chainmap(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    if cfg.p_max == 0 {
        return Err(VerifyError::Unsupported("psi-not-chainmap needs p_max ≥ 1".into()));
    }
    let cells = label_cells(cfg, opts, 0)?;
    let results = run_cells(&cells, opts.jobs, |(name, a, n, l)| {
        let s = setup(a, *n, l, cfg.p_max)?;
        let mut out = Vec::new();
        if l.is_trivial() {
            // the failure is only asserted for noncommutative algebras
            let w = psi_not_chain_witness(&s, cfg.p_max);
            let expected = !a.is_commutative();
            let ok = w.is_some() || !expected;
            let mut c = Check::new("psi-not-chainmap", Cell::new(name, *n).degree(cfg.p_max), ok)
                .with("chain_map", w.is_none())
                .with("failure_expected", expected);
            if let Some(w) = w {
                c = c.witness(w);
            } else if !ok {
                c = c.witness(format!("no basis element of R' in degree {} has a discrepancy", cfg.p_max));
            }
            out.push(c);
        }
        for p in 0..=cfg.p_max {
            let image = s.psi_image(p);
            let mismatch = subspace_mismatch(&image, &s.highest(p), ("image", "M"));
            let mut c = Check::new("psi-image", Cell::new(name, *n).label(l).degree(p), mismatch.is_none())
                .with("dim_M", s.highest(p).dim())
                .with("descends", s.psi_polytabloid_descends(p))
                .with("standard_tableau_image_ok", s.psi_prime_image_is_highest(p))
                .with("standard_tableau_descends", s.psi_prime_descends(p));
            if let Some(w) = mismatch {
                c = c.witness(w);
            }
            out.push(c);
        }
        Ok(out)
    });
    collect("psi-not-chainmap", results)
}

/// The duality squares relating `φ'` and `ψ'`, on zero-multiplication spaces.
pub fn verify_duality(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    for (name, a) in cfg.resolved_algebras()? {
        if !a.is_zero_mult() {
            return Err(VerifyError::Unsupported(format!(
                "duality needs zero multiplication, `{name}` has a nonzero product"
            )));
        }
    }
    let cells = label_cells(cfg, opts, 0)?;
    let results = run_cells(&cells, opts.jobs, |(name, a, n, l)| {
        let s = setup(a, *n, l, cfg.p_max)?;
        Ok(duality_check(&s)
            .squares
            .into_iter()
            .map(|sq| {
                let mut c = Check::new(&format!("duality-{}", sq.name), Cell::new(name, *n).label(l).degree(sq.degree), sq.ok);
                if let Some(w) = sq.witness {
                    c = c.witness(w);
                }
                c
            })
            .collect())
    });
    collect("duality", results)
}

/// Compatibility of `φ^n` and `φ^{n+1}` with the corner inclusion.
pub fn verify_stability(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    let mut cells = Vec::new();
    for (name, a) in cfg.resolved_algebras()? {
        for n in cfg.ns() {
            check_size(n + 1, a.dim(), cfg.p_max, opts.max_basis)?;
            for p in 0..=cfg.p_max {
                cells.push((name.clone(), a.clone(), n, p));
            }
        }
    }
    let results = run_cells(&cells, opts.jobs, |(name, a, n, p)| {
        let r = phi_stability(a, *n, *p).map_err(|e| VerifyError::Unsupported(e.to_string()))?;
        let mut c = Check::new("stability", Cell::new(name, *n).degree(*p), r.witness.is_none()).with("checked", r.checked);
        if let Some(w) = r.witness {
            c = c.witness(w);
        }
        Ok(vec![c])
    });
    collect("stability", results)
}
