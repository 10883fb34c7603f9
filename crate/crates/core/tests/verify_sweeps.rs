use std::collections::BTreeMap;

use lqt_core::algebras::{named, MatrixLieAlgebra, ProAlgebra, ProDecision, StructAlgebra};
use lqt_core::rep_theory::CeModule;
use lqt_core::verify::{run, verify_lqt_level, verify_lqt_pro, RunOptions, SweepConfig, VerifyError, VerifyKind};

fn config(json: &str) -> SweepConfig {
    serde_json::from_str(json).unwrap()
}

fn opts() -> RunOptions {
    RunOptions::default()
}

/// Isotype dimensions of `Λ^p gl_2 k` from weight multiplicities: for the
/// `sl_2` weight `2j` (count of `e_12` minus count of `e_21`), the isotype of
/// highest weight `j` has multiplicity `m(j) - m(j+1)` and dimension `2j+1`.
fn gl2_isotypes(p: usize) -> BTreeMap<i64, usize> {
    // letters e11, e12, e21, e22 with sl_2 weights 0, 1, -1, 0
    let wt = [0i64, 1, -1, 0];
    let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
    for mask in 0u32..16 {
        if mask.count_ones() as usize == p {
            let w: i64 = (0..4).filter(|b| mask >> b & 1 == 1).map(|b| wt[b]).sum();
            *mult.entry(w).or_default() += 1;
        }
    }
    let m = |j: i64| mult.get(&j).copied().unwrap_or(0);
    (0..=p as i64)
        .filter(|&j| m(j) > m(j + 1))
        .map(|j| (j, (m(j) - m(j + 1)) * (2 * j as usize + 1)))
        .collect()
}

#[test]
fn lemma21_table_for_gl2_k() {
    let ce = CeModule::new(MatrixLieAlgebra::new(&named("k").unwrap(), 2), 3);
    let mut totals = Vec::new();
    for p in 0..=3 {
        let got: BTreeMap<i64, usize> = ce
            .isotypic_decomposition(p)
            .unwrap()
            .into_iter()
            .map(|i| (i.label.vector()[0], i.component.dim()))
            .collect();
        assert_eq!(got, gl2_isotypes(p), "degree {p}");
        totals.push(got.values().sum::<usize>());
    }
    assert_eq!(totals, vec![1, 4, 6, 4]);
    let r = run(VerifyKind::Lemma21, &config(r#"{"algebras":["k"],"n_min":2,"n_max":2,"p_max":3}"#), opts()).unwrap();
    assert!(r.passed);
    assert_eq!(r.checks.len(), 8);
}

#[test]
fn lemma22_on_uv() {
    let r = run(VerifyKind::Lemma22, &config(r#"{"algebras":["uv"],"n_min":2,"n_max":2,"p_max":2}"#), opts()).unwrap();
    assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
    assert!(r.checks.iter().all(|c| c.data["closure"] == "U(gl_n k)"));
}

#[test]
fn lemma23_square_pairings() {
    let r = run(VerifyKind::Lemma23, &config(r#"{"algebras":["zero2"],"n_min":2,"n_max":2,"p_max":2}"#), opts()).unwrap();
    assert!(r.passed);
    assert!(r.checks.iter().all(|c| c.data["dim_M"] == c.data["dim_M_dual"]));
    let e = run(VerifyKind::Lemma23, &config(r#"{"algebras":["uv"],"n_max":1,"p_max":1}"#), opts()).unwrap_err();
    assert!(matches!(e, VerifyError::Unsupported(_)));
}

#[test]
fn lqt_levels() {
    let k = named("k").unwrap();
    let r = verify_lqt_level(&k, 1, 3);
    assert_eq!((r.h_dim, r.target_dim, r.isomorphism), (1, 1, true));
    let r = verify_lqt_level(&k, 2, 5);
    assert_eq!((r.h_dim, r.target_dim, r.isomorphism), (0, 0, true));
    // A zero-multiplication line is not H-unital: ∂ = 0, so H_1 = Λ^1 gl_2 A
    let r = verify_lqt_level(&StructAlgebra::zero_mult(1), 1, 2);
    assert_eq!((r.h_dim, r.target_dim, r.isomorphism), (4, 1, false));
    assert_eq!(r.kernel_dim, 3);
    assert!(r.consistent());
}

#[test]
fn lqt_pro_systems() {
    let nil = named("nil3").unwrap();
    let r = verify_lqt_pro(&ProAlgebra::powers(&nil, 3), 1, 3);
    assert_eq!((r.kernel, r.cokernel), (ProDecision::Zero, ProDecision::Zero));
    let r = verify_lqt_pro(&ProAlgebra::constant(&named("k").unwrap(), 2), 1, 3);
    assert!(r.pro_isomorphism() && r.levels.iter().all(|l| l.isomorphism));
    let r = verify_lqt_pro(&ProAlgebra::constant(&StructAlgebra::zero_mult(1), 3), 1, 2);
    assert_eq!(r.kernel, ProDecision::NotDecidedInWindow);
    let sweep = run(
        VerifyKind::LqtPro,
        &config(r#"{"pro":{"system":"powers","algebra":"nil3","window":3},"n_min":3,"n_max":3,"r_max":1}"#),
        opts(),
    )
    .unwrap();
    assert!(sweep.passed);
}

#[test]
fn theorem_sweeps_pass_on_small_cells() {
    let cfg = config(r#"{"algebras":["uv","zero1"],"n_max":2,"p_max":2,"seed":3}"#);
    for kind in [VerifyKind::PhiChainmap, VerifyKind::PhiIso, VerifyKind::Stability, VerifyKind::Lqt] {
        let r = run(kind, &cfg, opts()).unwrap();
        assert!(r.passed, "{}: {:?}", kind.name(), r.failures().next());
    }
    let r = run(VerifyKind::Duality, &config(r#"{"algebras":["zero2"],"n_max":2,"p_max":2}"#), opts()).unwrap();
    assert!(r.passed, "{:?}", r.failures().next());
}

#[test]
fn psi_sweep_reports_the_witness() {
    let r = run(VerifyKind::PsiNotChainmap, &config(r#"{"algebras":["uv"],"n_max":1,"p_max":3}"#), opts()).unwrap();
    assert!(r.passed);
    let w = r.checks.iter().find(|c| c.name == "psi-not-chainmap").unwrap();
    assert!(w.witness.is_some());
}

#[test]
fn precondition_errors() {
    let e = run(VerifyKind::Duality, &config(r#"{"algebras":["uv"],"n_max":1,"p_max":1}"#), opts()).unwrap_err();
    assert!(matches!(e, VerifyError::Unsupported(_)));
    let e = run(VerifyKind::PhiIso, &config(r#"{"algebras":["zero2"],"n_max":7,"n_min":7,"p_max":5}"#), opts())
        .unwrap_err();
    assert!(matches!(e, VerifyError::Oversize { gens: 98, .. }));
    let e = run(VerifyKind::LqtPro, &config(r#"{"algebras":["k"],"n_max":1}"#), opts()).unwrap_err();
    assert!(matches!(e, VerifyError::Config(_)));
    assert!(serde_json::from_str::<SweepConfig>(r#"{"n_max":1,"bogus":2}"#).is_err());
}
