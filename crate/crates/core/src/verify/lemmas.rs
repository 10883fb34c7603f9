use std::collections::BTreeMap;

use crate::algebras::{MatrixLieAlgebra, StructAlgebra};
use crate::exact_linear::{rank, Subspace};
use crate::rep_theory::{CeModule, Isotype, WeightLabel};

use super::{binomial, check_size, run_cells, subspace_mismatch, Cell, Check, Report, RunOptions, SweepConfig, VerifyError};

type AlgCell = (String, StructAlgebra, usize);

fn alg_cells(cfg: &SweepConfig, opts: RunOptions, top: usize) -> Result<Vec<AlgCell>, VerifyError> {
    let mut cells = Vec::new();
    for (name, a) in cfg.resolved_algebras()? {
        for n in cfg.ns() {
            check_size(n, a.dim(), top, opts.max_basis)?;
            cells.push((name.clone(), a.clone(), n));
        }
    }
    Ok(cells)
}

fn collect(kind: &str, results: Vec<Result<Vec<Check>, VerifyError>>) -> Result<Report, VerifyError> {
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    Ok(Report::new(kind, checks))
}

fn decompositions(ce: &CeModule, top: usize) -> Result<Vec<Vec<Isotype>>, String> {
    (0..=top).map(|p| ce.isotypic_decomposition(p).map_err(|e| e.to_string())).collect()
}

fn component<'a>(iso: &'a [Isotype], l: &WeightLabel) -> Option<&'a Isotype> {
    iso.iter().find(|i| i.label == *l)
}

/// Splitting of `Λ gl_n A` into isotypic subcomplexes, and the equality of
/// the trivial highest weight space with its isotypic component.
pub fn verify_lemma21(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    let cells = alg_cells(cfg, opts, cfg.p_max)?;
    let results = run_cells(&cells, opts.jobs, |(name, a, n)| {
        let ce = CeModule::new(MatrixLieAlgebra::new(a, *n), cfg.p_max);
        let mut out = Vec::new();
        let mut prev: Option<Vec<Isotype>> = None;
        for p in 0..=cfg.p_max {
            let cell = Cell::new(name, *n).degree(p);
            let expected = binomial((n * n * a.dim()) as u128, p as u128) as usize;
            let iso = match ce.isotypic_decomposition(p) {
                Ok(iso) => iso,
                Err(e) => {
                    out.push(Check::new("lemma21-split", cell, false).witness(e.to_string()));
                    prev = None;
                    continue;
                }
            };
            let table: BTreeMap<String, (usize, usize)> =
                iso.iter().map(|i| (i.label.to_string(), (i.highest.dim(), i.component.dim()))).collect();
            let total: usize = iso.iter().map(|i| i.component.dim()).sum();
            // ∂ maps each component of degree p into the same component of degree p-1
            let unstable = prev.as_ref().and_then(|q| {
                iso.iter().find(|i| {
                    let lower = component(q, &i.label)
                        .map(|c| c.component.clone())
                        .unwrap_or_else(|| Subspace::zero(ce.dim(p - 1)));
                    !ce.boundary_stable(p, &i.component, &lower)
                })
            });
            let mut c = Check::new("lemma21-split", cell.clone(), total == expected && unstable.is_none())
                .with("dim", expected)
                .with("isotypes", &table);
            if let Some(i) = unstable {
                c = c.witness(format!("component {} is not boundary-stable", i.label));
            } else if total != expected {
                c = c.witness(format!("isotype dimensions sum to {total}, expected {expected}"));
            }
            out.push(c);
            let trivial = WeightLabel::trivial(*n);
            let m0 = ce.highest_weight_space(p, &trivial);
            let closure = ce.module_closure(p, &m0);
            let mismatch = subspace_mismatch(&closure, &m0, ("closure", "M"));
            let mut c = Check::new("lemma21-trivial", cell, mismatch.is_none())
                .with("dim_M", m0.dim())
                .with("dim_V", closure.dim());
            if let Some(w) = mismatch {
                c = c.witness(w);
            }
            out.push(c);
            prev = Some(iso);
        }
        Ok(out)
    });
    collect("lemma21", results)
}

/// The `gl_n k`-closure of the highest weight homology, plus boundaries,
/// fills the cycles of each isotypic component.
pub fn verify_lemma22(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    let cells = alg_cells(cfg, opts, cfg.p_max + 1)?;
    let results = run_cells(&cells, opts.jobs, |(name, a, n)| {
        let top = cfg.p_max + 1;
        let ce = CeModule::new(MatrixLieAlgebra::new(a, *n), top);
        let isos = decompositions(&ce, top).map_err(VerifyError::Unsupported)?;
        let d = |p: usize| ce.complex.boundary(p);
        let mut out = Vec::new();
        for p in 0..=cfg.p_max {
            let cycles = ce.complex.cycles(p);
            for iso in &isos[p] {
                let upper = component(&isos[p + 1], &iso.label);
                let image = |s: &Subspace| s.image(d(p + 1)).expect("shapes agree");
                let b_v = upper.map_or_else(|| Subspace::zero(ce.dim(p)), |u| image(&u.component));
                let b_m = upper.map_or_else(|| Subspace::zero(ce.dim(p)), |u| image(&u.highest));
                let z_v = cycles.intersection(&iso.component).expect("shapes agree");
                let z_m = cycles.intersection(&iso.highest).expect("shapes agree");
                let reps = z_m.complement_of(&b_m).expect("boundaries of M are cycles of M");
                let closure = ce.module_closure(p, &Subspace::from_vectors(ce.dim(p), &reps));
                let generated = closure.sum(&b_v).expect("shapes agree");
                let ok = generated == z_v;
                let mut c = Check::new("lemma22", Cell::new(name, *n).degree(p).label(&iso.label), ok)
                    .with("dim_H_M", reps.len())
                    .with("dim_H_V", z_v.dim() - b_v.dim())
                    .with("dim_generated", generated.dim() - b_v.dim())
                    .with("closure", "U(gl_n k)");
                if !ok {
                    let missing = z_v.basis().iter().find(|v| !generated.contains(v)).cloned();
                    c = c.witness(missing.map(|v| v.iter().map(|(i, x)| (*i, x.to_string())).collect::<Vec<_>>()));
                }
                out.push(c);
            }
        }
        Ok(out)
    });
    collect("lemma22", results)
}

/// Perfect pairing between the highest weight spaces of `Λ gl_n A` and
/// `Λ gl_n A^∨` induced by the trace form, for zero multiplication.
pub fn verify_lemma23(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    for (name, a) in cfg.resolved_algebras()? {
        if !a.is_zero_mult() {
            return Err(VerifyError::Unsupported(format!(
                "the restriction duality needs zero multiplication, `{name}` has a nonzero product"
            )));
        }
    }
    let mut cells = Vec::new();
    for (name, a, n) in alg_cells(cfg, opts, cfg.p_max)? {
        for l in cfg.labels_for(n, cfg.p_max) {
            cells.push((name.clone(), a.clone(), n, l));
        }
    }
    let results = run_cells(&cells, opts.jobs, |(name, a, n, l)| {
        let ce = CeModule::new(MatrixLieAlgebra::new(a, *n), cfg.p_max);
        // the dual of a zero-multiplication space, with the dual basis
        let dual = CeModule::new(MatrixLieAlgebra::new(&StructAlgebra::zero_mult(a.dim()), *n), cfg.p_max);
        Ok((l.m()..=cfg.p_max)
            .map(|p| {
                let m = ce.highest_weight_space(p, l).basis_matrix();
                let md = dual.highest_weight_space(p, l).basis_matrix();
                // ν pairs a wedge word with the same word of dual letters
                let gram = m.transpose().mul(&md);
                let (rows, cols) = (gram.rows(), gram.cols());
                let r = rank(&gram);
                let ok = rows == cols && r == rows;
                let mut c = Check::new("lemma23", Cell::new(name, *n).degree(p).label(l), ok)
                    .with("dim_M", rows)
                    .with("dim_M_dual", cols)
                    .with("rank", r);
                if !ok {
                    c = c.witness(format!("pairing matrix {rows}x{cols} has rank {r}"));
                }
                c
            })
            .collect())
    });
    collect("lemma23", results)
}
