use serde::Serialize;

use crate::algebras::{is_pro_zero, ProAlgebra, ProDecision, StructAlgebra};
use crate::complexes::{mono_mul, Homology, Monomial};
use crate::exact_linear::{image_basis, kernel_basis, rank, Rat, Solver, SparseMat, SparseVec, Subspace};
use crate::homology_builders::{canonical_cyclic, induced_homology_map, tensor_map_word, wedge_of_vectors, CyclicWord};
use crate::lqt_maps::LqtSetup;
use crate::rep_theory::WeightLabel;

use super::{check_size, run_cells, Cell, Check, Report, RunOptions, SweepConfig, VerifyError};

/// `φ^n_r : H_r(gl_n A) → Λ(HC(A)[-1])_r` and its levelwise decomposition.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LqtLevelReport {
    pub n: usize,
    pub r: usize,
    pub h_dim: usize,
    pub target_dim: usize,
    pub image_rank: usize,
    pub kernel_dim: usize,
    /// Dimension of the nontrivial isotypes of `H_r(gl_n A)`.
    pub nontrivial_dim: usize,
    /// `φ` vanishes on the nontrivial isotypes.
    pub nontrivial_killed: bool,
    pub surjective: bool,
    pub isomorphism: bool,
}

impl LqtLevelReport {
    /// The bookkeeping that must hold for every algebra: the kernel is the
    /// nontrivial part, and `φ` is onto once `n > r`.
    pub fn consistent(&self) -> bool {
        self.nontrivial_killed
            && self.kernel_dim == self.nontrivial_dim
            && self.h_dim == self.image_rank + self.kernel_dim
            && (self.n <= self.r || self.surjective)
    }
}

/// Homology on both sides of `φ` in degree `r`, with the induced matrix.
struct LevelData {
    setup: LqtSetup,
    src: Homology,
    tgt: Homology,
    phi: SparseMat,
}

fn level_data(a: &StructAlgebra, r: usize, n: usize) -> LevelData {
    let setup = LqtSetup::new(a, n, &WeightLabel::trivial(n), r + 1).expect("trivial label fits every n");
    let src = setup.ce.complex.homology(r).expect("degree in range");
    let tgt = setup.rprime.homology(r).expect("degree in range");
    let phi = induced_homology_map(&setup.rprime, &src, &tgt, |v| setup.phi_prime_apply(r, v))
        .expect("φ' is a chain map");
    LevelData { setup, src, tgt, phi }
}

/// Compares `H_r(gl_n A)` with `Λ(HC(A)[-1])_r` through `φ`.
pub fn verify_lqt_level(a: &StructAlgebra, r: usize, n: usize) -> LqtLevelReport {
    let LevelData { setup, src, tgt, phi } = level_data(a, r, n);
    let image_rank = rank(&phi);
    // e_ij·z for i ≠ j spans the nontrivial isotypes of the homology
    let moved = setup.ce.nontrivial_part(r, &src.representatives);
    let nontrivial = Subspace::from_vectors(setup.ce.dim(r), &moved).sum(&src.boundaries).expect("same space");
    let nontrivial_dim = nontrivial.dim() - src.boundaries.dim();
    let nontrivial_killed = moved.iter().all(|v| tgt.boundaries.contains(&setup.phi_prime_apply(r, v)));
    let kernel_dim = src.dim - image_rank;
    LqtLevelReport {
        n,
        r,
        h_dim: src.dim,
        target_dim: tgt.dim,
        image_rank,
        kernel_dim,
        nontrivial_dim,
        nontrivial_killed,
        surjective: image_rank == tgt.dim,
        isomorphism: image_rank == tgt.dim && kernel_dim == 0,
    }
}

/// Kernel and cokernel of `φ_r` as pro-vector spaces over the window.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LqtProReport {
    pub n: usize,
    pub r: usize,
    pub window: usize,
    pub levels: Vec<LqtLevelReport>,
    pub kernel_dims: Vec<usize>,
    pub cokernel_dims: Vec<usize>,
    pub kernel: ProDecision,
    pub cokernel: ProDecision,
}

impl LqtProReport {
    pub fn pro_isomorphism(&self) -> bool {
        self.kernel == ProDecision::Zero && self.cokernel == ProDecision::Zero
    }
}

fn wedge_map(data_hi: &LevelData, data_lo: &LevelData, sigma: &SparseMat, r: usize) -> impl Fn(&SparseVec) -> SparseVec {
    let (g_hi, g_lo) = (data_hi.setup.ce.g.clone(), data_lo.setup.ce.g.clone());
    let (sp_hi, sp_lo) = (data_hi.setup.ce.complex.space().clone(), data_lo.setup.ce.complex.space().clone());
    let sigma = sigma.clone();
    move |v: &SparseVec| {
        let mut acc: Vec<(usize, Rat)> = Vec::new();
        for (i, c) in v.iter() {
            let letters: Vec<SparseVec> = sp_hi
                .label(r, *i)
                .iter()
                .map(|&x| {
                    let (row, col, s) = g_hi.decode(x as usize);
                    SparseVec::from_pairs(sigma.column(s).iter().map(|(t, y)| (g_lo.index(row, col, *t), y.clone())))
                })
                .collect();
            for (w, y) in wedge_of_vectors(&letters) {
                acc.push((sp_lo.index_of(r, &w).expect("wedge word"), &y * c));
            }
        }
        SparseVec::from_pairs(acc)
    }
}

fn lambda_map(data_hi: &LevelData, data_lo: &LevelData, sigma: &SparseMat, r: usize) -> impl Fn(&SparseVec) -> SparseVec {
    let (sp_hi, sp_lo) = (data_hi.setup.rprime.space().clone(), data_lo.setup.rprime.space().clone());
    let sigma = sigma.clone();
    move |v: &SparseVec| {
        let mut acc: Vec<(usize, Rat)> = Vec::new();
        for (i, c) in v.iter() {
            let (mono, sl) = sp_hi.label(r, *i);
            let mut terms: Vec<(Monomial<CyclicWord>, Rat)> = vec![(Vec::new(), c.clone())];
            for (w, deg) in mono {
                let mut next = Vec::new();
                for (img, y) in tensor_map_word(&sigma, w) {
                    let Some((cw, s)) = canonical_cyclic(&img) else { continue };
                    for (m, x) in &terms {
                        if let Some((prod, s2)) = mono_mul(m, &vec![(cw.clone(), *deg)]) {
                            let coef = x * &y;
                            next.push((prod, if s * s2 > 0 { coef } else { -coef }));
                        }
                    }
                }
                terms = next;
            }
            for (m, x) in terms {
                acc.push((sp_lo.index_of(r, &(m, sl.clone())).expect("R' label"), x));
            }
        }
        SparseVec::from_pairs(acc)
    }
}

/// Expresses each column of `m` in the basis `gens ∪ keep` and returns the
/// `keep` coordinates.
fn coordinates_mod(dim: usize, gens: &[SparseVec], keep: &[SparseVec], vs: &[SparseVec]) -> SparseMat {
    let mut all = gens.to_vec();
    all.extend(keep.iter().cloned());
    let solver = Solver::new(dim, &all).expect("independent");
    let cols = vs
        .iter()
        .map(|v| SparseVec::from_dense(&solver.solve(v).expect("in span")[gens.len()..]))
        .collect();
    SparseMat::from_columns(keep.len(), cols)
}

/// Decides within the window whether the kernel and cokernel systems of `φ_r`
/// are pro-zero.
pub fn verify_lqt_pro(pro: &ProAlgebra, r: usize, n: usize) -> LqtProReport {
    let data: Vec<LevelData> = pro.levels().iter().map(|a| level_data(a, r, n)).collect();
    let levels = pro.levels().iter().map(|a| verify_lqt_level(a, r, n)).collect();
    let kernels: Vec<Subspace> = data.iter().map(|d| kernel_basis(&d.phi)).collect();
    let images: Vec<Subspace> = data.iter().map(|d| image_basis(&d.phi)).collect();
    let cokernels: Vec<Vec<SparseVec>> = data
        .iter()
        .zip(&images)
        .map(|(d, im)| Subspace::full(d.tgt.dim).complement_of(im).expect("same space"))
        .collect();
    let mut kmaps = Vec::new();
    let mut cmaps = Vec::new();
    for (k, sigma) in pro.maps().iter().enumerate() {
        let (lo, hi) = (&data[k], &data[k + 1]);
        let src_map = induced_homology_map(&lo.setup.ce.complex, &hi.src, &lo.src, wedge_map(hi, lo, sigma, r))
            .expect("homomorphisms map cycles to cycles");
        let tgt_map = induced_homology_map(&lo.setup.rprime, &hi.tgt, &lo.tgt, lambda_map(hi, lo, sigma, r))
            .expect("homomorphisms map cycles to cycles");
        let moved: Vec<SparseVec> = kernels[k + 1].basis().iter().map(|v| src_map.apply(v)).collect();
        kmaps.push(coordinates_mod(lo.src.dim, &[], kernels[k].basis(), &moved));
        let moved: Vec<SparseVec> = cokernels[k + 1].iter().map(|v| tgt_map.apply(v)).collect();
        cmaps.push(coordinates_mod(lo.tgt.dim, images[k].basis(), &cokernels[k], &moved));
    }
    let kernel_dims: Vec<usize> = kernels.iter().map(|s| s.dim()).collect();
    let cokernel_dims: Vec<usize> = cokernels.iter().map(|c| c.len()).collect();
    LqtProReport {
        n,
        r,
        window: pro.window(),
        levels,
        kernel: is_pro_zero(&kernel_dims, &kmaps),
        cokernel: is_pro_zero(&cokernel_dims, &cmaps),
        kernel_dims,
        cokernel_dims,
    }
}

pub(super) fn verify_lqt_sweep(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    let mut cells = Vec::new();
    for (name, a) in cfg.resolved_algebras()? {
        for n in cfg.ns() {
            check_size(n, a.dim(), cfg.r_max + 1, opts.max_basis)?;
            for r in 1..=cfg.r_max {
                cells.push((name.clone(), a.clone(), n, r));
            }
        }
    }
    let checks = run_cells(&cells, opts.jobs, |(name, a, n, r)| {
        let rep = verify_lqt_level(a, *r, *n);
        let mut c = Check::new("lqt-level", Cell::new(name, *n).degree(*r), rep.consistent())
            .with("isomorphism", rep.isomorphism)
            .with("stable_range", *n > 2 * r)
            .with("h_dim", rep.h_dim)
            .with("target_dim", rep.target_dim)
            .with("image_rank", rep.image_rank)
            .with("kernel_dim", rep.kernel_dim)
            .with("nontrivial_dim", rep.nontrivial_dim);
        if !rep.consistent() {
            c = c.witness(&rep);
        }
        c
    });
    Ok(Report::new("lqt", checks))
}

pub(super) fn verify_lqt_pro_sweep(cfg: &SweepConfig, opts: RunOptions) -> Result<Report, VerifyError> {
    let (name, pro) = cfg.pro.as_ref().ok_or(super::ConfigError::MissingPro)?.resolve()?;
    if pro.window() < 2 {
        return Err(VerifyError::Unsupported("lqt-pro needs a window of at least 2 levels".into()));
    }
    let dim = pro.levels().iter().map(|a| a.dim()).max().unwrap_or(0);
    let mut cells = Vec::new();
    for n in cfg.ns() {
        check_size(n, dim, cfg.r_max + 1, opts.max_basis)?;
        for r in 1..=cfg.r_max {
            cells.push((n, r));
        }
    }
    let checks = run_cells(&cells, opts.jobs, |(n, r)| {
        let rep = verify_lqt_pro(&pro, *r, *n);
        let mut c = Check::new("lqt-pro", Cell::new(&name, *n).degree(*r), rep.pro_isomorphism())
            .with("kernel", rep.kernel)
            .with("cokernel", rep.cokernel)
            .with("kernel_dims", &rep.kernel_dims)
            .with("cokernel_dims", &rep.cokernel_dims);
        if !rep.pro_isomorphism() {
            c = c.witness(&rep);
        }
        c
    });
    Ok(Report::new("lqt-pro", checks))
}
