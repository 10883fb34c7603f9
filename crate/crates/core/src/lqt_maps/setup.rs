use crate::algebras::{MatrixLieAlgebra, StructAlgebra};
use crate::complexes::{symmetric_algebra_complex, tensor, ChainComplex, Monomial};
use crate::exact_linear::{SparseMat, SparseVec, Subspace};
use crate::homology_builders::{bar_complex, connes_complex, BarWord, CyclicWord};
use crate::rep_theory::{
    averaging_projector, sigma_space, CeModule, SigmaLabel, SpechtModule, SpechtSizeError, Tableau, WeightLabel,
};

/// Basis label of `R'(A)`.
pub type RLabel = (Monomial<CyclicWord>, SigmaLabel);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LqtError {
    #[error("label {0} needs l(α)+l(β) ≤ n")]
    LabelTooLong(String),
    #[error(transparent)]
    Specht(#[from] SpechtSizeError),
    #[error("degree {0} exceeds the constructed range")]
    Degree(usize),
}

/// All complexes involved in the comparison for one `(A, n, [α,β]_n)`,
/// truncated at `pmax`.
#[derive(Clone, Debug)]
pub struct LqtSetup {
    pub label: WeightLabel,
    pub ce: CeModule,
    pub cyclic: ChainComplex<CyclicWord>,
    pub lambda: ChainComplex<Monomial<CyclicWord>>,
    pub bar: ChainComplex<BarWord>,
    pub spa: SpechtModule,
    pub spb: SpechtModule,
    pub sigma: ChainComplex<SigmaLabel>,
    pub rprime: ChainComplex<RLabel>,
    pub pmax: usize,
}

impl LqtSetup {
    pub fn new(a: &StructAlgebra, n: usize, label: &WeightLabel, pmax: usize) -> Result<Self, LqtError> {
        if label.alpha.len() + label.beta.len() > n {
            return Err(LqtError::LabelTooLong(label.to_string()));
        }
        let label = WeightLabel { n, ..label.clone() };
        let ce = CeModule::new(MatrixLieAlgebra::new(a, n), pmax);
        let cyclic = connes_complex(a, pmax.saturating_sub(1));
        let lambda = symmetric_algebra_complex(&cyclic.shift_down().truncate(pmax), pmax)
            .expect("shifted complex has no degree-0 part");
        let bar = bar_complex(a, pmax);
        let spa = SpechtModule::new(&label.alpha)?;
        let spb = SpechtModule::new(&label.beta)?;
        let sigma = sigma_space(&bar, label.m(), &spa, &spb, pmax);
        let rprime = tensor(&lambda, &sigma, pmax);
        Ok(LqtSetup { label, ce, cyclic, lambda, bar, spa, spb, sigma, rprime, pmax })
    }

    pub fn n(&self) -> usize {
        self.ce.n()
    }

    pub fn m(&self) -> usize {
        self.label.m()
    }

    pub fn tableaux(&self) -> (&[Tableau], &[Tableau]) {
        (&self.spa.basis, &self.spb.basis)
    }

    /// Averaging projector on `R'_p` (trivial on the `Λ` factor).
    pub fn projector(&self, p: usize) -> SparseMat {
        let per_degree: Vec<SparseMat> =
            (0..=p).map(|q| averaging_projector(&self.sigma, q, self.m(), &self.spa, &self.spb)).collect();
        let space = self.rprime.space();
        let cols = space
            .basis(p)
            .iter()
            .map(|(mono, sl)| {
                let q = p - mono.iter().map(|g| g.1).sum::<usize>();
                let k = self.sigma.space().index_of(q, sl).expect("sigma label");
                SparseVec::from_pairs(per_degree[q].column(k).iter().map(|(k2, c)| {
                    let l2 = (mono.clone(), self.sigma.space().label(q, *k2).clone());
                    (space.index_of(p, &l2).expect("R' label"), c.clone())
                }))
            })
            .collect();
        SparseMat::from_columns(self.rprime.dim(p), cols)
    }

    /// `R_p = (R'_p)^{Σ_m}`.
    pub fn invariants(&self, p: usize) -> Subspace {
        crate::exact_linear::image_basis(&self.projector(p))
    }

    /// `M_{[α,β]_n} C_p`.
    pub fn highest(&self, p: usize) -> Subspace {
        self.ce.highest_weight_space(p, &self.label)
    }
}
