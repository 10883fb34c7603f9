use crate::complexes::koszul::permutation_sign;
use crate::complexes::{tensor, tensor_power, ChainComplex, GradedSpace};
use crate::exact_linear::{image_basis, Rat, SparseMat, SparseVec, Subspace};
use crate::homology_builders::BarWord;

use super::tableaux::all_perms;
use super::SpechtModule;

/// Basis label of `T^m(C^bar A) ⊗ V^α ⊗ V^β`: the bar words and the
/// indices of the two standard tableaux.
pub type SigmaLabel = (Vec<BarWord>, (usize, usize));

pub fn all_permutations(m: usize) -> Vec<Vec<usize>> {
    all_perms(m)
}

/// `T^m(bar) ⊗ V^α ⊗ V^β` with the Specht factors in degree 0.
pub fn sigma_space(
    bar: &ChainComplex<BarWord>,
    m: usize,
    spa: &SpechtModule,
    spb: &SpechtModule,
    pmax: usize,
) -> ChainComplex<SigmaLabel> {
    let mut degrees = vec![Vec::new(); pmax + 1];
    degrees[0] = (0..spa.dim()).flat_map(|x| (0..spb.dim()).map(move |y| (x, y))).collect();
    let sp = ChainComplex::from_fn(GradedSpace::new(degrees), |_, _| Vec::new());
    tensor(&tensor_power(bar, m, pmax), &sp, pmax)
}

/// Matrix of `σ` (`perm[i] = σ(i)`) on degree `p`: factor `i` of the bar
/// tensor moves to position `σ(i)` with the Koszul sign for word lengths,
/// and the Specht factors transform by their representations.
pub fn sigma_action_matrix(
    w: &ChainComplex<SigmaLabel>,
    p: usize,
    perm: &[usize],
    spa: &SpechtModule,
    spb: &SpechtModule,
) -> SparseMat {
    let m = perm.len();
    let mut inv = vec![0usize; m];
    for (i, &s) in perm.iter().enumerate() {
        inv[s] = i;
    }
    let (ma, mb) = (spa.action(perm), spb.action(perm));
    let cols = w
        .space()
        .basis(p)
        .iter()
        .map(|(words, (x, y))| {
            let degrees: Vec<usize> = words.iter().map(|b| b.len()).collect();
            let sign = permutation_sign(&degrees, &inv);
            let moved: Vec<BarWord> = inv.iter().map(|&i| words[i].clone()).collect();
            let mut e = Vec::new();
            for (x2, cx) in ma.column(*x).iter() {
                for (y2, cy) in mb.column(*y).iter() {
                    let idx = w.space().index_of(p, &(moved.clone(), (*x2, *y2))).expect("permuted label");
                    let c = cx * cy;
                    e.push((idx, if sign > 0 { c } else { -c }));
                }
            }
            SparseVec::from_pairs(e)
        })
        .collect();
    SparseMat::from_columns(w.dim(p), cols)
}

/// `(1/m!) Σ_σ σ` on degree `p`.
pub fn averaging_projector(
    w: &ChainComplex<SigmaLabel>,
    p: usize,
    m: usize,
    spa: &SpechtModule,
    spb: &SpechtModule,
) -> SparseMat {
    let perms = all_permutations(m);
    let mut acc = SparseMat::zero(w.dim(p), w.dim(p));
    for s in &perms {
        acc = acc.add(&sigma_action_matrix(w, p, s, spa, spb));
    }
    acc.scale(&Rat::new(1, perms.len() as i64))
}

/// `Σ_m`-invariants of degree `p`, as the image of the averaging projector.
pub fn sigma_invariants(
    w: &ChainComplex<SigmaLabel>,
    p: usize,
    m: usize,
    spa: &SpechtModule,
    spb: &SpechtModule,
) -> Subspace {
    image_basis(&averaging_projector(w, p, m, spa, spb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::StructAlgebra;
    use crate::homology_builders::bar_complex;
    use crate::rep_theory::Partition;

    fn sp(s: &str) -> SpechtModule {
        SpechtModule::new(&s.parse::<Partition>().unwrap()).unwrap()
    }

    #[test]
    fn trivial_group_keeps_everything() {
        let bar = bar_complex(&StructAlgebra::zero_mult(2), 3);
        let (a, b) = (sp("1"), sp("1"));
        let w = sigma_space(&bar, 1, &a, &b, 3);
        for p in 0..=3 {
            assert_eq!(sigma_invariants(&w, p, 1, &a, &b).dim(), w.dim(p));
        }
    }

    #[test]
    fn odd_factors_antisymmetrize() {
        let bar = bar_complex(&StructAlgebra::zero_mult(2), 2);
        let (a, b) = (sp("2"), sp("2"));
        let w = sigma_space(&bar, 2, &a, &b, 2);
        assert_eq!(w.dim(2), 4);
        let inv = sigma_invariants(&w, 2, 2, &a, &b);
        assert_eq!(inv.dim(), 1);
        // the invariant is x⊗y - y⊗x
        let v = &inv.basis()[0];
        assert_eq!(v.nnz(), 2);
    }

    #[test]
    fn projector_is_idempotent() {
        let bar = bar_complex(&StructAlgebra::zero_mult(2), 4);
        let (a, b) = (sp("2,1"), sp("2,1"));
        let w = sigma_space(&bar, 3, &a, &b, 4);
        for p in 3..=4 {
            let e = averaging_projector(&w, p, 3, &a, &b);
            assert_eq!(e.mul(&e), e);
        }
    }
}
