use crate::exact_linear::{Rat, SparseMat, SparseVec};

use super::{ChainComplex, GradedSpace, Label};

/// The ground field as a complex: one basis vector `()` in degree 0.
pub fn unit_complex(pmax: usize) -> ChainComplex<()> {
    let mut degrees = vec![Vec::new(); pmax + 1];
    degrees[0].push(());
    let space = GradedSpace::new(degrees);
    ChainComplex::from_fn(space, |_, _| Vec::new())
}

fn sign_rat(odd: bool) -> Rat {
    if odd {
        Rat::from_int(-1)
    } else {
        Rat::one()
    }
}

/// `c1 ⊗ c2` truncated at `pmax`, with `d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy`.
/// Degrees of a factor beyond its own truncation are treated as absent, so
/// the result is only valid up to `min(pmax, c1.pmax(), c2.pmax())` unless
/// the factors vanish above their truncation.
pub fn tensor<L1: Label, L2: Label>(
    c1: &ChainComplex<L1>,
    c2: &ChainComplex<L2>,
    pmax: usize,
) -> ChainComplex<(L1, L2)> {
    let mut degrees: Vec<Vec<(L1, L2)>> = Vec::with_capacity(pmax + 1);
    // (a, i, j) coordinates per degree, to build boundaries by index
    let mut coords: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(pmax + 1);
    for p in 0..=pmax {
        let mut labels = Vec::new();
        let mut cs = Vec::new();
        for a in 0..=p {
            let b = p - a;
            for (i, x) in c1.space().basis(a).iter().enumerate() {
                for (j, y) in c2.space().basis(b).iter().enumerate() {
                    labels.push((x.clone(), y.clone()));
                    cs.push((a, i, j));
                }
            }
        }
        degrees.push(labels);
        coords.push(cs);
    }
    let space = GradedSpace::new(degrees);
    // offset of block (a, ·, ·) within degree p
    let offset = |p: usize, a: usize| -> usize {
        (0..a).map(|a2| c1.dim(a2) * c2.dim(p - a2)).sum()
    };
    let mut boundary = vec![SparseMat::zero(0, space.dim(0))];
    for p in 1..=pmax {
        let offs: Vec<usize> = (0..=p - 1).map(|a| offset(p - 1, a)).collect();
        let cols = coords[p]
            .iter()
            .map(|&(a, i, j)| {
                let b = p - a;
                let mut e: Vec<(usize, Rat)> = Vec::new();
                if a >= 1 && a <= c1.pmax() {
                    let w = c2.dim(b);
                    for (k, x) in c1.boundary(a).column(i).iter() {
                        e.push((offs[a - 1] + k * w + j, x.clone()));
                    }
                }
                if b >= 1 && b <= c2.pmax() {
                    let s = sign_rat(a % 2 == 1);
                    let w = c2.dim(b - 1);
                    for (k, y) in c2.boundary(b).column(j).iter() {
                        e.push((offs[a] + i * w + k, y * &s));
                    }
                }
                SparseVec::from_pairs(e)
            })
            .collect();
        boundary.push(SparseMat::from_columns(space.dim(p - 1), cols));
    }
    ChainComplex::new(space, boundary).expect("tensor shapes are consistent")
}

/// `c^{⊗m}` truncated at `pmax`; labels are length-`m` words, so labels of
/// `c` must be distinct across degrees.
pub fn tensor_power<L: Label>(c: &ChainComplex<L>, m: usize, pmax: usize) -> ChainComplex<Vec<L>> {
    // words of (degree, index) with total degree p
    fn words(c_dims: &[usize], m: usize, p: usize) -> Vec<Vec<(usize, usize)>> {
        if m == 0 {
            return if p == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for d in 0..=p.min(c_dims.len().saturating_sub(1)) {
            for i in 0..c_dims[d] {
                for mut rest in words(c_dims, m - 1, p - d) {
                    rest.insert(0, (d, i));
                    out.push(rest);
                }
            }
        }
        out
    }
    let dims = c.dims();
    let per_degree: Vec<Vec<Vec<(usize, usize)>>> = (0..=pmax).map(|p| words(&dims, m, p)).collect();
    let space = GradedSpace::new(
        per_degree
            .iter()
            .map(|ws| {
                ws.iter()
                    .map(|w| w.iter().map(|&(d, i)| c.space().label(d, i).clone()).collect())
                    .collect()
            })
            .collect(),
    );
    let index: Vec<std::collections::HashMap<&Vec<(usize, usize)>, usize>> = per_degree
        .iter()
        .map(|ws| ws.iter().enumerate().map(|(k, w)| (w, k)).collect())
        .collect();
    let mut boundary = vec![SparseMat::zero(0, space.dim(0))];
    for p in 1..=pmax {
        let cols = per_degree[p]
            .iter()
            .map(|w| {
                let mut e = Vec::new();
                let mut before = 0usize;
                for (pos, &(d, i)) in w.iter().enumerate() {
                    if d >= 1 {
                        let s = sign_rat(before % 2 == 1);
                        for (k, x) in c.boundary(d).column(i).iter() {
                            let mut t = w.clone();
                            t[pos] = (d - 1, *k);
                            e.push((index[p - 1][&t], x * &s));
                        }
                    }
                    before += d;
                }
                SparseVec::from_pairs(e)
            })
            .collect();
        boundary.push(SparseMat::from_columns(space.dim(p - 1), cols));
    }
    ChainComplex::new(space, boundary).expect("tensor power shapes are consistent")
}
