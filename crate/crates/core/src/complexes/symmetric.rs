use crate::exact_linear::{Rat, SparseMat, SparseVec};

use super::koszul::sort_graded;
use super::{ChainComplex, ComplexError, GradedSpace, Label};

/// Monomial in a graded symmetric algebra: `(generator, degree)` factors
/// sorted by `(degree, generator)`. Odd generators appear at most once.
pub type Monomial<L> = Vec<(L, usize)>;

/// Product of two monomials with its Koszul sign, or `None` when it vanishes.
pub fn mono_mul<L: Label>(a: &Monomial<L>, b: &Monomial<L>) -> Option<(Monomial<L>, i32)> {
    let mut f = a.clone();
    f.extend(b.iter().cloned());
    sort_graded(&f)
}

fn generators<L: Label>(v: &GradedSpace<L>, pmax: usize) -> Result<Vec<(L, usize)>, ComplexError> {
    if v.dim(0) > 0 {
        return Err(ComplexError::DegreeZeroGenerator);
    }
    let mut g: Vec<(L, usize)> = Vec::new();
    for d in 1..=pmax.min(v.pmax()) {
        g.extend(v.basis(d).iter().map(|l| (l.clone(), d)));
    }
    g.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    Ok(g)
}

/// Basis of `Λ(v)` in degrees `0..=pmax`.
pub fn graded_symmetric_algebra<L: Label>(
    v: &GradedSpace<L>,
    pmax: usize,
) -> Result<GradedSpace<Monomial<L>>, ComplexError> {
    let gens = generators(v, pmax)?;
    let mut degrees: Vec<Vec<Monomial<L>>> = vec![Vec::new(); pmax + 1];
    fn rec<L: Label>(
        gens: &[(L, usize)],
        start: usize,
        deg: usize,
        pmax: usize,
        cur: &mut Vec<(L, usize)>,
        out: &mut Vec<Vec<Monomial<L>>>,
    ) {
        out[deg].push(cur.clone());
        for k in start..gens.len() {
            let d = gens[k].1;
            if deg + d > pmax {
                break;
            }
            cur.push(gens[k].clone());
            // odd generators may not repeat; even ones may
            let next = if d % 2 == 1 { k + 1 } else { k };
            rec(gens, next, deg + d, pmax, cur, out);
            cur.pop();
        }
    }
    rec(&gens, 0, 0, pmax, &mut Vec::new(), &mut degrees);
    for d in degrees.iter_mut() {
        d.sort();
    }
    Ok(GradedSpace::new(degrees))
}

/// `Λ(c)` with the boundary extended as a derivation.
pub fn symmetric_algebra_complex<L: Label>(
    c: &ChainComplex<L>,
    pmax: usize,
) -> Result<ChainComplex<Monomial<L>>, ComplexError> {
    let space = graded_symmetric_algebra(c.space(), pmax)?;
    let mut boundary = vec![SparseMat::zero(0, space.dim(0))];
    for p in 1..=pmax {
        let cols = space
            .basis(p)
            .iter()
            .map(|mono| {
                let mut e: Vec<(usize, Rat)> = Vec::new();
                let mut before = 0usize;
                for (pos, (g, d)) in mono.iter().enumerate() {
                    let i = c.space().index_of(*d, g).expect("generator in space");
                    for (k, x) in c.boundary(*d).column(i).iter() {
                        assert!(*d >= 2, "boundary of a generator lands in degree 0");
                        let mut f = mono.clone();
                        f[pos] = (c.space().label(d - 1, *k).clone(), d - 1);
                        if let Some((m, s)) = sort_graded(&f) {
                            let sign = if (before % 2 == 1) != (s < 0) { -1 } else { 1 };
                            let idx = space.index_of(p - 1, &m).expect("monomial in basis");
                            e.push((idx, x * &Rat::from_int(sign)));
                        }
                    }
                    before += d;
                }
                SparseVec::from_pairs(e)
            })
            .collect();
        boundary.push(SparseMat::from_columns(space.dim(p - 1), cols));
    }
    ChainComplex::new(space, boundary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(dims: &[usize]) -> GradedSpace<(usize, usize)> {
        GradedSpace::new(dims.iter().enumerate().map(|(d, &k)| (0..k).map(|i| (d, i)).collect()).collect())
    }

    #[test]
    fn one_odd_generator() {
        let s = graded_symmetric_algebra(&space(&[0, 1]), 3).unwrap();
        assert_eq!(s.dims(), vec![1, 1, 0, 0]);
    }

    #[test]
    fn generators_in_degrees_one_and_three() {
        let s = graded_symmetric_algebra(&space(&[0, 1, 0, 1, 0]), 4).unwrap();
        assert_eq!(s.dims(), vec![1, 1, 0, 1, 1]);
    }

    #[test]
    fn polynomial_generator() {
        let s = graded_symmetric_algebra(&space(&[0, 0, 1, 0, 0, 0, 0]), 6).unwrap();
        assert_eq!(s.dims(), vec![1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn degree_zero_generators_rejected() {
        assert_eq!(graded_symmetric_algebra(&space(&[1, 1]), 2), Err(ComplexError::DegreeZeroGenerator));
    }
}
