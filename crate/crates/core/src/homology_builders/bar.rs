use crate::algebras::StructAlgebra;
use crate::complexes::{ChainComplex, GradedSpace};
use crate::exact_linear::{Rat, SparseMat};

/// Tensor word `a_1 ⊗ ... ⊗ a_p` of basis indices, `p ≥ 1`.
pub type BarWord = Vec<u16>;

fn words(d: usize, len: usize) -> Vec<BarWord> {
    let mut out: Vec<BarWord> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..d as u16).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// `(T^+ A, b')` with `b'(a_1⊗...⊗a_p) = Σ_{i=1}^{p-1} (-1)^{i-1} ...⊗a_i a_{i+1}⊗...`.
/// Degree 0 is empty.
pub fn bar_complex(a: &StructAlgebra, pmax: usize) -> ChainComplex<BarWord> {
    let d = a.dim();
    let space = GradedSpace::new(
        (0..=pmax).map(|p| if p == 0 { Vec::new() } else { words(d, p) }).collect(),
    );
    ChainComplex::from_fn(space, |p, w| {
        let mut acc = Vec::new();
        for i in 0..p.saturating_sub(1) {
            let sign = if i % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
            for (s, c) in a.mul_basis(w[i] as usize, w[i + 1] as usize).iter() {
                let mut t: Vec<u16> = w[..i].to_vec();
                t.push(*s as u16);
                t.extend_from_slice(&w[i + 2..]);
                acc.push((t, c * &sign));
            }
        }
        acc
    })
}

/// Image of a tensor word under `m^{⊗p}` as `(word, coefficient)` pairs.
pub fn tensor_map_word(m: &SparseMat, w: &[u16]) -> Vec<(BarWord, Rat)> {
    let mut acc: Vec<(BarWord, Rat)> = vec![(Vec::new(), Rat::one())];
    for &x in w {
        let col = m.column(x as usize);
        acc = acc
            .into_iter()
            .flat_map(|(t, c)| {
                col.iter().map(move |(s, y)| {
                    let mut t2 = t.clone();
                    t2.push(*s as u16);
                    (t2, &c * y)
                })
            })
            .collect();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::named;
    use crate::exact_linear::{Rat, SparseVec};

    #[test]
    fn zero_mult_has_zero_boundary() {
        let c = bar_complex(&StructAlgebra::zero_mult(1), 4);
        assert!((1..=4).all(|p| c.boundary(p).is_zero()));
        assert!((1..=3).all(|p| c.homology_dim(p).unwrap() == 1));
    }

    #[test]
    fn ground_field_is_acyclic() {
        let c = bar_complex(&named("k").unwrap(), 5);
        assert_eq!(c.boundary(2).get(0, 0), Rat::one());
        assert!((1..=4).all(|p| c.homology_dim(p).unwrap() == 0));
    }

    #[test]
    fn uv_product() {
        let c = bar_complex(&named("uv").unwrap(), 2);
        let i = c.space().index_of(2, &vec![0, 1]).unwrap();
        assert_eq!(c.boundary(2).column(i), &SparseVec::unit(1));
        assert!(c.verify().passed());
    }
}
