use crate::algebras::StructAlgebra;
use crate::complexes::{ChainComplex, GradedSpace};
use crate::exact_linear::Rat;

/// Minimal rotation of a tensor word, used as the canonical representative
/// of its class in `C^λ`.
pub type CyclicWord = Vec<u16>;

/// Class of the word `w` of length `p + 1` in `C^λ_p`: since
/// `[w] = (-1)^{p k} [rot^k w]`, returns the minimal rotation with that
/// sign, or `None` when the class is zero (a rotation fixing `w` carries sign `-1`).
pub fn canonical_cyclic(w: &[u16]) -> Option<(CyclicWord, i32)> {
    let len = w.len();
    if len == 0 {
        return None;
    }
    let p = len - 1;
    let rot = |k: usize| -> Vec<u16> { w[k..].iter().chain(&w[..k]).copied().collect() };
    let mut best = w.to_vec();
    let mut best_k = 0;
    for k in 1..len {
        let r = rot(k);
        if r == w && (p * k) % 2 == 1 {
            return None;
        }
        if r < best {
            best = r;
            best_k = k;
        }
    }
    Some((best, if (p * best_k).is_multiple_of(2) { 1 } else { -1 }))
}

fn words(d: usize, len: usize) -> Vec<Vec<u16>> {
    let mut out: Vec<Vec<u16>> = vec![Vec::new()];
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

/// Adds `c · [w]` (canonicalized) to `acc`.
fn push_class(acc: &mut Vec<(CyclicWord, Rat)>, w: &[u16], c: Rat) {
    if let Some((r, s)) = canonical_cyclic(w) {
        acc.push((r, if s > 0 { c } else { -c }));
    }
}

/// Connes' complex `(C^λ A, b)`, degree `p` spanned by classes of words of length `p + 1`.
pub fn connes_complex(a: &StructAlgebra, pmax: usize) -> ChainComplex<CyclicWord> {
    let d = a.dim();
    let space = GradedSpace::new(
        (0..=pmax)
            .map(|p| {
                words(d, p + 1)
                    .into_iter()
                    .filter(|w| canonical_cyclic(w).is_some_and(|(r, _)| r == *w))
                    .collect()
            })
            .collect(),
    );
    ChainComplex::from_fn(space, |p, w| {
        let mut acc = Vec::new();
        for i in 0..p {
            let sign = if i % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
            for (s, c) in a.mul_basis(w[i] as usize, w[i + 1] as usize).iter() {
                let mut t: Vec<u16> = w[..i].to_vec();
                t.push(*s as u16);
                t.extend_from_slice(&w[i + 2..]);
                push_class(&mut acc, &t, c * &sign);
            }
        }
        let sign = if p % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
        for (s, c) in a.mul_basis(w[p] as usize, w[0] as usize).iter() {
            let mut t = vec![*s as u16];
            t.extend_from_slice(&w[1..p]);
            push_class(&mut acc, &t, c * &sign);
        }
        acc
    })
}
