//! Comparison of the engine's maps with direct, unoptimized evaluations of
//! their defining formulas.

use std::collections::BTreeMap;

use lqt_core::algebras::{named, MatrixLieAlgebra, StructAlgebra};
use lqt_core::exact_linear::{Rat, SparseMat, SparseVec, Subspace};
use lqt_core::homology_builders::{bar_complex, chevalley_eilenberg, connes_complex};
use lqt_core::lqt_maps::{coproduct_word, epsilon_ij_word, phi_stability, theta1_word, LqtSetup, ThetaMap};
use lqt_core::rep_theory::{Partition, WeightLabel};

fn perms(p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for q in perms(p - 1) {
        for pos in 0..p {
            let mut r = q.clone();
            r.insert(pos, p - 1);
            out.push(r);
        }
    }
    out
}

fn inversions(v: &[usize]) -> usize {
    (0..v.len()).flat_map(|a| (a + 1..v.len()).map(move |b| (a, b))).filter(|&(a, b)| v[a] > v[b]).count()
}

fn sgn(v: &[usize]) -> i64 {
    if inversions(v).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn all_words(d: usize, len: usize) -> Vec<Vec<u16>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter().flat_map(|w| (0..d as u16).map(move |x| [w.clone(), vec![x]].concat())).collect()
    })
}

fn combos(dim: usize, p: usize) -> Vec<Vec<u16>> {
    all_words(dim, p).into_iter().filter(|w| w.windows(2).all(|x| x[0] < x[1])).collect()
}

/// A letter of `gl_n A` as an `n×n` matrix of algebra basis indices.
fn entry(g: &MatrixLieAlgebra, x: u16, i: usize, j: usize) -> Option<u16> {
    let (r, c, s) = g.decode(x as usize);
    (r == i && c == j).then_some(s as u16)
}

type Tensor = BTreeMap<Vec<u16>, Rat>;

fn add(t: &mut Tensor, w: Vec<u16>, c: Rat) {
    let e = t.entry(w).or_insert_with(Rat::zero);
    *e += &c;
}

/// Raw (uncanonicalized) `θ¹` straight from the formula: all index tuples,
/// all permutations, weight `sg(σ)/p`.
fn theta1_raw(g: &MatrixLieAlgebra, letters: &[u16]) -> Tensor {
    let (n, p) = (g.n(), letters.len());
    let mut out = Tensor::new();
    for idx in all_words(n, p) {
        for s in perms(p) {
            let word: Option<Vec<u16>> = (0..p)
                .map(|t| entry(g, letters[s[t]], idx[t] as usize, idx[(t + 1) % p] as usize))
                .collect();
            if let Some(w) = word {
                add(&mut out, w, Rat::new(sgn(&s), p as i64));
            }
        }
    }
    out
}

/// `(1 - t)(A^{⊗p})` with `t(a_0⊗…⊗a_{p-1}) = (-1)^{p-1} a_{p-1}⊗a_0⊗…`.
fn cyclic_relations(d: usize, p: usize) -> (Vec<Vec<u16>>, Subspace) {
    let words = all_words(d, p);
    let index: BTreeMap<Vec<u16>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let sign = if (p - 1).is_multiple_of(2) { 1 } else { -1 };
    let rels: Vec<SparseVec> = words
        .iter()
        .map(|w| {
            let mut r = vec![w[p - 1]];
            r.extend_from_slice(&w[..p - 1]);
            SparseVec::from_pairs([(index[w], Rat::one()), (index[&r], Rat::from_int(-sign))])
        })
        .collect();
    let sub = Subspace::from_vectors(words.len(), &rels);
    (words, sub)
}

fn as_vec(words: &[Vec<u16>], t: &Tensor) -> SparseVec {
    SparseVec::from_pairs(t.iter().map(|(w, c)| (words.iter().position(|x| x == w).unwrap(), c.clone())))
}

#[test]
fn theta1_agrees_with_formula_modulo_cyclic_relations() {
    for (name, n, pmax) in [("uv", 1, 3), ("uv", 2, 3), ("k", 3, 3), ("zero2", 2, 2)] {
        let a = named(name).unwrap();
        let g = MatrixLieAlgebra::new(&a, n);
        for p in 1..=pmax {
            let (words, rel) = cyclic_relations(a.dim(), p);
            for w in combos(g.dim(), p) {
                let raw = theta1_raw(&g, &w);
                let engine: Tensor = theta1_word(&g, &w).into_iter().collect();
                let diff = as_vec(&words, &raw).sub(&as_vec(&words, &engine));
                assert!(rel.contains(&diff), "{name} n={n} word {w:?}");
            }
        }
    }
}

#[test]
fn theta1_at_n1_degree2() {
    // (1/2)([a1⊗a2] - [a2⊗a1]) = [a1⊗a2] because [a2⊗a1] = -[a1⊗a2] in degree one
    let g = MatrixLieAlgebra::new(&named("zero2").unwrap(), 1);
    assert_eq!(theta1_word(&g, &[0, 1]), BTreeMap::from([(vec![0, 1], Rat::one())]));
}

/// `ε_ij` straight from the formula.
fn epsilon_raw(g: &MatrixLieAlgebra, letters: &[u16], i: usize, j: usize) -> Tensor {
    let (n, p) = (g.n(), letters.len());
    let mut out = Tensor::new();
    for s in perms(p) {
        for mid in all_words(n, p - 1) {
            let mut chain = vec![i];
            chain.extend(mid.iter().map(|&x| x as usize));
            chain.push(j);
            let word: Option<Vec<u16>> = (0..p).map(|t| entry(g, letters[s[t]], chain[t], chain[t + 1])).collect();
            if let Some(w) = word {
                add(&mut out, w, Rat::from_int(sgn(&s)));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn epsilon_ij_agrees_with_formula() {
    for (name, n) in [("uv", 1), ("uv", 2), ("zero1", 3)] {
        let g = MatrixLieAlgebra::new(&named(name).unwrap(), n);
        for p in 1..=3 {
            for w in combos(g.dim(), p) {
                for i in 0..n {
                    for j in 0..n {
                        let engine: Tensor = epsilon_ij_word(&g, &w, i, j).into_iter().collect();
                        assert_eq!(engine, epsilon_raw(&g, &w, i, j), "{name} {w:?} ({i},{j})");
                    }
                }
            }
        }
    }
}

#[test]
fn epsilon_small_cases() {
    let g = MatrixLieAlgebra::new(&named("zero2").unwrap(), 1);
    let e = epsilon_ij_word(&g, &[0, 1], 0, 0);
    assert_eq!(e, BTreeMap::from([(vec![0, 1], Rat::one()), (vec![1, 0], Rat::from_int(-1))]));
    let g2 = MatrixLieAlgebra::new(&named("zero1").unwrap(), 2);
    let x = g2.index(0, 1, 0) as u16;
    assert_eq!(epsilon_ij_word(&g2, &[x], 0, 1), BTreeMap::from([(vec![0], Rat::one())]));
    assert!(epsilon_ij_word(&g2, &[x], 1, 0).is_empty());
}

fn matrix_of<F: Fn(&[u16]) -> Tensor>(src: &[Vec<u16>], tgt: &[Vec<u16>], f: F) -> SparseMat {
    let cols = src.iter().map(|w| as_vec(tgt, &f(w))).collect();
    SparseMat::from_columns(tgt.len(), cols)
}

#[test]
fn theta1_and_epsilon_are_chain_maps() {
    for (name, n) in [("uv", 1), ("uv", 2), ("k", 2)] {
        let a = named(name).unwrap();
        let g = MatrixLieAlgebra::new(&a, n);
        let ce = chevalley_eilenberg(&g, 3);
        let cyc = connes_complex(&a, 2);
        let bar = bar_complex(&a, 3);
        for p in 2..=3 {
            let labels = |c: &[Vec<u16>]| c.to_vec();
            let th = |q: usize| {
                matrix_of(ce.space().basis(q), &labels(cyc.space().basis(q - 1)), |w| {
                    theta1_word(&g, w).into_iter().collect()
                })
            };
            assert_eq!(cyc.boundary(p - 1).mul(&th(p)), th(p - 1).mul(ce.boundary(p)), "θ¹ {name} n={n} p={p}");
            for i in 0..n {
                for j in 0..n {
                    let ep = |q: usize| {
                        matrix_of(ce.space().basis(q), &labels(bar.space().basis(q)), |w| {
                            epsilon_ij_word(&g, w, i, j).into_iter().collect()
                        })
                    };
                    assert_eq!(bar.boundary(p).mul(&ep(p)), ep(p - 1).mul(ce.boundary(p)), "ε {name} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn ce_boundary_matches_matrix_brackets() {
    // ∂(g_1∧…∧g_p) = Σ_{a<b} (-1)^{a+b+1} [g_a,g_b] ∧ (rest), brackets computed
    // by multiplying explicit matrices with algebra entries
    for (name, n) in [("uv", 1), ("uv", 2), ("k", 2), ("dual", 2)] {
        let a = named(name).unwrap();
        let g = MatrixLieAlgebra::new(&a, n);
        let ce = chevalley_eilenberg(&g, 3);
        let bracket = |x: u16, y: u16| -> Vec<(u16, Rat)> {
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        for (u, v, sign) in [(x, y, 1), (y, x, -1)] {
                            if let (Some(s), Some(t)) = (entry(&g, u, i, l), entry(&g, v, l, j)) {
                                for (r, c) in a.mul_basis(s as usize, t as usize).iter() {
                                    out.push((g.index(i, j, *r) as u16, c * &Rat::from_int(sign)));
                                }
                            }
                        }
                    }
                }
            }
            out
        };
        for p in 1..=3 {
            let basis = ce.space().basis(p);
            for (col, w) in basis.iter().enumerate() {
                let mut acc: Tensor = Tensor::new();
                for x in 0..p {
                    for y in x + 1..p {
                        let rest: Vec<u16> = (0..p).filter(|&k| k != x && k != y).map(|k| w[k]).collect();
                        let outer = if (x + y + 1) % 2 == 0 { 1 } else { -1 };
                        for (t, c) in bracket(w[x], w[y]) {
                            let mut word = vec![t];
                            word.extend(&rest);
                            let mut order: Vec<usize> = (0..word.len()).collect();
                            order.sort_by_key(|&k| word[k]);
                            let sorted: Vec<u16> = order.iter().map(|&k| word[k]).collect();
                            if sorted.windows(2).any(|z| z[0] == z[1]) {
                                continue;
                            }
                            add(&mut acc, sorted, c * &Rat::from_int(outer * sgn(&order)));
                        }
                    }
                }
                acc.retain(|_, c| !c.is_zero());
                let expected = as_vec(ce.space().basis(p - 1), &acc);
                assert_eq!(ce.boundary(p).column(col), &expected, "{name} n={n} {w:?}");
            }
        }
    }
    // the sign convention: ∂(u∧v) = [u,v]
    let g = MatrixLieAlgebra::new(&named("uv").unwrap(), 1);
    assert_eq!(chevalley_eilenberg(&g, 2).boundary(2).column(0), &SparseVec::unit(1));
}

#[test]
fn coproduct_low_degrees() {
    assert_eq!(
        coproduct_word(&vec![5]),
        vec![((vec![], vec![5]), Rat::one()), ((vec![5], vec![]), Rat::one())]
    );
    let d: BTreeMap<_, _> = coproduct_word(&vec![1, 2]).into_iter().collect();
    let expected = BTreeMap::from([
        ((vec![], vec![1, 2]), Rat::one()),
        ((vec![1], vec![2]), Rat::one()),
        ((vec![2], vec![1]), Rat::from_int(-1)),
        ((vec![1, 2], vec![]), Rat::one()),
    ]);
    assert_eq!(d, expected);
}

#[test]
fn coproduct_is_coassociative() {
    type Triple = BTreeMap<(Vec<u16>, Vec<u16>, Vec<u16>), Rat>;
    for p in 0..=4 {
        let w: Vec<u16> = (0..p as u16).collect();
        let (mut left, mut right) = (Triple::new(), Triple::new());
        for ((x, y), c) in coproduct_word(&w) {
            for ((x1, x2), c1) in coproduct_word(&x) {
                *left.entry((x1, x2, y.clone())).or_insert_with(Rat::zero) += &(&c * &c1);
            }
            for ((y1, y2), c2) in coproduct_word(&y) {
                *right.entry((x.clone(), y1, y2)).or_insert_with(Rat::zero) += &(&c * &c2);
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        assert_eq!(left, right, "degree {p}");
    }
}

/// Sorts odd/even factors into `(degree, word)` order with Koszul signs.
fn lambda_sort(mut f: Vec<(Vec<u16>, usize)>) -> Option<(Vec<(Vec<u16>, usize)>, i64)> {
    let mut sign = 1;
    for i in 0..f.len() {
        for j in 0..f.len() - 1 - i {
            let (a, b) = (&f[j], &f[j + 1]);
            if (a.1, &a.0) > (b.1, &b.0) {
                if a.1 % 2 == 1 && b.1 % 2 == 1 {
                    sign = -sign;
                }
                f.swap(j, j + 1);
            }
        }
    }
    if f.windows(2).any(|x| x[0] == x[1] && x[0].1 % 2 == 1) {
        return None;
    }
    Some((f, sign))
}

/// `θ = π T(θ¹) Δ̃`: every assignment of the letters to `q` ordered nonempty
/// tensor factors, with the unshuffle sign, then the product in `Λ`.
fn theta_raw(g: &MatrixLieAlgebra, letters: &[u16]) -> BTreeMap<Vec<(Vec<u16>, usize)>, Rat> {
    let p = letters.len();
    let mut out = BTreeMap::new();
    if p == 0 {
        out.insert(vec![], Rat::one());
        return out;
    }
    for q in 1..=p {
        for f in all_words(q, p) {
            if (0..q as u16).any(|b| !f.contains(&b)) {
                continue;
            }
            let mut order: Vec<usize> = (0..p).collect();
            order.sort_by_key(|&k| f[k]);
            let sign = sgn(&order);
            let blocks: Vec<Vec<u16>> =
                (0..q as u16).map(|b| (0..p).filter(|&k| f[k] == b).map(|k| letters[k]).collect()).collect();
            let mut terms: Vec<(Vec<(Vec<u16>, usize)>, Rat)> = vec![(vec![], Rat::from_int(sign))];
            for b in &blocks {
                let t1 = theta1_word(g, b);
                terms = terms
                    .iter()
                    .flat_map(|(m, c)| {
                        t1.iter().map(move |(w, d)| {
                            let mut m2 = m.clone();
                            m2.push((w.clone(), w.len()));
                            (m2, c * d)
                        })
                    })
                    .collect();
            }
            for (m, c) in terms {
                if let Some((sorted, s)) = lambda_sort(m) {
                    *out.entry(sorted).or_insert_with(Rat::zero) += &(&c * &Rat::from_int(s));
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn theta_agrees_with_iterated_coproduct() {
    for (name, n, pmax) in [("uv", 1, 4), ("uv", 2, 3), ("k", 2, 4), ("zero2", 1, 2)] {
        let g = MatrixLieAlgebra::new(&named(name).unwrap(), n);
        for p in 0..=pmax {
            for w in combos(g.dim(), p) {
                let engine: BTreeMap<_, _> = ThetaMap::new(&g, &w).full().into_iter().collect();
                assert_eq!(engine, theta_raw(&g, &w), "{name} n={n} {w:?}");
            }
        }
    }
}

fn setup(a: &StructAlgebra, n: usize, alpha: &str, beta: &str, pmax: usize) -> LqtSetup {
    let l = WeightLabel::new(alpha.parse::<Partition>().unwrap(), beta.parse::<Partition>().unwrap(), n).unwrap();
    LqtSetup::new(a, n, &l, pmax).unwrap()
}

#[test]
fn phi_on_corner_entry() {
    // Δ(g) = g⊗1 + 1⊗g, θ kills the off-diagonal part, ε_{1,n} reads entry (1,n)
    let a = named("uv").unwrap();
    for n in 2..=3 {
        let s = setup(&a, n, "1", "1", 1);
        for t in 0..a.dim() {
            let x = s.ce.g.index(0, n - 1, t) as u16;
            let col = s.ce.complex.space().index_of(1, &vec![x]).unwrap();
            let img = s.phi_prime_apply(1, &SparseVec::unit(col));
            let target = (vec![], (vec![vec![t as u16]], (0, 0)));
            let k = s.rprime.space().index_of(1, &target).unwrap();
            assert_eq!(img, SparseVec::unit(k));
        }
        assert!(s.phi_report(1).bijective);
    }
}

#[test]
fn phi_on_scalar_matrix() {
    let a = named("uv").unwrap();
    for n in 1..=3 {
        let s = setup(&a, n, "", "", 1);
        for t in 0..a.dim() {
            let v = SparseVec::from_pairs((0..n).map(|l| {
                let x = s.ce.g.index(l, l, t) as u16;
                (s.ce.complex.space().index_of(1, &vec![x]).unwrap(), Rat::one())
            }));
            let target = (vec![(vec![t as u16], 1)], (vec![], (0, 0)));
            let k = s.rprime.space().index_of(1, &target).unwrap();
            assert_eq!(s.phi_prime_apply(1, &v), SparseVec::unit(k).scale(&Rat::from_int(n as i64)));
        }
    }
}

#[test]
fn stability_pads_with_zeros() {
    let k = named("k").unwrap();
    let (s2, s3) = (setup(&k, 2, "", "", 1), setup(&k, 3, "", "", 1));
    let one = |s: &LqtSetup, rows: usize| {
        SparseVec::from_pairs((0..rows).map(|l| {
            let x = s.ce.g.index(l, l, 0) as u16;
            (s.ce.complex.space().index_of(1, &vec![x]).unwrap(), Rat::one())
        }))
    };
    let gen = (vec![(vec![0u16], 1)], (vec![], (0, 0)));
    let two = |s: &LqtSetup| SparseVec::unit(s.rprime.space().index_of(1, &gen).unwrap()).scale(&Rat::from_int(2));
    // 1_2 directly, and its image e_11 + e_22 in gl_3 k
    assert_eq!(s2.phi_prime_apply(1, &one(&s2, 2)), two(&s2));
    assert_eq!(s3.phi_prime_apply(1, &one(&s3, 2)), two(&s3));
    assert!(phi_stability(&k, 2, 1).unwrap().witness.is_none());
}

#[test]
fn labels_beyond_degree_vanish() {
    let a = named("uv").unwrap();
    let s = setup(&a, 3, "2", "1,1", 1);
    assert_eq!(s.highest(1).dim(), 0);
    assert_eq!(s.invariants(1).dim(), 0);
}
