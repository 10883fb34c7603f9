//! Koszul sign bookkeeping shared by every graded construction in the crate.
//!
//! Swapping adjacent factors of degrees `d1`, `d2` contributes `(-1)^(d1*d2)`.

/// Sign of the rearrangement taking factors `0..n` to the order `perm`
/// (`perm[k]` is the old position of the factor placed at position `k`).
pub fn permutation_sign(degrees: &[usize], perm: &[usize]) -> i32 {
    debug_assert_eq!(degrees.len(), perm.len());
    let mut odd = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] && degrees[perm[a]] % 2 == 1 && degrees[perm[b]] % 2 == 1 {
                odd += 1;
            }
        }
    }
    if odd.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Plain sign of a permutation (all factors odd).
pub fn sign_of_permutation(perm: &[usize]) -> i32 {
    let mut inv = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Stably sorts `(key, degree)` factors of a graded-commutative product and
/// returns the Koszul sign, or `None` when an odd factor repeats (the
/// product vanishes).
pub fn sort_graded<K: Ord + Clone>(factors: &[(K, usize)]) -> Option<(Vec<(K, usize)>, i32)> {
    let mut perm: Vec<usize> = (0..factors.len()).collect();
    perm.sort_by(|&a, &b| {
        let (ka, da) = &factors[a];
        let (kb, db) = &factors[b];
        (da, ka).cmp(&(db, kb))
    });
    for w in perm.windows(2) {
        let (x, y) = (&factors[w[0]], &factors[w[1]]);
        if x.1 % 2 == 1 && x == y {
            return None;
        }
    }
    let degrees: Vec<usize> = factors.iter().map(|f| f.1).collect();
    let sign = permutation_sign(&degrees, &perm);
    Some((perm.into_iter().map(|i| factors[i].clone()).collect(), sign))
}

/// Sorts a wedge word of degree-one letters; `None` if a letter repeats.
pub fn sort_wedge<K: Ord + Clone>(letters: &[K]) -> Option<(Vec<K>, i32)> {
    let mut perm: Vec<usize> = (0..letters.len()).collect();
    perm.sort_by(|&a, &b| letters[a].cmp(&letters[b]));
    if perm.windows(2).any(|w| letters[w[0]] == letters[w[1]]) {
        return None;
    }
    let sign = sign_of_permutation(&perm);
    Some((perm.into_iter().map(|i| letters[i].clone()).collect(), sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_swap_is_negative_even_is_positive() {
        assert_eq!(permutation_sign(&[1, 1], &[1, 0]), -1);
        assert_eq!(permutation_sign(&[2, 1], &[1, 0]), 1);
        assert_eq!(permutation_sign(&[3, 3, 2], &[2, 1, 0]), -1);
    }

    #[test]
    fn wedge_sorting() {
        assert_eq!(sort_wedge(&[2, 1, 3]), Some((vec![1, 2, 3], -1)));
        assert_eq!(sort_wedge(&[3, 1, 2]), Some((vec![1, 2, 3], 1)));
        assert_eq!(sort_wedge(&[1, 1]), None);
    }

    #[test]
    fn graded_sorting_kills_odd_squares_only() {
        assert!(sort_graded(&[('x', 1), ('x', 1)]).is_none());
        let (s, sign) = sort_graded(&[('y', 2), ('y', 2)]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(sign, 1);
        let (_, sign) = sort_graded(&[('b', 1), ('a', 1)]).unwrap();
        assert_eq!(sign, -1);
    }
}
