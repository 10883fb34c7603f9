//! Explicit comparison maps between `C(gl_n A)` and
//! `Λ(C^λ A[-1]) ⊗ T^m(C^bar A) ⊗ V^α ⊗ V^β`, and Hanlon's map back.

mod duality;
mod setup;
mod theta;
mod epsilon;
mod phi;
mod psi;

pub use duality::{duality_check, DualityReport};
pub use epsilon::{epsilon_ij_word, EpsilonMap};
pub use phi::{phi_stability, PhiReport, StabilityReport};
pub use psi::{psi_not_chain_witness, PsiWitness};
pub use setup::{LqtError, LqtSetup, RLabel};
pub use theta::{coproduct_word, theta1_word, ThetaMap};

/// Sign of the permutation listing `groups` one after another, relative to
/// increasing order of all their elements.
pub(crate) fn concat_sign(groups: &[&[usize]]) -> i32 {
    let flat: Vec<usize> = groups.iter().flat_map(|g| g.iter().copied()).collect();
    let mut inv = 0usize;
    for a in 0..flat.len() {
        for b in a + 1..flat.len() {
            if flat[a] > flat[b] {
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

/// Elements of `0..p` selected by a bitmask, increasing.
pub(crate) fn bits(mask: u32, p: usize) -> Vec<usize> {
    (0..p).filter(|i| mask >> i & 1 == 1).collect()
}
