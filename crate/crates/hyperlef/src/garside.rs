//! Garside left-greedy normal form in the braid group, used to decide word
//! equality exactly.
//!
//! A braid is written as `Δ^k · P₁ ⋯ P_l` where `Δ` is the half twist, each
//! `P_j` is a permutation braid distinct from `1` and `Δ`, and every adjacent
//! pair is left-weighted. Two words are equal in the group iff they have the
//! same `k` and the same factor sequence, so equality testing reduces to
//! computing the form on both sides.
//!
//! Permutation braids are represented by their permutations. The starting
//! set of a factor is the descent set of its permutation, the finishing set
//! the descent set of the inverse, and a pair `(A, B)` is left-weighted when
//! `S(B) ⊆ F(A)`.

use crate::braid::{BraidWord, Letter, Permutation};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Left canonical form `Δ^delta · factors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub strands: usize,
    pub delta: i64,
    pub factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn is_trivial(&self) -> bool {
        self.delta == 0 && self.factors.is_empty()
    }

    /// Canonical infimum (power of Δ) and canonical length.
    pub fn inf(&self) -> i64 {
        self.delta
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} . {} factors", self.delta, self.factors.len())
    }
}

fn descents(p: &Permutation) -> Vec<usize> {
    let n = p.degree();
    (1..n).filter(|&i| p.apply(i) > p.apply(i + 1)).collect()
}

fn starting_set(p: &Permutation) -> Vec<usize> {
    descents(p)
}

fn finishing_set(p: &Permutation) -> Vec<usize> {
    descents(&p.inverse())
}

/// Conjugation by Δ on a permutation braid: `τ(P) = Δ⁻¹ P Δ`.
fn tau(p: &Permutation) -> Permutation {
    let n = p.degree();
    let w0 = Permutation::longest(n);
    w0.then(&p.then(&w0))
}

/// Compute the left canonical form of a braid word.
pub fn normal_form(word: &BraidWord) -> NormalForm {
    let n = word.strands();
    let w0 = Permutation::longest(n);
    let mut delta: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::new();

    for &l in word.letters() {
        let s = Permutation::transposition(n, l.index);
        if l.inverse {
            // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹), and Δ σ_i⁻¹ is the permutation braid
            // with permutation w0 ∘ s_i. Move the Δ⁻¹ to the front.
            delta -= 1;
            for f in factors.iter_mut() {
                *f = tau(f);
            }
            factors.push(w0.then(&s));
        } else {
            factors.push(s);
        }
    }

    normalize(n, delta, factors)
}

fn normalize(n: usize, mut delta: i64, mut factors: Vec<Permutation>) -> NormalForm {
    let w0 = Permutation::longest(n);
    let id = Permutation::identity(n);

    loop {
        let mut changed = false;

        // Drop trivial factors and absorb Δ factors to the front.
        let mut k = 0;
        while k < factors.len() {
            if factors[k] == id {
                factors.remove(k);
                changed = true;
            } else if factors[k] == w0 {
                factors.remove(k);
                for f in factors.iter_mut().take(k) {
                    *f = tau(f);
                }
                delta += 1;
                changed = true;
            } else {
                k += 1;
            }
        }

        // One left-weighting sweep.
        for j in 0..factors.len().saturating_sub(1) {
            loop {
                let i = {
                    let sb = starting_set(&factors[j + 1]);
                    let fa = finishing_set(&factors[j]);
                    sb.into_iter().find(|i| !fa.contains(i))
                };
                let Some(i) = i else { break };
                let s = Permutation::transposition(n, i);
                factors[j] = factors[j].then(&s);
                factors[j + 1] = s.then(&factors[j + 1]);
                changed = true;
            }
        }

        if !changed {
            break;
        }
    }

    NormalForm { strands: n, delta, factors }
}

/// True iff the two words represent the same element of the braid group.
///
/// Both words must live on the same number of strands.
pub fn prove_relation(lhs: &BraidWord, rhs: &BraidWord) -> bool {
    assert_eq!(lhs.strands(), rhs.strands(), "strand counts differ");
    normal_form(lhs) == normal_form(rhs)
}

/// The positive half twist Δ on `n` strands as an explicit word:
/// `(σ₁)(σ₂σ₁)⋯(σ_{n-1}⋯σ₁)`.
pub fn half_twist_word(n: usize) -> BraidWord {
    let mut letters = Vec::new();
    for k in 1..n {
        for i in (1..=k).rev() {
            letters.push(Letter::pos(i));
        }
    }
    BraidWord::new(n, letters)
}

/// A deterministic reduced word for a permutation braid: repeatedly peel the
/// smallest starting letter.
fn factor_word(n: usize, p: &Permutation) -> Vec<Letter> {
    let mut letters = Vec::new();
    let mut cur = p.clone();
    loop {
        let ds = descents(&cur);
        let Some(&i) = ds.first() else { break };
        letters.push(Letter::pos(i));
        cur = Permutation::transposition(n, i).then(&cur);
    }
    letters
}

/// Emit the canonical word of the normal form of `word`. Words equal in the
/// group produce identical output.
pub fn canonical_word(word: &BraidWord) -> BraidWord {
    let nf = normal_form(word);
    let n = nf.strands;
    let delta_word = half_twist_word(n);
    let mut out = BraidWord::identity(n);
    if nf.delta >= 0 {
        for _ in 0..nf.delta {
            out = out.concat(&delta_word);
        }
    } else {
        let inv = delta_word.inverse();
        for _ in 0..(-nf.delta) {
            out = out.concat(&inv);
        }
    }
    for f in &nf.factors {
        out = out.concat(&BraidWord::new(n, factor_word(n, f)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, signed: &[i64]) -> BraidWord {
        BraidWord::from_signed(strands, signed)
    }

    #[test]
    fn braid_relation_has_one_form() {
        assert!(prove_relation(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])));
        assert!(prove_relation(&w(5, &[1, 3]), &w(5, &[3, 1])));
    }

    #[test]
    fn trivial_word_normalizes_to_nothing() {
        let nf = normal_form(&w(4, &[1, -1]));
        assert!(nf.is_trivial());
        assert!(canonical_word(&w(4, &[1, -1])).is_empty());
    }

    #[test]
    fn distinct_generators_differ() {
        assert!(!prove_relation(&w(4, &[1]), &w(4, &[2])));
    }

    #[test]
    fn appending_a_cancelling_pair_is_invisible() {
        let a = w(5, &[2, 3, -1, 4]);
        let b = a.concat(&w(5, &[1, -1]));
        assert!(prove_relation(&a, &b));
    }

    #[test]
    fn half_twist_word_has_longest_permutation() {
        for n in 2..7 {
            let d = half_twist_word(n);
            assert_eq!(d.permutation(), Permutation::longest(n));
            assert_eq!(d.len(), n * (n - 1) / 2);
            let nf = normal_form(&d);
            assert_eq!(nf.delta, 1);
            assert!(nf.factors.is_empty());
        }
    }

    #[test]
    fn full_twist_on_three_strands() {
        // (σ₁σ₂)³ = Δ² in B₃.
        let lhs = w(3, &[1, 2]).repeat(3);
        let nf = normal_form(&lhs);
        assert_eq!(nf.delta, 2);
        assert!(nf.factors.is_empty());
        assert!(prove_relation(&lhs, &half_twist_word(3).repeat(2)));
    }

    #[test]
    fn chain_block_is_delta_fourth() {
        // (σ₁σ₂)⁶ = Δ⁴ on 3 strands.
        let lhs = w(3, &[1, 2]).repeat(6);
        assert!(prove_relation(&lhs, &half_twist_word(3).repeat(4)));
        // (σ₁σ₂)⁵ is not.
        let short = w(3, &[1, 2]).repeat(5);
        assert!(!prove_relation(&short, &half_twist_word(3).repeat(4)));
    }

    #[test]
    fn full_twist_is_central() {
        let delta2 = half_twist_word(4).repeat(2);
        for word in [w(4, &[1]), w(4, &[2, -3]), w(4, &[3, 1, 2])] {
            assert!(prove_relation(&word.concat(&delta2), &delta2.concat(&word)));
        }
    }

    #[test]
    fn canonical_word_is_stable_under_relation_moves() {
        let a = w(4, &[1, 2, 1, 3, -2]);
        let b = w(4, &[2, 1, 2, 3, -2]);
        assert_eq!(canonical_word(&a), canonical_word(&b));
        assert!(prove_relation(&a, &canonical_word(&a)));
    }

    #[test]
    fn negative_delta_roundtrip() {
        let a = w(3, &[-1, -2, -1]);
        let nf = normal_form(&a);
        assert_eq!(nf.delta, -1);
        assert!(nf.factors.is_empty());
        assert!(prove_relation(&a, &canonical_word(&a)));
    }

    #[test]
    fn normal_form_agrees_with_the_faithful_action() {
        // The braid action on the free group is faithful, so equality of
        // normal forms must match fixing the basepoint state. Seeded random
        // pairs on 5 strands.
        use crate::hurwitz::{act_on_state, FreeGroupState};
        let mut seed: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            seed >> 33
        };
        let n = 5;
        let base = FreeGroupState::basepoint(n);
        for _ in 0..60 {
            let len_u = (next() % 8) as usize;
            let len_v = (next() % 8) as usize;
            let mk = |len: usize, next: &mut dyn FnMut() -> u64| {
                let mut letters = Vec::new();
                for _ in 0..len {
                    let i = 1 + (next() % (n as u64 - 1)) as usize;
                    letters.push(if next() % 2 == 0 { Letter::pos(i) } else { Letter::neg(i) });
                }
                BraidWord::new(n, letters)
            };
            let u = mk(len_u, &mut next);
            let v = mk(len_v, &mut next);
            let garside_equal = prove_relation(&u, &v);
            let action_equal = act_on_state(&u.concat(&v.inverse()), &base) == base;
            assert_eq!(garside_equal, action_equal, "u={u} v={v}");
            // a word conjugated into itself by Δ² is always equal to itself
            let d2 = half_twist_word(n).repeat(2);
            let moved = d2.concat(&u).concat(&d2.inverse());
            assert!(prove_relation(&u, &moved));
        }
    }
}
