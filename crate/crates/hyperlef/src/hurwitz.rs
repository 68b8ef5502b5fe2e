//! The exact braid action on a free group, and the word problem for the
//! marked-sphere mapping class group.
//!
//! The disk braid group on `n` strands acts on the free group
//! `F = ⟨x₁,…,x_n⟩` by the Hurwitz rule: `σ_i` sends
//! `(x_i, x_{i+1}) ↦ (x_i x_{i+1} x_i⁻¹, x_i)` and fixes the other
//! generators. This action is faithful, and it descends to the fundamental
//! group of the marked sphere, `F/⟨⟨x₁⋯x_n⟩⟩`, which is free of rank `n-1`.
//! A braid is trivial as a mapping class of the marked sphere iff its
//! permutation is trivial and the induced automorphism of that quotient is a
//! global conjugation.

use crate::braid::BraidWord;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A reduced word in a free group. Letters are nonzero integers: `+g` is the
/// generator `x_g` (1-based), `-g` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        FreeWord(vec![g as i32])
    }

    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = FreeWord(Vec::with_capacity(letters.len()));
        for &l in letters {
            assert!(l != 0);
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    /// `self · other`, freely reduced.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    /// `self · w · self⁻¹`.
    pub fn conjugate(&self, w: &FreeWord) -> FreeWord {
        self.mul(w).mul(&self.inverse())
    }

    /// Strip matching conjugating prefix/suffix; returns `(prefix, core)`
    /// with `self = prefix · core · prefix⁻¹`.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let mut w = self.0.clone();
        let mut prefix = Vec::new();
        while w.len() >= 2 && w[0] == -w[w.len() - 1] {
            prefix.push(w[0]);
            w.remove(0);
            w.pop();
        }
        (FreeWord(prefix), FreeWord(w))
    }

    /// Substitute the last generator `x_n := (x₁⋯x_{n-1})⁻¹`, producing a
    /// word in the free group of rank `n-1`.
    pub fn project_sphere(&self, n: usize) -> FreeWord {
        let g = n as i32;
        let mut out = FreeWord::identity();
        for &l in &self.0 {
            if l == g {
                for k in (1..n).rev() {
                    out.push(-(k as i32));
                }
            } else if l == -g {
                for k in 1..n {
                    out.push(k as i32);
                }
            } else {
                out.push(l);
            }
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// The images of the generators `x₁,…,x_n` under a braid automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeGroupState {
    n: usize,
    images: Vec<FreeWord>,
}

impl FreeGroupState {
    /// The identity state on `n` generators.
    pub fn basepoint(n: usize) -> Self {
        FreeGroupState { n, images: (1..=n).map(FreeWord::generator).collect() }
    }

    /// Number of generators, one per marked point. Modulo the sphere
    /// relation the group is free of rank `n - 1`.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn image(&self, g: usize) -> &FreeWord {
        &self.images[g - 1]
    }

    /// Product of all images in order. For states reached from the basepoint
    /// this equals `x₁⋯x_n` exactly: the Hurwitz rule preserves the product
    /// of the acted-on pair.
    pub fn product_of_images(&self) -> FreeWord {
        let mut p = FreeWord::identity();
        for im in &self.images {
            p = p.mul(im);
        }
        p
    }

    /// True iff the product of images is conjugate to `x₁⋯x_n`.
    pub fn product_conjugate_to_boundary(&self) -> bool {
        let delta = FreeWord::from_letters(&(1..=self.n as i32).collect::<Vec<_>>());
        let (_, core) = self.product_of_images().cyclic_reduce();
        let (_, dcore) = delta.cyclic_reduce();
        core == dcore
    }

    fn act_letter(&mut self, index: usize, inverse: bool) {
        let i = index - 1;
        let (a, b) = (self.images[i].clone(), self.images[i + 1].clone());
        if inverse {
            // (a, b) ↦ (b, b⁻¹ a b)
            self.images[i] = b.clone();
            self.images[i + 1] = b.inverse().mul(&a).mul(&b);
        } else {
            // (a, b) ↦ (a b a⁻¹, a)
            self.images[i] = a.conjugate(&b);
            self.images[i + 1] = a;
        }
    }
}

/// Apply a braid word to a state, letter by letter, fully reduced.
pub fn act_on_state(word: &BraidWord, state: &FreeGroupState) -> FreeGroupState {
    assert_eq!(word.strands(), state.n, "strand count must match state rank");
    let mut s = state.clone();
    for l in word.letters() {
        s.act_letter(l.index, l.inverse);
    }
    s
}

/// Decompose a reduced word as `x_b^p · x_a^q` and return `(p, q)`; `None`
/// if it has any other shape.
fn split_two_powers(w: &FreeWord, b: i32, a: i32) -> Option<(i64, i64)> {
    let mut p = 0i64;
    let mut q = 0i64;
    let mut k = 0;
    let ls = w.letters();
    while k < ls.len() && ls[k].abs() == b {
        p += if ls[k] > 0 { 1 } else { -1 };
        k += 1;
    }
    while k < ls.len() && ls[k].abs() == a {
        q += if ls[k] > 0 { 1 } else { -1 };
        k += 1;
    }
    if k == ls.len() {
        Some((p, q))
    } else {
        None
    }
}

fn power(g: i32, e: i64) -> FreeWord {
    let letter = if e >= 0 { g } else { -g };
    FreeWord::from_letters(&vec![letter; e.unsigned_abs() as usize])
}

/// True iff the braid word represents the trivial mapping class of the
/// sphere with `strands` marked points.
///
/// The check is exact: trivial permutation, plus the induced automorphism of
/// `F/⟨⟨x₁⋯x_n⟩⟩ ≅ F_{n-1}` being a global conjugation. The conjugator, if
/// any, is pinned down by intersecting the cosets `u₁⟨x₁⟩ ∩ u₂⟨x₂⟩`, which
/// meet in at most one element of a free group.
pub fn is_trivial_downstairs(word: &BraidWord) -> bool {
    let n = word.strands();
    assert!(n >= 4, "marked sphere needs at least 4 points");
    if !word.permutation().is_identity() {
        return false;
    }
    let state = act_on_state(word, &FreeGroupState::basepoint(n));
    inner_conjugator(&state).is_some()
}

/// If the automorphism recorded by `state` is a global conjugation modulo
/// the sphere relation, return the conjugating word (in rank `n-1`).
pub fn inner_conjugator(state: &FreeGroupState) -> Option<FreeWord> {
    let n = state.rank();
    // Projected images of x_1 .. x_{n-1}; each must be a conjugate u_j x_j u_j^{-1}.
    let mut conjugators = Vec::with_capacity(n - 1);
    for j in 1..n {
        let w = state.image(j).project_sphere(n);
        let (prefix, core) = w.cyclic_reduce();
        if core.letters() != [j as i32] {
            return None;
        }
        conjugators.push(prefix);
    }

    // Candidate u with u ∈ u₁⟨x₁⟩ ∩ u₂⟨x₂⟩: solve u₂⁻¹u₁ = x₂^p x₁^{-a},
    // then u = u₁ x₁^a.
    let v = conjugators[1].inverse().mul(&conjugators[0]);
    let (_, neg_a) = split_two_powers(&v, 2, 1)?;
    let u = conjugators[0].mul(&power(1, -neg_a));

    // Verify against every generator.
    for (j, uj) in conjugators.iter().enumerate() {
        let g = j + 1;
        let expected = uj.conjugate(&FreeWord::generator(g));
        let got = u.conjugate(&FreeWord::generator(g));
        if expected != got {
            return None;
        }
    }
    Some(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn w(strands: usize, signed: &[i64]) -> BraidWord {
        BraidWord::from_signed(strands, signed)
    }

    #[test]
    fn identity_word_fixes_state() {
        let s = FreeGroupState::basepoint(6);
        assert_eq!(act_on_state(&BraidWord::identity(6), &s), s);
    }

    #[test]
    fn one_hurwitz_step_by_hand() {
        // σ₁ on the basepoint: x₁ ↦ x₁x₂x₁⁻¹, x₂ ↦ x₁.
        let s = act_on_state(&w(6, &[1]), &FreeGroupState::basepoint(6));
        assert_eq!(s.image(1), &FreeWord::from_letters(&[1, 2, -1]));
        assert_eq!(s.image(2), &FreeWord::generator(1));
        assert_eq!(s.image(3), &FreeWord::generator(3));
    }

    #[test]
    fn action_inverts() {
        let word = w(6, &[1, -3, 2, 5, -4, 2]);
        let s = FreeGroupState::basepoint(6);
        let moved = act_on_state(&word, &s);
        assert_eq!(act_on_state(&word.inverse(), &moved), s);
    }

    #[test]
    fn product_of_images_is_boundary_word() {
        let word = w(6, &[1, 2, 3, 4, 5, 5, 4, 3, 2, 1]);
        let s = act_on_state(&word, &FreeGroupState::basepoint(6));
        let delta = FreeWord::from_letters(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(s.product_of_images(), delta);
        assert!(s.product_conjugate_to_boundary());
    }

    #[test]
    fn empty_word_is_trivial() {
        assert!(is_trivial_downstairs(&BraidWord::identity(6)));
    }

    #[test]
    fn single_twist_is_not_trivial() {
        assert!(!is_trivial_downstairs(&w(6, &[1])));
    }

    #[test]
    fn full_twist_is_trivial_on_sphere() {
        // (σ₁⋯σ₅)⁶ is central in B₆ and trivial on the marked sphere.
        let full = w(6, &[1, 2, 3, 4, 5]).repeat(6);
        assert!(is_trivial_downstairs(&full));
    }

    #[test]
    fn sphere_relator_is_trivial() {
        // σ₁⋯σ₅ σ₅⋯σ₁ wraps strand 1 around the rest: trivial on the sphere,
        // nontrivial in the disk.
        let r = w(6, &[1, 2, 3, 4, 5, 5, 4, 3, 2, 1]);
        assert!(is_trivial_downstairs(&r));
        let s = act_on_state(&r, &FreeGroupState::basepoint(6));
        assert_ne!(s, FreeGroupState::basepoint(6));
    }

    #[test]
    fn pure_but_nontrivial_braid_is_detected() {
        // σ₁² is pure but twists points 1,2 around each other.
        assert!(!is_trivial_downstairs(&w(6, &[1, 1])));
    }

    #[test]
    fn full_twist_on_sub_disk_of_four_points() {
        // On 4 marked points the loop around {1,2,3} is the loop around {4}:
        // its twist (σ₁σ₂)³ squared is trivial on the sphere.
        let t = w(4, &[1, 2]).repeat(6);
        assert!(is_trivial_downstairs(&t));
    }

    #[test]
    fn projection_kills_boundary_word() {
        let delta = FreeWord::from_letters(&[1, 2, 3, 4, 5, 6]);
        assert!(delta.project_sphere(6).is_empty());
    }

    #[test]
    fn commutator_of_loop_twists_is_not_trivial() {
        // Full twists about the loops around {1,2,3} and {3,4,5} do not
        // commute on the marked sphere: their commutator is pure and
        // homologically invisible, but the action detects it.
        let t123 = w(6, &[1, 2]).repeat(3);
        let t345 = w(6, &[3, 4]).repeat(3);
        let comm = t123
            .concat(&t345)
            .concat(&t123.inverse())
            .concat(&t345.inverse());
        assert!(comm.permutation().is_identity());
        assert!(!is_trivial_downstairs(&comm));
    }

    #[test]
    fn relator_times_full_twist_is_trivial_with_involution_parity() {
        use crate::symplectic::symplectic_of_braid;
        let relator = w(6, &[1, 2, 3, 4, 5, 5, 4, 3, 2, 1]);
        let full = w(6, &[1, 2, 3, 4, 5]).repeat(6);
        let word = relator.concat(&full);
        assert!(is_trivial_downstairs(&word));
        assert!(symplectic_of_braid(2, &word).is_minus_identity());
    }
}
