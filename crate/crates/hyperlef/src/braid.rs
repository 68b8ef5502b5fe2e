//! Words in the Artin braid group `B_n` and their permutation shadows.
//!
//! Words are read left to right: the word `s1 s2` means "apply the
//! half-twist `σ₁` first, then `σ₂`". All compositions in the crate follow
//! this convention.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A single crossing: the positive half-twist `σ_i` or its inverse.
///
/// Generator indices are 1-based, so `σ_i` swaps strands `i` and `i+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, inverse: false }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { index: self.index, inverse: !self.inverse }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}{}", self.index, if self.inverse { "'" } else { "" })
    }
}

/// A word in the braid group on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// The empty word.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 2, "a braid group needs at least two strands");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Self {
        assert!(strands >= 2, "a braid group needs at least two strands");
        for l in &letters {
            assert!(
                l.index >= 1 && l.index < strands,
                "letter t{} out of range for {} strands",
                l.index,
                strands
            );
        }
        BraidWord { strands, letters }
    }

    /// Word from signed indices: `+i` is `σ_i`, `-i` is `σ_i⁻¹`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Self {
        let letters = signed
            .iter()
            .map(|&s| {
                assert!(s != 0);
                Letter { index: s.unsigned_abs() as usize, inverse: s < 0 }
            })
            .collect();
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        assert!(l.index >= 1 && l.index < self.strands);
        self.letters.push(l);
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// The inverse word: letters reversed with signs flipped.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverted()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// `self` raised to a nonnegative power.
    pub fn repeat(&self, times: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancel adjacent inverse pairs until none remain. Idempotent.
    pub fn free_reduced(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top.index == l.index && top.inverse != l.inverse => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }

    /// The underlying permutation of the strands, applying letters in order.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_images(l.index);
        }
        p
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty)");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The permutation a braid induces on strand positions `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    map: Vec<usize>, // 0-based images
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// From 1-based images: `images[k]` is the image of point `k+1`.
    pub fn from_images(images: &[usize]) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        let map: Vec<usize> = images
            .iter()
            .map(|&v| {
                assert!(v >= 1 && v <= n, "image out of range");
                v - 1
            })
            .collect();
        for &v in &map {
            assert!(!seen[v], "not a bijection");
            seen[v] = true;
        }
        Permutation { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of the 1-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.map[p - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.map.len(), other.map.len());
        Permutation { map: self.map.iter().map(|&v| other.map[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Permutation { map }
    }

    /// The transposition `(i, i+1)` on `n` points, 1-based.
    pub fn transposition(n: usize, i: usize) -> Permutation {
        assert!(i >= 1 && i < n);
        let mut p = Permutation::identity(n);
        p.map.swap(i - 1, i);
        p
    }

    /// Post-compose with the transposition `(i, i+1)`: used to fold a braid
    /// word into its permutation letter by letter.
    fn swap_images(&mut self, i: usize) {
        for v in self.map.iter_mut() {
            if *v == i - 1 {
                *v = i;
            } else if *v == i {
                *v = i - 1;
            }
        }
    }

    /// Number of inversions, i.e. the length of the positive permutation
    /// braid with this permutation.
    pub fn inversions(&self) -> usize {
        let n = self.map.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The order-reversing permutation `i ↦ n+1-i`, the permutation of the
    /// Garside half twist.
    pub fn longest(n: usize) -> Permutation {
        Permutation { map: (0..n).rev().collect() }
    }
}

/// Composition of the transpositions `(i, i+1)`, read left to right.
pub fn permutation_of(word: &BraidWord) -> Permutation {
    word.permutation()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_is_identity() {
        let w = BraidWord::identity(6);
        assert!(w.permutation().is_identity());
    }

    #[test]
    fn left_to_right_composition() {
        // s2 s3 on 6 strands: apply (2 3) then (3 4), so 2 ↦ 4.
        let w = BraidWord::from_signed(6, &[2, 3]);
        let p = w.permutation();
        assert_eq!(p.apply(2), 4);
        assert_eq!(p.apply(3), 2);
        assert_eq!(p.apply(4), 3);
        assert_eq!(p.apply(1), 1);
    }

    #[test]
    fn cancellation_gives_identity() {
        let w = BraidWord::from_signed(4, &[1, -1]);
        assert!(w.permutation().is_identity());
        assert!(w.free_reduced().is_empty());
    }

    #[test]
    fn free_reduction_is_idempotent() {
        let w = BraidWord::from_signed(5, &[1, 2, -2, 2, 3, -3, -2]);
        let r = w.free_reduced();
        assert_eq!(r, r.free_reduced());
        assert_eq!(r, BraidWord::from_signed(5, &[1]));
    }

    #[test]
    fn inverse_cancels() {
        let w = BraidWord::from_signed(5, &[1, -2, 3, 3, -4]);
        assert!(w.concat(&w.inverse()).free_reduced().is_empty());
        assert!(w.concat(&w.inverse()).permutation().is_identity());
    }

    #[test]
    fn permutation_is_homomorphism() {
        let u = BraidWord::from_signed(6, &[1, 3, -2]);
        let v = BraidWord::from_signed(6, &[5, -4, 2, 2]);
        let lhs = u.concat(&v).permutation();
        let rhs = u.permutation().then(&v.permutation());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inversions_of_longest() {
        let n = 6;
        assert_eq!(Permutation::longest(n).inversions(), n * (n - 1) / 2);
    }
}
