//! The homology shadow: integral symplectic matrices of Dehn twists.
//!
//! `H₁` of the genus-`h` surface carries the standard symplectic basis
//! `a₁, b₁, …, a_h, b_h`. A right-handed Dehn twist about a curve with
//! homology class `v` acts as the transvection `x ↦ x + ⟨x, v⟩ v`; a
//! separating curve has `v = 0` and acts trivially. The hyperelliptic
//! involution acts as `-I`, which is what lets the shadow separate the
//! identity from the involution once the downstairs word problem is solved.

use crate::braid::BraidWord;
use crate::fibration::{CycleBase, SymmetricCycle};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A `2h × 2h` integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticMatrix {
    h: usize,
    m: Vec<i64>,
}

impl SymplecticMatrix {
    pub fn identity(h: usize) -> Self {
        let d = 2 * h;
        let mut m = vec![0; d * d];
        for i in 0..d {
            m[i * d + i] = 1;
        }
        SymplecticMatrix { h, m }
    }

    pub fn genus(&self) -> usize {
        self.h
    }

    pub fn dim(&self) -> usize {
        2 * self.h
    }

    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.m[r * self.dim() + c]
    }

    /// The standard symplectic form: `J(a_k, b_k) = 1` blockwise.
    pub fn j_form(h: usize) -> Self {
        let d = 2 * h;
        let mut m = vec![0; d * d];
        for k in 0..h {
            m[(2 * k) * d + (2 * k + 1)] = 1;
            m[(2 * k + 1) * d + (2 * k)] = -1;
        }
        SymplecticMatrix { h, m }
    }

    pub fn mul(&self, other: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.h, other.h);
        let d = self.dim();
        let mut m = vec![0i64; d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.m[r * d + k];
                if a == 0 {
                    continue;
                }
                for c in 0..d {
                    m[r * d + c] += a * other.m[k * d + c];
                }
            }
        }
        SymplecticMatrix { h: self.h, m }
    }

    pub fn transpose(&self) -> SymplecticMatrix {
        let d = self.dim();
        let mut m = vec![0; d * d];
        for r in 0..d {
            for c in 0..d {
                m[c * d + r] = self.m[r * d + c];
            }
        }
        SymplecticMatrix { h: self.h, m }
    }

    /// Exact check of `MᵀJM = J`.
    pub fn is_symplectic(&self) -> bool {
        let j = Self::j_form(self.h);
        self.transpose().mul(&j).mul(self) == j
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.h)
    }

    pub fn is_minus_identity(&self) -> bool {
        let d = self.dim();
        self.m.iter().enumerate().all(|(idx, &v)| {
            let (r, c) = (idx / d, idx % d);
            v == if r == c { -1 } else { 0 }
        })
    }

    /// The transvection `x ↦ x + ⟨x, v⟩ v` (right-handed twist about a curve
    /// of class `v`), or its inverse.
    pub fn transvection(h: usize, v: &[i64], inverse: bool) -> SymplecticMatrix {
        let d = 2 * h;
        assert_eq!(v.len(), d);
        let sign = if inverse { -1 } else { 1 };
        let j = Self::j_form(h);
        // pairing[c] = ⟨e_c, v⟩
        let mut pairing = vec![0i64; d];
        for c in 0..d {
            for k in 0..d {
                pairing[c] += j.m[c * d + k] * v[k];
            }
        }
        let mut out = Self::identity(h);
        for r in 0..d {
            for c in 0..d {
                out.m[r * d + c] += sign * pairing[c] * v[r];
            }
        }
        out
    }
}

impl fmt::Display for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        for r in 0..d {
            for c in 0..d {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.m[r * d + c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Homology class of the standard chain curve `c_i` on the genus-`h`
/// surface, `1 ≤ i ≤ 2h+1`, in the ordered basis `a₁,b₁,…,a_h,b_h`.
///
/// Odd chain curves lift the equatorial arcs between branch points
/// `(2k-1, 2k)` and realize `a_k`, with the last one homologous to
/// `-(a₁+⋯+a_h)`; even chain curves realize `b_k - b_{k+1}` (and `b_h` for
/// the final pair). Consecutive classes pair to `±1`, all other pairs to
/// `0`, which pins the chain intersection pattern.
pub fn chain_class(h: usize, i: usize) -> Vec<i64> {
    assert!(i >= 1 && i <= 2 * h + 1, "chain index {i} out of range for genus {h}");
    let d = 2 * h;
    let mut v = vec![0i64; d];
    if i % 2 == 1 {
        let k = (i + 1) / 2; // 1-based
        if k <= h {
            v[2 * (k - 1)] = 1;
        } else {
            for t in 0..h {
                v[2 * t] = -1;
            }
        }
    } else {
        let k = i / 2;
        if k < h {
            v[2 * (k - 1) + 1] = 1;
            v[2 * k + 1] = -1;
        } else {
            v[2 * (h - 1) + 1] = 1;
        }
    }
    v
}

/// Symplectic matrix of the mapping class named by a braid word upstairs:
/// each `t_i^±` lifts to the twist about the chain curve `c_i`. Letters are
/// applied left to right, so matrices multiply on the left.
pub fn symplectic_of_braid(h: usize, word: &BraidWord) -> SymplecticMatrix {
    assert_eq!(word.strands(), 2 * h + 2, "conjugator lives on 2h+2 strands");
    let mut acc = SymplecticMatrix::identity(h);
    for l in word.letters() {
        let t = SymplecticMatrix::transvection(h, &chain_class(h, l.index), l.inverse);
        acc = t.mul(&acc);
    }
    acc
}

/// Apply the mapping class of `word` to a homology class.
pub fn apply_braid_to_class(h: usize, word: &BraidWord, v: &[i64]) -> Vec<i64> {
    let m = symplectic_of_braid(h, word);
    let d = 2 * h;
    let mut out = vec![0i64; d];
    for r in 0..d {
        for c in 0..d {
            out[r] += m.at(r, c) * v[c];
        }
    }
    out
}

/// The exact symplectic matrix of the Dehn twist about a symmetric cycle.
///
/// Separating cycles are null-homologous and give the identity. A conjugated
/// arc generator twists about the transported class of its chain curve,
/// matching the letterwise lift of the downstairs word `w σ_i w⁻¹`: the
/// matrix is `W⁻¹ T_i W`, i.e. the transvection about `W⁻¹·[c_i]`.
pub fn symplectic_of_cycle(h: usize, cycle: &SymmetricCycle) -> SymplecticMatrix {
    match cycle.base {
        CycleBase::SeparatingLoop(_) => SymplecticMatrix::identity(h),
        CycleBase::ArcGenerator(i) => {
            let class = apply_braid_to_class(h, &cycle.conjugator.inverse(), &chain_class(h, i));
            SymplecticMatrix::transvection(h, &class, false)
        }
    }
}

/// Product matrix of a whole word of cycles, left to right.
pub fn symplectic_of_word(h: usize, cycles: &[SymmetricCycle]) -> SymplecticMatrix {
    let mut acc = SymplecticMatrix::identity(h);
    for c in cycles {
        acc = symplectic_of_cycle(h, c).mul(&acc);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn pairing(h: usize, u: &[i64], v: &[i64]) -> i64 {
        let j = SymplecticMatrix::j_form(h);
        let d = 2 * h;
        let mut s = 0;
        for r in 0..d {
            for c in 0..d {
                s += u[r] * j.at(r, c) * v[c];
            }
        }
        s
    }

    #[test]
    fn chain_classes_pair_like_a_chain() {
        for h in 1..=4 {
            for i in 1..=2 * h + 1 {
                for j in i + 1..=2 * h + 1 {
                    let p = pairing(h, &chain_class(h, i), &chain_class(h, j));
                    if j == i + 1 {
                        assert_eq!(p.abs(), 1, "h={h} i={i} j={j}");
                    } else {
                        assert_eq!(p, 0, "h={h} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn transvections_are_symplectic() {
        for h in 1..=3 {
            for i in 1..=2 * h + 1 {
                let t = SymplecticMatrix::transvection(h, &chain_class(h, i), false);
                assert!(t.is_symplectic());
                let t_inv = SymplecticMatrix::transvection(h, &chain_class(h, i), true);
                assert!(t.mul(&t_inv).is_identity());
            }
        }
    }

    #[test]
    fn transvection_squared_moves_only_the_paired_subspace() {
        let h = 2;
        let i = 3;
        let v = chain_class(h, i);
        let t = SymplecticMatrix::transvection(h, &v, false);
        let t2 = t.mul(&t);
        let d = 2 * h;
        for c in 0..d {
            let mut e = vec![0i64; d];
            e[c] = 1;
            let moved = (0..d).any(|r| t2.at(r, c) != if r == c { 1 } else { 0 });
            assert_eq!(moved, pairing(h, &e, &v) != 0);
        }
    }

    #[test]
    fn hyperelliptic_involution_is_minus_identity() {
        // ι = t₁⋯t_{2h+1} t_{2h+1}⋯t₁ acts as -I on homology.
        for h in 1..=3 {
            let n = 2 * h + 2;
            let mut signed: Vec<i64> = (1..=2 * h + 1).map(|i| i as i64).collect();
            signed.extend((1..=2 * h + 1).rev().map(|i| i as i64));
            let word = BraidWord::from_signed(n, &signed);
            let m = symplectic_of_braid(h, &word);
            assert!(m.is_minus_identity(), "h={h}");
            assert!(m.mul(&m).is_identity());
        }
    }

    #[test]
    fn odd_chain_relation_on_homology() {
        // (t₁⋯t_{2h+1})^{2h+2} = 1 upstairs, so the matrix power is +I.
        for h in 1..=3 {
            let n = 2 * h + 2;
            let signed: Vec<i64> = (1..=2 * h + 1).map(|i| i as i64).collect();
            let word = BraidWord::from_signed(n, &signed).repeat(2 * h + 2);
            assert!(symplectic_of_braid(h, &word).is_identity(), "h={h}");
        }
    }

    #[test]
    fn even_chain_block_is_identity() {
        // (t₁⋯t_{2g})^{2(2g+1)} is a twist about a separating curve: trivial
        // on homology. Checked inside genus h = g+1.
        for g in 1..=3 {
            let h = g + 1;
            let n = 2 * h + 2;
            let signed: Vec<i64> = (1..=2 * g).map(|i| i as i64).collect();
            let word = BraidWord::from_signed(n, &signed).repeat(2 * (2 * g + 1));
            assert!(symplectic_of_braid(h, &word).is_identity(), "g={g}");
        }
    }

    #[test]
    fn products_stay_symplectic() {
        let h = 2;
        let word = BraidWord::from_signed(6, &[1, -2, 3, 3, 5, -4, 1]);
        assert!(symplectic_of_braid(h, &word).is_symplectic());
    }

    #[test]
    fn separating_cycles_act_trivially() {
        use crate::fibration::{CycleBase, SymmetricCycle};
        for h in 2..=4 {
            let n = 2 * h + 2;
            for g in 1..h {
                for conj in [vec![], vec![1i64, -3], vec![(2 * h as i64 + 1), 2]] {
                    let c = SymmetricCycle::conjugated(
                        CycleBase::SeparatingLoop(g),
                        BraidWord::from_signed(n, &conj),
                    );
                    assert!(symplectic_of_cycle(h, &c).is_identity(), "h={h} g={g}");
                }
            }
        }
        // a word of separating loops only multiplies to the identity
        let word = vec![
            SymmetricCycle::sep(3, 1),
            SymmetricCycle::sep(3, 2),
            SymmetricCycle::conjugated(CycleBase::SeparatingLoop(1), BraidWord::from_signed(8, &[4])),
        ];
        assert!(symplectic_of_word(3, &word).is_identity());
    }
}
