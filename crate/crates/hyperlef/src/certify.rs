//! Certification of the global monodromy.
//!
//! Over the sphere the product of the vanishing-cycle twists must be
//! isotopic to the identity. Downstairs this is the marked-sphere word
//! problem, solved exactly by the Hurwitz action; it leaves a two-fold
//! ambiguity upstairs between the identity and the hyperelliptic
//! involution, which the symplectic shadow resolves since the involution
//! acts as `-I` on homology.

use crate::braid::BraidWord;
use crate::cover::project_twist;
use crate::fibration::FibrationSpec;
use crate::hurwitz::{act_on_state, inner_conjugator, FreeGroupState};
use crate::symplectic::{symplectic_of_word, SymplecticMatrix};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Classification of the word's total symplectic matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymplecticValue {
    PlusIdentity,
    MinusIdentity,
    Other,
}

/// The upstairs verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    IdentityUpstairs,
    HyperellipticInvolution,
    NotTrivial,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::IdentityUpstairs => write!(f, "identity upstairs"),
            Verdict::HyperellipticInvolution => write!(f, "hyperelliptic involution"),
            Verdict::NotTrivial => write!(f, "not trivial"),
        }
    }
}

/// Exact certificate for a fibration word.
///
/// `verdict == IdentityUpstairs` iff the permutation is trivial, the
/// downstairs action is a global conjugation, and the symplectic product is
/// `+I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCertificate {
    pub permutation_trivial: bool,
    pub symplectic_value: SymplecticValue,
    pub action_inner: bool,
    pub verdict: Verdict,
}

fn classify_matrix(m: &SymplecticMatrix) -> SymplecticValue {
    if m.is_identity() {
        SymplecticValue::PlusIdentity
    } else if m.is_minus_identity() {
        SymplecticValue::MinusIdentity
    } else {
        SymplecticValue::Other
    }
}

/// The full downstairs braid of the word: concatenated twist projections,
/// in word order.
pub fn downstairs_word(spec: &FibrationSpec) -> BraidWord {
    let h = spec.genus;
    let mut w = BraidWord::identity(2 * h + 2);
    for c in &spec.word {
        w = w.concat(&project_twist(h, c));
    }
    w
}

/// Certify the global monodromy of a validated spec.
///
/// Works for any base; a sphere-base spec must come out `IdentityUpstairs`
/// before it can be compiled.
pub fn certify_global_monodromy(spec: &FibrationSpec) -> IdentityCertificate {
    let spec = spec.canonicalized();
    let word = downstairs_word(&spec);
    let n = spec.marked_points();

    let permutation_trivial = word.permutation().is_identity();
    let action_inner = if permutation_trivial {
        let state = act_on_state(&word, &FreeGroupState::basepoint(n));
        inner_conjugator(&state).is_some()
    } else {
        false
    };
    let symplectic_value = classify_matrix(&symplectic_of_word(spec.genus, &spec.word));

    let verdict = if permutation_trivial && action_inner {
        match symplectic_value {
            SymplecticValue::PlusIdentity => Verdict::IdentityUpstairs,
            SymplecticValue::MinusIdentity => Verdict::HyperellipticInvolution,
            SymplecticValue::Other => Verdict::NotTrivial,
        }
    } else {
        Verdict::NotTrivial
    };

    IdentityCertificate { permutation_trivial, symplectic_value, action_inner, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::{parse_fibration, BaseSurface, FibrationSpec, SymmetricCycle};

    /// `(a₁ ⋯ a_{2h+1} a_{2h+1} ⋯ a₁)^reps`: the involution word repeated.
    pub(crate) fn involution_word(h: usize, reps: usize) -> FibrationSpec {
        let mut cycles = Vec::new();
        for _ in 0..reps {
            for i in 1..=2 * h + 1 {
                cycles.push(SymmetricCycle::arc(h, i));
            }
            for i in (1..=2 * h + 1).rev() {
                cycles.push(SymmetricCycle::arc(h, i));
            }
        }
        FibrationSpec::new(h, BaseSurface::Sphere, cycles)
    }

    #[test]
    fn empty_word_is_identity_upstairs() {
        let spec = parse_fibration("genus 2; base sphere; word = []").unwrap();
        let c = certify_global_monodromy(&spec);
        assert_eq!(c.verdict, Verdict::IdentityUpstairs);
    }

    #[test]
    fn involution_squared_is_identity_upstairs() {
        // (a₁a₂a₃a₄a₅ a₅a₄a₃a₂a₁)² at h = 2, μ = 20.
        let spec = involution_word(2, 2);
        assert_eq!(spec.mu(), 20);
        let c = certify_global_monodromy(&spec);
        assert!(c.permutation_trivial);
        assert!(c.action_inner);
        assert_eq!(c.symplectic_value, SymplecticValue::PlusIdentity);
        assert_eq!(c.verdict, Verdict::IdentityUpstairs);
    }

    #[test]
    fn involution_word_itself_is_the_involution() {
        let spec = involution_word(2, 1);
        let c = certify_global_monodromy(&spec);
        assert!(c.permutation_trivial);
        assert!(c.action_inner);
        assert_eq!(c.symplectic_value, SymplecticValue::MinusIdentity);
        assert_eq!(c.verdict, Verdict::HyperellipticInvolution);
    }

    #[test]
    fn odd_chain_power_is_identity_upstairs() {
        // (a₁⋯a₅)⁶ at h = 2, μ = 30: downstairs the full twist, upstairs +I.
        let h = 2;
        let mut cycles = Vec::new();
        for _ in 0..(2 * h + 2) {
            for i in 1..=2 * h + 1 {
                cycles.push(SymmetricCycle::arc(h, i));
            }
        }
        let spec = FibrationSpec::new(h, BaseSurface::Sphere, cycles);
        assert_eq!(spec.mu(), 30);
        let c = certify_global_monodromy(&spec);
        assert_eq!(c.verdict, Verdict::IdentityUpstairs);
    }

    #[test]
    fn half_of_the_chain_power_is_not_trivial() {
        // (a₁⋯a₅)³: nontrivial permutation downstairs.
        let h = 2;
        let mut cycles = Vec::new();
        for _ in 0..3 {
            for i in 1..=2 * h + 1 {
                cycles.push(SymmetricCycle::arc(h, i));
            }
        }
        let spec = FibrationSpec::new(h, BaseSurface::Sphere, cycles);
        let c = certify_global_monodromy(&spec);
        assert!(!c.permutation_trivial);
        assert_ne!(c.verdict, Verdict::IdentityUpstairs);
    }

    #[test]
    fn single_arc_fails_certification() {
        let spec = parse_fibration("genus 2; base sphere; word = [a1]").unwrap();
        let c = certify_global_monodromy(&spec);
        assert!(!c.permutation_trivial);
        assert_eq!(c.verdict, Verdict::NotTrivial);
    }

    #[test]
    fn single_separating_loop_fails_certification() {
        let spec = parse_fibration("genus 2; base sphere; word = [s1]").unwrap();
        let c = certify_global_monodromy(&spec);
        assert!(c.permutation_trivial);
        assert!(!c.action_inner);
        assert_eq!(c.verdict, Verdict::NotTrivial);
    }

    #[test]
    fn certificate_is_conjugation_invariant() {
        // Transporting every letter by the same braid preserves the verdict.
        let u = BraidWord::from_signed(6, &[3, -1, 5]);
        let spec = involution_word(2, 2);
        let moved = FibrationSpec::new(
            2,
            BaseSurface::Sphere,
            spec.word.iter().map(|c| c.transported(&u)).collect(),
        );
        assert_eq!(certify_global_monodromy(&moved).verdict, Verdict::IdentityUpstairs);
    }

    #[test]
    fn trivial_downstairs_words_have_plus_or_minus_shadow() {
        // Products of conjugated sphere relators and full twists are trivial
        // on the marked sphere; their letterwise lifts must land on ±I.
        use crate::hurwitz::is_trivial_downstairs;
        use crate::symplectic::symplectic_of_braid;
        let n = 6;
        let relator = BraidWord::from_signed(n, &[1, 2, 3, 4, 5, 5, 4, 3, 2, 1]);
        let full = BraidWord::from_signed(n, &[1, 2, 3, 4, 5]).repeat(6);
        let conjugators = [
            BraidWord::identity(n),
            BraidWord::from_signed(n, &[2, -4]),
            BraidWord::from_signed(n, &[5, 1, 1]),
        ];
        for u in &conjugators {
            for core in [&relator, &full] {
                let w = u.concat(core).concat(&u.inverse());
                assert!(is_trivial_downstairs(&w));
                let m = symplectic_of_braid(2, &w);
                assert!(m.is_identity() || m.is_minus_identity());
            }
        }
        // and a mixed product
        let w = relator.concat(&full).concat(&relator);
        assert!(is_trivial_downstairs(&w));
        let m = symplectic_of_braid(2, &w);
        assert!(m.is_identity(), "two relators and a full twist lift to ι² = 1");
    }

    #[test]
    fn cyclewise_symplectic_matches_letterwise_lift() {
        // The per-cycle transvection product must equal the letterwise lift
        // of the full downstairs braid.
        use crate::symplectic::{symplectic_of_braid, symplectic_of_word};
        let src = "genus 2; base disk; word = [conj(a3; t2 t1), s1, conj(a2; t4' t3), a5, conj(s1; t4)]";
        let spec = parse_fibration(src).unwrap();
        let cyclewise = symplectic_of_word(spec.genus, &spec.word);
        let letterwise = symplectic_of_braid(spec.genus, &super::downstairs_word(&spec));
        assert_eq!(cyclewise, letterwise);
    }

    #[test]
    fn elliptic_chain_block_certifies() {
        // h = 1: (a₁a₂)⁶ is a boundary twist of a once-holed torus, trivial
        // in the closed mapping class group.
        let h = 1;
        let mut cycles = Vec::new();
        for _ in 0..6 {
            cycles.push(SymmetricCycle::arc(h, 1));
            cycles.push(SymmetricCycle::arc(h, 2));
        }
        let spec = FibrationSpec::new(h, BaseSurface::Sphere, cycles);
        assert_eq!(certify_global_monodromy(&spec).verdict, Verdict::IdentityUpstairs);
    }
}
