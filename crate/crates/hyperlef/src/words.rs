//! Standard certified monodromy words.
//!
//! These are the classical genus-`h` relators in the symmetric-cycle
//! encoding: the involution relator, the odd chain power, and the genus-2
//! word with two separating cycles realizing the fibration on
//! `T²×S² # 4CP̄²`. Each certifies to the identity upstairs.

use crate::braid::BraidWord;
use crate::fibration::{BaseSurface, CycleBase, FibrationSpec, SymmetricCycle};

/// `(a₁ ⋯ a_{2h+1} a_{2h+1} ⋯ a₁)^reps`. One repetition is the
/// hyperelliptic involution; two certify to the identity, with
/// `μ = 4(2h+1)`.
pub fn involution_power(h: usize, reps: usize) -> FibrationSpec {
    let mut word = Vec::new();
    for _ in 0..reps {
        for i in 1..=2 * h + 1 {
            word.push(SymmetricCycle::arc(h, i));
        }
        for i in (1..=2 * h + 1).rev() {
            word.push(SymmetricCycle::arc(h, i));
        }
    }
    FibrationSpec::new(h, BaseSurface::Sphere, word)
}

/// `(a₁ ⋯ a_{2h+1})^{(2h+2)·reps}`: the odd chain relation, downstairs the
/// full twist. One repetition has `μ = (2h+1)(2h+2)`.
pub fn chain_power(h: usize, reps: usize) -> FibrationSpec {
    let mut word = Vec::new();
    for _ in 0..(2 * h + 2) * reps {
        for i in 1..=2 * h + 1 {
            word.push(SymmetricCycle::arc(h, i));
        }
    }
    FibrationSpec::new(h, BaseSurface::Sphere, word)
}

/// The genus-2 word `(β₁, γ₀, β₂, β₃)²` with two separating cycles:
/// `μ = 8`, six nonseparating cycles along the three symmetric long arcs
/// and two copies of the standard genus-1 separating loop. Satisfies
/// `(β₁ t_{γ₀} β₂ β₃)² = 1`; downstairs the word equals the full twist
/// `Δ²` in the braid group, so it is trivial on the marked sphere, and the
/// symplectic product is `+I`.
pub fn matsumoto_word() -> FibrationSpec {
    let n = 6;
    let beta1 = SymmetricCycle::conjugated(CycleBase::ArcGenerator(3), BraidWord::from_signed(n, &[5, 4]));
    let gamma0 = SymmetricCycle::sep(2, 1);
    let beta2 = SymmetricCycle::conjugated(CycleBase::ArcGenerator(1), BraidWord::from_signed(n, &[3, 2]));
    let beta3 = SymmetricCycle::conjugated(CycleBase::ArcGenerator(2), BraidWord::from_signed(n, &[4, 3]));
    let block = vec![beta1, gamma0, beta2, beta3];
    let mut word = block.clone();
    word.extend(block);
    FibrationSpec::new(2, BaseSurface::Sphere, word)
}

/// The Matsumoto word followed by its image under a twist moving the
/// separating loop: `μ = 16` with four separating cycles, two of them
/// conjugated.
pub fn matsumoto_extended_word() -> FibrationSpec {
    let base = matsumoto_word();
    let u = BraidWord::from_signed(6, &[3]);
    let translated = base.transported(&u);
    let mut word = base.word.clone();
    word.extend(translated.word);
    FibrationSpec::new(2, BaseSurface::Sphere, word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::{compile_branched_cover, Ambient};
    use crate::certify::{certify_global_monodromy, Verdict};
    use crate::cover::{classify_cycle, Classification};

    #[test]
    fn catalog_words_certify() {
        for (name, spec) in [
            ("involution^2 h=1", involution_power(1, 2)),
            ("involution^2 h=2", involution_power(2, 2)),
            ("chain h=2", chain_power(2, 1)),
            ("matsumoto", matsumoto_word()),
            ("matsumoto extended", matsumoto_extended_word()),
        ] {
            let cert = certify_global_monodromy(&spec);
            assert_eq!(cert.verdict, Verdict::IdentityUpstairs, "{name}");
        }
    }

    #[test]
    fn matsumoto_profile() {
        let spec = matsumoto_word();
        assert_eq!(spec.mu(), 8);
        assert_eq!(spec.count_separating(), 2);
        assert_eq!(spec.count_nonseparating(), 6);
        // The three band twists exchange (3,6), (1,4), (2,5): the long arcs
        // pairing the two halves of the marked set.
        let transpositions: Vec<(usize, usize)> = spec.word[..4]
            .iter()
            .filter(|c| !c.is_separating())
            .map(|c| {
                let p = crate::cover::project_twist(2, c).permutation();
                let moved: Vec<usize> = (1..=6).filter(|&q| p.apply(q) != q).collect();
                (moved[0], moved[1])
            })
            .collect();
        assert_eq!(transpositions, vec![(3, 6), (1, 4), (2, 5)]);
        // Classification labels the transported arcs by the conjugator's
        // forward permutation.
        let arcs: Vec<Classification> = spec.word[..4]
            .iter()
            .filter(|c| !c.is_separating())
            .map(|c| classify_cycle(2, c))
            .collect();
        assert_eq!(
            arcs,
            vec![
                Classification::NonseparatingArc { endpoints: (3, 5) },
                Classification::NonseparatingArc { endpoints: (1, 3) },
                Classification::NonseparatingArc { endpoints: (2, 4) },
            ]
        );
    }

    #[test]
    fn matsumoto_word_equals_full_twist_downstairs() {
        // The defining braid identity: the eight-letter word projects to the
        // full twist Δ² in B₆, which is trivial on the marked sphere.
        use crate::certify::downstairs_word;
        use crate::garside::{half_twist_word, prove_relation};
        let w = downstairs_word(&matsumoto_word());
        assert!(prove_relation(&w, &half_twist_word(6).repeat(2)));
    }

    #[test]
    fn matsumoto_compiles_to_five_blowups() {
        let d = compile_branched_cover(&matsumoto_word()).unwrap();
        assert_eq!(d.ambient, Ambient::Cp2BlownUp { blowups: 5 });
        assert_eq!(d.chi_branch, 10);
        assert_eq!(d.cover.chi_mprime, 6);
        assert_eq!(d.cover.chi_m, 4);
    }

    #[test]
    fn extended_word_compiles_to_nine_blowups() {
        let spec = matsumoto_extended_word();
        assert_eq!(spec.mu(), 16);
        assert_eq!(spec.count_separating(), 4);
        let d = compile_branched_cover(&spec).unwrap();
        assert_eq!(d.ambient, Ambient::Cp2BlownUp { blowups: 9 });
        assert_eq!(d.chi_branch, 8);
        assert_eq!(d.cover.chi_mprime, 16);
        assert_eq!(d.cover.chi_m, 12);
    }

    #[test]
    fn extended_word_moves_the_separating_loop() {
        let spec = matsumoto_extended_word();
        let seps: Vec<&crate::fibration::SymmetricCycle> =
            spec.word.iter().filter(|c| c.is_separating()).collect();
        assert_eq!(seps.len(), 4);
        let first = classify_cycle(2, seps[0]);
        let moved = classify_cycle(2, seps[2]);
        assert_ne!(first, moved);
    }
}
