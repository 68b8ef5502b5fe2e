//! Closed-form invariants, cross-identities, and the rewriters trading a
//! separating cycle for its chain block.
//!
//! The chain relation `(t_{a₁}⋯t_{a_{2g}})^{2(2g+1)} = t_{γ₀}` lets a
//! genus-`g` separating cycle be deformed into `4g(2g+1)` nonseparating
//! ones, and conversely a literal chain block can be resolved back into one
//! separating cycle. Both rewrites fix the global mapping class exactly.

use crate::braid::BraidWord;
use crate::branch::BranchedCoverDescription;
use crate::cover::separating_block;
use crate::fibration::{CycleBase, FibrationSpec, SymmetricCycle};
use crate::garside::prove_relation;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::ops::Range;
use thiserror::Error;

/// χ of the closed-up fibration: `2(2-2h) + μ`.
pub fn euler_total(h: usize, mu: usize) -> i64 {
    2 * (2 - 2 * h as i64) + mu as i64
}

/// χ of the closed branch surface: `4h + 4 - μ_ns + 2σ`.
pub fn euler_branch(h: usize, mu_ns: usize, sigma: usize) -> i64 {
    4 * h as i64 + 4 - mu_ns as i64 + 2 * sigma as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("signature formula is not integral for these counts (numerator {numerator} over {denominator})")]
    NonIntegral { numerator: i64, denominator: i64 },
    #[error("Milnor data needs odd n ≥ 1 (got {0})")]
    EvenN(usize),
}

/// Signature of the hyperelliptic fibration from its cycle counts:
/// `-((h+1)/(2h+1))·n_ns + Σ_g (4g(h-g)/(2h+1) - 1)·s_g`, exact in
/// integers, rejecting non-integral inputs.
pub fn signature_endo(
    h: usize,
    n_ns: usize,
    sep_counts: &BTreeMap<usize, usize>,
) -> Result<i64, InvariantError> {
    let hh = h as i64;
    let denom = 2 * hh + 1;
    // numerator of σ·(2h+1)
    let mut num = -(hh + 1) * n_ns as i64;
    for (&g, &count) in sep_counts {
        let gg = g as i64;
        num += (4 * gg * (hh - gg) - denom) * count as i64;
    }
    if num % denom != 0 {
        return Err(InvariantError::NonIntegral { numerator: num, denominator: denom });
    }
    Ok(num / denom)
}

/// The defining identity of a compiled description:
/// `2χ(ambient) - χ(branch) = χ(M')`.
pub fn check_cover_identity(d: &BranchedCoverDescription) -> bool {
    2 * d.ambient.euler() - d.chi_branch == d.cover.chi_mprime
}

/// Data of the deformed infinitely-close `n`-tuple point, `n = 2g+1`: the
/// Milnor fiber of `zⁿ + w²ⁿ` and its double cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MilnorData {
    pub n: usize,
    /// Spheres of square -2 in the cover of the deformation.
    pub sphere_count: i64,
    /// χ of the fiber surface, the minimal Seifert surface of the `(n,2n)`
    /// torus link: `p + q - pq`.
    pub chi_fiber: i64,
    /// χ of the double cover branched over the fiber: `2 - χ_fiber`.
    pub chi_cover: i64,
}

pub fn milnor_data(n: usize) -> Result<MilnorData, InvariantError> {
    if n % 2 == 0 || n == 0 {
        return Err(InvariantError::EvenN(n));
    }
    let nn = n as i64;
    let sphere_count = (nn - 1) * (2 * nn - 1);
    let chi_fiber = 3 * nn - 2 * nn * nn;
    let chi_cover = 2 - chi_fiber;
    debug_assert_eq!(chi_cover, 1 + sphere_count);
    Ok(MilnorData { n, sphere_count, chi_fiber, chi_cover })
}

/// Data of the resolved singularity: the lifted genus-`g` surface of square
/// -2 meeting a -1-sphere once, and the blow-down to square -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionData {
    pub g: usize,
    pub surface_square: i64,
    pub sphere_square: i64,
    pub intersections: i64,
    pub blown_down_surface_square: i64,
    pub chi_before: i64,
    pub chi_after: i64,
}

pub fn resolution_data(g: usize) -> ResolutionData {
    let gg = g as i64;
    ResolutionData {
        g,
        surface_square: -2,
        sphere_square: -1,
        intersections: 1,
        blown_down_surface_square: -1,
        chi_before: (2 - 2 * gg) + 2 - 1,
        chi_after: 2 - 2 * gg,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("cycle at index {0} is not a separating loop")]
    NotSeparating(usize),
    #[error("word range is not a uniformly conjugated chain block: {0}")]
    NotAChainBlock(String),
    #[error("index {index} out of range for word of length {len}")]
    OutOfRange { index: usize, len: usize },
}

/// The chain block letters `(a₁,…,a_{2g})` repeated `2(2g+1)` times, each
/// conjugated by `conj`.
fn chain_block(_h: usize, g: usize, conj: &BraidWord) -> Vec<SymmetricCycle> {
    let mut out = Vec::with_capacity(4 * g * (2 * g + 1));
    for _ in 0..2 * (2 * g + 1) {
        for i in 1..=2 * g {
            out.push(SymmetricCycle {
                base: CycleBase::ArcGenerator(i),
                conjugator: conj.clone(),
            });
        }
    }
    debug_assert_eq!(out.len(), 4 * g * (2 * g + 1));
    out
}

/// Replace the separating cycle at `index` by its chain block, all letters
/// carrying the same conjugator. The word grows by `4g(2g+1) - 1` letters
/// and its global mapping class is unchanged.
pub fn deform_cycle(spec: &FibrationSpec, index: usize) -> Result<FibrationSpec, RewriteError> {
    if index >= spec.word.len() {
        return Err(RewriteError::OutOfRange { index, len: spec.word.len() });
    }
    let h = spec.genus;
    let cycle = &spec.word[index];
    let CycleBase::SeparatingLoop(g_raw) = cycle.base else {
        return Err(RewriteError::NotSeparating(index));
    };
    let g = g_raw.min(h - g_raw);
    let mut word = spec.word.clone();
    let block = chain_block(h, g, &cycle.conjugator);
    word.splice(index..=index, block);
    Ok(FibrationSpec { genus: h, base: spec.base, word })
}

/// Recognize a uniformly conjugated chain block in `range` and replace it
/// by the single separating cycle it resolves to. Inverse of
/// [`deform_cycle`]; the block is verified downstairs with the Garside
/// normal form.
pub fn resolve_block(spec: &FibrationSpec, range: Range<usize>) -> Result<FibrationSpec, RewriteError> {
    let h = spec.genus;
    if range.end > spec.word.len() || range.start >= range.end {
        return Err(RewriteError::OutOfRange { index: range.end, len: spec.word.len() });
    }
    let letters = &spec.word[range.clone()];
    let len = letters.len();

    // length must be 4g(2g+1) for some genus 1 ≤ g ≤ h-1
    let g = (1..h)
        .find(|&g| 4 * g * (2 * g + 1) == len)
        .ok_or_else(|| RewriteError::NotAChainBlock(format!("length {len} is not 4g(2g+1)")))?;

    let conj = letters[0].conjugator.clone();
    for (k, c) in letters.iter().enumerate() {
        let expected = 1 + k % (2 * g);
        if c.base != CycleBase::ArcGenerator(expected) {
            return Err(RewriteError::NotAChainBlock(format!(
                "letter {k} is not a{expected}",
            )));
        }
        if c.conjugator != conj {
            return Err(RewriteError::NotAChainBlock(format!(
                "letter {k} carries a different conjugator"
            )));
        }
    }

    // Downstairs verification: the plain block equals the separating twist.
    let n = 2 * h + 2;
    let once: Vec<i64> = (1..=2 * g as i64).collect();
    let block_word = BraidWord::from_signed(n, &once).repeat(2 * (2 * g + 1));
    if !prove_relation(&block_word, &separating_block(n, g)) {
        return Err(RewriteError::NotAChainBlock("block word fails the chain relation".into()));
    }

    let mut word = spec.word.clone();
    word.splice(range, [SymmetricCycle { base: CycleBase::SeparatingLoop(g), conjugator: conj }]);
    Ok(FibrationSpec { genus: h, base: spec.base, word })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::compile_branched_cover;
    use crate::certify::certify_global_monodromy;
    use crate::fibration::{parse_fibration, print_fibration};

    #[test]
    fn euler_total_anchors() {
        assert_eq!(euler_total(2, 8), 4);
        for h in 1..=5 {
            assert_eq!(euler_total(h, 0), 4 - 4 * h as i64);
        }
        assert_eq!(euler_total(2, 30), 26);
    }

    #[test]
    fn euler_branch_anchors() {
        assert_eq!(euler_branch(2, 6, 2), 10);
        for h in 1..=5 {
            assert_eq!(euler_branch(h, 0, 0), 4 * h as i64 + 4);
        }
        // Adjunction cross-check at (2, 20, 0): the class (6, 2) in the
        // trivial bundle has genus 5, so χ = 2 - 2·5 = -8.
        assert_eq!(euler_branch(2, 20, 0), -8);
    }

    #[test]
    fn signature_anchors() {
        let mut two_sep = BTreeMap::new();
        two_sep.insert(1, 2);
        assert_eq!(signature_endo(2, 6, &two_sep).unwrap(), -4);

        for h in 1..=5 {
            assert_eq!(signature_endo(h, 0, &BTreeMap::new()).unwrap(), 0);
        }

        let mut four_sep = BTreeMap::new();
        four_sep.insert(1, 4);
        assert_eq!(signature_endo(2, 12, &four_sep).unwrap(), -8);

        assert_eq!(signature_endo(2, 20, &BTreeMap::new()).unwrap(), -12);
        assert_eq!(signature_endo(2, 30, &BTreeMap::new()).unwrap(), -18);

        assert_eq!(
            signature_endo(2, 7, &BTreeMap::new()),
            Err(InvariantError::NonIntegral { numerator: -21, denominator: 5 })
        );
    }

    #[test]
    fn milnor_anchors() {
        let m3 = milnor_data(3).unwrap();
        assert_eq!(m3.sphere_count, 10);
        assert_eq!(m3.chi_cover, 11);

        let m1 = milnor_data(1).unwrap();
        assert_eq!(m1.sphere_count, 0);
        assert_eq!(m1.chi_cover, 1);

        let m5 = milnor_data(5).unwrap();
        assert_eq!(m5.sphere_count, 36);
        assert_eq!(m5.chi_cover, 37);

        assert!(milnor_data(4).is_err());

        // chi_cover = 1 + sphere_count for all odd n
        for n in (1..=11).step_by(2) {
            let m = milnor_data(n).unwrap();
            assert_eq!(m.chi_cover, 1 + m.sphere_count);
            assert_eq!(m.chi_cover, 2 - m.chi_fiber);
        }
    }

    #[test]
    fn resolution_anchors() {
        let r1 = resolution_data(1);
        assert_eq!(r1.blown_down_surface_square, -1);
        assert_eq!(r1.chi_after, 0);
        assert_eq!(r1.chi_before, 1);

        let r0 = resolution_data(0);
        assert_eq!(r0.sphere_square, -1);
        assert_eq!(r0.chi_after, 2);

        assert_eq!(resolution_data(2).chi_after, -2);
        for g in 0..5 {
            let r = resolution_data(g);
            assert_eq!(r.chi_before, r.chi_after + 1);
        }
    }

    #[test]
    fn deform_single_separating_loop() {
        let spec = parse_fibration("genus 2; base disk; word = [s1]").unwrap();
        let deformed = deform_cycle(&spec, 0).unwrap();
        assert_eq!(deformed.mu(), 12);
        for (k, c) in deformed.word.iter().enumerate() {
            assert_eq!(c.base, CycleBase::ArcGenerator(1 + k % 2));
            assert!(c.conjugator.is_empty());
        }
        // μ grows by 4g(2g+1) - 1
        assert_eq!(deformed.mu() - spec.mu(), 11);
    }

    #[test]
    fn deform_rejects_nonseparating_letter() {
        let spec = parse_fibration("genus 2; base disk; word = [a1]").unwrap();
        assert_eq!(deform_cycle(&spec, 0), Err(RewriteError::NotSeparating(0)));
    }

    #[test]
    fn deform_distributes_the_conjugator() {
        let spec = parse_fibration("genus 2; base disk; word = [conj(s1; t4)]").unwrap();
        let deformed = deform_cycle(&spec, 0).unwrap();
        assert_eq!(deformed.mu(), 12);
        for c in &deformed.word {
            assert_eq!(c.conjugator, BraidWord::from_signed(6, &[4]));
        }
    }

    #[test]
    fn resolve_round_trips_deform() {
        for src in [
            "genus 2; base disk; word = [s1]",
            "genus 3; base disk; word = [s1]",
            "genus 2; base disk; word = [conj(s1; t4 t2')]",
            "genus 3; base disk; word = [a3, s1, a1]",
        ] {
            let spec = parse_fibration(src).unwrap();
            let idx = spec.word.iter().position(|c| c.is_separating()).unwrap();
            let deformed = deform_cycle(&spec, idx).unwrap();
            let block_len = 12;
            let resolved = resolve_block(&deformed, idx..idx + block_len).unwrap();
            assert_eq!(resolved, spec);
            assert_eq!(print_fibration(&resolved), print_fibration(&spec));
        }
    }

    #[test]
    fn resolve_accepts_plain_chain_block() {
        // (a₁a₂)⁶ at h = 3 resolves to s1.
        let mut letters = Vec::new();
        for _ in 0..6 {
            letters.push("a1");
            letters.push("a2");
        }
        let src = format!("genus 3; base disk; word = [{}]", letters.join(", "));
        let spec = parse_fibration(&src).unwrap();
        let resolved = resolve_block(&spec, 0..12).unwrap();
        assert_eq!(resolved.word, vec![SymmetricCycle::sep(3, 1)]);
    }

    #[test]
    fn resolve_rejects_wrong_lengths_and_mixed_conjugators() {
        // (a₁a₂)⁵: 10 letters, not a block length.
        let mut letters = Vec::new();
        for _ in 0..5 {
            letters.push("a1".to_string());
            letters.push("a2".to_string());
        }
        let src = format!("genus 2; base disk; word = [{}]", letters.join(", "));
        let spec = parse_fibration(&src).unwrap();
        assert!(matches!(resolve_block(&spec, 0..10), Err(RewriteError::NotAChainBlock(_))));

        // Right length, one letter conjugated differently.
        let spec = parse_fibration("genus 2; base disk; word = [s1]").unwrap();
        let mut deformed = deform_cycle(&spec, 0).unwrap();
        deformed.word[3].conjugator = BraidWord::from_signed(6, &[5]);
        assert!(matches!(resolve_block(&deformed, 0..12), Err(RewriteError::NotAChainBlock(_))));
    }

    #[test]
    fn rewrites_preserve_certification() {
        // Start from a certified word containing a separating letter: deform
        // it and check the certificate is unchanged.
        let spec = parse_fibration("genus 2; base disk; word = [s1, a3]").unwrap();
        let before = certify_global_monodromy(&spec);
        let deformed = deform_cycle(&spec, 0).unwrap();
        let after = certify_global_monodromy(&deformed);
        assert_eq!(before.verdict, after.verdict);
        assert_eq!(before.permutation_trivial, after.permutation_trivial);
        assert_eq!(before.action_inner, after.action_inner);
        assert_eq!(before.symplectic_value, after.symplectic_value);
    }

    #[test]
    fn cover_identity_for_compiled_descriptions() {
        let mut cycles = Vec::new();
        for _ in 0..2 {
            for i in 1..=5 {
                cycles.push(SymmetricCycle::arc(2, i));
            }
            for i in (1..=5).rev() {
                cycles.push(SymmetricCycle::arc(2, i));
            }
        }
        let spec = FibrationSpec::new(2, crate::fibration::BaseSurface::Sphere, cycles);
        let d = compile_branched_cover(&spec).unwrap();
        assert!(check_cover_identity(&d));
        let mut corrupted = d.clone();
        corrupted.chi_branch += 1;
        assert!(!check_cover_identity(&corrupted));
    }
}
