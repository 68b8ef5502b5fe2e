//! Compilation of a certified word into branch-surface data and the ambient
//! 4-manifold.
//!
//! Each nonseparating cycle contributes one band to the ribbon branch
//! surface, attached along its arc and carrying a single left-handed half
//! twist. Each separating cycle contributes a local blow-up model: a
//! -1-framed handle on its loop plus a -2-framed handle on a meridian, and
//! the meridian sphere of square -2 joins the branch set. With `σ`
//! separating cycles the ambient is `CP² # (2σ+1) CP̄²`; with none it is one
//! of the two sphere bundles over the sphere, decided by the parity of
//! `μ / (2(2h+1))`.

use crate::braid::BraidWord;
use crate::certify::{certify_global_monodromy, downstairs_word, Verdict};
use crate::cover::{classify_cycle, Classification};
use crate::fibration::{BaseSurface, FibrationSpec};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// The twist every ribbon band carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BandTwist {
    LeftHalfTwist,
}

/// One band of the ribbon branch surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandRecord {
    /// Position of the contributing cycle in the word.
    pub cycle_index: usize,
    pub arc: Classification,
    pub twist: BandTwist,
}

/// The local blow-up model of one separating cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SepModelRecord {
    pub cycle_index: usize,
    pub loop_class: Classification,
    /// Framings of the handle on the loop and the handle on its meridian.
    pub handle_framings: (i64, i64),
    /// Square of the meridian sphere joining the branch set.
    pub sphere_square: i64,
}

/// Which of the two sphere bundles over the sphere the cover sits over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Trivial,
    Twisted,
}

/// The ambient 4-manifold of the branched cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    S2xS2,
    TwistedS2Bundle,
    Cp2BlownUp { blowups: usize },
}

impl Ambient {
    pub fn euler(&self) -> i64 {
        match self {
            Ambient::S2xS2 | Ambient::TwistedS2Bundle => 4,
            Ambient::Cp2BlownUp { blowups } => 3 + *blowups as i64,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::S2xS2 => write!(f, "S2xS2"),
            Ambient::TwistedS2Bundle => write!(f, "S2x~S2"),
            Ambient::Cp2BlownUp { blowups } => write!(f, "CP2#{blowups}CP2bar"),
        }
    }
}

/// Euler characteristics of the cover and its relative minimalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverInvariants {
    /// χ of the cover itself (the fibration before blowing back down).
    pub chi_mprime: i64,
    /// χ of the relative minimalization.
    pub chi_m: i64,
    /// Number of exceptional fiber spheres blown down, one per separating
    /// cycle.
    pub blowdowns: usize,
}

/// Complete description of the branched cover of a certified word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchedCoverDescription {
    pub ambient: Ambient,
    /// Closing disks of the branch surface, one per marked point.
    pub disks: usize,
    pub bands: Vec<BandRecord>,
    pub sep_models: Vec<SepModelRecord>,
    pub closure_braid: BraidWord,
    pub chi_branch: i64,
    pub cover: CoverInvariants,
    /// Set when the word is nonseparating-only.
    pub parity: Option<Parity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BranchError {
    #[error("global monodromy is not certified: verdict is {0}")]
    NotCertified(Verdict),
    #[error("the fibration base is the disk; only sphere-base words compile")]
    DiskBase,
    #[error("nonseparating count {mu_ns} is not divisible by 2(2h+1) = {divisor}")]
    Divisibility { mu_ns: usize, divisor: usize },
    #[error("bundle parity is defined only for nonseparating-only words ({separating} separating cycles present)")]
    SeparatingPresent { separating: usize },
}

/// One band per nonseparating cycle, in word order.
pub fn build_ribbon_bands(spec: &FibrationSpec) -> Vec<BandRecord> {
    let spec = spec.canonicalized();
    let h = spec.genus;
    spec.word
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_separating())
        .map(|(cycle_index, c)| BandRecord {
            cycle_index,
            arc: classify_cycle(h, c),
            twist: BandTwist::LeftHalfTwist,
        })
        .collect()
}

/// One blow-up model per separating cycle, in word order. Each record adds
/// two blow-ups to the ambient.
pub fn build_sep_models(spec: &FibrationSpec) -> Vec<SepModelRecord> {
    let spec = spec.canonicalized();
    let h = spec.genus;
    spec.word
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_separating())
        .map(|(cycle_index, c)| SepModelRecord {
            cycle_index,
            loop_class: classify_cycle(h, c),
            handle_framings: (-1, -2),
            sphere_square: -2,
        })
        .collect()
}

/// The boundary closure braid: concatenated twist projections in word
/// order. Over the sphere the word must certify first, and the result has
/// trivial marked-sphere class.
pub fn boundary_braid(spec: &FibrationSpec) -> Result<BraidWord, BranchError> {
    let spec = spec.canonicalized();
    if spec.base == BaseSurface::Sphere {
        let cert = certify_global_monodromy(&spec);
        if cert.verdict != Verdict::IdentityUpstairs {
            return Err(BranchError::NotCertified(cert.verdict));
        }
    }
    Ok(downstairs_word(&spec))
}

/// χ of the branch surface: `4h + 4 - μ_ns + 2σ`.
pub fn euler_branch_surface(h: usize, mu_ns: usize, sigma: usize) -> i64 {
    4 * h as i64 + 4 - mu_ns as i64 + 2 * sigma as i64
}

/// Decide which sphere bundle a certified nonseparating-only word covers:
/// trivial iff `μ / (2(2h+1))` is even.
pub fn bundle_parity(spec: &FibrationSpec) -> Result<Parity, BranchError> {
    let spec = spec.canonicalized();
    let sigma = spec.count_separating();
    if sigma > 0 {
        return Err(BranchError::SeparatingPresent { separating: sigma });
    }
    let mu_ns = spec.count_nonseparating();
    let divisor = 2 * (2 * spec.genus + 1);
    if mu_ns % divisor != 0 {
        return Err(BranchError::Divisibility { mu_ns, divisor });
    }
    Ok(if (mu_ns / divisor) % 2 == 0 { Parity::Trivial } else { Parity::Twisted })
}

/// Compile a certified sphere-base word into its branched-cover
/// description.
pub fn compile_branched_cover(spec: &FibrationSpec) -> Result<BranchedCoverDescription, BranchError> {
    let spec = spec.canonicalized();
    if spec.base != BaseSurface::Sphere {
        return Err(BranchError::DiskBase);
    }
    let cert = certify_global_monodromy(&spec);
    if cert.verdict != Verdict::IdentityUpstairs {
        return Err(BranchError::NotCertified(cert.verdict));
    }

    let h = spec.genus;
    let bands = build_ribbon_bands(&spec);
    let sep_models = build_sep_models(&spec);
    let sigma = sep_models.len();
    let mu_ns = bands.len();

    let (ambient, parity) = if sigma == 0 {
        let p = bundle_parity(&spec)?;
        (
            match p {
                Parity::Trivial => Ambient::S2xS2,
                Parity::Twisted => Ambient::TwistedS2Bundle,
            },
            Some(p),
        )
    } else {
        (Ambient::Cp2BlownUp { blowups: 2 * sigma + 1 }, None)
    };

    let chi_branch = euler_branch_surface(h, mu_ns, sigma);
    let chi_mprime = 2 * ambient.euler() - chi_branch;
    let chi_m = chi_mprime - sigma as i64;

    // Cross-check against the handle count χ(M) = 2(2-2h) + μ.
    debug_assert_eq!(chi_m, 2 * (2 - 2 * h as i64) + spec.mu() as i64);

    Ok(BranchedCoverDescription {
        ambient,
        disks: 2 * h + 2,
        bands,
        sep_models,
        closure_braid: downstairs_word(&spec),
        chi_branch,
        cover: CoverInvariants { chi_mprime, chi_m, blowdowns: sigma },
        parity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::{parse_fibration, FibrationSpec, SymmetricCycle};
    use crate::hurwitz::is_trivial_downstairs;

    fn chain_power_word(h: usize, reps: usize) -> FibrationSpec {
        let mut cycles = Vec::new();
        for _ in 0..reps {
            for i in 1..=2 * h + 1 {
                cycles.push(SymmetricCycle::arc(h, i));
            }
        }
        FibrationSpec::new(h, BaseSurface::Sphere, cycles)
    }

    fn involution_squared(h: usize) -> FibrationSpec {
        let mut cycles = Vec::new();
        for _ in 0..2 {
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
    fn all_separating_word_has_no_bands() {
        let spec = parse_fibration("genus 2; base disk; word = [s1, s1]").unwrap();
        assert!(build_ribbon_bands(&spec).is_empty());
        assert_eq!(build_sep_models(&spec).len(), 2);
    }

    #[test]
    fn band_count_matches_nonseparating_count() {
        let spec = involution_squared(2);
        assert_eq!(build_ribbon_bands(&spec).len(), 20);
        assert!(build_sep_models(&spec).is_empty());
    }

    #[test]
    fn boundary_braid_of_single_arc_over_disk() {
        let spec = parse_fibration("genus 2; base disk; word = [a1]").unwrap();
        assert_eq!(boundary_braid(&spec).unwrap(), BraidWord::from_signed(6, &[1]));
    }

    #[test]
    fn boundary_braid_of_separating_loop_over_disk() {
        let spec = parse_fibration("genus 2; base disk; word = [s1]").unwrap();
        assert_eq!(
            boundary_braid(&spec).unwrap(),
            BraidWord::from_signed(6, &[1, 2]).repeat(6)
        );
    }

    #[test]
    fn boundary_braid_requires_certification_over_sphere() {
        let spec = parse_fibration("genus 2; base sphere; word = [a1]").unwrap();
        assert!(matches!(boundary_braid(&spec), Err(BranchError::NotCertified(_))));
    }

    #[test]
    fn certified_boundary_braid_is_trivial_downstairs() {
        let spec = involution_squared(2);
        let w = boundary_braid(&spec).unwrap();
        assert!(w.permutation().is_identity());
        assert!(is_trivial_downstairs(&w));
    }

    #[test]
    fn parity_law_for_genus_two() {
        assert_eq!(bundle_parity(&involution_squared(2)).unwrap(), Parity::Trivial); // μ = 20
        assert_eq!(bundle_parity(&chain_power_word(2, 6)).unwrap(), Parity::Twisted); // μ = 30
    }

    #[test]
    fn parity_law_for_elliptic_words() {
        // h = 1: μ = 12k is always an even multiple of 2(2h+1) = 6.
        for k in 1..=3 {
            let spec = involution_squared(1); // μ = 12
            assert_eq!(spec.mu(), 12);
            let mut word = Vec::new();
            for _ in 0..k {
                word.extend(spec.word.iter().cloned());
            }
            let big = FibrationSpec::new(1, BaseSurface::Sphere, word);
            assert_eq!(bundle_parity(&big).unwrap(), Parity::Trivial);
        }
    }

    #[test]
    fn parity_rejects_bad_divisibility() {
        // 10 letters at h = 1: not divisible by 6. Build an uncertifiable
        // word is fine: bundle_parity only inspects counts.
        let spec = chain_power_word(2, 2); // μ = 10, divisor 10 → quotient 1
        assert_eq!(bundle_parity(&spec).unwrap(), Parity::Twisted);
        let mut cycles = spec.word.clone();
        cycles.push(SymmetricCycle::arc(2, 1));
        let odd = FibrationSpec::new(2, BaseSurface::Sphere, cycles);
        assert_eq!(
            bundle_parity(&odd),
            Err(BranchError::Divisibility { mu_ns: 11, divisor: 10 })
        );
    }

    #[test]
    fn parity_rejects_separating_words() {
        let spec = parse_fibration("genus 2; base sphere; word = [s1]").unwrap();
        assert_eq!(bundle_parity(&spec), Err(BranchError::SeparatingPresent { separating: 1 }));
    }

    #[test]
    fn compile_nonseparating_twenty_word() {
        let spec = involution_squared(2);
        let d = compile_branched_cover(&spec).unwrap();
        assert_eq!(d.ambient, Ambient::S2xS2);
        assert_eq!(d.parity, Some(Parity::Trivial));
        assert_eq!(d.disks, 6);
        assert_eq!(d.chi_branch, -8); // 12 - 20
        assert_eq!(d.cover.chi_mprime, 16);
        assert_eq!(d.cover.chi_m, 16);
        assert_eq!(d.cover.blowdowns, 0);
        // Adjunction oracle: branch class (a, b) = (2h+2, μ/(2(2h+1))) in
        // S²×S² has χ = 2 - 2(a-1)(b-1).
        let (a, b) = (6i64, 2i64);
        assert_eq!(2 - 2 * (a - 1) * (b - 1), d.chi_branch);
    }

    #[test]
    fn compile_thirty_word_gives_twisted_bundle() {
        let spec = chain_power_word(2, 6);
        let d = compile_branched_cover(&spec).unwrap();
        assert_eq!(d.ambient, Ambient::TwistedS2Bundle);
        assert_eq!(d.chi_branch, 12 - 30);
        assert_eq!(d.cover.chi_m, 2 * 4 - (12 - 30)); // 26
    }

    #[test]
    fn compile_rejects_uncertified_word() {
        let spec = parse_fibration("genus 2; base sphere; word = [a1]").unwrap();
        assert!(matches!(compile_branched_cover(&spec), Err(BranchError::NotCertified(_))));
    }

    #[test]
    fn compile_rejects_disk_base() {
        let spec = parse_fibration("genus 2; base disk; word = []").unwrap();
        assert_eq!(compile_branched_cover(&spec), Err(BranchError::DiskBase));
    }

    #[test]
    fn empty_word_compiles_to_trivial_bundle() {
        let spec = parse_fibration("genus 2; base sphere; word = []").unwrap();
        let d = compile_branched_cover(&spec).unwrap();
        assert_eq!(d.ambient, Ambient::S2xS2);
        assert_eq!(d.chi_branch, 12); // 2h+2 disk-spheres
        assert_eq!(d.cover.chi_m, 4 - 4 * 2);
        // 2χ(X) - χ(B) = χ(M'): 8 - 12 = -4.
        assert_eq!(2 * d.ambient.euler() - d.chi_branch, d.cover.chi_mprime);
    }

    #[test]
    fn cover_identity_holds_for_compiled_words() {
        for spec in [involution_squared(1), involution_squared(2), chain_power_word(2, 6)] {
            let d = compile_branched_cover(&spec).unwrap();
            assert_eq!(
                2 * d.ambient.euler() - d.chi_branch,
                d.cover.chi_m + d.cover.blowdowns as i64
            );
        }
    }
}
