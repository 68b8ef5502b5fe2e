//! The two-fold cover dictionary between symmetric curves upstairs and
//! their images on the marked sphere.
//!
//! A symmetric nonseparating curve projects to an arc joining two marked
//! points, and its Dehn twist projects to the half twist about that arc. A
//! symmetric separating curve projects to a loop disjoint from the marked
//! points enclosing an odd number `2g+1` of them, and its twist projects to
//! the square of the loop twist: two full right-handed sub-disk twists. The
//! framing of a lifted 2-handle drops by the mutual linking of its two
//! lifts.

use crate::braid::{BraidWord, Letter, Permutation};
use crate::fibration::{CycleBase, SymmetricCycle};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// Downstairs type of a symmetric cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    /// Arc with the given marked-point endpoints.
    NonseparatingArc { endpoints: (usize, usize) },
    /// Loop enclosing an odd set of marked points; `genus = (|enclosed|-1)/2`.
    SeparatingLoop { genus: usize, enclosed: BTreeSet<usize> },
}

impl Classification {
    pub fn is_separating(&self) -> bool {
        matches!(self, Classification::SeparatingLoop { .. })
    }

    pub fn separating_genus(&self) -> Option<usize> {
        match self {
            Classification::SeparatingLoop { genus, .. } => Some(*genus),
            Classification::NonseparatingArc { .. } => None,
        }
    }
}

/// Where a cycle sits downstairs: endpoints of the transported arc, or the
/// transported enclosed point set.
pub fn classify_cycle(h: usize, cycle: &SymmetricCycle) -> Classification {
    let perm: Permutation = cycle.conjugator.permutation();
    match cycle.base {
        CycleBase::ArcGenerator(i) => {
            let a = perm.apply(i);
            let b = perm.apply(i + 1);
            Classification::NonseparatingArc { endpoints: (a.min(b), a.max(b)) }
        }
        CycleBase::SeparatingLoop(g_raw) => {
            let g = g_raw.min(h - g_raw);
            let enclosed: BTreeSet<usize> = (1..=2 * g + 1).map(|p| perm.apply(p)).collect();
            Classification::SeparatingLoop { genus: g, enclosed }
        }
    }
}

/// The downstairs word of the Dehn twist about a cycle.
///
/// Nonseparating: the conjugated half twist `w σ_i w⁻¹`. Separating of
/// genus `g`: the conjugated block `(σ₁⋯σ_{2g})^{2(2g+1)}`, i.e. two full
/// right-handed twists of the sub-disk around marked points `1..=2g+1`.
pub fn project_twist(h: usize, cycle: &SymmetricCycle) -> BraidWord {
    let n = 2 * h + 2;
    let w = &cycle.conjugator;
    let core = match cycle.base {
        CycleBase::ArcGenerator(i) => BraidWord::new(n, vec![Letter::pos(i)]),
        CycleBase::SeparatingLoop(g_raw) => {
            let g = g_raw.min(h - g_raw);
            separating_block(n, g)
        }
    };
    w.concat(&core).concat(&w.inverse())
}

/// `(σ₁⋯σ_{2g})^{2(2g+1)}`: the downstairs image of a genus-`g` separating
/// twist, as a positive word.
pub fn separating_block(strands: usize, g: usize) -> BraidWord {
    let once: Vec<Letter> = (1..=2 * g).map(Letter::pos).collect();
    BraidWord::new(strands, once).repeat(2 * (2 * g + 1))
}

/// Framing of a lifted handle: downstairs framing minus the mutual linking
/// of the two lifts, from `(λ₁+λ₂)² = 2f` and `λ₁² = λ₂²`.
pub fn lift_framing(downstairs: i64, mutual_linking: i64) -> i64 {
    downstairs - mutual_linking
}

/// The framing computation of a lifted 2-handle, as a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramingLift {
    pub base_framing: i64,
    pub mutual_linking: i64,
    pub lifted_framing: i64,
}

impl FramingLift {
    pub fn new(base_framing: i64, mutual_linking: i64) -> Self {
        FramingLift {
            base_framing,
            mutual_linking,
            lifted_framing: lift_framing(base_framing, mutual_linking),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TransportError {
    #[error("cycles classify differently: separating genus {0:?} vs {1:?}")]
    GenusMismatch(Option<usize>, Option<usize>),
}

/// Word carrying the first chain arc index to the second, fixing the half
/// twist conjugation: `s σ_i s⁻¹ = σ_j`.
fn arc_shift(n: usize, i: usize, j: usize) -> BraidWord {
    if i == j {
        return BraidWord::identity(n);
    }
    if i < j {
        // (σ_{j-1}σ_j)(σ_{j-2}σ_{j-1})⋯(σ_iσ_{i+1}), carrying i up one step
        // at a time from the innermost factor outward.
        let mut letters = Vec::new();
        for k in (i..j).rev() {
            letters.push(Letter::pos(k));
            letters.push(Letter::pos(k + 1));
        }
        BraidWord::new(n, letters)
    } else {
        arc_shift(n, j, i).inverse()
    }
}

/// A braid `w` with `w · (downstairs c1) · w⁻¹ = downstairs c2` as mapping
/// classes. Succeeds whenever both cycles classify as the same type:
/// equal-genus separating loops, or any two nonseparating arcs.
pub fn transport(h: usize, c1: &SymmetricCycle, c2: &SymmetricCycle) -> Result<BraidWord, TransportError> {
    let k1 = classify_cycle(h, c1);
    let k2 = classify_cycle(h, c2);
    match (&k1, &k2) {
        (Classification::NonseparatingArc { .. }, Classification::NonseparatingArc { .. }) => {
            let (CycleBase::ArcGenerator(i), CycleBase::ArcGenerator(j)) = (c1.base, c2.base) else {
                unreachable!()
            };
            let n = 2 * h + 2;
            let w = c2
                .conjugator
                .concat(&arc_shift(n, i, j))
                .concat(&c1.conjugator.inverse());
            Ok(w.free_reduced())
        }
        (
            Classification::SeparatingLoop { genus: g1, .. },
            Classification::SeparatingLoop { genus: g2, .. },
        ) => {
            if g1 != g2 {
                return Err(TransportError::GenusMismatch(Some(*g1), Some(*g2)));
            }
            let w = c2.conjugator.concat(&c1.conjugator.inverse());
            Ok(w.free_reduced())
        }
        _ => Err(TransportError::GenusMismatch(k1.separating_genus(), k2.separating_genus())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::SymmetricCycle;
    use crate::garside::prove_relation;

    #[test]
    fn standard_arc_classifies_by_its_endpoints() {
        let c = SymmetricCycle::arc(2, 3);
        assert_eq!(
            classify_cycle(2, &c),
            Classification::NonseparatingArc { endpoints: (3, 4) }
        );
    }

    #[test]
    fn standard_loop_encloses_odd_prefix() {
        // χ of a double cover of the disk branched over b points is 2 - b,
        // and a genus-g piece with one boundary circle has χ = 1 - 2g, so
        // b = 2g + 1. Assert that count oracle directly.
        for g in 1..=2 {
            let h = 2 * g;
            let c = SymmetricCycle::sep(h, g);
            let k = classify_cycle(h, &c);
            let Classification::SeparatingLoop { genus, enclosed } = k else { panic!() };
            assert_eq!(genus, g);
            let b = enclosed.len() as i64;
            assert_eq!(2 - b, 1 - 2 * genus as i64);
            assert_eq!(enclosed, (1..=2 * g + 1).collect());
        }
    }

    #[test]
    fn conjugated_arc_endpoints_move_by_the_permutation() {
        let c = SymmetricCycle::conjugated(
            CycleBase::ArcGenerator(1),
            BraidWord::from_signed(6, &[2, 3]),
        );
        assert_eq!(
            classify_cycle(2, &c),
            Classification::NonseparatingArc { endpoints: (1, 4) }
        );
    }

    #[test]
    fn conjugation_preserves_type_and_genus() {
        let h = 4;
        let words = [
            BraidWord::identity(10),
            BraidWord::from_signed(10, &[1, 4, -2]),
            BraidWord::from_signed(10, &[7, 7, -1, 3]),
        ];
        for w in &words {
            for g in 1..=3 {
                let c = SymmetricCycle::conjugated(CycleBase::SeparatingLoop(g), w.clone());
                let k = classify_cycle(h, &c);
                assert_eq!(k.separating_genus(), Some(g.min(h - g)));
                let Classification::SeparatingLoop { enclosed, .. } = k else { panic!() };
                assert_eq!(enclosed.len() % 2, 1);
            }
            let c = SymmetricCycle::conjugated(CycleBase::ArcGenerator(2), w.clone());
            assert!(!classify_cycle(h, &c).is_separating());
        }
    }

    #[test]
    fn plain_arc_projects_to_its_half_twist() {
        let w = project_twist(2, &SymmetricCycle::arc(2, 1));
        assert_eq!(w, BraidWord::from_signed(6, &[1]));
    }

    #[test]
    fn separating_loop_projects_to_delta_fourth() {
        // s1 ↦ (σ₁σ₂)⁶, two full right-handed twists on strands 1..3.
        let w = project_twist(2, &SymmetricCycle::sep(2, 1));
        assert_eq!(w, BraidWord::from_signed(6, &[1, 2]).repeat(6));
        let delta = BraidWord::from_signed(6, &[1, 2, 1]);
        assert!(prove_relation(&w, &delta.repeat(4)));
    }

    #[test]
    fn conjugated_arc_projects_to_conjugated_twist() {
        let c = SymmetricCycle::conjugated(CycleBase::ArcGenerator(1), BraidWord::from_signed(6, &[2]));
        assert_eq!(project_twist(2, &c), BraidWord::from_signed(6, &[2, 1, -2]));
    }

    #[test]
    fn framing_lift_anchors() {
        assert_eq!(lift_framing(0, 3), -3); // h = 2
        assert_eq!(lift_framing(-1, 2), -3); // g = 1
        assert_eq!(FramingLift::new(-2, -1).lifted_framing, -1);
        for f in -5..=5 {
            assert_eq!(lift_framing(f, 0), f);
        }
        // Affine in the first argument.
        for m in -4i64..=4 {
            for f in -4i64..=4 {
                for f2 in -4i64..=4 {
                    assert_eq!(lift_framing(f, m) - lift_framing(f2, m), f - f2);
                }
            }
        }
    }

    #[test]
    fn transport_of_equal_cycles_is_empty() {
        let c = SymmetricCycle::sep(2, 1);
        assert!(transport(2, &c, &c).unwrap().is_empty());
    }

    #[test]
    fn transport_reads_off_conjugators() {
        let c1 = SymmetricCycle::sep(2, 1);
        let c2 = SymmetricCycle::conjugated(CycleBase::SeparatingLoop(1), BraidWord::from_signed(6, &[3]));
        let w = transport(2, &c1, &c2).unwrap();
        assert_eq!(w, BraidWord::from_signed(6, &[3]));
    }

    #[test]
    fn transport_rejects_genus_mismatch() {
        let c1 = SymmetricCycle::sep(4, 1);
        let c2 = SymmetricCycle::sep(4, 2);
        assert_eq!(
            transport(4, &c1, &c2),
            Err(TransportError::GenusMismatch(Some(1), Some(2)))
        );
    }

    #[test]
    fn transport_conjugates_twists_correctly() {
        // prove_relation(w · tw(c1) · w⁻¹, tw(c2)) whenever transport succeeds.
        let h = 2;
        let cases = [
            (SymmetricCycle::arc(h, 1), SymmetricCycle::arc(h, 4)),
            (
                SymmetricCycle::conjugated(CycleBase::ArcGenerator(2), BraidWord::from_signed(6, &[1, -3])),
                SymmetricCycle::conjugated(CycleBase::ArcGenerator(5), BraidWord::from_signed(6, &[4])),
            ),
            (
                SymmetricCycle::sep(h, 1),
                SymmetricCycle::conjugated(CycleBase::SeparatingLoop(1), BraidWord::from_signed(6, &[3, 4, -1])),
            ),
        ];
        for (c1, c2) in cases {
            let w = transport(h, &c1, &c2).unwrap();
            let lhs = w.concat(&project_twist(h, &c1)).concat(&w.inverse());
            let rhs = project_twist(h, &c2);
            assert!(prove_relation(&lhs, &rhs));
        }
    }
}
