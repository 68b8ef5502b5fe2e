//! # hyperlef
//!
//! A deterministic engine for hyperelliptic Lefschetz fibrations over the
//! disk or the sphere. A fibration is specified by its genus `h` and an
//! ordered word of symmetric vanishing cycles, each encoded downstairs on the
//! `2h+2`-marked quotient sphere as a conjugated half-twist arc
//! (nonseparating) or a conjugated standard separating loop.
//!
//! The crate provides:
//!
//! * exact computation in the braid group and the marked-sphere mapping
//!   class group ([`braid`], [`garside`], [`hurwitz`], [`symplectic`]),
//! * certification that a word's global monodromy is isotopic to the
//!   identity upstairs ([`certify`]),
//! * the two-fold cover dictionary between symmetric curves upstairs and
//!   arcs/loops downstairs ([`cover`]),
//! * compilation of a certified word into branch-surface data and ambient
//!   4-manifold invariants ([`branch`]),
//! * framed-handle models of the covers at the linking-matrix level with a
//!   small move engine ([`kirby`]),
//! * closed-form invariants and the separating-cycle/chain-block rewriters
//!   ([`invariants`]),
//! * a catalog of certified words ([`words`]),
//! * a text DSL, JSON reports and a command-line front end ([`fibration`],
//!   [`report`]).
//!
//! Everything is pure and deterministic: equal inputs produce byte-equal
//! outputs.

pub mod braid;
pub mod branch;
pub mod certify;
pub mod cover;
pub mod fibration;
pub mod garside;
pub mod hurwitz;
pub mod invariants;
pub mod kirby;
pub mod report;
pub mod symplectic;
pub mod words;

pub mod book;

pub use braid::{BraidWord, Letter, Permutation};
pub use branch::{compile_branched_cover, BranchedCoverDescription};
pub use certify::{certify_global_monodromy, IdentityCertificate, Verdict};
pub use fibration::{parse_fibration, print_fibration, FibrationSpec, SymmetricCycle};
pub use garside::{normal_form, prove_relation, NormalForm};
pub use hurwitz::{act_on_state, is_trivial_downstairs, FreeGroupState};
