//! The guide chapters, attached as rustdoc so `cargo test --doc` compiles
//! and runs every code block in the book.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/fibration-words.md")]
pub mod fibration_words {}

#[doc = include_str!("../../../book/src/braid-engine.md")]
pub mod braid_engine {}

#[doc = include_str!("../../../book/src/cover-dictionary.md")]
pub mod cover_dictionary {}

#[doc = include_str!("../../../book/src/certification.md")]
pub mod certification {}

#[doc = include_str!("../../../book/src/branch-surfaces.md")]
pub mod branch_surfaces {}

#[doc = include_str!("../../../book/src/handle-models.md")]
pub mod handle_models {}

#[doc = include_str!("../../../book/src/singularities.md")]
pub mod singularities {}

#[doc = include_str!("../../../book/src/worked-example.md")]
pub mod worked_example {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
