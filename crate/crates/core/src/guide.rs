//! The book, compiled.
//!
//! Each chapter of the mdbook guide under `book/src/` is included here as a
//! documentation-only module, so `cargo test --doc` compiles and runs every
//! code block in the book. That is what keeps the guide and the library in
//! sync: a chapter whose snippet breaks fails the test suite.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/construction.md")]
pub mod construction {}

#[doc = include_str!("../../../book/src/matchings.md")]
pub mod matchings {}

#[doc = include_str!("../../../book/src/two-factors.md")]
pub mod two_factors {}

#[doc = include_str!("../../../book/src/coloring.md")]
pub mod coloring {}

#[doc = include_str!("../../../book/src/words.md")]
pub mod words {}

#[doc = include_str!("../../../book/src/jaeger.md")]
pub mod jaeger {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
