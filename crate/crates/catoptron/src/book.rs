//! The mdbook guide under `book/` doubles as a test suite: every chapter is
//! attached here as module documentation, so `cargo test --doc` compiles and
//! runs each of the book's code blocks. mdbook itself cannot execute
//! snippets against the crate, this keeps the prose and the API honest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/reflection-groups.md")]
pub mod reflection_groups {}

#[doc = include_str!("../../../book/src/discriminants.md")]
pub mod discriminants {}

#[doc = include_str!("../../../book/src/hilbert-series.md")]
pub mod hilbert_series {}

#[doc = include_str!("../../../book/src/matrix-factorizations.md")]
pub mod matrix_factorizations {}

#[doc = include_str!("../../../book/src/mckay-quivers.md")]
pub mod mckay_quivers {}

#[doc = include_str!("../../../book/src/swallowtail.md")]
pub mod swallowtail {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
