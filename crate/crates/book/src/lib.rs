//! Runs the code in the guide under `book/` as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/words.md")]
mod words {}

#[doc = include_str!("../../../book/src/ordering.md")]
mod ordering {}

#[doc = include_str!("../../../book/src/rewriting.md")]
mod rewriting {}

#[doc = include_str!("../../../book/src/diamond.md")]
mod diamond {}

#[doc = include_str!("../../../book/src/compositions.md")]
mod compositions {}

#[doc = include_str!("../../../book/src/hopf.md")]
mod hopf {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
