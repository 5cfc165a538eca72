//! Normal forms in the free Rota-Baxter system.
//!
//! Reduction rewrites every occurrence of `Q(u)Q(v)` (two adjacent primes
//! under the same operator, at any nesting level) by the lower-order side of
//! its defining relation. Words with no such occurrence are the Rota-Baxter
//! system words and form a linear basis; [`Rewriter::diamond`] multiplies
//! them directly without going through reduction.

mod diamond;
mod redex;
mod reduce;
mod rules;

pub use redex::{
    all_redexes, basis_by_degree, enumerate_basis, find_redex, find_redex_with, is_rbs_word,
    RuleMatch, Strategy,
};
pub use reduce::{ReductionStep, ReductionTrace, Rewriter, TraceJson};
pub use rules::{RelationSchema, RuleSet, SignMutation};
