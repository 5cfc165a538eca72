//! The Deg-lex order on words.
//!
//! `u > v` when `(deg u, bre u, u_1, …, u_n) > (deg v, bre v, v_1, …, v_m)`
//! lexicographically. Primes of equal degree compare by
//!
//! * two generators: declaration order;
//! * an operator applied to `1` against a generator: the operator wins;
//! * two operator applications `ω(u')`, `θ(v')`: `(ω, u')` against
//!   `(θ, v')`, operators by rank (`R > S`), arguments recursively.
//!
//! Generators and operators are stored by their signature position, so the
//! order is the [`Ord`] implementation of [`Word`] and [`Prime`].

use std::cmp::Ordering;

use crate::algebra::{Poly, Scalar};
use crate::error::{Error, Result};
use crate::terms::{Prime, Word};

impl Ord for Prime {
    fn cmp(&self, other: &Prime) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| match (self, other) {
                (Prime::Gen(a), Prime::Gen(b)) => a.cmp(b),
                // equal degree here means the operator prime is Q(1)
                (Prime::Op(..), Prime::Gen(_)) => Ordering::Greater,
                (Prime::Gen(_), Prime::Op(..)) => Ordering::Less,
                // lower signature index = higher rank
                (Prime::Op(p, u), Prime::Op(q, v)) => q.0.cmp(&p.0).then_with(|| u.cmp(v)),
            })
    }
}

impl PartialOrd for Prime {
    fn partial_cmp(&self, other: &Prime) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.breadth().cmp(&other.breadth()))
            .then_with(|| self.factors().cmp(other.factors()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn compare_words(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

pub fn compare_primes(p: &Prime, q: &Prime) -> Ordering {
    p.cmp(q)
}

/// The Deg-lex greatest monomial of `p` with its coefficient.
pub fn leading_word(p: &Poly) -> Result<(&Word, &Scalar)> {
    p.leading().ok_or(Error::ZeroPolynomial)
}
