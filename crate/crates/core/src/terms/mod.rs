//! Operated words over a generator alphabet and a finite set of unary
//! operators.
//!
//! Every word is a (possibly empty) product of *primes*; a prime is either a
//! generator or an operator applied to a word. The empty product is the unit
//! `1`. Words are immutable and cheap to clone.

mod enumerate;
mod format;
mod parse;
mod star;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use enumerate::{enumerate_star_words, enumerate_words, words_by_degree};
pub use parse::parse_scalar;
pub use star::StarWord;

/// A generator, identified by its position in the signature.
///
/// The position is also its rank: earlier generators are smaller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen(pub(crate) u32);

impl Gen {
    /// Placeholder used internally to carry the ★ of a star-word.
    pub(crate) const HOLE: Gen = Gen(u32::MAX);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A unary operator, identified by its position in the signature.
///
/// Position 0 is the highest-ranked operator (`R` in the default signature).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Op(pub(crate) u32);

impl Op {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Prime {
    Gen(Gen),
    Op(Op, Word),
}

impl Prime {
    pub fn degree(&self) -> usize {
        match self {
            Prime::Gen(_) => 1,
            Prime::Op(_, arg) => 1 + arg.degree(),
        }
    }

    /// The operator and argument when this prime is an operator application.
    pub fn as_op(&self) -> Option<(Op, &Word)> {
        match self {
            Prime::Op(op, arg) => Some((*op, arg)),
            Prime::Gen(_) => None,
        }
    }

    pub(crate) fn hole_count(&self) -> usize {
        match self {
            Prime::Gen(g) => usize::from(*g == Gen::HOLE),
            Prime::Op(_, arg) => arg.hole_count(),
        }
    }
}

/// An Ω-word: a finite product of primes. The empty product is `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    factors: Arc<[Prime]>,
    degree: usize,
}

impl Word {
    pub fn unit() -> Word {
        Word {
            factors: Arc::from(Vec::new()),
            degree: 0,
        }
    }

    pub fn from_primes<I: IntoIterator<Item = Prime>>(primes: I) -> Word {
        let factors: Vec<Prime> = primes.into_iter().collect();
        let degree = factors.iter().map(Prime::degree).sum();
        Word {
            factors: factors.into(),
            degree,
        }
    }

    pub fn generator(g: Gen) -> Word {
        Word::from_primes([Prime::Gen(g)])
    }

    /// The single-prime word `op(arg)`.
    pub fn apply(op: Op, arg: Word) -> Word {
        Word::from_primes([Prime::Op(op, arg)])
    }

    pub fn factors(&self) -> &[Prime] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// The prime, if this word has breadth one.
    pub fn as_prime(&self) -> Option<&Prime> {
        match &*self.factors {
            [p] => Some(p),
            _ => None,
        }
    }

    /// Number of generator and operator occurrences, counted recursively.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of top-level prime factors.
    pub fn breadth(&self) -> usize {
        self.factors.len()
    }

    /// Operator nesting depth; words without operators have depth 0.
    pub fn depth(&self) -> usize {
        self.factors
            .iter()
            .map(|p| match p {
                Prime::Gen(_) => 0,
                Prime::Op(_, arg) => 1 + arg.depth(),
            })
            .max()
            .unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        Word::from_primes(self.factors.iter().chain(other.factors.iter()).cloned())
    }

    pub(crate) fn hole_count(&self) -> usize {
        self.factors.iter().map(Prime::hole_count).sum()
    }
}

impl fmt::Debug for Word {
    // Signature-free rendering: generators as `g<i>`, operators as `o<i>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        for (i, p) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prime::Gen(g) if *g == Gen::HOLE => f.write_str("★"),
            Prime::Gen(g) => write!(f, "g{}", g.0),
            Prime::Op(op, arg) => write!(f, "o{}({arg:?})", op.0),
        }
    }
}

/// Generator alphabet and operator set.
///
/// Generators are ordered by declaration (first is smallest). Operators are
/// listed in descending rank, so the default `["R", "S"]` encodes `R > S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    generators: Vec<String>,
    operators: Vec<String>,
    lookup: HashMap<String, Symbol>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Symbol {
    Gen(Gen),
    Op(Op),
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Signature {
    pub fn new<G, O>(generators: G, operators: O) -> Result<Signature>
    where
        G: IntoIterator,
        G::Item: Into<String>,
        O: IntoIterator,
        O::Item: Into<String>,
    {
        let generators: Vec<String> = generators.into_iter().map(Into::into).collect();
        let operators: Vec<String> = operators.into_iter().map(Into::into).collect();
        if operators.is_empty() {
            return Err(Error::Signature("at least one operator is required".into()));
        }
        let mut lookup = HashMap::new();
        let symbols = generators
            .iter()
            .enumerate()
            .map(|(i, n)| (n, Symbol::Gen(Gen(i as u32))))
            .chain(
                operators
                    .iter()
                    .enumerate()
                    .map(|(i, n)| (n, Symbol::Op(Op(i as u32)))),
            );
        for (name, symbol) in symbols {
            if !is_identifier(name) {
                return Err(Error::Signature(format!("`{name}` is not an identifier")));
            }
            if lookup.insert(name.clone(), symbol).is_some() {
                return Err(Error::Signature(format!("`{name}` is declared twice")));
            }
        }
        Ok(Signature {
            generators,
            operators,
            lookup,
        })
    }

    /// The given generators with the operators `R > S`.
    pub fn standard<G>(generators: G) -> Result<Signature>
    where
        G: IntoIterator,
        G::Item: Into<String>,
    {
        Signature::new(generators, ["R", "S"])
    }

    pub fn generator(&self, name: &str) -> Option<Gen> {
        match self.lookup.get(name) {
            Some(Symbol::Gen(g)) => Some(*g),
            _ => None,
        }
    }

    pub fn operator(&self, name: &str) -> Result<Op> {
        match self.lookup.get(name) {
            Some(Symbol::Op(op)) => Ok(*op),
            _ => Err(Error::UnknownOperator(name.to_string())),
        }
    }

    pub(crate) fn symbol(&self, name: &str) -> Option<Symbol> {
        self.lookup.get(name).copied()
    }

    pub fn generators(&self) -> impl ExactSizeIterator<Item = Gen> + '_ {
        (0..self.generators.len() as u32).map(Gen)
    }

    /// Operators in descending rank.
    pub fn operators(&self) -> impl ExactSizeIterator<Item = Op> + '_ {
        (0..self.operators.len() as u32).map(Op)
    }

    pub fn generator_name(&self, g: Gen) -> &str {
        if g == Gen::HOLE {
            return "★";
        }
        &self.generators[g.index()]
    }

    pub fn operator_name(&self, op: Op) -> &str {
        &self.operators[op.index()]
    }

    /// The highest-ranked operator (`R`).
    pub fn top_operator(&self) -> Op {
        Op(0)
    }

    /// The lowest-ranked operator (`S`).
    pub fn bottom_operator(&self) -> Op {
        Op(self.operators.len() as u32 - 1)
    }

    /// Builds a word from a single generator name.
    pub fn gen_word(&self, name: &str) -> Result<Word> {
        self.generator(name)
            .map(Word::generator)
            .ok_or_else(|| Error::UnknownIdentifier {
                name: name.to_string(),
                column: 0,
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::standard(["x", "y"]).unwrap()
    }

    #[test]
    fn signature_validation() {
        assert!(Signature::new(["x"], Vec::<String>::new()).is_err());
        assert!(Signature::new(["x", "x"], ["R"]).is_err());
        assert!(Signature::new(["R"], ["R", "S"]).is_err());
        assert!(Signature::new(["1"], ["R"]).is_err());
        assert!(Signature::new(["★"], ["R"]).is_err());
        assert!(Signature::new(Vec::<String>::new(), ["P"]).is_ok());
    }

    #[test]
    fn unit_metrics() {
        let one = Word::unit();
        assert_eq!((one.degree(), one.breadth(), one.depth()), (0, 0, 0));
    }

    #[test]
    fn metrics_of_displayed_example() {
        let sig = Signature::standard(["x1", "x2"]).unwrap();
        let w = sig.parse_word("x1 x2 R(R(x1) S(x2))").unwrap();
        assert_eq!(w.degree(), 7);
        assert_eq!(w.breadth(), 3);
        assert_eq!(w.depth(), 2);
    }

    #[test]
    fn depth_and_breadth() {
        let sig = sig();
        let w = |s: &str| sig.parse_word(s).unwrap();
        assert_eq!(w("x y").depth(), 0);
        assert_eq!(w("R(x)").depth(), 1);
        assert_eq!(w("R(S(x) y)").depth(), 2);
        assert_eq!(w("R(1)").degree(), 1);
        assert_eq!(w("R(x y)").breadth(), 1);
    }

    #[test]
    fn concat_with_unit() {
        let sig = sig();
        let x = sig.parse_word("x").unwrap();
        assert_eq!(Word::unit().concat(&x), x);
        assert_eq!(x.concat(&Word::unit()), x);
        assert_eq!(x.concat(&x).breadth(), 2);
    }
}
