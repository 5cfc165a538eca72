use super::{Gen, Op, Prime, Word};
use crate::error::{Error, Result};

/// A word with exactly one hole ★.
///
/// Stored as a path from the outside in: at each level the hole (or the
/// operator leading to the next level) sits between a left and a right run
/// of primes. Plugging a word into the hole splices its factors into the
/// innermost run.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarWord {
    levels: Vec<Level>,
    // ops[i] wraps level i + 1
    ops: Vec<Op>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Level {
    left: Vec<Prime>,
    right: Vec<Prime>,
}

impl StarWord {
    /// The bare hole `★`.
    pub fn hole() -> StarWord {
        StarWord {
            levels: vec![Level {
                left: Vec::new(),
                right: Vec::new(),
            }],
            ops: Vec::new(),
        }
    }

    /// `left ★ right` at the top level.
    pub fn beside(left: &[Prime], right: &[Prime]) -> StarWord {
        StarWord {
            levels: vec![Level {
                left: left.to_vec(),
                right: right.to_vec(),
            }],
            ops: Vec::new(),
        }
    }

    /// `left op(self) right`: nests this star-word one level deeper.
    pub fn wrap(&self, left: &[Prime], op: Op, right: &[Prime]) -> StarWord {
        let mut levels = Vec::with_capacity(self.levels.len() + 1);
        levels.push(Level {
            left: left.to_vec(),
            right: right.to_vec(),
        });
        levels.extend(self.levels.iter().cloned());
        let mut ops = Vec::with_capacity(self.ops.len() + 1);
        ops.push(op);
        ops.extend(self.ops.iter().copied());
        StarWord { levels, ops }
    }

    /// `π|_s`: replaces the hole by `s`.
    pub fn substitute(&self, s: &Word) -> Word {
        let mut inner: Vec<Prime> = s.factors().to_vec();
        for (i, level) in self.levels.iter().enumerate().rev() {
            let mut run = Vec::with_capacity(level.left.len() + inner.len() + level.right.len());
            run.extend(level.left.iter().cloned());
            run.append(&mut inner);
            run.extend(level.right.iter().cloned());
            if i == 0 {
                return Word::from_primes(run);
            }
            inner = vec![Prime::Op(self.ops[i - 1], Word::from_primes(run))];
        }
        unreachable!("a star-word has at least one level")
    }

    /// `π|_π'`: plugs another star-word into the hole.
    pub fn compose(&self, inner: &StarWord) -> StarWord {
        let mut out = self.clone();
        let last = out.levels.pop().expect("non-empty");
        let mut first = inner.levels[0].clone();
        let mut left = last.left;
        left.append(&mut first.left);
        let mut right = first.right;
        right.extend(last.right);
        out.levels.push(Level { left, right });
        out.levels.extend(inner.levels[1..].iter().cloned());
        out.ops.extend(inner.ops.iter().copied());
        out
    }

    /// Degree of the word obtained by deleting the hole; ★ itself counts 0.
    pub fn degree(&self) -> usize {
        let runs: usize = self
            .levels
            .iter()
            .flat_map(|l| l.left.iter().chain(l.right.iter()))
            .map(Prime::degree)
            .sum();
        runs + self.ops.len()
    }

    /// Nesting depth of the hole (0 when the hole is at the top level).
    pub fn hole_depth(&self) -> usize {
        self.ops.len()
    }

    /// The word with ★ represented by an internal placeholder generator.
    pub(crate) fn to_hole_word(&self) -> Word {
        self.substitute(&Word::generator(Gen::HOLE))
    }

    /// Inverse of [`StarWord::to_hole_word`].
    pub(crate) fn from_hole_word(w: &Word) -> Result<StarWord> {
        match w.hole_count() {
            1 => Ok(Self::locate(w).expect("one hole present")),
            n => Err(Error::HoleCount(n)),
        }
    }

    fn locate(w: &Word) -> Option<StarWord> {
        let factors = w.factors();
        for (i, p) in factors.iter().enumerate() {
            match p {
                Prime::Gen(g) if *g == Gen::HOLE => {
                    return Some(StarWord::beside(&factors[..i], &factors[i + 1..]));
                }
                Prime::Op(op, arg) if arg.hole_count() > 0 => {
                    let inner = Self::locate(arg)?;
                    return Some(inner.wrap(&factors[..i], *op, &factors[i + 1..]));
                }
                _ => {}
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::Signature;

    #[test]
    fn identity_context() {
        let sig = Signature::standard(["x"]).unwrap();
        let w = sig.parse_word("x R(x)").unwrap();
        assert_eq!(StarWord::hole().substitute(&w), w);
    }

    #[test]
    fn substitute_inside_operator() {
        let sig = Signature::standard(["x"]).unwrap();
        let pi = sig.parse_star("R(★ x)").unwrap();
        let s = sig.parse_word("S(1)").unwrap();
        assert_eq!(sig.format_word(&pi.substitute(&s)), "R(S(1) x)");
        assert_eq!(pi.degree(), 2);
        assert_eq!(pi.hole_depth(), 1);
    }

    #[test]
    fn splices_products() {
        let sig = Signature::standard(["x", "y"]).unwrap();
        let pi = sig.parse_star("x ★ y").unwrap();
        let s = sig.parse_word("y x").unwrap();
        let w = pi.substitute(&s);
        assert_eq!(w.breadth(), 4);
        assert_eq!(sig.format_word(&w), "x y x y");
    }

    #[test]
    fn compose_matches_nested_substitution() {
        let sig = Signature::standard(["x", "y"]).unwrap();
        let outer = sig.parse_star("x S(y ★) R(1)").unwrap();
        let inner = sig.parse_star("R(★ x) y").unwrap();
        let s = sig.parse_word("S(x)").unwrap();
        assert_eq!(
            outer.compose(&inner).substitute(&s),
            outer.substitute(&inner.substitute(&s))
        );
    }

    #[test]
    fn hole_count_errors() {
        let sig = Signature::standard(["x"]).unwrap();
        assert_eq!(sig.parse_star("R(x)").unwrap_err(), Error::HoleCount(0));
        assert_eq!(sig.parse_star("★ R(★)").unwrap_err(), Error::HoleCount(2));
    }
}
