//! Recursive-descent parser for words, star-words, polynomials and tensors.
//!
//! ```text
//! poly     := ['+'|'-'] term (('+'|'-') term)*
//! term     := [rational ['*']] word
//! word     := '1' | prime+
//! prime    := generator | operator '(' poly ')' | '★'
//! rational := integer ['/' positive-integer]
//! tensor   := ['+'|'-'] tterm (('+'|'-') tterm)*
//! tterm    := [rational ['*']] word ('⊗' | '(x)') word
//! ```
//!
//! Concatenation is juxtaposition; operator arguments may be polynomials and
//! are distributed on the way in.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Gen, Signature, StarWord, Symbol, Word};
use crate::algebra::{Poly, Scalar, TensorPoly};
use crate::error::{Error, Result};

struct Parser<'a> {
    sig: &'a Signature,
    src: Vec<char>,
    pos: usize,
    allow_hole: bool,
}

impl<'a> Parser<'a> {
    fn new(sig: &'a Signature, text: &str, allow_hole: bool) -> Self {
        Parser {
            sig,
            src: text.chars().collect(),
            pos: 0,
            allow_hole,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.bump();
                Ok(())
            }
            Some(d) => self.error(format!("expected `{c}`, found `{d}`")),
            None => self.error(format!("expected `{c}`, found end of input")),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected `{c}`")),
        }
    }

    fn sign(&mut self) -> Option<i32> {
        match self.peek() {
            Some('+') => Some(1),
            Some('-') | Some('−') => Some(-1),
            _ => None,
        }
    }

    fn at_word_start(&mut self) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' || c == '★' => true,
            Some('1') => !self
                .src
                .get(self.pos + 1)
                .is_some_and(|c| c.is_ascii_digit() || *c == '/'),
            _ => false,
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        let digits: String = self.src[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Scalar> {
        let num = self.integer()?;
        if self.peek() == Some('/') {
            self.bump();
            let den = self.integer()?;
            if den.is_zero() {
                return self.error("zero denominator");
            }
            return Ok(Scalar::new(num, den));
        }
        Ok(Scalar::from_integer(num))
    }

    fn identifier(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        self.src[start..self.pos].iter().collect()
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut sign = match self.sign() {
            Some(s) => {
                self.bump();
                s
            }
            None => 1,
        };
        loop {
            let term = self.term()?;
            if sign < 0 {
                acc -= term;
            } else {
                acc += term;
            }
            match self.sign() {
                Some(s) => {
                    self.bump();
                    sign = s;
                }
                None => return Ok(acc),
            }
        }
    }

    fn coefficient(&mut self) -> Result<Option<Scalar>> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) || self.at_word_start() {
            return Ok(None);
        }
        let c = self.rational()?;
        if self.peek() == Some('*') {
            self.bump();
            if !self.at_word_start() {
                return self.error("expected a word after `*`");
            }
        }
        Ok(Some(c))
    }

    fn term(&mut self) -> Result<Poly> {
        let coeff = self.coefficient()?;
        let word = if self.at_word_start() {
            self.word()?
        } else if coeff.is_some() {
            Poly::one()
        } else {
            return match self.peek() {
                Some(c) => self.error(format!("expected a term, found `{c}`")),
                None => self.error("expected a term, found end of input"),
            };
        };
        Ok(match coeff {
            Some(c) => word.scale(&c),
            None => word,
        })
    }

    fn word(&mut self) -> Result<Poly> {
        let mut acc = Poly::one();
        while self.at_word_start() {
            let p = self.prime()?;
            acc = acc.concat_mul(&p);
        }
        Ok(acc)
    }

    fn prime(&mut self) -> Result<Poly> {
        let column = self.column();
        match self.peek() {
            Some('★') => {
                if !self.allow_hole {
                    return self.error("★ is only allowed in star-words");
                }
                self.bump();
                Ok(Poly::from_word(Word::generator(Gen::HOLE)))
            }
            Some('1') => {
                self.bump();
                Ok(Poly::one())
            }
            _ => {
                let name = self.identifier();
                match self.sig.symbol(&name) {
                    Some(Symbol::Gen(g)) => Ok(Poly::from_word(Word::generator(g))),
                    Some(Symbol::Op(op)) => {
                        self.expect('(')?;
                        let arg = self.poly()?;
                        self.expect(')')?;
                        Ok(arg.apply_operator(op))
                    }
                    None => Err(Error::UnknownIdentifier { name, column }),
                }
            }
        }
    }

    fn tensor_separator(&mut self) -> bool {
        match self.peek() {
            Some('⊗') => {
                self.bump();
                true
            }
            Some('(') => {
                let rest: String = self.src[self.pos..].iter().take(3).collect();
                if rest == "(x)" {
                    self.pos += 3;
                    true
                } else {
                    false
                }
            }
            _ => false,
        }
    }

    fn tensor(&mut self) -> Result<TensorPoly> {
        let mut acc = TensorPoly::zero();
        let mut sign = match self.sign() {
            Some(s) => {
                self.bump();
                s
            }
            None => 1,
        };
        loop {
            let coeff = self.coefficient()?.unwrap_or_else(Scalar::one);
            let had_word = self.at_word_start();
            let left = if had_word { self.word()? } else { Poly::one() };
            let term = if self.tensor_separator() {
                if !self.at_word_start() {
                    return self.error("expected the right tensor leg");
                }
                let right = self.word()?;
                TensorPoly::tensor_of(&left, &right)
            } else if !had_word && coeff.is_zero() {
                TensorPoly::zero()
            } else {
                return self.error("expected `⊗` or `(x)`");
            };
            let c = if sign < 0 { -coeff } else { coeff };
            acc += term.scale(&c);
            match self.sign() {
                Some(s) => {
                    self.bump();
                    sign = s;
                }
                None => return Ok(acc),
            }
        }
    }
}

fn single_word(p: Poly) -> Option<Word> {
    let mut it = p.into_iter();
    match (it.next(), it.next()) {
        (Some((w, c)), None) if c.is_one() => Some(w),
        _ => None,
    }
}

impl Signature {
    /// Parses a polynomial, distributing operators over sums.
    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        let mut p = Parser::new(self, text, false);
        let poly = p.poly()?;
        p.finish()?;
        Ok(poly)
    }

    /// Parses a single word (no coefficients, no sums).
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let poly = self.parse_poly(text)?;
        single_word(poly).ok_or_else(|| Error::Syntax {
            column: 1,
            message: format!("`{text}` is not a single word"),
        })
    }

    /// Parses a word containing exactly one ★.
    pub fn parse_star(&self, text: &str) -> Result<StarWord> {
        let mut p = Parser::new(self, text, true);
        let poly = p.poly()?;
        p.finish()?;
        let w = single_word(poly).ok_or_else(|| Error::Syntax {
            column: 1,
            message: format!("`{text}` is not a single star-word"),
        })?;
        StarWord::from_hole_word(&w)
    }

    pub fn parse_tensor(&self, text: &str) -> Result<TensorPoly> {
        let mut p = Parser::new(self, text, false);
        let t = p.tensor()?;
        p.finish()?;
        Ok(t)
    }
}

/// Parses `integer ['/' positive-integer]` with an optional leading sign.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let sig = Signature::new(Vec::<String>::new(), ["_"]).expect("valid");
    let mut p = Parser::new(&sig, text, false);
    let negative = match p.sign() {
        Some(s) => {
            p.bump();
            s < 0
        }
        None => false,
    };
    let c = p.rational()?;
    p.finish()?;
    Ok(if negative { -c } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::standard(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn unit_word() {
        assert_eq!(sig().parse_word("1").unwrap(), Word::unit());
        assert_eq!(sig().parse_poly("1").unwrap(), Poly::one());
    }

    #[test]
    fn displayed_word_has_three_factors() {
        let sig = Signature::standard(["x1", "x2"]).unwrap();
        let w = sig.parse_word("x1 x2 R(R(x1) S(x2))").unwrap();
        assert_eq!(w.breadth(), 3);
    }

    #[test]
    fn operator_arguments_distribute() {
        let sig = sig();
        let p = sig.parse_poly("R(x + 2 y)").unwrap();
        assert_eq!(p, sig.parse_poly("R(x) + 2*R(y)").unwrap());
    }

    #[test]
    fn coefficients_and_signs() {
        let sig = sig();
        let p = sig.parse_poly("-1/2 x + 3 - y").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coefficient(&Word::unit()), Scalar::from_integer(3.into()));
        assert_eq!(sig.parse_poly("0").unwrap(), Poly::zero());
        assert_eq!(sig.parse_poly("x - x").unwrap(), Poly::zero());
        assert_eq!(sig.parse_poly("−x").unwrap(), -sig.parse_poly("x").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let sig = sig();
        assert_eq!(
            sig.parse_poly("x w").unwrap_err(),
            Error::UnknownIdentifier {
                name: "w".into(),
                column: 3
            }
        );
        assert!(matches!(
            sig.parse_poly("R(x"),
            Err(Error::Syntax { column: 4, .. })
        ));
        assert!(matches!(sig.parse_poly("R x"), Err(Error::Syntax { .. })));
        assert!(matches!(sig.parse_poly("x +"), Err(Error::Syntax { .. })));
        assert!(matches!(sig.parse_poly("2/0 x"), Err(Error::Syntax { .. })));
        assert!(matches!(sig.parse_poly("★"), Err(Error::Syntax { .. })));
        assert!(sig.parse_word("x + y").is_err());
    }

    #[test]
    fn star_words() {
        let sig = sig();
        let pi = sig.parse_star("R(★ x)").unwrap();
        assert_eq!(pi.hole_depth(), 1);
        assert_eq!(sig.parse_star("★").unwrap(), StarWord::hole());
    }

    #[test]
    fn tensors() {
        let sig = sig();
        let a = sig.parse_tensor("1⊗x + x⊗1").unwrap();
        let b = sig.parse_tensor("x (x) 1 + 1 (x) x").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        let c = sig.parse_tensor("-2 R(x) y⊗S(1) + 1/3 1⊗1").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(sig.parse_tensor("0").unwrap(), TensorPoly::zero());
        assert!(sig.parse_tensor("x").is_err());
    }

    #[test]
    fn scalars() {
        assert_eq!(
            parse_scalar("-3/6").unwrap(),
            Scalar::new((-1).into(), 2.into())
        );
        assert!(parse_scalar("x").is_err());
    }
}
