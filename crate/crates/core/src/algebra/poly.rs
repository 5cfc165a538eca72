use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::Scalar;
use crate::terms::{Op, StarWord, Word};

/// A finite linear combination of words with rational coefficients.
///
/// Monomials are kept in Deg-lex order and zero coefficients are never
/// stored, so the zero polynomial is the empty map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    /// The unit word `1` with coefficient 1.
    pub fn one() -> Poly {
        Poly::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> Poly {
        Poly::term(Scalar::one(), w)
    }

    pub fn term(c: Scalar, w: Word) -> Poly {
        let mut p = Poly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomials in ascending Deg-lex order.
    pub fn iter(&self) -> btree_map::Iter<'_, Word, Scalar> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl DoubleEndedIterator<Item = &Word> + '_ {
        self.terms.keys()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The Deg-lex greatest monomial and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect(),
        }
    }

    /// Bilinear extension of word concatenation (no reduction).
    pub fn concat_mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Applies `op` to every monomial, keeping coefficients.
    pub fn apply_operator(&self, op: Op) -> Poly {
        // distinct arguments give distinct primes, so no collection needed
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (Word::apply(op, w.clone()), c.clone()))
                .collect(),
        }
    }

    /// Applies a linear map given on words.
    pub fn map_linear(&self, mut f: impl FnMut(&Word) -> Poly) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Projection onto the monomials of degree `n`.
    pub fn graded_slice(&self, n: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

impl StarWord {
    /// `π|_p`, extended linearly over the monomials of `p`.
    pub fn substitute_poly(&self, p: &Poly) -> Poly {
        p.iter()
            .map(|(w, c)| (self.substitute(w), c.clone()))
            .collect()
    }
}

impl IntoIterator for Poly {
    type Item = (Word, Scalar);
    type IntoIter = btree_map::IntoIter<Word, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a> IntoIterator for &'a Poly {
    type Item = (&'a Word, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, Word, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl FromIterator<(Word, Scalar)> for Poly {
    fn from_iter<I: IntoIterator<Item = (Word, Scalar)>>(iter: I) -> Poly {
        let mut p = Poly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

impl From<Word> for Poly {
    fn from(w: Word) -> Poly {
        Poly::from_word(w)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl AddAssign for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl SubAssign for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        self += rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(mut self, rhs: Poly) -> Poly {
        self -= rhs;
        self
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;
    use crate::terms::Signature;

    fn sig() -> Signature {
        Signature::standard(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        sig().parse_poly(s).unwrap()
    }

    #[test]
    fn vector_space_structure() {
        assert_eq!(p("x") + p("-x"), Poly::zero());
        assert_eq!(p("x + R(1)").scale(&scalar(0)), Poly::zero());
        assert_eq!(p("2 x") + p("1/2 x"), p("5/2 x"));
        let third = Scalar::new(1.into(), 3.into());
        assert_eq!(p("x").scale(&third).scale(&scalar(3)), p("x"));
    }

    #[test]
    fn concatenation() {
        let w = p("R(x) y");
        assert_eq!(Poly::one().concat_mul(&w), w);
        assert_eq!(p("x").concat_mul(&p("y")), p("x y"));
        let rr = p("R(1)").concat_mul(&p("R(1)"));
        assert_eq!(sig().format_poly(&rr), "R(1) R(1)");
        assert_eq!(
            p("x + y").concat_mul(&p("x - y")),
            p("x x - x y + y x - y y")
        );
    }

    #[test]
    fn operator_linearity() {
        let sig = sig();
        let r = sig.operator("R").unwrap();
        let s = sig.operator("S").unwrap();
        assert_eq!(Poly::zero().apply_operator(r), Poly::zero());
        assert_eq!(p("x + y").apply_operator(r), p("R(x) + R(y)"));
        assert_eq!(p("2 R(1)").apply_operator(s), p("2 S(R(1))"));
    }

    #[test]
    fn substitution_is_linear() {
        let sig = sig();
        assert_eq!(
            StarWord::hole().substitute_poly(&p("2 x - y")),
            p("2 x - y")
        );
        let pi = sig.parse_star("R(★ x)").unwrap();
        assert_eq!(pi.substitute_poly(&p("S(1) - 3")), p("R(S(1) x) - 3 R(x)"));
    }

    #[test]
    fn slices() {
        assert_eq!(p("1 + x").graded_slice(0), p("1"));
        assert_eq!(p("1 + x + R(x)").graded_slice(2), p("R(x)"));
    }
}
