use std::fmt::Write;

use num_traits::{One, Signed};

use super::{Prime, Signature, StarWord, Word};
use crate::algebra::{format_scalar, Poly, Scalar, TensorPoly};

impl Signature {
    pub fn format_word(&self, w: &Word) -> String {
        let mut out = String::new();
        self.write_word(&mut out, w);
        out
    }

    pub fn format_prime(&self, p: &Prime) -> String {
        let mut out = String::new();
        self.write_prime(&mut out, p);
        out
    }

    pub fn format_star(&self, s: &StarWord) -> String {
        self.format_word(&s.to_hole_word())
    }

    /// Monomials in descending Deg-lex order; `0` for the zero polynomial.
    pub fn format_poly(&self, p: &Poly) -> String {
        self.format_terms(
            p.iter()
                .rev()
                .map(|(w, c)| (c, self.format_word(w), w.is_unit())),
        )
    }

    /// Tensor terms in descending order of the right leg, then the left leg.
    /// With `ascii` the separator is `(x)` instead of `⊗`.
    pub fn format_tensor(&self, t: &TensorPoly, ascii: bool) -> String {
        let sep = if ascii { " (x) " } else { "⊗" };
        let mut terms: Vec<_> = t.iter().collect();
        terms.sort_by(|((l1, r1), _), ((l2, r2), _)| (r2, l2).cmp(&(r1, l1)));
        self.format_terms(terms.into_iter().map(|((l, r), c)| {
            (
                c,
                format!("{}{sep}{}", self.format_word(l), self.format_word(r)),
                false,
            )
        }))
    }

    fn format_terms<'a>(&self, terms: impl Iterator<Item = (&'a Scalar, String, bool)>) -> String {
        let mut out = String::new();
        for (i, (c, body, is_unit)) in terms.enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            if is_unit {
                out.push_str(&format_scalar(&magnitude));
            } else if magnitude.is_one() {
                out.push_str(&body);
            } else {
                let _ = write!(out, "{} {body}", format_scalar(&magnitude));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn write_word(&self, out: &mut String, w: &Word) {
        if w.is_unit() {
            out.push('1');
            return;
        }
        for (i, p) in w.factors().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            self.write_prime(out, p);
        }
    }

    fn write_prime(&self, out: &mut String, p: &Prime) {
        match p {
            Prime::Gen(g) => out.push_str(self.generator_name(*g)),
            Prime::Op(op, arg) => {
                out.push_str(self.operator_name(*op));
                out.push('(');
                self.write_word(out, arg);
                out.push(')');
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        let sig = Signature::standard(["x", "y"]).unwrap();
        assert_eq!(sig.format_word(&Word::unit()), "1");
        let xy = sig.parse_word("x y").unwrap();
        let op = sig.operator("R").unwrap();
        assert_eq!(sig.format_word(&Word::apply(op, xy)), "R(x y)");
        assert_eq!(sig.format_word(&sig.parse_word("R(1)").unwrap()), "R(1)");
    }

    #[test]
    fn polys_descend_in_deg_lex() {
        let sig = Signature::standard(["x", "y"]).unwrap();
        let p = sig.parse_poly("R(x S(y)) + R(R(x) y)").unwrap();
        assert_eq!(sig.format_poly(&p), "R(R(x) y) + R(x S(y))");
        let q = sig.parse_poly("2 - 1/2 x").unwrap();
        assert_eq!(sig.format_poly(&q), "-1/2 x + 2");
        assert_eq!(sig.format_poly(&Poly::zero()), "0");
        assert_eq!(sig.format_poly(&sig.parse_poly("-R(1)").unwrap()), "-R(1)");
    }

    #[test]
    fn tensors() {
        let sig = Signature::standard(["x"]).unwrap();
        let t = sig.parse_tensor("1⊗x + x⊗1").unwrap();
        assert_eq!(sig.format_tensor(&t, false), "1⊗x + x⊗1");
        assert_eq!(sig.format_tensor(&t, true), "1 (x) x + x (x) 1");
        assert_eq!(sig.format_tensor(&TensorPoly::zero(), false), "0");
    }
}
