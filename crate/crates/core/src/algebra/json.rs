//! JSON encodings: a polynomial is a list of `{coeff, word}` and a tensor a
//! list of `{coeff, left, right}`, coefficients written as `"num/den"`.

use serde::{Deserialize, Serialize};

use super::{format_scalar, parse_scalar, Poly, TensorPoly};
use crate::error::Result;
use crate::terms::Signature;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTermJson {
    pub coeff: String,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub coeff: String,
    pub left: String,
    pub right: String,
}

impl Signature {
    /// Terms in descending Deg-lex order, matching [`Signature::format_poly`].
    pub fn poly_to_json(&self, p: &Poly) -> Vec<PolyTermJson> {
        p.iter()
            .rev()
            .map(|(w, c)| PolyTermJson {
                coeff: format_scalar(c),
                word: self.format_word(w),
            })
            .collect()
    }

    pub fn poly_from_json(&self, terms: &[PolyTermJson]) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in terms {
            p.add_term(self.parse_word(&t.word)?, parse_scalar(&t.coeff)?);
        }
        Ok(p)
    }

    pub fn tensor_to_json(&self, t: &TensorPoly) -> Vec<TensorTermJson> {
        t.iter()
            .rev()
            .map(|((l, r), c)| TensorTermJson {
                coeff: format_scalar(c),
                left: self.format_word(l),
                right: self.format_word(r),
            })
            .collect()
    }

    pub fn tensor_from_json(&self, terms: &[TensorTermJson]) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero();
        for t in terms {
            out.add_term(
                self.parse_word(&t.left)?,
                self.parse_word(&t.right)?,
                parse_scalar(&t.coeff)?,
            );
        }
        Ok(out)
    }
}
