use std::collections::btree_map::{self, BTreeMap};
use std::ops::AddAssign;

use num_traits::Zero;

use super::{Poly, Scalar};
use crate::terms::Word;

/// A finite linear combination of `left ⊗ right` word pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorPoly {
    pub fn zero() -> TensorPoly {
        TensorPoly::default()
    }

    /// `p ⊗ q`, expanded bilinearly.
    pub fn tensor_of(p: &Poly, q: &Poly) -> TensorPoly {
        let mut t = TensorPoly::zero();
        for (u, a) in p {
            for (v, b) in q {
                t.add_term(u.clone(), v.clone(), a * b);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, (Word, Word), Scalar> {
        self.terms.iter()
    }

    pub fn coefficient(&self, left: &Word, right: &Word) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
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

    pub fn add_scaled(&mut self, other: &TensorPoly, c: &Scalar) {
        for ((l, r), d) in &other.terms {
            self.add_term(l.clone(), r.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero();
        }
        TensorPoly {
            terms: self.terms.iter().map(|(k, d)| (k.clone(), d * c)).collect(),
        }
    }

    /// `(f ⊗ g)(t)`: applies linear maps given on words to each leg.
    pub fn map<F, G>(&self, mut left: F, mut right: G) -> TensorPoly
    where
        F: FnMut(&Word) -> Poly,
        G: FnMut(&Word) -> Poly,
    {
        let mut out = TensorPoly::zero();
        for ((l, r), c) in &self.terms {
            let mapped = TensorPoly::tensor_of(&left(l), &right(r));
            out.add_scaled(&mapped, c);
        }
        out
    }

    /// Contracts both legs with a bilinear map into polynomials.
    pub fn contract(&self, mut mul: impl FnMut(&Word, &Word) -> Poly) -> Poly {
        let mut out = Poly::zero();
        for ((l, r), c) in &self.terms {
            out.add_scaled(&mul(l, r), c);
        }
        out
    }

    /// Projection onto terms whose legs have degrees `p` and `q`.
    pub fn graded_slice(&self, p: usize, q: usize) -> TensorPoly {
        TensorPoly {
            terms: self
                .terms
                .iter()
                .filter(|((l, r), _)| l.degree() == p && r.degree() == q)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl AddAssign<&TensorPoly> for TensorPoly {
    fn add_assign(&mut self, rhs: &TensorPoly) {
        for ((l, r), c) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }
}

impl AddAssign for TensorPoly {
    fn add_assign(&mut self, rhs: TensorPoly) {
        for ((l, r), c) in rhs.terms {
            self.add_term(l, r, c);
        }
    }
}

impl<'a> IntoIterator for &'a TensorPoly {
    type Item = (&'a (Word, Word), &'a Scalar);
    type IntoIter = btree_map::Iter<'a, (Word, Word), Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl FromIterator<((Word, Word), Scalar)> for TensorPoly {
    fn from_iter<I: IntoIterator<Item = ((Word, Word), Scalar)>>(iter: I) -> Self {
        let mut t = TensorPoly::zero();
        for ((l, r), c) in iter {
            t.add_term(l, r, c);
        }
        t
    }
}
