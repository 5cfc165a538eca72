use num_traits::One;

use crate::algebra::{scalar, Poly, Scalar};
use crate::terms::{Op, Signature, Word};

/// One relation schema `c0·Q(u)Q(v) + c1·Q(L(u) v) + c2·Q(u T(v))`, where
/// `L` is the top-ranked and `T` the bottom-ranked operator.
///
/// The Rota-Baxter system relations are `(1, -1, -1)` for every operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSchema {
    pub op: Op,
    pub coefficients: [Scalar; 3],
}

/// The relation schemas of every operator of a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleSet {
    top: Op,
    bottom: Op,
    schemas: Vec<RelationSchema>,
}

/// A rule set with exactly one coefficient sign flipped.
#[derive(Clone, Debug)]
pub struct SignMutation {
    pub op: Op,
    pub term: usize,
    pub rules: RuleSet,
}

impl RuleSet {
    /// `Q(u)Q(v) - Q(R(u) v) - Q(u S(v))` for every operator `Q`.
    pub fn rota_baxter(sig: &Signature) -> RuleSet {
        RuleSet {
            top: sig.top_operator(),
            bottom: sig.bottom_operator(),
            schemas: sig
                .operators()
                .map(|op| RelationSchema {
                    op,
                    coefficients: [scalar(1), scalar(-1), scalar(-1)],
                })
                .collect(),
        }
    }

    pub fn top_operator(&self) -> Op {
        self.top
    }

    pub fn bottom_operator(&self) -> Op {
        self.bottom
    }

    pub fn schemas(&self) -> &[RelationSchema] {
        &self.schemas
    }

    pub fn schema(&self, op: Op) -> &RelationSchema {
        &self.schemas[op.index()]
    }

    /// `Q(L(u) v)` and `Q(u T(v))`.
    pub fn tail_words(&self, op: Op, u: &Word, v: &Word) -> [Word; 2] {
        let left = Word::apply(op, Word::apply(self.top, u.clone()).concat(v));
        let right = Word::apply(op, u.concat(&Word::apply(self.bottom, v.clone())));
        [left, right]
    }

    /// The relation instantiated at `u`, `v`.
    pub fn relation(&self, op: Op, u: &Word, v: &Word) -> Poly {
        let [c0, c1, c2] = &self.schema(op).coefficients;
        let lead = Word::apply(op, u.clone()).concat(&Word::apply(op, v.clone()));
        let [t1, t2] = self.tail_words(op, u, v);
        let mut p = Poly::term(c0.clone(), lead);
        p.add_term(t1, c1.clone());
        p.add_term(t2, c2.clone());
        p
    }

    /// Coefficients `(k1, k2)` of the rewrite `Q(u)Q(v) → k1·Q(L(u)v) + k2·Q(uT(v))`.
    pub fn rewrite_coefficients(&self, op: Op) -> (Scalar, Scalar) {
        let [c0, c1, c2] = &self.schema(op).coefficients;
        (-(c1 / c0), -(c2 / c0))
    }

    /// The lower-order side that replaces `Q(u)Q(v)`.
    pub fn replacement(&self, op: Op, u: &Word, v: &Word) -> Poly {
        let (k1, k2) = self.rewrite_coefficients(op);
        let [t1, t2] = self.tail_words(op, u, v);
        let mut p = Poly::term(k1, t1);
        p.add_term(t2, k2);
        p
    }

    pub fn is_standard(&self) -> bool {
        self.schemas.iter().all(|s| {
            let [c0, c1, c2] = &s.coefficients;
            c0.is_one() && (-c1).is_one() && (-c2).is_one()
        })
    }

    /// Flips the sign of coefficient `term` (0, 1 or 2) of the schema for `op`.
    pub fn with_flipped_sign(&self, op: Op, term: usize) -> RuleSet {
        let mut out = self.clone();
        let c = &mut out.schemas[op.index()].coefficients[term];
        *c = -c.clone();
        out
    }

    /// Every single-sign mutation of this rule set.
    pub fn sign_mutations(&self) -> Vec<SignMutation> {
        self.schemas
            .iter()
            .flat_map(|s| (0..3).map(move |term| (s.op, term)))
            .map(|(op, term)| SignMutation {
                op,
                term,
                rules: self.with_flipped_sign(op, term),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_at_unit() {
        let sig = Signature::standard(["x"]).unwrap();
        let rules = RuleSet::rota_baxter(&sig);
        let r = sig.operator("R").unwrap();
        let s = sig.operator("S").unwrap();
        let one = Word::unit();
        let x = sig.parse_word("x").unwrap();
        assert_eq!(
            rules.relation(r, &one, &one),
            sig.parse_poly("R(1) R(1) - R(R(1)) - R(S(1))").unwrap()
        );
        assert_eq!(
            rules.relation(s, &x, &one),
            sig.parse_poly("S(x) S(1) - S(R(x)) - S(x S(1))").unwrap()
        );
        assert_eq!(
            rules.replacement(s, &x, &x),
            sig.parse_poly("S(R(x) x) + S(x S(x))").unwrap()
        );
    }

    #[test]
    fn mutations() {
        let sig = Signature::standard(["x"]).unwrap();
        let rules = RuleSet::rota_baxter(&sig);
        assert!(rules.is_standard());
        let muts = rules.sign_mutations();
        assert_eq!(muts.len(), 6);
        assert!(muts.iter().all(|m| !m.rules.is_standard()));
        let lead_flip = rules.with_flipped_sign(sig.operator("R").unwrap(), 0);
        let (k1, k2) = lead_flip.rewrite_coefficients(sig.operator("R").unwrap());
        assert_eq!((k1, k2), (scalar(-1), scalar(-1)));
    }
}
