//! Compositions of the Rota-Baxter system relations and a bounded checker
//! that they form a Gröbner-Shirshov basis.
//!
//! The relation family is schematic: `u`, `v` range over all words. Every
//! check here instantiates it at bounded degree, so a passing run is
//! evidence for the bounds given, not a proof.

mod composition;
mod verify;

use std::collections::HashSet;

use num_traits::One;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::rewriting::RuleSet;
use crate::terms::{enumerate_words, Op, Prime, Signature, Word};

pub use composition::{
    check_trivial, find_inclusion_compositions, find_intersection_compositions, CompositionKind,
    CompositionRecord, Triviality,
};
pub use verify::{
    elw_expansion, families, verify_gsb, Family, FamilyReport, FamilyShape, GsbBounds, GsbFailure,
    GsbReport,
};

/// A polynomial scaled so that its leading word has coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicElement {
    poly: Poly,
    leading: Word,
}

impl MonicElement {
    pub fn new(p: &Poly) -> Result<MonicElement> {
        let (w, c) = p.leading().ok_or(Error::ZeroPolynomial)?;
        let leading = w.clone();
        let poly = if c.is_one() {
            p.clone()
        } else {
            p.scale(&c.recip())
        };
        Ok(MonicElement { poly, leading })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn leading(&self) -> &Word {
        &self.leading
    }
}

/// The relation of `op` at `(u, v)`, made monic.
pub fn relation(rules: &RuleSet, op: Op, u: &Word, v: &Word) -> MonicElement {
    MonicElement::new(&rules.relation(op, u, v)).expect("relations are nonzero")
}

/// Every schema instantiated at all `u`, `v` with `deg u + deg v <= max_degree`.
pub fn instantiate_relations(
    sig: &Signature,
    rules: &RuleSet,
    max_degree: usize,
) -> Vec<MonicElement> {
    let words = enumerate_words(sig, max_degree);
    let mut out = Vec::new();
    for schema in rules.schemas() {
        for u in &words {
            for v in words
                .iter()
                .filter(|v| u.degree() + v.degree() <= max_degree)
            {
                out.push(relation(rules, schema.op, u, v));
            }
        }
    }
    out
}

/// Words of degree at most `max_degree` that contain no leading word of
/// `relations` at any nesting level.
pub fn irreducibles(relations: &[MonicElement], sig: &Signature, max_degree: usize) -> Vec<Word> {
    let leading: HashSet<&[Prime]> = relations.iter().map(|r| r.leading().factors()).collect();
    let lengths: HashSet<usize> = leading.iter().map(|f| f.len()).collect();
    enumerate_words(sig, max_degree)
        .into_iter()
        .filter(|w| !contains_any(w.factors(), &leading, &lengths))
        .collect()
}

fn contains_any(f: &[Prime], leading: &HashSet<&[Prime]>, lengths: &HashSet<usize>) -> bool {
    let here = lengths
        .iter()
        .filter(|&&k| k > 0 && k <= f.len())
        .any(|&k| f.windows(k).any(|win| leading.contains(win)));
    here || f
        .iter()
        .filter_map(Prime::as_op)
        .any(|(_, arg)| contains_any(arg.factors(), leading, lengths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewriting::is_rbs_word;

    #[test]
    fn instance_count() {
        let sig = Signature::standard(["x"]).unwrap();
        let rules = RuleSet::rota_baxter(&sig);
        assert_eq!(instantiate_relations(&sig, &rules, 1).len(), 14);
        assert_eq!(instantiate_relations(&sig, &rules, 0).len(), 2);
    }

    #[test]
    fn displayed_instances() {
        let sig = Signature::standard(["x"]).unwrap();
        let rules = RuleSet::rota_baxter(&sig);
        let w = |s: &str| sig.parse_word(s).unwrap();
        let r = sig.operator("R").unwrap();
        let s = sig.operator("S").unwrap();
        let f = relation(&rules, r, &Word::unit(), &Word::unit());
        assert_eq!(sig.format_poly(f.poly()), "R(1) R(1) - R(R(1)) - R(S(1))");
        assert_eq!(f.leading(), &w("R(1) R(1)"));
        let h = relation(&rules, s, &w("x"), &Word::unit());
        assert_eq!(sig.format_poly(h.poly()), "S(x) S(1) - S(x S(1)) - S(R(x))");
    }

    #[test]
    fn monic_rescales() {
        let sig = Signature::standard(["x"]).unwrap();
        let rules = RuleSet::rota_baxter(&sig).with_flipped_sign(sig.operator("R").unwrap(), 0);
        let f = relation(
            &rules,
            sig.operator("R").unwrap(),
            &Word::unit(),
            &Word::unit(),
        );
        assert_eq!(sig.format_poly(f.poly()), "R(1) R(1) + R(R(1)) + R(S(1))");
        assert!(MonicElement::new(&Poly::zero()).is_err());
    }

    #[test]
    fn irreducible_counts() {
        let sig = Signature::standard(["x"]).unwrap();
        let rules = RuleSet::rota_baxter(&sig);
        let irr = irreducibles(&instantiate_relations(&sig, &rules, 0), &sig, 2);
        let counts: Vec<usize> = (0..=2)
            .map(|d| irr.iter().filter(|w| w.degree() == d).count())
            .collect();
        assert_eq!(counts, [1, 3, 13]);
        assert!(irr.iter().all(is_rbs_word));
        assert_eq!(irreducibles(&[], &sig, 0), [Word::unit()]);
    }
}
