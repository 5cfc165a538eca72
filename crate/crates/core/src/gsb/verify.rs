use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::composition::{
    check_trivial, find_inclusion_compositions, find_intersection_compositions, CompositionKind,
    CompositionRecord,
};
use super::relation;
use crate::algebra::{Poly, PolyTermJson, Scalar};
use crate::rewriting::{find_redex, Rewriter, RuleSet};
use crate::terms::{enumerate_star_words, enumerate_words, Op, Prime, Signature, StarWord, Word};

/// Degree bounds for instantiating the composition families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsbBounds {
    pub uvw_degree: usize,
    pub pi_degree: usize,
}

impl Default for GsbBounds {
    fn default() -> GsbBounds {
        GsbBounds {
            uvw_degree: 1,
            pi_degree: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyShape {
    /// `Q(u)Q(v)Q(w)`.
    Intersection,
    /// `Q(π|_{P(u)P(v)}) Q(w)`.
    Left,
    /// `Q(u) Q(π|_{P(v)P(w)})`.
    Right,
}

/// One family of compositions: outer relation for `outer`, inner for `inner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: String,
    pub outer: Op,
    pub inner: Op,
    pub shape: FamilyShape,
}

/// All composition families of a signature. For each operator `Q` in rank
/// order: the overlap `Q(u)Q(v)Q(w)`, then inclusions of the `Q` relation in
/// itself, then inclusions of the other relations by rank. With `R > S` this
/// gives ten families `w1 … w10`.
pub fn families(sig: &Signature) -> Vec<Family> {
    let mut out = Vec::new();
    for outer in sig.operators() {
        let inners = std::iter::once(outer).chain(sig.operators().filter(move |&q| q != outer));
        let mut shapes = vec![(outer, FamilyShape::Intersection)];
        for inner in inners {
            shapes.push((inner, FamilyShape::Left));
            shapes.push((inner, FamilyShape::Right));
        }
        for (inner, shape) in shapes {
            out.push(Family {
                name: format!("w{}", out.len() + 1),
                outer,
                inner,
                shape,
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsbFailure {
    pub u: String,
    pub v: String,
    pub w: String,
    pub pi: Option<String>,
    pub reason: String,
    pub residual: Vec<PolyTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub ambiguity: String,
    pub instances_checked: usize,
    pub compositions_checked: usize,
    pub failures: Vec<GsbFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GsbReport {
    pub bounds: GsbBounds,
    pub families: Vec<FamilyReport>,
}

impl GsbReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.failures.is_empty())
    }

    pub fn instances_checked(&self) -> usize {
        self.families.iter().map(|f| f.instances_checked).sum()
    }

    pub fn failure_count(&self) -> usize {
        self.families.iter().map(|f| f.failures.len()).sum()
    }
}

struct Instance<'a> {
    u: &'a Word,
    v: &'a Word,
    w: &'a Word,
    pi: Option<&'a StarWord>,
}

fn pair(op: Op, a: &Word, b: &Word) -> Word {
    Word::apply(op, a.clone()).concat(&Word::apply(op, b.clone()))
}

fn family_ambiguity(sig: &Signature, fam: &Family) -> String {
    let q = sig.operator_name(fam.outer);
    let p = sig.operator_name(fam.inner);
    match fam.shape {
        FamilyShape::Intersection => format!("{q}(u) {q}(v) {q}(w)"),
        FamilyShape::Left => format!("{q}(π|{p}(u) {p}(v)) {q}(w)"),
        FamilyShape::Right => format!("{q}(u) {q}(π|{p}(v) {p}(w))"),
    }
}

/// Builds the compositions of one instance and the record expected by the
/// family's shape.
fn compositions(rules: &RuleSet, fam: &Family, inst: &Instance) -> (Vec<CompositionRecord>, bool) {
    let (q, p) = (fam.outer, fam.inner);
    let Instance { u, v, w, pi } = *inst;
    match (fam.shape, pi) {
        (FamilyShape::Intersection, _) => {
            let f = relation(rules, q, u, v);
            let g = relation(rules, q, v, w);
            let recs = find_intersection_compositions(&f, &g);
            let target = Word::apply(q, u.clone()).concat(&pair(q, v, w));
            let found = recs.iter().any(|r| r.ambiguity == target);
            (recs, found)
        }
        (FamilyShape::Left, Some(pi)) => {
            let f = relation(rules, q, &pi.substitute(&pair(p, u, v)), w);
            let g = relation(rules, p, u, v);
            let expected = pi.wrap(&[], q, &[Prime::Op(q, w.clone())]);
            let recs = find_inclusion_compositions(&f, &g);
            let found = recs.iter().any(|r| {
                r.kind
                    == CompositionKind::Inclusion {
                        context: expected.clone(),
                    }
            });
            (recs, found)
        }
        (FamilyShape::Right, Some(pi)) => {
            let f = relation(rules, q, u, &pi.substitute(&pair(p, v, w)));
            let g = relation(rules, p, v, w);
            let expected = pi.wrap(&[Prime::Op(q, u.clone())], q, &[]);
            let recs = find_inclusion_compositions(&f, &g);
            let found = recs.iter().any(|r| {
                r.kind
                    == CompositionKind::Inclusion {
                        context: expected.clone(),
                    }
            });
            (recs, found)
        }
        (_, None) => unreachable!("inclusion families always carry a context"),
    }
}

fn check_instance(
    sig: &Signature,
    rules: &RuleSet,
    rw: &Rewriter,
    fam: &Family,
    inst: &Instance,
) -> (usize, Vec<GsbFailure>) {
    let failure = |reason: &str, residual: &Poly| GsbFailure {
        u: sig.format_word(inst.u),
        v: sig.format_word(inst.v),
        w: sig.format_word(inst.w),
        pi: inst.pi.map(|pi| sig.format_star(pi)),
        reason: reason.to_string(),
        residual: sig.poly_to_json(residual),
    };
    let (recs, found) = compositions(rules, fam, inst);
    let mut failures = Vec::new();
    if !found {
        failures.push(failure("expected ambiguity not found", &Poly::zero()));
    }
    for rec in &recs {
        let t = check_trivial(rec, rw);
        if !t.certificate.result.is_zero() {
            failures.push(failure("nonzero normal form", &t.residual));
        } else if !t.trivial {
            failures.push(failure(
                "rewrote a word not below the ambiguity",
                &t.residual,
            ));
        }
    }
    (recs.len(), failures)
}

/// Checks every composition family of `rules` over all `u, v, w` of degree
/// at most `bounds.uvw_degree` and every star-word of degree at most
/// `bounds.pi_degree`. Failures are collected, never raised.
pub fn verify_gsb(sig: &Signature, rules: &RuleSet, bounds: GsbBounds) -> GsbReport {
    let words = enumerate_words(sig, bounds.uvw_degree);
    let stars = enumerate_star_words(sig, bounds.pi_degree);
    let rw = Rewriter::new(rules.clone());
    let mut triples = Vec::new();
    for u in &words {
        for v in &words {
            for w in &words {
                triples.push((u, v, w));
            }
        }
    }
    let families = families(sig)
        .iter()
        .map(|fam| {
            let instances: Vec<Instance> = match fam.shape {
                FamilyShape::Intersection => triples
                    .iter()
                    .map(|&(u, v, w)| Instance { u, v, w, pi: None })
                    .collect(),
                _ => triples
                    .iter()
                    .flat_map(|&(u, v, w)| {
                        stars.iter().map(move |pi| Instance {
                            u,
                            v,
                            w,
                            pi: Some(pi),
                        })
                    })
                    .collect(),
            };
            let results: Vec<(usize, Vec<GsbFailure>)> = instances
                .par_iter()
                .map(|inst| check_instance(sig, rules, &rw, fam, inst))
                .collect();
            FamilyReport {
                family: fam.name.clone(),
                ambiguity: family_ambiguity(sig, fam),
                instances_checked: instances.len(),
                compositions_checked: results.iter().map(|r| r.0).sum(),
                failures: results.into_iter().flat_map(|r| r.1).collect(),
            }
        })
        .collect();
    GsbReport { bounds, families }
}

/// One elimination step applied separately to every monomial of `p`, with
/// the resulting terms left uncollected. Irreducible monomials pass through.
pub fn elw_expansion(rw: &Rewriter, p: &Poly) -> Vec<(Scalar, Word)> {
    let mut out = Vec::new();
    for (w, c) in p {
        match find_redex(w) {
            Some(m) => out.extend(rw.rewrite_redex(&m).into_iter().map(|(v, d)| (c * d, v))),
            None => out.push((c.clone(), w.clone())),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_families_in_order() {
        let sig = Signature::standard(["x"]).unwrap();
        let fams = families(&sig);
        let names: Vec<String> = fams.iter().map(|f| family_ambiguity(&sig, f)).collect();
        assert_eq!(names.len(), 10);
        assert_eq!(names[0], "R(u) R(v) R(w)");
        assert_eq!(names[3], "R(π|S(u) S(v)) R(w)");
        assert_eq!(names[5], "S(u) S(v) S(w)");
        assert_eq!(names[9], "S(u) S(π|R(v) R(w))");
        assert_eq!(fams[9].name, "w10");
    }

    #[test]
    fn three_operators_give_more_families() {
        let sig = Signature::new(["x"], ["P", "Q", "T"]).unwrap();
        assert_eq!(families(&sig).len(), 3 * 7);
    }

    #[test]
    fn degree_zero_bounds_pass() {
        let sig = Signature::standard(["x"]).unwrap();
        let rules = RuleSet::rota_baxter(&sig);
        let bounds = GsbBounds {
            uvw_degree: 0,
            pi_degree: 0,
        };
        let report = verify_gsb(&sig, &rules, bounds);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.instances_checked(), 10);
    }

    #[test]
    fn leading_sign_flip_is_caught() {
        let sig = Signature::standard(["x"]).unwrap();
        let rules = RuleSet::rota_baxter(&sig).with_flipped_sign(sig.operator("R").unwrap(), 0);
        let bounds = GsbBounds {
            uvw_degree: 0,
            pi_degree: 0,
        };
        assert!(!verify_gsb(&sig, &rules, bounds).passed());
    }
}
