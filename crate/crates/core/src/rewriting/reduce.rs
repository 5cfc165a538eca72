use std::collections::{HashMap, HashSet};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use super::redex::{find_redex, find_redex_with, RuleMatch, Strategy};
use super::rules::RuleSet;
use crate::algebra::{format_scalar, Poly, PolyTermJson, Scalar};
use crate::terms::{Prime, Signature, Word};

/// Reduction engine for one rule set, with transparent memo caches.
///
/// Safe to share between threads; the caches only ever store values that the
/// uncached computation would produce.
#[derive(Debug)]
pub struct Rewriter {
    rules: RuleSet,
    normal_forms: RwLock<HashMap<Word, Poly>>,
    pub(super) products: RwLock<HashMap<(Prime, Prime), Poly>>,
}

/// One elimination of a leading word: `coefficient · word` was replaced by
/// `coefficient · replacement`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub word: Word,
    pub coefficient: Scalar,
    pub redex: RuleMatch,
    pub replacement: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub input: Poly,
    pub steps: Vec<ReductionStep>,
    pub result: Poly,
}

impl ReductionTrace {
    /// Re-applies the steps to the input. `None` if some step rewrites a
    /// monomial that is not present with the recorded coefficient.
    pub fn replay(&self) -> Option<Poly> {
        let mut p = self.input.clone();
        for step in &self.steps {
            if p.coefficient(&step.word) != step.coefficient {
                return None;
            }
            p.add_term(step.word.clone(), -step.coefficient.clone());
            p.add_scaled(&step.replacement, &step.coefficient);
        }
        Some(p)
    }

    /// Every step replaced its word by strictly smaller words.
    pub fn is_decreasing(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.replacement.words().all(|w| w < &s.word))
    }

    /// The largest word rewritten along the way.
    pub fn max_rewritten(&self) -> Option<&Word> {
        self.steps.iter().map(|s| &s.word).max()
    }

    pub fn to_json(&self, sig: &Signature) -> TraceJson {
        TraceJson {
            input: sig.poly_to_json(&self.input),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    word: sig.format_word(&s.word),
                    coeff: format_scalar(&s.coefficient),
                    context: sig.format_star(&s.redex.context),
                    op: sig.operator_name(s.redex.op).to_string(),
                    u: sig.format_word(&s.redex.left),
                    v: sig.format_word(&s.redex.right),
                    replacement: sig.poly_to_json(&s.replacement),
                })
                .collect(),
            result: sig.poly_to_json(&self.result),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub input: Vec<PolyTermJson>,
    pub steps: Vec<StepJson>,
    pub result: Vec<PolyTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub word: String,
    pub coeff: String,
    pub context: String,
    pub op: String,
    pub u: String,
    pub v: String,
    pub replacement: Vec<PolyTermJson>,
}

impl Rewriter {
    pub fn new(rules: RuleSet) -> Rewriter {
        Rewriter {
            rules,
            normal_forms: RwLock::new(HashMap::new()),
            products: RwLock::new(HashMap::new()),
        }
    }

    /// The Rota-Baxter system relations over `sig`.
    pub fn standard(sig: &Signature) -> Rewriter {
        Rewriter::new(RuleSet::rota_baxter(sig))
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    /// `context|_{k1·Q(L(u)v) + k2·Q(uT(v))}`, expanded.
    pub fn rewrite_redex(&self, m: &RuleMatch) -> Poly {
        m.context
            .substitute_poly(&self.rules.replacement(m.op, &m.left, &m.right))
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        p.map_linear(|w| self.normal_form_word(w))
    }

    pub fn normal_form_word(&self, w: &Word) -> Poly {
        if let Some(nf) = self.normal_forms.read().expect("poisoned").get(w) {
            return nf.clone();
        }
        let nf = match find_redex(w) {
            None => Poly::from_word(w.clone()),
            Some(m) => self.normal_form(&self.rewrite_redex(&m)),
        };
        self.normal_forms
            .write()
            .expect("poisoned")
            .insert(w.clone(), nf.clone());
        nf
    }

    /// Uncached reduction choosing redexes by `strategy`.
    pub fn normal_form_with(&self, p: &Poly, strategy: Strategy) -> Poly {
        self.reduce(p, strategy).result
    }

    /// Reduction that records every step. The greatest reducible monomial is
    /// always rewritten first.
    pub fn normal_form_traced(&self, p: &Poly) -> ReductionTrace {
        self.reduce(p, Strategy::LeftmostOutermost)
    }

    fn reduce(&self, p: &Poly, strategy: Strategy) -> ReductionTrace {
        let mut current = p.clone();
        let mut steps = Vec::new();
        let mut irreducible: HashSet<Word> = HashSet::new();
        loop {
            let next = current.iter().rev().find_map(|(w, c)| {
                if irreducible.contains(w) {
                    return None;
                }
                match find_redex_with(w, strategy) {
                    Some(m) => Some((w.clone(), c.clone(), m)),
                    None => {
                        irreducible.insert(w.clone());
                        None
                    }
                }
            });
            let Some((word, coefficient, redex)) = next else {
                break;
            };
            let replacement = self.rewrite_redex(&redex);
            current.add_term(word.clone(), -coefficient.clone());
            current.add_scaled(&replacement, &coefficient);
            steps.push(ReductionStep {
                word,
                coefficient,
                redex,
                replacement,
            });
        }
        ReductionTrace {
            input: p.clone(),
            steps,
            result: current,
        }
    }
}
