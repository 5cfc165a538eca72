use super::MonicElement;
use crate::algebra::Poly;
use crate::rewriting::{ReductionTrace, Rewriter};
use crate::terms::{Prime, StarWord, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompositionKind {
    /// `w = f̄·a = b·ḡ`, composition `f·a - b·g`.
    Intersection { a: Word, b: Word },
    /// `w = f̄ = π|_ḡ`, composition `f - π|_g`.
    Inclusion { context: StarWord },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionRecord {
    pub kind: CompositionKind,
    pub f: MonicElement,
    pub g: MonicElement,
    pub ambiguity: Word,
    pub composition: Poly,
}

/// Outcome of reducing a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triviality {
    pub trivial: bool,
    pub certificate: ReductionTrace,
    /// Greatest word rewritten by the certificate, if any step was taken.
    pub max_leading_seen: Option<Word>,
    pub residual: Poly,
}

/// Top-level overlaps of a suffix of `f̄` with a prefix of `ḡ`.
pub fn find_intersection_compositions(
    f: &MonicElement,
    g: &MonicElement,
) -> Vec<CompositionRecord> {
    let (fl, gl) = (f.leading().factors(), g.leading().factors());
    let mut out = Vec::new();
    for k in 1..=fl.len().min(gl.len()) {
        if fl[fl.len() - k..] != gl[..k] {
            continue;
        }
        let a = Word::from_primes(gl[k..].iter().cloned());
        let b = Word::from_primes(fl[..fl.len() - k].iter().cloned());
        let ambiguity = f.leading().concat(&a);
        let composition = f.poly().concat_mul(&Poly::from_word(a.clone()))
            - Poly::from_word(b.clone()).concat_mul(g.poly());
        out.push(CompositionRecord {
            kind: CompositionKind::Intersection { a, b },
            f: f.clone(),
            g: g.clone(),
            ambiguity,
            composition,
        });
    }
    out
}

/// Every occurrence of `ḡ` inside `f̄`, at any nesting level. The occurrence
/// of an element inside itself at `★` is skipped.
pub fn find_inclusion_compositions(f: &MonicElement, g: &MonicElement) -> Vec<CompositionRecord> {
    let pattern = g.leading().factors();
    if pattern.is_empty() {
        return Vec::new();
    }
    let mut contexts = Vec::new();
    occurrences(f.leading().factors(), pattern, &mut contexts);
    contexts
        .into_iter()
        .filter(|pi| !(f == g && *pi == StarWord::hole()))
        .map(|context| CompositionRecord {
            composition: f.poly().clone() - context.substitute_poly(g.poly()),
            kind: CompositionKind::Inclusion { context },
            f: f.clone(),
            g: g.clone(),
            ambiguity: f.leading().clone(),
        })
        .collect()
}

fn occurrences(f: &[Prime], pattern: &[Prime], out: &mut Vec<StarWord>) {
    let k = pattern.len();
    if k <= f.len() {
        for i in 0..=f.len() - k {
            if &f[i..i + k] == pattern {
                out.push(StarWord::beside(&f[..i], &f[i + k..]));
            }
        }
    }
    for (j, p) in f.iter().enumerate() {
        if let Some((op, arg)) = p.as_op() {
            let mut inner = Vec::new();
            occurrences(arg.factors(), pattern, &mut inner);
            out.extend(inner.iter().map(|pi| pi.wrap(&f[..j], op, &f[j + 1..])));
        }
    }
}

/// Reduces the composition with the schematic rules of `rw`. Trivial iff it
/// reaches 0 and every rewritten word is below the ambiguity.
pub fn check_trivial(rec: &CompositionRecord, rw: &Rewriter) -> Triviality {
    let certificate = rw.normal_form_traced(&rec.composition);
    let max_leading_seen = certificate.max_rewritten().cloned();
    let below = max_leading_seen.as_ref().is_none_or(|m| *m < rec.ambiguity)
        && rec.composition.words().all(|w| *w < rec.ambiguity);
    Triviality {
        trivial: certificate.result.is_zero() && below,
        residual: certificate.result.clone(),
        max_leading_seen,
        certificate,
    }
}
