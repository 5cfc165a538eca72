use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Hopf, LinearEndomap, Tensor3};
use crate::algebra::{format_scalar, Poly, TensorPoly};
use crate::rewriting::basis_by_degree;
use crate::terms::{Signature, Word};

/// Number of random pairs checked beyond the exhaustive range.
const RANDOM_PAIRS: usize = 500;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteFailure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<SuiteFailure>,
}

/// `(id⊗ε)Δ(w)` next to `w`, for a word where the two differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounitWitness {
    pub input: String,
    pub id_tensor_counit: String,
    pub beta_r: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Informational {
    pub right_antipode: String,
    pub left_antipode_holds: bool,
    pub left_antipode_counterexample: Option<SuiteFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfReport {
    pub max_degree: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub right_counit_witness: Option<CounitWitness>,
    pub informational: Informational,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }
}

struct Fmt<'a> {
    sig: &'a Signature,
}

impl Fmt<'_> {
    fn poly(&self, p: &Poly) -> String {
        self.sig.format_poly(p)
    }

    fn tensor(&self, t: &TensorPoly) -> String {
        self.sig.format_tensor(t, false)
    }

    fn tensor3(&self, t: &Tensor3) -> String {
        if t.is_empty() {
            return "0".into();
        }
        t.iter()
            .rev()
            .map(|((a, b, c), k)| {
                let w = |x: &Word| self.sig.format_word(x);
                format!("{}·{}⊗{}⊗{}", format_scalar(k), w(a), w(b), w(c))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn pair(&self, w: &Word, v: &Word) -> String {
        format!("{} , {}", self.sig.format_word(w), self.sig.format_word(v))
    }
}

fn run<T: Sync>(
    suite: &str,
    items: &[T],
    check: impl Fn(&T) -> Option<SuiteFailure> + Send + Sync,
) -> SuiteReport {
    let failures: Vec<Option<SuiteFailure>> = items.par_iter().map(check).collect();
    SuiteReport {
        suite: suite.to_string(),
        checked: items.len(),
        failures: failures.into_iter().flatten().collect(),
    }
}

fn mismatch(input: String, lhs: String, rhs: String) -> Option<SuiteFailure> {
    Some(SuiteFailure { input, lhs, rhs })
}

/// Basis pairs with degree sum at most `max_degree`, then `RANDOM_PAIRS`
/// seeded random pairs with degree sum at most `max_degree + 2`.
fn pair_sample(basis: &[Vec<Word>], max_degree: usize, seed: u64) -> Vec<(Word, Word)> {
    let mut pairs = Vec::new();
    for p in 0..=max_degree {
        for q in 0..=max_degree - p {
            for w in &basis[p] {
                for v in &basis[q] {
                    pairs.push((w.clone(), v.clone()));
                }
            }
        }
    }
    let top = max_degree + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_PAIRS {
        let total = rng.gen_range(0..=top);
        let p = rng.gen_range(0..=total);
        let q = total - p;
        let w = &basis[p][rng.gen_range(0..basis[p].len())];
        let v = &basis[q][rng.gen_range(0..basis[q].len())];
        pairs.push((w.clone(), v.clone()));
    }
    pairs
}

/// Runs every bialgebra and antipode check on basis words of degree at most
/// `max_degree`. Failures are collected, never raised.
pub fn verify_hopf(sig: &Signature, max_degree: usize, seed: u64) -> HopfReport {
    let h = Hopf::new(sig);
    let fmt = Fmt { sig };
    let basis = basis_by_degree(sig, max_degree + 2);
    let words: Vec<Word> = basis[..=max_degree].iter().flatten().cloned().collect();
    let positive: Vec<Word> = words.iter().filter(|w| !w.is_unit()).cloned().collect();
    let pairs = pair_sample(&basis, max_degree, seed);
    let exhaustive = &pairs[..pairs.len() - RANDOM_PAIRS];
    let rw = h.rewriter();
    let one = Word::unit();

    let mut suites = Vec::new();
    suites.push(run("delta_multiplicativity", &pairs, |(w, v)| {
        let lhs = h.coproduct_poly(&rw.diamond_basis(w, v)).ok()?;
        let rhs = h.tensor_diamond_basis(&h.coproduct_basis(w), &h.coproduct_basis(v));
        (lhs != rhs).then(|| mismatch(fmt.pair(w, v), fmt.tensor(&lhs), fmt.tensor(&rhs)))?
    }));
    suites.push(run("counit_multiplicativity", &pairs, |(w, v)| {
        let lhs = Hopf::counit(&rw.diamond_basis(w, v));
        let rhs =
            Hopf::counit(&Poly::from_word(w.clone())) * Hopf::counit(&Poly::from_word(v.clone()));
        (lhs != rhs).then(|| mismatch(fmt.pair(w, v), format_scalar(&lhs), format_scalar(&rhs)))?
    }));
    suites.push(run("coassociativity", &words, |w| {
        let lhs = h.coproduct_left_twice(w).ok()?;
        let rhs = h.coproduct_right_twice(w).ok()?;
        (lhs != rhs).then(|| mismatch(sig.format_word(w), fmt.tensor3(&lhs), fmt.tensor3(&rhs)))?
    }));
    suites.push(run("left_counit", &words, |w| {
        let mut lhs = Poly::zero();
        for ((l, r), c) in &h.coproduct_basis(w) {
            if l.is_unit() {
                lhs.add_term(r.clone(), c.clone());
            }
        }
        let rhs = Poly::from_word(w.clone());
        (lhs != rhs).then(|| mismatch(sig.format_word(w), fmt.poly(&lhs), fmt.poly(&rhs)))?
    }));

    let right_counit = |w: &Word| {
        let mut p = Poly::zero();
        for ((l, r), c) in &h.coproduct_basis(w) {
            if r.is_unit() {
                p.add_term(l.clone(), c.clone());
            }
        }
        p
    };
    let mut witness = None;
    let mut failures = Vec::new();
    let mut checked = 0;
    if sig.operators().len() >= 2 {
        checked = 1;
        let w = Word::apply(sig.bottom_operator(), one.clone());
        let lhs = right_counit(&w);
        let rhs = Poly::from_word(w.clone());
        if lhs == rhs {
            failures.push(SuiteFailure {
                input: sig.format_word(&w),
                lhs: fmt.poly(&lhs),
                rhs: fmt.poly(&rhs),
            });
        } else {
            witness = Some(CounitWitness {
                input: sig.format_word(&w),
                id_tensor_counit: fmt.poly(&lhs),
                beta_r: fmt.poly(&rhs),
            });
        }
    }
    suites.push(SuiteReport {
        suite: "right_counit_failure".into(),
        checked,
        failures,
    });

    suites.push(run("grading_diamond", exhaustive, |(w, v)| {
        let prod = rw.diamond_basis(w, v);
        let n = w.degree() + v.degree();
        (prod.graded_slice(n) != prod)
            .then(|| mismatch(fmt.pair(w, v), fmt.poly(&prod), format!("degree {n} only")))?
    }));
    suites.push(run("grading_coproduct", &words, |w| {
        let t = h.coproduct_basis(w);
        let n = w.degree();
        let homogeneous: TensorPoly = (0..=n).fold(TensorPoly::zero(), |mut acc, p| {
            acc += t.graded_slice(p, n - p);
            acc
        });
        (homogeneous != t).then(|| {
            mismatch(
                sig.format_word(w),
                fmt.tensor(&t),
                format!("leg degrees summing to {n}"),
            )
        })?
    }));
    suites.push(run("connectedness", &positive, |w| {
        let slice = h.coproduct_basis(w).graded_slice(0, w.degree());
        let expected = TensorPoly::tensor_of(&Poly::one(), &Poly::from_word(w.clone()));
        (slice != expected).then(|| {
            mismatch(
                sig.format_word(w),
                fmt.tensor(&slice),
                fmt.tensor(&expected),
            )
        })?
    }));

    let id = LinearEndomap::identity();
    let t = h.antipode_map();
    let id_t = h.convolve(&id, &t);
    let t_id = h.convolve(&t, &id);
    let unit_counit = |w: &Word| Hopf::unit_map(&Hopf::counit(&Poly::from_word(w.clone())));
    let right = run("right_antipode", &words, |w| {
        let rhs = unit_counit(w);
        match id_t.apply_word(w) {
            Ok(lhs) => (lhs != rhs)
                .then(|| mismatch(sig.format_word(w), fmt.poly(&lhs), fmt.poly(&rhs)))?,
            Err(e) => mismatch(sig.format_word(w), e.to_string(), fmt.poly(&rhs)),
        }
    });
    let left = run("left_antipode", &words, |w| {
        let rhs = unit_counit(w);
        match t_id.apply_word(w) {
            Ok(lhs) => (lhs != rhs)
                .then(|| mismatch(sig.format_word(w), fmt.poly(&lhs), fmt.poly(&rhs)))?,
            Err(e) => mismatch(sig.format_word(w), e.to_string(), fmt.poly(&rhs)),
        }
    });
    let informational = Informational {
        right_antipode: if right.failures.is_empty() {
            "pass"
        } else {
            "fail"
        }
        .into(),
        left_antipode_holds: left.failures.is_empty(),
        left_antipode_counterexample: left.failures.into_iter().next(),
    };
    suites.push(right);

    HopfReport {
        max_degree,
        seed,
        suites,
        right_counit_witness: witness,
        informational,
    }
}
