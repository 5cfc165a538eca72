//! The left counital Hopf algebra structure on the free Rota-Baxter system.
//!
//! On basis words the coproduct is
//!
//! ```text
//! Δ(1) = 1⊗1
//! Δ(x) = 1⊗x + x⊗1
//! Δ(Q(w)) = R(w)⊗1 + (id⊗Q)Δ(w)
//! Δ(w_1 ⋯ w_m) = Δ(w_1) ⋄ ⋯ ⋄ Δ(w_m)
//! ```
//!
//! where `R` is the top-ranked operator in every case. The counit reads off
//! the coefficient of `1`. It is a left counit but not a right one, and the
//! antipode built here is a right convolution inverse of the identity.

mod verify;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::algebra::{Poly, Scalar, TensorPoly};
use crate::error::{Error, Result};
use crate::rewriting::{is_rbs_word, Rewriter};
use crate::terms::{Prime, Signature, Word};

pub use verify::{
    verify_hopf, CounitWitness, HopfReport, Informational, SuiteFailure, SuiteReport,
};

/// Three-fold tensors, as finite maps on word triples.
pub type Tensor3 = BTreeMap<(Word, Word, Word), Scalar>;

fn add3(t: &mut Tensor3, key: (Word, Word, Word), c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Coproduct, counit and antipode over one rewriter, with memo caches.
#[derive(Debug)]
pub struct Hopf {
    rw: Rewriter,
    coproducts: RwLock<HashMap<Word, TensorPoly>>,
    antipodes: RwLock<HashMap<Word, Poly>>,
}

type WordMap<'a> = dyn Fn(&Word) -> Result<Poly> + Send + Sync + 'a;

/// A linear map on polynomials, given by its values on basis words.
#[derive(Clone)]
pub struct LinearEndomap<'a> {
    on_word: Arc<WordMap<'a>>,
}

impl<'a> LinearEndomap<'a> {
    pub fn new(f: impl Fn(&Word) -> Result<Poly> + Send + Sync + 'a) -> LinearEndomap<'a> {
        LinearEndomap {
            on_word: Arc::new(f),
        }
    }

    pub fn identity() -> LinearEndomap<'a> {
        LinearEndomap::new(|w| Ok(Poly::from_word(w.clone())))
    }

    /// `u ∘ ε`.
    pub fn unit_counit() -> LinearEndomap<'a> {
        LinearEndomap::new(|w| {
            Ok(if w.is_unit() {
                Poly::one()
            } else {
                Poly::zero()
            })
        })
    }

    pub fn apply_word(&self, w: &Word) -> Result<Poly> {
        (self.on_word)(w)
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (w, c) in p {
            out.add_scaled(&self.apply_word(w)?, c);
        }
        Ok(out)
    }
}

impl std::fmt::Debug for LinearEndomap<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("LinearEndomap")
    }
}

fn check_basis(w: &Word) -> Result<()> {
    if is_rbs_word(w) {
        Ok(())
    } else {
        Err(Error::NotBasisWord(w.clone()))
    }
}

impl Hopf {
    /// The structure over the Rota-Baxter system relations of `sig`.
    pub fn new(sig: &Signature) -> Hopf {
        Hopf::with_rewriter(Rewriter::standard(sig))
    }

    pub fn with_rewriter(rw: Rewriter) -> Hopf {
        Hopf {
            rw,
            coproducts: RwLock::new(HashMap::new()),
            antipodes: RwLock::new(HashMap::new()),
        }
    }

    pub fn rewriter(&self) -> &Rewriter {
        &self.rw
    }

    pub fn coproduct(&self, w: &Word) -> Result<TensorPoly> {
        check_basis(w)?;
        Ok(self.coproduct_basis(w))
    }

    pub fn coproduct_poly(&self, p: &Poly) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero();
        for (w, c) in p {
            out.add_scaled(&self.coproduct(w)?, c);
        }
        Ok(out)
    }

    fn coproduct_basis(&self, w: &Word) -> TensorPoly {
        if let Some(t) = self.coproducts.read().expect("poisoned").get(w) {
            return t.clone();
        }
        let one = Word::unit();
        let t = match w.factors() {
            [] => [((one.clone(), one), Scalar::one())].into_iter().collect(),
            [Prime::Gen(_)] => [
                ((one.clone(), w.clone()), Scalar::one()),
                ((w.clone(), one), Scalar::one()),
            ]
            .into_iter()
            .collect(),
            [Prime::Op(q, inner)] => {
                let top = self.rw.rules().top_operator();
                let mut t = self.coproduct_basis(inner).map(
                    |l| Poly::from_word(l.clone()),
                    |r| Poly::from_word(Word::apply(*q, r.clone())),
                );
                t.add_term(Word::apply(top, inner.clone()), one, Scalar::one());
                t
            }
            factors => factors
                .iter()
                .map(|p| self.coproduct_basis(&Word::from_primes([p.clone()])))
                .reduce(|a, b| self.tensor_diamond_basis(&a, &b))
                .expect("breadth at least two"),
        };
        self.coproducts
            .write()
            .expect("poisoned")
            .insert(w.clone(), t.clone());
        t
    }

    /// `(a⊗b) ⋄ (c⊗d) = (a⋄c) ⊗ (b⋄d)`, extended bilinearly.
    pub fn tensor_diamond(&self, a: &TensorPoly, b: &TensorPoly) -> Result<TensorPoly> {
        for ((l, r), _) in a.iter().chain(b.iter()) {
            check_basis(l)?;
            check_basis(r)?;
        }
        Ok(self.tensor_diamond_basis(a, b))
    }

    fn tensor_diamond_basis(&self, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((al, ar), x) in a {
            for ((bl, br), y) in b {
                let left = self.rw.diamond_basis(al, bl);
                let right = self.rw.diamond_basis(ar, br);
                out.add_scaled(&TensorPoly::tensor_of(&left, &right), &(x * y));
            }
        }
        out
    }

    /// `ε`: the coefficient of `1`.
    pub fn counit(p: &Poly) -> Scalar {
        p.coefficient(&Word::unit())
    }

    /// `u(c) = c·1`.
    pub fn unit_map(c: &Scalar) -> Poly {
        Poly::term(c.clone(), Word::unit())
    }

    /// The right antipode `T`, with `T(1) = 1` and
    /// `T(w) = -Σ' w_(1) ⋄ T(w_(2))` over `Δ(w)` without its `1⊗w` term.
    ///
    /// Fails with [`Error::Connectedness`] if the degree-`(0, n)` part of
    /// `Δ(w)` is anything other than `1⊗w`.
    pub fn antipode(&self, w: &Word) -> Result<Poly> {
        check_basis(w)?;
        self.antipode_basis(w)
    }

    pub fn antipode_poly(&self, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (w, c) in p {
            out.add_scaled(&self.antipode(w)?, c);
        }
        Ok(out)
    }

    fn antipode_basis(&self, w: &Word) -> Result<Poly> {
        if w.is_unit() {
            return Ok(Poly::one());
        }
        if let Some(t) = self.antipodes.read().expect("poisoned").get(w) {
            return Ok(t.clone());
        }
        let delta = self.coproduct_basis(w);
        let unit = Word::unit();
        let slice = delta.graded_slice(0, w.degree());
        let expected: TensorPoly = [((unit.clone(), w.clone()), Scalar::one())]
            .into_iter()
            .collect();
        if slice != expected {
            return Err(Error::Connectedness {
                word: w.clone(),
                detail: format!("degree (0, {}) part has {} terms", w.degree(), slice.len()),
            });
        }
        let mut t = Poly::zero();
        for ((l, r), c) in &delta {
            if l.is_unit() && r == w {
                continue;
            }
            let tr = self.antipode_basis(r)?;
            let mut prod = Poly::zero();
            for (v, d) in &tr {
                prod.add_scaled(&self.rw.diamond_basis(l, v), d);
            }
            t.add_scaled(&prod, &-c.clone());
        }
        self.antipodes
            .write()
            .expect("poisoned")
            .insert(w.clone(), t.clone());
        Ok(t)
    }

    /// `f ∗ g = μ ∘ (f⊗g) ∘ Δ`.
    pub fn convolve<'a>(
        &'a self,
        f: &LinearEndomap<'a>,
        g: &LinearEndomap<'a>,
    ) -> LinearEndomap<'a> {
        let (f, g) = (f.clone(), g.clone());
        LinearEndomap::new(move |w| {
            let mut out = Poly::zero();
            for ((l, r), c) in &self.coproduct(w)? {
                let prod = self.rw.diamond_poly(&f.apply_word(l)?, &g.apply_word(r)?)?;
                out.add_scaled(&prod, c);
            }
            Ok(out)
        })
    }

    /// The antipode as a linear map.
    pub fn antipode_map(&self) -> LinearEndomap<'_> {
        LinearEndomap::new(move |w| self.antipode(w))
    }

    /// `(Δ⊗id)Δ(w)`.
    pub fn coproduct_left_twice(&self, w: &Word) -> Result<Tensor3> {
        let mut out = Tensor3::new();
        for ((l, r), c) in &self.coproduct(w)? {
            for ((a, b), d) in &self.coproduct_basis(l) {
                add3(&mut out, (a.clone(), b.clone(), r.clone()), c * d);
            }
        }
        Ok(out)
    }

    /// `(id⊗Δ)Δ(w)`.
    pub fn coproduct_right_twice(&self, w: &Word) -> Result<Tensor3> {
        let mut out = Tensor3::new();
        for ((l, r), c) in &self.coproduct(w)? {
            for ((a, b), d) in &self.coproduct_basis(r) {
                add3(&mut out, (l.clone(), a.clone(), b.clone()), c * d);
            }
        }
        Ok(out)
    }
}

/// Projection of `p` onto degree `n`.
pub fn graded_slice(p: &Poly, n: usize) -> Poly {
    p.graded_slice(n)
}

/// Projection of `t` onto leg degrees `(p, q)`.
pub fn tensor_graded_slice(t: &TensorPoly, p: usize, q: usize) -> TensorPoly {
    t.graded_slice(p, q)
}
