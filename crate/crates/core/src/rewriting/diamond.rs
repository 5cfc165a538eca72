use super::redex::is_rbs_word;
use super::reduce::Rewriter;
use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::terms::{Prime, Word};

impl Rewriter {
    /// The product `w ⋄ v` of two Rota-Baxter system words.
    ///
    /// Only the last prime of `w` and the first prime of `v` interact:
    ///
    /// ```text
    /// w ⋄ v = w_1 ⋯ w_{t-1} (w_t ⋄ v_1) v_2 ⋯ v_l
    /// Q(a) ⋄ Q(b) = Q(R(a) ⋄ b + a ⋄ S(b))
    /// p ⋄ q = p q          for primes not under a common operator
    /// ```
    pub fn diamond(&self, w: &Word, v: &Word) -> Result<Poly> {
        for x in [w, v] {
            if !is_rbs_word(x) {
                return Err(Error::NotBasisWord(x.clone()));
            }
        }
        Ok(self.diamond_basis(w, v))
    }

    /// Bilinear extension of [`Rewriter::diamond`].
    pub fn diamond_poly(&self, p: &Poly, q: &Poly) -> Result<Poly> {
        if let Some(w) = p.words().chain(q.words()).find(|w| !is_rbs_word(w)) {
            return Err(Error::NotBasisWord(w.clone()));
        }
        let mut out = Poly::zero();
        for (w, a) in p {
            for (v, b) in q {
                out.add_scaled(&self.diamond_basis(w, v), &(a * b));
            }
        }
        Ok(out)
    }

    /// Same as [`Rewriter::diamond`] without the basis check.
    pub(crate) fn diamond_basis(&self, w: &Word, v: &Word) -> Poly {
        let (Some((last, head)), Some((first, tail))) =
            (w.factors().split_last(), v.factors().split_first())
        else {
            return Poly::from_word(w.concat(v));
        };
        let middle = self.prime_product(last, first);
        middle
            .into_iter()
            .map(|(m, c)| {
                let factors = head.iter().chain(m.factors()).chain(tail.iter()).cloned();
                (Word::from_primes(factors), c)
            })
            .collect()
    }

    fn prime_product(&self, a: &Prime, b: &Prime) -> Poly {
        let (Some((p, u)), Some((q, v))) = (a.as_op(), b.as_op()) else {
            return Poly::from_word(Word::from_primes([a.clone(), b.clone()]));
        };
        if p != q {
            return Poly::from_word(Word::from_primes([a.clone(), b.clone()]));
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.products.read().expect("poisoned").get(&key) {
            return hit.clone();
        }
        let rules = self.rules();
        let (k1, k2) = rules.rewrite_coefficients(p);
        let top_u = Word::apply(rules.top_operator(), u.clone());
        let bottom_v = Word::apply(rules.bottom_operator(), v.clone());
        let mut inner = self.diamond_basis(&top_u, v).scale(&k1);
        inner.add_scaled(&self.diamond_basis(u, &bottom_v), &k2);
        let out = inner.apply_operator(p);
        self.products
            .write()
            .expect("poisoned")
            .insert(key, out.clone());
        out
    }
}
