//! Exact symbolic kernel for free Rota-Baxter systems.
//!
//! A Rota-Baxter system is an associative unitary algebra with two linear
//! operators `R`, `S` satisfying
//!
//! ```text
//! R(a)R(b) = R(R(a)b + aS(b)),    S(a)S(b) = S(R(a)b + aS(b)).
//! ```
//!
//! The crate works in the free object `RS(X)` over a generator alphabet `X`:
//!
//! * [`terms`]: operated words (Ω-words), star-words, parsing and printing.
//! * [`ordering`]: the Deg-lex monomial order used for leading words.
//! * [`algebra`]: exact rational polynomials and tensors over words.
//! * [`rewriting`]: reduction to the basis of Rota-Baxter system words and
//!   the diamond product on that basis.
//! * [`gsb`]: compositions of relations and a bounded checker that the
//!   defining relations form a Gröbner-Shirshov basis.
//! * [`hopf`]: coproduct, counit, grading and the right antipode of the
//!   left counital Hopf algebra structure.
//!
//! ```
//! use rbs_kernel::{Hopf, Rewriter, Signature};
//!
//! let sig = Signature::standard(["x", "y"]).unwrap();
//! let rw = Rewriter::standard(&sig);
//! let p = sig.parse_poly("R(x) R(y)").unwrap();
//! assert_eq!(sig.format_poly(&rw.normal_form(&p)), "R(R(x) y) + R(x S(y))");
//!
//! let hopf = Hopf::new(&sig);
//! let s1 = sig.parse_word("S(1)").unwrap();
//! assert_eq!(sig.format_poly(&hopf.antipode(&s1).unwrap()), "-R(1)");
//! ```

pub mod algebra;
mod error;
pub mod gsb;
pub mod hopf;
pub mod ordering;
pub mod rewriting;
pub mod terms;

pub use algebra::{Poly, Scalar, TensorPoly};
pub use error::{Error, Result};
pub use gsb::{verify_gsb, GsbBounds, GsbReport};
pub use hopf::{verify_hopf, Hopf, HopfReport};
pub use rewriting::{is_rbs_word, Rewriter, RuleSet};
pub use terms::{Gen, Op, Prime, Signature, StarWord, Word};
