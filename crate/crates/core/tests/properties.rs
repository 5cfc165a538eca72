use std::sync::OnceLock;

use proptest::prelude::*;
use rbs_kernel::algebra::scalar;
use rbs_kernel::hopf::{Hopf, LinearEndomap};
use rbs_kernel::rewriting::{enumerate_basis, Strategy as Pick};
use rbs_kernel::terms::enumerate_star_words;
use rbs_kernel::{is_rbs_word, Poly, Prime, Rewriter, Signature, StarWord, Word};

#[derive(Clone, Debug)]
enum Ast {
    Gen(usize),
    Op(usize, Vec<Ast>),
}

fn ast() -> impl Strategy<Value = Vec<Ast>> {
    let leaf = (0..2usize).prop_map(Ast::Gen);
    let prime = leaf.prop_recursive(3, 12, 3, |inner| {
        (0..2usize, prop::collection::vec(inner, 0..3)).prop_map(|(op, arg)| Ast::Op(op, arg))
    });
    prop::collection::vec(prime, 0..4)
}

fn build(sig: &Signature, a: &[Ast]) -> Word {
    let gens: Vec<_> = sig.generators().collect();
    let ops: Vec<_> = sig.operators().collect();
    Word::from_primes(a.iter().map(|p| match p {
        Ast::Gen(g) => Prime::Gen(gens[*g]),
        Ast::Op(o, arg) => Prime::Op(ops[*o], build(sig, arg)),
    }))
}

struct Env {
    sig: Signature,
    rw: Rewriter,
    hopf: Hopf,
    basis: Vec<Word>,
    stars: Vec<StarWord>,
}

fn env() -> &'static Env {
    static ENV: OnceLock<Env> = OnceLock::new();
    ENV.get_or_init(|| {
        let sig = Signature::standard(["x", "y"]).unwrap();
        Env {
            rw: Rewriter::standard(&sig),
            hopf: Hopf::new(&sig),
            basis: enumerate_basis(&sig, 3),
            stars: enumerate_star_words(&sig, 2),
            sig,
        }
    })
}

fn word() -> impl Strategy<Value = Word> {
    ast().prop_map(|a| build(&env().sig, &a))
}

fn basis_word() -> impl Strategy<Value = Word> {
    (0..env().basis.len()).prop_map(|i| env().basis[i].clone())
}

fn star() -> impl Strategy<Value = StarWord> {
    (0..env().stars.len()).prop_map(|i| env().stars[i].clone())
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..4, 1i64..4, word()), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(n, d, w)| (scalar(n) / scalar(d), w))
            .map(|(c, w)| (w, c))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_then_parse(w in word(), p in poly()) {
        let sig = &env().sig;
        prop_assert_eq!(sig.parse_word(&sig.format_word(&w)).unwrap(), w);
        prop_assert_eq!(sig.parse_poly(&sig.format_poly(&p)).unwrap(), p.clone());
        let json = sig.poly_to_json(&p);
        prop_assert_eq!(sig.poly_from_json(&json).unwrap(), p);
    }

    #[test]
    fn substitution_adds_degrees(pi in star(), s in word()) {
        prop_assert_eq!(pi.substitute(&s).degree(), pi.degree() + s.degree());
    }

    #[test]
    fn order_is_compatible_with_contexts(pi in star(), u in word(), v in word()) {
        prop_assume!(u != v);
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        prop_assert!(pi.substitute(&lo) < pi.substitute(&hi));
    }

    #[test]
    fn strategies_agree(p in poly()) {
        let rw = &env().rw;
        let cached = rw.normal_form(&p);
        prop_assert_eq!(rw.normal_form_with(&p, Pick::LeftmostOutermost), cached.clone());
        prop_assert_eq!(rw.normal_form_with(&p, Pick::RightmostInnermost), cached.clone());
        prop_assert!(cached.words().all(is_rbs_word));
        prop_assert_eq!(rw.normal_form(&cached), cached);
    }

    #[test]
    fn traces_replay(p in poly()) {
        let t = env().rw.normal_form_traced(&p);
        prop_assert!(t.is_decreasing());
        prop_assert_eq!(t.replay(), Some(t.result.clone()));
        if let (Some(m), Some((lead, _))) = (t.max_rewritten(), p.leading()) {
            prop_assert!(m <= lead);
        }
    }

    #[test]
    fn normal_form_is_multiplicative(u in word(), v in word()) {
        let rw = &env().rw;
        let lhs = rw.normal_form(&Poly::from_word(u.concat(&v)));
        let nu = rw.normal_form(&Poly::from_word(u));
        let nv = rw.normal_form(&Poly::from_word(v));
        prop_assert_eq!(rw.diamond_poly(&nu, &nv).unwrap(), lhs);
    }

    #[test]
    fn diamond_is_reduced_concatenation(w in basis_word(), v in basis_word()) {
        let rw = &env().rw;
        let lhs = rw.diamond(&w, &v).unwrap();
        prop_assert_eq!(lhs, rw.normal_form(&Poly::from_word(w.concat(&v))));
    }

    #[test]
    fn diamond_is_associative(a in basis_word(), b in basis_word(), c in basis_word()) {
        let rw = &env().rw;
        let ab = rw.diamond(&a, &b).unwrap();
        let bc = rw.diamond(&b, &c).unwrap();
        let left = rw.diamond_poly(&ab, &Poly::from_word(c)).unwrap();
        let right = rw.diamond_poly(&Poly::from_word(a), &bc).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rota_baxter_system_laws(a in basis_word(), b in basis_word()) {
        let (sig, rw) = (&env().sig, &env().rw);
        let (r, s) = (sig.operator("R").unwrap(), sig.operator("S").unwrap());
        let pa = Poly::from_word(a.clone());
        let pb = Poly::from_word(b.clone());
        let inner = rw.diamond_poly(&pa.apply_operator(r), &pb).unwrap()
            + rw.diamond_poly(&pa, &pb.apply_operator(s)).unwrap();
        for q in [r, s] {
            let lhs = rw.diamond(&Word::apply(q, a.clone()), &Word::apply(q, b.clone())).unwrap();
            prop_assert_eq!(lhs, inner.apply_operator(q));
        }
    }

    #[test]
    fn coproduct_is_multiplicative(w in basis_word(), v in basis_word()) {
        let (rw, h) = (&env().rw, &env().hopf);
        let lhs = h.coproduct_poly(&rw.diamond(&w, &v).unwrap()).unwrap();
        let rhs = h.tensor_diamond(&h.coproduct(&w).unwrap(), &h.coproduct(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_coassociative(w in basis_word()) {
        let h = &env().hopf;
        prop_assert_eq!(h.coproduct_left_twice(&w).unwrap(), h.coproduct_right_twice(&w).unwrap());
    }

    #[test]
    fn antipode_is_linear_and_right_inverse(a in -3i64..4, b in -3i64..4, w in basis_word(), v in basis_word()) {
        let h = &env().hopf;
        let p = Poly::from_word(w.clone()).scale(&scalar(a)) + Poly::from_word(v.clone()).scale(&scalar(b));
        let tp = h.antipode_poly(&p).unwrap();
        let expected = h.antipode(&w).unwrap().scale(&scalar(a)) + h.antipode(&v).unwrap().scale(&scalar(b));
        prop_assert_eq!(tp, expected);
        let id_t = h.convolve(&LinearEndomap::identity(), &h.antipode_map());
        prop_assert_eq!(id_t.apply(&p).unwrap(), Hopf::unit_map(&Hopf::counit(&p)));
    }
}
