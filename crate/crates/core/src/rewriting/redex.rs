use crate::terms::{Op, Prime, Signature, StarWord, Word};

/// An occurrence of `Q(u)Q(v)` inside a word: the word equals
/// `context|_{Q(u)Q(v)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleMatch {
    pub context: StarWord,
    pub op: Op,
    pub left: Word,
    pub right: Word,
}

impl RuleMatch {
    /// `Q(u)Q(v)`.
    pub fn pattern(&self) -> Word {
        Word::from_primes([
            Prime::Op(self.op, self.left.clone()),
            Prime::Op(self.op, self.right.clone()),
        ])
    }

    /// The word this match was found in.
    pub fn matched_word(&self) -> Word {
        self.context.substitute(&self.pattern())
    }
}

/// Which redex to pick when a word has several.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Top-level pairs first, scanning left to right, then operator
    /// arguments left to right.
    #[default]
    LeftmostOutermost,
    /// Operator arguments first, scanning right to left, then top-level
    /// pairs right to left.
    RightmostInnermost,
}

fn same_op_pair<'a>(a: &'a Prime, b: &'a Prime) -> Option<(Op, &'a Word, &'a Word)> {
    match (a, b) {
        (Prime::Op(p, u), Prime::Op(q, v)) if p == q => Some((*p, u, v)),
        _ => None,
    }
}

fn top_pair(f: &[Prime], i: usize) -> Option<RuleMatch> {
    let (op, u, v) = same_op_pair(&f[i], &f[i + 1])?;
    Some(RuleMatch {
        context: StarWord::beside(&f[..i], &f[i + 2..]),
        op,
        left: u.clone(),
        right: v.clone(),
    })
}

fn nested(f: &[Prime], j: usize, strategy: Strategy) -> Option<RuleMatch> {
    let (q, arg) = f[j].as_op()?;
    let m = search(arg.factors(), strategy)?;
    Some(RuleMatch {
        context: m.context.wrap(&f[..j], q, &f[j + 1..]),
        ..m
    })
}

fn search(f: &[Prime], strategy: Strategy) -> Option<RuleMatch> {
    let n = f.len();
    let pairs = 0..n.saturating_sub(1);
    match strategy {
        Strategy::LeftmostOutermost => pairs
            .into_iter()
            .find_map(|i| top_pair(f, i))
            .or_else(|| (0..n).find_map(|j| nested(f, j, strategy))),
        Strategy::RightmostInnermost => (0..n)
            .rev()
            .find_map(|j| nested(f, j, strategy))
            .or_else(|| pairs.rev().find_map(|i| top_pair(f, i))),
    }
}

/// The leftmost-outermost occurrence of `Q(u)Q(v)` in `w`, if any.
pub fn find_redex(w: &Word) -> Option<RuleMatch> {
    search(w.factors(), Strategy::LeftmostOutermost)
}

pub fn find_redex_with(w: &Word, strategy: Strategy) -> Option<RuleMatch> {
    search(w.factors(), strategy)
}

/// Every occurrence of `Q(u)Q(v)` in `w`.
pub fn all_redexes(w: &Word) -> Vec<RuleMatch> {
    fn collect(f: &[Prime], out: &mut Vec<RuleMatch>) {
        for i in 0..f.len().saturating_sub(1) {
            out.extend(top_pair(f, i));
        }
        for (j, p) in f.iter().enumerate() {
            if let Some((q, arg)) = p.as_op() {
                let mut inner = Vec::new();
                collect(arg.factors(), &mut inner);
                out.extend(inner.into_iter().map(|m| RuleMatch {
                    context: m.context.wrap(&f[..j], q, &f[j + 1..]),
                    ..m
                }));
            }
        }
    }
    let mut out = Vec::new();
    collect(w.factors(), &mut out);
    out
}

/// True iff `w` has no two adjacent primes under the same operator at any
/// nesting level, i.e. `w` is a Rota-Baxter system word.
pub fn is_rbs_word(w: &Word) -> bool {
    let f = w.factors();
    let no_pair = f.windows(2).all(|p| same_op_pair(&p[0], &p[1]).is_none());
    no_pair
        && f.iter()
            .all(|p| p.as_op().is_none_or(|(_, arg)| is_rbs_word(arg)))
}

/// The Rota-Baxter system words of each degree `0..=max_degree`, each bucket
/// in ascending Deg-lex order.
pub fn basis_by_degree(sig: &Signature, max_degree: usize) -> Vec<Vec<Word>> {
    let mut words: Vec<Vec<Word>> = vec![vec![Word::unit()]];
    let mut primes: Vec<Vec<Prime>> = vec![Vec::new()];
    for d in 1..=max_degree {
        let mut ps: Vec<Prime> = Vec::new();
        if d == 1 {
            ps.extend(sig.generators().map(Prime::Gen));
        }
        for op in sig.operators() {
            ps.extend(words[d - 1].iter().map(|w| Prime::Op(op, w.clone())));
        }
        primes.push(ps);

        let mut ws = Vec::new();
        for k in 1..=d {
            for p in &primes[k] {
                let rests = words[d - k].iter().filter(|rest| {
                    rest.factors()
                        .first()
                        .is_none_or(|q| same_op_pair(p, q).is_none())
                });
                for rest in rests {
                    let factors = std::iter::once(p.clone()).chain(rest.factors().iter().cloned());
                    ws.push(Word::from_primes(factors));
                }
            }
        }
        ws.sort();
        words.push(ws);
    }
    words
}

/// Every Rota-Baxter system word of degree at most `max_degree`.
pub fn enumerate_basis(sig: &Signature, max_degree: usize) -> Vec<Word> {
    basis_by_degree(sig, max_degree)
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::Signature;

    fn sig() -> Signature {
        Signature::standard(["x", "y", "z"]).unwrap()
    }

    fn w(s: &str) -> Word {
        sig().parse_word(s).unwrap()
    }

    #[test]
    fn different_operators_do_not_match() {
        assert!(find_redex(&w("R(x) S(y)")).is_none());
    }

    #[test]
    fn top_level_unit_pair() {
        let m = find_redex(&w("R(1) R(1)")).unwrap();
        assert_eq!(m.context, StarWord::hole());
        assert_eq!(m.op, sig().operator("R").unwrap());
        assert!(m.left.is_unit() && m.right.is_unit());
    }

    #[test]
    fn nested_redex_context() {
        let sig = sig();
        let word = w("x S(R(y) R(z))");
        let m = find_redex(&word).unwrap();
        assert_eq!(sig.format_star(&m.context), "x S(★)");
        assert_eq!(m.op, sig.operator("R").unwrap());
        assert_eq!((m.left.clone(), m.right.clone()), (w("y"), w("z")));
        assert_eq!(m.matched_word(), word);
    }

    #[test]
    fn strategies_disagree_on_choice() {
        let sig = sig();
        let word = w("S(R(1) R(1)) R(x) R(y)");
        let outer = find_redex_with(&word, Strategy::LeftmostOutermost).unwrap();
        let inner = find_redex_with(&word, Strategy::RightmostInnermost).unwrap();
        assert_eq!(sig.format_star(&outer.context), "S(R(1) R(1)) ★");
        assert_eq!(sig.format_star(&inner.context), "S(★) R(x) R(y)");
        assert_eq!(all_redexes(&word).len(), 2);
    }

    #[test]
    fn basis_enumeration_matches_filter() {
        let sig = Signature::standard(["x", "y"]).unwrap();
        let filtered: Vec<Word> = crate::terms::enumerate_words(&sig, 3)
            .into_iter()
            .filter(is_rbs_word)
            .collect();
        assert_eq!(enumerate_basis(&sig, 3), filtered);
        let one = Signature::standard(["x"]).unwrap();
        let counts: Vec<usize> = basis_by_degree(&one, 2).iter().map(Vec::len).collect();
        assert_eq!(counts, [1, 3, 13]);
    }

    #[test]
    fn basis_membership() {
        assert!(is_rbs_word(&w("R(R(x) y)")));
        assert!(!is_rbs_word(&w("S(1) S(1)")));
        assert!(is_rbs_word(&w("R(1) S(1) R(1)")));
        assert!(!is_rbs_word(&w("x R(y S(1) S(x))")));
        assert!(is_rbs_word(&Word::unit()));
    }
}
