use super::{Prime, Signature, StarWord, Word};

/// All words of each degree `0..=max_degree`, each bucket in ascending
/// Deg-lex order.
pub fn words_by_degree(sig: &Signature, max_degree: usize) -> Vec<Vec<Word>> {
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

        // first prime of degree k, then any word of degree d - k
        let mut ws = Vec::new();
        for k in 1..=d {
            for p in &primes[k] {
                for rest in &words[d - k] {
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

/// Every word of degree at most `max_degree`, ascending in Deg-lex.
pub fn enumerate_words(sig: &Signature, max_degree: usize) -> Vec<Word> {
    words_by_degree(sig, max_degree)
        .into_iter()
        .flatten()
        .collect()
}

/// Every star-word of degree at most `max_degree` (★ has degree 0).
///
/// A star-word splits uniquely as `left · p · right` where `p` is the one
/// factor holding the hole, and `p` is either ★ or an operator applied to a
/// smaller star-word.
pub fn enumerate_star_words(sig: &Signature, max_degree: usize) -> Vec<StarWord> {
    let words = words_by_degree(sig, max_degree);
    let mut stars: Vec<Vec<StarWord>> = Vec::with_capacity(max_degree + 1);
    // star primes by degree, as (op, inner) pairs; degree 0 is the bare hole
    let mut star_primes: Vec<Vec<Option<(super::Op, StarWord)>>> = vec![vec![None]];
    for d in 0..=max_degree {
        if d > 0 {
            let sp = sig
                .operators()
                .flat_map(|op| stars[d - 1].iter().map(move |s| Some((op, s.clone()))))
                .collect();
            star_primes.push(sp);
        }
        let mut out = Vec::new();
        for (b, primes_b) in star_primes.iter().enumerate() {
            for a in 0..=d - b {
                let c = d - a - b;
                for sp in primes_b {
                    for left in &words[a] {
                        for right in &words[c] {
                            let s = match sp {
                                None => StarWord::beside(left.factors(), right.factors()),
                                Some((op, inner)) => {
                                    inner.wrap(left.factors(), *op, right.factors())
                                }
                            };
                            out.push(s);
                        }
                    }
                }
            }
        }
        stars.push(out);
    }
    stars.into_iter().flatten().collect()
}
