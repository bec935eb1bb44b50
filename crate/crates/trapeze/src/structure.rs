//! Structural witnesses: minimal pathological pairs, central-word
//! decomposition, the factorization of non-Sturmian trapezoidal words into
//! root powers, and complete returns.

use serde::Serialize;

use crate::classify::{
    closedness, is_balanced, is_central, is_trapezoidal, minimal_violation, Closedness,
};
use crate::complexity::{longest_left_special, longest_right_special, parameters};
use crate::word::{
    fractional_root, longest_repeated_prefix, longest_repeated_suffix, occurrences, Word,
};
use crate::{Error, Result};

/// The minimal-length unbalanced factor pair of a word, normalized as
/// `f = a·u·a`, `g = b·u·b` with `u` central and `a ≠ b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathologicalPair {
    pub f: Word,
    pub g: Word,
    pub u: Word,
    pub a: char,
    pub b: char,
}

/// Extracts the minimal pathological pair of a two-letter word; `None` when
/// the word is balanced.
///
/// Tie-breaking among equal-length candidates: the pair whose `f` occurs
/// earliest, then lexicographically smallest `f`.
pub fn minimal_pathological_pair(w: &Word) -> Result<Option<PathologicalPair>> {
    if w.alphabet().len() != 2 {
        return Err(Error::UnaryUndefined {
            op: "minimal_pathological_pair",
            word: w.to_string(),
        });
    }
    let Some(mp) = minimal_violation(w) else {
        return Ok(None);
    };
    if !mp.u.is_palindrome() || !is_central(&mp.u) {
        return Err(Error::Internal {
            context: format!(
                "middle word `{}` of the minimal pair of `{w}` is not central",
                mp.u
            ),
        });
    }
    Ok(Some(PathologicalPair {
        f: mp.f,
        g: mp.g,
        u: mp.u,
        a: mp.a,
        b: mp.b,
    }))
}

/// Decomposition of a central word: either a power of a single letter, or
/// the unique split `u = w1·x·y·w2 = w2·y·x·w1` with `w1`, `w2` central and
/// `x ≠ y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CentralDecomposition {
    UnaryPower {
        letter: char,
        exponent: usize,
    },
    Split {
        w1: Word,
        x: char,
        y: char,
        w2: Word,
    },
}

/// Decomposes a central word. The split form is symmetric under swapping
/// `(w1, x, y, w2)` with `(w2, y, x, w1)`; the orientation with the longer
/// `w1` is returned.
pub fn central_decomposition(u: &Word) -> Result<CentralDecomposition> {
    if !is_central(u) {
        return Err(Error::NotCentral {
            word: u.to_string(),
        });
    }
    if u.alphabet().len() <= 1 {
        return Ok(CentralDecomposition::UnaryPower {
            letter: u.letter(1).unwrap_or('a'),
            exponent: u.len(),
        });
    }

    let l = u.letters();
    let n = l.len();
    let mut splits = Vec::new();
    for i in 0..=n - 2 {
        let (x, y) = (l[i], l[i + 1]);
        if x == y {
            continue;
        }
        let w1 = Word::from_slice(&l[..i]);
        let w2 = Word::from_slice(&l[i + 2..]);
        let swapped: Vec<char> = w2
            .letters()
            .iter()
            .copied()
            .chain([y, x])
            .chain(w1.letters().iter().copied())
            .collect();
        if swapped == l && is_central(&w1) && is_central(&w2) {
            splits.push(CentralDecomposition::Split { w1, x, y, w2 });
        }
    }

    // The two mirror orientations are both collected; they always have
    // different |w1| because the swap cannot fix a split with x != y.
    let mut canonical: Vec<_> = splits
        .into_iter()
        .filter(|s| match s {
            CentralDecomposition::Split { w1, w2, .. } => w1.len() > w2.len(),
            _ => false,
        })
        .collect();
    if canonical.len() != 1 {
        return Err(Error::Internal {
            context: format!(
                "central word `{u}` has {} canonical splits, expected exactly one",
                canonical.len()
            ),
        });
    }
    Ok(canonical.pop().unwrap())
}

/// The factorization `w = p·q` of a non-Sturmian trapezoidal word, where
/// `p` is a suffix of a power of the reversed fractional root of `f` and
/// `q` is a prefix of a power of the fractional root of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DalFactorization {
    pub p: Word,
    pub q: Word,
    pub pair: PathologicalPair,
    pub z_f_rev: Word,
    pub z_g: Word,
}

fn is_suffix_of_power(p: &Word, z: &Word) -> bool {
    if p.is_empty() {
        return true;
    }
    if z.is_empty() {
        return false;
    }
    p.is_suffix_of(&z.repeat(p.len().div_ceil(z.len())))
}

fn is_prefix_of_power(q: &Word, z: &Word) -> bool {
    if q.is_empty() {
        return true;
    }
    if z.is_empty() {
        return false;
    }
    q.is_prefix_of(&z.repeat(q.len().div_ceil(z.len())))
}

fn ensure(cond: bool, context: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal { context: context() })
    }
}

/// Factorizes a non-Sturmian trapezoidal word as `w = p·q` with `|q| = K`
/// (hence `|p| = R`), verifying the structural invariants before returning.
pub fn dalessandro_factorize(w: &Word) -> Result<DalFactorization> {
    if !is_trapezoidal(w) {
        return Err(Error::NotApplicable {
            reason: format!("`{w}` is not trapezoidal"),
        });
    }
    if is_balanced(w) {
        return Err(Error::NotApplicable {
            reason: format!(
                "`{w}` is Sturmian; the factorization applies only to non-Sturmian trapezoidal words"
            ),
        });
    }
    let pair = minimal_pathological_pair(w)?.expect("unbalanced words have a pathological pair");
    let z_f_rev = fractional_root(&pair.f)?.reverse();
    let z_g = fractional_root(&pair.g)?;
    let params = parameters(w)?;

    let split = w.len() - params.k;
    let p = w.factor(1, split).unwrap();
    let q = w.factor(split + 1, w.len()).unwrap();

    ensure(params.r == p.len(), || {
        format!("`{w}`: |p| = {} but R = {}", p.len(), params.r)
    })?;
    ensure(is_suffix_of_power(&p, &z_f_rev), || {
        format!("`{w}`: p = `{p}` is not a suffix of a power of `{z_f_rev}`")
    })?;
    ensure(is_prefix_of_power(&q, &z_g), || {
        format!("`{w}`: q = `{q}` is not a prefix of a power of `{z_g}`")
    })?;
    let lrs = longest_right_special(w)?;
    ensure(lrs == w.factor(1, params.r - 1).unwrap(), || {
        format!("`{w}`: longest right special `{lrs}` is not the prefix of length R - 1")
    })?;
    ensure(is_balanced(&p) && is_balanced(&q), || {
        format!("`{w}`: p = `{p}` and q = `{q}` must both be Sturmian")
    })?;
    // f and g are realized inside p and q respectively, so the chosen
    // occurrences cannot overlap.
    ensure(pair.f.is_factor_of(&p), || {
        format!("`{w}`: f = `{}` does not occur inside p = `{p}`", pair.f)
    })?;
    ensure(pair.g.is_factor_of(&q), || {
        format!("`{w}`: g = `{}` does not occur inside q = `{q}`", pair.g)
    })?;

    Ok(DalFactorization {
        p,
        q,
        pair,
        z_f_rev,
        z_g,
    })
}

/// All positions at which an unbalanced two-letter word splits into a
/// suffix of a power of `z̃_f` followed by a prefix of a power of `z_g`.
/// Diagnostic companion to [`dalessandro_factorize`]: the canonical split
/// is the one with `|q| = K`, but others may exist.
pub fn factorization_splits(w: &Word) -> Result<Vec<(Word, Word)>> {
    let Some(pair) = minimal_pathological_pair(w)? else {
        return Err(Error::NotApplicable {
            reason: format!("`{w}` is balanced, no pathological pair exists"),
        });
    };
    let z_f_rev = fractional_root(&pair.f)?.reverse();
    let z_g = fractional_root(&pair.g)?;
    let mut splits = Vec::new();
    for cut in 0..=w.len() {
        let p = w.factor(1, cut).unwrap();
        let q = w.factor(cut + 1, w.len()).unwrap();
        if is_suffix_of_power(&p, &z_f_rev) && is_prefix_of_power(&q, &z_g) {
            splits.push((p, q));
        }
    }
    Ok(splits)
}

/// A factor together with its complete returns in a word: the factors
/// spanning two consecutive occurrences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompleteReturn {
    pub factor: Word,
    pub returns: Vec<Word>,
}

/// The complete returns to a non-empty factor `u` in `w`: every factor of
/// `w` containing exactly two occurrences of `u`, one as a prefix and one
/// as a suffix. Duplicates are dropped, first span order is kept.
pub fn complete_returns(u: &Word, w: &Word) -> Result<CompleteReturn> {
    if u.is_empty() {
        return Err(Error::EmptyFactor);
    }
    let occ = occurrences(u, w);
    if occ.is_empty() {
        return Err(Error::FactorNotFound {
            factor: u.to_string(),
            word: w.to_string(),
        });
    }
    let mut returns: Vec<Word> = Vec::new();
    for win in occ.windows(2) {
        let span = w.factor(win[0].start, win[1].end).unwrap();
        if !returns.contains(&span) {
            returns.push(span);
        }
    }
    for ret in &returns {
        debug_assert_eq!(occurrences(u, ret).len(), 2);
        debug_assert!(u.is_prefix_of(ret) && u.is_suffix_of(ret));
    }
    Ok(CompleteReturn {
        factor: u.clone(),
        returns,
    })
}

/// How the maximal special factors of a trapezoidal word are arranged.
///
/// For a closed word the longest left and right special factors coincide
/// and form a central word; for an open word the longest repeated prefix is
/// the longest right special factor (and dually for suffixes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialFactorReport {
    pub closedness: Closedness,
    pub longest_left_special: Word,
    pub longest_right_special: Word,
    pub equal: bool,
    pub central: bool,
    pub longest_repeated_prefix: Word,
    pub longest_repeated_suffix: Word,
}

/// Reports the maximal special factors of a trapezoidal word and verifies
/// the configuration required by its closedness class.
pub fn longest_bispecial_analysis(w: &Word) -> Result<SpecialFactorReport> {
    if !is_trapezoidal(w) {
        return Err(Error::NotApplicable {
            reason: format!("`{w}` is not trapezoidal"),
        });
    }
    let lls = longest_left_special(w)?;
    let lrs = longest_right_special(w)?;
    let cl = closedness(w)?;
    let lrp = longest_repeated_prefix(w)?;
    let lrsuf = longest_repeated_suffix(w)?;
    let equal = lls == lrs;
    let central = equal && is_central(&lls);
    match cl {
        Closedness::Closed => {
            ensure(equal && central, || {
                format!("closed `{w}`: maximal specials `{lls}`/`{lrs}` must be equal and central")
            })?;
        }
        Closedness::Open => {
            ensure(lrp == lrs && lrsuf == lls, || {
                format!("open `{w}`: repeated prefix/suffix must be the maximal special factors")
            })?;
        }
    }
    Ok(SpecialFactorReport {
        closedness: cl,
        longest_left_special: lls,
        longest_right_special: lrs,
        equal,
        central,
        longest_repeated_prefix: lrp,
        longest_repeated_suffix: lrsuf,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::enumerate_binary;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn minimal_pair_examples() {
        let p = minimal_pathological_pair(&w("aaababa")).unwrap().unwrap();
        assert_eq!((p.f.clone(), p.g.clone()), (w("aaa"), w("bab")));
        assert_eq!(p.u, w("a"));
        assert_eq!((p.a, p.b), ('a', 'b'));

        let p = minimal_pathological_pair(&w("aaabab")).unwrap().unwrap();
        assert_eq!((p.f, p.g), (w("aaa"), w("bab")));

        assert_eq!(minimal_pathological_pair(&w("aababaa")).unwrap(), None);
        assert!(minimal_pathological_pair(&w("aaaa")).is_err());
    }

    #[test]
    fn central_decomposition_examples() {
        assert_eq!(
            central_decomposition(&w("a")).unwrap(),
            CentralDecomposition::UnaryPower {
                letter: 'a',
                exponent: 1
            }
        );
        assert_eq!(
            central_decomposition(&Word::empty()).unwrap(),
            CentralDecomposition::UnaryPower {
                letter: 'a',
                exponent: 0
            }
        );
        assert_eq!(
            central_decomposition(&w("aba")).unwrap(),
            CentralDecomposition::Split {
                w1: w("a"),
                x: 'b',
                y: 'a',
                w2: Word::empty(),
            }
        );
        assert!(matches!(
            central_decomposition(&w("ab")),
            Err(Error::NotCentral { .. })
        ));
    }

    #[test]
    fn central_split_round_trips_both_orders() {
        for word in enumerate_binary(12).unwrap() {
            if word.alphabet().len() != 2 || !is_central(&word) {
                continue;
            }
            match central_decomposition(&word).unwrap() {
                CentralDecomposition::Split { w1, x, y, w2 } => {
                    let one = Word::from_letters(
                        w1.letters()
                            .iter()
                            .copied()
                            .chain([x, y])
                            .chain(w2.letters().iter().copied()),
                    )
                    .unwrap();
                    let two = Word::from_letters(
                        w2.letters()
                            .iter()
                            .copied()
                            .chain([y, x])
                            .chain(w1.letters().iter().copied()),
                    )
                    .unwrap();
                    assert_eq!(one, word);
                    assert_eq!(two, word);
                    assert!(w1.len() > w2.len());
                }
                CentralDecomposition::UnaryPower { .. } => panic!("binary central word"),
            }
        }
    }

    #[test]
    fn factorize_aaababa() {
        let d = dalessandro_factorize(&w("aaababa")).unwrap();
        assert_eq!((d.p.clone(), d.q.clone()), (w("aaa"), w("baba")));
        assert_eq!((d.z_f_rev.clone(), d.z_g.clone()), (w("a"), w("ba")));
        assert_eq!((d.pair.f.clone(), d.pair.g.clone()), (w("aaa"), w("bab")));
        let params = parameters(&w("aaababa")).unwrap();
        assert_eq!(d.q.len(), params.k);
        assert_eq!(d.q.len(), 4);
    }

    #[test]
    fn factorize_rejects_sturmian_and_non_trapezoidal() {
        assert!(matches!(
            dalessandro_factorize(&w("aabaa")),
            Err(Error::NotApplicable { .. })
        ));
        assert!(matches!(
            dalessandro_factorize(&w("aabbaa")),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn canonical_split_is_among_all_splits() {
        let d = dalessandro_factorize(&w("aaababa")).unwrap();
        let splits = factorization_splits(&w("aaababa")).unwrap();
        assert!(splits.contains(&(d.p, d.q)));
    }

    #[test]
    fn complete_return_examples() {
        let r = complete_returns(&w("aa"), &w("aabaa")).unwrap();
        assert_eq!(r.returns, vec![w("aabaa")]);

        let r = complete_returns(&w("aa"), &w("aabbaaa")).unwrap();
        assert_eq!(r.returns, vec![w("aabbaa"), w("aaa")]);

        let r = complete_returns(&w("a"), &w("aba")).unwrap();
        assert_eq!(r.returns, vec![w("aba")]);

        assert_eq!(
            complete_returns(&Word::empty(), &w("ab")),
            Err(Error::EmptyFactor)
        );
        assert!(matches!(
            complete_returns(&w("bb"), &w("aba")),
            Err(Error::FactorNotFound { .. })
        ));
    }

    #[test]
    fn closed_words_are_complete_returns_to_their_repeated_prefix() {
        for word in enumerate_binary(10).unwrap() {
            if word.is_empty() {
                continue;
            }
            let lrp = longest_repeated_prefix(&word).unwrap();
            if lrp.is_empty() {
                continue;
            }
            let closed = closedness(&word).unwrap() == Closedness::Closed;
            let r = complete_returns(&lrp, &word).unwrap();
            assert_eq!(
                closed,
                r.returns == vec![word.clone()],
                "complete-return check failed for {word}"
            );
        }
    }

    #[test]
    fn bispecial_analysis_examples() {
        let r = longest_bispecial_analysis(&w("aababaa")).unwrap();
        assert_eq!(r.longest_left_special, w("aba"));
        assert_eq!(r.longest_right_special, w("aba"));
        assert!(r.equal && r.central);
        assert_eq!(r.closedness, Closedness::Closed);

        let r = longest_bispecial_analysis(&w("aaababa")).unwrap();
        assert_eq!(r.closedness, Closedness::Open);
        assert_eq!(r.longest_right_special, r.longest_repeated_prefix);
        assert_eq!(r.longest_right_special, w("aa"));

        assert!(matches!(
            longest_bispecial_analysis(&w("aaaa")),
            Err(Error::NotApplicable { .. })
        ));
    }

    #[test]
    fn fractional_roots_follow_the_central_split() {
        // For a pathological pair (f, g) = (aua, bub) the fractional roots
        // are x·w2·y and y·w1·x, oriented so that x is the bracket letter
        // of f; for unary u = x^n they are x and y·x^n.
        for word in enumerate_binary(12).unwrap() {
            if word.alphabet().len() != 2 {
                continue;
            }
            let Some(pair) = minimal_pathological_pair(&word).unwrap() else {
                continue;
            };
            let z_f = fractional_root(&pair.f).unwrap();
            let z_g = fractional_root(&pair.g).unwrap();
            match central_decomposition(&pair.u).unwrap() {
                CentralDecomposition::UnaryPower { letter, exponent } => {
                    if exponent == 0 {
                        assert_eq!(z_f, Word::parse(&pair.a.to_string()).unwrap());
                        assert_eq!(z_g, Word::parse(&pair.b.to_string()).unwrap());
                    } else if letter == pair.a {
                        assert_eq!(z_f, Word::parse(&pair.a.to_string()).unwrap());
                        assert_eq!(
                            z_g,
                            Word::from_letters(
                                std::iter::once(pair.b)
                                    .chain(std::iter::repeat_n(letter, exponent)),
                            )
                            .unwrap()
                        );
                    } else {
                        assert_eq!(z_g, Word::parse(&pair.b.to_string()).unwrap());
                        assert_eq!(
                            z_f,
                            Word::from_letters(
                                std::iter::once(pair.a)
                                    .chain(std::iter::repeat_n(letter, exponent)),
                            )
                            .unwrap()
                        );
                    }
                }
                CentralDecomposition::Split { w1, x, y, w2 } => {
                    // orient the split so that x matches the letter of f
                    let (w1, x, y, w2) = if x == pair.a {
                        (w1, x, y, w2)
                    } else {
                        (w2, y, x, w1)
                    };
                    let expect_f = Word::from_letters(
                        std::iter::once(x)
                            .chain(w2.letters().iter().copied())
                            .chain(std::iter::once(y)),
                    )
                    .unwrap();
                    let expect_g = Word::from_letters(
                        std::iter::once(y)
                            .chain(w1.letters().iter().copied())
                            .chain(std::iter::once(x)),
                    )
                    .unwrap();
                    assert_eq!(z_f, expect_f, "z_f mismatch for {word}");
                    assert_eq!(z_g, expect_g, "z_g mismatch for {word}");
                }
            }
        }
    }
}
