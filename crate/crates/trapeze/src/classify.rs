//! Predicate-level classification: balance (finite Sturmian), trapezoidal
//! by independent routes, palindromic richness, open/closed, central and
//! standard words, and the consolidated classification record.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complexity::{ComplexityProfile, WordParameters};
use crate::word::{is_primitive, longest_repeated_prefix, occurrences, Word};
use crate::{Error, Result};

/// Whether the longest repeated prefix of a word occurs exactly twice with
/// the second occurrence a suffix (`Closed`), or not (`Open`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Closedness {
    Open,
    Closed,
}

/// The consolidated flag record produced by [`classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_binary: bool,
    pub balanced: bool,
    pub sturmian: bool,
    pub trapezoidal: bool,
    pub rich: bool,
    pub closedness: Closedness,
    pub primitive: bool,
    pub palindrome: bool,
    pub central: bool,
    pub standard: bool,
    /// `None` for words using fewer than two letters.
    pub parameters: Option<WordParameters>,
}

/// A witness that a word is unbalanced: two equal-length factors whose
/// counts of `letter` differ by at least two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceViolation {
    pub factor_f: Word,
    pub factor_g: Word,
    pub letter: char,
    pub common_length: usize,
}

/// Minimal-length pathological pair in normalized `aua`/`bub` form, shared
/// between balance testing and the structural factorization so the two can
/// never drift apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MinimalPair {
    pub f: Word,
    pub g: Word,
    pub u: Word,
    pub a: char,
    pub b: char,
    /// 1-based start of the earliest occurrence of `f`.
    pub f_start: usize,
}

/// The smallest factor length at which two factors of `w` break the balance
/// bound, if any. Uses prefix letter counts, so the scan is quadratic.
fn unbalanced_length(w: &Word) -> Option<usize> {
    let alph = w.alphabet();
    if alph.len() < 2 {
        return None;
    }
    let a = alph[0];
    let l = w.letters();
    let n = l.len();
    let mut pre = vec![0usize; n + 1];
    for (i, &c) in l.iter().enumerate() {
        pre[i + 1] = pre[i] + usize::from(c == a);
    }
    (2..=n).find(|&k| {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for i in 0..=n - k {
            let c = pre[i + k] - pre[i];
            lo = lo.min(c);
            hi = hi.max(c);
        }
        hi - lo >= 2
    })
}

/// Finds the minimal-length pathological pair, normalized so that
/// `f = a·u·a` and `g = b·u·b` share the same middle word `u`.
///
/// Tie-breaking among same-length candidates: earliest first occurrence of
/// `f`, then lexicographic order of `f`.
pub(crate) fn minimal_violation(w: &Word) -> Option<MinimalPair> {
    let k = unbalanced_length(w)?;
    let alph = w.alphabet();
    let l = w.letters();
    let n = l.len();

    let mut first_start: std::collections::BTreeMap<&[char], usize> = Default::default();
    for i in 0..=n - k {
        first_start.entry(&l[i..i + k]).or_insert(i);
    }

    struct Candidate<'w> {
        f_start: usize,
        f: &'w [char],
        g: Vec<char>,
        a: char,
        b: char,
    }

    let mut best: Option<Candidate<'_>> = None;
    for (&f, &fi) in &first_start {
        let x = f[0];
        if f[k - 1] != x {
            continue;
        }
        let y = if x == alph[0] { alph[1] } else { alph[0] };
        let mut g: Vec<char> = Vec::with_capacity(k);
        g.push(y);
        g.extend_from_slice(&f[1..k - 1]);
        g.push(y);
        if !first_start.contains_key(g.as_slice()) {
            continue;
        }
        let better = match &best {
            None => true,
            Some(current) => (fi, f) < (current.f_start, current.f),
        };
        if better {
            best = Some(Candidate {
                f_start: fi,
                f,
                g,
                a: x,
                b: y,
            });
        }
    }

    let c = best
        .expect("every minimal unbalanced length admits a pathological pair of the form aua/bub");
    Some(MinimalPair {
        f: Word::from_slice(c.f),
        g: Word::from_letters(c.g).expect("two letters"),
        u: Word::from_slice(&c.f[1..k - 1]),
        a: c.a,
        b: c.b,
        f_start: c.f_start + 1,
    })
}

/// True when every pair of equal-length factors has letter counts differing
/// by at most one. Finite Sturmian words are exactly the balanced ones.
pub fn is_balanced(w: &Word) -> bool {
    unbalanced_length(w).is_none()
}

/// Minimal-length witness pair for an unbalanced word, `None` if balanced.
pub fn balance_violation(w: &Word) -> Option<BalanceViolation> {
    minimal_violation(w).map(|p| BalanceViolation {
        common_length: p.f.len(),
        factor_f: p.f,
        factor_g: p.g,
        letter: p.a,
    })
}

/// Alias for [`is_balanced`]: a finite word is Sturmian iff it is balanced.
pub fn is_sturmian(w: &Word) -> bool {
    is_balanced(w)
}

/// The individually evaluated equivalent characterizations of trapezoidal
/// words, exposed so that sweeps can check their mutual agreement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrapezoidalConditions {
    /// Complexity follows the trapezium shape determined by `m` and `M`.
    pub shape: bool,
    /// `|w| = L + H`.
    pub length_left: bool,
    /// `|w| = R + K`.
    pub length_right: bool,
    /// At most one left special factor of each length.
    pub unique_left_special: bool,
    /// At most one right special factor of each length.
    pub unique_right_special: bool,
    /// At most `n + 1` distinct factors of each length `n`.
    pub factor_bound: bool,
    /// `|f(n+1) - f(n)| <= 1` for every `n`.
    pub unit_steps: bool,
}

impl TrapezoidalConditions {
    pub fn all(&self) -> [bool; 7] {
        [
            self.shape,
            self.length_left,
            self.length_right,
            self.unique_left_special,
            self.unique_right_special,
            self.factor_bound,
            self.unit_steps,
        ]
    }

    /// True when all seven conditions produce the same verdict.
    pub fn agree(&self) -> bool {
        self.all().iter().all(|&c| c == self.shape)
    }
}

pub(crate) fn conditions_from_profile(
    profile: &ComplexityProfile,
    params: &WordParameters,
) -> TrapezoidalConditions {
    let n = profile.word().len();
    let f = |i: usize| profile.count(i);
    let (m, mm) = (params.m_min, params.m_max);

    let shape = (0..=m).all(|i| f(i) == i + 1)
        && (m..mm).all(|i| f(i + 1) == f(i))
        && (mm..=n).all(|i| f(i + 1) + 1 == f(i));
    TrapezoidalConditions {
        shape,
        length_left: params.l + params.h == n,
        length_right: params.r + params.k == n,
        unique_left_special: (0..=n).all(|i| profile.left_specials(i).len() <= 1),
        unique_right_special: (0..=n).all(|i| profile.right_specials(i).len() <= 1),
        factor_bound: (0..=n + 1).all(|i| f(i) <= i + 1),
        unit_steps: (0..=n).all(|i| f(i).abs_diff(f(i + 1)) <= 1),
    }
}

/// Evaluates all seven trapezoidal characterizations for a two-letter word.
pub fn trapezoidal_conditions(w: &Word) -> Result<TrapezoidalConditions> {
    let profile = ComplexityProfile::compute(w);
    let params = WordParameters::from_profile(&profile)?;
    Ok(conditions_from_profile(&profile, &params))
}

pub(crate) fn trapezoidal_from_profile(
    profile: &ComplexityProfile,
    params: &WordParameters,
) -> bool {
    let c = conditions_from_profile(profile, params);
    // The three primary routes (shape, |w| = L + H, factor bound) are
    // evaluated independently; a disagreement is an implementation bug,
    // never a property of the input.
    assert!(
        c.shape == c.length_left && c.shape == c.factor_bound,
        "trapezoidal route disagreement for `{}`: {c:?}",
        profile.word()
    );
    c.shape
}

/// True when `w` has at most `n + 1` distinct factors of every length `n`.
/// Words using fewer than two letters are never trapezoidal.
pub fn is_trapezoidal(w: &Word) -> bool {
    if w.alphabet().len() != 2 {
        return false;
    }
    let profile = ComplexityProfile::compute(w);
    let params = WordParameters::from_profile(&profile).expect("two letters");
    trapezoidal_from_profile(&profile, &params)
}

/// The set of distinct palindromic factors of `w`, including ε, found by
/// expanding around every center.
pub fn palindromic_factors(w: &Word) -> BTreeSet<Word> {
    let l = w.letters();
    let n = l.len();
    let mut set = BTreeSet::new();
    set.insert(Word::empty());
    for center in 0..n {
        // odd lengths
        let mut r = 0;
        while center >= r && center + r < n && l[center - r] == l[center + r] {
            set.insert(Word::from_slice(&l[center - r..=center + r]));
            r += 1;
        }
        // even lengths, centered between `center` and `center + 1`
        let mut r = 0;
        while center >= r && center + 1 + r < n && l[center - r] == l[center + 1 + r] {
            set.insert(Word::from_slice(&l[center - r..=center + 1 + r]));
            r += 1;
        }
    }
    set
}

/// True when `w` contains the maximum possible `|w| + 1` distinct
/// palindromic factors.
pub fn is_rich(w: &Word) -> bool {
    palindromic_factors(w).len() == w.len() + 1
}

/// Classifies a non-empty word as `Closed` or `Open`.
///
/// The primary route counts the occurrences of the longest repeated prefix;
/// it is cross-checked against the equivalent formulation that the longest
/// repeated prefix is never followed by two distinct letters.
pub fn closedness(w: &Word) -> Result<Closedness> {
    if w.is_empty() {
        return Err(Error::EmptyWord { op: "closedness" });
    }
    let h = longest_repeated_prefix(w)?;
    let occ = occurrences(&h, w);
    let closed = occ.len() == 2 && occ[1].is_suffix_in(w.len());

    let followers: BTreeSet<char> = occ
        .iter()
        .filter(|o| o.end < w.len())
        .map(|o| w.letters()[o.end])
        .collect();
    assert_eq!(
        closed,
        followers.len() <= 1,
        "closedness routes disagree for `{w}`"
    );

    Ok(if closed {
        Closedness::Closed
    } else {
        Closedness::Open
    })
}

fn partner_letter(c: char) -> char {
    if c == 'b' {
        'a'
    } else {
        'b'
    }
}

fn wrapped(u: &Word, c: char) -> Word {
    Word::from_letters(
        std::iter::once(c)
            .chain(u.letters().iter().copied())
            .chain(std::iter::once(c)),
    )
    .expect("wrapping keeps the alphabet within two letters")
}

/// True when `u` is a palindrome and both `a·u·a` and `b·u·b` are balanced,
/// where `a` and `b` are the two alphabet letters. Unary and empty words are
/// extended with a canonical second letter.
pub fn is_central(u: &Word) -> bool {
    if !u.is_palindrome() {
        return false;
    }
    let alph = u.alphabet();
    let (a, b) = match alph.as_slice() {
        [] => ('a', 'b'),
        [c] => (*c, partner_letter(*c)),
        [c, d] => (*c, *d),
        _ => unreachable!("words hold at most two letters"),
    };
    is_balanced(&wrapped(u, a)) && is_balanced(&wrapped(u, b))
}

/// True when `u` is a single letter or of the form `c·x·y` with `c` central
/// and `x`, `y` distinct letters.
pub fn is_standard(u: &Word) -> bool {
    let n = u.len();
    match n {
        0 => false,
        1 => true,
        _ => {
            let x = u.letter(n - 1).unwrap();
            let y = u.letter(n).unwrap();
            x != y && is_central(&u.factor(1, n - 2).unwrap())
        }
    }
}

pub(crate) fn classification_from_profile(profile: &ComplexityProfile) -> Result<Classification> {
    let w = profile.word();
    if w.is_empty() {
        return Err(Error::EmptyWord { op: "classify" });
    }
    let is_binary = w.alphabet().len() == 2;
    let parameters = if is_binary {
        Some(WordParameters::from_profile(profile)?)
    } else {
        None
    };
    let balanced = is_balanced(w);
    let trapezoidal = parameters
        .as_ref()
        .is_some_and(|p| trapezoidal_from_profile(profile, p));
    let c = Classification {
        is_binary,
        balanced,
        sturmian: balanced,
        trapezoidal,
        rich: is_rich(w),
        closedness: closedness(w)?,
        primitive: is_primitive(w)?,
        palindrome: w.is_palindrome(),
        central: is_central(w),
        standard: is_standard(w),
        parameters,
    };

    // The implication lattice between the classes; a violation here is an
    // implementation bug.
    let closed = c.closedness == Closedness::Closed;
    assert!(!(c.is_binary && c.sturmian) || c.trapezoidal);
    assert!(!c.trapezoidal || c.rich);
    assert!(!(c.trapezoidal && closed) || c.sturmian);
    assert!(!(c.trapezoidal && !closed) || c.primitive);
    assert!(!(c.trapezoidal && c.palindrome) || (c.sturmian && closed));
    assert!(!c.central || (c.palindrome && c.sturmian));
    Ok(c)
}

/// Populates the full flag record for a non-empty word.
pub fn classify(w: &Word) -> Result<Classification> {
    classification_from_profile(&ComplexityProfile::compute(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::factor_set;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn balance_examples() {
        let v = balance_violation(&w("aaabab")).unwrap();
        assert_eq!((v.factor_f, v.factor_g), (w("aaa"), w("bab")));
        assert_eq!(v.common_length, 3);
        assert!(!is_balanced(&w("aaababa")));
        assert!(is_balanced(&w("aaaaa")));
        assert!(is_balanced(&Word::empty()));
    }

    #[test]
    fn balance_agrees_with_naive_double_loop() {
        for word in crate::lab::enumerate_binary(9).unwrap() {
            let mut naive = true;
            'outer: for n in 1..=word.len() {
                let factors: Vec<Word> = factor_set(&word, n).into_iter().collect();
                for u in &factors {
                    for v in &factors {
                        if u.count_of('a').abs_diff(v.count_of('a')) >= 2 {
                            naive = false;
                            break 'outer;
                        }
                    }
                }
            }
            assert_eq!(is_balanced(&word), naive, "balance mismatch for {word}");
        }
    }

    #[test]
    fn trapezoidal_examples() {
        assert!(is_trapezoidal(&w("aaababa")));
        assert!(!is_trapezoidal(&w("aabbaa")));
        assert!(is_trapezoidal(&w("ab")));
        assert!(!is_trapezoidal(&w("aaaa")));
        assert!(!is_trapezoidal(&Word::empty()));
    }

    #[test]
    fn rich_examples() {
        assert!(is_rich(&w("aabbaa")));
        assert_eq!(palindromic_factors(&w("aabbaa")).len(), 7);
        let expected: BTreeSet<Word> = ["", "a", "b", "aa", "bb", "abba", "aabbaa"]
            .iter()
            .map(|s| w(s))
            .collect();
        assert_eq!(palindromic_factors(&w("aabbaa")), expected);
        assert!(is_rich(&Word::empty()));
        assert!(is_rich(&w("aaababa")));
    }

    #[test]
    fn closedness_examples() {
        assert_eq!(closedness(&w("aabbaa")).unwrap(), Closedness::Closed);
        assert_eq!(closedness(&w("aabbaaa")).unwrap(), Closedness::Open);
        assert_eq!(closedness(&w("aabaa")).unwrap(), Closedness::Closed);
        assert!(closedness(&Word::empty()).is_err());
    }

    #[test]
    fn single_letter_words_are_closed() {
        assert_eq!(closedness(&w("a")).unwrap(), Closedness::Closed);
        assert_eq!(closedness(&w("aaa")).unwrap(), Closedness::Closed);
    }

    #[test]
    fn central_examples() {
        assert!(is_central(&w("aba")));
        assert!(!is_central(&w("ab")));
        assert!(is_central(&Word::empty()));
        assert!(is_central(&w("aabaa")));
        assert!(!is_central(&w("abba"))); // palindrome, but aabbaa is unbalanced
    }

    #[test]
    fn standard_examples() {
        assert!(is_standard(&w("a")));
        assert!(is_standard(&w("abaab")));
        assert!(is_standard(&w("ab")));
        assert!(!is_standard(&w("aa")));
        assert!(!is_standard(&Word::empty()));
    }

    #[test]
    fn classify_aaababa() {
        let c = classify(&w("aaababa")).unwrap();
        assert!(c.trapezoidal);
        assert!(!c.sturmian);
        assert!(c.rich);
        assert_eq!(c.closedness, Closedness::Open);
        assert!(c.primitive);
    }

    #[test]
    fn classify_aaabaa() {
        let c = classify(&w("aaabaa")).unwrap();
        assert!(c.sturmian);
        assert_eq!(c.closedness, Closedness::Open);
    }

    #[test]
    fn classify_aabaab() {
        let c = classify(&w("aabaab")).unwrap();
        assert!(c.trapezoidal);
        assert!(!c.primitive);
        assert_eq!(c.closedness, Closedness::Closed);
    }

    #[test]
    fn classify_rejects_empty() {
        assert_eq!(
            classify(&Word::empty()),
            Err(Error::EmptyWord { op: "classify" })
        );
    }

    #[test]
    fn classify_unary() {
        let c = classify(&w("aaaa")).unwrap();
        assert!(!c.is_binary);
        assert!(c.sturmian);
        assert!(!c.trapezoidal);
        assert!(c.rich);
        assert_eq!(c.closedness, Closedness::Closed);
        assert!(c.parameters.is_none());
    }

    #[test]
    fn classification_serializes_with_stable_names() {
        let c = classify(&w("aaababa")).unwrap();
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["trapezoidal"], true);
        assert_eq!(json["closedness"], "Open");
        assert_eq!(json["parameters"]["H"], 3);
        assert_eq!(json["parameters"]["pi"], 6);
        let unary = classify(&w("aa")).unwrap();
        let json = serde_json::to_value(&unary).unwrap();
        assert!(json["parameters"].is_null());
    }

    fn binary_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 1..=max_len).prop_map(|bits| {
            Word::from_letters(bits.into_iter().map(|b| if b { 'b' } else { 'a' })).unwrap()
        })
    }

    proptest! {
        #[test]
        fn violation_witness_is_minimal(word in binary_word(14)) {
            if let Some(v) = balance_violation(&word) {
                prop_assert_eq!(v.factor_f.len(), v.factor_g.len());
                prop_assert!(
                    v.factor_f.count_of(v.letter).abs_diff(v.factor_g.count_of(v.letter)) >= 2
                );
                prop_assert!(v.factor_f.is_factor_of(&word));
                prop_assert!(v.factor_g.is_factor_of(&word));
                // no shorter violating pair exists
                for n in 1..v.common_length {
                    let factors: Vec<Word> = factor_set(&word, n).into_iter().collect();
                    let counts: Vec<usize> =
                        factors.iter().map(|f| f.count_of('a')).collect();
                    let lo = counts.iter().min().unwrap();
                    let hi = counts.iter().max().unwrap();
                    prop_assert!(hi - lo <= 1);
                }
            }
        }

        #[test]
        fn trapezoidal_conditions_agree(word in binary_word(12)) {
            prop_assume!(word.alphabet().len() == 2);
            let c = trapezoidal_conditions(&word).unwrap();
            prop_assert!(c.agree(), "conditions disagree for {}: {:?}", word, c);
        }

        #[test]
        fn classification_lattice_holds(word in binary_word(12)) {
            // `classify` asserts the implication lattice internally, so a
            // successful call is itself the property.
            let c = classify(&word).unwrap();
            prop_assert_eq!(c.sturmian, c.balanced);
        }
    }
}
