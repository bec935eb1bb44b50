//! Word representation and primitive string operations: occurrences,
//! factor sets, periods, roots and repeated prefixes/suffixes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An immutable finite word over an alphabet of at most two letters.
///
/// Equality is letter-sequence equality and the letters are kept exactly as
/// given: `Word::parse("01")` stays `01`, it is not renamed to `ab`.
/// Positions are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<char>,
}

impl Word {
    /// The empty word ε.
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    /// Parses a word from a character string, rejecting alphabets of three
    /// or more distinct characters.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_letters(text.chars())
    }

    /// Builds a word from a letter sequence, enforcing the two-letter bound.
    pub fn from_letters<I>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = char>,
    {
        let letters: Vec<char> = letters.into_iter().collect();
        let mut distinct: Vec<char> = Vec::new();
        for &c in &letters {
            if !distinct.contains(&c) {
                distinct.push(c);
                if distinct.len() > 2 {
                    return Err(Error::AlphabetTooLarge {
                        found: letters.iter().collect::<BTreeSet<_>>().len(),
                    });
                }
            }
        }
        Ok(Word { letters })
    }

    /// Internal constructor for slices of already-validated words.
    pub(crate) fn from_slice(letters: &[char]) -> Self {
        Word {
            letters: letters.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The i-th letter, 1-based; `None` outside `1..=len`.
    pub fn letter(&self, i: usize) -> Option<char> {
        if (1..=self.letters.len()).contains(&i) {
            Some(self.letters[i - 1])
        } else {
            None
        }
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    /// The distinct letters of the word, sorted.
    pub fn alphabet(&self) -> Vec<char> {
        let set: BTreeSet<char> = self.letters.iter().copied().collect();
        set.into_iter().collect()
    }

    /// Number of occurrences of `letter`, written |w|_a.
    pub fn count_of(&self, letter: char) -> usize {
        self.letters.iter().filter(|&&c| c == letter).count()
    }

    pub fn reverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.letters.len();
        (0..n / 2).all(|i| self.letters[i] == self.letters[n - 1 - i])
    }

    /// Concatenation, re-validated against the two-letter bound.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// The factor spanning 1-based positions `start..=end`.
    /// `end + 1 == start` yields ε; out-of-range positions yield `None`.
    pub fn factor(&self, start: usize, end: usize) -> Option<Word> {
        if start >= 1 && end + 1 >= start && end <= self.letters.len() {
            Some(Word::from_slice(&self.letters[start - 1..end]))
        } else {
            None
        }
    }

    pub fn is_prefix_of(&self, w: &Word) -> bool {
        w.letters.starts_with(&self.letters)
    }

    pub fn is_suffix_of(&self, w: &Word) -> bool {
        w.letters.ends_with(&self.letters)
    }

    pub fn is_factor_of(&self, w: &Word) -> bool {
        self.is_empty()
            || w.letters
                .windows(self.letters.len())
                .any(|win| win == self.letters.as_slice())
    }

    /// `self` repeated `n` times.
    pub fn repeat(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(D::Error::custom)
    }
}

/// A positional witness for one occurrence of a factor, with 1-based
/// inclusive endpoints. Occurrences of ε have `end == start - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub start: usize,
    pub end: usize,
}

impl Occurrence {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end + 1 == self.start
    }

    pub fn is_prefix(&self) -> bool {
        self.start == 1
    }

    pub fn is_suffix_in(&self, word_len: usize) -> bool {
        self.end == word_len
    }

    pub fn is_internal_in(&self, word_len: usize) -> bool {
        !self.is_prefix() && !self.is_suffix_in(word_len)
    }
}

/// All occurrences of `u` in `w`, in ascending start order.
///
/// The empty factor occurs once per boundary position, so `|w| + 1` times.
pub fn occurrences(u: &Word, w: &Word) -> Vec<Occurrence> {
    let (m, n) = (u.len(), w.len());
    if m > n {
        return Vec::new();
    }
    if m == 0 {
        return (1..=n + 1)
            .map(|start| Occurrence {
                start,
                end: start - 1,
            })
            .collect();
    }
    let (us, ws) = (u.letters(), w.letters());
    (0..=n - m)
        .filter(|&i| &ws[i..i + m] == us)
        .map(|i| Occurrence {
            start: i + 1,
            end: i + m,
        })
        .collect()
}

/// The set of distinct factors of `w` of length `n`.
pub fn factor_set(w: &Word, n: usize) -> BTreeSet<Word> {
    let mut set = BTreeSet::new();
    if n == 0 {
        set.insert(Word::empty());
    } else if n <= w.len() {
        for win in w.letters().windows(n) {
            set.insert(Word::from_slice(win));
        }
    }
    set
}

/// All prefixes of `w` from ε up to `w` itself, by increasing length.
pub fn prefixes(w: &Word) -> Vec<Word> {
    (0..=w.len())
        .map(|l| Word::from_slice(&w.letters()[..l]))
        .collect()
}

/// All suffixes of `w` from ε up to `w` itself, by increasing length.
pub fn suffixes(w: &Word) -> Vec<Word> {
    (0..=w.len())
        .map(|l| Word::from_slice(&w.letters()[w.len() - l..]))
        .collect()
}

/// The smallest period of `w`: the least `p > 0` with `w_i = w_{i+p}` for
/// every valid `i`. Rejects the empty word.
pub fn period(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord { op: "period" });
    }
    let l = w.letters();
    let n = l.len();
    Ok((1..=n)
        .find(|&p| (0..n - p).all(|i| l[i] == l[i + p]))
        .expect("|w| is always a period"))
}

/// The prefix of `w` whose length is the period of `w`.
pub fn fractional_root(w: &Word) -> Result<Word> {
    let p = period(w)?;
    Ok(Word::from_slice(&w.letters()[..p]))
}

/// The unique decomposition `w = root^exponent` with `root` primitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDecomposition {
    pub root: Word,
    pub exponent: usize,
}

/// Decomposes `w` as the maximal power of its primitive root.
/// `exponent == 1` exactly when `w` is primitive.
pub fn primitive_root(w: &Word) -> Result<RootDecomposition> {
    if w.is_empty() {
        return Err(Error::EmptyWord {
            op: "primitive_root",
        });
    }
    let l = w.letters();
    let n = l.len();
    let d = (1..=n)
        .find(|&d| n.is_multiple_of(d) && (d..n).all(|i| l[i] == l[i - d]))
        .expect("d = |w| always qualifies");
    Ok(RootDecomposition {
        root: Word::from_slice(&l[..d]),
        exponent: n / d,
    })
}

/// True when `w` is not a proper power.
pub fn is_primitive(w: &Word) -> Result<bool> {
    Ok(primitive_root(w)?.exponent == 1)
}

/// The longest prefix of `w` with at least two occurrences in `w`;
/// ε when even the first letter is unique.
pub fn longest_repeated_prefix(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord {
            op: "longest_repeated_prefix",
        });
    }
    let l = w.letters();
    let n = l.len();
    for len in (1..n).rev() {
        let p = &l[..len];
        let mut found = 0;
        for i in 0..=n - len {
            if &l[i..i + len] == p {
                found += 1;
                if found == 2 {
                    return Ok(Word::from_slice(p));
                }
            }
        }
    }
    // ε occurs |w| + 1 >= 2 times in every non-empty word.
    Ok(Word::empty())
}

/// The longest suffix of `w` with at least two occurrences in `w`.
/// Reverse-conjugate of [`longest_repeated_prefix`].
pub fn longest_repeated_suffix(w: &Word) -> Result<Word> {
    Ok(longest_repeated_prefix(&w.reverse())?.reverse())
}
