//! Factor complexity profiles, special-factor extraction, and the word
//! parameters H, K, L, R, m, M.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::word::{period, Word};
use crate::{Error, Result};

static NO_SPECIALS: BTreeSet<Word> = BTreeSet::new();

/// The factor complexity of a word: `count(n)` distinct factors of each
/// length `n` in `0..=|w|+1`, plus the per-length left- and right-special
/// factor sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    word: Word,
    counts: Vec<usize>,
    left_specials: Vec<BTreeSet<Word>>,
    right_specials: Vec<BTreeSet<Word>>,
}

impl ComplexityProfile {
    /// Computes the profile by direct extension-counting over all factor
    /// occurrences, quadratic in `|w|` per length.
    pub fn compute(w: &Word) -> Self {
        let l = w.letters();
        let n = l.len();
        let alphabet = w.alphabet();
        let bit = |c: char| -> u8 {
            match alphabet.iter().position(|&a| a == c) {
                Some(i) => 1 << i,
                None => unreachable!("letter outside the word's alphabet"),
            }
        };

        let mut counts = vec![0usize; n + 2];
        counts[0] = 1;
        let mut left_specials = vec![BTreeSet::new(); n + 1];
        let mut right_specials = vec![BTreeSet::new(); n + 1];

        // ε is left (right) special exactly when both letters occur in w.
        if alphabet.len() == 2 {
            left_specials[0].insert(Word::empty());
            right_specials[0].insert(Word::empty());
        }

        for k in 1..=n {
            let mut exts: BTreeMap<&[char], (u8, u8)> = BTreeMap::new();
            for i in 0..=n - k {
                let entry = exts.entry(&l[i..i + k]).or_insert((0, 0));
                if i > 0 {
                    entry.0 |= bit(l[i - 1]);
                }
                if i + k < n {
                    entry.1 |= bit(l[i + k]);
                }
            }
            counts[k] = exts.len();
            for (factor, (lm, rm)) in exts {
                if lm.count_ones() >= 2 {
                    left_specials[k].insert(Word::from_slice(factor));
                }
                if rm.count_ones() >= 2 {
                    right_specials[k].insert(Word::from_slice(factor));
                }
            }
        }

        ComplexityProfile {
            word: w.clone(),
            counts,
            left_specials,
            right_specials,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `f_w(n)`; zero beyond `|w|`.
    pub fn count(&self, n: usize) -> usize {
        self.counts.get(n).copied().unwrap_or(0)
    }

    /// The counts for `n = 0..=|w|+1`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn left_specials(&self, n: usize) -> &BTreeSet<Word> {
        self.left_specials.get(n).unwrap_or(&NO_SPECIALS)
    }

    pub fn right_specials(&self, n: usize) -> &BTreeSet<Word> {
        self.right_specials.get(n).unwrap_or(&NO_SPECIALS)
    }

    /// Factors that are both left and right special, over all lengths.
    pub fn bispecials(&self) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for (ls, rs) in self.left_specials.iter().zip(&self.right_specials) {
            out.extend(ls.intersection(rs).cloned());
        }
        out
    }

    /// A plain-text column chart of the complexity function.
    pub fn ascii_graph(&self) -> String {
        let max = self.counts.iter().copied().max().unwrap_or(1).max(1);
        let width = self.counts.len();
        let mut out = String::new();
        for y in (1..=max).rev() {
            out.push_str(&format!("{y:>3} |"));
            for &c in &self.counts {
                out.push(if c >= y { '#' } else { ' ' });
            }
            out.push('\n');
        }
        out.push_str("    +");
        out.push_str(&"-".repeat(width));
        out.push('\n');
        out.push_str("     ");
        for n in 0..width {
            out.push_str(&(n % 10).to_string());
        }
        out.push('\n');
        if width > 10 {
            out.push_str("     ");
            for n in 0..width {
                out.push(if n >= 10 && n % 10 == 0 {
                    char::from_digit((n / 10) as u32 % 10, 10).unwrap()
                } else {
                    ' '
                });
            }
            out.push('\n');
        }
        out
    }
}

/// Convenience wrapper over [`ComplexityProfile::compute`].
pub fn complexity_profile(w: &Word) -> ComplexityProfile {
    ComplexityProfile::compute(w)
}

/// Length-`n` factors with two distinct left extensions inside `w`.
pub fn left_special_factors(w: &Word, n: usize) -> BTreeSet<Word> {
    ComplexityProfile::compute(w).left_specials(n).clone()
}

/// Length-`n` factors with two distinct right extensions inside `w`.
pub fn right_special_factors(w: &Word, n: usize) -> BTreeSet<Word> {
    ComplexityProfile::compute(w).right_specials(n).clone()
}

/// Factors that are simultaneously left and right special in `w`.
pub fn bispecial_factors(w: &Word) -> BTreeSet<Word> {
    ComplexityProfile::compute(w).bispecials()
}

/// The word parameters:
///
/// * `H`, `K` — minimal length of a prefix (suffix) occurring exactly once;
/// * `L`, `R` — minimal length with no left (right) special factor;
/// * `m = min(R, K)`, `M = max(R, K)`;
/// * `pi` — the smallest period.
///
/// Defined only for words using exactly two letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordParameters {
    #[serde(rename = "H")]
    pub h: usize,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "R")]
    pub r: usize,
    #[serde(rename = "m")]
    pub m_min: usize,
    #[serde(rename = "M")]
    pub m_max: usize,
    #[serde(rename = "pi")]
    pub period: usize,
    pub defined_for: Word,
}

impl WordParameters {
    pub fn from_profile(profile: &ComplexityProfile) -> Result<Self> {
        let w = profile.word();
        if w.alphabet().len() != 2 {
            return Err(Error::UnaryUndefined {
                op: "parameters",
                word: w.to_string(),
            });
        }
        let letters = w.letters();
        let n = letters.len();

        let count_occurrences = |slice: &[char]| {
            (0..=n - slice.len())
                .filter(|&i| &letters[i..i + slice.len()] == slice)
                .count()
        };
        // Longer prefixes occur no more often than shorter ones, so the first
        // length with a single occurrence is the threshold.
        let h = (1..=n)
            .find(|&l| count_occurrences(&letters[..l]) == 1)
            .expect("the whole word occurs exactly once");
        let k = (1..=n)
            .find(|&l| count_occurrences(&letters[n - l..]) == 1)
            .expect("the whole word occurs exactly once");
        let l = (0..=n)
            .find(|&i| profile.left_specials(i).is_empty())
            .expect("no special factor has length |w|");
        let r = (0..=n)
            .find(|&i| profile.right_specials(i).is_empty())
            .expect("no special factor has length |w|");

        let params = WordParameters {
            h,
            k,
            l,
            r,
            m_min: r.min(k),
            m_max: r.max(k),
            period: period(w)?,
            defined_for: w.clone(),
        };
        assert_eq!(
            profile.count(params.r),
            profile.count(params.l),
            "f(R) = f(L) must hold for `{w}`"
        );
        assert_eq!(
            params.r.max(params.k),
            params.l.max(params.h),
            "max(R, K) = max(L, H) must hold for `{w}`"
        );
        Ok(params)
    }
}

/// Computes the parameters of `w`, rejecting unary and empty words.
pub fn parameters(w: &Word) -> Result<WordParameters> {
    WordParameters::from_profile(&ComplexityProfile::compute(w))
}

/// The left special factors of maximal length. At least one exists for every
/// two-letter word; more than one only for non-trapezoidal words.
pub fn longest_left_specials(w: &Word) -> Result<BTreeSet<Word>> {
    let profile = ComplexityProfile::compute(w);
    let params = WordParameters::from_profile(&profile)?;
    Ok(profile.left_specials(params.l - 1).clone())
}

/// The right special factors of maximal length.
pub fn longest_right_specials(w: &Word) -> Result<BTreeSet<Word>> {
    let profile = ComplexityProfile::compute(w);
    let params = WordParameters::from_profile(&profile)?;
    Ok(profile.right_specials(params.r - 1).clone())
}

/// The unique longest left special factor; fails when several coexist.
pub fn longest_left_special(w: &Word) -> Result<Word> {
    singleton(longest_left_specials(w)?, w, "left")
}

/// The unique longest right special factor; fails when several coexist.
pub fn longest_right_special(w: &Word) -> Result<Word> {
    singleton(longest_right_specials(w)?, w, "right")
}

fn singleton(set: BTreeSet<Word>, w: &Word, side: &'static str) -> Result<Word> {
    if set.len() == 1 {
        Ok(set.into_iter().next().unwrap())
    } else {
        Err(Error::AmbiguousSpecial {
            word: w.to_string(),
            side,
            count: set.len(),
        })
    }
}
