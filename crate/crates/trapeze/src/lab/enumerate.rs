//! Deterministic lexicographic enumeration of all binary words of a given
//! length, restartable from any offset so that sweeps can be partitioned
//! across workers.

use crate::word::Word;
use crate::{Error, Result};

/// Enumeration length budget: 2^24 words is the most a sweep may ask for.
pub const MAX_ENUM_LEN: usize = 24;

/// The fixed two-letter alphabet used by all enumeration sweeps.
pub const LETTERS: [char; 2] = ['a', 'b'];

/// Iterator over binary words of one length in lexicographic order.
#[derive(Clone, Debug)]
pub struct BinaryWords {
    len: usize,
    next: u64,
    end: u64,
}

impl BinaryWords {
    /// The word at `index` in the lexicographic order of `Σ^len`, with
    /// `a < b`: index 0 is `aa…a`, index `2^len - 1` is `bb…b`.
    pub fn word_at(len: usize, index: u64) -> Word {
        Word::from_letters((0..len).map(|i| {
            let bit = (index >> (len - 1 - i)) & 1;
            LETTERS[bit as usize]
        }))
        .expect("two letters")
    }
}

impl Iterator for BinaryWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.next >= self.end {
            return None;
        }
        let word = Self::word_at(self.len, self.next);
        self.next += 1;
        Some(word)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let remaining = (self.end - self.next) as usize;
        (remaining, Some(remaining))
    }
}

impl ExactSizeIterator for BinaryWords {}

/// All `2^n` binary words of length `n` in lexicographic order.
pub fn enumerate_binary(n: usize) -> Result<BinaryWords> {
    enumerate_binary_range(n, 0, 1u64 << check_budget(n)?)
}

/// The slice `start..end` of the lexicographic enumeration of length-`n`
/// words; `end` is clamped to `2^n`.
pub fn enumerate_binary_range(n: usize, start: u64, end: u64) -> Result<BinaryWords> {
    let total = 1u64 << check_budget(n)?;
    let end = end.min(total);
    Ok(BinaryWords {
        len: n,
        next: start.min(end),
        end,
    })
}

/// Splits the index space of length-`n` words into `workers` contiguous
/// ranges whose union is the full enumeration.
pub fn partition_ranges(n: usize, workers: usize) -> Vec<(u64, u64)> {
    let total = 1u64 << n;
    let workers = workers.max(1) as u64;
    let chunk = total.div_ceil(workers);
    (0..workers)
        .map(|i| ((i * chunk).min(total), ((i + 1) * chunk).min(total)))
        .collect()
}

fn check_budget(n: usize) -> Result<usize> {
    if n > MAX_ENUM_LEN {
        Err(Error::BudgetExceeded {
            requested: n,
            budget: MAX_ENUM_LEN,
        })
    } else {
        Ok(n)
    }
}
