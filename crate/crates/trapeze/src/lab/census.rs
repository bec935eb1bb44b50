//! Per-length census of word classes over the full binary enumeration.

use serde::Serialize;

use crate::classify::{classification_from_profile, Closedness};
use crate::complexity::ComplexityProfile;
use crate::lab::enumerate::{enumerate_binary_range, partition_ranges, MAX_ENUM_LEN};
use crate::{Error, Result};

/// Documented in every census output: unary words count toward the totals
/// and the sturmian/rich columns but are never trapezoidal.
pub const CENSUS_NOTE: &str =
    "unary words (a^n, b^n) count toward total_binary, sturmian and rich, never toward trapezoidal";

/// Class counts for one word length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub length: usize,
    pub total_binary: u64,
    pub trapezoidal: u64,
    pub sturmian: u64,
    pub trapezoidal_non_sturmian: u64,
    pub open_trapezoidal: u64,
    pub closed_trapezoidal: u64,
    pub open_sturmian: u64,
    pub rich: u64,
    pub trapezoidal_palindromes: u64,
}

impl CensusRow {
    fn absorb(&mut self, other: &CensusRow) {
        self.total_binary += other.total_binary;
        self.trapezoidal += other.trapezoidal;
        self.sturmian += other.sturmian;
        self.trapezoidal_non_sturmian += other.trapezoidal_non_sturmian;
        self.open_trapezoidal += other.open_trapezoidal;
        self.closed_trapezoidal += other.closed_trapezoidal;
        self.open_sturmian += other.open_sturmian;
        self.rich += other.rich;
        self.trapezoidal_palindromes += other.trapezoidal_palindromes;
    }
}

fn count_range(n: usize, start: u64, end: u64) -> CensusRow {
    let mut row = CensusRow {
        length: n,
        ..CensusRow::default()
    };
    for word in enumerate_binary_range(n, start, end).expect("within budget") {
        let profile = ComplexityProfile::compute(&word);
        let c = classification_from_profile(&profile).expect("non-empty word");
        let open = c.closedness == Closedness::Open;
        row.total_binary += 1;
        row.trapezoidal += u64::from(c.trapezoidal);
        row.sturmian += u64::from(c.sturmian);
        row.trapezoidal_non_sturmian += u64::from(c.trapezoidal && !c.sturmian);
        row.open_trapezoidal += u64::from(c.trapezoidal && open);
        row.closed_trapezoidal += u64::from(c.trapezoidal && !open);
        row.open_sturmian += u64::from(c.sturmian && open);
        row.rich += u64::from(c.rich);
        row.trapezoidal_palindromes += u64::from(c.trapezoidal && c.palindrome);
    }
    row
}

/// Counts every class for each length `1..=max_len`, optionally splitting
/// each length across `workers` threads. The merge is a plain sum, so the
/// result is identical for every worker count.
pub fn census(max_len: usize, workers: usize) -> Result<Vec<CensusRow>> {
    if max_len > MAX_ENUM_LEN {
        return Err(Error::BudgetExceeded {
            requested: max_len,
            budget: MAX_ENUM_LEN,
        });
    }
    let mut rows = Vec::with_capacity(max_len);
    for n in 1..=max_len {
        let ranges = partition_ranges(n, workers);
        let row = if workers <= 1 {
            count_range(n, 0, 1u64 << n)
        } else {
            let partials = std::thread::scope(|scope| {
                let handles: Vec<_> = ranges
                    .iter()
                    .map(|&(start, end)| scope.spawn(move || count_range(n, start, end)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("census worker panicked"))
                    .collect::<Vec<_>>()
            });
            let mut merged = CensusRow {
                length: n,
                ..CensusRow::default()
            };
            for partial in &partials {
                merged.absorb(partial);
            }
            merged
        };
        debug_assert_eq!(row.total_binary, 1u64 << n);
        debug_assert_eq!(
            row.trapezoidal,
            row.sturmian - 2 + row.trapezoidal_non_sturmian,
            "trapezoidal = binary sturmian + trapezoidal non-sturmian at length {n}"
        );
        debug_assert!(row.closed_trapezoidal <= row.sturmian);
        debug_assert!(row.trapezoidal <= row.rich);
        rows.push(row);
    }
    Ok(rows)
}

/// Renders census rows as CSV with a leading `#` comment documenting the
/// unary-word convention. Columns match the field order of [`CensusRow`].
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {CENSUS_NOTE}\n"));
    out.push_str(
        "length,total_binary,trapezoidal,sturmian,trapezoidal_non_sturmian,open_trapezoidal,closed_trapezoidal,open_sturmian,rich,trapezoidal_palindromes\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.length,
            r.total_binary,
            r.trapezoidal,
            r.sturmian,
            r.trapezoidal_non_sturmian,
            r.open_trapezoidal,
            r.closed_trapezoidal,
            r.open_sturmian,
            r.rich,
            r.trapezoidal_palindromes,
        ));
    }
    out
}
