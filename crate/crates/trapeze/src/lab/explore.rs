//! Raw material for the open question of characterizing open Sturmian
//! words: the full parameter profile of every open Sturmian word up to a
//! length bound. The dataset makes no characterization claim.

use serde::Serialize;

use crate::classify::{classification_from_profile, Closedness};
use crate::complexity::ComplexityProfile;
use crate::lab::enumerate::{enumerate_binary, MAX_ENUM_LEN};
use crate::word::{longest_repeated_prefix, Word};
use crate::{Error, Result};

/// One open Sturmian word with its parameter profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpenSturmianRow {
    pub word: Word,
    #[serde(rename = "H")]
    pub h: usize,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "R")]
    pub r: usize,
    #[serde(rename = "pi")]
    pub period: usize,
    pub lrp: Word,
    pub longest_right_special: Word,
}

/// Emits every open Sturmian word of length `1..=max_len` with its
/// parameters, in enumeration order.
///
/// Unary words are closed by convention, so every row is a genuine
/// two-letter word and the parameters are always defined.
pub fn explore_open_sturmian(max_len: usize) -> Result<Vec<OpenSturmianRow>> {
    if max_len > MAX_ENUM_LEN {
        return Err(Error::BudgetExceeded {
            requested: max_len,
            budget: MAX_ENUM_LEN,
        });
    }
    let mut rows = Vec::new();
    for n in 1..=max_len {
        for word in enumerate_binary(n)? {
            let profile = ComplexityProfile::compute(&word);
            let c = classification_from_profile(&profile).expect("non-empty");
            if !(c.sturmian && c.closedness == Closedness::Open) {
                continue;
            }
            let params = c.parameters.expect("open words use two letters");
            let rs = profile.right_specials(params.r - 1);
            assert_eq!(rs.len(), 1, "Sturmian words have unique maximal specials");
            rows.push(OpenSturmianRow {
                lrp: longest_repeated_prefix(&word).expect("non-empty"),
                longest_right_special: rs.iter().next().unwrap().clone(),
                h: params.h,
                k: params.k,
                l: params.l,
                r: params.r,
                period: params.period,
                word,
            });
        }
    }
    Ok(rows)
}

/// CSV rendering of the exploration dataset.
pub fn explore_csv(rows: &[OpenSturmianRow]) -> String {
    let mut out = String::from("word,H,K,L,R,pi,lrp,longest_right_special\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.word, r.h, r.k, r.l, r.r, r.period, r.lrp, r.longest_right_special
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples_are_classified_correctly() {
        let rows = explore_open_sturmian(6).unwrap();
        let words: Vec<String> = rows.iter().map(|r| r.word.to_string()).collect();
        assert!(words.contains(&"aaabaa".to_string()), "open and Sturmian");
        assert!(!words.contains(&"aabaa".to_string()), "closed");
        assert!(
            !words.contains(&"aaabab".to_string()),
            "open but unbalanced"
        );
    }

    #[test]
    fn every_row_is_open_sturmian_with_matching_specials() {
        for row in explore_open_sturmian(8).unwrap() {
            // For open trapezoidal words the longest repeated prefix is the
            // longest right special factor; rows must exhibit it.
            assert_eq!(row.lrp, row.longest_right_special, "word {}", row.word);
            assert_eq!(row.lrp.len(), row.h - 1);
            assert_eq!(row.h, row.r, "open words have H = R");
            assert_eq!(row.k, row.l, "open words have K = L");
        }
    }

    #[test]
    fn csv_has_the_documented_columns() {
        let rows = explore_open_sturmian(6).unwrap();
        let csv = explore_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "word,H,K,L,R,pi,lrp,longest_right_special"
        );
        assert!(csv.contains("aaabaa,"));
    }
}
