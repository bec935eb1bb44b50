//! Statement-verification harness: runs every structural law relating the
//! classifications over all binary words up to a length budget and reports
//! any violating word.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::classify::{
    classification_from_profile, closedness, conditions_from_profile, is_central, is_trapezoidal,
    Classification, Closedness,
};
use crate::complexity::{ComplexityProfile, WordParameters};
use crate::lab::enumerate::{enumerate_binary_range, partition_ranges};
use crate::structure::{
    dalessandro_factorize, factorization_splits, minimal_pathological_pair, PathologicalPair,
};
use crate::word::{longest_repeated_prefix, longest_repeated_suffix, occurrences, Word};
use crate::{Error, Result};

/// Verification length budget. Raising the sweep beyond this is pointless
/// at desk scale; partition across workers to reach it quickly.
pub const MAX_VERIFY_LEN: usize = 20;

/// The statements checked by the harness, identified by stable ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "&'static str")]
pub enum Statement {
    /// Complexity is strictly increasing on `[0, m]`, nondecreasing on
    /// `[m, M]`, dropping by exactly one on `[M, |w|]`; constant on
    /// `[m, M]` when `R < K`.
    Prop1Shape,
    /// The seven trapezoidal characterizations agree.
    Prop4Equiv,
    /// Every balanced binary word is trapezoidal.
    Prop5SturmTrap,
    /// Every trapezoidal word is rich.
    Prop6TrapRich,
    /// The minimal pathological pair never overlaps itself in the word.
    Lemma6NoOverlap,
    /// An unbalanced word is trapezoidal iff it splits into a suffix of a
    /// power of `z̃_f` followed by a prefix of a power of `z_g`.
    Thm1Factorization,
    /// A palindrome is trapezoidal iff it is balanced.
    Thm2Pal,
    /// Reversal preserves trapezoidality and the open/closed class.
    Prop7Reversal,
    /// A trapezoidal word is open iff its longest repeated prefix is its
    /// longest right special factor (and dually for suffixes).
    Prop8OpenChar,
    /// Open trapezoidal words have `H = R`, `K = L`; closed ones have
    /// `H = K`, `L = R`.
    Lemma9Hkrl,
    /// Closed trapezoidal words are balanced.
    Prop10ClosedSturm,
    /// Open trapezoidal words are primitive.
    Lemma11OpenPrimitive,
    /// The maximal special factors of a closed trapezoidal word coincide
    /// and form a central word.
    Lemma12Central,
    /// A binary palindrome is balanced iff its period is `R + 1`.
    Thm14Period,
    /// Trapezoidal palindromes are closed.
    Thm15PalClosed,
    /// The maximal special factors of a trapezoidal palindrome coincide
    /// and form a central word.
    Cor16Special,
    /// Both halves of the canonical factorization are balanced.
    Lemma5PqSturmian,
}

impl Statement {
    pub const ALL: [Statement; 17] = [
        Statement::Prop1Shape,
        Statement::Prop4Equiv,
        Statement::Prop5SturmTrap,
        Statement::Prop6TrapRich,
        Statement::Lemma6NoOverlap,
        Statement::Thm1Factorization,
        Statement::Thm2Pal,
        Statement::Prop7Reversal,
        Statement::Prop8OpenChar,
        Statement::Lemma9Hkrl,
        Statement::Prop10ClosedSturm,
        Statement::Lemma11OpenPrimitive,
        Statement::Lemma12Central,
        Statement::Thm14Period,
        Statement::Thm15PalClosed,
        Statement::Cor16Special,
        Statement::Lemma5PqSturmian,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Statement::Prop1Shape => "prop1_shape",
            Statement::Prop4Equiv => "prop4_equiv",
            Statement::Prop5SturmTrap => "prop5_sturm_trap",
            Statement::Prop6TrapRich => "prop6_trap_rich",
            Statement::Lemma6NoOverlap => "lemma6_no_overlap",
            Statement::Thm1Factorization => "thm1_factorization",
            Statement::Thm2Pal => "thm2_pal",
            Statement::Prop7Reversal => "prop7_reversal",
            Statement::Prop8OpenChar => "prop8_open_char",
            Statement::Lemma9Hkrl => "lemma9_hkrl",
            Statement::Prop10ClosedSturm => "prop10_closed_sturm",
            Statement::Lemma11OpenPrimitive => "lemma11_open_primitive",
            Statement::Lemma12Central => "lemma12_central",
            Statement::Thm14Period => "thm14_period",
            Statement::Thm15PalClosed => "thm15_pal_closed",
            Statement::Cor16Special => "cor16_special",
            Statement::Lemma5PqSturmian => "lemma5_pq_sturmian",
        }
    }
}

impl From<Statement> for &'static str {
    fn from(s: Statement) -> Self {
        s.id()
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .iter()
            .find(|st| st.id() == s)
            .copied()
            .ok_or_else(|| Error::UnknownStatement { id: s.to_string() })
    }
}

/// Outcome of one statement over the sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatementReport {
    pub statement: Statement,
    /// Words for which the statement's precondition held.
    pub words_checked: u64,
    pub violations: Vec<Word>,
}

/// Aggregated harness outcome.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub max_length: usize,
    pub checks: Vec<StatementReport>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn total_violations(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_violations() == 0
    }

    /// One line per statement plus a summary footer.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let verdict = if check.violations.is_empty() {
                "PASS".to_string()
            } else {
                let witnesses: Vec<String> = check
                    .violations
                    .iter()
                    .take(5)
                    .map(|w| w.to_string())
                    .collect();
                format!("FAIL (witnesses: {})", witnesses.join(", "))
            };
            out.push_str(&format!(
                "{:<24} {:>10} words checked   {}\n",
                check.statement.id(),
                check.words_checked,
                verdict
            ));
        }
        out.push_str(&format!(
            "verify: {}/{} statements passed over lengths 1..={} in {:.2?}\n",
            self.checks
                .iter()
                .filter(|c| c.violations.is_empty())
                .count(),
            self.checks.len(),
            self.max_length,
            self.elapsed
        ));
        out
    }
}

/// Everything the checks need about one word, computed once.
struct Analysis {
    word: Word,
    binary: bool,
    profile: ComplexityProfile,
    params: Option<WordParameters>,
    classification: Classification,
    lrp: Word,
    lrs: Word,
    pair: Option<PathologicalPair>,
}

impl Analysis {
    fn compute(word: Word) -> Self {
        let profile = ComplexityProfile::compute(&word);
        let classification =
            classification_from_profile(&profile).expect("sweep words are non-empty");
        let binary = classification.is_binary;
        let params = classification.parameters.clone();
        let lrp = longest_repeated_prefix(&word).expect("non-empty");
        let lrs = longest_repeated_suffix(&word).expect("non-empty");
        let pair = if binary && !classification.balanced {
            minimal_pathological_pair(&word).expect("binary word")
        } else {
            None
        };
        Analysis {
            word,
            binary,
            profile,
            params,
            classification,
            lrp,
            lrs,
            pair,
        }
    }

    fn open(&self) -> bool {
        self.classification.closedness == Closedness::Open
    }

    fn longest_left_special(&self) -> Word {
        let l = self.params.as_ref().expect("binary").l;
        let set = self.profile.left_specials(l - 1);
        assert_eq!(
            set.len(),
            1,
            "trapezoidal words have unique maximal specials"
        );
        set.iter().next().unwrap().clone()
    }

    fn longest_right_special(&self) -> Word {
        let r = self.params.as_ref().expect("binary").r;
        let set = self.profile.right_specials(r - 1);
        assert_eq!(
            set.len(),
            1,
            "trapezoidal words have unique maximal specials"
        );
        set.iter().next().unwrap().clone()
    }
}

fn applies(stmt: Statement, a: &Analysis) -> bool {
    let c = &a.classification;
    match stmt {
        Statement::Prop1Shape | Statement::Prop4Equiv | Statement::Prop5SturmTrap => a.binary,
        Statement::Prop6TrapRich => true,
        Statement::Lemma6NoOverlap | Statement::Thm1Factorization => a.binary && !c.balanced,
        Statement::Thm2Pal => a.binary && c.palindrome,
        Statement::Prop7Reversal
        | Statement::Prop8OpenChar
        | Statement::Lemma9Hkrl
        | Statement::Prop10ClosedSturm
        | Statement::Lemma11OpenPrimitive => c.trapezoidal,
        Statement::Lemma12Central => c.trapezoidal && !a.open(),
        Statement::Thm14Period => a.binary && c.palindrome,
        Statement::Thm15PalClosed | Statement::Cor16Special => c.trapezoidal && c.palindrome,
        Statement::Lemma5PqSturmian => c.trapezoidal && !c.balanced,
    }
}

fn holds(stmt: Statement, a: &Analysis) -> bool {
    let c = &a.classification;
    match stmt {
        Statement::Prop1Shape => {
            let p = a.params.as_ref().unwrap();
            let f = |i: usize| a.profile.count(i);
            let n = a.word.len();
            let increasing = (0..p.m_min).all(|i| f(i + 1) > f(i));
            let nondecreasing = (p.m_min..p.m_max).all(|i| f(i + 1) >= f(i));
            let unit_drop = (p.m_max..=n).all(|i| f(i + 1) + 1 == f(i));
            let constant_plateau = p.r >= p.k || (p.m_min..p.m_max).all(|i| f(i + 1) == f(i));
            increasing && nondecreasing && unit_drop && constant_plateau
        }
        Statement::Prop4Equiv => {
            let conditions = conditions_from_profile(&a.profile, a.params.as_ref().unwrap());
            conditions.agree() && conditions.shape == c.trapezoidal
        }
        Statement::Prop5SturmTrap => !c.balanced || c.trapezoidal,
        Statement::Prop6TrapRich => !c.trapezoidal || c.rich,
        Statement::Lemma6NoOverlap => {
            let pair = a.pair.as_ref().unwrap();
            let focc = occurrences(&pair.f, &a.word);
            let gocc = occurrences(&pair.g, &a.word);
            focc.iter()
                .all(|fo| gocc.iter().all(|go| fo.end < go.start || go.end < fo.start))
        }
        Statement::Thm1Factorization => {
            let any_split = !factorization_splits(&a.word)
                .expect("binary unbalanced")
                .is_empty();
            if c.trapezoidal {
                any_split && dalessandro_factorize(&a.word).is_ok()
            } else {
                !any_split
            }
        }
        Statement::Thm2Pal => c.trapezoidal == c.balanced,
        Statement::Prop7Reversal => {
            let rev = a.word.reverse();
            is_trapezoidal(&rev) && closedness(&rev).expect("non-empty") == c.closedness
        }
        Statement::Prop8OpenChar => {
            let open = a.open();
            open == (a.lrp == a.longest_right_special())
                && open == (a.lrs == a.longest_left_special())
        }
        Statement::Lemma9Hkrl => {
            let p = a.params.as_ref().unwrap();
            if a.open() {
                p.h == p.r && p.k == p.l
            } else {
                p.h == p.k && p.l == p.r
            }
        }
        Statement::Prop10ClosedSturm => a.open() || c.balanced,
        Statement::Lemma11OpenPrimitive => !a.open() || c.primitive,
        Statement::Lemma12Central | Statement::Cor16Special => {
            let lls = a.longest_left_special();
            lls == a.longest_right_special() && is_central(&lls)
        }
        Statement::Thm14Period => {
            let p = a.params.as_ref().unwrap();
            c.balanced == (p.period == p.r + 1)
        }
        Statement::Thm15PalClosed => !a.open(),
        // the factorization itself verifies that p and q are balanced
        Statement::Lemma5PqSturmian => dalessandro_factorize(&a.word).is_ok(),
    }
}

struct RangeOutcome {
    checked: Vec<u64>,
    violations: Vec<Vec<Word>>,
}

fn run_range(statements: &[Statement], n: usize, start: u64, end: u64) -> RangeOutcome {
    let mut outcome = RangeOutcome {
        checked: vec![0; statements.len()],
        violations: vec![Vec::new(); statements.len()],
    };
    for word in enumerate_binary_range(n, start, end).expect("within budget") {
        let analysis = Analysis::compute(word);
        for (i, &stmt) in statements.iter().enumerate() {
            if applies(stmt, &analysis) {
                outcome.checked[i] += 1;
                if !holds(stmt, &analysis) {
                    outcome.violations[i].push(analysis.word.clone());
                }
            }
        }
    }
    outcome
}

/// Runs the selected statements (all 17 by default) over every binary word
/// of each length `1..=max_len`.
///
/// By default the sweep halts at the end of the first length that produced
/// a violation, since a single violation means an implementation bug;
/// `accumulate` keeps going and gathers every witness instead.
pub fn verify_statements(
    max_len: usize,
    filter: Option<&[Statement]>,
    accumulate: bool,
    workers: usize,
) -> Result<VerificationReport> {
    if max_len > MAX_VERIFY_LEN {
        return Err(Error::BudgetExceeded {
            requested: max_len,
            budget: MAX_VERIFY_LEN,
        });
    }
    let statements: Vec<Statement> = match filter {
        Some(list) => {
            let mut seen = Vec::new();
            for s in list {
                if !seen.contains(s) {
                    seen.push(*s);
                }
            }
            seen
        }
        None => Statement::ALL.to_vec(),
    };

    let start_time = Instant::now();
    let mut checked = vec![0u64; statements.len()];
    let mut violations: Vec<Vec<Word>> = vec![Vec::new(); statements.len()];

    for n in 1..=max_len {
        let ranges = partition_ranges(n, workers);
        let outcomes: Vec<RangeOutcome> = if workers <= 1 {
            vec![run_range(&statements, n, 0, 1u64 << n)]
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> = ranges
                    .iter()
                    .map(|&(start, end)| {
                        let stmts = &statements;
                        scope.spawn(move || run_range(stmts, n, start, end))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("verify worker panicked"))
                    .collect()
            })
        };
        // merging in partition order keeps witness order deterministic
        for outcome in outcomes {
            for i in 0..statements.len() {
                checked[i] += outcome.checked[i];
                violations[i].extend(outcome.violations[i].iter().cloned());
            }
        }
        if !accumulate && violations.iter().any(|v| !v.is_empty()) {
            break;
        }
    }

    Ok(VerificationReport {
        max_length: max_len,
        checks: statements
            .iter()
            .zip(checked)
            .zip(violations)
            .map(
                |((&statement, words_checked), violations)| StatementReport {
                    statement,
                    words_checked,
                    violations,
                },
            )
            .collect(),
        elapsed: start_time.elapsed(),
    })
}
