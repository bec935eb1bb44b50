//! Shared input builders for the benchmarks.

use trapeze::Word;

/// Prefix of the Fibonacci word of the requested length: the canonical
/// aperiodic balanced sequence, so classification never short-circuits.
pub fn fibonacci_prefix(len: usize) -> Word {
    let mut prev = "b".to_string();
    let mut cur = "a".to_string();
    while cur.len() < len {
        let next = format!("{cur}{prev}");
        prev = cur;
        cur = next;
    }
    Word::parse(&cur[..len]).expect("two letters")
}

/// A deliberately unbalanced word of the requested length, built so the
/// factorization path has work to do.
pub fn unbalanced_sample(len: usize) -> Word {
    let mut s = String::from("aaabab");
    while s.len() < len {
        s.push_str("ab");
    }
    s.truncate(len.max(6));
    Word::parse(&s).expect("two letters")
}
