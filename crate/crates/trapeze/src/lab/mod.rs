//! Exhaustive enumeration and verification: lexicographic streams of binary
//! words, per-length census tables, the statement-verification harness, and
//! the open-Sturmian exploration dataset.

mod census;
mod enumerate;
mod explore;
mod verify;

pub use census::{census, census_csv, CensusRow, CENSUS_NOTE};
pub use enumerate::{
    enumerate_binary, enumerate_binary_range, partition_ranges, BinaryWords, MAX_ENUM_LEN,
};
pub use explore::{explore_csv, explore_open_sturmian, OpenSturmianRow};
pub use verify::{
    verify_statements, Statement, StatementReport, VerificationReport, MAX_VERIFY_LEN,
};
