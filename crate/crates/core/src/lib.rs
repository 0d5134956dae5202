//! Exact search for binary patterns inside binary data, at arbitrary bit
//! offsets, while reading the data only in whole bytes.
//!
//! Pattern and text are [`BitString`]s: bit sequences packed MSB-first into
//! bytes. Every matcher is built on [`ShiftedPatternTables`], which stores the
//! pattern pre-shifted by each of the eight possible bit offsets together with
//! per-byte masks, so checking an alignment is a short run of masked byte
//! compares.
//!
//! Four matchers share one output type, [`MatchReport`]:
//!
//! * [`oracle_search`]: bit-by-bit reference, obviously correct and slow.
//! * [`naive_search`]: tests every shift with masked byte compares.
//! * [`hash_search`]: skips ahead using a 256-entry table indexed by the
//!   byte-sized text window under the pattern's right edge.
//! * [`skip_search`]: samples one text byte every few bytes and verifies only
//!   the alignments that byte's bucket proposes.
//!
//! Each report carries an [`InspectionCounter`] with the number of text bytes
//! read, which is the cost metric used by the benchmark harness.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod algorithm;
mod bitstring;
mod error;
mod hash;
mod naive;
mod oracle;
mod report;
mod skip;
mod tables;

pub use algorithm::{Algorithm, Searcher};
pub use bitstring::{BitString, BitWindow};
pub use error::{Error, Result};
pub use hash::{compute_hash, hash_search, HashShiftTable};
pub use naive::naive_search;
pub use oracle::oracle_search;
pub use report::{InspectionCounter, MatchReport};
pub use skip::{precompute_skip, skip_search, SkipBuckets};
pub use tables::{preprocess, row_matches_at, ShiftedPatternTables};

/// Number of bits in one block. Fixed: every table is sized for bytes.
pub const BLOCK_BITS: usize = 8;

/// Number of distinct block values, and so the size of every per-block table.
pub const BLOCK_VALUES: usize = 1 << BLOCK_BITS;
