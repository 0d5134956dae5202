use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::bitstring::BitString;
use crate::error::{check_lengths, Error, Result};
use crate::hash::HashShiftTable;
use crate::oracle::oracle_search;
use crate::report::MatchReport;
use crate::skip::{SkipBuckets, MIN_SKIP_BITS};
use crate::tables::{preprocess, ShiftedPatternTables};
use crate::{naive, BLOCK_BITS};

/// The available matchers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Bit-at-a-time reference.
    Oracle,
    /// Block-wise, every shift.
    Naive,
    /// Window-indexed advancement table; `m >= 8`.
    Hash,
    /// Sampled blocks with buckets; `m >= 16`.
    Skip,
}

impl Algorithm {
    /// All matchers, reference first.
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Oracle,
        Algorithm::Naive,
        Algorithm::Hash,
        Algorithm::Skip,
    ];

    /// Lower-case name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Naive => "naive",
            Algorithm::Hash => "hash",
            Algorithm::Skip => "skip",
        }
    }

    /// Shortest pattern, in bits, the matcher accepts.
    pub fn min_pattern_bits(self) -> usize {
        match self {
            Algorithm::Oracle | Algorithm::Naive => 1,
            Algorithm::Hash => BLOCK_BITS,
            Algorithm::Skip => MIN_SKIP_BITS,
        }
    }

    /// Whether a pattern of `m` bits is within this matcher's domain.
    pub fn accepts(self, m: usize) -> bool {
        m >= self.min_pattern_bits()
    }

    /// Picks a matcher for a pattern of `m` bits: skip from 16 bits, hash
    /// from 8, the oracle below that.
    pub fn auto(m: usize) -> Algorithm {
        if m >= MIN_SKIP_BITS {
            Algorithm::Skip
        } else if m >= BLOCK_BITS {
            Algorithm::Hash
        } else {
            Algorithm::Oracle
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

/// A pattern preprocessed for one matcher, reusable across texts.
#[derive(Clone, Debug)]
pub enum Searcher {
    /// Keeps the raw pattern.
    Oracle(BitString),
    /// Shifted tables only.
    Naive(ShiftedPatternTables),
    /// Tables plus advancement table.
    Hash(HashShiftTable),
    /// Tables plus buckets.
    Skip(SkipBuckets),
}

impl Searcher {
    /// Runs the preprocessing of `algorithm` for pattern `p`.
    pub fn new(algorithm: Algorithm, p: &BitString) -> Result<Searcher> {
        if p.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(match algorithm {
            Algorithm::Oracle => Searcher::Oracle(p.clone()),
            Algorithm::Naive => Searcher::Naive(preprocess(p)?),
            Algorithm::Hash => Searcher::Hash(HashShiftTable::new(p)?),
            Algorithm::Skip => Searcher::Skip(SkipBuckets::new(p)?),
        })
    }

    /// Which matcher this is.
    pub fn algorithm(&self) -> Algorithm {
        match self {
            Searcher::Oracle(_) => Algorithm::Oracle,
            Searcher::Naive(_) => Algorithm::Naive,
            Searcher::Hash(_) => Algorithm::Hash,
            Searcher::Skip(_) => Algorithm::Skip,
        }
    }

    /// Pattern length in bits.
    pub fn pattern_bits(&self) -> usize {
        match self {
            Searcher::Oracle(p) => p.bit_len(),
            Searcher::Naive(t) => t.m(),
            Searcher::Hash(h) => h.tables().m(),
            Searcher::Skip(s) => s.tables().m(),
        }
    }

    /// Finds every occurrence in `t`.
    pub fn find_all(&self, t: &BitString) -> Result<MatchReport> {
        match self {
            Searcher::Oracle(p) => oracle_search(p, t),
            Searcher::Naive(tables) => {
                check_lengths(tables.m(), t.bit_len())?;
                Ok(naive::search_with(tables, t))
            }
            Searcher::Hash(h) => h.find_all(t),
            Searcher::Skip(s) => s.find_all(t),
        }
    }
}
