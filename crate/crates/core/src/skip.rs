//! Skip-search matcher.
//!
//! Only every `advance`-th text block is read in the main loop. Each pattern
//! block that lies entirely inside the pattern's block-aligned suffix of
//! length `8 * floor(m/8)` is filed in a bucket under its byte value, so the
//! examined text block names every alignment it could belong to. Those
//! alignments, and only those, are verified.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitstring::{blocks_for, BitString};
use crate::error::{check_lengths, Error, Result};
use crate::report::{CountingText, MatchReport};
use crate::tables::{preprocess, ShiftedPatternTables};
use crate::{BLOCK_BITS, BLOCK_VALUES};

/// Minimum pattern length accepted by [`skip_search`].
pub const MIN_SKIP_BITS: usize = 2 * BLOCK_BITS;

/// Buckets of `(row, block)` positions in `Patt`, keyed by block value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkipBuckets {
    // bucket b is pairs[offsets[b]..offsets[b + 1]]
    offsets: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    advance: usize,
    tables: ShiftedPatternTables,
}

/// Fills the buckets from the pattern tables. Needs `m >= 16`.
///
/// `O(m + 256)` time.
pub fn precompute_skip(tables: ShiftedPatternTables) -> Result<SkipBuckets> {
    let m = tables.m();
    if m < MIN_SKIP_BITS {
        return Err(Error::PatternTooShort {
            algorithm: "skip",
            m,
            min: MIN_SKIP_BITS,
        });
    }
    // walk the factors j = 0 ..= m-8; factor j sits at Patt[(8 - j%8) % 8][ceil(j/8)]
    let mut eligible = Vec::with_capacity(m - BLOCK_BITS + 1);
    let (mut i, mut h) = (0usize, 0usize);
    for j in 0..=m - BLOCK_BITS {
        if j >= m % BLOCK_BITS {
            eligible.push((tables.patt(i, h), (i, h)));
        }
        if i == 0 {
            i = BLOCK_BITS - 1;
            h += 1;
        } else {
            i -= 1;
        }
    }

    // counting sort into a flat layout; insertion order kept within a bucket
    let mut offsets = vec![0usize; BLOCK_VALUES + 1];
    for &(b, _) in &eligible {
        offsets[b as usize + 1] += 1;
    }
    for b in 0..BLOCK_VALUES {
        offsets[b + 1] += offsets[b];
    }
    let mut fill = offsets.clone();
    let mut pairs = vec![(0, 0); eligible.len()];
    for (b, pair) in eligible {
        pairs[fill[b as usize]] = pair;
        fill[b as usize] += 1;
    }

    Ok(SkipBuckets {
        offsets,
        pairs,
        advance: (m / BLOCK_BITS - 1).max(1),
        tables,
    })
}

impl SkipBuckets {
    /// Builds tables and buckets for `p`.
    pub fn new(p: &BitString) -> Result<SkipBuckets> {
        precompute_skip(preprocess(p)?)
    }

    /// The `(row, block)` pairs whose `Patt` cell equals `b`.
    #[inline]
    pub fn bucket(&self, b: u8) -> &[(usize, usize)] {
        &self.pairs[self.offsets[b as usize]..self.offsets[b as usize + 1]]
    }

    /// Total number of pairs over all buckets.
    pub fn total_pairs(&self) -> usize {
        self.pairs.len()
    }

    /// Distance, in blocks, between examined text blocks.
    #[inline]
    pub fn advance(&self) -> usize {
        self.advance
    }

    /// Index of the first examined text block.
    #[inline]
    pub fn first_examined(&self) -> usize {
        self.advance - 1
    }

    /// The pattern tables this was built from.
    pub fn tables(&self) -> &ShiftedPatternTables {
        &self.tables
    }

    /// Runs the search over `t`.
    pub fn find_all(&self, t: &BitString) -> Result<MatchReport> {
        check_lengths(self.tables.m(), t.bit_len())?;
        Ok(self.search(t))
    }

    fn search(&self, t: &BitString) -> MatchReport {
        let tables = &self.tables;
        let (m, n) = (tables.m(), t.bit_len());
        let text_blocks = blocks_for(n);
        let mut text = CountingText::new(t.blocks());
        let mut occurrences = Vec::new();

        let mut j = self.first_examined();
        while j < text_blocks {
            let b = text.block(j);
            for &(i, pos) in self.bucket(b) {
                // the alignment puts Patt[i][0] over text block j - pos
                let Some(first) = j.checked_sub(pos) else {
                    continue;
                };
                let s = first * BLOCK_BITS + i;
                if s + m > n {
                    continue;
                }
                let verified = (0..=tables.last(i))
                    .all(|h| text.compare(first + h, tables.patt(i, h), tables.mask(i, h)));
                if verified {
                    occurrences.push(s);
                }
            }
            j += self.advance;
        }
        // one shift can be proposed from two examined blocks
        occurrences.sort_unstable();
        occurrences.dedup();
        text.into_report(occurrences)
    }
}

/// Skip-search for `p` in `t`. Requires `16 <= m <= n`.
pub fn skip_search(p: &BitString, t: &BitString) -> Result<MatchReport> {
    check_lengths(p.bit_len(), t.bit_len())?;
    SkipBuckets::new(p)?.find_all(t)
}
