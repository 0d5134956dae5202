//! The shifted-copy tables shared by every block matcher.
//!
//! Row `i` holds the pattern shifted right by `i` bits, so an alignment at
//! text bit `s` is checked against row `s % 8` starting at text block `s / 8`.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitstring::{blocks_for, BitString};
use crate::error::{Error, Result};
use crate::report::{CountingText, InspectionCounter};
use crate::BLOCK_BITS;

/// `Patt`, `Mask` and `Last` for one pattern.
///
/// Both matrices are dense, `8 x (ceil(m/8) + 1)`; cells past `last[i]` are
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedPatternTables {
    m: usize,
    columns: usize,
    patt: Vec<u8>,
    mask: Vec<u8>,
    last: [usize; BLOCK_BITS],
}

/// Builds the tables for pattern `p` in `O(m)`.
pub fn preprocess(p: &BitString) -> Result<ShiftedPatternTables> {
    let m = p.bit_len();
    if m == 0 {
        return Err(Error::EmptyPattern);
    }
    let pattern = p.blocks();
    // all-ones mask over the m pattern bits, zero padded to whole blocks
    let mut full_mask = vec![0xFFu8; blocks_for(m)];
    let tail = m % BLOCK_BITS;
    if tail != 0 {
        *full_mask.last_mut().unwrap() = !(0xFFu8 >> tail);
    }

    let columns = blocks_for(m) + 1;
    let mut patt = vec![0u8; BLOCK_BITS * columns];
    let mut mask = vec![0u8; BLOCK_BITS * columns];
    let mut last = [0usize; BLOCK_BITS];

    let at = |blocks: &[u8], h: usize| blocks.get(h).copied().unwrap_or(0);
    for (i, last_i) in last.iter_mut().enumerate() {
        *last_i = (m + i).div_ceil(BLOCK_BITS) - 1;
        for h in 0..=*last_i {
            let mut pb = at(pattern, h) >> i;
            let mut mb = at(&full_mask, h) >> i;
            if h > 0 && i > 0 {
                pb |= at(pattern, h - 1) << (BLOCK_BITS - i);
                mb |= at(&full_mask, h - 1) << (BLOCK_BITS - i);
            }
            patt[i * columns + h] = pb;
            mask[i * columns + h] = mb;
        }
    }

    Ok(ShiftedPatternTables {
        m,
        columns,
        patt,
        mask,
        last,
    })
}

impl ShiftedPatternTables {
    /// Pattern length in bits.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of stored columns, `ceil(m/8) + 1`.
    #[inline]
    pub fn columns(&self) -> usize {
        self.columns
    }

    /// `(8 - m % 8) % 8`: the row in which the pattern ends on a block boundary.
    #[inline]
    pub fn gap(&self) -> usize {
        (BLOCK_BITS - self.m % BLOCK_BITS) % BLOCK_BITS
    }

    /// Block `h` of the pattern shifted right by `i` bits.
    #[inline]
    pub fn patt(&self, i: usize, h: usize) -> u8 {
        self.patt[i * self.columns + h]
    }

    /// Which bits of `patt(i, h)` belong to the pattern.
    #[inline]
    pub fn mask(&self, i: usize, h: usize) -> u8 {
        self.mask[i * self.columns + h]
    }

    /// Zero-based index of the final block of row `i`.
    #[inline]
    pub fn last(&self, i: usize) -> usize {
        self.last[i]
    }

    /// The whole `Last` array.
    #[inline]
    pub fn last_table(&self) -> &[usize; BLOCK_BITS] {
        &self.last
    }

    /// Row `i` of `Patt`, up to and including `last(i)`.
    pub fn patt_row(&self, i: usize) -> &[u8] {
        &self.patt[i * self.columns..=i * self.columns + self.last[i]]
    }

    /// Row `i` of `Mask`, up to and including `last(i)`.
    pub fn mask_row(&self, i: usize) -> &[u8] {
        &self.mask[i * self.columns..=i * self.columns + self.last[i]]
    }

    /// Checks the alignment at text bit `s`, left to right. The caller
    /// guarantees `s + m <= n`.
    #[inline]
    pub(crate) fn matches_at(&self, text: &mut CountingText<'_>, s: usize) -> bool {
        let i = s % BLOCK_BITS;
        let j = s / BLOCK_BITS;
        let base = i * self.columns;
        (0..=self.last[i]).all(|h| text.compare(j + h, self.patt[base + h], self.mask[base + h]))
    }
}

/// Tests whether the pattern occurs at text bit `s` by comparing the masked
/// text blocks against row `s % 8`. Every text block read is added to
/// `counter`.
pub fn row_matches_at(
    tables: &ShiftedPatternTables,
    t: &BitString,
    s: usize,
    counter: &mut InspectionCounter,
) -> Result<bool> {
    let n = t.bit_len();
    if tables.m > n || s > n - tables.m {
        return Err(Error::IndexOutOfRange {
            index: s,
            min: 0,
            len: (n + 1).saturating_sub(tables.m),
        });
    }
    let mut text = CountingText::new(t.blocks());
    let found = tables.matches_at(&mut text, s);
    counter.text_block_reads += text.counter.text_block_reads;
    counter.block_comparisons += text.counter.block_comparisons;
    Ok(found)
}
