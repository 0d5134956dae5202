//! Hash-table matcher in the Wu-Manber / q-Hash style, with the hash replaced
//! by the raw value of the byte-sized text window.
//!
//! The window examined is the eight text bits under the last eight bits of the
//! current alignment. `hs[window]` says how far the alignment can move right
//! before the pattern could agree with that window again. A zero entry
//! means the window equals the pattern's suffix, so the whole alignment is
//! verified and then moved by `shift`.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::bitstring::BitString;
use crate::error::{check_lengths, Error, Result};
use crate::report::{CountingText, MatchReport};
use crate::tables::{preprocess, ShiftedPatternTables};
use crate::{BLOCK_BITS, BLOCK_VALUES};

/// Advancement table for [`hash_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HashShiftTable {
    hs: Box<[usize; BLOCK_VALUES]>,
    shift: usize,
    tables: ShiftedPatternTables,
}

/// Builds the advancement table from the pattern tables. Needs `m >= 8`.
///
/// `O(m + 8 * 256)` time.
pub fn compute_hash(tables: ShiftedPatternTables) -> Result<HashShiftTable> {
    let m = tables.m();
    if m < BLOCK_BITS {
        return Err(Error::PatternTooShort {
            algorithm: "hash",
            m,
            min: BLOCK_BITS,
        });
    }
    let mut hs = Box::new([m; BLOCK_VALUES]);

    // Alignments that overlap the window by fewer than eight bits: only the
    // pattern prefix of length 8 - i has to agree with the window's low bits.
    // Descending i so the smallest advancement is written last.
    for i in (1..BLOCK_BITS).rev() {
        let (pb, mb) = (tables.patt(i, 0), tables.mask(i, 0));
        for (b, slot) in hs.iter_mut().enumerate() {
            if b as u8 & mb == pb {
                *slot = m - BLOCK_BITS + i;
            }
        }
    }

    // Full eight-bit factors starting at j = 0 .. m-9, each stored at
    // Patt[(8 - j%8) % 8][ceil(j/8)]; later (rightmost) factors win.
    let (mut i, mut h) = (0usize, 0usize);
    for j in 0..m - BLOCK_BITS {
        hs[tables.patt(i, h) as usize] = m - BLOCK_BITS - j;
        if i == 0 {
            i = BLOCK_BITS - 1;
            h += 1;
        } else {
            i -= 1;
        }
    }

    // The pattern suffix: keep its advancement for use after a verification
    // and mark it with the 0 sentinel.
    let gap = tables.gap();
    let suffix = tables.patt(gap, tables.last(gap)) as usize;
    let shift = hs[suffix];
    hs[suffix] = 0;

    Ok(HashShiftTable { hs, shift, tables })
}

impl HashShiftTable {
    /// Builds tables and advancement table for `p`.
    pub fn new(p: &BitString) -> Result<HashShiftTable> {
        compute_hash(preprocess(p)?)
    }

    /// Advancement for window value `b`; 0 means "verify".
    #[inline]
    pub fn hs(&self, b: u8) -> usize {
        self.hs[b as usize]
    }

    /// The full 256-entry table.
    pub fn hs_table(&self) -> &[usize; BLOCK_VALUES] {
        &self.hs
    }

    /// Advancement applied after every verification.
    #[inline]
    pub fn shift(&self) -> usize {
        self.shift
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
        let (m, n) = (self.tables.m(), t.bit_len());
        let mut text = CountingText::new(t.blocks());
        let mut occurrences = Vec::new();
        // bit index of the text under the pattern's last bit
        let mut end = m - 1;
        while end < n {
            let b = text.window(end);
            let advance = self.hs[b as usize];
            if advance != 0 {
                end += advance;
                continue;
            }
            let s = end + 1 - m;
            if self.verify_right_to_left(&mut text, s) {
                occurrences.push(s);
            }
            end += self.shift;
        }
        text.into_report(occurrences)
    }

    fn verify_right_to_left(&self, text: &mut CountingText<'_>, s: usize) -> bool {
        let tables = &self.tables;
        let i = s % BLOCK_BITS;
        let j = s / BLOCK_BITS;
        (0..=tables.last(i))
            .rev()
            .all(|h| text.compare(j + h, tables.patt(i, h), tables.mask(i, h)))
    }
}

/// Hash-table search for `p` in `t`. Requires `8 <= m <= n`.
pub fn hash_search(p: &BitString, t: &BitString) -> Result<MatchReport> {
    check_lengths(p.bit_len(), t.bit_len())?;
    HashShiftTable::new(p)?.find_all(t)
}
