//! Block-wise naive matcher: every shift, masked byte compares.

use alloc::vec::Vec;

use crate::bitstring::BitString;
use crate::error::{check_lengths, Result};
use crate::report::{CountingText, MatchReport};
use crate::tables::{preprocess, ShiftedPatternTables};
use crate::BLOCK_BITS;

/// Tests every shift `s = 0 ..= n - m` against row `s % 8` of the tables.
pub fn naive_search(p: &BitString, t: &BitString) -> Result<MatchReport> {
    check_lengths(p.bit_len(), t.bit_len())?;
    let tables = preprocess(p)?;
    Ok(search_with(&tables, t))
}

pub(crate) fn search_with(tables: &ShiftedPatternTables, t: &BitString) -> MatchReport {
    let (m, n) = (tables.m(), t.bit_len());
    let mut text = CountingText::new(t.blocks());
    let mut occurrences = Vec::new();
    if m > n {
        return text.into_report(occurrences);
    }
    // s = w * 8 + i
    let (mut w, mut i) = (0usize, 0usize);
    for s in 0..=n - m {
        let last = tables.last(i);
        let mut h = 0;
        while h <= last && text.compare(w + h, tables.patt(i, h), tables.mask(i, h)) {
            h += 1;
        }
        if h > last {
            occurrences.push(s);
        }
        i += 1;
        if i == BLOCK_BITS {
            w += 1;
            i = 0;
        }
    }
    text.into_report(occurrences)
}
