use alloc::vec::Vec;

use crate::bitstring::window_ending_at;

/// Text accesses made during one search.
///
/// `text_block_reads` counts every byte of the text that is touched, whether
/// to compare it against the pattern or to pick the next shift.
/// `block_comparisons` counts only masked pattern-vs-text byte compares.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InspectionCounter {
    /// Total text bytes read.
    pub text_block_reads: u64,
    /// Masked block compares against the shifted pattern tables.
    pub block_comparisons: u64,
}

impl InspectionCounter {
    /// Text bytes read per byte of text (`reads / ceil(n / 8)`).
    pub fn per_text_byte(&self, text_bits: usize) -> f64 {
        let bytes = text_bits.div_ceil(crate::BLOCK_BITS);
        if bytes == 0 {
            0.0
        } else {
            self.text_block_reads as f64 / bytes as f64
        }
    }
}

/// Result of a search: all valid shifts, ascending, plus access counts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchReport {
    /// Start bit offsets of every occurrence, strictly increasing.
    pub occurrences: Vec<usize>,
    /// Text accesses made by the search.
    pub inspections: InspectionCounter,
}

/// Text blocks behind a counter. All matchers go through this so that the
/// access accounting is uniform.
pub(crate) struct CountingText<'a> {
    blocks: &'a [u8],
    pub(crate) counter: InspectionCounter,
}

impl<'a> CountingText<'a> {
    pub(crate) fn new(blocks: &'a [u8]) -> Self {
        CountingText {
            blocks,
            counter: InspectionCounter::default(),
        }
    }

    #[inline]
    pub(crate) fn block(&mut self, j: usize) -> u8 {
        self.counter.text_block_reads += 1;
        self.blocks[j]
    }

    /// One masked compare: `expected == T[j] & mask`.
    #[inline]
    pub(crate) fn compare(&mut self, j: usize, expected: u8, mask: u8) -> bool {
        self.counter.block_comparisons += 1;
        self.block(j) & mask == expected
    }

    #[inline]
    pub(crate) fn window(&mut self, end_bit: usize) -> u8 {
        let reads = if end_bit % crate::BLOCK_BITS == crate::BLOCK_BITS - 1 {
            1
        } else {
            2
        };
        self.counter.text_block_reads += reads;
        window_ending_at(self.blocks, end_bit)
    }

    pub(crate) fn into_report(self, occurrences: Vec<usize>) -> MatchReport {
        MatchReport {
            occurrences,
            inspections: self.counter,
        }
    }
}
