//! Bit-at-a-time reference matcher.

use alloc::vec::Vec;

use crate::bitstring::BitString;
use crate::error::{check_lengths, Result};
use crate::report::{InspectionCounter, MatchReport};

/// Finds every valid shift by comparing single bits, left to right, with no
/// skipping. Each text bit fetched counts as one block read.
pub fn oracle_search(p: &BitString, t: &BitString) -> Result<MatchReport> {
    let (m, n) = (p.bit_len(), t.bit_len());
    check_lengths(m, n)?;
    let mut reads = 0u64;
    let mut occurrences = Vec::new();
    for s in 0..=n - m {
        let mut i = 0;
        while i < m {
            reads += 1;
            if t.bit(s + i) != p.bit(i) {
                break;
            }
            i += 1;
        }
        if i == m {
            occurrences.push(s);
        }
    }
    Ok(MatchReport {
        occurrences,
        inspections: InspectionCounter {
            text_block_reads: reads,
            block_comparisons: 0,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use alloc::vec;

    fn bits(s: &str) -> BitString {
        BitString::from_bits(s).unwrap()
    }

    #[test]
    fn introduction_example() {
        let t = bits("011001001000100110100101000101001001");
        let r = oracle_search(&bits("0100110100"), &t).unwrap();
        assert!(r.occurrences.contains(&11));
    }

    #[test]
    fn self_match_and_all_shifts() {
        let p = bits("110010110010110010110");
        assert_eq!(oracle_search(&p, &p).unwrap().occurrences, vec![0]);
        let zeros = BitString::from_bit_iter([false; 16]);
        let r = oracle_search(&bits("000"), &zeros).unwrap();
        assert_eq!(r.occurrences, (0..14).collect::<Vec<_>>());
        assert_eq!(r.inspections.text_block_reads, 14 * 3);
    }

    #[test]
    fn domain_errors() {
        let t = bits("0101");
        assert_eq!(
            oracle_search(&BitString::default(), &t),
            Err(Error::EmptyPattern)
        );
        assert_eq!(
            oracle_search(&bits("01010"), &t),
            Err(Error::PatternLongerThanText { m: 5, n: 4 })
        );
    }

    #[test]
    fn agrees_with_string_search_on_small_inputs() {
        // independent double loop over the rendered strings
        for text in 0u32..(1 << 10) {
            let ts: alloc::string::String = (0..10)
                .map(|i| if text >> (9 - i) & 1 == 1 { '1' } else { '0' })
                .collect();
            for pat in ["0", "1", "01", "110", "0101", "1111"] {
                let expected: Vec<usize> = (0..=ts.len() - pat.len())
                    .filter(|&s| &ts[s..s + pat.len()] == pat)
                    .collect();
                let got = oracle_search(&bits(pat), &bits(&ts)).unwrap().occurrences;
                assert_eq!(got, expected, "text {ts} pattern {pat}");
            }
        }
    }
}
