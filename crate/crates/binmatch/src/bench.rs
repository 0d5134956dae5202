//! Random binary text benchmark.
//!
//! A problem is a text of `text_bits` independent bits, each 0 with
//! probability `gamma` percent, and for each pattern length a set of patterns
//! copied out of the text at uniform random offsets. Every search therefore
//! has at least one occurrence.
//!
//! The main figure is text bytes read per text byte: a search's
//! [`InspectionCounter::text_block_reads`](binmatch_core::InspectionCounter)
//! divided by `ceil(text_bits / 8)`, averaged over the patterns of one length.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64(seed)`. Text bits are drawn first, in order, with
//! `random_bool(gamma / 100)` deciding a 0; then, per length in the order
//! given and per pattern, one `random_range(0..=n - m)` start offset.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::time::Instant;

use binmatch_core::{oracle_search, Algorithm, BitString, Searcher};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Reference pattern-length grid: 20, 60, ..., 500.
pub const REFERENCE_LENGTHS: [usize; 13] = [
    20, 60, 100, 140, 180, 220, 260, 300, 340, 380, 420, 460, 500,
];

/// One search in this many is cross-checked against the oracle.
pub const ORACLE_SAMPLE_EVERY: usize = 100;

/// Parameters of a random-text problem.
#[derive(Clone, Debug, PartialEq)]
pub struct RandProblem {
    /// Percentage of zero bits, strictly between 0 and 100.
    pub gamma: f64,
    /// Text length in bits.
    pub text_bits: usize,
    /// Pattern lengths in bits.
    pub pattern_lengths: Vec<usize>,
    /// Patterns drawn per length.
    pub patterns_per_length: usize,
    /// Generator seed.
    pub seed: u64,
}

impl Default for RandProblem {
    fn default() -> Self {
        RandProblem {
            gamma: 50.0,
            text_bits: 4_000_000,
            pattern_lengths: REFERENCE_LENGTHS.to_vec(),
            patterns_per_length: 100,
            seed: 1,
        }
    }
}

impl RandProblem {
    fn validate(&self) -> Result<()> {
        if !(self.gamma > 0.0 && self.gamma < 100.0) {
            return Err(Error::Problem(format!(
                "gamma {} must lie strictly between 0 and 100",
                self.gamma
            )));
        }
        if let Some(&m) = self
            .pattern_lengths
            .iter()
            .find(|&&m| m == 0 || m > self.text_bits)
        {
            return Err(Error::Problem(format!(
                "pattern length {m} must lie in 1..={}",
                self.text_bits
            )));
        }
        Ok(())
    }
}

/// A pattern copied out of the generated text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledPattern {
    /// Where in the text it was copied from.
    pub start: usize,
    /// The pattern itself.
    pub bits: BitString,
}

/// Text and patterns of a generated problem.
#[derive(Clone, Debug, PartialEq)]
pub struct Workload {
    pub text: BitString,
    /// Patterns grouped by length, in the order of `pattern_lengths`.
    pub patterns: Vec<(usize, Vec<SampledPattern>)>,
}

impl Workload {
    /// Fraction of zero bits in the text.
    pub fn zero_fraction(&self) -> f64 {
        let ones: u64 = self
            .text
            .blocks()
            .iter()
            .map(|b| b.count_ones() as u64)
            .sum();
        let n = self.text.bit_len();
        if n == 0 {
            0.0
        } else {
            1.0 - ones as f64 / n as f64
        }
    }
}

/// Generates text and patterns, deterministically in `problem.seed`.
pub fn generate(problem: &RandProblem) -> Result<Workload> {
    problem.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(problem.seed);
    let p_zero = problem.gamma / 100.0;
    let text = BitString::from_bit_iter((0..problem.text_bits).map(|_| !rng.random_bool(p_zero)));
    let mut patterns = Vec::with_capacity(problem.pattern_lengths.len());
    for &m in &problem.pattern_lengths {
        let group = (0..problem.patterns_per_length)
            .map(|_| {
                let start = rng.random_range(0..=problem.text_bits - m);
                let bits = text.sub_bits(start, m).expect("start drawn within range");
                SampledPattern { start, bits }
            })
            .collect();
        patterns.push((m, group));
    }
    Ok(Workload { text, patterns })
}

/// Averages for one matcher at one pattern length.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub gamma: f64,
    pub m: usize,
    /// Mean wall time of the search phase, nanoseconds.
    pub mean_time_ns: f64,
    /// Mean wall time of preprocessing, nanoseconds.
    pub mean_preprocess_ns: f64,
    /// Mean text bytes read per text byte.
    pub mean_inspections_per_byte: f64,
    pub patterns: usize,
    pub seed: u64,
}

/// Runs every algorithm on every pattern of `workload`.
pub fn run_workload(
    problem: &RandProblem,
    workload: &Workload,
    algorithms: &[Algorithm],
) -> Result<Vec<BenchRecord>> {
    if algorithms.is_empty() {
        return Err(Error::Problem("no algorithms selected".into()));
    }
    let text = &workload.text;
    let mut records = Vec::new();
    for (m, group) in &workload.patterns {
        for &algorithm in algorithms {
            let (mut search_ns, mut prep_ns, mut per_byte) = (0u128, 0u128, 0f64);
            for (k, pattern) in group.iter().enumerate() {
                let started = Instant::now();
                let searcher = Searcher::new(algorithm, &pattern.bits)?;
                prep_ns += started.elapsed().as_nanos();

                let started = Instant::now();
                let report = searcher.find_all(text)?;
                search_ns += started.elapsed().as_nanos();

                per_byte += report.inspections.per_text_byte(text.bit_len());
                let sampled = k % ORACLE_SAMPLE_EVERY == 0 && algorithm != Algorithm::Oracle;
                if sampled {
                    let expected = oracle_search(&pattern.bits, text)?.occurrences;
                    if report.occurrences != expected {
                        return Err(Error::Mismatch {
                            algorithm,
                            got: report.occurrences,
                            expected,
                        });
                    }
                } else if report.occurrences.binary_search(&pattern.start).is_err() {
                    return Err(Error::Mismatch {
                        algorithm,
                        got: report.occurrences,
                        expected: vec![pattern.start],
                    });
                }
            }
            let count = group.len().max(1) as f64;
            records.push(BenchRecord {
                algorithm,
                gamma: problem.gamma,
                m: *m,
                mean_time_ns: search_ns as f64 / count,
                mean_preprocess_ns: prep_ns as f64 / count,
                mean_inspections_per_byte: per_byte / count,
                patterns: group.len(),
                seed: problem.seed,
            });
        }
    }
    Ok(records)
}

/// Fails if some pattern length is below an algorithm's minimum.
pub fn check_lengths(problem: &RandProblem, algorithms: &[Algorithm]) -> Result<()> {
    for &algorithm in algorithms {
        if let Some(&m) = problem
            .pattern_lengths
            .iter()
            .find(|&&m| !algorithm.accepts(m))
        {
            return Err(Error::Core(binmatch_core::Error::PatternTooShort {
                algorithm: algorithm.name(),
                m,
                min: algorithm.min_pattern_bits(),
            }));
        }
    }
    Ok(())
}

/// Generates the problem and benchmarks `algorithms` on it.
pub fn run_bench(problem: &RandProblem, algorithms: &[Algorithm]) -> Result<Vec<BenchRecord>> {
    check_lengths(problem, algorithms)?;
    let workload = generate(problem)?;
    run_workload(problem, &workload, algorithms)
}

/// CSV column header.
pub const CSV_HEADER: &str = "algo,gamma,m,mean_time_ns,mean_inspections_per_byte,patterns,seed";

/// Writes records as CSV, preceded by a `#` metadata line.
pub fn write_csv<W: Write>(
    mut out: W,
    problem: &RandProblem,
    zero_fraction: f64,
    records: &[BenchRecord],
) -> io::Result<()> {
    writeln!(
        out,
        "# gamma={} text_bits={} zero_fraction={zero_fraction:.6} patterns_per_length={} seed={}",
        problem.gamma, problem.text_bits, problem.patterns_per_length, problem.seed
    )?;
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{:.0},{:.4},{},{}",
            r.algorithm,
            r.gamma,
            r.m,
            r.mean_time_ns,
            r.mean_inspections_per_byte,
            r.patterns,
            r.seed
        )?;
    }
    Ok(())
}

/// Inspections per byte laid out with one row per pattern length and one
/// column per algorithm.
pub fn pretty_table(records: &[BenchRecord]) -> String {
    let mut algorithms: Vec<Algorithm> = records.iter().map(|r| r.algorithm).collect();
    algorithms.sort();
    algorithms.dedup();
    let mut lengths: Vec<usize> = records.iter().map(|r| r.m).collect();
    lengths.dedup();

    let mut out = String::new();
    let _ = write!(out, "{:>6}", "m");
    for a in &algorithms {
        let _ = write!(
            out,
            " {:>10} {:>10}",
            format!("{a} ms"),
            format!("{a} insp")
        );
    }
    out.push('\n');
    for m in lengths {
        let _ = write!(out, "{m:>6}");
        for a in &algorithms {
            match records.iter().find(|r| r.m == m && r.algorithm == *a) {
                Some(r) => {
                    let _ = write!(
                        out,
                        " {:>10.3} {:>10.2}",
                        r.mean_time_ns / 1e6,
                        r.mean_inspections_per_byte
                    );
                }
                None => {
                    let _ = write!(out, " {:>10} {:>10}", "-", "-");
                }
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(gamma: f64, seed: u64) -> RandProblem {
        RandProblem {
            gamma,
            text_bits: 100_000,
            pattern_lengths: vec![20, 64],
            patterns_per_length: 5,
            seed,
        }
    }

    #[test]
    fn zero_fraction_tracks_gamma() {
        for gamma in [50.0, 90.0] {
            let w = generate(&small(gamma, 7)).unwrap();
            let z = w.zero_fraction();
            assert!((z - gamma / 100.0).abs() <= 0.01, "gamma {gamma}: {z}");
        }
    }

    #[test]
    fn patterns_come_from_the_text() {
        let w = generate(&small(70.0, 3)).unwrap();
        for (m, group) in &w.patterns {
            assert_eq!(group.len(), 5);
            for p in group {
                assert_eq!(p.bits.bit_len(), *m);
                let found = oracle_search(&p.bits, &w.text).unwrap().occurrences;
                assert!(found.contains(&p.start));
            }
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let a = generate(&small(50.0, 11)).unwrap();
        let b = generate(&small(50.0, 11)).unwrap();
        let c = generate(&small(50.0, 12)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.text, c.text);

        let algos = [Algorithm::Naive, Algorithm::Hash, Algorithm::Skip];
        let strip = |rs: Vec<BenchRecord>| -> Vec<(Algorithm, usize, u64)> {
            rs.into_iter()
                .map(|r| (r.algorithm, r.m, r.mean_inspections_per_byte.to_bits()))
                .collect()
        };
        let first = strip(run_bench(&small(50.0, 11), &algos).unwrap());
        let second = strip(run_bench(&small(50.0, 11), &algos).unwrap());
        assert_eq!(first, second);
        assert_eq!(first.len(), 6);
    }

    #[test]
    fn rejects_bad_problems() {
        let mut p = small(0.0, 1);
        assert!(matches!(generate(&p), Err(Error::Problem(_))));
        p.gamma = 50.0;
        p.pattern_lengths = vec![200_000];
        assert!(matches!(generate(&p), Err(Error::Problem(_))));
        assert!(run_bench(&small(50.0, 1), &[]).is_err());
        let mut short = small(50.0, 1);
        short.pattern_lengths = vec![12];
        assert!(matches!(
            run_bench(&short, &[Algorithm::Skip]),
            Err(Error::Core(binmatch_core::Error::PatternTooShort { .. }))
        ));
    }

    #[test]
    fn csv_layout() {
        let problem = small(90.0, 5);
        let records = run_bench(&problem, &[Algorithm::Naive, Algorithm::Hash]).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &problem, 0.9, &records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# gamma=90"));
        assert_eq!(lines[1], CSV_HEADER);
        assert_eq!(lines.len(), 2 + 4);
        assert!(lines[2].starts_with("naive,90,20,"));
        assert!(pretty_table(&records).contains("hash insp"));
    }
}
