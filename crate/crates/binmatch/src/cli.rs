//! The `binmatch` command line.
//!
//! ```text
//! binmatch search --text FILE (--pattern FILE | --pattern-bits BITS) [--algo NAME]
//! binmatch bench  [--gamma G] [--text-bits N] [--lengths L] [--patterns K] [--seed S] [--algos A,B]
//! binmatch tables (--pattern FILE | --pattern-bits BITS)
//! ```
//!
//! `search` exits 0 when something was found, 1 when nothing was, and 2 on
//! any error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use binmatch_core::{oracle_search, preprocess, Algorithm, BitString, Searcher};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bench::{self, RandProblem};
use crate::io::load_raw;
use crate::render::render_tables;
use crate::{Error, Result};

/// Exit status: at least one occurrence, or a command that succeeded.
pub const EXIT_FOUND: i32 = 0;
/// Exit status: the search ran and found nothing.
pub const EXIT_NOT_FOUND: i32 = 1;
/// Exit status: bad input, bad flags or a failed check.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "binmatch",
    version,
    about = "Find binary patterns at any bit offset"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the start bit offset of every occurrence.
    Search(SearchArgs),
    /// Run the random-text benchmark and print CSV.
    Bench(BenchArgs),
    /// Print the Patt, Mask and Last tables for a pattern.
    Tables(PatternArgs),
}

#[derive(Debug, Args)]
struct PatternArgs {
    /// Raw binary file holding the pattern.
    #[arg(
        long,
        conflicts_with = "pattern_bits",
        required_unless_present = "pattern_bits"
    )]
    pattern: Option<PathBuf>,
    /// Pattern written as 0/1 characters.
    #[arg(long)]
    pattern_bits: Option<String>,
    /// Use only the first N bits of the pattern file.
    #[arg(long, value_name = "N", requires = "pattern")]
    pattern_bit_len: Option<usize>,
}

impl PatternArgs {
    fn load(&self) -> Result<BitString> {
        match (&self.pattern, &self.pattern_bits) {
            (Some(path), _) => load_raw(path, self.pattern_bit_len),
            (None, Some(bits)) => Ok(BitString::from_bits(bits)?),
            (None, None) => Err(Error::Usage(
                "one of --pattern or --pattern-bits is required".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Raw binary file to search.
    #[arg(long)]
    text: PathBuf,
    /// Use only the first N bits of the text file.
    #[arg(long, value_name = "N")]
    text_bit_len: Option<usize>,
    #[command(flatten)]
    pattern: PatternArgs,
    /// oracle, naive, hash, skip or auto.
    #[arg(long, default_value = "auto")]
    algo: String,
    /// Report text bytes read (on stderr, or in the JSON document).
    #[arg(long)]
    count_inspections: bool,
    /// Print a JSON document instead of one offset per line.
    #[arg(long)]
    json: bool,
    /// Cross-check the result against the oracle; exit 2 on mismatch.
    #[arg(long)]
    verify: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Percentage of zero bits in the text.
    #[arg(long, default_value_t = 50.0)]
    gamma: f64,
    /// Text length in bits.
    #[arg(long, default_value_t = 4_000_000)]
    text_bits: usize,
    /// Pattern lengths: `20,60,100` or an inclusive range `20..500:40`.
    #[arg(long, default_value = "20..500:40")]
    lengths: String,
    /// Patterns per length.
    #[arg(long, default_value_t = 100)]
    patterns: usize,
    /// Use 1000 patterns per length, for full-size runs.
    #[arg(long, conflicts_with = "patterns")]
    full_scale: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Comma-separated algorithm names.
    #[arg(long, default_value = "naive,hash,skip")]
    algos: String,
    /// Also print a table of inspections per byte on stderr.
    #[arg(long)]
    table: bool,
}

#[derive(Serialize)]
struct SearchDocument<'a> {
    algo: &'a str,
    m: usize,
    n: usize,
    occurrences: &'a [usize],
    inspections_per_byte: f64,
}

/// Parses `20,60,100` or `20..500:40` (inclusive, step defaults to 1).
pub fn parse_lengths(spec: &str) -> Result<Vec<usize>> {
    let bad = || Error::Usage(format!("cannot parse pattern lengths {spec:?}"));
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let lengths = if let Some((from, rest)) = spec.split_once("..") {
        let (to, step) = match rest.split_once(':') {
            Some((to, step)) => (number(to)?, number(step)?),
            None => (number(rest)?, 1),
        };
        let from = number(from)?;
        if step == 0 || from > to {
            return Err(bad());
        }
        (from..=to).step_by(step).collect()
    } else {
        spec.split(',').map(number).collect::<Result<Vec<_>>>()?
    };
    if lengths.is_empty() {
        return Err(bad());
    }
    Ok(lengths)
}

/// Parses a comma-separated list of algorithm names.
pub fn parse_algorithms(spec: &str) -> Result<Vec<Algorithm>> {
    spec.split(',')
        .map(|s| s.trim().parse::<Algorithm>().map_err(Error::from))
        .collect()
}

fn resolve_algorithm(name: &str, m: usize) -> Result<Algorithm> {
    let algorithm = if name == "auto" {
        Algorithm::auto(m)
    } else {
        name.parse()?
    };
    Ok(algorithm)
}

fn search(args: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let text = load_raw(&args.text, args.text_bit_len)?;
    let pattern = args.pattern.load()?;
    let algorithm = resolve_algorithm(&args.algo, pattern.bit_len())?;
    let report = Searcher::new(algorithm, &pattern)?.find_all(&text)?;

    if args.verify {
        let expected = oracle_search(&pattern, &text)?.occurrences;
        if expected != report.occurrences {
            return Err(Error::Mismatch {
                algorithm,
                got: report.occurrences,
                expected,
            });
        }
    }

    let per_byte = report.inspections.per_text_byte(text.bit_len());
    let io = |e: std::io::Error| Error::Io {
        path: "<stdout>".into(),
        source: e,
    };
    if args.json {
        let doc = SearchDocument {
            algo: algorithm.name(),
            m: pattern.bit_len(),
            n: text.bit_len(),
            occurrences: &report.occurrences,
            inspections_per_byte: per_byte,
        };
        serde_json::to_writer(&mut *out, &doc).map_err(|e| io(e.into()))?;
        writeln!(out).map_err(io)?;
    } else {
        for s in &report.occurrences {
            writeln!(out, "{s}").map_err(io)?;
        }
        if args.count_inspections {
            writeln!(
                err,
                "{algorithm}: {} text block reads, {per_byte:.4} per byte",
                report.inspections.text_block_reads
            )
            .map_err(io)?;
        }
    }
    Ok(if report.occurrences.is_empty() {
        EXIT_NOT_FOUND
    } else {
        EXIT_FOUND
    })
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let algorithms = parse_algorithms(&args.algos)?;
    let problem = RandProblem {
        gamma: args.gamma,
        text_bits: args.text_bits,
        pattern_lengths: parse_lengths(&args.lengths)?,
        patterns_per_length: if args.full_scale { 1000 } else { args.patterns },
        seed: args.seed,
    };
    if problem.patterns_per_length == 0 {
        return Err(Error::Usage("--patterns must be at least 1".into()));
    }
    bench::check_lengths(&problem, &algorithms)?;
    let workload = bench::generate(&problem)?;
    let records = bench::run_workload(&problem, &workload, &algorithms)?;
    let io = |e: std::io::Error| Error::Io {
        path: "<stdout>".into(),
        source: e,
    };
    bench::write_csv(&mut *out, &problem, workload.zero_fraction(), &records).map_err(io)?;
    if args.table {
        write!(err, "{}", bench::pretty_table(&records)).map_err(io)?;
    }
    Ok(EXIT_FOUND)
}

fn tables(args: &PatternArgs, out: &mut dyn Write) -> Result<i32> {
    let tables = preprocess(&args.load()?)?;
    out.write_all(render_tables(&tables).as_bytes())
        .map_err(|e| Error::Io {
            path: "<stdout>".into(),
            source: e,
        })?;
    Ok(EXIT_FOUND)
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_FOUND
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Search(a) => search(a, out, err),
        Command::Bench(a) => run_bench(a, out, err),
        Command::Tables(a) => tables(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
