use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const INTRO_TEXT_BYTES: [u8; 5] = [
    0b0110_0100,
    0b1000_1001,
    0b1010_0101,
    0b0001_0100,
    0b1001_0000,
];

fn binmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binmatch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, bytes: &[u8]) -> String {
    let path = dir.path().join(name);
    fs::write(&path, bytes).unwrap();
    path.to_str().unwrap().to_owned()
}

fn intro_text(dir: &TempDir) -> String {
    write(dir, "intro.bin", &INTRO_TEXT_BYTES)
}

#[test]
fn search_introduction_example() {
    let dir = TempDir::new().unwrap();
    let text = intro_text(&dir);
    let run = |algo: &str| {
        binmatch(&[
            "search",
            "--text",
            &text,
            "--text-bit-len",
            "36",
            "--pattern-bits",
            "0100110100",
            "--algo",
            algo,
        ])
    };
    let hash = run("hash");
    assert_eq!(hash.status.code(), Some(0), "{}", stderr(&hash));
    assert_eq!(stdout(&hash), "11\n");
    for algo in ["oracle", "naive", "auto"] {
        let o = run(algo);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "11\n", "{algo}");
    }
}

#[test]
fn search_absent_pattern_exits_one() {
    let dir = TempDir::new().unwrap();
    let text = intro_text(&dir);
    let o = binmatch(&[
        "search",
        "--text",
        &text,
        "--text-bit-len",
        "36",
        "--pattern-bits",
        "1111111111",
        "--algo",
        "naive",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "");
}

#[test]
fn precondition_violation_exits_two_with_one_line() {
    let dir = TempDir::new().unwrap();
    let text = intro_text(&dir);
    let o = binmatch(&[
        "search",
        "--text",
        &text,
        "--pattern-bits",
        "0100110100",
        "--algo",
        "skip",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("skip") && err.contains("16"), "{err}");

    let bad_bits = binmatch(&["search", "--text", &text, "--pattern-bits", "01x"]);
    assert_eq!(bad_bits.status.code(), Some(2));
    let missing = binmatch(&["search", "--text", "/no/such/file", "--pattern-bits", "01"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("/no/such/file"));
    let unknown = binmatch(&[
        "search",
        "--text",
        &text,
        "--pattern-bits",
        "01",
        "--algo",
        "bbm",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn json_report() {
    let dir = TempDir::new().unwrap();
    let text = intro_text(&dir);
    let o = binmatch(&[
        "search",
        "--text",
        &text,
        "--text-bit-len",
        "36",
        "--pattern-bits",
        "0100110100",
        "--algo",
        "hash",
        "--json",
        "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["algo"], "hash");
    assert_eq!(doc["m"], 10);
    assert_eq!(doc["n"], 36);
    assert_eq!(doc["occurrences"], serde_json::json!([11]));
    assert!(doc["inspections_per_byte"].as_f64().unwrap() > 0.0);
}

#[test]
fn pattern_file_and_inspection_summary() {
    let dir = TempDir::new().unwrap();
    let text = write(&dir, "text.bin", &[0xAA; 64]);
    let pattern = write(&dir, "pattern.bin", &[0xAA, 0xAA, 0xA0]);
    let o = binmatch(&[
        "search",
        "--text",
        &text,
        "--pattern",
        &pattern,
        "--pattern-bit-len",
        "20",
        "--count-inspections",
        "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let offsets: Vec<usize> = stdout(&o).lines().map(|l| l.parse().unwrap()).collect();
    let expected: Vec<usize> = (0..=512 - 20).step_by(2).collect();
    assert_eq!(offsets, expected);
    assert!(stderr(&o).contains("skip:"), "{}", stderr(&o));
}

#[test]
fn bench_csv_rows() {
    let o = binmatch(&[
        "bench",
        "--gamma",
        "50",
        "--text-bits",
        "4000000",
        "--lengths",
        "20",
        "--patterns",
        "100",
        "--seed",
        "1",
        "--algos",
        "naive,hash,skip",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        lines[0],
        "algo,gamma,m,mean_time_ns,mean_inspections_per_byte,patterns,seed"
    );
    assert_eq!(lines.len(), 4);
    for (line, algo) in lines[1..].iter().zip(["naive", "hash", "skip"]) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 7);
        assert_eq!(fields[0], algo);
        assert_eq!(fields[2], "20");
        assert_eq!(fields[5], "100");
        assert_eq!(fields[6], "1");
    }
}

#[test]
fn bench_metadata_and_determinism() {
    let args = [
        "bench",
        "--gamma",
        "90",
        "--text-bits",
        "200000",
        "--lengths",
        "20..100:40",
        "--patterns",
        "10",
        "--seed",
        "3",
        "--algos",
        "hash,skip",
    ];
    let first = stdout(&binmatch(&args));
    let meta = first.lines().next().unwrap();
    let zero: f64 = meta
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix("zero_fraction="))
        .unwrap()
        .parse()
        .unwrap();
    assert!((zero - 0.9).abs() < 0.01, "{meta}");
    let strip = |s: &str| -> Vec<String> {
        s.lines()
            .skip(2)
            .map(|l| {
                let mut f: Vec<&str> = l.split(',').collect();
                f.remove(3);
                f.join(",")
            })
            .collect()
    };
    let second = stdout(&binmatch(&args));
    assert_eq!(strip(&first), strip(&second));
    assert_eq!(strip(&first).len(), 6);
}

#[test]
fn bench_rejects_bad_flags() {
    let unknown = binmatch(&[
        "bench",
        "--algos",
        "naive,bbm",
        "--text-bits",
        "1000",
        "--lengths",
        "20",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
    let short = binmatch(&[
        "bench",
        "--algos",
        "skip",
        "--text-bits",
        "1000",
        "--lengths",
        "12",
    ]);
    assert_eq!(short.status.code(), Some(2));
    let gamma = binmatch(&[
        "bench",
        "--gamma",
        "100",
        "--text-bits",
        "1000",
        "--lengths",
        "20",
    ]);
    assert_eq!(gamma.status.code(), Some(2));
    let lengths = binmatch(&["bench", "--lengths", "abc"]);
    assert_eq!(lengths.status.code(), Some(2));
}

#[test]
fn tables_reference_rendering() {
    let o = binmatch(&["tables", "--pattern-bits", "110010110010110010110"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out
        .lines()
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows[0], ["Patt", "0", "1", "2", "3"]);
    assert_eq!(rows[4], ["3", "00011001", "01100101", "10010110"]);
    assert_eq!(
        rows[8],
        ["7", "00000001", "10010110", "01011001", "01100000"]
    );
    assert_eq!(rows[10], ["Mask", "0", "1", "2", "3"]);
    assert_eq!(rows[11], ["0", "11111111", "11111111", "11111000"]);
    assert_eq!(
        rows[15],
        ["4", "00001111", "11111111", "11111111", "10000000"]
    );
    assert_eq!(rows[20], ["Last"]);
    let last: Vec<&str> = rows[21..29].iter().map(|r| r[1]).collect();
    assert_eq!(last, ["2", "2", "2", "2", "3", "3", "3", "3"]);
}

#[test]
fn tables_from_file_match_bit_string_form() {
    let dir = TempDir::new().unwrap();
    let pattern = write(&dir, "p.bin", &[0b1100_1011, 0b0010_1100, 0b1011_0111]);
    let from_file = binmatch(&["tables", "--pattern", &pattern, "--pattern-bit-len", "21"]);
    let from_bits = binmatch(&["tables", "--pattern-bits", "110010110010110010110"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&from_bits));
}

#[test]
fn tables_block_aligned_and_empty() {
    let o = binmatch(&["tables", "--pattern-bits", "11111111"]);
    let out = stdout(&o);
    let row0: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row0, ["0", "11111111"]);
    let empty = binmatch(&["tables", "--pattern-bits", ""]);
    assert_eq!(empty.status.code(), Some(2));
    assert!(stderr(&empty).contains("at least one bit"));
}

#[test]
fn help_exits_zero() {
    let o = binmatch(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(Path::new(env!("CARGO_BIN_EXE_binmatch")).exists());
    assert!(stdout(&o).contains("search"));
}
