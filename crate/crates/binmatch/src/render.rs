//! Text rendering of `Patt`, `Mask` and `Last`, one row per bit shift.

use std::fmt::Write;

use binmatch_core::{ShiftedPatternTables, BLOCK_BITS};

fn render_matrix(
    out: &mut String,
    title: &str,
    tables: &ShiftedPatternTables,
    cell: impl Fn(usize, usize) -> u8,
) {
    let _ = write!(out, "{title:<6}");
    for h in 0..tables.columns() {
        let _ = write!(out, "  {h:<8}");
    }
    out.push('\n');
    for i in 0..BLOCK_BITS {
        let _ = write!(out, "{i:>4}  ");
        for h in 0..=tables.last(i) {
            let _ = write!(out, "  {:08b}", cell(i, h));
        }
        out.push('\n');
    }
}

/// Renders the three tables as a plain-text block. Cells past `Last[i]` are
/// left blank.
pub fn render_tables(tables: &ShiftedPatternTables) -> String {
    let mut out = String::new();
    render_matrix(&mut out, "Patt", tables, |i, h| tables.patt(i, h));
    out.push('\n');
    render_matrix(&mut out, "Mask", tables, |i, h| tables.mask(i, h));
    out.push('\n');
    out.push_str("Last\n");
    for i in 0..BLOCK_BITS {
        let _ = writeln!(out, "{i:>4}    {}", tables.last(i));
    }
    out
}
