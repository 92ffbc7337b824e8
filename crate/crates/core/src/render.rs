//! ASCII diagrams of paths on the lattice.
//!
//! Columns `0..=N` run left to right, heights increase downward. Path points
//! are `*`, upper corners `R`, lower corners `B`, other lattice points `.`.
//! Only the rows spanned by the path are drawn. The last line carries the
//! monomial of the path.

use std::fmt::Write;

use crate::paths::{Path, Polarity};
use crate::qchar::monomial_of_path;

const RED: &str = "\x1b[31m";
const BLUE: &str = "\x1b[34m";
const RESET: &str = "\x1b[0m";

pub fn render_path(p: &Path, color: bool) -> String {
    let heights = p.heights();
    let big_n = heights.len() - 1;
    let top = *heights.iter().min().unwrap();
    let bottom = *heights.iter().max().unwrap();
    let col_w = big_n.to_string().len();
    let label_w = [top, bottom].iter().map(|h| h.to_string().len()).max().unwrap();

    let mut grid: Vec<Vec<&str>> = (top..=bottom)
        .map(|h| {
            (0..=big_n)
                .map(|r| if (r as i64 - h).rem_euclid(2) == 1 { "." } else { " " })
                .collect()
        })
        .collect();
    for (r, &h) in heights.iter().enumerate() {
        grid[(h - top) as usize][r] = "*";
    }
    for c in p.corners() {
        grid[(c.ell - top) as usize][c.r] = match c.polarity {
            Polarity::Upper => "R",
            Polarity::Lower => "B",
        };
    }

    let mut out = String::new();
    let mut header = " ".repeat(label_w);
    for r in 0..=big_n {
        write!(header, " {r:>col_w$}").unwrap();
    }
    out.push_str(&header);
    out.push('\n');
    for (row, h) in grid.iter().zip(top..=bottom) {
        let mut line = format!("{h:>label_w$}");
        for cell in row {
            let painted = match (*cell, color) {
                ("R", true) => format!("{RED}*{RESET}"),
                ("B", true) => format!("{BLUE}*{RESET}"),
                _ => cell.to_string(),
            };
            let pad = col_w.saturating_sub(1);
            write!(line, " {}{painted}", " ".repeat(pad)).unwrap();
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    writeln!(out, "m = {}", monomial_of_path(p)).unwrap();
    out
}
