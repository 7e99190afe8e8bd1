//! The `table` command: one block per n with its factorization and diagram.
//!
//! ```text
//!  n | factors | diagram
//! ---+---------+--------
//!  1 | -       |
//!  2 | p1      | #
//!  4 | p1^2    | #
//!    |         | #
//! ```

use std::io::{self, Write};

use ferrers::diagram::Partition;
use ferrers::{primes, render, Result};

pub fn write_table(n_max: u64, out: &mut dyn Write) -> Result<()> {
    let mut entries = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let f = primes::factorize(n)?;
        let d = Partition::from(&f);
        entries.push((n.to_string(), f.to_string(), render::ascii(&d)));
    }

    let n_width = entries.last().map_or(1, |e| e.0.len()).max(1);
    let f_width = entries
        .iter()
        .map(|e| e.1.len())
        .max()
        .unwrap_or(0)
        .max("factors".len());

    let line = |out: &mut dyn Write, n: &str, f: &str, d: &str| -> io::Result<()> {
        let text = format!(" {n:>n_width$} | {f:<f_width$} | {d}");
        writeln!(out, "{}", text.trim_end())
    };

    line(out, "n", "factors", "diagram")?;
    writeln!(
        out,
        "{}+{}+{}",
        "-".repeat(n_width + 2),
        "-".repeat(f_width + 2),
        "-".repeat(8)
    )?;
    for (n, f, diagram) in &entries {
        let mut rows = diagram.lines();
        line(out, n, f, rows.next().unwrap_or(""))?;
        for row in rows {
            line(out, "", "", row)?;
        }
    }
    Ok(())
}
