//! CSV and aligned-table rendering with `#`-prefixed metadata.

use std::fmt::Write as _;
use std::io::Write as _;

use crate::{Failure, Format, OrderArgs, OutputArgs, VERSION};

const WIDTH: usize = 24;

/// Seventeen significant digits.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

/// Shortest decimal that round-trips, with `-0` printed as `0`.
pub fn short(v: f64) -> String {
    format!("{}", v + 0.0)
}

pub struct Sink {
    format: Format,
    buf: String,
}

impl Sink {
    pub fn new(format: Format) -> Self {
        Self { format, buf: String::new() }
    }

    /// Metadata line: a CSV comment, or plain text in a table.
    pub fn meta(&mut self, line: impl AsRef<str>) {
        match self.format {
            Format::Csv => writeln!(self.buf, "# {}", line.as_ref()),
            Format::Table => writeln!(self.buf, "{}", line.as_ref()),
        }
        .expect("writing to a String");
    }

    /// Version and order metadata shared by the numeric commands.
    pub fn preamble(&mut self, command: &str, orders: &OrderArgs) {
        self.meta(format!("hacf {VERSION}"));
        self.meta(format!("command={command}"));
        self.meta(format!(
            "orders n_phi={} n_theta={} n_r={} indicator_factor={}",
            orders.n_phi, orders.n_theta, orders.n_r, orders.indicator_factor
        ));
    }

    pub fn row<S: AsRef<str>>(&mut self, cells: &[S]) {
        match self.format {
            Format::Csv => {
                let line: Vec<&str> = cells.iter().map(|c| c.as_ref()).collect();
                writeln!(self.buf, "{}", line.join(","))
            }
            Format::Table => {
                let line: Vec<String> = cells.iter().map(|c| format!("{:>WIDTH$}", c.as_ref())).collect();
                writeln!(self.buf, "{}", line.join(" ").trim_end())
            }
        }
        .expect("writing to a String");
    }

    pub fn finish(self, out: &OutputArgs) -> Result<(), Failure> {
        match &out.out {
            Some(path) => std::fs::write(path, self.buf)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(self.buf.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(())
    }
}
