//! Tabular output shared by every subcommand.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use qscatter::sweep::{SweepRow, SweepSpec};
use qscatter::{Error, Result};

/// Every number carries at least this many significant digits.
pub const MIN_SIGNIFICANT: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Err(&'static str),
    Text(String),
    /// Value not defined for this row.
    Missing,
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Num(x) => format_number(*x),
            Cell::Err(code) => format!("ERR:{code}"),
            Cell::Text(s) => s.clone(),
            Cell::Missing => "NA".to_string(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

/// Shortest round-trip decimal in exponent form, zero-padded to
/// [`MIN_SIGNIFICANT`] digits: `0.5` renders as `5.00000000000e-1`.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let s = format!("{x:e}");
    let (mantissa, exponent) = s.split_once('e').expect("LowerExp always has an exponent");
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let significant = digits.bytes().filter(u8::is_ascii_digit).count();
    let mut m = digits.to_string();
    if significant < MIN_SIGNIFICANT {
        if !m.contains('.') {
            m.push('.');
        }
        m.extend(std::iter::repeat_n('0', MIN_SIGNIFICANT - significant));
    }
    format!("{sign}{m}e{exponent}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputTable {
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl OutputTable {
    /// Panics on duplicate column names; headers are always built in code.
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        let header: Vec<String> = header.into_iter().map(Into::into).collect();
        for (i, h) in header.iter().enumerate() {
            assert!(!header[..i].contains(h), "duplicate column {h}");
        }
        OutputTable { header, rows: Vec::new() }
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> io::Result<()> {
        std::fs::write(path, self.to_csv())
    }
}

fn err_cell(e: &Error) -> Cell {
    Cell::Err(e.code())
}

/// Columns: the swept variable, then `exact_T`, `exact_R`, `wkb_T`,
/// `bound_T`, `defect` and `bound_gap`, each only when its method ran.
pub fn sweep_table(spec: &SweepSpec, var_name: &str, rows: &[SweepRow]) -> OutputTable {
    let m = spec.methods;
    let mut header = vec![var_name.to_string()];
    if m.exact {
        header.extend(["exact_T".to_string(), "exact_R".to_string()]);
    }
    if m.wkb {
        header.push("wkb_T".to_string());
    }
    if m.bound {
        header.push("bound_T".to_string());
    }
    if m.exact {
        header.push("defect".to_string());
    }
    if m.exact && m.bound {
        header.push("bound_gap".to_string());
    }
    let mut table = OutputTable::new(header);

    for row in rows {
        let mut cells = vec![Cell::Num(row.value)];
        if let Some(exact) = &row.exact {
            match exact {
                Ok(p) => cells.extend([Cell::Num(p.transmission), Cell::Num(p.reflection)]),
                Err(e) => cells.extend([err_cell(e), err_cell(e)]),
            }
        }
        if let Some(w) = &row.wkb {
            cells.push(result_cell(w));
        }
        if let Some(b) = &row.bound {
            cells.push(result_cell(b));
        }
        if let Some(exact) = &row.exact {
            cells.push(match exact {
                Ok(p) => Cell::Num(p.defect()),
                Err(e) => err_cell(e),
            });
        }
        if m.exact && m.bound {
            cells.push(match (&row.exact, &row.bound) {
                (Some(Err(e)), _) | (_, Some(Err(e))) => err_cell(e),
                _ => row.bound_gap().map_or(Cell::Missing, Cell::Num),
            });
        }
        table.push(cells);
    }
    table
}

fn result_cell(r: &Result<f64>) -> Cell {
    match r {
        Ok(x) => Cell::Num(*x),
        Err(e) => err_cell(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for x in [0.5, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5, 0.07065082485316448, 123456789012345.0] {
            let s = format_number(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn short_values_are_padded() {
        assert_eq!(format_number(0.5), "5.00000000000e-1");
        assert_eq!(format_number(-2.0), "-2.00000000000e0");
        assert_eq!(format_number(0.0), "0.00000000000e0");
        assert_eq!(format_number(1.0 / 3.0), "3.333333333333333e-1");
    }

    #[test]
    fn csv_uses_lf_and_err_tokens() {
        let mut t = OutputTable::new(["E", "exact_T"]);
        t.push(vec![Cell::Num(1.0), Cell::Err("degenerate-energy")]);
        assert_eq!(t.to_csv(), "E,exact_T\n1.00000000000e0,ERR:degenerate-energy\n");
    }

    #[test]
    #[should_panic]
    fn duplicate_columns_rejected() {
        OutputTable::new(["E", "E"]);
    }
}
