//! Plain-text matrix files.
//!
//! ```text
//! 2 3
//! 1.0000000000000000e0 0.0000000000000000e0 -2.5000000000000000e-1
//! 0.0000000000000000e0 1.0000000000000000e0 3.0000000000000000e0
//! ```
//!
//! The header holds the row and column counts; each following line holds one row.
//! Values are written with 17 significant digits, which round-trips every `f64`.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use super::{checked, DenseMatrix};
use crate::error::{Error, Result};

/// 17 significant digits in scientific notation.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_matrix<W: Write>(mut w: W, m: &DenseMatrix) -> io::Result<()> {
    writeln!(w, "{} {}", m.nrows(), m.ncols())?;
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format_f64(m[(i, j)])).collect();
        writeln!(w, "{}", row.join(" "))?;
    }
    Ok(())
}

pub fn format_matrix(m: &DenseMatrix) -> String {
    let mut buf = Vec::new();
    write_matrix(&mut buf, m).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ascii output")
}

pub fn write_matrix_file(path: impl AsRef<Path>, m: &DenseMatrix) -> Result<()> {
    fs::write(path, format_matrix(m))?;
    Ok(())
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<DenseMatrix> {
    let text = fs::read_to_string(path)?;
    parse_matrix(&text)
}

fn parse_dim(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?;
    let v: usize = tok
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("invalid {what} {tok:?}") })?;
    if v == 0 {
        return Err(Error::Parse { line, msg: format!("{what} must be positive") });
    }
    Ok(v)
}

pub fn parse_matrix(text: &str) -> Result<DenseMatrix> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());

    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let mut toks = header.split_whitespace();
    let rows = parse_dim(toks.next(), hl + 1, "row count")?;
    let cols = parse_dim(toks.next(), hl + 1, "column count")?;
    if toks.next().is_some() {
        return Err(Error::Parse { line: hl + 1, msg: "header must be \"rows cols\"".into() });
    }

    let mut m = DenseMatrix::zeros(rows, cols);
    for i in 0..rows {
        let (ln, line) = lines.next().ok_or_else(|| Error::Parse {
            line: hl + 2 + i,
            msg: format!("expected {rows} rows, found {i}"),
        })?;
        let vals: Vec<&str> = line.split_whitespace().collect();
        if vals.len() != cols {
            return Err(Error::Parse {
                line: ln + 1,
                msg: format!("expected {cols} values, found {}", vals.len()),
            });
        }
        for (j, tok) in vals.iter().enumerate() {
            m[(i, j)] = tok
                .parse()
                .map_err(|_| Error::Parse { line: ln + 1, msg: format!("invalid number {tok:?}") })?;
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse { line: ln + 1, msg: "trailing data after last row".into() });
    }
    checked(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn writes_header_and_rows() {
        let m = DenseMatrix::from_row_slice(2, 2, &[1.0, -0.25, 0.0, 3.0]);
        let s = format_matrix(&m);
        let mut lines = s.lines();
        assert_eq!(lines.next(), Some("2 2"));
        assert_eq!(lines.next(), Some("1.0000000000000000e0 -2.5000000000000000e-1"));
        assert_eq!(lines.next(), Some("0.0000000000000000e0 3.0000000000000000e0"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_matrix(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("0 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("2 2\n1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("1 2\n1 2 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("1 1\nabc\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("1 1\n1\n2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix("1 1\ninf\n"), Err(Error::NonFinite { .. })));
    }

    #[test]
    fn accepts_plain_decimals_and_blank_lines() {
        let m = parse_matrix("\n2 1\n  0.5\n\n-3\n\n").unwrap();
        assert_eq!(m.as_slice(), &[0.5, -3.0]);
    }

    proptest! {
        #[test]
        fn roundtrip_is_bit_exact(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = DenseMatrix::from_fn(rows, cols, |_, _| {
                let mant: f64 = rng.random_range(-1.0..1.0);
                mant * 10f64.powi(rng.random_range(-300..300))
            });
            let back = parse_matrix(&format_matrix(&m)).unwrap();
            for (a, b) in m.iter().zip(back.iter()) {
                prop_assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }
}
