//! Plain-text exchange format for exact matrices: a `rows cols` header
//! followed by row-major entry tokens.

use crate::error::{Error, Result};
use crate::exact_linalg::ExactMatrix;
use crate::gaussian::Q;

pub fn write_matrix(m: &ExactMatrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(Q::to_token).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// Reads one matrix from a token stream, consuming exactly its tokens.
pub fn read_matrix_tokens<'a>(tokens: &mut impl Iterator<Item = &'a str>) -> Result<ExactMatrix> {
    let mut dim = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("missing {what}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad {what}")))
    };
    let rows = dim("row count")?;
    let cols = dim("column count")?;
    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let t = tokens.next().ok_or_else(|| Error::Parse("matrix ended early".into()))?;
        data.push(t.parse::<Q>()?);
    }
    Ok(ExactMatrix::from_flat(rows, cols, data))
}

pub fn read_matrix(s: &str) -> Result<ExactMatrix> {
    let mut tokens = s.split_whitespace();
    let m = read_matrix_tokens(&mut tokens)?;
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing tokens after matrix".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn round_trip() {
        let m = ExactMatrix::from_rows(vec![
            vec![Q::frac(1, 2), Q::new(Rational::ZERO, Rational::new(-3, 7))],
            vec![Q::ZERO, Q::new(Rational::integer(5), Rational::ONE)],
        ]);
        let s = write_matrix(&m);
        assert!(s.starts_with("2 2\n1/2 0/1-3/7*i\n"));
        assert_eq!(read_matrix(&s).unwrap(), m);
    }

    #[test]
    fn malformed_input() {
        assert!(read_matrix("2 2\n1 2 3").is_err());
        assert!(read_matrix("1 1\n0.5").is_err());
        assert!(read_matrix("1 1\n1 2").is_err());
    }
}
