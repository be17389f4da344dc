//! Line format for elements: `e f h re im`, one monomial per line.

use crate::error::{Error, Result};
use crate::gaussian::Q;
use crate::rational::Rational;
use crate::usl2_pbw::PBWElement;

pub fn write_pbw(x: &PBWElement) -> String {
    x.terms()
        .iter()
        .map(|(&(e, f, h), c)| {
            format!(
                "{e} {f} {h} {} {}\n",
                c.re.to_fraction_string(),
                c.im.to_fraction_string()
            )
        })
        .collect()
}

pub fn read_pbw(s: &str) -> Result<PBWElement> {
    let mut entries = Vec::new();
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Parse(format!("line {}: `{line}`", lineno + 1));
        if fields.len() != 5 {
            return Err(bad());
        }
        let exp = |k: usize| fields[k].parse::<u32>().map_err(|_| bad());
        let re: Rational = fields[3].parse()?;
        let im: Rational = fields[4].parse()?;
        entries.push(((exp(0)?, exp(1)?, exp(2)?), Q::new(re, im)));
    }
    Ok(PBWElement::from_terms(entries))
}
