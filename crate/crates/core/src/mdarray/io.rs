//! Text format for periodic arrays:
//!
//! ```text
//! MDARRAY 1
//! FIELD p r c_0 ... c_{r-1}
//! ALPHA e
//! PERIOD n_1 ... n_m
//! <n_1 * ... * n_m encodings, i_1 fastest>
//! ```
//!
//! For `r = 1` the field line is just `FIELD p 1`.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use super::PeriodicArray;
use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};

pub(crate) struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    pub(crate) last: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next non-blank line, split into tokens, with its keyword checked.
    pub(crate) fn keyword(&mut self, key: &str) -> Result<Vec<&'a str>> {
        for (no, line) in self.inner.by_ref() {
            self.last = no + 1;
            let mut toks = line.split_whitespace();
            match toks.next() {
                None => continue,
                Some(k) if k == key => return Ok(toks.collect()),
                Some(k) => return Err(parse_err(no + 1, format!("expected `{key}`, found `{k}`"))),
            }
        }
        Err(parse_err(self.last + 1, format!("missing `{key}` line")))
    }

    /// All remaining tokens, tagged with their line numbers.
    pub(crate) fn rest(self) -> Vec<(usize, &'a str)> {
        self.inner
            .flat_map(|(no, line)| line.split_whitespace().map(move |t| (no + 1, t)))
            .collect()
    }
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub(crate) fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid number `{tok}`")))
}

pub(crate) fn read_field_header(lines: &mut Lines<'_>) -> Result<Arc<Field>> {
    let f = lines.keyword("FIELD")?;
    let no = lines.last;
    if f.len() < 2 {
        return Err(parse_err(no, "FIELD needs p and r"));
    }
    let p: u32 = parse_num(f[0], no)?;
    let r: u32 = parse_num(f[1], no)?;
    let modulus: Vec<u32> = f[2..]
        .iter()
        .map(|t| parse_num(t, no))
        .collect::<Result<_>>()?;
    let expected = if r == 1 { 0 } else { r as usize };
    if modulus.len() != expected {
        return Err(parse_err(
            no,
            format!("FIELD {p} {r} needs {expected} modulus coefficients"),
        ));
    }
    let a = lines.keyword("ALPHA")?;
    let no = lines.last;
    if a.len() != 1 {
        return Err(parse_err(no, "ALPHA takes one encoding"));
    }
    let alpha: u32 = parse_num(a[0], no)?;
    let modulus = if r == 1 {
        None
    } else {
        Some(modulus.as_slice())
    };
    Ok(Arc::new(Field::new(p, r, modulus, Some(alpha))?))
}

pub(crate) fn write_field_header(out: &mut String, field: &Field) {
    write!(out, "FIELD {} {}", field.characteristic(), field.degree()).unwrap();
    for c in field.modulus() {
        write!(out, " {c}").unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "ALPHA {}", field.alpha().0).unwrap();
}

pub fn read_array_str(text: &str) -> Result<PeriodicArray> {
    let mut lines = Lines::new(text);
    let magic = lines.keyword("MDARRAY")?;
    if magic != ["1"] {
        return Err(parse_err(lines.last, "unsupported MDARRAY version"));
    }
    let field = read_field_header(&mut lines)?;
    let per = lines.keyword("PERIOD")?;
    let no = lines.last;
    let periods: Vec<usize> = per
        .iter()
        .map(|t| parse_num(t, no))
        .collect::<Result<_>>()?;
    if periods.is_empty() || periods.contains(&0) {
        return Err(Error::BadPeriods);
    }
    let expected: usize = periods.iter().product();
    let toks = lines.rest();
    if toks.len() != expected {
        return Err(Error::EntryCount {
            expected,
            got: toks.len(),
        });
    }
    let mut data = Vec::with_capacity(expected);
    for (no, t) in toks {
        let v: u64 = parse_num(t, no)?;
        data.push(field.element(v)?);
    }
    PeriodicArray::new(field, periods, data)
}

pub fn read_array(path: impl AsRef<Path>) -> Result<PeriodicArray> {
    read_array_str(&std::fs::read_to_string(path)?)
}

pub fn write_array_string(a: &PeriodicArray) -> String {
    let mut out = String::from("MDARRAY 1\n");
    write_field_header(&mut out, a.field());
    let periods: Vec<String> = a.periods().iter().map(|n| n.to_string()).collect();
    writeln!(out, "PERIOD {}", periods.join(" ")).unwrap();
    for row in a.data().chunks(a.periods()[0]) {
        let row: Vec<String> = row.iter().map(|e: &FieldElement| e.0.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn write_array(a: &PeriodicArray, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_array_string(a))?;
    Ok(())
}
