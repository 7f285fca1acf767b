//! Shift sequences, shift arrays and vector shift sequences, plus their
//! text format:
//!
//! ```text
//! MDSHIFT 1
//! SHIFT n            (SHIFT n_1 n_2 for vector entries)
//! PERIOD l           (PERIOD n_1 n_2 for a shift array)
//! <entries: integers, `*`, or `i,j` pairs>
//! ```

use std::fmt::{self, Write as _};
use std::path::Path;

use crate::error::{Error, Result};
use crate::mdarray::io::{parse_err, parse_num, Lines};

/// A shift: a residue or the undetermined shift `*`.
pub type Shift = Option<usize>;

fn fmt_shift(s: Shift) -> String {
    s.map_or_else(|| "*".to_string(), |v| v.to_string())
}

/// Shift sequence over `Z_n ∪ {*}`; its period is its length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSequence {
    modulus: usize,
    entries: Vec<Shift>,
}

impl ShiftSequence {
    pub fn new(modulus: usize, entries: Vec<Shift>) -> Result<Self> {
        if let Some(v) = entries.iter().flatten().find(|&&v| v >= modulus) {
            return Err(Error::ShiftOutOfRange {
                value: *v as u64,
                modulus: modulus as u64,
            });
        }
        if entries.is_empty() {
            return Err(Error::BadPeriods);
        }
        Ok(ShiftSequence { modulus, entries })
    }

    /// Star-free sequence from plain residues.
    pub fn from_values(modulus: usize, values: &[usize]) -> Result<Self> {
        Self::new(modulus, values.iter().map(|&v| Some(v)).collect())
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn entries(&self) -> &[Shift] {
        &self.entries
    }

    pub fn period(&self) -> usize {
        self.entries.len()
    }

    pub fn has_stars(&self) -> bool {
        self.entries.iter().any(Option::is_none)
    }

    /// Drops a trailing `*` (the shortened Moreno-Maric form).
    pub fn shortened(mut self) -> Self {
        if self.entries.len() > 1 && self.entries.last() == Some(&None) {
            self.entries.pop();
        }
        self
    }

    /// Adds `d` to every non-star entry modulo the modulus.
    pub fn offset(&self, d: usize) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|s| s.map(|v| (v + d) % self.modulus))
            .collect();
        ShiftSequence {
            modulus: self.modulus,
            entries,
        }
    }
}

impl fmt::Display for ShiftSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|&s| fmt_shift(s)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Two-dimensional shift array over `Z_n ∪ {*}`, indexed `(i, j)` with `i`
/// varying fastest in storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftArray {
    dims: (usize, usize),
    modulus: usize,
    entries: Vec<Shift>,
}

impl ShiftArray {
    pub fn new(dims: (usize, usize), modulus: usize, entries: Vec<Shift>) -> Result<Self> {
        if dims.0 == 0 || dims.1 == 0 {
            return Err(Error::BadPeriods);
        }
        if entries.len() != dims.0 * dims.1 {
            return Err(Error::EntryCount {
                expected: dims.0 * dims.1,
                got: entries.len(),
            });
        }
        if let Some(v) = entries.iter().flatten().find(|&&v| v >= modulus) {
            return Err(Error::ShiftOutOfRange {
                value: *v as u64,
                modulus: modulus as u64,
            });
        }
        Ok(ShiftArray {
            dims,
            modulus,
            entries,
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn entries(&self) -> &[Shift] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Shift {
        self.entries[(i % self.dims.0) + self.dims.0 * (j % self.dims.1)]
    }
}

/// Shift sequence with entries in `Z_{n_1} x Z_{n_2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorShiftSequence {
    moduli: (usize, usize),
    entries: Vec<(usize, usize)>,
}

impl VectorShiftSequence {
    pub fn new(moduli: (usize, usize), entries: Vec<(usize, usize)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadPeriods);
        }
        for &(i, j) in &entries {
            if i >= moduli.0 {
                return Err(Error::ShiftOutOfRange {
                    value: i as u64,
                    modulus: moduli.0 as u64,
                });
            }
            if j >= moduli.1 {
                return Err(Error::ShiftOutOfRange {
                    value: j as u64,
                    modulus: moduli.1 as u64,
                });
            }
        }
        Ok(VectorShiftSequence { moduli, entries })
    }

    pub fn moduli(&self) -> (usize, usize) {
        self.moduli
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn period(&self) -> usize {
        self.entries.len()
    }

    /// Shift array with `sa_{s_k} = k`; cells no entry maps to hold `*`.
    pub fn to_shift_array(&self) -> Result<ShiftArray> {
        let (n1, n2) = self.moduli;
        let mut cells: Vec<Shift> = vec![None; n1 * n2];
        for (k, &(i, j)) in self.entries.iter().enumerate() {
            if cells[i + n1 * j].is_some() {
                return Err(Error::NotBijective(self.entries.len()));
            }
            cells[i + n1 * j] = Some(k);
        }
        ShiftArray::new(self.moduli, self.entries.len(), cells)
    }
}

/// Assigns `s_k = (i, j)` when `sa_{i,j} = k`. The table must hit every
/// residue exactly once and hold exactly one `*`.
pub fn vector_shift_from_table(w: &ShiftArray) -> Result<VectorShiftSequence> {
    let n3 = w.modulus;
    let stars = w.entries.iter().filter(|s| s.is_none()).count();
    if stars != 1 || w.entries.len() != n3 + 1 {
        return Err(Error::NotBijective(n3));
    }
    let mut slots: Vec<Option<(usize, usize)>> = vec![None; n3];
    for j in 0..w.dims.1 {
        for i in 0..w.dims.0 {
            if let Some(k) = w.get(i, j) {
                if slots[k].replace((i, j)).is_some() {
                    return Err(Error::NotBijective(n3));
                }
            }
        }
    }
    let entries = slots
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::NotBijective(n3))?;
    VectorShiftSequence::new(w.dims, entries)
}

/// Any of the three shift containers, as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShiftData {
    Sequence(ShiftSequence),
    Array(ShiftArray),
    Vector(VectorShiftSequence),
}

pub fn write_shift_string(data: &ShiftData) -> String {
    let mut out = String::from("MDSHIFT 1\n");
    match data {
        ShiftData::Sequence(s) => {
            writeln!(out, "SHIFT {}\nPERIOD {}", s.modulus, s.period()).unwrap();
            let parts: Vec<String> = s.entries.iter().map(|&e| fmt_shift(e)).collect();
            writeln!(out, "{}", parts.join(" ")).unwrap();
        }
        ShiftData::Array(a) => {
            writeln!(out, "SHIFT {}\nPERIOD {} {}", a.modulus, a.dims.0, a.dims.1).unwrap();
            for row in a.entries.chunks(a.dims.0) {
                let parts: Vec<String> = row.iter().map(|&e| fmt_shift(e)).collect();
                writeln!(out, "{}", parts.join(" ")).unwrap();
            }
        }
        ShiftData::Vector(v) => {
            writeln!(
                out,
                "SHIFT {} {}\nPERIOD {}",
                v.moduli.0,
                v.moduli.1,
                v.period()
            )
            .unwrap();
            let parts: Vec<String> = v.entries.iter().map(|(i, j)| format!("{i},{j}")).collect();
            writeln!(out, "{}", parts.join(" ")).unwrap();
        }
    }
    out
}

pub fn read_shift_str(text: &str) -> Result<ShiftData> {
    let mut lines = Lines::new(text);
    if lines.keyword("MDSHIFT")? != ["1"] {
        return Err(parse_err(lines.last, "unsupported MDSHIFT version"));
    }
    let sh = lines.keyword("SHIFT")?;
    let no = lines.last;
    let moduli: Vec<usize> = sh.iter().map(|t| parse_num(t, no)).collect::<Result<_>>()?;
    let per = lines.keyword("PERIOD")?;
    let no = lines.last;
    let dims: Vec<usize> = per
        .iter()
        .map(|t| parse_num(t, no))
        .collect::<Result<_>>()?;
    let toks = lines.rest();
    let parse_shift = |(no, t): (usize, &str)| -> Result<Shift> {
        if t == "*" {
            Ok(None)
        } else {
            parse_num(t, no).map(Some)
        }
    };
    match (moduli.as_slice(), dims.as_slice()) {
        (&[n], &[len]) => {
            if toks.len() != len {
                return Err(Error::EntryCount {
                    expected: len,
                    got: toks.len(),
                });
            }
            let entries = toks.into_iter().map(parse_shift).collect::<Result<_>>()?;
            Ok(ShiftData::Sequence(ShiftSequence::new(n, entries)?))
        }
        (&[n], &[d1, d2]) => {
            let entries = toks.into_iter().map(parse_shift).collect::<Result<_>>()?;
            Ok(ShiftData::Array(ShiftArray::new((d1, d2), n, entries)?))
        }
        (&[n1, n2], &[len]) => {
            if toks.len() != len {
                return Err(Error::EntryCount {
                    expected: len,
                    got: toks.len(),
                });
            }
            let entries = toks
                .into_iter()
                .map(|(no, t)| {
                    let (a, b) = t
                        .split_once(',')
                        .ok_or_else(|| parse_err(no, format!("expected `i,j`, found `{t}`")))?;
                    Ok((parse_num(a, no)?, parse_num(b, no)?))
                })
                .collect::<Result<_>>()?;
            Ok(ShiftData::Vector(VectorShiftSequence::new(
                (n1, n2),
                entries,
            )?))
        }
        _ => Err(parse_err(no, "unsupported SHIFT/PERIOD combination")),
    }
}

pub fn read_shift(path: impl AsRef<Path>) -> Result<ShiftData> {
    read_shift_str(&std::fs::read_to_string(path)?)
}

pub fn write_shift(data: &ShiftData, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_shift_string(data))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_format() {
        let s =
            ShiftSequence::new(5, vec![Some(0), Some(3), Some(2), Some(1), Some(4), None]).unwrap();
        let text = write_shift_string(&ShiftData::Sequence(s.clone()));
        assert_eq!(text, "MDSHIFT 1\nSHIFT 5\nPERIOD 6\n0 3 2 1 4 *\n");
        assert_eq!(read_shift_str(&text).unwrap(), ShiftData::Sequence(s));
    }

    #[test]
    fn array_and_vector_round_trip() {
        let a = ShiftArray::new((2, 2), 3, vec![None, Some(0), Some(1), Some(2)]).unwrap();
        let d = ShiftData::Array(a.clone());
        assert_eq!(read_shift_str(&write_shift_string(&d)).unwrap(), d);
        let v = vector_shift_from_table(&a).unwrap();
        assert_eq!(v.entries(), &[(1, 0), (0, 1), (1, 1)]);
        let d = ShiftData::Vector(v.clone());
        assert_eq!(read_shift_str(&write_shift_string(&d)).unwrap(), d);
        assert_eq!(v.to_shift_array().unwrap(), a);
    }

    #[test]
    fn rejects_out_of_range_and_non_bijective() {
        assert!(matches!(
            ShiftSequence::from_values(3, &[0, 3]),
            Err(Error::ShiftOutOfRange { .. })
        ));
        assert!(matches!(
            read_shift_str("MDSHIFT 1\nSHIFT 3\nPERIOD 2\n0 5\n"),
            Err(Error::ShiftOutOfRange { .. })
        ));
        assert!(matches!(
            read_shift_str("MDSHIFT 1\nSHIFT 3\nPERIOD 3\n0 1\n"),
            Err(Error::EntryCount { .. })
        ));
        let dup = ShiftArray::new((2, 2), 3, vec![None, Some(0), Some(0), Some(2)]).unwrap();
        assert_eq!(
            vector_shift_from_table(&dup).unwrap_err(),
            Error::NotBijective(3)
        );
        let two_stars = ShiftArray::new((2, 2), 3, vec![None, None, Some(0), Some(2)]).unwrap();
        assert!(vector_shift_from_table(&two_stars).is_err());
    }

    #[test]
    fn shortened_drops_only_trailing_star() {
        let s = ShiftSequence::new(5, vec![None, Some(1), None]).unwrap();
        assert_eq!(s.shortened().entries(), &[None, Some(1)]);
        let t = ShiftSequence::from_values(5, &[1, 2]).unwrap();
        assert_eq!(t.clone().shortened(), t);
    }
}
