//! Reproduction harness: exact checks of the conjectured complexity formulas,
//! random sweeps for the column-convergence conjecture, and sweeps over the
//! named constructions. Results are exact rationals; CSV output adds a float
//! `log_size` for plotting.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complexity::{berlekamp_massey, fmt_ratio, linear_complexity, EngineConfig};
use crate::constructions::{
    self, compose_2d, legendre_array_binary, legendre_array_ternary, ShiftSequence,
};
use crate::error::{Error, Result};
use crate::ff::{is_prime, prime_power, Field, FieldElement};
use crate::mdarray::PeriodicArray;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    F1,
    F2,
    A1,
    A2,
    A3,
    A4,
    A5,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::F1 => "F1",
            Construction::F2 => "F2",
            Construction::A1 => "A1",
            Construction::A2 => "A2",
            Construction::A3 => "A3",
            Construction::A4 => "A4",
            Construction::A5 => "A5",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "F1" => Construction::F1,
            "F2" => Construction::F2,
            "A1" => Construction::A1,
            "A2" => Construction::A2,
            "A3" => Construction::A3,
            "A4" => Construction::A4,
            "A5" => Construction::A5,
            _ => return Err(Error::UnknownConstruction(s.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub construction: String,
    pub p_or_n: u32,
    pub seed: u64,
    pub n: usize,
    pub l: usize,
    pub ln: Ratio<i64>,
    pub reference: Ratio<i64>,
    /// `reference - ln`
    pub diff: Ratio<i64>,
    pub log_size: f64,
}

impl SweepRecord {
    fn new(
        construction: &str,
        p_or_n: u32,
        seed: u64,
        n: usize,
        l: usize,
        reference: Ratio<i64>,
    ) -> Self {
        let ln = Ratio::new(l as i64, n as i64);
        SweepRecord {
            construction: construction.to_string(),
            p_or_n,
            seed,
            n,
            l,
            ln,
            reference,
            diff: reference - ln,
            log_size: (n as f64).ln(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub p: u32,
    pub n: usize,
    pub expected: usize,
    pub l: Option<usize>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Report {
    pub construction: Construction,
    pub rows: Vec<Table1Row>,
}

impl Table1Report {
    /// No row failed (skipped rows do not count as failures).
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{:<4} {:>6} {:>10} {:>10} {:>10}  status\n",
            "tag", "p", "N", "expected", "L"
        );
        for r in &self.rows {
            let l = r.l.map_or("-".to_string(), |l| l.to_string());
            let status = match &r.status {
                Status::Pass => "pass".to_string(),
                Status::Fail => "FAIL".to_string(),
                Status::Skipped(why) => format!("skipped ({why})"),
            };
            out.push_str(&format!(
                "{:<4} {:>6} {:>10} {:>10} {:>10}  {status}\n",
                self.construction.tag(),
                r.p,
                r.n,
                r.expected,
                l
            ));
        }
        out
    }
}

fn quadratic_field(p: u32) -> Result<Field> {
    Field::new(p, 2, None, None)
}

/// Checks the conjectured value of `L` for F1, F2, A3, A4 or A5 at each `p`.
/// Sizes above the cap are reported as skipped.
pub fn verify_table1(
    construction: Construction,
    p_list: &[u32],
    cfg: &EngineConfig,
) -> Result<Table1Report> {
    if matches!(construction, Construction::A1 | Construction::A2) {
        return Err(Error::UnknownConstruction(construction.to_string()));
    }
    for &p in p_list {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if matches!(construction, Construction::F2 | Construction::A5) && p <= 3 {
            return Err(Error::OutsideRange {
                construction: construction.to_string(),
                p,
            });
        }
    }
    let rows = p_list
        .par_iter()
        .map(|&p| table1_row(construction, p, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(Table1Report { construction, rows })
}

fn table1_row(construction: Construction, p: u32, cfg: &EngineConfig) -> Result<Table1Row> {
    let q = (p * p) as usize;
    let n = match construction {
        Construction::F1 | Construction::F2 => q,
        _ => q * (q - 1),
    };
    let f = quadratic_field(p)?;
    let expected = match construction {
        Construction::F1 => (q - 1) / 2,
        Construction::F2 => q - 1,
        Construction::A3 => berlekamp_massey(&constructions::sidelnikov_column(&f)?).l * (q - 1),
        Construction::A4 => (q - 1) * (q - 1) / 2,
        _ => (q - 1) * (q - 1),
    };
    if n > cfg.cap {
        let status = Status::Skipped(format!("N={n} above cap {}", cfg.cap));
        return Ok(Table1Row {
            p,
            n,
            expected,
            l: None,
            status,
        });
    }
    let array = match construction {
        Construction::F1 => legendre_array_binary(&f)?,
        Construction::F2 => legendre_array_ternary(&f)?,
        Construction::A3 => constructions::a3(&f, FieldElement::ZERO)?.array,
        Construction::A4 => constructions::a4(&f)?.array,
        _ => constructions::a5(&f)?.array,
    };
    let l = linear_complexity(&array, cfg)?;
    let status = if l == expected {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(Table1Row {
        p,
        n,
        expected,
        l: Some(l),
        status,
    })
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    /// Parameters that could not be built or computed, with the reason.
    pub skipped: Vec<(u32, String)>,
}

fn column_ln(c: &PeriodicArray) -> Ratio<i64> {
    Ratio::new(berlekamp_massey(c).l as i64, c.size() as i64)
}

fn floor_ln(floor: &PeriodicArray, cfg: &EngineConfig) -> Result<Ratio<i64>> {
    Ok(Ratio::new(
        linear_complexity(floor, cfg)? as i64,
        floor.size() as i64,
    ))
}

fn construction_record(
    construction: Construction,
    param: u32,
    cfg: &EngineConfig,
) -> Result<SweepRecord> {
    let (built, reference) = match construction {
        Construction::A1 => {
            let c = constructions::a1(param)?;
            let r = column_ln(&c.reference);
            (c, r)
        }
        Construction::A2 => {
            let (p, r) = prime_power(param as u64).ok_or(Error::NotPrime(param as u64))?;
            let f = Field::new(p, r, None, None)?;
            let c = constructions::a2(&f, constructions::a2_default_coeffs(&f))?;
            let r = column_ln(&c.reference);
            (c, r)
        }
        Construction::A3 => {
            let c = constructions::a3(&quadratic_field(param)?, FieldElement::ZERO)?;
            let r = column_ln(&c.reference);
            (c, r)
        }
        Construction::A4 => {
            let c = constructions::a4(&quadratic_field(param)?)?;
            let r = floor_ln(&c.reference, cfg)?;
            (c, r)
        }
        Construction::A5 => {
            let c = constructions::a5(&quadratic_field(param)?)?;
            let r = floor_ln(&c.reference, cfg)?;
            (c, r)
        }
        _ => return Err(Error::UnknownConstruction(construction.to_string())),
    };
    let l = linear_complexity(&built.array, cfg)?;
    Ok(SweepRecord::new(
        construction.tag(),
        param,
        0,
        built.array.size(),
        l,
        reference,
    ))
}

/// `L_n(reference) - L_n(A)` for A1..A5 at each parameter (`p`, or `q` for A2).
/// Moreno-Maric failures and over-cap sizes become skipped entries.
pub fn construction_sweep(
    construction: Construction,
    params: &[u32],
    cfg: &EngineConfig,
) -> Result<SweepOutcome> {
    if matches!(construction, Construction::F1 | Construction::F2) {
        return Err(Error::UnknownConstruction(construction.to_string()));
    }
    let results: Vec<_> = params
        .par_iter()
        .map(|&p| (p, construction_record(construction, p, cfg)))
        .collect();
    let mut out = SweepOutcome::default();
    for (p, res) in results {
        match res {
            Ok(rec) => out.records.push(rec),
            Err(
                e @ (Error::ShortCycle { .. } | Error::NoFullCycle(_) | Error::CapExceeded { .. }),
            ) => out.skipped.push((p, e.to_string())),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// `n = 5, 10, ..., n_max`.
pub fn default_n_list(n_max: u32) -> Vec<u32> {
    (5..=n_max).step_by(5).collect()
}

/// A random star-free shift sequence over `Z_n` composed (fill 0) with a random
/// nonzero binary column of period `n`.
pub fn random_composition(n: usize, rng: &mut impl Rng) -> Result<(ShiftSequence, PeriodicArray)> {
    let f2 = Arc::new(Field::prime(2)?);
    let shifts: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    let column = loop {
        let bits: Vec<u32> = (0..n).map(|_| rng.gen_range(0..2)).collect();
        if bits.iter().any(|&b| b != 0) {
            break bits;
        }
    };
    Ok((
        ShiftSequence::from_values(n, &shifts)?,
        PeriodicArray::sequence(f2, &column)?,
    ))
}

fn conjecture1_record(n: u32, seed: u64, cfg: &EngineConfig) -> Result<SweepRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (s, c) = random_composition(n as usize, &mut rng)?;
    let a = compose_2d(&s, &c, FieldElement::ZERO)?;
    let l = linear_complexity(&a, cfg)?;
    Ok(SweepRecord::new(
        "random",
        n,
        seed,
        a.size(),
        l,
        column_ln(&c),
    ))
}

/// Random compositions for each `n`, `samples` per `n`. Each sample gets its own
/// seed drawn in order from `rng_seed`, stored in the record's `seed` column.
pub fn conjecture1_sweep(
    n_list: &[u32],
    samples: usize,
    rng_seed: u64,
    cfg: &EngineConfig,
) -> Result<Vec<SweepRecord>> {
    let mut master = ChaCha8Rng::seed_from_u64(rng_seed);
    let tasks: Vec<(u32, u64)> = n_list
        .iter()
        .flat_map(|&n| (0..samples).map(move |_| n))
        .map(|n| (n, master.gen::<u64>()))
        .collect();
    tasks
        .par_iter()
        .map(|&(n, seed)| conjecture1_record(n, seed, cfg))
        .collect()
}

/// Exact mean of `diff` per parameter, in increasing parameter order.
pub fn mean_differences(records: &[SweepRecord]) -> Vec<(u32, Ratio<i64>)> {
    let mut groups: std::collections::BTreeMap<u32, (Ratio<i64>, i64)> = Default::default();
    for r in records {
        let g = groups
            .entry(r.p_or_n)
            .or_insert((Ratio::from_integer(0), 0));
        g.0 += r.diff;
        g.1 += 1;
    }
    groups
        .into_iter()
        .map(|(k, (sum, cnt))| (k, sum / cnt))
        .collect()
}

pub const CSV_HEADER: &str =
    "construction,p_or_n,seed,N,L,Ln_num,Ln_den,ref_num,ref_den,diff_num,diff_den,log_size";

pub fn write_csv<W: Write>(records: &[SweepRecord], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{:.6}",
            r.construction,
            r.p_or_n,
            r.seed,
            r.n,
            r.l,
            r.ln.numer(),
            r.ln.denom(),
            r.reference.numer(),
            r.reference.denom(),
            r.diff.numer(),
            r.diff.denom(),
            r.log_size
        )?;
    }
    Ok(())
}

pub fn csv_string(records: &[SweepRecord]) -> String {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV is ASCII")
}

/// One line per parameter: `n=.. mean_diff=num/den (float)`.
pub fn render_trend(means: &[(u32, Ratio<i64>)]) -> String {
    means
        .iter()
        .map(|(k, m)| {
            format!(
                "n={k} mean_diff={} ({:.4})\n",
                fmt_ratio(m),
                *m.numer() as f64 / *m.denom() as f64
            )
        })
        .collect()
}
