//! Command-line interface: `construct`, `complexity`, `bm`, `verify`, `sweep`.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 computation refused by the
//! cap, 3 verification failure or engine disagreement.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::complexity::{
    berlekamp_massey, circulant_rank, fmt_ratio, staircase_groebner, unfolded_complexity,
    EngineConfig, DEFAULT_CAP,
};
use crate::constructions::{self as cons, read_shift, write_shift_string, ShiftData};
use crate::error::{Error, Result};
use crate::experiments::{self, Construction};
use crate::ff::{prime_power, Field, FieldElement};
use crate::mdarray::{
    pairwise_coprime, read_array, write_array_string, MonomialOrder, PeriodicArray, Polynomial,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "mdlc",
    version,
    about = "Multidimensional periodic arrays and their linear complexity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an array or shift sequence and write it in file format.
    Construct(ConstructArgs),
    /// Linear complexity of an array file.
    Complexity(ComplexityArgs),
    /// Berlekamp-Massey on one period of a sequence.
    Bm(BmArgs),
    /// Check the conjectured complexity formulas.
    Verify(VerifyArgs),
    /// Random or construction sweeps written as CSV.
    Sweep(SweepArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    F1,
    F2,
    A1,
    A2,
    A3,
    A4,
    A5,
    IndexTable,
    LegendreCol,
    SidelnikovCol,
    Expquad,
    Logquad,
    MorenoMaric,
    Compose2d,
    Compose3dSa,
    Compose3dVs,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub preset: Preset,
    /// Prime `p`; quadratic-field presets work over `F_{p^2}`.
    #[arg(long)]
    pub p: Option<u32>,
    /// Field order `q = p^r`.
    #[arg(long)]
    pub q: Option<u32>,
    /// Low-order coefficients `c_0,..,c_{r-1}` of the monic field modulus.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// Primitive element, as its integer encoding.
    #[arg(long)]
    pub alpha: Option<u32>,
    /// Quadratic `a,b,c` for `a x^2 + b x + c` (field element encodings).
    #[arg(long, value_delimiter = ',')]
    pub coeffs: Option<Vec<u32>>,
    /// Value for columns or cells whose shift is `*`.
    #[arg(long, default_value_t = 0)]
    pub fill: u32,
    /// Keep the trailing `*` of a Moreno-Maric sequence.
    #[arg(long)]
    pub full: bool,
    /// Write the index table as a vector shift sequence.
    #[arg(long)]
    pub vector: bool,
    /// Shift file for the compose presets.
    #[arg(long)]
    pub shift: Option<PathBuf>,
    /// Column array file for compose2d and compose3d-sa.
    #[arg(long)]
    pub column: Option<PathBuf>,
    /// Floor array file for compose3d-vs.
    #[arg(long)]
    pub floor: Option<PathBuf>,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Staircase,
    Rank,
    Unfold,
    All,
}

#[derive(Args, Debug)]
pub struct ComplexityArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "grlex")]
    pub order: MonomialOrder,
    #[arg(long, value_enum, default_value_t = Engine::Staircase)]
    pub engine: Engine,
    /// Print the delta set and reduced basis.
    #[arg(long)]
    pub show_basis: bool,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct BmArgs {
    /// One period, comma separated element encodings.
    #[arg(long, value_delimiter = ',', required = true)]
    pub seq: Vec<u32>,
    #[arg(long)]
    pub p: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, required = true)]
    pub table1: bool,
    #[arg(long)]
    pub construction: Construction,
    #[arg(long, value_delimiter = ',', required = true)]
    pub p_list: Vec<u32>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(
        long,
        conflicts_with = "construction",
        required_unless_present = "construction"
    )]
    pub conjecture1: bool,
    #[arg(long)]
    pub construction: Option<Construction>,
    /// Parameters for a construction sweep (`p`, or `q` for A2).
    #[arg(long, value_delimiter = ',')]
    pub p_list: Option<Vec<u32>>,
    /// Random sweep uses `n = 5, 10, ..., n_max`.
    #[arg(long, default_value_t = 60)]
    pub n_max: u32,
    #[arg(long, default_value_t = 25)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Construct(a) => construct(&a, &mut out),
        Command::Complexity(a) => complexity(&a, &mut out),
        Command::Bm(a) => bm(&a, &mut out),
        Command::Verify(a) => verify(&a, &mut out),
        Command::Sweep(a) => sweep(&a, &mut out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn field_from(p: Option<u32>, q: Option<u32>, r: u32, args: &ConstructArgs) -> Result<Field> {
    let (p, r) = match (p, q) {
        (_, Some(q)) => prime_power(q as u64).ok_or(Error::NotPrime(q as u64))?,
        (Some(p), None) => (p, r),
        (None, None) => {
            return Err(Error::Parse {
                line: 0,
                msg: "--p or --q is required".into(),
            })
        }
    };
    Field::new(p, r, args.modulus.as_deref(), args.alpha)
}

/// `F_{p^2}` from `--p` (or `--q = p^2`).
fn quadratic_field(args: &ConstructArgs) -> Result<Field> {
    let f = field_from(args.p, args.q, 2, args)?;
    if f.degree() != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            got: f.degree(),
        });
    }
    Ok(f)
}

/// `F_q` from `--q` (or `--p` as a prime field).
fn any_field(args: &ConstructArgs) -> Result<Field> {
    field_from(args.p, args.q, 1, args)
}

fn prime_arg(args: &ConstructArgs) -> Result<u32> {
    args.p.ok_or(Error::Parse {
        line: 0,
        msg: "--p is required".into(),
    })
}

fn quadratic_coeffs(
    f: &Field,
    args: &ConstructArgs,
    default: [FieldElement; 3],
) -> Result<[FieldElement; 3]> {
    match &args.coeffs {
        None => Ok(default),
        Some(c) if c.len() == 3 => Ok([
            f.element(c[0] as u64)?,
            f.element(c[1] as u64)?,
            f.element(c[2] as u64)?,
        ]),
        Some(c) => Err(Error::LengthMismatch(format!(
            "--coeffs needs 3 values, got {}",
            c.len()
        ))),
    }
}

fn echo_field(f: &Field) -> String {
    let m: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    format!(
        "field p={} r={} modulus={} alpha={}",
        f.characteristic(),
        f.degree(),
        m.join(","),
        f.alpha()
    )
}

fn required(path: &Option<PathBuf>, flag: &str) -> Result<PathBuf> {
    path.clone().ok_or(Error::Parse {
        line: 0,
        msg: format!("{flag} is required"),
    })
}

fn construct(args: &ConstructArgs, out: &mut impl Write) -> Result<i32> {
    let mut notes = Vec::new();
    let text = match args.preset {
        Preset::F1 | Preset::F2 => {
            let f = quadratic_field(args)?;
            notes.push(echo_field(&f));
            let a = if args.preset == Preset::F1 {
                cons::legendre_array_binary(&f)?
            } else {
                cons::legendre_array_ternary(&f)?
            };
            write_array_string(&a)
        }
        Preset::A1 => {
            let p = prime_arg(args)?;
            let alpha = cons::moreno_maric_alpha(&Field::prime(p)?)?;
            notes.push(format!("field p={p} r=1 modulus= alpha={alpha}"));
            write_array_string(&cons::a1(p)?.array)
        }
        Preset::A2 => {
            let f = any_field(args)?;
            let coeffs = quadratic_coeffs(&f, args, cons::a2_default_coeffs(&f))?;
            notes.push(echo_field(&f));
            notes.push(format!("coeffs={},{},{}", coeffs[0], coeffs[1], coeffs[2]));
            write_array_string(&cons::a2(&f, coeffs)?.array)
        }
        Preset::A3 | Preset::A4 | Preset::A5 => {
            let f = quadratic_field(args)?;
            notes.push(echo_field(&f));
            let c = match args.preset {
                Preset::A3 => cons::a3(&f, FieldElement(args.fill))?,
                Preset::A4 => cons::a4(&f)?,
                _ => cons::a5(&f)?,
            };
            write_array_string(&c.array)
        }
        Preset::IndexTable => {
            let f = quadratic_field(args)?;
            notes.push(echo_field(&f));
            let w = cons::index_table(&f)?;
            let data = if args.vector {
                ShiftData::Vector(cons::vector_shift_from_table(&w)?)
            } else {
                ShiftData::Array(w)
            };
            write_shift_string(&data)
        }
        Preset::LegendreCol => write_array_string(&cons::legendre_column(prime_arg(args)?)?),
        Preset::SidelnikovCol => {
            let f = any_field(args)?;
            notes.push(echo_field(&f));
            write_array_string(&cons::sidelnikov_column(&f)?)
        }
        Preset::Expquad => {
            let p = prime_arg(args)?;
            let f = Field::new(p, 1, None, args.alpha)?;
            let one = f.one();
            let c = quadratic_coeffs(&f, args, [one, one, one])?;
            notes.push(echo_field(&f));
            let s = cons::exp_quadratic_shift(p, f.alpha().0, c[0].0, c[1].0, c[2].0)?;
            notes.push(format!("S={s}"));
            write_shift_string(&ShiftData::Sequence(s))
        }
        Preset::Logquad => {
            let f = any_field(args)?;
            let c = quadratic_coeffs(&f, args, cons::a2_default_coeffs(&f))?;
            notes.push(echo_field(&f));
            let s = cons::log_quadratic_shift(&f, c[0], c[1], c[2])?;
            notes.push(format!("S={s}"));
            write_shift_string(&ShiftData::Sequence(s))
        }
        Preset::MorenoMaric => {
            let f = any_field(args)?;
            let alpha = match args.alpha {
                Some(a) => f.element(a as u64)?,
                None => cons::moreno_maric_alpha(&f)?,
            };
            notes.push(format!("{} map_alpha={alpha}", echo_field(&f)));
            let s = if f.degree() == 1 {
                let s = cons::moreno_maric_prime(f.characteristic(), alpha.0)?;
                if args.full {
                    s
                } else {
                    s.shortened()
                }
            } else {
                cons::moreno_maric_field(&f, alpha)?
            };
            notes.push(format!("S={s}"));
            write_shift_string(&ShiftData::Sequence(s))
        }
        Preset::Compose2d | Preset::Compose3dSa => {
            let shift = read_shift(required(&args.shift, "--shift")?)?;
            let column = read_array(required(&args.column, "--column")?)?;
            let fill = FieldElement(args.fill);
            let a = match (args.preset, shift) {
                (Preset::Compose2d, ShiftData::Sequence(s)) => cons::compose_2d(&s, &column, fill)?,
                (Preset::Compose3dSa, ShiftData::Array(sa)) => {
                    cons::compose_3d_shift_array(&sa, &column, fill)?
                }
                (Preset::Compose3dSa, ShiftData::Vector(v)) => {
                    cons::compose_3d_shift_array(&v.to_shift_array()?, &column, fill)?
                }
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: "shift file kind does not match the preset".into(),
                    })
                }
            };
            write_array_string(&a)
        }
        Preset::Compose3dVs => {
            let shift = read_shift(required(&args.shift, "--shift")?)?;
            let floor = read_array(required(&args.floor, "--floor")?)?;
            let s = match shift {
                ShiftData::Vector(v) => v,
                ShiftData::Array(w) => cons::vector_shift_from_table(&w)?,
                ShiftData::Sequence(_) => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: "compose3d-vs needs a vector shift file".into(),
                    })
                }
            };
            write_array_string(&cons::compose_3d_vector_shift(&s, &floor)?)
        }
    };
    match &args.out {
        Some(path) => {
            fs::write(path, &text)?;
            for n in &notes {
                writeln!(out, "{n}")?;
            }
            writeln!(out, "wrote {}", path.display())?;
        }
        None => {
            for n in &notes {
                eprintln!("{n}");
            }
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(EXIT_OK)
}

fn basis_strings(basis: &[Polynomial], order: MonomialOrder) -> Vec<String> {
    basis.iter().map(|g| g.display(order)).collect()
}

fn complexity(args: &ComplexityArgs, out: &mut impl Write) -> Result<i32> {
    let a = read_array(&args.input)?;
    let cfg = EngineConfig { cap: args.cap };
    let n = a.size();
    let ln = |l: usize| num_rational::Ratio::new(l as u64, n as u64);
    match args.engine {
        Engine::Staircase => {
            let r = staircase_groebner(&a, args.order, &cfg)?;
            if args.json {
                let mut v = json!({
                    "engine": "staircase",
                    "N": n,
                    "L": r.l,
                    "Ln": fmt_ratio(&r.normalized),
                    "order": r.order.name(),
                });
                if args.show_basis {
                    v["delta"] = json!(r.delta_set);
                    v["basis"] = json!(basis_strings(&r.groebner_basis, r.order));
                }
                writeln!(out, "{v}")?;
            } else {
                write!(out, "{}", r.report(args.show_basis))?;
            }
            Ok(EXIT_OK)
        }
        Engine::Rank | Engine::Unfold => {
            let (name, l) = if args.engine == Engine::Rank {
                ("rank", circulant_rank(&a, &cfg)?)
            } else {
                ("unfold", unfolded_complexity(&a)?)
            };
            if args.json {
                writeln!(
                    out,
                    "{}",
                    json!({"engine": name, "N": n, "L": l, "Ln": fmt_ratio(&ln(l))})
                )?;
            } else {
                writeln!(out, "L={l} Ln={}", fmt_ratio(&ln(l)))?;
            }
            Ok(EXIT_OK)
        }
        Engine::All => all_engines(&a, args, &cfg, out),
    }
}

fn all_engines(
    a: &PeriodicArray,
    args: &ComplexityArgs,
    cfg: &EngineConfig,
    out: &mut impl Write,
) -> Result<i32> {
    let main = staircase_groebner(a, args.order, cfg)?;
    let other_order = match args.order {
        MonomialOrder::Grlex => MonomialOrder::Lex,
        MonomialOrder::Lex => MonomialOrder::Grlex,
    };
    let mut results = vec![
        (format!("staircase-{}", args.order.name()), main.l),
        (
            format!("staircase-{}", other_order.name()),
            staircase_groebner(a, other_order, cfg)?.l,
        ),
        ("rank".to_string(), circulant_rank(a, cfg)?),
    ];
    if a.dims() == 1 {
        results.push(("bm".to_string(), berlekamp_massey(a).l));
    }
    if pairwise_coprime(a.periods()) {
        results.push(("unfold".to_string(), unfolded_complexity(a)?));
    }
    let agree = results.iter().all(|(_, l)| *l == main.l);
    if args.json {
        let engines: serde_json::Map<String, serde_json::Value> =
            results.iter().map(|(k, l)| (k.clone(), json!(l))).collect();
        writeln!(
            out,
            "{}",
            json!({"engine": "all", "N": a.size(), "L": main.l, "Ln": fmt_ratio(&main.normalized), "engines": engines, "consistent": agree})
        )?;
    } else {
        write!(out, "{}", main.report(args.show_basis))?;
        for (k, l) in &results {
            writeln!(out, "{k}: L={l}")?;
        }
        writeln!(out, "{}", if agree { "consistent" } else { "DISAGREEMENT" })?;
    }
    Ok(if agree { EXIT_OK } else { EXIT_VERIFY })
}

fn bm(args: &BmArgs, out: &mut impl Write) -> Result<i32> {
    let f = Arc::new(Field::prime(args.p)?);
    let s = PeriodicArray::sequence(f, &args.seq)?;
    let r = berlekamp_massey(&s);
    writeln!(out, "L={}", r.l)?;
    writeln!(
        out,
        "m(x)={}",
        r.minimal_polynomial.display(MonomialOrder::Grlex)
    )?;
    Ok(EXIT_OK)
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> Result<i32> {
    let report = experiments::verify_table1(
        args.construction,
        &args.p_list,
        &EngineConfig { cap: args.cap },
    )?;
    write!(out, "{}", report.render())?;
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}

fn sweep(args: &SweepArgs, out: &mut impl Write) -> Result<i32> {
    let cfg = EngineConfig { cap: args.cap };
    let records = match args.construction {
        Some(c) => {
            let params = args.p_list.clone().ok_or(Error::Parse {
                line: 0,
                msg: "--p-list is required".into(),
            })?;
            let res = experiments::construction_sweep(c, &params, &cfg)?;
            for (p, why) in &res.skipped {
                writeln!(out, "skipped {c} at {p}: {why}")?;
            }
            for r in &res.records {
                writeln!(
                    out,
                    "{c} {}: N={} L={} Ln={} ref={} diff={}",
                    r.p_or_n,
                    r.n,
                    r.l,
                    fmt_ratio(&r.ln),
                    fmt_ratio(&r.reference),
                    fmt_ratio(&r.diff)
                )?;
            }
            res.records
        }
        None => {
            let n_list = experiments::default_n_list(args.n_max);
            let recs = experiments::conjecture1_sweep(&n_list, args.samples, args.seed, &cfg)?;
            write!(
                out,
                "{}",
                experiments::render_trend(&experiments::mean_differences(&recs))
            )?;
            recs
        }
    };
    if let Some(path) = &args.out {
        experiments::write_csv(&records, io::BufWriter::new(fs::File::create(path)?))?;
        writeln!(out, "wrote {} records to {}", records.len(), path.display())?;
    }
    Ok(EXIT_OK)
}
