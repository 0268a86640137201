//! `asmt`: conversions, the triangle/tournament bijection, identity checks
//! and counts from the command line.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch and 2
//! for unusable input.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use asm_tournaments::bijection::{phi, phi_any_order, phi_s, psi, psi_s, Trace};
use asm_tournaments::enumeration::{
    count_strict_formula, count_t_s, enumerate_cmt, enumerate_ocmt, enumerate_strict, enumerate_tournaments,
    generate_t_s, BottomRow,
};
use asm_tournaments::poly::{brid_check, refid_check};
use asm_tournaments::tournament::binomial2;
use asm_tournaments::triangle::orientations_of;
use asm_tournaments::{Asm, Cmt, Tournament, Triangle};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "asmt",
    version,
    about = "Alternating sign matrices, oriented triangles and tournaments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    /// Output file, or `-` for standard output.
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between matrix, column-sum, triangle and tournament JSON.
    Convert {
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        #[command(flatten)]
        io: Io,
    },
    /// Square-ice vertex types of an alternating sign matrix.
    Ice {
        /// Emit per-column SE/SW/V counts instead of the grid.
        #[arg(long)]
        stats: bool,
        #[command(flatten)]
        io: Io,
    },
    /// All oriented triangles over a monotone triangle.
    Orient {
        #[command(flatten)]
        io: Io,
    },
    /// Oriented triangle to tournament (or pure-V triangle for other bottom rows).
    Phi {
        #[arg(long, value_enum, default_value_t = TraceMode::None)]
        trace: TraceMode,
        #[command(flatten)]
        io: Io,
    },
    /// Tournament (or pure-V triangle) to oriented triangle.
    Psi {
        #[arg(long, value_enum, default_value_t = TraceMode::None)]
        trace: TraceMode,
        #[command(flatten)]
        io: Io,
    },
    /// Check an identity or a property by exhaustive computation.
    Verify {
        #[arg(value_enum)]
        what: Verify,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Count a family of objects.
    Count {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, conflicts_with = "set")]
        n: Option<usize>,
        /// Bottom row, e.g. `1,2,4,5`.
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Enumerate)]
        method: Method,
    },
    /// The raising sequence for the order-5 worked example.
    TraceDemo {
        #[arg(long, value_enum, default_value_t = TraceMode::Text)]
        trace: TraceMode,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Asm,
    Cmt,
    Colsum,
    Tournament,
    Triangle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TraceMode {
    None,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Verify {
    Refid,
    Brid,
    Roundtrip,
    Confluence,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Asm,
    Ocmt,
    Tournaments,
    Strict,
    Ts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Enumerate,
    Formula,
}

/// Successful output, or a verification that ran but found a mismatch.
enum Done {
    Ok,
    Mismatch,
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(path: &str, text: &str) -> Result<()> {
    if path == "-" {
        io::stdout()
            .write_all(text.as_bytes())
            .context("writing standard output")
    } else {
        fs::write(path, text).with_context(|| format!("writing {path}"))
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

fn parse<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("input is not a valid {what}"))
}

#[derive(serde::Serialize, serde::Deserialize)]
struct ColsumJson {
    n: usize,
    rows: Vec<Vec<u8>>,
}

fn convert(from: Format, to: Format, text: &str) -> Result<String> {
    use Format::*;
    match (from, to) {
        (Asm | Cmt | Colsum, Asm | Cmt | Colsum) => {
            let a: asm_tournaments::Asm = match from {
                Asm => parse(text, "matrix")?,
                Cmt => parse::<asm_tournaments::Cmt>(text, "monotone triangle")?
                    .to_asm()
                    .context("triangle is not complete")?,
                _ => {
                    let c: ColsumJson = parse(text, "column-sum matrix")?;
                    if c.rows.len() != c.n {
                        bail!("declared order {} but {} rows", c.n, c.rows.len());
                    }
                    asm_tournaments::Asm::from_column_sums(&c.rows)?
                }
            };
            Ok(match to {
                Asm => to_json(&a),
                Cmt => to_json(&a.to_cmt()),
                _ => to_json(&ColsumJson {
                    n: a.n(),
                    rows: a.column_sums(),
                }),
            })
        }
        (Tournament | Triangle, Tournament | Triangle) => {
            let t: asm_tournaments::Tournament = match from {
                Tournament => parse(text, "tournament")?,
                _ => {
                    let tri: asm_tournaments::Triangle = parse(text, "triangle")?;
                    asm_tournaments::Tournament::from_triangle(&tri)?
                }
            };
            Ok(match to {
                Tournament => to_json(&t),
                _ => to_json(&t.to_triangle()),
            })
        }
        _ => bail!("cannot convert between a matrix format and a tournament format"),
    }
}

fn emit_trace(mode: TraceMode, trace: &Trace) {
    let text = match mode {
        TraceMode::None => return,
        TraceMode::Json => to_json(&trace.to_json()),
        TraceMode::Text => trace.to_text(),
    };
    eprint!("{text}");
}

fn run_phi(text: &str, mode: TraceMode) -> Result<String> {
    let o: Triangle = parse(text, "triangle")?;
    if o.is_standard() {
        let (t, trace) = phi(&o)?;
        emit_trace(mode, &trace);
        Ok(to_json(&t))
    } else {
        let (v, trace) = phi_s(&o)?;
        emit_trace(mode, &trace);
        Ok(to_json(&v))
    }
}

fn run_psi(text: &str, mode: TraceMode) -> Result<String> {
    let raw: Value = parse(text, "JSON document")?;
    let (o, trace) = if raw.get("edges").is_some() {
        let t: Tournament = parse(text, "tournament")?;
        psi(&t)?
    } else {
        let v: Triangle = parse(text, "triangle")?;
        psi_s(&v)?
    };
    emit_trace(mode, &trace);
    Ok(to_json(&o))
}

fn verify(what: Verify, n: usize, seed: u64, samples: usize) -> Result<(String, Done)> {
    let verdict = |ok: bool| if ok { Done::Ok } else { Done::Mismatch };
    match what {
        Verify::Refid | Verify::Brid => {
            let r = if what == Verify::Refid {
                refid_check(n)?
            } else {
                brid_check(n)?
            };
            let word = if r.equal { "equal" } else { "not equal" };
            let detail = if r.equal {
                format!("{word}, {} terms\n", r.lhs_terms)
            } else {
                format!("{word}, {} vs {} terms\n", r.lhs_terms, r.rhs_terms)
            };
            Ok((detail, verdict(r.equal)))
        }
        Verify::Roundtrip => {
            let mut bad = 0usize;
            let mut count = 0usize;
            for o in enumerate_ocmt(&BottomRow::standard(n))? {
                let (t, _) = phi(&o)?;
                if psi(&t)?.0 != o {
                    bad += 1;
                }
                count += 1;
            }
            for t in enumerate_tournaments(n)? {
                let (o, _) = psi(&t)?;
                if phi(&o)?.0 != t {
                    bad += 1;
                }
            }
            let msg = if bad == 0 {
                format!("ok, {count} oriented triangles and {count} tournaments\n")
            } else {
                format!("{bad} round trips failed\n")
            };
            Ok((msg, verdict(bad == 0)))
        }
        Verify::Confluence => {
            let all: Vec<Triangle> = enumerate_ocmt(&BottomRow::standard(n))?.collect();
            let mut bad = 0usize;
            let mut runs = 0usize;
            for o in &all {
                let (expected, _) = phi(o)?;
                for k in 0..samples as u64 {
                    let (t, _) = phi_any_order(o, seed.wrapping_add(k))?;
                    if t != expected {
                        bad += 1;
                    }
                    runs += 1;
                }
            }
            let msg = if bad == 0 {
                format!("agree, {runs} random orders over {} triangles\n", all.len())
            } else {
                format!("{bad} of {runs} random orders disagree\n")
            };
            Ok((msg, verdict(bad == 0)))
        }
    }
}

fn bottom_row(n: Option<usize>, set: Option<&str>) -> Result<BottomRow> {
    match (n, set) {
        (_, Some(s)) => Ok(s.parse::<BottomRow>()?),
        (Some(0), None) => bail!("--n must be positive"),
        (Some(n), None) => Ok(BottomRow::standard(n)),
        (None, None) => bail!("give --n or --set"),
    }
}

#[derive(serde::Serialize)]
struct CountJson<'a> {
    family: &'a str,
    s: &'a [u32],
    count: String,
    method: &'a str,
}

fn count(family: Family, s: &BottomRow, method: Method) -> Result<(String, Done)> {
    let n = s.len();
    let mut done = Done::Ok;
    let value: String = match (family, method) {
        (Family::Asm, Method::Enumerate) => {
            if !s.is_standard() {
                bail!("alternating sign matrices need the bottom row 1..n");
            }
            enumerate_cmt(s)?.count().to_string()
        }
        (Family::Asm, Method::Formula) => bail!("no closed formula is provided for alternating sign matrices"),
        (Family::Ocmt, Method::Enumerate) => enumerate_ocmt(s)?.count().to_string(),
        (Family::Ocmt, Method::Formula) => count_t_s(s)?.to_string(),
        (Family::Tournaments, _) if !s.is_standard() => bail!("tournaments need the bottom row 1..n"),
        (Family::Tournaments, Method::Enumerate) => enumerate_tournaments(n)?.count().to_string(),
        (Family::Tournaments, Method::Formula) => (BigInt::from(1) << binomial2(n)).to_string(),
        (Family::Strict, Method::Enumerate) => enumerate_strict(s)?.count().to_string(),
        (Family::Strict, Method::Formula) => count_strict_formula(s)?.to_string(),
        (Family::Ts, Method::Enumerate) => {
            let g = generate_t_s(s)?;
            if g.rejected > 0 {
                eprintln!("{} lifted triangles failed the admissibility filter", g.rejected);
                done = Done::Mismatch;
            }
            g.triangles.len().to_string()
        }
        (Family::Ts, Method::Formula) => count_t_s(s)?.to_string(),
    };
    let family_name = match family {
        Family::Asm => "asm",
        Family::Ocmt => "ocmt",
        Family::Tournaments => "tournaments",
        Family::Strict => "strict",
        Family::Ts => "ts",
    };
    let doc = CountJson {
        family: family_name,
        s: s.values(),
        count: value,
        method: match method {
            Method::Enumerate => "enumerate",
            Method::Formula => "formula",
        },
    };
    Ok((to_json(&doc), done))
}

fn demo_triangle() -> Triangle {
    Triangle::from_tokens(&[
        vec!["y:4"],
        vec!["y:3", "x:4"],
        vec!["y:2", "x:3", "y:5"],
        vec!["x:1", "y:3", "y:4", "y:5"],
        vec!["n:1", "n:2", "n:3", "n:4", "n:5"],
    ])
    .expect("demo triangle is well formed")
}

fn run(cli: Cli) -> Result<Done> {
    match cli.command {
        Command::Convert { from, to, io } => {
            let out = convert(from, to, &read_input(&io.input)?)?;
            write_output(&io.output, &out)?;
        }
        Command::Ice { stats, io } => {
            let a: Asm = parse(&read_input(&io.input)?, "matrix")?;
            let out = if stats {
                to_json(&a.vertex_stats())
            } else {
                to_json(&a.ice_grid())
            };
            write_output(&io.output, &out)?;
        }
        Command::Orient { io } => {
            let c: Cmt = parse(&read_input(&io.input)?, "monotone triangle")?;
            write_output(&io.output, &to_json(&orientations_of(&c)))?;
        }
        Command::Phi { trace, io } => {
            let out = run_phi(&read_input(&io.input)?, trace)?;
            write_output(&io.output, &out)?;
        }
        Command::Psi { trace, io } => {
            let out = run_psi(&read_input(&io.input)?, trace)?;
            write_output(&io.output, &out)?;
        }
        Command::Verify { what, n, seed, samples } => {
            let (msg, done) = verify(what, n, seed, samples)?;
            write_output("-", &msg)?;
            return Ok(done);
        }
        Command::Count { family, n, set, method } => {
            let s = bottom_row(n, set.as_deref())?;
            let (msg, done) = count(family, &s, method)?;
            write_output("-", &msg)?;
            return Ok(done);
        }
        Command::TraceDemo { trace } => {
            let (_, t) = phi(&demo_triangle()).map_err(|e| anyhow!(e))?;
            let out = match trace {
                TraceMode::Json => to_json(&t.to_json()),
                _ => t.to_text(),
            };
            write_output("-", &out)?;
        }
    }
    Ok(Done::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Done::Ok) => ExitCode::SUCCESS,
        Ok(Done::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
