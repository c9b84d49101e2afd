//! `wallkit`: walls, chambers and moduli verdicts from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, 3 unsupported input.

mod cache;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use output::Format;
use wallkit::chamberdeck::ChamberDeck;
use wallkit::moduli::{plane_polarization, ClassifyError};
use wallkit::oracle::{verify_invariance_grid, verify_sign_law, verify_wall_oracle, SignLaw};
use wallkit::wallset::WallSet;
use wallkit::{
    classify, classify_p2, discriminant_bound, enumerate_walls, format_rational, DivClass,
    Location, ModuliVerdict, PlaneC1, Polarization, SurfaceGeom,
};

#[derive(Parser)]
#[command(
    name = "wallkit",
    version,
    about = "Walls, chambers and moduli verdicts on Hirzebruch surfaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the walls of a type.
    Walls(WallsArgs),
    /// Chamber decomposition of the ample slopes.
    Chambers(TypeArgs),
    /// Moduli verdict for one polarization.
    Classify(ClassifyArgs),
    /// Run a brute-force verifier.
    Verify(VerifyArgs),
    /// Verdict table over every chamber and wall of a range of types.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
    rank: u32,
    /// First Chern class: `a,b`, `a*s+b*f`, `0` or `sf`.
    #[arg(long, value_parser = parse_c1, allow_hyphen_values = true)]
    c1: DivClass,
    #[arg(long, allow_hyphen_values = true)]
    c2: i64,
    #[arg(long)]
    e: u32,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct WallsArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Cache file; the WALLKIT_CACHE environment variable takes precedence.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Classify on the projective plane through its one-point blow-up.
    #[arg(long)]
    p2: bool,
    /// `0` or `sf` (or `a,b`) on F_e; `0` or `L` with `--p2`.
    #[arg(long, allow_hyphen_values = true)]
    c1: String,
    #[arg(long, allow_hyphen_values = true)]
    c2: i64,
    /// Polarization as `a,b` (meaning a*s + b*f).
    #[arg(long = "L", value_parser = parse_class, allow_hyphen_values = true, required_unless_present = "p2", conflicts_with = "p2")]
    l: Option<DivClass>,
    #[arg(long, required_unless_present = "p2", conflicts_with = "p2")]
    e: Option<u32>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    Law(SignLaw),
    Walls,
    Chambers,
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "walls" => Ok(Check::Walls),
            "chambers" => Ok(Check::Chambers),
            _ => s.parse::<SignLaw>().map(Check::Law).map_err(|_| {
                format!("unknown lemma `{s}`; expected 2.6, 2.11, 2.21, 2.29, walls or chambers")
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = Check::from_str)]
    lemma: Check,
    #[arg(long, default_value_t = 3)]
    e_max: u32,
    #[arg(long, default_value_t = 12)]
    c2_max: i64,
    /// Seed for the sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Polarization pairs per cell for `chambers`.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct SweepArgs {
    /// `0` or `sf`.
    #[arg(long)]
    c1: String,
    #[arg(long, default_value_t = 3)]
    e_max: u32,
    #[arg(long, default_value_t = 8)]
    c2_max: i64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn parse_class(s: &str) -> Result<DivClass, String> {
    s.parse::<DivClass>().map_err(|e| e.to_string())
}

fn parse_c1(s: &str) -> Result<DivClass, String> {
    match s.trim() {
        "0" => Ok(DivClass::ZERO),
        "sf" => Ok(DivClass::SIGMA_PLUS_FIBER),
        other => parse_class(other),
    }
}

enum Failure {
    Usage(String),
    Unsupported(String),
    Verify,
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

type Run = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let (out, code) = match dispatch(cli.cmd) {
        Ok(out) => (out, 0),
        Err(Failure::Verify) => (String::new(), 1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            (String::new(), 2)
        }
        Err(Failure::Unsupported(m)) => {
            eprintln!("error: {m}");
            (String::new(), 3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            (String::new(), 1)
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code)
}

fn dispatch(cmd: Cmd) -> Run {
    match cmd {
        Cmd::Walls(a) => cmd_walls(a),
        Cmd::Chambers(a) => cmd_chambers(a),
        Cmd::Classify(a) => cmd_classify(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Sweep(a) => cmd_sweep(a),
    }
}

fn cmd_walls(a: WallsArgs) -> Run {
    let t = &a.ty;
    let g = SurfaceGeom::new(t.e);
    let walls = match cache::resolve(a.cache) {
        Some(path) => {
            let mut c = cache::WallCache::open(&path);
            let key = cache::key(t.rank, t.c1, t.c2, t.e);
            let (walls, outcome) =
                c.get_or_compute(&key, || enumerate_walls(t.rank, t.c1, t.c2, g).walls)?;
            if outcome == cache::Outcome::Corrupt {
                eprintln!("warning: cache entry {key} failed its digest check; recomputed");
            }
            walls
        }
        None => enumerate_walls(t.rank, t.c1, t.c2, g).walls,
    };
    let reason = discriminant_bound(t.rank, 1, t.c1, t.c2, g).err();
    if let (Some(r), Format::Json | Format::Csv) = (&reason, t.format) {
        eprintln!("{r}");
    }
    let rows: Vec<_> = walls.iter().map(output::wall_row).collect();
    Ok(match t.format {
        Format::Json => output::json(&walls)?,
        Format::Csv => output::csv(&output::WALL_COLUMNS, &rows)?,
        Format::Table => match reason {
            Some(r) => format!("{r}\n"),
            None if walls.is_empty() => "no walls\n".to_string(),
            None => output::table(&output::WALL_COLUMNS, &rows),
        },
    })
}

fn cmd_chambers(t: TypeArgs) -> Run {
    let g = SurfaceGeom::new(t.e);
    let deck = ChamberDeck::from_walls(enumerate_walls(t.rank, t.c1, t.c2, g), g);
    let header = ["chamber", "lo", "hi", "lo_walls", "hi_walls"];
    let join = |v: &[DivClass]| {
        v.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let rows: Vec<Vec<String>> = deck
        .chambers
        .iter()
        .enumerate()
        .map(|(k, c)| {
            vec![
                k.to_string(),
                c.lo.to_string(),
                c.hi.to_string(),
                join(&c.lo_walls),
                join(&c.hi_walls),
            ]
        })
        .collect();
    Ok(match t.format {
        Format::Json => output::json(&deck)?,
        Format::Csv => output::csv(&header, &rows)?,
        Format::Table => output::table(&header, &rows),
    })
}

#[derive(Serialize)]
struct ClassifyOut {
    c1: DivClass,
    c2: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<u32>,
    #[serde(rename = "L")]
    l: DivClass,
    r_l: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    blowup_n: Option<i64>,
    #[serde(flatten)]
    verdict: ModuliVerdict,
}

fn unsupported(c1: &str, allowed: &str) -> Failure {
    Failure::Unsupported(format!(
        "unsupported c1 `{c1}`; classification covers c1 = {allowed} only"
    ))
}

fn cmd_classify(a: ClassifyArgs) -> Run {
    let out = if a.p2 {
        let c1 = match a.c1.trim() {
            "0" => PlaneC1::Zero,
            "L" => PlaneC1::Line,
            other => return Err(unsupported(other, "0 or L on the plane")),
        };
        let (n, l) = plane_polarization(c1, a.c2);
        ClassifyOut {
            c1: c1.pullback(),
            c2: a.c2,
            e: None,
            l: l.class(),
            r_l: format_rational(&l.slope()),
            blowup_n: Some(n),
            verdict: classify_p2(c1, a.c2),
        }
    } else {
        let e = a.e.expect("clap requires --e");
        let g = SurfaceGeom::new(e);
        let c1 = parse_c1(&a.c1).map_err(Failure::Usage)?;
        let l = Polarization::new(a.l.expect("clap requires --L"), g)
            .map_err(|err| Failure::Usage(err.to_string()))?;
        let verdict = match classify(c1, a.c2, &l, g) {
            Ok(v) => v,
            Err(ClassifyError::UnsupportedC1(_)) => return Err(unsupported(&a.c1, "0 or s+f")),
        };
        ClassifyOut {
            c1,
            c2: a.c2,
            e: Some(e),
            l: l.class(),
            r_l: format_rational(&l.slope()),
            blowup_n: None,
            verdict,
        }
    };
    let v = &out.verdict;
    let fields: Vec<(&str, String)> = vec![
        ("c1", out.c1.to_string()),
        ("c2", out.c2.to_string()),
        ("e", out.e.map_or("-".into(), |e| e.to_string())),
        ("L", out.l.to_string()),
        ("r_L", out.r_l.clone()),
        ("status", json_word(&v.status)),
        (
            "dimension",
            v.dimension.map_or("-".into(), |d| d.to_string()),
        ),
        ("smooth", v.smooth.to_string()),
        ("irreducible", v.irreducible.to_string()),
        ("rationality", json_word(&v.rationality)),
        ("provenance", v.provenance.tag().to_string()),
    ];
    Ok(match a.format {
        Format::Json => output::json(&out)?,
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|f| f.0).collect();
            output::csv(&header, &[fields.iter().map(|f| f.1.clone()).collect()])?
        }
        Format::Table => fields
            .iter()
            .map(|(k, v)| format!("{k:<12}{v}\n"))
            .collect(),
    })
}

/// The bare string a unit enum serializes to.
fn json_word<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        Ok(other) => other.to_string(),
        Err(_) => String::new(),
    }
}

fn report<T: Serialize + std::fmt::Display>(r: &T, pass: bool, format: ReportFormat) -> Run {
    let text = match format {
        ReportFormat::Json => output::json(r)?,
        ReportFormat::Text => format!("{r}\n"),
    };
    if pass {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Verify)
    }
}

fn cmd_verify(a: VerifyArgs) -> Run {
    if a.c2_max < 0 {
        return Err(Failure::Usage("--c2-max must be nonnegative".into()));
    }
    match a.lemma {
        Check::Law(law) => {
            let r = verify_sign_law(law, a.e_max, a.c2_max);
            report(&r, r.pass, a.format)
        }
        Check::Walls => {
            let r = verify_wall_oracle(a.e_max, a.c2_max);
            report(&r, r.pass, a.format)
        }
        Check::Chambers => {
            let r = verify_invariance_grid(a.e_max, a.c2_max, a.samples, a.seed);
            report(&r, r.pass, a.format)
        }
    }
}

#[derive(Serialize)]
struct SweepRow {
    e: u32,
    c1: DivClass,
    c2: i64,
    r_l: String,
    on_wall: bool,
    #[serde(flatten)]
    verdict: ModuliVerdict,
}

fn cmd_sweep(a: SweepArgs) -> Run {
    let c1 = match a.c1.trim() {
        "0" => DivClass::ZERO,
        "sf" => DivClass::SIGMA_PLUS_FIBER,
        other => return Err(unsupported(other, "0 or s+f")),
    };
    let mut rows = Vec::new();
    for e in 0..=a.e_max {
        let g = SurfaceGeom::new(e);
        for c2 in 0..=a.c2_max {
            let walls: WallSet = enumerate_walls(3, c1, c2, g);
            let deck = ChamberDeck::from_walls(walls, g);
            let mut slopes: Vec<_> = deck.chambers.iter().map(|c| c.sample_slope(g)).collect();
            slopes.extend(deck.faces.iter().map(|f| f.slope));
            slopes.sort();
            for s in slopes {
                let l = Polarization::from_slope(s, g).map_err(|err| Failure::Other(err.into()))?;
                let verdict = classify(c1, c2, &l, g).map_err(|err| Failure::Other(err.into()))?;
                let on_wall = matches!(deck.locate(&l), Location::Wall(_));
                rows.push(SweepRow {
                    e,
                    c1,
                    c2,
                    r_l: format_rational(&s),
                    on_wall,
                    verdict,
                });
            }
        }
    }
    let header = [
        "e",
        "c1",
        "c2",
        "r_L",
        "on_wall",
        "status",
        "dimension",
        "rationality",
        "provenance",
    ];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.e.to_string(),
                r.c1.to_string(),
                r.c2.to_string(),
                r.r_l.clone(),
                r.on_wall.to_string(),
                json_word(&r.verdict.status),
                r.verdict.dimension.map_or(String::new(), |d| d.to_string()),
                json_word(&r.verdict.rationality),
                r.verdict.provenance.tag().to_string(),
            ]
        })
        .collect();
    Ok(match a.format {
        Format::Json => output::json(&rows)?,
        Format::Csv => output::csv(&header, &cells)?,
        Format::Table => output::table(&header, &cells),
    })
}
