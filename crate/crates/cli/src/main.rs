use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hecke_core::characters::character_table;
use hecke_core::coxeter::SignVector;
use hecke_core::hecke::{DEFAULT_SYMMETRIZER_CAP, HARD_SYMMETRIZER_CAP};
use hecke_core::qseries::{q_krawtchouk, QKrawParams};
use hecke_core::spherical::{phi_via_recurrence, LieType, SphericalTable};
use hecke_core::verify::{run_suite, Suite};
use hecke_core::{Error, Params, Rational, Scalar};

const MAX_N_VAR: &str = "HECKE_SPHERES_MAX_N";

#[derive(Parser)]
#[command(
    name = "hecke-spheres",
    version,
    about = "Hecke algebras of type B and q-Krawtchouk spherical functions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and print its report as JSON.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print the character table or the spherical function table.
    Table {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        at: Specialization,
    },
    /// Evaluate K_f(q^{-d}; a, n; q).
    Krawtchouk {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// The parameter a as a scalar expression in p and q (default p).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[command(flatten)]
        at: Specialization,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Characters,
    Spherical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Specialization {
    #[arg(long, requires = "q_half", conflicts_with = "preset", allow_hyphen_values = true)]
    p_half: Option<String>,
    #[arg(long, requires = "p_half", conflicts_with = "preset", allow_hyphen_values = true)]
    q_half: Option<String>,
    /// Parameters of a finite group of Lie type: B, C, 2D, 2A-odd, 2A-even.
    #[arg(long, requires = "q0")]
    preset: Option<String>,
    #[arg(long, requires = "preset", allow_hyphen_values = true)]
    q0: Option<String>,
}

enum Point {
    Half(Rational, Rational),
    Full(Rational, Rational),
}

enum Failure {
    /// Bad arguments or preconditions: exit 2.
    Usage(String),
    /// Computation failed or a check did not hold: exit 1.
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DomainError(_) | Error::Parse(_) | Error::CapExceeded { .. } | Error::RankMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn parse_rational(name: &str, s: &str) -> CliResult<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Failure::Usage(format!("--{name}: cannot parse {s:?} as a rational: {e}")))
}

impl Specialization {
    fn point(&self) -> CliResult<Option<Point>> {
        if let (Some(p), Some(q)) = (&self.p_half, &self.q_half) {
            return Ok(Some(Point::Half(
                parse_rational("p-half", p)?,
                parse_rational("q-half", q)?,
            )));
        }
        if let (Some(g), Some(q0)) = (&self.preset, &self.q0) {
            let g: LieType = g.parse()?;
            let (p, q) = g.preset(&parse_rational("q0", q0)?)?;
            return Ok(Some(Point::Full(p, q)));
        }
        Ok(None)
    }
}

impl Point {
    fn eval(&self, v: &Scalar) -> hecke_core::Result<Rational> {
        match self {
            Point::Half(a, b) => v.specialize(a, b),
            Point::Full(p, q) => v.specialize_pq(p, q),
        }
    }
}

/// The rank cap: 8 by default, overridable through the environment up to
/// the hard limit.
fn rank_cap() -> CliResult<usize> {
    let cap = match std::env::var(MAX_N_VAR) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::Usage(format!("{MAX_N_VAR}={s:?} is not a nonnegative integer")))?,
        Err(_) => DEFAULT_SYMMETRIZER_CAP,
    };
    if cap > HARD_SYMMETRIZER_CAP {
        eprintln!(
            "warning: {MAX_N_VAR}={cap} exceeds the hard limit {HARD_SYMMETRIZER_CAP}; using {HARD_SYMMETRIZER_CAP}"
        );
        return Ok(HARD_SYMMETRIZER_CAP);
    }
    Ok(cap)
}

fn check_rank(n: usize) -> CliResult<()> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let cap = rank_cap()?;
    if n > cap {
        return Err(Failure::Usage(format!(
            "--n {n} exceeds the rank cap {cap}: symmetrization costs O(n!*n) and modules have 2^n \
             coordinates; raise {MAX_N_VAR} (at most {HARD_SYMMETRIZER_CAP})"
        )));
    }
    Ok(())
}

fn cmd_verify(n: usize, suite: &str) -> CliResult<bool> {
    let suite: Suite = suite.parse()?;
    check_rank(n)?;
    let report = run_suite(suite, n)?;
    for c in report.checks.iter().filter(|c| !c.pass) {
        eprintln!("FAIL {}: {}", c.id, c.witness);
    }
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(report.passed())
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A labelled table ready for output.
struct Grid {
    n: usize,
    row_key: &'static str,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    cells: Vec<Vec<String>>,
}

impl Grid {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let rows: Vec<_> = self
                    .row_labels
                    .iter()
                    .zip(&self.cells)
                    .map(|(label, cells)| {
                        let mut m = serde_json::Map::new();
                        let key = match label.parse::<u64>() {
                            Ok(v) => serde_json::Value::from(v),
                            Err(_) => serde_json::Value::from(label.clone()),
                        };
                        m.insert(self.row_key.into(), key);
                        m.insert("values".into(), serde_json::Value::from(cells.clone()));
                        serde_json::Value::Object(m)
                    })
                    .collect();
                let mut out = serde_json::json!({ "n": self.n, "rows": rows });
                if self.row_key == "y" {
                    out["columns"] = serde_json::Value::from(self.col_labels.clone());
                }
                serde_json::to_string_pretty(&out).expect("table serializes")
            }
            Format::Csv => {
                let mut out = String::from(self.row_key);
                for c in &self.col_labels {
                    out.push(',');
                    out.push_str(&csv_field(c));
                }
                for (label, cells) in self.row_labels.iter().zip(&self.cells) {
                    out.push('\n');
                    out.push_str(&csv_field(label));
                    for c in cells {
                        out.push(',');
                        out.push_str(&csv_field(c));
                    }
                }
                out
            }
        }
    }
}

fn render_cells<T: Display>(
    rows: &[Vec<Scalar>],
    point: &Option<Point>,
    label: impl Fn(usize, usize) -> T,
) -> CliResult<Vec<Vec<String>>> {
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, v)| match point {
                    None => Ok(v.to_string()),
                    Some(pt) => pt.eval(v).map(|x| x.to_string()).map_err(|e| match e {
                        Error::DenominatorVanishes(s) => {
                            Failure::Runtime(format!("denominator vanishes at entry {}: {s}", label(r, c)))
                        }
                        other => other.into(),
                    }),
                })
                .collect()
        })
        .collect()
}

fn cmd_table(kind: Kind, n: usize, format: Format, at: &Specialization) -> CliResult<()> {
    check_rank(n)?;
    let point = at.point()?;
    let pr = Params::<Scalar>::symbolic();
    let grid = match kind {
        Kind::Characters => {
            let names: Vec<String> = SignVector::all(n).map(|x| x.to_string()).collect();
            let table = character_table(&pr, n);
            let cells = render_cells(&table, &point, |r, c| format!("(y={}, x={})", names[r], names[c]))?;
            Grid {
                n,
                row_key: "y",
                row_labels: names.clone(),
                col_labels: names,
                cells,
            }
        }
        Kind::Spherical => {
            let SphericalTable { values, .. } = phi_via_recurrence(&pr, n)?;
            let cells = render_cells(&values, &point, |f, d| format!("(f={f}, d={d})"))?;
            Grid {
                n,
                row_key: "f",
                row_labels: (0..=n).map(|f| f.to_string()).collect(),
                col_labels: (0..=n).map(|d| format!("d{d}")).collect(),
                cells,
            }
        }
    };
    println!("{}", grid.render(format));
    Ok(())
}

fn cmd_krawtchouk(f: usize, d: usize, n: usize, a: Option<&str>, at: &Specialization) -> CliResult<()> {
    let point = at.point()?;
    let pr = Params::<Scalar>::symbolic();
    let a: Scalar = match a {
        Some(s) => s.parse()?,
        None => pr.p(),
    };
    let v = q_krawtchouk(&pr, &QKrawParams::new(f, d, a, n)?)?;
    match point {
        None => println!("{v}"),
        Some(pt) => match pt.eval(&v) {
            Ok(x) => println!("{x}"),
            Err(Error::DenominatorVanishes(s)) => {
                return Err(Failure::Runtime(format!("denominator vanishes: {s}")));
            }
            Err(e) => return Err(e.into()),
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 2 {
                eprint!("{e}");
            } else {
                print!("{e}");
            }
            return ExitCode::from(code);
        }
    };
    let result = match &cli.cmd {
        Cmd::Verify { n, suite } => cmd_verify(*n, suite),
        Cmd::Table { kind, n, format, at } => cmd_table(*kind, *n, *format, at).map(|_| true),
        Cmd::Krawtchouk { f, d, n, a, at } => cmd_krawtchouk(*f, *d, *n, a.as_deref(), at).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
