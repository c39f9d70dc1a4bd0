use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use qgenocchi::algebra::{Parse, QLaurent, Rational, Render, SLaurent};
use qgenocchi::exec::Execution;
use qgenocchi::fib::{fib_poly, q_fib_poly, q_fib_poly_inv};
use qgenocchi::functional::{l_functional, m_functional, make_v, q_l_functional, q_m_functional};
use qgenocchi::tables::{self, CoefficientRing};
use qgenocchi::verify::{self, Profile};
use qgenocchi::Error;

const MAX_CLASSICAL: usize = 200;
const MAX_Q: usize = 60;

#[derive(Parser)]
#[command(
    name = "qgenocchi",
    version,
    about = "Exact Genocchi, Bernoulli and q-Fibonacci computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a sequence, triangle, matrix or polynomial.
    Gen(GenArgs),
    /// Check identities exactly.
    Verify(VerifyArgs),
    /// Apply a linear functional to a polynomial.
    Functional(FunctionalArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Genocchi,
    Bernoulli,
    Median,
    Triangle,
    Fib,
    AMatrix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Args)]
struct GenArgs {
    kind: Kind,
    /// Size: number of terms, polynomial index or matrix rows.
    #[arg(long, short)]
    n: Option<usize>,
    /// Number of triangle rows (alias of --n).
    #[arg(long)]
    rows: Option<usize>,
    /// Use the q-analogue.
    #[arg(long)]
    q: bool,
    /// Replace q by 1/q (requires --q).
    #[arg(long)]
    inv_q: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id, e.g. I2_4.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    id: Vec<String>,
    /// Run every registered identity.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value = "full")]
    profile: String,
    /// Cap every index parameter at this value.
    #[arg(long)]
    max_n: Option<i64>,
    /// Run cases one after another.
    #[arg(long)]
    sequential: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FunctionalName {
    L,
    M,
    V,
    Lq,
    Mq,
}

#[derive(Args)]
struct FunctionalArgs {
    #[arg(long, value_enum, ignore_case = true)]
    name: FunctionalName,
    /// Polynomial in s (in x for V).
    #[arg(
        long,
        conflicts_with = "poly_fib",
        required_unless_present = "poly_fib"
    )]
    poly: Option<String>,
    /// Use the Fibonacci polynomial of this index.
    #[arg(long)]
    poly_fib: Option<i64>,
    /// Largest monomial degree in the value table; defaults to the degree.
    #[arg(long)]
    table_size: Option<usize>,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => run_gen(a),
        Command::Verify(a) => return run_verify(a),
        Command::Functional(a) => run_functional(a),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(msg) => usage(msg),
    }
}

fn json(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

fn sequence<C: Render>(
    format: Format,
    kind: &str,
    ring: CoefficientRing,
    values: &[C],
    start: usize,
    step: usize,
) -> String {
    match format {
        Format::Json => json(tables::values_json(kind, ring, values, "n", start, step)),
        Format::Csv => tables::values_csv(values, "n", start, step),
        Format::Latex => tables::render_latex(&[values.to_vec_rendered()]),
        Format::Text => {
            let parts: Vec<String> = values.iter().map(Render::render_compact).collect();
            parts.join(" ") + "\n"
        }
    }
}

/// Rows with explicit `(row, column)` keys and starting indices.
fn grid<C: Render>(
    format: Format,
    kind: &str,
    ring: CoefficientRing,
    rows: &[Vec<C>],
    keys: (&str, &str),
    starts: (usize, usize),
) -> String {
    match format {
        Format::Json => json(tables::triangle_json(kind, ring, rows, keys, starts)),
        Format::Csv => tables::triangle_csv(rows, keys, starts),
        Format::Latex => tables::render_latex(rows),
        Format::Text => tables::render_text_rows(rows),
    }
}

trait Rendered {
    fn to_vec_rendered(&self) -> Vec<Text>;
}

impl<C: Render> Rendered for [C] {
    fn to_vec_rendered(&self) -> Vec<Text> {
        self.iter().map(|c| Text(c.render())).collect()
    }
}

/// A pre-rendered entry.
#[derive(Clone)]
struct Text(String);

impl Render for Text {
    fn render(&self) -> String {
        self.0.clone()
    }

    fn single_term(&self) -> Option<(bool, String)> {
        None
    }
}

fn invert(v: Vec<QLaurent>, inv: bool) -> Vec<QLaurent> {
    if inv {
        v.iter().map(QLaurent::substitute_q_inverse).collect()
    } else {
        v
    }
}

fn run_gen(a: GenArgs) -> Result<String, String> {
    if a.inv_q && !a.q {
        return Err("--inv-q requires --q".into());
    }
    if a.q && matches!(a.kind, Kind::Bernoulli | Kind::AMatrix) {
        return Err("this kind has no q-analogue".into());
    }
    let n = match (a.n, a.rows) {
        (Some(n), None) | (None, Some(n)) => n,
        (Some(_), Some(_)) => return Err("give only one of --n and --rows".into()),
        (None, None) => return Err("missing --n".into()),
    };
    let limit = if a.q { MAX_Q } else { MAX_CLASSICAL };
    if n > limit {
        return Err(format!("n = {n} exceeds the limit {limit}"));
    }
    let laurent = CoefficientRing::Laurent;
    Ok(match a.kind {
        Kind::Genocchi => {
            if n == 0 {
                return Err("genocchi needs --n >= 1".into());
            }
            if a.q {
                let v = invert(tables::q_genocchi(n), a.inv_q);
                sequence(a.format, "q_genocchi", laurent, &v, 2, 2)
            } else {
                let v = tables::genocchi(n);
                sequence(a.format, "genocchi", CoefficientRing::Integer, &v, 2, 2)
            }
        }
        Kind::Bernoulli => {
            let v = tables::bernoulli(n);
            sequence(a.format, "bernoulli", CoefficientRing::Rational, &v, 0, 1)
        }
        Kind::Median => {
            if a.q {
                if n == 0 {
                    return Err("q-median needs --n >= 1".into());
                }
                let v = invert(tables::q_median_genocchi(n), a.inv_q);
                sequence(a.format, "q_median_genocchi", laurent, &v, 1, 2)
            } else {
                let v = tables::median_genocchi(n);
                sequence(
                    a.format,
                    "median_genocchi",
                    CoefficientRing::Integer,
                    &v,
                    1,
                    2,
                )
            }
        }
        Kind::Triangle => {
            if a.q {
                let t = tables::q_seidel_triangle(n);
                let t = if a.inv_q {
                    t.map(QLaurent::substitute_q_inverse)
                } else {
                    t
                };
                grid(
                    a.format,
                    "q_seidel_triangle",
                    laurent,
                    t.rows(),
                    ("i", "j"),
                    (1, 1),
                )
            } else {
                let t = tables::seidel_triangle(n);
                grid(
                    a.format,
                    "seidel_triangle",
                    CoefficientRing::Integer,
                    t.rows(),
                    ("i", "j"),
                    (1, 1),
                )
            }
        }
        Kind::Fib => {
            let i = n as i64;
            let (poly, ring) = if a.q {
                let p = if a.inv_q {
                    q_fib_poly_inv(i)
                } else {
                    q_fib_poly(i)
                };
                (p.map_err(|e| e.to_string())?.render(), laurent)
            } else {
                (
                    fib_poly(i).map_err(|e| e.to_string())?.render(),
                    CoefficientRing::Integer,
                )
            };
            match a.format {
                Format::Text => poly + "\n",
                Format::Json => json(serde_json::json!({
                    "kind": if a.q { "q_fibonacci" } else { "fibonacci" },
                    "coefficient_ring": ring.as_str(),
                    "inverse_q": a.inv_q,
                    "values": [{ "n": n, "value": poly }],
                })),
                Format::Csv => format!("n,value\n{n},{}\n", poly.replace(' ', "")),
                Format::Latex => tables::render_latex(&[vec![Text(poly)]]),
            }
        }
        Kind::AMatrix => {
            let m = tables::a_matrix(n);
            let rows = m.to_integers().map_err(|e| e.to_string())?;
            grid(
                a.format,
                "a_matrix",
                CoefficientRing::Integer,
                &rows,
                ("n", "k"),
                (1, 0),
            )
        }
    })
}

fn run_verify(a: VerifyArgs) -> ExitCode {
    let Some(mut profile) = Profile::by_name(&a.profile) else {
        return usage(format!("unknown profile `{}` (quick, full)", a.profile));
    };
    if let Some(n) = a.max_n {
        profile = profile.with_max_n(n);
    }
    let exec = if a.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let ids: Vec<&str> = if a.all {
        verify::registry().iter().map(|s| s.id).collect()
    } else {
        a.id.iter().map(String::as_str).collect()
    };
    let report = match verify::verify_suite(&ids, &profile, None, exec) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    match a.format {
        ReportFormat::Json => println!("{}", report.to_json()),
        ReportFormat::Text => print!("{}", report.to_text()),
    }
    if report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn degree_of<C: qgenocchi::algebra::Ring>(p: &SLaurent<C>) -> usize {
    p.degree().unwrap_or(0).max(0) as usize
}

fn guidance(e: Error) -> String {
    match e {
        Error::DegreeExceedsTable { degree, .. } => {
            format!("{e}; pass --table-size {degree} or larger")
        }
        other => other.to_string(),
    }
}

fn run_functional(a: FunctionalArgs) -> Result<String, String> {
    use FunctionalName::*;
    let value = match a.name {
        L | M | V => {
            let p: SLaurent<Rational> = match (&a.poly, a.poly_fib) {
                (Some(text), _) if a.name == V => {
                    SLaurent::<Rational>::parse_var(text, "x").map_err(|e| e.to_string())?
                }
                (Some(text), _) => SLaurent::<Rational>::parse(text).map_err(|e| e.to_string())?,
                (None, Some(_)) if a.name == V => return Err("V takes --poly in x".into()),
                (None, Some(i)) => fib_poly(i).map_err(|e| e.to_string())?,
                (None, None) => return Err("missing --poly or --poly-fib".into()),
            };
            let size = a.table_size.unwrap_or_else(|| degree_of(&p));
            let f = match a.name {
                L => l_functional(size),
                M => m_functional(size),
                _ => make_v(&tables::bernoulli(size)),
            };
            f.apply(&p).map_err(guidance)?.render_compact()
        }
        Lq | Mq => {
            let p: SLaurent<QLaurent> = match (&a.poly, a.poly_fib) {
                (Some(text), _) => SLaurent::<QLaurent>::parse(text).map_err(|e| e.to_string())?,
                (None, Some(i)) if a.name == Lq => q_fib_poly_inv(i).map_err(|e| e.to_string())?,
                (None, Some(i)) => q_fib_poly(i).map_err(|e| e.to_string())?,
                (None, None) => return Err("missing --poly or --poly-fib".into()),
            };
            let size = a.table_size.unwrap_or_else(|| degree_of(&p));
            if a.name == Lq {
                q_l_functional(size)
                    .apply(&p)
                    .map_err(guidance)?
                    .render_compact()
            } else {
                q_m_functional(size)
                    .apply(&p)
                    .map_err(guidance)?
                    .render_compact()
            }
        }
    };
    Ok(value + "\n")
}
