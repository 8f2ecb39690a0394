//! Command-line front end for `negsums`: compute single objects, export
//! tables and run the verification suites.

pub mod document;
pub mod render;

use clap::{Parser, Subcommand, ValueEnum};
use negsums::algebra::{parse_ncpoly, parse_word, words_up_to_grade};
use negsums::asymptotics::{asym_profile, bminus, cminus};
use negsums::harmonic::hsum;
use negsums::polylog::{polylog_lij, polylog_op, polylog_rec};
use negsums::toplaw::{kernel_member, ncp_product, top};
use negsums::verify::{self, Suite};
use negsums::{Error, Law, NCPoly, ParseError, Word};

use document::{
    laurent_terms, ncpoly_terms, npoly_terms, rational_string, Body, CheckRow, OutputDocument, Profile, Row,
    Table, Value, Verdict,
};
pub use render::{render, Format};

#[derive(Debug, Parser)]
#[command(
    name = "negsums",
    version,
    about = "Exact harmonic sums and polylogarithms at non-positive indices"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Largest grade (weight plus length) for `table` and `verify`.
    #[arg(long = "max-grade", global = true)]
    pub max_grade: Option<usize>,
    /// Seed for the random cases of `verify`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Op,
    Rec,
    Lij,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    #[value(name = "C")]
    C,
    #[value(name = "B")]
    B,
    #[value(name = "H")]
    H,
    #[value(name = "Li")]
    Li,
    #[value(name = "top")]
    Top,
}

impl TableKind {
    fn name(self) -> &'static str {
        match self {
            TableKind::C => "C",
            TableKind::B => "B",
            TableKind::H => "H",
            TableKind::Li => "Li",
            TableKind::Top => "top",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// H⁻_w as a polynomial in N.
    Hsum { word: String },
    /// Li⁻_w as a polynomial in u = 1/(1-z).
    Polylog {
        word: String,
        #[arg(long, value_enum, default_value = "op")]
        route: Route,
    },
    /// Product of two polynomials under shuffle, stuffle or top.
    Product { law: Law, a: String, b: String },
    /// The top product of two polynomials.
    Top { a: String, b: String },
    /// Degree n and leading coefficients C and B of H⁻_P.
    Profile { poly: String },
    /// Whether P lies in the common kernel of H⁻ and Li⁻.
    Kernel { poly: String },
    /// Run a property suite.
    Verify {
        #[arg(value_name = "SUITE")]
        suite_pos: Option<Suite>,
        #[arg(value_name = "MAX_GRADE")]
        max_grade_pos: Option<usize>,
        #[arg(value_name = "SEED")]
        seed_pos: Option<u64>,
        #[arg(long, conflicts_with = "suite_pos")]
        suite: Option<Suite>,
    },
    /// Tabulate C⁻, B⁻, H⁻, Li⁻ or top over all words up to a grade.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(value_name = "MAX_GRADE")]
        max_grade_pos: Option<usize>,
        #[arg(value_name = "FORMAT", value_enum)]
        format_pos: Option<Format>,
    },
}

pub const DEFAULT_TABLE_GRADE: usize = 5;
pub const DEFAULT_VERIFY_GRADE: usize = 6;

#[derive(Debug)]
pub enum CliError {
    Parse { input: String, error: ParseError },
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse { input, error } => {
                let col = input
                    .get(..error.position)
                    .map_or(error.position, |s| s.chars().count());
                writeln!(f, "parse error {error}")?;
                writeln!(f, "  {input}")?;
                write!(f, "  {}^", " ".repeat(col))
            }
            CliError::Domain(m) => write!(f, "domain error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// A finished command: the document to print and the process exit code.
pub struct Outcome {
    pub document: OutputDocument,
    pub format: Format,
    pub exit_code: u8,
}

fn word(s: &str) -> Result<Word, CliError> {
    parse_word(s).map_err(|error| CliError::Parse {
        input: s.to_string(),
        error,
    })
}

fn poly(s: &str) -> Result<NCPoly, CliError> {
    parse_ncpoly(s).map_err(|error| CliError::Parse {
        input: s.to_string(),
        error,
    })
}

pub fn cmd_hsum(w: &str) -> Result<OutputDocument, CliError> {
    let p = hsum(&word(w)?);
    Ok(OutputDocument::new(
        format!("hsum {w}"),
        Body::Npoly(npoly_terms(&p)),
    ))
}

pub fn cmd_polylog(w: &str, route: Route) -> Result<OutputDocument, CliError> {
    let v = word(w)?;
    let f = match route {
        Route::Op => polylog_op(&v),
        Route::Rec => polylog_rec(&v),
        Route::Lij => polylog_lij(&v)?,
    };
    Ok(OutputDocument::new(
        format!("polylog {w}"),
        Body::Laurent(laurent_terms(&f)),
    ))
}

pub fn cmd_product(law: Law, a: &str, b: &str) -> Result<OutputDocument, CliError> {
    let p = ncp_product(law, &poly(a)?, &poly(b)?);
    Ok(OutputDocument::new(
        format!("product {law} {a} {b}"),
        Body::Ncpoly(ncpoly_terms(&p)),
    ))
}

pub fn cmd_top(a: &str, b: &str) -> Result<OutputDocument, CliError> {
    let p = ncp_product(Law::Top, &poly(a)?, &poly(b)?);
    Ok(OutputDocument::new(
        format!("top {a} {b}"),
        Body::Ncpoly(ncpoly_terms(&p)),
    ))
}

pub fn cmd_profile(p: &str) -> Result<OutputDocument, CliError> {
    let prof = asym_profile(&poly(p)?)?;
    let body = Body::Profile(Profile {
        n: prof.degree,
        c: rational_string(&prof.lead_h),
        b: rational_string(&prof.lead_li),
    });
    Ok(OutputDocument::new(format!("profile {p}"), body))
}

pub fn cmd_kernel(p: &str) -> Result<OutputDocument, CliError> {
    let q = poly(p)?;
    let body = Body::Verdict(Verdict {
        holds: kernel_member(&q),
        statement: format!("{q} lies in ker H⁻ = ker Li⁻"),
        checks: Vec::new(),
    });
    Ok(OutputDocument::new(format!("kernel {p}"), body))
}

pub fn cmd_verify(suite: Suite, max_grade: usize, seed: u64) -> OutputDocument {
    let report = verify::run(suite, max_grade, seed);
    let checks = report
        .checks
        .iter()
        .map(|c| CheckRow {
            suite: c.suite.to_string(),
            identity: c.identity.to_string(),
            cases: c.cases,
            failures: c.failures,
            examples: c.examples.clone(),
        })
        .collect();
    let body = Body::Verdict(Verdict {
        holds: report.passed(),
        statement: format!("suite {suite} up to grade {max_grade} with seed {seed}"),
        checks,
    });
    OutputDocument::new(format!("verify {suite} {max_grade} {seed}"), body)
}

fn indices(w: &Word) -> Vec<u32> {
    w.indices().to_vec()
}

/// Rows in graded order: ascending grade, then length, then indices. For
/// `top`, pairs `u ≤ v` of non-empty words with combined grade at most
/// `max_grade`, ordered by `u` then `v`.
pub fn cmd_table(kind: TableKind, max_grade: usize) -> OutputDocument {
    let all = words_up_to_grade(max_grade);
    let single = |value: &dyn Fn(&Word) -> Value| -> Vec<Row> {
        all.iter()
            .map(|w| Row {
                words: vec![indices(w)],
                value: value(w),
            })
            .collect()
    };
    let rows = match kind {
        TableKind::C => single(&|w| Value::Scalar(rational_string(&cminus(w)))),
        TableKind::B => single(&|w| Value::Scalar(rational_string(&bminus(w)))),
        TableKind::H => single(&|w| Value::Npoly(npoly_terms(&hsum(w)))),
        TableKind::Li => single(&|w| Value::Laurent(laurent_terms(&polylog_op(w)))),
        TableKind::Top => {
            let nonempty: Vec<&Word> = all.iter().filter(|w| !w.is_empty()).collect();
            let mut rows = Vec::new();
            for (i, u) in nonempty.iter().enumerate() {
                for v in &nonempty[i..] {
                    if u.grade() + v.grade() <= max_grade {
                        rows.push(Row {
                            words: vec![indices(u), indices(v)],
                            value: Value::Ncpoly(ncpoly_terms(&top(u, v).to_ncpoly())),
                        });
                    }
                }
            }
            rows
        }
    };
    let body = Body::Table(Table {
        table: kind.name().to_string(),
        max_grade,
        rows,
    });
    OutputDocument::new(format!("table {} {max_grade}", kind.name()), body)
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mut format = cli.format.unwrap_or(Format::Json);
    let mut exit_code = 0;
    let document = match &cli.command {
        Command::Hsum { word } => cmd_hsum(word)?,
        Command::Polylog { word, route } => cmd_polylog(word, *route)?,
        Command::Product { law, a, b } => cmd_product(*law, a, b)?,
        Command::Top { a, b } => cmd_top(a, b)?,
        Command::Profile { poly } => cmd_profile(poly)?,
        Command::Kernel { poly } => cmd_kernel(poly)?,
        Command::Verify {
            suite_pos,
            max_grade_pos,
            seed_pos,
            suite,
        } => {
            let suite = suite_pos.or(*suite).unwrap_or(Suite::All);
            let grade = max_grade_pos.or(cli.max_grade).unwrap_or(DEFAULT_VERIFY_GRADE);
            let seed = seed_pos.or(cli.seed).unwrap_or(0);
            let doc = cmd_verify(suite, grade, seed);
            if matches!(&doc.body, Body::Verdict(v) if !v.holds) {
                exit_code = 1;
            }
            doc
        }
        Command::Table {
            kind,
            max_grade_pos,
            format_pos,
        } => {
            if let Some(f) = format_pos {
                format = *f;
            }
            cmd_table(
                *kind,
                max_grade_pos.or(cli.max_grade).unwrap_or(DEFAULT_TABLE_GRADE),
            )
        }
    };
    Ok(Outcome {
        document,
        format,
        exit_code,
    })
}
