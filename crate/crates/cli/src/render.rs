//! CSV and LaTeX renderings of an [`OutputDocument`].

use negsums::{LaurentU, NCPoly, NPoly, ParseError, Rational, Word};
use num_traits::{One, Signed};

use crate::document::{
    laurent_from_terms, ncpoly_from_terms, npoly_from_terms, parse_coeff, Body, OutputDocument, Value,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

enum Cell {
    Text(String),
    Rational(Rational),
    Word(Word),
    Labelled(String, Vec<Word>),
    NPoly(NPoly),
    Laurent(LaurentU),
    NCPoly(NCPoly),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Rational(r) => r.to_string(),
            Cell::Word(w) => w.to_string(),
            Cell::Labelled(_, ws) => ws.iter().map(Word::to_string).collect::<Vec<_>>().join(" "),
            Cell::NPoly(p) => p.to_string(),
            Cell::Laurent(f) => f.to_string(),
            Cell::NCPoly(p) => p.to_string(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Cell::Text(s) => latex_escape(s),
            Cell::Rational(r) => latex_rational(r),
            Cell::Word(w) => latex_word(w),
            Cell::Labelled(op, ws) => match ws.as_slice() {
                [a, b] => format!("{} {op} {}", latex_word(a), latex_word(b)),
                _ => {
                    let words: Vec<String> = ws.iter().map(latex_word).collect();
                    format!("{op}_{{{}}}", words.join(","))
                }
            },
            Cell::NPoly(p) => latex_sum(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .rev()
                    .map(|(k, c)| (c.clone(), latex_power("N", k as i64))),
            ),
            Cell::Laurent(f) => latex_sum(f.terms().rev().map(|(k, c)| (c.clone(), latex_power("u", k)))),
            Cell::NCPoly(p) => latex_sum(p.terms().rev().map(|(w, c)| {
                let mono = if w.is_empty() {
                    String::new()
                } else {
                    latex_word(w)
                };
                (c.clone(), mono)
            })),
        }
    }
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', "\\textbackslash{}")
        .replace('_', "\\_")
        .replace('&', "\\&")
        .replace('%', "\\%")
        .replace('#', "\\#")
}

pub fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
}

/// `y_{2}y_{0}^{3}`, with runs of a repeated letter collapsed.
pub fn latex_word(w: &Word) -> String {
    if w.is_empty() {
        return "\\varepsilon".to_string();
    }
    let mut out = String::new();
    let s = w.indices();
    let mut i = 0;
    while i < s.len() {
        let run = s[i..].iter().take_while(|&&x| x == s[i]).count();
        out += &format!("y_{{{}}}", s[i]);
        if run > 1 {
            out += &format!("^{{{run}}}");
        }
        i += run;
    }
    out
}

fn latex_power(var: &str, k: i64) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{{{k}}}"),
    }
}

fn latex_sum(terms: impl Iterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms.filter(|(c, _)| !num_traits::Zero::is_zero(c)) {
        let abs = c.abs();
        out += match (out.is_empty(), c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        if mono.is_empty() {
            out += &latex_rational(&abs);
        } else if abs.is_one() {
            out += &mono;
        } else {
            out += &latex_rational(&abs);
            out += &mono;
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn words(ws: &[Vec<u32>]) -> Vec<Word> {
    ws.iter().map(|w| Word::new(w.clone())).collect()
}

fn table_label(table: &str) -> &'static str {
    match table {
        "C" => "C^{-}",
        "B" => "B^{-}",
        "H" => "H^{-}",
        "Li" => "\\mathrm{Li}^{-}",
        _ => "\\top",
    }
}

fn value_cell(v: &Value) -> Result<Cell, ParseError> {
    Ok(match v {
        Value::Scalar(s) => Cell::Rational(parse_coeff(s)?),
        Value::Npoly(t) => Cell::NPoly(npoly_from_terms(t)?),
        Value::Laurent(t) => Cell::Laurent(laurent_from_terms(t)?),
        Value::Ncpoly(t) => Cell::NCPoly(ncpoly_from_terms(t)?),
    })
}

fn term_rows<T>(
    terms: &[T],
    key: impl Fn(&T) -> Cell,
    coeff: impl Fn(&T) -> &str,
) -> Result<Vec<Vec<Cell>>, ParseError> {
    terms
        .iter()
        .map(|t| Ok(vec![key(t), Cell::Rational(parse_coeff(coeff(t))?)]))
        .collect()
}

/// Header and body cells for the tabular formats. CSV lists one term per
/// row; LaTeX puts a whole polynomial in one cell.
fn tabulate(doc: &OutputDocument, latex: bool) -> Result<(Vec<&'static str>, Vec<Vec<Cell>>), ParseError> {
    let input = || Cell::Text(doc.meta.input.clone());
    Ok(match &doc.body {
        Body::Npoly(t) if latex => (
            vec!["input", "value"],
            vec![vec![input(), Cell::NPoly(npoly_from_terms(t)?)]],
        ),
        Body::Laurent(t) if latex => (
            vec!["input", "value"],
            vec![vec![input(), Cell::Laurent(laurent_from_terms(t)?)]],
        ),
        Body::Ncpoly(t) if latex => (
            vec!["input", "value"],
            vec![vec![input(), Cell::NCPoly(ncpoly_from_terms(t)?)]],
        ),
        Body::Npoly(t) => (
            vec!["power", "coeff"],
            term_rows(t, |x| Cell::Text(x.power.to_string()), |x| &x.coeff)?,
        ),
        Body::Laurent(t) => (
            vec!["upower", "coeff"],
            term_rows(t, |x| Cell::Text(x.upower.to_string()), |x| &x.coeff)?,
        ),
        Body::Ncpoly(t) => (
            vec!["word", "coeff"],
            term_rows(t, |x| Cell::Word(Word::new(x.word.clone())), |x| &x.coeff)?,
        ),
        Body::Profile(p) => (
            vec!["input", "n", "C", "B"],
            vec![vec![
                input(),
                Cell::Text(p.n.to_string()),
                Cell::Rational(parse_coeff(&p.c)?),
                Cell::Rational(parse_coeff(&p.b)?),
            ]],
        ),
        Body::Table(t) => {
            let mut rows = Vec::with_capacity(t.rows.len());
            for r in &t.rows {
                let key = if latex {
                    Cell::Labelled(table_label(&t.table).to_string(), words(&r.words))
                } else {
                    Cell::Labelled(String::new(), words(&r.words))
                };
                rows.push(vec![key, value_cell(&r.value)?]);
            }
            (vec!["words", "value"], rows)
        }
        Body::Verdict(v) if v.checks.is_empty() => (
            vec!["statement", "holds"],
            vec![vec![
                Cell::Text(v.statement.clone()),
                Cell::Text(v.holds.to_string()),
            ]],
        ),
        Body::Verdict(v) => (
            vec!["suite", "identity", "cases", "failures"],
            v.checks
                .iter()
                .map(|c| {
                    vec![
                        Cell::Text(c.suite.clone()),
                        Cell::Text(c.identity.clone()),
                        Cell::Text(c.cases.to_string()),
                        Cell::Text(c.failures.to_string()),
                    ]
                })
                .collect(),
        ),
    })
}

pub fn to_csv(doc: &OutputDocument) -> Result<String, ParseError> {
    let (header, rows) = tabulate(doc, false)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| ParseError {
        position: 0,
        message: e.to_string(),
    };
    w.write_record(&header).map_err(io)?;
    for row in rows {
        w.write_record(row.iter().map(Cell::plain)).map_err(io)?;
    }
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Table rows `a & b \\`, one per line, under a `%` comment naming the columns.
pub fn to_latex(doc: &OutputDocument) -> Result<String, ParseError> {
    let (header, rows) = tabulate(doc, true)?;
    let mut out = format!("% {}\n", header.join(" & "));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("${}$", c.latex())).collect();
        out += &cells.join(" & ");
        out += " \\\\\n";
    }
    Ok(out)
}

pub fn render(doc: &OutputDocument, format: Format) -> Result<String, ParseError> {
    match format {
        Format::Json => Ok(doc.to_json() + "\n"),
        Format::Csv => to_csv(doc),
        Format::Latex => to_latex(doc),
    }
}
