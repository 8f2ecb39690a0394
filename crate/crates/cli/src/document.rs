//! The JSON document every command emits, and its conversions to and from
//! the library types.

use negsums::algebra::parse_rational;
use negsums::{LaurentU, NCPoly, NPoly, ParseError, Rational, Word};
use serde::{Deserialize, Serialize};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    #[serde(flatten)]
    pub body: Body,
    pub meta: Meta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub input: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Body {
    Npoly(Vec<NTerm>),
    Laurent(Vec<UTerm>),
    Ncpoly(Vec<WTerm>),
    Profile(Profile),
    Table(Table),
    Verdict(Verdict),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Npoly(_) => "npoly",
            Body::Laurent(_) => "laurent",
            Body::Ncpoly(_) => "ncpoly",
            Body::Profile(_) => "profile",
            Body::Table(_) => "table",
            Body::Verdict(_) => "verdict",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NTerm {
    pub power: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UTerm {
    pub upower: i64,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WTerm {
    pub word: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub n: usize,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "B")]
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub table: String,
    pub max_grade: usize,
    pub rows: Vec<Row>,
}

/// One table entry. `words` holds one word for the single-word tables and
/// the two factors for `top`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub words: Vec<Vec<u32>>,
    #[serde(flatten)]
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Scalar(String),
    Npoly(Vec<NTerm>),
    Laurent(Vec<UTerm>),
    Ncpoly(Vec<WTerm>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub statement: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub suite: String,
    pub identity: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
}

impl OutputDocument {
    pub fn new(input: impl Into<String>, body: Body) -> Self {
        Self {
            body,
            meta: Meta {
                input: input.into(),
                version: VERSION.to_string(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// `"p/q"`, or `"p"` for integers.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_coeff(s: &str) -> Result<Rational, ParseError> {
    parse_rational(s)
}

pub fn npoly_terms(p: &NPoly) -> Vec<NTerm> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(power, c)| NTerm {
            power,
            coeff: rational_string(c),
        })
        .collect()
}

pub fn laurent_terms(f: &LaurentU) -> Vec<UTerm> {
    f.terms()
        .map(|(upower, c)| UTerm {
            upower,
            coeff: rational_string(c),
        })
        .collect()
}

pub fn ncpoly_terms(p: &NCPoly) -> Vec<WTerm> {
    p.terms()
        .map(|(w, c)| WTerm {
            word: w.indices().to_vec(),
            coeff: rational_string(c),
        })
        .collect()
}

/// Largest power of `N` accepted when rebuilding a dense polynomial.
pub const MAX_POWER: usize = 1 << 16;

pub fn npoly_from_terms(terms: &[NTerm]) -> Result<NPoly, ParseError> {
    let mut out = NPoly::zero();
    for t in terms {
        if t.power > MAX_POWER {
            return Err(ParseError {
                position: 0,
                message: format!("power {} exceeds {MAX_POWER}", t.power),
            });
        }
        out = &out + &NPoly::monomial(parse_coeff(&t.coeff)?, t.power);
    }
    Ok(out)
}

pub fn laurent_from_terms(terms: &[UTerm]) -> Result<LaurentU, ParseError> {
    let mut out = LaurentU::zero();
    for t in terms {
        out.add_term(t.upower, parse_coeff(&t.coeff)?);
    }
    Ok(out)
}

pub fn ncpoly_from_terms(terms: &[WTerm]) -> Result<NCPoly, ParseError> {
    let mut out = NCPoly::zero();
    for t in terms {
        out.add_term(Word::new(t.word.clone()), parse_coeff(&t.coeff)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use negsums::algebra::rational::rat;

    #[test]
    fn json_shape() {
        let p = NPoly::from_coeffs(vec![rat(0, 1), rat(-1, 2), rat(1, 2)]);
        let doc = OutputDocument::new("hsum y0.y0", Body::Npoly(npoly_terms(&p)));
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["kind"], "npoly");
        assert_eq!(v["meta"]["input"], "hsum y0.y0");
        assert_eq!(v["payload"][0]["power"], 1);
        assert_eq!(v["payload"][0]["coeff"], "-1/2");
        assert_eq!(v["payload"][1]["coeff"], "1/2");
    }

    #[test]
    fn conversions_invert() {
        let p: NCPoly = "3/2*y2.y1 - y0 + 7".parse().unwrap();
        assert_eq!(ncpoly_from_terms(&ncpoly_terms(&p)).unwrap(), p);
        let f = LaurentU::from_ints(&[0, -1, 5, -7, 3]);
        assert_eq!(laurent_from_terms(&laurent_terms(&f)).unwrap(), f);
        let n = NPoly::from_ints(&[0, 2, 0, -3]);
        assert_eq!(npoly_from_terms(&npoly_terms(&n)).unwrap(), n);
    }

    #[test]
    fn table_rows_are_tagged_by_value_type() {
        let row = Row {
            words: vec![vec![1, 2]],
            value: Value::Scalar("1/15".into()),
        };
        let s = serde_json::to_string(&row).unwrap();
        assert_eq!(s, r#"{"words":[[1,2]],"scalar":"1/15"}"#);
        assert_eq!(serde_json::from_str::<Row>(&s).unwrap(), row);
    }
}
