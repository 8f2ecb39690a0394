use negsums_cli::document::{
    Body, CheckRow, NTerm, OutputDocument, Profile, Row, Table, UTerm, Value, Verdict, WTerm,
};
use negsums_cli::{cmd_table, TableKind};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = String> {
    (-50i64..50, 1i64..20).prop_map(|(p, q)| negsums::algebra::rational::rat(p, q).to_string())
}

fn nterms() -> impl Strategy<Value = Vec<NTerm>> {
    prop::collection::vec(
        (0usize..12, coeff()).prop_map(|(power, coeff)| NTerm { power, coeff }),
        0..6,
    )
}

fn uterms() -> impl Strategy<Value = Vec<UTerm>> {
    prop::collection::vec(
        (-3i64..12, coeff()).prop_map(|(upower, coeff)| UTerm { upower, coeff }),
        0..6,
    )
}

fn wterms() -> impl Strategy<Value = Vec<WTerm>> {
    let word = prop::collection::vec(0u32..6, 0..4);
    prop::collection::vec(
        (word, coeff()).prop_map(|(word, coeff)| WTerm { word, coeff }),
        0..6,
    )
}

fn value() -> impl Strategy<Value = Value> {
    prop_oneof![
        coeff().prop_map(Value::Scalar),
        nterms().prop_map(Value::Npoly),
        uterms().prop_map(Value::Laurent),
        wterms().prop_map(Value::Ncpoly),
    ]
}

fn body() -> impl Strategy<Value = Body> {
    let row = (
        prop::collection::vec(prop::collection::vec(0u32..5, 0..3), 1..3),
        value(),
    )
        .prop_map(|(words, value)| Row { words, value });
    let check = (
        "[a-z-]{1,10}",
        "[ -~]{0,20}",
        0usize..100,
        0usize..5,
        prop::collection::vec("[ -~]{0,8}", 0..2),
    )
        .prop_map(|(suite, identity, cases, failures, examples)| CheckRow {
            suite,
            identity,
            cases,
            failures,
            examples,
        });
    prop_oneof![
        nterms().prop_map(Body::Npoly),
        uterms().prop_map(Body::Laurent),
        wterms().prop_map(Body::Ncpoly),
        (0usize..30, coeff(), coeff()).prop_map(|(n, c, b)| Body::Profile(Profile { n, c, b })),
        ("[A-Za-z]{1,3}", 0usize..10, prop::collection::vec(row, 0..4)).prop_map(
            |(table, max_grade, rows)| Body::Table(Table {
                table,
                max_grade,
                rows
            })
        ),
        (any::<bool>(), "[ -~]{0,30}", prop::collection::vec(check, 0..3)).prop_map(
            |(holds, statement, checks)| Body::Verdict(Verdict {
                holds,
                statement,
                checks
            })
        ),
    ]
}

proptest! {
    #[test]
    fn json_round_trips(body in body(), input in "[ -~]{0,40}") {
        let doc = OutputDocument::new(input, body);
        let json = doc.to_json();
        prop_assert_eq!(OutputDocument::from_json(&json).unwrap(), doc.clone());
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(v["kind"].as_str().unwrap(), doc.body.kind());
    }
}

#[test]
fn computed_tables_round_trip() {
    for kind in [
        TableKind::C,
        TableKind::B,
        TableKind::H,
        TableKind::Li,
        TableKind::Top,
    ] {
        let doc = cmd_table(kind, 5);
        assert_eq!(OutputDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}
