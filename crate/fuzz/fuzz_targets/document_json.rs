#![no_main]
use libfuzzer_sys::fuzz_target;

use negsums_cli::document::OutputDocument;
use negsums_cli::render::{render, Format};

fuzz_target!(|data: &str| {
    let Ok(doc) = OutputDocument::from_json(data) else {
        return;
    };
    let again = OutputDocument::from_json(&doc.to_json()).unwrap();
    assert_eq!(again, doc);
    let _ = render(&doc, Format::Csv);
    let _ = render(&doc, Format::Latex);
});
