#![no_main]
use libfuzzer_sys::fuzz_target;

use negsums::algebra::parse_word;

fuzz_target!(|data: &str| {
    if let Ok(w) = parse_word(data) {
        let printed = w.to_string();
        assert_eq!(parse_word(&printed).unwrap(), w, "{printed}");
    }
});
