#![no_main]
use libfuzzer_sys::fuzz_target;

use negsums::algebra::parse_rational;

fuzz_target!(|data: &str| {
    if let Ok(r) = parse_rational(data) {
        let printed = r.to_string();
        assert_eq!(parse_rational(&printed).unwrap(), r, "{printed}");
    }
});
