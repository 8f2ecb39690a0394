#![no_main]
use libfuzzer_sys::fuzz_target;

use negsums::algebra::parse_ncpoly;

fuzz_target!(|data: &str| {
    if data.len() > 512 {
        return;
    }
    if let Ok(p) = parse_ncpoly(data) {
        let printed = p.to_string();
        assert_eq!(parse_ncpoly(&printed).unwrap(), p, "{printed}");
    }
});
