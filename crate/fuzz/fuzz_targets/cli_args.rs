#![no_main]
use libfuzzer_sys::fuzz_target;

use clap::Parser;
use negsums_cli::Cli;

fuzz_target!(|data: &str| {
    let args = std::iter::once("negsums").chain(data.split('\0'));
    let _ = Cli::try_parse_from(args);
});
