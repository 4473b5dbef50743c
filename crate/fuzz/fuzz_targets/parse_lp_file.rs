#![no_main]

use libfuzzer_sys::fuzz_target;
use symlp::io::{emit_lp_file, parse_lp_file};

fuzz_target!(|text: &str| {
    if let Ok(lp) = parse_lp_file(text) {
        let emitted = emit_lp_file(&lp, None);
        assert_eq!(parse_lp_file(&emitted).unwrap(), lp);
    }
});
