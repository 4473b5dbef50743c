#![no_main]

use libfuzzer_sys::fuzz_target;
use symlp::numeric::{format_rational, parse_rational};

fuzz_target!(|text: &str| {
    if let Ok(q) = parse_rational(text) {
        assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
});
