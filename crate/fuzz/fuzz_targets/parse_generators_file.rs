#![no_main]

use libfuzzer_sys::fuzz_target;
use symlp::io::parse_generators_file;

// First byte picks the degree, the rest is the file body.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(first % 12) + 1;
    if let Ok(gens) = parse_generators_file(text, n) {
        assert!(gens.iter().all(|g| g.degree() == n));
    }
});
