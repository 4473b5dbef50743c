#![no_main]

use libfuzzer_sys::fuzz_target;
use symlp::Permutation;

// First byte picks the degree, the rest is cycle notation.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = usize::from(first % 16) + 1;
    if let Ok(g) = Permutation::parse_cycles(text, n) {
        assert_eq!(g.degree(), n);
        assert_eq!(
            Permutation::parse_cycles(&g.to_cycle_string(), n).unwrap(),
            g
        );
        assert!(g.then(&g.inverse()).unwrap().is_identity());
    }
});
