#![no_main]

use libfuzzer_sys::fuzz_target;
use symlp::group::decompose_signed_permutation;
use symlp::io::parse_matrix_file;

fuzz_target!(|text: &str| {
    let Ok(m) = parse_matrix_file(text) else {
        return;
    };
    if m.rows() == m.cols() && m.rows() <= 16 {
        if let Ok(sp) = decompose_signed_permutation(&m) {
            assert_eq!(sp.to_matrix(), m);
        }
    }
});
