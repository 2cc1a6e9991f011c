#![no_main]

use libfuzzer_sys::fuzz_target;
use semiautomata::format::{factorization_from_str, factorization_to_string};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(f) = factorization_from_str(text) {
            assert_eq!(
                factorization_from_str(&factorization_to_string(&f)).unwrap(),
                f
            );
            let _ = f.product();
        }
    }
});
