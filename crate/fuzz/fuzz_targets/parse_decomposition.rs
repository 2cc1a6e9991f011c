#![no_main]

use libfuzzer_sys::fuzz_target;
use semiautomata::format::{decomposition_from_str, decomposition_to_string};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(d) = decomposition_from_str(text) {
            assert_eq!(
                decomposition_from_str(&decomposition_to_string(&d)).unwrap(),
                d
            );
            let _ = d.recompose();
        }
    }
});
