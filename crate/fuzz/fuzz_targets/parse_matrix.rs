#![no_main]

use libfuzzer_sys::fuzz_target;
use semiautomata::format::{matrix_to_value, parse_matrix};

fuzz_target!(|data: &[u8]| {
    if let Ok(value) = serde_json::from_slice(data) {
        if let Ok(m) = parse_matrix(&value) {
            assert_eq!(parse_matrix(&matrix_to_value(&m)).unwrap(), m);
            let _ = m.classify();
        }
    }
});
