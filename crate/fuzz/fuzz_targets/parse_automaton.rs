#![no_main]

use libfuzzer_sys::fuzz_target;
use semiautomata::format::{automaton_from_str, automaton_to_string};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(a) = automaton_from_str(text) {
            assert_eq!(automaton_from_str(&automaton_to_string(&a)).unwrap(), a);
        }
    }
});
