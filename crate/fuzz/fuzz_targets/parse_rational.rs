#![no_main]

use libfuzzer_sys::fuzz_target;
use semiautomata::ratmat::Rational;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(r) = text.parse::<Rational>() {
            assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
});
