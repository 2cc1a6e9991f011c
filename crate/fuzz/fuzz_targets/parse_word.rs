#![no_main]

use libfuzzer_sys::fuzz_target;
use semiautomata::automata::parse_word;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // first line lists the alphabet, the rest is the word
    let (symbols, word) = text.split_once('\n').unwrap_or((text, ""));
    let alphabet: Vec<String> = symbols.split(' ').map(str::to_string).collect();
    if let Ok(parsed) = parse_word(&alphabet, word) {
        assert!(parsed.iter().all(|s| alphabet.contains(s)));
        assert_eq!(
            parse_word(&alphabet, &parsed.join(" ")).unwrap().len(),
            parsed.len()
        );
    }
});
