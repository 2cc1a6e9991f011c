use crate::error::{Error, Result};

/// Index of `symbol` within `alphabet`.
pub(crate) fn symbol_index<S: AsRef<str>>(alphabet: &[String], symbol: S) -> Result<usize> {
    let symbol = symbol.as_ref();
    alphabet
        .iter()
        .position(|s| s == symbol)
        .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
}

pub(crate) fn resolve_word<S: AsRef<str>>(alphabet: &[String], word: &[S]) -> Result<Vec<usize>> {
    word.iter().map(|s| symbol_index(alphabet, s)).collect()
}

pub(crate) fn check_distinct(names: &[String], duplicate: fn(String) -> Error) -> Result<()> {
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(duplicate(name.clone()));
        }
    }
    Ok(())
}

/// Splits a written word into alphabet symbols.
///
/// Whitespace and commas separate chunks; each chunk is then consumed
/// greedily by the longest matching symbol. The empty string is the empty
/// word.
pub fn parse_word(alphabet: &[String], text: &str) -> Result<Vec<String>> {
    let mut word = Vec::new();
    for chunk in text.split(|c: char| c.is_whitespace() || c == ',') {
        let mut rest = chunk;
        while !rest.is_empty() {
            let symbol = alphabet
                .iter()
                .filter(|s| !s.is_empty() && rest.starts_with(s.as_str()))
                .max_by_key(|s| s.len())
                .ok_or_else(|| Error::UntokenizableWord(text.to_string()))?;
            word.push(symbol.clone());
            rest = &rest[symbol.len()..];
        }
    }
    Ok(word)
}
