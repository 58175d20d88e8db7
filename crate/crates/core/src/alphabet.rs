use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite, ordered, non-empty set of named symbols.
///
/// Letters are addressed by their index in declaration order. Two alphabets
/// are equal when they list the same symbols in the same order; the name is
/// only a label.
#[derive(Debug, Clone)]
pub struct Alphabet {
    name: Arc<str>,
    symbols: Arc<[String]>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        symbols: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let name = name.into();
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet(name));
        }
        check_distinct("symbol", &symbols)?;
        Ok(Alphabet {
            name: name.into(),
            symbols: symbols.into(),
        })
    }

    /// An alphabet named after its symbol list, e.g. `{0,1}`.
    pub fn from_symbols<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let name = format!("{{{}}}", symbols.join(","));
        Self::new(name, symbols)
    }

    /// The alphabet `{0, 1, ..., size-1}`.
    pub fn numeric(size: usize) -> Result<Self> {
        Self::from_symbols((0..size).map(|i| i.to_string()))
    }

    pub fn binary() -> Self {
        Self::numeric(2).expect("two symbols")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; alphabets are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, letter: usize) -> &str {
        &self.symbols[letter]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    pub fn letter(&self, symbol: &str) -> Result<usize> {
        self.index_of(symbol)
            .ok_or_else(|| Error::LetterOutOfAlphabet(symbol.to_string()))
    }

    /// Parses a word written as whitespace- or comma-separated symbol names.
    ///
    /// When the text has no separators and every symbol is a single
    /// character, the text is read one character per letter, so `101` is
    /// the three-letter word over `{0,1}`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        let separated = text.contains(|c: char| c == ',' || c.is_whitespace());
        if !separated && self.symbols.iter().all(|s| s.chars().count() == 1) {
            return text
                .chars()
                .map(|c| self.letter(c.encode_utf8(&mut [0; 4])))
                .collect();
        }
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| self.letter(t))
            .collect()
    }

    pub fn render_word(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&l| self.symbol(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub(crate) fn expect_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::EndpointMismatch {
                expected: self.to_string(),
                found: other.to_string(),
            })
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl Hash for Alphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols.join(","))
    }
}

pub(crate) fn check_distinct(what: &'static str, names: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::with_capacity(names.len());
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateName {
                what,
                name: name.clone(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicates() {
        assert_eq!(
            Alphabet::new("A", Vec::<String>::new()),
            Err(Error::EmptyAlphabet("A".into()))
        );
        assert!(matches!(
            Alphabet::from_symbols(["a", "b", "a"]),
            Err(Error::DuplicateName { what: "symbol", .. })
        ));
    }

    #[test]
    fn equality_ignores_name() {
        let a = Alphabet::new("bits", ["0", "1"]).unwrap();
        assert_eq!(a, Alphabet::binary());
        assert_ne!(a, Alphabet::from_symbols(["1", "0"]).unwrap());
    }

    #[test]
    fn word_parsing() {
        let a = Alphabet::binary();
        assert_eq!(a.parse_word("101").unwrap(), vec![1, 0, 1]);
        assert_eq!(a.parse_word("1, 0 1").unwrap(), vec![1, 0, 1]);
        assert_eq!(a.parse_word("").unwrap(), Vec::<usize>::new());
        assert_eq!(
            a.parse_word("102"),
            Err(Error::LetterOutOfAlphabet("2".into()))
        );
        let words = Alphabet::from_symbols(["up", "down"]).unwrap();
        assert_eq!(words.parse_word("up,down down").unwrap(), vec![0, 1, 1]);
        assert_eq!(words.render_word(&[1, 0]), "down up");
    }
}
