//! Symbols, finite words and alphabets.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Index of a letter in an [`Alphabet`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Symbol(pub u16);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite word. Ordering is lexicographic on symbol ids, so words of a
/// fixed length sort the way the alphabet is declared.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn single(a: Symbol) -> Self {
        Word(alloc::vec![a])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn first(&self) -> Option<Symbol> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, a: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(a);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn append(&self, a: Symbol) -> Word {
        let mut v = self.0.clone();
        v.push(a);
        Word(v)
    }

    /// The subword `self[from..to]`.
    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.slice(0, n)
    }

    pub fn drop_prefix(&self, n: usize) -> Word {
        self.slice(n, self.len())
    }

    pub fn drop_last(&self) -> Word {
        self.slice(0, self.len().saturating_sub(1))
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn contains_factor(&self, factor: &Word) -> bool {
        if factor.is_empty() {
            return true;
        }
        self.0
            .windows(factor.len())
            .any(|w| w == factor.0.as_slice())
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Symbol> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", s.0)?;
        }
        Ok(())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// A finite, ordered set of printable letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        if tokens.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if tokens.len() > u16::MAX as usize {
            return Err(Error::InvalidPresentation("alphabet too large".to_string()));
        }
        let mut out: Vec<String> = Vec::with_capacity(tokens.len());
        for t in tokens {
            let t = t.as_ref();
            if t.is_empty() || t.contains(char::is_whitespace) || t.contains('.') {
                return Err(Error::InvalidPresentation(alloc::format!(
                    "bad symbol token {t:?}"
                )));
            }
            if out.iter().any(|o| o == t) {
                return Err(Error::DuplicateSymbol(t.to_string()));
            }
            out.push(t.to_string());
        }
        Ok(Alphabet { tokens: out })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + Clone {
        (0..self.tokens.len() as u16).map(Symbol)
    }

    pub fn token(&self, s: Symbol) -> &str {
        &self.tokens[s.index()]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn symbol(&self, token: &str) -> Option<Symbol> {
        self.tokens
            .iter()
            .position(|t| t == token)
            .map(|i| Symbol(i as u16))
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.index() < self.tokens.len()
    }

    fn single_char(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Parses a word. With one-character tokens letters are concatenated
    /// (`0110`); otherwise they are separated by dots (`ab.c.ab`). `ε` and
    /// the empty string denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        if text.is_empty() || text == "ε" {
            return Ok(Word::empty());
        }
        let mut out = Vec::new();
        if self.single_char() && !text.contains('.') {
            for ch in text.chars() {
                let mut buf = [0u8; 4];
                let tok: &str = ch.encode_utf8(&mut buf);
                out.push(
                    self.symbol(tok)
                        .ok_or_else(|| Error::UnknownToken(tok.to_string()))?,
                );
            }
        } else {
            for tok in text.split('.') {
                out.push(
                    self.symbol(tok)
                        .ok_or_else(|| Error::UnknownToken(tok.to_string()))?,
                );
            }
        }
        Ok(Word(out))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.single_char() { "" } else { "." };
        let parts: Vec<&str> = w.iter().map(|s| self.token(s)).collect();
        parts.join(sep)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.iter().find(|s| !self.contains(*s)) {
            Some(s) => Err(Error::ForeignSymbol(s.0)),
            None => Ok(()),
        }
    }

    /// All words of length `n` in lexicographic order.
    pub fn all_words(&self, n: usize) -> Vec<Word> {
        let mut out = alloc::vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * self.len());
            for w in &out {
                for a in self.symbols() {
                    next.push(w.append(a));
                }
            }
            out = next;
        }
        out
    }

    /// All words of length at most `n`, shortest first.
    pub fn words_up_to(&self, n: usize) -> Vec<Word> {
        (0..=n).flat_map(|k| self.all_words(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let a = Alphabet::new(&["0", "1"]).unwrap();
        let w = a.parse_word("0110").unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(a.format_word(&w), "0110");
        assert_eq!(a.parse_word("ε").unwrap(), Word::empty());

        let b = Alphabet::new(&["ab", "c"]).unwrap();
        let w = b.parse_word("ab.c.ab").unwrap();
        assert_eq!(w.symbols(), &[Symbol(0), Symbol(1), Symbol(0)]);
        assert_eq!(b.format_word(&w), "ab.c.ab");
    }

    #[test]
    fn rejects_duplicates_and_foreign_tokens() {
        assert!(matches!(
            Alphabet::new(&["a", "a"]),
            Err(Error::DuplicateSymbol(_))
        ));
        assert!(matches!(
            Alphabet::new::<&str>(&[]),
            Err(Error::EmptyAlphabet)
        ));
        let a = Alphabet::new(&["0", "1"]).unwrap();
        assert!(matches!(a.parse_word("012"), Err(Error::UnknownToken(_))));
    }

    #[test]
    fn words_are_lexicographic() {
        let a = Alphabet::new(&["0", "1"]).unwrap();
        let ws = a.all_words(2);
        let shown: Vec<String> = ws.iter().map(|w| a.format_word(w)).collect();
        assert_eq!(shown, ["00", "01", "10", "11"]);
        assert_eq!(a.words_up_to(2).len(), 7);
    }
}
