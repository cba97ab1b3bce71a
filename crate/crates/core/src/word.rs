//! Words over a small alphabet and the combinatorial primitives on them.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest alphabet a [`Word`] may use; letter ids are `0..=255`.
pub const MAX_ALPHABET: usize = 256;

/// A finite, immutable sequence of letter ids.
///
/// Letter `0` displays as `a`, `1` as `b`, and so on. Equality, ordering and
/// hashing look at the letters only, so a root cut out of a word compares
/// equal to the same content parsed from text.
#[derive(Clone)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: usize,
}

/// A 1-based inclusive factor `w[start..end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorRef {
    pub start: usize,
    pub end: usize,
}

impl FactorRef {
    pub fn new(start: usize, end: usize) -> Self {
        FactorRef { start, end }
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn check(&self, w: &Word) -> Result<()> {
        if self.start < 1 || self.start > self.end || self.end > w.len() {
            return Err(Error::OutOfRange(format!(
                "factor [{}..{}] in a word of length {}",
                self.start,
                self.end,
                w.len()
            )));
        }
        Ok(())
    }
}

impl Word {
    /// Builds a word, checking every letter id against `alphabet_size`.
    pub fn new(symbols: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if !(1..=MAX_ALPHABET).contains(&alphabet_size) {
            return Err(Error::domain(format!(
                "alphabet size {alphabet_size} outside 1..={MAX_ALPHABET}"
            )));
        }
        if let Some(pos) = symbols
            .iter()
            .position(|&s| usize::from(s) >= alphabet_size)
        {
            return Err(Error::domain(format!(
                "letter id {} at position {} exceeds alphabet size {alphabet_size}",
                symbols[pos],
                pos + 1
            )));
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Builds a word whose alphabet is just large enough for its letters (at least 2).
    pub fn from_ids(symbols: Vec<u8>) -> Self {
        let alphabet_size = symbols
            .iter()
            .map(|&s| usize::from(s) + 1)
            .max()
            .unwrap_or(0)
            .max(2);
        Word {
            symbols,
            alphabet_size,
        }
    }

    pub fn empty() -> Self {
        Word::from_ids(Vec::new())
    }

    /// Parses lowercase ASCII with the fixed map `a -> 0`, `b -> 1`, ...
    pub fn parse(text: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(text.len());
        for (idx, ch) in text.chars().enumerate() {
            if !ch.is_ascii_lowercase() {
                return Err(Error::Parse {
                    position: idx + 1,
                    found: ch,
                });
            }
            symbols.push(ch as u8 - b'a');
        }
        Ok(Word::from_ids(symbols))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|i| self.symbols.get(i).copied())
    }

    /// The factor `w[start..end]` as a new word.
    pub fn factor(&self, f: FactorRef) -> Result<Word> {
        f.check(self)?;
        Ok(self.slice(f.start - 1..f.end))
    }

    /// 0-based half-open slice; panics when out of bounds.
    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word {
            symbols: self.symbols[range].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0..len.min(self.len()))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word {
            symbols,
            alphabet_size: self.alphabet_size.max(other.alphabet_size),
        }
    }

    /// `self` repeated `e` times.
    pub fn pow(&self, e: usize) -> Word {
        Word {
            symbols: self.symbols.repeat(e),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.symbols.starts_with(&self.symbols)
    }

    /// Rotation moving the first `k` letters to the end.
    pub fn rotate_left(&self, k: usize) -> Word {
        let mut symbols = self.symbols.clone();
        if !symbols.is_empty() {
            let k = k % symbols.len();
            symbols.rotate_left(k);
        }
        Word {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    /// Applies a letter renaming; `map[old] = new`.
    pub fn rename(&self, map: &[u8]) -> Word {
        Word::from_ids(self.symbols.iter().map(|&s| map[usize::from(s)]).collect())
    }

    /// 1-based start positions of every occurrence of `pattern` in `self`.
    pub fn occurrences(&self, pattern: &Word) -> Vec<usize> {
        let p = pattern.symbols();
        if p.is_empty() || p.len() > self.len() {
            return Vec::new();
        }
        self.symbols
            .windows(p.len())
            .enumerate()
            .filter(|(_, win)| *win == p)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// True iff `self` is not a proper power `v^e`, `e >= 2`.
    ///
    /// Uses the characterization that a primitive word occurs in its own
    /// square only as prefix and suffix.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(self.primitive_root()?.1 == 1)
    }

    /// The primitive root `v` and exponent `e` with `self = v^e`.
    pub fn primitive_root(&self) -> Result<(Word, usize)> {
        if self.is_empty() {
            return Err(Error::domain("primitive root of the empty word"));
        }
        let period = smallest_period(&self.symbols);
        let n = self.len();
        if n.is_multiple_of(period) {
            Ok((self.slice(0..period), n / period))
        } else {
            Ok((self.clone(), 1))
        }
    }

    /// Whether the occurrence `f` can be cyclically shifted right `k` times.
    ///
    /// A shift by one needs `w[start] = w[end + 1]`; a shift by `k` needs a
    /// shift by one followed by a shift of `w[start+1..end+1]` by `k - 1`.
    pub fn can_cyclic_shift_right(&self, f: FactorRef, k: usize) -> Result<bool> {
        f.check(self)?;
        if f.end + k > self.len() {
            return Err(Error::OutOfRange(format!(
                "shifting [{}..{}] right by {k} passes the end of a word of length {}",
                f.start,
                f.end,
                self.len()
            )));
        }
        let w = &self.symbols;
        // 0-based: step t compares w[start-1+t] with w[end+t]
        Ok((0..k).all(|t| w[f.start - 1 + t] == w[f.end + t]))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// Smallest period of a non-empty slice via the KMP failure function.
fn smallest_period(s: &[u8]) -> usize {
    let n = s.len();
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    n - fail[n - 1]
}

/// Display glyph for a letter id.
pub fn letter_glyph(id: u8) -> String {
    if id < 26 {
        char::from(b'a' + id).to_string()
    } else {
        format!("[{id}]")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            f.write_str(&letter_glyph(s))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols.cmp(&other.symbols)
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Shorthand for building words from runs of letters.
#[derive(Debug, Default, Clone)]
pub(crate) struct WordBuilder {
    symbols: Vec<u8>,
}

impl WordBuilder {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn run(mut self, letter: u8, count: usize) -> Self {
        self.symbols.extend(std::iter::repeat_n(letter, count));
        self
    }

    pub(crate) fn word(mut self, w: &Word) -> Self {
        self.symbols.extend_from_slice(w.symbols());
        self
    }

    pub(crate) fn build(self) -> Word {
        Word::from_ids(self.symbols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    /// Definition-level primitivity: `w` occurs in `ww` only at offsets 0 and |w|.
    fn primitive_by_square(x: &Word) -> bool {
        let ww = x.concat(x);
        !ww.occurrences(x).iter().any(|&p| p >= 2 && p <= x.len())
    }

    #[test]
    fn primitivity_examples() {
        assert!(!w("abab").is_primitive().unwrap());
        assert!(w("aba").is_primitive().unwrap());
        assert!(!w("abaaabaa").is_primitive().unwrap());
        assert!(w("a").is_primitive().unwrap());
        assert!(matches!(
            Word::empty().is_primitive(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(w("abaaabaa").primitive_root().unwrap(), (w("abaa"), 2));
        assert_eq!(w("a").primitive_root().unwrap(), (w("a"), 1));
        assert_eq!(w("aaaa").primitive_root().unwrap(), (w("a"), 4));
        assert_eq!(w("abaab").primitive_root().unwrap(), (w("abaab"), 1));
        assert!(Word::empty().primitive_root().is_err());
    }

    #[test]
    fn primitivity_agrees_with_root_exhaustively() {
        for n in 1..=20usize {
            for bits in 0u32..(1 << n) {
                let x = Word::from_ids((0..n).map(|i| ((bits >> i) & 1) as u8).collect());
                let (root, e) = x.primitive_root().unwrap();
                assert_eq!(root.pow(e), x);
                assert_eq!(x.is_primitive().unwrap(), e == 1);
                if n <= 12 {
                    assert_eq!(primitive_by_square(&x), e == 1, "{x}");
                }
            }
        }
    }

    #[test]
    fn rotations_of_primitive_words_are_primitive() {
        for n in 1..=14usize {
            for bits in 0u32..(1 << n) {
                let x = Word::from_ids((0..n).map(|i| ((bits >> i) & 1) as u8).collect());
                if x.is_primitive().unwrap() {
                    for k in 1..n {
                        assert!(x.rotate_left(k).is_primitive().unwrap(), "{x} rot {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_shift_examples() {
        let w2 = w("abaababaabaababaa");
        assert!(w2.can_cyclic_shift_right(FactorRef::new(1, 10), 1).unwrap());
        assert!(w2.can_cyclic_shift_right(FactorRef::new(3, 9), 0).unwrap());
        assert!(!w("ab")
            .can_cyclic_shift_right(FactorRef::new(1, 1), 1)
            .unwrap());
        assert!(matches!(
            w("ab").can_cyclic_shift_right(FactorRef::new(1, 2), 1),
            Err(Error::OutOfRange(_))
        ));
        assert!(w("ab").factor(FactorRef::new(2, 3)).is_err());
    }

    #[test]
    fn cyclic_shift_yields_rotation() {
        for n in 2..=10usize {
            for bits in 0u32..(1 << n) {
                let x = Word::from_ids((0..n).map(|i| ((bits >> i) & 1) as u8).collect());
                for start in 1..=n {
                    for end in start..=n {
                        for k in 0..=(n - end) {
                            let f = FactorRef::new(start, end);
                            if x.can_cyclic_shift_right(f, k).unwrap() {
                                let shifted = x.factor(FactorRef::new(start + k, end + k)).unwrap();
                                assert_eq!(shifted, x.factor(f).unwrap().rotate_left(k));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("abc").symbols(), &[0, 1, 2]);
        assert_eq!(w("abc").to_string(), "abc");
        assert_eq!(w("aaaa").alphabet_size(), 2);
        assert_eq!(
            Word::parse("abX").unwrap_err(),
            Error::Parse {
                position: 3,
                found: 'X'
            }
        );
        assert!(Word::new(vec![0, 3], 3).is_err());
        assert_eq!(Word::new(vec![0, 2], 3).unwrap().to_string(), "ac");
    }
}
