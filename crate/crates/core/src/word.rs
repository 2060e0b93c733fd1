//! Words over a finite ordered alphabet under factor order.

use std::fmt;

use crate::error::{Error, Result};

/// A finite totally ordered alphabet. Symbols compare by declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

/// A word as a sequence of letter indices into its [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Alphabet {
    pub const MAX_SIZE: usize = 256;

    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::Empty);
        }
        if symbols.len() > Self::MAX_SIZE {
            return Err(Error::OutOfRange {
                len: symbols.len(),
                max: Self::MAX_SIZE,
            });
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.contains(',') || s.chars().any(char::is_whitespace) || s == "ε" {
                return Err(Error::Parse(format!("invalid symbol {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::Duplicate(s.clone()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The two-letter alphabet `a < b`.
    pub fn ab() -> Self {
        Alphabet::new(["a", "b"]).unwrap()
    }

    /// The first `k` lowercase letters.
    pub fn latin(k: usize) -> Result<Self> {
        if k == 0 || k > 26 {
            return Err(Error::OutOfRange { len: k, max: 26 });
        }
        Alphabet::new((b'a'..b'a' + k as u8).map(|c| (c as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word: a plain string when every symbol is one character,
    /// comma-separated symbols otherwise. `""` and `"ε"` are the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Word::empty());
        }
        let lookup = |sym: &str| {
            self.symbols
                .iter()
                .position(|x| x == sym)
                .map(|i| i as u8)
                .ok_or_else(|| Error::ForeignLetter(sym.to_string()))
        };
        let letters = if self.single_char() && !s.contains(',') {
            let mut buf = [0u8; 4];
            s.chars()
                .map(|c| lookup(c.encode_utf8(&mut buf)))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.split(',').map(|t| lookup(t.trim())).collect::<Result<Vec<_>>>()?
        };
        Ok(Word(letters))
    }

    /// Canonical text form; the empty word renders as `""`.
    pub fn render(&self, w: &Word) -> String {
        let sep = if self.single_char() { "" } else { "," };
        w.0.iter()
            .map(|&i| self.symbols[i as usize].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Checks that every letter of `w` is in range.
    pub fn contains(&self, w: &Word) -> bool {
        w.0.iter().all(|&i| (i as usize) < self.symbols.len())
    }

    /// All words of length exactly `len`, in lexicographic order.
    pub fn words_of_len(&self, len: usize) -> Vec<Word> {
        let k = self.len();
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..k).map(move |c| {
                        let mut next = w.0.clone();
                        next.push(c as u8);
                        Word(next)
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|l| self.words_of_len(l)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.single_char() { "" } else { "," };
        f.write_str(&self.symbols.join(sep))
    }
}

impl std::str::FromStr for Alphabet {
    type Err = Error;

    /// `ab` declares single-character symbols, `x1,x2` multi-character ones.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') {
            Alphabet::new(s.split(',').map(str::trim))
        } else {
            Alphabet::new(s.chars().map(String::from))
        }
    }
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Factor order: `self` occurs as consecutive letters of `other`.
    pub fn is_factor_of(&self, other: &Word) -> bool {
        self.is_empty() || other.0.windows(self.len()).any(|w| w == self.0.as_slice())
    }

    pub fn is_flat(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::Empty);
        }
        Ok(self.0.windows(2).all(|p| p[0] == p[1]))
    }

    /// `w(2)…w(n−1)`; empty when `|w| = 2`.
    pub fn inner_word(&self) -> Result<Word> {
        let n = self.len();
        if n < 2 {
            return Err(Error::TooShort {
                what: "inner_word",
                min: 2,
                len: n,
            });
        }
        Ok(Word(self.0[1..n - 1].to_vec()))
    }

    /// Longest proper prefix that is also a suffix (possibly empty).
    pub fn outer_word(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::Empty);
        }
        let border = border_array(&self.0);
        Ok(Word(self.0[..border[self.len() - 1]].to_vec()))
    }

    /// Covered words with the zeroed position (1-based, own coordinates).
    /// Flat words cover one word, reached by dropping the first letter.
    pub fn down_covers(&self) -> Result<Vec<(Word, usize)>> {
        let n = self.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let suffix = (Word(self.0[1..].to_vec()), 1);
        if self.is_flat()? {
            return Ok(vec![suffix]);
        }
        Ok(vec![(Word(self.0[..n - 1].to_vec()), n), suffix])
    }
}

/// Failure function: `border[i]` is the length of the longest proper border
/// of `s[..=i]`.
fn border_array(s: &[u8]) -> Vec<usize> {
    let mut border = vec![0; s.len()];
    for i in 1..s.len() {
        let mut b = border[i - 1];
        while b > 0 && s[i] != s[b] {
            b = border[b - 1];
        }
        if s[i] == s[b] {
            b += 1;
        }
        border[i] = b;
    }
    border
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Alphabet::latin(3).unwrap().parse_word(s).unwrap()
    }

    #[test]
    fn factor_examples() {
        assert!(w("ab").is_factor_of(&w("bab")));
        assert!(w("").is_factor_of(&w("abc")));
        assert!(w("").is_factor_of(&w("")));
        assert!(!w("aa").is_factor_of(&w("ab")));
        assert!(!w("abc").is_factor_of(&w("ab")));
    }

    #[test]
    fn flat_examples() {
        assert!(w("aaa").is_flat().unwrap());
        assert!(!w("aba").is_flat().unwrap());
        assert!(w("b").is_flat().unwrap());
        assert_eq!(w("").is_flat(), Err(Error::Empty));
    }

    #[test]
    fn inner_and_outer_examples() {
        assert_eq!(w("aba").inner_word().unwrap(), w("b"));
        assert_eq!(w("ab").inner_word().unwrap(), Word::empty());
        assert_eq!(w("aabb").inner_word().unwrap(), w("ab"));
        assert!(w("a").inner_word().is_err());

        assert_eq!(w("aba").outer_word().unwrap(), w("a"));
        assert_eq!(w("aabb").outer_word().unwrap(), Word::empty());
        assert_eq!(w("aa").outer_word().unwrap(), w("a"));
        assert_eq!(w("abab").outer_word().unwrap(), w("ab"));
        assert_eq!(w("b").outer_word().unwrap(), Word::empty());
        assert_eq!(Word::empty().outer_word(), Err(Error::Empty));
    }

    #[test]
    fn down_cover_examples() {
        assert_eq!(w("aba").down_covers().unwrap(), vec![(w("ab"), 3), (w("ba"), 1)]);
        assert_eq!(w("aaa").down_covers().unwrap(), vec![(w("aa"), 1)]);
        assert_eq!(w("b").down_covers().unwrap(), vec![(Word::empty(), 1)]);
        assert!(Word::empty().down_covers().is_err());
    }

    #[test]
    fn alphabet_parsing() {
        let ab: Alphabet = "ab".parse().unwrap();
        assert_eq!(ab, Alphabet::ab());
        assert!("aa".parse::<Alphabet>().is_err());
        assert!("".parse::<Alphabet>().is_err());
        let multi: Alphabet = "x1,x2".parse().unwrap();
        let word = multi.parse_word("x2,x1,x1").unwrap();
        assert_eq!(word.letters(), &[1, 0, 0]);
        assert_eq!(multi.render(&word), "x2,x1,x1");
        assert_eq!(
            ab.parse_word("abc"),
            Err(Error::ForeignLetter("c".into()))
        );
        assert_eq!(ab.parse_word("ε").unwrap(), Word::empty());
        assert_eq!(ab.parse_word("a,b").unwrap(), ab.parse_word("ab").unwrap());
    }

    #[test]
    fn word_enumeration() {
        let ab = Alphabet::ab();
        assert_eq!(ab.words_of_len(3).len(), 8);
        assert_eq!(ab.words_up_to(3).len(), 15);
        assert_eq!(ab.render(&ab.words_of_len(2)[1]), "ab");
    }

    fn outer_by_comparison(s: &[u8]) -> usize {
        (0..s.len()).rev().find(|&k| s[..k] == s[s.len() - k..]).unwrap()
    }

    fn covered_by_brute_force(word: &Word) -> Vec<Word> {
        let n = word.len();
        let mut below: Vec<Word> = (0..2)
            .map(|start| Word(word.letters()[start..start + n - 1].to_vec()))
            .collect();
        below.sort();
        below.dedup();
        below
    }

    proptest! {
        #[test]
        fn outer_word_matches_naive(s in prop::collection::vec(0u8..3, 1..12)) {
            let word = Word(s.clone());
            let outer = word.outer_word().unwrap();
            prop_assert_eq!(outer.len(), outer_by_comparison(&s));
            prop_assert!(outer.is_factor_of(&word));
            prop_assert!(outer.len() < word.len());
        }

        #[test]
        fn covers_coincide_iff_flat(s in prop::collection::vec(0u8..2, 1..9)) {
            let word = Word(s);
            let covers = word.down_covers().unwrap();
            let brute = covered_by_brute_force(&word);
            prop_assert_eq!(covers.len(), brute.len());
            prop_assert_eq!(brute.len() == 1, word.is_flat().unwrap());
            for (c, _) in covers {
                prop_assert!(brute.contains(&c));
            }
        }
    }

    #[test]
    fn factor_order_is_a_partial_order() {
        let words = Alphabet::ab().words_up_to(6);
        for x in &words {
            assert!(x.is_factor_of(x));
            for v in words.iter().filter(|v| v.is_factor_of(x)) {
                if x.is_factor_of(v) {
                    assert_eq!(x, v);
                }
                for u in words.iter().filter(|u| u.is_factor_of(v)) {
                    assert!(u.is_factor_of(x));
                }
            }
        }
    }
}
