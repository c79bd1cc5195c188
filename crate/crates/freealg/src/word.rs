//! Letters, words and the degree-lexicographic order on the free monoid.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A single variable, one of the lowercase letters `a..z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const COUNT: usize = 26;

    pub fn from_char(c: char) -> Result<Self> {
        if c.is_ascii_lowercase() {
            Ok(Letter(c as u8 - b'a'))
        } else {
            Err(Error::UnknownLetter(c))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn as_char(self) -> char {
        (b'a' + self.0) as char
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A word in the free monoid: a finite, possibly empty sequence of letters.
///
/// Words are immutable values; all operations return fresh words. The derived
/// `Ord` is deglex under the default letter precedence and coincides with
/// `MonomialOrder::default()`, so that `BTreeMap<Word, _>` iterates terms in
/// ascending monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    /// Builds a word from a plain string of letters, e.g. `"xyx"`.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            letters.push(Letter::from_char(c)?);
        }
        Ok(Word { letters })
    }

    pub fn single(letter: Letter) -> Self {
        Word { letters: vec![letter] }
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, exponent: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * exponent);
        for _ in 0..exponent {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.letters.starts_with(&prefix.letters)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.letters.ends_with(&suffix.letters)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word { letters: self.letters[..len].to_vec() }
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word { letters: self.letters[self.letters.len() - len..].to_vec() }
    }

    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.letters
            .strip_prefix(prefix.letters.as_slice())
            .map(|rest| Word { letters: rest.to_vec() })
    }

    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.letters
            .strip_suffix(suffix.letters.as_slice())
            .map(|rest| Word { letters: rest.to_vec() })
    }

    /// True if `period` is a period of the word: positions `i` and
    /// `i + period` carry the same letter wherever both exist.
    pub fn has_period(&self, period: usize) -> bool {
        (period..self.letters.len()).all(|i| self.letters[i] == self.letters[i - period])
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        MonomialOrder::default().cmp_words(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for letter in &self.letters {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Degree-lexicographic order: total degree first, ties broken letterwise by
/// a configurable precedence. The default precedence ranks earlier alphabet
/// letters higher, so `x > y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    rank: [u8; Letter::COUNT],
}

impl Default for MonomialOrder {
    fn default() -> Self {
        let mut rank = [0u8; Letter::COUNT];
        for (i, slot) in rank.iter_mut().enumerate() {
            *slot = (Letter::COUNT - 1 - i) as u8;
        }
        MonomialOrder { rank }
    }
}

impl MonomialOrder {
    /// Order with the given letters ranked highest, in the order listed;
    /// unlisted letters follow alphabetically below them.
    pub fn with_precedence(letters: &[Letter]) -> Result<Self> {
        let mut seen = [false; Letter::COUNT];
        for letter in letters {
            if seen[letter.index()] {
                return Err(Error::InvalidParameter(format!(
                    "duplicate letter `{letter}` in precedence list"
                )));
            }
            seen[letter.index()] = true;
        }
        let mut rank = [0u8; Letter::COUNT];
        let mut next = Letter::COUNT as isize - 1;
        for letter in letters {
            rank[letter.index()] = next as u8;
            next -= 1;
        }
        for (i, was_listed) in seen.iter().enumerate() {
            if !was_listed {
                rank[i] = next as u8;
                next -= 1;
            }
        }
        Ok(MonomialOrder { rank })
    }

    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        for (la, lb) in a.letters().iter().zip(b.letters()) {
            match self.rank[la.index()].cmp(&self.rank[lb.index()]) {
                Ordering::Equal => {}
                unequal => return unequal,
            }
        }
        Ordering::Equal
    }

    pub fn max<'a>(&self, a: &'a Word, b: &'a Word) -> &'a Word {
        if self.cmp_words(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}
