//! Letters and words of the free monoid.
//!
//! The derived `Ord` on [`Letter`] follows the precedence in which the
//! generators are listed: `t, s, a_0.., Q_0.., P_0.., L, R`. Orders that
//! break ties lexicographically treat an *earlier* letter as the greater one.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::ParseError;

/// One generator of the free algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// The clock letter `t`.
    T,
    /// The trailing clock letter `s` (zero-divisor alphabet only).
    S,
    /// A tape cell `a_k` of color `k`.
    Cell(u16),
    /// A machine state `Q_i`.
    State(u16),
    /// The color `P_j` of the cell under the head.
    ColorMark(u16),
    /// Left edge `L` (zero-divisor alphabet only).
    LeftEdge,
    /// Edge `R`.
    RightEdge,
}

impl Letter {
    pub fn is_t(self) -> bool {
        self == Letter::T
    }

    pub fn is_s(self) -> bool {
        self == Letter::S
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T => f.write_str("t"),
            Letter::S => f.write_str("s"),
            Letter::Cell(k) => write!(f, "a{k}"),
            Letter::State(i) => write!(f, "Q{i}"),
            Letter::ColorMark(j) => write!(f, "P{j}"),
            Letter::LeftEdge => f.write_str("L"),
            Letter::RightEdge => f.write_str("R"),
        }
    }
}

impl FromStr for Letter {
    type Err = ParseError;

    fn from_str(tok: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Token(tok.to_string());
        let indexed = |rest: &str| -> Result<u16, ParseError> {
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            rest.parse().map_err(|_| bad())
        };
        match tok {
            "t" => Ok(Letter::T),
            "s" => Ok(Letter::S),
            "L" => Ok(Letter::LeftEdge),
            "R" => Ok(Letter::RightEdge),
            _ => match tok.split_at(tok.len().min(1)) {
                ("a", rest) => indexed(rest).map(Letter::Cell),
                ("Q", rest) => indexed(rest).map(Letter::State),
                ("P", rest) => indexed(rest).map(Letter::ColorMark),
                _ => Err(bad()),
            },
        }
    }
}

/// An element of the free monoid. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `self` repeated `n` times.
    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Number of occurrences of `letter`.
    pub fn degree_of(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Replace `len` letters starting at `pos` by `replacement`.
    pub fn splice(&self, pos: usize, len: usize, replacement: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(self.len() - len + replacement.len());
        out.extend_from_slice(&self.0[..pos]);
        out.extend_from_slice(replacement);
        out.extend_from_slice(&self.0[pos + len..]);
        Word(out)
    }

    /// Position of the first occurrence of `pattern`, if any.
    pub fn find(&self, pattern: &[Letter]) -> Option<usize> {
        if pattern.is_empty() {
            return Some(0);
        }
        self.0.windows(pattern.len()).position(|w| w == pattern)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("eps");
        }
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    /// Whitespace-separated tokens; `eps` (alone) is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        match tokens.as_slice() {
            [] => Err(ParseError::EmptyWord),
            ["eps"] => Ok(Word::empty()),
            _ => tokens.iter().map(|t| t.parse()).collect(),
        }
    }
}

/// Parse a word, panicking on malformed input. Meant for literals in tests
/// and fixtures.
pub fn w(text: &str) -> Word {
    text.parse()
        .unwrap_or_else(|e| panic!("bad word literal {text:?}: {e}"))
}
