use std::fmt;

use crate::word::Letter;

/// The generating set of a presentation: `t, a_*, Q_*, P_*, R`, plus `s`
/// and `L` for the zero-divisor construction. Letters are indexed densely
/// in precedence order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    states: u16,
    colors: u16,
    extended: bool,
}

impl Alphabet {
    /// `{t, a_*, Q_*, P_*, R}`.
    pub fn phi(states: u16, colors: u16) -> Self {
        Alphabet {
            states,
            colors,
            extended: false,
        }
    }

    /// `{t, s, a_*, Q_*, P_*, L, R}`.
    pub fn psi(states: u16, colors: u16) -> Self {
        Alphabet {
            states,
            colors,
            extended: true,
        }
    }

    pub fn states(&self) -> u16 {
        self.states
    }

    pub fn colors(&self) -> u16 {
        self.colors
    }

    /// Whether `s` and `L` are present.
    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn len(&self) -> usize {
        let extra = if self.extended { 2 } else { 0 };
        2 + extra + 2 * self.colors as usize + self.states as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.index(letter).is_some()
    }

    /// Dense position of `letter` in precedence order.
    pub fn index(&self, letter: Letter) -> Option<usize> {
        let (c, q) = (self.colors as usize, self.states as usize);
        let s = usize::from(self.extended);
        let cells = 1 + s;
        match letter {
            Letter::T => Some(0),
            Letter::S if self.extended => Some(1),
            Letter::Cell(k) if k < self.colors => Some(cells + k as usize),
            Letter::State(i) if i < self.states => Some(cells + c + i as usize),
            Letter::ColorMark(j) if j < self.colors => Some(cells + c + q + j as usize),
            Letter::LeftEdge if self.extended => Some(cells + 2 * c + q),
            Letter::RightEdge => Some(self.len() - 1),
            _ => None,
        }
    }

    /// All letters in precedence order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.len());
        out.push(Letter::T);
        if self.extended {
            out.push(Letter::S);
        }
        out.extend((0..self.colors).map(Letter::Cell));
        out.extend((0..self.states).map(Letter::State));
        out.extend((0..self.colors).map(Letter::ColorMark));
        if self.extended {
            out.push(Letter::LeftEdge);
        }
        out.push(Letter::RightEdge);
        out
    }

    /// Recovers the alphabet from an explicit letter list, which must be
    /// exactly one of the canonical lists.
    pub fn from_letters(letters: &[Letter]) -> Option<Self> {
        let extended = letters.contains(&Letter::S);
        let colors = letters
            .iter()
            .filter(|l| matches!(l, Letter::Cell(_)))
            .count();
        let states = letters
            .iter()
            .filter(|l| matches!(l, Letter::State(_)))
            .count();
        let alphabet = Alphabet {
            states: u16::try_from(states).ok()?,
            colors: u16::try_from(colors).ok()?,
            extended,
        };
        (alphabet.letters() == letters).then_some(alphabet)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters().iter().map(|l| l.to_string()).collect();
        f.write_str(&letters.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minsky_alphabets() {
        let phi = Alphabet::phi(7, 4);
        assert_eq!(phi.len(), 17);
        assert_eq!(
            phi.to_string(),
            "t a0 a1 a2 a3 Q0 Q1 Q2 Q3 Q4 Q5 Q6 P0 P1 P2 P3 R"
        );
        let psi = Alphabet::psi(7, 4);
        assert_eq!(psi.len(), 19);
        assert!(psi.contains(Letter::S) && !phi.contains(Letter::S));
        assert!(!phi.contains(Letter::LeftEdge));
        assert!(!phi.contains(Letter::Cell(4)));
    }

    #[test]
    fn index_is_position_in_letter_list() {
        for alphabet in [Alphabet::phi(7, 4), Alphabet::psi(2, 3), Alphabet::psi(1, 1)] {
            for (i, l) in alphabet.letters().into_iter().enumerate() {
                assert_eq!(alphabet.index(l), Some(i));
            }
            assert_eq!(Alphabet::from_letters(&alphabet.letters()), Some(alphabet));
        }
    }

    #[test]
    fn from_letters_rejects_gaps() {
        let mut letters = Alphabet::phi(3, 2).letters();
        letters.retain(|l| *l != Letter::State(1));
        assert_eq!(Alphabet::from_letters(&letters), None);
    }
}
