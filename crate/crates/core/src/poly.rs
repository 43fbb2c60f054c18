//! Formal linear combinations of words with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::word::Word;

pub type Coeff = BigRational;

/// An element of the free algebra. Zero coefficients are never stored, so
/// the empty map is the zero element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Word, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(coeff: Coeff, word: Word) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Option<&Coeff> {
        self.terms.get(word)
    }

    /// The single word of a monic monomial, if `self` is one.
    pub fn as_word(&self) -> Option<&Word> {
        match self.terms.iter().next() {
            Some((w, c)) if self.terms.len() == 1 && c.is_one() => Some(w),
            _ => None,
        }
    }

    pub fn add_term(&mut self, word: Word, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Coeff) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    /// Free-algebra product: concatenation distributed over terms. Not
    /// normalized.
    pub fn concat(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

impl From<Word> for Polynomial {
    fn from(word: Word) -> Self {
        Polynomial::monomial(Coeff::one(), word)
    }
}

impl FromIterator<(Word, Coeff)> for Polynomial {
    fn from_iter<I: IntoIterator<Item = (Word, Coeff)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.concat(rhs)
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

impl fmt::Display for Polynomial {
    /// `p/q * word + p/q * word ...`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * {}", fmt_coeff(c), w)?;
        }
        Ok(())
    }
}

fn parse_coeff(s: &str) -> Result<Coeff, ParseError> {
    let bad = || ParseError::Coefficient(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        let mut p = Polynomial::zero();
        for term in s.split(" + ") {
            let (coeff, word) = term
                .split_once('*')
                .ok_or_else(|| ParseError::Other(format!("term {term:?} lacks `*`")))?;
            p.add_term(word.trim().parse()?, parse_coeff(coeff.trim())?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn one(text: &str) -> Polynomial {
        Polynomial::from(w(text))
    }

    #[test]
    fn concat_examples() {
        assert_eq!(one("t").concat(&one("R")), one("t R"));
        assert!(Polynomial::zero().concat(&one("a0")).is_zero());
        let sum = &one("a0") + &one("a1");
        assert_eq!(sum.concat(&one("R")), &one("a0 R") + &one("a1 R"));
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = &one("a0 R") + &one("t");
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &one("t")), one("a0 R"));
    }

    #[test]
    fn text_format() {
        let p: Polynomial = "1/2 * t R + -3/1 * a0".parse().unwrap();
        assert_eq!(p.to_string(), "1/2 * t R + -3/1 * a0");
        assert_eq!(p.len(), 2);
        assert_eq!("0".parse::<Polynomial>().unwrap(), Polynomial::zero());
        assert_eq!(Polynomial::zero().to_string(), "0");
        let q: Polynomial = "2 * eps".parse().unwrap();
        assert_eq!(q.to_string(), "2/1 * eps");
        assert!("1/0 * t".parse::<Polynomial>().is_err());
        assert!("t R".parse::<Polynomial>().is_err());
    }

    #[test]
    fn as_word_only_for_monic_monomials() {
        assert_eq!(one("t R").as_word(), Some(&w("t R")));
        assert_eq!((&one("t") + &one("t")).as_word(), None);
        assert_eq!((&one("t") + &one("R")).as_word(), None);
    }
}
