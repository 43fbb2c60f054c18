//! The two reduction orders used to orient the defining relations.
//!
//! * [`OrderKind::Nilpotency`]: compare `deg_t`, then the height
//!   `h(X_0 t X_1 t .. t X_n) = sum 2^i |X_i|`, then deglex.
//! * [`OrderKind::ZeroDivisor`]: compare the weighted degree (`t` weighs 2,
//!   everything else 1), then plain lexicographic order.
//!
//! In both lexicographic tie-breaks a letter listed earlier in the alphabet
//! is the greater one.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::word::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Nilpotency,
    ZeroDivisor,
}

impl OrderKind {
    pub fn compare(self, a: &[Letter], b: &[Letter]) -> Result<Ordering> {
        match self {
            OrderKind::Nilpotency => compare_nilp(a, b),
            OrderKind::ZeroDivisor => compare_zd(a, b),
        }
    }

    /// Whether `letter` belongs to the alphabet this order is defined on.
    pub fn admits(self, letter: Letter) -> bool {
        match self {
            OrderKind::Nilpotency => !matches!(letter, Letter::S | Letter::LeftEdge),
            OrderKind::ZeroDivisor => true,
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Nilpotency => "nilpotency",
            OrderKind::ZeroDivisor => "zerodivisor",
        })
    }
}

impl FromStr for OrderKind {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "nilpotency" => Ok(OrderKind::Nilpotency),
            "zerodivisor" => Ok(OrderKind::ZeroDivisor),
            _ => Err(ParseError::Other(format!("unknown order {s:?}"))),
        }
    }
}

fn check_phi(w: &[Letter]) -> Result<()> {
    match w.iter().find(|l| !OrderKind::Nilpotency.admits(**l)) {
        Some(&l) => Err(Error::InvalidAlphabet(l)),
        None => Ok(()),
    }
}

/// `h(w)` for a word over the nilpotency alphabet.
///
/// Panics if the value does not fit in 128 bits (more than ~120 letters `t`).
pub fn height(w: &[Letter]) -> Result<u128> {
    check_phi(w)?;
    let mut total: u128 = 0;
    for (i, block) in w.split(|l| l.is_t()).enumerate() {
        let weight = 1u128
            .checked_shl(i as u32)
            .filter(|_| i < 127)
            .expect("height overflows u128");
        total = total
            .checked_add(weight * block.len() as u128)
            .expect("height overflows u128");
    }
    Ok(total)
}

/// Compares heights of two words with the same number of `t` letters
/// without materializing `2^i`.
///
/// Scans blocks from the last one down with a Horner accumulator; once
/// the accumulated difference exceeds the largest possible block-length
/// difference, the lower blocks can no longer flip the sign.
fn compare_heights(a: &[Letter], b: &[Letter]) -> Ordering {
    let bound = a.len().max(b.len()) as i64;
    let mut acc: i64 = 0;
    for (xa, xb) in a.rsplit(|l| l.is_t()).zip(b.rsplit(|l| l.is_t())) {
        acc = 2 * acc + xa.len() as i64 - xb.len() as i64;
        if acc > bound {
            return Ordering::Greater;
        }
        if acc < -bound {
            return Ordering::Less;
        }
    }
    acc.cmp(&0)
}

/// Lexicographic comparison at the first differing position; earlier-listed
/// letters are greater. A proper prefix is smaller.
pub fn lex(a: &[Letter], b: &[Letter]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return y.cmp(x);
        }
    }
    a.len().cmp(&b.len())
}

/// Length first, then [`lex`].
pub fn deglex(a: &[Letter], b: &[Letter]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| lex(a, b))
}

pub fn compare_nilp(a: &[Letter], b: &[Letter]) -> Result<Ordering> {
    check_phi(a)?;
    check_phi(b)?;
    let deg_a = a.iter().filter(|l| l.is_t()).count();
    let deg_b = b.iter().filter(|l| l.is_t()).count();
    Ok(deg_a
        .cmp(&deg_b)
        .then_with(|| compare_heights(a, b))
        .then_with(|| deglex(a, b)))
}

/// Sum of letter weights: `t` counts 2, every other letter 1.
pub fn weighted_degree(w: &[Letter]) -> usize {
    w.iter().map(|l| if l.is_t() { 2 } else { 1 }).sum()
}

pub fn compare_zd(a: &[Letter], b: &[Letter]) -> Result<Ordering> {
    Ok(weighted_degree(a)
        .cmp(&weighted_degree(b))
        .then_with(|| lex(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn height_examples() {
        assert_eq!(height(&w("t t")).unwrap(), 0);
        assert_eq!(height(&w("R a0")).unwrap(), 2);
        assert_eq!(height(&w("t R a0")).unwrap(), 4);
        assert_eq!(height(&w("eps")).unwrap(), 0);
        assert!(matches!(
            height(&w("s R")),
            Err(Error::InvalidAlphabet(Letter::S))
        ));
    }

    #[test]
    fn compare_nilp_examples() {
        assert_eq!(
            compare_nilp(&w("t R a1"), &w("R t a1")).unwrap(),
            Ordering::Greater
        );
        let x = w("t R a1 Q2 P3 a0 R");
        assert_eq!(compare_nilp(&x, &x).unwrap(), Ordering::Equal);
        assert_eq!(
            compare_nilp(&w("t"), &w("R R R R R")).unwrap(),
            Ordering::Greater
        );
        assert!(compare_nilp(&w("L"), &w("R")).is_err());
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!(weighted_degree(&w("t R L")), 4);
        assert_eq!(weighted_degree(&w("eps")), 0);
        assert_eq!(weighted_degree(&w("t a0 Q1 P2")), 5);
    }

    #[test]
    fn compare_zd_examples() {
        assert_eq!(
            compare_zd(&w("t L a2"), &w("L t a2")).unwrap(),
            Ordering::Greater
        );
        let x = w("t L Q0 P1 R s");
        assert_eq!(compare_zd(&x, &x).unwrap(), Ordering::Equal);
        assert_eq!(
            compare_zd(&w("t a0 Q0 P0"), &w("Q0 P0 a0 s")).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn height_comparison_agrees_with_height() {
        let words = [
            "t t R", "R t t", "t R t", "a0 a1 t", "t a0 a1", "a0 t a1", "R R t t t",
            "t t t R R", "t R t R", "R t R t",
        ];
        for a in words {
            for b in words {
                let (a, b) = (w(a), w(b));
                if a.degree_of(Letter::T) != b.degree_of(Letter::T) {
                    continue;
                }
                assert_eq!(
                    compare_heights(&a, &b),
                    height(&a).unwrap().cmp(&height(&b).unwrap()),
                    "{a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn height_comparison_survives_many_t() {
        // 200 letters t: the integer height would overflow u128.
        let mut a = vec![Letter::T; 200];
        let mut b = a.clone();
        a.push(Letter::RightEdge);
        b.insert(0, Letter::RightEdge);
        assert_eq!(compare_nilp(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(compare_nilp(&b, &a).unwrap(), Ordering::Less);
    }

    #[test]
    fn t_multiplication_and_height() {
        let x = w("R a0 t a1 Q2 t P3");
        let h = height(&x).unwrap();
        let left = w("t").concat(&x);
        let right = x.concat(&w("t"));
        assert_eq!(height(&left).unwrap(), 2 * h);
        assert_eq!(height(&right).unwrap(), h);
    }
}
