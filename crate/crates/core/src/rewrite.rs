//! Rule application and normal forms.
//!
//! All rules are monic and map a monomial to a monomial or to zero, so
//! rewriting never touches coefficients: a polynomial is normalized term
//! by term and like terms are collected afterwards.

use crate::error::{Error, Result};
use crate::matcher::Redex;
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use crate::rule::Reduct;
use crate::word::{Letter, Word};

/// Default number of single rewrites allowed per normalization call.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Which redex to contract next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Smallest start position, lowest rule id on ties.
    #[default]
    Leftmost,
    /// Largest start position, lowest rule id on ties.
    Rightmost,
}

/// One applied rewrite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub redex: Redex,
    pub result: Reduct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub poly: Polynomial,
    pub steps: usize,
}

impl Presentation {
    /// Contracts `redex` in `w`. The caller guarantees the redex occurs.
    pub fn apply(&self, w: &[Letter], redex: Redex) -> Reduct {
        let rule = self.rule(redex.rule);
        debug_assert_eq!(
            &w[redex.pos..redex.pos + rule.lhs.len()],
            rule.lhs.letters()
        );
        match &rule.rhs {
            Reduct::Zero => Reduct::Zero,
            Reduct::Word(rhs) => Reduct::Word(Word::from(w).splice(redex.pos, rule.lhs.len(), rhs)),
        }
    }

    /// Rewrites the leftmost redex of `w` once; `None` when `w` is already
    /// in normal form.
    pub fn reduce_once(&self, w: &[Letter]) -> Result<Option<Rewrite>> {
        self.check_word(w)?;
        Ok(self.matcher().leftmost(w, 0).map(|redex| Rewrite {
            redex,
            result: self.apply(w, redex),
        }))
    }

    /// Number of redex occurrences in `w`.
    pub fn redex_count(&self, w: &[Letter]) -> usize {
        self.matcher().count(w)
    }

    pub fn is_normal(&self, w: &[Letter]) -> bool {
        self.matcher().leftmost(w, 0).is_none()
    }

    /// Normal form of a single word under the default strategy.
    pub fn normalize_word(&self, w: &[Letter], budget: usize) -> Result<(Reduct, usize)> {
        self.normalize_word_with(w, Strategy::Leftmost, budget)
    }

    pub fn normalize_word_with(
        &self,
        w: &[Letter],
        strategy: Strategy,
        budget: usize,
    ) -> Result<(Reduct, usize)> {
        self.check_word(w)?;
        let mut word = w.to_vec();
        let mut steps = 0;
        let mut from = 0;
        let max_len = self.matcher().max_len();
        loop {
            let redex = match strategy {
                Strategy::Leftmost => self.matcher().leftmost(&word, from),
                Strategy::Rightmost => self.matcher().rightmost(&word),
            };
            let Some(redex) = redex else {
                return Ok((Reduct::Word(Word::new(word)), steps));
            };
            if steps == budget {
                let remaining_redexes = self.redex_count(&word);
                return Err(Error::BudgetExhausted {
                    budget,
                    partial: Box::new(Polynomial::from(Word::new(word))),
                    remaining_redexes,
                });
            }
            steps += 1;
            let rule = self.rule(redex.rule);
            match &rule.rhs {
                Reduct::Zero => return Ok((Reduct::Zero, steps)),
                Reduct::Word(rhs) => {
                    let end = redex.pos + rule.lhs.len();
                    word.splice(redex.pos..end, rhs.iter().copied());
                }
            }
            // Everything left of the contracted redex was redex-free, so a
            // new redex has to reach into the replaced window.
            from = redex.pos.saturating_sub(max_len);
        }
    }

    /// Normal form of a polynomial; the budget is shared by all its terms.
    pub fn normalize(&self, x: &Polynomial, budget: usize) -> Result<Normalized> {
        self.normalize_with(x, Strategy::Leftmost, budget)
    }

    pub fn normalize_with(
        &self,
        x: &Polynomial,
        strategy: Strategy,
        budget: usize,
    ) -> Result<Normalized> {
        let mut out = Polynomial::zero();
        let mut steps = 0;
        let terms: Vec<_> = x.terms().collect();
        for (i, (word, coeff)) in terms.iter().enumerate() {
            match self.normalize_word_with(word, strategy, budget - steps) {
                Ok((Reduct::Zero, n)) => steps += n,
                Ok((Reduct::Word(nf), n)) => {
                    steps += n;
                    out.add_term(nf, (*coeff).clone());
                }
                Err(Error::BudgetExhausted { partial, .. }) => {
                    // Report what has been reached so far, untouched terms
                    // included.
                    let mut rest = &out + &partial.scale(coeff);
                    for (w, c) in &terms[i + 1..] {
                        rest.add_term((*w).clone(), (*c).clone());
                    }
                    let remaining_redexes = rest.terms().map(|(w, _)| self.redex_count(w)).sum();
                    return Err(Error::BudgetExhausted {
                        budget,
                        partial: Box::new(rest),
                        remaining_redexes,
                    });
                }
                Err(e) => return Err(e),
            }
        }
        Ok(Normalized { poly: out, steps })
    }

    /// Whether `x` and `y` are the same element of the algebra.
    pub fn equal_in_algebra(&self, x: &Polynomial, y: &Polynomial, budget: usize) -> Result<bool> {
        Ok(self.normalize(&(x - y), budget)?.poly.is_zero())
    }

    /// Normal form of `w^n`.
    pub fn power_normalize(&self, w: &Word, n: usize, budget: usize) -> Result<Normalized> {
        if n == 0 {
            return Err(Error::InvalidArgument("power must be positive".into()));
        }
        self.normalize(&Polynomial::from(w.pow(n)), budget)
    }
}
