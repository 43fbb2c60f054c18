//! Certificates for the Gröbner-basis claims.
//!
//! A monic monomial rule set is a Gröbner basis with respect to a reduction
//! order when every rule is oriented and every ambiguity between two
//! left-hand sides resolves. [`find_ambiguities`] enumerates overlaps and
//! inclusions, [`resolve_ambiguity`] checks one composition, and
//! [`audit_order`] exhaustively tests the order axioms on short words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matcher::Redex;
use crate::order::OrderKind;
use crate::presentation::Presentation;
use crate::rewrite::DEFAULT_BUDGET;
use crate::rule::Reduct;
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AmbiguityKind {
    /// A proper suffix of `lhs(first)` is a proper prefix of `lhs(second)`.
    Overlap,
    /// `lhs(second)` occurs inside `lhs(first)`.
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub first: usize,
    pub second: usize,
    /// The superposition: `lhs(first)` starts at 0, `lhs(second)` at `offset`.
    pub witness: Word,
    pub offset: usize,
}

impl fmt::Display for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            AmbiguityKind::Overlap => "OVERLAP",
            AmbiguityKind::Inclusion => "INCLUSION",
        };
        write!(
            f,
            "{kind} r{} r{} witness: {}",
            self.first, self.second, self.witness
        )
    }
}

/// Every overlap and inclusion ambiguity among the left-hand sides,
/// self-overlaps included, sorted.
///
/// Left-hand sides are indexed by their prefixes, so the cost is linear in
/// the number of rules times the squared pattern length.
pub fn find_ambiguities(p: &Presentation) -> Vec<Ambiguity> {
    let rules = p.rules();
    let mut by_prefix: HashMap<&[Letter], Vec<usize>> = HashMap::new();
    let mut by_lhs: HashMap<&[Letter], Vec<usize>> = HashMap::new();
    for (id, rule) in rules.iter().enumerate() {
        let lhs = rule.lhs.letters();
        for k in 1..lhs.len() {
            by_prefix.entry(&lhs[..k]).or_default().push(id);
        }
        by_lhs.entry(lhs).or_default().push(id);
    }

    let mut out = Vec::new();
    for (first, rule) in rules.iter().enumerate() {
        let lhs = rule.lhs.letters();
        let n = lhs.len();
        for start in 1..n {
            for &second in by_prefix.get(&lhs[start..]).into_iter().flatten() {
                out.push(Ambiguity {
                    kind: AmbiguityKind::Overlap,
                    first,
                    second,
                    witness: Word::from(lhs).concat(&Word::from(&rules[second].lhs[n - start..])),
                    offset: start,
                });
            }
        }
        for start in 0..n {
            for end in start + 1..=n {
                for &second in by_lhs.get(&lhs[start..end]).into_iter().flatten() {
                    if second != first {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Inclusion,
                            first,
                            second,
                            witness: rule.lhs.clone(),
                            offset: start,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Whether the two one-step reductions of the witness reach the same normal
/// form.
pub fn resolve_ambiguity(a: &Ambiguity, p: &Presentation) -> Result<bool> {
    let one = p.apply(&a.witness, Redex { pos: 0, rule: a.first });
    let two = p.apply(
        &a.witness,
        Redex {
            pos: a.offset,
            rule: a.second,
        },
    );
    let nf = |r: Reduct| -> Result<Reduct> {
        match r {
            Reduct::Zero => Ok(Reduct::Zero),
            Reduct::Word(w) => Ok(p.normalize_word(&w, DEFAULT_BUDGET)?.0),
        }
    };
    Ok(nf(one)? == nf(two)?)
}

/// Rule ids whose left-hand side is not strictly greater than the
/// right-hand side.
pub fn audit_orientation(p: &Presentation) -> Vec<usize> {
    p.rules()
        .iter()
        .enumerate()
        .filter(|(_, rule)| match &rule.rhs {
            Reduct::Zero => false,
            Reduct::Word(rhs) => {
                p.order().compare(&rule.lhs, rhs).ok() != Some(Ordering::Greater)
            }
        })
        .map(|(id, _)| id)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderViolation {
    /// `smaller < larger` but multiplying by `letter` on `side` breaks it.
    Monotonicity {
        smaller: Word,
        larger: Word,
        letter: Letter,
        side: Side,
    },
    /// Distinct words compared equal, or the comparison is not antisymmetric.
    Totality { a: Word, b: Word },
    /// Some nonempty word is not above the empty word.
    Minimality { word: Word },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderAuditReport {
    pub order: Option<OrderKind>,
    pub alphabet: Vec<Letter>,
    pub max_len: usize,
    pub words: usize,
    pub pair_checks: usize,
    pub monotonicity_checks: usize,
    pub violations: Vec<OrderViolation>,
}

impl OrderAuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All words over `letters` of length at most `max_len`, shortest first.
pub fn words_up_to(letters: &[Letter], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut next = w.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Exhaustively checks totality, minimality of the empty word and two-sided
/// monotonicity under single-letter multipliers for all words over
/// `letters` up to `max_len`.
pub fn audit_order(
    order: OrderKind,
    letters: &[Letter],
    max_len: usize,
) -> Result<OrderAuditReport> {
    if let Some(&l) = letters.iter().find(|l| !order.admits(**l)) {
        return Err(Error::InvalidAlphabet(l));
    }
    let cmp = |a: &[Letter], b: &[Letter]| {
        order
            .compare(a, b)
            .expect("audit letters belong to the order's alphabet")
    };
    let mut report = audit_comparator(cmp, letters, max_len);
    report.order = Some(order);
    Ok(report)
}

/// [`audit_order`] for an arbitrary comparison function.
pub fn audit_comparator<F>(cmp: F, letters: &[Letter], max_len: usize) -> OrderAuditReport
where
    F: Fn(&[Letter], &[Letter]) -> Ordering + Sync,
{
    let words = words_up_to(letters, max_len);
    let per_word: Vec<(usize, usize, Vec<OrderViolation>)> = words
        .par_iter()
        .map(|s1| {
            let mut pairs = 0;
            let mut mono = 0;
            let mut violations = Vec::new();
            if !s1.is_empty() && cmp(&Word::empty(), s1) != Ordering::Less {
                violations.push(OrderViolation::Minimality { word: s1.clone() });
            }
            for s2 in &words {
                pairs += 1;
                let c = cmp(s1, s2);
                if (c == Ordering::Equal) != (s1 == s2) || cmp(s2, s1) != c.reverse() {
                    violations.push(OrderViolation::Totality {
                        a: s1.clone(),
                        b: s2.clone(),
                    });
                }
                if c != Ordering::Less {
                    continue;
                }
                for &x in letters {
                    let xw = Word::new(vec![x]);
                    mono += 2;
                    if cmp(&xw.concat(s1), &xw.concat(s2)) != Ordering::Less {
                        violations.push(OrderViolation::Monotonicity {
                            smaller: s1.clone(),
                            larger: s2.clone(),
                            letter: x,
                            side: Side::Left,
                        });
                    }
                    if cmp(&s1.concat(&xw), &s2.concat(&xw)) != Ordering::Less {
                        violations.push(OrderViolation::Monotonicity {
                            smaller: s1.clone(),
                            larger: s2.clone(),
                            letter: x,
                            side: Side::Right,
                        });
                    }
                }
            }
            (pairs, mono, violations)
        })
        .collect();

    let mut report = OrderAuditReport {
        order: None,
        alphabet: letters.to_vec(),
        max_len,
        words: words.len(),
        pair_checks: 0,
        monotonicity_checks: 0,
        violations: Vec::new(),
    };
    for (pairs, mono, violations) in per_word {
        report.pair_checks += pairs;
        report.monotonicity_checks += mono;
        report.violations.extend(violations);
    }
    report
}
