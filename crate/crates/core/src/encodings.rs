//! Compiles a machine program into the two presentations and translates
//! machine configurations to and from words.
//!
//! Both generators are parametric in the program: every Stop entry `(i, j)`
//! yields a rule `Q_i P_j -> 0`. Rule ids follow a fixed schema order with
//! indices ascending inside each schema, so they are stable across runs.

use std::fmt;
use std::str::FromStr;

use crate::alphabet::Alphabet;
use crate::error::ParseError;
use crate::order::OrderKind;
use crate::presentation::Presentation;
use crate::rule::{Rule, RuleTag, Schema};
use crate::tm::{Direction, TmConfig, TmSpec};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// Words `R U Q_i P_j V R`; `t` walks through and exits on the right.
    Nilpotency,
    /// Words `L U Q_i P_j V R`; `t` turns into `s` at the head.
    ZeroDivisor,
}

impl Construction {
    pub fn order(self) -> OrderKind {
        match self {
            Construction::Nilpotency => OrderKind::Nilpotency,
            Construction::ZeroDivisor => OrderKind::ZeroDivisor,
        }
    }

    pub fn left_edge(self) -> Letter {
        match self {
            Construction::Nilpotency => Letter::RightEdge,
            Construction::ZeroDivisor => Letter::LeftEdge,
        }
    }

    /// The letter a configuration word carries on its right after one step.
    pub fn trailer(self) -> Letter {
        match self {
            Construction::Nilpotency => Letter::T,
            Construction::ZeroDivisor => Letter::S,
        }
    }

    pub fn alphabet(self, spec: &TmSpec) -> Alphabet {
        match self {
            Construction::Nilpotency => Alphabet::phi(spec.states(), spec.colors()),
            Construction::ZeroDivisor => Alphabet::psi(spec.states(), spec.colors()),
        }
    }

    pub fn presentation(self, spec: &TmSpec) -> Presentation {
        match self {
            Construction::Nilpotency => nilpotency_presentation(spec),
            Construction::ZeroDivisor => zerodivisor_presentation(spec),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Nilpotency => "nilpotency",
            Construction::ZeroDivisor => "zerodivisor",
        })
    }
}

impl FromStr for Construction {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "nilpotency" => Ok(Construction::Nilpotency),
            "zerodivisor" => Ok(Construction::ZeroDivisor),
            _ => Err(ParseError::Other(format!("unknown construction {s:?}"))),
        }
    }
}

use Letter::{Cell as A, ColorMark as P, State as Q, LeftEdge, RightEdge, S, T};

struct RuleSink(Vec<Rule>);

impl RuleSink {
    fn add(&mut self, schema: Schema, idx: &[u16], lhs: Vec<Letter>, rhs: Vec<Letter>) {
        self.0
            .push(Rule::to_word(lhs.into(), rhs.into(), RuleTag::new(schema, idx)));
    }

    fn add_zero(&mut self, schema: Schema, idx: &[u16], lhs: Vec<Letter>) {
        self.0.push(Rule::to_zero(lhs.into(), RuleTag::new(schema, idx)));
    }
}

/// The nilpotency presentation over `{t, a_*, Q_*, P_*, R}`.
pub fn nilpotency_presentation(spec: &TmSpec) -> Presentation {
    let colors = 0..spec.colors();
    let left: Vec<_> = spec.pairs(Direction::Left).collect();
    let right: Vec<_> = spec.pairs(Direction::Right).collect();
    let mut out = RuleSink(Vec::new());

    for l in colors.clone() {
        out.add(Schema::Tt1, &[l], vec![T, RightEdge, A(l)], vec![RightEdge, T, A(l)]);
    }
    for l in colors.clone() {
        out.add(Schema::Tt1b, &[l], vec![T, A(l), RightEdge], vec![A(l), RightEdge, T]);
    }
    for k in colors.clone() {
        for j in colors.clone() {
            out.add(Schema::Tt2, &[k, j], vec![T, A(k), A(j)], vec![A(k), T, A(j)]);
        }
    }
    for &(i, j, q, p) in &left {
        for k in colors.clone() {
            out.add(
                Schema::Tt3,
                &[i, j, k],
                vec![T, A(k), Q(i), P(j)],
                vec![Q(q), P(k), T, A(p)],
            );
        }
    }
    for &(i, j, q, p) in &left {
        out.add(
            Schema::Tt5,
            &[i, j],
            vec![T, RightEdge, Q(i), P(j)],
            vec![RightEdge, Q(q), P(0), T, A(p)],
        );
    }
    for &(i, j, q, p) in &right {
        for l in colors.clone() {
            for k in colors.clone() {
                for n in colors.clone() {
                    out.add(
                        Schema::Tt4,
                        &[i, j, l, k, n],
                        vec![T, A(l), Q(i), P(j), A(k), A(n)],
                        vec![A(l), A(p), Q(q), P(k), T, A(n)],
                    );
                }
            }
        }
    }
    for &(i, j, q, p) in &right {
        for l in colors.clone() {
            for k in colors.clone() {
                out.add(
                    Schema::Tt4r,
                    &[i, j, l, k],
                    vec![T, A(l), Q(i), P(j), A(k), RightEdge],
                    vec![A(l), A(p), Q(q), P(k), RightEdge, T],
                );
            }
        }
    }
    for &(i, j, q, p) in &right {
        for k in colors.clone() {
            for n in colors.clone() {
                out.add(
                    Schema::Tt4b,
                    &[i, j, k, n],
                    vec![T, RightEdge, Q(i), P(j), A(k), A(n)],
                    vec![RightEdge, A(p), Q(q), P(k), T, A(n)],
                );
            }
        }
    }
    for &(i, j, q, p) in &right {
        for k in colors.clone() {
            out.add(
                Schema::Tt4ar,
                &[i, j, k],
                vec![T, RightEdge, Q(i), P(j), A(k), RightEdge],
                vec![RightEdge, A(p), Q(q), P(k), RightEdge, T],
            );
        }
    }
    for &(i, j, q, p) in &right {
        for l in colors.clone() {
            out.add(
                Schema::Tt6,
                &[i, j, l],
                vec![T, A(l), Q(i), P(j), RightEdge],
                vec![A(l), A(p), Q(q), P(0), RightEdge, T],
            );
        }
    }
    for &(i, j, q, p) in &right {
        out.add(
            Schema::Tt6b,
            &[i, j],
            vec![T, RightEdge, Q(i), P(j), RightEdge],
            vec![RightEdge, A(p), Q(q), P(0), RightEdge, T],
        );
    }
    for (i, j) in spec.stop_pairs() {
        out.add_zero(Schema::Tt7, &[i, j], vec![Q(i), P(j)]);
    }

    Presentation::new(
        Alphabet::phi(spec.states(), spec.colors()),
        OrderKind::Nilpotency,
        out.0,
    )
    .expect("generated rules stay inside the alphabet")
}

/// The zero-divisor presentation over `{t, s, a_*, Q_*, P_*, L, R}`.
pub fn zerodivisor_presentation(spec: &TmSpec) -> Presentation {
    let colors = 0..spec.colors();
    let left: Vec<_> = spec.pairs(Direction::Left).collect();
    let right: Vec<_> = spec.pairs(Direction::Right).collect();
    let mut out = RuleSink(Vec::new());

    for k in colors.clone() {
        out.add(Schema::Td1, &[k], vec![T, LeftEdge, A(k)], vec![LeftEdge, T, A(k)]);
    }
    for k in colors.clone() {
        for l in colors.clone() {
            out.add(Schema::Td2, &[k, l], vec![T, A(k), A(l)], vec![A(k), T, A(l)]);
        }
    }
    out.add(Schema::Td9, &[], vec![S, RightEdge], vec![RightEdge, S]);
    for k in colors.clone() {
        out.add(Schema::Td8, &[k], vec![S, A(k)], vec![A(k), S]);
    }
    for &(i, j, q, p) in &left {
        for k in colors.clone() {
            out.add(
                Schema::Td3,
                &[i, j, k],
                vec![T, A(k), Q(i), P(j)],
                vec![Q(q), P(k), A(p), S],
            );
        }
    }
    for &(i, j, q, p) in &left {
        out.add(
            Schema::Td5,
            &[i, j],
            vec![T, LeftEdge, Q(i), P(j)],
            vec![LeftEdge, Q(q), P(0), A(p), S],
        );
    }
    for &(i, j, q, p) in &right {
        for l in colors.clone() {
            for k in colors.clone() {
                out.add(
                    Schema::Td4,
                    &[i, j, l, k],
                    vec![T, A(l), Q(i), P(j), A(k)],
                    vec![A(l), A(p), Q(q), P(k), S],
                );
            }
        }
    }
    for &(i, j, q, p) in &right {
        for k in colors.clone() {
            out.add(
                Schema::Td4b,
                &[i, j, k],
                vec![T, LeftEdge, Q(i), P(j), A(k)],
                vec![LeftEdge, A(p), Q(q), P(k), S],
            );
        }
    }
    for &(i, j, q, p) in &right {
        for l in colors.clone() {
            out.add(
                Schema::Td6,
                &[i, j, l],
                vec![T, A(l), Q(i), P(j), RightEdge],
                vec![A(l), A(p), Q(q), P(0), RightEdge, S],
            );
        }
    }
    for &(i, j, q, p) in &right {
        out.add(
            Schema::Td6b,
            &[i, j],
            vec![T, LeftEdge, Q(i), P(j), RightEdge],
            vec![LeftEdge, A(p), Q(q), P(0), RightEdge, S],
        );
    }
    for (i, j) in spec.stop_pairs() {
        out.add_zero(Schema::Td7, &[i, j], vec![Q(i), P(j)]);
    }

    Presentation::new(
        Alphabet::psi(spec.states(), spec.colors()),
        OrderKind::ZeroDivisor,
        out.0,
    )
    .expect("generated rules stay inside the alphabet")
}

/// The main word `edge U Q_i P_j V R` of a configuration.
pub fn encode_config(c: &TmConfig, construction: Construction) -> Word {
    let mut letters = Vec::with_capacity(c.tape_len() + 3);
    letters.push(construction.left_edge());
    letters.extend(c.left.iter().map(|&k| A(k)));
    letters.push(Q(c.state));
    letters.push(P(c.current));
    letters.extend(c.right.iter().map(|&k| A(k)));
    letters.push(RightEdge);
    Word::new(letters)
}

/// Deletes the clock letters (`t`, and `s` for the zero-divisor
/// construction) and reads the remaining structure back as a
/// configuration. `None` when the structure is malformed.
pub fn decode_structure(w: &[Letter], construction: Construction) -> Option<TmConfig> {
    let clock = |l: &Letter| match construction {
        Construction::Nilpotency => *l == T,
        Construction::ZeroDivisor => *l == T || *l == S,
    };
    let rest: Vec<Letter> = w.iter().copied().filter(|l| !clock(l)).collect();
    let (&first, rest) = rest.split_first()?;
    let (&last, inner) = rest.split_last()?;
    if first != construction.left_edge() || last != RightEdge {
        return None;
    }
    let head = inner.iter().position(|l| matches!(l, Q(_)))?;
    let (state, current) = match (inner.get(head), inner.get(head + 1)) {
        (Some(&Q(i)), Some(&P(j))) => (i, j),
        _ => None?,
    };
    let cells = |run: &[Letter]| -> Option<Vec<u16>> {
        run.iter()
            .map(|l| match *l {
                A(k) => Some(k),
                _ => None,
            })
            .collect()
    };
    Some(TmConfig::new(
        state,
        current,
        cells(&inner[..head])?,
        cells(&inner[head + 2..])?,
    ))
}
