//! Turing machines with the tape kept as two finite color runs flanking
//! the head cell.
//!
//! Text formats:
//!
//! ```text
//! states 7
//! colors 4
//! rule 0 0 -> L 4 1
//! rule 4 3 -> STOP
//! ```
//!
//! ```text
//! left: 1 0 2
//! state: 2
//! cell: 3
//! right: 0 1
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    /// Paint the current cell `color`, switch to `state`, move the head.
    Move {
        dir: Direction,
        state: u16,
        color: u16,
    },
    Stop,
}

/// A machine program: a total table over `states x colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TmSpec {
    states: u16,
    colors: u16,
    table: Vec<Action>,
}

impl TmSpec {
    /// `table[i * colors + j]` is the action for state `i`, color `j`.
    pub fn new(states: u16, colors: u16, table: Vec<Action>) -> Result<Self> {
        if states == 0 || colors == 0 {
            return Err(Error::InvalidMachine("need at least one state and one color".into()));
        }
        if table.len() != states as usize * colors as usize {
            return Err(Error::InvalidMachine(format!(
                "table has {} entries, expected {}",
                table.len(),
                states as usize * colors as usize
            )));
        }
        for action in &table {
            if let Action::Move { state, color, .. } = *action {
                if state >= states || color >= colors {
                    return Err(Error::InvalidMachine(format!(
                        "move to state {state} color {color} is out of range"
                    )));
                }
            }
        }
        Ok(TmSpec {
            states,
            colors,
            table,
        })
    }

    pub fn states(&self) -> u16 {
        self.states
    }

    pub fn colors(&self) -> u16 {
        self.colors
    }

    /// Panics if `(state, color)` is outside the table.
    pub fn action(&self, state: u16, color: u16) -> Action {
        assert!(state < self.states && color < self.colors);
        self.table[state as usize * self.colors as usize + color as usize]
    }

    /// All `(state, color, action)` entries, state-major.
    pub fn entries(&self) -> impl Iterator<Item = (u16, u16, Action)> + '_ {
        (0..self.states).flat_map(move |i| (0..self.colors).map(move |j| (i, j, self.action(i, j))))
    }

    pub fn pairs(&self, dir: Direction) -> impl Iterator<Item = (u16, u16, u16, u16)> + '_ {
        self.entries().filter_map(move |(i, j, a)| match a {
            Action::Move { dir: d, state, color } if d == dir => Some((i, j, state, color)),
            _ => None,
        })
    }

    pub fn stop_pairs(&self) -> impl Iterator<Item = (u16, u16)> + '_ {
        self.entries()
            .filter(|(_, _, a)| *a == Action::Stop)
            .map(|(i, j, _)| (i, j))
    }
}

/// Minsky's 7-state, 4-color universal machine.
pub fn minsky_utm() -> TmSpec {
    use Direction::{Left as L, Right as R};
    let mv = |dir, state, color| Action::Move { dir, state, color };
    #[rustfmt::skip]
    let table = vec![
        mv(L, 4, 1), mv(L, 1, 3), mv(R, 0, 0), mv(R, 0, 1),
        mv(L, 1, 2), mv(L, 1, 3), mv(R, 0, 0), mv(L, 1, 3),
        mv(R, 2, 2), mv(R, 2, 1), mv(R, 2, 0), mv(L, 4, 1),
        mv(R, 3, 2), mv(R, 3, 1), mv(R, 3, 0), mv(L, 4, 0),
        mv(L, 5, 2), mv(L, 4, 1), mv(L, 4, 0), Action::Stop,
        mv(L, 5, 2), mv(L, 5, 1), mv(L, 6, 2), mv(R, 2, 1),
        mv(R, 0, 3), mv(R, 6, 3), mv(R, 6, 2), mv(R, 3, 1),
    ];
    TmSpec::new(7, 4, table).expect("Minsky table is well formed")
}

/// Full machine state: `left` runs from the leftmost cell up to the cell
/// adjacent to the head, `right` from the adjacent cell outwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TmConfig {
    pub left: Vec<u16>,
    pub state: u16,
    pub current: u16,
    pub right: Vec<u16>,
}

impl TmConfig {
    pub fn new(state: u16, current: u16, left: Vec<u16>, right: Vec<u16>) -> Self {
        TmConfig {
            left,
            state,
            current,
            right,
        }
    }

    /// Number of tape cells, head cell included.
    pub fn tape_len(&self) -> usize {
        self.left.len() + self.right.len() + 1
    }

    pub fn validate(&self, spec: &TmSpec) -> Result<()> {
        if self.state >= spec.states() {
            return Err(Error::InvalidConfig(format!("state {} out of range", self.state)));
        }
        if let Some(c) = std::iter::once(&self.current)
            .chain(&self.left)
            .chain(&self.right)
            .find(|&&c| c >= spec.colors())
        {
            return Err(Error::InvalidConfig(format!("color {c} out of range")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Halted,
    Next(TmConfig),
}

/// One machine step. Moving off the colored region reads a fresh cell of
/// color 0.
pub fn tm_step(spec: &TmSpec, c: &TmConfig) -> Step {
    match spec.action(c.state, c.current) {
        Action::Stop => Step::Halted,
        Action::Move {
            dir: Direction::Left,
            state,
            color,
        } => {
            let mut left = c.left.clone();
            let current = left.pop().unwrap_or(0);
            let mut right = Vec::with_capacity(c.right.len() + 1);
            right.push(color);
            right.extend_from_slice(&c.right);
            Step::Next(TmConfig::new(state, current, left, right))
        }
        Action::Move {
            dir: Direction::Right,
            state,
            color,
        } => {
            let mut left = c.left.clone();
            left.push(color);
            let (current, right) = match c.right.split_first() {
                Some((&k, rest)) => (k, rest.to_vec()),
                None => (0, Vec::new()),
            };
            Step::Next(TmConfig::new(state, current, left, right))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Reached a Stop entry after this many steps.
    Halted(usize),
    /// Still running after the whole budget.
    StillRunning(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub outcome: Outcome,
    pub config: TmConfig,
    /// Every visited configuration, start included, when requested.
    pub trace: Option<Vec<TmConfig>>,
}

pub fn tm_run(spec: &TmSpec, start: &TmConfig, budget: usize, keep_trace: bool) -> RunResult {
    let mut config = start.clone();
    let mut trace = keep_trace.then(|| vec![config.clone()]);
    for steps in 0..=budget {
        match tm_step(spec, &config) {
            Step::Halted => {
                return RunResult {
                    outcome: Outcome::Halted(steps),
                    config,
                    trace,
                }
            }
            Step::Next(next) if steps < budget => {
                if let Some(t) = trace.as_mut() {
                    t.push(next.clone());
                }
                config = next;
            }
            Step::Next(_) => break,
        }
    }
    RunResult {
        outcome: Outcome::StillRunning(budget),
        config,
        trace,
    }
}

impl fmt::Display for TmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "states {}", self.states)?;
        writeln!(f, "colors {}", self.colors)?;
        for (i, j, action) in self.entries() {
            match action {
                Action::Stop => writeln!(f, "rule {i} {j} -> STOP")?,
                Action::Move { dir, state, color } => {
                    let d = if dir == Direction::Left { 'L' } else { 'R' };
                    writeln!(f, "rule {i} {j} -> {d} {state} {color}")?
                }
            }
        }
        Ok(())
    }
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<u16, ParseError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::line(line, "expected a number"))
}

impl FromStr for TmSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut states = None;
        let mut colors = None;
        let mut entries: Vec<(usize, u16, u16, Action)> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut toks = body.split_whitespace();
            match toks.next() {
                Some("states") => states = Some(parse_num(toks.next(), line)?),
                Some("colors") => colors = Some(parse_num(toks.next(), line)?),
                Some("rule") => {
                    let i = parse_num(toks.next(), line)?;
                    let j = parse_num(toks.next(), line)?;
                    if toks.next() != Some("->") {
                        return Err(ParseError::line(line, "expected `->`").into());
                    }
                    let action = match toks.next() {
                        Some("STOP") => Action::Stop,
                        Some(d @ ("L" | "R")) => Action::Move {
                            dir: if d == "L" { Direction::Left } else { Direction::Right },
                            state: parse_num(toks.next(), line)?,
                            color: parse_num(toks.next(), line)?,
                        },
                        _ => return Err(ParseError::line(line, "expected L, R or STOP").into()),
                    };
                    if toks.next().is_some() {
                        return Err(ParseError::line(line, "trailing tokens").into());
                    }
                    entries.push((line, i, j, action));
                }
                Some(other) => {
                    return Err(ParseError::line(line, format!("unknown keyword {other:?}")).into())
                }
                None => unreachable!(),
            }
        }
        let states = states.ok_or_else(|| ParseError::Other("missing `states`".into()))?;
        let colors = colors.ok_or_else(|| ParseError::Other("missing `colors`".into()))?;
        let mut table: Vec<Option<Action>> = vec![None; states as usize * colors as usize];
        for (line, i, j, action) in entries {
            if i >= states || j >= colors {
                return Err(ParseError::line(line, "pair out of range").into());
            }
            let slot = &mut table[i as usize * colors as usize + j as usize];
            if slot.is_some() {
                return Err(ParseError::line(line, format!("duplicate rule for ({i},{j})")).into());
            }
            *slot = Some(action);
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(k, a)| {
                a.ok_or_else(|| {
                    Error::InvalidMachine(format!(
                        "no rule for ({},{})",
                        k / colors as usize,
                        k % colors as usize
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        TmSpec::new(states, colors, table)
    }
}

/// Colors with a leading space each, so an empty run prints as `left:`.
fn join(colors: &[u16]) -> String {
    colors.iter().map(|c| format!(" {c}")).collect()
}

impl fmt::Display for TmConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "left:{}", join(&self.left))?;
        writeln!(f, "state: {}", self.state)?;
        writeln!(f, "cell: {}", self.current)?;
        writeln!(f, "right:{}", join(&self.right))
    }
}

impl FromStr for TmConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (mut left, mut state, mut cell, mut right) = (None, None, None, None);
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body
                .split_once(':')
                .ok_or_else(|| ParseError::line(line, "expected `key: value`"))?;
            let nums = value
                .split_whitespace()
                .map(|t| t.parse::<u16>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| ParseError::line(line, "expected numbers"))?;
            let single = |nums: Vec<u16>| -> Result<u16, ParseError> {
                match nums.as_slice() {
                    [x] => Ok(*x),
                    _ => Err(ParseError::line(line, "expected exactly one number")),
                }
            };
            match key.trim() {
                "left" => left = Some(nums),
                "right" => right = Some(nums),
                "state" => state = Some(single(nums)?),
                "cell" => cell = Some(single(nums)?),
                other => return Err(ParseError::line(line, format!("unknown key {other:?}")).into()),
            }
        }
        Ok(TmConfig {
            left: left.unwrap_or_default(),
            state: state.ok_or_else(|| ParseError::Other("missing `state`".into()))?,
            current: cell.ok_or_else(|| ParseError::Other("missing `cell`".into()))?,
            right: right.unwrap_or_default(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(state: u16, current: u16, left: &[u16], right: &[u16]) -> TmConfig {
        TmConfig::new(state, current, left.to_vec(), right.to_vec())
    }

    #[test]
    fn minsky_table_lookups() {
        let m = minsky_utm();
        assert_eq!(
            m.action(0, 0),
            Action::Move { dir: Direction::Left, state: 4, color: 1 }
        );
        assert_eq!(m.action(4, 3), Action::Stop);
        assert_eq!(
            m.action(6, 3),
            Action::Move { dir: Direction::Right, state: 3, color: 1 }
        );
        assert_eq!(
            m.action(2, 3),
            Action::Move { dir: Direction::Left, state: 4, color: 1 }
        );
        assert_eq!(m.pairs(Direction::Left).count(), 13);
        assert_eq!(m.pairs(Direction::Right).count(), 14);
        assert_eq!(m.stop_pairs().collect::<Vec<_>>(), vec![(4, 3)]);
    }

    #[test]
    fn step_examples() {
        let m = minsky_utm();
        assert_eq!(
            tm_step(&m, &cfg(2, 3, &[3], &[])),
            Step::Next(cfg(4, 3, &[], &[1]))
        );
        assert_eq!(tm_step(&m, &cfg(4, 3, &[1, 2], &[0])), Step::Halted);
        assert_eq!(
            tm_step(&m, &cfg(0, 2, &[], &[])),
            Step::Next(cfg(0, 0, &[0], &[]))
        );
        // Left move off the colored region.
        assert_eq!(
            tm_step(&m, &cfg(0, 0, &[], &[2])),
            Step::Next(cfg(4, 0, &[], &[1, 2]))
        );
        // Right move onto an existing cell.
        assert_eq!(
            tm_step(&m, &cfg(6, 3, &[1], &[2, 0])),
            Step::Next(cfg(3, 2, &[1, 1], &[0]))
        );
    }

    #[test]
    fn run_examples() {
        let m = minsky_utm();
        let r = tm_run(&m, &cfg(4, 3, &[2], &[]), 0, false);
        assert_eq!(r.outcome, Outcome::Halted(0));
        let r = tm_run(&m, &cfg(2, 3, &[3], &[]), 10, true);
        assert_eq!(r.outcome, Outcome::Halted(1));
        assert_eq!(r.config, cfg(4, 3, &[], &[1]));
        assert_eq!(r.trace.unwrap().len(), 2);
        let r = tm_run(&m, &cfg(2, 0, &[], &[]), 3, true);
        assert_eq!(r.outcome, Outcome::StillRunning(3));
        // (2,0) -> (R,2,2), (2,0) again on the fresh cell, ...
        assert_eq!(r.config, cfg(2, 0, &[2, 2, 2], &[]));
        assert_eq!(r.trace.unwrap().len(), 4);
    }

    #[test]
    fn spec_text_round_trip() {
        let m = minsky_utm();
        let again: TmSpec = m.to_string().parse().unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn spec_text_errors() {
        assert!("states 1\ncolors 1\n".parse::<TmSpec>().is_err());
        assert!("states 1\ncolors 1\nrule 0 0 -> L 1 0\n".parse::<TmSpec>().is_err());
        assert!("states 1\ncolors 1\nrule 0 0 -> STOP\nrule 0 0 -> STOP\n"
            .parse::<TmSpec>()
            .is_err());
        assert!("states 1\ncolors 1\nrule 0 0 -> X\n".parse::<TmSpec>().is_err());
        let ok: TmSpec = "# tiny\nstates 1\ncolors 1\nrule 0 0 -> STOP\n".parse().unwrap();
        assert_eq!(ok.action(0, 0), Action::Stop);
    }

    #[test]
    fn config_text_round_trip() {
        let c = cfg(2, 3, &[1, 0, 2], &[0, 1]);
        let text = c.to_string();
        assert_eq!(text, "left: 1 0 2\nstate: 2\ncell: 3\nright: 0 1\n");
        assert_eq!(text.parse::<TmConfig>().unwrap(), c);
        let bare: TmConfig = "state: 4\ncell: 3\n".parse().unwrap();
        assert_eq!(bare, cfg(4, 3, &[], &[]));
        assert!("state: 1 2\ncell: 0".parse::<TmConfig>().is_err());
        assert!(cfg(7, 0, &[], &[]).validate(&minsky_utm()).is_err());
        assert!(cfg(0, 0, &[4], &[]).validate(&minsky_utm()).is_err());
    }
}
