//! Multi-pattern matching of rule left-hand sides (Aho-Corasick).
//!
//! The automaton is compiled into a dense transition table over the
//! presentation's alphabet, so each letter costs one table lookup.

use crate::alphabet::Alphabet;
use crate::word::Letter;

/// An occurrence of a rule's left-hand side starting at `pos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Redex {
    pub pos: usize,
    pub rule: usize,
}

#[derive(Clone, Copy, Debug)]
struct PatternEnd {
    rule: u32,
    len: u32,
}

#[derive(Clone, Debug)]
pub struct Matcher {
    alphabet: Alphabet,
    width: usize,
    /// `delta[state * width + letter]`, complete (failure links folded in).
    delta: Vec<u32>,
    /// Every pattern ending at a state, including those reached through
    /// failure links; sorted by rule id.
    outputs: Vec<Box<[PatternEnd]>>,
    max_len: usize,
}

const ROOT: u32 = 0;

impl Matcher {
    /// Compiles `patterns` (rule `i` is `patterns[i]`). Letters outside the
    /// alphabet can never match, so patterns containing one are dropped.
    pub fn new(alphabet: Alphabet, patterns: &[&[Letter]]) -> Self {
        let width = alphabet.len();
        // Trie with sparse child lists, then densified below.
        let mut children: Vec<Vec<(usize, u32)>> = vec![Vec::new()];
        let mut own: Vec<Vec<PatternEnd>> = vec![Vec::new()];
        let mut max_len = 0;
        'patterns: for (rule, pattern) in patterns.iter().enumerate() {
            if pattern.is_empty() {
                continue;
            }
            let mut ids = Vec::with_capacity(pattern.len());
            for &l in pattern.iter() {
                match alphabet.index(l) {
                    Some(i) => ids.push(i),
                    None => continue 'patterns,
                }
            }
            let mut state = ROOT;
            for id in ids {
                let next = children[state as usize]
                    .iter()
                    .find(|(c, _)| *c == id)
                    .map(|(_, s)| *s);
                state = match next {
                    Some(s) => s,
                    None => {
                        let s = children.len() as u32;
                        children.push(Vec::new());
                        own.push(Vec::new());
                        children[state as usize].push((id, s));
                        s
                    }
                };
            }
            own[state as usize].push(PatternEnd {
                rule: rule as u32,
                len: pattern.len() as u32,
            });
            max_len = max_len.max(pattern.len());
        }

        let n = children.len();
        let mut delta = vec![ROOT; n * width];
        let mut fail = vec![ROOT; n];
        let mut outputs: Vec<Vec<PatternEnd>> = own;
        let mut queue = std::collections::VecDeque::new();
        for &(id, s) in &children[ROOT as usize] {
            delta[id] = s;
            queue.push_back(s);
        }
        while let Some(state) = queue.pop_front() {
            let st = state as usize;
            let f = fail[st] as usize;
            if st != ROOT as usize {
                let inherited = outputs[f].clone();
                outputs[st].extend(inherited);
            }
            for id in 0..width {
                delta[st * width + id] = delta[f * width + id];
            }
            for &(id, child) in &children[st] {
                fail[child as usize] = if st == ROOT as usize {
                    ROOT
                } else {
                    delta[f * width + id]
                };
                delta[st * width + id] = child;
                queue.push_back(child);
            }
        }
        let outputs = outputs
            .into_iter()
            .map(|mut o| {
                o.sort_by_key(|p| p.rule);
                o.into_boxed_slice()
            })
            .collect();
        Matcher {
            alphabet,
            width,
            delta,
            outputs,
            max_len,
        }
    }

    /// Length of the longest pattern.
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn state_count(&self) -> usize {
        self.outputs.len()
    }

    /// Feeds `word[from..]` through the automaton, calling `f` for every
    /// occurrence lying entirely inside `word[from..]`, in order of end
    /// position (ties by rule id). Stops early when `f` returns false.
    fn scan(&self, word: &[Letter], from: usize, mut f: impl FnMut(Redex) -> bool) {
        let mut state = ROOT;
        for (end, &letter) in word.iter().enumerate().skip(from) {
            state = match self.alphabet.index(letter) {
                Some(id) => self.delta[state as usize * self.width + id],
                None => ROOT,
            };
            for p in self.outputs[state as usize].iter() {
                let redex = Redex {
                    pos: end + 1 - p.len as usize,
                    rule: p.rule as usize,
                };
                if !f(redex) {
                    return;
                }
            }
        }
    }

    /// All redexes sorted by position, then rule id.
    pub fn redexes(&self, word: &[Letter]) -> Vec<Redex> {
        let mut out = Vec::new();
        self.scan(word, 0, |r| {
            out.push(r);
            true
        });
        out.sort();
        out
    }

    pub fn count(&self, word: &[Letter]) -> usize {
        let mut n = 0;
        self.scan(word, 0, |_| {
            n += 1;
            true
        });
        n
    }

    /// The redex with the smallest start position `>= from` (ties broken by
    /// the lowest rule id).
    pub fn leftmost(&self, word: &[Letter], from: usize) -> Option<Redex> {
        let mut best: Option<Redex> = None;
        let mut state = ROOT;
        for (end, &letter) in word.iter().enumerate().skip(from) {
            // A match ending at `end` starts at `end + 1 - len >= end + 1 - max_len`.
            if best.is_some_and(|b| end >= b.pos + self.max_len) {
                break;
            }
            state = match self.alphabet.index(letter) {
                Some(id) => self.delta[state as usize * self.width + id],
                None => ROOT,
            };
            for p in self.outputs[state as usize].iter() {
                let r = Redex {
                    pos: end + 1 - p.len as usize,
                    rule: p.rule as usize,
                };
                if best.is_none_or(|b| r < b) {
                    best = Some(r);
                }
            }
        }
        best
    }

    /// The redex with the largest start position (ties broken by the lowest
    /// rule id).
    pub fn rightmost(&self, word: &[Letter]) -> Option<Redex> {
        let mut best: Option<Redex> = None;
        self.scan(word, 0, |r| {
            let better = match best {
                None => true,
                Some(b) => r.pos > b.pos || (r.pos == b.pos && r.rule < b.rule),
            };
            if better {
                best = Some(r);
            }
            true
        });
        best
    }
}
