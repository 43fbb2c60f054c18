//! A finitely presented algebra: alphabet, monic rules and the order that
//! orients them, with the compiled left-hand-side matcher.
//!
//! Text format:
//!
//! ```text
//! alphabet: t a0 a1 Q0 P0 P1 R
//! order: nilpotency
//! rule: t R a0 -> R t a0  # tt1(0)
//! rule: Q0 P1 -> 0  # tt7(0,1)
//! ```

use std::fmt;
use std::str::FromStr;

use crate::alphabet::Alphabet;
use crate::error::{Error, ParseError, Result};
use crate::matcher::Matcher;
use crate::order::OrderKind;
use crate::rule::{Reduct, Rule, RuleTag};
use crate::word::{Letter, Word};

#[derive(Clone, Debug)]
pub struct Presentation {
    alphabet: Alphabet,
    order: OrderKind,
    rules: Vec<Rule>,
    matcher: Matcher,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, order: OrderKind, rules: Vec<Rule>) -> Result<Self> {
        if order == OrderKind::Nilpotency && alphabet.is_extended() {
            return Err(Error::InvalidArgument(
                "the nilpotency order is not defined on s or L".into(),
            ));
        }
        for rule in &rules {
            if rule.lhs.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "rule {rule} has an empty left-hand side"
                )));
            }
            let rhs: &[Letter] = rule.rhs.word().map_or(&[], |w| w.letters());
            if let Some(&l) = rule
                .lhs
                .iter()
                .chain(rhs)
                .find(|l| !alphabet.contains(**l))
            {
                return Err(Error::InvalidAlphabet(l));
            }
        }
        let patterns: Vec<&[Letter]> = rules.iter().map(|r| r.lhs.letters()).collect();
        let matcher = Matcher::new(alphabet, &patterns);
        Ok(Presentation {
            alphabet,
            order,
            rules,
            matcher,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, id: usize) -> &Rule {
        &self.rules[id]
    }

    pub fn matcher(&self) -> &Matcher {
        &self.matcher
    }

    pub fn check_word(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|l| !self.alphabet.contains(**l)) {
            Some(&l) => Err(Error::InvalidAlphabet(l)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alphabet: {}", self.alphabet)?;
        writeln!(f, "order: {}", self.order)?;
        for rule in &self.rules {
            writeln!(f, "rule: {}  # {}", rule, rule.tag)?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut alphabet = None;
        let mut order = None;
        let mut rules = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| ParseError::line(line_no, "expected `key: value`"))?;
            match key.trim() {
                "alphabet" => {
                    let letters = value
                        .split_whitespace()
                        .map(|t| t.parse::<Letter>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| ParseError::line(line_no, e.to_string()))?;
                    alphabet = Some(Alphabet::from_letters(&letters).ok_or_else(|| {
                        ParseError::line(line_no, "alphabet is not a canonical letter list")
                    })?);
                }
                "order" => {
                    order = Some(
                        value
                            .trim()
                            .parse::<OrderKind>()
                            .map_err(|e| ParseError::line(line_no, e.to_string()))?,
                    );
                }
                "rule" => {
                    let (body, tag) = match value.split_once('#') {
                        Some((body, tag)) => (body, Some(tag)),
                        None => (value, None),
                    };
                    let (lhs, rhs) = body
                        .split_once("->")
                        .ok_or_else(|| ParseError::line(line_no, "rule lacks `->`"))?;
                    let lhs: Word = lhs
                        .parse()
                        .map_err(|e: ParseError| ParseError::line(line_no, e.to_string()))?;
                    let rhs: Reduct = rhs
                        .parse()
                        .map_err(|e: ParseError| ParseError::line(line_no, e.to_string()))?;
                    let tag = match tag {
                        Some(t) => t
                            .parse()
                            .map_err(|e: ParseError| ParseError::line(line_no, e.to_string()))?,
                        None => RuleTag::custom(),
                    };
                    rules.push(Rule::new(lhs, rhs, tag));
                }
                other => {
                    return Err(ParseError::line(line_no, format!("unknown key {other:?}")).into())
                }
            }
        }
        let alphabet = alphabet.ok_or_else(|| ParseError::Other("missing `alphabet:` line".into()))?;
        let order = order.ok_or_else(|| ParseError::Other("missing `order:` line".into()))?;
        Presentation::new(alphabet, order, rules)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rule::Schema;
    use crate::word::w;

    const SMALL: &str = "\
alphabet: t a0 a1 Q0 P0 P1 R
order: nilpotency
rule: t R a0 -> R t a0  # tt1(0)
rule: Q0 P1 -> 0  # tt7(0,1)
rule: a0 a1 -> a1
";

    #[test]
    fn parses_text_format() {
        let p: Presentation = SMALL.parse().unwrap();
        assert_eq!(p.alphabet(), Alphabet::phi(1, 2));
        assert_eq!(p.order(), OrderKind::Nilpotency);
        assert_eq!(p.rules().len(), 3);
        assert_eq!(p.rule(1).rhs, Reduct::Zero);
        assert_eq!(p.rule(0).tag, RuleTag::new(Schema::Tt1, &[0]));
        assert_eq!(p.rule(2).tag.schema, Schema::Custom);
        assert_eq!(p.rule(2).rhs, Reduct::Word(w("a1")));
    }

    #[test]
    fn display_parses_back() {
        let p: Presentation = SMALL.parse().unwrap();
        let again: Presentation = p.to_string().parse().unwrap();
        assert_eq!(again.rules(), p.rules());
        assert_eq!(again.to_string(), p.to_string());
    }

    #[test]
    fn rejects_letters_outside_alphabet() {
        let text = SMALL.replace("a0 a1 -> a1", "a0 a2 -> a1");
        assert!(matches!(
            text.parse::<Presentation>(),
            Err(Error::InvalidAlphabet(Letter::Cell(2)))
        ));
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!("alphabet: t R\norder: nilpotency\nrule: t R\n"
            .parse::<Presentation>()
            .is_err());
        assert!("order: nilpotency\n".parse::<Presentation>().is_err());
        assert!("alphabet: t s a0 Q0 P0 L R\norder: nilpotency\n"
            .parse::<Presentation>()
            .is_err());
    }
}
