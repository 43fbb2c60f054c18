use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::word::Word;

/// Result of rewriting a monomial: a single word, or zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Reduct {
    Zero,
    Word(Word),
}

impl Reduct {
    pub fn is_zero(&self) -> bool {
        matches!(self, Reduct::Zero)
    }

    pub fn word(&self) -> Option<&Word> {
        match self {
            Reduct::Zero => None,
            Reduct::Word(w) => Some(w),
        }
    }
}

impl fmt::Display for Reduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reduct::Zero => f.write_str("0"),
            Reduct::Word(w) => write!(f, "{w}"),
        }
    }
}

impl FromStr for Reduct {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s.trim() == "0" {
            Ok(Reduct::Zero)
        } else {
            s.parse().map(Reduct::Word)
        }
    }
}

/// Relation schema a rule was instantiated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Schema {
    Tt1,
    Tt1b,
    Tt2,
    Tt3,
    Tt5,
    Tt4,
    Tt4r,
    Tt4b,
    Tt4ar,
    Tt6,
    Tt6b,
    Tt7,
    Td1,
    Td2,
    Td9,
    Td8,
    Td3,
    Td5,
    Td4,
    Td4b,
    Td6,
    Td6b,
    Td7,
    /// Hand-written rule outside the two machine encodings.
    Custom,
}

const SCHEMA_LABELS: [(Schema, &str); 24] = [
    (Schema::Tt1, "tt1"),
    (Schema::Tt1b, "tt1b"),
    (Schema::Tt2, "tt2"),
    (Schema::Tt3, "tt3"),
    (Schema::Tt5, "tt5"),
    (Schema::Tt4, "tt4"),
    (Schema::Tt4r, "tt4r"),
    (Schema::Tt4b, "tt4b"),
    (Schema::Tt4ar, "tt4ar"),
    (Schema::Tt6, "tt6"),
    (Schema::Tt6b, "tt6b"),
    (Schema::Tt7, "tt7"),
    (Schema::Td1, "td1"),
    (Schema::Td2, "td2"),
    (Schema::Td9, "td9"),
    (Schema::Td8, "td8"),
    (Schema::Td3, "td3"),
    (Schema::Td5, "td5"),
    (Schema::Td4, "td4"),
    (Schema::Td4b, "td4b"),
    (Schema::Td6, "td6"),
    (Schema::Td6b, "td6b"),
    (Schema::Td7, "td7"),
    (Schema::Custom, "custom"),
];

impl Schema {
    pub fn label(self) -> &'static str {
        SCHEMA_LABELS
            .iter()
            .find(|(s, _)| *s == self)
            .map(|(_, l)| *l)
            .unwrap_or("custom")
    }

    /// Schemata that carry out one machine step.
    pub fn is_simulation(self) -> bool {
        use Schema::*;
        matches!(
            self,
            Tt3 | Tt5 | Tt4 | Tt4r | Tt4b | Tt4ar | Tt6 | Tt6b | Td3 | Td5 | Td4 | Td4b | Td6 | Td6b
        )
    }

    /// Schemata that only move `t` or `s` past tape letters.
    pub fn is_transport(self) -> bool {
        use Schema::*;
        matches!(self, Tt1 | Tt1b | Tt2 | Td1 | Td2 | Td8 | Td9)
    }

    pub fn is_halt(self) -> bool {
        matches!(self, Schema::Tt7 | Schema::Td7)
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Schema {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        SCHEMA_LABELS
            .iter()
            .find(|(_, l)| *l == s)
            .map(|(schema, _)| *schema)
            .ok_or_else(|| ParseError::Other(format!("unknown schema {s:?}")))
    }
}

/// Schema label plus the indices it was instantiated with, e.g. `tt3(2,3,1)`
/// for state 2, color 3, cell 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RuleTag {
    pub schema: Schema,
    pub indices: Vec<u16>,
}

impl RuleTag {
    pub fn new(schema: Schema, indices: &[u16]) -> Self {
        RuleTag {
            schema,
            indices: indices.to_vec(),
        }
    }

    pub fn custom() -> Self {
        RuleTag::new(Schema::Custom, &[])
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.schema)?;
        if !self.indices.is_empty() {
            let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", idx.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for RuleTag {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let (label, indices) = match s.split_once('(') {
            None => (s, Vec::new()),
            Some((label, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| ParseError::Other(format!("unclosed tag {s:?}")))?;
                let indices = inner
                    .split(',')
                    .map(|i| {
                        i.trim()
                            .parse()
                            .map_err(|_| ParseError::Other(format!("bad tag index in {s:?}")))
                    })
                    .collect::<Result<Vec<u16>, _>>()?;
                (label, indices)
            }
        };
        Ok(RuleTag {
            schema: label.parse()?,
            indices,
        })
    }
}

/// A monic rewrite rule `lhs -> rhs` where `rhs` is a word or zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Reduct,
    pub tag: RuleTag,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Reduct, tag: RuleTag) -> Self {
        Rule { lhs, rhs, tag }
    }

    pub fn to_word(lhs: Word, rhs: Word, tag: RuleTag) -> Self {
        Rule::new(lhs, Reduct::Word(rhs), tag)
    }

    pub fn to_zero(lhs: Word, tag: RuleTag) -> Self {
        Rule::new(lhs, Reduct::Zero, tag)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}
