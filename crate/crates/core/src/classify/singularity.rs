//! ADE singularity labels and multisets of them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest subscript or multiplicity accepted by the parser.
pub const MAX_INDEX: u32 = 1000;

/// A simple singularity type. Ordering puts E before D before A, larger subscripts
/// first, which is the order of the canonical text form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ade {
    A(u32),
    D(u32),
    E(u32),
}

impl Ade {
    pub fn milnor(self) -> u32 {
        match self {
            Ade::A(k) | Ade::D(k) | Ade::E(k) => k,
        }
    }

    fn rank(self) -> (u8, std::cmp::Reverse<u32>) {
        match self {
            Ade::E(k) => (0, std::cmp::Reverse(k)),
            Ade::D(k) => (1, std::cmp::Reverse(k)),
            Ade::A(k) => (2, std::cmp::Reverse(k)),
        }
    }
}

impl Ord for Ade {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Ade {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ade::A(k) => write!(f, "A{k}"),
            Ade::D(k) => write!(f, "D{k}"),
            Ade::E(k) => write!(f, "E{k}"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SetParseError {
    #[error("empty term in singularity set")]
    EmptyTerm,
    #[error("unknown singularity type in {0:?}")]
    UnknownType(String),
    #[error("bad number in {0:?}")]
    BadNumber(String),
    #[error("no such singularity: {0}")]
    OutOfRange(String),
}

/// Multiset of simple singularities, e.g. `E8+A4+A3+2A2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularitySet {
    counts: BTreeMap<Ade, u32>,
}

impl SingularitySet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_iter(items: impl IntoIterator<Item = Ade>) -> Self {
        let mut s = Self::new();
        for a in items {
            s.add(a);
        }
        s
    }

    pub fn add(&mut self, a: Ade) {
        *self.counts.entry(a).or_insert(0) += 1;
    }

    pub fn extend(&mut self, other: &SingularitySet) {
        for (&a, &k) in &other.counts {
            *self.counts.entry(a).or_insert(0) += k;
        }
    }

    /// Points in canonical order, repeated by multiplicity.
    pub fn points(&self) -> Vec<Ade> {
        self.counts
            .iter()
            .flat_map(|(&a, &k)| std::iter::repeat(a).take(k as usize))
            .collect()
    }

    pub fn count(&self, a: Ade) -> u32 {
        self.counts.get(&a).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.values().map(|&k| k as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total Milnor number.
    pub fn milnor(&self) -> u32 {
        self.counts.iter().map(|(a, &k)| a.milnor() * k).sum()
    }
}

impl fmt::Display for SingularitySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, &k)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if k > 1 {
                write!(f, "{k}")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

fn parse_number(s: &str, term: &str) -> Result<u32, SetParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || s.len() > 6 {
        return Err(SetParseError::BadNumber(term.to_string()));
    }
    let k: u32 = s
        .parse()
        .map_err(|_| SetParseError::BadNumber(term.to_string()))?;
    if k == 0 || k > MAX_INDEX {
        return Err(SetParseError::OutOfRange(term.to_string()));
    }
    Ok(k)
}

impl FromStr for SingularitySet {
    type Err = SetParseError;

    /// Accepts `+`-separated terms `[k]Xn` with optional surrounding whitespace; `0`
    /// alone is the empty set.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut out = SingularitySet::new();
        if s == "0" {
            return Ok(out);
        }
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(SetParseError::EmptyTerm);
            }
            let pos = term
                .find(|c: char| !c.is_ascii_digit())
                .ok_or_else(|| SetParseError::UnknownType(term.to_string()))?;
            let mult = if pos == 0 {
                1
            } else {
                parse_number(&term[..pos], term)?
            };
            let mut rest = term[pos..].chars();
            let letter = rest.next().unwrap_or(' ');
            let k = parse_number(rest.as_str(), term)?;
            let a = match letter.to_ascii_uppercase() {
                'A' => Ade::A(k),
                'D' if k >= 4 => Ade::D(k),
                'E' if (6..=8).contains(&k) => Ade::E(k),
                'D' | 'E' => return Err(SetParseError::OutOfRange(term.to_string())),
                _ => return Err(SetParseError::UnknownType(term.to_string())),
            };
            *out.counts.entry(a).or_insert(0) += mult;
            if out.counts[&a] > MAX_INDEX {
                return Err(SetParseError::OutOfRange(term.to_string()));
            }
        }
        Ok(out)
    }
}

impl FromStr for Ade {
    type Err = SetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let set: SingularitySet = s.parse()?;
        match set.points().as_slice() {
            [a] => Ok(*a),
            _ => Err(SetParseError::UnknownType(s.to_string())),
        }
    }
}

impl Serialize for Ade {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ade {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for SingularitySet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SingularitySet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
