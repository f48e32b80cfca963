//! Group selectors: a classified row or explicit parameters.
//!
//! Accepted forms:
//!
//! * `E8+A4+A3+2A2` or `E8+A10+A1#2`: a set of singularities, optionally the `k`-th
//!   row listing it (irreducible rows first);
//! * `irreducible:5`, `reducible:7`: a row by table and index;
//! * `5,4,3`, `(4,3,-)`, `(4,3,-,a2^3)`: explicit parameters, `-` or `0` omitting a
//!   relation, followed by extra relators in the presentation text syntax.

use std::fmt;
use std::str::FromStr;

use sextic_core::classify::{CurveKind, SetParseError, SingularitySet};
use sextic_core::fpgroup::{ParseError, Presentation, Word};
use thiserror::Error;

/// Longest selector accepted.
pub const MAX_SELECTOR_LEN: usize = 4096;
/// Largest region parameter accepted in an explicit selector.
pub const MAX_PARAMETER: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Set {
        set: SingularitySet,
        occurrence: usize,
    },
    Row {
        kind: CurveKind,
        index: usize,
    },
    Explicit {
        l: u32,
        m: u32,
        n: u32,
        extras: Vec<Word>,
    },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SelectorError {
    #[error("empty selector")]
    Empty,
    #[error("selector longer than {MAX_SELECTOR_LEN} bytes")]
    TooLong,
    #[error("bad row reference {0:?}")]
    BadRow(String),
    #[error("bad parameter {0:?} (expected 0..={MAX_PARAMETER} or '-')")]
    BadParameter(String),
    #[error("explicit selector needs three parameters")]
    MissingParameters,
    #[error("bad relator {0:?}: {1}")]
    BadRelator(String, String),
    #[error("{0}")]
    Set(#[from] SetParseError),
}

fn parse_parameter(s: &str) -> Result<u32, SelectorError> {
    let s = s.trim();
    if s == "-" {
        return Ok(0);
    }
    match s.parse::<u32>() {
        Ok(k) if k <= MAX_PARAMETER && !s.starts_with('+') => Ok(k),
        _ => Err(SelectorError::BadParameter(s.to_string())),
    }
}

fn parse_relator(s: &str) -> Result<Word, SelectorError> {
    let text = format!("3\n{}", s.trim());
    let p: Presentation = text
        .parse()
        .map_err(|e: ParseError| SelectorError::BadRelator(s.trim().to_string(), e.to_string()))?;
    Ok(p.relators().first().cloned().unwrap_or_else(Word::identity))
}

impl FromStr for Selector {
    type Err = SelectorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.len() > MAX_SELECTOR_LEN {
            return Err(SelectorError::TooLong);
        }
        let s = s.trim();
        if s.is_empty() {
            return Err(SelectorError::Empty);
        }
        for (prefix, kind) in [
            ("irreducible:", CurveKind::Irreducible),
            ("reducible:", CurveKind::Reducible),
        ] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let index = rest
                    .trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| SelectorError::BadRow(s.to_string()))?;
                return Ok(Selector::Row { kind, index });
            }
        }
        let first = s.trim_start_matches('(').trim_start();
        if first.starts_with(|c: char| c.is_ascii_digit() || c == '-') && s.contains(',') {
            let inner = s.strip_prefix('(').unwrap_or(s);
            let inner = inner.strip_suffix(')').unwrap_or(inner);
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() < 3 {
                return Err(SelectorError::MissingParameters);
            }
            let l = parse_parameter(parts[0])?;
            let m = parse_parameter(parts[1])?;
            let n = parse_parameter(parts[2])?;
            let extras = parts[3..]
                .iter()
                .map(|p| parse_relator(p))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Selector::Explicit { l, m, n, extras });
        }
        let (set_text, occurrence) = match s.split_once('#') {
            Some((a, b)) => (
                a,
                b.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| SelectorError::BadRow(s.to_string()))?,
            ),
            None => (s, 1),
        };
        Ok(Selector::Set {
            set: set_text.parse()?,
            occurrence,
        })
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Set { set, occurrence: 1 } => write!(f, "{set}"),
            Selector::Set { set, occurrence } => write!(f, "{set}#{occurrence}"),
            Selector::Row { kind, index } => write!(f, "{kind}:{index}"),
            Selector::Explicit { l, m, n, extras } => {
                let p = |x: &u32| {
                    if *x == 0 {
                        "-".to_string()
                    } else {
                        x.to_string()
                    }
                };
                write!(f, "({},{},{}", p(l), p(m), p(n))?;
                for e in extras {
                    write!(f, ",{e}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(
            "E8+A4+A3+2A2".parse::<Selector>().unwrap(),
            Selector::Set {
                set: "E8+A4+A3+2A2".parse().unwrap(),
                occurrence: 1
            }
        );
        assert_eq!(
            "reducible:7".parse::<Selector>().unwrap(),
            Selector::Row {
                kind: CurveKind::Reducible,
                index: 7
            }
        );
        let e = "(4,3,-,a2^3)".parse::<Selector>().unwrap();
        assert_eq!(e.to_string(), "(4,3,-,a2^3)");
        assert_eq!("5,4,3".parse::<Selector>().unwrap().to_string(), "(5,4,3)");
        assert_eq!(
            "E8+A10+A1#2".parse::<Selector>().unwrap().to_string(),
            "E8+A10+A1#2"
        );
    }

    #[test]
    fn round_trip() {
        for s in [
            "(5,4,3)",
            "(-,-,1)",
            "irreducible:3",
            "E8+D6+A5",
            "2E8+A3#2",
            "(1,2,3,a1 a2^-1)",
        ] {
            let sel: Selector = s.parse().unwrap();
            assert_eq!(sel.to_string().parse::<Selector>().unwrap(), sel, "{s}");
        }
    }

    #[test]
    fn rejects() {
        for s in [
            "",
            "reducible:0",
            "irreducible:x",
            "(5,4)",
            "(5,4,x)",
            "5,4,3,b1",
            "E8#0",
            "Q1",
            "1,2,99999",
        ] {
            assert!(s.parse::<Selector>().is_err(), "{s}");
        }
    }
}
