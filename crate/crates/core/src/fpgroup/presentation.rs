//! Finite presentations and their text format.
//!
//! The text format is line oriented: the first line holds the generator count, each
//! following line one relator written as space-separated syllables `aK` or `aK^E`
//! (generators numbered from 1), e.g.
//!
//! ```text
//! 2
//! a1^5
//! a1 a2 a1^-1 a2^-1
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::word::{Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line 1: invalid generator count {0:?}")]
    BadCount(String),
    #[error("line {line}: invalid syllable {token:?}")]
    BadSyllable { line: usize, token: String },
    #[error("line {line}: generator a{gen} out of range (count is {count})")]
    GeneratorOutOfRange { line: usize, gen: u64, count: u32 },
    #[error("generator count {0} exceeds the supported maximum")]
    TooManyGenerators(u64),
    #[error("line {line}: exponent {exp} is outside the supported range")]
    ExponentRange { line: usize, exp: i64 },
    #[error("line {line}: relator longer than {max} letters")]
    RelatorTooLong { line: usize, max: usize },
}

/// Largest absolute exponent accepted in a single syllable of the text format.
pub const MAX_SYLLABLE_EXPONENT: i64 = 1 << 16;
/// Largest generator count accepted by the text format.
pub const MAX_GENERATORS: u32 = 1 << 12;
/// Largest unreduced relator length accepted by the text format.
pub const MAX_RELATOR_LENGTH: usize = 1 << 20;

/// Generators `a1..aN` and a list of relators.
///
/// Relators are stored freely and cyclically reduced; trivial relators are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: u32,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: u32, relators: impl IntoIterator<Item = Word>) -> Self {
        let mut p = Presentation {
            generators,
            relators: Vec::new(),
        };
        for r in relators {
            p.push(r);
        }
        p
    }

    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn push(&mut self, r: Word) {
        assert!(
            r.rank_hint() <= self.generators,
            "relator {r} uses a generator beyond a{}",
            self.generators
        );
        let r = r.cyclically_reduced();
        if !r.is_empty() {
            self.relators.push(r);
        }
    }

    pub fn with(mut self, extra: impl IntoIterator<Item = Word>) -> Self {
        for r in extra {
            self.push(r);
        }
        self
    }

    /// A copy without the relators at the given positions.
    pub fn without(&self, drop: &[usize]) -> Self {
        Presentation {
            generators: self.generators,
            relators: self
                .relators
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, r)| r.clone())
                .collect(),
        }
    }

    /// Relator exponent-sum matrix (rows = relators, columns = generators).
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| r.exponent_sums(self.generators as usize))
            .collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.generators)?;
        for r in &self.relators {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines();
        let first = lines.next().ok_or(ParseError::Empty)?.trim();
        let count: u64 = first
            .parse()
            .map_err(|_| ParseError::BadCount(first.to_string()))?;
        if count > MAX_GENERATORS as u64 {
            return Err(ParseError::TooManyGenerators(count));
        }
        let count = count as u32;
        let mut relators = Vec::new();
        for (i, line) in lines.enumerate() {
            let line_no = i + 2;
            let mut letters = Vec::new();
            for token in line.split_whitespace() {
                let (gen, exp) = parse_syllable(token).ok_or_else(|| ParseError::BadSyllable {
                    line: line_no,
                    token: token.to_string(),
                })?;
                if gen == 0 || gen > count as u64 {
                    return Err(ParseError::GeneratorOutOfRange {
                        line: line_no,
                        gen,
                        count,
                    });
                }
                if exp == 0 || exp.abs() > MAX_SYLLABLE_EXPONENT {
                    return Err(ParseError::ExponentRange { line: line_no, exp });
                }
                if letters.len() + exp.unsigned_abs() as usize > MAX_RELATOR_LENGTH {
                    return Err(ParseError::RelatorTooLong {
                        line: line_no,
                        max: MAX_RELATOR_LENGTH,
                    });
                }
                let l = Letter::new((gen - 1) as u32, exp < 0);
                letters.extend(std::iter::repeat(l).take(exp.unsigned_abs() as usize));
            }
            relators.push(Word::from_letters(letters));
        }
        Ok(Presentation::new(count, relators))
    }
}

fn parse_syllable(token: &str) -> Option<(u64, i64)> {
    let rest = token.strip_prefix('a')?;
    let (gen, exp) = match rest.split_once('^') {
        Some((g, e)) => (g, e.parse::<i64>().ok()?),
        None => (rest, 1),
    };
    if gen.is_empty() || !gen.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((gen.parse().ok()?, exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_is_exact() {
        let text = "2\na1^5\na1 a2^-1 a1 a2^3\n";
        let p: Presentation = text.parse().unwrap();
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.to_string(), text);
    }

    #[test]
    fn relators_are_cyclically_reduced_on_entry() {
        let p: Presentation = "1\na1 a1 a1^-1\n".parse().unwrap();
        assert_eq!(p.to_string(), "1\na1\n");
        let q: Presentation = "2\na2 a1 a2^-1\n".parse().unwrap();
        assert_eq!(q.to_string(), "2\na1\n");
    }

    #[test]
    fn parse_errors() {
        assert_eq!("".parse::<Presentation>(), Err(ParseError::Empty));
        assert!(matches!(
            "x".parse::<Presentation>(),
            Err(ParseError::BadCount(_))
        ));
        assert!(matches!(
            "1\na2".parse::<Presentation>(),
            Err(ParseError::GeneratorOutOfRange { line: 2, .. })
        ));
        assert!(matches!(
            "1\nb1".parse::<Presentation>(),
            Err(ParseError::BadSyllable { .. })
        ));
        assert!(matches!(
            "1\na1^0".parse::<Presentation>(),
            Err(ParseError::ExponentRange { .. })
        ));
    }

    #[test]
    fn trivial_relators_vanish() {
        let p: Presentation = "3\n\na1 a1^-1\n".parse().unwrap();
        assert!(p.relators().is_empty());
    }
}
