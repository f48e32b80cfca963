//! Words in a free group.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(gen: u32, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub const fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Column index in a coset table: `2 * gen` for the generator, `2 * gen + 1` for its inverse.
    #[inline]
    pub const fn col(self) -> usize {
        2 * self.gen as usize + self.inverse as usize
    }

    pub const fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word.
///
/// Every constructor and operation keeps the word freely reduced, so structural
/// equality is equality in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: u32) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    /// Builds a word from `(generator, exponent)` pairs, e.g. `[(0, 1), (1, -2)]` is `a1 a2^-2`.
    pub fn from_powers(powers: &[(u32, i64)]) -> Self {
        let mut letters = Vec::new();
        for &(g, e) in powers {
            let l = Letter::new(g, e < 0);
            letters.extend(std::iter::repeat(l).take(e.unsigned_abs() as usize));
        }
        Word::from_letters(letters)
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used, plus one.
    pub fn rank_hint(&self) -> u32 {
        self.0.iter().map(|l| l.gen + 1).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            for &l in &base.0 {
                push_reduced(&mut out, l);
            }
        }
        Word(out)
    }

    /// `g * self * g^-1`
    pub fn conjugate_by(&self, g: &Word) -> Word {
        &(g * self) * &g.inverse()
    }

    /// `[a, b] = a b a^-1 b^-1`
    pub fn commutator(a: &Word, b: &Word) -> Word {
        &(a * b) * &(&a.inverse() * &b.inverse())
    }

    /// Strips matching letter pairs from both ends.
    pub fn cyclically_reduced(&self) -> Word {
        let s = &self.0;
        let (mut i, mut j) = (0usize, s.len());
        while j >= i + 2 && s[i] == s[j - 1].inv() {
            i += 1;
            j -= 1;
        }
        Word(s[i..j].to_vec())
    }

    /// Exponent sum of every generator below `rank`.
    pub fn exponent_sums(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in &self.0 {
            v[l.gen as usize] += l.exponent();
        }
        v
    }

    /// Substitutes `images[g]` for every occurrence of generator `g`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let img = &images[l.gen as usize];
            if l.inverse {
                for &x in img.0.iter().rev() {
                    push_reduced(&mut out, x.inv());
                }
            } else {
                for &x in &img.0 {
                    push_reduced(&mut out, x);
                }
            }
        }
        Word(out)
    }

    /// Run-length form: consecutive equal letters merged into signed powers.
    pub fn syllables(&self) -> Vec<(u32, i64)> {
        let mut out: Vec<(u32, i64)> = Vec::new();
        for l in &self.0 {
            match out.last_mut() {
                Some((g, e)) if *g == l.gen && (*e < 0) == l.inverse => *e += l.exponent(),
                _ => out.push((l.gen, l.exponent())),
            }
        }
        out
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inv()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &rhs.0 {
            push_reduced(&mut out, l);
        }
        Word(out)
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl fmt::Display for Word {
    /// Space-separated syllables, generators numbered from 1: `a1 a2^-1 a1 a2^3`.
    /// The identity prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.syllables().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "a{}", g + 1)?;
            } else {
                write!(f, "a{}^{}", g + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Word {
        Word::gen(0)
    }
    fn b() -> Word {
        Word::gen(1)
    }

    #[test]
    fn reduction_cancels_adjacent_inverses() {
        let w = Word::from_powers(&[(0, 2), (1, 1), (1, -1), (0, -1)]);
        assert_eq!(w, a());
    }

    #[test]
    fn commutator_of_equal_words_is_trivial() {
        assert!(Word::commutator(&a(), &a()).is_empty());
        assert_eq!(Word::commutator(&a(), &b()).len(), 4);
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::from_powers(&[(1, 1), (0, 3), (1, -1)]);
        assert_eq!(w.cyclically_reduced(), a().pow(3));
        let v = Word::from_powers(&[(1, 1), (0, 1), (1, 1)]);
        assert_eq!(v.cyclically_reduced(), v);
    }

    #[test]
    fn display_merges_powers() {
        let w = Word::from_powers(&[(0, 1), (1, -1), (0, 1), (1, 3)]);
        assert_eq!(w.to_string(), "a1 a2^-1 a1 a2^3");
        assert_eq!(Word::identity().to_string(), "");
    }

    #[test]
    fn substitution_of_inverse_letters() {
        // a1 -> a1 a2, a2 -> a2 ; a1^-1 -> a2^-1 a1^-1
        let images = vec![&a() * &b(), b()];
        let w = a().inverse().substitute(&images);
        assert_eq!(w, &b().inverse() * &a().inverse());
    }
}
