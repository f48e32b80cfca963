//! Two-element braid brackets and the Artin action of the three-strand braid group.

use super::word::Word;

/// The bracket `{a, b}_m`.
///
/// `{a,b}_m = 1` holds exactly when the generator of the two-strand braid group, acting on
/// `<a, b>`, satisfies `sigma^m = id`:
///
/// * `m = 2k`:     `(ab)^k (ba)^-k`
/// * `m = 2k + 1`: `((ab)^k a) ((ba)^k b)^-1`
///
/// `m = 0` gives the empty word.
pub fn braid_bracket(a: &Word, b: &Word, m: u32) -> Word {
    let ab = a * b;
    let ba = b * a;
    let k = (m / 2) as i64;
    if m % 2 == 0 {
        &ab.pow(k) * &ba.pow(-k)
    } else {
        let left = &ab.pow(k) * a;
        let right = &ba.pow(k) * b;
        &left * &right.inverse()
    }
}

/// A standard generator of the braid group on three strands, or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    /// 1 or 2.
    pub index: u8,
    pub inverse: bool,
}

pub const SIGMA1: BraidLetter = BraidLetter {
    index: 1,
    inverse: false,
};
pub const SIGMA2: BraidLetter = BraidLetter {
    index: 2,
    inverse: false,
};

impl BraidLetter {
    pub fn inv(self) -> Self {
        BraidLetter {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    /// Images of `x1, x2, x3` under this generator.
    ///
    /// `s1: (x1, x2, x3) -> (x1 x2 x1^-1, x1, x3)`,
    /// `s2: (x1, x2, x3) -> (x1, x2 x3 x2^-1, x2)`.
    fn images(self) -> [Word; 3] {
        let x = [Word::gen(0), Word::gen(1), Word::gen(2)];
        match (self.index, self.inverse) {
            (1, false) => [x[1].conjugate_by(&x[0]), x[0].clone(), x[2].clone()],
            (1, true) => [
                x[1].clone(),
                x[0].conjugate_by(&x[1].inverse()),
                x[2].clone(),
            ],
            (2, false) => [x[0].clone(), x[2].conjugate_by(&x[1]), x[1].clone()],
            (2, true) => [
                x[0].clone(),
                x[2].clone(),
                x[1].conjugate_by(&x[2].inverse()),
            ],
            _ => panic!("braid generator index must be 1 or 2, got {}", self.index),
        }
    }
}

/// Parses a compact braid word such as `"1 2 -1"` (signed generator indices).
pub fn braid_word(spec: &[i8]) -> Vec<BraidLetter> {
    spec.iter()
        .map(|&i| BraidLetter {
            index: i.unsigned_abs(),
            inverse: i < 0,
        })
        .collect()
}

/// `sigma^k` for a single generator, negative `k` meaning inverses.
pub fn braid_power(letter: BraidLetter, k: i64) -> Vec<BraidLetter> {
    let l = if k < 0 { letter.inv() } else { letter };
    vec![l; k.unsigned_abs() as usize]
}

/// Left action of a braid on the free group of rank 3: the word `b1 b2 ... bk` acts as
/// `b1(b2(...bk(w)))`.
pub fn artin_action(braid: &[BraidLetter], w: &Word) -> Word {
    debug_assert!(
        w.rank_hint() <= 3,
        "artin_action is defined on three generators"
    );
    braid
        .iter()
        .rev()
        .fold(w.clone(), |acc, letter| acc.substitute(&letter.images()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Word {
        Word::gen(i)
    }

    #[test]
    fn small_brackets() {
        let (a, b) = (x(0), x(1));
        assert!(braid_bracket(&a, &b, 0).is_empty());
        assert_eq!(braid_bracket(&a, &b, 1), &a * &b.inverse());
        assert_eq!(braid_bracket(&a, &b, 2), Word::commutator(&a, &b));
        let expect3 = Word::from_powers(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        assert_eq!(braid_bracket(&a, &b, 3), expect3);
    }

    #[test]
    fn inverse_generators_undo() {
        for g in [SIGMA1, SIGMA2] {
            for i in 0..3 {
                let w = artin_action(&[g, g.inv()], &x(i));
                assert_eq!(w, x(i));
            }
        }
    }

    #[test]
    fn sigma1_squared_on_x1() {
        let w = artin_action(&[SIGMA1, SIGMA1], &x(0));
        assert_eq!(w, x(0).conjugate_by(&(&x(0) * &x(1))));
    }
}
