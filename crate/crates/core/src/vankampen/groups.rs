//! Presentations of the fundamental groups of sextics with an E8 point.

use serde::{Deserialize, Serialize};

use crate::fpgroup::{braid_bracket, group_order, EnumerationError, Presentation, Word};

pub fn alpha(i: u32) -> Word {
    assert!((1..=3).contains(&i), "alpha index must be 1, 2 or 3");
    Word::gen(i - 1)
}

/// `rho = a1 a2 a3`
pub fn rho() -> Word {
    &(&alpha(1) * &alpha(2)) * &alpha(3)
}

/// `a_s = a2 a3 a2^-1`
pub fn alpha_s() -> Word {
    alpha(3).conjugate_by(&alpha(2))
}

/// `a_t = (a1 a2) a3 (a1 a2)^-1`
pub fn alpha_t() -> Word {
    alpha(3).conjugate_by(&(&alpha(1) * &alpha(2)))
}

/// The relations at infinity. In the short form `a3` is still a generator but the
/// first relator is replaced by `(a1 a2^-1)^5 a2^6`, which is equivalent in presence
/// of the second one.
pub fn relations_at_infinity(short_form: bool) -> Vec<Word> {
    let (a1, a2, a3) = (alpha(1), alpha(2), alpha(3));
    let r1 = if short_form {
        &(&a1 * &a2.inverse()).pow(5) * &a2.pow(6)
    } else {
        &rho().pow(3) * &(&a1 * &a2.pow(2)).inverse()
    };
    let r2 = &a1.conjugate_by(&a2) * &a3.inverse();
    let r3 = Word::commutator(&a1, &a2.pow(3));
    vec![r1, r2, r3]
}

/// Parameters of the standard three-region relation set. `0` omits a relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SexticGroupSpec {
    pub l: u32,
    pub m: u32,
    pub n: u32,
    #[serde(default)]
    pub extra_relators: Vec<Word>,
    #[serde(default)]
    pub quotient_central: Option<Word>,
}

impl SexticGroupSpec {
    pub fn lmn(l: u32, m: u32, n: u32) -> Self {
        SexticGroupSpec {
            l,
            m,
            n,
            extra_relators: Vec::new(),
            quotient_central: None,
        }
    }

    /// The same parameters, divided by the central element `a2^3`.
    pub fn mod_alpha2_cubed(mut self) -> Self {
        self.quotient_central = Some(alpha(2).pow(3));
        self
    }

    pub fn with_extra(mut self, extra: impl IntoIterator<Item = Word>) -> Self {
        self.extra_relators.extend(extra);
        self
    }
}

/// The three relations of the regions r, s, t:
/// `{a1,a2}_l`, `{a1,a_s}_m`, `{a2,a_t}_n`.
pub fn lmn_relators(l: u32, m: u32, n: u32) -> Vec<Word> {
    vec![
        braid_bracket(&alpha(1), &alpha(2), l),
        braid_bracket(&alpha(1), &alpha_s(), m),
        braid_bracket(&alpha(2), &alpha_t(), n),
    ]
}

/// Infinity relators, region relators, extra relators; the central quotient relator
/// (if any) comes last.
pub fn standard_group(spec: &SexticGroupSpec) -> Presentation {
    let mut rels = relations_at_infinity(false);
    rels.extend(lmn_relators(spec.l, spec.m, spec.n));
    rels.extend(spec.extra_relators.iter().cloned());
    if let Some(c) = &spec.quotient_central {
        rels.push(c.clone());
    }
    Presentation::new(3, rels)
}

pub fn size(l: u32, m: u32, n: u32, limit: usize) -> Result<usize, EnumerationError> {
    group_order(&standard_group(&SexticGroupSpec::lmn(l, m, n)), limit)
}

/// Order of the quotient by `a2^3`.
pub fn size2(l: u32, m: u32, n: u32, limit: usize) -> Result<usize, EnumerationError> {
    group_order(
        &standard_group(&SexticGroupSpec::lmn(l, m, n).mod_alpha2_cubed()),
        limit,
    )
}

/// The classes whose groups are not given by the three-region relations alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpecialCase {
    /// `v` bivalent: `a2 = rho^2 a3 rho^-2`.
    TwoE8A3,
    /// `v` monovalent: `a3 = rho a2 rho^-1`.
    E8E6D5,
    /// `(6,-,6)` and the loop relation `a3 = (a2 a1 a2)^-1 a1 (a2 a1 a2)`.
    E8D6A5,
    /// `[a3, a1 a2] = 1`.
    E8D6D5,
    /// `a1 = a3`, `[a1, a2] = 1`.
    Isotrivial,
}

impl SpecialCase {
    pub const ALL: [SpecialCase; 5] = [
        SpecialCase::TwoE8A3,
        SpecialCase::E8E6D5,
        SpecialCase::E8D6A5,
        SpecialCase::E8D6D5,
        SpecialCase::Isotrivial,
    ];

    pub fn set(self) -> &'static str {
        match self {
            SpecialCase::TwoE8A3 => "2E8+A3",
            SpecialCase::E8E6D5 => "E8+E6+D5",
            SpecialCase::E8D6A5 => "E8+D6+A5",
            SpecialCase::E8D6D5 => "E8+D6+D5",
            SpecialCase::Isotrivial => "E8+E7+D4",
        }
    }

    pub fn from_set(s: &str) -> Option<Self> {
        SpecialCase::ALL.into_iter().find(|c| c.set() == s)
    }

    /// Whether the curve is reducible, i.e. the group is studied modulo `a2^3`.
    pub fn reducible(self) -> bool {
        !matches!(self, SpecialCase::TwoE8A3 | SpecialCase::E8E6D5)
    }
}

pub fn special_group(case: SpecialCase) -> Presentation {
    let (a1, a2, a3) = (alpha(1), alpha(2), alpha(3));
    let r = rho();
    let extra: Vec<Word> = match case {
        SpecialCase::TwoE8A3 => vec![&a2 * &a3.conjugate_by(&r.pow(2)).inverse()],
        SpecialCase::E8E6D5 => vec![&a3 * &a2.conjugate_by(&r).inverse()],
        SpecialCase::E8D6A5 => {
            let c = &(&a2 * &a1) * &a2;
            let mut v = lmn_relators(6, 0, 6);
            v.push(&a3 * &a1.conjugate_by(&c.inverse()).inverse());
            v
        }
        SpecialCase::E8D6D5 => vec![Word::commutator(&a3, &(&a1 * &a2))],
        SpecialCase::Isotrivial => vec![&a1 * &a3.inverse(), Word::commutator(&a1, &a2)],
    };
    let mut rels = relations_at_infinity(false);
    rels.extend(extra);
    Presentation::new(3, rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::abelian_invariants;

    const LIMIT: usize = 200_000;

    #[test]
    fn infinity_relators_as_text() {
        let r = relations_at_infinity(false);
        assert_eq!(r[1].to_string(), "a2 a1 a2^-1 a3^-1");
        assert_eq!(r[2].to_string(), "a1 a2^3 a1^-1 a2^-3");
    }

    #[test]
    fn g6_order() {
        assert_eq!(size(5, 4, 3, LIMIT), Ok(720));
    }

    #[test]
    fn short_form_gives_same_order() {
        let mut rels = relations_at_infinity(true);
        rels.extend(lmn_relators(5, 4, 3));
        assert_eq!(group_order(&Presentation::new(3, rels), LIMIT), Ok(720));
    }

    #[test]
    fn abelian_fragments() {
        assert_eq!(size(0, 0, 1, LIMIT), Ok(6));
        assert_eq!(size(3, 0, 0, LIMIT), Ok(6));
    }

    #[test]
    fn ginf_quotient() {
        assert_eq!(size2(4, 3, 0, LIMIT), Ok(1800));
    }

    #[test]
    fn quintic_plus_line_is_z() {
        assert_eq!(
            abelian_invariants(&special_group(SpecialCase::E8D6D5)),
            vec![0]
        );
    }
}
