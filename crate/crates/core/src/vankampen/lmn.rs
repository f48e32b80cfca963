//! Reading the parameters `(l, m, n)` of the braid relations off a skeleton.
//!
//! Around the trivalent vertex `v` of the insertion, with darts `x`, `a`, `y` in
//! counterclockwise order and `a` leading to `u`:
//!
//! * `r` is the region containing `u` (the corners `(x, a)` and `(a, y)` of `v`);
//! * `s` is the region on the other side of `v` (the corner `(y, x)`);
//! * `t` is the region at the far end `w` of the edge through `x`, in the corner of
//!   `w` opposite to that edge.
//!
//! A parameter is `0` (relation omitted) when its region carries a type D fiber,
//! and `t` is omitted when its region is `r` itself while the relation about `s`
//! is kept. Members of a complex conjugate pair exchange the roles of `x` and `y`;
//! a table row uses the member whose relations involve the most distinct regions.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::insertion::insertion_darts;
use crate::classify::{ClassKind, CurveClass, InsertionError};
use crate::cmap::{CombinatorialMap, Dart};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lmn {
    pub l: u32,
    pub m: u32,
    pub n: u32,
}

impl Lmn {
    pub fn new(l: u32, m: u32, n: u32) -> Self {
        Lmn { l, m, n }
    }
}

impl fmt::Display for Lmn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |x: u32| {
            if x == 0 {
                "-".to_string()
            } else {
                x.to_string()
            }
        };
        write!(f, "({},{},{})", p(self.l), p(self.m), p(self.n))
    }
}

/// Local picture of the insertion that decides which relations are used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fragment {
    /// The three regions `r`, `s`, `t`.
    Generic,
    /// A neighbour of `v` has a loop facing away from `v`: `(-,-,1)`.
    Stem,
    /// `u` inside a loop of `Sk'`: `(3,-,-)`.
    LeafIn,
    /// `u` right outside a loop of `Sk'`: `(-,2,-)`, abelian by rewriting.
    LeafOut,
    /// The insertion on the circle, `E8+D6+D5`.
    Circle,
    BivalentV,
    MonovalentV,
    Isotrivial,
}

impl Fragment {
    pub fn name(self) -> &'static str {
        match self {
            Fragment::Generic => "generic",
            Fragment::Stem => "stem",
            Fragment::LeafIn => "leaf-in",
            Fragment::LeafOut => "leaf-out",
            Fragment::Circle => "circle",
            Fragment::BivalentV => "bivalent-v",
            Fragment::MonovalentV => "monovalent-v",
            Fragment::Isotrivial => "isotrivial",
        }
    }

    /// Whether the group is obtained from a triple at all.
    pub fn uses_triple(self) -> bool {
        matches!(
            self,
            Fragment::Generic | Fragment::Stem | Fragment::LeafIn | Fragment::LeafOut
        )
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LmnError {
    #[error("no (l,m,n) reading for the {0} case")]
    NotApplicable(Fragment),
    #[error("{0}")]
    Insertion(#[from] InsertionError),
}

/// The parameters together with the regions they come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LmnReading {
    pub fragment: Fragment,
    pub lmn: Lmn,
    /// Faces behind the nonzero parameters.
    pub regions: Vec<u32>,
}

impl LmnReading {
    pub fn distinct_regions(&self) -> usize {
        let mut r = self.regions.clone();
        r.sort_unstable();
        r.dedup();
        r.len()
    }
}

/// Face containing the corner of `w` opposite to the edge of dart `e` at `w`, if
/// `w` is trivalent.
fn opposite_corner(m: &CombinatorialMap, e: Dart) -> Option<u32> {
    let w = m.vertex_of(e);
    (m.valency(w) == 3).then(|| m.face_of(m.sigma(m.sigma(e))))
}

pub fn fragment_of(class: &CurveClass) -> Result<Fragment, LmnError> {
    lmn_reading(class).map(|r| r.fragment)
}

pub fn lmn_reading(class: &CurveClass) -> Result<LmnReading, LmnError> {
    let sk = match (class.kind, &class.skeleton) {
        (ClassKind::BivalentV, _) => return Err(LmnError::NotApplicable(Fragment::BivalentV)),
        (ClassKind::MonovalentV, _) => return Err(LmnError::NotApplicable(Fragment::MonovalentV)),
        (ClassKind::Isotrivial, _) | (_, None) => {
            return Err(LmnError::NotApplicable(Fragment::Isotrivial))
        }
        (ClassKind::Insertion, Some(sk)) => sk,
    };
    let m = &sk.map;
    let (x, a, y, _) = insertion_darts(sk)?;
    if m.theta(x) == y {
        return Err(LmnError::NotApplicable(Fragment::Circle));
    }
    let is_d = |f: u32| class.d_placement.contains(&f);
    let a_type = |f: u32, gon: u32| !is_d(f) && m.gonality(f) == gon;
    let r = m.face_of(a);
    let s = m.face_of(x);
    let (ex, ey) = (m.theta(x), m.theta(y));
    let reading = |fragment, l, mm, n, regions| {
        Ok(LmnReading {
            fragment,
            lmn: Lmn::new(l, mm, n),
            regions,
        })
    };

    if m.vertex_of(ex) == m.vertex_of(ey) {
        if a_type(s, 2) {
            return reading(Fragment::LeafOut, 0, 2, 0, vec![s]);
        }
        if a_type(r, 3) {
            return reading(Fragment::LeafIn, 3, 0, 0, vec![r]);
        }
    }
    for e in [ex, ey] {
        if let Some(f) = opposite_corner(m, e).filter(|&f| a_type(f, 1)) {
            return reading(Fragment::Stem, 0, 0, 1, vec![f]);
        }
    }
    let mut regions = Vec::new();
    let mut param = |f: u32| {
        if is_d(f) {
            0
        } else {
            regions.push(f);
            m.gonality(f)
        }
    };
    let l = param(r);
    let mm = param(s);
    let n = match opposite_corner(m, ex) {
        Some(t) if t != r || mm == 0 => param(t),
        _ => 0,
    };
    reading(Fragment::Generic, l, mm, n, regions)
}

/// Parameters `(l, m, n)` of the relations about the regions `r`, `s`, `t`.
pub fn lmn_of(class: &CurveClass) -> Result<Lmn, LmnError> {
    lmn_reading(class).map(|r| r.lmn)
}

/// Reading for a table row: among the classes of the row, the one using the most
/// distinct regions (ties broken by the order given).
pub fn row_reading(classes: &[CurveClass]) -> Result<LmnReading, LmnError> {
    let mut best: Option<LmnReading> = None;
    for c in classes {
        let r = lmn_reading(c)?;
        if best
            .as_ref()
            .map_or(true, |b| r.distinct_regions() > b.distinct_regions())
        {
            best = Some(r);
        }
    }
    best.ok_or(LmnError::NotApplicable(Fragment::Isotrivial))
}
