//! Classification tables: one row per set of singularities and local picture, with
//! the numbers of real classes and complex conjugate pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::vankampen::lmn::{row_reading, Fragment, Lmn};

use super::classes::{all_classes, group_by_conjugation, CurveClass, CurveKind};
use super::singularity::SingularitySet;

/// What a row lists in its `(l,m,n)` column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum LmnCell {
    /// Group computed from the triple.
    Triple { lmn: Lmn },
    /// Abelian by rewriting the leaf-out relation; printed blank.
    Rewriting { lmn: Lmn },
    /// Treated separately; printed `*`.
    Special,
}

impl LmnCell {
    pub fn triple(&self) -> Option<Lmn> {
        match self {
            LmnCell::Triple { lmn } | LmnCell::Rewriting { lmn } => Some(*lmn),
            LmnCell::Special => None,
        }
    }
}

impl fmt::Display for LmnCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LmnCell::Triple { lmn } => write!(f, "{lmn}"),
            LmnCell::Rewriting { .. } => Ok(()),
            LmnCell::Special => f.write_str("*"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub index: usize,
    pub set: SingularitySet,
    pub fragment: Fragment,
    pub n_r: usize,
    pub n_c: usize,
    pub lmn: LmnCell,
    pub reducible: bool,
    #[serde(skip)]
    pub classes: Vec<CurveClass>,
}

/// Published row order: set, `(n_r, n_c)` and the `(l,m,n)` column as printed.
pub const IRREDUCIBLE_ORDER: [(&str, usize, usize, &str); 30] = [
    ("E8+A4+A3+2A2", 1, 0, "(5,4,3)"),
    ("E8+A11", 0, 1, "(-,-,1)"),
    ("E8+A9+A2", 1, 0, "(3,-,-)"),
    ("E8+A10+A1", 1, 0, ""),
    ("E8+A7+2A2", 1, 0, "(8,3,3)"),
    ("E8+A6+A3+A2", 1, 0, "(4,7,3)"),
    ("E8+A5+A4+A2", 1, 0, "(5,3,6)"),
    ("E8+A6+A4+A1", 0, 1, "(5,7,2)"),
    ("E8+A8+A2+A1", 0, 1, "(-,-,1)"),
    ("E8+A6+2A2+A1", 1, 0, "(3,-,-)"),
    ("E8+A6+A5", 0, 1, "(7,-,-)"),
    ("E8+A7+A4", 0, 1, "(-,-,1)"),
    ("E8+A5+A4+A2", 1, 0, "(3,-,-)"),
    ("E8+A6+A4+A1", 1, 0, ""),
    ("E8+A8+A3", 1, 0, "(4,9,9)"),
    ("E8+A10+A1", 0, 1, "(-,-,1)"),
    ("E8+A8+A2+A1", 1, 0, "(3,-,-)"),
    ("E8+D11", 1, 0, "(-,-,1)"),
    ("E8+D5+A6", 0, 1, "(-,-,1)"),
    ("E8+D9+A2", 1, 0, "(3,-,-)"),
    ("E8+D7+A4", 1, 0, "(-,5,5)"),
    ("E8+D5+A4+A2", 1, 0, "(3,-,-)"),
    ("E8+E6+A5", 0, 1, "(-,-,1)"),
    ("E8+E6+A3+A2", 1, 0, "(3,-,-)"),
    ("E8+E6+A4+A1", 1, 0, ""),
    ("E8+E7+A4", 0, 1, "(-,-,1)"),
    ("E8+E7+2A2", 1, 0, "(3,-,-)"),
    ("2E8+A2+A1", 1, 0, ""),
    ("2E8+A3", 1, 0, "*"),
    ("E8+E6+D5", 1, 0, "*"),
];

pub const REDUCIBLE_ORDER: [(&str, usize, usize, &str); 17] = [
    ("E8+A5+2A3", 1, 0, "(4,4,6)"),
    ("E8+A7+A3+A1", 0, 1, "(8,4,2)"),
    ("E8+A7+A2+2A1", 1, 0, ""),
    ("E8+A5+A4+2A1", 1, 0, "(6,5,2)"),
    ("E8+A5+A3+A2+A1", 1, 0, "(6,3,4)"),
    ("E8+A4+2A3+A1", 1, 0, "(4,5,4)"),
    ("E8+A9+A2", 1, 0, "(10,3,-)"),
    ("E8+A9+2A1", 1, 0, ""),
    ("E8+D8+A2+A1", 1, 0, "(-,3,2)"),
    ("E8+D7+A3+A1", 1, 0, "(4,-,2)"),
    ("E8+D6+A3+A2", 1, 0, "(4,3,-)"),
    ("E8+D10+A1", 1, 0, ""),
    ("E8+D6+A5", 1, 0, "(6,-,6)"),
    ("E8+D5+A5+A1", 1, 0, ""),
    ("E8+E7+A3+A1", 1, 0, ""),
    ("E8+D6+D5", 1, 0, "*"),
    ("E8+E7+D4", 1, 0, "*"),
];

pub fn reference_order(kind: CurveKind) -> &'static [(&'static str, usize, usize, &'static str)] {
    match kind {
        CurveKind::Irreducible => &IRREDUCIBLE_ORDER,
        CurveKind::Reducible => &REDUCIBLE_ORDER,
    }
}

fn row_of(classes: Vec<CurveClass>) -> TableRow {
    let n_r = classes.iter().filter(|c| c.real).count();
    let n_c = (classes.len() - n_r) / 2;
    let first = &classes[0];
    let (fragment, lmn) = match row_reading(&classes) {
        Ok(r) if r.fragment == Fragment::LeafOut => (r.fragment, LmnCell::Rewriting { lmn: r.lmn }),
        Ok(r) => (r.fragment, LmnCell::Triple { lmn: r.lmn }),
        Err(crate::vankampen::lmn::LmnError::NotApplicable(f)) => (f, LmnCell::Special),
        Err(e) => panic!("classified skeleton without an insertion: {e}"),
    };
    TableRow {
        index: 0,
        set: first.set.clone(),
        fragment,
        n_r,
        n_c,
        lmn,
        reducible: first.reducible,
        classes,
    }
}

/// All rows of the given kind, ordered as the published table where a row matches
/// one there (by set, counts and printed parameters, then by set and counts); other
/// rows follow.
pub fn classify(kind: CurveKind) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = group_by_conjugation(all_classes(kind))
        .into_iter()
        .map(row_of)
        .collect();
    let reference = reference_order(kind);
    let mut slot: Vec<Option<usize>> = vec![None; rows.len()];
    let mut taken = vec![false; reference.len()];
    for exact in [true, false] {
        for (i, row) in rows.iter().enumerate() {
            if slot[i].is_some() {
                continue;
            }
            let set = row.set.to_string();
            let cell = row.lmn.to_string();
            let hit = reference
                .iter()
                .enumerate()
                .position(|(j, &(s, nr, nc, p))| {
                    !taken[j] && s == set && nr == row.n_r && nc == row.n_c && (!exact || p == cell)
                });
            if let Some(j) = hit {
                taken[j] = true;
                slot[i] = Some(j);
            }
        }
    }
    let mut keyed: Vec<(usize, String, TableRow)> = rows
        .drain(..)
        .zip(slot)
        .map(|(r, s)| (s.unwrap_or(usize::MAX), r.set.to_string(), r))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed
        .into_iter()
        .enumerate()
        .map(|(i, (_, _, mut r))| {
            r.index = i + 1;
            r
        })
        .collect()
}
