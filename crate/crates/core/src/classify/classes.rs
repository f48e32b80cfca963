//! Deformation classes of sextics with a type E8 point and their grouping into rows.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cmap::{
    build_map, canonical_code_decorated, face_image, mirror_code, symmetries_decorated,
    CombinatorialMap, Decoration, Orientation, Role, Skeleton,
};

use super::census::{face_subset_orbits, region_points, sigma2_census};
use super::insertion::{attach, fiber_data, is_reducible, InsertionError, InsertionSite};
use super::singularity::{Ade, SingularitySet};

/// How a class is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// An insertion attached to a skeleton of the census.
    Insertion,
    /// `v` bivalent, joined to `u` and to a trivalent vertex with a loop.
    BivalentV,
    /// `v` monovalent, joined to `u` only.
    MonovalentV,
    /// The isotrivial curve, which has no skeleton.
    Isotrivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Irreducible,
    Reducible,
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveKind::Irreducible => "irreducible",
            CurveKind::Reducible => "reducible",
        })
    }
}

/// One equisingular deformation class: a skeleton with insertion plus the regions
/// carrying type D fibers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    pub kind: ClassKind,
    pub skeleton: Option<Skeleton>,
    pub base: Option<CombinatorialMap>,
    pub site: Option<InsertionSite>,
    pub d_placement: Vec<u32>,
    pub reducible: bool,
    pub real: bool,
    pub set: SingularitySet,
}

impl CurveClass {
    fn decoration(&self) -> Decoration {
        let sk = self.skeleton.as_ref();
        Decoration {
            distinguished: sk.and_then(|s| s.distinguished_white),
            marked_faces: self.d_placement.clone(),
        }
    }

    /// Isomorphism code of the decorated skeleton; empty for the isotrivial class.
    pub fn code(&self, orientation: Orientation) -> Vec<u8> {
        match &self.skeleton {
            Some(s) => canonical_code_decorated(&s.map, &self.decoration(), orientation),
            None => Vec::new(),
        }
    }

    pub fn mirror_code(&self) -> Vec<u8> {
        match &self.skeleton {
            Some(s) => mirror_code(&s.map, &self.decoration()),
            None => Vec::new(),
        }
    }

    /// The isotrivial curve with singularities `E8+E7+D4`.
    pub fn isotrivial() -> Self {
        CurveClass {
            kind: ClassKind::Isotrivial,
            skeleton: None,
            base: None,
            site: None,
            d_placement: Vec::new(),
            reducible: true,
            real: true,
            set: SingularitySet::from_iter([Ade::E(8), Ade::E(7), Ade::D(4)]),
        }
    }
}

/// One class per orbit of D-placements under the symmetries of the skeleton fixing
/// `u`; realness from orientation-reversing symmetries.
pub fn classes_on(
    sk: &Skeleton,
    kind: ClassKind,
    reducible: bool,
) -> Result<Vec<CurveClass>, InsertionError> {
    let fd = fiber_data(sk)?;
    let m = &sk.map;
    let dec = sk.decoration();
    let (pres, rev) = symmetries_decorated(m, &dec);
    let auts: Vec<_> = pres.into_iter().map(|a| (a, false)).collect();
    let mut out = Vec::new();
    for placement in face_subset_orbits(m, &auts, fd.d) {
        let real = rev.iter().any(|a| {
            let mut img: Vec<u32> = placement
                .iter()
                .map(|&f| face_image(m, a, true, f))
                .collect();
            img.sort_unstable();
            img == placement
        });
        let mut pts = vec![Ade::E(8)];
        pts.extend(fd.vertex_fibers.iter().map(|&(_, a)| a));
        pts.extend(region_points(&fd.gonalities, &placement));
        out.push(CurveClass {
            kind,
            skeleton: Some(sk.clone()),
            base: None,
            site: None,
            d_placement: placement,
            reducible,
            real,
            set: SingularitySet::from_iter(pts),
        });
    }
    Ok(out)
}

/// Classes obtained by attaching an insertion to `sk'` at `site`.
pub fn deformation_classes(
    base: &CombinatorialMap,
    site: InsertionSite,
) -> Result<Vec<CurveClass>, InsertionError> {
    let sk = attach(base, site)?;
    let reducible = is_reducible(base, site);
    let mut out = classes_on(&sk, ClassKind::Insertion, reducible)?;
    for c in &mut out {
        c.base = Some(base.clone());
        c.site = Some(site);
    }
    Ok(out)
}

/// `u - v - w` with `v` bivalent and a loop at the trivalent `w`.
pub fn bivalent_v_shape() -> Skeleton {
    // v: darts 0 (to u), 1 (to w); w: 2 (to v), 3, 4 (loop); u: 5
    let m = build_map(
        vec![1, 0, 3, 4, 2, 5],
        vec![5, 2, 1, 4, 3, 0],
        vec![Role::Black, Role::Black, Role::White],
    )
    .expect("valid shape");
    Skeleton {
        map: m,
        distinguished_white: Some(2),
    }
}

/// A single edge `v - u` with `v` monovalent black.
pub fn monovalent_v_shape() -> Skeleton {
    let m = build_map(vec![0, 1], vec![1, 0], vec![Role::Black, Role::White]).expect("valid shape");
    Skeleton {
        map: m,
        distinguished_white: Some(1),
    }
}

/// Every deformation class of the given kind, one per orientation-preserving
/// isomorphism class, ordered by code.
pub fn all_classes(kind: CurveKind) -> Vec<CurveClass> {
    let want = kind == CurveKind::Reducible;
    let mut found: BTreeMap<Vec<u8>, CurveClass> = BTreeMap::new();
    let mut add = |c: CurveClass| {
        found.entry(c.code(Orientation::Preserve)).or_insert(c);
    };
    for sk in sigma2_census() {
        for site in InsertionSite::all(&sk.map) {
            if is_reducible(&sk.map, site) != want {
                continue;
            }
            for c in deformation_classes(&sk.map, site).expect("census skeletons accept insertions")
            {
                add(c);
            }
        }
    }
    match kind {
        CurveKind::Irreducible => {
            for (shape, k) in [
                (bivalent_v_shape(), ClassKind::BivalentV),
                (monovalent_v_shape(), ClassKind::MonovalentV),
            ] {
                for c in classes_on(&shape, k, false).expect("valid shape") {
                    add(c);
                }
            }
        }
        CurveKind::Reducible => add(CurveClass::isotrivial()),
    }
    found.into_values().collect()
}

/// Classes of a row: a single real class or a pair of complex conjugate ones.
pub fn group_by_conjugation(classes: Vec<CurveClass>) -> Vec<Vec<CurveClass>> {
    let mut groups: BTreeMap<Vec<u8>, Vec<CurveClass>> = BTreeMap::new();
    for c in classes {
        groups
            .entry(c.code(Orientation::Either))
            .or_default()
            .push(c);
    }
    groups.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_shapes() {
        let b = classes_on(&bivalent_v_shape(), ClassKind::BivalentV, false).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].set.to_string(), "2E8+A3");
        assert!(b[0].real);
        let m = classes_on(&monovalent_v_shape(), ClassKind::MonovalentV, false).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].set.to_string(), "E8+E6+D5");
    }

    #[test]
    fn circle_class() {
        let c =
            deformation_classes(&CombinatorialMap::circle(), InsertionSite { dart: 0 }).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].set.to_string(), "E8+D6+D5");
        assert!(c[0].reducible);
    }

    #[test]
    fn realness_matches_mirror_code() {
        for kind in [CurveKind::Irreducible, CurveKind::Reducible] {
            for c in all_classes(kind) {
                assert_eq!(
                    c.real,
                    c.code(Orientation::Preserve) == c.mirror_code(),
                    "{}",
                    c.set
                );
            }
        }
    }
}
