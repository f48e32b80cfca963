//! Insertions, splitting markings and the vertex count of a skeleton with insertion.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cmap::{build_map, CombinatorialMap, Dart, MapError, Role, Skeleton};

use super::census::vertex_fiber;
use super::singularity::Ade;

/// Position of an insertion on `Sk'`: the edge `{dart, theta(dart)}`, with the new
/// white vertex `u` placed in the face of `dart`. The circle has the single site
/// `dart = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InsertionSite {
    pub dart: Dart,
}

impl InsertionSite {
    pub fn edge(&self, m: &CombinatorialMap) -> (Dart, Dart) {
        (self.dart, m.theta(self.dart))
    }

    /// Face of `Sk'` receiving `u`.
    pub fn side(&self, m: &CombinatorialMap) -> u32 {
        m.face_of(self.dart)
    }

    /// All sites of a map (one per dart; the circle has one).
    pub fn all(m: &CombinatorialMap) -> Vec<InsertionSite> {
        if m.is_circle() {
            return vec![InsertionSite { dart: 0 }];
        }
        (0..m.darts() as Dart)
            .map(|dart| InsertionSite { dart })
            .collect()
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InsertionError {
    #[error("site dart {0} is not a dart of the skeleton")]
    NoSuchDart(Dart),
    #[error("skeleton has no insertion")]
    NoInsertion,
    #[error("the vertex next to u is not trivalent")]
    NotAnInsertion,
    #[error("{0}")]
    Map(#[from] MapError),
    #[error("weighted vertex count {0} exceeds 8 or has the wrong parity")]
    CountViolation(u32),
}

/// Attach an insertion at the midpoint of the site edge: new darts `x`, `a`, `y`
/// around the trivalent black `v` (counterclockwise) and `b` at the white `u`, with
/// `x` facing `dart` and `y` facing `theta(dart)`.
pub fn attach(sk: &CombinatorialMap, site: InsertionSite) -> Result<Skeleton, InsertionError> {
    if sk.is_circle() {
        // v carries a loop; u is attached on one side of it
        let m = build_map(
            vec![1, 2, 0, 3],
            vec![2, 3, 0, 1],
            vec![Role::Black, Role::White],
        )?;
        return Ok(Skeleton {
            map: m,
            distinguished_white: Some(1),
        });
    }
    let n = sk.darts() as Dart;
    if site.dart >= n {
        return Err(InsertionError::NoSuchDart(site.dart));
    }
    let (x, a, y, b) = (n, n + 1, n + 2, n + 3);
    let d = site.dart;
    let e = sk.theta(d);
    let mut sigma = sk.sigma_perm().to_vec();
    let mut theta = sk.theta_perm().to_vec();
    sigma.extend([a, y, x, b]);
    theta.extend([d, b, e, a]);
    theta[d as usize] = x;
    theta[e as usize] = y;
    let mut roles = sk.roles().to_vec();
    roles.extend([Role::Black, Role::White]);
    let u = roles.len() as u32 - 1;
    let m = build_map(sigma, theta, roles)?;
    Ok(Skeleton {
        map: m,
        distinguished_white: Some(u),
    })
}

/// The darts `(x, a, y, b)` of an insertion, as in [`attach`].
pub fn insertion_darts(sk: &Skeleton) -> Result<(Dart, Dart, Dart, Dart), InsertionError> {
    let u = sk.distinguished_white.ok_or(InsertionError::NoInsertion)?;
    let m = &sk.map;
    let b = m.vertex_darts(u)[0];
    let a = m.theta(b);
    if m.valency(m.vertex_of(a)) != 3 {
        return Err(InsertionError::NotAnInsertion);
    }
    let y = m.sigma(a);
    let x = m.sigma(y);
    Ok((x, a, y, b))
}

/// Remove the insertion and fuse the two edges at `v`, giving back `Sk'`.
pub fn remove_insertion(sk: &Skeleton) -> Result<CombinatorialMap, InsertionError> {
    let (x, a, y, b) = insertion_darts(sk)?;
    let m = &sk.map;
    if m.theta(x) == y {
        return Ok(CombinatorialMap::circle());
    }
    let gone = [x, a, y, b];
    let n = m.darts();
    let mut new_id = vec![Dart::MAX; n];
    let mut next = 0;
    for d in 0..n as Dart {
        if !gone.contains(&d) {
            new_id[d as usize] = next;
            next += 1;
        }
    }
    let mut sigma = vec![0; next as usize];
    let mut theta = vec![0; next as usize];
    for d in 0..n as Dart {
        let i = new_id[d as usize];
        if i == Dart::MAX {
            continue;
        }
        sigma[i as usize] = new_id[m.sigma(d) as usize];
        let t = match m.theta(d) {
            t if t == x => m.theta(y),
            t if t == y => m.theta(x),
            t => t,
        };
        theta[i as usize] = new_id[t as usize];
    }
    let v = m.vertex_of(a);
    let u = m.vertex_of(b);
    let roles: Vec<Role> = (0..m.vertex_count() as u32)
        .filter(|&w| w != v && w != u)
        .map(|w| m.roles()[w as usize])
        .collect();
    Ok(build_map(sigma, theta, roles)?)
}

/// For each trivalent black vertex, the dart labelled `e1`; `e2` and `e3` follow
/// counterclockwise. Other vertices carry `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Marking {
    pub e1: Vec<Option<Dart>>,
}

impl Marking {
    /// Index 1, 2 or 3 of a dart at a marked vertex.
    pub fn index(&self, m: &CombinatorialMap, d: Dart) -> Option<u8> {
        let e1 = self.e1[m.vertex_of(d) as usize]?;
        Some(if d == e1 {
            1
        } else if d == m.sigma(e1) {
            2
        } else {
            3
        })
    }
}

/// Splitting markings: every edge between trivalent black vertices has type
/// `[1,1]`, `[2,3]` or `[3,2]`, and every black-white edge is `e1` at its black end.
/// Skeletons with a mono- or bivalent black vertex have none.
pub fn splitting_markings(m: &CombinatorialMap) -> Vec<Marking> {
    if m.is_circle() {
        return Vec::new();
    }
    let nv = m.vertex_count();
    let mut choices: Vec<Vec<Option<Dart>>> = Vec::with_capacity(nv);
    for v in 0..nv as u32 {
        if m.roles()[v as usize] == Role::White {
            choices.push(vec![None]);
            continue;
        }
        if m.valency(v) != 3 {
            return Vec::new();
        }
        let darts = m.vertex_darts(v);
        let to_white: Vec<Dart> = darts
            .iter()
            .copied()
            .filter(|&d| m.role_of(m.theta(d)) == Role::White)
            .collect();
        choices.push(match to_white.len() {
            0 => darts.into_iter().map(Some).collect(),
            1 => vec![Some(to_white[0])],
            _ => return Vec::new(),
        });
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; nv];
    loop {
        let mk = Marking {
            e1: idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect(),
        };
        if is_splitting(m, &mk) {
            out.push(mk);
        }
        // odometer
        let mut k = 0;
        loop {
            if k == nv {
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn is_splitting(m: &CombinatorialMap, mk: &Marking) -> bool {
    (0..m.darts() as Dart).all(|d| match (mk.index(m, d), mk.index(m, m.theta(d))) {
        (Some(i), Some(j)) => matches!((i, j), (1, 1) | (2, 3) | (3, 2)),
        _ => true,
    })
}

/// Whether the insertion at `site` produces a reducible curve: some splitting
/// marking gives the site edge type `[2,3]`, read from the side of `u`. The circle
/// always does.
pub fn is_reducible(sk: &CombinatorialMap, site: InsertionSite) -> bool {
    if sk.is_circle() {
        return true;
    }
    let (d, e) = site.edge(sk);
    splitting_markings(sk)
        .iter()
        .any(|mk| mk.index(sk, d) == Some(2) && mk.index(sk, e) == Some(3))
}

/// Singular fibers of a skeleton with insertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberData {
    /// Type E fibers over mono-/bivalent black and white vertices other than `u`.
    pub vertex_fibers: Vec<(u32, Ade)>,
    /// Number of type D fibers.
    pub d: u32,
    /// Gonality of each face.
    pub gonalities: Vec<u32>,
}

/// Vertex fibers and `d = (8 - 3a - 4b - c - 3w) / 2`, where `u` counts among the
/// white vertices.
pub fn fiber_data(sk: &Skeleton) -> Result<FiberData, InsertionError> {
    let m = &sk.map;
    let p = super::census::VertexProfile::of(m);
    let w = p.weighted();
    if w > 8 || (8 - w) % 2 == 1 {
        return Err(InsertionError::CountViolation(w));
    }
    let vertex_fibers = (0..m.vertex_count() as u32)
        .filter(|&v| Some(v) != sk.distinguished_white)
        .filter_map(|v| vertex_fiber(m, v).map(|a| (v, a)))
        .collect();
    Ok(FiberData {
        vertex_fibers,
        d: (8 - w) / 2,
        gonalities: m.faces().iter().map(|r| r.gonality).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmap::{canonical_code, Orientation};

    fn theta_graph() -> CombinatorialMap {
        build_map(
            vec![1, 2, 0, 4, 5, 3],
            vec![3, 5, 4, 0, 2, 1],
            vec![Role::Black; 2],
        )
        .unwrap()
    }

    fn dumbbell() -> CombinatorialMap {
        build_map(
            vec![1, 2, 0, 4, 5, 3],
            vec![3, 2, 1, 0, 5, 4],
            vec![Role::Black; 2],
        )
        .unwrap()
    }

    fn sorted_gonalities(m: &CombinatorialMap) -> Vec<u32> {
        let mut g: Vec<u32> = m.faces().iter().map(|r| r.gonality).collect();
        g.sort_unstable();
        g.reverse();
        g
    }

    #[test]
    fn attach_regions() {
        let db = dumbbell();
        let bridge = attach(&db, InsertionSite { dart: 0 }).unwrap();
        assert_eq!(sorted_gonalities(&bridge.map), [7, 1, 1]);
        // dart 1 is the first loop dart at vertex 0; its face is the outside
        let outside = attach(&db, InsertionSite { dart: 1 }).unwrap();
        assert_eq!(sorted_gonalities(&outside.map), [6, 2, 1]);
        let inside = attach(&db, InsertionSite { dart: 2 }).unwrap();
        assert_eq!(sorted_gonalities(&inside.map), [5, 3, 1]);
        for s in InsertionSite::all(&theta_graph()) {
            let sk = attach(&theta_graph(), s).unwrap();
            assert_eq!(sorted_gonalities(&sk.map), [4, 3, 2]);
        }
    }

    #[test]
    fn remove_inverts_attach() {
        for m in [theta_graph(), dumbbell(), CombinatorialMap::circle()] {
            for s in InsertionSite::all(&m) {
                let sk = attach(&m, s).unwrap();
                let back = remove_insertion(&sk).unwrap();
                assert_eq!(
                    canonical_code(&back, Orientation::Preserve),
                    canonical_code(&m, Orientation::Preserve)
                );
            }
        }
    }

    #[test]
    fn markings() {
        assert_eq!(splitting_markings(&theta_graph()).len(), 3);
        assert_eq!(splitting_markings(&dumbbell()).len(), 1);
        let e8 = build_map(vec![1, 0], vec![1, 0], vec![Role::Black]).unwrap();
        assert!(splitting_markings(&e8).is_empty());
    }

    #[test]
    fn reducibility() {
        let th = theta_graph();
        assert!(InsertionSite::all(&th)
            .into_iter()
            .all(|s| is_reducible(&th, s)));
        let db = dumbbell();
        assert!(!is_reducible(&db, InsertionSite { dart: 0 }));
        assert!(is_reducible(&db, InsertionSite { dart: 1 }));
        assert!(!is_reducible(&db, InsertionSite { dart: 2 }));
        assert!(is_reducible(
            &CombinatorialMap::circle(),
            InsertionSite { dart: 0 }
        ));
    }

    #[test]
    fn fiber_counts() {
        let c = attach(&CombinatorialMap::circle(), InsertionSite { dart: 0 }).unwrap();
        assert_eq!(fiber_data(&c).unwrap().d, 2);
        let bridge = attach(&dumbbell(), InsertionSite { dart: 0 }).unwrap();
        let fd = fiber_data(&bridge).unwrap();
        assert_eq!(fd.d, 1);
        assert!(fd.vertex_fibers.is_empty());
    }
}
