//! Exhaustive enumeration of small skeletons.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cmap::{
    build_map, canonical_code, canonical_code_decorated, face_image, symmetries_decorated,
    CombinatorialMap, Dart, Decoration, Orientation, Role, Skeleton,
};

use super::singularity::{Ade, SingularitySet};

/// Vertex counts of a skeleton: monovalent, bivalent, trivalent black and
/// monovalent white vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexProfile {
    pub mono: u32,
    pub bi: u32,
    pub tri: u32,
    pub white: u32,
}

impl VertexProfile {
    pub fn weighted(&self) -> u32 {
        3 * self.mono + 4 * self.bi + self.tri + 3 * self.white
    }

    /// All profiles with weighted count `total - 2d` for some `d >= 0`, with their `d`.
    pub fn solutions(total: u32) -> Vec<(VertexProfile, u32)> {
        let mut out = Vec::new();
        for d in 0..=total / 2 {
            let t = total - 2 * d;
            for mono in 0..=t / 3 {
                for bi in 0..=(t - 3 * mono) / 4 {
                    for white in 0..=(t - 3 * mono - 4 * bi) / 3 {
                        let tri = t - 3 * mono - 4 * bi - 3 * white;
                        out.push((
                            VertexProfile {
                                mono,
                                bi,
                                tri,
                                white,
                            },
                            d,
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn of(m: &CombinatorialMap) -> Self {
        let mut p = VertexProfile {
            mono: 0,
            bi: 0,
            tri: 0,
            white: 0,
        };
        for v in 0..m.vertex_count() as u32 {
            match (m.roles()[v as usize], m.valency(v)) {
                (Role::White, _) => p.white += 1,
                (Role::Black, 1) => p.mono += 1,
                (Role::Black, 2) => p.bi += 1,
                _ => p.tri += 1,
            }
        }
        p
    }

    fn vertices(&self) -> Vec<(Role, usize)> {
        let mut v = Vec::new();
        v.extend(std::iter::repeat((Role::Black, 1)).take(self.mono as usize));
        v.extend(std::iter::repeat((Role::Black, 2)).take(self.bi as usize));
        v.extend(std::iter::repeat((Role::Black, 3)).take(self.tri as usize));
        v.extend(std::iter::repeat((Role::White, 1)).take(self.white as usize));
        v
    }
}

/// Every valid skeleton (connected, spherical, white vertices adjacent to black ones)
/// with the given vertices, one per pairing of darts. Darts are numbered vertex by
/// vertex in the order given, so vertex `i` of the result is the `i`-th entry.
pub fn all_maps(vertices: &[(Role, usize)]) -> Vec<CombinatorialMap> {
    let mut sigma = Vec::new();
    let mut roles = Vec::new();
    let mut white = Vec::new();
    for &(role, val) in vertices {
        let base = sigma.len() as Dart;
        for i in 0..val as Dart {
            sigma.push(base + (i + 1) % val as Dart);
            white.push(role == Role::White);
        }
        roles.push(role);
    }
    let n = sigma.len();
    if n % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut theta = vec![Dart::MAX; n];
    pair_up(&mut theta, &white, &mut |t| {
        if let Ok(m) = build_map(sigma.clone(), t.to_vec(), roles.clone()) {
            out.push(m);
        }
    });
    out
}

fn pair_up(theta: &mut [Dart], white: &[bool], emit: &mut dyn FnMut(&[Dart])) {
    let Some(a) = theta.iter().position(|&x| x == Dart::MAX) else {
        emit(theta);
        return;
    };
    for b in a + 1..theta.len() {
        if theta[b] != Dart::MAX || (white[a] && white[b]) {
            continue;
        }
        theta[a] = b as Dart;
        theta[b] = a as Dart;
        pair_up(theta, white, emit);
        theta[a] = Dart::MAX;
        theta[b] = Dart::MAX;
    }
}

/// Skeletons of stable maximal trigonal curves with two type E8 singular fibers cut
/// off: all solutions of `3a + 4b + c + 3w = 4 - 2d`, deduplicated up to
/// orientation-preserving isomorphism and sorted by canonical code. The circle is
/// included (it is the only `d = 2` entry).
pub fn sigma2_census() -> Vec<Skeleton> {
    let mut found: BTreeMap<Vec<u8>, CombinatorialMap> = BTreeMap::new();
    for (profile, _) in VertexProfile::solutions(4) {
        if profile.weighted() == 0 {
            let c = CombinatorialMap::circle();
            found.insert(canonical_code(&c, Orientation::Preserve), c);
            continue;
        }
        for m in all_maps(&profile.vertices()) {
            found
                .entry(canonical_code(&m, Orientation::Preserve))
                .or_insert(m);
        }
    }
    found.into_values().map(Skeleton::plain).collect()
}

/// A skeleton describing a maximal perturbation of a type E8 singular point: the
/// distinguished monovalent black vertex `pendant` carries what is left of the
/// type E8 fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerturbationSkeleton {
    pub map: CombinatorialMap,
    pub pendant: u32,
    pub d: u32,
    pub sets: Vec<SingularitySet>,
}

/// Fiber of a vertex other than a distinguished one.
pub(crate) fn vertex_fiber(m: &CombinatorialMap, v: u32) -> Option<Ade> {
    match (m.roles()[v as usize], m.valency(v)) {
        (Role::White, _) => Some(Ade::E(7)),
        (Role::Black, 1) => Some(Ade::E(6)),
        (Role::Black, 2) => Some(Ade::E(8)),
        _ => None,
    }
}

/// Singular points over the regions: `A_{m-1}` for an ordinary `m`-gon with `m >= 2`,
/// `D_{m+4}` for an `m`-gon carrying a type D fiber.
pub(crate) fn region_points(gonalities: &[u32], d_faces: &[u32]) -> Vec<Ade> {
    let mut out = Vec::new();
    for (f, &m) in gonalities.iter().enumerate() {
        if d_faces.contains(&(f as u32)) {
            out.push(Ade::D(m + 4));
        } else if m >= 2 {
            out.push(Ade::A(m - 1));
        }
    }
    out
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub(crate) fn subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Representatives of `k`-subsets of faces up to the given automorphisms, each
/// returned as the smallest sorted image in its orbit.
pub(crate) fn face_subset_orbits(
    m: &CombinatorialMap,
    auts: &[(Vec<Dart>, bool)],
    k: u32,
) -> Vec<Vec<u32>> {
    let mut reps: Vec<Vec<u32>> = subsets(m.face_count() as u32, k)
        .into_iter()
        .map(|s| {
            auts.iter()
                .map(|(a, rev)| {
                    let mut img: Vec<u32> = s.iter().map(|&f| face_image(m, a, *rev, f)).collect();
                    img.sort_unstable();
                    img
                })
                .min()
                .unwrap_or(s)
        })
        .collect();
    reps.sort();
    reps.dedup();
    reps
}

/// Maximal perturbations of a type E8 point: skeletons with one distinguished
/// monovalent black vertex (weight 1) and the rest satisfying
/// `3a + 4b + c + 3w = 3 - 2d`, up to isomorphism of either orientation.
pub fn e8_perturbation_census() -> Vec<PerturbationSkeleton> {
    let mut found: BTreeMap<Vec<u8>, PerturbationSkeleton> = BTreeMap::new();
    for (profile, d) in VertexProfile::solutions(3) {
        let mut vertices = vec![(Role::Black, 1)];
        vertices.extend(profile.vertices());
        for m in all_maps(&vertices) {
            let dec = Decoration::vertex(0);
            let code = canonical_code_decorated(&m, &dec, Orientation::Either);
            if found.contains_key(&code) {
                continue;
            }
            let (pres, _) = symmetries_decorated(&m, &dec);
            let auts: Vec<_> = pres.into_iter().map(|a| (a, false)).collect();
            let gon: Vec<u32> = m.faces().iter().map(|r| r.gonality).collect();
            let mut sets: Vec<SingularitySet> = face_subset_orbits(&m, &auts, d)
                .into_iter()
                .map(|placement| {
                    let mut pts: Vec<Ade> = (1..m.vertex_count() as u32)
                        .filter_map(|v| vertex_fiber(&m, v))
                        .collect();
                    pts.extend(region_points(&gon, &placement));
                    SingularitySet::from_iter(pts)
                })
                .collect();
            sets.sort();
            sets.dedup();
            found.insert(
                code,
                PerturbationSkeleton {
                    map: m,
                    pendant: 0,
                    d,
                    sets,
                },
            );
        }
    }
    found.into_values().collect()
}
