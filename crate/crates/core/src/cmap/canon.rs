//! Canonical codes and automorphisms of (decorated) maps.

use serde::{Deserialize, Serialize};

use super::map::{CombinatorialMap, Dart, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Preserve,
    Either,
}

/// Extra structure respected by codes and symmetries: a distinguished vertex and a
/// set of marked faces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decoration {
    pub distinguished: Option<u32>,
    pub marked_faces: Vec<u32>,
}

impl Decoration {
    pub fn vertex(v: u32) -> Self {
        Decoration {
            distinguished: Some(v),
            marked_faces: Vec::new(),
        }
    }
}

/// Per-dart label. Read in the mirror, the face of `d` is the original face of `theta(d)`.
fn dart_label(m: &CombinatorialMap, dec: &Decoration, d: Dart, mirrored: bool) -> u32 {
    let v = m.vertex_of(d);
    let role = (m.roles()[v as usize] == Role::White) as u32;
    let dist = (dec.distinguished == Some(v)) as u32;
    let fd = if mirrored { m.theta(d) } else { d };
    let marked = dec.marked_faces.contains(&m.face_of(fd)) as u32;
    role | dist << 1 | marked << 2
}

fn rotate(m: &CombinatorialMap, d: Dart, mirrored: bool) -> Dart {
    if mirrored {
        m.sigma_inv(d)
    } else {
        m.sigma(d)
    }
}

fn trace(m: &CombinatorialMap, labels: &[u32], start: Dart, mirrored: bool) -> Vec<u32> {
    let n = m.darts();
    let mut id = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    id[start as usize] = 0;
    order.push(start);
    let mut out = Vec::with_capacity(3 * n);
    let mut i = 0;
    while i < order.len() {
        let d = order[i];
        i += 1;
        let next = [rotate(m, d, mirrored), m.theta(d)];
        for e in next {
            if id[e as usize] == u32::MAX {
                id[e as usize] = order.len() as u32;
                order.push(e);
            }
        }
        out.extend([
            id[next[0] as usize],
            id[next[1] as usize],
            labels[d as usize],
        ]);
    }
    out
}

fn min_trace(m: &CombinatorialMap, dec: &Decoration, mirrored: bool) -> Vec<u32> {
    let labels: Vec<u32> = (0..m.darts() as Dart)
        .map(|d| dart_label(m, dec, d, mirrored))
        .collect();
    (0..m.darts() as Dart)
        .map(|s| trace(m, &labels, s, mirrored))
        .min()
        .unwrap_or_default()
}

fn encode(t: &[u32], vertices: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(2 * t.len() + 4);
    out.extend((vertices as u16).to_be_bytes());
    for &x in t {
        out.extend((x as u16).to_be_bytes());
    }
    out
}

/// Byte string identifying the decorated map up to isomorphism (orientation
/// preserving, or either orientation). Requires a connected map.
pub fn canonical_code_decorated(
    m: &CombinatorialMap,
    dec: &Decoration,
    orientation: Orientation,
) -> Vec<u8> {
    if m.is_circle() {
        // the two regions of the circle are exchanged by a rotation
        return vec![0xff, dec.marked_faces.len() as u8];
    }
    let mut t = min_trace(m, dec, false);
    if orientation == Orientation::Either {
        t = t.min(min_trace(m, dec, true));
    }
    encode(&t, m.vertex_count())
}

pub fn canonical_code(m: &CombinatorialMap, orientation: Orientation) -> Vec<u8> {
    canonical_code_decorated(m, &Decoration::default(), orientation)
}

/// Code of the mirror image (orientation-preserving code of the reversed map).
pub fn mirror_code(m: &CombinatorialMap, dec: &Decoration) -> Vec<u8> {
    if m.is_circle() {
        return canonical_code_decorated(m, dec, Orientation::Preserve);
    }
    encode(&min_trace(m, dec, true), m.vertex_count())
}

/// A dart permutation commuting with `theta`, and with `sigma` (orientation
/// preserving) or conjugating `sigma` to its inverse (reversing).
pub type Automorphism = Vec<Dart>;

fn extend_from(
    m: &CombinatorialMap,
    dec: &Decoration,
    image0: Dart,
    reversing: bool,
) -> Option<Automorphism> {
    let n = m.darts();
    let mut f = vec![u32::MAX; n];
    f[0] = image0;
    let mut stack = vec![0 as Dart];
    while let Some(d) = stack.pop() {
        let fd = f[d as usize];
        if dart_label(m, dec, d, false) != dart_label(m, dec, fd, reversing) {
            return None;
        }
        for (e, fe) in [
            (m.sigma(d), rotate(m, fd, reversing)),
            (m.theta(d), m.theta(fd)),
        ] {
            match f[e as usize] {
                u32::MAX => {
                    f[e as usize] = fe;
                    stack.push(e);
                }
                x if x != fe => return None,
                _ => {}
            }
        }
    }
    if f.contains(&u32::MAX) {
        return None;
    }
    let mut seen = vec![false; n];
    for &x in &f {
        if std::mem::replace(&mut seen[x as usize], true) {
            return None;
        }
    }
    Some(f)
}

/// All automorphisms respecting roles and the decoration, split by orientation.
/// The identity is the first orientation-preserving one.
pub fn symmetries_decorated(
    m: &CombinatorialMap,
    dec: &Decoration,
) -> (Vec<Automorphism>, Vec<Automorphism>) {
    if m.is_circle() {
        return (vec![Vec::new()], vec![Vec::new()]);
    }
    let mut pres = Vec::new();
    let mut rev = Vec::new();
    for t in 0..m.darts() as Dart {
        if let Some(f) = extend_from(m, dec, t, false) {
            pres.push(f);
        }
        if let Some(f) = extend_from(m, dec, t, true) {
            rev.push(f);
        }
    }
    (pres, rev)
}

pub fn symmetries(m: &CombinatorialMap) -> (Vec<Automorphism>, Vec<Automorphism>) {
    symmetries_decorated(m, &Decoration::default())
}

/// Image of face `f` under an automorphism.
pub fn face_image(m: &CombinatorialMap, aut: &Automorphism, reversing: bool, f: u32) -> u32 {
    let d = m.face_darts(f)[0];
    let fd = aut[d as usize];
    if reversing {
        m.face_of(m.theta(fd))
    } else {
        m.face_of(fd)
    }
}

#[cfg(test)]
mod tests {
    use super::super::map::build_map;
    use super::super::map::fixtures::*;
    use super::*;

    fn relabel(m: &CombinatorialMap, p: &[Dart]) -> CombinatorialMap {
        // dart d becomes p[d]
        let n = m.darts();
        let mut sigma = vec![0; n];
        let mut theta = vec![0; n];
        for d in 0..n {
            sigma[p[d] as usize] = p[m.sigma(d as Dart) as usize];
            theta[p[d] as usize] = p[m.theta(d as Dart) as usize];
        }
        let mut roles = vec![Role::Black; m.vertex_count()];
        let r = CombinatorialMap::from_parts(sigma.clone(), theta.clone(), roles.clone()).unwrap();
        for d in 0..n {
            roles[r.vertex_of(p[d]) as usize] = m.role_of(d as Dart);
        }
        build_map(sigma, theta, roles).unwrap()
    }

    #[test]
    fn relabeling_invariance() {
        let m = theta_graph();
        let r = relabel(&m, &[4, 0, 5, 1, 3, 2]);
        assert_ne!(m, r);
        assert_eq!(
            canonical_code(&m, Orientation::Preserve),
            canonical_code(&r, Orientation::Preserve)
        );
        assert_ne!(
            canonical_code(&theta_graph(), Orientation::Either),
            canonical_code(&dumbbell(), Orientation::Either)
        );
    }

    #[test]
    fn theta_symmetry_group() {
        let (pres, rev) = symmetries(&theta_graph());
        assert_eq!(pres.len(), 6);
        assert_eq!(rev.len(), 6);
        assert!(pres[0].iter().enumerate().all(|(i, &x)| i as Dart == x));
    }

    #[test]
    fn dumbbell_loop_swap() {
        let m = dumbbell();
        let (pres, _) = symmetries(&m);
        assert_eq!(pres.len(), 2);
        // the non-trivial one exchanges the two monogons
        let swap = &pres[1];
        assert_eq!(m.face_of(swap[2]), m.face_of(5));
    }
}
