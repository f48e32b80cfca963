//! Oriented combinatorial maps on the sphere.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Dart = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Black,
    White,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("rotation and pairing must be permutations of the same {0} darts")]
    NotPermutation(usize),
    #[error("pairing is not an involution at dart {0}")]
    NotInvolution(Dart),
    #[error("pairing fixes dart {0}")]
    FixedPointInPairing(Dart),
    #[error("map is not connected")]
    Disconnected,
    #[error("map has genus {0}, expected a sphere")]
    NonSphericalGenus(i64),
    #[error("{0} roles given for {1} vertices")]
    RoleCount(usize, usize),
    #[error("vertex {vertex}: {reason}")]
    BadValency { vertex: u32, reason: String },
}

/// A rotation system: `sigma` rotates darts counterclockwise around their vertex,
/// `theta` pairs the two darts of an edge. Vertices are the orbits of `sigma`,
/// numbered by their smallest dart.
///
/// The map without darts is the circle: no vertices, one edge-less loop, and two
/// regions of gonality 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    sigma: Vec<Dart>,
    theta: Vec<Dart>,
    roles: Vec<Role>,
    vertex_of: Vec<u32>,
    face_of: Vec<u32>,
    faces: Vec<Vec<Dart>>,
}

impl fmt::Debug for CombinatorialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_circle() {
            return f.write_str("CombinatorialMap(circle)");
        }
        f.debug_struct("CombinatorialMap")
            .field("sigma", &self.sigma)
            .field("theta", &self.theta)
            .field("roles", &self.roles)
            .finish()
    }
}

/// A face: its boundary walk (each dart followed by `sigma(theta(dart))`) and the
/// number of corners at black vertices along it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub boundary: Vec<Dart>,
    pub gonality: u32,
}

fn is_permutation(p: &[Dart]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| (x as usize) < p.len() && !std::mem::replace(&mut seen[x as usize], true))
}

fn orbits(n: usize, step: impl Fn(usize) -> usize) -> (Vec<u32>, Vec<Vec<Dart>>) {
    let mut of = vec![u32::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if of[s] != u32::MAX {
            continue;
        }
        let id = out.len() as u32;
        let mut orbit = Vec::new();
        let mut x = s;
        while of[x] == u32::MAX {
            of[x] = id;
            orbit.push(x as Dart);
            x = step(x);
        }
        out.push(orbit);
    }
    (of, out)
}

impl CombinatorialMap {
    /// Checks that `sigma` and `theta` are permutations, `theta` is a fixed-point-free
    /// involution and one role is given per vertex. No connectivity, genus or valency
    /// requirement.
    pub fn from_parts(
        sigma: Vec<Dart>,
        theta: Vec<Dart>,
        roles: Vec<Role>,
    ) -> Result<Self, MapError> {
        let n = sigma.len();
        if theta.len() != n || !is_permutation(&sigma) || !is_permutation(&theta) {
            return Err(MapError::NotPermutation(n));
        }
        for d in 0..n {
            let t = theta[d] as usize;
            if t == d {
                return Err(MapError::FixedPointInPairing(d as Dart));
            }
            if theta[t] as usize != d {
                return Err(MapError::NotInvolution(d as Dart));
            }
        }
        let (vertex_of, vertices) = orbits(n, |d| sigma[d] as usize);
        if roles.len() != vertices.len() {
            return Err(MapError::RoleCount(roles.len(), vertices.len()));
        }
        let (face_of, faces) = orbits(n, |d| sigma[theta[d] as usize] as usize);
        Ok(CombinatorialMap {
            sigma,
            theta,
            roles,
            vertex_of,
            face_of,
            faces,
        })
    }

    pub fn circle() -> Self {
        CombinatorialMap {
            sigma: Vec::new(),
            theta: Vec::new(),
            roles: Vec::new(),
            vertex_of: Vec::new(),
            face_of: Vec::new(),
            faces: Vec::new(),
        }
    }

    pub fn is_circle(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn darts(&self) -> usize {
        self.sigma.len()
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d as usize]
    }

    #[inline]
    pub fn theta(&self, d: Dart) -> Dart {
        self.theta[d as usize]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        let mut x = d;
        while self.sigma(x) != d {
            x = self.sigma(x);
        }
        x
    }

    /// `sigma(theta(d))`: the next dart along the boundary of the face of `d`.
    #[inline]
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma(self.theta(d))
    }

    pub fn sigma_perm(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn theta_perm(&self) -> &[Dart] {
        &self.theta
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn vertex_count(&self) -> usize {
        self.roles.len()
    }

    pub fn edge_count(&self) -> usize {
        if self.is_circle() {
            1
        } else {
            self.darts() / 2
        }
    }

    pub fn face_count(&self) -> usize {
        if self.is_circle() {
            2
        } else {
            self.faces.len()
        }
    }

    #[inline]
    pub fn vertex_of(&self, d: Dart) -> u32 {
        self.vertex_of[d as usize]
    }

    #[inline]
    pub fn face_of(&self, d: Dart) -> u32 {
        self.face_of[d as usize]
    }

    pub fn role_of(&self, d: Dart) -> Role {
        self.roles[self.vertex_of(d) as usize]
    }

    pub fn vertex_darts(&self, v: u32) -> Vec<Dart> {
        let first = (0..self.darts() as Dart)
            .find(|&d| self.vertex_of(d) == v)
            .expect("vertex exists");
        let mut out = vec![first];
        let mut x = self.sigma(first);
        while x != first {
            out.push(x);
            x = self.sigma(x);
        }
        out
    }

    pub fn valency(&self, v: u32) -> usize {
        self.vertex_of.iter().filter(|&&x| x == v).count()
    }

    pub fn face_darts(&self, f: u32) -> &[Dart] {
        &self.faces[f as usize]
    }

    /// Number of black corners on the walk of face `f`.
    pub fn gonality(&self, f: u32) -> u32 {
        self.faces[f as usize]
            .iter()
            .filter(|&&d| self.role_of(self.theta(d)) == Role::Black)
            .count() as u32
    }

    pub fn faces(&self) -> Vec<Region> {
        if self.is_circle() {
            return vec![
                Region {
                    boundary: Vec::new(),
                    gonality: 0,
                },
                Region {
                    boundary: Vec::new(),
                    gonality: 0,
                },
            ];
        }
        (0..self.faces.len() as u32)
            .map(|f| Region {
                boundary: self.faces[f as usize].clone(),
                gonality: self.gonality(f),
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.darts();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0 as Dart];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [self.sigma(d), self.theta(d)] {
                if !seen[e as usize] {
                    seen[e as usize] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == n
    }

    /// `(2 - V + E - F) / 2` for a connected map.
    pub fn genus(&self) -> i64 {
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.face_count() as i64;
        if self.is_circle() {
            return 0;
        }
        (2 - v + e - f) / 2
    }

    /// The same map seen from the other side of the sphere: `(sigma^-1, theta)`.
    pub fn mirror(&self) -> Self {
        if self.is_circle() {
            return self.clone();
        }
        let mut inv = vec![0; self.darts()];
        for (d, &s) in self.sigma.iter().enumerate() {
            inv[s as usize] = d as Dart;
        }
        // vertex orbits are the same sets, so the numbering and roles carry over
        CombinatorialMap::from_parts(inv, self.theta.clone(), self.roles.clone())
            .expect("mirror of a valid map")
    }

    /// Corner conservation: total gonality equals total black valency.
    pub fn corners_conserved(&self) -> bool {
        let regions: u32 = self.faces().iter().map(|r| r.gonality).sum();
        let black: usize = (0..self.vertex_count() as u32)
            .filter(|&v| self.roles[v as usize] == Role::Black)
            .map(|v| self.valency(v))
            .sum();
        regions as usize == black
    }
}

/// Validates a skeleton map: connected, spherical, black valency 1..=3, white vertices
/// monovalent and adjacent to black ones. No darts gives the circle.
pub fn build_map(
    rotation: Vec<Dart>,
    pairing: Vec<Dart>,
    roles: Vec<Role>,
) -> Result<CombinatorialMap, MapError> {
    if rotation.is_empty() && pairing.is_empty() && roles.is_empty() {
        return Ok(CombinatorialMap::circle());
    }
    let m = CombinatorialMap::from_parts(rotation, pairing, roles)?;
    if !m.is_connected() {
        return Err(MapError::Disconnected);
    }
    let g = m.genus();
    if g != 0 {
        return Err(MapError::NonSphericalGenus(g));
    }
    for v in 0..m.vertex_count() as u32 {
        let val = m.valency(v);
        match m.roles[v as usize] {
            Role::Black if val > 3 => {
                return Err(MapError::BadValency {
                    vertex: v,
                    reason: format!("black vertex of valency {val}"),
                })
            }
            Role::White if val != 1 => {
                return Err(MapError::BadValency {
                    vertex: v,
                    reason: format!("white vertex of valency {val}"),
                })
            }
            Role::White => {
                let d = m.vertex_darts(v)[0];
                if m.role_of(m.theta(d)) == Role::White {
                    return Err(MapError::BadValency {
                        vertex: v,
                        reason: "white vertex adjacent to a white vertex".into(),
                    });
                }
            }
            Role::Black => {}
        }
    }
    Ok(m)
}

/// JSON form: `{"darts": n, "sigma": [...], "theta": [...], "roles": ["black", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub darts: usize,
    pub sigma: Vec<Dart>,
    pub theta: Vec<Dart>,
    pub roles: Vec<Role>,
}

impl From<&CombinatorialMap> for MapJson {
    fn from(m: &CombinatorialMap) -> Self {
        MapJson {
            darts: m.darts(),
            sigma: m.sigma.clone(),
            theta: m.theta.clone(),
            roles: m.roles.clone(),
        }
    }
}

impl TryFrom<MapJson> for CombinatorialMap {
    type Error = MapError;
    fn try_from(j: MapJson) -> Result<Self, MapError> {
        if j.sigma.len() != j.darts {
            return Err(MapError::NotPermutation(j.darts));
        }
        build_map(j.sigma, j.theta, j.roles)
    }
}

impl Serialize for CombinatorialMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MapJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CombinatorialMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = MapJson::deserialize(d)?;
        CombinatorialMap::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Two trivalent vertices joined by three edges.
    pub fn theta_graph() -> CombinatorialMap {
        build_map(
            vec![1, 2, 0, 4, 5, 3],
            vec![3, 5, 4, 0, 2, 1],
            vec![Role::Black; 2],
        )
        .unwrap()
    }

    /// Two trivalent vertices, each with a loop, joined by a bridge (darts 0 and 3).
    pub fn dumbbell() -> CombinatorialMap {
        build_map(
            vec![1, 2, 0, 4, 5, 3],
            vec![3, 2, 1, 0, 5, 4],
            vec![Role::Black; 2],
        )
        .unwrap()
    }
}
