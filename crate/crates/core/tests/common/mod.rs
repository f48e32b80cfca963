//! Oracles shared by the integration tests. None of them calls the code it checks.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use sextic_core::cmap::{build_map, CombinatorialMap, Dart, Role};

/// Whether a dart bijection `a -> b` commuting with `sigma` and `theta` and keeping
/// vertex roles exists, by backtracking over all images dart by dart.
pub fn isomorphic_brute_force(a: &CombinatorialMap, b: &CombinatorialMap) -> bool {
    let n = a.darts();
    if n != b.darts() || a.vertex_count() != b.vertex_count() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mut img = vec![u32::MAX; n];
    let mut used = vec![false; n];
    fn consistent(a: &CombinatorialMap, b: &CombinatorialMap, img: &[u32], d: usize) -> bool {
        let e = img[d];
        if a.role_of(d as Dart) != b.role_of(e) {
            return false;
        }
        let checks = [
            (a.sigma(d as Dart), b.sigma(e)),
            (a.theta(d as Dart), b.theta(e)),
            (a.sigma_inv(d as Dart), b.sigma_inv(e)),
        ];
        checks
            .iter()
            .all(|&(x, y)| img[x as usize] == u32::MAX || img[x as usize] == y)
            && (0..img.len()).all(|c| {
                img[c] == u32::MAX
                    || (a.sigma(c as Dart) as usize != d || b.sigma(img[c]) == e)
                        && (a.theta(c as Dart) as usize != d || b.theta(img[c]) == e)
            })
    }
    fn go(
        a: &CombinatorialMap,
        b: &CombinatorialMap,
        img: &mut [u32],
        used: &mut [bool],
        d: usize,
    ) -> bool {
        if d == img.len() {
            return true;
        }
        for e in 0..img.len() {
            if used[e] {
                continue;
            }
            img[d] = e as u32;
            used[e] = true;
            if consistent(a, b, img, d) && go(a, b, img, used, d + 1) {
                return true;
            }
            img[d] = u32::MAX;
            used[e] = false;
        }
        false
    }
    go(a, b, &mut img, &mut used, 0)
}

/// The same map with dart `d` renamed `p[d]`.
pub fn relabel(m: &CombinatorialMap, p: &[Dart]) -> CombinatorialMap {
    let n = m.darts();
    let mut sigma = vec![0; n];
    let mut theta = vec![0; n];
    let mut inv = vec![0; n];
    for d in 0..n {
        sigma[p[d] as usize] = p[m.sigma(d as Dart) as usize];
        theta[p[d] as usize] = p[m.theta(d as Dart) as usize];
        inv[p[d] as usize] = d as Dart;
    }
    with_roles(sigma, theta, |d| m.role_of(inv[d as usize]))
}

/// Builds a map, assigning each vertex the role of any of its darts.
pub fn with_roles(
    sigma: Vec<Dart>,
    theta: Vec<Dart>,
    role: impl Fn(Dart) -> Role,
) -> CombinatorialMap {
    let draft = CombinatorialMap::from_parts(
        sigma.clone(),
        theta.clone(),
        vec![Role::Black; vertex_orbits(&sigma)],
    )
    .expect("valid permutations");
    let roles = (0..draft.vertex_count() as u32)
        .map(|v| role(draft.vertex_darts(v)[0]))
        .collect();
    CombinatorialMap::from_parts(sigma, theta, roles).expect("valid permutations")
}

fn vertex_orbits(sigma: &[Dart]) -> usize {
    let mut seen = vec![false; sigma.len()];
    let mut count = 0;
    for s in 0..sigma.len() {
        if !seen[s] {
            count += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = sigma[d] as usize;
            }
        }
    }
    count
}

/// A random spherical skeleton with at most `max_darts` darts: black vertices of
/// valency 1 to 3 and monovalent white vertices. Retries until the pairing gives a
/// connected planar map.
pub fn random_skeleton(rng: &mut impl Rng, max_darts: usize) -> CombinatorialMap {
    loop {
        let mut valencies: Vec<(usize, Role)> = Vec::new();
        let mut total = 0;
        let target = rng.gen_range(2..=max_darts);
        while total < target {
            let (v, r) = if rng.gen_bool(0.25) {
                (1, Role::White)
            } else {
                (rng.gen_range(1..=3), Role::Black)
            };
            if total + v > max_darts {
                break;
            }
            valencies.push((v, r));
            total += v;
        }
        if total % 2 == 1 || total == 0 {
            continue;
        }
        let mut sigma = vec![0; total];
        let mut owner = vec![Role::Black; total];
        let mut d = 0;
        for &(v, r) in &valencies {
            for k in 0..v {
                sigma[d + k] = (d + (k + 1) % v) as Dart;
                owner[d + k] = r;
            }
            d += v;
        }
        let mut darts: Vec<Dart> = (0..total as Dart).collect();
        darts.shuffle(rng);
        let mut theta = vec![0; total];
        let mut ok = true;
        for pair in darts.chunks(2) {
            if owner[pair[0] as usize] == Role::White && owner[pair[1] as usize] == Role::White {
                ok = false;
            }
            theta[pair[0] as usize] = pair[1];
            theta[pair[1] as usize] = pair[0];
        }
        if !ok {
            continue;
        }
        let m = with_roles(sigma, theta, |d| owner[d as usize]);
        if let Ok(m) = build_map(
            m.sigma_perm().to_vec(),
            m.theta_perm().to_vec(),
            m.roles().to_vec(),
        ) {
            return m;
        }
    }
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<Dart> {
    let mut p: Vec<Dart> = (0..n as Dart).collect();
    p.shuffle(rng);
    p
}

/// Order of the abelianization of a presentation on three generators from its
/// exponent-sum matrix: the gcd of the 3x3 minors, or `None` when it is infinite.
pub fn abelianization_order_by_minors(rows: &[Vec<i64>]) -> Option<u64> {
    let det = |a: &[i64], b: &[i64], c: &[i64]| {
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
    };
    let mut g = 0i64;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            for k in j + 1..rows.len() {
                g = gcd(g, det(&rows[i], &rows[j], &rows[k]).abs());
            }
        }
    }
    (g != 0).then_some(g as u64)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Singularity sets obtained from the E8 diagram by deleting one vertex, read off
/// component sizes and branch arms directly. Vertices: chain 0-1-2-3-4-5-6 and
/// vertex 7 attached at 2.
pub fn e8_minus_one_vertex() -> Vec<String> {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)];
    let mut out = Vec::new();
    for removed in 0..8 {
        let alive: Vec<usize> = (0..8).filter(|&v| v != removed).collect();
        let mut comp = [usize::MAX; 8];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for &s in &alive {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &(a, b) in &edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == v && y != removed && comp[y] == usize::MAX {
                            comp[y] = id;
                            stack.push(y);
                        }
                    }
                }
            }
            parts.push(members);
        }
        let mut names: Vec<(u8, usize)> = parts
            .iter()
            .map(|p| {
                let n = p.len();
                if !p.contains(&2) || !p.contains(&7) || !p.contains(&1) || !p.contains(&3) {
                    return (0, n);
                }
                // arms from the branch vertex 2: towards 0, towards 6, and 7
                let left = [1, 0].iter().take_while(|v| p.contains(v)).count();
                let right = [3, 4, 5, 6].iter().take_while(|v| p.contains(v)).count();
                if left == 1 || right == 1 {
                    (1, n)
                } else {
                    (2, n)
                }
            })
            .collect();
        names.sort_by(|a, b| b.cmp(a));
        let mut text: Vec<String> = Vec::new();
        let mut i = 0;
        while i < names.len() {
            let j = names[i..].iter().take_while(|&&x| x == names[i]).count();
            let letter = ["A", "D", "E"][names[i].0 as usize];
            let k = if j > 1 { j.to_string() } else { String::new() };
            text.push(format!("{k}{letter}{}", names[i].1));
            i += j;
        }
        out.push(text.join("+"));
    }
    out.sort();
    out.dedup();
    out
}

/// Total Milnor number of a set written as `E8+2A2+D5`.
pub fn milnor(set: &str) -> u32 {
    set.split('+')
        .map(|term| {
            let pos = term.find(['A', 'D', 'E']).expect("type letter");
            let mult: u32 = if pos == 0 {
                1
            } else {
                term[..pos].parse().unwrap()
            };
            mult * term[pos + 1..].parse::<u32>().unwrap()
        })
        .sum()
}
