//! Induced subgraphs of Dynkin diagrams, i.e. the types of perturbations of a simple
//! singularity.

use thiserror::Error;

use super::singularity::{Ade, SingularitySet};

/// Largest diagram handled by subset enumeration.
pub const MAX_RANK: u32 = 20;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DynkinError {
    #[error("unsupported diagram {0}")]
    UnsupportedDiagram(String),
    #[error("budget {budget} exceeds the rank of {diagram}")]
    BudgetTooLarge { diagram: String, budget: u32 },
}

/// Edges of the diagram on vertices `0..rank`.
fn diagram(t: Ade) -> Result<(u32, Vec<(u32, u32)>), DynkinError> {
    let unsupported = || DynkinError::UnsupportedDiagram(t.to_string());
    let k = t.milnor();
    if k == 0 || k > MAX_RANK {
        return Err(unsupported());
    }
    let chain = |n: u32| (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
    Ok(match t {
        Ade::A(n) => (n, chain(n)),
        Ade::D(n) if n >= 4 => {
            // chain 0..n-2 with the extra vertex n-1 attached at n-3
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (n, e)
        }
        Ade::E(n) if (6..=8).contains(&n) => {
            // chain 0..n-1 with the extra vertex n-1 attached at 2
            let mut e = chain(n - 1);
            e.push((2, n - 1));
            (n, e)
        }
        _ => return Err(unsupported()),
    })
}

/// Type of a connected Dynkin subgraph given by its vertices and the diagram edges.
fn component_type(verts: &[u32], edges: &[(u32, u32)]) -> Ade {
    let n = verts.len() as u32;
    let deg = |v: u32| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    let Some(&branch) = verts.iter().find(|&&v| deg(v) == 3) else {
        return Ade::A(n);
    };
    let mut arms: Vec<u32> = edges
        .iter()
        .filter_map(|&(a, b)| match (a == branch, b == branch) {
            (true, _) => Some(b),
            (_, true) => Some(a),
            _ => None,
        })
        .map(|start| {
            let (mut prev, mut cur, mut len) = (branch, start, 1);
            loop {
                let next = edges.iter().find_map(|&(a, b)| {
                    if a == cur && b != prev {
                        Some(b)
                    } else if b == cur && a != prev {
                        Some(a)
                    } else {
                        None
                    }
                });
                match next {
                    Some(x) => {
                        prev = cur;
                        cur = x;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Ade::D(n),
        _ => Ade::E(n),
    }
}

/// All singularity sets realized by induced subgraphs with `budget` vertices of the
/// Dynkin diagram of `t`, in canonical order. `D2` and `D3` appear as `2A1`, `A3`.
pub fn dynkin_induced(t: Ade, budget: u32) -> Result<Vec<SingularitySet>, DynkinError> {
    let (rank, edges) = diagram(t)?;
    if budget > rank {
        return Err(DynkinError::BudgetTooLarge {
            diagram: t.to_string(),
            budget,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << rank {
        if mask.count_ones() != budget {
            continue;
        }
        let inside = |v: u32| mask >> v & 1 == 1;
        let sub: Vec<(u32, u32)> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| inside(a) && inside(b))
            .collect();
        let mut seen = 0u32;
        let mut set = SingularitySet::new();
        for s in 0..rank {
            if !inside(s) || seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = vec![s];
            seen |= 1 << s;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &(a, b) in &sub {
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if seen >> w & 1 == 0 {
                        seen |= 1 << w;
                        comp.push(w);
                    }
                }
            }
            let ce: Vec<(u32, u32)> = sub
                .iter()
                .copied()
                .filter(|&(a, _)| comp.contains(&a))
                .collect();
            set.add(component_type(&comp, &ce));
        }
        out.push(set);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: Vec<SingularitySet>) -> Vec<String> {
        let mut s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        s.sort();
        s
    }

    #[test]
    fn small_diagrams() {
        assert_eq!(names(dynkin_induced(Ade::A(3), 2).unwrap()), ["2A1", "A2"]);
        assert_eq!(
            names(dynkin_induced(Ade::D(6), 5).unwrap()),
            ["A3+2A1", "A3+A2", "A5", "D4+A1", "D5"]
        );
        assert_eq!(
            names(dynkin_induced(Ade::E(8), 7).unwrap()),
            ["A4+A2+A1", "A4+A3", "A6+A1", "A7", "D5+A2", "D7", "E6+A1", "E7"]
        );
        assert_eq!(names(dynkin_induced(Ade::E(6), 6).unwrap()), ["E6"]);
    }

    #[test]
    fn rejects_unsupported() {
        assert!(dynkin_induced(Ade::E(9), 3).is_err());
        assert!(dynkin_induced(Ade::A(30), 3).is_err());
        assert!(dynkin_induced(Ade::A(3), 4).is_err());
    }
}
