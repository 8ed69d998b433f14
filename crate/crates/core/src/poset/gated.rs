use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use super::GradedPoset;
use crate::error::{Error, Result};

/// Default vertex cap for the exhaustive Boolean-gated enumeration.
pub const GATED_VERTEX_CAP: usize = 20;

/// Poset of Boolean-gated sets of a graph under reverse inclusion, so that
/// singletons are maximal.
///
/// A nonempty set `X` is Boolean-gated when every common neighbor of two
/// distinct members lies in `X`, and every pair of members at distance two
/// has two common neighbors at distance two from each other.
pub fn boolean_gated_sets<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<GradedPoset> {
    boolean_gated_sets_capped(vertices, edges, GATED_VERTEX_CAP)
}

pub fn boolean_gated_sets_capped<S: AsRef<str>>(
    vertices: &[S],
    edges: &[(S, S)],
    cap: usize,
) -> Result<GradedPoset> {
    let n = vertices.len();
    if n > cap {
        return Err(Error::SizeCap {
            what: "graph vertices for Boolean-gated sets",
            cap,
        });
    }
    let names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
    let index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    if index.len() != n {
        return Err(Error::InvalidInput("duplicate vertex".into()));
    }
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (a, b) in edges {
        let (a, b) = (a.as_ref(), b.as_ref());
        let u = *index
            .get(a)
            .ok_or_else(|| Error::UnknownElement(a.into()))?;
        let v = *index
            .get(b)
            .ok_or_else(|| Error::UnknownElement(b.into()))?;
        if u != v {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    let dist = all_distances(&adj);

    let common = |x: usize, y: usize| {
        let mut c = adj[x].clone();
        c.intersect_with(&adj[y]);
        c
    };
    let closed = |set: &[usize], mask: u64| {
        set.iter().enumerate().all(|(i, &x)| {
            set[i + 1..]
                .iter()
                .all(|&y| common(x, y).ones().all(|w| mask & (1 << w) != 0))
        })
    };
    let squares = |set: &[usize]| {
        set.iter().enumerate().all(|(i, &x)| {
            set[i + 1..].iter().all(|&y| {
                if dist[x][y] != Some(2) {
                    return true;
                }
                let c: Vec<usize> = common(x, y).ones().collect();
                c.iter()
                    .enumerate()
                    .any(|(k, &u)| c[k + 1..].iter().any(|&v| dist[u][v] == Some(2)))
            })
        })
    };

    let mut sets: Vec<u64> = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if closed(&members, mask) && squares(&members) {
            sets.push(mask);
        }
    }
    // larger sets sit lower in the poset
    sets.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    let label = |m: u64| {
        let parts: Vec<&str> = (0..n)
            .filter(|&v| m & (1 << v) != 0)
            .map(|v| names[v].as_str())
            .collect();
        format!("{{{}}}", parts.join(","))
    };
    let sub = |a: u64, b: u64| a & b == a;
    let mut covers = Vec::new();
    for (i, &big) in sets.iter().enumerate() {
        for (j, &small) in sets.iter().enumerate() {
            if i == j || !sub(small, big) || small == big {
                continue;
            }
            let between = sets
                .iter()
                .any(|&w| w != big && w != small && sub(small, w) && sub(w, big));
            if !between {
                covers.push((i, j));
            }
        }
    }
    GradedPoset::from_covers(sets.iter().map(|&m| label(m)).collect(), &covers)
}

fn all_distances(adj: &[FixedBitSet]) -> Vec<Vec<Option<usize>>> {
    let n = adj.len();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in adj[u].ones() {
                    if d[v].is_none() {
                        d[v] = Some(d[u].unwrap() + 1);
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(p: &GradedPoset) -> Vec<String> {
        let mut v = p.names().to_vec();
        v.sort();
        v
    }

    #[test]
    fn triangle() {
        let p =
            boolean_gated_sets(&["x", "y", "z"], &[("x", "y"), ("y", "z"), ("x", "z")]).unwrap();
        assert_eq!(names(&p), vec!["{x,y,z}", "{x}", "{y}", "{z}"]);
        let top = p.index_of("{x,y,z}").unwrap();
        assert_eq!(p.rank(top), 0);
        assert_eq!(p.rank(p.index_of("{x}").unwrap()), 1);
    }

    #[test]
    fn path_of_three() {
        let p = boolean_gated_sets(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(names(&p), vec!["{a,b}", "{a}", "{b,c}", "{b}", "{c}"]);
    }

    #[test]
    fn square_cycle_is_a_cube() {
        let p = boolean_gated_sets(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")],
        )
        .unwrap();
        // whole square, four edges, four vertices
        assert_eq!(p.len(), 9);
        assert_eq!(p.max_rank(), 2);
    }

    #[test]
    fn single_vertex_and_cap() {
        let p = boolean_gated_sets::<&str>(&["v"], &[]).unwrap();
        assert_eq!(p.names(), &["{v}"]);
        let many: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let err = boolean_gated_sets_capped(&many, &[], 4).unwrap_err();
        assert!(matches!(err, Error::SizeCap { .. }));
    }
}
