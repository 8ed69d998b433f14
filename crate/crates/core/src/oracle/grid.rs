use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::limits::size_cap;
use crate::metric::{phi, ChainPoint};
use crate::poset::GradedPoset;
use crate::rational::to_f64;

/// All maximal chains, from minimal to maximal elements.
pub fn maximal_chains(poset: &GradedPoset, cap: usize) -> Result<Vec<Vec<usize>>> {
    fn walk(
        poset: &GradedPoset,
        chain: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let top = *chain.last().unwrap();
        let ups = poset.upper_covers(top);
        if ups.is_empty() {
            if out.len() >= cap {
                return Err(Error::SizeCap {
                    what: "maximal chains",
                    cap,
                });
            }
            out.push(chain.clone());
            return Ok(());
        }
        for &u in ups {
            chain.push(u);
            walk(poset, chain, out, cap)?;
            chain.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    for m in poset.minimal_elements() {
        walk(poset, &mut vec![m], &mut out, cap)?;
    }
    Ok(out)
}

/// Nonincreasing sequences `n ≥ k_1 ≥ ... ≥ k_r ≥ 0`.
fn staircases(r: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(r: usize, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for k in 0..=hi {
            cur.push(k);
            rec(r, k, cur, out);
            cur.pop();
        }
    }
    rec(r, n, &mut cur, &mut out);
    out
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[derive(Clone, Copy, PartialEq)]
struct Item(f64, usize);

impl Eq for Item {}

impl Ord for Item {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Upper bound on `d(x, y)`: the shortest path through the grid of step
/// `1/n` in `φ` coordinates of every maximal simplex, with all node pairs of
/// a simplex joined by straight chords. `x` and `y` are extra nodes of every
/// maximal simplex containing them.
pub fn oracle_distance(poset: &GradedPoset, x: &ChainPoint, y: &ChainPoint, n: u32) -> Result<f64> {
    oracle_distance_capped(poset, x, y, n, size_cap())
}

pub fn oracle_distance_capped(
    poset: &GradedPoset,
    x: &ChainPoint,
    y: &ChainPoint,
    n: u32,
    cap: usize,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidInput("refinement must be positive".into()));
    }
    x.check(poset)?;
    y.check(poset)?;
    let chains = maximal_chains(poset, cap)?;
    let mut nodes_total: u64 = 0;
    let mut work: u64 = 0;
    for ch in &chains {
        let r = (ch.len() - 1) as u64;
        let k = binom(n as u64 + r, r);
        nodes_total = nodes_total.saturating_add(k);
        work = work.saturating_add(k.saturating_mul(k));
    }
    if nodes_total > cap as u64 {
        return Err(Error::SizeCap {
            what: "grid nodes",
            cap,
        });
    }
    if work > (cap as u64).saturating_mul(100) {
        return Err(Error::SizeCap {
            what: "grid edges",
            cap: cap.saturating_mul(100),
        });
    }

    // node 0 is x, node 1 is y
    let mut ids: HashMap<Vec<(usize, u32)>, usize> = HashMap::new();
    let mut member: Vec<Vec<(usize, usize)>> = vec![Vec::new(), Vec::new()];
    let mut simplices: Vec<(Vec<usize>, Vec<Vec<f64>>)> = Vec::with_capacity(chains.len());
    let nf = n as f64;
    for (s, ch) in chains.iter().enumerate() {
        let r = ch.len() - 1;
        let mut local_nodes = Vec::new();
        let mut local_phi = Vec::new();
        for ks in staircases(r, n) {
            // λ_0 = n - k_1, λ_i = k_i - k_{i+1}, λ_r = k_r
            let mut key = Vec::new();
            let mut prev = n;
            for (i, &k) in ks.iter().enumerate() {
                if prev > k {
                    key.push((ch[i], prev - k));
                }
                prev = k;
            }
            if prev > 0 {
                key.push((ch[r], prev));
            }
            key.sort_unstable();
            let next = member.len();
            let id = *ids.entry(key).or_insert(next);
            if id == next {
                member.push(Vec::new());
            }
            member[id].push((s, local_nodes.len()));
            local_nodes.push(id);
            local_phi.push(ks.iter().map(|&k| k as f64 / nf).collect());
        }
        for (node, p) in [(0usize, x), (1, y)] {
            if let Ok(coords) = phi(ch, p) {
                member[node].push((s, local_nodes.len()));
                local_nodes.push(node);
                local_phi.push(coords.iter().map(to_f64).collect());
            }
        }
        simplices.push((local_nodes, local_phi));
    }

    let mut dist = vec![f64::INFINITY; member.len()];
    let mut heap = BinaryHeap::new();
    dist[0] = 0.0;
    heap.push(Item(0.0, 0));
    while let Some(Item(d, u)) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        if u == 1 {
            return Ok(d);
        }
        for &(s, li) in &member[u] {
            let (nodes, phis) = &simplices[s];
            let pu = &phis[li];
            for (lj, &v) in nodes.iter().enumerate() {
                let w: f64 = pu
                    .iter()
                    .zip(&phis[lj])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                let nd = d + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    heap.push(Item(nd, v));
                }
            }
        }
    }
    Err(Error::InvalidInput(
        "the points lie in different components".into(),
    ))
}
