use std::collections::VecDeque;

use super::GradedPoset;
use crate::error::Result;

/// The metric interval `I(p, q)` together with the two ω retractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricInterval {
    pub p: usize,
    pub q: usize,
    pub meet: usize,
    /// Elements `b ∨ c` with `b ∈ [p∧q, p]`, `c ∈ [p∧q, q]`, in rank order.
    pub elements: Vec<usize>,
    /// `ω_q(p)`: the largest element below `p` that has a join with `q`.
    pub omega_q_p: usize,
    /// `ω_p(q)`.
    pub omega_p_q: usize,
}

impl GradedPoset {
    /// `I(p, q)` of a modular semilattice, built from joins of the two
    /// lower intervals.
    pub fn metric_interval(&self, p: usize, q: usize) -> Result<MetricInterval> {
        self.require_modular_semilattice()?;
        Ok(self.metric_interval_unchecked(p, q))
    }

    pub(crate) fn metric_interval_unchecked(&self, p: usize, q: usize) -> MetricInterval {
        let m = self.meet(p, q).expect("meet exists in a semilattice");
        let left = self.interval(m, p);
        let right = self.interval(m, q);
        let mut elements = Vec::new();
        for &b in &left {
            for &c in &right {
                if let Some(j) = self.join(b, c) {
                    elements.push(j);
                }
            }
        }
        MetricInterval {
            p,
            q,
            meet: m,
            elements: self.sorted_by_rank(elements),
            omega_q_p: self.omega(q, p),
            omega_p_q: self.omega(p, q),
        }
    }

    /// `ω_a(p)`: scans the principal ideal of `p` for the maximum element
    /// having a join with `a`.
    pub fn omega(&self, a: usize, p: usize) -> usize {
        let mut best: Option<usize> = None;
        for u in self.downset(p).ones() {
            if self.join(u, a).is_some() && best.is_none_or(|b| self.rank(u) > self.rank(b)) {
                best = Some(u);
            }
        }
        let best = best.expect("the minimum joins with everything below a common bound");
        debug_assert!(self
            .downset(p)
            .ones()
            .filter(|&u| self.join(u, a).is_some())
            .all(|u| self.leq(u, best)));
        best
    }

    /// Membership in `J(a)`: elements having a join with `a`.
    pub fn joins_with(&self, a: usize, u: usize) -> bool {
        self.join(a, u).is_some()
    }
}

/// Breadth-first distances from `src` in the undirected covering graph.
pub fn covering_distances(poset: &GradedPoset, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; poset.len()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in poset.upper_covers(u).iter().chain(poset.lower_covers(u)) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// `{u : d(p,u) + d(u,q) = d(p,q)}` for the covering-graph metric.
pub fn interval_by_distance(poset: &GradedPoset, p: usize, q: usize) -> Vec<usize> {
    let dp = covering_distances(poset, p);
    let dq = covering_distances(poset, q);
    let Some(total) = dp[q] else {
        return Vec::new();
    };
    (0..poset.len())
        .filter(|&u| matches!((dp[u], dq[u]), (Some(a), Some(b)) if a + b == total))
        .collect()
}
