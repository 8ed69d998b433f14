use std::collections::VecDeque;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_q, Q};

/// Arc capacity: an exact rational or the infinity sentinel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Capacity {
    Finite(Q),
    Infinite,
}

impl Capacity {
    fn positive(&self) -> bool {
        match self {
            Capacity::Finite(c) => c.is_positive(),
            Capacity::Infinite => true,
        }
    }

    fn sub(&mut self, d: &Q) {
        if let Capacity::Finite(c) = self {
            *c -= d;
        }
    }

    fn add(&mut self, d: &Q) {
        if let Capacity::Finite(c) = self {
            *c += d;
        }
    }
}

#[derive(Clone, Debug)]
struct Arc {
    from: usize,
    to: usize,
    cap: Capacity,
}

/// Directed network with a source and a sink. Parallel arcs are rejected.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: Q,
    /// Source side of the minimum cut closest to the source, sorted.
    pub source_side: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes || source == sink {
            return Err(Error::InvalidNetwork(
                "source and sink must be distinct nodes".into(),
            ));
        }
        Ok(Self {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        })
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: Capacity) -> Result<()> {
        if from >= self.nodes || to >= self.nodes {
            return Err(Error::InvalidNetwork(format!(
                "arc {from}->{to} out of range"
            )));
        }
        if from == to {
            return Err(Error::InvalidNetwork(format!("loop at node {from}")));
        }
        if let Capacity::Finite(c) = &cap {
            if c.is_negative() {
                return Err(Error::InvalidNetwork(format!(
                    "negative capacity on {from}->{to}"
                )));
            }
        }
        if self.arcs.iter().any(|a| a.from == from && a.to == to) {
            return Err(Error::InvalidNetwork(format!("parallel arc {from}->{to}")));
        }
        self.arcs.push(Arc { from, to, cap });
        Ok(())
    }

    /// Shortest-augmenting-path max flow in exact arithmetic.
    pub fn max_flow(&self) -> Result<MaxFlow> {
        // residual graph: arc 2k is forward, 2k+1 its reverse
        let mut res: Vec<(usize, Capacity)> = Vec::with_capacity(2 * self.arcs.len());
        let mut adj = vec![Vec::new(); self.nodes];
        for a in &self.arcs {
            adj[a.from].push(res.len());
            res.push((a.to, a.cap.clone()));
            adj[a.to].push(res.len());
            res.push((a.from, Capacity::Finite(Q::zero())));
        }
        let mut value = Q::zero();
        loop {
            let mut via: Vec<Option<usize>> = vec![None; self.nodes];
            let mut seen = vec![false; self.nodes];
            seen[self.source] = true;
            let mut queue = VecDeque::from([self.source]);
            while let Some(u) = queue.pop_front() {
                if u == self.sink {
                    break;
                }
                for &e in &adj[u] {
                    let (v, cap) = &res[e];
                    if !seen[*v] && cap.positive() {
                        seen[*v] = true;
                        via[*v] = Some(e);
                        queue.push_back(*v);
                    }
                }
            }
            if !seen[self.sink] {
                let source_side = (0..self.nodes).filter(|&v| seen[v]).collect();
                return Ok(MaxFlow { value, source_side });
            }
            let mut bottleneck: Option<Q> = None;
            let mut v = self.sink;
            while let Some(e) = via[v] {
                if let Capacity::Finite(c) = &res[e].1 {
                    if bottleneck.as_ref().is_none_or(|b| c < b) {
                        bottleneck = Some(c.clone());
                    }
                }
                v = res[e ^ 1].0;
            }
            let delta = bottleneck.ok_or(Error::InfiniteFlow)?;
            let mut v = self.sink;
            while let Some(e) = via[v] {
                res[e].1.sub(&delta);
                res[e ^ 1].1.add(&delta);
                v = res[e ^ 1].0;
            }
            value += delta;
        }
    }

    /// DIMACS-style dump: `p max N M`, `n s s`, `n t t`, then `a u v cap`
    /// lines with 1-based nodes and `inf` for infinite arcs.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p max {} {}", self.nodes, self.arcs.len());
        let _ = writeln!(out, "n {} s", self.source + 1);
        let _ = writeln!(out, "n {} t", self.sink + 1);
        for a in &self.arcs {
            let cap = match &a.cap {
                Capacity::Finite(c) => format_q(c),
                Capacity::Infinite => "inf".to_string(),
            };
            let _ = writeln!(out, "a {} {} {}", a.from + 1, a.to + 1, cap);
        }
        out
    }
}
