//! Graded posets with bitset reachability, plus the structures derived from
//! them: classification, PIPs and stable ideals, metric intervals and
//! Boolean-gated sets.

mod classify;
mod gated;
mod interval;
mod pip;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use classify::Classification;
pub use gated::boolean_gated_sets;
pub use interval::{covering_distances, interval_by_distance, MetricInterval};
pub use pip::{Birkhoff, IdealLattice, Pip};

/// A finite graded poset given by its Hasse diagram.
///
/// Elements are addressed by dense indices; the opaque string ids are kept
/// for I/O. Order queries go through per-element down-set and up-set bitsets.
#[derive(Clone)]
pub struct GradedPoset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    rank: Vec<usize>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    flags: OnceLock<Classification>,
}

impl fmt::Debug for GradedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedPoset")
            .field("elements", &self.names)
            .field("rank", &self.rank)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryOp {
    Meet,
    Join,
    Rank,
    Leq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QueryAnswer {
    Element(Option<String>),
    Rank(usize),
    Bool(bool),
}

impl GradedPoset {
    /// Builds and validates a poset from ids and cover pairs `(lower, upper)`.
    pub fn new<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self> {
        let mut index = HashMap::with_capacity(elements.len());
        let mut names = Vec::with_capacity(elements.len());
        for e in elements {
            let e = e.as_ref();
            if index.insert(e.to_string(), names.len()).is_some() {
                return Err(Error::DuplicateElement(e.to_string()));
            }
            names.push(e.to_string());
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_covers(names, &pairs)
    }

    /// Builds a poset from names and index cover pairs.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, s) in names.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateElement(s.clone()));
            }
        }
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(Error::CycleError(names[a].clone()));
            }
            if !upper[a].contains(&b) {
                upper[a].push(b);
                lower[b].push(a);
            }
        }
        for v in lower.iter_mut().chain(upper.iter_mut()) {
            v.sort_unstable();
        }

        // Kahn's algorithm doubles as cycle detection.
        let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(u) = queue.pop_front() {
            topo.push(u);
            for &v in &upper[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::CycleError(names[stuck].clone()));
        }

        let rank = grade(&names, &lower, &upper)?;

        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &u in &topo {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(u);
            for &l in &lower[u] {
                set.union_with(&down[l]);
            }
            down[u] = set;
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &u in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(u);
            for &h in &upper[u] {
                set.union_with(&up[h]);
            }
            up[u] = set;
        }

        Ok(Self {
            names,
            index,
            lower,
            upper,
            rank,
            down,
            up,
            flags: OnceLock::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn max_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.upper
            .iter()
            .enumerate()
            .flat_map(|(a, ups)| ups.iter().map(move |&b| (a, b)))
    }

    /// Principal ideal of `i`, including `i`.
    pub fn downset(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    /// Principal filter of `i`, including `i`.
    pub fn upset(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    /// Greatest element of a set, if the set has one.
    fn greatest_in(&self, set: &FixedBitSet) -> Option<usize> {
        let cand = set
            .ones()
            .max_by_key(|&u| (self.rank[u], std::cmp::Reverse(u)))?;
        set.is_subset(&self.down[cand]).then_some(cand)
    }

    fn least_in(&self, set: &FixedBitSet) -> Option<usize> {
        let cand = set.ones().min_by_key(|&u| (self.rank[u], u))?;
        set.is_subset(&self.up[cand]).then_some(cand)
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        if self.leq(a, b) {
            return Some(a);
        }
        if self.leq(b, a) {
            return Some(b);
        }
        let common = intersect(&self.down[a], &self.down[b]);
        self.greatest_in(&common)
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        if self.leq(a, b) {
            return Some(b);
        }
        if self.leq(b, a) {
            return Some(a);
        }
        let common = intersect(&self.up[a], &self.up[b]);
        self.least_in(&common)
    }

    /// Join of a finite set by iterated pairwise joins; `None` for an empty
    /// set without a minimum or when some partial join fails.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> Option<usize> {
        let mut it = items.into_iter();
        let first = match it.next() {
            Some(f) => f,
            None => return self.bottom(),
        };
        it.try_fold(first, |acc, u| self.join(acc, u))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> Option<usize> {
        let mut it = items.into_iter();
        let first = it.next()?;
        it.try_fold(first, |acc, u| self.meet(acc, u))
    }

    /// The minimum element, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        let mins: Vec<usize> = (0..self.len())
            .filter(|&i| self.lower[i].is_empty())
            .collect();
        match mins.as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        let maxs: Vec<usize> = (0..self.len())
            .filter(|&i| self.upper[i].is_empty())
            .collect();
        match maxs.as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.lower[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper[i].is_empty())
            .collect()
    }

    /// `[lo, hi]` sorted by rank, then index.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        let set = intersect(&self.up[lo], &self.down[hi]);
        self.sorted_by_rank(set.ones())
    }

    pub fn sorted_by_rank<I: IntoIterator<Item = usize>>(&self, items: I) -> Vec<usize> {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable_by_key(|&u| (self.rank[u], u));
        v.dedup();
        v
    }

    /// Elements in nondecreasing rank order.
    pub fn rank_order(&self) -> Vec<usize> {
        self.sorted_by_rank(0..self.len())
    }

    /// True when the elements are pairwise comparable.
    pub fn is_chain(&self, items: &[usize]) -> bool {
        items
            .iter()
            .enumerate()
            .all(|(k, &a)| items[k + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    /// Name-level query front end.
    pub fn query(&self, op: QueryOp, p: &str, q: &str) -> Result<QueryAnswer> {
        let a = self.index_of(p)?;
        let b = self.index_of(q)?;
        let name = |o: Option<usize>| o.map(|i| self.names[i].clone());
        Ok(match op {
            QueryOp::Meet => QueryAnswer::Element(name(self.meet(a, b))),
            QueryOp::Join => QueryAnswer::Element(name(self.join(a, b))),
            QueryOp::Rank => QueryAnswer::Rank(self.rank[a]),
            QueryOp::Leq => QueryAnswer::Bool(self.leq(a, b)),
        })
    }

    /// The subposet induced on `items`, with covers recomputed. Returns the
    /// subposet and the map from its indices back to `self`.
    pub fn induced(&self, items: &[usize]) -> Result<(GradedPoset, Vec<usize>)> {
        let items = self.sorted_by_rank(items.iter().copied());
        let pos: HashMap<usize, usize> = items.iter().enumerate().map(|(k, &u)| (u, k)).collect();
        let mut covers = Vec::new();
        for &a in &items {
            for &b in &items {
                if !self.lt(a, b) {
                    continue;
                }
                let between = items
                    .iter()
                    .any(|&w| w != a && w != b && self.lt(a, w) && self.lt(w, b));
                if !between {
                    covers.push((pos[&a], pos[&b]));
                }
            }
        }
        let names = items.iter().map(|&u| self.names[u].clone()).collect();
        Ok((GradedPoset::from_covers(names, &covers)?, items))
    }

    /// Classification flags, computed once.
    pub fn classification(&self) -> &Classification {
        self.flags.get_or_init(|| classify::classify(self))
    }

    pub fn require_modular_semilattice(&self) -> Result<()> {
        if self.classification().modular_semilattice {
            Ok(())
        } else {
            Err(Error::NotModularSemilattice(
                "principal ideals must be modular lattices and (LFL) must hold".into(),
            ))
        }
    }
}

pub(crate) fn intersect(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.intersect_with(b);
    s
}

/// Assigns ranks by propagating potentials over the undirected cover graph;
/// each connected component is shifted so its minimum rank is zero.
fn grade(names: &[String], lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = names.len();
    let mut pot: Vec<Option<i64>> = vec![None; n];
    let mut rank = vec![0usize; n];
    for start in 0..n {
        if pot[start].is_some() {
            continue;
        }
        pot[start] = Some(0);
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let pu = pot[u].unwrap();
            let nbrs = upper[u]
                .iter()
                .map(|&v| (v, pu + 1))
                .chain(lower[u].iter().map(|&v| (v, pu - 1)));
            for (v, want) in nbrs {
                match pot[v] {
                    None => {
                        pot[v] = Some(want);
                        comp.push(v);
                        queue.push_back(v);
                    }
                    Some(have) if have != want => {
                        return Err(Error::NotGraded(format!(
                            "maximal chains through `{}` have different lengths",
                            names[v]
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let base = comp.iter().map(|&u| pot[u].unwrap()).min().unwrap();
        for u in comp {
            rank[u] = (pot[u].unwrap() - base) as usize;
        }
    }
    Ok(rank)
}
