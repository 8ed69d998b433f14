use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::GradedPoset;
use crate::error::{Error, Result};
use crate::limits::size_cap;

/// Poset with inconsistent pairs: a graph on a partially ordered vertex set
/// such that `uv ∈ E` and `u ⪯ u'` imply `u'v ∈ E`.
#[derive(Clone, Debug)]
pub struct Pip {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<FixedBitSet>,
    /// `below[v]` holds every `u ⪯ v`, including `v`.
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
}

impl Pip {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)], order: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, s) in names.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateElement(s.clone()));
            }
        }
        let look = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };
        let e: Vec<(usize, usize)> = edges
            .iter()
            .map(|(a, b)| Ok((look(a)?, look(b)?)))
            .collect::<Result<_>>()?;
        let o: Vec<(usize, usize)> = order
            .iter()
            .map(|(a, b)| Ok((look(a)?, look(b)?)))
            .collect::<Result<_>>()?;
        Self::from_indexed(names, &e, &o)
    }

    /// `order` pairs `(u, v)` mean `u ⪯ v`; the transitive closure is taken.
    pub fn from_indexed(
        names: Vec<String>,
        edges: &[(usize, usize)],
        order: &[(usize, usize)],
    ) -> Result<Self> {
        let n = names.len();
        let mut index = HashMap::new();
        for (i, s) in names.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateElement(s.clone()));
            }
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (v, set) in below.iter_mut().enumerate() {
            set.insert(v);
        }
        for &(u, v) in order {
            if u >= n || v >= n {
                return Err(Error::InvalidPip(format!(
                    "order pair references vertex #{}",
                    u.max(v)
                )));
            }
            below[v].insert(u);
        }
        // transitive closure, Warshall style on rows
        for k in 0..n {
            for v in 0..n {
                if v != k && below[v].contains(k) {
                    let bk = below[k].clone();
                    below[v].union_with(&bk);
                }
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if below[v].contains(u) && below[u].contains(v) {
                    return Err(Error::InvalidPip(format!(
                        "order is not antisymmetric on `{}` and `{}`",
                        names[u], names[v]
                    )));
                }
            }
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for v in 0..n {
            for u in below[v].ones() {
                above[u].insert(v);
            }
        }
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidPip(format!(
                    "edge references vertex #{}",
                    u.max(v)
                )));
            }
            if u == v {
                return Err(Error::InvalidPip(format!("loop at `{}`", names[u])));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        for u in 0..n {
            for v in adj[u].ones() {
                if below[v].contains(u) || below[u].contains(v) {
                    return Err(Error::InvalidPip(format!(
                        "edge `{}`-`{}` joins comparable vertices",
                        names[u], names[v]
                    )));
                }
                for w in above[u].ones() {
                    if !adj[w].contains(v) {
                        return Err(Error::InvalidPip(format!(
                            "edge `{}`-`{}` and `{}` ⪯ `{}` require edge `{}`-`{}`",
                            names[u], names[v], names[u], names[w], names[w], names[v]
                        )));
                    }
                }
            }
        }
        Ok(Self {
            names,
            index,
            adj,
            below,
            above,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
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

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    pub fn is_isolated(&self, u: usize) -> bool {
        self.adj[u].is_clear()
    }

    /// `u ⪯ v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.below[v].contains(u)
    }

    pub fn below(&self, v: usize) -> &FixedBitSet {
        &self.below[v]
    }

    pub fn above(&self, v: usize) -> &FixedBitSet {
        &self.above[v]
    }

    /// Edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|u| {
                self.adj[u]
                    .ones()
                    .filter(move |&v| u < v)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Strict order pairs `(u, v)` with `u ≺ v`.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|v| {
                self.below[v]
                    .ones()
                    .filter(move |&u| u != v)
                    .map(move |u| (u, v))
            })
            .collect()
    }

    pub fn is_stable(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|u| self.adj[u].is_disjoint(set))
    }

    pub fn is_ideal(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|v| self.below[v].is_subset(set))
    }

    pub fn is_stable_ideal(&self, set: &FixedBitSet) -> bool {
        self.is_stable(set) && self.is_ideal(set)
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    /// Smallest ideal containing `set`.
    pub fn ideal_closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = self.empty_set();
        for v in set.ones() {
            out.union_with(&self.below[v]);
        }
        out
    }

    /// Induced sub-PIP on `keep` (sorted), with the index map back to `self`.
    pub fn restrict(&self, keep: &[usize]) -> Pip {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let mut edges = Vec::new();
        let mut order = Vec::new();
        for (k, &u) in keep.iter().enumerate() {
            for v in self.adj[u].ones() {
                if let Some(&kv) = pos.get(&v) {
                    edges.push((k, kv));
                }
            }
            for w in self.below[u].ones() {
                if let Some(&kw) = pos.get(&w) {
                    if kw != k {
                        order.push((kw, k));
                    }
                }
            }
        }
        Pip::from_indexed(names, &edges, &order).expect("restriction of a valid PIP is valid")
    }

    /// Display name of a vertex set: `{b1,c1}` in vertex order, `{}` when empty.
    pub fn set_name(&self, set: &FixedBitSet) -> String {
        let parts: Vec<&str> = set.ones().map(|v| self.names[v].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// A linear extension of the vertex order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&v| (self.below[v].count_ones(..), v));
        order
    }

    /// All stable ideals, ordered by inclusion, with the default size cap.
    pub fn stable_ideals(&self) -> Result<IdealLattice> {
        self.stable_ideals_capped(size_cap())
    }

    pub fn stable_ideals_capped(&self, cap: usize) -> Result<IdealLattice> {
        let order = self.linear_extension();
        let mut ideals = Vec::new();
        let mut current = self.empty_set();
        self.enumerate(&order, 0, &mut current, &mut ideals, cap)?;
        ideals.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        let lookup: HashMap<FixedBitSet, usize> = ideals
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut covers = Vec::new();
        for (i, s) in ideals.iter().enumerate() {
            for v in 0..self.len() {
                if s.contains(v) {
                    continue;
                }
                let mut t = s.clone();
                t.insert(v);
                if let Some(&j) = lookup.get(&t) {
                    covers.push((i, j));
                }
            }
        }
        let names = ideals.iter().map(|s| self.set_name(s)).collect();
        let poset = GradedPoset::from_covers(names, &covers)?;
        Ok(IdealLattice {
            poset,
            ideals,
            lookup,
        })
    }

    fn enumerate(
        &self,
        order: &[usize],
        k: usize,
        current: &mut FixedBitSet,
        out: &mut Vec<FixedBitSet>,
        cap: usize,
    ) -> Result<()> {
        if k == order.len() {
            if out.len() >= cap {
                return Err(Error::SizeCap {
                    what: "stable ideals",
                    cap,
                });
            }
            out.push(current.clone());
            return Ok(());
        }
        self.enumerate(order, k + 1, current, out, cap)?;
        let v = order[k];
        let preds_in = self.below[v].ones().all(|u| u == v || current.contains(u));
        if preds_in && self.adj[v].is_disjoint(current) {
            current.insert(v);
            self.enumerate(order, k + 1, current, out, cap)?;
            current.set(v, false);
        }
        Ok(())
    }
}

/// The stable ideals of a PIP as a graded poset, with the ideal behind each
/// element.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub poset: GradedPoset,
    pub ideals: Vec<FixedBitSet>,
    pub lookup: HashMap<FixedBitSet, usize>,
}

impl IdealLattice {
    pub fn element_of(&self, ideal: &FixedBitSet) -> Option<usize> {
        self.lookup.get(ideal).copied()
    }
}

/// Birkhoff-type representation of a median (sub)semilattice by a PIP on its
/// join-irreducible elements.
#[derive(Clone, Debug)]
pub struct Birkhoff {
    pub pip: Pip,
    /// Host element of each PIP vertex.
    pub vertex_elem: Vec<usize>,
    /// Host elements covered by the representation, in rank order.
    pub elements: Vec<usize>,
    /// Stable ideal of each represented host element.
    pub ideal_of: HashMap<usize, FixedBitSet>,
    pub elem_of: HashMap<FixedBitSet, usize>,
}

impl Birkhoff {
    /// Represents the whole poset; it must be a median semilattice.
    pub fn of_poset(poset: &GradedPoset) -> Result<Self> {
        if !poset.classification().median {
            return Err(Error::NotMedian);
        }
        Self::of_subset(poset, &(0..poset.len()).collect::<Vec<_>>())
    }

    /// Represents a meet-closed subset that is itself a median semilattice
    /// under the host order. Vertices are the elements with exactly one lower
    /// cover inside the subset; edges are pairs without a join in the host.
    pub fn of_subset(poset: &GradedPoset, subset: &[usize]) -> Result<Self> {
        let elements = poset.sorted_by_rank(subset.iter().copied());
        let mut jis = Vec::new();
        for &u in &elements {
            let below: Vec<usize> = elements
                .iter()
                .copied()
                .filter(|&w| poset.lt(w, u))
                .collect();
            let maximal = below
                .iter()
                .filter(|&&w| !below.iter().any(|&z| poset.lt(w, z)))
                .count();
            if maximal == 1 {
                jis.push(u);
            }
        }
        let names: Vec<String> = jis.iter().map(|&u| poset.name(u).to_string()).collect();
        let mut edges = Vec::new();
        let mut order = Vec::new();
        for (i, &a) in jis.iter().enumerate() {
            for (j, &b) in jis.iter().enumerate() {
                if i < j && poset.join(a, b).is_none() {
                    edges.push((i, j));
                }
                if i != j && poset.lt(a, b) {
                    order.push((i, j));
                }
            }
        }
        let pip = Pip::from_indexed(names, &edges, &order).map_err(|_| Error::NotMedian)?;
        let mut ideal_of = HashMap::new();
        let mut elem_of = HashMap::new();
        for &u in &elements {
            let mut set = pip.empty_set();
            for (k, &v) in jis.iter().enumerate() {
                if poset.leq(v, u) {
                    set.insert(k);
                }
            }
            if !pip.is_stable_ideal(&set) || elem_of.insert(set.clone(), u).is_some() {
                return Err(Error::NotMedian);
            }
            ideal_of.insert(u, set);
        }
        let rep = Self {
            pip,
            vertex_elem: jis,
            elements,
            ideal_of,
            elem_of,
        };
        let count = rep.pip.stable_ideals()?.ideals.len();
        if count != rep.elements.len() {
            return Err(Error::NotMedian);
        }
        Ok(rep)
    }

    pub fn element_of(&self, ideal: &FixedBitSet) -> Option<usize> {
        self.elem_of.get(ideal).copied()
    }
}
