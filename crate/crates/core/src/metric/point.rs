use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poset::{GradedPoset, Pip};
use crate::rational::{format_q, Q};

/// A point of `K(P)` as a formal convex combination of a chain.
///
/// Coefficients are kept strictly positive; zero entries are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainPoint {
    coeffs: BTreeMap<usize, Q>,
}

impl ChainPoint {
    /// Validates nonnegativity and unit mass; the chain condition needs the
    /// host and is checked by [`ChainPoint::check`].
    pub fn new<I: IntoIterator<Item = (usize, Q)>>(coeffs: I) -> Result<Self> {
        let mut map: BTreeMap<usize, Q> = BTreeMap::new();
        for (u, c) in coeffs {
            if c.is_negative() {
                return Err(Error::InvalidPoint(format!(
                    "negative coefficient {}",
                    format_q(&c)
                )));
            }
            *map.entry(u).or_insert_with(Q::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let total: Q = map.values().sum();
        if !total.is_one() {
            return Err(Error::InvalidPoint(format!(
                "coefficients sum to {}, not 1",
                format_q(&total)
            )));
        }
        Ok(Self { coeffs: map })
    }

    /// The vertex point of element `u`.
    pub fn vertex(u: usize) -> Self {
        Self {
            coeffs: BTreeMap::from([(u, Q::one())]),
        }
    }

    /// Checks that the support is a chain of `poset`.
    pub fn check(&self, poset: &GradedPoset) -> Result<()> {
        if let Some(&bad) = self.coeffs.keys().find(|&&u| u >= poset.len()) {
            return Err(Error::InvalidPoint(format!("element #{bad} out of range")));
        }
        let supp = self.support();
        if !poset.is_chain(&supp) {
            return Err(Error::InvalidPoint("support is not a chain".into()));
        }
        Ok(())
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    pub fn coeff(&self, u: usize) -> Q {
        self.coeffs.get(&u).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().map(|(&u, c)| (u, c))
    }

    /// Image under an element map, merging coefficients of equal images.
    pub fn map_elements<F: FnMut(usize) -> Result<usize>>(&self, mut f: F) -> Result<Self> {
        let mut out: BTreeMap<usize, Q> = BTreeMap::new();
        for (&u, c) in &self.coeffs {
            *out.entry(f(u)?).or_insert_with(Q::zero) += c;
        }
        Ok(Self { coeffs: out })
    }

    /// `(1 - s) self + s other`, meaningful when both lie in one simplex.
    pub fn lerp(&self, other: &Self, s: &Q) -> Self {
        let mut out: BTreeMap<usize, Q> = BTreeMap::new();
        let r = Q::one() - s;
        for (&u, c) in &self.coeffs {
            *out.entry(u).or_insert_with(Q::zero) += &r * c;
        }
        for (&u, c) in &other.coeffs {
            *out.entry(u).or_insert_with(Q::zero) += s * c;
        }
        out.retain(|_, c| !c.is_zero());
        Self { coeffs: out }
    }

    /// `τ(x)`: the top of the support.
    pub fn tau(&self, poset: &GradedPoset) -> usize {
        *self
            .coeffs
            .keys()
            .max_by_key(|&&u| (poset.rank(u), u))
            .expect("a point has nonempty support")
    }

    pub fn display(&self, poset: &GradedPoset) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&u, c)| format!("{}*{}", format_q(c), poset.name(u)))
            .collect();
        parts.join(" + ")
    }
}

/// A point in b-coordinates over the vertices of a PIP.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BPoint {
    coords: Vec<Q>,
}

impl BPoint {
    pub fn new(coords: Vec<Q>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            coords: vec![Q::zero(); n],
        }
    }

    pub fn from_pairs<S: AsRef<str>>(pip: &Pip, pairs: &[(S, Q)]) -> Result<Self> {
        let mut coords = vec![Q::zero(); pip.len()];
        for (name, v) in pairs {
            coords[pip.index_of(name.as_ref())?] = v.clone();
        }
        let p = Self { coords };
        p.check(pip)?;
        Ok(p)
    }

    /// Values in `[0, 1]`, monotone along the order, stable support.
    pub fn check(&self, pip: &Pip) -> Result<()> {
        if self.coords.len() != pip.len() {
            return Err(Error::InvalidPoint(format!(
                "{} b-coordinates for {} vertices",
                self.coords.len(),
                pip.len()
            )));
        }
        for (v, c) in self.coords.iter().enumerate() {
            if c.is_negative() || c > &Q::one() {
                return Err(Error::InvalidPoint(format!(
                    "b-coordinate of `{}` is {}, outside [0,1]",
                    pip.name(v),
                    format_q(c)
                )));
            }
        }
        for (u, v) in pip.order_pairs() {
            if self.coords[u] < self.coords[v] {
                return Err(Error::InvalidPoint(format!(
                    "`{}` ⪯ `{}` but its b-coordinate is smaller",
                    pip.name(u),
                    pip.name(v)
                )));
            }
        }
        if !pip.is_stable(&self.support_set()) {
            return Err(Error::InvalidPoint("b-support is not a stable set".into()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn get(&self, v: usize) -> &Q {
        &self.coords[v]
    }

    pub fn support_set(&self) -> fixedbitset::FixedBitSet {
        let mut s = fixedbitset::FixedBitSet::with_capacity(self.coords.len());
        for (v, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                s.insert(v);
            }
        }
        s
    }

    pub fn support(&self) -> Vec<usize> {
        self.support_set().ones().collect()
    }

    /// Squared Euclidean norm: the squared distance to the origin vertex.
    pub fn norm2(&self) -> Q {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn dist2(&self, other: &Self) -> Q {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    pub fn lerp(&self, other: &Self, s: &Q) -> Self {
        let r = Q::one() - s;
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| &r * a + s * b)
                .collect(),
        }
    }

    /// Restriction to a vertex subset (`x ∧ a` when `set` is the ideal of `a`).
    pub fn restrict(&self, set: &fixedbitset::FixedBitSet) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .enumerate()
                .map(|(v, c)| {
                    if set.contains(v) {
                        c.clone()
                    } else {
                        Q::zero()
                    }
                })
                .collect(),
        }
    }

    /// Coordinates raised to one on `set` (`x ∨ a` for the ideal of `a`).
    pub fn raise(&self, set: &fixedbitset::FixedBitSet) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .enumerate()
                .map(|(v, c)| if set.contains(v) { Q::one() } else { c.clone() })
                .collect(),
        }
    }

    /// Reindexes onto another vertex set: `map[k]` is the old index of new
    /// vertex `k`.
    pub fn pick(&self, map: &[usize]) -> Self {
        Self {
            coords: map.iter().map(|&v| self.coords[v].clone()).collect(),
        }
    }

    pub fn display(&self, pip: &Pip) -> String {
        let parts: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(v, c)| format!("{}:{}", pip.name(v), format_q(c)))
            .collect();
        format!("({})", parts.join(", "))
    }
}
