use std::collections::BTreeSet;

use super::apartment::{apartment, is_distributive_subset, maximal_chain_through};
use crate::error::{Error, Result};
use crate::poset::{Birkhoff, GradedPoset};

/// A distributive frame `B ∨ C` and its PIP representation.
#[derive(Clone, Debug)]
pub struct Frame {
    /// Distributive sublattice of `I(p)`.
    pub b: Vec<usize>,
    /// Distributive sublattice of `I(q)`.
    pub c: Vec<usize>,
    /// The elements `b ∨ c`, in rank order.
    pub elements: Vec<usize>,
    /// PIP on the join-irreducibles of the frame; `vertex_elem` embeds it
    /// into the host.
    pub rep: Birkhoff,
    /// PIP vertices of the three parts `B′`, `C′`, `Z`.
    pub b_side: Vec<usize>,
    pub c_side: Vec<usize>,
    pub z: Vec<usize>,
}

impl Frame {
    /// Builds `B ∨ C` from the four chains of an apartment. When both
    /// principal ideals are already distributive they are used whole, so a
    /// median host is its own frame.
    pub(crate) fn build(
        poset: &GradedPoset,
        pi: &[usize],
        sigma: &[usize],
        pi1: &[usize],
        sigma1: &[usize],
    ) -> Result<Frame> {
        let bottom = pi[0];
        let ip = poset.interval(bottom, pi[pi.len() - 1]);
        let iq = poset.interval(bottom, sigma[sigma.len() - 1]);
        let (b, c) = if is_distributive_subset(poset, &ip) && is_distributive_subset(poset, &iq) {
            (ip, iq)
        } else {
            apartment(poset, pi, sigma, pi1, sigma1)?
        };
        let mut joined = BTreeSet::new();
        for &u in &b {
            for &v in &c {
                if let Some(w) = poset.join(u, v) {
                    joined.insert(w);
                }
            }
        }
        let elements = poset.sorted_by_rank(joined);
        let rep = Birkhoff::of_subset(poset, &elements).map_err(|e| match e {
            Error::NotMedian => Error::Inconsistent("frame is not a median subsemilattice".into()),
            other => other,
        })?;
        let base = poset.rank(elements[0]);
        for &u in &elements {
            if rep.ideal_of[&u].count_ones(..) != poset.rank(u) - base {
                return Err(Error::Inconsistent(format!(
                    "frame ideal of {} has the wrong size",
                    poset.name(u)
                )));
            }
        }
        let pip = &rep.pip;
        let (mut b_side, mut c_side, mut z) = (Vec::new(), Vec::new(), Vec::new());
        for (k, &u) in rep.vertex_elem.iter().enumerate() {
            if pip.is_isolated(k) {
                z.push(k);
            } else if b.contains(&u) {
                b_side.push(k);
            } else {
                c_side.push(k);
            }
        }
        Ok(Frame {
            b,
            c,
            elements,
            rep,
            b_side,
            c_side,
            z,
        })
    }
}

/// The frame of an arch between orthogonal `p` and `q`.
///
/// `chain_x` and `chain_y` are maximal chains of `I(p)` and `I(q)`; the
/// chains of `[p∧q, p]` and `[p∧q, q]` through the arch traces are chosen
/// here.
pub fn distributive_frame(
    poset: &GradedPoset,
    p: usize,
    q: usize,
    arch: &[usize],
    chain_x: &[usize],
    chain_y: &[usize],
) -> Result<Frame> {
    poset.require_modular_semilattice()?;
    let bottom = poset.bottom().expect("a modular semilattice has a minimum");
    let m = poset.meet(p, q).expect("meet");
    if m != bottom {
        return Err(Error::NotOrthogonal(format!(
            "{} ∧ {} = {}",
            poset.name(p),
            poset.name(q),
            poset.name(m)
        )));
    }
    let traces = |top: usize| -> Vec<usize> {
        arch.iter()
            .map(|&u| poset.meet(u, top).expect("meet"))
            .collect()
    };
    let pi1 = maximal_chain_through(poset, m, p, &traces(p))?;
    let sigma1 = maximal_chain_through(poset, m, q, &traces(q))?;
    for (ch, top) in [(chain_x, p), (chain_y, q)] {
        let full = maximal_chain_through(poset, bottom, top, ch)?;
        if full.len() != ch.len() {
            return Err(Error::ChainNotMaximal(format!(
                "chain below {}",
                poset.name(top)
            )));
        }
    }
    Frame::build(poset, chain_x, chain_y, &pi1, &sigma1)
}
