use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poset::GradedPoset;

fn name_list(poset: &GradedPoset, items: &[usize]) -> String {
    let names: Vec<&str> = items.iter().map(|&u| poset.name(u)).collect();
    names.join(",")
}

/// Smallest set containing `seed` and closed under existing meets and joins.
pub fn generated_sublattice(poset: &GradedPoset, seed: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    loop {
        let items: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for (k, &a) in items.iter().enumerate() {
            for &b in &items[k + 1..] {
                for c in [poset.meet(a, b), poset.join(a, b)].into_iter().flatten() {
                    grew |= set.insert(c);
                }
            }
        }
        if !grew {
            return poset.sorted_by_rank(set);
        }
    }
}

/// Both distributive laws on every triple of a meet- and join-closed subset.
pub fn is_distributive_subset(poset: &GradedPoset, items: &[usize]) -> bool {
    let m = |a, b| poset.meet(a, b);
    let j = |a, b| poset.join(a, b);
    for &a in items {
        for &b in items {
            for &c in items {
                let lhs = j(b, c).and_then(|bc| m(a, bc));
                let rhs = m(a, b).zip(m(a, c)).and_then(|(ab, ac)| j(ab, ac));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// A maximal chain of `[lo, hi]` through `items`, extended greedily by the
/// smallest element id at each cover step.
pub fn maximal_chain_through(
    poset: &GradedPoset,
    lo: usize,
    hi: usize,
    items: &[usize],
) -> Result<Vec<usize>> {
    let mut pts: Vec<usize> = items.to_vec();
    pts.push(lo);
    pts.push(hi);
    let pts = poset.sorted_by_rank(pts);
    if !poset.is_chain(&pts) || pts[0] != lo || pts[pts.len() - 1] != hi {
        return Err(Error::InvalidInput(format!(
            "{{{}}} is not a chain of [{}, {}]",
            name_list(poset, items),
            poset.name(lo),
            poset.name(hi)
        )));
    }
    let mut out = vec![lo];
    for w in pts.windows(2) {
        let mut cur = w[0];
        while cur != w[1] {
            cur = poset
                .upper_covers(cur)
                .iter()
                .copied()
                .filter(|&c| poset.leq(c, w[1]))
                .min_by(|&a, &b| poset.name(a).cmp(poset.name(b)))
                .expect("graded intervals have cover paths");
            out.push(cur);
        }
    }
    Ok(out)
}

fn dedup_chain(items: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for u in items {
        if out.last() != Some(&u) {
            out.push(u);
        }
    }
    out
}

/// One extension step: lifts `B̃ ⊆ I(u_{s-1})` to `I(u_s)` along the chain
/// `pi` of `I(u_s)`.
fn lift(
    poset: &GradedPoset,
    small: &[usize],
    pi: &[usize],
    top_below: usize,
) -> Result<Vec<usize>> {
    let j = pi
        .iter()
        .position(|&p| !poset.leq(p, top_below))
        .ok_or_else(|| Error::Inconsistent("chain never leaves the lower ideal".into()))?;
    let (pj, pj1) = (pi[j], pi[j - 1]);
    let mut out: BTreeSet<usize> = small.iter().copied().collect();
    for &v in small {
        if poset.leq(pj1, v) && poset.leq(v, top_below) {
            let w = poset.join(v, pj).ok_or_else(|| {
                Error::Inconsistent("join missing inside a principal ideal".into())
            })?;
            out.insert(w);
        }
    }
    Ok(poset.sorted_by_rank(out))
}

/// Distributive sublattices `B ⊆ I(p)` and `C ⊆ I(q)` containing the four
/// maximal chains `pi` of `I(p)`, `sigma` of `I(q)`, `pi1` of `[p∧q, p]` and
/// `sigma1` of `[p∧q, q]`, with `B ∩ C = B ∩ I(p∧q) = C ∩ I(p∧q)`.
///
/// Built by peeling the top of `pi1` (then `sigma1`) and lifting the smaller
/// solution with `B = B̃ ∪ {v ∨ p_j}`.
pub fn apartment(
    poset: &GradedPoset,
    pi: &[usize],
    sigma: &[usize],
    pi1: &[usize],
    sigma1: &[usize],
) -> Result<(Vec<usize>, Vec<usize>)> {
    let (b, c) = apartment_rec(poset, pi, sigma, pi1, sigma1)?;
    for side in [&b, &c] {
        if !is_distributive_subset(poset, side) {
            return Err(Error::Inconsistent(format!(
                "apartment {{{}}} is not distributive",
                name_list(poset, side)
            )));
        }
    }
    Ok((b, c))
}

fn apartment_rec(
    poset: &GradedPoset,
    pi: &[usize],
    sigma: &[usize],
    pi1: &[usize],
    sigma1: &[usize],
) -> Result<(Vec<usize>, Vec<usize>)> {
    if pi1.len() > 1 {
        let u = pi1[pi1.len() - 2];
        let pit = dedup_chain(pi.iter().map(|&p| poset.meet(u, p).expect("meet")));
        let (bt, c) = apartment_rec(poset, &pit, sigma, &pi1[..pi1.len() - 1], sigma1)?;
        return Ok((lift(poset, &bt, pi, u)?, c));
    }
    if sigma1.len() > 1 {
        let u = sigma1[sigma1.len() - 2];
        let sit = dedup_chain(sigma.iter().map(|&s| poset.meet(u, s).expect("meet")));
        let (b, ct) = apartment_rec(poset, pi, &sit, pi1, &sigma1[..sigma1.len() - 1])?;
        return Ok((b, lift(poset, &ct, sigma, u)?));
    }
    let mut seed = pi.to_vec();
    seed.extend_from_slice(sigma);
    let d = generated_sublattice(poset, &seed);
    Ok((d.clone(), d))
}

/// A distributive sublattice of a modular lattice containing the given
/// chains: the sublattice they generate, which is distributive for at most
/// two chains.
pub fn distributive_sublattice(poset: &GradedPoset, chains: &[Vec<usize>]) -> Result<Vec<usize>> {
    let cls = poset.classification();
    if !(cls.lattice && cls.modular) {
        return Err(Error::NotModular(
            "distributive sublattices need a modular lattice".into(),
        ));
    }
    for ch in chains {
        if !poset.is_chain(ch) {
            return Err(Error::InvalidInput(format!(
                "{{{}}} is not a chain",
                name_list(poset, ch)
            )));
        }
    }
    let seed: Vec<usize> = chains.iter().flatten().copied().collect();
    let d = generated_sublattice(poset, &seed);
    if !is_distributive_subset(poset, &d) {
        return Err(Error::InvalidInput(format!(
            "the chains generate the non-distributive sublattice {{{}}}",
            name_list(poset, &d)
        )));
    }
    Ok(d)
}

/// The image of `p` under the nonexpansive map onto `2^{b_1..b_n}` defined by
/// the chain `c_i = b_1 ∨ ... ∨ b_i`: the `b_i` with `p ∧ c_i ≻ p ∧ c_{i-1}`.
pub fn birkhoff_projection(poset: &GradedPoset, order: &[usize], p: usize) -> Result<Vec<usize>> {
    let cls = poset.classification();
    if !(cls.lattice && cls.modular) {
        return Err(Error::NotModular(
            "projection needs a modular lattice".into(),
        ));
    }
    let bottom = poset.bottom().expect("lattices have a bottom");
    let top = poset.top().expect("lattices have a top");
    let mut prev = bottom;
    let mut out = Vec::new();
    for &b in order {
        let cur = poset.join(prev, b).expect("lattice join");
        if poset.rank(cur) != poset.rank(prev) + 1 || !poset.leq(prev, cur) {
            return Err(Error::ChainNotMaximal(format!(
                "{} does not cover {}",
                poset.name(cur),
                poset.name(prev)
            )));
        }
        let lo = poset.meet(p, prev).expect("lattice meet");
        let hi = poset.meet(p, cur).expect("lattice meet");
        if poset.rank(hi) > poset.rank(lo) {
            out.push(b);
        }
        prev = cur;
    }
    if prev != top {
        return Err(Error::ChainNotMaximal(format!(
            "chain ends at {} below the top",
            poset.name(prev)
        )));
    }
    Ok(out)
}
