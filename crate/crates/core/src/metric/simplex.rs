use std::collections::BTreeMap;

use num_traits::Zero;

use super::ChainPoint;
use crate::error::{Error, Result};
use crate::poset::GradedPoset;
use crate::rational::{to_f64, Q};

/// Tie-break used when extending a chain to a maximal one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    Smallest,
    Largest,
}

/// Extends a chain to a maximal chain of the poset by greedy cover steps,
/// picking the lexicographically smallest (or largest) eligible id.
pub fn extend_chain(poset: &GradedPoset, chain: &[usize], ext: Extension) -> Result<Vec<usize>> {
    if !poset.is_chain(chain) {
        return Err(Error::NotCommonSimplex);
    }
    let mut items = poset.sorted_by_rank(chain.iter().copied());
    if items.is_empty() {
        let start = poset
            .minimal_elements()
            .into_iter()
            .min_by(|&a, &b| pick_order(ext, poset.name(a), poset.name(b)));
        match start {
            Some(s) => items.push(s),
            None => return Ok(Vec::new()),
        }
    }
    let choose = |cands: Vec<usize>| {
        cands
            .into_iter()
            .min_by(|&a, &b| pick_order(ext, poset.name(a), poset.name(b)))
    };

    let mut out = Vec::new();
    // below the lowest element
    let mut cur = items[0];
    let mut down = Vec::new();
    while let Some(l) = choose(poset.lower_covers(cur).to_vec()) {
        down.push(l);
        cur = l;
    }
    down.reverse();
    out.extend(down);
    for w in items.windows(2) {
        out.push(w[0]);
        let mut cur = w[0];
        while poset.rank(w[1]) - poset.rank(cur) > 1 {
            let next = choose(
                poset
                    .upper_covers(cur)
                    .iter()
                    .copied()
                    .filter(|&c| poset.leq(c, w[1]))
                    .collect(),
            )
            .expect("graded intervals have cover paths");
            out.push(next);
            cur = next;
        }
    }
    let mut cur = *items.last().unwrap();
    out.push(cur);
    while let Some(h) = choose(poset.upper_covers(cur).to_vec()) {
        out.push(h);
        cur = h;
    }
    Ok(out)
}

fn pick_order(ext: Extension, a: &str, b: &str) -> std::cmp::Ordering {
    match ext {
        Extension::Smallest => a.cmp(b),
        Extension::Largest => b.cmp(a),
    }
}

/// `φ_Δ` on a maximal chain `p_0 < ... < p_n`: coordinate `i` is the mass on
/// `p_i, ..., p_n`.
pub fn phi(chain: &[usize], x: &ChainPoint) -> Result<Vec<Q>> {
    let pos: BTreeMap<usize, usize> = chain.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let mut lambda = vec![Q::zero(); chain.len()];
    for (u, c) in x.iter() {
        let i = *pos.get(&u).ok_or(Error::NotCommonSimplex)?;
        lambda[i] = c.clone();
    }
    let mut coords = vec![Q::zero(); chain.len().saturating_sub(1)];
    let mut tail = Q::zero();
    for i in (1..chain.len()).rev() {
        tail += &lambda[i];
        coords[i - 1] = tail.clone();
    }
    Ok(coords)
}

/// Exact squared distance inside a common simplex, through `φ_Δ` on the
/// chosen maximal-chain extension.
pub fn simplex_distance2_with(
    poset: &GradedPoset,
    x: &ChainPoint,
    y: &ChainPoint,
    ext: Extension,
) -> Result<Q> {
    let mut supp = x.support();
    supp.extend(y.support());
    let chain = extend_chain(poset, &supp, ext)?;
    let px = phi(&chain, x)?;
    let py = phi(&chain, y)?;
    Ok(px.iter().zip(&py).map(|(a, b)| (a - b) * (a - b)).sum())
}

pub fn simplex_distance2(poset: &GradedPoset, x: &ChainPoint, y: &ChainPoint) -> Result<Q> {
    simplex_distance2_with(poset, x, y, Extension::Smallest)
}

/// Distance between two points of a common simplex.
pub fn simplex_distance(poset: &GradedPoset, x: &ChainPoint, y: &ChainPoint) -> Result<f64> {
    Ok(to_f64(&simplex_distance2(poset, x, y)?).sqrt())
}

/// Mass profile `h ↦ Σ{λ_u : rank(u) ≥ h}` for `h` in `lo+1 ..= hi`.
fn profile(poset: &GradedPoset, x: &ChainPoint, lo: usize, hi: usize) -> Vec<Q> {
    let mut at = vec![Q::zero(); hi + 1];
    for (u, c) in x.iter() {
        at[poset.rank(u)] += c;
    }
    let mut out = vec![Q::zero(); hi.saturating_sub(lo)];
    let mut tail = Q::zero();
    for h in (lo + 1..=hi).rev() {
        tail += &at[h];
        out[h - lo - 1] = tail.clone();
    }
    out
}

/// Squared distance from rank levels alone. Agrees with
/// [`simplex_distance2`] whenever the supports share a chain, which is not
/// checked here.
pub fn rank_distance2(poset: &GradedPoset, x: &ChainPoint, y: &ChainPoint) -> Q {
    let ranks: Vec<usize> = x
        .iter()
        .chain(y.iter())
        .map(|(u, _)| poset.rank(u))
        .collect();
    let lo = ranks.iter().copied().min().unwrap_or(0);
    let hi = ranks.iter().copied().max().unwrap_or(0);
    let px = profile(poset, x, lo, hi);
    let py = profile(poset, y, lo, hi);
    px.iter().zip(&py).map(|(a, b)| (a - b) * (a - b)).sum()
}

/// Squared distance from `x` to the vertex of an element of rank `base`
/// lying below the whole support of `x`.
pub fn norm2_above(poset: &GradedPoset, x: &ChainPoint, base: usize) -> Q {
    let hi = x
        .iter()
        .map(|(u, _)| poset.rank(u))
        .max()
        .unwrap_or(base)
        .max(base);
    profile(poset, x, base, hi).iter().map(|a| a * a).sum()
}

/// Squared distance from `x` to the minimum vertex.
pub fn norm2(poset: &GradedPoset, x: &ChainPoint) -> Q {
    norm2_above(poset, x, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::q;

    #[test]
    fn chain_distances() {
        let p = fixtures::chain3();
        let (o, a, b) = (0, 1, 2);
        let d = simplex_distance(&p, &ChainPoint::vertex(b), &ChainPoint::vertex(o)).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-12);
        let x = ChainPoint::new([(o, q(1, 2)), (b, q(1, 2))]).unwrap();
        let d = simplex_distance(&p, &x, &ChainPoint::vertex(a)).unwrap();
        assert!((d - 0.5f64.sqrt()).abs() < 1e-12);
        assert_eq!(simplex_distance2(&p, &x, &x).unwrap(), Q::zero());
    }

    #[test]
    fn not_common_simplex() {
        let p = fixtures::m3();
        let a = ChainPoint::vertex(p.index_of("a").unwrap());
        let b = ChainPoint::vertex(p.index_of("b").unwrap());
        assert_eq!(
            simplex_distance(&p, &a, &b).unwrap_err(),
            Error::NotCommonSimplex
        );
    }

    #[test]
    fn extensions_differ_but_distances_agree() {
        let p = fixtures::m3();
        let one = p.index_of("1").unwrap();
        let lo = extend_chain(&p, &[one], Extension::Smallest).unwrap();
        let hi = extend_chain(&p, &[one], Extension::Largest).unwrap();
        assert_ne!(lo, hi);
        let x = ChainPoint::new([(0, q(1, 3)), (one, q(2, 3))]).unwrap();
        let y = ChainPoint::vertex(0);
        assert_eq!(
            simplex_distance2_with(&p, &x, &y, Extension::Smallest).unwrap(),
            simplex_distance2_with(&p, &x, &y, Extension::Largest).unwrap()
        );
        assert_eq!(rank_distance2(&p, &x, &y), q(8, 9));
    }
}
