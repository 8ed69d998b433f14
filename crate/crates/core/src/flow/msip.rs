use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};

use super::network::{Capacity, FlowNetwork};
use crate::error::{Error, Result};
use crate::metric::BPoint;
use crate::poset::Pip;
use crate::rational::Q;

const SOURCE: usize = 0;
const SINK: usize = 1;

/// An optimal stable ideal together with its `ξ` value and objective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MsipSolution {
    pub ideal: FixedBitSet,
    /// `Σ_{b ∈ U} x_b²`
    pub x_part: Q,
    /// `Σ_{c ∈ U} y_c²`
    pub y_part: Q,
    pub objective: Q,
}

/// The two sides `B = supp x`, `C = supp y` after checking that they split
/// the vertex set with edges only across and order relations only within.
pub fn bipartition(pip: &Pip, x: &BPoint, y: &BPoint) -> Result<(FixedBitSet, FixedBitSet)> {
    if x.len() != pip.len() || y.len() != pip.len() {
        return Err(Error::InvalidPoint(
            "coordinate count differs from the PIP".into(),
        ));
    }
    let b = x.support_set();
    let c = y.support_set();
    if !b.is_disjoint(&c) {
        return Err(Error::NotBipartitePip("supports of x and y overlap".into()));
    }
    let mut all = b.clone();
    all.union_with(&c);
    if all.count_ones(..) != pip.len() {
        return Err(Error::NotBipartitePip(
            "some vertex lies in neither support".into(),
        ));
    }
    for (u, v) in pip.edges() {
        if b.contains(u) == b.contains(v) {
            return Err(Error::NotBipartitePip(format!(
                "edge {}{} inside one side",
                pip.name(u),
                pip.name(v)
            )));
        }
    }
    for (u, v) in pip.order_pairs() {
        if b.contains(u) != b.contains(v) {
            return Err(Error::NotBipartitePip(format!(
                "order relation {} ⪯ {} across sides",
                pip.name(u),
                pip.name(v)
            )));
        }
    }
    Ok((b, c))
}

fn check_lambda(lambda: &Q) -> Result<()> {
    if lambda < &Q::zero() || lambda > &Q::one() {
        return Err(Error::InvalidInput("λ must lie in [0, 1]".into()));
    }
    Ok(())
}

/// Min-cut network: `s → b` with capacity `(1-λ)x_b²`, `c → t` with `λy_c²`,
/// infinite arcs `b → c` per edge, `v → u` for `u ⪯ v` in `B` and `u → v`
/// for `u ⪯ v` in `C`. Vertex `v` is node `v + 2`.
pub fn msip_network(pip: &Pip, x: &BPoint, y: &BPoint, lambda: &Q) -> Result<FlowNetwork> {
    check_lambda(lambda)?;
    let (b, _) = bipartition(pip, x, y)?;
    let mut net = FlowNetwork::new(pip.len() + 2, SOURCE, SINK)?;
    let mu = Q::one() - lambda;
    for v in 0..pip.len() {
        if b.contains(v) {
            let w = x.get(v);
            net.add_arc(SOURCE, v + 2, Capacity::Finite(&mu * w * w))?;
        } else {
            let w = y.get(v);
            net.add_arc(v + 2, SINK, Capacity::Finite(lambda * w * w))?;
        }
    }
    for (u, v) in pip.edges() {
        let (s, t) = if b.contains(u) { (u, v) } else { (v, u) };
        net.add_arc(s + 2, t + 2, Capacity::Infinite)?;
    }
    for (u, v) in pip.order_pairs() {
        if b.contains(u) {
            net.add_arc(v + 2, u + 2, Capacity::Infinite)?;
        } else {
            net.add_arc(u + 2, v + 2, Capacity::Infinite)?;
        }
    }
    Ok(net)
}

/// Value of a stable ideal under the MSIP objective.
pub fn msip_value(x: &BPoint, y: &BPoint, lambda: &Q, ideal: &FixedBitSet) -> MsipSolution {
    let mut x_part = Q::zero();
    let mut y_part = Q::zero();
    for v in ideal.ones() {
        x_part += x.get(v) * x.get(v);
        y_part += y.get(v) * y.get(v);
    }
    let objective = (Q::one() - lambda) * &x_part + lambda * &y_part;
    MsipSolution {
        ideal: ideal.clone(),
        x_part,
        y_part,
        objective,
    }
}

/// Maximizes `(1-λ)Σ_{b∈U} x_b² + λΣ_{c∈U} y_c²` over stable ideals `U`.
///
/// The source side `T` of the minimum cut nearest the source yields
/// `U = (T ∩ B) ∪ (C \ T)`. Among optimal ideals this one has the largest
/// `C` part and the smallest `B` part, hence the largest `Σy²` and then the
/// fewest members.
pub fn solve_msip(pip: &Pip, x: &BPoint, y: &BPoint, lambda: &Q) -> Result<MsipSolution> {
    let net = msip_network(pip, x, y, lambda)?;
    let (b, _) = bipartition(pip, x, y)?;
    let flow = net.max_flow()?;
    let mut t = FixedBitSet::with_capacity(pip.len());
    for node in flow.source_side {
        if node >= 2 {
            t.insert(node - 2);
        }
    }
    let mut ideal = pip.empty_set();
    for v in 0..pip.len() {
        if b.contains(v) == t.contains(v) {
            ideal.insert(v);
        }
    }
    debug_assert!(pip.is_stable_ideal(&ideal));
    let sol = msip_value(x, y, lambda, &ideal);
    log::trace!(
        "msip λ={lambda} -> {} (cut {})",
        pip.set_name(&ideal),
        flow.value
    );
    Ok(sol)
}
