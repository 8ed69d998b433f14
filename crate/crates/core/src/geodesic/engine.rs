use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use super::apartment::{distributive_sublattice, maximal_chain_through};
use super::frame::Frame;
use super::median::geodesic_median;
use crate::arch::{extreme_arch, Arch, EnumXi};
use crate::error::{Error, Result};
use crate::metric::{
    from_bcoords, join_point, meet_point, norm2_above, simplex_distance2, to_bcoords, BPoint,
    ChainPoint, PolyPath,
};
use crate::poset::{Birkhoff, GradedPoset, Pip};
use crate::rational::Q;
use crate::surd::RootSum;

/// Which branch of the pipeline produced a geodesic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    /// `τ(x) ∨ τ(y)` exists: a straight line in a distributive sublattice.
    P1,
    /// `τ(x)` and `τ(y)` are orthogonal.
    P2,
    /// Product of an orthogonal part above `a` and a lattice part below it.
    P4,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The geodesic between two points of a modular semilattice.
#[derive(Clone, Debug)]
pub struct Geodesic {
    /// Breakpoints in chain form; consecutive breakpoints share a simplex.
    pub path: PolyPath<ChainPoint>,
    pub length2: RootSum,
    pub length: f64,
    /// The optimal arch in the filter of `a`, as host elements.
    pub arch: Option<Vec<usize>>,
    pub case: Case,
    /// The distributive frame carrying the path, when one was built.
    pub frame: Option<Frame>,
}

impl Geodesic {
    fn straight(poset: &GradedPoset, x: &ChainPoint, y: &ChainPoint) -> Result<Self> {
        let d2 = simplex_distance2(poset, x, y)?;
        let length2 = RootSum::rational(d2);
        Ok(Self {
            path: PolyPath::segment(x.clone(), y.clone()),
            length: length2.to_f64().sqrt(),
            length2,
            arch: None,
            case: Case::P1,
            frame: None,
        })
    }
}

/// Splits every segment where two b-coordinates cross, so that each piece
/// stays inside one orthoscheme, then converts to chain form.
pub fn bpath_to_chains(rep: &Birkhoff, path: &PolyPath<BPoint>) -> Result<PolyPath<ChainPoint>> {
    let mut extra = Vec::new();
    for w in path.breakpoints().windows(2) {
        let (a, b) = (&w[0].point, &w[1].point);
        let n = a.len();
        for v in 0..n {
            for u in v + 1..n {
                let d0 = a.get(v) - a.get(u);
                let d1 = b.get(v) - b.get(u);
                if (&d0 * &d1).is_negative() {
                    let s = &d0 / (&d0 - &d1);
                    extra.push(&w[0].t + s * (&w[1].t - &w[0].t));
                }
            }
        }
    }
    path.with_times(&extra, &rep.pip)
        .map_points(|p| from_bcoords(rep, p))
}

fn xi_of(
    poset: &GradedPoset,
    u: usize,
    xa: &ChainPoint,
    ya: &ChainPoint,
    base: usize,
) -> Result<(Q, Q)> {
    Ok((
        norm2_above(poset, &meet_point(poset, u, xa)?, base),
        norm2_above(poset, &meet_point(poset, u, ya)?, base),
    ))
}

fn check_points(poset: &GradedPoset, x: &ChainPoint, y: &ChainPoint) -> Result<()> {
    x.check(poset)?;
    y.check(poset)
}

/// The unique geodesic of `K(L)` for a modular semilattice `L`.
///
/// With `p = τ(x)`, `q = τ(y)` and `a = ω_q(p) ∨ ω_p(q)`, the points
/// `a ∨ x` and `a ∨ y` are orthogonal in the filter of `a`. Their optimal
/// arch comes from the `ξ` hull of `I(p ∨ a, q ∨ a)`; a distributive frame
/// through that arch and both supports is then represented by a PIP, where
/// the geodesic is the product of an Owen path and a straight segment.
pub fn geodesic(poset: &GradedPoset, x: &ChainPoint, y: &ChainPoint) -> Result<Geodesic> {
    poset.require_modular_semilattice()?;
    check_points(poset, x, y)?;
    if x == y {
        return Ok(Geodesic {
            path: PolyPath::constant(x.clone()),
            length2: RootSum::zero(),
            length: 0.0,
            arch: None,
            case: Case::P1,
            frame: None,
        });
    }
    let mut supp = x.support();
    supp.extend(y.support());
    if poset.is_chain(&supp) {
        return Geodesic::straight(poset, x, y);
    }

    let bottom = poset.bottom().expect("a modular semilattice has a minimum");
    let (p, q) = (x.tau(poset), y.tau(poset));
    let missing = |what: &str| Error::Inconsistent(format!("{what} does not exist"));
    let a = poset
        .join(poset.omega(q, p), poset.omega(p, q))
        .ok_or_else(|| missing("ω_q(p) ∨ ω_p(q)"))?;
    let ph = poset.join(p, a).ok_or_else(|| missing("p ∨ a"))?;
    let qh = poset.join(q, a).ok_or_else(|| missing("q ∨ a"))?;
    if poset.meet(ph, qh) != Some(a) {
        return Err(Error::Inconsistent(
            "p ∨ a and q ∨ a are not orthogonal over a".into(),
        ));
    }
    let case = if poset.join(p, q).is_some() {
        Case::P1
    } else if a == bottom {
        Case::P2
    } else {
        Case::P4
    };
    log::debug!(
        "geodesic {}: p={} q={} a={}",
        case,
        poset.name(p),
        poset.name(q),
        poset.name(a)
    );

    let base = poset.rank(a);
    let xa = join_point(poset, a, x)?;
    let ya = join_point(poset, a, y)?;
    let arch: Option<Arch<usize>> = if ph == qh {
        None
    } else {
        let mut cands = poset.metric_interval_unchecked(ph, qh).elements;
        cands.sort_by(|&u, &v| poset.name(u).cmp(poset.name(v)));
        let candidates = cands
            .into_iter()
            .map(|u| Ok((u, xi_of(poset, u, &xa, &ya, base)?)))
            .collect::<Result<Vec<_>>>()?;
        let start = (ph, xi_of(poset, ph, &xa, &ya, base)?);
        let end = (qh, xi_of(poset, qh, &xa, &ya, base)?);
        Some(extreme_arch(&EnumXi { candidates }, start, end)?)
    };

    let members: Vec<usize> = arch
        .as_ref()
        .map(|a| a.members().to_vec())
        .unwrap_or_default();
    let traces = |top: usize| -> Vec<usize> {
        members
            .iter()
            .map(|&u| poset.meet(u, top).expect("meet"))
            .collect()
    };
    let pi = maximal_chain_through(poset, bottom, ph, &x.support())?;
    let sigma = maximal_chain_through(poset, bottom, qh, &y.support())?;
    let pi1 = maximal_chain_through(poset, a, ph, &traces(ph))?;
    let sigma1 = maximal_chain_through(poset, a, qh, &traces(qh))?;
    let frame = Frame::build(poset, &pi, &sigma, &pi1, &sigma1)?;

    let bx = to_bcoords(&frame.rep, poset, x)?;
    let by = to_bcoords(&frame.rep, poset, y)?;
    let med = geodesic_median(&frame.rep.pip, &bx, &by)?;

    // d² = d(a ∨ x, a ∨ y)² + d(a ∧ x, a ∧ y)²: the first from the host hull,
    // the second from the frame coordinates below a
    let lower: Q = frame
        .rep
        .vertex_elem
        .iter()
        .enumerate()
        .filter(|&(_, &u)| poset.leq(u, a))
        .map(|(k, _)| (bx.get(k) - by.get(k)) * (bx.get(k) - by.get(k)))
        .sum();
    let upper = arch.as_ref().map(Arch::v2).unwrap_or_else(RootSum::zero);
    if med.length2 != upper.clone() + RootSum::rational(lower) {
        return Err(Error::Inconsistent(format!(
            "frame length² {} disagrees with the hull value {}",
            med.length2, upper
        )));
    }

    let path = bpath_to_chains(&frame.rep, &med.path)?;
    if path.start() != x || path.end() != y {
        return Err(Error::Inconsistent(
            "frame coordinates do not round-trip".into(),
        ));
    }
    Ok(Geodesic {
        path,
        length2: med.length2,
        length: med.length,
        arch: arch.map(|a| a.members().to_vec()),
        case,
        frame: Some(frame),
    })
}

/// Geodesic in a modular lattice: a straight segment in the b-coordinates of
/// a distributive sublattice through both supports.
pub fn geodesic_modular_lattice(
    poset: &GradedPoset,
    x: &ChainPoint,
    y: &ChainPoint,
) -> Result<Geodesic> {
    let cls = poset.classification();
    if !(cls.lattice && cls.modular) {
        return Err(Error::NotModular("host is not a modular lattice".into()));
    }
    check_points(poset, x, y)?;
    let bottom = poset.bottom().expect("lattices have a bottom");
    let top = poset
        .join(x.tau(poset), y.tau(poset))
        .expect("lattice join");
    let cx = maximal_chain_through(poset, bottom, top, &x.support())?;
    let cy = maximal_chain_through(poset, bottom, top, &y.support())?;
    let d = distributive_sublattice(poset, &[cx, cy])?;
    let rep = Birkhoff::of_subset(poset, &d)
        .map_err(|_| Error::Inconsistent("sublattice is not distributive".into()))?;
    let bx = to_bcoords(&rep, poset, x)?;
    let by = to_bcoords(&rep, poset, y)?;
    let length2 = RootSum::rational(bx.dist2(&by));
    let path = if x == y {
        PolyPath::constant(x.clone())
    } else {
        bpath_to_chains(&rep, &PolyPath::segment(bx, by))?
    };
    Ok(Geodesic {
        path,
        length: length2.to_f64().sqrt(),
        length2,
        arch: None,
        case: Case::P1,
        frame: None,
    })
}

/// Geodesic between b-points of a PIP, through its stable-ideal poset.
pub fn geodesic_pip(pip: &Pip, x: &BPoint, y: &BPoint) -> Result<(GradedPoset, Geodesic)> {
    let lattice = pip.stable_ideals()?;
    let coding = crate::metric::PipIdeals {
        pip,
        lattice: &lattice,
    };
    x.check(pip)?;
    y.check(pip)?;
    let cx = from_bcoords(&coding, x)?;
    let cy = from_bcoords(&coding, y)?;
    let g = geodesic(&lattice.poset, &cx, &cy)?;
    Ok((lattice.poset, g))
}
