use fixedbitset::FixedBitSet;

use crate::arch::{Arch, Xi};
use crate::error::{Error, Result};
use crate::flow::bipartition;
use crate::limits::size_cap;
use crate::metric::{join_point, meet_point, norm2_above, BPoint, ChainPoint};
use crate::poset::{GradedPoset, Pip};
use crate::surd::RootSum;

/// Every arch together with its exact `v²`, sorted by `v²` and then by
/// member list.
pub type ArchList<T> = Vec<(Arch<T>, RootSum)>;

/// Depth-first search over sequences `start = u_0, ..., u_m = end` whose
/// two traces move strictly. `down(i, j)` says `j` may follow `i`.
fn sequences(
    n: usize,
    start: usize,
    end: usize,
    down: impl Fn(usize, usize) -> bool,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut stack = vec![start];
    fn rec(
        n: usize,
        end: usize,
        down: &dyn Fn(usize, usize) -> bool,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let last = *stack.last().unwrap();
        if last == end {
            if out.len() >= cap {
                return Err(Error::SizeCap {
                    what: "arches",
                    cap,
                });
            }
            out.push(stack.clone());
            return Ok(());
        }
        for j in 0..n {
            if down(last, j) {
                stack.push(j);
                rec(n, end, down, stack, out, cap)?;
                stack.pop();
            }
        }
        Ok(())
    }
    rec(n, end, &down, &mut stack, &mut out, cap)?;
    Ok(out)
}

fn finish<T: Clone + Ord>(mut list: Vec<Arch<T>>) -> ArchList<T> {
    let mut out: ArchList<T> = list
        .drain(..)
        .map(|a| {
            let v2 = a.v2();
            (a, v2)
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.members().cmp(b.0.members())));
    out
}

/// All arches of stable ideals between `B = supp x` and `C = supp y` in a
/// bipartite PIP: `B ∩ U` strictly shrinks and `C ∩ U` strictly grows.
pub fn enumerate_pip_arches(pip: &Pip, x: &BPoint, y: &BPoint) -> Result<ArchList<Vec<usize>>> {
    enumerate_pip_arches_capped(pip, x, y, size_cap())
}

pub fn enumerate_pip_arches_capped(
    pip: &Pip,
    x: &BPoint,
    y: &BPoint,
    cap: usize,
) -> Result<ArchList<Vec<usize>>> {
    x.check(pip)?;
    y.check(pip)?;
    let (b, c) = bipartition(pip, x, y)?;
    let ideals = pip.stable_ideals_capped(cap)?.ideals;
    let side = |u: &FixedBitSet, s: &FixedBitSet| -> FixedBitSet {
        let mut t = u.clone();
        t.intersect_with(s);
        t
    };
    let bs: Vec<FixedBitSet> = ideals.iter().map(|u| side(u, &b)).collect();
    let cs: Vec<FixedBitSet> = ideals.iter().map(|u| side(u, &c)).collect();
    let find = |s: &FixedBitSet| ideals.iter().position(|u| u == s);
    let (start, end) = match (find(&b), find(&c)) {
        (Some(s), Some(e)) => (s, e),
        _ => return Err(Error::Inconsistent("supports are not stable ideals".into())),
    };
    if start == end {
        return Ok(Vec::new());
    }
    let strict_sub = |a: &FixedBitSet, b: &FixedBitSet| a.is_subset(b) && a != b;
    let seqs = sequences(
        ideals.len(),
        start,
        end,
        |i, j| strict_sub(&bs[j], &bs[i]) && strict_sub(&cs[i], &cs[j]),
        cap,
    )?;
    let xi = |k: usize| -> Xi {
        (
            bs[k].ones().map(|v| x.get(v) * x.get(v)).sum(),
            cs[k].ones().map(|v| y.get(v) * y.get(v)).sum(),
        )
    };
    let arches = seqs
        .into_iter()
        .map(|s| {
            let members = s.iter().map(|&k| ideals[k].ones().collect()).collect();
            Arch::new(members, s.iter().map(|&k| xi(k)).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(finish(arches))
}

/// Arches between `τx ∨ a` and `τy ∨ a` in a modular semilattice, over the
/// candidates of the metric interval, where `a = ω_q(p) ∨ ω_p(q)`. Also
/// returns `a`. Sequences whose `ξ` values repeat (an empty block) are not
/// arches in the metric sense and are left out.
pub fn enumerate_arches(
    poset: &GradedPoset,
    x: &ChainPoint,
    y: &ChainPoint,
) -> Result<(usize, ArchList<usize>)> {
    enumerate_arches_capped(poset, x, y, size_cap())
}

pub fn enumerate_arches_capped(
    poset: &GradedPoset,
    x: &ChainPoint,
    y: &ChainPoint,
    cap: usize,
) -> Result<(usize, ArchList<usize>)> {
    poset.require_modular_semilattice()?;
    x.check(poset)?;
    y.check(poset)?;
    let (p, q) = (x.tau(poset), y.tau(poset));
    let missing = || Error::Inconsistent("filter of a is not closed under joins".into());
    let a = poset
        .join(poset.omega(q, p), poset.omega(p, q))
        .ok_or_else(missing)?;
    let ph = poset.join(p, a).ok_or_else(missing)?;
    let qh = poset.join(q, a).ok_or_else(missing)?;
    if ph == qh {
        return Ok((a, Vec::new()));
    }
    let cands = poset.metric_interval(ph, qh)?.elements;
    let tp: Vec<usize> = cands
        .iter()
        .map(|&u| poset.meet(u, ph).expect("meet"))
        .collect();
    let tq: Vec<usize> = cands
        .iter()
        .map(|&u| poset.meet(u, qh).expect("meet"))
        .collect();
    let pos = |u: usize| {
        cands
            .iter()
            .position(|&w| w == u)
            .expect("ends lie in the interval")
    };
    let seqs = sequences(
        cands.len(),
        pos(ph),
        pos(qh),
        |i, j| poset.lt(tp[j], tp[i]) && poset.lt(tq[i], tq[j]),
        cap,
    )?;
    let base = poset.rank(a);
    let xa = join_point(poset, a, x)?;
    let ya = join_point(poset, a, y)?;
    let xi = |u: usize| -> Result<Xi> {
        Ok((
            norm2_above(poset, &meet_point(poset, u, &xa)?, base),
            norm2_above(poset, &meet_point(poset, u, &ya)?, base),
        ))
    };
    let mut arches = Vec::new();
    for s in seqs {
        let members: Vec<usize> = s.iter().map(|&k| cands[k]).collect();
        let xis = members.iter().map(|&u| xi(u)).collect::<Result<Vec<_>>>()?;
        match Arch::new(members, xis) {
            Ok(arch) => arches.push(arch),
            Err(Error::EmptyBlock(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok((a, finish(arches)))
}
