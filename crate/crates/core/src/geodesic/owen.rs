use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};

use crate::arch::Arch;
use crate::error::{Error, Result};
use crate::metric::{BPoint, Breakpoint, PolyPath};
use crate::poset::Pip;
use crate::rational::{sqrt_ratio_time, Q};

/// Block index (1-based) of every vertex: `b` leaves the arch at the first
/// member missing it, `c` enters at the first member containing it.
fn block_of(arch: &Arch<FixedBitSet>, b_side: &FixedBitSet, n: usize) -> Result<Vec<usize>> {
    let members = arch.members();
    let mut block = vec![0; n];
    for (v, slot) in block.iter_mut().enumerate() {
        let in_b = b_side.contains(v);
        let flips: Vec<usize> = (1..members.len())
            .filter(|&i| members[i - 1].contains(v) != members[i].contains(v))
            .collect();
        match flips.as_slice() {
            [i] => *slot = *i,
            _ => {
                return Err(Error::InvalidArch(format!(
                    "vertex #{v} ({}) is not traversed exactly once",
                    if in_b { "x side" } else { "y side" }
                )))
            }
        }
    }
    Ok(block)
}

/// The path-space geodesic of a concave arch in a bipartite PIP.
///
/// `x` must be supported exactly on the first member and `y` on the last.
/// Breakpoint times `t_i = ‖X_i‖ / (‖X_i‖ + ‖Y_i‖)` are exact when the block
/// ratio is a rational square and otherwise the simplest rational within
/// `2^-80`; the coordinates at those times are exact.
pub fn owen_path(
    pip: &Pip,
    arch: &Arch<FixedBitSet>,
    x: &BPoint,
    y: &BPoint,
) -> Result<PolyPath<BPoint>> {
    if !arch.is_concave() {
        return Err(Error::NotConcave);
    }
    let b_side = x.support_set();
    let c_side = y.support_set();
    let members = arch.members();
    if members[0] != b_side {
        return Err(Error::SupportMismatch(format!(
            "supp x = {} but the arch starts at {}",
            pip.set_name(&b_side),
            pip.set_name(&members[0])
        )));
    }
    if members[members.len() - 1] != c_side {
        return Err(Error::SupportMismatch(format!(
            "supp y = {} but the arch ends at {}",
            pip.set_name(&c_side),
            pip.set_name(&members[members.len() - 1])
        )));
    }
    let n = pip.len();
    let block = block_of(arch, &b_side, n)?;
    let m = arch.blocks_len();
    let mut norms = vec![(Q::zero(), Q::zero()); m + 1];
    for v in 0..n {
        if b_side.contains(v) {
            norms[block[v]].0 += x.get(v) * x.get(v);
        } else {
            norms[block[v]].1 += y.get(v) * y.get(v);
        }
    }
    for (i, (want_x, want_y)) in arch.blocks().into_iter().enumerate() {
        if norms[i + 1] != (want_x, want_y) {
            return Err(Error::SupportMismatch(format!(
                "block {} norms disagree with ξ",
                i + 1
            )));
        }
    }
    let times: Vec<Q> = std::iter::once(Q::zero())
        .chain(norms[1..].iter().map(|(a, b)| sqrt_ratio_time(a, b)))
        .collect();
    if times.windows(2).any(|w| w[0] >= w[1]) || times[m] >= Q::one() {
        return Err(Error::Inconsistent(
            "Owen breakpoint times not increasing".into(),
        ));
    }
    let at = |t: &Q| -> BPoint {
        let coords = (0..n)
            .map(|v| {
                let ti = &times[block[v]];
                if b_side.contains(v) {
                    if t < ti {
                        x.get(v) * (Q::one() - t / ti)
                    } else {
                        Q::zero()
                    }
                } else if t > ti {
                    y.get(v) * ((t - ti) / (Q::one() - ti))
                } else {
                    Q::zero()
                }
            })
            .collect();
        BPoint::new(coords)
    };
    let mut bps = vec![Breakpoint {
        t: Q::zero(),
        point: x.clone(),
    }];
    for t in &times[1..] {
        bps.push(Breakpoint {
            t: t.clone(),
            point: at(t),
        });
    }
    bps.push(Breakpoint {
        t: Q::one(),
        point: y.clone(),
    });
    PolyPath::new(bps)
}
