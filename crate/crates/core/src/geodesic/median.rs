use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};

use super::owen::owen_path;
use crate::arch::{extreme_arch, Arch, PipXi};
use crate::error::Result;
use crate::metric::{BPoint, Breakpoint, PolyPath};
use crate::poset::Pip;
use crate::rational::Q;
use crate::surd::RootSum;

/// A geodesic in the cube complex of a PIP.
#[derive(Clone, Debug, PartialEq)]
pub struct MedianGeodesic {
    pub path: PolyPath<BPoint>,
    /// The concave arch of the bipartite part, as vertex sets of the full
    /// PIP. `None` when the two points differ only on isolated vertices.
    pub arch: Option<Arch<FixedBitSet>>,
    pub length2: RootSum,
    pub length: f64,
}

/// Geodesic between two b-points of a PIP.
///
/// Vertices outside `supp x ∪ supp y` stay at zero. Inside it, vertices with
/// no neighbour in the union split off as a Euclidean factor and move in a
/// straight line; the rest is bipartite with `B = supp x`, `C = supp y`, and
/// follows the Owen path of its extreme arch.
pub fn geodesic_median(pip: &Pip, x: &BPoint, y: &BPoint) -> Result<MedianGeodesic> {
    x.check(pip)?;
    y.check(pip)?;
    let n = pip.len();
    if x == y {
        return Ok(MedianGeodesic {
            path: PolyPath::constant(x.clone()),
            arch: None,
            length2: RootSum::zero(),
            length: 0.0,
        });
    }
    let mut keep = x.support_set();
    keep.union_with(&y.support_set());
    let (bip, flat): (Vec<usize>, Vec<usize>) = keep
        .ones()
        .partition(|&v| pip.neighbors(v).ones().any(|w| keep.contains(w)));
    let flat2: Q = flat
        .iter()
        .map(|&v| (x.get(v) - y.get(v)) * (x.get(v) - y.get(v)))
        .sum();

    if bip.is_empty() {
        let length2 = RootSum::rational(flat2);
        let length = length2.to_f64().sqrt();
        return Ok(MedianGeodesic {
            path: PolyPath::segment(x.clone(), y.clone()),
            arch: None,
            length2,
            length,
        });
    }

    let sub = pip.restrict(&bip);
    let xs = x.pick(&bip);
    let ys = y.pick(&bip);
    let oracle = PipXi {
        pip: &sub,
        x: &xs,
        y: &ys,
    };
    let p = (xs.support_set(), (xs.norm2(), Q::zero()));
    let q = (ys.support_set(), (Q::zero(), ys.norm2()));
    let arch = extreme_arch(&oracle, p, q)?;
    let sub_path = owen_path(&sub, &arch, &xs, &ys)?;

    let breakpoints = sub_path
        .breakpoints()
        .iter()
        .map(|bp| {
            let mut coords = vec![Q::zero(); n];
            for (k, &v) in bip.iter().enumerate() {
                coords[v] = bp.point.get(k).clone();
            }
            let r = Q::one() - &bp.t;
            for &v in &flat {
                coords[v] = &r * x.get(v) + &bp.t * y.get(v);
            }
            Breakpoint {
                t: bp.t.clone(),
                point: BPoint::new(coords),
            }
        })
        .collect();
    let path = PolyPath::new(breakpoints)?;
    let length2 = arch.v2() + RootSum::rational(flat2);
    let length = length2.to_f64().max(0.0).sqrt();
    let arch = arch.map(|s| {
        let mut full = FixedBitSet::with_capacity(n);
        for k in s.ones() {
            full.insert(bip[k]);
        }
        full
    });
    Ok(MedianGeodesic {
        path,
        arch: Some(arch),
        length2,
        length,
    })
}
