use num_traits::{One, Zero};

use super::{simplex_distance2, BPoint, ChainPoint};
use crate::error::{Error, Result};
use crate::poset::{GradedPoset, Pip};
use crate::rational::{to_f64, Q};

/// A complex whose points can be joined by straight segments inside a cell.
pub trait PathSpace {
    type Point: Clone + PartialEq + std::fmt::Debug;

    /// Exact squared length of the segment `[a, b]`; fails when the two
    /// points share no cell.
    fn segment2(&self, a: &Self::Point, b: &Self::Point) -> Result<Q>;

    fn lerp(&self, a: &Self::Point, b: &Self::Point, s: &Q) -> Self::Point;
}

impl PathSpace for GradedPoset {
    type Point = ChainPoint;

    fn segment2(&self, a: &ChainPoint, b: &ChainPoint) -> Result<Q> {
        simplex_distance2(self, a, b)
    }

    fn lerp(&self, a: &ChainPoint, b: &ChainPoint, s: &Q) -> ChainPoint {
        a.lerp(b, s)
    }
}

impl PathSpace for Pip {
    type Point = BPoint;

    /// Two b-points share a cube exactly when the union of their supports is
    /// stable; the order polytope of that cube is convex, so the segment is
    /// Euclidean.
    fn segment2(&self, a: &BPoint, b: &BPoint) -> Result<Q> {
        let mut u = a.support_set();
        u.union_with(&b.support_set());
        if !self.is_stable(&u) {
            return Err(Error::NotCommonSimplex);
        }
        Ok(a.dist2(b))
    }

    fn lerp(&self, a: &BPoint, b: &BPoint, s: &Q) -> BPoint {
        a.lerp(b, s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakpoint<P> {
    pub t: Q,
    pub point: P,
}

/// Piecewise-linear path with rational breakpoint times from 0 to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyPath<P> {
    breakpoints: Vec<Breakpoint<P>>,
}

impl<P: Clone + PartialEq> PolyPath<P> {
    pub fn new(breakpoints: Vec<Breakpoint<P>>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidPath(
                "a path needs at least two breakpoints".into(),
            ));
        }
        if !breakpoints[0].t.is_zero() || !breakpoints.last().unwrap().t.is_one() {
            return Err(Error::InvalidPath("times must run from 0 to 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0].t >= w[1].t) {
            return Err(Error::InvalidPath("times must increase strictly".into()));
        }
        Ok(Self { breakpoints })
    }

    pub fn constant(p: P) -> Self {
        Self::segment(p.clone(), p)
    }

    pub fn segment(a: P, b: P) -> Self {
        Self {
            breakpoints: vec![
                Breakpoint {
                    t: Q::zero(),
                    point: a,
                },
                Breakpoint {
                    t: Q::one(),
                    point: b,
                },
            ],
        }
    }

    pub fn breakpoints(&self) -> &[Breakpoint<P>] {
        &self.breakpoints
    }

    pub fn start(&self) -> &P {
        &self.breakpoints[0].point
    }

    pub fn end(&self) -> &P {
        &self.breakpoints.last().unwrap().point
    }

    /// Same geometry traversed backwards.
    pub fn reversed(&self) -> Self {
        Self {
            breakpoints: self
                .breakpoints
                .iter()
                .rev()
                .map(|b| Breakpoint {
                    t: Q::one() - &b.t,
                    point: b.point.clone(),
                })
                .collect(),
        }
    }

    pub fn map_points<R: Clone + PartialEq, F: FnMut(&P) -> Result<R>>(
        &self,
        mut f: F,
    ) -> Result<PolyPath<R>> {
        let breakpoints = self
            .breakpoints
            .iter()
            .map(|b| {
                Ok(Breakpoint {
                    t: b.t.clone(),
                    point: f(&b.point)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(PolyPath { breakpoints })
    }

    /// The same path with extra breakpoint times inserted.
    pub fn with_times(&self, extra: &[Q], space: &impl PathSpace<Point = P>) -> Self
    where
        P: std::fmt::Debug,
    {
        let mut times: Vec<Q> = self.breakpoints.iter().map(|b| b.t.clone()).collect();
        times.extend(extra.iter().cloned());
        times.sort();
        times.dedup();
        let breakpoints = times
            .into_iter()
            .map(|t| {
                let point = self.point_at(&t, space);
                Breakpoint { t, point }
            })
            .collect();
        Self { breakpoints }
    }

    /// Linear interpolation between the surrounding breakpoints.
    pub fn point_at(&self, t: &Q, space: &impl PathSpace<Point = P>) -> P
    where
        P: std::fmt::Debug,
    {
        let bps = &self.breakpoints;
        if t <= &bps[0].t {
            return bps[0].point.clone();
        }
        for w in bps.windows(2) {
            if t <= &w[1].t {
                if t == &w[1].t {
                    return w[1].point.clone();
                }
                let s = (t - &w[0].t) / (&w[1].t - &w[0].t);
                return space.lerp(&w[0].point, &w[1].point, &s);
            }
        }
        bps.last().unwrap().point.clone()
    }

    /// `k` evenly spaced points including both ends (`k ≥ 2`), or the start
    /// alone for `k = 1`.
    pub fn samples(&self, k: usize, space: &impl PathSpace<Point = P>) -> Vec<(Q, P)>
    where
        P: std::fmt::Debug,
    {
        match k {
            0 => Vec::new(),
            1 => vec![(Q::zero(), self.start().clone())],
            _ => (0..k)
                .map(|i| {
                    let t = Q::new((i as i64).into(), ((k - 1) as i64).into());
                    let p = self.point_at(&t, space);
                    (t, p)
                })
                .collect(),
        }
    }
}

/// Sum of segment lengths.
pub fn path_length<S: PathSpace>(space: &S, path: &PolyPath<S::Point>) -> Result<f64> {
    let mut total = 0.0;
    for w in path.breakpoints().windows(2) {
        total += to_f64(&space.segment2(&w[0].point, &w[1].point)?).sqrt();
    }
    Ok(total)
}

/// Checks that every segment lies in a cell of the space.
pub fn check_path<S: PathSpace>(space: &S, path: &PolyPath<S::Point>) -> Result<()> {
    for w in path.breakpoints().windows(2) {
        space.segment2(&w[0].point, &w[1].point).map_err(|_| {
            Error::InvalidPath(format!(
                "segment ending at t = {} leaves every cell",
                w[1].t
            ))
        })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::q;

    #[test]
    fn cone_path_length() {
        let pip = fixtures::edge_bc_pip();
        let x = BPoint::from_pairs(&pip, &[("b", q(1, 2))]).unwrap();
        let y = BPoint::from_pairs(&pip, &[("c", q(1, 2))]).unwrap();
        let o = BPoint::zero(2);
        let path = PolyPath::new(vec![
            Breakpoint {
                t: Q::zero(),
                point: x.clone(),
            },
            Breakpoint {
                t: q(1, 2),
                point: o,
            },
            Breakpoint {
                t: Q::one(),
                point: y.clone(),
            },
        ])
        .unwrap();
        assert!((path_length(&pip, &path).unwrap() - 1.0).abs() < 1e-12);
        let straight = PolyPath::segment(x, y);
        assert_eq!(
            path_length(&pip, &straight).unwrap_err(),
            Error::NotCommonSimplex
        );
    }

    #[test]
    fn constant_and_square_paths() {
        let pip = fixtures::square_pip();
        let x = BPoint::from_pairs(&pip, &[("u", q(1, 2))]).unwrap();
        let y = BPoint::from_pairs(&pip, &[("v", q(1, 2))]).unwrap();
        assert_eq!(
            path_length(&pip, &PolyPath::constant(x.clone())).unwrap(),
            0.0
        );
        let d = path_length(&pip, &PolyPath::segment(x.clone(), y.clone())).unwrap();
        assert!((d - 0.5f64.sqrt()).abs() < 1e-12);
        let mid = PolyPath::segment(x, y).point_at(&q(1, 2), &pip);
        assert_eq!(mid.coords(), &[q(1, 4), q(1, 4)]);
    }

    #[test]
    fn rejects_bad_times() {
        let a = BPoint::zero(1);
        let bad = PolyPath::new(vec![
            Breakpoint {
                t: Q::zero(),
                point: a.clone(),
            },
            Breakpoint {
                t: Q::zero(),
                point: a.clone(),
            },
            Breakpoint {
                t: Q::one(),
                point: a,
            },
        ]);
        assert!(bad.is_err());
    }
}
