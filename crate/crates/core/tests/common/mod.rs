//! Random instances shared by the property and acceptance targets.
#![allow(dead_code)]

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use orthogeo::arch::{upper_chain, Xi};
use orthogeo::metric::{BPoint, ChainPoint};
use orthogeo::sample::{random_bipartite_pip, random_bpoint_on, random_maximal_chain};
use orthogeo::{GradedPoset, Pip, Q};

pub fn rat(rng: &mut ChaCha8Rng, den: i64) -> Q {
    Q::new(rng.random_range(0..=den).into(), den.into())
}

/// Two points of one maximal simplex.
pub fn simplex_pair(host: &GradedPoset, rng: &mut ChaCha8Rng) -> (ChainPoint, ChainPoint) {
    let chain = random_maximal_chain(host, rng);
    let mut one = || {
        let mut w: Vec<i64> = chain.iter().map(|_| rng.random_range(0..=4)).collect();
        if w.iter().all(|&k| k == 0) {
            w[0] = 1;
        }
        let total: i64 = w.iter().sum();
        ChainPoint::new(
            chain
                .iter()
                .zip(&w)
                .map(|(&u, &k)| (u, Q::new(k.into(), total.into()))),
        )
        .unwrap()
    };
    (one(), one())
}

pub fn random_pip_case(rng: &mut ChaCha8Rng, max_side: usize) -> (Pip, BPoint, BPoint) {
    let nb = rng.random_range(1..=max_side);
    let nc = rng.random_range(1..=max_side);
    let pip = random_bipartite_pip(rng, nb, nc, 0.4, 0.3);
    let b: Vec<usize> = (0..nb).collect();
    let c: Vec<usize> = (nb..nb + nc).collect();
    let x = random_bpoint_on(&pip, &b, rng, 5);
    let y = random_bpoint_on(&pip, &c, rng, 5);
    (pip, x, y)
}

/// Upper-right hull from `(κ,0)` to `(0,λ)` of a point set in the box.
pub fn hull(points: &[Xi]) -> Vec<Xi> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    pts.dedup();
    // keep only the topmost point for each first coordinate
    let mut col: Vec<Xi> = Vec::new();
    for p in pts {
        if let Some(last) = col.last_mut() {
            if last.0 == p.0 {
                *last = p;
                continue;
            }
        }
        col.push(p);
    }
    upper_chain(&col)
        .into_iter()
        .map(|i| col[i].clone())
        .collect()
}

/// A polygon and a strictly larger one containing it, both with corners
/// `(0,0)`, `(κ,0)`, `(0,λ)`.
pub fn nested_polygons(rng: &mut ChaCha8Rng) -> (Vec<Xi>, Vec<Xi>) {
    let den = 24;
    loop {
        let kappa = Q::new(rng.random_range(1..=den).into(), 8.into());
        let lambda = Q::new(rng.random_range(1..=den).into(), 8.into());
        let mut pts: Vec<Xi> = vec![(kappa.clone(), Q::zero()), (Q::zero(), lambda.clone())];
        for _ in 0..rng.random_range(0..5) {
            pts.push((&kappa * rat(rng, den), &lambda * rat(rng, den)));
        }
        let inner = hull(&pts);
        // a hull through the far corner cannot grow; draw a new one
        for _ in 0..50 {
            let p = (&kappa * rat(rng, den), &lambda * rat(rng, den));
            let mut more = pts.clone();
            more.push(p);
            let outer = hull(&more);
            if outer != inner {
                return (inner, outer);
            }
        }
    }
}
