use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::geodesic::geodesic;
use crate::metric::ChainPoint;
use crate::poset::GradedPoset;
use crate::rational::{q, Q};
use crate::sample::random_point;

/// Denominator of the weights of sampled points.
const SAMPLE_DEN: i64 = 4;

/// The sample and time where the convexity inequality was worst.
#[derive(Clone, Debug, Serialize)]
pub struct Cat0Case {
    pub index: usize,
    pub t: String,
    pub x: String,
    pub y: String,
    pub z: String,
    pub violation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cat0Report {
    pub samples: usize,
    /// Largest `d(z, γ_t)² - (1-t)d(z,x)² - t d(z,y)² + t(1-t)d(x,y)²`,
    /// clipped below at zero.
    pub max_violation: f64,
    pub worst_case: Option<Cat0Case>,
}

/// Samples `k` triples `x, y, z` and checks
/// `d(z, γ_t)² ≤ (1-t)d(z,x)² + t d(z,y)² - t(1-t)d(x,y)²` on the geodesic
/// `γ` from `x` to `y` at `t = 1/8, ..., 7/8`. Sample `i` draws from a
/// ChaCha stream keyed by `(seed, i)`, so results do not depend on the
/// thread count.
pub fn cat0_check(poset: &GradedPoset, samples: usize, seed: u64) -> Result<Cat0Report> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    cat0_check_with(poset, samples, seed, threads)
}

fn one_sample(poset: &GradedPoset, seed: u64, index: usize) -> Result<Cat0Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let x = random_point(poset, &mut rng, SAMPLE_DEN);
    let y = random_point(poset, &mut rng, SAMPLE_DEN);
    let z = random_point(poset, &mut rng, SAMPLE_DEN);
    let d2 = |a: &ChainPoint, b: &ChainPoint| -> Result<f64> {
        Ok(geodesic(poset, a, b)?.length2.to_f64())
    };
    let g = geodesic(poset, &x, &y)?;
    let dxy = g.length2.to_f64();
    let (dzx, dzy) = (d2(&z, &x)?, d2(&z, &y)?);
    let mut worst: Option<(f64, Q)> = None;
    for i in 1..8 {
        let t = q(i, 8);
        let tf = i as f64 / 8.0;
        let pt = g.path.point_at(&t, poset);
        let bound = (1.0 - tf) * dzx + tf * dzy - tf * (1.0 - tf) * dxy;
        let v = d2(&z, &pt)? - bound;
        if worst.as_ref().is_none_or(|w| v > w.0) {
            worst = Some((v, t));
        }
    }
    let (violation, t) = worst.unwrap_or((0.0, Q::one()));
    Ok(Cat0Case {
        index,
        t: t.to_string(),
        x: x.display(poset),
        y: y.display(poset),
        z: z.display(poset),
        violation,
    })
}

pub fn cat0_check_with(
    poset: &GradedPoset,
    samples: usize,
    seed: u64,
    threads: usize,
) -> Result<Cat0Report> {
    poset.require_modular_semilattice()?;
    let threads = threads.clamp(1, samples.max(1));
    let chunk = samples.div_ceil(threads).max(1);
    let results: Vec<Result<Vec<Cat0Case>>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..samples)
            .step_by(chunk)
            .map(|lo| {
                let hi = (lo + chunk).min(samples);
                s.spawn(move || (lo..hi).map(|i| one_sample(poset, seed, i)).collect())
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sampler thread panicked"))
            .collect()
    });
    let mut worst: Option<Cat0Case> = None;
    for part in results {
        for case in part? {
            if worst.as_ref().is_none_or(|w| case.violation > w.violation) {
                worst = Some(case);
            }
        }
    }
    Ok(Cat0Report {
        samples,
        max_violation: worst.as_ref().map_or(0.0, |w| w.violation.max(0.0)),
        worst_case: worst,
    })
}
