//! Fixed instances for the benchmarks.

use orthogeo::fixtures;
use orthogeo::metric::{from_bcoords, BPoint, ChainPoint, PipIdeals};
use orthogeo::sample::{random_bipartite_pip, random_bpoint_on};
use orthogeo::{GradedPoset, Pip, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// The two-quadrant tree-space instance with its known answer `√4.81`.
pub fn quadrant() -> (Pip, BPoint, BPoint) {
    let pip = fixtures::quadrant_pip();
    let x = BPoint::from_pairs(&pip, &[("b1", q(1, 1)), ("b2", q(2, 5))]).unwrap();
    let y = BPoint::from_pairs(&pip, &[("c1", q(1, 2)), ("c2", q(1, 1))]).unwrap();
    (pip, x, y)
}

/// The quadrant instance in chain form over its ideal poset.
pub fn quadrant_chain() -> (GradedPoset, ChainPoint, ChainPoint) {
    let (pip, x, y) = quadrant();
    let lattice = pip.stable_ideals().unwrap();
    let coding = PipIdeals {
        pip: &pip,
        lattice: &lattice,
    };
    let cx = from_bcoords(&coding, &x).unwrap();
    let cy = from_bcoords(&coding, &y).unwrap();
    (lattice.poset.clone(), cx, cy)
}

/// Two atoms of M3.
pub fn m3_atoms() -> (GradedPoset, ChainPoint, ChainPoint) {
    let m = fixtures::m3();
    let a = ChainPoint::vertex(m.index_of("a").unwrap());
    let b = ChainPoint::vertex(m.index_of("b").unwrap());
    (m, a, b)
}

/// Random bipartite PIPs with `side` vertices per side and points on opposite sides.
pub fn random_pips(seed: u64, count: usize, side: usize) -> Vec<(Pip, BPoint, BPoint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let pip = random_bipartite_pip(&mut rng, side, side, 0.4, 0.3);
            let b: Vec<usize> = (0..side).collect();
            let c: Vec<usize> = (side..2 * side).collect();
            let x = random_bpoint_on(&pip, &b, &mut rng, 8);
            let y = random_bpoint_on(&pip, &c, &mut rng, 8);
            (pip, x, y)
        })
        .collect()
}

/// A parameter in `[0, 1]` with denominator 12.
pub fn lambda(rng: &mut ChaCha8Rng) -> Q {
    q(rng.random_range(0..=12), 12)
}
