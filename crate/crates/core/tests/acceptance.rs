//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orthogeo::arch::polygon_v2;
use orthogeo::catalog::{modular_lattices, modular_semilattices};
use orthogeo::fixtures;
use orthogeo::flow::solve_msip;
use orthogeo::geodesic::{geodesic, geodesic_modular_lattice, geodesic_pip};
use orthogeo::metric::{
    check_path, from_bcoords, join_point, meet_point, norm2, omega_point, simplex_distance2,
    to_bcoords, BPoint, ChainPoint, PipIdeals,
};
use orthogeo::oracle::{
    cat0_check, enumerate_pip_arches, exhaustive_msip, maximal_chains, oracle_distance,
};
use orthogeo::{GradedPoset, Pip, RootSum, Q};

mod common;
use common::{nested_polygons, random_pip_case, rat, simplex_pair};

// pinned tolerances and budgets
const TIGHT: f64 = 1e-9;
const QUADRANT_TOL: f64 = 1e-6;
const PYTHAGORAS_TOL: f64 = 1e-10;
const CAT0_TOL: f64 = 1e-6;
const ORACLE_SLACK: f64 = 0.03;
const ORACLE_N: u32 = 8;

type Outcome = Result<String, String>;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn bp(pip: &Pip, pairs: &[(&str, Q)]) -> BPoint {
    BPoint::from_pairs(pip, pairs).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_budget(elapsed: Duration, budget: Option<Duration>) -> Result<(), String> {
    match budget {
        Some(b) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
        _ => Ok(()),
    }
}

/// Fastest of a few runs, so that one cold cache does not decide a millisecond budget.
fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = None;
    let mut out = None;
    for _ in 0..runs {
        let start = Instant::now();
        let v = f();
        let e = start.elapsed();
        if best.is_none_or(|b| e < b) {
            best = Some(e);
        }
        out = Some(v);
    }
    (out.unwrap(), best.unwrap())
}

fn chain_points(pip: &Pip, x: &BPoint, y: &BPoint) -> (GradedPoset, ChainPoint, ChainPoint) {
    let lattice = pip.stable_ideals().unwrap();
    let coding = PipIdeals {
        pip,
        lattice: &lattice,
    };
    let cx = from_bcoords(&coding, x).unwrap();
    let cy = from_bcoords(&coding, y).unwrap();
    (lattice.poset.clone(), cx, cy)
}

fn oracle_band(
    host: &GradedPoset,
    x: &ChainPoint,
    y: &ChainPoint,
    length: f64,
) -> Result<f64, String> {
    let bound = oracle_distance(host, x, y, ORACLE_N).map_err(|e| e.to_string())?;
    ensure(
        bound >= length - TIGHT && bound <= length * (1.0 + ORACLE_SLACK),
        || format!("grid n={ORACLE_N} gives {bound}, engine {length}"),
    )?;
    Ok(bound)
}

fn cone() -> Outcome {
    let pip = fixtures::edge_bc_pip();
    let (x, y) = (bp(&pip, &[("b", q(1, 2))]), bp(&pip, &[("c", q(1, 2))]));
    let ((host, g), time) = best_of(5, || geodesic_pip(&pip, &x, &y).unwrap());
    within_budget(time, Some(Duration::from_millis(10)))?;
    ensure((g.length - 1.0).abs() <= TIGHT, || {
        format!("length {}", g.length)
    })?;
    let bottom = host.index_of("{}").unwrap();
    ensure(
        g.path
            .breakpoints()
            .iter()
            .any(|b| b.point == ChainPoint::vertex(bottom)),
        || "path misses the cone point".into(),
    )?;
    Ok(format!(
        "length {:.12}, bends at {{}}, {time:.2?}",
        g.length
    ))
}

fn square() -> Outcome {
    let pip = fixtures::square_pip();
    let (x, y) = (bp(&pip, &[("u", q(1, 2))]), bp(&pip, &[("v", q(1, 2))]));
    let ((host, g), time) = best_of(5, || geodesic_pip(&pip, &x, &y).unwrap());
    within_budget(time, Some(Duration::from_millis(10)))?;
    ensure((g.length - 0.5f64.sqrt()).abs() <= TIGHT, || {
        format!("length {}", g.length)
    })?;
    let lattice = pip.stable_ideals().unwrap();
    let coding = PipIdeals {
        pip: &pip,
        lattice: &lattice,
    };
    for b in g.path.breakpoints() {
        let on_line = x.lerp(&y, &b.t);
        let got = to_bcoords(&coding, &host, &b.point).map_err(|e| e.to_string())?;
        ensure(got == on_line, || {
            format!("breakpoint at t={} is {}", b.t, got.display(&pip))
        })?;
    }
    Ok(format!(
        "length {:.12}, {} breakpoints on the chord, {time:.2?}",
        g.length,
        g.path.breakpoints().len()
    ))
}

fn quadrant() -> Outcome {
    let pip = fixtures::quadrant_pip();
    let x = bp(&pip, &[("b1", q(1, 1)), ("b2", q(2, 5))]);
    let y = bp(&pip, &[("c1", q(1, 2)), ("c2", q(1, 1))]);
    let ((host, g), time) = best_of(3, || geodesic_pip(&pip, &x, &y).unwrap());
    within_budget(time, Some(Duration::from_secs(1)))?;
    ensure((g.length - 4.81f64.sqrt()).abs() <= QUADRANT_TOL, || {
        format!("length {}", g.length)
    })?;
    let names: Vec<&str> = g.arch.iter().flatten().map(|&u| host.name(u)).collect();
    ensure(names == ["{b1,b2}", "{b1,c1}", "{c1,c2}"], || {
        format!("arch {names:?}")
    })?;
    let list = enumerate_pip_arches(&pip, &x, &y).map_err(|e| e.to_string())?;
    let concave_min = list
        .iter()
        .find(|(a, _)| a.is_concave())
        .map(|(_, v)| v.clone());
    ensure(concave_min.as_ref() == Some(&g.length2), || {
        format!("concave minimum {concave_min:?}")
    })?;
    ensure(list[0].1 == g.length2, || {
        format!("arch minimum {}", list[0].1)
    })?;
    let (h, cx, cy) = chain_points(&pip, &x, &y);
    let bound = oracle_band(&h, &cx, &cy, g.length)?;
    Ok(format!(
        "v2 {} over {} arches, grid {bound:.6}, {time:.2?}",
        g.length2,
        list.len()
    ))
}

fn product() -> Outcome {
    let pip = fixtures::product_pip();
    let x = bp(&pip, &[("b", q(1, 2)), ("z", q(3, 10))]);
    let y = bp(&pip, &[("c", q(1, 2)), ("z", q(4, 5))]);
    let ((_, g), time) = best_of(3, || geodesic_pip(&pip, &x, &y).unwrap());
    within_budget(time, Some(Duration::from_millis(100)))?;
    ensure((g.length - 1.25f64.sqrt()).abs() <= TIGHT, || {
        format!("length {}", g.length)
    })?;
    // the factors: the cone on its own, and the segment for z
    let cone = fixtures::edge_bc_pip();
    let (_, gq) = geodesic_pip(
        &cone,
        &bp(&cone, &[("b", q(1, 2))]),
        &bp(&cone, &[("c", q(1, 2))]),
    )
    .map_err(|e| e.to_string())?;
    let len_r = q(4, 5) - q(3, 10);
    let expect = gq.length2.clone() + RootSum::rational(&len_r * &len_r);
    ensure(g.length2 == expect, || {
        format!("v2 {} vs factors {expect}", g.length2)
    })?;
    Ok(format!(
        "length {:.12} = sqrt({} + {}), {time:.2?}",
        g.length,
        gq.length2,
        &len_r * &len_r
    ))
}

fn m3() -> Outcome {
    let m = fixtures::m3();
    let x = ChainPoint::vertex(m.index_of("a").unwrap());
    let y = ChainPoint::vertex(m.index_of("b").unwrap());
    let (h, time) = best_of(3, || geodesic_modular_lattice(&m, &x, &y).unwrap());
    within_budget(time, Some(Duration::from_secs(1)))?;
    let g = geodesic(&m, &x, &y).map_err(|e| e.to_string())?;
    for (route, len) in [("frame", h.length), ("engine", g.length)] {
        ensure((len - 2f64.sqrt()).abs() <= TIGHT, || {
            format!("{route} length {len}")
        })?;
    }
    check_path(&m, &h.path).map_err(|e| e.to_string())?;
    let bound = oracle_band(&m, &x, &y, h.length)?;
    Ok(format!(
        "length {:.12}, grid {bound:.6}, {time:.2?}",
        h.length
    ))
}

fn arch_optimality() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut undercut = 0;
    for case in 0..200 {
        let (pip, x, y) = random_pip_case(&mut rng, 4);
        let (_, g) = geodesic_pip(&pip, &x, &y).map_err(|e| format!("case {case}: {e}"))?;
        let list = enumerate_pip_arches(&pip, &x, &y).map_err(|e| format!("case {case}: {e}"))?;
        let concave: Vec<&RootSum> = list
            .iter()
            .filter(|(a, _)| a.is_concave())
            .map(|(_, v)| v)
            .collect();
        ensure(concave.first() == Some(&&g.length2), || {
            format!(
                "case {case}: engine v2 {} vs concave minimum {:?}",
                g.length2,
                concave.first()
            )
        })?;
        ensure(concave.get(1).is_none_or(|v| **v > g.length2), || {
            format!("case {case}: tied minimizers")
        })?;
        if list[0].1 < g.length2 {
            undercut += 1;
        }
    }
    let time = start.elapsed();
    within_budget(time, Some(Duration::from_secs(30)))?;
    Ok(format!(
        "200 instances exact and unique over concave arches; raw v below the geodesic in {undercut}, {time:.2?}"
    ))
}

fn parametric_flow() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..200 {
        let (pip, x, y) = random_pip_case(&mut rng, 4);
        let lambda = rat(&mut rng, 12);
        let fast = solve_msip(&pip, &x, &y, &lambda).map_err(|e| e.to_string())?;
        let slow = exhaustive_msip(&pip, &x, &y, &lambda).map_err(|e| e.to_string())?;
        ensure(fast == slow, || {
            format!("case {case} at λ={lambda}: {fast:?} vs {slow:?}")
        })?;
    }
    let time = start.elapsed();
    within_budget(time, Some(Duration::from_secs(10)))?;
    Ok(format!("200 triples exact, {time:.2?}"))
}

fn nonexpansive() -> Outcome {
    let lattices = modular_lattices(8);
    let semis = modular_semilattices(7);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for case in 0..1000 {
        let host = &lattices[rng.random_range(0..lattices.len())];
        let a = rng.random_range(0..host.len());
        let (x, y) = simplex_pair(host, &mut rng);
        let d2 = simplex_distance2(host, &x, &y).unwrap();
        let m2 = simplex_distance2(
            host,
            &meet_point(host, a, &x).unwrap(),
            &meet_point(host, a, &y).unwrap(),
        )
        .unwrap();
        let j2 = simplex_distance2(
            host,
            &join_point(host, a, &x).unwrap(),
            &join_point(host, a, &y).unwrap(),
        )
        .unwrap();
        ensure(m2 <= d2 && j2 <= d2, || {
            format!("pair {case}: meet or join expands")
        })?;
        let gap = ((&m2 + &j2) - &d2).to_f64().unwrap_or(f64::INFINITY).abs();
        worst = worst.max(gap);
        ensure(gap <= PYTHAGORAS_TOL, || {
            format!("pair {case}: Pythagorean gap {gap}")
        })?;
        // ω over semilattices as well, where joins may be missing
        let semi = &semis[rng.random_range(0..semis.len())];
        let b = rng.random_range(0..semi.len());
        let (u, v) = simplex_pair(semi, &mut rng);
        let before = simplex_distance2(semi, &u, &v).unwrap();
        let after =
            simplex_distance2(semi, &omega_point(semi, b, &u), &omega_point(semi, b, &v)).unwrap();
        ensure(after <= before, || format!("pair {case}: ω expands"))?;
    }
    Ok(format!("1000 pairs, worst Pythagorean gap {worst:e}"))
}

fn points_on(chain: &[usize]) -> Vec<ChainPoint> {
    let k = chain.len() as i64;
    let total = k * (k + 1) / 2;
    let rising = chain
        .iter()
        .enumerate()
        .map(|(i, &u)| (u, q(i as i64 + 1, total)));
    let falling = chain
        .iter()
        .enumerate()
        .map(|(i, &u)| (u, q(k - i as i64, total)));
    let flat = chain.iter().map(|&u| (u, q(1, k)));
    vec![
        ChainPoint::new(rising).unwrap(),
        ChainPoint::new(falling).unwrap(),
        ChainPoint::new(flat).unwrap(),
    ]
}

fn supermodular() -> Outcome {
    let lattices = modular_lattices(8);
    let mut checks = 0usize;
    for (index, host) in lattices.iter().enumerate() {
        let chains = maximal_chains(host, usize::MAX).map_err(|e| e.to_string())?;
        for chain in &chains {
            for x in points_on(chain) {
                let f: Vec<Q> = (0..host.len())
                    .map(|a| norm2(host, &meet_point(host, a, &x).unwrap()))
                    .collect();
                for a in 0..host.len() {
                    for b in 0..host.len() {
                        let (m, j) = (host.meet(a, b).unwrap(), host.join(a, b).unwrap());
                        ensure(&f[a] + &f[b] <= &f[m] + &f[j], || {
                            format!("lattice {index}: {} and {}", host.name(a), host.name(b))
                        })?;
                        checks += 1;
                    }
                }
                for (a, b) in host.covers() {
                    ensure(f[a] < f[b], || {
                        format!("lattice {index}: cover {} < {}", host.name(a), host.name(b))
                    })?;
                }
            }
        }
    }
    Ok(format!("{} lattices, {checks} pair checks", lattices.len()))
}

fn cat0() -> Outcome {
    let mut worst = 0.0f64;
    for (name, host) in [
        ("edge bc", fixtures::edge_bc_poset()),
        ("quadrant", fixtures::quadrant_poset()),
        ("product", fixtures::product_poset()),
    ] {
        let report = cat0_check(&host, 200, 10).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.max_violation <= CAT0_TOL, || {
            format!("{name}: violation {}", report.max_violation)
        })?;
        worst = worst.max(report.max_violation);
    }
    Ok(format!("3 hosts x 200 samples, max violation {worst:e}"))
}

fn polygons() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..100 {
        let (inner, outer) = nested_polygons(&mut rng);
        let (v, v2) = (polygon_v2(&inner), polygon_v2(&outer));
        ensure(
            (v.clone() - v2.clone()).signum() == std::cmp::Ordering::Greater,
            || format!("pair {case}: {v} vs {v2}"),
        )?;
    }
    Ok("100 nested pairs strictly ordered".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("cone over an edge", cone),
        ("Euclidean square", square),
        ("quadrant instance", quadrant),
        ("product instance", product),
        ("M3 atoms", m3),
        ("randomized arch optimality", arch_optimality),
        ("parametric flow", parametric_flow),
        ("nonexpansive maps", nonexpansive),
        ("supermodularity", supermodular),
        ("CAT(0) convexity", cat0),
        ("polygon monotonicity", polygons),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
