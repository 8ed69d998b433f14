//! Invariants checked on random and exhaustive instances.

use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orthogeo::arch::{extreme_arch, polygon_v2, Arch, PipXi, Xi};
use orthogeo::catalog::{modular_lattices, modular_semilattices};
use orthogeo::flow::solve_msip;
use orthogeo::geodesic::{geodesic, geodesic_median};
use orthogeo::metric::{
    check_path, join_point, meet_point, norm2, omega_point, path_length, simplex_distance2,
    simplex_distance2_with, to_bcoords, ChainPoint, Extension,
};
use orthogeo::oracle::{enumerate_pip_arches, exhaustive_msip, oracle_distance};
use orthogeo::poset::interval_by_distance;
use orthogeo::sample::{random_bipartite_pip, random_maximal_chain, random_point};
use orthogeo::{Birkhoff, GradedPoset, RootSum, Q};

mod common;
use common::{nested_polygons, random_pip_case, rat, simplex_pair};

fn lattices() -> &'static [GradedPoset] {
    static L: OnceLock<Vec<GradedPoset>> = OnceLock::new();
    L.get_or_init(|| modular_lattices(8))
}

fn semilattices() -> &'static [GradedPoset] {
    static L: OnceLock<Vec<GradedPoset>> = OnceLock::new();
    L.get_or_init(|| modular_semilattices(7))
}

// poset core

#[test]
fn covers_raise_rank_by_one() {
    for p in semilattices() {
        for (a, b) in p.covers() {
            assert_eq!(p.rank(b), p.rank(a) + 1);
        }
    }
}

#[test]
fn meet_and_join_laws() {
    for p in semilattices() {
        let n = p.len();
        for a in 0..n {
            assert_eq!(p.meet(a, a), Some(a));
            assert_eq!(p.join(a, a), Some(a));
            for b in 0..n {
                assert_eq!(p.meet(a, b), p.meet(b, a));
                assert_eq!(p.join(a, b), p.join(b, a));
                for c in 0..n {
                    let l = p.meet(a, b).and_then(|ab| p.meet(ab, c));
                    let r = p.meet(b, c).and_then(|bc| p.meet(a, bc));
                    assert_eq!(l, r);
                    if let (Some(ab), Some(bc)) = (p.join(a, b), p.join(b, c)) {
                        assert_eq!(p.join(ab, c), p.join(a, bc));
                    }
                }
            }
        }
    }
}

#[test]
fn metric_interval_matches_bfs() {
    for p in semilattices() {
        for a in 0..p.len() {
            for b in 0..p.len() {
                let mut mi = p.metric_interval(a, b).unwrap().elements;
                let mut bfs = interval_by_distance(p, a, b);
                mi.sort_unstable();
                bfs.sort_unstable();
                assert_eq!(mi, bfs, "{:?} {} {}", p.names(), p.name(a), p.name(b));
            }
        }
    }
}

#[test]
fn omega_is_nonexpansive_on_covers() {
    for p in semilattices() {
        for a in 0..p.len() {
            for (u, v) in p.covers() {
                let (ou, ov) = (p.omega(a, u), p.omega(a, v));
                assert!(p.leq(ou, ov));
                assert!(p.rank(ov) - p.rank(ou) <= 1);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn birkhoff_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nb = rng.random_range(1..=3);
        let nc = rng.random_range(1..=3);
        let pip = random_bipartite_pip(&mut rng, nb, nc, 0.5, 0.3);
        let host = pip.stable_ideals().unwrap().poset;
        prop_assume!(host.len() <= 12);
        let rep = Birkhoff::of_poset(&host).unwrap();
        let back = rep.pip.stable_ideals().unwrap();
        prop_assert_eq!(back.poset.len(), host.len());
        let map: Vec<usize> = (0..host.len()).map(|u| back.element_of(&rep.ideal_of[&u]).unwrap()).collect();
        for a in 0..host.len() {
            for b in 0..host.len() {
                prop_assert_eq!(host.leq(a, b), back.poset.leq(map[a], map[b]));
            }
        }
    }
}

// orthoscheme metric

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn distance_ignores_the_chain_extension(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let host = &semilattices()[rng.random_range(0..semilattices().len())];
        let x = random_point(host, &mut rng, 3);
        let chain = random_maximal_chain(host, &mut rng);
        let sub: Vec<usize> = chain.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
        prop_assume!(!sub.is_empty());
        let y = ChainPoint::new(sub.iter().map(|&u| (u, Q::new(1.into(), (sub.len() as i64).into())))).unwrap();
        let mut supp = x.support();
        supp.extend(y.support());
        prop_assume!(host.is_chain(&supp));
        prop_assert_eq!(
            simplex_distance2_with(host, &x, &y, Extension::Smallest).unwrap(),
            simplex_distance2_with(host, &x, &y, Extension::Largest).unwrap()
        );
    }

    #[test]
    fn bcoords_are_an_isometry(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let medians: Vec<&GradedPoset> = semilattices().iter().filter(|p| p.classification().median).collect();
        let host = medians[rng.random_range(0..medians.len())];
        let rep = Birkhoff::of_poset(host).unwrap();
        let (x, y) = simplex_pair(host, &mut rng);
        let bx = to_bcoords(&rep, host, &x).unwrap();
        let by = to_bcoords(&rep, host, &y).unwrap();
        prop_assert_eq!(bx.dist2(&by), simplex_distance2(host, &x, &y).unwrap());
    }

    #[test]
    fn lattice_maps_are_nonexpansive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let host = &lattices()[rng.random_range(0..lattices().len())];
        let a = rng.random_range(0..host.len());
        let (x, y) = simplex_pair(host, &mut rng);
        let d2 = simplex_distance2(host, &x, &y).unwrap();
        let (mx, my) = (meet_point(host, a, &x).unwrap(), meet_point(host, a, &y).unwrap());
        let (jx, jy) = (join_point(host, a, &x).unwrap(), join_point(host, a, &y).unwrap());
        let (ox, oy) = (omega_point(host, a, &x), omega_point(host, a, &y));
        let m2 = simplex_distance2(host, &mx, &my).unwrap();
        let j2 = simplex_distance2(host, &jx, &jy).unwrap();
        prop_assert!(m2 <= d2 && j2 <= d2);
        prop_assert!(simplex_distance2(host, &ox, &oy).unwrap() <= d2);
        // every element of a modular lattice is modular
        prop_assert_eq!(m2 + j2, d2);
    }
}

// flows and arches

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn min_cut_matches_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (pip, x, y) = random_pip_case(&mut rng, 4);
        let lambda = rat(&mut rng, 12);
        prop_assert_eq!(solve_msip(&pip, &x, &y, &lambda).unwrap(), exhaustive_msip(&pip, &x, &y, &lambda).unwrap());
    }

    #[test]
    fn extreme_arch_is_the_concave_optimum(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (pip, x, y) = random_pip_case(&mut rng, 3);
        let oracle = PipXi { pip: &pip, x: &x, y: &y };
        let arch = extreme_arch(&oracle, (x.support_set(), (x.norm2(), Q::zero())), (y.support_set(), (Q::zero(), y.norm2()))).unwrap();
        prop_assert!(arch.is_concave());
        let list = enumerate_pip_arches(&pip, &x, &y).unwrap();
        let concave: Vec<_> = list.iter().filter(|(a, _)| a.is_concave()).collect();
        prop_assert_eq!(&concave[0].1, &arch.v2());
        prop_assert!(concave.get(1).is_none_or(|c| c.1 > arch.v2()));
        for (a, v2) in &list {
            // the path space of a nonconcave arch is only as good as its concave subarch
            let sub = a.concave_subarch();
            prop_assert!(sub.is_concave());
            prop_assert!(sub.v2() >= *v2);
            prop_assert!(sub.v2() >= arch.v2());
        }
    }

    #[test]
    fn nested_polygons_lose_length(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, q2) = nested_polygons(&mut rng);
        let (v, v2) = (polygon_v2(&q), polygon_v2(&q2));
        prop_assert!((v - v2).signum() == std::cmp::Ordering::Greater);
    }
}

// engine

fn pick_host(rng: &mut ChaCha8Rng) -> &'static GradedPoset {
    &semilattices()[rng.random_range(0..semilattices().len())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn geodesic_basic_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let host = pick_host(&mut rng);
        let x = random_point(host, &mut rng, 3);
        let y = random_point(host, &mut rng, 3);
        let g = geodesic(host, &x, &y).unwrap();
        let h = geodesic(host, &y, &x).unwrap();
        prop_assert_eq!(&g.length2, &h.length2);
        prop_assert!((g.length - h.length).abs() < 1e-12);
        prop_assert_eq!(g.path.start(), &x);
        prop_assert_eq!(g.path.end(), &y);
        check_path(host, &g.path).unwrap();
        prop_assert!((path_length(host, &g.path).unwrap() - g.length).abs() < 1e-10);
        // the reverse geodesic passes through the same points
        let back = h.path.reversed();
        for bp in g.path.breakpoints() {
            prop_assert_eq!(back.point_at(&bp.t, host), bp.point.clone());
        }
        if let Some(arch) = &g.arch {
            prop_assert!(arch.len() >= 2);
        }
    }

    #[test]
    fn modular_splitting_bounds_the_length(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let host = &lattices()[rng.random_range(0..lattices().len())];
        let x = random_point(host, &mut rng, 3);
        let y = random_point(host, &mut rng, 3);
        let g = geodesic(host, &x, &y).unwrap();
        for a in 0..host.len() {
            let lo = geodesic(host, &meet_point(host, a, &x).unwrap(), &meet_point(host, a, &y).unwrap()).unwrap();
            let hi = geodesic(host, &join_point(host, a, &x).unwrap(), &join_point(host, a, &y).unwrap()).unwrap();
            let sum = lo.length2 + hi.length2;
            prop_assert!(sum.to_f64() <= g.length2.to_f64() + 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn grid_bounds_from_above_and_refines(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let host = pick_host(&mut rng);
        let x = random_point(host, &mut rng, 2);
        let y = random_point(host, &mut rng, 2);
        let g = geodesic(host, &x, &y).unwrap();
        let d2 = oracle_distance(host, &x, &y, 2).unwrap();
        let d4 = oracle_distance(host, &x, &y, 4).unwrap();
        prop_assert!(d2 >= g.length - 1e-9);
        prop_assert!(d4 >= g.length - 1e-9);
        prop_assert!(d4 <= d2 + 1e-12);
    }

    #[test]
    fn median_route_agrees_with_the_engine(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (pip, x, y) = random_pip_case(&mut rng, 3);
        let med = geodesic_median(&pip, &x, &y).unwrap();
        let (_, g) = orthogeo::geodesic::geodesic_pip(&pip, &x, &y).unwrap();
        prop_assert_eq!(med.length2, g.length2);
    }
}

#[test]
fn supermodularity_on_the_catalog() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for host in lattices() {
        let top = host.top().unwrap();
        for _ in 0..4 {
            // a point whose support reaches the top
            let mut x = random_point(host, &mut rng, 4);
            if x.coeff(top).is_zero() {
                x = x.lerp(&ChainPoint::vertex(top), &Q::new(1.into(), 3.into()));
            }
            if !host.is_chain(&x.support()) {
                continue;
            }
            let f = |a: usize| norm2(host, &meet_point(host, a, &x).unwrap());
            for a in 0..host.len() {
                for b in 0..host.len() {
                    let (m, j) = (host.meet(a, b).unwrap(), host.join(a, b).unwrap());
                    assert!(f(a) + f(b) <= f(m) + f(j));
                }
            }
            for (a, b) in host.covers() {
                assert!(f(a) < f(b));
            }
        }
    }
}

#[test]
fn concave_arches_have_positive_blocks() {
    let xi: Vec<Xi> = vec![
        (Q::new(116.into(), 100.into()), Q::zero()),
        (Q::one(), Q::new(1.into(), 4.into())),
        (Q::zero(), Q::new(125.into(), 100.into())),
    ];
    let a = Arch::new(vec![0, 1, 2], xi).unwrap();
    assert!(a.is_concave());
    assert!(a
        .blocks()
        .iter()
        .all(|(x, y)| x.is_positive() && y.is_positive()));
    assert_eq!(a.v2(), RootSum::rational(Q::new(481.into(), 100.into())));
}
