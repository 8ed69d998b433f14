//! Random instances for property tests, the CAT(0) check and benchmarks.

use rand::Rng;

use crate::metric::{BPoint, ChainPoint};
use crate::poset::{GradedPoset, Pip};
use crate::rational::Q;

/// A maximal chain grown from a random minimal element by random cover steps.
pub fn random_maximal_chain<R: Rng + ?Sized>(poset: &GradedPoset, rng: &mut R) -> Vec<usize> {
    let mins = poset.minimal_elements();
    let mut cur = mins[rng.random_range(0..mins.len())];
    let mut chain = vec![cur];
    loop {
        let ups = poset.upper_covers(cur);
        if ups.is_empty() {
            return chain;
        }
        cur = ups[rng.random_range(0..ups.len())];
        chain.push(cur);
    }
}

/// A random point on a random maximal simplex, with coefficients of the form
/// `k / total` where each weight is drawn from `0..=den`.
pub fn random_point<R: Rng + ?Sized>(poset: &GradedPoset, rng: &mut R, den: i64) -> ChainPoint {
    let chain = random_maximal_chain(poset, rng);
    let mut w: Vec<i64> = chain.iter().map(|_| rng.random_range(0..=den)).collect();
    if w.iter().all(|&k| k == 0) {
        let i = rng.random_range(0..w.len());
        w[i] = 1;
    }
    let total: i64 = w.iter().sum();
    ChainPoint::new(
        chain
            .iter()
            .zip(&w)
            .map(|(&u, &k)| (u, Q::new(k.into(), total.into()))),
    )
    .expect("weights are nonnegative and sum to one")
}

fn close_order(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(u, v) in pairs {
        le[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if le[i][k] {
                for j in 0..n {
                    if le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
    }
    le
}

/// A random PIP with vertex sides `b1..` and `c1..`: order relations only
/// inside a side, edges only across, every vertex on at least one edge, and
/// edges closed upward along the order.
pub fn random_bipartite_pip<R: Rng + ?Sized>(
    rng: &mut R,
    nb: usize,
    nc: usize,
    edge_prob: f64,
    order_prob: f64,
) -> Pip {
    let n = nb + nc;
    let mut names: Vec<String> = (1..=nb).map(|i| format!("b{i}")).collect();
    names.extend((1..=nc).map(|i| format!("c{i}")));
    let mut pairs = Vec::new();
    for (lo, hi) in [(0, nb), (nb, n)] {
        for u in lo..hi {
            for v in u + 1..hi {
                if rng.random_bool(order_prob) {
                    pairs.push((u, v));
                }
            }
        }
    }
    let le = close_order(n, &pairs);
    let mut adj = vec![vec![false; n]; n];
    for b in 0..nb {
        for c in nb..n {
            if rng.random_bool(edge_prob) {
                adj[b][c] = true;
            }
        }
    }
    // isolated vertices get one random edge
    for v in 0..n {
        let has = if v < nb {
            (nb..n).any(|c| adj[v][c])
        } else {
            (0..nb).any(|b| adj[b][v])
        };
        if !has && nb > 0 && nc > 0 {
            if v < nb {
                adj[v][rng.random_range(nb..n)] = true;
            } else {
                adj[rng.random_range(0..nb)][v] = true;
            }
        }
    }
    // close upward: b–c and b ⪯ b', c ⪯ c' give b'–c'
    let mut closed = vec![vec![false; n]; n];
    for b in 0..nb {
        for c in nb..n {
            if adj[b][c] {
                for b2 in 0..nb {
                    for c2 in nb..n {
                        if le[b][b2] && le[c][c2] {
                            closed[b2][c2] = true;
                        }
                    }
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (b, row) in closed.iter().enumerate().take(nb) {
        for (c, &e) in row.iter().enumerate().skip(nb) {
            if e {
                edges.push((b, c));
            }
        }
    }
    Pip::from_indexed(names, &edges, &pairs).expect("construction respects the PIP rules")
}

/// A b-point supported exactly on `side` (a down-closed stable set), with
/// values `k / den`, `k` in `1..=den`, made monotone along the order.
pub fn random_bpoint_on<R: Rng + ?Sized>(
    pip: &Pip,
    side: &[usize],
    rng: &mut R,
    den: i64,
) -> BPoint {
    let mut coords = vec![Q::from_integer(0.into()); pip.len()];
    for &v in side {
        coords[v] = Q::new(rng.random_range(1..=den).into(), den.into());
    }
    for v in pip.linear_extension() {
        if !side.contains(&v) {
            continue;
        }
        for u in pip.below(v).ones() {
            if coords[u] < coords[v] {
                coords[v] = coords[u].clone();
            }
        }
    }
    BPoint::new(coords)
}
