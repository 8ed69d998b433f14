use serde::Serialize;

use super::GradedPoset;

/// Lattice-theoretic flags of a graded poset. All checks are exhaustive.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub meet_semilattice: bool,
    pub lattice: bool,
    /// Modular lattice: every element is modular.
    pub modular: bool,
    /// Principal ideals are modular lattices and (LFL) holds.
    pub modular_semilattice: bool,
    pub distributive: bool,
    /// Principal ideals are distributive lattices and (LFL) holds.
    pub median: bool,
    pub boolean_lattice: bool,
    pub boolean_semilattice: bool,
}

pub(super) fn classify(p: &GradedPoset) -> Classification {
    let n = p.len();
    let mut c = Classification::default();
    if n == 0 {
        return c;
    }
    let mut meets = vec![vec![None; n]; n];
    let mut joins = vec![vec![None; n]; n];
    let mut meet_ok = true;
    let mut join_ok = true;
    for a in 0..n {
        for b in 0..n {
            meets[a][b] = p.meet(a, b);
            joins[a][b] = p.join(a, b);
            meet_ok &= meets[a][b].is_some();
            join_ok &= joins[a][b].is_some();
        }
    }
    c.meet_semilattice = meet_ok;
    if !meet_ok {
        return c;
    }
    c.lattice = join_ok;
    let r = |u: usize| p.rank(u);

    // Rank equality over every pair with a common upper bound: inside a
    // principal ideal this is exactly modularity of that ideal.
    let mut ideal_modular = true;
    for a in 0..n {
        for b in 0..n {
            if let Some(j) = joins[a][b] {
                let m = meets[a][b].unwrap();
                if r(a) + r(b) != r(j) + r(m) {
                    ideal_modular = false;
                }
            }
        }
    }
    c.modular = c.lattice && ideal_modular;

    let mut lfl = true;
    for a in 0..n {
        for b in a + 1..n {
            let Some(ab) = joins[a][b] else { continue };
            for w in b + 1..n {
                if joins[b][w].is_some() && joins[a][w].is_some() && joins[ab][w].is_none() {
                    lfl = false;
                }
            }
        }
    }
    c.modular_semilattice = ideal_modular && lfl;

    // a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) whenever b ∨ c exists; this covers every
    // triple inside a principal ideal.
    let mut ideal_distributive = true;
    'outer: for a in 0..n {
        for b in 0..n {
            for w in b + 1..n {
                let Some(bw) = joins[b][w] else { continue };
                let lhs = meets[a][bw].unwrap();
                let rhs = joins[meets[a][b].unwrap()][meets[a][w].unwrap()];
                if rhs != Some(lhs) {
                    ideal_distributive = false;
                    break 'outer;
                }
            }
        }
    }
    c.distributive = c.lattice && ideal_distributive;
    c.median = ideal_distributive && lfl;

    // A distributive lattice of length k is Boolean iff it has 2^k elements.
    let boolean_ideal = |u: usize| {
        let size = p.downset(u).count_ones(..);
        r(u) < 63 && size == 1usize << (r(u) - r(p.bottom().unwrap()))
    };
    c.boolean_lattice = c.distributive && p.top().is_some_and(boolean_ideal);
    c.boolean_semilattice = c.median && (0..n).all(boolean_ideal);
    c
}
