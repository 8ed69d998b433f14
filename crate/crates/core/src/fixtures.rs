//! Small named hosts used throughout the tests, benches and documentation.

use crate::poset::{GradedPoset, Pip};

/// Single edge `bc`: the cone over two unit segments.
pub fn edge_bc_pip() -> Pip {
    Pip::new(&["b", "c"], &[("b", "c")], &[]).unwrap()
}

/// Stable sets of the single edge `bc`: `{}`, `{b}`, `{c}`.
pub fn edge_bc_poset() -> GradedPoset {
    edge_bc_pip().stable_ideals().unwrap().poset
}

/// Two vertices, no edge: the unit square.
pub fn square_pip() -> Pip {
    Pip::new::<&str>(&["u", "v"], &[], &[]).unwrap()
}

/// The Boolean lattice `2^{u,v}`.
pub fn square_lattice() -> GradedPoset {
    GradedPoset::new(
        &["0", "u", "v", "1"],
        &[("0", "u"), ("0", "v"), ("u", "1"), ("v", "1")],
    )
    .unwrap()
}

/// Modular, non-distributive lattice with three atoms.
pub fn m3() -> GradedPoset {
    GradedPoset::new(
        &["0", "a", "b", "c", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ],
    )
    .unwrap()
}

/// Chain `0 < a < b`.
pub fn chain3() -> GradedPoset {
    GradedPoset::new(&["0", "a", "b"], &[("0", "a"), ("a", "b")]).unwrap()
}

/// Bipartite graph with edges `b1c2`, `b2c1`: two quadrants glued along axes.
pub fn quadrant_pip() -> Pip {
    Pip::new(
        &["b1", "b2", "c1", "c2"],
        &[("b1", "c2"), ("b2", "c1")],
        &[],
    )
    .unwrap()
}

pub fn quadrant_poset() -> GradedPoset {
    quadrant_pip().stable_ideals().unwrap().poset
}

/// Vertices `b`, `c`, `z` with the single edge `bc`: a cone times a segment.
pub fn product_pip() -> Pip {
    Pip::new(&["b", "c", "z"], &[("b", "c")], &[]).unwrap()
}

pub fn product_poset() -> GradedPoset {
    product_pip().stable_ideals().unwrap().poset
}
