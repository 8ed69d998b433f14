//! Enumeration caps shared by the exhaustive routines.

/// Default cap on enumerated objects (stable ideals, arches, grid nodes).
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// The size cap, overridable through `ORTHOGEO_SIZE_CAP`.
pub fn size_cap() -> usize {
    std::env::var("ORTHOGEO_SIZE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_SIZE_CAP)
}
