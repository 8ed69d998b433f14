use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};

use super::{BPoint, ChainPoint};
use crate::error::{Error, Result};
use crate::poset::{Birkhoff, GradedPoset, IdealLattice, Pip};
use crate::rational::Q;

/// A correspondence between host elements and stable ideals of a PIP.
pub trait IdealCoding {
    fn pip(&self) -> &Pip;
    fn ideal(&self, elem: usize) -> Option<&FixedBitSet>;
    fn elem(&self, ideal: &FixedBitSet) -> Option<usize>;
}

impl IdealCoding for Birkhoff {
    fn pip(&self) -> &Pip {
        &self.pip
    }
    fn ideal(&self, elem: usize) -> Option<&FixedBitSet> {
        self.ideal_of.get(&elem)
    }
    fn elem(&self, ideal: &FixedBitSet) -> Option<usize> {
        self.element_of(ideal)
    }
}

/// A PIP paired with its own ideal poset.
pub struct PipIdeals<'a> {
    pub pip: &'a Pip,
    pub lattice: &'a IdealLattice,
}

impl IdealCoding for PipIdeals<'_> {
    fn pip(&self) -> &Pip {
        self.pip
    }
    fn ideal(&self, elem: usize) -> Option<&FixedBitSet> {
        self.lattice.ideals.get(elem)
    }
    fn elem(&self, ideal: &FixedBitSet) -> Option<usize> {
        self.lattice.element_of(ideal)
    }
}

/// `x_v = Σ{λ_i : v ⪯ p_i}` over the vertices of the coding PIP.
pub fn to_bcoords<C: IdealCoding + ?Sized>(
    coding: &C,
    poset: &GradedPoset,
    x: &ChainPoint,
) -> Result<BPoint> {
    let n = coding.pip().len();
    let mut coords = vec![Q::zero(); n];
    for (u, c) in x.iter() {
        let ideal = coding
            .ideal(u)
            .ok_or_else(|| Error::SupportOutsideFrame(poset.name(u).to_string()))?;
        for v in ideal.ones() {
            coords[v] += c;
        }
    }
    Ok(BPoint::new(coords))
}

/// Inverse of [`to_bcoords`]: decomposes into level sets
/// `{v : x_v ≥ c}` for the distinct positive values `c`.
pub fn from_bcoords<C: IdealCoding + ?Sized>(coding: &C, x: &BPoint) -> Result<ChainPoint> {
    let mut levels: Vec<Q> = x
        .coords()
        .iter()
        .filter(|c| !c.is_zero())
        .cloned()
        .collect();
    levels.sort_by(|a, b| b.cmp(a));
    levels.dedup();
    let empty = coding.pip().empty_set();
    let lookup = |set: &FixedBitSet| {
        coding.elem(set).ok_or_else(|| {
            Error::SupportOutsideFrame(format!("level set {}", coding.pip().set_name(set)))
        })
    };
    let mut coeffs = Vec::with_capacity(levels.len() + 1);
    let top = levels.first().cloned().unwrap_or_else(Q::zero);
    if top < Q::one() {
        coeffs.push((lookup(&empty)?, Q::one() - &top));
    }
    for (k, c) in levels.iter().enumerate() {
        let next = levels.get(k + 1).cloned().unwrap_or_else(Q::zero);
        let mut set = coding.pip().empty_set();
        for (v, xv) in x.coords().iter().enumerate() {
            if xv >= c {
                set.insert(v);
            }
        }
        coeffs.push((lookup(&set)?, c - next));
    }
    ChainPoint::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::q;

    #[test]
    fn chain_frame() {
        let p = GradedPoset::new(&["0", "p", "q"], &[("0", "p"), ("p", "q")]).unwrap();
        let rep = Birkhoff::of_poset(&p).unwrap();
        let x = ChainPoint::new([(0, q(1, 5)), (1, q(3, 10)), (2, q(1, 2))]).unwrap();
        let b = to_bcoords(&rep, &p, &x).unwrap();
        assert_eq!(b.coords(), &[q(4, 5), q(1, 2)]);
        assert_eq!(from_bcoords(&rep, &b).unwrap(), x);
        let o = to_bcoords(&rep, &p, &ChainPoint::vertex(0)).unwrap();
        assert!(o.coords().iter().all(Zero::is_zero));
    }

    #[test]
    fn square_frame() {
        let p = fixtures::square_lattice();
        let rep = Birkhoff::of_poset(&p).unwrap();
        let (u, top) = (p.index_of("u").unwrap(), p.index_of("1").unwrap());
        let x = ChainPoint::new([(u, q(3, 10)), (top, q(7, 10))]).unwrap();
        let b = to_bcoords(&rep, &p, &x).unwrap();
        let ui = rep.pip.index_of("u").unwrap();
        let vi = rep.pip.index_of("v").unwrap();
        assert_eq!(b.get(ui), &Q::one());
        assert_eq!(b.get(vi), &q(7, 10));
        assert_eq!(from_bcoords(&rep, &b).unwrap(), x);
    }

    #[test]
    fn outside_frame() {
        let p = fixtures::m3();
        let sub = [0, 1, 2, 4];
        let rep = Birkhoff::of_subset(&p, &sub).unwrap();
        let c = ChainPoint::vertex(p.index_of("c").unwrap());
        assert!(matches!(
            to_bcoords(&rep, &p, &c).unwrap_err(),
            Error::SupportOutsideFrame(_)
        ));
    }
}
