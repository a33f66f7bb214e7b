//! The additive maps `l_a − r_b : x ↦ ax − xb` and the equation
//! `ax − xb = v`.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// `x ↦ a·x − x·b` on the additive group of a finite ring. The value
/// table is materialized on first use.
pub struct AdditiveMap<'r> {
    ring: &'r FiniteRing,
    a: Elem,
    b: Elem,
    table: OnceLock<Vec<Elem>>,
}

pub fn lr_map(ring: &FiniteRing, a: Elem, b: Elem) -> AdditiveMap<'_> {
    AdditiveMap { ring, a, b, table: OnceLock::new() }
}

impl<'r> AdditiveMap<'r> {
    pub fn a(&self) -> Elem {
        self.a
    }

    pub fn b(&self) -> Elem {
        self.b
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        lr_apply(self.ring, self.a, self.b, x)
    }

    pub fn table(&self) -> &[Elem] {
        self.table
            .get_or_init(|| self.ring.elements().map(|x| self.apply(x)).collect())
    }

    /// Number of distinct values taken.
    pub fn image_size(&self) -> usize {
        let mut hit = vec![false; self.ring.order()];
        self.table().iter().for_each(|y| hit[y.index()] = true);
        hit.into_iter().filter(|&h| h).count()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_size() == self.ring.order()
    }

    /// No two arguments share a value.
    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.ring.order()];
        self.table()
            .iter()
            .all(|y| !std::mem::replace(&mut seen[y.index()], true))
    }

    /// The kernel, as a sorted list.
    pub fn kernel(&self) -> Vec<Elem> {
        self.ring.elements().filter(|&x| self.table()[x.index()] == Elem::ZERO).collect()
    }

    /// The least-index `x` with `ax − xb = v`.
    pub fn solve(&self, v: Elem) -> Option<Elem> {
        self.table().iter().position(|&y| y == v).map(|i| Elem(i as u32))
    }

    /// The least-index value not attained, if any.
    pub fn missed_value(&self) -> Option<Elem> {
        let mut hit = vec![false; self.ring.order()];
        self.table().iter().for_each(|y| hit[y.index()] = true);
        hit.iter().position(|&h| !h).map(|i| Elem(i as u32))
    }
}

#[inline]
pub(crate) fn lr_apply(ring: &FiniteRing, a: Elem, b: Elem, x: Elem) -> Elem {
    ring.sub(ring.mul(a, x), ring.mul(x, b))
}

/// Solves `ax − xb = v` for a unit `a` and nilpotent `b` with the finite
/// series `x = Σ_{k=1..n} a^{−k}·v·b^{k−1}`, where `b^n = 0`. The sum
/// telescopes: `a·x − x·b = v − a^{−n}·v·b^n = v`.
pub fn solve_nilpotent(ring: &FiniteRing, a: Elem, b: Elem, v: Elem) -> Result<Elem> {
    let a_inv = ring.inverse(a).ok_or(Error::NotAUnit(a.0))?;
    let n = crate::ring::analysis::nilpotency_index(ring, b).ok_or(Error::NotNilpotent(b.0))?;
    let mut x = Elem::ZERO;
    let mut left = a_inv; // a^{-k}
    let mut right = ring.one(); // b^{k-1}
    for _ in 0..n {
        x = ring.add(x, ring.mul(ring.mul(left, v), right));
        left = ring.mul(left, a_inv);
        right = ring.mul(right, b);
    }
    Ok(x)
}

/// Least-index solutions of `ax − xb = v`, tabulated per `(a, b)` on first
/// use. Shared by the decomposers during sweeps.
pub struct LrSolver {
    ring: Arc<FiniteRing>,
    tables: Vec<OnceLock<Box<[u32]>>>,
}

/// Rings above this order skip the per-pair cache and scan directly.
const SOLVER_CACHE_ORDER: usize = 256;

const NO_SOLUTION: u32 = u32::MAX;

impl LrSolver {
    pub fn new(ring: Arc<FiniteRing>) -> Self {
        let slots = if ring.order() <= SOLVER_CACHE_ORDER { ring.order() * ring.order() } else { 0 };
        LrSolver { ring, tables: (0..slots).map(|_| OnceLock::new()).collect() }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// The least-index `x` with `ax − xb = v`.
    pub fn solve(&self, a: Elem, b: Elem, v: Elem) -> Option<Elem> {
        let ring = &*self.ring;
        if self.tables.is_empty() {
            return ring.elements().find(|&x| lr_apply(ring, a, b, x) == v);
        }
        let table = self.tables[a.index() * ring.order() + b.index()].get_or_init(|| {
            let mut pre = vec![NO_SOLUTION; ring.order()];
            for x in ring.elements().rev() {
                pre[lr_apply(ring, a, b, x).index()] = x.0;
            }
            pre.into_boxed_slice()
        });
        match table[v.index()] {
            NO_SOLUTION => None,
            x => Some(Elem(x)),
        }
    }
}
