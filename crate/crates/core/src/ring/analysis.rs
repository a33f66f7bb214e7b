//! Units, Jacobson radical, idempotents and locality of a finite ring.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{Elem, FiniteRing};
use crate::error::Result;
use crate::operators::lr_map;

/// Structural data about a [`FiniteRing`]. All element lists are sorted by
/// index.
#[derive(Clone, Debug, Serialize)]
pub struct RingAnalysis {
    pub units: Vec<Elem>,
    pub radical: Vec<Elem>,
    pub idempotents: Vec<Elem>,
    pub is_local: bool,
    /// Least `k` with `J^k = 0`. A zero radical reports `1`.
    pub radical_nilpotency_index: Option<u32>,
    /// Every element of the radical is nilpotent.
    pub radical_is_nil: bool,
    pub one_is_sum_of_two_units: bool,
    #[serde(skip)]
    inverse: Vec<Option<Elem>>,
    #[serde(skip)]
    in_radical: Vec<bool>,
}

impl RingAnalysis {
    #[inline]
    pub fn is_unit(&self, x: Elem) -> bool {
        self.inverse[x.index()].is_some()
    }

    #[inline]
    pub fn inverse(&self, x: Elem) -> Option<Elem> {
        self.inverse[x.index()]
    }

    #[inline]
    pub fn in_radical(&self, x: Elem) -> bool {
        self.in_radical[x.index()]
    }

    /// The coset `1 + J(R)`.
    pub fn one_plus_radical(&self, ring: &FiniteRing) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.radical.iter().map(|&j| ring.add(ring.one(), j)).collect();
        v.sort_unstable();
        v
    }
}

/// Computes the unit group, the radical (as `{x : 1 − rx ∈ U(R) ∀r}`),
/// the idempotents and the locality data of `ring`.
pub fn analyze(ring: &FiniteRing) -> RingAnalysis {
    let one = ring.one();
    let mut inverse = vec![None; ring.order()];
    for x in ring.elements() {
        inverse[x.index()] = ring
            .elements()
            .find(|&y| ring.mul(x, y) == one && ring.mul(y, x) == one);
    }
    let is_unit = |x: Elem| inverse[x.index()].is_some();

    let units: Vec<Elem> = ring.elements().filter(|&x| is_unit(x)).collect();
    let radical: Vec<Elem> = ring
        .elements()
        .filter(|&x| ring.elements().all(|r| is_unit(ring.sub(one, ring.mul(r, x)))))
        .collect();
    let idempotents: Vec<Elem> = ring.elements().filter(|&x| ring.mul(x, x) == x).collect();
    let is_local = ring.elements().all(|x| is_unit(x) || is_unit(ring.sub(one, x)));
    let one_is_sum_of_two_units = units.iter().any(|&u| is_unit(ring.sub(one, u)));
    let radical_is_nil = radical.iter().all(|&x| nilpotency_index(ring, x).is_some());
    let radical_nilpotency_index = ideal_nilpotency_index(ring, &radical);

    let mut in_radical = vec![false; ring.order()];
    for &x in &radical {
        in_radical[x.index()] = true;
    }

    RingAnalysis {
        units,
        radical,
        idempotents,
        is_local,
        radical_nilpotency_index,
        radical_is_nil,
        one_is_sum_of_two_units,
        inverse,
        in_radical,
    }
}

/// Least `k ≥ 1` with `x^k = 0`, searched up to the ring order.
pub fn nilpotency_index(ring: &FiniteRing, x: Elem) -> Option<u32> {
    let mut p = x;
    for k in 1..=ring.order() as u32 {
        if p == Elem::ZERO {
            return Some(k);
        }
        p = ring.mul(p, x);
    }
    None
}

fn additive_closure(ring: &FiniteRing, generators: &BTreeSet<Elem>) -> BTreeSet<Elem> {
    let mut set: BTreeSet<Elem> = BTreeSet::from([Elem::ZERO]);
    let mut frontier = vec![Elem::ZERO];
    while let Some(s) = frontier.pop() {
        for &g in generators {
            let t = ring.add(s, g);
            if set.insert(t) {
                frontier.push(t);
            }
        }
    }
    set
}

/// Least `k` with `I^k = 0` for a two-sided ideal `I`, where `I^{k+1}` is
/// the additive span of products `p·i`, `p ∈ I^k`, `i ∈ I`.
fn ideal_nilpotency_index(ring: &FiniteRing, ideal: &[Elem]) -> Option<u32> {
    let base: BTreeSet<Elem> = ideal.iter().copied().collect();
    let mut power = additive_closure(ring, &base);
    for k in 1..=ring.order() as u32 {
        if power.len() == 1 {
            return Some(k);
        }
        let products: BTreeSet<Elem> = power
            .iter()
            .flat_map(|&p| base.iter().map(move |&i| ring.mul(p, i)))
            .collect();
        let next = additive_closure(ring, &products);
        if next == power {
            return None;
        }
        power = next;
    }
    None
}

/// A local ring is bleached when `l_a − r_b` and `l_b − r_a` are both
/// surjective for every unit `a` and every radical element `b`.
pub fn is_bleached(ring: &FiniteRing) -> Result<bool> {
    let analysis = ring.require_local()?;
    Ok(analysis.units.iter().all(|&a| {
        analysis
            .radical
            .iter()
            .all(|&b| lr_map(ring, a, b).is_surjective() && lr_map(ring, b, a).is_surjective())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_from_spec;

    fn elems(v: &[u32]) -> Vec<Elem> {
        v.iter().map(|&i| Elem(i)).collect()
    }

    #[test]
    fn zmod4() {
        let r = ring_from_spec("zmod:4").unwrap();
        let a = r.analysis();
        assert_eq!(a.units, elems(&[1, 3]));
        assert_eq!(a.radical, elems(&[0, 2]));
        assert_eq!(a.idempotents, elems(&[0, 1]));
        assert!(a.is_local);
        assert!(!a.one_is_sum_of_two_units);
        assert_eq!(a.radical_nilpotency_index, Some(2));
        assert!(a.radical_is_nil);
    }

    #[test]
    fn zmod5() {
        let r = ring_from_spec("zmod:5").unwrap();
        let a = r.analysis();
        assert_eq!(a.units, elems(&[1, 2, 3, 4]));
        assert_eq!(a.radical, elems(&[0]));
        assert!(a.is_local);
        assert!(a.one_is_sum_of_two_units);
        assert_eq!(a.radical_nilpotency_index, Some(1));
        assert_eq!(r.add(Elem(2), Elem(4)), r.one());
    }

    #[test]
    fn dual_zmod4_radical() {
        let r = ring_from_spec("dual:zmod:4").unwrap();
        let a = r.analysis();
        // (a,b) with a ∈ {0,2}: indices 0..4 and 8..12
        let expected: Vec<Elem> = (0..4).chain(8..12).map(Elem).collect();
        assert_eq!(a.radical, expected);
        assert!(a.is_local);
        let k = a.radical_nilpotency_index.unwrap();
        assert!(k <= 4, "J^4 must vanish, got index {k}");
        assert_eq!(a.idempotents, vec![Elem(0), r.one()]);
    }

    #[test]
    fn group_ring_is_local_with_radical_of_eight() {
        let r = ring_from_spec("groupring:zmod:4;C2").unwrap();
        let a = r.analysis();
        assert!(a.is_local);
        assert_eq!(a.radical.len(), 8);
        assert!(!a.one_is_sum_of_two_units);
        // a + bg is a unit iff a + b is odd
        for x in r.elements() {
            let (p, q) = (x.0 / 4, x.0 % 4);
            assert_eq!(a.is_unit(x), (p + q) % 2 == 1, "{}", r.describe(x));
        }
    }

    #[test]
    fn zmod6_is_not_local() {
        let r = ring_from_spec("zmod:6").unwrap();
        let a = r.analysis();
        assert!(!a.is_local);
        assert_eq!(a.radical, vec![Elem(0)]);
        assert_eq!(a.idempotents, elems(&[0, 1, 3, 4]));
        assert!(matches!(is_bleached(&r), Err(crate::Error::NotLocal(_))));
    }

    #[test]
    fn bleached_examples() {
        for spec in ["zmod:2", "zmod:4", "zmod:9", "groupring:zmod:4;C2", "dual:zmod:4", "quot:zmod:3;x^2+x+1"] {
            let r = ring_from_spec(spec).unwrap();
            assert!(is_bleached(&r).unwrap(), "{spec}");
        }
    }

    #[test]
    fn local_ring_invariants() {
        for spec in ["zmod:8", "zmod:9", "dual:zmod:4", "groupring:zmod:4;C2", "quot:zmod:3;x^2+x+1", "quot:zmod:2;x^3"] {
            let r = ring_from_spec(spec).unwrap();
            let a = r.analysis();
            assert!(a.is_local, "{spec}");
            // radical = complement of units
            for x in r.elements() {
                assert_ne!(a.is_unit(x), a.in_radical(x), "{spec} {x}");
            }
            // radical is a two-sided ideal
            for &x in &a.radical {
                for &y in &a.radical {
                    assert!(a.in_radical(r.add(x, y)));
                }
                for s in r.elements() {
                    assert!(a.in_radical(r.mul(s, x)) && a.in_radical(r.mul(x, s)));
                }
            }
            assert_eq!(a.idempotents, vec![Elem::ZERO, r.one()]);
            // units form a group
            for &u in &a.units {
                for &w in &a.units {
                    assert!(a.is_unit(r.mul(u, w)));
                }
            }
        }
    }
}
