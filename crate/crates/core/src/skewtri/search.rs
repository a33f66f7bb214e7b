//! Exhaustive search: idempotents of `T_n(R, σ)`, brute-force strongly
//! clean and very clean witnesses.

use super::{CleanDecomposition, DecompositionKind, SkewTriRing, TriMatrix};
use crate::error::Result;
use crate::ring::Elem;

impl SkewTriRing {
    /// All idempotents in enumeration order, cached after the first call.
    ///
    /// A diagonal entry of an idempotent is itself idempotent in `R`, so
    /// candidates range over those diagonals and every off-diagonal value;
    /// [`Self::idempotents_by_full_scan`] is the unrestricted reference.
    pub fn idempotents(&self) -> Result<&[TriMatrix]> {
        self.check_budget()?;
        Ok(self.idempotents.get_or_init(|| self.enumerate_idempotents()))
    }

    fn enumerate_idempotents(&self) -> Vec<TriMatrix> {
        let all: Vec<Elem> = self.ring.elements().collect();
        let diag_vals = self.ring.analysis().idempotents.clone();
        let choices: Vec<&[Elem]> = (0..self.n)
            .flat_map(|i| (i..self.n).map(move |j| (i, j)))
            .map(|(i, j)| if i == j { diag_vals.as_slice() } else { all.as_slice() })
            .collect();

        let mut out = Vec::new();
        let mut digits = vec![0usize; choices.len()];
        loop {
            let m = TriMatrix {
                n: self.n,
                entries: digits.iter().zip(&choices).map(|(&d, c)| c[d]).collect(),
            };
            if self.mul(&m, &m) == m {
                out.push(m);
            }
            // odometer, last entry fastest: keeps lexicographic order
            let mut k = digits.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < choices[k].len() {
                    break;
                }
                digits[k] = 0;
            }
        }
    }

    /// Filters `E² = E` over every matrix of `T_n(R, σ)`, asserting that
    /// the diagonal of each idempotent found consists of idempotents of `R`.
    pub fn idempotents_by_full_scan(&self) -> Result<Vec<TriMatrix>> {
        self.check_budget()?;
        let r = &*self.ring;
        let mut out = Vec::new();
        for idx in 0..self.matrix_count() {
            let m = self.matrix_at(idx);
            if self.mul(&m, &m) == m {
                assert!(
                    m.diagonal().all(|x| r.mul(x, x) == x),
                    "idempotent {m} has a non-idempotent diagonal entry"
                );
                out.push(m);
            }
        }
        Ok(out)
    }

    /// First idempotent `E` (in enumeration order) with `A − E` invertible
    /// and `EA = AE`.
    pub fn brute_force_strongly_clean(&self, a: &TriMatrix) -> Result<Option<CleanDecomposition>> {
        self.check_shape(a)?;
        let r = &*self.ring;
        for e in self.idempotents()? {
            // (A − E)_ii must be a unit; skip before multiplying
            if !a.diagonal().zip(e.diagonal()).all(|(x, y)| r.is_unit(r.sub(x, y))) {
                continue;
            }
            if self.mul(e, a) != self.mul(a, e) {
                continue;
            }
            let u = self.sub(a, e);
            if self.invert(&u).is_some() {
                return Ok(Some(CleanDecomposition {
                    e: e.clone(),
                    u,
                    kind: DecompositionKind::StronglyClean,
                    case: None,
                }));
            }
        }
        Ok(None)
    }

    /// First commuting idempotent `E` with `A − E` or `A + E` invertible;
    /// the minus form is tried first for each `E`.
    pub fn is_very_clean(&self, a: &TriMatrix) -> Result<Option<CleanDecomposition>> {
        self.check_shape(a)?;
        for e in self.idempotents()? {
            if self.mul(e, a) != self.mul(a, e) {
                continue;
            }
            let minus = self.sub(a, e);
            if self.invert(&minus).is_some() {
                return Ok(Some(CleanDecomposition {
                    e: e.clone(),
                    u: minus,
                    kind: DecompositionKind::VeryCleanMinus,
                    case: None,
                }));
            }
            let plus = self.add(a, e);
            if self.invert(&plus).is_some() {
                return Ok(Some(CleanDecomposition {
                    e: e.clone(),
                    u: plus,
                    kind: DecompositionKind::VeryCleanPlus,
                    case: None,
                }));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::error::Error;
    use crate::ring::{ring_from_spec, Endomorphism};

    fn tri(ring: &str, sigma: &str, n: usize) -> SkewTriRing {
        let r = Arc::new(ring_from_spec(ring).unwrap());
        SkewTriRing::new(Endomorphism::from_spec(&r, sigma).unwrap(), n).unwrap()
    }

    #[test]
    fn pruned_enumeration_matches_full_scan() {
        for (spec, sigma, n) in [
            ("zmod:4", "id", 2),
            ("zmod:2", "id", 3),
            ("zmod:6", "id", 2),
            ("dual:zmod:4", "negx", 2),
            ("groupring:zmod:4;C2", "aug", 2),
            ("zmod:3", "id", 3),
        ] {
            let t = tri(spec, sigma, n);
            assert_eq!(t.idempotents().unwrap(), t.idempotents_by_full_scan().unwrap().as_slice(), "{spec}");
        }
    }

    #[test]
    fn identity_decomposes_with_zero_idempotent() {
        let t = tri("zmod:4", "id", 2);
        let d = t.brute_force_strongly_clean(&t.identity()).unwrap().unwrap();
        assert_eq!(d.e, t.zero());
        assert_eq!(d.u, t.identity());
        let v = t.is_very_clean(&t.identity()).unwrap().unwrap();
        assert_eq!(v.kind, DecompositionKind::VeryCleanMinus);
        assert_eq!(v.e, t.zero());
    }

    #[test]
    fn brute_force_agrees_with_constructive_on_validity() {
        let t = tri("zmod:4", "id", 2);
        let a = t.matrix_from(&[3, 1, 2]).unwrap();
        let bf = t.brute_force_strongly_clean(&a).unwrap().unwrap();
        assert!(t.checklist(&a, &bf).all());
        assert!(t.decompose_t2(&a).unwrap().is_some());
    }

    #[test]
    fn budget_is_enforced() {
        let t = tri("zmod:4", "id", 3).with_budget(4095);
        assert_eq!(
            t.idempotents().unwrap_err(),
            Error::BudgetExceeded { required: 4096, budget: 4095 }
        );
        let t = t.with_budget(4096);
        assert!(t.idempotents().is_ok());
    }

    #[test]
    fn t2_over_zmod6_is_strongly_clean() {
        // T_2(Z/6) ≅ T_2(Z/2) × T_2(Z/3), a product of strongly clean rings
        let t = tri("zmod:6", "id", 2);
        for idx in 0..t.matrix_count() {
            let a = t.matrix_at(idx);
            let d = t.brute_force_strongly_clean(&a).unwrap().expect("strongly clean");
            assert!(t.checklist(&a, &d).all());
        }
    }
}
