//! Constructive strongly clean decompositions in `T_2(R, σ)` and
//! `T_3(R, σ)` over a local ring.
//!
//! Both decomposers dispatch on which diagonal entries are units, solve
//! one or two equations `ax − xb = v` (least-index solution), assemble the
//! idempotent `E` and set `U = A − E`. Every result is re-checked before it
//! is returned.

use serde::{Deserialize, Serialize};

use super::{SkewTriRing, TriMatrix};
use crate::error::{Error, Result};
use crate::ring::Elem;

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    /// `A = E + U`, `EU = UE`.
    StronglyClean,
    /// `A − E = U` is a unit and `EA = AE`.
    VeryCleanMinus,
    /// `A + E = U` is a unit and `EA = AE`.
    VeryCleanPlus,
}

/// An idempotent `e` and unit `u` witnessing (strong or very) cleanness.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CleanDecomposition {
    pub e: TriMatrix,
    pub u: TriMatrix,
    pub kind: DecompositionKind,
    /// Which branch of the construction produced it, when constructive.
    pub case: Option<u8>,
}

/// Outcome of the four checks on a decomposition.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Checklist {
    pub idempotent: bool,
    pub commutes: bool,
    pub sum: bool,
    pub unit: bool,
}

impl Checklist {
    pub fn all(&self) -> bool {
        self.idempotent && self.commutes && self.sum && self.unit
    }

    fn first_failure(&self) -> Option<&'static str> {
        [
            (self.idempotent, "E² = E"),
            (self.commutes, "EU = UE"),
            (self.sum, "A = E + U"),
            (self.unit, "U invertible"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

/// Which right-hand side to use for `e13` in the `a11 ∈ J, a22, a33 ∈ U`
/// branch of the `T_3` construction.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub enum Case5Rhs {
    /// `a13 + e12·σ(a23)`, from comparing the `(1,3)` entries of `EA` and `AE`.
    #[default]
    Corrected,
    /// `a13 + e12·σ(e23)` read literally, with `e23` the `(2,3)` entry of `E`,
    /// which is `0` in this branch.
    Printed,
}

/// Case number `1..=8` for the unit pattern of `(a11, a22, a33)`.
pub fn t3_case(units: [bool; 3]) -> u8 {
    match units {
        [false, false, false] => 1,
        [true, false, false] => 2,
        [false, true, false] => 3,
        [false, false, true] => 4,
        [false, true, true] => 5,
        [true, false, true] => 6,
        [true, true, false] => 7,
        [true, true, true] => 8,
    }
}

impl SkewTriRing {
    /// Runs the four checks for `dec` against `a`.
    pub fn checklist(&self, a: &TriMatrix, dec: &CleanDecomposition) -> Checklist {
        let (e, u) = (&dec.e, &dec.u);
        let expected_u = match dec.kind {
            DecompositionKind::StronglyClean | DecompositionKind::VeryCleanMinus => self.sub(a, e),
            DecompositionKind::VeryCleanPlus => self.add(a, e),
        };
        Checklist {
            idempotent: self.mul(e, e) == *e,
            commutes: self.mul(e, u) == self.mul(u, e),
            sum: *u == expected_u,
            unit: self.invert(u).is_some(),
        }
    }

    fn certified(&self, a: &TriMatrix, e: TriMatrix, case: u8) -> Result<CleanDecomposition> {
        let dec = CleanDecomposition {
            u: self.sub(a, &e),
            e,
            kind: DecompositionKind::StronglyClean,
            case: Some(case),
        };
        match self.checklist(a, &dec).first_failure() {
            None => Ok(dec),
            Some(check) => Err(Error::VerificationFailed { case, check }),
        }
    }

    /// Dispatches to [`Self::decompose_t2`] or [`Self::decompose_t3`].
    pub fn decompose(&self, a: &TriMatrix) -> Result<Option<CleanDecomposition>> {
        match self.n {
            2 => self.decompose_t2(a),
            3 => self.decompose_t3(a),
            n => Err(Error::Shape(format!("no constructive decomposer for n = {n}"))),
        }
    }

    /// Strongly clean decomposition of `A = [[a, v], [0, b]]`.
    ///
    /// Cases: 1 both units (`E = 0`); 2 both radical (`E = I`); 3 `a ∈ U`,
    /// `b ∈ J`, `a − 1 ∈ U` (`E = I`); 4 as 3 with `a − 1 ∈ J`
    /// (`E = [[0, x], [0, 1]]`, `ax − xσ(b) = −v`); 5 `a ∈ J`, `b ∈ U`,
    /// `b − 1 ∈ U` (`E = I`); 6 as 5 with `b − 1 ∈ J` (`E = [[1, x], [0, 0]]`,
    /// `(1 − a)x − xσ(1 − b) = −v`).
    ///
    /// Returns `None` when the needed equation has no solution.
    pub fn decompose_t2(&self, a: &TriMatrix) -> Result<Option<CleanDecomposition>> {
        if self.n != 2 {
            return Err(Error::Shape(format!("decompose_t2 called on T_{}", self.n)));
        }
        self.check_shape(a)?;
        let an = self.ring.require_local()?;
        let r = &*self.ring;
        let one = r.one();
        let (a11, v, a22) = (a.get(0, 0), a.get(0, 1), a.get(1, 1));
        let unit = |x: Elem| an.is_unit(x);

        let (case, e) = match (unit(a11), unit(a22)) {
            (true, true) => (1, self.zero()),
            (false, false) => (2, self.identity()),
            (true, false) if unit(r.sub(a11, one)) => (3, self.identity()),
            (true, false) => {
                let Some(x) = self.solver().solve(a11, self.sigma_pow(1, a22), r.neg(v)) else {
                    return Ok(None);
                };
                (4, self.matrix_from(&[0, x.0, one.0])?)
            }
            (false, true) if unit(r.sub(a22, one)) => (5, self.identity()),
            (false, true) => {
                let p = r.sub(one, a11);
                let q = self.sigma_pow(1, r.sub(one, a22));
                let Some(x) = self.solver().solve(p, q, r.neg(v)) else {
                    return Ok(None);
                };
                (6, self.matrix_from(&[one.0, x.0, 0])?)
            }
        };
        self.certified(a, e, case).map(Some)
    }

    /// Strongly clean decomposition of a `3 × 3` matrix following the
    /// eight-way split on the unit pattern of the diagonal.
    pub fn decompose_t3(&self, a: &TriMatrix) -> Result<Option<CleanDecomposition>> {
        self.decompose_t3_with(a, Case5Rhs::Corrected)
    }

    pub fn decompose_t3_with(&self, a: &TriMatrix, case5: Case5Rhs) -> Result<Option<CleanDecomposition>> {
        if self.n != 3 {
            return Err(Error::Shape(format!("decompose_t3 called on T_{}", self.n)));
        }
        self.check_shape(a)?;
        let an = self.ring.require_local()?;
        let r = &*self.ring;
        let (zero, one) = (Elem::ZERO, r.one());
        let s1 = |x: Elem| self.sigma_pow(1, x);
        let s2 = |x: Elem| self.sigma_pow(2, x);
        let solve = |p: Elem, q: Elem, v: Elem| self.solver().solve(p, q, v);

        let [a11, a12, a13, a22, a23, a33] = [
            a.get(0, 0),
            a.get(0, 1),
            a.get(0, 2),
            a.get(1, 1),
            a.get(1, 2),
            a.get(2, 2),
        ];
        let case = t3_case([an.is_unit(a11), an.is_unit(a22), an.is_unit(a33)]);

        macro_rules! solve_or_none {
            ($p:expr, $q:expr, $v:expr) => {
                match solve($p, $q, $v) {
                    Some(x) => x,
                    None => return Ok(None),
                }
            };
        }

        // E's packed entries: e11 e12 e13 e22 e23 e33
        let e: [Elem; 6] = match case {
            1 => [one, zero, zero, one, zero, one],
            2 => {
                let e12 = solve_or_none!(a11, s1(a22), r.neg(a12));
                let rhs = r.sub(r.mul(e12, s1(a23)), a13);
                let e13 = solve_or_none!(a11, s2(a33), rhs);
                [zero, e12, e13, one, zero, one]
            }
            3 => {
                let e12 = solve_or_none!(a11, s1(a22), a12);
                let e23 = solve_or_none!(a22, s1(a33), r.neg(a23));
                let e13 = r.neg(r.mul(e12, s1(e23)));
                [one, e12, e13, zero, e23, one]
            }
            4 => {
                let e23 = solve_or_none!(a22, s1(a33), a23);
                let rhs = r.sub(a13, r.mul(a12, s1(e23)));
                let e13 = solve_or_none!(a11, s2(a33), rhs);
                [one, zero, e13, one, e23, zero]
            }
            5 => {
                let e12 = solve_or_none!(a11, s1(a22), a12);
                let rhs = match case5 {
                    Case5Rhs::Corrected => r.add(a13, r.mul(e12, s1(a23))),
                    Case5Rhs::Printed => r.add(a13, r.mul(e12, s1(zero))),
                };
                let e13 = solve_or_none!(a11, s2(a33), rhs);
                [one, e12, e13, zero, zero, zero]
            }
            6 => {
                let e23 = solve_or_none!(a22, s1(a33), a23);
                let e12 = solve_or_none!(a11, s1(a22), r.neg(a12));
                [zero, e12, r.mul(e12, s1(e23)), one, e23, zero]
            }
            7 => {
                let e23 = solve_or_none!(a22, s1(a33), r.neg(a23));
                let rhs = r.sub(r.neg(a13), r.mul(a12, s1(e23)));
                let e13 = solve_or_none!(a11, s2(a33), rhs);
                [zero, zero, e13, zero, e23, one]
            }
            _ => [zero; 6],
        };
        self.certified(a, TriMatrix { n: 3, entries: e.to_vec() }, case).map(Some)
    }
}
