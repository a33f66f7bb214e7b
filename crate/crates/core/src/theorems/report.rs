//! Claim reports and self-certifying counterexample witnesses.

use serde::{Deserialize, Serialize};

use super::sweep::SweepMode;
use crate::error::Result;
use crate::operators::{lr_map, solve_nilpotent};
use crate::ring::{Elem, Endomorphism};
use crate::skewtri::{SkewTriRing, TriMatrix};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Skipped,
}

/// Outcome of checking one claim on one `(R, σ)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub ring: String,
    pub sigma: String,
    pub status: Status,
    pub checked: u64,
    pub witness: Option<Witness>,
    /// Why a claim was skipped, or a note on how it was checked.
    pub reason: Option<String>,
    pub mode: Option<SweepMode>,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
}

impl ClaimReport {
    pub(crate) fn new(claim_id: &str, sigma: &Endomorphism) -> Self {
        ClaimReport {
            claim_id: claim_id.to_string(),
            ring: sigma.ring().label().to_string(),
            sigma: sigma.label().to_string(),
            status: Status::Holds,
            checked: 0,
            witness: None,
            reason: None,
            mode: None,
            elapsed_ms: 0,
            seed: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn fails(&self) -> bool {
        self.status == Status::Fails
    }

    pub(crate) fn fail(mut self, witness: Witness) -> Self {
        self.status = Status::Fails;
        self.witness = Some(witness);
        self
    }

    pub(crate) fn skip(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.reason = Some(reason.into());
        self
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.reason = Some(note.into());
        self
    }
}

/// The check a matrix witness failed.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatrixCheck {
    /// No idempotent gives a strongly clean decomposition.
    StronglyClean,
    /// No commuting idempotent `E` makes `A − E` or `A + E` a unit.
    VeryClean,
    /// The constructive decomposer for `n = 2` or `3` returned nothing or
    /// failed its own verification.
    Constructive,
    /// A corner-embedding matrix `[[b,0,v],[0,b,0],[0,0,a]]` has no
    /// decomposition of the expected shape, or its `e13` does not solve
    /// `b·e13 − e13·σ²(a) = v`.
    CornerShape,
    /// The necessity matrix `[[a,−v],[0,b]]` has no decomposition with
    /// `E = [[0,x],[0,1]]` and `ax − xσ(b) = v`.
    NecessityShape,
}

/// A counterexample that can be re-verified from scratch.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `x ↦ left·x − x·right` misses `missed`.
    NotSurjective { family: String, a: Elem, b: Elem, left: Elem, right: Elem, missed: Elem },
    /// A matrix (in literal form) failing `check`.
    Matrix { n: usize, matrix: String, check: MatrixCheck, detail: String },
    /// The series solution for `ax − xb = v` does not satisfy the equation.
    SeriesSolution { a: Elem, b: Elem, v: Elem },
    /// A unit `u` with `u − 1` outside the radical.
    UnitOutsideOnePlusRadical { u: Elem },
    /// Two sides of an equivalence disagree; `inner` certifies the side
    /// that failed.
    Mismatch { detail: String, inner: Box<Witness> },
}

impl Witness {
    /// Re-runs the failed check from scratch on `(R, σ)`; `true` when the
    /// counterexample is genuine.
    pub fn recheck(&self, sigma: &Endomorphism, budget: u64) -> Result<bool> {
        let ring = sigma.ring();
        Ok(match self {
            Witness::NotSurjective { left, right, missed, .. } => {
                lr_map(ring, *left, *right).solve(*missed).is_none()
            }
            Witness::Matrix { n, matrix, check, .. } => {
                let t = SkewTriRing::new(sigma.clone(), *n)?.with_budget(budget);
                let a = t.parse_literal(matrix)?;
                match check {
                    MatrixCheck::StronglyClean => t.brute_force_strongly_clean(&a)?.is_none(),
                    MatrixCheck::VeryClean => t.is_very_clean(&a)?.is_none(),
                    MatrixCheck::Constructive => !matches!(t.decompose(&a), Ok(Some(_))),
                    MatrixCheck::CornerShape => corner_check(&t, &a).is_err(),
                    MatrixCheck::NecessityShape => necessity_check(&t, &a).is_err(),
                }
            }
            Witness::SeriesSolution { a, b, v } => match solve_nilpotent(ring, *a, *b, *v) {
                Ok(x) => lr_map(ring, *a, *b).apply(x) != *v,
                Err(_) => true,
            },
            Witness::UnitOutsideOnePlusRadical { u } => {
                ring.is_unit(*u) && !ring.analysis().in_radical(ring.sub(*u, ring.one()))
            }
            Witness::Mismatch { inner, .. } => inner.recheck(sigma, budget)?,
        })
    }

    pub(crate) fn matrix(t: &SkewTriRing, a: &TriMatrix, check: MatrixCheck, detail: impl Into<String>) -> Self {
        Witness::Matrix { n: t.dim(), matrix: a.to_literal(), check, detail: detail.into() }
    }
}

/// For `A = [[b,0,v],[0,b,0],[0,0,a]]`: a strongly clean decomposition
/// exists, its idempotent is `[[1,0,e13],[0,1,e23],[0,0,0]]` and
/// `b·e13 − e13·σ²(a) = v`. Returns `e13`.
pub fn corner_check(t: &SkewTriRing, a: &TriMatrix) -> std::result::Result<Elem, String> {
    let r = t.ring();
    let d = t
        .brute_force_strongly_clean(a)
        .map_err(|e| e.to_string())?
        .ok_or("no strongly clean decomposition")?;
    let e = &d.e;
    let (one, zero) = (r.one(), Elem::ZERO);
    if (e.get(0, 0), e.get(0, 1), e.get(1, 1), e.get(2, 2)) != (one, zero, one, zero) {
        return Err(format!("idempotent {} is not of the form [[1,0,*],[0,1,*],[0,0,0]]", e));
    }
    let (b, v, sa) = (a.get(0, 0), a.get(0, 2), t.sigma_pow(2, a.get(2, 2)));
    let e13 = e.get(0, 2);
    if lr_map(r, b, sa).apply(e13) != v {
        return Err(format!("e13 = {e13} does not solve b·x − x·σ²(a) = v"));
    }
    Ok(e13)
}

/// For `A = [[a,−v],[0,b]]` with `a ∈ 1 + J`, `b ∈ J`: a strongly clean
/// decomposition exists with `E = [[0,x],[0,1]]` and `ax − xσ(b) = v`.
pub fn necessity_check(t: &SkewTriRing, a: &TriMatrix) -> std::result::Result<Elem, String> {
    let r = t.ring();
    let d = t
        .brute_force_strongly_clean(a)
        .map_err(|e| e.to_string())?
        .ok_or("no strongly clean decomposition")?;
    let e = &d.e;
    if (e.get(0, 0), e.get(1, 1)) != (Elem::ZERO, r.one()) {
        return Err(format!("idempotent {} is not of the form [[0,*],[0,1]]", e));
    }
    let x = e.get(0, 1);
    let (p, v, q) = (a.get(0, 0), r.neg(a.get(0, 1)), t.sigma_pow(1, a.get(1, 1)));
    if lr_map(r, p, q).apply(x) != v {
        return Err(format!("x = {x} does not solve ax − xσ(b) = v"));
    }
    Ok(x)
}

/// Rechecks the witness of `report`, if any.
pub fn recheck_report(report: &ClaimReport, sigma: &Endomorphism, budget: u64) -> Result<Option<bool>> {
    match &report.witness {
        Some(w) => w.recheck(sigma, budget).map(Some),
        None => Ok(None),
    }
}
