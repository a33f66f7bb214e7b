//! Checks the strong-cleanness characterisations for `T_2(R, σ)` and
//! `T_3(R, σ)` on a concrete finite local ring, claim by claim.
//!
//! Every claim produces a [`ClaimReport`]. A failing report carries a
//! [`Witness`] that [`Witness::recheck`] re-verifies from scratch. Sweeps
//! over matrix spaces are exhaustive up to `min(budget, sweep_limit)`
//! matrices and fixed-seed sampled above that.
//!
//! Claim identifiers and suite names are part of the report format:
//!
//! | suite         | claims |
//! |---------------|--------|
//! | `2.1`         | `thm2.1`, `thm2.1-condition`, `thm2.1-constructive`, `thm2.1-necessity`, `thm2.1-strongly-clean` |
//! | `3.1`         | `thm3.1`, `thm3.1-case5`, `thm3.1-hypothesis` |
//! | `4.1`         | `thm4.1`, `thm4.1-antecedent`, `thm4.1-replay` |
//! | `2.6`         | `prop2.6` |
//! | `corollaries` | `cor2.2`, `cor2.3`, `cor3.2`, `cor3.3`, `cor4.2`, `cor4.3` |

pub mod report;
pub mod sweep;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use report::{corner_check, necessity_check, recheck_report, ClaimReport, MatrixCheck, Status, Witness};
pub use sweep::{SweepMode, SweepOutcome, SweepPlan};

use crate::error::{Error, Result};
use crate::operators::{lr_map, solve_nilpotent};
use crate::ring::{is_bleached, Elem, Endomorphism, FiniteRing, RingAnalysis};
use crate::skewtri::{t3_case, Case5Rhs, SkewTriRing, DEFAULT_BUDGET};

/// Matrix spaces above this size are sampled even when within budget.
pub const DEFAULT_SWEEP_LIMIT: u64 = 1 << 20;
pub const DEFAULT_SAMPLE_SIZE: u64 = 10_000;
pub const DEFAULT_SEED: u64 = 0x5c1e_a4ed;

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct VerifyConfig {
    /// Largest `T_n` (in matrices) whose idempotents may be enumerated.
    pub budget: u64,
    /// Largest matrix space swept exhaustively.
    pub sweep_limit: u64,
    pub sample_size: u64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            budget: DEFAULT_BUDGET,
            sweep_limit: DEFAULT_SWEEP_LIMIT,
            sample_size: DEFAULT_SAMPLE_SIZE,
            seed: DEFAULT_SEED,
        }
    }
}

impl VerifyConfig {
    pub fn plan(&self) -> SweepPlan {
        SweepPlan { limit: self.budget.min(self.sweep_limit), sample_size: self.sample_size, seed: self.seed }
    }
}

/// A group of claims run together.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Suite {
    /// `T_2` strongly clean ⟺ `l_a − r_σ(b)` onto for `a ∈ 1+J`, `b ∈ J`.
    #[serde(rename = "2.1")]
    T2Criterion,
    /// Surjectivity over `U × J` ⟹ `T_3` strongly clean, constructively.
    #[serde(rename = "3.1")]
    T3Sufficiency,
    /// `T_3` strongly clean ⟹ surjectivity over `(1+J) × J`.
    #[serde(rename = "4.1")]
    T3Necessity,
    /// `T_2` very clean ⟺ `2 ∈ U` or `T_2` strongly clean.
    #[serde(rename = "2.6")]
    T2VeryClean,
    #[serde(rename = "corollaries")]
    Corollaries,
    #[serde(rename = "all")]
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["2.1", "3.1", "4.1", "2.6", "corollaries", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::T2Criterion => "2.1",
            Suite::T3Sufficiency => "3.1",
            Suite::T3Necessity => "4.1",
            Suite::T2VeryClean => "2.6",
            Suite::Corollaries => "corollaries",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "2.1" => Suite::T2Criterion,
            "3.1" => Suite::T3Sufficiency,
            "4.1" => Suite::T3Necessity,
            "2.6" => Suite::T2VeryClean,
            "corollaries" => Suite::Corollaries,
            "all" => Suite::All,
            _ => return Err(Error::parse(s, format!("unknown suite; expected one of {}", Suite::NAMES.join(", ")))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The surjectivity families appearing in the hypotheses.
#[derive(Copy, Clone, Debug)]
enum Family {
    /// `l_a − r_σ(b)`
    ASigmaB,
    /// `l_a − r_σ²(b)`
    ASigma2B,
    /// `l_b − r_σ(a)`
    BSigmaA,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::ASigmaB => "l_a - r_σ(b)",
            Family::ASigma2B => "l_a - r_σ²(b)",
            Family::BSigmaA => "l_b - r_σ(a)",
        }
    }
}

const ALL_FAMILIES: [Family; 3] = [Family::ASigmaB, Family::ASigma2B, Family::BSigmaA];

/// Result of a strong-cleanness sweep, shared between claims.
#[derive(Clone, Debug)]
struct SweepResult {
    mode: SweepMode,
    checked: u64,
    failure: Option<Witness>,
}

impl SweepResult {
    fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type SweepMemo = OnceLock<std::result::Result<SweepResult, String>>;

/// Runs claims for one `(R, σ)`, sharing sweeps between them.
pub struct Verifier {
    sigma: Endomorphism,
    sigma2: Endomorphism,
    config: VerifyConfig,
    t2: SkewTriRing,
    t3: SkewTriRing,
    t2_strongly_clean: SweepMemo,
    t3_strongly_clean: SweepMemo,
}

impl Verifier {
    /// Fails with [`Error::NotLocal`] unless the ring is local.
    pub fn new(sigma: Endomorphism, config: VerifyConfig) -> Result<Self> {
        sigma.ring().require_local()?;
        Ok(Verifier {
            sigma2: sigma.power(2),
            t2: SkewTriRing::new(sigma.clone(), 2)?.with_budget(config.budget),
            t3: SkewTriRing::new(sigma.clone(), 3)?.with_budget(config.budget),
            sigma,
            config,
            t2_strongly_clean: OnceLock::new(),
            t3_strongly_clean: OnceLock::new(),
        })
    }

    pub fn sigma(&self) -> &Endomorphism {
        &self.sigma
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    fn ring(&self) -> &FiniteRing {
        self.sigma.ring()
    }

    fn analysis(&self) -> &RingAnalysis {
        self.ring().analysis()
    }

    fn one_plus_radical(&self) -> Vec<Elem> {
        self.analysis().one_plus_radical(self.ring())
    }

    /// All reports of `suite`, sorted by claim id.
    pub fn run(&self, suite: Suite) -> Vec<ClaimReport> {
        let mut reports = match suite {
            Suite::T2Criterion => self.t2_criterion(),
            Suite::T3Sufficiency => self.t3_sufficiency(),
            Suite::T3Necessity => self.t3_necessity(),
            Suite::T2VeryClean => vec![self.t2_very_clean()],
            Suite::Corollaries => self.corollaries(),
            Suite::All => {
                let mut all = self.t2_criterion();
                all.extend(self.t3_sufficiency());
                all.extend(self.t3_necessity());
                all.push(self.t2_very_clean());
                all.extend(self.corollaries());
                all
            }
        };
        reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        reports
    }

    fn timed(&self, id: &str, body: impl FnOnce(ClaimReport) -> ClaimReport) -> ClaimReport {
        let start = Instant::now();
        let mut report = body(ClaimReport::new(id, &self.sigma));
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        report
    }

    fn with_sweep(&self, mut report: ClaimReport, mode: SweepMode, checked: u64) -> ClaimReport {
        report.mode = Some(mode);
        report.checked += checked;
        if mode == SweepMode::Sampled {
            report.seed = Some(self.config.seed);
        }
        report
    }

    /// First `(a, b)` with `a ∈ lefts`, `b ∈ J` whose map in `families`
    /// is not onto. Returns the number of maps checked.
    fn families(&self, lefts: &[Elem], families: &[Family]) -> (u64, Option<Witness>) {
        let ring = self.ring();
        let mut checked = 0;
        for &family in families {
            for &a in lefts {
                for &b in &self.analysis().radical {
                    let (left, right) = match family {
                        Family::ASigmaB => (a, self.sigma.apply(b)),
                        Family::ASigma2B => (a, self.sigma2.apply(b)),
                        Family::BSigmaA => (b, self.sigma.apply(a)),
                    };
                    checked += 1;
                    if let Some(missed) = lr_map(ring, left, right).missed_value() {
                        let family = family.name().to_string();
                        return (checked, Some(Witness::NotSurjective { family, a, b, left, right, missed }));
                    }
                }
            }
        }
        (checked, None)
    }

    fn strongly_clean_sweep<'m>(&self, t: &SkewTriRing, memo: &'m SweepMemo) -> &'m std::result::Result<SweepResult, String> {
        memo.get_or_init(|| {
            t.idempotents().map_err(|e| e.to_string())?;
            let out = self.config.plan().run(t, |a| match t.brute_force_strongly_clean(a) {
                Ok(Some(_)) => Ok(()),
                Ok(None) => Err("no idempotent E with A − E a unit and EA = AE".into()),
                Err(e) => Err(e.to_string()),
            });
            Ok(SweepResult {
                mode: out.mode,
                checked: out.checked,
                failure: out.failure.map(|(a, why)| Witness::matrix(t, &a, MatrixCheck::StronglyClean, why)),
            })
        })
    }

    fn t2_sweep(&self) -> &std::result::Result<SweepResult, String> {
        self.strongly_clean_sweep(&self.t2, &self.t2_strongly_clean)
    }

    fn t3_sweep(&self) -> &std::result::Result<SweepResult, String> {
        self.strongly_clean_sweep(&self.t3, &self.t3_strongly_clean)
    }

    /// Reports a strong-cleanness sweep as a claim of its own.
    fn sweep_claim(&self, id: &str, result: impl FnOnce() -> std::result::Result<SweepResult, String>) -> ClaimReport {
        self.timed(id, |r| match result() {
            Err(why) => r.skip(why),
            Ok(s) => {
                let r = self.with_sweep(r, s.mode, s.checked);
                match s.failure {
                    Some(w) => r.fail(w),
                    None => r,
                }
            }
        })
    }

    /// Claims for `T_2`: the surjectivity condition, brute-force strong
    /// cleanness, their equivalence, the constructive decomposer and the
    /// necessity replay.
    pub fn t2_criterion(&self) -> Vec<ClaimReport> {
        let lefts = self.one_plus_radical();
        let condition = self.timed("thm2.1-condition", |mut r| {
            let (checked, failure) = self.families(&lefts, &[Family::ASigmaB]);
            r.checked = checked;
            match failure {
                Some(w) => r.fail(w),
                None => r,
            }
        });
        let strongly_clean = self.sweep_claim("thm2.1-strongly-clean", || self.t2_sweep().clone());
        let equivalence = self.timed("thm2.1", |r| {
            let r = ClaimReport { checked: condition.checked + strongly_clean.checked, ..r };
            if strongly_clean.status == Status::Skipped {
                return r.skip(strongly_clean.reason.clone().unwrap_or_default());
            }
            let r = ClaimReport { mode: strongly_clean.mode, seed: strongly_clean.seed, ..r };
            match (&condition.witness, &strongly_clean.witness) {
                (None, None) | (Some(_), Some(_)) => r,
                (Some(w), None) => r.fail(Witness::Mismatch {
                    detail: "condition fails but every matrix is strongly clean".into(),
                    inner: Box::new(w.clone()),
                }),
                (None, Some(w)) => r.fail(Witness::Mismatch {
                    detail: "condition holds but a matrix is not strongly clean".into(),
                    inner: Box::new(w.clone()),
                }),
            }
        });
        vec![condition, strongly_clean, equivalence, self.t2_constructive(), self.t2_necessity()]
    }

    /// `decompose_t2` succeeds exactly when brute force does, and its
    /// results pass verification.
    fn t2_constructive(&self) -> ClaimReport {
        self.timed("thm2.1-constructive", |r| {
            let t = &self.t2;
            if let Err(e) = t.idempotents() {
                return r.skip(e.to_string());
            }
            let out = self.config.plan().run(t, |a| {
                let brute = t.brute_force_strongly_clean(a).map_err(|e| e.to_string())?;
                match (t.decompose_t2(a), brute) {
                    (Ok(Some(_)), Some(_)) | (Ok(None), None) => Ok(()),
                    (Ok(Some(_)), None) => Err("decomposer succeeded where brute force found nothing".into()),
                    (Ok(None), Some(_)) => Err("decomposer found no solution but A is strongly clean".into()),
                    (Err(e), _) => Err(e.to_string()),
                }
            });
            let r = self.with_sweep(r, out.mode, out.checked);
            match out.failure {
                Some((a, why)) => r.fail(Witness::matrix(t, &a, MatrixCheck::Constructive, why)),
                None => r,
            }
        })
    }

    /// For `a ∈ 1+J`, `b ∈ J`, `v ∈ R`, the matrix `[[a, −v], [0, b]]` is
    /// strongly clean with `E = [[0, x], [0, 1]]` where `ax − xσ(b) = v`, or,
    /// when that equation has no solution, is not strongly clean at all.
    fn t2_necessity(&self) -> ClaimReport {
        self.timed("thm2.1-necessity", |mut r| {
            let (t, ring) = (&self.t2, self.ring());
            if let Err(e) = t.idempotents() {
                return r.skip(e.to_string());
            }
            let triples = self.triples();
            r.checked = triples.len() as u64;
            let failure = triples.par_iter().find_map_first(|&(a, b, v)| {
                let m = t.matrix(vec![a, ring.neg(v), b]).expect("entries are ring elements");
                let why = necessity_check(t, &m).err()?;
                let solvable = lr_map(ring, a, self.sigma.apply(b)).solve(v).is_some();
                let strongly_clean = t.brute_force_strongly_clean(&m).ok()?.is_some();
                if !solvable && !strongly_clean {
                    return None;
                }
                Some(Witness::matrix(t, &m, MatrixCheck::NecessityShape, why))
            });
            match failure {
                Some(w) => r.fail(w),
                None => r,
            }
        })
    }

    /// `(a, b, v)` over `(1+J) × J × R`, in index order.
    fn triples(&self) -> Vec<(Elem, Elem, Elem)> {
        let lefts = self.one_plus_radical();
        let mut out = Vec::new();
        for &a in &lefts {
            for &b in &self.analysis().radical {
                for v in self.ring().elements() {
                    out.push((a, b, v));
                }
            }
        }
        out
    }

    /// Claims for the constructive `T_3` decomposer.
    pub fn t3_sufficiency(&self) -> Vec<ClaimReport> {
        let units = self.analysis().units.clone();
        let hypothesis = self.timed("thm3.1-hypothesis", |mut r| {
            let (checked, failure) = self.families(&units, &ALL_FAMILIES);
            r.checked = checked;
            match failure {
                Some(w) => r.fail(w),
                None => r,
            }
        });
        let t = &self.t3;
        let constructive = self.timed("thm3.1", |r| {
            if hypothesis.fails() {
                return r.skip("surjectivity hypothesis does not hold");
            }
            let out = self.config.plan().run(t, |a| match t.decompose_t3(a) {
                Ok(Some(_)) => Ok(()),
                Ok(None) => Err("a required equation has no solution".into()),
                Err(e) => Err(e.to_string()),
            });
            let r = self.with_sweep(r, out.mode, out.checked);
            match out.failure {
                Some((a, why)) => r.fail(Witness::matrix(t, &a, MatrixCheck::Constructive, why)),
                None => r,
            }
        });
        let case5 = self.timed("thm3.1-case5", |r| {
            if hypothesis.fails() {
                return r.skip("surjectivity hypothesis does not hold");
            }
            let ring = self.ring();
            let (visited, literal_ok) = (AtomicU64::new(0), AtomicU64::new(0));
            let out = self.config.plan().run(t, |a| {
                let pattern = [0, 1, 2].map(|i| ring.is_unit(a.get(i, i)));
                if t3_case(pattern) != 5 {
                    return Ok(());
                }
                visited.fetch_add(1, Ordering::Relaxed);
                if let Ok(Some(_)) = t.decompose_t3_with(a, Case5Rhs::Printed) {
                    literal_ok.fetch_add(1, Ordering::Relaxed);
                }
                match t.decompose_t3_with(a, Case5Rhs::Corrected) {
                    Ok(Some(_)) => Ok(()),
                    Ok(None) => Err("a required equation has no solution".into()),
                    Err(e) => Err(e.to_string()),
                }
            });
            let (visited, literal_ok) = (visited.into_inner(), literal_ok.into_inner());
            let mut r = self.with_sweep(r, out.mode, 0);
            r.checked = visited;
            let r = r.note(format!(
                "e13 right-hand side a13 + e12·σ(a23) verified; the literal a13 + e12·σ(e23) verifies on {literal_ok} of {visited}"
            ));
            match out.failure {
                Some((a, why)) => r.fail(Witness::matrix(t, &a, MatrixCheck::Constructive, why)),
                None => r,
            }
        });
        vec![hypothesis, constructive, case5]
    }

    /// Claims for the converse direction on `T_3`.
    pub fn t3_necessity(&self) -> Vec<ClaimReport> {
        let antecedent = self.sweep_claim("thm4.1-antecedent", || self.t3_sweep().clone());
        let lefts = self.one_plus_radical();
        let antecedent_missing = || match antecedent.status {
            Status::Skipped => Some(format!("T_3 sweep unavailable: {}", antecedent.reason.clone().unwrap_or_default())),
            Status::Fails => Some("T_3 is not strongly clean".to_string()),
            Status::Holds => None,
        };
        let families = self.timed("thm4.1", |mut r| {
            if let Some(why) = antecedent_missing() {
                return r.skip(why);
            }
            r.mode = antecedent.mode;
            r.seed = antecedent.seed;
            let (checked, failure) = self.families(&lefts, &ALL_FAMILIES);
            r.checked = checked;
            match failure {
                Some(w) => r.fail(w),
                None => r,
            }
        });
        let replay = self.timed("thm4.1-replay", |mut r| {
            if let Some(why) = antecedent_missing() {
                return r.skip(why);
            }
            let triples = self.triples();
            r.checked = triples.len() as u64;
            match self.corner_replay(&triples) {
                Some(w) => r.fail(w),
                None => r,
            }
        });
        vec![antecedent, families, replay]
    }

    fn corner_replay(&self, triples: &[(Elem, Elem, Elem)]) -> Option<Witness> {
        let t = &self.t3;
        triples.par_iter().find_map_first(|&(a, b, v)| {
            let m = t.matrix(vec![b, Elem::ZERO, v, b, Elem::ZERO, a]).expect("entries are ring elements");
            corner_check(t, &m).err().map(|why| Witness::matrix(t, &m, MatrixCheck::CornerShape, why))
        })
    }

    /// `T_2` very clean ⟺ `2 ∈ U(R)` or `T_2` strongly clean.
    pub fn t2_very_clean(&self) -> ClaimReport {
        self.timed("prop2.6", |r| {
            let t = &self.t2;
            let sc = match self.t2_sweep() {
                Ok(s) => s.clone(),
                Err(why) => return r.skip(why.clone()),
            };
            let two_is_unit = self.ring().is_unit(self.ring().from_int(2));
            let out = self.config.plan().run(t, |a| match t.is_very_clean(a) {
                Ok(Some(_)) => Ok(()),
                Ok(None) => Err("no commuting idempotent E with A − E or A + E a unit".into()),
                Err(e) => Err(e.to_string()),
            });
            let r = self.with_sweep(r, out.mode, out.checked);
            let very_clean = out.failure.is_none();
            let rhs = two_is_unit || sc.passed();
            let r = r.note(if two_is_unit {
                "2 is a unit"
            } else if sc.passed() {
                "2 is in the radical; T_2 is strongly clean"
            } else {
                "2 is in the radical; T_2 is not strongly clean"
            });
            match (very_clean, rhs) {
                (true, true) | (false, false) => r,
                (false, true) => {
                    let (a, why) = out.failure.expect("sweep failed");
                    r.fail(Witness::Mismatch {
                        detail: "right-hand side holds but T_2 is not very clean".into(),
                        inner: Box::new(Witness::matrix(t, &a, MatrixCheck::VeryClean, why)),
                    })
                }
                (true, false) => r.fail(Witness::Mismatch {
                    detail: "T_2 is very clean but 2 is not a unit and T_2 is not strongly clean".into(),
                    inner: Box::new(sc.failure.expect("strong-cleanness sweep failed")),
                }),
            }
        })
    }

    /// Each corollary is skipped unless its hypotheses hold on this ring.
    pub fn corollaries(&self) -> Vec<ClaimReport> {
        let ring = self.ring();
        let analysis = self.analysis();
        let bleached = is_bleached(ring).expect("ring is local");
        let nil = analysis.radical_is_nil;
        let preserves = self.sigma.preserves_radical();
        let not_two_units = !analysis.one_is_sum_of_two_units;
        let idempotent = self.sigma.is_idempotent();

        let t2 = || self.t2_sweep().clone();
        let t3 = || self.t3_sweep().clone();

        let cor22 = if bleached {
            self.sweep_claim("cor2.2", t2)
        } else {
            ClaimReport::new("cor2.2", &self.sigma).skip("ring is not bleached")
        };

        let cor23 = self.timed("cor2.3", |r| {
            if !nil {
                return r.skip("radical is not nil");
            }
            let s = match t2() {
                Ok(s) => s,
                Err(why) => return r.skip(why),
            };
            let (checked, failure) = self.series_solutions();
            let mut r = self.with_sweep(r, s.mode, s.checked);
            r.checked += checked;
            if let Some(w) = failure.or(s.failure) {
                return r.fail(w);
            }
            if !bleached {
                return r.fail(self.bleached_failure());
            }
            r
        });

        let cor32 = if nil {
            self.sweep_claim("cor3.2", t3)
        } else {
            ClaimReport::new("cor3.2", &self.sigma).skip("radical is not nil")
        };

        let cor33 = match (bleached, preserves) {
            (true, true) => self.sweep_claim("cor3.3", t3),
            (false, _) => ClaimReport::new("cor3.3", &self.sigma).skip("ring is not bleached"),
            (true, false) => ClaimReport::new("cor3.3", &self.sigma).skip("σ does not map the radical into itself"),
        };

        let cor42 = self.timed("cor4.2", |r| {
            if !not_two_units {
                return r.skip("1 is a sum of two units");
            }
            let one = ring.one();
            if let Some(&u) = analysis.units.iter().find(|&&u| !analysis.in_radical(ring.sub(u, one))) {
                return r.fail(Witness::UnitOutsideOnePlusRadical { u });
            }
            let (checked, condition) = self.families(&self.one_plus_radical(), &[Family::ASigmaB, Family::ASigma2B]);
            self.equivalence(r, checked, condition, t3())
        });

        let cor43 = self.timed("cor4.3", |r| {
            if !not_two_units {
                return r.skip("1 is a sum of two units");
            }
            if !idempotent {
                return r.skip("σ² ≠ σ");
            }
            let (checked, condition) = self.families(&self.one_plus_radical(), &[Family::ASigmaB]);
            let r = self.equivalence(r, checked, condition.clone(), t2());
            if r.status != Status::Holds {
                return r;
            }
            self.equivalence(r, 0, condition, t3())
        });

        vec![cor22, cor23, cor32, cor33, cor42, cor43]
    }

    /// `condition` holds ⟺ the sweep found every matrix strongly clean.
    fn equivalence(
        &self,
        r: ClaimReport,
        checked: u64,
        condition: Option<Witness>,
        sweep: std::result::Result<SweepResult, String>,
    ) -> ClaimReport {
        let s = match sweep {
            Ok(s) => s,
            Err(why) => return r.skip(why),
        };
        let mut r = self.with_sweep(r, s.mode, s.checked);
        r.checked += checked;
        match (condition, s.failure) {
            (None, None) | (Some(_), Some(_)) => r,
            (Some(w), None) => r.fail(Witness::Mismatch {
                detail: "surjectivity fails but every swept matrix is strongly clean".into(),
                inner: Box::new(w),
            }),
            (None, Some(w)) => r.fail(Witness::Mismatch {
                detail: "surjectivity holds but a matrix is not strongly clean".into(),
                inner: Box::new(w),
            }),
        }
    }

    /// The series solution of `ax − xb = v` over `U × J × R`.
    fn series_solutions(&self) -> (u64, Option<Witness>) {
        let ring = self.ring();
        let mut checked = 0;
        for &a in &self.analysis().units {
            for &b in &self.analysis().radical {
                let map = lr_map(ring, a, b);
                for v in ring.elements() {
                    checked += 1;
                    let ok = solve_nilpotent(ring, a, b, v).is_ok_and(|x| map.apply(x) == v);
                    if !ok {
                        return (checked, Some(Witness::SeriesSolution { a, b, v }));
                    }
                }
            }
        }
        (checked, None)
    }

    fn bleached_failure(&self) -> Witness {
        let ring = self.ring();
        for &a in &self.analysis().units {
            for &b in &self.analysis().radical {
                for (family, left, right) in [("l_a - r_b", a, b), ("l_b - r_a", b, a)] {
                    if let Some(missed) = lr_map(ring, left, right).missed_value() {
                        let family = family.to_string();
                        return Witness::NotSurjective { family, a, b, left, right, missed };
                    }
                }
            }
        }
        unreachable!("ring is bleached")
    }
}

/// Runs `suite` on `(R, σ)`; reports are sorted by claim id.
pub fn run_suite(sigma: &Endomorphism, config: VerifyConfig, suite: Suite) -> Result<Vec<ClaimReport>> {
    Ok(Verifier::new(sigma.clone(), config)?.run(suite))
}

pub fn verify_t2_criterion(sigma: &Endomorphism, config: VerifyConfig) -> Result<Vec<ClaimReport>> {
    run_suite(sigma, config, Suite::T2Criterion)
}

pub fn verify_t3_sufficiency(sigma: &Endomorphism, config: VerifyConfig) -> Result<Vec<ClaimReport>> {
    run_suite(sigma, config, Suite::T3Sufficiency)
}

pub fn verify_t3_necessity(sigma: &Endomorphism, config: VerifyConfig) -> Result<Vec<ClaimReport>> {
    run_suite(sigma, config, Suite::T3Necessity)
}

pub fn verify_t2_very_clean(sigma: &Endomorphism, config: VerifyConfig) -> Result<ClaimReport> {
    Ok(Verifier::new(sigma.clone(), config)?.t2_very_clean())
}

pub fn verify_corollaries(sigma: &Endomorphism, config: VerifyConfig) -> Result<Vec<ClaimReport>> {
    run_suite(sigma, config, Suite::Corollaries)
}

/// A standalone sweep asserting every visited matrix of `T_n(R, σ)` is
/// strongly clean by brute force.
pub fn sweep_strongly_clean(t: &SkewTriRing, plan: SweepPlan) -> Result<SweepOutcome> {
    t.ring().require_local()?;
    t.idempotents()?;
    Ok(plan.run(t, |a| match t.brute_force_strongly_clean(a) {
        Ok(Some(_)) => Ok(()),
        Ok(None) => Err("no idempotent E with A − E a unit and EA = AE".into()),
        Err(e) => Err(e.to_string()),
    }))
}

/// [`sweep_strongly_clean`] on `T_n(R, σ)` as a report with claim id
/// `strongly-clean-t<n>`.
pub fn sweep_report(sigma: &Endomorphism, n: usize, config: VerifyConfig) -> Result<ClaimReport> {
    let start = Instant::now();
    let t = SkewTriRing::new(sigma.clone(), n)?.with_budget(config.budget);
    let out = sweep_strongly_clean(&t, config.plan())?;
    let mut r = ClaimReport::new(&format!("strongly-clean-t{n}"), sigma);
    r.checked = out.checked;
    r.mode = Some(out.mode);
    if out.mode == SweepMode::Sampled {
        r.seed = Some(config.seed);
    }
    if let Some((a, why)) = out.failure {
        r = r.fail(Witness::matrix(&t, &a, MatrixCheck::StronglyClean, why));
    }
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}
