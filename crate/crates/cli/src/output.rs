//! Text and structured renderings of command results.

use serde::Serialize;
use skewclean::ring::{is_bleached, Construction};
use skewclean::skewtri::{Checklist, DecompositionKind};
use skewclean::theorems::{ClaimReport, Status, SweepMode};
use skewclean::{CleanDecomposition, Elem, Endomorphism, FiniteRing, TriMatrix};

use crate::config::RunConfig;

pub const TOOL: &str = "skewclean";

/// Top-level structured document: tool identity, the resolved configuration
/// and exactly one payload.
#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: &'a RunConfig,
    #[serde(flatten)]
    pub payload: T,
}

impl<'a, T: Serialize> Envelope<'a, T> {
    pub fn new(config: &'a RunConfig, payload: T) -> Self {
        Envelope { tool: TOOL, version: env!("CARGO_PKG_VERSION"), config, payload }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize infallibly")
    }
}

#[derive(Serialize)]
pub struct AnalysisPayload {
    pub analysis: AnalysisView,
}

#[derive(Serialize)]
pub struct DecompositionPayload {
    pub decomposition: DecompositionView,
}

#[derive(Serialize)]
pub struct ReportsPayload<'a> {
    pub reports: &'a [ClaimReport],
}

#[derive(Serialize)]
pub struct SigmaView {
    pub label: String,
    pub identity: bool,
    pub idempotent: bool,
    pub preserves_radical: bool,
}

#[derive(Serialize)]
pub struct AnalysisView {
    pub ring: String,
    pub order: usize,
    pub local: bool,
    pub units: Vec<u32>,
    pub radical: Vec<u32>,
    pub idempotents: Vec<u32>,
    pub radical_nilpotency_index: Option<u32>,
    pub radical_is_nil: bool,
    pub one_is_sum_of_two_units: bool,
    /// Only decided for local rings.
    pub bleached: Option<bool>,
    pub sigma: SigmaView,
    #[serde(skip)]
    labels: Vec<String>,
}

fn indices(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|e| e.0).collect()
}

/// Plain indices for `Z/nZ`; `index:form` elsewhere so both are visible.
fn element_label(r: &FiniteRing, x: Elem) -> String {
    match r.construction() {
        Construction::ZMod { .. } | Construction::Table => x.0.to_string(),
        _ => format!("{}:{}", x.0, r.describe(x)),
    }
}

impl AnalysisView {
    pub fn new(sigma: &Endomorphism) -> Self {
        let r = sigma.ring();
        let an = r.analysis();
        let bleached = if an.is_local { is_bleached(r).ok() } else { None };
        AnalysisView {
            ring: r.label().to_string(),
            order: r.order(),
            local: an.is_local,
            units: indices(&an.units),
            radical: indices(&an.radical),
            idempotents: indices(&an.idempotents),
            radical_nilpotency_index: an.radical_nilpotency_index,
            radical_is_nil: an.radical_is_nil,
            one_is_sum_of_two_units: an.one_is_sum_of_two_units,
            bleached,
            sigma: SigmaView {
                label: sigma.label().to_string(),
                identity: sigma.is_identity(),
                idempotent: sigma.is_idempotent(),
                preserves_radical: sigma.preserves_radical(),
            },
            labels: r.elements().map(|x| element_label(r, x)).collect(),
        }
    }

    fn set(&self, v: &[u32]) -> String {
        let items: Vec<&str> = v.iter().map(|&i| self.labels[i as usize].as_str()).collect();
        format!("{{{}}}", items.join(", "))
    }

    pub fn to_text(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<26}{v}\n"));
        line("ring", self.ring.clone());
        line("order", self.order.to_string());
        line("local", yes_no(self.local).into());
        line("units U", format!("{} ({})", self.set(&self.units), self.units.len()));
        line("radical J", format!("{} ({})", self.set(&self.radical), self.radical.len()));
        line("idempotents", self.set(&self.idempotents));
        line(
            "nilpotency index of J",
            self.radical_nilpotency_index.map_or("none".into(), |k| k.to_string()),
        );
        line("J nil", yes_no(self.radical_is_nil).into());
        line("1 sum of two units", yes_no(self.one_is_sum_of_two_units).into());
        line("bleached", self.bleached.map_or("n/a (not local)".into(), |b| yes_no(b).into()));
        line("σ", self.sigma.label.clone());
        line("σ identity", yes_no(self.sigma.identity).into());
        line("σ² = σ", yes_no(self.sigma.idempotent).into());
        line("σ(J) ⊆ J", yes_no(self.sigma.preserves_radical).into());
        out
    }
}

#[derive(Serialize)]
pub struct DecompositionView {
    pub n: usize,
    pub matrix: String,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<DecompositionKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checklist>,
    #[serde(skip)]
    grids: (String, String, String),
}

impl DecompositionView {
    pub fn new(a: &TriMatrix, found: Option<(&CleanDecomposition, Checklist)>) -> Self {
        DecompositionView {
            n: a.dim(),
            matrix: a.to_literal(),
            found: found.is_some(),
            kind: found.map(|(d, _)| d.kind),
            case: found.and_then(|(d, _)| d.case),
            e: found.map(|(d, _)| d.e.to_literal()),
            u: found.map(|(d, _)| d.u.to_literal()),
            checks: found.map(|(_, c)| c),
            grids: (
                a.to_string(),
                found.map_or(String::new(), |(d, _)| d.e.to_string()),
                found.map_or(String::new(), |(d, _)| d.u.to_string()),
            ),
        }
    }

    pub fn to_text(&self) -> String {
        let (a, e, u) = &self.grids;
        let mut out = format!("A = {a}\n");
        let Some(checks) = self.checks else {
            out.push_str("no decomposition found\n");
            return out;
        };
        if let Some(case) = self.case {
            out.push_str(&format!("Case {case}\n"));
        }
        let kind = match self.kind {
            Some(DecompositionKind::VeryCleanMinus) => "very clean, A − E = U",
            Some(DecompositionKind::VeryCleanPlus) => "very clean, A + E = U",
            _ => "strongly clean, A = E + U",
        };
        out.push_str(&format!("kind: {kind}\nE = {e}\nU = {u}\n"));
        let mark = |ok: bool| if ok { "ok" } else { "FAILED" };
        let sum = if self.kind == Some(DecompositionKind::VeryCleanPlus) { "A + E = U" } else { "A = E + U" };
        for (name, ok) in [
            ("E² = E", checks.idempotent),
            ("EA = AE", checks.commutes),
            (sum, checks.sum),
            ("U invertible", checks.unit),
        ] {
            out.push_str(&format!("  [{}] {name}\n", mark(ok)));
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Holds => "holds",
        Status::Fails => "FAILS",
        Status::Skipped => "skipped",
    }
}

pub fn reports_text(reports: &[ClaimReport], timing: bool) -> String {
    let width = reports.iter().map(|r| r.claim_id.len()).max().unwrap_or(5).max(5);
    let mut out = format!("{:<width$}  {:<7}  {:>10}  {:<10}  note\n", "claim", "status", "checked", "mode");
    for r in reports {
        let mode = match r.mode {
            Some(SweepMode::Exhaustive) => "exhaustive".to_string(),
            Some(SweepMode::Sampled) => format!("sampled:{}", r.seed.unwrap_or_default()),
            None => "-".into(),
        };
        let mut note = r.reason.clone().unwrap_or_default();
        if timing {
            note = format!("{note} [{} ms]", r.elapsed_ms).trim_start().to_string();
        }
        let row = format!("{:<width$}  {:<7}  {:>10}  {:<10}  {note}", r.claim_id, status_word(r.status), r.checked, mode);
        out.push_str(row.trim_end());
        out.push('\n');
        if let Some(w) = &r.witness {
            let json = serde_json::to_string(w).expect("witnesses serialize infallibly");
            out.push_str(&format!("{:<width$}  witness: {json}\n", ""));
        }
    }
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "{} claims: {} hold, {} fail, {} skipped\n",
        reports.len(),
        count(Status::Holds),
        count(Status::Fails),
        count(Status::Skipped)
    ));
    out
}
