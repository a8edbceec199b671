//! Report rendering: human-readable text and a stable versioned JSON form.

use serde::Serialize;

use morita_kit::catlab::{RegressionReport, StarReport, Status, WideReport, WitnessReport};
use morita_kit::morita::{
    ButterflyReport, MoritaDatum, MoritaSemiContext, SemiContextClassification, TtReport,
};
use morita_kit::pairing::{AlphaRefutation, AlphaVerdict};

#[derive(Serialize)]
pub struct ClassifyJson {
    pub schema: u32,
    pub object: String,
    pub sides: Vec<SideClassJson>,
    pub is_context: Option<bool>,
    pub non_degenerate_datum: Option<bool>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct SideClassJson {
    pub connecting: String,
    pub injective: bool,
    pub semi_strict: bool,
    pub strict: bool,
    pub non_degenerate: bool,
    pub trace_order: u64,
    pub trace_is_whole_ring: bool,
    pub decomposable_value_count: usize,
    pub decomposable_equals_trace: bool,
    pub alpha_left: String,
    pub alpha_right: String,
}

pub fn alpha_text(v: &AlphaVerdict) -> String {
    match v {
        AlphaVerdict::Certified => "certified".into(),
        AlphaVerdict::Refuted(AlphaRefutation::NotLocallyProjective) => {
            "refuted (module not locally projective)".into()
        }
        AlphaVerdict::Refuted(AlphaRefutation::Counterexample { module_moduli }) => {
            format!("refuted (counterexample module {module_moduli:?})")
        }
        AlphaVerdict::Unknown { cleared_bound: None } => "unknown (not searched)".into(),
        AlphaVerdict::Unknown { cleared_bound: Some(b) } => {
            format!("unknown (no counterexample up to order {b})")
        }
    }
}

pub fn side_class_json(label: &str, class: &SemiContextClassification) -> SideClassJson {
    SideClassJson {
        connecting: label.to_string(),
        injective: class.injective,
        semi_strict: class.semi_strict,
        strict: class.strict,
        non_degenerate: class.non_degenerate,
        trace_order: class.trace.order() as u64,
        trace_is_whole_ring: class.trace.is_whole(),
        decomposable_value_count: class.decomposable_values.len(),
        decomposable_equals_trace: class.decomposable_equals_trace,
        alpha_left: alpha_text(&class.alpha_left),
        alpha_right: alpha_text(&class.alpha_right),
    }
}

pub fn classification_notes(label: &str, class: &SemiContextClassification) -> Vec<String> {
    let mut notes = Vec::new();
    if !class.decomposable_equals_trace {
        notes.push(format!(
            "{label}: the set of values on elementary pairs ({} elements) is a proper subset \
             of the trace ideal ({} elements); \"image\" claims about the connecting map \
             depend on which reading is meant — the additive image (trace ideal) versus the \
             decomposable value set.",
            class.decomposable_values.len(),
            class.trace.order()
        ));
    }
    notes
}

pub fn render_semi_classification(
    out: &mut String,
    label: &str,
    class: &SemiContextClassification,
) {
    use std::fmt::Write;
    let _ = writeln!(out, "{label}:");
    let _ = writeln!(
        out,
        "  tensor-level map: injective={} surjective={} (strict={})",
        class.injective, class.semi_strict, class.strict
    );
    let _ = writeln!(out, "  non-degenerate: {}", class.non_degenerate);
    let _ = writeln!(
        out,
        "  trace ideal: order {}{}",
        class.trace.order(),
        if class.trace.is_whole() { " (whole ring)" } else { "" }
    );
    let _ = writeln!(
        out,
        "  decomposable values: {} element(s){}",
        class.decomposable_values.len(),
        if class.decomposable_equals_trace { " (equals the trace ideal)" } else { "" }
    );
    let _ = writeln!(out, "  alpha (left pairing):  {}", alpha_text(&class.alpha_left));
    let _ = writeln!(out, "  alpha (right pairing): {}", alpha_text(&class.alpha_right));
    for note in classification_notes(label, class) {
        let _ = writeln!(out, "  note: {note}");
    }
}

#[derive(Serialize)]
pub struct CheckJson {
    pub schema: u32,
    pub suite: String,
    pub passed: bool,
    pub items: Vec<CheckItemJson>,
}

#[derive(Serialize)]
pub struct CheckItemJson {
    pub name: String,
    pub status: String,
    pub detail: String,
    pub checks: usize,
}

pub struct CheckCollector {
    pub items: Vec<CheckItemJson>,
}

impl CheckCollector {
    pub fn new() -> Self {
        Self { items: Vec::new() }
    }

    pub fn item(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.items.push(CheckItemJson {
            name: name.into(),
            status: if ok { "pass".into() } else { "fail".into() },
            detail: detail.into(),
            checks: 1,
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.items.push(CheckItemJson {
            name: name.into(),
            status: "skip".into(),
            detail: reason.into(),
            checks: 0,
        });
    }

    pub fn extend_regression(&mut self, prefix: &str, report: &RegressionReport) {
        for outcome in &report.outcomes {
            let (status, detail) = match &outcome.status {
                Status::Passed => ("pass".to_string(), String::new()),
                Status::Failed(d) => ("fail".to_string(), d.clone()),
                Status::Skipped(d) => ("skip".to_string(), d.clone()),
            };
            self.items.push(CheckItemJson {
                name: format!("{prefix}{}", outcome.name),
                status,
                detail,
                checks: outcome.checks,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != "fail")
    }

    pub fn render_text(&self, suite: &str) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "suite {suite}:");
        for item in &self.items {
            let _ = write!(out, "  [{}] {}", item.status.to_uppercase(), item.name);
            if item.checks > 1 {
                let _ = write!(out, " ({} checks)", item.checks);
            }
            if !item.detail.is_empty() {
                let _ = write!(out, " — {}", item.detail);
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

pub fn butterfly_items(name: &str, report: &ButterflyReport, collector: &mut CheckCollector) {
    collector.item(
        format!("{name}/alpha-route-p"),
        report.alpha_p_factors,
        "alpha map factors through the scalar morphism",
    );
    collector.item(
        format!("{name}/bracket-route-p"),
        report.bracket_p_factors,
        "evaluation bracket route agrees",
    );
    collector.item(
        format!("{name}/alpha-route-q"),
        report.alpha_q_factors,
        "alpha map factors through the scalar morphism",
    );
    collector.item(
        format!("{name}/bracket-route-q"),
        report.bracket_q_factors,
        "evaluation bracket route agrees",
    );
    for conclusion in &report.conclusions {
        match conclusion.conclusion_holds {
            Some(ok) => collector.item(format!("{name}/{}", conclusion.name), ok, ""),
            None => collector.skip(format!("{name}/{}", conclusion.name), "hypothesis not met"),
        }
    }
}

pub fn tt_items(name: &str, report: &TtReport, collector: &mut CheckCollector) {
    collector.item(
        format!("{name}/context-implies-matching-multiplications"),
        report.forward_ok,
        format!(
            "context={} tables-agree={}",
            report.is_context,
            report.pq_tables_agree && report.qp_tables_agree
        ),
    );
    match report.converse_ok {
        Some(ok) => collector.item(
            format!("{name}/matching-multiplications-imply-context"),
            ok,
            "both faithfulness hypotheses hold",
        ),
        None => collector.skip(
            format!("{name}/matching-multiplications-imply-context"),
            "faithfulness hypotheses not met",
        ),
    }
}

pub fn witness_item(
    name: &str,
    module_desc: &str,
    report: &WitnessReport,
    collector: &mut CheckCollector,
) {
    if report.skipped() {
        collector.skip(format!("{name}/witness {module_desc}"), "not in the source class");
    } else {
        collector.item(
            format!("{name}/witness {module_desc}"),
            report.verified(),
            format!(
                "image in class: {:?}, round trip: {:?}",
                report.image_in_class, report.round_trip_iso
            ),
        );
    }
}

pub fn star_items(name: &str, report: &StarReport, collector: &mut CheckCollector) {
    collector.item(
        format!("{name}/static-equals-generated"),
        report.static_equals_generated,
        format!("bound {}", report.bound),
    );
    collector.item(
        format!("{name}/adstatic-equals-cogenerated"),
        report.adstatic_equals_cogenerated,
        format!("bound {}", report.bound),
    );
    for mismatch in &report.mismatches {
        collector.item(format!("{name}/mismatch"), false, mismatch.clone());
    }
}

pub fn wide_items(name: &str, report: &WideReport, collector: &mut CheckCollector) {
    if report.alpha_certified {
        collector.item(
            format!("{name}/certified-forces-injectivity"),
            report.forced_conclusion_holds.unwrap_or(false),
            format!(
                "counits injective: {} and {}",
                report.counit_v_injective, report.counit_w_injective
            ),
        );
    } else {
        collector.skip(
            format!("{name}/certified-forces-injectivity"),
            format!(
                "alpha not certified; counits injective: {} and {}",
                report.counit_v_injective, report.counit_w_injective
            ),
        );
    }
}

pub fn classify_json(
    object: &str,
    sides: Vec<SideClassJson>,
    datum: Option<&MoritaDatum>,
    notes: Vec<String>,
) -> ClassifyJson {
    ClassifyJson {
        schema: 1,
        object: object.to_string(),
        sides,
        is_context: datum.map(|d| d.is_context()),
        non_degenerate_datum: datum.and_then(|d| d.is_non_degenerate().ok()),
        notes,
    }
}

pub fn classify_semi_text(
    name: &str,
    m: &MoritaSemiContext,
    class: &SemiContextClassification,
) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "semi-context {name} over rings of order {} and {}",
        m.t().order(),
        m.s().order()
    );
    render_semi_classification(&mut out, "connecting map", class);
    out
}
