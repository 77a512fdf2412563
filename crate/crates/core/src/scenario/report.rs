use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::curves::{
    cover_coefficient, elliptic_image_obstruction, hirzebruch_cover_bound, hypersurface_cover_verdict,
    plane_cover_bound, plane_cover_verdict, verdict_for_coefficient,
};
use crate::defect::{cartan_contradiction, log_general_type_gate, product_projection_argument, DefectScenario};
use crate::error::{Error, Result};
use crate::hyperbolicity::{check_segre, classify_horikawa, geography, jet2_bound, nodal_segre_condition};
use crate::hyperbolicity::{HorikawaClassification, Verdict};
use crate::invariants::{
    canonical_coefficient, chern_report, cyclic_cover_chern, megyesi_contract, ChernReport, OrbifoldConfig,
};
use crate::rational::{int, serde_rational, Rational};
use crate::singularity::AdeType;

use super::{Analysis, Expectation, Field, Request, ScenarioInstance, Scope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    /// Compare each component's `removed` count with its recorded branch
    /// incidences and warn on mismatch.
    pub check_incidence: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

impl NamedValue {
    fn new(name: impl Into<String>, value: Rational) -> Self {
        NamedValue { name: name.into(), value }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSection {
    pub degree: u32,
    pub chern: ChernReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionSection {
    #[serde(with = "serde_rational")]
    pub smooth_c1sq: Rational,
    #[serde(with = "serde_rational")]
    pub smooth_c2: Rational,
    pub counts: BTreeMap<AdeType, u64>,
    pub chern: ChernReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationCheck {
    pub quantity: String,
    pub expression: String,
    #[serde(with = "serde_rational")]
    pub expected: Rational,
    #[serde(with = "serde_rational")]
    pub actual: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestOutcome {
    pub request: String,
    pub chern: Option<ChernReport>,
    pub values: Vec<NamedValue>,
    pub verdicts: Vec<Verdict>,
    pub lines: Vec<String>,
}

impl RequestOutcome {
    fn new(request: &Request) -> Self {
        RequestOutcome {
            request: request.to_string(),
            chern: None,
            values: Vec::new(),
            verdicts: Vec::new(),
            lines: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub scenario: String,
    pub param: Option<i64>,
    pub config: OrbifoldConfig,
    pub chern: Option<ChernReport>,
    pub cover: Option<CoverSection>,
    pub contraction: Option<ContractionSection>,
    pub verdicts: Vec<Verdict>,
    #[serde(with = "serde_rational::option")]
    pub jet2_coefficient: Option<Rational>,
    pub horikawa: Option<HorikawaClassification>,
    pub expectations: Vec<ExpectationCheck>,
    pub requests: Vec<RequestOutcome>,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
    pub citations: Vec<String>,
}

impl AnalysisReport {
    pub fn expectations_hold(&self) -> bool {
        self.expectations.iter().all(|e| e.holds)
    }

    /// Verdicts of the scenario and of its requests.
    pub fn all_verdicts(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().chain(self.requests.iter().flat_map(|r| r.verdicts.iter()))
    }
}

fn scope_report<'a>(
    scope: Scope,
    base: Option<&'a ChernReport>,
    cover: Option<&'a CoverSection>,
    contraction: Option<&'a ContractionSection>,
) -> Result<&'a ChernReport> {
    let r = match scope {
        Scope::Base => base,
        Scope::Cover => cover.map(|c| &c.chern),
        Scope::Contract => contraction.map(|c| &c.chern),
    };
    r.ok_or_else(|| Error::Internal("expectation scope without a computed report".into()))
}

fn evaluate(e: &Expectation, k: Option<i64>) -> Result<Rational> {
    e.expr.eval(k).ok_or_else(|| Error::Internal(format!("`{}` needs a parameter value", e.expr)))
}

/// Runs every directive of one scenario instance.
pub fn analyze(name: &str, inst: &ScenarioInstance, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let cfg = &inst.config;
    let d = &inst.directives;
    let mut warnings = Vec::new();
    let mut notes = Vec::new();

    let mut flagged = BTreeSet::new();
    for p in cfg.singular_points() {
        if let Some(note) = p.ade.beta_row().index_note(p.ade) {
            if flagged.insert(p.ade) {
                warnings.push(note);
            }
        }
    }
    if opts.check_incidence {
        for m in cfg.incidence_mismatches() {
            warnings.push(format!(
                "component `{}`: removed={} but {} branch incidence(s) are recorded",
                m.component, m.declared, m.incidences
            ));
        }
    }

    let scoped = d.expectations.iter().chain(&d.claims).any(|e| e.quantity.scope != Scope::Contract);
    let chern = if !d.analyses.is_empty() || d.cover.is_some() || scoped { Some(chern_report(cfg)?) } else { None };
    let cover = match (d.cover, &chern) {
        (Some(degree), Some(r)) => Some(CoverSection { degree, chern: r.scaled(degree) }),
        _ => None,
    };
    let contraction = d.contract.as_ref().map(|c| ContractionSection {
        smooth_c1sq: c.c1sq.clone(),
        smooth_c2: c.c2.clone(),
        counts: c.counts.clone(),
        chern: megyesi_contract(c.c1sq.clone(), c.c2.clone(), &c.counts),
    });

    let mut verdicts = Vec::new();
    let mut jet2_coefficient = None;
    let mut horikawa = None;
    if let Some(target) = cover.as_ref().map(|c| &c.chern).or(chern.as_ref()) {
        if let Some(c) = &cover {
            if d.analyses.iter().any(|a| *a != Analysis::Chern) {
                notes.push(format!("criteria are evaluated on the degree-{} cover", c.degree));
            }
        }
        for a in &d.analyses {
            match a {
                Analysis::Chern => {}
                Analysis::Segre => verdicts.push(check_segre(target)),
                Analysis::Jet2 => {
                    let (v, coefficient) = jet2_bound(target);
                    verdicts.push(v);
                    jet2_coefficient = Some(coefficient);
                }
                Analysis::Geography => verdicts.extend(geography(target)),
                Analysis::Horikawa => match classify_horikawa(target) {
                    Ok(h) => horikawa = Some(h),
                    Err(Error::Refused(msg)) => notes.push(format!("horikawa: {msg}")),
                    Err(e) => return Err(e),
                },
            }
        }
    }

    let mut expectations = Vec::new();
    for e in &d.expectations {
        let actual =
            e.quantity.field.of(scope_report(e.quantity.scope, chern.as_ref(), cover.as_ref(), contraction.as_ref())?);
        let expected = evaluate(e, inst.param)?;
        expectations.push(ExpectationCheck {
            quantity: e.quantity.to_string(),
            expression: e.expr.to_string(),
            holds: expected == actual,
            expected,
            actual,
        });
    }
    for e in &d.claims {
        let report = scope_report(e.quantity.scope, chern.as_ref(), cover.as_ref(), contraction.as_ref())?;
        let actual = e.quantity.field.of(report);
        let stated = evaluate(e, inst.param)?;
        if stated != actual {
            let mut w = format!("stated {} = {} disagrees with the computed value {actual}", e.quantity, e.expr);
            if let Some(k) = inst.param {
                let _ = write!(w, " at k = {k}");
            }
            let twins: Vec<String> = Field::ALL
                .iter()
                .filter(|f| **f != e.quantity.field && f.of(report) == stated)
                .map(|f| super::Quantity { scope: e.quantity.scope, field: *f }.to_string())
                .collect();
            if !twins.is_empty() {
                let _ = write!(w, "; the stated expression matches the computed {}", twins.join(", "));
            }
            warnings.push(w);
        }
    }

    let requests = d.requests.iter().map(run_request).collect::<Result<Vec<_>>>()?;

    let citations: BTreeSet<String> =
        verdicts.iter().chain(requests.iter().flat_map(|r| r.verdicts.iter())).map(|v| v.citation.clone()).collect();

    Ok(AnalysisReport {
        scenario: name.to_string(),
        param: inst.param,
        config: cfg.clone(),
        chern,
        cover,
        contraction,
        verdicts,
        jet2_coefficient,
        horikawa,
        expectations,
        requests,
        notes,
        warnings,
        citations: citations.into_iter().collect(),
    })
}

/// Evaluates one `request` line on its own.
pub fn run_request(req: &Request) -> Result<RequestOutcome> {
    let mut out = RequestOutcome::new(req);
    match *req {
        Request::Cover { d, n } => {
            let r = cyclic_cover_chern(d, n)?;
            let coefficient = canonical_coefficient(d, n);
            out.values.push(NamedValue::new("canonical coefficient", coefficient.clone()));
            if coefficient.is_negative() {
                out.lines.push(format!("K = ({coefficient})H on the cover: not of general type"));
            } else if coefficient.is_zero() {
                let k3 = if r.chi == int(2) { " (K3 surface)" } else { "" };
                out.lines.push(format!("K is trivial: not of general type{k3}"));
            }
            out.verdicts.extend(geography(&r));
            match classify_horikawa(&r) {
                Ok(h) => out.lines.extend(h.describe()),
                Err(Error::Refused(msg)) if out.verdicts.iter().any(|v| v.criterion.is_equality() && v.holds()) => {
                    out.lines.push(format!("horikawa: {msg}"));
                }
                Err(Error::Refused(_)) => {}
                Err(e) => return Err(e),
            }
            let genus = plane_cover_verdict(d, n)?;
            out.values.push(NamedValue::new("curve degree coefficient", cover_coefficient(d, n, 2)?));
            out.lines.push(format!("curves: {}", genus.describe()));
            out.chern = Some(r);
        }
        Request::GenusBoundPlane { d, n, deg_c } => {
            let coefficient = cover_coefficient(d, n, 2)?;
            out.values.push(NamedValue::new("d-d/n-4", coefficient.clone()));
            if let Some(c) = deg_c {
                out.values
                    .push(NamedValue::new(format!("deg K_C lower bound (deg C = {c})"), plane_cover_bound(d, n, c)?));
            }
            out.lines.push(plane_cover_verdict(d, n)?.describe().to_string());
        }
        Request::GenusBoundHypersurface { d, n, ambient } => {
            out.values.push(NamedValue::new("d-d/n-2(ambient)", cover_coefficient(d, n, ambient)?));
            out.lines.push(hypersurface_cover_verdict(d, n, ambient)?.describe().to_string());
        }
        Request::GenusBoundHirzebruch { big_n, a, b, n, c, dd } => {
            let bound = hirzebruch_cover_bound(big_n, a, b, n, c, dd)?;
            out.lines.push(verdict_for_coefficient(&bound).describe().to_string());
            out.values.push(NamedValue::new("deg K_C lower bound", bound));
        }
        Request::DefectCover { dim, q, m } => {
            out.verdicts.push(cartan_contradiction(&DefectScenario::uniform(dim, q, m)?));
        }
        Request::DefectProduct { ref fibers1, ref fibers2, ref special } => {
            let p = product_projection_argument(fibers1, fibers2, special)?;
            if !p.exceptional_locus.is_empty() {
                out.lines.push(format!("exceptional locus: {}", p.exceptional_locus.join(", ")));
            }
            out.verdicts.push(p.verdict);
        }
        Request::Gate { dim, ref targets } => {
            let g = log_general_type_gate(dim, targets)?;
            out.values.push(NamedValue::new("sum (1-1/m_i)d_i", g.weighted_degree));
            out.verdicts.push(g.verdict);
        }
        Request::Nodal { d, l } => out.verdicts.push(nodal_segre_condition(d, l)?),
        Request::Obstruction { n } => {
            let o = elliptic_image_obstruction(n)?;
            for (m, g) in &o.checked {
                out.lines.push(format!("gcd({n}, {m}) = {g}"));
            }
            out.lines.push(o.conclusion());
        }
    }
    Ok(out)
}

fn push_chern(out: &mut String, indent: &str, r: &ChernReport) {
    let _ = writeln!(out, "{indent}c1^2 = {}", r.c1sq);
    let _ = writeln!(out, "{indent}c2 = {}", r.c2);
    let _ = writeln!(out, "{indent}s2 = {}", r.segre2);
    let _ = writeln!(out, "{indent}13c1^2-9c2 = {}", r.jet2);
    let integral = if r.chi_integral { "" } else { " (not an integer)" };
    let _ = writeln!(out, "{indent}chi = {}{integral}", r.chi);
}

fn push_verdict(out: &mut String, indent: &str, v: &Verdict) {
    let _ = writeln!(out, "{indent}{}", v.line());
    for t in &v.trace {
        let _ = writeln!(out, "{indent}  {t}");
    }
}

fn push_request(out: &mut String, req: &RequestOutcome) {
    let _ = writeln!(out, "request {}", req.request);
    if let Some(c) = &req.chern {
        push_chern(out, "  ", c);
    }
    for v in &req.values {
        let _ = writeln!(out, "  {} = {}", v.name, v.value);
    }
    for v in &req.verdicts {
        push_verdict(out, "  ", v);
    }
    for line in &req.lines {
        let _ = writeln!(out, "  {line}");
    }
}

pub fn render_request(req: &RequestOutcome, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            push_request(&mut out, req);
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(req).expect("request outcomes serialize");
            s.push('\n');
            s
        }
    }
}

fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    match r.param {
        Some(k) => {
            let _ = writeln!(out, "scenario {} (k = {k})", r.scenario);
        }
        None => {
            let _ = writeln!(out, "scenario {}", r.scenario);
        }
    }
    let _ = writeln!(
        out,
        "surface {}: {} component(s), {} singular point(s)",
        r.config.base(),
        r.config.components().len(),
        r.config.singular_points().len()
    );
    if let Some(c) = &r.chern {
        let _ = writeln!(out, "orbifold pair");
        push_chern(&mut out, "  ", c);
    }
    if let Some(c) = &r.cover {
        let _ = writeln!(out, "degree-{} cover", c.degree);
        push_chern(&mut out, "  ", &c.chern);
    }
    if let Some(c) = &r.contraction {
        let counts: Vec<String> = c.counts.iter().map(|(t, n)| format!("{n}{t}")).collect();
        let _ =
            writeln!(out, "contraction of {} on c1^2 = {}, c2 = {}", counts.join(" + "), c.smooth_c1sq, c.smooth_c2);
        push_chern(&mut out, "  ", &c.chern);
    }
    if !r.verdicts.is_empty() {
        let _ = writeln!(out, "criteria");
        for v in &r.verdicts {
            push_verdict(&mut out, "  ", v);
        }
    }
    if let Some(c) = &r.jet2_coefficient {
        let _ = writeln!(out, "jet-2 leading coefficient: {c}");
    }
    if let Some(h) = &r.horikawa {
        let _ = writeln!(out, "horikawa chi = {}", h.chi);
        for line in h.describe() {
            let _ = writeln!(out, "  {line}");
        }
    }
    for req in &r.requests {
        push_request(&mut out, req);
    }
    if !r.expectations.is_empty() {
        let _ = writeln!(out, "expectations");
        for e in &r.expectations {
            let status = if e.holds { "ok".to_string() } else { format!("FAILED (computed {})", e.actual) };
            let _ = writeln!(out, "  {} = {} = {}: {status}", e.quantity, e.expression, e.expected);
        }
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    if !r.citations.is_empty() {
        let _ = writeln!(out, "citations");
        for c in &r.citations {
            let _ = writeln!(out, "  {c}");
        }
    }
    out
}

pub fn render_report(r: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Text => render_text(r),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

/// Several reports in one document: blank-line separated text, or a JSON
/// array (a lone report stays a bare object).
pub fn render_reports(reports: &[AnalysisReport], format: Format) -> String {
    match (format, reports) {
        (_, [single]) => render_report(single, format),
        (Format::Text, _) => reports.iter().map(render_text).collect::<Vec<_>>().join("\n"),
        (Format::Json, _) => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}
