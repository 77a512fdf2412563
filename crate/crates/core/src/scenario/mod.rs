//! Line-oriented scenario files (`.orb`), their analysis and report
//! rendering.
//!
//! ```text
//! # five lines, each with multiplicity 5
//! surface P2
//! component L1 class=1 mult=5 genus=0 removed=4
//! singular p12 type=A1 branches=L1,L2
//! analyze chern segre jet2
//! ```
//!
//! Besides the core grammar a file may carry `param k in {..}`,
//! `cover degree=<n>`, `contract c1sq=<q> c2=<q> <ADE>=<count>..`,
//! `expect <quantity> = <expr in k>`, `claim <quantity> = <expr in k>` and
//! `request <kind> key=value..` lines.

mod corpus;
mod laurent;
mod parse;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::defect::SpecialFiber;
use crate::invariants::{ChernReport, OrbifoldConfig};
use crate::rational::Rational;
use crate::singularity::AdeType;
use crate::surface::BaseSurface;

pub use corpus::{bundled, bundled_scenario, BUNDLED};
pub use laurent::{parse_laurent, Laurent};
pub use parse::{parse_scenario, parse_scenario_at};
pub use report::{
    analyze, render_report, render_reports, render_request, run_request, AnalysisReport, AnalyzeOptions,
    ContractionSection, CoverSection, ExpectationCheck, Format, NamedValue, RequestOutcome,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Analysis {
    Chern,
    Segre,
    Jet2,
    Geography,
    Horikawa,
}

impl Analysis {
    pub const ALL: [Analysis; 5] =
        [Analysis::Chern, Analysis::Segre, Analysis::Jet2, Analysis::Geography, Analysis::Horikawa];

    pub fn keyword(&self) -> &'static str {
        match self {
            Analysis::Chern => "chern",
            Analysis::Segre => "segre",
            Analysis::Jet2 => "jet2",
            Analysis::Geography => "geography",
            Analysis::Horikawa => "horikawa",
        }
    }
}

impl FromStr for Analysis {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Analysis::ALL.into_iter().find(|a| a.keyword() == s).ok_or(())
    }
}

/// Which Chern report an expectation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    Base,
    Cover,
    Contract,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    C1sq,
    C2,
    S2,
    Jet2,
    Chi,
}

impl Field {
    const ALL: [Field; 5] = [Field::C1sq, Field::C2, Field::S2, Field::Jet2, Field::Chi];

    fn name(&self) -> &'static str {
        match self {
            Field::C1sq => "c1sq",
            Field::C2 => "c2",
            Field::S2 => "s2",
            Field::Jet2 => "jet2",
            Field::Chi => "chi",
        }
    }

    pub fn of(&self, r: &ChernReport) -> Rational {
        match self {
            Field::C1sq => r.c1sq.clone(),
            Field::C2 => r.c2.clone(),
            Field::S2 => r.segre2.clone(),
            Field::Jet2 => r.jet2.clone(),
            Field::Chi => r.chi.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quantity {
    pub scope: Scope,
    pub field: Field,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scope {
            Scope::Base => {}
            Scope::Cover => f.write_str("cover.")?,
            Scope::Contract => f.write_str("contract.")?,
        }
        f.write_str(self.field.name())
    }
}

impl FromStr for Quantity {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let (scope, field) = match s.split_once('.') {
            Some(("cover", f)) => (Scope::Cover, f),
            Some(("contract", f)) => (Scope::Contract, f),
            Some(_) => return Err(()),
            None => (Scope::Base, s),
        };
        let field = Field::ALL.into_iter().find(|x| x.name() == field).ok_or(())?;
        Ok(Quantity { scope, field })
    }
}

/// `expect` (checked, failure is an error) or `claim` (a stated value;
/// disagreement is reported as a warning).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub quantity: Quantity,
    pub expr: Laurent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub c1sq: Rational,
    pub c2: Rational,
    pub counts: BTreeMap<AdeType, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Request {
    Cover { d: i64, n: i64 },
    GenusBoundPlane { d: i64, n: i64, deg_c: Option<i64> },
    GenusBoundHypersurface { d: i64, n: i64, ambient: u32 },
    GenusBoundHirzebruch { big_n: i64, a: i64, b: i64, n: i64, c: i64, dd: i64 },
    DefectCover { dim: u32, q: u32, m: u32 },
    DefectProduct { fibers1: Vec<u32>, fibers2: Vec<u32>, special: Vec<SpecialFiber> },
    Gate { dim: u32, targets: Vec<(u32, u32)> },
    Nodal { d: i64, l: i64 },
    Obstruction { n: u64 },
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Request {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Request::Cover { d, n } => write!(f, "cover d={d} n={n}"),
            Request::GenusBoundPlane { d, n, deg_c } => {
                write!(f, "genus-bound plane d={d} n={n}")?;
                if let Some(c) = deg_c {
                    write!(f, " degC={c}")?;
                }
                Ok(())
            }
            Request::GenusBoundHypersurface { d, n, ambient } => {
                write!(f, "genus-bound hypersurface d={d} n={n} ambient={ambient}")
            }
            Request::GenusBoundHirzebruch { big_n, a, b, n, c, dd } => {
                write!(f, "genus-bound hirzebruch N={big_n} a={a} b={b} n={n} c={c} dd={dd}")
            }
            Request::DefectCover { dim, q, m } => write!(f, "defect cover dim={dim} q={q} m={m}"),
            Request::DefectProduct { fibers1, fibers2, special } => {
                write!(f, "defect product fibers1={} fibers2={}", join(fibers1), join(fibers2))?;
                for s in special {
                    write!(f, " special={}:{}", s.name, join(&s.marks))?;
                }
                Ok(())
            }
            Request::Gate { dim, targets } => {
                let t: Vec<String> = targets.iter().map(|(d, m)| format!("{d}:{m}")).collect();
                write!(f, "gate dim={dim} targets={}", t.join(","))
            }
            Request::Nodal { d, l } => write!(f, "nodal d={d} l={l}"),
            Request::Obstruction { n } => write!(f, "obstruction n={n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Directives {
    pub analyses: Vec<Analysis>,
    pub cover: Option<u32>,
    pub contract: Option<Contraction>,
    pub expectations: Vec<Expectation>,
    pub claims: Vec<Expectation>,
    pub requests: Vec<Request>,
}

/// One configuration of a scenario file, after substituting the parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioInstance {
    pub param: Option<i64>,
    pub config: OrbifoldConfig,
    pub directives: Directives,
}

impl ScenarioInstance {
    /// Scenario text that parses back to exactly this instance.
    pub fn echo(&self) -> String {
        let cfg = &self.config;
        let mut out = vec![format!("surface {}", cfg.base())];
        if let Some(k) = self.param {
            out.push(format!("param k in {{{k}}}"));
        }
        for c in cfg.components() {
            out.push(format!(
                "component {} class={} mult={} genus={} removed={}",
                c.id,
                c.class.coords(),
                c.mult,
                c.genus,
                c.removed
            ));
        }
        for p in cfg.singular_points() {
            out.push(format!("singular {} type={} branches={}", p.id, p.ade, p.branches.join(",")));
        }
        let d = &self.directives;
        if !d.analyses.is_empty() {
            let words: Vec<&str> = d.analyses.iter().map(Analysis::keyword).collect();
            out.push(format!("analyze {}", words.join(" ")));
        }
        if let Some(deg) = d.cover {
            out.push(format!("cover degree={deg}"));
        }
        if let Some(c) = &d.contract {
            let mut line = format!("contract c1sq={} c2={}", c.c1sq, c.c2);
            for (t, n) in &c.counts {
                line.push_str(&format!(" {t}={n}"));
            }
            out.push(line);
        }
        for e in &d.expectations {
            out.push(format!("expect {} = {}", e.quantity, e.expr));
        }
        for e in &d.claims {
            out.push(format!("claim {} = {}", e.quantity, e.expr));
        }
        for r in &d.requests {
            out.push(format!("request {r}"));
        }
        out.push(String::new());
        out.join("\n")
    }

    pub fn base(&self) -> BaseSurface {
        self.config.base()
    }
}
