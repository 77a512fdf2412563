//! Numeric hyperbolicity criteria over Chern data: Segre positivity, the
//! order-2 jet bound, surface geography and Horikawa's classification.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::ChernReport;
use crate::rational::{as_integer, int, rat, serde_rational, sign_symbol, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    SegrePositive,
    Jet2Positive,
    Noether,
    Bmy,
    BallQuotient,
    HorikawaEvenExtremal,
    HorikawaOddExtremal,
    NodalSegre,
    CartanDefect,
    ProductProjection,
    LogGeneralType,
}

impl Criterion {
    /// Equality criteria hold exactly when their deviation vanishes; all
    /// others are strict inequalities with an explicit boundary outcome.
    pub fn is_equality(&self) -> bool {
        matches!(self, Criterion::BallQuotient | Criterion::HorikawaEvenExtremal | Criterion::HorikawaOddExtremal)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Criterion::SegrePositive => "s2",
            Criterion::Jet2Positive => "13c1^2-9c2",
            Criterion::Noether => "c1^2-(c2-36)/5",
            Criterion::Bmy => "3c2-c1^2",
            Criterion::BallQuotient => "c1^2-3c2",
            Criterion::HorikawaEvenExtremal => "c2-(5c1^2+36)",
            Criterion::HorikawaOddExtremal => "c2-(5c1^2+30)",
            Criterion::NodalSegre => "l-(8/3)(d^2-5d/2)",
            Criterion::CartanDefect => "sum of defect bounds-(n+1)",
            Criterion::ProductProjection => "fibre defect margin",
            Criterion::LogGeneralType => "sum (1-1/m_i)d_i-(n+1)",
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Criterion::SegrePositive => "McQuillan",
            Criterion::Jet2Positive => "Demailly jet-2 bound",
            Criterion::Noether => "Noether inequality; numeric geography only",
            Criterion::Bmy => "Bogomolov-Miyaoka-Yau inequality; numeric geography only",
            Criterion::BallQuotient => "Yau; numeric geography only",
            Criterion::HorikawaEvenExtremal | Criterion::HorikawaOddExtremal => "Horikawa; numeric geography only",
            Criterion::NodalSegre => "Bogomolov-De Oliveira nodal count",
            Criterion::CartanDefect => "Cartan truncated defect relation",
            Criterion::ProductProjection => "Nevanlinna second main theorem on both rulings",
            Criterion::LogGeneralType => "orbifold Cartan conjecture hypothesis K+Delta>0",
        }
    }

    fn conclusion(&self, outcome: Outcome) -> &'static str {
        use Criterion::*;
        use Outcome::*;
        match (self, outcome) {
            (SegrePositive, Holds) => "quasi-hyperbolic",
            (SegrePositive, _) => "Segre criterion does not apply",
            (Jet2Positive, Holds) => "every orbifold entire curve satisfies an order-2 algebraic differential equation",
            (Jet2Positive, _) => "no order-2 jet differentials guaranteed",
            (Noether, Fails) => "violates the Noether inequality",
            (Noether, Boundary) => "on the Noether line",
            (Noether, Holds) => "satisfies the Noether inequality",
            (Bmy, Fails) => "violates the BMY inequality",
            (Bmy, Boundary) => "on the BMY line",
            (Bmy, Holds) => "satisfies the BMY inequality",
            (BallQuotient, Holds) => "ball quotient, hence hyperbolic",
            (BallQuotient, _) => "not a ball quotient",
            (HorikawaEvenExtremal, Holds) => "Horikawa (even c1^2) extremal",
            (HorikawaEvenExtremal, _) => "not even-Horikawa extremal",
            (HorikawaOddExtremal, Holds) => "Horikawa (odd c1^2) extremal",
            (HorikawaOddExtremal, _) => "not odd-Horikawa extremal",
            (NodalSegre, Holds) => "nodal orbifold has positive second Segre number",
            (NodalSegre, _) => "too few nodes for positive second Segre number",
            (CartanDefect, Holds) => "contradiction: the curve is degenerate",
            (CartanDefect, _) => "no contradiction with the defect relation",
            (ProductProjection, Holds) => "quasi-hyperbolic",
            (ProductProjection, _) => "inconclusive",
            (LogGeneralType, Holds) => "log general type",
            (LogGeneralType, _) => "not log general type",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Fails,
    Boundary,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Boundary => "boundary",
        })
    }
}

/// Outcome of one criterion together with its exact margin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub criterion: Criterion,
    pub outcome: Outcome,
    #[serde(with = "serde_rational")]
    pub witness: Rational,
    pub citation: String,
    /// Supporting lines: applied bounds, notes, exceptional loci.
    pub trace: Vec<String>,
}

impl Verdict {
    /// Strict inequality `witness > 0`, boundary at zero.
    pub fn strict(criterion: Criterion, witness: Rational) -> Self {
        let outcome = if witness.is_positive() {
            Outcome::Holds
        } else if witness.is_zero() {
            Outcome::Boundary
        } else {
            Outcome::Fails
        };
        Verdict { criterion, outcome, witness, citation: criterion.citation().to_string(), trace: Vec::new() }
    }

    /// Equality test on `deviation`; `applicable` gates parity-type side
    /// conditions.
    pub fn equality(criterion: Criterion, deviation: Rational, applicable: bool) -> Self {
        let outcome = if applicable && deviation.is_zero() { Outcome::Holds } else { Outcome::Fails };
        Verdict {
            criterion,
            outcome,
            witness: deviation,
            citation: criterion.citation().to_string(),
            trace: Vec::new(),
        }
    }

    pub fn with_trace(mut self, line: impl Into<String>) -> Self {
        self.trace.push(line.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    /// One-line rendering, e.g. `s2 = 21/32 > 0: quasi-hyperbolic (McQuillan)`.
    pub fn line(&self) -> String {
        let label = self.criterion.label();
        let relation = if self.witness.is_zero() {
            format!("{label} = 0")
        } else {
            format!("{label} = {} {} 0", self.witness, sign_symbol(&self.witness))
        };
        format!("{relation}: {} ({})", self.criterion.conclusion(self.outcome), self.citation)
    }
}

/// Segre test: `s₂ > 0` makes the orbifold quasi-hyperbolic.
pub fn check_segre(r: &ChernReport) -> Verdict {
    let v = Verdict::strict(Criterion::SegrePositive, r.segre2.clone());
    if v.holds() {
        v.with_trace("symmetric differentials grow: h0(S^m Omega) >= c*m^3 for some c > 0")
    } else {
        v
    }
}

/// Order-2 jet bound `h⁰(E_{2,m}) ≥ m⁴/648 (13c₁² - 9c₂) + O(m³)`; returns
/// the verdict and the `m⁴` coefficient.
pub fn jet2_bound(r: &ChernReport) -> (Verdict, Rational) {
    let coefficient = &r.jet2 / int(648);
    let v = Verdict::strict(Criterion::Jet2Positive, r.jet2.clone())
        .with_trace(format!("h0(E_2,m) >= {coefficient}*m^4 + O(m^3)"));
    (v, coefficient)
}

fn parity_of(q: &Rational) -> Option<bool> {
    as_integer(q).map(|n| n.is_even())
}

/// Noether, BMY, ball-quotient and Horikawa-line checks, evaluated literally.
pub fn geography(r: &ChernReport) -> Vec<Verdict> {
    let c1 = &r.c1sq;
    let c2 = &r.c2;
    let even = parity_of(c1);
    let parity_note = match even {
        Some(true) => "c1^2 is even",
        Some(false) => "c1^2 is odd",
        None => "c1^2 is not an integer",
    };
    vec![
        Verdict::strict(Criterion::Noether, c1 - (c2 - int(36)) / int(5)),
        Verdict::strict(Criterion::Bmy, int(3) * c2 - c1),
        Verdict::equality(Criterion::BallQuotient, c1 - int(3) * c2, true),
        Verdict::equality(Criterion::HorikawaEvenExtremal, c2 - (int(5) * c1 + int(36)), even == Some(true))
            .with_trace(parity_note),
        Verdict::equality(Criterion::HorikawaOddExtremal, c2 - (int(5) * c1 + int(30)), even == Some(false))
            .with_trace(parity_note),
    ]
}

/// Which of Horikawa's even-`c₁²` families a Chern pair can belong to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorikawaClassification {
    pub chi: i64,
    /// Double plane branched along an octic (`χ = 4`).
    pub double_octic: bool,
    /// Double plane branched along a curve of degree 10 (`χ = 7`).
    pub double_decic: bool,
    /// Double covers of `F_N` branched along a curve of type `(6, 2a)` with
    /// `2a ≥ -N` and `χ = 3N + 2a - 1`, as `(N, a)` pairs.
    pub hirzebruch: Vec<(u32, i64)>,
}

impl HorikawaClassification {
    pub fn for_chi(chi: i64) -> Self {
        let mut hirzebruch = Vec::new();
        // 2a >= -N forces N <= (chi + 1) / 2
        let max_n = (chi + 1).max(0) / 2;
        for n in 0..=max_n {
            let twice_a = chi + 1 - 3 * n;
            if twice_a.is_even() && twice_a >= -n {
                hirzebruch.push((n as u32, twice_a / 2));
            }
        }
        HorikawaClassification { chi, double_octic: chi == 4, double_decic: chi == 7, hirzebruch }
    }

    pub fn describe(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.double_octic {
            out.push("type (1): double plane branched along an octic".to_string());
        }
        if self.double_decic {
            out.push("type (2): double plane branched along a curve of degree 10".to_string());
        }
        for (n, a) in &self.hirzebruch {
            out.push(format!("type (3): double F{n} branched along a curve of type (6,{})", 2 * a));
        }
        out
    }
}

pub fn classify_horikawa(r: &ChernReport) -> Result<HorikawaClassification> {
    let even_margin = &r.c2 - (int(5) * &r.c1sq + int(36));
    match parity_of(&r.c1sq) {
        Some(true) if even_margin.is_zero() => {}
        Some(false) if (&r.c2 - (int(5) * &r.c1sq + int(30))).is_zero() => {
            return Err(Error::Refused("odd c1^2 Horikawa surfaces are outside the even classification".into()))
        }
        Some(true) => return Err(Error::Refused(format!("not even-Horikawa extremal: c2-(5c1^2+36) = {even_margin}"))),
        _ => {
            return Err(Error::Refused(format!(
                "needs an integral even c1^2 on the Horikawa line, got c1^2 = {}, c2 = {}",
                r.c1sq, r.c2
            )))
        }
    }
    let chi = r
        .chi
        .to_integer()
        .to_i64()
        .filter(|_| r.chi_integral)
        .ok_or_else(|| Error::Internal(format!("extremal pair with non-integral chi {}", r.chi)))?;
    Ok(HorikawaClassification::for_chi(chi))
}

/// Nodal degree-`d` surfaces in P³ with `l` nodes: positive orbifold Segre
/// number iff `l > (8/3)(d² - 5d/2)`.
pub fn nodal_segre_condition(d: i64, l: i64) -> Result<Verdict> {
    if d < 1 || l < 0 {
        return Err(Error::usage(format!("need d >= 1 and l >= 0 (got d={d}, l={l})")));
    }
    let threshold = rat(8, 3) * (int(d * d) - rat(5 * d, 2));
    Ok(Verdict::strict(Criterion::NodalSegre, int(l) - &threshold)
        .with_trace(format!("threshold (8/3)(d^2-5d/2) = {threshold} for d = {d}")))
}
