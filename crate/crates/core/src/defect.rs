//! Symbolic use of Cartan's truncated defect relation `Σ δ^[n](f, Dᵢ) ≤ n + 1`
//! for entire curves ramifying over hyperplanes in general position.
//!
//! A curve ramifying with multiplicity at least `m` over `D` has truncated
//! counting function `N^[n] ≤ (n/m)·N ≤ (n/m)·T`, hence
//! `δ^[n](f, D) ≥ max(0, 1 - n/m)`. If the lower bounds already exceed
//! `n + 1` the curve cannot exist as a linearly non-degenerate map.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperbolicity::{Criterion, Outcome, Verdict};
use crate::rational::{branch_weight, int, rat, serde_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectTarget {
    pub mult: u32,
    pub count: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectScenario {
    pub dim: u32,
    pub targets: Vec<DefectTarget>,
}

impl DefectScenario {
    pub fn new(dim: u32, targets: Vec<DefectTarget>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::usage("ambient dimension must be positive"));
        }
        for t in &targets {
            if t.mult < 2 || t.count == 0 {
                return Err(Error::usage(format!(
                    "defect targets need multiplicity >= 2 and positive count (got m={}, count={})",
                    t.mult, t.count
                )));
            }
        }
        Ok(DefectScenario { dim, targets })
    }

    /// `dim = n`, `q` hyperplanes each with multiplicity `m`.
    pub fn uniform(dim: u32, q: u32, m: u32) -> Result<Self> {
        Self::new(dim, vec![DefectTarget { mult: m, count: q }])
    }

    /// Points on `P¹` with the given multiplicities.
    pub fn points(mults: &[u32]) -> Result<Self> {
        Self::new(1, mults.iter().map(|&m| DefectTarget { mult: m, count: 1 }).collect())
    }

    /// Degree-`d` cyclic cover of the plane branched over `d` lines: the
    /// projected curve ramifies to order `d` over each line.
    pub fn plane_cover_family(d: u32) -> Result<Self> {
        Self::uniform(2, d, d)
    }

    pub fn target_count(&self) -> u32 {
        self.targets.iter().map(|t| t.count).sum()
    }
}

/// `max(0, 1 - n/m)`.
pub fn defect_lower_bound(dim: u32, mult: u32) -> Rational {
    let b = Rational::one() - rat(i64::from(dim), i64::from(mult));
    if b.is_negative() {
        Rational::zero()
    } else {
        b
    }
}

pub fn cartan_contradiction(s: &DefectScenario) -> Verdict {
    let n = s.dim;
    let mut trace = vec![
        format!("targets: {} hyperplanes in P{n}, general position assumed (not verified)", s.target_count()),
        "f is taken linearly non-degenerate; otherwise its image lies in a hyperplane".to_string(),
    ];
    let mut total = Rational::zero();
    for t in &s.targets {
        let bound = defect_lower_bound(n, t.mult);
        trace.push(format!(
            "ramification >= {m}: delta^[{n}] >= max(0, 1-{n}/{m}) = {bound} (x{c})",
            m = t.mult,
            c = t.count
        ));
        total += &bound * int(i64::from(t.count));
    }
    let cap = int(i64::from(n) + 1);
    let margin = &total - &cap;
    trace.push(format!("sum of defect bounds >= {total}"));
    trace.push(format!(
        "truncated defect relation: sum <= {cap}; {total} {} {cap}",
        if margin.is_positive() {
            ">"
        } else if margin.is_zero() {
            "="
        } else {
            "<"
        }
    ));
    let mut v = Verdict::strict(Criterion::CartanDefect, margin);
    v.trace = trace.into_iter().enumerate().map(|(i, line)| format!("{}. {line}", i + 1)).collect();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFiber {
    pub name: String,
    pub marks: Vec<u32>,
}

/// Two-stage argument on `F₀ = P¹ × P¹`: marked fibres of the first
/// projection force `p₁∘f` to be constant, then the marks on the fibre
/// containing `f` force `f` to be constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductVerdict {
    pub verdict: Verdict,
    pub projection: Verdict,
    pub generic_fibre: Option<Verdict>,
    pub special_fibres: Vec<(String, Verdict)>,
    /// Special fibres that may still contain entire curves.
    pub exceptional_locus: Vec<String>,
}

pub fn product_projection_argument(
    fibers1: &[u32],
    fibers2: &[u32],
    special: &[SpecialFiber],
) -> Result<ProductVerdict> {
    let projection = cartan_contradiction(&DefectScenario::points(fibers1)?);
    let mut trace = vec![format!("stage 1: p1∘f ramifies over {} points: {}", fibers1.len(), projection.line())];
    if !projection.holds() {
        trace.push("p1∘f need not be constant; argument stops".into());
        let verdict = Verdict { trace, ..Verdict::strict(Criterion::ProductProjection, projection.witness.clone()) };
        let verdict = Verdict { outcome: non_holding(&verdict), ..verdict };
        return Ok(ProductVerdict {
            verdict,
            projection,
            generic_fibre: None,
            special_fibres: Vec::new(),
            exceptional_locus: Vec::new(),
        });
    }
    trace.push("p1∘f is constant: f lies in a fibre of p1".into());

    let generic = cartan_contradiction(&DefectScenario::points(fibers2)?);
    trace.push(format!("stage 2 (generic fibre, {} marked points): {}", fibers2.len(), generic.line()));
    let mut special_fibres = Vec::new();
    let mut exceptional_locus = Vec::new();
    for fibre in special {
        let v = if fibre.marks.is_empty() {
            Verdict::strict(Criterion::CartanDefect, int(-2)).with_trace("no marked points on this fibre")
        } else {
            cartan_contradiction(&DefectScenario::points(&fibre.marks)?)
        };
        trace.push(format!("stage 2 (special fibre {}): {}", fibre.name, v.line()));
        if !v.holds() {
            exceptional_locus.push(fibre.name.clone());
        }
        special_fibres.push((fibre.name.clone(), v));
    }
    let mut verdict = Verdict::strict(Criterion::ProductProjection, generic.witness.clone());
    if generic.holds() {
        if exceptional_locus.is_empty() {
            trace.push("every orbifold entire curve is constant".into());
        } else {
            trace.push(format!(
                "every orbifold entire curve is constant or contained in {}",
                exceptional_locus.join(", ")
            ));
        }
    } else {
        trace.push("curves in a generic fibre are not excluded".into());
        verdict.outcome = non_holding(&verdict);
    }
    verdict.trace = trace;
    Ok(ProductVerdict { verdict, projection, generic_fibre: Some(generic), special_fibres, exceptional_locus })
}

fn non_holding(v: &Verdict) -> Outcome {
    if v.witness.is_zero() {
        Outcome::Boundary
    } else {
        Outcome::Fails
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateReport {
    pub verdict: Verdict,
    #[serde(with = "serde_rational")]
    pub weighted_degree: Rational,
    /// The hypothesis holds but the defect relation gives no contradiction.
    pub conjecturally_degenerate: bool,
}

/// `Σ(1 - 1/mᵢ)dᵢ > n + 1`, i.e. `K_{Pⁿ} + Δ` is positive.
pub fn log_general_type_gate(n: u32, targets: &[(u32, u32)]) -> Result<GateReport> {
    if n == 0 {
        return Err(Error::usage("ambient dimension must be positive"));
    }
    if let Some((d, m)) = targets.iter().find(|(d, m)| *d < 1 || *m < 2) {
        return Err(Error::usage(format!("targets need degree >= 1 and multiplicity >= 2 (got d={d}, m={m})")));
    }
    let weighted: Rational =
        targets.iter().map(|&(d, m)| branch_weight(m) * int(i64::from(d))).fold(Rational::zero(), |a, b| a + b);
    let mut verdict = Verdict::strict(Criterion::LogGeneralType, &weighted - int(i64::from(n) + 1));
    let hyperplanes_only = targets.iter().all(|&(d, _)| d == 1);
    let cartan_holds = hyperplanes_only && !targets.is_empty() && {
        let scenario =
            DefectScenario::new(n, targets.iter().map(|&(_, m)| DefectTarget { mult: m, count: 1 }).collect())?;
        cartan_contradiction(&scenario).holds()
    };
    let conjecturally_degenerate = verdict.holds() && !cartan_holds;
    if conjecturally_degenerate {
        verdict = verdict.with_trace(if hyperplanes_only {
            "conjecturally degenerate (orbifold Cartan conjecture); the defect relation alone is inconclusive"
        } else {
            "conjecturally degenerate (orbifold Cartan conjecture); targets of higher degree"
        });
    } else if cartan_holds {
        verdict = verdict.with_trace("degenerate by the truncated defect relation");
    }
    Ok(GateReport { verdict, weighted_degree: weighted, conjecturally_degenerate })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_family_examples() {
        let v = cartan_contradiction(&DefectScenario::uniform(2, 6, 6).unwrap());
        assert_eq!((v.outcome, v.witness.clone()), (Outcome::Holds, int(1)));
        let v = cartan_contradiction(&DefectScenario::uniform(2, 5, 5).unwrap());
        assert_eq!(v.outcome, Outcome::Boundary);
        assert!(!v.holds());
    }

    #[test]
    fn points_on_the_line() {
        assert!(cartan_contradiction(&DefectScenario::points(&[2; 6]).unwrap()).holds());
        let v = cartan_contradiction(&DefectScenario::points(&[2; 4]).unwrap());
        assert_eq!(v.outcome, Outcome::Boundary);
        assert!(v.trace[0].starts_with("1. "));
    }

    #[test]
    fn low_multiplicities_contribute_nothing() {
        assert_eq!(defect_lower_bound(3, 2), int(0));
        let v = cartan_contradiction(&DefectScenario::uniform(3, 100, 3).unwrap());
        assert_eq!(v.witness, int(-4));
    }

    #[test]
    fn product_constructions() {
        let p = product_projection_argument(&[2; 6], &[2; 6], &[]).unwrap();
        assert!(p.verdict.holds());
        assert!(p.exceptional_locus.is_empty());

        let g1 = SpecialFiber { name: "G1".into(), marks: vec![2, 2] };
        let p = product_projection_argument(&[2; 5], &[2; 5], &[g1]).unwrap();
        assert!(p.verdict.holds());
        assert_eq!(p.exceptional_locus, vec!["G1".to_string()]);

        let p = product_projection_argument(&[2; 4], &[2; 9], &[]).unwrap();
        assert!(!p.verdict.holds());
        assert!(p.generic_fibre.is_none());
    }

    #[test]
    fn gate_examples() {
        let g = log_general_type_gate(2, &[(1, 5); 5]).unwrap();
        assert!(g.verdict.holds());
        assert!(g.conjecturally_degenerate);
        assert_eq!(g.weighted_degree, int(4));
        assert!(!log_general_type_gate(2, &[(1, 2); 3]).unwrap().verdict.holds());
        let g = log_general_type_gate(3, &[(1, 4); 6]).unwrap();
        assert_eq!(g.weighted_degree, rat(9, 2));
        assert!(g.verdict.holds());
        let g = log_general_type_gate(2, &[(1, 6); 6]).unwrap();
        assert!(g.verdict.holds() && !g.conjecturally_degenerate);
    }

    #[test]
    fn invalid_targets() {
        assert!(DefectScenario::uniform(2, 3, 1).is_err());
        assert!(DefectScenario::uniform(0, 3, 3).is_err());
        assert!(log_general_type_gate(2, &[(0, 3)]).is_err());
    }
}
