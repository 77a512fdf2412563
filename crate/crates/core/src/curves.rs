//! Orbifold curves and genus lower bounds for curves on cyclic covers.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{branch_weight, int, rat, Rational};

/// A compact Riemann surface of genus `g` with points marked by orders `mᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbCurve {
    pub genus: u32,
    pub marks: Vec<u32>,
}

impl OrbCurve {
    pub fn new(genus: u32, marks: impl Into<Vec<u32>>) -> Result<Self> {
        let marks = marks.into();
        if let Some(m) = marks.iter().find(|&&m| m < 2) {
            return Err(Error::usage(format!("orbifold marks must be >= 2, got {m}")));
        }
        Ok(OrbCurve { genus, marks })
    }
}

/// `2g - 2 + Σ(1 - 1/mᵢ)`.
pub fn canonical_degree(c: &OrbCurve) -> Rational {
    c.marks.iter().fold(int(2 * i64::from(c.genus) - 2), |acc, &m| acc + branch_weight(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EllipticType {
    /// `(E, ∅)`.
    Smooth,
    /// `P¹` with marks `(2,3,6)`.
    Triangle236,
    /// `P¹` with marks `(2,4,4)`.
    Triangle244,
    /// `P¹` with marks `(3,3,3)`.
    Triangle333,
    /// `P¹` with four half-points.
    FourHalfPoints,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveClass {
    Rational,
    Elliptic(EllipticType),
    Hyperbolic,
}

pub fn classify_curve(c: &OrbCurve) -> Result<CurveClass> {
    let degree = canonical_degree(c);
    if degree.is_negative() {
        return Ok(CurveClass::Rational);
    }
    if degree.is_positive() {
        return Ok(CurveClass::Hyperbolic);
    }
    let mut marks = c.marks.clone();
    marks.sort_unstable();
    let kind = match (c.genus, marks.as_slice()) {
        (1, []) => EllipticType::Smooth,
        (0, [2, 3, 6]) => EllipticType::Triangle236,
        (0, [2, 4, 4]) => EllipticType::Triangle244,
        (0, [3, 3, 3]) => EllipticType::Triangle333,
        (0, [2, 2, 2, 2]) => EllipticType::FourHalfPoints,
        _ => {
            return Err(Error::Internal(format!(
                "degree-0 orbifold curve of genus {} with marks {:?} is not in the elliptic list",
                c.genus, c.marks
            )))
        }
    };
    Ok(CurveClass::Elliptic(kind))
}

/// Smallest mark `m̃` at a point of a curve mapping to the branch locus of an
/// `n`-cyclic cover with local intersection multiplicities `row`, such that
/// `n | m̃·t` for every entry: `lcm_j (n / gcd(n, t_j))` over positive `t_j`.
pub fn minimal_multiplicity(n: u64, row: &[u64]) -> Result<u64> {
    if n < 2 {
        return Err(Error::usage("cover degree must be at least 2"));
    }
    let mut positive = row.iter().filter(|&&t| t > 0).peekable();
    if positive.peek().is_none() {
        return Err(Error::usage("incidence row has no positive entry"));
    }
    Ok(positive.fold(1, |acc, &t| acc.lcm(&(n / n.gcd(&t)))))
}

fn check_cover(d: i64, n: i64) -> Result<()> {
    if d < 1 || n < 2 {
        return Err(Error::usage(format!("need d >= 1 and n >= 2 (got d={d}, n={n})")));
    }
    if !d.is_multiple_of(&n) {
        return Err(Error::usage(format!("a cyclic cover of degree {n} needs {n} | {d}")));
    }
    Ok(())
}

/// Coefficient `d - d/n - 2·ambient` of the degree bound for curves on the
/// `n`-cyclic cover of `Pᵃᵐᵇⁱᵉⁿᵗ` branched along a very general degree-`d`
/// hypersurface.
pub fn cover_coefficient(d: i64, n: i64, ambient: u32) -> Result<Rational> {
    check_cover(d, n)?;
    if ambient < 2 {
        return Err(Error::usage("ambient dimension must be at least 2"));
    }
    Ok(int(d - d / n - 2 * i64::from(ambient)))
}

/// `deg K_C ≥ (d - d/n - 4)·deg C` for orbifold curves on the cover of the
/// plane not contained in the branch locus.
pub fn plane_cover_bound(d: i64, n: i64, deg_c: i64) -> Result<Rational> {
    if deg_c < 1 {
        return Err(Error::usage("curve degree must be at least 1"));
    }
    Ok(cover_coefficient(d, n, 2)? * int(deg_c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverVerdict {
    AlgebraicallyHyperbolic,
    NoRationalCurves,
    Inconclusive,
}

impl CoverVerdict {
    pub fn describe(&self) -> &'static str {
        match self {
            CoverVerdict::AlgebraicallyHyperbolic => "algebraically hyperbolic modulo curves in the branch locus",
            CoverVerdict::NoRationalCurves => "no rational curves modulo curves in the branch locus",
            CoverVerdict::Inconclusive => "inconclusive",
        }
    }
}

pub fn verdict_for_coefficient(coefficient: &Rational) -> CoverVerdict {
    if coefficient.is_positive() {
        CoverVerdict::AlgebraicallyHyperbolic
    } else if coefficient.is_zero() {
        CoverVerdict::NoRationalCurves
    } else {
        CoverVerdict::Inconclusive
    }
}

pub fn plane_cover_verdict(d: i64, n: i64) -> Result<CoverVerdict> {
    Ok(verdict_for_coefficient(&cover_coefficient(d, n, 2)?))
}

/// Verdict for the `n`-cyclic cover of `Pᵃᵐᵇⁱᵉⁿᵗ` branched along a very
/// general hypersurface of degree `d`.
pub fn hypersurface_cover_verdict(d: i64, n: i64, ambient: u32) -> Result<CoverVerdict> {
    Ok(verdict_for_coefficient(&cover_coefficient(d, n, ambient)?))
}

/// Bound for curves on an `n`-cyclic cover of `F_N` branched along
/// `D ~ aT + bF`, whose image has class `cT + dd·F`:
/// `min(a-3, b-2)(c(N+1) + dd) - (bc + a·dd + a·c·N)/n`.
pub fn hirzebruch_cover_bound(big_n: i64, a: i64, b: i64, n: i64, c: i64, dd: i64) -> Result<Rational> {
    if big_n < 0 || n < 2 {
        return Err(Error::usage(format!("need N >= 0 and n >= 2 (got N={big_n}, n={n})")));
    }
    if !a.is_multiple_of(&n) || !b.is_multiple_of(&n) {
        return Err(Error::usage(format!("a cyclic cover of degree {n} needs {n} | a={a} and {n} | b={b}")));
    }
    if a * (big_n - 1) + b < 0 {
        return Err(Error::usage(format!("branch class needs a(N-1)+b >= 0, got {}", a * (big_n - 1) + b)));
    }
    if c < 0 || dd + c * big_n < 0 {
        return Err(Error::usage(format!("({c},{dd}) is not an effective class on F{big_n}")));
    }
    let degree = c * (big_n + 1) + dd;
    let meet = b * c + a * dd + a * c * big_n;
    Ok(int((a - 3).min(b - 2) * degree) - rat(meet, n))
}

/// Coprimality test behind the elliptic-image obstruction for `n`-cyclic
/// covers branched over lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub n: u64,
    /// `(m, gcd(n, m))` for each elliptic-list multiplicity.
    pub checked: Vec<(u64, u64)>,
    pub holds: bool,
}

/// Marks occurring on the rational elliptic orbifold curves.
pub const ELLIPTIC_MARKS: [u64; 4] = [2, 3, 4, 6];

pub fn elliptic_image_obstruction(n: u64) -> Result<ObstructionReport> {
    if n < 2 {
        return Err(Error::usage("cover degree must be at least 2"));
    }
    let checked: Vec<_> = ELLIPTIC_MARKS.iter().map(|&m| (m, n.gcd(&m))).collect();
    let holds = checked.iter().all(|&(_, g)| g == 1);
    Ok(ObstructionReport { n, checked, holds })
}

impl ObstructionReport {
    pub fn conclusion(&self) -> String {
        if self.holds {
            format!(
                "every orbifold elliptic curve maps to a singular genus-one curve meeting each branch line with multiplicity divisible by {}",
                self.n
            )
        } else {
            let shared: Vec<String> = self
                .checked
                .iter()
                .filter(|(_, g)| *g > 1)
                .map(|(m, g)| format!("gcd({}, {m}) = {g}", self.n))
                .collect();
            format!("obstruction unavailable: {}", shared.join(", "))
        }
    }
}

/// Condition and parameter count for genus-`g` degree-`d` plane curves
/// tangent to five lines with orders divisible by 5.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeveriCount {
    pub conditions: i64,
    pub parameters: i64,
    pub excess: i64,
}

pub fn severi_condition_count(d: i64, partitions: &[Vec<i64>], g: i64) -> Result<SeveriCount> {
    if partitions.len() != 5 {
        return Err(Error::usage(format!("expected 5 tangency partitions, got {}", partitions.len())));
    }
    if d < 1 || g < 0 {
        return Err(Error::usage("need d >= 1 and g >= 0"));
    }
    for (i, part) in partitions.iter().enumerate() {
        if part.iter().any(|&p| p <= 0 || p % 5 != 0) {
            return Err(Error::usage(format!("line {}: tangency orders must be positive multiples of 5", i + 1)));
        }
        let sum: i64 = part.iter().sum();
        if sum != d {
            return Err(Error::usage(format!("line {}: tangency orders sum to {sum}, expected {d}", i + 1)));
        }
    }
    // a contact point of order t imposes t - 1 conditions
    let conditions: i64 = partitions.iter().map(|p| d - p.len() as i64).sum();
    let parameters = 3 * d + g - 1;
    if conditions < 4 * d {
        return Err(Error::Internal(format!("condition count {conditions} below 4d = {}", 4 * d)));
    }
    Ok(SeveriCount { conditions, parameters, excess: conditions - parameters })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(canonical_degree(&OrbCurve::new(0, [2, 3, 6]).unwrap()), int(0));
        assert_eq!(canonical_degree(&OrbCurve::new(0, []).unwrap()), int(-2));
        assert_eq!(canonical_degree(&OrbCurve::new(0, [2, 3, 7]).unwrap()), rat(1, 42));
        assert!(OrbCurve::new(0, [1]).is_err());
    }

    #[test]
    fn classification() {
        let c = |g, m: &[u32]| classify_curve(&OrbCurve::new(g, m.to_vec()).unwrap()).unwrap();
        assert_eq!(c(1, &[]), CurveClass::Elliptic(EllipticType::Smooth));
        assert_eq!(c(0, &[2, 2, 2, 2]), CurveClass::Elliptic(EllipticType::FourHalfPoints));
        assert_eq!(c(0, &[4, 2, 4]), CurveClass::Elliptic(EllipticType::Triangle244));
        assert_eq!(c(0, &[5, 5]), CurveClass::Rational);
        assert_eq!(c(0, &[2, 3, 7]), CurveClass::Hyperbolic);
        assert_eq!(c(2, &[]), CurveClass::Hyperbolic);
    }

    #[test]
    fn minimal_marks() {
        assert_eq!(minimal_multiplicity(5, &[5]).unwrap(), 1);
        assert_eq!(minimal_multiplicity(5, &[1]).unwrap(), 5);
        assert_eq!(minimal_multiplicity(4, &[2, 1]).unwrap(), 4);
        assert_eq!(minimal_multiplicity(6, &[2, 0, 3]).unwrap(), 6);
        assert!(minimal_multiplicity(4, &[0, 0]).is_err());
        assert!(minimal_multiplicity(1, &[1]).is_err());
    }

    #[test]
    fn plane_bounds() {
        assert_eq!(plane_cover_bound(10, 2, 1).unwrap(), int(1));
        assert_eq!(plane_cover_bound(8, 2, 3).unwrap(), int(0));
        assert_eq!(plane_cover_bound(6, 2, 1).unwrap(), int(-1));
        assert!(plane_cover_bound(7, 2, 1).is_err());
        assert_eq!(plane_cover_verdict(10, 2).unwrap(), CoverVerdict::AlgebraicallyHyperbolic);
        assert_eq!(plane_cover_verdict(8, 2).unwrap(), CoverVerdict::NoRationalCurves);
        assert_eq!(plane_cover_verdict(6, 2).unwrap(), CoverVerdict::Inconclusive);
    }

    #[test]
    fn hypersurface_covers_follow_degree_rule() {
        // the degree-d cover of P^n branched along a degree-d hypersurface is
        // algebraically hyperbolic once d >= 2n + 2
        for ambient in 2..=6u32 {
            for d in 2..=30i64 {
                let v = hypersurface_cover_verdict(d, d, ambient).unwrap();
                assert_eq!(
                    v == CoverVerdict::AlgebraicallyHyperbolic,
                    d >= 2 * i64::from(ambient) + 2,
                    "ambient {ambient}, d {d}"
                );
            }
        }
    }

    #[test]
    fn hirzebruch_bounds() {
        assert_eq!(hirzebruch_cover_bound(1, 6, 6, 2, 1, 0).unwrap(), int(0));
        assert_eq!(hirzebruch_cover_bound(0, 6, 8, 2, 1, 0).unwrap(), int(-1));
        assert_eq!(hirzebruch_cover_bound(0, 6, 6, 2, 2, 5).unwrap(), int(0));
        // b = 4 uses min(a-3, b-2) = 2: 2·3 - (4 + 6 + 6)/2
        assert_eq!(hirzebruch_cover_bound(1, 6, 4, 2, 1, 1).unwrap(), int(-2));
        assert!(hirzebruch_cover_bound(0, 6, 5, 2, 1, 0).is_err());
        assert!(hirzebruch_cover_bound(0, 6, -8, 2, 1, 0).is_err());
        assert!(hirzebruch_cover_bound(2, 6, 6, 2, 1, -3).is_err());
    }

    #[test]
    fn elliptic_obstruction() {
        assert!(elliptic_image_obstruction(5).unwrap().holds);
        assert!(elliptic_image_obstruction(7).unwrap().holds);
        assert!(!elliptic_image_obstruction(2).unwrap().holds);
        assert!(!elliptic_image_obstruction(9).unwrap().holds);
    }

    #[test]
    fn severi_counts() {
        let five = vec![vec![5]; 5];
        assert_eq!(
            severi_condition_count(5, &five, 1).unwrap(),
            SeveriCount { conditions: 20, parameters: 15, excess: 5 }
        );
        let ten = vec![vec![5, 5]; 5];
        let s = severi_condition_count(10, &ten, 1).unwrap();
        assert_eq!((s.conditions, s.parameters), (40, 30));
        assert!(severi_condition_count(10, &vec![vec![5, 4]; 5], 1).is_err());
        assert!(severi_condition_count(10, &vec![vec![5]; 5], 1).is_err());
        assert!(severi_condition_count(5, &vec![vec![5]; 4], 1).is_err());
    }
}
