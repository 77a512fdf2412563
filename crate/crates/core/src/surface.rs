//! Intersection theory on the Néron–Severi lattices of the projective plane
//! and the Hirzebruch surfaces `F_N`.
//!
//! On `F_N` classes are written `aT + bF` where `F` is a fibre of the ruling
//! and `T` is the section with `T² = N`, so that `F² = 0` and `T·F = 1`.
//! On the plane a class is its degree.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum BaseSurface {
    ProjectivePlane,
    Hirzebruch(u32),
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSurface::ProjectivePlane => write!(f, "P2"),
            BaseSurface::Hirzebruch(n) => write!(f, "F{n}"),
        }
    }
}

impl FromStr for BaseSurface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "P2" {
            return Ok(BaseSurface::ProjectivePlane);
        }
        s.strip_prefix('F')
            .filter(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|digits| digits.parse().ok())
            .map(BaseSurface::Hirzebruch)
            .ok_or_else(|| Error::usage(format!("unknown surface `{s}` (expected P2 or F<N>)")))
    }
}

/// Numerical class of a divisor, bound to the surface it lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "surface", rename_all = "snake_case")]
pub enum DivisorClass {
    Plane { degree: i64 },
    Hirzebruch { n: u32, a: i64, b: i64 },
}

impl DivisorClass {
    pub fn plane(degree: i64) -> Self {
        DivisorClass::Plane { degree }
    }

    pub fn hirzebruch(n: u32, a: i64, b: i64) -> Self {
        DivisorClass::Hirzebruch { n, a, b }
    }

    /// Builds a class on `surface` from DSL-style coordinates.
    pub fn on(surface: BaseSurface, coords: ClassCoords) -> Result<Self> {
        match (surface, coords) {
            (BaseSurface::ProjectivePlane, ClassCoords::Degree(d)) => Ok(Self::plane(d)),
            (BaseSurface::Hirzebruch(n), ClassCoords::Pair(a, b)) => Ok(Self::hirzebruch(n, a, b)),
            (BaseSurface::ProjectivePlane, ClassCoords::Pair(..)) => {
                Err(Error::usage("classes on P2 are a single degree"))
            }
            (BaseSurface::Hirzebruch(_), ClassCoords::Degree(_)) => {
                Err(Error::usage("classes on F_N are pairs (a,b) meaning aT+bF"))
            }
        }
    }

    pub fn surface(&self) -> BaseSurface {
        match *self {
            DivisorClass::Plane { .. } => BaseSurface::ProjectivePlane,
            DivisorClass::Hirzebruch { n, .. } => BaseSurface::Hirzebruch(n),
        }
    }

    pub fn coords(&self) -> ClassCoords {
        match *self {
            DivisorClass::Plane { degree } => ClassCoords::Degree(degree),
            DivisorClass::Hirzebruch { a, b, .. } => ClassCoords::Pair(a, b),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.surface() == other.surface() {
            Ok(())
        } else {
            Err(Error::SurfaceMismatch { left: self.surface().to_string(), right: other.surface().to_string() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(match (*self, *other) {
            (DivisorClass::Plane { degree: x }, DivisorClass::Plane { degree: y }) => Self::plane(x + y),
            (DivisorClass::Hirzebruch { n, a, b }, DivisorClass::Hirzebruch { a: c, b: d, .. }) => {
                Self::hirzebruch(n, a + c, b + d)
            }
            _ => unreachable!("surfaces checked above"),
        })
    }

    pub fn scale(&self, k: i64) -> Self {
        match *self {
            DivisorClass::Plane { degree } => Self::plane(k * degree),
            DivisorClass::Hirzebruch { n, a, b } => Self::hirzebruch(n, k * a, k * b),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords().fmt(f)
    }
}

/// Surface-free coordinates as they appear in scenario files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassCoords {
    Degree(i64),
    Pair(i64, i64),
}

impl fmt::Display for ClassCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassCoords::Degree(d) => write!(f, "{d}"),
            ClassCoords::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// Intersection pairing: `d₁d₂` on the plane and
/// `(a₁T+b₁F)·(a₂T+b₂F) = a₁a₂N + a₁b₂ + a₂b₁` on `F_N`.
pub fn intersect(x: &DivisorClass, y: &DivisorClass) -> Result<i64> {
    x.check_same(y)?;
    Ok(match (*x, *y) {
        (DivisorClass::Plane { degree: d1 }, DivisorClass::Plane { degree: d2 }) => d1 * d2,
        (DivisorClass::Hirzebruch { n, a: a1, b: b1 }, DivisorClass::Hirzebruch { a: a2, b: b2, .. }) => {
            a1 * a2 * i64::from(n) + a1 * b2 + a2 * b1
        }
        _ => unreachable!("surfaces checked above"),
    })
}

/// `K = -3H` on the plane and `K = -2T + (N-2)F` on `F_N`.
pub fn canonical_class(s: BaseSurface) -> DivisorClass {
    match s {
        BaseSurface::ProjectivePlane => DivisorClass::plane(-3),
        BaseSurface::Hirzebruch(n) => DivisorClass::hirzebruch(n, -2, i64::from(n) - 2),
    }
}

/// Topological Euler number of the base.
pub fn base_euler(s: BaseSurface) -> i64 {
    match s {
        BaseSurface::ProjectivePlane => 3,
        BaseSurface::Hirzebruch(_) => 4,
    }
}
