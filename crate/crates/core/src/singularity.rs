//! ADE curve singularities: branch structure, the isotropy order `β(p)` of a
//! point of the branch divisor, and the per-point correction of the
//! contraction formula for orbifold `c₂`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, rat, recip, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AdeFamily {
    A,
    D,
    E,
}

/// An ADE type `A_k (k≥1)`, `D_k (k≥4)` or `E_k (k∈{6,7,8})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct AdeType {
    family: AdeFamily,
    index: u32,
}

impl AdeType {
    pub fn new(family: AdeFamily, index: u32) -> Result<Self> {
        let ok = match family {
            AdeFamily::A => index >= 1,
            AdeFamily::D => index >= 4,
            AdeFamily::E => (6..=8).contains(&index),
        };
        if ok {
            Ok(AdeType { family, index })
        } else {
            Err(Error::usage(format!("unsupported ADE type `{family:?}{index}`")))
        }
    }

    pub fn a(k: u32) -> Self {
        Self::new(AdeFamily::A, k).expect("A_k needs k >= 1")
    }

    pub fn d(k: u32) -> Self {
        Self::new(AdeFamily::D, k).expect("D_k needs k >= 4")
    }

    pub fn e(k: u32) -> Self {
        Self::new(AdeFamily::E, k).expect("E_k needs k in 6..=8")
    }

    pub fn family(&self) -> AdeFamily {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Number of branch multiplicities the isotropy table expects.
    ///
    /// `A_{2n}`, `E₆` and `E₈` take one, `A_{2n-1}` and `E₇` two, every `D_k`
    /// three. For odd `D` the last two slots are the two halves of the
    /// singular branch, so a scenario lists that component twice.
    pub fn branch_count(&self) -> usize {
        match (self.family, self.index % 2) {
            (AdeFamily::A, 0) => 1,
            (AdeFamily::A, _) => 2,
            (AdeFamily::D, _) => 3,
            (AdeFamily::E, _) if self.index == 7 => 2,
            (AdeFamily::E, _) => 1,
        }
    }

    /// Which row of the isotropy table evaluates this type.
    pub fn beta_row(&self) -> BetaRow {
        let k = self.index;
        match self.family {
            AdeFamily::A if k == 1 => BetaRow::A1,
            AdeFamily::A if k.is_multiple_of(2) => BetaRow::AEven { n: k / 2 },
            AdeFamily::A => BetaRow::AOdd { n: k.div_ceil(2) },
            AdeFamily::D if k.is_multiple_of(2) => BetaRow::DEven { n: (k - 2) / 2 },
            AdeFamily::D => BetaRow::DOdd { n: (k - 3) / 2 },
            AdeFamily::E if k == 7 => BetaRow::E7,
            AdeFamily::E => BetaRow::Untabulated,
        }
    }

    /// Order of the binary polyhedral group of the surface singularity.
    pub fn group_order(&self) -> i64 {
        let k = i64::from(self.index);
        match (self.family, self.index) {
            (AdeFamily::A, _) => k + 1,
            (AdeFamily::D, _) => 4 * (k - 2),
            (AdeFamily::E, 6) => 24,
            (AdeFamily::E, 7) => 48,
            (AdeFamily::E, _) => 120,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.index)
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::usage(format!("unsupported ADE type `{s}`"));
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => AdeFamily::A,
            Some('D') => AdeFamily::D,
            Some('E') => AdeFamily::E,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index = digits.parse().map_err(|_| bad())?;
        AdeType::new(family, index).map_err(|_| bad())
    }
}

impl TryFrom<String> for AdeType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<AdeType> for String {
    fn from(t: AdeType) -> String {
        t.to_string()
    }
}

/// Rows of the isotropy-order table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaRow {
    A1,
    AEven { n: u32 },
    AOdd { n: u32 },
    DEven { n: u32 },
    DOdd { n: u32 },
    E7,
    Untabulated,
}

impl BetaRow {
    /// The odd-D row is labelled `D_{2n+3}` in the table while the branch
    /// diagram for the same configuration is labelled `D_{2n+1}`.
    pub fn index_note(&self, t: AdeType) -> Option<String> {
        match *self {
            BetaRow::DOdd { n } => Some(format!(
                "{t}: odd-D isotropy row is indexed D_{{2n+3}} in the table but D_{{2n+1}} in the \
                 branch diagram; evaluated with the table row at n = {n}"
            )),
            _ => None,
        }
    }
}

fn inverse_square(ade: AdeType, mults: &[u32], bracket: Rational) -> Result<Rational> {
    if !bracket.is_positive() {
        return Err(Error::NonKlt { ade, mults: mults.to_vec(), bracket });
    }
    Ok(bracket.recip() * bracket.recip())
}

/// Isotropy order `β(p)` for an ADE point whose branches carry the given
/// orbifold multiplicities.
///
/// Branch order: for `D_{2n+2}` the two tangent branches come first and the
/// transverse line last; for odd `D` the smooth line comes first and both
/// halves of the singular branch (multiplicity 2) follow; `E₇` requires both
/// multiplicities to be 2.
pub fn beta(t: AdeType, mults: &[u32]) -> Result<Rational> {
    if mults.len() != t.branch_count() {
        return Err(Error::usage(format!(
            "{t} has {} branch(es) but {} multiplicities were given",
            t.branch_count(),
            mults.len()
        )));
    }
    if let Some(m) = mults.iter().find(|&&m| m == 0) {
        return Err(Error::usage(format!("multiplicity {m} is not positive")));
    }
    let m = |i: usize| i64::from(mults[i]);
    let value = match t.beta_row() {
        BetaRow::A1 => int(m(0) * m(1)),
        BetaRow::AEven { n } => {
            let q = i64::from(2 * n + 1);
            let bracket = recip(m(0)) + recip(q) - rat(1, 2);
            rat(2, q) * inverse_square(t, mults, bracket)?
        }
        BetaRow::AOdd { n } => {
            let n = i64::from(n);
            let bracket = recip(m(0)) + recip(m(1)) + recip(n) - Rational::one();
            rat(4, n) * inverse_square(t, mults, bracket)?
        }
        BetaRow::DEven { n } => {
            let n = i64::from(n);
            let bracket = recip(m(0)) + recip(m(1)) + recip(n * m(2)) - Rational::one();
            rat(4, n) * inverse_square(t, mults, bracket)?
        }
        BetaRow::DOdd { n } => {
            if mults[1] != 2 || mults[2] != 2 {
                return Err(Error::usage(format!(
                    "{t}: the singular branch must have multiplicity 2, got ({},{})",
                    mults[1], mults[2]
                )));
            }
            int(2 * (2 * i64::from(n) + 1) * m(0) * m(0))
        }
        BetaRow::E7 => {
            if mults != [2, 2] {
                return Err(Error::usage(format!(
                    "E7 is tabulated only for branch multiplicities (2,2), got {mults:?}"
                )));
            }
            int(96)
        }
        BetaRow::Untabulated => return Err(Error::UnsupportedAde(t)),
    };
    Ok(value)
}

/// Per-point change of `c₂` when a configuration of (-2)-curves of type `t`
/// is contracted: `-(k+1) + 1/|G|`.
pub fn megyesi_correction(t: AdeType) -> Rational {
    int(-(i64::from(t.index) + 1)) + recip(t.group_order())
}
