//! Orbifold pairs `(X, Δ)` with `Δ = Σ(1 - 1/mᵢ)Dᵢ` and their exact Chern
//! invariants.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{branch_weight, int, serde_rational, Rational};
use crate::singularity::{beta, megyesi_correction, AdeType};
use crate::surface::{base_euler, canonical_class, intersect, BaseSurface, DivisorClass};

/// One irreducible component of the branch divisor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchComponent {
    pub id: String,
    pub class: DivisorClass,
    pub mult: u32,
    /// Geometric genus of the normalization.
    pub genus: u32,
    /// Points of the normalization lying over the singular set `S`.
    pub removed: u32,
}

impl BranchComponent {
    pub fn new(id: impl Into<String>, class: DivisorClass, mult: u32, genus: u32, removed: u32) -> Self {
        BranchComponent { id: id.into(), class, mult, genus, removed }
    }

    /// `e(Dᵢ ∖ S)`.
    pub fn open_euler(&self) -> i64 {
        euler_open_component(self.genus, self.removed)
    }
}

/// An ADE point of `⌈Δ⌉` with its branches listed by component id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPointSpec {
    pub id: String,
    pub ade: AdeType,
    pub branches: Vec<String>,
}

impl SingularPointSpec {
    pub fn new<S: Into<String>>(id: impl Into<String>, ade: AdeType, branches: impl IntoIterator<Item = S>) -> Self {
        SingularPointSpec { id: id.into(), ade, branches: branches.into_iter().map(Into::into).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawConfig")]
pub struct OrbifoldConfig {
    base: BaseSurface,
    components: Vec<BranchComponent>,
    singular_points: Vec<SingularPointSpec>,
}

#[derive(Deserialize)]
struct RawConfig {
    base: BaseSurface,
    components: Vec<BranchComponent>,
    singular_points: Vec<SingularPointSpec>,
}

impl TryFrom<RawConfig> for OrbifoldConfig {
    type Error = Error;

    fn try_from(raw: RawConfig) -> Result<Self> {
        OrbifoldConfig::new(raw.base, raw.components, raw.singular_points)
    }
}

impl OrbifoldConfig {
    /// Validates ids, class surfaces, multiplicities and branch references.
    pub fn new(
        base: BaseSurface,
        components: Vec<BranchComponent>,
        singular_points: Vec<SingularPointSpec>,
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &components {
            if !seen.insert(c.id.as_str()) {
                return Err(Error::usage(format!("duplicate component id `{}`", c.id)));
            }
            if c.class.surface() != base {
                return Err(Error::SurfaceMismatch { left: base.to_string(), right: c.class.surface().to_string() });
            }
            if c.mult == 0 {
                return Err(Error::usage(format!("component `{}` has multiplicity 0", c.id)));
            }
        }
        let mut points = HashSet::new();
        for p in &singular_points {
            if !points.insert(p.id.as_str()) {
                return Err(Error::usage(format!("duplicate singular point id `{}`", p.id)));
            }
            if p.branches.len() != p.ade.branch_count() {
                return Err(Error::usage(format!(
                    "singular point `{}` of type {} needs {} branch(es), got {}",
                    p.id,
                    p.ade,
                    p.ade.branch_count(),
                    p.branches.len()
                )));
            }
            if let Some(b) = p.branches.iter().find(|b| !seen.contains(b.as_str())) {
                return Err(Error::usage(format!("singular point `{}` references unknown component `{b}`", p.id)));
            }
        }
        Ok(OrbifoldConfig { base, components, singular_points })
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    pub fn components(&self) -> &[BranchComponent] {
        &self.components
    }

    pub fn singular_points(&self) -> &[SingularPointSpec] {
        &self.singular_points
    }

    pub fn component(&self, id: &str) -> Option<&BranchComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    /// Branch multiplicities of a point, in branch order.
    pub fn point_multiplicities(&self, p: &SingularPointSpec) -> Vec<u32> {
        p.branches.iter().map(|b| self.component(b).map_or(1, |c| c.mult)).collect()
    }

    /// Components whose declared `removed` count differs from the number of
    /// branch incidences recorded on the singular points.
    pub fn incidence_mismatches(&self) -> Vec<IncidenceMismatch> {
        let mut counts: HashMap<&str, u32> = HashMap::new();
        for p in &self.singular_points {
            for b in &p.branches {
                *counts.entry(b.as_str()).or_default() += 1;
            }
        }
        self.components
            .iter()
            .filter_map(|c| {
                let incidences = counts.get(c.id.as_str()).copied().unwrap_or(0);
                (incidences != c.removed).then(|| IncidenceMismatch {
                    component: c.id.clone(),
                    declared: c.removed,
                    incidences,
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMismatch {
    pub component: String,
    pub declared: u32,
    pub incidences: u32,
}

/// Exact Chern data of an orbifold pair or a surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernReport {
    #[serde(with = "serde_rational")]
    pub c1sq: Rational,
    #[serde(with = "serde_rational")]
    pub c2: Rational,
    #[serde(with = "serde_rational")]
    pub segre2: Rational,
    #[serde(with = "serde_rational")]
    pub jet2: Rational,
    /// `(c₁² + c₂)/12`.
    #[serde(with = "serde_rational")]
    pub chi: Rational,
    /// Whether `chi` is an integer, as it must be for a smooth surface.
    pub chi_integral: bool,
}

impl ChernReport {
    pub fn new(c1sq: Rational, c2: Rational) -> Self {
        let segre2 = &c1sq - &c2;
        let jet2 = int(13) * &c1sq - int(9) * &c2;
        let chi = (&c1sq + &c2) / int(12);
        let chi_integral = chi.is_integer();
        ChernReport { c1sq, c2, segre2, jet2, chi, chi_integral }
    }

    /// Chern numbers of a degree-`deg` orbifold covering.
    pub fn scaled(&self, deg: u32) -> Self {
        let k = int(i64::from(deg));
        ChernReport::new(&self.c1sq * &k, &self.c2 * &k)
    }

    /// Re-derives the dependent fields and reports any disagreement.
    pub fn check_identities(&self) -> Result<()> {
        let fresh = ChernReport::new(self.c1sq.clone(), self.c2.clone());
        if &fresh == self {
            Ok(())
        } else {
            Err(Error::Internal(format!("Chern report identities violated for c1^2 = {}, c2 = {}", self.c1sq, self.c2)))
        }
    }
}

/// `(K_X + Σ(1 - 1/mᵢ)Dᵢ)²` expanded by bilinearity.
pub fn c1_squared(cfg: &OrbifoldConfig) -> Rational {
    let k = canonical_class(cfg.base);
    let dot = |x: &DivisorClass, y: &DivisorClass| int(intersect(x, y).expect("config classes share the base surface"));
    let weighted: Vec<(Rational, &DivisorClass)> =
        cfg.components.iter().filter(|c| c.mult > 1).map(|c| (branch_weight(c.mult), &c.class)).collect();

    let mut total = dot(&k, &k);
    for (w, d) in &weighted {
        total += int(2) * w * dot(&k, d);
    }
    for (w1, d1) in &weighted {
        for (w2, d2) in &weighted {
            total += w1 * w2 * dot(d1, d2);
        }
    }
    total
}

/// Orbifold Gauss–Bonnet:
/// `c₂ = e(X) - Σ(1 - 1/mᵢ) e(Dᵢ ∖ S) - Σ_{p∈S} (1 - 1/β(p))`.
pub fn c2_orbifold(cfg: &OrbifoldConfig) -> Result<Rational> {
    let mut total = int(base_euler(cfg.base));
    for c in &cfg.components {
        total -= branch_weight(c.mult) * int(c.open_euler());
    }
    for p in &cfg.singular_points {
        let mults = cfg.point_multiplicities(p);
        let b = beta(p.ade, &mults).map_err(|e| Error::AtPoint { point: p.id.clone(), source: Box::new(e) })?;
        total -= Rational::one() - b.recip();
    }
    Ok(total)
}

pub fn chern_report(cfg: &OrbifoldConfig) -> Result<ChernReport> {
    Ok(ChernReport::new(c1_squared(cfg), c2_orbifold(cfg)?))
}

/// Chern numbers of the orbifold obtained by contracting ADE configurations
/// of (-2)-curves on a smooth surface with invariants `(c1sq, c2)`.
pub fn megyesi_contract(c1sq: Rational, c2: Rational, counts: &BTreeMap<AdeType, u64>) -> ChernReport {
    let shift: Rational = counts
        .iter()
        .map(|(t, &n)| megyesi_correction(*t) * Rational::from_integer(BigInt::from(n)))
        .fold(Rational::zero(), |acc, x| acc + x);
    ChernReport::new(c1sq, c2 + shift)
}

/// Chern numbers of the minimal desingularisation of the `n`-cyclic cover of
/// the plane branched along a degree-`d` curve with nodes:
/// `c₁² = n(-3 + (1 - 1/n)d)²`, `c₂ = 3n + (n - 1)(d² - 3d)`.
pub fn cyclic_cover_chern(d: i64, n: i64) -> Result<ChernReport> {
    if d < 1 || n < 2 {
        return Err(Error::usage(format!("cyclic cover needs d >= 1 and n >= 2 (got d={d}, n={n})")));
    }
    if !d.is_multiple_of(&n) {
        return Err(Error::usage(format!("a cyclic cover of degree {n} needs {n} | {d}")));
    }
    let coefficient = canonical_coefficient(d, n);
    let c1sq = int(n) * &coefficient * &coefficient;
    let c2 = int(3 * n + (n - 1) * (d * d - 3 * d));
    Ok(ChernReport::new(c1sq, c2))
}

/// `-3 + (1 - 1/n)d`: the pulled-back canonical class of the cover is this
/// multiple of a line.
pub fn canonical_coefficient(d: i64, n: i64) -> Rational {
    int(-3) + (Rational::one() - crate::rational::recip(n)) * int(d)
}

/// Chern report of a degree-`deg` orbifold covering of the pair `cfg`.
pub fn cover_multiplicativity(cfg: &OrbifoldConfig, deg: u32) -> Result<ChernReport> {
    if deg == 0 {
        return Err(Error::usage("covering degree must be at least 1"));
    }
    Ok(chern_report(cfg)?.scaled(deg))
}

/// `e(C ∖ S) = 2 - 2g - r`.
pub fn euler_open_component(genus: u32, removed: u32) -> i64 {
    2 - 2 * i64::from(genus) - i64::from(removed)
}

/// Whether `(c1sq, c2)` could be a smooth surface's Chern pair, i.e. both are
/// integers and `12 | c1sq + c2`.
pub fn is_smooth_pair(r: &ChernReport) -> bool {
    r.c1sq.is_integer() && r.c2.is_integer() && r.chi_integral && !r.chi.is_negative()
}
