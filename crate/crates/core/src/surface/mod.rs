//! Compact oriented surfaces, their Z₂-homology, and the five supported
//! mapping-class descriptions.
//!
//! Descriptions are plain data; [`validate`] checks the structural rules and
//! reports violations instead of failing.

mod validate;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{IntMatrix, QuadraticSurd};
use crate::error::{Error, Result};
use crate::serde_int;

pub use validate::{validate, ValidationReport, Violation};

/// Connected compact oriented surface of genus `genus` with
/// `boundary_count` boundary circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompactSurface {
    pub genus: u32,
    pub boundary_count: u32,
}

impl CompactSurface {
    pub fn closed(genus: u32) -> Self {
        Self {
            genus,
            boundary_count: 0,
        }
    }

    pub fn new(genus: u32, boundary_count: u32) -> Self {
        Self {
            genus,
            boundary_count,
        }
    }
}

/// Betti numbers over Z₂ in degrees 0, 1, 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyDims {
    pub d0: u64,
    pub d1: u64,
    pub d2: u64,
}

impl HomologyDims {
    pub fn new(d0: u64, d1: u64, d2: u64) -> Self {
        Self { d0, d1, d2 }
    }

    pub fn euler(&self) -> i64 {
        self.d0 as i64 - self.d1 as i64 + self.d2 as i64
    }

    pub fn total(&self) -> u64 {
        self.d0 + self.d1 + self.d2
    }

    /// Dimensions folded by degree parity: `(d0 + d2, d1)`.
    pub fn by_parity(&self) -> (u64, u64) {
        (self.d0 + self.d2, self.d1)
    }
}

/// `2 - 2g - b`.
pub fn euler_characteristic(s: &CompactSurface) -> i64 {
    2 - 2 * s.genus as i64 - s.boundary_count as i64
}

pub fn absolute_homology_dims(s: &CompactSurface) -> HomologyDims {
    let g = s.genus as u64;
    let b = s.boundary_count as u64;
    if b == 0 {
        HomologyDims::new(1, 2 * g, 1)
    } else {
        HomologyDims::new(1, 2 * g + b - 1, 0)
    }
}

/// `H_*(S', ∂_+; Z₂)` where `S'` is `s` with `puncture_count` extra boundary
/// circles and `∂_+` is a set of `plus_count` of the original circles.
pub fn relative_homology_dims(
    s: &CompactSurface,
    plus_count: u32,
    puncture_count: u32,
) -> Result<HomologyDims> {
    if plus_count > s.boundary_count {
        return Err(Error::Invalid(format!(
            "{plus_count} plus boundaries requested but the surface has {} boundary circles",
            s.boundary_count
        )));
    }
    let h = s.genus as u64;
    let total = (s.boundary_count + puncture_count) as u64;
    let plus = plus_count as u64;
    Ok(match (plus, total) {
        (0, 0) => HomologyDims::new(1, 2 * h, 1),
        (0, _) => HomologyDims::new(1, 2 * h + total - 1, 0),
        (p, t) if p < t => HomologyDims::new(0, 2 * h + total - 2, 0),
        _ => HomologyDims::new(0, 2 * h + total - 1, 1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistSign {
    Plus,
    Minus,
}

/// Twist region of a finite-type or reducible map. Metadata only: the signs
/// that matter for homology are carried by the boundary labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Annulus {
    pub sign: TwistSign,
    #[serde(default)]
    pub flipped: bool,
}

/// What a boundary circle of a fixed component is glued to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryLabel {
    PlusTwist,
    MinusTwist,
    /// Meets pseudo-Anosov component `component` along a boundary with
    /// `prongs` prongs.
    PaAdjacent {
        prongs: u32,
        #[serde(default)]
        component: usize,
    },
}

/// A component of the fixed set `M_id`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedComponent {
    pub genus: u32,
    #[serde(default)]
    pub boundary: Vec<BoundaryLabel>,
}

impl FixedComponent {
    pub fn surface(&self) -> CompactSurface {
        CompactSurface::new(self.genus, self.boundary.len() as u32)
    }

    pub fn plus_count(&self) -> u32 {
        self.boundary
            .iter()
            .filter(|l| matches!(l, BoundaryLabel::PlusTwist))
            .count() as u32
    }

    /// Prong counts of the boundaries that meet pseudo-Anosov pieces.
    pub fn pa_prongs(&self) -> Vec<u32> {
        self.boundary
            .iter()
            .filter_map(|l| match l {
                BoundaryLabel::PaAdjacent { prongs, .. } => Some(*prongs),
                _ => None,
            })
            .collect()
    }

    /// `M_a` (no pA boundary), `M_{b,p}` (exactly one) or `M_{c,q}` (two or
    /// more, `q` the total prong count).
    pub fn kind(&self) -> FixedComponentKind {
        let prongs = self.pa_prongs();
        match prongs.len() {
            0 => FixedComponentKind::NoPa,
            1 => FixedComponentKind::OnePa { prongs: prongs[0] },
            _ => FixedComponentKind::ManyPa {
                total_prongs: prongs.iter().map(|&p| p as u64).sum(),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedComponentKind {
    NoPa,
    OnePa { prongs: u32 },
    ManyPa { total_prongs: u64 },
}

/// A periodic map `φ` with `φ^period = id`, described by how many points have
/// each proper least period.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicClassDesc {
    pub genus: u32,
    pub period: u64,
    #[serde(default, with = "serde_int::count_map")]
    pub least_period_counts: BTreeMap<u64, u64>,
}

impl PeriodicClassDesc {
    pub fn new(genus: u32, period: u64, counts: &[(u64, u64)]) -> Self {
        Self {
            genus,
            period,
            least_period_counts: counts.iter().copied().collect(),
        }
    }

    pub fn count(&self, d: u64) -> u64 {
        self.least_period_counts.get(&d).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteTypeClassDesc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default)]
    pub fixed_components: Vec<FixedComponent>,
    /// Isolated fixed points off `M_id`, each of index +1.
    #[serde(default)]
    pub periodic_part_fixed_points: u64,
    #[serde(default)]
    pub annuli: Vec<Annulus>,
    /// Declared pairs of homotopic annuli (indices into `annuli`).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub homotopic_annuli: Vec<(usize, usize)>,
    /// Optional `L(φ | M ∖ M_id)`, checked against the isolated point count.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lefschetz_outside_fixed: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusAutoDesc {
    #[serde(with = "serde_int::matrix")]
    pub matrix: IntMatrix,
    #[serde(default = "default_true")]
    pub anosov: bool,
}

fn default_true() -> bool {
    true
}

impl TorusAutoDesc {
    pub fn new(matrix: IntMatrix) -> Self {
        Self {
            matrix,
            anosov: true,
        }
    }
}

/// Fixed point of a pseudo-Anosov map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedPointDatum {
    /// Regular fixed point with index ±1.
    Regular(i64),
    /// Fixed `prongs`-pronged singularity; `rotated` when the prongs are
    /// permuted nontrivially.
    Singular {
        prongs: u32,
        #[serde(default)]
        rotated: bool,
    },
}

/// Stretch factor as a float or an exact quadratic surd `(a + b√d)/c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StretchFactor {
    Approx(f64),
    Exact(QuadraticSurd),
}

impl StretchFactor {
    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Approx(x) => *x,
            Self::Exact(s) => s.to_f64(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudoAnosovClassDesc {
    pub genus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stretch_factor: Option<StretchFactor>,
    #[serde(default)]
    pub fixed_points: Vec<FixedPointDatum>,
}

/// Periodic piece `M₁` of a reducible map, known through its Lefschetz number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicPiece {
    pub lefschetz_number: i64,
}

/// Pseudo-Anosov piece `M₂` of a reducible map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudoAnosovPiece {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stretch_factor: Option<StretchFactor>,
    #[serde(default)]
    pub fixed_points: Vec<FixedPointDatum>,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReducibleClassDesc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default)]
    pub fixed_components: Vec<FixedComponent>,
    #[serde(default)]
    pub periodic_components: Vec<PeriodicPiece>,
    #[serde(default)]
    pub pa_components: Vec<PseudoAnosovPiece>,
    #[serde(default)]
    pub annuli: Vec<Annulus>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub homotopic_annuli: Vec<(usize, usize)>,
}

impl ReducibleClassDesc {
    /// Disjoint union of two descriptions; pA references of `other` are
    /// shifted past the pA pieces of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.pa_components.len();
        let shifted = other.fixed_components.iter().map(|c| FixedComponent {
            genus: c.genus,
            boundary: c
                .boundary
                .iter()
                .map(|l| match *l {
                    BoundaryLabel::PaAdjacent { prongs, component } => BoundaryLabel::PaAdjacent {
                        prongs,
                        component: component + shift,
                    },
                    other => other,
                })
                .collect(),
        });
        let ashift = self.annuli.len();
        Self {
            genus: None,
            fixed_components: self
                .fixed_components
                .iter()
                .cloned()
                .chain(shifted)
                .collect(),
            periodic_components: [
                &self.periodic_components[..],
                &other.periodic_components[..],
            ]
            .concat(),
            pa_components: [&self.pa_components[..], &other.pa_components[..]].concat(),
            annuli: [&self.annuli[..], &other.annuli[..]].concat(),
            homotopic_annuli: self
                .homotopic_annuli
                .iter()
                .copied()
                .chain(
                    other
                        .homotopic_annuli
                        .iter()
                        .map(|&(a, b)| (a + ashift, b + ashift)),
                )
                .collect(),
        }
    }
}

/// A mapping class in Thurston normal form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MappingClassDescription {
    Periodic(PeriodicClassDesc),
    FiniteType(FiniteTypeClassDesc),
    Torus(TorusAutoDesc),
    PseudoAnosov(PseudoAnosovClassDesc),
    Reducible(ReducibleClassDesc),
}

impl MappingClassDescription {
    pub fn variant_name(&self) -> &'static str {
        match self {
            Self::Periodic(_) => "periodic",
            Self::FiniteType(_) => "finite_type",
            Self::Torus(_) => "torus",
            Self::PseudoAnosov(_) => "pseudo_anosov",
            Self::Reducible(_) => "reducible",
        }
    }

    /// The ambient closed surface, when the description determines it.
    pub fn ambient_surface(&self) -> Option<CompactSurface> {
        match self {
            Self::Periodic(p) => Some(CompactSurface::closed(p.genus)),
            Self::Torus(_) => Some(CompactSurface::closed(1)),
            Self::PseudoAnosov(p) => Some(CompactSurface::closed(p.genus)),
            Self::FiniteType(f) => f.genus.map(CompactSurface::closed),
            Self::Reducible(r) => r.genus.map(CompactSurface::closed),
        }
    }
}
