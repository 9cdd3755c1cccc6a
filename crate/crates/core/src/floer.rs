//! Graded dimension of symplectic Floer homology from the closed-form
//! descriptions of each mapping class type.

use std::fmt;
use std::ops::Add;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};
use crate::fixed_points::{
    fixed_point_index, periodic_fix_count, torus_nielsen, Invariant, IterateSequence,
};
use crate::serde_int;
use crate::surface::{
    absolute_homology_dims, relative_homology_dims, BoundaryLabel, CompactSurface,
    FiniteTypeClassDesc, FixedComponent, FixedComponentKind, FixedPointDatum, HomologyDims,
    MappingClassDescription, PeriodicClassDesc, ReducibleClassDesc,
};

/// Dimensions of the even and odd parts of a `Z₂`-graded vector space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedDimension {
    #[serde(with = "serde_int::biguint")]
    pub even: BigUint,
    #[serde(with = "serde_int::biguint")]
    pub odd: BigUint,
}

impl GradedDimension {
    pub fn new(even: impl Into<BigUint>, odd: impl Into<BigUint>) -> Self {
        Self {
            even: even.into(),
            odd: odd.into(),
        }
    }

    pub fn even_only(n: impl Into<BigUint>) -> Self {
        Self::new(n, 0u8)
    }

    pub fn odd_only(n: impl Into<BigUint>) -> Self {
        Self::new(0u8, n)
    }

    pub fn total(&self) -> BigUint {
        &self.even + &self.odd
    }

    pub fn euler(&self) -> BigInt {
        BigInt::from(self.even.clone()) - BigInt::from(self.odd.clone())
    }

    fn from_homology(h: HomologyDims) -> Self {
        let (even, odd) = h.by_parity();
        Self::new(even, odd)
    }
}

impl Add for GradedDimension {
    type Output = GradedDimension;

    fn add(self, rhs: Self) -> Self {
        Self {
            even: self.even + rhs.even,
            odd: self.odd + rhs.odd,
        }
    }
}

impl std::iter::Sum for GradedDimension {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), Add::add)
    }
}

impl fmt::Display for GradedDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.even, self.odd)
    }
}

pub fn hf_euler(gd: &GradedDimension) -> BigInt {
    gd.euler()
}

/// `HF_*(φⁿ)` for a periodic map: one even generator per fixed point, or
/// `H_*(M; Z₂)` when `φⁿ = id`.
pub fn hf_periodic(desc: &PeriodicClassDesc, n: u64) -> Result<GradedDimension> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n.is_multiple_of(desc.period) {
        return Ok(GradedDimension::from_homology(absolute_homology_dims(
            &CompactSurface::closed(desc.genus),
        )));
    }
    Ok(GradedDimension::even_only(periodic_fix_count(desc, n)?))
}

/// `H_*(M_id, ∂₊M_id; Z₂) ⊕ Z₂^L`, the isolated fixed points in even degree.
pub fn hf_finite_type(desc: &FiniteTypeClassDesc) -> Result<GradedDimension> {
    let mut total = GradedDimension::even_only(desc.periodic_part_fixed_points);
    for c in &desc.fixed_components {
        if !c.pa_prongs().is_empty() {
            return Err(Error::Invalid(
                "finite type components cannot meet pseudo-Anosov pieces".into(),
            ));
        }
        total = total + no_pa_component(c)?;
    }
    Ok(total)
}

fn no_pa_component(c: &FixedComponent) -> Result<GradedDimension> {
    relative_homology_dims(&c.surface(), c.plus_count(), 0).map(GradedDimension::from_homology)
}

/// Anosov torus map: `|det(I − A)|` generators in the parity of the sign of
/// `det(I − A)`.
pub fn hf_torus_anosov(a: &IntMatrix) -> Result<GradedDimension> {
    let n = torus_nielsen(a, 1)?;
    let det = (&IntMatrix::identity(2) - a).det();
    let count = n.magnitude().clone();
    Ok(if det.is_positive() {
        GradedDimension::even_only(count)
    } else {
        GradedDimension::odd_only(count)
    })
}

/// `|Ind(x)|` generators per fixed point, even for positive index.
pub fn hf_pseudo_anosov(fixed_points: &[FixedPointDatum]) -> GradedDimension {
    fixed_points
        .iter()
        .map(|p| {
            let i = fixed_point_index(p);
            if i > 0 {
                GradedDimension::even_only(i as u64)
            } else {
                GradedDimension::odd_only(i.unsigned_abs())
            }
        })
        .sum()
}

/// Contribution of one fixed component of a reducible map, using
/// `pa_plus` of its pseudo-Anosov boundaries on the plus side when it
/// meets two or more of them.
pub fn hf_fixed_component(c: &FixedComponent, pa_plus: u32) -> Result<GradedDimension> {
    let s = c.surface();
    match c.kind() {
        FixedComponentKind::NoPa => no_pa_component(c),
        FixedComponentKind::OnePa { prongs } => {
            let rel = relative_homology_dims(&s, c.plus_count() + 1, 1)?;
            Ok(GradedDimension::from_homology(rel) + GradedDimension::odd_only(prongs - 1))
        }
        FixedComponentKind::ManyPa { total_prongs } => {
            let pa = c.pa_prongs().len() as u32;
            if pa_plus == 0 || pa_plus >= pa {
                return Err(Error::Invalid(format!(
                    "{pa_plus} of {pa} pseudo-Anosov boundaries on the plus side; need at least one on each side"
                )));
            }
            let rel = relative_homology_dims(&s, c.plus_count() + pa_plus, 0)?;
            Ok(GradedDimension::from_homology(rel) + GradedDimension::odd_only(total_prongs))
        }
    }
}

/// Sum of the fixed component, periodic piece and pseudo-Anosov piece
/// contributions of a reducible map.
pub fn hf_reducible(desc: &ReducibleClassDesc) -> Result<GradedDimension> {
    let mut total = GradedDimension::default();
    for (i, c) in desc.fixed_components.iter().enumerate() {
        for (j, label) in c.boundary.iter().enumerate() {
            if let BoundaryLabel::PaAdjacent { component, .. } = *label {
                if component >= desc.pa_components.len() {
                    return Err(Error::UnmatchedAdjacency {
                        component: i,
                        boundary: j,
                        target: component,
                    });
                }
            }
        }
        total = total + hf_fixed_component(c, 1)?;
    }
    for p in &desc.periodic_components {
        let l = u64::try_from(p.lefschetz_number).map_err(|_| {
            Error::Invalid(format!("negative Lefschetz number {}", p.lefschetz_number))
        })?;
        total = total + GradedDimension::even_only(l);
    }
    for p in &desc.pa_components {
        total = total + hf_pseudo_anosov(&p.fixed_points);
    }
    Ok(total)
}

/// `HF_*(φ)` for any supported description.
pub fn floer_homology(desc: &MappingClassDescription) -> Result<GradedDimension> {
    use MappingClassDescription as D;
    match desc {
        D::Periodic(p) => hf_periodic(p, 1),
        D::FiniteType(f) => hf_finite_type(f),
        D::Torus(t) => hf_torus_anosov(&t.matrix),
        D::PseudoAnosov(p) => Ok(hf_pseudo_anosov(&p.fixed_points)),
        D::Reducible(r) => hf_reducible(r),
    }
}

/// `dim HF_*(φⁿ)` for `n = 1..=n_max`; periodic and Anosov torus maps only.
pub fn hf_iterates(desc: &MappingClassDescription, n_max: u64) -> Result<IterateSequence> {
    let dim = |gd: GradedDimension| BigInt::from(gd.total());
    match desc {
        MappingClassDescription::Periodic(p) => {
            IterateSequence::from_fn(Invariant::DimHf, n_max, |n| hf_periodic(p, n).map(dim))
        }
        MappingClassDescription::Torus(t) => {
            IterateSequence::from_fn(Invariant::DimHf, n_max, |n| {
                hf_torus_anosov(&t.matrix.pow(n)).map(dim)
            })
        }
        other => Err(Error::NotIterable {
            variant: other.variant_name(),
        }),
    }
}

impl GradedDimension {
    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}
