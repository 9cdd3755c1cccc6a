//! Nielsen numbers, Lefschetz numbers and fixed point indices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};
use crate::serde_int;
use crate::surface::{
    euler_characteristic, CompactSurface, FixedComponent, FixedPointDatum, MappingClassDescription,
    PeriodicClassDesc,
};

/// Which invariant an [`IterateSequence`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Nielsen,
    Lefschetz,
    DimHf,
}

/// `n ↦ value` for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IterateSequence {
    pub label: Invariant,
    #[serde(with = "serde_int::bigint_vec")]
    values: Vec<BigInt>,
}

impl IterateSequence {
    pub fn new(label: Invariant, values: Vec<BigInt>) -> Self {
        Self { label, values }
    }

    pub fn from_fn<F>(label: Invariant, n_max: u64, f: F) -> Result<Self>
    where
        F: FnMut(u64) -> Result<BigInt>,
    {
        Ok(Self::new(label, (1..=n_max).map(f).collect::<Result<_>>()?))
    }

    pub fn n_max(&self) -> u64 {
        self.values.len() as u64
    }

    /// Value at iterate `n` (1-based).
    pub fn get(&self, n: u64) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i as usize))
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Fixed point indices, one per essential class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IndexList(pub Vec<i64>);

fn check_torus_matrix(a: &IntMatrix) -> Result<()> {
    if a.dim() != 2 {
        return Err(Error::Shape {
            expected: "2x2".into(),
            rows: a.dim(),
            cols: a.dim(),
        });
    }
    if !a.det().is_one() {
        return Err(Error::Determinant {
            det: a.det().to_string(),
            expected: "1",
        });
    }
    Ok(())
}

/// `L(φⁿ) = det(I − Aⁿ)` for the linear torus map `A`.
pub fn torus_lefschetz(a: &IntMatrix, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    check_torus_matrix(a)?;
    Ok((&IntMatrix::identity(2) - &a.pow(n)).det())
}

/// `N(φⁿ) = |det(I − Aⁿ)|`, Anosov maps only.
pub fn torus_nielsen(a: &IntMatrix, n: u64) -> Result<BigInt> {
    check_torus_matrix(a)?;
    if a.trace().abs() <= BigInt::from(2) {
        return Err(Error::NotAnosov {
            trace: a.trace().abs().to_string(),
        });
    }
    Ok(torus_lefschetz(a, n)?.abs())
}

/// `#Fix(φⁿ)` for `φⁿ ≠ id`: a point of least period `d` is fixed by `φⁿ`
/// iff `d | n`, and such `d` also divide the period.
pub fn periodic_fix_count(desc: &PeriodicClassDesc, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n.is_multiple_of(desc.period) {
        return Err(Error::IdentityIterate {
            n,
            period: desc.period,
        });
    }
    let g = n.gcd(&desc.period);
    Ok(desc
        .least_period_counts
        .iter()
        .filter(|(&d, _)| d != 0 && g.is_multiple_of(d))
        .map(|(_, &c)| c)
        .sum())
}

/// `N(φⁿ)`: the fixed point count off the identity iterates; on them the
/// whole surface is one class of index `χ(M)`.
pub fn periodic_nielsen(desc: &PeriodicClassDesc, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    if n.is_multiple_of(desc.period) {
        let chi = euler_characteristic(&CompactSurface::closed(desc.genus));
        return Ok(u64::from(chi != 0));
    }
    periodic_fix_count(desc, n)
}

/// Index of each pseudo-Anosov fixed point: regular points keep their index,
/// an unrotated `p`-prong singularity has index `1 − p`, a rotated one `+1`.
pub fn pa_index_list(points: &[FixedPointDatum]) -> IndexList {
    IndexList(points.iter().map(fixed_point_index).collect())
}

pub fn fixed_point_index(p: &FixedPointDatum) -> i64 {
    match *p {
        FixedPointDatum::Regular(i) => i,
        FixedPointDatum::Singular { rotated: true, .. } => 1,
        FixedPointDatum::Singular {
            prongs,
            rotated: false,
        } => 1 - prongs as i64,
    }
}

pub fn lefschetz_from_indices(idx: &IndexList) -> i64 {
    idx.0.iter().sum()
}

/// Every fixed point of a pseudo-Anosov map is its own essential class.
pub fn pa_nielsen(points: &[FixedPointDatum]) -> u64 {
    points.len() as u64
}

/// Index of the fixed point class formed by a component of `M_id`: its
/// Euler characteristic, minus the prongs of every boundary that meets a
/// pseudo-Anosov piece.
pub fn fixed_component_index(c: &FixedComponent) -> i64 {
    euler_characteristic(&c.surface()) - c.pa_prongs().iter().map(|&p| p as i64).sum::<i64>()
}

/// Induced action `φ_{*k}` on `H_k(M; Q)` for `k = 0, 1, 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyAction {
    #[serde(with = "serde_int::matrix", default = "one_by_one")]
    pub h0: IntMatrix,
    #[serde(with = "serde_int::matrix")]
    pub h1: IntMatrix,
    #[serde(with = "serde_int::matrix", default = "one_by_one")]
    pub h2: IntMatrix,
}

fn one_by_one() -> IntMatrix {
    IntMatrix::identity(1)
}

impl HomologyAction {
    /// Checks `φ_{*0} = φ_{*2} = (1)` (connected, orientation-preserving) and
    /// that `φ_{*1}` has even dimension `2g`.
    pub fn new(h0: IntMatrix, h1: IntMatrix, h2: IntMatrix) -> Result<Self> {
        let action = Self { h0, h1, h2 };
        action.check()?;
        Ok(action)
    }

    pub fn check(&self) -> Result<()> {
        for (k, m) in [(0, &self.h0), (2, &self.h2)] {
            if m.dim() != 1 {
                return Err(Error::InvalidAction(format!(
                    "phi_*{k} must be 1x1, got {0}x{0}",
                    m.dim()
                )));
            }
            if !m.get(0, 0).is_one() {
                return Err(Error::InvalidAction(format!(
                    "phi_*{k} must be (1) for a connected orientation-preserving map, got ({})",
                    m.get(0, 0)
                )));
            }
        }
        if !self.h1.dim().is_multiple_of(2) {
            return Err(Error::InvalidAction(format!(
                "phi_*1 must be 2g x 2g, got odd dimension {}",
                self.h1.dim()
            )));
        }
        Ok(())
    }

    /// Action of a linear torus map: `φ_{*1} = A`.
    pub fn torus(a: &IntMatrix) -> Self {
        Self {
            h0: one_by_one(),
            h1: a.clone(),
            h2: one_by_one(),
        }
    }

    pub fn identity(genus: usize) -> Self {
        Self::torus(&IntMatrix::identity(2 * genus))
    }

    pub fn genus(&self) -> usize {
        self.h1.dim() / 2
    }

    /// `L(φⁿ) = Σ_k (−1)^k tr(φ_{*k}ⁿ)`.
    pub fn lefschetz(&self, n: u64) -> BigInt {
        self.h0.pow(n).trace() - self.h1.pow(n).trace() + self.h2.pow(n).trace()
    }

    pub fn lefschetz_sequence(&self, n_max: u64) -> IterateSequence {
        IterateSequence::new(
            Invariant::Lefschetz,
            (1..=n_max).map(|n| self.lefschetz(n)).collect(),
        )
    }
}

/// Validate a homology action given degree by degree.
pub fn lefschetz_zeta_input(h0: IntMatrix, h1: IntMatrix, h2: IntMatrix) -> Result<HomologyAction> {
    HomologyAction::new(h0, h1, h2)
}

/// `L(φ)` computed from fixed point data (index sums), or from the trace
/// formula for torus maps.
pub fn lefschetz_number(desc: &MappingClassDescription) -> Result<BigInt> {
    use MappingClassDescription as D;
    Ok(match desc {
        D::Periodic(p) => lefschetz_iterate(p, 1)?,
        D::Torus(t) => HomologyAction::torus(&t.matrix).lefschetz(1),
        D::PseudoAnosov(p) => lefschetz_from_indices(&pa_index_list(&p.fixed_points)).into(),
        D::FiniteType(f) => {
            let comps: i64 = f.fixed_components.iter().map(fixed_component_index).sum();
            BigInt::from(comps) + f.periodic_part_fixed_points
        }
        D::Reducible(r) => {
            let comps: i64 = r.fixed_components.iter().map(fixed_component_index).sum();
            let periodic: i64 = r
                .periodic_components
                .iter()
                .map(|p| p.lefschetz_number)
                .sum();
            let pa: i64 = r
                .pa_components
                .iter()
                .map(|p| lefschetz_from_indices(&pa_index_list(&p.fixed_points)))
                .sum();
            BigInt::from(comps + periodic + pa)
        }
    })
}

/// `N(φ)`: the number of fixed point classes with nonzero index.
pub fn nielsen_number(desc: &MappingClassDescription) -> Result<BigInt> {
    use MappingClassDescription as D;
    let essential =
        |cs: &[FixedComponent]| cs.iter().filter(|c| fixed_component_index(c) != 0).count() as u64;
    Ok(match desc {
        D::Periodic(p) => periodic_nielsen(p, 1)?.into(),
        D::Torus(t) => torus_nielsen(&t.matrix, 1)?,
        D::PseudoAnosov(p) => pa_nielsen(&p.fixed_points).into(),
        D::FiniteType(f) => (essential(&f.fixed_components) + f.periodic_part_fixed_points).into(),
        D::Reducible(r) => {
            let periodic: i64 = r
                .periodic_components
                .iter()
                .map(|p| p.lefschetz_number)
                .sum();
            let pa: u64 = r
                .pa_components
                .iter()
                .map(|p| pa_nielsen(&p.fixed_points))
                .sum();
            BigInt::from(essential(&r.fixed_components) + pa) + periodic
        }
    })
}

fn lefschetz_iterate(p: &PeriodicClassDesc, n: u64) -> Result<BigInt> {
    if n.is_multiple_of(p.period) {
        Ok(euler_characteristic(&CompactSurface::closed(p.genus)).into())
    } else {
        // all fixed points of a nontrivial periodic map have index +1
        Ok(periodic_fix_count(p, n)?.into())
    }
}

fn iterable_kind(desc: &MappingClassDescription) -> Result<()> {
    match desc {
        MappingClassDescription::Periodic(_) | MappingClassDescription::Torus(_) => Ok(()),
        other => Err(Error::NotIterable {
            variant: other.variant_name(),
        }),
    }
}

/// `L(φⁿ)` for `n = 1..=n_max` from fixed point data (periodic) or
/// `det(I − Aⁿ)` (torus).
pub fn lefschetz_iterates(desc: &MappingClassDescription, n_max: u64) -> Result<IterateSequence> {
    iterable_kind(desc)?;
    IterateSequence::from_fn(Invariant::Lefschetz, n_max, |n| match desc {
        MappingClassDescription::Periodic(p) => lefschetz_iterate(p, n),
        MappingClassDescription::Torus(t) => torus_lefschetz(&t.matrix, n),
        _ => unreachable!(),
    })
}

pub fn nielsen_iterates(desc: &MappingClassDescription, n_max: u64) -> Result<IterateSequence> {
    iterable_kind(desc)?;
    IterateSequence::from_fn(Invariant::Nielsen, n_max, |n| match desc {
        MappingClassDescription::Periodic(p) => periodic_nielsen(p, n).map(BigInt::from),
        MappingClassDescription::Torus(t) => torus_nielsen(&t.matrix, n),
        _ => unreachable!(),
    })
}

impl IndexList {
    pub fn abs_sum(&self) -> u64 {
        self.0.iter().map(|i| i.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty() || self.0.iter().all(Zero::is_zero)
    }
}
