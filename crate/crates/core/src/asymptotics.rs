//! Growth rates of integer sequences, the asymptotic invariant `F^∞` and
//! entropy lower bounds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{IntMatrix, IntPolynomial, QuadraticSurd};
use crate::error::{Error, Result};
use crate::fixed_points::IterateSequence;
use crate::surface::{MappingClassDescription, StretchFactor};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthValue {
    Exact(QuadraticSurd),
    Approx(f64),
}

impl GrowthValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Exact(s) => s.to_f64(),
            Self::Approx(x) => *x,
        }
    }
}

impl From<&StretchFactor> for GrowthValue {
    fn from(s: &StretchFactor) -> Self {
        match s {
            StretchFactor::Exact(q) => Self::Exact(q.clone()),
            StretchFactor::Approx(x) => Self::Approx(*x),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthMode {
    Exact,
    Estimated,
    /// The true value is at least this.
    LowerBound,
}

/// Growth rate `max{1, limsup |aₙ|^{1/n}}`, exact or estimated.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthEstimate {
    pub value: GrowthValue,
    pub mode: GrowthMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<(u64, u64)>,
    /// `max |aₙ|^{1/n}` over the tail of the window.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root_sup: Option<f64>,
}

impl GrowthEstimate {
    pub fn exact(value: QuadraticSurd) -> Self {
        Self {
            value: GrowthValue::Exact(value),
            mode: GrowthMode::Exact,
            window: None,
            root_sup: None,
        }
    }

    pub fn one() -> Self {
        Self::exact(QuadraticSurd::integer(1))
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// `log` of the rate, e.g. an entropy.
    pub fn ln(&self) -> f64 {
        self.to_f64().ln()
    }

    pub fn defining_polynomial(&self) -> Option<IntPolynomial> {
        match &self.value {
            GrowthValue::Exact(s) => Some(s.defining_polynomial()),
            GrowthValue::Approx(_) => None,
        }
    }
}

impl fmt::Display for GrowthEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            GrowthValue::Exact(s) => write!(f, "{s}")?,
            GrowthValue::Approx(x) => write!(f, "{x:.6}")?,
        }
        match (self.mode, self.window) {
            (GrowthMode::Exact, _) => Ok(()),
            (GrowthMode::LowerBound, _) => write!(f, " (lower bound)"),
            (GrowthMode::Estimated, Some((lo, hi))) => write!(f, " (estimated on n = {lo}..{hi})"),
            (GrowthMode::Estimated, None) => write!(f, " (estimated)"),
        }
    }
}

/// `ln |x|` for arbitrarily large `x ≠ 0`.
fn ln_abs(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 900;
    let top = (x.abs() >> shift).to_f64().expect("fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

fn window_terms(seq: &IterateSequence, lo: u64, hi: u64) -> Result<Vec<(u64, &BigInt)>> {
    if lo == 0 || hi < lo {
        return Err(Error::EmptyWindow { lo, hi });
    }
    if seq.n_max() < hi {
        return Err(Error::SequenceTooShort {
            needed: hi as usize,
            available: seq.n_max() as usize,
        });
    }
    Ok((lo..=hi)
        .map(|n| (n, seq.get(n).expect("checked length")))
        .collect())
}

/// Largest `ln |aₙ|` and where it is attained, ignoring zeros.
fn log_max(terms: &[(u64, &BigInt)]) -> Option<(u64, f64)> {
    terms
        .iter()
        .filter(|(_, a)| !a.is_zero())
        .map(|&(n, a)| (n, ln_abs(a)))
        .fold(None, |best, (n, e)| match best {
            Some((_, b)) if b >= e => best,
            _ => Some((n, e)),
        })
}

fn root_sup(terms: &[(u64, &BigInt)]) -> f64 {
    terms
        .iter()
        .filter(|(_, a)| !a.is_zero())
        .map(|&(n, a)| (ln_abs(a) / n as f64).exp())
        .fold(1.0, f64::max)
}

/// Estimate of `max{1, limsup |aₙ|^{1/n}}` on the tail half `[t, n_hi]` of
/// the window. The tail is cut into an early and a late block; the rate is
/// `exp((ln M_late − ln M_early) / (n_late − n_early))` with `M` the block
/// maximum of `|aₙ|` attained at `n`, clamped below by 1. This is exact on
/// `c·rⁿ` and on sequences of bounded period shorter than a block.
pub fn growth_rate(seq: &IterateSequence, window: (u64, u64)) -> Result<GrowthEstimate> {
    let (lo, hi) = window;
    let terms = window_terms(seq, lo, hi)?;
    let tail = &terms[(hi - lo) as usize / 2..];
    let sup = root_sup(tail);
    let (early, late) = tail.split_at(tail.len() / 2);
    let rate = match (log_max(early), log_max(late)) {
        (_, None) => 1.0,
        (None, Some(_)) => sup,
        (Some((na, ea)), Some((nb, eb))) => ((eb - ea) / (nb as f64 - na as f64)).exp().max(1.0),
    };
    Ok(GrowthEstimate {
        value: GrowthValue::Approx(rate),
        mode: GrowthMode::Estimated,
        window: Some(window),
        root_sup: Some(sup),
    })
}

/// Largest modulus of an eigenvalue of a `2×2` integer matrix with
/// determinant `±1`, as `(|tr| + √(tr² − 4 det)) / 2`.
pub fn spectral_radius_2x2(a: &IntMatrix) -> Result<GrowthEstimate> {
    if a.dim() != 2 {
        return Err(Error::Shape {
            expected: "2x2".into(),
            rows: a.dim(),
            cols: a.dim(),
        });
    }
    let det = a.det();
    if det.abs() != BigInt::from(1) {
        return Err(Error::Determinant {
            det: det.to_string(),
            expected: "1 or -1",
        });
    }
    let tr = a.trace();
    let disc = &tr * &tr - BigInt::from(4) * det;
    if disc.is_negative() {
        return Err(Error::ComplexEigenvalues {
            discriminant: disc.to_string(),
        });
    }
    Ok(GrowthEstimate::exact(QuadraticSurd::new(
        tr.abs(),
        BigInt::from(1),
        disc,
        BigInt::from(2),
    )))
}

fn stretch_bound<'a, I>(factors: I) -> Option<GrowthEstimate>
where
    I: IntoIterator<Item = &'a StretchFactor>,
{
    factors
        .into_iter()
        .max_by(|a, b| a.to_f64().total_cmp(&b.to_f64()))
        .map(|s| GrowthEstimate {
            value: s.into(),
            mode: GrowthMode::LowerBound,
            window: None,
            root_sup: None,
        })
}

/// `F^∞(g)`: the growth rate of `dim HF_*(φⁿ)`. Exact for periodic, finite
/// type and pA-free reducible classes (bounded sequences) and for Anosov
/// torus maps. For classes with pseudo-Anosov pieces it is estimated from
/// `dims` when given, and otherwise bounded below by the largest stretch
/// factor.
pub fn asymptotic_invariant(
    desc: &MappingClassDescription,
    dims: Option<(&IterateSequence, (u64, u64))>,
) -> Result<GrowthEstimate> {
    use MappingClassDescription as D;
    match desc {
        D::Periodic(_) | D::FiniteType(_) => Ok(GrowthEstimate::one()),
        D::Reducible(r) if r.pa_components.is_empty() => Ok(GrowthEstimate::one()),
        D::Torus(t) => spectral_radius_2x2(&t.matrix),
        D::PseudoAnosov(_) | D::Reducible(_) => {
            if let Some((seq, window)) = dims {
                return growth_rate(seq, window);
            }
            let bound = match desc {
                D::PseudoAnosov(p) => stretch_bound(p.stretch_factor.iter()),
                D::Reducible(r) => stretch_bound(
                    r.pa_components
                        .iter()
                        .filter_map(|p| p.stretch_factor.as_ref()),
                ),
                _ => None,
            };
            bound.ok_or_else(|| {
                Error::UnsupportedVariant(format!(
                    "{} description: supply a stretch factor or a dim HF sequence to bound the growth rate",
                    desc.variant_name()
                ))
            })
        }
    }
}

/// Growth rate bounding the entropy from below via `h ≥ limsup (1/n) log N(fⁿ)`;
/// its [`GrowthEstimate::ln`] is the bound. The smaller of the block
/// estimate and the tail root supremum is reported.
pub fn entropy_lower_bound(n_seq: &IterateSequence, window: (u64, u64)) -> Result<GrowthEstimate> {
    let mut est = growth_rate(n_seq, window)?;
    let sup = est.root_sup.unwrap_or(1.0);
    if sup < est.to_f64() {
        est.value = GrowthValue::Approx(sup);
    }
    Ok(est)
}

/// Entropy `log λ` of a pseudo-Anosov map, as the rate `λ`.
pub fn entropy_from_stretch_factor(lambda: &StretchFactor) -> GrowthEstimate {
    GrowthEstimate {
        value: lambda.into(),
        mode: match lambda {
            StretchFactor::Exact(_) => GrowthMode::Exact,
            StretchFactor::Approx(_) => GrowthMode::Estimated,
        },
        window: None,
        root_sup: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixed_points::{nielsen_iterates, Invariant};
    use crate::floer::hf_iterates;
    use crate::surface::{PeriodicClassDesc, PseudoAnosovClassDesc, TorusAutoDesc};

    fn cat() -> IntMatrix {
        IntMatrix::from_i64([[2, 1], [1, 1]])
    }

    fn golden() -> f64 {
        (3.0 + 5f64.sqrt()) / 2.0
    }

    fn seq_from(f: impl Fn(u64) -> BigInt, n: u64) -> IterateSequence {
        IterateSequence::new(Invariant::DimHf, (1..=n).map(f).collect())
    }

    #[test]
    fn growth_examples() {
        let six = seq_from(|_| 6.into(), 60);
        assert_eq!(growth_rate(&six, (1, 60)).unwrap().to_f64(), 1.0);
        let zero = seq_from(|_| 0.into(), 10);
        assert_eq!(growth_rate(&zero, (1, 10)).unwrap().to_f64(), 1.0);
        let cat_desc = MappingClassDescription::Torus(TorusAutoDesc::new(cat()));
        let n = nielsen_iterates(&cat_desc, 60).unwrap();
        assert!((growth_rate(&n, (1, 60)).unwrap().to_f64() - golden()).abs() < 1e-3);
        assert!(matches!(
            growth_rate(&six, (5, 4)),
            Err(Error::EmptyWindow { .. })
        ));
        assert!(matches!(
            growth_rate(&six, (0, 4)),
            Err(Error::EmptyWindow { .. })
        ));
        assert!(matches!(
            growth_rate(&six, (1, 61)),
            Err(Error::SequenceTooShort { .. })
        ));
    }

    #[test]
    fn growth_is_scale_invariant_and_at_least_one() {
        for r in [1u64, 2, 3, 7] {
            for c in [2u64, 10] {
                let a = seq_from(|n| BigInt::from(r).pow(n as u32), 200);
                let ca = seq_from(|n| BigInt::from(c) * BigInt::from(r).pow(n as u32), 200);
                let ea = growth_rate(&a, (1, 200)).unwrap().to_f64();
                let eca = growth_rate(&ca, (1, 200)).unwrap().to_f64();
                assert!((ea - eca).abs() < 1e-2, "r={r} c={c}: {ea} vs {eca}");
                assert!((ea - r as f64).abs() < 1e-6);
            }
        }
        let decaying = seq_from(|n| BigInt::from(1000u32) / BigInt::from(n), 30);
        assert!(growth_rate(&decaying, (1, 30)).unwrap().to_f64() >= 1.0);
    }

    #[test]
    fn huge_terms_do_not_overflow() {
        let s = seq_from(|n| BigInt::from(3u32).pow(n as u32 * 100), 40);
        let r = growth_rate(&s, (1, 40)).unwrap().ln();
        assert!((r - 100.0 * 3f64.ln()).abs() < 1e-6);
    }

    #[test]
    fn spectral_radii() {
        let r = spectral_radius_2x2(&cat()).unwrap();
        assert_eq!(
            r.value,
            GrowthValue::Exact(QuadraticSurd::new(3.into(), 1.into(), 5.into(), 2.into()))
        );
        assert_eq!(r.to_string(), "(3+sqrt(5))/2");
        assert_eq!(
            r.defining_polynomial().unwrap(),
            IntPolynomial::from_i64(&[1, -3, 1])
        );
        assert_eq!(
            spectral_radius_2x2(&IntMatrix::identity(2)).unwrap(),
            GrowthEstimate::one()
        );
        assert!(matches!(
            spectral_radius_2x2(&IntMatrix::from_i64([[0, -1], [1, 0]])),
            Err(Error::ComplexEigenvalues { .. })
        ));
        let neg = spectral_radius_2x2(&IntMatrix::from_i64([[-2, -1], [-1, -1]])).unwrap();
        assert!((neg.to_f64() - golden()).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_invariants() {
        let hyper = MappingClassDescription::Periodic(PeriodicClassDesc::new(2, 2, &[(1, 6)]));
        assert_eq!(
            asymptotic_invariant(&hyper, None).unwrap(),
            GrowthEstimate::one()
        );
        let cat_desc = MappingClassDescription::Torus(TorusAutoDesc::new(cat()));
        let exact = asymptotic_invariant(&cat_desc, None).unwrap();
        assert_eq!(exact.to_string(), "(3+sqrt(5))/2");
        let dims = hf_iterates(&cat_desc, 60).unwrap();
        assert!((growth_rate(&dims, (1, 60)).unwrap().to_f64() - exact.to_f64()).abs() < 1e-3);
        let pa = MappingClassDescription::PseudoAnosov(PseudoAnosovClassDesc {
            genus: 2,
            stretch_factor: Some(StretchFactor::Approx(2.0)),
            fixed_points: vec![],
        });
        let bound = asymptotic_invariant(&pa, None).unwrap();
        assert_eq!(bound.mode, GrowthMode::LowerBound);
        assert_eq!(bound.to_string(), "2.000000 (lower bound)");
        let bare = MappingClassDescription::PseudoAnosov(PseudoAnosovClassDesc {
            genus: 2,
            stretch_factor: None,
            fixed_points: vec![],
        });
        assert!(asymptotic_invariant(&bare, None).is_err());
    }

    #[test]
    fn entropy_bounds() {
        let cat_desc = MappingClassDescription::Torus(TorusAutoDesc::new(cat()));
        let n = nielsen_iterates(&cat_desc, 60).unwrap();
        let h = entropy_lower_bound(&n, (1, 60)).unwrap().ln();
        assert!((h - golden().ln()).abs() < 1e-3);
        assert!((h - 0.9624).abs() < 1e-3);
        let ones = seq_from(|_| 1.into(), 20);
        assert_eq!(entropy_lower_bound(&ones, (1, 20)).unwrap().ln(), 0.0);
        let two = entropy_from_stretch_factor(&StretchFactor::Exact(QuadraticSurd::integer(2)));
        assert_eq!(two.mode, GrowthMode::Exact);
        assert_eq!(two.ln(), 2f64.ln());
    }

    #[test]
    fn entropy_below_asymptotic_invariant_on_any_window() {
        let cat_desc = MappingClassDescription::Torus(TorusAutoDesc::new(cat()));
        let limit = asymptotic_invariant(&cat_desc, None).unwrap().ln();
        let n = nielsen_iterates(&cat_desc, 40).unwrap();
        for hi in 1..=40 {
            for lo in 1..=hi {
                let h = entropy_lower_bound(&n, (lo, hi)).unwrap().ln();
                assert!(h <= limit + 1e-9, "window ({lo},{hi}): {h} > {limit}");
            }
        }
    }
}
