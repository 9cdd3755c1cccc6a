//! The Lefschetz/symplectic zeta function `L_φ(z) = χ_φ(z)`, the Floer zeta
//! function `F_φ(z)` of a periodic map, and the series they are checked
//! against.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{
    divisors, mobius, BigRational, IntPolynomial, ProductForm, RationalFunction, TruncatedSeries,
};
use crate::error::{Error, Result};
use crate::fixed_points::{HomologyAction, IterateSequence};
use crate::floer::hf_periodic;
use crate::surface::{MappingClassDescription, PeriodicClassDesc};

/// `Π_k det(I − φ_{*k} z)^{(−1)^{k+1}}` in canonical form.
pub fn lefschetz_zeta(action: &HomologyAction) -> Result<RationalFunction> {
    action.check()?;
    let num = action.h1.charpoly_reversed();
    let den = &action.h0.charpoly_reversed() * &action.h2.charpoly_reversed();
    RationalFunction::new(num, den)
}

/// `χ_φ(z)`, computed through `L_φ(z)`. The action must match the
/// description where the description determines it.
pub fn chi_zeta(
    desc: &MappingClassDescription,
    action: &HomologyAction,
) -> Result<RationalFunction> {
    check_action_matches(desc, action)?;
    lefschetz_zeta(action)
}

pub fn check_action_matches(desc: &MappingClassDescription, action: &HomologyAction) -> Result<()> {
    action.check()?;
    if let Some(s) = desc.ambient_surface() {
        if s.genus as usize != action.genus() {
            return Err(Error::InvalidAction(format!(
                "phi_*1 is {0}x{0} but the surface has genus {1}",
                action.h1.dim(),
                s.genus
            )));
        }
    }
    if let MappingClassDescription::Torus(t) = desc {
        if t.matrix != action.h1 {
            return Err(Error::InvalidAction(format!(
                "phi_*1 = {} differs from the torus matrix {}",
                action.h1, t.matrix
            )));
        }
    }
    Ok(())
}

/// `exp(Σ L(φⁿ) zⁿ / n)` straight from the sequence.
pub fn lefschetz_series_oracle(l_seq: &IterateSequence, order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::zeta_exponent(l_seq.values(), order)?.exp()
}

/// `exp(Σ dim HF_*(φⁿ) zⁿ / n)` straight from the sequence.
pub fn floer_zeta_series_oracle(n_seq: &IterateSequence, order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::zeta_exponent(n_seq.values(), order)?.exp()
}

/// `P(d) = Σ_{d₁ | d} μ(d₁) N_{d/d₁}` for every divisor `d` of the period.
pub fn primitive_counts(desc: &PeriodicClassDesc) -> Result<Vec<(u64, BigInt)>> {
    let ds = divisors(desc.period)?;
    let n_of = |d: u64| -> Result<BigInt> { Ok(BigInt::from(hf_periodic(desc, d)?.total())) };
    let mut out = Vec::with_capacity(ds.len());
    for &d in &ds {
        let mut p = BigInt::zero();
        for d1 in divisors(d)? {
            p += BigInt::from(mobius(d1)?) * n_of(d / d1)?;
        }
        out.push((d, p));
    }
    Ok(out)
}

/// `F_φ(z) = Π_{d | m} (1 − z^d)^{−P(d)/d}`.
pub fn floer_zeta_periodic(desc: &PeriodicClassDesc) -> Result<ProductForm> {
    Ok(ProductForm::new(
        primitive_counts(desc)?
            .into_iter()
            .map(|(d, p)| (d, -BigRational::new(p, BigInt::from(d)))),
    ))
}

/// Gromov series `A_K(t) / (1 − t)²` of the fibered knot with Alexander
/// polynomial `A_K`.
pub fn gromov_series_from_alexander(a_k: &IntPolynomial, order: usize) -> Result<TruncatedSeries> {
    if a_k.constant_term().is_zero() {
        return Err(Error::ConstantTerm {
            expected: "nonzero",
            found: "0".into(),
        });
    }
    let f = RationalFunction::new(a_k.clone(), IntPolynomial::one_minus_z_pow(1).pow(2))?;
    Ok(f.to_series(order))
}

/// Coefficients `1..=order` of `z · d/dz log f`, which recover `L(φⁿ)`
/// from `L_φ(z)`.
pub fn log_derivative_coefficients(f: &RationalFunction, order: usize) -> Result<Vec<BigInt>> {
    let log = f.to_series(order).log()?;
    (1..=order)
        .map(|n| {
            let c = log.coeff(n) * BigRational::from_integer(BigInt::from(n));
            if c.denom().is_one() {
                Ok(c.to_integer())
            } else {
                Err(Error::Invalid(format!(
                    "coefficient {n} of z d/dz log is not integral: {c}"
                )))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratfunc, IntMatrix};
    use crate::fixed_points::{HomologyAction, Invariant};
    use crate::floer::hf_iterates;
    use crate::surface::TorusAutoDesc;

    fn cat() -> IntMatrix {
        IntMatrix::from_i64([[2, 1], [1, 1]])
    }

    fn minus_identity(dim: usize) -> IntMatrix {
        IntMatrix::identity(dim).scale(&BigInt::from(-1))
    }

    fn seq(label: Invariant, v: &[i64]) -> IterateSequence {
        IterateSequence::new(label, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn lefschetz_zeta_examples() {
        let cat_z = lefschetz_zeta(&HomologyAction::torus(&cat())).unwrap();
        assert_eq!(cat_z, ratfunc(&[1, -3, 1], &[1, -2, 1]).unwrap());
        assert_eq!(cat_z.to_string(), "(1 - 3*z + z^2) / (1 - z)^2");
        let id = lefschetz_zeta(&HomologyAction::identity(2)).unwrap();
        assert_eq!(id, ratfunc(&[1, -2, 1], &[1]).unwrap());
        let minus = lefschetz_zeta(&HomologyAction::torus(&minus_identity(2))).unwrap();
        assert_eq!(minus, ratfunc(&[1, 2, 1], &[1, -2, 1]).unwrap());
    }

    #[test]
    fn chi_zeta_examples() {
        let desc = MappingClassDescription::Torus(TorusAutoDesc::new(cat()));
        let action = HomologyAction::torus(&cat());
        assert_eq!(
            chi_zeta(&desc, &action).unwrap(),
            lefschetz_zeta(&action).unwrap()
        );
        let hyper = MappingClassDescription::Periodic(PeriodicClassDesc::new(2, 2, &[(1, 6)]));
        let hyper_action = HomologyAction::torus(&minus_identity(4));
        assert_eq!(
            chi_zeta(&hyper, &hyper_action).unwrap(),
            ratfunc(&[1, 4, 6, 4, 1], &[1, -2, 1]).unwrap()
        );
        assert_eq!(
            chi_zeta(&hyper, &HomologyAction::identity(2)).unwrap(),
            ratfunc(&[1, -2, 1], &[1]).unwrap()
        );
        assert!(chi_zeta(&hyper, &action).is_err());
        let other = HomologyAction::torus(&IntMatrix::from_i64([[1, 1], [1, 2]]));
        assert!(chi_zeta(&desc, &other).is_err());
    }

    #[test]
    fn lefschetz_oracle_examples() {
        let zero = lefschetz_series_oracle(&seq(Invariant::Lefschetz, &[0; 5]), 5).unwrap();
        assert_eq!(zero, TruncatedSeries::one(5));
        let cat_l = HomologyAction::torus(&cat()).lefschetz_sequence(3);
        assert_eq!(
            lefschetz_series_oracle(&cat_l, 3).unwrap(),
            TruncatedSeries::from_ints(&[1, -1, -2, -3])
        );
        let chi = lefschetz_series_oracle(&seq(Invariant::Lefschetz, &[-2; 4]), 4).unwrap();
        assert_eq!(chi, TruncatedSeries::from_ints(&[1, -2, 1, 0, 0]));
        assert!(matches!(
            lefschetz_series_oracle(&cat_l, 4),
            Err(Error::SequenceTooShort {
                needed: 4,
                available: 3
            })
        ));
    }

    #[test]
    fn floer_zeta_examples() {
        let hyper = PeriodicClassDesc::new(2, 2, &[(1, 6)]);
        let z3 = PeriodicClassDesc::new(2, 3, &[(1, 4)]);
        let g1 = PeriodicClassDesc::new(1, 2, &[(1, 2)]);
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(
            floer_zeta_periodic(&hyper).unwrap(),
            ProductForm::new([(1, q(-6, 1))])
        );
        let z3_form = floer_zeta_periodic(&z3).unwrap();
        assert_eq!(z3_form, ProductForm::new([(1, q(-4, 1)), (3, q(-2, 3))]));
        assert_eq!(z3_form.to_string(), "(1-z)^(-4) * (1-z^3)^(-2/3)");
        assert_eq!(
            floer_zeta_periodic(&g1).unwrap(),
            ProductForm::new([(1, q(-2, 1)), (2, q(-1, 1))])
        );
    }

    #[test]
    fn floer_oracle_examples() {
        assert_eq!(
            floer_zeta_series_oracle(&seq(Invariant::DimHf, &[6; 3]), 3).unwrap(),
            TruncatedSeries::from_ints(&[1, 6, 21, 56])
        );
        assert_eq!(
            floer_zeta_series_oracle(&seq(Invariant::DimHf, &[0; 3]), 3).unwrap(),
            TruncatedSeries::one(3)
        );
        let z3 = PeriodicClassDesc::new(2, 3, &[(1, 4)]);
        let n = seq(Invariant::DimHf, &[4, 4, 6, 4, 4, 6]);
        assert_eq!(
            floer_zeta_series_oracle(&n, 6).unwrap(),
            floer_zeta_periodic(&z3).unwrap().to_series(6)
        );
        let from_hf = hf_iterates(&MappingClassDescription::Periodic(z3), 6).unwrap();
        assert_eq!(from_hf.values(), n.values());
    }

    #[test]
    fn gromov_examples() {
        let g = |a: &[i64], order| {
            gromov_series_from_alexander(&IntPolynomial::from_i64(a), order).unwrap()
        };
        assert_eq!(g(&[1, -1, 1], 3), TruncatedSeries::from_ints(&[1, 1, 2, 3]));
        assert_eq!(g(&[1], 2), TruncatedSeries::from_ints(&[1, 2, 3]));
        assert_eq!(g(&[1, -3, 1], 2), TruncatedSeries::from_ints(&[1, -1, -2]));
        assert!(gromov_series_from_alexander(&IntPolynomial::from_i64(&[0, 1]), 2).is_err());
        let torus = lefschetz_zeta(&HomologyAction::torus(&cat())).unwrap();
        assert_eq!(g(&[1, -3, 1], 20), torus.to_series(20));
    }

    #[test]
    fn log_derivative_recovers_lefschetz_numbers() {
        let action = HomologyAction::torus(&cat());
        let f = lefschetz_zeta(&action).unwrap();
        assert_eq!(
            log_derivative_coefficients(&f, 12).unwrap(),
            action.lefschetz_sequence(12).values()
        );
    }
}
