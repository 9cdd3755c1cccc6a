//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use nielsen_floer::algebra::{
    ratfunc, rational_to_series, BigRational, IntMatrix, IntPolynomial, ProductForm,
};
use nielsen_floer::asymptotics::{entropy_lower_bound, growth_rate, spectral_radius_2x2};
use nielsen_floer::fixed_points::{
    lefschetz_number, nielsen_iterates, nielsen_number, periodic_nielsen, torus_nielsen,
    HomologyAction, Invariant, IterateSequence,
};
use nielsen_floer::floer::{
    floer_homology, hf_iterates, hf_periodic, hf_reducible, GradedDimension,
};
use nielsen_floer::surface::{
    absolute_homology_dims, BoundaryLabel, CompactSurface, FiniteTypeClassDesc, FixedComponent,
    MappingClassDescription, PeriodicClassDesc, PeriodicPiece, PseudoAnosovPiece,
    ReducibleClassDesc, TorusAutoDesc,
};
use nielsen_floer::zeta::{
    chi_zeta, floer_zeta_periodic, floer_zeta_series_oracle, gromov_series_from_alexander,
    lefschetz_series_oracle, lefschetz_zeta,
};
use num_bigint::BigInt;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cat() -> IntMatrix {
    IntMatrix::from_i64([[2, 1], [1, 1]])
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn cat_map_zeta() -> Outcome {
    let action = HomologyAction::torus(&cat());
    let f = lefschetz_zeta(&action).map_err(|e| e.to_string())?;
    let expected = ratfunc(&[1, -3, 1], &[1, -2, 1]).unwrap();
    ensure(f == expected, || format!("got {f}"))?;
    let seq = IterateSequence::new(
        Invariant::Lefschetz,
        (1..=30)
            .map(|n| BigInt::from(2) - cat().pow(n).trace())
            .collect(),
    );
    let oracle = lefschetz_series_oracle(&seq, 30).map_err(|e| e.to_string())?;
    let series = rational_to_series(&f, 30);
    ensure(series == oracle, || {
        format!("first divergence at {:?}", series.first_difference(&oracle))
    })?;
    Ok(format!("{f}, 31 coefficients agree"))
}

fn cat_map_nielsen() -> Outcome {
    let expected = [1, 5, 16, 45, 121];
    for (i, &e) in expected.iter().enumerate() {
        let n = i as u64 + 1;
        let by_det = torus_nielsen(&cat(), n).map_err(|e| e.to_string())?;
        let by_trace = (BigInt::from(2) - cat().pow(n).trace()).magnitude().clone();
        ensure(
            by_det == BigInt::from(e) && by_det.magnitude() == &by_trace,
            || format!("n = {n}: det {by_det}, trace {by_trace}, expected {e}"),
        )?;
    }
    Ok("1, 5, 16, 45, 121".into())
}

fn hyperelliptic() -> Outcome {
    let p = PeriodicClassDesc::new(2, 2, &[(1, 6)]);
    let n = periodic_nielsen(&p, 1).map_err(|e| e.to_string())?;
    ensure(n == 6, || format!("N = {n}"))?;
    let hf = hf_periodic(&p, 1).map_err(|e| e.to_string())?;
    ensure(hf == GradedDimension::new(6u8, 0u8), || {
        format!("HF = {hf}")
    })?;
    let f = floer_zeta_periodic(&p).map_err(|e| e.to_string())?;
    ensure(f == ProductForm::new([(1, q(-6, 1))]), || {
        format!("F = {f}")
    })?;
    let dims = hf_iterates(&MappingClassDescription::Periodic(p), 20).map_err(|e| e.to_string())?;
    let oracle = floer_zeta_series_oracle(&dims, 20).map_err(|e| e.to_string())?;
    ensure(f.to_series(20) == oracle, || "series differ".into())?;
    Ok(format!("N = 6, HF = {hf}, F = {f}"))
}

fn z3_radical() -> Outcome {
    let p = PeriodicClassDesc::new(2, 3, &[(1, 4)]);
    let f = floer_zeta_periodic(&p).map_err(|e| e.to_string())?;
    ensure(
        f == ProductForm::new([(1, q(-4, 1)), (3, q(-2, 3))]),
        || format!("F = {f}"),
    )?;
    ensure(!f.is_rational(), || {
        "expected a non-integral exponent".into()
    })?;
    let dims = hf_iterates(&MappingClassDescription::Periodic(p), 18).map_err(|e| e.to_string())?;
    let oracle = floer_zeta_series_oracle(&dims, 18).map_err(|e| e.to_string())?;
    ensure(f.to_series(18) == oracle, || "series differ".into())?;
    Ok(format!("F = {f}"))
}

fn mobius_suite() -> Outcome {
    let mut rng = common::rng(5);
    for i in 0..200 {
        let p = common::periodic(&mut rng, 12, 5);
        let order = 3 * p.period as usize;
        let f = floer_zeta_periodic(&p).map_err(|e| e.to_string())?;
        let dims = hf_iterates(&MappingClassDescription::Periodic(p.clone()), order as u64)
            .map_err(|e| e.to_string())?;
        let oracle = floer_zeta_series_oracle(&dims, order).map_err(|e| e.to_string())?;
        ensure(f.to_series(order) == oracle, || format!("case {i}: {p:?}"))?;
    }
    Ok("200 descriptions".into())
}

fn corpus() -> Vec<MappingClassDescription> {
    let mut rng = common::rng(6);
    (0..500).map(|k| common::description(&mut rng, k)).collect()
}

fn euler_equals_lefschetz() -> Outcome {
    for (i, d) in corpus().iter().enumerate() {
        let e = floer_homology(d)
            .map_err(|e| format!("case {i}: {e}"))?
            .euler();
        let l = lefschetz_number(d).map_err(|e| format!("case {i}: {e}"))?;
        ensure(e == l, || {
            format!("case {i} ({}): chi = {e}, L = {l}", d.variant_name())
        })?;
    }
    Ok("500 descriptions, 100 per variant".into())
}

fn dim_at_least_nielsen() -> Outcome {
    for (i, d) in corpus().iter().enumerate() {
        let dim = BigInt::from(
            floer_homology(d)
                .map_err(|e| format!("case {i}: {e}"))?
                .total(),
        );
        let n = nielsen_number(d).map_err(|e| format!("case {i}: {e}"))?;
        ensure(dim >= n, || {
            format!("case {i} ({}): dim = {dim}, N = {n}", d.variant_name())
        })?;
    }
    Ok("500 descriptions".into())
}

fn asymptotics() -> Outcome {
    let lambda = spectral_radius_2x2(&cat()).map_err(|e| e.to_string())?;
    let desc = MappingClassDescription::Torus(TorusAutoDesc::new(cat()));
    let dims = hf_iterates(&desc, 60).map_err(|e| e.to_string())?;
    let g = growth_rate(&dims, (1, 60)).map_err(|e| e.to_string())?;
    ensure((g.to_f64() - lambda.to_f64()).abs() < 1e-3, || {
        format!("growth {}", g.to_f64())
    })?;
    let n = nielsen_iterates(&desc, 60).map_err(|e| e.to_string())?;
    let h = entropy_lower_bound(&n, (1, 60))
        .map_err(|e| e.to_string())?
        .ln();
    ensure((h - lambda.to_f64().ln()).abs() < 1e-3, || {
        format!("entropy {h}")
    })?;
    Ok(format!("grow = {:.6} vs {lambda}, h = {h:.6}", g.to_f64()))
}

fn identity_class() -> Outcome {
    for g in 2..=4u32 {
        let desc = MappingClassDescription::FiniteType(FiniteTypeClassDesc {
            genus: Some(g),
            fixed_components: vec![FixedComponent {
                genus: g,
                boundary: vec![],
            }],
            periodic_part_fixed_points: 0,
            annuli: vec![],
            homotopic_annuli: vec![],
            lefschetz_outside_fixed: None,
        });
        let hf = floer_homology(&desc).map_err(|e| e.to_string())?;
        let (even, odd) = absolute_homology_dims(&CompactSurface::closed(g)).by_parity();
        ensure(hf == GradedDimension::new(2u8, 2 * g), || {
            format!("g = {g}: HF = {hf}")
        })?;
        ensure(hf == GradedDimension::new(even, odd), || {
            format!("g = {g}: homology mismatch")
        })?;
        let chi =
            chi_zeta(&desc, &HomologyAction::identity(g as usize)).map_err(|e| e.to_string())?;
        let expected = nielsen_floer::algebra::RationalFunction::polynomial(
            IntPolynomial::one_minus_z_pow(1).pow(2 * g - 2),
        );
        ensure(chi == expected, || format!("g = {g}: chi = {chi}"))?;
    }
    Ok("g = 2, 3, 4".into())
}

fn reducible_assembly() -> Outcome {
    let m1 = ReducibleClassDesc {
        periodic_components: vec![
            PeriodicPiece {
                lefschetz_number: 3,
            },
            PeriodicPiece {
                lefschetz_number: 4,
            },
        ],
        ..Default::default()
    };
    let hf = hf_reducible(&m1).map_err(|e| e.to_string())?;
    ensure(hf == GradedDimension::new(7u8, 0u8), || {
        format!("M1 only: {hf}")
    })?;
    let mb3 = ReducibleClassDesc {
        fixed_components: vec![FixedComponent {
            genus: 1,
            boundary: vec![BoundaryLabel::PaAdjacent {
                prongs: 3,
                component: 0,
            }],
        }],
        pa_components: vec![PseudoAnosovPiece {
            stretch_factor: None,
            fixed_points: vec![],
        }],
        ..Default::default()
    };
    let hf_b = hf_reducible(&mb3).map_err(|e| e.to_string())?;
    ensure(hf_b == GradedDimension::new(0u8, 4u8), || {
        format!("M_b,3: {hf_b}")
    })?;
    for d in [m1, mb3] {
        let d = MappingClassDescription::Reducible(d);
        let l = lefschetz_number(&d).map_err(|e| e.to_string())?;
        ensure(floer_homology(&d).unwrap().euler() == l, || {
            format!("Euler bookkeeping: L = {l}")
        })?;
    }
    Ok(format!("M1: {hf}, M_b,3: {hf_b}"))
}

fn alexander_identity() -> Outcome {
    let a_k = IntPolynomial::from_i64(&[1, -3, 1]);
    let gr = gromov_series_from_alexander(&a_k, 30).map_err(|e| e.to_string())?;
    let l = rational_to_series(&lefschetz_zeta(&HomologyAction::torus(&cat())).unwrap(), 30);
    ensure(gr == l, || {
        format!("first divergence at {:?}", gr.first_difference(&l))
    })?;
    Ok("31 coefficients agree".into())
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 11] = [
        (
            "cat-map zeta is rational and matches its series",
            cat_map_zeta,
            Duration::from_secs(1),
        ),
        (
            "cat-map Nielsen numbers",
            cat_map_nielsen,
            Duration::from_secs(1),
        ),
        (
            "hyperelliptic involution",
            hyperelliptic,
            Duration::from_secs(1),
        ),
        (
            "Z3 action: Floer zeta is a radical",
            z3_radical,
            Duration::from_secs(1),
        ),
        (
            "Mobius formula on 200 periodic maps",
            mobius_suite,
            Duration::from_secs(30),
        ),
        (
            "chi(HF) = L on 500 descriptions",
            euler_equals_lefschetz,
            Duration::from_secs(30),
        ),
        (
            "dim HF >= N on 500 descriptions",
            dim_at_least_nielsen,
            Duration::from_secs(30),
        ),
        (
            "cat-map growth rate and entropy",
            asymptotics,
            Duration::from_secs(1),
        ),
        (
            "identity class is ordinary homology",
            identity_class,
            Duration::from_secs(30),
        ),
        (
            "reducible assembly",
            reducible_assembly,
            Duration::from_secs(30),
        ),
        (
            "Alexander polynomial identity",
            alexander_identity,
            Duration::from_secs(30),
        ),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > *limit => {
                Err(format!("{detail}; took {took:.2?}, limit {limit:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
