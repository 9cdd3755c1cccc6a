//! Random valid descriptions for property tests and the acceptance suite.
#![allow(dead_code)]

use nielsen_floer::algebra::{divisors, IntMatrix, QuadraticSurd};
use nielsen_floer::fixed_points::HomologyAction;
use nielsen_floer::surface::{
    Annulus, BoundaryLabel, FiniteTypeClassDesc, FixedComponent, FixedPointDatum,
    MappingClassDescription, PeriodicClassDesc, PeriodicPiece, PseudoAnosovClassDesc,
    PseudoAnosovPiece, ReducibleClassDesc, StretchFactor, TorusAutoDesc, TwistSign,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn periodic(rng: &mut impl Rng, max_period: u64, max_genus: u32) -> PeriodicClassDesc {
    let period = rng.gen_range(2..=max_period);
    let genus = rng.gen_range(1..=max_genus);
    let proper: Vec<u64> = divisors(period)
        .unwrap()
        .into_iter()
        .filter(|&d| d < period)
        .collect();
    let mut counts: Vec<(u64, u64)> = proper
        .iter()
        .map(|&d| (d, d * rng.gen_range(0..=3)))
        .collect();
    if counts.iter().all(|&(_, c)| c == 0) {
        let i = rng.gen_range(0..counts.len());
        counts[i].1 = counts[i].0 * rng.gen_range(1..=3);
    }
    PeriodicClassDesc::new(genus, period, &counts)
}

/// Random word in the generators of `SL(2, Z)` with `|trace| > 2`.
pub fn anosov_matrix(rng: &mut impl Rng) -> IntMatrix {
    let gens = [
        IntMatrix::from_i64([[1, 1], [0, 1]]),
        IntMatrix::from_i64([[1, 0], [1, 1]]),
        IntMatrix::from_i64([[1, -1], [0, 1]]),
        IntMatrix::from_i64([[1, 0], [-1, 1]]),
        IntMatrix::from_i64([[-1, 0], [0, -1]]),
    ];
    loop {
        let mut m = IntMatrix::identity(2);
        for _ in 0..rng.gen_range(2..=7) {
            m = &m * &gens[rng.gen_range(0..gens.len())];
        }
        let t = m.trace();
        if t > 2.into() || t < (-2).into() {
            return m;
        }
    }
}

fn twist_label(rng: &mut impl Rng) -> BoundaryLabel {
    if rng.gen_bool(0.5) {
        BoundaryLabel::PlusTwist
    } else {
        BoundaryLabel::MinusTwist
    }
}

fn annuli(rng: &mut impl Rng) -> Vec<Annulus> {
    (0..rng.gen_range(0..=3))
        .map(|_| Annulus {
            sign: if rng.gen_bool(0.5) {
                TwistSign::Plus
            } else {
                TwistSign::Minus
            },
            flipped: rng.gen_bool(0.3),
        })
        .collect()
}

pub fn finite_type(rng: &mut impl Rng) -> FiniteTypeClassDesc {
    if rng.gen_ratio(1, 8) {
        let g = rng.gen_range(2..=5);
        return FiniteTypeClassDesc {
            genus: Some(g),
            fixed_components: vec![FixedComponent {
                genus: g,
                boundary: vec![],
            }],
            periodic_part_fixed_points: 0,
            annuli: vec![],
            homotopic_annuli: vec![],
            lefschetz_outside_fixed: None,
        };
    }
    let comps = (0..rng.gen_range(0..=3))
        .map(|_| FixedComponent {
            genus: rng.gen_range(0..=2),
            boundary: (0..rng.gen_range(1..=4))
                .map(|_| twist_label(rng))
                .collect(),
        })
        .collect();
    let isolated = rng.gen_range(0..=6);
    FiniteTypeClassDesc {
        genus: None,
        fixed_components: comps,
        periodic_part_fixed_points: isolated,
        annuli: annuli(rng),
        homotopic_annuli: vec![],
        lefschetz_outside_fixed: rng.gen_bool(0.3).then_some(isolated as i64),
    }
}

pub fn stretch_factor(rng: &mut impl Rng) -> Option<StretchFactor> {
    match rng.gen_range(0..3) {
        0 => None,
        1 => Some(StretchFactor::Approx(rng.gen_range(1.05..6.0))),
        _ => {
            let t: i64 = rng.gen_range(3..=9);
            Some(StretchFactor::Exact(QuadraticSurd::new(
                t.into(),
                1.into(),
                (t * t - 4).into(),
                2.into(),
            )))
        }
    }
}

pub fn pa_points(rng: &mut impl Rng) -> Vec<FixedPointDatum> {
    (0..rng.gen_range(0..=6))
        .map(|_| match rng.gen_range(0..4) {
            0 => FixedPointDatum::Regular(1),
            1 => FixedPointDatum::Regular(-1),
            _ => FixedPointDatum::Singular {
                prongs: rng.gen_range(3..=7),
                rotated: rng.gen_bool(0.25),
            },
        })
        .collect()
}

pub fn pseudo_anosov(rng: &mut impl Rng) -> PseudoAnosovClassDesc {
    PseudoAnosovClassDesc {
        genus: rng.gen_range(2..=5),
        stretch_factor: stretch_factor(rng),
        fixed_points: pa_points(rng),
    }
}

pub fn reducible(rng: &mut impl Rng) -> ReducibleClassDesc {
    let pa_count = rng.gen_range(0..=3);
    let comps = (0..rng.gen_range(0..=4))
        .map(|_| {
            let mut boundary: Vec<BoundaryLabel> = (0..rng.gen_range(0..=2))
                .map(|_| twist_label(rng))
                .collect();
            if pa_count > 0 {
                for _ in 0..rng.gen_range(0..=3) {
                    boundary.push(BoundaryLabel::PaAdjacent {
                        prongs: rng.gen_range(1..=6),
                        component: rng.gen_range(0..pa_count),
                    });
                }
            }
            if boundary.is_empty() {
                boundary.push(twist_label(rng));
            }
            FixedComponent {
                genus: rng.gen_range(0..=2),
                boundary,
            }
        })
        .collect();
    ReducibleClassDesc {
        genus: None,
        fixed_components: comps,
        periodic_components: (0..rng.gen_range(0..=3))
            .map(|_| PeriodicPiece {
                lefschetz_number: rng.gen_range(0..=8),
            })
            .collect(),
        pa_components: (0..pa_count)
            .map(|_| PseudoAnosovPiece {
                stretch_factor: stretch_factor(rng),
                fixed_points: pa_points(rng),
            })
            .collect(),
        annuli: annuli(rng),
        homotopic_annuli: vec![],
    }
}

/// One description of the variant `k mod 5`.
pub fn description(rng: &mut impl Rng, k: usize) -> MappingClassDescription {
    match k % 5 {
        0 => MappingClassDescription::Periodic(periodic(rng, 12, 5)),
        1 => MappingClassDescription::FiniteType(finite_type(rng)),
        2 => MappingClassDescription::Torus(TorusAutoDesc::new(anosov_matrix(rng))),
        3 => MappingClassDescription::PseudoAnosov(pseudo_anosov(rng)),
        _ => MappingClassDescription::Reducible(reducible(rng)),
    }
}

/// Integer homology action of genus `1..=max_genus` with entries in `-3..=3`.
pub fn integer_action(rng: &mut impl Rng, max_genus: usize) -> HomologyAction {
    let dim = 2 * rng.gen_range(1..=max_genus);
    let rows = (0..dim)
        .map(|_| (0..dim).map(|_| rng.gen_range(-3i64..=3).into()).collect())
        .collect();
    HomologyAction::new(
        IntMatrix::identity(1),
        IntMatrix::from_rows(rows).unwrap(),
        IntMatrix::identity(1),
    )
    .unwrap()
}
