//! Assembling the Floer homology of a reducible map from its pieces.

use nielsen_floer::fixed_points::{fixed_component_index, lefschetz_number, nielsen_number};
use nielsen_floer::floer::{hf_fixed_component, hf_reducible};
use nielsen_floer::surface::{
    BoundaryLabel, FixedComponent, FixedPointDatum, MappingClassDescription, PeriodicPiece,
    PseudoAnosovPiece, ReducibleClassDesc,
};

fn main() -> nielsen_floer::Result<()> {
    let pa = |prongs, component| BoundaryLabel::PaAdjacent { prongs, component };
    let desc = ReducibleClassDesc {
        fixed_components: vec![
            FixedComponent {
                genus: 0,
                boundary: vec![BoundaryLabel::PlusTwist, BoundaryLabel::MinusTwist],
            },
            FixedComponent {
                genus: 1,
                boundary: vec![pa(3, 0)],
            },
            FixedComponent {
                genus: 0,
                boundary: vec![pa(2, 0), pa(4, 1), BoundaryLabel::PlusTwist],
            },
        ],
        periodic_components: vec![PeriodicPiece {
            lefschetz_number: 2,
        }],
        pa_components: vec![
            PseudoAnosovPiece {
                stretch_factor: None,
                fixed_points: vec![
                    FixedPointDatum::Singular {
                        prongs: 3,
                        rotated: false,
                    },
                    FixedPointDatum::Regular(1),
                ],
            },
            PseudoAnosovPiece {
                stretch_factor: None,
                fixed_points: vec![],
            },
        ],
        ..Default::default()
    };
    for (i, c) in desc.fixed_components.iter().enumerate() {
        println!(
            "fixed component {i} ({:?}): index {}, HF contribution {}",
            c.kind(),
            fixed_component_index(c),
            hf_fixed_component(c, 1)?
        );
    }
    let hf = hf_reducible(&desc)?;
    let d = MappingClassDescription::Reducible(desc);
    println!("HF_* = {hf}");
    println!(
        "chi = {}, L = {}, N = {}",
        hf.euler(),
        lefschetz_number(&d)?,
        nielsen_number(&d)?
    );
    Ok(())
}
