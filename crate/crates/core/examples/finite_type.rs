//! Floer homology of finite type maps: the fixed set contributes relative
//! homology, isolated fixed points one even generator each.

use nielsen_floer::fixed_points::{lefschetz_number, nielsen_number};
use nielsen_floer::floer::hf_finite_type;
use nielsen_floer::surface::{
    Annulus, BoundaryLabel, FiniteTypeClassDesc, FixedComponent, MappingClassDescription, TwistSign,
};

fn show(name: &str, f: FiniteTypeClassDesc) -> nielsen_floer::Result<()> {
    let hf = hf_finite_type(&f)?;
    let d = MappingClassDescription::FiniteType(f);
    println!(
        "{name}: HF_* = {hf}, chi = {}, L = {}, N = {}",
        hf.euler(),
        lefschetz_number(&d)?,
        nielsen_number(&d)?
    );
    Ok(())
}

fn main() -> nielsen_floer::Result<()> {
    let empty = FiniteTypeClassDesc {
        genus: Some(2),
        fixed_components: vec![],
        periodic_part_fixed_points: 0,
        annuli: vec![],
        homotopic_annuli: vec![],
        lefschetz_outside_fixed: None,
    };
    show(
        "identity of genus 2",
        FiniteTypeClassDesc {
            fixed_components: vec![FixedComponent {
                genus: 2,
                boundary: vec![],
            }],
            ..empty.clone()
        },
    )?;
    show(
        "positive Dehn twist about a separating curve",
        FiniteTypeClassDesc {
            fixed_components: vec![
                FixedComponent {
                    genus: 1,
                    boundary: vec![BoundaryLabel::PlusTwist],
                },
                FixedComponent {
                    genus: 1,
                    boundary: vec![BoundaryLabel::PlusTwist],
                },
            ],
            annuli: vec![Annulus {
                sign: TwistSign::Plus,
                flipped: false,
            }],
            ..empty.clone()
        },
    )?;
    show(
        "negative twist on one side",
        FiniteTypeClassDesc {
            fixed_components: vec![FixedComponent {
                genus: 1,
                boundary: vec![BoundaryLabel::MinusTwist],
            }],
            periodic_part_fixed_points: 3,
            annuli: vec![Annulus {
                sign: TwistSign::Minus,
                flipped: false,
            }],
            ..empty.clone()
        },
    )?;
    show(
        "isolated fixed points only",
        FiniteTypeClassDesc {
            periodic_part_fixed_points: 5,
            ..empty
        },
    )
}
