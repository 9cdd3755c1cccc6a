//! Fixed point indices and Floer homology of a pseudo-Anosov map.

use nielsen_floer::fixed_points::{lefschetz_from_indices, pa_index_list, pa_nielsen};
use nielsen_floer::floer::hf_pseudo_anosov;
use nielsen_floer::surface::FixedPointDatum::{self, Regular, Singular};

fn main() {
    let cases: [(&str, Vec<FixedPointDatum>); 3] = [
        (
            "3-prong and a regular point",
            vec![
                Singular {
                    prongs: 3,
                    rotated: false,
                },
                Regular(1),
            ],
        ),
        ("flipped regular points", vec![Regular(-1); 3]),
        (
            "rotated 4-prong",
            vec![
                Singular {
                    prongs: 4,
                    rotated: true,
                },
                Singular {
                    prongs: 5,
                    rotated: false,
                },
            ],
        ),
    ];
    for (name, pts) in cases {
        let idx = pa_index_list(&pts);
        let hf = hf_pseudo_anosov(&pts);
        println!("{name}");
        println!(
            "  indices {:?}, L = {}, N = {}",
            idx.0,
            lefschetz_from_indices(&idx),
            pa_nielsen(&pts)
        );
        println!("  HF_* = {hf}, total {} = sum |Ind|", hf.total());
    }
}
