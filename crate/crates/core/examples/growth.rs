//! Growth rates, the asymptotic invariant and entropy bounds.

use nielsen_floer::algebra::IntMatrix;
use nielsen_floer::asymptotics::{asymptotic_invariant, entropy_lower_bound, growth_rate};
use nielsen_floer::fixed_points::nielsen_iterates;
use nielsen_floer::floer::hf_iterates;
use nielsen_floer::surface::{MappingClassDescription, PeriodicClassDesc, TorusAutoDesc};

fn main() -> nielsen_floer::Result<()> {
    let descs = [
        MappingClassDescription::Torus(TorusAutoDesc::new(IntMatrix::from_i64([[2, 1], [1, 1]]))),
        MappingClassDescription::Torus(TorusAutoDesc::new(IntMatrix::from_i64([[5, 2], [2, 1]]))),
        MappingClassDescription::Periodic(PeriodicClassDesc::new(2, 3, &[(1, 4)])),
    ];
    for d in &descs {
        let exact = asymptotic_invariant(d, None)?;
        println!("{} class: F^inf = {exact}", d.variant_name());
        for hi in [10, 30, 60] {
            let g = growth_rate(&hf_iterates(d, hi)?, (1, hi))?;
            let h = entropy_lower_bound(&nielsen_iterates(d, hi)?, (1, hi))?;
            println!(
                "  window 1..{hi:<2}: grow = {:.6} (error {:.1e}), entropy >= {:.6}",
                g.to_f64(),
                (g.to_f64() - exact.to_f64()).abs(),
                h.ln()
            );
        }
    }
    Ok(())
}
