//! Floer homology and the Floer zeta function of periodic maps.

use nielsen_floer::fixed_points::{periodic_fix_count, periodic_nielsen};
use nielsen_floer::floer::hf_periodic;
use nielsen_floer::surface::PeriodicClassDesc;
use nielsen_floer::zeta::{floer_zeta_periodic, primitive_counts};

fn main() -> nielsen_floer::Result<()> {
    let examples = [
        (
            "hyperelliptic involution, genus 2",
            PeriodicClassDesc::new(2, 2, &[(1, 6)]),
        ),
        (
            "order 3 rotation, genus 2",
            PeriodicClassDesc::new(2, 3, &[(1, 4)]),
        ),
        (
            "order 4 map, genus 3",
            PeriodicClassDesc::new(3, 4, &[(1, 2), (2, 4)]),
        ),
    ];
    for (name, desc) in examples {
        println!("{name}");
        for n in 1..=2 * desc.period {
            let hf = hf_periodic(&desc, n)?;
            let fix = periodic_fix_count(&desc, n).map_or("M".to_string(), |c| c.to_string());
            println!(
                "  n = {n:>2}: #Fix = {fix:>2}  N = {}  HF_* = {hf}",
                periodic_nielsen(&desc, n)?
            );
        }
        let p: Vec<String> = primitive_counts(&desc)?
            .iter()
            .map(|(d, p)| format!("P({d}) = {p}"))
            .collect();
        println!("  {}", p.join(", "));
        println!("  F(z) = {}", floer_zeta_periodic(&desc)?);
    }
    Ok(())
}
