//! Nielsen numbers and Floer homology of Anosov torus maps.

use nielsen_floer::algebra::IntMatrix;
use nielsen_floer::fixed_points::{torus_lefschetz, torus_nielsen};
use nielsen_floer::floer::hf_torus_anosov;

fn main() -> nielsen_floer::Result<()> {
    for a in [
        IntMatrix::from_i64([[2, 1], [1, 1]]),
        IntMatrix::from_i64([[-2, -1], [-1, -1]]),
        IntMatrix::from_i64([[3, 2], [1, 1]]),
    ] {
        println!("A = {a}");
        for n in 1..=6 {
            let an = a.pow(n);
            println!(
                "  n = {n}: L = {:>6}  N = {:>5}  HF_* = {}",
                torus_lefschetz(&a, n)?,
                torus_nielsen(&a, n)?,
                hf_torus_anosov(&an)?
            );
        }
    }
    Ok(())
}
