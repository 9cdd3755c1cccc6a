//! Gromov series of a fibered knot from its Alexander polynomial. For the
//! figure-eight knot the monodromy acts on homology by the cat map, and the
//! series is the Lefschetz zeta function.

use nielsen_floer::algebra::{IntMatrix, IntPolynomial};
use nielsen_floer::fixed_points::HomologyAction;
use nielsen_floer::zeta::{gromov_series_from_alexander, lefschetz_zeta};

fn main() -> nielsen_floer::Result<()> {
    let knots = [
        ("unknot", IntPolynomial::from_i64(&[1])),
        ("trefoil", IntPolynomial::from_i64(&[1, -1, 1])),
        ("figure-eight", IntPolynomial::from_i64(&[1, -3, 1])),
    ];
    for (name, a_k) in &knots {
        let gr = gromov_series_from_alexander(a_k, 10)?;
        println!("{name}: A_K(t) = {}", a_k.display_in("t"));
        println!("  Gr = {}", gr.display_in("t"));
    }
    let l = lefschetz_zeta(&HomologyAction::torus(&IntMatrix::from_i64([
        [2, 1],
        [1, 1],
    ])))?;
    let gr = gromov_series_from_alexander(&knots[2].1, 30)?;
    println!(
        "figure-eight Gr = cat-map L(t) to order 30: {}",
        gr == l.to_series(30)
    );
    Ok(())
}
