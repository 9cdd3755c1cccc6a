//! The Lefschetz zeta function as a rational function, checked against the
//! exponential of its defining series.

use nielsen_floer::algebra::IntMatrix;
use nielsen_floer::fixed_points::HomologyAction;
use nielsen_floer::zeta::{lefschetz_series_oracle, lefschetz_zeta, log_derivative_coefficients};

fn main() -> nielsen_floer::Result<()> {
    let minus = |d| IntMatrix::identity(d).scale(&(-1).into());
    let actions = [
        (
            "cat map",
            HomologyAction::torus(&IntMatrix::from_i64([[2, 1], [1, 1]])),
        ),
        ("identity, genus 2", HomologyAction::identity(2)),
        (
            "hyperelliptic involution, genus 2",
            HomologyAction::torus(&minus(4)),
        ),
    ];
    for (name, action) in actions {
        let f = lefschetz_zeta(&action)?;
        let order = 8;
        let oracle = lefschetz_series_oracle(&action.lefschetz_sequence(order as u64), order)?;
        println!("{name}");
        println!("  L(z) = {f}");
        println!("       = {}", f.to_series(order));
        println!("  exp series agrees: {}", f.to_series(order) == oracle);
        let l: Vec<String> = log_derivative_coefficients(&f, order)?
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("  L(phi^n) from z d/dz log L(z): {}", l.join(", "));
    }
    Ok(())
}
