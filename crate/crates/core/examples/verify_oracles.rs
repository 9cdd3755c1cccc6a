//! Parse input documents and run every identity check on them, as the
//! `verify` subcommand does.

use nielsen_floer::report::{parse_input, Command, Options, Report};

fn main() -> nielsen_floer::Result<()> {
    let docs = [
        r#"{"type": "torus", "matrix": [[2, 1], [1, 1]]}"#,
        r#"{"type": "periodic", "genus": 2, "period": 3, "least_period_counts": {"1": 4}}"#,
        r#"{"type": "pseudo_anosov", "genus": 2,
            "fixed_points": [{"singular": {"prongs": 3}}, {"regular": 1}],
            "sequences": {"dim_hf": [3], "nielsen": [2]}}"#,
    ];
    for text in docs {
        let doc = parse_input(text)?;
        let report = Report::build(
            Command::Verify,
            &doc,
            Options {
                n_max: 10,
                order: 12,
            },
        )?;
        print!("{}", report.to_text());
    }
    match parse_input(
        r#"{"type": "periodic", "genus": 2, "period": 4, "least_period_counts": {"2": 3}}"#,
    ) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
