//! Run the full property suite on the zero-relation algebra and print the table.

use taulab::catalog;
use taulab::lab::predicates::Bounds;
use taulab::lab::verify_theorem_suite;

fn main() -> taulab::Result<()> {
    let alg = catalog::shared(catalog::linear_radical_square_zero(3, 2));
    let report = verify_theorem_suite(&alg, "a3_zero_relation", 4, Bounds::default())?;
    print!("{}", report.render_table());
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, report.to_json())?;
        println!("report written to {path}");
    }
    Ok(())
}
