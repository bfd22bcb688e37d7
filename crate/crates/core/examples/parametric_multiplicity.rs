//! Decision table for the multiplicity structure of a generic quintic, and
//! the discriminant condition of a monic quadratic.
//!
//!     cargo run --release --example parametric_multiplicity

use multisubres::parametric::mult_decision_table;
use multisubres::subres::Method;

fn main() -> multisubres::Result<()> {
    let quad = mult_decision_table(2, Some(&["c".into(), "b".into()]), Method::Sylvester)?;
    println!("H = {}", quad.poly);
    for row in &quad.without_content().rows {
        println!("  {} != 0  =>  {}", row.condition, row.multiplicities);
    }

    let table = mult_decision_table(5, None, Method::Bezout)?;
    println!("H = {}", table.poly);
    for row in &table.rows {
        let terms: usize = row.condition.num_terms();
        println!(
            "  lambda {:<12} -> {:<10} ({terms} terms)",
            row.lambda.to_string(),
            row.multiplicities.to_string()
        );
    }
    Ok(())
}
