//! Multiplicity structure of a polynomial from the subresultants of its
//! derivative tuple.
//!
//!     cargo run --example multiplicity

use multisubres::cli::parse::parse_rational_poly;
use multisubres::solvers::multiplicity;
use multisubres::subres::Method;

fn main() -> multisubres::Result<()> {
    for text in [
        "(x-1)^2*(x-2)^2*(x-3)",
        "x^4 - 2*x^2 + 1",
        "(2*x+1)^3*(x-5)",
        "x^5 - x - 1",
    ] {
        let h = parse_rational_poly(text)?;
        let r = multiplicity(&h, Method::Bezout)?;
        println!(
            "{text:<24} lambda = {:<16} multiplicities = {}",
            r.lambda.to_string(),
            r.multiplicities
        );
    }
    Ok(())
}
