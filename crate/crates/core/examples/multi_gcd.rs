//! gcd of several polynomials in one step: the first nonvanishing
//! subresultant in decreasing glex order.
//!
//!     cargo run --example multi_gcd

use multisubres::cli::parse::parse_rational_poly;
use multisubres::solvers::{icdeg_oracle, multi_gcd};
use multisubres::subres::{Method, PolyTuple};

fn main() -> multisubres::Result<()> {
    let f = PolyTuple::new(vec![
        parse_rational_poly("(x-1)^2*(x+2)*(x^2+1)")?,
        parse_rational_poly("(x-1)*(x+2)*(3*x-5)")?,
        parse_rational_poly("(x-1)*(x^3 + x + 7)")?,
    ])?;
    for m in Method::COEFFICIENT_METHODS {
        let g = multi_gcd(&f, m)?;
        println!(
            "{m:>9}: gcd = {}, delta = {}, s = {}",
            g.gcd, g.delta, g.s_value
        );
    }
    // the incremental cofactor degrees from a Euclidean chain
    println!("   euclid: delta = {}", icdeg_oracle(&f)?);
    Ok(())
}
