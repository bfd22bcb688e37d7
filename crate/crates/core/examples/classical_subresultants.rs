//! Two-polynomial case next to the textbook subresultant chain. The two
//! agree up to the sign (-1)^(i(m-i)), m = deg F0.
//!
//!     cargo run --example classical_subresultants

use multisubres::cli::parse::parse_rational_poly;
use multisubres::index::DeltaIndex;
use multisubres::ring::Ring;
use multisubres::subres::{classical_sres, subresultant, Method, PolyTuple};

fn main() -> multisubres::Result<()> {
    for (a, b) in [
        ("x^2 - 1", "x - 2"),
        ("x^3 - 2*x + 5", "3*x^2 + x - 1"),
        ("x^4 + x + 1", "x^3 - x"),
    ] {
        let f0 = parse_rational_poly(a)?;
        let f1 = parse_rational_poly(b)?;
        let m = f0.degree().unwrap_or(0);
        let f = PolyTuple::new(vec![f0.clone(), f1.clone()])?;
        println!("F0 = {a}, F1 = {b}");
        for i in 0..=m {
            let s = subresultant(&f, &DeltaIndex::new(vec![m - i]), Method::Sylvester)?.s_poly;
            let c = classical_sres(&f0, &f1, i)?;
            let rel = if s == c {
                "="
            } else if s == c.neg() {
                "= -"
            } else {
                "!="
            };
            println!("  i = {i}: S_({}) = {s:<20} {rel} sres_{i} = {c}", m - i);
        }
    }
    Ok(())
}
