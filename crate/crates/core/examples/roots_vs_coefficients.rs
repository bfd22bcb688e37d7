//! The same subresultant from the root-based definition and from each
//! coefficient construction.
//!
//!     cargo run --example roots_vs_coefficients

use multisubres::index::DeltaIndex;
use multisubres::ring::Rational;
use multisubres::subres::{subresultant, subresultant_root_oracle, Method, PolyTuple};
use multisubres::upoly::UPoly;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn main() -> multisubres::Result<()> {
    // F0 = 2(x-1)(x-2)(x-3)
    let lc = q(2);
    let roots = [q(1), q(2), q(3)];
    let f0 = UPoly::from_roots(&lc, &roots)?;
    let f1 = UPoly::new(vec![q(5), q(0), q(-1), q(4)]);
    let f2 = UPoly::new(vec![q(-3), q(7)]);
    let f = PolyTuple::new(vec![f0, f1, f2])?;
    let delta = DeltaIndex::new(vec![1, 1]);

    let oracle = subresultant_root_oracle(&lc, &roots, f.rest(), &delta)?;
    println!(
        "{:>10}: S = {}, s = {}",
        "roots", oracle.s_poly, oracle.s_principal
    );
    for m in Method::COEFFICIENT_METHODS {
        let r = subresultant(&f, &delta, m)?;
        println!(
            "{:>10}: S = {}, s = {}",
            m.to_string(),
            r.s_poly,
            r.s_principal
        );
        assert_eq!(r.s_poly, oracle.s_poly);
    }
    // closed form for this shape: -a03 (a12 + a13 (α1+α2+α3)) F2
    let closed = f.rest()[1].scale(&q(-2 * (-1 + 4 * 6)));
    assert_eq!(closed, oracle.s_poly);
    println!("closed form: {closed}");
    Ok(())
}
