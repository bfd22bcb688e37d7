//! The symbolic three-polynomial example: builds the Sylvester, Barnett and
//! Bezout matrices for delta = (2,1) and checks how their determinants relate.
//!
//!     cargo run --example worked_coefficients

use std::sync::Arc;

use multisubres::cli::parse::parse_poly;
use multisubres::index::DeltaIndex;
use multisubres::ring::{Fraction, Ring};
use multisubres::subres::{barnett_det, build_barnett, build_bezout, build_sylvester, PolyTuple};

fn main() -> multisubres::Result<()> {
    let names: Vec<String> = [
        "a00", "a01", "a02", "a03", "a04", "a10", "a11", "a12", "a13", "a20", "a21", "a22",
    ]
    .map(String::from)
    .to_vec();
    let vars: Arc<[String]> = Arc::from(names);
    let f = PolyTuple::new(vec![
        parse_poly("a04*x^4 + a03*x^3 + a02*x^2 + a01*x + a00", &vars)?,
        parse_poly("a13*x^3 + a12*x^2 + a11*x + a10", &vars)?,
        parse_poly("a22*x^2 + a21*x + a20", &vars)?,
    ])?;
    let delta = DeltaIndex::new(vec![2, 1]);

    let syl = build_sylvester(&f, &delta)?;
    let bar = build_barnett(&f, &delta)?;
    let bez = build_bezout(&f, &delta)?;
    println!("Sylvester:\n{syl}\nBarnett:\n{bar}\nBezout:\n{bez}");

    let s = syl.det()?;
    let a04 = parse_poly("a04", &vars)?;
    assert!(
        Fraction::from_value(s.clone())
            == barnett_det(&f, &delta)?.mul(&Fraction::from_value(a04.clone()))
    );
    assert!(bez.det()? == s.mul(&a04).mul(&a04));
    println!("S_(2,1) = {s}");
    println!("det Sylvester = a04 det Barnett = a04^-2 det Bezout");
    Ok(())
}
