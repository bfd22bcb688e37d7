//! Conditions on parameter coefficients that decide the gcd of a tuple, one
//! branch per index.
//!
//!     cargo run --example parametric_gcd

use std::collections::HashMap;

use multisubres::parametric::{gcd_decision_tree, generic_poly};
use multisubres::ring::Rational;
use multisubres::subres::{Method, PolyTuple};

fn main() -> multisubres::Result<()> {
    let names = |p: &str| -> Vec<String> { (0..=2).map(|k| format!("{p}{k}")).collect() };
    let f = PolyTuple::new(vec![
        generic_poly(2, Some(&names("a")))?,
        generic_poly(2, Some(&names("b")))?,
        generic_poly(2, Some(&names("c")))?,
    ])?;
    let tree = gcd_decision_tree(&f, Method::Sylvester)?.without_content();
    for a in &tree.assumptions {
        println!("assume {a} != 0");
    }
    for b in &tree.branches {
        let tag = if b.fallback { "otherwise" } else { "if" };
        println!("delta {}: {tag} {} != 0", b.delta, b.condition);
        println!("    gcd = ({}) / ({})", b.gcd_numerator, b.gcd_denominator);
    }

    // x^2 - 1, x^2 + 2x + 1, x + 1 share x + 1
    let values: HashMap<String, Rational> = [
        ("a0", -1),
        ("a1", 0),
        ("a2", 1),
        ("b0", 1),
        ("b1", 2),
        ("b2", 1),
        ("c0", 1),
        ("c1", 1),
        ("c2", 0),
    ]
    .iter()
    .map(|(k, v)| (k.to_string(), Rational::from(*v)))
    .collect();
    let (branch, gcd) = tree.evaluate(&values)?;
    println!(
        "at the sample point: branch {} gives gcd {gcd}",
        tree.branches[branch].delta
    );
    Ok(())
}
