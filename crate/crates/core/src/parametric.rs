//! Guarded branch tables for inputs whose coefficients are polynomials in
//! named parameters.
//!
//! Every subresultant is a polynomial in the coefficients, so the generic
//! `s_delta` specializes correctly. Reading the branches in order and taking
//! the first condition that does not vanish at given parameter values gives
//! the gcd (or multiplicity structure) of the specialized input.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::index::{
    conjugate, enumerate_deltas, enumerate_partition_indices, DeltaIndex, Partition,
};
use crate::ring::{Field, ParamPoly, Rational, Ring};
use crate::solvers::derivative_tuple;
use crate::subres::{subresultant, Method, PolyTuple};
use crate::upoly::UPoly;

/// Taken when `condition != 0` and every earlier condition vanished.
#[derive(Clone, Debug, PartialEq)]
pub struct GcdBranch {
    pub delta: DeltaIndex,
    pub condition: ParamPoly,
    pub gcd_numerator: UPoly<ParamPoly>,
    pub gcd_denominator: ParamPoly,
    /// The condition is identically zero.
    pub dead: bool,
    /// Last branch; its condition never vanishes under the assumptions.
    pub fallback: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecisionTree {
    /// Side conditions assumed nonzero throughout (the leading coefficient of F0).
    pub assumptions: Vec<ParamPoly>,
    pub branches: Vec<GcdBranch>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultRow {
    pub lambda: DeltaIndex,
    pub condition: ParamPoly,
    pub multiplicities: Partition,
    pub dead: bool,
    pub fallback: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultTable {
    pub poly: UPoly<ParamPoly>,
    pub assumptions: Vec<ParamPoly>,
    pub rows: Vec<MultRow>,
}

/// One branch per `delta` with `|delta| <= d0`, in decreasing glex order.
pub fn gcd_decision_tree(f: &PolyTuple<ParamPoly>, method: Method) -> Result<DecisionTree> {
    let deltas = enumerate_deltas(f.t(), f.d0());
    let results = par_map(&deltas, |delta| subresultant(f, delta, method))?;
    let last = results.len() - 1;
    let branches = results
        .into_iter()
        .enumerate()
        .map(|(i, r)| GcdBranch {
            dead: r.s_principal.is_zero(),
            fallback: i == last,
            condition: r.s_principal.clone(),
            gcd_denominator: r.s_principal,
            gcd_numerator: r.s_poly,
            delta: r.delta,
        })
        .collect();
    Ok(DecisionTree {
        assumptions: vec![f.lc0()],
        branches,
    })
}

/// Rows for `H` of the given degree with symbolic coefficients.
///
/// `coeff_names` lists coefficient names from `x^0` upward: `degree + 1`
/// names give a fully generic `H`, `degree` names a monic one. `None` uses
/// `a0, ..., a{degree}`.
pub fn mult_decision_table(
    degree: usize,
    coeff_names: Option<&[String]>,
    method: Method,
) -> Result<MultTable> {
    let h = generic_poly(degree, coeff_names)?;
    mult_table_for(&h, method)
}

/// Rows in decreasing lex order of `lambda` for a given symbolic `H`.
pub fn mult_table_for(h: &UPoly<ParamPoly>, method: Method) -> Result<MultTable> {
    let f = derivative_tuple(h)?;
    let lambdas = enumerate_partition_indices(f.t());
    let results = par_map(&lambdas, |lambda| subresultant(&f, lambda, method))?;
    let last = results.len() - 1;
    let rows = results
        .into_iter()
        .enumerate()
        .map(|(i, r)| MultRow {
            multiplicities: conjugate(r.delta.parts()),
            dead: r.s_principal.is_zero(),
            fallback: i == last,
            condition: r.s_principal,
            lambda: r.delta,
        })
        .collect();
    Ok(MultTable {
        poly: h.clone(),
        assumptions: vec![f.lc0()],
        rows,
    })
}

/// `sum_k names[k] x^k`, with a leading `x^degree` when only `degree`
/// names are given.
pub fn generic_poly(degree: usize, coeff_names: Option<&[String]>) -> Result<UPoly<ParamPoly>> {
    if degree == 0 {
        return Err(Error::ConstantInput);
    }
    let names: Vec<String> = match coeff_names {
        Some(n) => n.to_vec(),
        None => (0..=degree).map(|k| format!("a{k}")).collect(),
    };
    if names.len() != degree && names.len() != degree + 1 {
        return Err(Error::BadDimensions(format!(
            "degree {degree} needs {degree} or {} coefficient names, got {}",
            degree + 1,
            names.len()
        )));
    }
    for (i, n) in names.iter().enumerate() {
        if n == "x" || names[..i].contains(n) {
            return Err(Error::BadDimensions(format!(
                "coefficient name `{n}` is reserved or repeated"
            )));
        }
    }
    let vars: Arc<[String]> = Arc::from(names.clone());
    let mut coeffs: Vec<ParamPoly> = (0..names.len())
        .map(|i| ParamPoly::variable(&vars, i))
        .collect();
    if names.len() == degree {
        coeffs.push(ParamPoly::one());
    }
    Ok(UPoly::new(coeffs))
}

impl DecisionTree {
    /// Divides every condition and numerator by the rational content of its
    /// condition. Branch semantics are unchanged.
    pub fn without_content(&self) -> DecisionTree {
        let branches = self
            .branches
            .iter()
            .map(|b| {
                if b.dead {
                    return b.clone();
                }
                let inv = b
                    .condition
                    .content()
                    .inv()
                    .expect("content of a nonzero polynomial");
                GcdBranch {
                    condition: b.condition.scale(&inv),
                    gcd_denominator: b.gcd_denominator.scale(&inv),
                    gcd_numerator: b.gcd_numerator.scale(&ParamPoly::constant(inv)),
                    ..b.clone()
                }
            })
            .collect();
        DecisionTree {
            assumptions: self.assumptions.clone(),
            branches,
        }
    }

    /// First branch whose condition does not vanish at `values`, and the
    /// monic gcd it yields there.
    pub fn evaluate(&self, values: &HashMap<String, Rational>) -> Result<(usize, UPoly<Rational>)> {
        check_assumptions(&self.assumptions, values)?;
        for (i, b) in self.branches.iter().enumerate() {
            let s = b.condition.evaluate(values)?;
            if !s.is_zero() {
                let num = specialize(&b.gcd_numerator, values)?;
                return Ok((i, num.exact_div_scalar(&s)?));
            }
        }
        Err(Error::Inconsistent("no branch condition holds".into()))
    }
}

impl MultTable {
    pub fn without_content(&self) -> MultTable {
        let rows = self
            .rows
            .iter()
            .map(|r| MultRow {
                condition: r.condition.primitive_part(),
                ..r.clone()
            })
            .collect();
        MultTable {
            poly: self.poly.clone(),
            assumptions: self.assumptions.clone(),
            rows,
        }
    }

    /// First row whose condition does not vanish at `values`.
    pub fn evaluate(&self, values: &HashMap<String, Rational>) -> Result<&MultRow> {
        check_assumptions(&self.assumptions, values)?;
        for r in &self.rows {
            if !r.condition.evaluate(values)?.is_zero() {
                return Ok(r);
            }
        }
        Err(Error::Inconsistent("no row condition holds".into()))
    }
}

fn check_assumptions(assumptions: &[ParamPoly], values: &HashMap<String, Rational>) -> Result<()> {
    for a in assumptions {
        if a.evaluate(values)?.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
    }
    Ok(())
}

/// Substitutes parameter values into every coefficient.
pub fn specialize(
    p: &UPoly<ParamPoly>,
    values: &HashMap<String, Rational>,
) -> Result<UPoly<Rational>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| c.evaluate(values))
        .collect::<Result<Vec<_>>>()?;
    Ok(UPoly::new(coeffs))
}

/// Order-preserving map over scoped worker threads; the first error wins.
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> Result<U> + Sync) -> Result<Vec<U>> {
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| s.spawn(|| c.iter().map(&f).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn degree_two_gcd_tree_order() {
        let f0 = generic_poly(2, Some(&names(&["a0", "a1", "a2"]))).unwrap();
        let f1 = generic_poly(2, Some(&names(&["b0", "b1", "b2"]))).unwrap();
        let f2 = generic_poly(2, Some(&names(&["c0", "c1", "c2"]))).unwrap();
        let f = PolyTuple::new(vec![f0, f1, f2]).unwrap();
        let tree = gcd_decision_tree(&f, Method::Sylvester).unwrap();
        let order: Vec<Vec<usize>> = tree
            .branches
            .iter()
            .map(|b| b.delta.parts().to_vec())
            .collect();
        assert_eq!(
            order,
            vec![
                vec![2, 0],
                vec![1, 1],
                vec![0, 2],
                vec![1, 0],
                vec![0, 1],
                vec![0, 0]
            ]
        );
        assert!(tree.branches.iter().all(|b| !b.dead));
        assert!(tree.branches.last().unwrap().fallback);
    }

    #[test]
    fn identical_pair_has_dead_branches() {
        let f0 = generic_poly(2, None).unwrap();
        let f = PolyTuple::new(vec![f0.clone(), f0]).unwrap();
        let tree = gcd_decision_tree(&f, Method::Barnett).unwrap();
        let dead: Vec<bool> = tree.branches.iter().map(|b| b.dead).collect();
        assert_eq!(dead, vec![true, true, false]);
    }

    #[test]
    fn monic_quadratic_discriminant() {
        let table = mult_decision_table(2, Some(&names(&["c", "b"])), Method::Sylvester).unwrap();
        assert_eq!(table.rows.len(), 2);
        let vars: Arc<[String]> = Arc::from(names(&["b", "c"]));
        let b = ParamPoly::variable(&vars, 0);
        let c = ParamPoly::variable(&vars, 1);
        let disc = b.mul(&b).sub(&c.scale(&Rational::from(4)));
        let ratio = table.rows[0]
            .condition
            .rational_ratio(&disc)
            .expect("proportional to b^2 - 4c");
        assert!(!ratio.is_zero());
        assert_eq!(table.rows[1].multiplicities.parts(), &[2]);
    }

    #[test]
    fn names_are_validated() {
        assert!(generic_poly(2, Some(&names(&["a"]))).is_err());
        assert!(generic_poly(2, Some(&names(&["a", "a"]))).is_err());
        assert!(generic_poly(1, Some(&names(&["x"]))).is_err());
        assert_eq!(generic_poly(0, None), Err(Error::ConstantInput));
    }
}
