//! GCD of several polynomials and root multiplicity structure, both read off
//! the first nonvanishing principal subresultant in a fixed index order.

use crate::error::{Error, Result};
use crate::index::{
    conjugate, enumerate_deltas, enumerate_partition_indices, DeltaIndex, Partition,
};
use crate::ring::{Domain, Field, Ring};
use crate::subres::{subresultant, Method, PolyTuple, SubresResult};
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct GcdResult<F: Field> {
    /// Monic.
    pub gcd: UPoly<F>,
    pub delta: DeltaIndex,
    pub s_value: F,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultResult {
    pub multiplicities: Partition,
    pub lambda: DeltaIndex,
}

/// First `delta` in decreasing glex order whose principal subresultant is
/// nonzero, together with `S_delta`. The zero index always qualifies, so the
/// scan terminates.
pub fn first_nonvanishing<D: Domain>(
    f: &PolyTuple<D>,
    candidates: &[DeltaIndex],
    method: Method,
) -> Result<SubresResult<D>> {
    for delta in candidates {
        let r = subresultant(f, delta, method)?;
        if !r.s_principal.is_zero() {
            return Ok(r);
        }
    }
    Err(Error::Inconsistent(
        "every candidate index has a vanishing principal subresultant".into(),
    ))
}

/// `gcd(F0, ..., Ft)` as `S_delta / s_delta` for the glex-largest `delta`
/// with `s_delta != 0`; that `delta` is the incremental cofactor degree.
///
/// A constant `F0` falls through to the zero index, which gives gcd 1.
pub fn multi_gcd<F: Field>(f: &PolyTuple<F>, method: Method) -> Result<GcdResult<F>> {
    let candidates = enumerate_deltas(f.t(), f.d0());
    let r = first_nonvanishing(f, &candidates, method)?;
    let gcd = r.s_poly.exact_div_scalar(&r.s_principal)?;
    if !gcd.leading_coeff().is_some_and(Ring::is_one) {
        return Err(Error::InternalNonMonic);
    }
    Ok(GcdResult {
        gcd,
        delta: r.delta,
        s_value: r.s_principal,
        method,
    })
}

/// `(deg C1, ..., deg Ct)` with `C_i = gcd(F0..F_{i-1}) / gcd(F0..F_i)`, by
/// the Euclidean algorithm. Test oracle.
pub fn icdeg_oracle<F: Field>(f: &PolyTuple<F>) -> Result<DeltaIndex> {
    let mut g = f.f0().monic();
    let mut out = Vec::with_capacity(f.t());
    for fi in f.rest() {
        let next = g.euclid_gcd(fi)?;
        out.push(degree(&g) - degree(&next));
        g = next;
    }
    Ok(DeltaIndex::new(out))
}

fn degree<R: Ring>(p: &UPoly<R>) -> usize {
    p.degree().unwrap_or(0)
}

/// `(H, H', ..., H^(t))` for `t = deg H`.
pub fn derivative_tuple<R: Domain>(h: &UPoly<R>) -> Result<PolyTuple<R>> {
    let t = match h.degree() {
        Some(t) if t >= 1 => t,
        _ => return Err(Error::ConstantInput),
    };
    PolyTuple::new((0..=t).map(|k| h.derivative(k)).collect())
}

/// Multiplicities of the distinct roots of `H`, largest first: the
/// conjugate of the lex-largest partition-shaped `lambda` with `|lambda| =
/// deg H` and `s_lambda != 0` on the derivative tuple.
pub fn multiplicity<F: Field>(h: &UPoly<F>, method: Method) -> Result<MultResult> {
    let f = derivative_tuple(h)?;
    let candidates = enumerate_partition_indices(f.t());
    let r = first_nonvanishing(&f, &candidates, method)?;
    Ok(MultResult {
        multiplicities: conjugate(r.delta.parts()),
        lambda: r.delta,
    })
}

/// `∏ (x - root)^mult`.
pub fn poly_from_rootspec<R: Ring>(rootspec: &[(R, usize)]) -> Result<UPoly<R>> {
    check_distinct(rootspec)?;
    let roots: Vec<R> = rootspec
        .iter()
        .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
        .collect();
    UPoly::from_roots(&R::one(), &roots)
}

/// Sorted multiplicity vector of a root specification. Test oracle.
pub fn mult_oracle<R: Ring>(rootspec: &[(R, usize)]) -> Result<Partition> {
    check_distinct(rootspec)?;
    Ok(Partition::new(rootspec.iter().map(|(_, m)| *m).collect()))
}

fn check_distinct<R: Ring>(rootspec: &[(R, usize)]) -> Result<()> {
    for (i, (a, _)) in rootspec.iter().enumerate() {
        if rootspec[..i].iter().any(|(b, _)| b == a) {
            return Err(Error::RepeatedRoots);
        }
    }
    Ok(())
}
