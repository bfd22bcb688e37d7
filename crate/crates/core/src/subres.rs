//! Multi-polynomial subresultants.
//!
//! For `F = (F0, F1, ..., Ft)` and an index tuple `delta` with
//! `|delta| <= deg F0`, the subresultant polynomial `S_delta(F)` is defined
//! through the roots of `F0` (a ratio of two alternants) and can be computed
//! from coefficients alone by three determinantal constructions:
//!
//! | method      | matrix size           | constant                     |
//! |-------------|-----------------------|------------------------------|
//! | Sylvester   | `(d0+delta0)^2`       | `(-1)^(d0*delta0)`           |
//! | Barnett     | `d0^2` (companion)    | `a^delta0`                   |
//! | Bézout      | `d0^2`                | `a^(delta0 - |delta|)`       |
//!
//! where `a` is the leading coefficient of `F0`. This module builds all
//! three, applies the constants, and also provides the root-based
//! definition and the classical two-polynomial subresultant as oracles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::DeltaIndex;
use crate::matrix::{bezout_matrix, companion, eval_matrix, DenseMatrix};
use crate::ring::{scale_by_power, Domain, Fraction, Ring};
use crate::upoly::UPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Sylvester,
    Barnett,
    Bezout,
    RootOracle,
}

impl Method {
    pub const COEFFICIENT_METHODS: [Method; 3] =
        [Method::Sylvester, Method::Barnett, Method::Bezout];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Sylvester => "sylvester",
            Method::Barnett => "barnett",
            Method::Bezout => "bezout",
            Method::RootOracle => "oracle",
        };
        f.write_str(name)
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sylvester" => Ok(Method::Sylvester),
            "barnett" => Ok(Method::Barnett),
            "bezout" | "bézout" => Ok(Method::Bezout),
            "oracle" | "root_oracle" | "roots" => Ok(Method::RootOracle),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown method `{other}`"),
            }),
        }
    }
}

/// `F = (F0, F1, ..., Ft)` with `t >= 1` and every member nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyTuple<D: Domain> {
    polys: Vec<UPoly<D>>,
}

impl<D: Domain> PolyTuple<D> {
    pub fn new(polys: Vec<UPoly<D>>) -> Result<Self> {
        if polys.len() < 2 {
            return Err(Error::TupleTooShort);
        }
        if let Some(i) = polys.iter().position(Ring::is_zero) {
            return Err(Error::ZeroPolynomial(i));
        }
        Ok(PolyTuple { polys })
    }

    pub fn polys(&self) -> &[UPoly<D>] {
        &self.polys
    }

    pub fn f0(&self) -> &UPoly<D> {
        &self.polys[0]
    }

    /// `F1, ..., Ft`
    pub fn rest(&self) -> &[UPoly<D>] {
        &self.polys[1..]
    }

    pub fn t(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.polys
            .iter()
            .map(|p| p.degree().expect("nonzero member"))
            .collect()
    }

    pub fn d0(&self) -> usize {
        self.f0().degree().expect("nonzero member")
    }

    /// Leading coefficient of `F0`.
    pub fn lc0(&self) -> D {
        self.f0().leading_coeff().expect("nonzero member").clone()
    }
}

/// `S_delta` together with its principal coefficient and bookkeeping.
#[derive(Clone, PartialEq, Debug)]
pub struct SubresResult<D: Domain> {
    pub s_poly: UPoly<D>,
    pub s_principal: D,
    pub delta: DeltaIndex,
    pub delta0: i64,
    pub epsilon: usize,
    pub method: Method,
}

/// `delta0 = max(delta_i + d_i - d0 for i >= 1, 1 - |delta|)`; may be negative.
pub fn delta0(delta: &DeltaIndex, degrees: &[usize]) -> i64 {
    assert_eq!(degrees.len(), delta.len() + 1, "need deg F0..Ft");
    let d0 = degrees[0] as i64;
    let tail = 1 - delta.sum() as i64;
    delta
        .parts()
        .iter()
        .zip(&degrees[1..])
        .map(|(&di, &deg)| di as i64 + deg as i64 - d0)
        .fold(tail, i64::max)
}

/// `epsilon = 1 + d0 - |delta|`, the height of the x-block.
pub fn epsilon(delta: &DeltaIndex, d0: usize) -> Result<usize> {
    let sum = delta.sum();
    if sum > d0 {
        return Err(Error::DeltaTooLarge { sum, d0 });
    }
    Ok(1 + d0 - sum)
}

fn check_delta<D: Domain>(f: &PolyTuple<D>, delta: &DeltaIndex) -> Result<()> {
    if delta.len() != f.t() {
        return Err(Error::LengthMismatch(delta.len(), f.t()));
    }
    epsilon(delta, f.d0()).map(|_| ())
}

/// Transposed x-block rows: row `k` has `x` at column `k` and `-1` at
/// column `k + 1` (when it exists).
fn x_rows<D: Domain>(count: usize, width: usize) -> Vec<Vec<UPoly<D>>> {
    (0..count)
        .map(|k| {
            let mut row = vec![UPoly::zero(); width];
            row[k] = UPoly::x();
            if k + 1 < width {
                row[k + 1] = UPoly::constant(D::one().neg());
            }
            row
        })
        .collect()
}

fn shifted_coeff_row<D: Domain>(p: &UPoly<D>, shift: usize, width: usize) -> Vec<UPoly<D>> {
    let mut row = vec![UPoly::zero(); width];
    for (k, c) in p.coeffs().iter().enumerate() {
        row[k + shift] = UPoly::constant(c.clone());
    }
    row
}

/// Extended Sylvester matrix, `(d0 + delta0)` square: `delta0` shifted
/// coefficient rows of `F0`, `delta_i` rows of each `F_i` (coefficients low
/// to high), then the `epsilon - 1` x-rows.
pub fn build_sylvester<D: Domain>(
    f: &PolyTuple<D>,
    delta: &DeltaIndex,
) -> Result<DenseMatrix<UPoly<D>>> {
    check_delta(f, delta)?;
    let d0 = f.d0();
    let dz = delta0(delta, &f.degrees());
    if dz < 0 {
        return Err(Error::NegativeDelta0(dz));
    }
    let n = d0 + dz as usize;
    let mut rows = Vec::with_capacity(n);
    for j in 0..dz as usize {
        rows.push(shifted_coeff_row(f.f0(), j, n));
    }
    for (fi, &di) in f.rest().iter().zip(delta.parts()) {
        for j in 0..di {
            rows.push(shifted_coeff_row(fi, j, n));
        }
    }
    rows.extend(x_rows(d0 - delta.sum(), n));
    DenseMatrix::from_rows(rows)
}

/// Extended Barnett matrix, `d0` square: the first `delta_i` columns of
/// `F_i(C0)` as rows, `C0` the companion matrix of `F0`, then the x-rows.
/// Entries carry denominators that are powers of the leading coefficient
/// of `F0`.
pub fn build_barnett<D: Domain>(
    f: &PolyTuple<D>,
    delta: &DeltaIndex,
) -> Result<DenseMatrix<Fraction<UPoly<D>>>> {
    check_delta(f, delta)?;
    let d0 = f.d0();
    let c0 = companion(f.f0())?;
    let lc = UPoly::constant(f.lc0());
    let lift = |v: &Fraction<D>| -> Fraction<UPoly<D>> {
        let num = UPoly::constant(v.numerator().clone());
        match v.den_exp() {
            0 => Fraction::from_value(num),
            e => Fraction::new(num, lc.clone(), e),
        }
    };
    let mut rows = Vec::with_capacity(d0);
    for (fi, &di) in f.rest().iter().zip(delta.parts()) {
        if di == 0 {
            continue;
        }
        let fc = eval_matrix(&fi.map(|c| Fraction::from_value(c.clone())), &c0)?;
        for j in 0..di {
            rows.push(fc.column(j).iter().map(lift).collect());
        }
    }
    for row in x_rows::<D>(d0 - delta.sum(), d0) {
        rows.push(row.into_iter().map(Fraction::from_value).collect());
    }
    DenseMatrix::from_rows(rows)
}

/// Extended Bézout matrix, `d0` square: the first `delta_i` columns of the
/// Bézout matrix of `(F0, F_i)` as rows, then the x-rows. Undefined when
/// some `deg F_i > deg F0`.
pub fn build_bezout<D: Domain>(
    f: &PolyTuple<D>,
    delta: &DeltaIndex,
) -> Result<DenseMatrix<UPoly<D>>> {
    check_delta(f, delta)?;
    let degrees = f.degrees();
    let d0 = degrees[0];
    if let Some((i, &deg)) = degrees
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, &deg)| deg > d0)
    {
        return Err(Error::DegreeTooHigh {
            index: i,
            degree: deg,
            d0,
        });
    }
    let mut rows = Vec::with_capacity(d0);
    for (fi, &di) in f.rest().iter().zip(delta.parts()) {
        if di == 0 {
            continue;
        }
        let b = bezout_matrix(f.f0(), fi)?;
        for j in 0..di {
            rows.push(b.column(j).into_iter().map(UPoly::constant).collect());
        }
    }
    rows.extend(x_rows(d0 - delta.sum(), d0));
    DenseMatrix::from_rows(rows)
}

/// `det M^Barnett` as `numerator / a^k`, with `a = lc(F0)`: every row is
/// multiplied through by its largest denominator before elimination.
pub fn barnett_det<D: Domain>(f: &PolyTuple<D>, delta: &DeltaIndex) -> Result<Fraction<UPoly<D>>> {
    let m = build_barnett(f, delta)?;
    let mut cleared = Vec::with_capacity(m.rows());
    let mut total = 0u32;
    for row in m.row_vecs() {
        let e = row.iter().map(Fraction::den_exp).max().unwrap_or(0);
        total += e;
        cleared.push(row.iter().map(|v| v.numerator_at(e)).collect());
    }
    let num = DenseMatrix::from_rows(cleared)?.det()?;
    let lc = UPoly::constant(f.lc0());
    Ok(if total == 0 {
        Fraction::from_value(num)
    } else {
        Fraction::new(num, lc, total)
    })
}

/// `S_delta(F)` and `s_delta(F)` by one of the coefficient constructions.
///
/// The zero index returns `a^(delta0 - 1) F0` directly; a negative `delta0`
/// returns zero, where the Sylvester matrix does not exist.
pub fn subresultant<D: Domain>(
    f: &PolyTuple<D>,
    delta: &DeltaIndex,
    method: Method,
) -> Result<SubresResult<D>> {
    check_delta(f, delta)?;
    if method == Method::Bezout {
        let degrees = f.degrees();
        if let Some((i, &deg)) = degrees
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &deg)| deg > degrees[0])
        {
            return Err(Error::DegreeTooHigh {
                index: i,
                degree: deg,
                d0: degrees[0],
            });
        }
    }
    let d0 = f.d0();
    let dz = delta0(delta, &f.degrees());
    let eps = epsilon(delta, d0)?;
    let lc = UPoly::constant(f.lc0());
    let s_poly = if delta.is_zero() {
        scale_by_power(f.f0(), &lc, dz - 1)?
    } else if dz < 0 {
        UPoly::zero()
    } else {
        match method {
            Method::Sylvester => build_sylvester(f, delta)?
                .det()?
                .signed(d0 as u64 * dz as u64),
            Method::Barnett => {
                let det = barnett_det(f, delta)?;
                scale_by_power(det.numerator(), &lc, dz - det.den_exp() as i64)?
            }
            Method::Bezout => {
                let det = build_bezout(f, delta)?.det()?;
                scale_by_power(&det, &lc, dz - delta.sum() as i64)?
            }
            Method::RootOracle => {
                return Err(Error::Unsupported(
                    "the root oracle needs explicit roots; use subresultant_root_oracle".into(),
                ))
            }
        }
    };
    finish(s_poly, delta.clone(), dz, eps, method)
}

fn finish<D: Domain>(
    s_poly: UPoly<D>,
    delta: DeltaIndex,
    delta0: i64,
    epsilon: usize,
    method: Method,
) -> Result<SubresResult<D>> {
    if s_poly.degree().is_some_and(|d| d + 1 > epsilon) {
        return Err(Error::Inconsistent(format!(
            "deg S{delta} = {:?} exceeds epsilon - 1 = {}",
            s_poly.degree(),
            epsilon - 1
        )));
    }
    let s_principal = s_poly.coeff(epsilon - 1);
    Ok(SubresResult {
        s_poly,
        s_principal,
        delta,
        delta0,
        epsilon,
        method,
    })
}

/// `S_delta` from the roots of `F0 = lc · ∏ (x - root)`.
///
/// Evaluates the defining alternant ratio and, independently, the variant
/// whose last block has rows `root^k (x - root)`; the two must agree.
pub fn subresultant_root_oracle<D: Domain>(
    lc: &D,
    roots: &[D],
    rest: &[UPoly<D>],
    delta: &DeltaIndex,
) -> Result<SubresResult<D>> {
    if lc.is_zero() {
        return Err(Error::ZeroLeadingCoefficient);
    }
    if rest.is_empty() {
        return Err(Error::TupleTooShort);
    }
    if delta.len() != rest.len() {
        return Err(Error::LengthMismatch(delta.len(), rest.len()));
    }
    if let Some(i) = rest.iter().position(Ring::is_zero) {
        return Err(Error::ZeroPolynomial(i + 1));
    }
    for i in 0..roots.len() {
        for j in 0..i {
            if roots[i] == roots[j] {
                return Err(Error::RepeatedRoots);
            }
        }
    }
    let d0 = roots.len();
    let eps = epsilon(delta, d0)?;
    let mut degrees = vec![d0];
    degrees.extend(rest.iter().map(|p| p.degree().unwrap()));
    let dz = delta0(delta, &degrees);

    let powers: Vec<Vec<D>> = roots
        .iter()
        .map(|a| (0..=d0).map(|k| a.pow(k as u32)).collect())
        .collect();
    let vandermonde = DenseMatrix::from_rows(
        (0..d0)
            .map(|k| {
                roots
                    .iter()
                    .enumerate()
                    .map(|(j, _)| powers[j][k].clone())
                    .collect()
            })
            .collect(),
    )?
    .det()?;

    // rows alpha_j^k F_i(alpha_j), shared by both forms
    let mut upper: Vec<Vec<D>> = Vec::with_capacity(delta.sum());
    for (fi, &di) in rest.iter().zip(delta.parts()) {
        let values: Vec<D> = roots.iter().map(|a| fi.eval(a)).collect();
        for k in 0..di {
            upper.push((0..d0).map(|j| powers[j][k].mul(&values[j])).collect());
        }
    }

    let mut defining: Vec<Vec<UPoly<D>>> = upper
        .iter()
        .map(|row| {
            let mut r: Vec<UPoly<D>> = row.iter().cloned().map(UPoly::constant).collect();
            r.push(UPoly::zero());
            r
        })
        .collect();
    for k in 0..eps {
        let mut r: Vec<UPoly<D>> = (0..d0)
            .map(|j| UPoly::constant(powers[j][k].clone()))
            .collect();
        r.push(UPoly::monomial(D::one(), k));
        defining.push(r);
    }
    let first = DenseMatrix::from_rows(defining)?.det()?;

    let mut shifted: Vec<Vec<UPoly<D>>> = upper
        .iter()
        .map(|row| row.iter().cloned().map(UPoly::constant).collect())
        .collect();
    for k in 0..eps - 1 {
        shifted.push(
            (0..d0)
                .map(|j| UPoly::new(vec![roots[j].neg(), D::one()]).scale(&powers[j][k]))
                .collect(),
        );
    }
    let second = DenseMatrix::from_rows(shifted)?.det()?;

    let lc_poly = UPoly::constant(lc.clone());
    let s1 = scale_by_power(&first.exact_div_scalar(&vandermonde)?, &lc_poly, dz)?;
    let s2 = scale_by_power(&second.exact_div_scalar(&vandermonde)?, &lc_poly, dz)?;
    if s1 != s2 {
        return Err(Error::Inconsistent(format!(
            "root forms disagree: {s1} vs {s2}"
        )));
    }
    finish(s1, delta.clone(), dz, eps, Method::RootOracle)
}

/// Classical `i`-th subresultant of two polynomials, the determinant
/// polynomial of the matrix with rows `x^(n-i-1) F0, ..., F0,
/// x^(m-i-1) F1, ..., F1` (coefficients high to low), `m = deg F0`,
/// `n = deg F1`.
///
/// Indices the determinantal formula does not cover follow the usual
/// chain convention: `sres_m = F0`, `sres_{m-1} = F1` and zero strictly
/// between `n` and `m - 1`.
///
/// Relative to this convention `S_(m-i)(F0, F1) = (-1)^(i(m-i)) sres_i`,
/// so the two agree identically only when `m` is odd.
pub fn classical_sres<D: Domain>(f0: &UPoly<D>, f1: &UPoly<D>, i: usize) -> Result<UPoly<D>> {
    let m = f0.degree().ok_or(Error::ZeroPolynomial(0))?;
    let n = f1.degree().ok_or(Error::ZeroPolynomial(1))?;
    if i > m {
        return Err(Error::IndexOutOfRange { index: i, limit: m });
    }
    if i > n || (i == m && i == n) {
        return Ok(if i == m {
            f0.clone()
        } else if i + 1 == m {
            f1.clone()
        } else {
            UPoly::zero()
        });
    }
    let (rows_f, rows_g) = (n - i, m - i);
    let k = rows_f + rows_g;
    let width = m + n - i;
    let mut rows: Vec<Vec<D>> = Vec::with_capacity(k);
    let mut push = |p: &UPoly<D>, shift: usize| {
        let mut row = vec![D::zero(); width];
        for (e, c) in p.coeffs().iter().enumerate() {
            row[width - 1 - (e + shift)] = c.clone();
        }
        rows.push(row);
    };
    for s in (0..rows_f).rev() {
        push(f0, s);
    }
    for s in (0..rows_g).rev() {
        push(f1, s);
    }
    let mut coeffs = Vec::with_capacity(i + 1);
    for j in 0..=i {
        let col = width - 1 - j;
        let square: Vec<Vec<D>> = rows
            .iter()
            .map(|row| {
                let mut r: Vec<D> = row[..k - 1].to_vec();
                r.push(row[col].clone());
                r
            })
            .collect();
        coeffs.push(DenseMatrix::from_rows(square)?.det()?);
    }
    Ok(UPoly::new(coeffs))
}
