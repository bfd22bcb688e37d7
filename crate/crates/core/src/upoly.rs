//! Dense univariate polynomials in `x`, coefficients stored low to high.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::ring::{Domain, Field, Rational, Ring};

/// Dense polynomial `c[0] + c[1] x + ... + c[n] x^n`.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, PartialEq)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        UPoly::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        UPoly::new(coeffs)
    }

    pub fn x() -> Self {
        UPoly::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &R) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UPoly<S> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(a).add(c))
    }

    /// The `order`-fold formal derivative.
    pub fn derivative(&self, order: usize) -> Self {
        if order == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(order)
            .map(|(k, c)| {
                let falling: i64 = ((k - order + 1)..=k).map(|v| v as i64).product();
                c.mul(&R::from_i64(falling))
            })
            .collect();
        UPoly::new(coeffs)
    }

    /// `lc · ∏ (x − r)`.
    pub fn from_roots(lc: &R, roots: &[R]) -> Result<Self> {
        if lc.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let mut p = UPoly::constant(lc.clone());
        for r in roots {
            p = p.mul(&UPoly::new(vec![r.neg(), R::one()]));
        }
        Ok(p)
    }
}

impl<D: Domain> UPoly<D> {
    /// Divides every coefficient exactly by `c`.
    pub fn exact_div_scalar(&self, c: &D) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.exact_div(c))
            .collect::<Result<_>>()?;
        Ok(UPoly::new(coeffs))
    }
}

impl<F: Field> UPoly<F> {
    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let q = rem[k].mul(&inv_lc);
            if !q.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k - dd + i] = rem[k - dd + i].sub(&q.mul(dc));
                }
            }
            quot[k - dd] = q;
            rem.pop();
        }
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Monic gcd by plain Euclidean remainders.
    pub fn euclid_gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }
}

impl UPoly<Rational> {
    /// Rational roots with multiplicities, by the rational root test.
    ///
    /// Candidate enumeration factors the constant and leading coefficients of
    /// the integer-scaled polynomial, so these must fit in 40 bits.
    pub fn rational_roots(&self) -> Result<Vec<(Rational, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial(0));
        }
        let mut out = Vec::new();
        let zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            out.push((Rational::zero(), zeros));
        }
        let mut p = UPoly::new(self.coeffs[zeros..].to_vec());
        if p.is_constant() {
            return Ok(out);
        }
        let lcm = p
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let small = |n: &BigInt| n.magnitude().to_u64().filter(|&v| v < 1 << 40);
        let (Some(c0), Some(cn)) = (small(&ints[0]), small(ints.last().unwrap())) else {
            return Err(Error::Unsupported(
                "coefficients too large for the rational root test".into(),
            ));
        };
        for num in divisors(c0) {
            for den in divisors(cn) {
                if num.gcd(&den) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(num) * sign, BigInt::from(den))?;
                    let mut mult = 0;
                    while !p.is_constant() && p.eval(&cand).is_zero() {
                        p = p.div_rem(&UPoly::new(vec![cand.neg(), Rational::one()]))?.0;
                        mult += 1;
                    }
                    if mult > 0 {
                        out.push((cand, mult));
                    }
                }
            }
        }
        Ok(out)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl<R: Ring> Ring for UPoly<R> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        UPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UPoly::new(coeffs)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UPoly::new(coeffs)
    }
    fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }
    fn from_i64(n: i64) -> Self {
        UPoly::constant(R::from_i64(n))
    }
}

impl<D: Domain> Domain for UPoly<D> {
    /// Long division; every leading-coefficient quotient must be exact in
    /// `D` and the final remainder must vanish.
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(UPoly::zero());
        }
        if dd == 0 {
            return self.exact_div_scalar(&divisor.coeffs[0]);
        }
        let n = self.coeffs.len();
        if n <= dd {
            return Err(Error::DivisionNotExact);
        }
        let lc = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![D::zero(); n - dd];
        for k in (dd..n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].exact_div(lc)?;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = rem[k - dd + i].sub(&q.mul(dc));
            }
            quot[k - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionNotExact);
        }
        Ok(UPoly::new(quot))
    }
}

impl<R: Ring> fmt::Display for UPoly<R> {
    /// Writes `x^2 - 3*x + 2`; composite coefficients are parenthesised so
    /// the output re-parses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (negative, mag) = if s.contains(' ') {
                (false, format!("({s})"))
            } else if let Some(rest) = s.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, s)
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for UPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}
