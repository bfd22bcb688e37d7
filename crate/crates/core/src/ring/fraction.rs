use std::fmt;

use super::{Domain, Ring};

/// `num / base^exp` for one designated nonzero `base`.
///
/// Every denominator produced by the companion-matrix construction is a
/// power of the leading coefficient of `F0`, so tracking the exponent is
/// enough; no gcd in the underlying domain is required. After each operation
/// the exponent is lowered while `base` still divides the numerator.
#[derive(Clone)]
pub struct Fraction<D> {
    num: D,
    exp: u32,
    base: Option<D>,
}

impl<D: Domain> Fraction<D> {
    pub fn new(num: D, base: D, exp: u32) -> Self {
        assert!(!base.is_zero(), "fraction base must be nonzero");
        Fraction {
            num,
            exp,
            base: Some(base),
        }
        .reduced()
    }

    pub fn from_value(num: D) -> Self {
        Fraction {
            num,
            exp: 0,
            base: None,
        }
    }

    pub fn numerator(&self) -> &D {
        &self.num
    }

    pub fn den_exp(&self) -> u32 {
        self.exp
    }

    pub fn base(&self) -> Option<&D> {
        self.base.as_ref()
    }

    /// Numerator after raising the denominator to `base^exp`.
    pub fn numerator_at(&self, exp: u32) -> D {
        assert!(exp >= self.exp);
        match &self.base {
            Some(b) if exp > self.exp => self.num.mul(&b.pow(exp - self.exp)),
            _ => self.num.clone(),
        }
    }

    /// Back to `D` if the denominator has cancelled.
    pub fn to_value(&self) -> Option<D> {
        (self.exp == 0).then(|| self.num.clone())
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.exp = 0;
            return self;
        }
        if let Some(b) = &self.base {
            while self.exp > 0 {
                match self.num.exact_div(b) {
                    Ok(q) => {
                        self.num = q;
                        self.exp -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        self
    }

    fn common_base(&self, other: &Self) -> Option<D> {
        match (&self.base, &other.base) {
            (Some(a), Some(b)) => {
                debug_assert!(a == b, "fractions over different bases");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }
}

impl<D: Domain> PartialEq for Fraction<D> {
    fn eq(&self, other: &Self) -> bool {
        let e = self.exp.max(other.exp);
        let base = self.common_base(other);
        let lift = |f: &Self| match &base {
            Some(b) if e > f.exp => f.num.mul(&b.pow(e - f.exp)),
            _ => f.num.clone(),
        };
        lift(self) == lift(other)
    }
}

impl<D: Domain> Ring for Fraction<D> {
    fn zero() -> Self {
        Fraction::from_value(D::zero())
    }
    fn one() -> Self {
        Fraction::from_value(D::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let base = self.common_base(other);
        let e = self.exp.max(other.exp);
        let lift = |f: &Self| match &base {
            Some(b) if e > f.exp => f.num.mul(&b.pow(e - f.exp)),
            _ => f.num.clone(),
        };
        Fraction {
            num: lift(self).add(&lift(other)),
            exp: e,
            base,
        }
        .reduced()
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Fraction {
            num: self.num.mul(&other.num),
            exp: self.exp + other.exp,
            base: self.common_base(other),
        }
        .reduced()
    }
    fn neg(&self) -> Self {
        Fraction {
            num: self.num.neg(),
            exp: self.exp,
            base: self.base.clone(),
        }
    }
    fn from_i64(n: i64) -> Self {
        Fraction::from_value(D::from_i64(n))
    }
}

impl<D: Domain> fmt::Display for Fraction<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.base, self.exp) {
            (Some(b), 1) => write!(f, "({})/({})", self.num, b),
            (Some(b), e) if e > 1 => write!(f, "({})/({})^{}", self.num, b, e),
            _ => write!(f, "{}", self.num),
        }
    }
}

impl<D: Domain> fmt::Debug for Fraction<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction({self})")
    }
}
