use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Domain, Rational, Ring};
use crate::error::{Error, Result};

type Monomial = Vec<u32>;

/// Sparse multivariate polynomial over the rationals in named parameters.
///
/// Terms are keyed by exponent vectors aligned with `vars`; no stored term
/// has a zero coefficient. Values built from the same variable list share
/// it through an `Arc`. Operands with different lists are aligned on the
/// fly (constants carry an empty list), so equality is canonical.
#[derive(Clone)]
pub struct ParamPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPoly {
    pub fn constant(value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Vec::new(), value);
        }
        ParamPoly {
            vars: Arc::from(Vec::new()),
            terms,
        }
    }

    /// The parameter `vars[index]` as a polynomial.
    pub fn variable(vars: &Arc<[String]>, index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rational::one());
        ParamPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// Looks a parameter up by name.
    pub fn named(vars: &Arc<[String]>, name: &str) -> Result<Self> {
        let index = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        Ok(Self::variable(vars, index))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed and zero terms dropped.
    pub fn from_terms(
        vars: &Arc<[String]>,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            add_term(&mut map, exps, &c);
        }
        ParamPoly {
            vars: vars.clone(),
            terms: map,
        }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Substitutes rational values for the named parameters. Parameters not
    /// present in `values` stay symbolic.
    pub fn substitute(&self, values: &HashMap<String, Rational>) -> ParamPoly {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = m.clone();
            for (i, name) in self.vars.iter().enumerate() {
                if let Some(v) = values.get(name) {
                    coeff = coeff.mul(&v.pow(m[i]));
                    rest[i] = 0;
                }
            }
            add_term(&mut out, rest, &coeff);
        }
        ParamPoly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    /// Fully evaluates at rational parameter values.
    pub fn evaluate(&self, values: &HashMap<String, Rational>) -> Result<Rational> {
        if let Some(missing) = self
            .vars
            .iter()
            .enumerate()
            .find(|(i, v)| !values.contains_key(*v) && self.terms.keys().any(|m| m[*i] > 0))
        {
            return Err(Error::UnknownSymbol(missing.1.clone()));
        }
        Ok(self
            .substitute(values)
            .as_constant()
            .unwrap_or_else(Rational::zero))
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients with a positive leading (lex-largest) term.
    pub fn content(&self) -> Rational {
        if self.terms.is_empty() {
            return Rational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let content = Rational::new(num_gcd, den_lcm).expect("nonzero lcm");
        if self.terms.values().next_back().unwrap().is_negative() {
            content.neg()
        } else {
            content
        }
    }

    pub fn primitive_part(&self) -> ParamPoly {
        let c = self.content();
        self.scale(&Rational::one().exact_div(&c).expect("content is nonzero"))
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// `Some(c)` when `self = c · other` for a rational `c`.
    pub fn rational_ratio(&self, other: &ParamPoly) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        let (_, a, b) = align(self, other);
        let (m, lead) = b.iter().next_back()?;
        let c = a.get(m)?.exact_div(lead).ok()?;
        let scaled: BTreeMap<_, _> = b.iter().map(|(k, v)| (k.clone(), v.mul(&c))).collect();
        (scaled == *a).then_some(c)
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }
}

fn add_term(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(existing) => {
            *existing = existing.add(c);
            if existing.is_zero() {
                map.remove(&m);
            }
        }
        None => {
            map.insert(m, c.clone());
        }
    }
}

type Aligned<'a> = (
    Arc<[String]>,
    std::borrow::Cow<'a, BTreeMap<Monomial, Rational>>,
    std::borrow::Cow<'a, BTreeMap<Monomial, Rational>>,
);

/// Re-expresses both operands over a common variable list.
fn align<'a>(a: &'a ParamPoly, b: &'a ParamPoly) -> Aligned<'a> {
    use std::borrow::Cow;
    if Arc::ptr_eq(&a.vars, &b.vars) || a.vars == b.vars {
        return (
            a.vars.clone(),
            Cow::Borrowed(&a.terms),
            Cow::Borrowed(&b.terms),
        );
    }
    let mut vars: Vec<String> = a.vars.to_vec();
    for v in b.vars.iter() {
        if !vars.contains(v) {
            vars.push(v.clone());
        }
    }
    let vars: Arc<[String]> = if vars.len() == a.vars.len() {
        a.vars.clone()
    } else if vars.len() == b.vars.len() && b.vars.iter().zip(&vars).all(|(x, y)| x == y) {
        b.vars.clone()
    } else {
        Arc::from(vars)
    };
    let remap = |p: &'a ParamPoly| -> Cow<'a, BTreeMap<Monomial, Rational>> {
        if p.vars == vars {
            return Cow::Borrowed(&p.terms);
        }
        let positions: Vec<usize> = p
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).unwrap())
            .collect();
        Cow::Owned(
            p.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; vars.len()];
                    for (i, &pos) in positions.iter().enumerate() {
                        e[pos] = m[i];
                    }
                    (e, c.clone())
                })
                .collect(),
        )
    };
    let ta = remap(a);
    let tb = remap(b);
    (vars, ta, tb)
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (_, a, b) = align(self, other);
        a == b
    }
}

impl Eq for ParamPoly {}

impl Ring for ParamPoly {
    fn zero() -> Self {
        ParamPoly {
            vars: Arc::from(Vec::new()),
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        ParamPoly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let (vars, a, b) = align(self, other);
        let mut terms = a.into_owned();
        for (m, c) in b.iter() {
            add_term(&mut terms, m.clone(), c);
        }
        ParamPoly { vars, terms }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ParamPoly::zero();
        }
        let (vars, a, b) = align(self, other);
        let mut terms = BTreeMap::new();
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                add_term(&mut terms, m, &ca.mul(cb));
            }
        }
        ParamPoly { vars, terms }
    }
    fn neg(&self) -> Self {
        ParamPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }
    fn from_i64(n: i64) -> Self {
        ParamPoly::constant(Rational::from(n))
    }
}

impl Domain for ParamPoly {
    /// Multivariate division under the lexicographic term order; fails as
    /// soon as a leading term of the running remainder is not divisible.
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&Rational::one().exact_div(&c)?));
        }
        let (vars, a, b) = align(self, divisor);
        let divisor = ParamPoly {
            vars: vars.clone(),
            terms: b.into_owned(),
        };
        let mut rem = ParamPoly {
            vars: vars.clone(),
            terms: a.into_owned(),
        };
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (m.clone(), c.clone())
        };
        let mut quotient = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading() {
            if rm.iter().zip(&dm).any(|(r, d)| r < d) {
                return Err(Error::DivisionNotExact);
            }
            let qm: Monomial = rm.iter().zip(&dm).map(|(r, d)| r - d).collect();
            let qc = rc.exact_div(&dc)?;
            let mut step = BTreeMap::new();
            step.insert(qm.clone(), qc.clone());
            let step = ParamPoly {
                vars: vars.clone(),
                terms: step,
            };
            rem = rem.sub(&step.mul(&divisor));
            add_term(&mut quotient, qm, &qc);
        }
        Ok(ParamPoly {
            vars,
            terms: quotient,
        })
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &[u32]) -> fmt::Result {
    let mut first = true;
    for (name, &e) in vars.iter().zip(m) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for ParamPoly {
    /// Terms in decreasing lex order, e.g. `a04*a10 - 3/2*a00^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let is_const = m.iter().all(|&e| e == 0);
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if is_const {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, &self.vars, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

impl From<Rational> for ParamPoly {
    fn from(r: Rational) -> Self {
        ParamPoly::constant(r)
    }
}
