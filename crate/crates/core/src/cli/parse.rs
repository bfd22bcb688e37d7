//! Polynomial expressions in `x` with rational or parameter coefficients,
//! and the line-oriented input document.
//!
//! ```text
//! # the worked three-polynomial tuple
//! parameters: a, b        (optional)
//! poly: x^3 - 6*x^2 + 11*x - 6
//! poly: (a + b)*x^3
//! x + 1                   (bare lines are polynomials too)
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{ParamPoly, Rational, Ring};
use crate::upoly::UPoly;

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((start, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() || c.is_ascii_alphabetic() || c == '_' => {
                let mut end = start + 1;
                while let Some(&(i, d)) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                let word = &text[start..end];
                if c.is_ascii_digit() {
                    let n = word.parse().map_err(|_| Error::Parse {
                        pos: start,
                        msg: format!("bad number `{word}`"),
                    })?;
                    Tok::Num(n)
                } else {
                    Tok::Ident(word.to_string())
                }
            }
            other => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a Arc<[String]>,
}

type P = UPoly<ParamPoly>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(&Tok::Slash) {
                let pos = self.pos();
                self.at += 1;
                let divisor = self.unary()?;
                let c = divisor
                    .coeffs()
                    .first()
                    .filter(|_| divisor.is_constant())
                    .and_then(ParamPoly::as_constant)
                    .ok_or(Error::Parse {
                        pos,
                        msg: "only division by a number is supported".into(),
                    })?;
                if c.is_zero() {
                    return Err(Error::Parse {
                        pos,
                        msg: "division by zero".into(),
                    });
                }
                acc = acc.exact_div_scalar(&ParamPoly::constant(c))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<P> {
        if self.eat(&Tok::Minus) {
            return Ok(self.unary()?.neg());
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<P> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        match self.toks.get(self.at).cloned() {
            Some((pos, Tok::Num(n))) => {
                self.at += 1;
                let k = u32::try_from(&n)
                    .ok()
                    .filter(|&k| k <= MAX_EXPONENT)
                    .ok_or(Error::Parse {
                        pos,
                        msg: format!("exponent {n} too large"),
                    })?;
                Ok(base.pow(k))
            }
            _ => self.err("expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<P> {
        match self.toks.get(self.at).cloned() {
            Some((_, Tok::Num(n))) => {
                self.at += 1;
                Ok(UPoly::constant(ParamPoly::constant(Rational::integer(n))))
            }
            Some((_, Tok::Ident(name))) => {
                self.at += 1;
                if name == "x" {
                    Ok(UPoly::x())
                } else {
                    Ok(UPoly::constant(ParamPoly::named(self.vars, &name)?))
                }
            }
            Some((_, Tok::LParen)) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(_) => self.err("expected a number, a name, `x` or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression in `x` whose other names must be among `params`.
pub fn parse_poly(text: &str, params: &Arc<[String]>) -> Result<UPoly<ParamPoly>> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        vars: params,
    };
    let value = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("unexpected token");
    }
    Ok(value)
}

/// Parses a polynomial with rational coefficients.
pub fn parse_rational_poly(text: &str) -> Result<UPoly<Rational>> {
    to_rational(&parse_poly(text, &Arc::from(Vec::new()))?)
}

/// Drops the parameter layer; fails if a coefficient is not a number.
pub fn to_rational(p: &UPoly<ParamPoly>) -> Result<UPoly<Rational>> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            c.as_constant()
                .ok_or_else(|| Error::Unsupported(format!("coefficient `{c}` is not a number")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UPoly::new(coeffs))
}

#[derive(Clone, Debug)]
pub struct InputDoc {
    pub parameters: Vec<String>,
    pub polys: Vec<UPoly<ParamPoly>>,
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<InputDoc> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();

        let mut parameters: Vec<String> = Vec::new();
        for (n, line) in &lines {
            let Some(rest) = strip_key(line, &["parameters", "params"]) else {
                continue;
            };
            for name in rest
                .split([',', ' '])
                .map(str::trim)
                .filter(|s| !s.is_empty())
            {
                let valid = name
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !valid || name == "x" || parameters.iter().any(|p| p == name) {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("line {n}: `{name}` is not a valid, distinct parameter name"),
                    });
                }
                parameters.push(name.to_string());
            }
        }

        let vars: Arc<[String]> = Arc::from(parameters.clone());
        let mut polys = Vec::new();
        for (n, line) in &lines {
            if strip_key(line, &["parameters", "params"]).is_some() {
                continue;
            }
            let body = strip_key(line, &["poly"]).unwrap_or(line);
            let p = parse_poly(body, &vars).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos,
                    msg: format!("line {n}: {msg}"),
                },
                other => other,
            })?;
            polys.push(p);
        }
        if polys.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "no polynomials in input".into(),
            });
        }
        Ok(InputDoc { parameters, polys })
    }

    pub fn is_parametric(&self) -> bool {
        !self.parameters.is_empty()
    }

    pub fn rational_polys(&self) -> Result<Vec<UPoly<Rational>>> {
        self.polys.iter().map(to_rational).collect()
    }

    /// One line per entry; the digest is taken over this text.
    pub fn canonical(&self) -> String {
        let mut s = format!("parameters: {}\n", self.parameters.join(", "));
        for p in &self.polys {
            s.push_str(&format!("poly: {p}\n"));
        }
        s
    }
}

fn strip_key<'a>(line: &'a str, keys: &[&str]) -> Option<&'a str> {
    let (k, rest) = line.split_once(':')?;
    keys.contains(&k.trim()).then_some(rest)
}
