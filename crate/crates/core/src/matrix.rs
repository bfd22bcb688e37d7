//! Dense matrices over a ring, the fraction-free determinant, and the
//! companion, Bézout and x-block builders.

use std::fmt;

use crate::error::{Error, Result};
use crate::index::DeltaIndex;
use crate::ring::{Domain, Fraction, Ring};
use crate::upoly::UPoly;

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> DenseMatrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadDimensions(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(DenseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    /// All rows must have the same length; an empty list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::BadDimensions("ragged rows".into()));
        }
        let n = rows.len();
        Ok(DenseMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> DenseMatrix<S> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::BadDimensions(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::BadDimensions("shape mismatch in addition".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.rows {
            return Err(Error::BadDimensions("vector length mismatch".into()));
        }
        Ok((0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .fold(R::zero(), |acc, (i, a)| acc.add(&a.mul(self.get(i, j))))
            })
            .collect())
    }
}

impl<D: Domain> DenseMatrix<D> {
    /// Exact determinant.
    ///
    /// Cofactor expansion up to dimension 4, fraction-free Bareiss
    /// elimination above that. Pivots are the first nonzero entry of the
    /// column; a column without one makes the determinant zero.
    pub fn det(&self) -> Result<D> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows <= 4 {
            return Ok(cofactor_det(&self.row_vecs()));
        }
        bareiss_det(self.row_vecs())
    }
}

fn cofactor_det<R: Ring>(m: &[Vec<R>]) -> R {
    match m.len() {
        0 => R::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        n => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&cofactor_det(&minor));
                acc = if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

fn bareiss_det<D: Domain>(mut a: Vec<Vec<D>>) -> Result<D> {
    let n = a.len();
    let mut negate = false;
    let mut prev = D::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(D::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = if prev.is_one() {
                    v
                } else {
                    v.exact_div(&prev)?
                };
            }
            a[i][k] = D::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Companion matrix of `p = a_n x^n + ... + a_0`: ones on the subdiagonal
/// and last column `(-a_0/a_n, ..., -a_{n-1}/a_n)`.
pub fn companion<D: Domain>(p: &UPoly<D>) -> Result<DenseMatrix<Fraction<D>>> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::ZeroOrConstantPolynomial),
    };
    let lc = p.coeff(n);
    let mut m = DenseMatrix::zeros(n, n);
    for i in 1..n {
        m.set(i, i - 1, Fraction::one());
    }
    for i in 0..n {
        m.set(i, n - 1, Fraction::new(p.coeff(i).neg(), lc.clone(), 1));
    }
    Ok(m)
}

/// `p(M)` by Horner's rule; a constant `c` gives `c·I`.
pub fn eval_matrix<R: Ring>(p: &UPoly<R>, m: &DenseMatrix<R>) -> Result<DenseMatrix<R>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let id = DenseMatrix::<R>::identity(n);
    let mut acc = DenseMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m)?.add(&id.scale(c))?;
    }
    Ok(acc)
}

/// Bézout matrix `M` of `(a, b)`, with
/// `(a(x)b(y) - a(y)b(x)) / (x - y) = [y^0 .. y^{l-1}] M [x^{l-1} .. x^0]^T`
/// and `l = max(deg a, deg b)`.
///
/// Built by expanding each `a_i b_j (x^i y^j - x^j y^i)` and dividing the
/// binomial by `x - y` termwise.
pub fn bezout_matrix<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> Result<DenseMatrix<R>> {
    let l = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
    if l == 0 {
        return Err(Error::BothConstant);
    }
    // quotient[p][q] = coefficient of x^p y^q
    let mut quotient = vec![vec![R::zero(); l]; l];
    for (i, ai) in a.coeffs().iter().enumerate() {
        for (j, bj) in b.coeffs().iter().enumerate() {
            if i == j || ai.is_zero() || bj.is_zero() {
                continue;
            }
            let c = ai.mul(bj);
            // (x^i y^j - x^j y^i)/(x - y); for i < j flip the sign
            let (hi, lo, c) = if i > j { (i, j, c) } else { (j, i, c.neg()) };
            for k in 0..hi - lo {
                let (p, q) = (lo + k, hi - 1 - k);
                quotient[p][q] = quotient[p][q].add(&c);
            }
        }
    }
    let mut m = DenseMatrix::zeros(l, l);
    for r in 0..l {
        for c in 0..l {
            m.set(r, c, quotient[l - 1 - c][r].clone());
        }
    }
    Ok(m)
}

/// `h x (d0 - |delta|)` block with `x` at `(k, k)` and `-1` at `(k+1, k)`.
pub fn x_block<R: Ring>(delta: &DeltaIndex, h: usize, d0: usize) -> Result<DenseMatrix<UPoly<R>>> {
    let sum = delta.sum();
    if sum > d0 {
        return Err(Error::DeltaTooLarge { sum, d0 });
    }
    let cols = d0 - sum;
    if h < cols {
        return Err(Error::BadDimensions(format!(
            "x-block needs at least {cols} rows, got {h}"
        )));
    }
    let mut m = DenseMatrix::zeros(h, cols);
    for k in 0..cols {
        m.set(k, k, UPoly::x());
        if k + 1 < h {
            m.set(k + 1, k, UPoly::constant(R::one().neg()));
        }
    }
    Ok(m)
}

impl<R: Ring> fmt::Display for DenseMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for DenseMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}
