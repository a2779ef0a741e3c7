//! Exact integer and rational matrices and integer polynomials.
//!
//! Everything here is arbitrary precision; no floating point is used
//! anywhere. Characteristic polynomials are computed by the
//! Faddeev-LeVerrier recurrence over the rationals and cross-checked in
//! tests against determinant evaluations.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense matrix of arbitrary-precision integers, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut m = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Dense matrix of exact rationals, row major. `BigRational` keeps
/// entries normalized with positive denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: Vec<Vec<i64>>) -> Self {
        IntMatrix::from_rows(rows).to_rat()
    }

    pub fn transpose(&self) -> Self {
        let mut m = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch);
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch);
        }
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        Ok(out)
    }

    pub fn neg(&self) -> RatMatrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = -x.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Exact determinant by Gaussian elimination with pivoting. The empty
    /// matrix has determinant 1.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return Ok(Rat::zero()),
            };
            if pivot != col {
                for j in 0..n {
                    let tmp = m[(pivot, j)].clone();
                    m[(pivot, j)] = m[(col, j)].clone();
                    m[(col, j)] = tmp;
                }
                det = -det;
            }
            let p = m[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &p;
                for j in col..n {
                    let sub = &factor * &m[(col, j)];
                    m[(r, j)] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss-Jordan; the product with the input is
    /// asserted to be the identity.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    let tmp = m[(pivot, j)].clone();
                    m[(pivot, j)] = m[(col, j)].clone();
                    m[(col, j)] = tmp;
                    let tmp = inv[(pivot, j)].clone();
                    inv[(pivot, j)] = inv[(col, j)].clone();
                    inv[(col, j)] = tmp;
                }
            }
            let p = m[(col, col)].clone();
            for j in 0..n {
                m[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in 0..n {
                    let sub = &factor * &m[(col, j)];
                    m[(r, j)] -= sub;
                    let sub = &factor * &inv[(col, j)];
                    inv[(r, j)] -= sub;
                }
            }
        }
        debug_assert_eq!(self.mul(&inv).unwrap(), RatMatrix::identity(n));
        Ok(inv)
    }

    /// Coefficients of `det(xI - M)`, ascending degree, by the
    /// Faddeev-LeVerrier recurrence. Always monic of degree `n`. Integer
    /// matrices take a pure-integer path (the recurrence stays integral),
    /// everything else runs over the rationals.
    pub fn char_poly_rational(&self) -> Result<Vec<Rat>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if let Some(int) = self.to_int() {
            if let Some(coeffs) = int_char_poly(&int) {
                return Ok(coeffs.into_iter().map(BigRational::from_integer).collect());
            }
        }
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        if n == 0 {
            return Ok(coeffs);
        }
        let mut mk = self.clone();
        for k in 1..=n {
            if k > 1 {
                // M_k = M (M_{k-1} + c_{n-k+1} I)
                let mut shifted = mk.clone();
                for i in 0..n {
                    let c = coeffs[n - k + 1].clone();
                    shifted[(i, i)] += c;
                }
                mk = self.mul(&shifted)?;
            }
            let c = -(mk.trace() / rat(k as i64));
            coeffs[n - k] = c;
        }
        Ok(coeffs)
    }

    /// Integer characteristic polynomial, or the rational coefficients as
    /// a flagged error when they are not integral.
    pub fn char_poly(&self) -> Result<IntPolynomial> {
        let coeffs = self.char_poly_rational()?;
        rational_coeffs_to_int(&coeffs)
            .ok_or_else(|| Error::NonIntegralCoxeter(format_rat_coeffs(&coeffs)))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.to_integer()).collect(),
        })
    }
}

/// Faddeev-LeVerrier over the integers; every intermediate matrix and
/// every trace division is integral for an integer input. Returns `None`
/// if a division fails (which would indicate a non-integer input slipped
/// through), letting the caller fall back to rational arithmetic.
fn int_char_poly(m: &IntMatrix) -> Option<Vec<BigInt>> {
    let n = m.rows;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return Some(coeffs);
    }
    let mul = |a: &IntMatrix, b: &IntMatrix| -> IntMatrix {
        let mut out = IntMatrix::zero(n, n);
        for i in 0..n {
            for k in 0..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = &a[(i, k)] * &b[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    };
    let mut mk = m.clone();
    for k in 1..=n {
        if k > 1 {
            let mut shifted = mk.clone();
            for i in 0..n {
                let c = coeffs[n - k + 1].clone();
                shifted[(i, i)] += c;
            }
            mk = mul(m, &shifted);
        }
        let trace: BigInt = (0..n).map(|i| mk[(i, i)].clone()).sum();
        let divisor = BigInt::from(k as i64);
        if (&trace % &divisor) != BigInt::zero() {
            return None;
        }
        coeffs[n - k] = -(trace / divisor);
    }
    Some(coeffs)
}

pub fn rational_coeffs_to_int(coeffs: &[Rat]) -> Option<IntPolynomial> {
    if coeffs.iter().all(|c| c.is_integer()) {
        Some(IntPolynomial::new(
            coeffs.iter().map(|c| c.to_integer()).collect(),
        ))
    } else {
        None
    }
}

pub fn format_rat_coeffs(coeffs: &[Rat]) -> String {
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Integer-coefficient polynomial, coefficients ascending by degree with
/// no trailing zeros; the zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: Vec<i64>) -> Self {
        IntPolynomial::new(coeffs.into_iter().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(vec![1])
    }

    pub fn x() -> Self {
        IntPolynomial::from_i64(vec![0, 1])
    }

    /// `x^n + sign` for `sign = ±1`.
    pub fn x_power_plus(n: usize, sign: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(sign);
        coeffs[n] = BigInt::one();
        IntPolynomial::new(coeffs)
    }

    /// `1 + x + … + x^{m-1}`.
    pub fn geometric(m: usize) -> Self {
        IntPolynomial::new(vec![BigInt::one(); m])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPolynomial::new(out)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, e: usize) -> IntPolynomial {
        let mut out = IntPolynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Coefficient sequence reversed: `x^deg · p(1/x)`.
    pub fn reciprocal(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().rev().cloned().collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact Lagrange interpolation through integer points, requiring integer
/// coefficients in the result.
pub fn lagrange_fit(points: &[(BigInt, BigInt)]) -> Result<IntPolynomial> {
    for (i, (x, _)) in points.iter().enumerate() {
        for (y, _) in points.iter().skip(i + 1) {
            if x == y {
                return Err(Error::DuplicateAbscissa(x.to_string()));
            }
        }
    }
    if points.is_empty() {
        return Ok(IntPolynomial::zero());
    }
    // accumulate Σ_i y_i Π_{j≠i} (x - x_j)/(x_i - x_j) over the rationals
    let n = points.len();
    let mut acc = vec![Rat::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut denom = Rat::one();
        let mut poly = vec![Rat::one()];
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            denom *= BigRational::from_integer(xi - xj);
            // multiply the running product by (x - x_j)
            let mut next = vec![Rat::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(xj.clone());
            }
            poly = next;
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (k, c) in poly.into_iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    rational_coeffs_to_int(&acc).ok_or_else(|| Error::NonIntegralFit(format_rat_coeffs(&acc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn det_examples() {
        assert_eq!(RatMatrix::identity(3).det().unwrap(), rat(1));
        let c3 = RatMatrix::from_int_rows(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(c3.det().unwrap(), rat(2));
        let singular = RatMatrix::from_int_rows(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(singular.det().unwrap(), rat(0));
        assert!(RatMatrix::zero(2, 3).det().is_err());
    }

    #[test]
    fn inverse_examples() {
        let id = RatMatrix::identity(4);
        assert_eq!(id.inverse().unwrap(), id);
        let m = RatMatrix::from_int_rows(vec![vec![1, 1], vec![0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, RatMatrix::from_int_rows(vec![vec![1, -1], vec![0, 1]]));
        let c3 = RatMatrix::from_int_rows(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let inv = c3.inverse().unwrap();
        assert_eq!(c3.mul(&inv).unwrap(), RatMatrix::identity(3));
        assert!(RatMatrix::from_int_rows(vec![vec![1, 1], vec![1, 1]])
            .inverse()
            .is_err());
    }

    #[test]
    fn char_poly_examples() {
        let id2 = RatMatrix::identity(2);
        assert_eq!(
            id2.char_poly().unwrap(),
            IntPolynomial::from_i64(vec![1, -2, 1])
        );
        let cox_a2 = RatMatrix::from_int_rows(vec![vec![-1, 1], vec![-1, 0]]);
        assert_eq!(
            cox_a2.char_poly().unwrap(),
            IntPolynomial::from_i64(vec![1, 1, 1])
        );
        let zero3 = RatMatrix::zero(3, 3);
        assert_eq!(
            zero3.char_poly().unwrap(),
            IntPolynomial::from_i64(vec![0, 0, 0, 1])
        );
        // empty matrix: char poly is 1
        assert_eq!(
            RatMatrix::zero(0, 0).char_poly().unwrap(),
            IntPolynomial::one()
        );
    }

    #[test]
    fn lagrange_examples() {
        let pts = |v: &[(i64, i64)]| -> Vec<(BigInt, BigInt)> {
            v.iter()
                .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
                .collect()
        };
        assert_eq!(
            lagrange_fit(&pts(&[(2, 1), (3, 1), (5, 1)])).unwrap(),
            IntPolynomial::one()
        );
        assert_eq!(
            lagrange_fit(&pts(&[(2, 2), (3, 3), (5, 5)])).unwrap(),
            IntPolynomial::x()
        );
        assert_eq!(
            lagrange_fit(&pts(&[(2, 4), (3, 9), (5, 25), (7, 49)])).unwrap(),
            IntPolynomial::from_i64(vec![0, 0, 1])
        );
        assert!(matches!(
            lagrange_fit(&pts(&[(2, 1), (2, 2)])),
            Err(Error::DuplicateAbscissa(_))
        ));
        // half-integer fit is rejected
        assert!(matches!(
            lagrange_fit(&pts(&[(0, 0), (2, 1)])),
            Err(Error::NonIntegralFit(_))
        ));
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(
            IntPolynomial::from_i64(vec![1, 0, 0, 1]).to_string(),
            "x^3 + 1"
        );
        assert_eq!(
            IntPolynomial::from_i64(vec![1, 1, 1]).to_string(),
            "x^2 + x + 1"
        );
        assert_eq!(
            IntPolynomial::from_i64(vec![-1, 2, -3]).to_string(),
            "-3x^2 + 2x - 1"
        );
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn closed_form_building_blocks() {
        let p = IntPolynomial::x_power_plus(3, 1);
        assert_eq!(p.to_string(), "x^3 + 1");
        assert_eq!(
            p.mul(&p).coeffs(),
            IntPolynomial::from_i64(vec![1, 0, 0, 2, 0, 0, 1]).coeffs()
        );
        assert_eq!(IntPolynomial::geometric(3).to_string(), "x^2 + x + 1");
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn rat_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec(small_rat(), n * n).prop_map(move |data| {
            let rows = (0..n).map(|i| data[i * n..(i + 1) * n].to_vec()).collect();
            RatMatrix::from_rows(rows)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        // char_poly evaluated anywhere must agree with det(xI - M)
        #[test]
        fn char_poly_matches_det_oracle(m in rat_matrix(6), x in small_rat()) {
            let coeffs = m.char_poly_rational().unwrap();
            let value: Rat = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut pow = Rat::one();
                    for _ in 0..i {
                        pow *= &x;
                    }
                    c * pow
                })
                .sum();
            let mut shifted = m.neg();
            for i in 0..6 {
                shifted[(i, i)] += x.clone();
            }
            prop_assert_eq!(value, shifted.det().unwrap());
        }

        #[test]
        fn det_is_multiplicative(a in rat_matrix(4), b in rat_matrix(4)) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        }

        #[test]
        fn inverse_is_involutive(m in rat_matrix(4)) {
            if let Ok(inv) = m.inverse() {
                prop_assert_eq!(inv.inverse().unwrap(), m);
            }
        }

        #[test]
        fn lagrange_recovers_integer_polynomials(coeffs in proptest::collection::vec(-9i64..=9, 1..=5)) {
            let poly = IntPolynomial::from_i64(coeffs);
            let points: Vec<(BigInt, BigInt)> = (0..6)
                .map(|x| {
                    let x = BigInt::from(x);
                    let y = poly.eval_int(&x);
                    (x, y)
                })
                .collect();
            let fitted = lagrange_fit(&points).unwrap();
            prop_assert_eq!(&fitted, &poly);
            for (x, y) in points {
                prop_assert_eq!(fitted.eval_int(&x), y);
            }
        }
    }
}
