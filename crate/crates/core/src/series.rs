//! Truncated formal power series over a [`Scalar`] field.
//!
//! A series of order `N` stores the coefficients of `x^0..=x^N`. Binary
//! operations truncate to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Error;
use crate::scalar::{QuadExt, Scalar};

#[derive(Clone, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Series { coeffs }
    }

    pub fn from_ints(c: &[i64], order: usize) -> Self {
        Series::from_coeffs(c.iter().take(order + 1).map(|&v| T::from_i64(v)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Series::from_coeffs(Vec::new(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Series::from_coeffs(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Series::constant(T::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::from_ints(&[0, 1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise order {} to {order}", self.order());
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Index of the first nonzero coefficient, or `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn scale(&self, c: &T) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![T::zero(); k.min(n + 1)];
        coeffs.extend(self.coeffs.iter().take((n + 1).saturating_sub(k)).cloned());
        Series { coeffs }
    }

    /// Divides by `x^k`. The first `k` coefficients must vanish; the order drops by `k`.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, Error> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::Precondition(format!("series is not divisible by x^{k}")));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Series<U> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Series::one(self.order());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Result<Self, Error> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let mut r: Vec<T> = Vec::with_capacity(n + 1);
        r.push(T::one() / c0.clone());
        for k in 1..=n {
            let mut s = T::zero();
            for j in 1..=k {
                s = s + self.coeffs[j].clone() * r[k - j].clone();
            }
            r.push(-s / c0.clone());
        }
        Ok(Series { coeffs: r })
    }

    /// Quotient with the constant term of `den` required to be nonzero.
    pub fn div(&self, den: &Self) -> Result<Self, Error> {
        Ok(self * &den.inv()?)
    }

    /// Quotient that first cancels the common power of `x`.
    /// The order drops by the valuation of `den`.
    pub fn div_cancel(&self, den: &Self) -> Result<Self, Error> {
        let v = den.valuation().ok_or(Error::ZeroConstantTerm)?;
        self.div_x_pow(v)?.div(&den.div_x_pow(v)?)
    }

    /// Square root with the given constant term sign: the root whose constant
    /// term is `sqrt(c0)` as returned by the scalar field.
    pub fn sqrt(&self) -> Result<Self, Error> {
        let c0 = self.coeffs[0].clone();
        let r0 = c0.sqrt_exact().ok_or_else(|| Error::NotASquare(format!("{c0:?}")))?;
        if r0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let two_r0 = T::from_i64(2) * r0.clone();
        let mut r: Vec<T> = Vec::with_capacity(n + 1);
        r.push(r0);
        for k in 1..=n {
            let mut s = self.coeffs[k].clone();
            for j in 1..k {
                s = s - r[j].clone() * r[k - j].clone();
            }
            r.push(s / two_r0.clone());
        }
        Ok(Series { coeffs: r })
    }

    /// Evaluates `sum_k p[k] * f^k` by Horner's rule.
    pub fn compose_poly(p: &[Series<T>], f: &Series<T>) -> Series<T> {
        let order = p.iter().map(|s| s.order()).chain([f.order()]).min().unwrap_or(0);
        let mut acc = Series::zero(order);
        for c in p.iter().rev() {
            acc = &(&acc * f) + c;
        }
        acc
    }
}

impl<T: Scalar, const D: i64> Series<QuadExt<T, D>> {
    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }

    /// Coefficients of `1` and of `sqrt(D)`.
    pub fn split(&self) -> (Series<T>, Series<T>) {
        (self.map(|c| c.a.clone()), self.map(|c| c.b.clone()))
    }

    /// Projection to the base field, failing if the irrational part is nonzero.
    pub fn project(&self) -> Result<Series<T>, Error> {
        let (a, b) = self.split();
        match b.valuation() {
            None => Ok(a),
            Some(i) => Err(Error::Integrity(format!("sqrt({D}) component is nonzero at x^{i}"))),
        }
    }

    pub fn lift(s: &Series<T>) -> Self {
        s.map(|c| QuadExt::from_base(c.clone()))
    }
}

impl Series<BigRational> {
    /// Coefficients as integers, failing on the first non-integer.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, Error> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonInteger { index: i, value: c.to_string() })
                }
            })
            .collect()
    }
}

impl<T: fmt::Debug> fmt::Debug for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series{:?}", self.coeffs)
    }
}

impl<'a, T: Scalar> Add<&'a Series<T>> for &'a Series<T> {
    type Output = Series<T>;
    fn add(self, o: &Series<T>) -> Series<T> {
        let n = self.order().min(o.order());
        Series { coeffs: (0..=n).map(|i| self.coeffs[i].clone() + o.coeffs[i].clone()).collect() }
    }
}

impl<'a, T: Scalar> Sub<&'a Series<T>> for &'a Series<T> {
    type Output = Series<T>;
    fn sub(self, o: &Series<T>) -> Series<T> {
        let n = self.order().min(o.order());
        Series { coeffs: (0..=n).map(|i| self.coeffs[i].clone() - o.coeffs[i].clone()).collect() }
    }
}

impl<'a, T: Scalar> Mul<&'a Series<T>> for &'a Series<T> {
    type Output = Series<T>;
    fn mul(self, o: &Series<T>) -> Series<T> {
        let n = self.order().min(o.order());
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs }
    }
}

impl<T: Scalar> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr<Series<T>> for Series<T> {
            type Output = Series<T>;
            fn $m(self, o: Series<T>) -> Series<T> {
                (&self).$m(&o)
            }
        }
        impl<'a, T: Scalar> $tr<&'a Series<T>> for Series<T> {
            type Output = Series<T>;
            fn $m(self, o: &Series<T>) -> Series<T> {
                (&self).$m(o)
            }
        }
        impl<'a, T: Scalar> $tr<Series<T>> for &'a Series<T> {
            type Output = Series<T>;
            fn $m(self, o: Series<T>) -> Series<T> {
                self.$m(&o)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<T: Scalar> Neg for Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        -&self
    }
}

/// Catalan series from the closed form `(1 - sqrt(1 - 4x)) / (2x)`, checked
/// against the convolution recurrence.
pub fn catalan_series<T: Scalar>(order: usize) -> Result<Series<T>, Error> {
    let closed = catalan_closed_form::<T>(order)?;
    let conv = catalan_convolution::<T>(order);
    if closed != conv {
        return Err(Error::Integrity("Catalan closed form and convolution disagree".into()));
    }
    Ok(closed)
}

pub fn catalan_closed_form<T: Scalar>(order: usize) -> Result<Series<T>, Error> {
    let n = order + 1;
    let disc = Series::<T>::from_ints(&[1, -4], n).sqrt()?;
    let num = &Series::one(n) - &disc;
    num.div_cancel(&Series::from_ints(&[0, 2], n))
}

pub fn catalan_convolution<T: Scalar>(order: usize) -> Series<T> {
    let mut c: Vec<T> = vec![T::one()];
    for m in 1..=order {
        let mut s = T::zero();
        for k in 0..m {
            s = s + c[k].clone() * c[m - 1 - k].clone();
        }
        c.push(s);
    }
    Series::from_coeffs(c, order)
}

/// How the polynomial relation is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquationForm {
    /// `F = sum_k p_k F^k`.
    FixedPoint,
    /// `0 = sum_k p_k F^k`.
    Root,
}

/// A polynomial equation in `F` with series coefficients `p_0, p_1, ...`.
#[derive(Clone, Debug)]
pub struct AlgebraicEquation<T> {
    pub poly: Vec<Series<T>>,
    pub form: EquationForm,
    /// Constant term of the wanted solution.
    pub f0: T,
}

impl<T: Scalar> AlgebraicEquation<T> {
    /// Coefficients of the equivalent root form.
    pub fn root_form(&self) -> Vec<Series<T>> {
        let mut p = self.poly.clone();
        if self.form == EquationForm::FixedPoint {
            let order = p.iter().map(|s| s.order()).min().unwrap_or(0);
            while p.len() < 2 {
                p.push(Series::zero(order));
            }
            p[1] = &p[1] - &Series::one(p[1].order());
        }
        p
    }

    pub fn order(&self) -> usize {
        self.poly.iter().map(|s| s.order()).min().unwrap_or(0)
    }

    /// `G(F)` for the root form `G`.
    pub fn residual(&self, f: &Series<T>) -> Series<T> {
        Series::compose_poly(&self.root_form(), f)
    }

    fn derivative(p: &[Series<T>]) -> Vec<Series<T>> {
        p.iter().enumerate().skip(1).map(|(k, c)| c.scale(&T::from_i64(k as i64))).collect()
    }

    fn check_start(&self) -> Result<T, Error> {
        let g = self.root_form();
        let at0 = |p: &[Series<T>]| {
            p.iter().rev().fold(T::zero(), |acc, c| acc * self.f0.clone() + c.coeff(0))
        };
        if !at0(&g).is_zero() {
            return Err(Error::NotARoot(format!("{:?}", self.f0)));
        }
        let j0 = at0(&Self::derivative(&g));
        if j0.is_zero() {
            return Err(Error::NonSimpleRoot);
        }
        Ok(j0)
    }

    /// Solution by extracting one coefficient at a time.
    pub fn solve_by_extraction(&self) -> Result<Series<T>, Error> {
        let j0 = self.check_start()?;
        let g = self.root_form();
        let order = self.order();
        let mut f = Series::constant(self.f0.clone(), order);
        for n in 1..=order {
            let trunc: Vec<Series<T>> = g.iter().map(|c| c.truncate(n)).collect();
            let r = Series::compose_poly(&trunc, &f.truncate(n)).coeff(n);
            f.coeffs[n] = -r / j0.clone();
        }
        Ok(f)
    }

    /// Solution by Newton iteration, which doubles the number of correct terms per step.
    pub fn solve_by_newton(&self) -> Result<Series<T>, Error> {
        self.check_start()?;
        let g = self.root_form();
        let dg = Self::derivative(&g);
        let order = self.order();
        let mut f = Series::constant(self.f0.clone(), order);
        let mut correct = 1usize;
        while correct <= order {
            let step = Series::compose_poly(&g, &f).div(&Series::compose_poly(&dg, &f))?;
            f = &f - &step;
            correct *= 2;
        }
        if !self.residual(&f).is_zero() {
            return Err(Error::Integrity("Newton iteration did not converge".into()));
        }
        Ok(f)
    }
}

/// Solves by coefficient extraction and confirms the result by Newton iteration.
pub fn solve_algebraic<T: Scalar>(eq: &AlgebraicEquation<T>) -> Result<Series<T>, Error> {
    let a = eq.solve_by_extraction()?;
    let b = eq.solve_by_newton()?;
    if a != b {
        return Err(Error::Integrity("extraction and Newton iteration disagree".into()));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RatSeries;
    use num_traits::One;

    fn ints(s: &RatSeries) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|v| v.try_into().unwrap()).collect()
    }

    #[test]
    fn catalan_numbers() {
        let c: RatSeries = catalan_series(10).unwrap();
        assert_eq!(ints(&c), vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
        let x = RatSeries::x(10);
        assert_eq!(&(&x * &c) * &c, &c - &RatSeries::one(10));
    }

    #[test]
    fn division_and_sqrt() {
        let one_minus_x = RatSeries::from_ints(&[1, -1], 8);
        assert_eq!(ints(&RatSeries::one(8).div(&one_minus_x).unwrap()), vec![1; 9]);
        assert_eq!(RatSeries::one(8).div(&RatSeries::x(8)), Err(Error::ZeroConstantTerm));
        let s = RatSeries::from_ints(&[1, 2, 1], 8).sqrt().unwrap();
        assert_eq!(ints(&s), vec![1, 1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn float_instantiation() {
        let c: Series<f64> = catalan_closed_form(8).unwrap();
        assert!((c.coeff(8) - 1430.0).abs() < 1e-6);
    }

    #[test]
    fn algebraic_catalan() {
        // F = 1 + x F^2
        let n = 12;
        let eq = AlgebraicEquation {
            poly: vec![RatSeries::one(n), RatSeries::zero(n), RatSeries::x(n)],
            form: EquationForm::FixedPoint,
            f0: BigRational::one(),
        };
        assert_eq!(solve_algebraic(&eq).unwrap(), catalan_convolution(n));
    }

    #[test]
    fn non_simple_root_rejected() {
        // (F - 1)^2 = x has no power series solution through F(0) = 1.
        let n = 6;
        let eq = AlgebraicEquation {
            poly: vec![RatSeries::from_ints(&[1, -1], n), RatSeries::from_ints(&[-2], n), RatSeries::one(n)],
            form: EquationForm::Root,
            f0: BigRational::one(),
        };
        assert_eq!(eq.solve_by_extraction(), Err(Error::NonSimpleRoot));
        let eq = AlgebraicEquation { f0: BigRational::from_i64(3), ..eq };
        assert!(matches!(eq.solve_by_extraction(), Err(Error::NotARoot(_))));
    }
}
