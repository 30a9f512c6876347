//! Coefficient fields for truncated power series.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A field usable as series coefficients.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;

    /// A square root inside the field, if one exists.
    fn sqrt_exact(&self) -> Option<Self>;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| BigRational::new(n, d))
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn sqrt_exact(&self) -> Option<Self> {
                (*self >= 0.0).then(|| self.sqrt())
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

/// `a + b * sqrt(D)` over a base field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt<T, const D: i64> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar, const D: i64> QuadExt<T, D> {
    pub fn new(a: T, b: T) -> Self {
        QuadExt { a, b }
    }

    pub fn from_base(a: T) -> Self {
        QuadExt { a, b: T::zero() }
    }

    /// The adjoined root `sqrt(D)`.
    pub fn root() -> Self {
        QuadExt { a: T::zero(), b: T::one() }
    }

    /// Galois conjugate `a - b * sqrt(D)`.
    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone() }
    }

    /// `a^2 - D b^2`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - T::from_i64(D) * self.b.clone() * self.b.clone()
    }

    /// The base-field value, if the irrational part vanishes.
    pub fn to_base(&self) -> Option<T> {
        self.b.is_zero().then(|| self.a.clone())
    }
}

impl<T: Scalar, const D: i64> fmt::Debug for QuadExt<T, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}*sqrt({D}))", self.a, self.b)
    }
}

impl<T: Scalar, const D: i64> Add for QuadExt<T, D> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QuadExt { a: self.a + o.a, b: self.b + o.b }
    }
}

impl<T: Scalar, const D: i64> Sub for QuadExt<T, D> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QuadExt { a: self.a - o.a, b: self.b - o.b }
    }
}

impl<T: Scalar, const D: i64> Mul for QuadExt<T, D> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let a = self.a.clone() * o.a.clone() + T::from_i64(D) * self.b.clone() * o.b.clone();
        let b = self.a * o.b + self.b * o.a;
        QuadExt { a, b }
    }
}

impl<T: Scalar, const D: i64> Div for QuadExt<T, D> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let n = o.norm();
        let num = self * o.conj();
        QuadExt { a: num.a / n.clone(), b: num.b / n }
    }
}

impl<T: Scalar, const D: i64> Neg for QuadExt<T, D> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt { a: -self.a, b: -self.b }
    }
}

impl<T: Scalar, const D: i64> Zero for QuadExt<T, D> {
    fn zero() -> Self {
        QuadExt { a: T::zero(), b: T::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Scalar, const D: i64> One for QuadExt<T, D> {
    fn one() -> Self {
        QuadExt { a: T::one(), b: T::zero() }
    }
}

impl<T: Scalar, const D: i64> Scalar for QuadExt<T, D> {
    fn from_i64(v: i64) -> Self {
        QuadExt::from_base(T::from_i64(v))
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.b.is_zero() {
            if let Some(c) = self.a.sqrt_exact() {
                return Some(QuadExt::from_base(c));
            }
            let d = (self.a.clone() / T::from_i64(D)).sqrt_exact()?;
            return Some(QuadExt { a: T::zero(), b: d });
        }
        // (c + d r)^2 = a + b r gives c^2 + D d^2 = a and 2 c d = b.
        let s = self.norm().sqrt_exact()?;
        let two = T::from_i64(2);
        for c2 in [(self.a.clone() + s.clone()) / two.clone(), (self.a.clone() - s.clone()) / two.clone()] {
            if let Some(c) = c2.sqrt_exact() {
                if !c.is_zero() {
                    let d = self.b.clone() / (two.clone() * c.clone());
                    let cand = QuadExt { a: c, b: d };
                    if cand.clone() * cand.clone() == *self {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q5 = QuadExt<BigRational, 5>;

    fn q(a: i64, b: i64) -> Q5 {
        QuadExt::new(BigRational::from_i64(a), BigRational::from_i64(b))
    }

    #[test]
    fn rational_sqrt() {
        let r = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(r.sqrt_exact(), Some(BigRational::new(BigInt::from(3), BigInt::from(2))));
        assert_eq!(BigRational::from_i64(2).sqrt_exact(), None);
        assert_eq!(BigRational::from_i64(-4).sqrt_exact(), None);
    }

    #[test]
    fn field_ops() {
        let x = q(3, 1);
        let y = q(1, -2);
        assert_eq!(x.clone() * y.clone() / y.clone(), x);
        assert_eq!(q(0, 1) * q(0, 1), q(5, 0));
        assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
    }

    #[test]
    fn quad_sqrt() {
        let r = q(1, 2);
        assert_eq!((r.clone() * r.clone()).sqrt_exact().map(|s| s.clone() * s), Some(r.clone() * r));
        assert_eq!(q(5, 0).sqrt_exact(), Some(q(0, 1)));
        assert_eq!(q(2, 0).sqrt_exact(), None);
    }
}
