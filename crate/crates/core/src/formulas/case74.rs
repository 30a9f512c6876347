//! Triple {1234, 1243, 3412}, classified by the leftmost ascent and the
//! initial descent sequence.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{big, binom, pow2};
use crate::error::Error;

fn agree(what: &str, n: i64, x: BigInt, y: BigInt) -> Result<BigInt, Error> {
    if x == y {
        Ok(x)
    } else {
        Err(Error::Integrity(format!("74:{what} at n={n}: {x} vs {y}")))
    }
}

/// First letter at most `n - 2`, leftmost ascent top `n`, initial descent
/// not consecutive. Triple sum over bottom, first letter and ascent index.
pub fn b_sum(n: i64) -> BigInt {
    if n < 5 {
        return BigInt::zero();
    }
    let mut s = BigInt::zero();
    for a in 1..=n - 4 {
        for b in a + 2..=n - 2 {
            for m in 2..=b - a {
                s += binom(b - a - 1, m - 2) * (big((b - m + 1) * (n - b - 1)) + binom(n - b - 2, 2));
            }
        }
    }
    s
}

pub fn b_closed(n: i64) -> BigInt {
    if n < 5 {
        return BigInt::zero();
    }
    (big(n - 2) * (big(3) * pow2(n) - big((n - 1) * (n * n - 3 * n + 12)))) / 12
}

pub fn b(n: i64) -> Result<BigInt, Error> {
    agree("b", n, b_sum(n), b_closed(n))
}

/// Count of the second kind of choice for the letters below the ascent bottom.
fn f(n: i64, a: i64, m: i64) -> BigInt {
    big(a) * binom(n - m + 1, a + 1) - big(a + 1) * binom(n - m, a) + 1
}

/// Same as `b` but with a consecutive initial descent.
pub fn ids2_closed(n: i64) -> BigInt {
    if n < 3 {
        return BigInt::zero();
    }
    big(n - 5) * pow2(n - 1) + binom(n + 1, 2) + 3
}

pub fn ids2_sum(n: i64) -> BigInt {
    if n < 3 {
        return BigInt::zero();
    }
    let mut s = pow2(n - 1) - n;
    for a in 1..=n - 2 {
        for m in 1..=n - a - 1 {
            s += f(n, a, m);
        }
    }
    s
}

pub fn ids2(n: i64) -> Result<BigInt, Error> {
    agree("ids2", n, ids2_sum(n), ids2_closed(n))
}

/// First letter at most `n - 2` and leftmost ascent top `n - 1`.
pub fn d_closed(n: i64) -> BigInt {
    if n < 3 {
        return BigInt::zero();
    }
    big(n + 8) * pow2(n - 3) + 1 - binom(n + 2, 2) - big((n - 1) * (n - 2) * (2 * n - 3) / 6)
}

pub fn d_sum(n: i64) -> BigInt {
    if n < 3 {
        return BigInt::zero();
    }
    let mut s = BigInt::zero();
    for a in 1..=n - 4 {
        for b in 2..=n - 2 {
            for m in 2..=b - a {
                s += binom(b - a - 1, m - 2) * (n - m - 1);
            }
        }
    }
    for a in 1..=n - 2 {
        for m in 1..=n - a - 1 {
            for t in a + m..=n - 1 {
                s += binom(n - t + a - 1, a - 1);
            }
        }
    }
    s
}

pub fn d(n: i64) -> Result<BigInt, Error> {
    agree("d", n, d_sum(n), d_closed(n))
}

/// `a_n` from the recurrence through `b` and the partial sums of `d`.
pub fn a_by_classes(n_max: usize) -> Result<Vec<BigInt>, Error> {
    let mut a = vec![BigInt::from(1); n_max.min(1) + 1];
    for n in 2..=n_max as i64 {
        let mut v = &a[n as usize - 1] + big(2 * n - 9) * pow2(n - 2) + 3 + binom(n + 1, 2) + b(n)?;
        for m in 0..=n - 3 {
            v += d(n - m)?;
        }
        a.push(v);
    }
    Ok(a)
}

/// `a_n` from the recurrence with polynomial and exponential terms only.
pub fn a_closed(n_max: usize) -> Vec<BigInt> {
    let mut a = vec![BigInt::from(1); n_max.min(1) + 1];
    for n in 2..=n_max as i64 {
        let poly = big(n - 1) * big(n * n * n - 3 * n * n + 14 * n - 6) / 6;
        let v = &a[n as usize - 1] + big(n - 1) * pow2(n) - poly;
        a.push(v);
    }
    a
}

pub fn a_upto(n_max: usize) -> Result<Vec<BigInt>, Error> {
    let x = a_by_classes(n_max)?;
    let y = a_closed(n_max);
    for n in 0..=n_max {
        agree("a", n as i64, x[n].clone(), y[n].clone())?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(b(5).unwrap(), big(2));
        assert_eq!(b(4).unwrap(), big(0));
        assert_eq!(d(3).unwrap(), big(1));
        assert_eq!(ids2(3).unwrap(), big(1));
    }

    #[test]
    fn dual_forms_agree() {
        for n in 0..=20 {
            b(n).unwrap();
            ids2(n).unwrap();
            d(n).unwrap();
        }
        let a = a_upto(20).unwrap();
        let f = crate::catalog::gf_catalog(74, 20).unwrap().to_integers().unwrap();
        assert_eq!(a, f);
    }
}
