//! Triple {1234, 3412, 4123}, split by the number of left-right maxima.
//!
//! The auxiliary class is Av(123, 3412), refined by the length `l` of the
//! final decreasing run (from the rightmost ascent top to the end).

use num_bigint::BigInt;
use num_traits::Zero;

use super::{big, binom, pow2, range_err, times_pow2};
use crate::error::Error;
use crate::RatSeries;

/// Avoiders of {123, 3412} with final decreasing run of length `l` and leftmost
/// ascent top `n`, for `1 <= l <= n - 1`.
pub fn e_prime(n: i64, l: i64) -> Result<BigInt, Error> {
    if n < 2 || l < 1 || l > n - 1 {
        return Err(range_err("e'(n,l)", &[n, l]));
    }
    if l == n - 1 {
        return Ok(big(n - 1));
    }
    let mut s = binom(n - 1, l - 1);
    for b in 2..=l {
        for i in 1..=b - 1 {
            for r in l + 1 - i..=n - 1 - b {
                s += binom(r - 2 - l + b, b - 1 - i);
            }
        }
    }
    for b in l + 1..=n - 1 {
        for i in 1..=l {
            for r in l + 1 - i..=n - 1 - b {
                s += binom(r - 2 - l + b, b - 1 - i);
            }
        }
    }
    Ok(s)
}

/// Avoiders of {123, 3412} with final decreasing run of length `l`, `1 <= l <= n`.
pub fn e_nl(n: i64, l: i64) -> Result<BigInt, Error> {
    if n < 1 || l < 1 || l > n {
        return Err(range_err("e(n,l)", &[n, l]));
    }
    if l == n {
        return Ok(big(1));
    }
    (0..=n - 1 - l).map(|m| e_prime(n - m, l)).sum()
}

/// Avoiders of {123, 3412} whose last letter ends no occurrence of 231, with
/// final decreasing run of length `l`.
pub fn e_star(n: i64, l: i64) -> Result<BigInt, Error> {
    if n < 1 || l < 1 || l > n {
        return Err(range_err("e*(n,l)", &[n, l]));
    }
    Ok(if l == n { big(1) } else { pow2(n - l - 1) })
}

/// Coefficients of the rational generating function of Av(123, 3412).
pub fn e_series(n_max: usize) -> Result<Vec<BigInt>, Error> {
    let m = n_max;
    let num = RatSeries::from_ints(&[0, 1, -4, 7, -5, 2], m);
    let den = RatSeries::from_ints(&[1, -1], m).pow(4) * RatSeries::from_ints(&[1, -2], m);
    let e = RatSeries::one(m) + num.div(&den)?;
    e.to_integers()
}

/// |Av_n(123, 3412)| from the run-length refinement, checked against the series.
pub fn e_upto(n_max: usize) -> Result<Vec<BigInt>, Error> {
    let series = e_series(n_max)?;
    let mut out = vec![big(1)];
    for n in 1..=n_max as i64 {
        let v: BigInt = (1..=n).map(|l| e_nl(n, l)).sum::<Result<BigInt, Error>>()?;
        if v != series[n as usize] {
            return Err(Error::Integrity(format!("149:e at n={n}: {v} vs series {}", series[n as usize])));
        }
        out.push(v);
    }
    Ok(out)
}

fn shared_triple(n: i64) -> BigInt {
    let mut s = BigInt::zero();
    for a in 2..=n - 3 {
        for l in 1..=n - 2 - a {
            for i in 0..=a - 1 {
                s += pow2(n - 2 - a - l) * binom(a - 1, i) * binom(l + i, i);
            }
        }
    }
    s
}

fn shared_single(n: i64) -> BigInt {
    (2..=n - 1).map(|a| (pow2(n - 1 - a) - 1 - binom(n - a, 2)) * times_pow2(a - 1, a - 2)).sum()
}

fn shared_e(e: &[BigInt], n: i64) -> BigInt {
    (1..=n - 2).map(|a| pow2(a - 1) * &e[(n - 1 - a) as usize]).sum()
}

/// Two left-right maxima, `pi = a pi' n pi''` with `pi'` decreasing.
pub fn g(n: i64) -> Result<BigInt, Error> {
    if n < 2 {
        return Ok(BigInt::zero());
    }
    if n == 2 {
        return Ok(big(1));
    }
    let e = e_upto(n as usize)?;
    let mut s = times_pow2(3 - n, n - 3) - 1 + shared_e(&e, n) + shared_single(n) + shared_triple(n);
    for i in 0..=n - 2 {
        s += binom(n - 1 + i, 2 * i + 1);
    }
    Ok(s)
}

/// Exactly two left-right maxima.
pub fn b(n: i64) -> Result<BigInt, Error> {
    if n < 2 {
        return Ok(BigInt::zero());
    }
    if n == 2 {
        return Ok(big(1));
    }
    let e = e_upto(n as usize)?;
    let mut s = times_pow2(7 - n, n - 3) - 2 + shared_e(&e, n) + shared_triple(n) + shared_single(n);
    for a in 3..=n - 1 {
        for l in 1..=a - 2 {
            let enl = e_nl(a - 1, l)?;
            for j in 0..=l {
                s += binom(n - 1 - a + j, j) * &enl;
            }
        }
    }
    Ok(s)
}

/// Left-right maxima exactly `a`, `b`, `n`.
pub fn d_ab(n: i64, a: i64, b: i64) -> Result<BigInt, Error> {
    if a < 1 || b <= a || b > n - 1 {
        return Err(range_err("d_n(a,b)", &[n, a, b]));
    }
    let mut s = (pow2(a - 1) + binom(a, 2)) * (pow2(b - 1 - a) - b + a);
    s += (times_pow2(a - 1, a - 2) - binom(a, 2)) * (pow2(b - 1 - a) - 1);
    for j in 0..=a - 1 {
        let c = binom(a - 1, j) - 1;
        s += &c * binom(n - b + j, j);
        for r in 0..=b - 2 - a {
            s += &c * binom(n - 3 - r - j, n - 1 - b);
        }
        for i in 0..=j {
            for r in 0..=b - 1 - a {
                s += binom(i + r, i) * binom(n - 2 + j - i - a - r, n - 1 - b);
            }
        }
    }
    Ok(s)
}

/// Exactly three left-right maxima.
pub fn d(n: i64) -> BigInt {
    let mut s = BigInt::zero();
    for a in 1..=n - 2 {
        for b in a + 1..=n - 1 {
            s += d_ab(n, a, b).expect("in range");
        }
    }
    s
}

pub fn a(n: i64) -> Result<BigInt, Error> {
    if n < 2 {
        return Ok(if n < 0 { BigInt::zero() } else { big(1) });
    }
    let e = e_upto(n as usize - 1)?;
    Ok(b(n)? + d(n) + &e[n as usize - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(e_nl(4, 2).unwrap(), big(5));
        assert_eq!(e_nl(4, 3).unwrap(), big(3));
        assert_eq!(e_prime(5, 4).unwrap(), big(4));
        for n in 2..=12 {
            for l in 1..n {
                assert_eq!(e_star(n, l).unwrap(), pow2(n - l - 1));
            }
            let total: BigInt = (1..=n).map(|l| e_star(n, l).unwrap()).sum();
            assert_eq!(total, pow2(n - 1));
        }
        assert!(e_prime(4, 4).is_err());
        assert!(d_ab(5, 3, 3).is_err());
    }

    #[test]
    fn run_refinement_matches_series() {
        e_upto(20).unwrap();
    }
}
