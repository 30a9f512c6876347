//! Triple {1243, 2341, 4123}, split by the leftmost ascent `(bottom, top)`.
//!
//! `u` (first letter `n - 1`, top `n`) is shared with {1234, 2341, 4123}.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{binom, c_first, c_prime, catalan, pow2, range_err, refined_catalan_table};
use crate::error::Error;

/// Avoiders of length `m` starting `(m - 1) a m`, for `2 <= a <= m - 2`.
pub fn uprime(m: i64, a: i64) -> Result<BigInt, Error> {
    if a < 2 || a > m - 2 {
        return Err(range_err("u'(m,a)", &[m, a]));
    }
    let table = refined_catalan_table(a as usize);
    Ok(uprime_with(&table, m, a))
}

fn uprime_with(table: &[Vec<BigInt>], m: i64, a: i64) -> BigInt {
    (1..=a - 1).map(|i| binom(i + m - 2 - a, i) * c_prime(table, a - 1, i)).sum()
}

/// First letter `n - 1` and leftmost ascent top `n`.
pub fn u_upto(n_max: usize) -> Vec<BigInt> {
    let table = refined_catalan_table(n_max);
    (0..=n_max as i64)
        .map(|n| {
            if n < 3 {
                return BigInt::zero();
            }
            let mut s = catalan(n - 2);
            for a in 2..=n - 2 {
                for t in 0..=n - 2 - a {
                    s += binom(n - 2 - a, t) * uprime_with(&table, n - t, a);
                }
            }
            s
        })
        .collect()
}

/// The double sum over 123-avoiders shared by the `b` recurrences of both triples.
pub(crate) fn tail_sum(table: &[Vec<BigInt>], n: i64) -> BigInt {
    let mut s = BigInt::zero();
    for j in 0..=n - 4 {
        for i in 1..=n - 3 - j {
            s += binom(n - i - 2, j + 1) * c_first(table, n - 2 - j, i);
        }
    }
    s
}

/// Leftmost ascent `(a, n)` with `a >= 2`.
pub fn b_upto(n_max: usize) -> Vec<BigInt> {
    let u = u_upto(n_max);
    let table = refined_catalan_table(n_max);
    let mut b = vec![BigInt::zero(); n_max.min(2) + 1];
    for n in 3..=n_max as i64 {
        let v = &b[n as usize - 1] + &u[n as usize] + pow2(n - 3) - n + 2 + binom(n - 2, 4) + tail_sum(&table, n);
        b.push(v);
    }
    b
}

/// Not starting with `n`, leftmost ascent `(a, n - 1)` with `a >= 2`.
pub fn d_upto(n_max: usize) -> Vec<BigInt> {
    let b = b_upto(n_max);
    let mut d = vec![BigInt::zero(); n_max.min(3) + 1];
    if n_max >= 4 {
        d.push(BigInt::from(1));
    }
    for n in 5..=n_max as i64 {
        let mut v = &d[n as usize - 1] + &b[n as usize - 1] - &b[n as usize - 2] + binom(n - 3, 2);
        for a in 3..=n - 3 {
            for l in 0..=n - 3 - a {
                for m in 1..=n - 2 - a - l {
                    v += binom(n - 5 - l - m, a - 3) * m;
                }
            }
        }
        d.push(v);
    }
    d
}

/// Not starting with `n`, leftmost ascent `(a, b)` with `2 <= a < b <= n - 2`.
pub fn e_upto(n_max: usize) -> Vec<BigInt> {
    let b = b_upto(n_max);
    let d = d_upto(n_max);
    let mut e = vec![BigInt::zero(); n_max.min(3) + 1];
    for n in 4..=n_max as i64 {
        let nu = n as usize;
        let mut v = &e[nu - 1] + &d[nu - 1] + catalan(n - 2) - pow2(n - 3);
        for i in 3..=nu - 2 {
            v += &d[i + 1] - &b[i];
        }
        e.push(v);
    }
    e
}

/// Not starting with `n`, leftmost ascent bottom `1`.
pub fn g_upto(n_max: usize) -> Vec<BigInt> {
    let mut g = vec![BigInt::zero(); n_max.min(1) + 1];
    if n_max >= 2 {
        g.push(BigInt::from(1));
    }
    for n in 3..=n_max as i64 {
        let mut v = &g[n as usize - 1] + BigInt::from(5) * pow2(n - 3) + binom(n - 1, 4) - n;
        for m in 3..=n - 1 {
            v += binom(n - m + 1, 2) * pow2(m - 3);
        }
        g.push(v);
    }
    g
}

pub fn a_upto(n_max: usize) -> Vec<BigInt> {
    let (b, d, e, g) = (b_upto(n_max), d_upto(n_max), e_upto(n_max), g_upto(n_max));
    (0..=n_max)
        .map(|n| if n < 2 { BigInt::from(1) } else { &b[n] + &d[n] + &e[n] + &g[n] + catalan(n as i64 - 1) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let b = b_upto(6);
        assert_eq!(b[3], BigInt::from(1));
        assert_eq!(b[4], BigInt::from(5));
        assert_eq!(d_upto(5)[5], BigInt::from(6));
        assert_eq!(e_upto(5)[5], BigInt::from(2));
        assert_eq!(e_upto(5)[4], BigInt::from(0));
        assert!(uprime(5, 4).is_err());
    }
}
