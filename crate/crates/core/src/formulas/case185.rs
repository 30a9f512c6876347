//! Triple {1234, 2341, 4123}, split like {1243, 2341, 4123} by the leftmost
//! ascent. The class with bottom `a >= 2` and top at most `n - 2` is refined
//! through the set `V` of letters strictly between bottom and top that lie to
//! the right of the top.

use num_bigint::BigInt;
use num_traits::Zero;

use super::case125::{tail_sum, u_upto};
use super::{big, binom, catalan, pow2, refined_catalan_table, times_pow2};
use crate::error::Error;

/// Leftmost ascent `(a, n)` with `a >= 2`.
pub fn b_upto(n_max: usize) -> Vec<BigInt> {
    let u = u_upto(n_max);
    let table = refined_catalan_table(n_max);
    let mut b = vec![BigInt::zero(); n_max.min(2) + 1];
    for n in 3..=n_max as i64 {
        let v = &b[n as usize - 1] + &u[n as usize] + times_pow2(n - 3, n - 4) + binom(n - 2, 5) - binom(n - 2, 2)
            + tail_sum(&table, n);
        b.push(v);
    }
    b
}

/// Not starting with `n`, leftmost ascent `(a, n - 1)` with `a >= 2`.
pub fn d_upto(n_max: usize) -> Vec<BigInt> {
    let b = b_upto(n_max);
    let mut d = vec![BigInt::zero(); n_max.min(3) + 1];
    if n_max >= 4 {
        d.push(big(1));
    }
    for n in 5..=n_max as i64 {
        let mut v = &d[n as usize - 1] + &b[n as usize - 1] - &b[n as usize - 2] + binom(n - 3, 2) - binom(n - 3, 5);
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

pub fn v_closed(n: i64) -> BigInt {
    if n < 6 {
        return BigInt::zero();
    }
    let mut s = pow2(n - 2) - binom(n - 1, 3) - n + 1;
    for a in 2..=n - 4 {
        for l in 1..=n - 3 - a {
            s += binom(n, a + l + 2) - binom(n - 1 - l, a + 1);
        }
    }
    s
}

/// The sum over bottom, top, trailing run and `|V|` before any simplification.
pub fn v_sum(n: i64) -> BigInt {
    let mut s = BigInt::zero();
    for a in 2..=n - 4 {
        for b in a + 2..=n - 2 {
            for l in 0..=n - 1 - b {
                for m in 1..=b - 1 - a {
                    s += binom(a + l + m, m) - binom(a - 1 + m, m);
                }
            }
        }
    }
    s
}

/// `V` decreasing with a member right of `n`.
pub fn v(n: i64) -> Result<BigInt, Error> {
    let (x, y) = (v_sum(n), v_closed(n));
    if x != y {
        return Err(Error::Integrity(format!("185:v at n={n}: {x} vs {y}")));
    }
    Ok(x)
}

pub fn w_closed(n: i64) -> BigInt {
    if n < 7 {
        return BigInt::zero();
    }
    let mut s = pow2(n - 2) - 1 - binom(n - 1, 2) - binom(n - 1, 4) + big(4) * binom(n - 6, 2) + binom(n - 5, 3);
    for a in 2..=n - 6 {
        for b in a + 4..=n - 2 {
            s += times_pow2(b - 5 - a, b - 2 - a);
        }
    }
    s
}

/// Interval and non-interval `V` counted separately before simplification.
pub fn w_sum(n: i64) -> BigInt {
    let mut s = BigInt::zero();
    for a in 2..=n - 5 {
        for b in a + 3..=n - 2 {
            for m in 2..=b - 1 - a {
                for j in 1..=m - 1 {
                    s += binom(m, j) - 1;
                }
            }
        }
    }
    for a in 2..=n - 6 {
        for b in a + 4..=n - 2 {
            for q in a + 2..=b - 2 {
                s += (pow2(q - 1 - a) - 1) * (pow2(b - 1 - q) - 1);
            }
        }
    }
    s
}

/// `V` not decreasing.
pub fn w(n: i64) -> Result<BigInt, Error> {
    let (x, y) = (w_sum(n), w_closed(n));
    if x != y {
        return Err(Error::Integrity(format!("185:w at n={n}: {x} vs {y}")));
    }
    Ok(x)
}

/// Not starting with `n`, leftmost ascent `(a, b)` with `2 <= a < b <= n - 2`.
pub fn e(n: i64) -> Result<BigInt, Error> {
    if n < 5 {
        return Ok(BigInt::zero());
    }
    if n == 5 {
        return Ok(big(2));
    }
    let tail: BigInt = (1..=n - 2).map(catalan).sum();
    Ok(v(n)? + w(n)? + catalan(n - 2) - big(3) * pow2(n - 3) + 1 + tail)
}

/// Not starting with `n`, leftmost ascent bottom `1`.
pub fn g_upto(n_max: usize) -> Vec<BigInt> {
    let mut g = vec![BigInt::zero(); n_max.min(1) + 1];
    if n_max >= 2 {
        g.push(big(1));
    }
    for n in 3..=n_max as i64 {
        let v = &g[n as usize - 1] + catalan(n - 1) + big(n + 1) * pow2(n - 3) - binom(n, 3) - n;
        g.push(v);
    }
    g
}

pub fn a_upto(n_max: usize) -> Result<Vec<BigInt>, Error> {
    let (b, d, g) = (b_upto(n_max), d_upto(n_max), g_upto(n_max));
    (0..=n_max)
        .map(|n| {
            if n < 2 {
                return Ok(big(1));
            }
            Ok(&b[n] + &d[n] + e(n as i64)? + &g[n] + catalan(n as i64 - 1))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(v(6).unwrap(), big(3));
        assert_eq!(w(7).unwrap(), big(1));
        assert_eq!(w(6).unwrap(), big(0));
        assert_eq!(e(5).unwrap(), big(2));
        assert_eq!(b_upto(3)[3], big(1));
    }

    #[test]
    fn dual_forms_agree() {
        for n in 0..=20 {
            v(n).unwrap();
            w(n).unwrap();
        }
    }
}
