//! Closed-form generating functions for the thirteen named triples and the
//! auxiliary series used to derive them.
//!
//! Everything is computed at a slightly higher internal order so that the
//! cancellations of powers of `x` never reach the requested order.

use num_traits::One;

use crate::error::Error;
use crate::series::{catalan_series, solve_algebraic, AlgebraicEquation, EquationForm};
use crate::{RatSeries, Rational, Scalar, Sqrt5, Sqrt5Series};

const SLACK: usize = 4;

fn p(c: &[i64], m: usize) -> RatSeries {
    RatSeries::from_ints(c, m)
}

/// `(1 - x)^k`, `(1 - 2x)^k` and friends.
fn pw(c: &[i64], k: u32, m: usize) -> RatSeries {
    p(c, m).pow(k)
}

fn frac(num: &RatSeries, den: &RatSeries) -> Result<RatSeries, Error> {
    num.div(den)
}

const ONE_X: [i64; 2] = [1, -1];
const ONE_2X: [i64; 2] = [1, -2];
const FIB: [i64; 3] = [1, -3, 1];

/// Generating function of the avoiders of the named triple `case`, through order `n`.
pub fn gf_catalog(case: u32, n: usize) -> Result<RatSeries, Error> {
    let m = n + SLACK;
    let f = match case {
        74 => frac(&p(&[1, -9, 35, -75, 98, -78, 36, -12], m), &(pw(&ONE_X, 6, m) * pw(&ONE_2X, 2, m)))?,
        109 => frac(&p(&[1, -8, 23, -27, 12, -5], m), &pw(&FIB, 3, m))?,
        121 => {
            let a = frac(&p(&[1], m), &p(&FIB, m))?;
            let b = frac(&p(&[1], m), &p(&ONE_X, m))?;
            let c = frac(&p(&[1, -1, 1], m), &pw(&ONE_X, 4, m))?;
            let d = frac(&(p(&ONE_X, m) * p(&[1, -2, -1], m)).scale(&Rational::from_i64(2)), &pw(&ONE_2X, 3, m))?;
            a + b + c - d
        }
        125 => {
            let c = catalan_series::<Rational>(m)?;
            let r = frac(&p(&[1, -9, 34, -70, 87, -65, 26, -5], m), &(pw(&ONE_X, 7, m) * p(&ONE_2X, m)))?;
            r + frac(&(c - p(&[1], m)), &p(&ONE_X, m))?
        }
        149 => {
            let num = p(&[1, -14, 87, -315, 736, -1161, 1253, -918, 446, -134, 18], m);
            frac(&num, &(pw(&ONE_X, 6, m) * pw(&ONE_2X, 3, m) * p(&FIB, m)))?
        }
        185 => {
            let c = catalan_series::<Rational>(m)?;
            let r = frac(&p(&[1, -11, 51, -130, 199, -183, 91, -15, -6, 4], m), &(pw(&ONE_X, 7, m) * pw(&ONE_2X, 2, m)))?;
            r + frac(&(p(&[1, 1], m) * (c - p(&[1], m))), &p(&ONE_X, m))?
        }
        188 => frac(&(pw(&ONE_X, 4, m) * p(&[1, -6, 12, -9, 1], m)), &k188(m))?,
        209 => solve_algebraic(&equation(209, m)?)?,
        216 => {
            let c = catalan_series::<Rational>(m)?;
            let den = p(&[1, -2], m) - p(&[0, 1, -1], m) * &c;
            frac(&(p(&[1, -3], m) * c), &den)?
        }
        225 => {
            let c = catalan_series::<Rational>(m)?;
            let x1x = p(&[0, 1, -1], m);
            let disc = p(&[1, -5, 10, -5], m) - &x1x * p(&[1, 1], m) * &c;
            let num = p(&[1], m) - &x1x * &c - disc.sqrt()?;
            num.div_cancel(&(x1x.scale(&Rational::from_i64(2))))?
        }
        228 => solve_algebraic(&equation(228, m)?)?,
        230 => {
            let c = catalan_series::<Rational>(m)?;
            let num = p(&[0, -1, 6, -11, 3, 4], m) * &c + p(&[1, -7, 16, -12, 2], m);
            let den = pw(&ONE_2X, 2, m) * (p(&[1, -4, 2], m) - p(&[0, 1, -3], m) * &c);
            frac(&num, &den)?
        }
        240 => case240(m)?.project()?,
        _ => return Err(Error::UnknownCase(case)),
    };
    Ok(f.truncate(n))
}

/// The kernel polynomial of the 188 system.
fn k188(m: usize) -> RatSeries {
    p(&[1, -11, 51, -132, 209, -208, 128, -44, 5], m)
}

/// Polynomial equation satisfied by the generating function of case 209 or 228.
pub fn equation(case: u32, m: usize) -> Result<AlgebraicEquation<Rational>, Error> {
    let poly = match case {
        // F = 1 - xF + x(2 + x^2/(1-x)^2)F^2 - x^2F^3
        209 => {
            let q = p(&[0, 2], m) + frac(&p(&[0, 0, 0, 1], m), &pw(&ONE_X, 2, m))?;
            vec![p(&[1], m), p(&[0, -1], m), q, p(&[0, 0, -1], m)]
        }
        // F = (1-x)^2 + xF + x(2-3x+2x^2)F^2 - x^2(1-x)F^3
        228 => vec![pw(&ONE_X, 2, m), p(&[0, 1], m), p(&[0, 2, -3, 2], m), p(&[0, 0, -1, 1], m)],
        _ => return Err(Error::Unsupported(format!("no polynomial equation recorded for case {case}"))),
    };
    Ok(AlgebraicEquation { poly, form: EquationForm::FixedPoint, f0: Rational::one() })
}

fn q5(a: (i64, i64), b: (i64, i64)) -> Sqrt5 {
    let r = |(n, d): (i64, i64)| Rational::from_i64(n) / Rational::from_i64(d);
    Sqrt5::new(r(a), r(b))
}

fn s5(c: &[Sqrt5], m: usize) -> Sqrt5Series {
    Sqrt5Series::from_coeffs(c.to_vec(), m)
}

/// `r / x` where `r` is the root of the kernel with `r(0) = 0`, through order `m - 2`.
fn r_over_x(m: usize) -> Result<Sqrt5Series, Error> {
    let one = q5((1, 1), (0, 1));
    let disc = s5(&[one.clone(), q5((-3, 1), (-1, 1)), q5((3, 2), (-1, 2))], m).sqrt()?;
    let lead = s5(&[q5((-1, 1), (1, 1))], m);
    let num = &lead * &(s5(&[one], m) - disc) - s5(&[q5((0, 1), (0, 1)), q5((1, 1), (1, 1))], m);
    Ok(num.div_x_pow(2)?.scale(&q5((1, 4), (0, 1))))
}

/// The two roots `v' = 1 + r` and `v'' = 1 + t` of the kernel, through order `m - 1`.
pub fn case240_roots(m: usize) -> Result<(Sqrt5Series, Sqrt5Series), Error> {
    let r1 = r_over_x(m + 1)?;
    let x = Sqrt5Series::x(m - 1);
    let one = Sqrt5Series::one(m - 1);
    let v1 = &one + &(&x * &r1.truncate(m - 1));
    let v2 = v1.conj();
    Ok((v1, v2))
}

/// `K(x, v) = x^2 v^4 + x(1-3x) v^3 + (x^2-1) v^2 + (2-x) v - 1`.
pub fn case240_kernel(v: &Sqrt5Series) -> Sqrt5Series {
    let m = v.order();
    let lift = |c: &[i64]| Sqrt5Series::lift(&p(c, m));
    let poly = [lift(&[-1]), lift(&[2, -1]), lift(&[-1, 0, 1]), lift(&[0, 1, -3]), lift(&[0, 0, 1])];
    Sqrt5Series::compose_poly(&poly, v)
}

fn case240(m: usize) -> Result<Sqrt5Series, Error> {
    let r1 = r_over_x(m + 2)?;
    let t1 = r1.conj();
    let x = Sqrt5Series::x(m);
    let one = Sqrt5Series::one(m);
    let pr = &r1 * &t1;
    let xp = &x * &pr;
    // (1 + rt) / (1 + 1/r + 1/t - 1/x) with r = x r1 and t = x t1, after clearing x r1 t1.
    let num = (&one + &(&x * &xp)) * &xp;
    let den = &(&(&xp + &r1) + &t1) - &pr;
    Ok(&one + &num.div(&den)?)
}

/// Generating functions of the label families of the 240 forest at `v = 1`.
fn case240_parts(m: usize) -> Result<[Sqrt5Series; 3], Error> {
    let (v1, v2) = case240_roots(m + 3)?;
    let k = v1.order();
    let lift = |c: &[i64]| Sqrt5Series::lift(&p(c, k));
    let one = lift(&[1]);
    let x = lift(&[0, 1]);
    let pr = &v1 * &v2;
    let sum = &v1 + &v2;
    let den = &(&(&lift(&[-1, 1]) * &pr) + &sum) - &lift(&[1, 1]);
    let a = (&v2 - &one) * (&v1 - &one) * (&(&pr - &sum) + &lift(&[2])) * lift(&[0, 0, 1]);
    let b = -((&(&x * &v2) - &v2) + &one) * ((&(&x * &v1) - &v1) + &one) * (&(&(&x * &sum) - &lift(&[0, 3])) + &one);
    let inner = (&v2 - &one) * (&v1 - &one)
        + (&(&(&(&pr * &pr) - &(&pr * &v1)) - &(&pr * &v2)) + &one) * &x
        - &pr * &(&sum - &lift(&[3])) * lift(&[0, 0, 1]);
    let c = lift(&[1, -1]) * inner;
    Ok([a.div_cancel(&den)?, b.div_cancel(&den)?, c.div_cancel(&den)?])
}

/// Names accepted by [`intermediate_gf`] for each case.
pub fn intermediate_names(case: u32) -> &'static [&'static str] {
    match case {
        109 => &["A", "B", "C", "D"],
        121 => &["N1", "N", "M", "Hprime", "G2", "G3", "G4", "G5"],
        125 => &["B", "D", "E", "G"],
        149 => &["E", "B", "D"],
        185 => &["B", "D", "E", "G"],
        188 => &["K", "A", "Ap", "App", "B", "Bp", "G", "Gp", "D", "L", "Lp", "Lpp"],
        216 => &["H_total"],
        228 => &["G2"],
        230 => &["B_1"],
        240 => &["A", "B", "C"],
        _ => &[],
    }
}

/// A named auxiliary generating function, through order `n`.
pub fn intermediate_gf(case: u32, name: &str, n: usize) -> Result<RatSeries, Error> {
    let m = n + SLACK;
    let unknown = || Error::UnknownName { case, name: name.to_string() };
    let f = match case {
        109 => match name {
            "A" => frac(&p(&[0, 0, 1], m), &p(&ONE_X, m))?,
            // Mostly increasing avoiders, `n - 1` of each length `n >= 2`.
            "B" => frac(&p(&[0, 0, 1], m), &pw(&ONE_X, 2, m))?,
            "C" => frac(&p(&[0, 0, 0, 2, -6, 3], m), &(pw(&ONE_X, 2, m) * pw(&FIB, 2, m)))?,
            "D" => frac(&p(&[0, 0, 0, 1, -2, 0, -1], m), &pw(&FIB, 3, m))?,
            _ => return Err(unknown()),
        },
        121 => {
            let den = pw(&ONE_X, 4, m) * pw(&ONE_2X, 2, m) * p(&FIB, m);
            match name {
                "N1" => frac(&p(&[0, 0, 0, 1, -3, 4, -3], m), &(pw(&ONE_X, 4, m) * p(&ONE_2X, m)))?,
                "N" => frac(&p(&[0, 0, 0, 1, -6, 15, -21, 15, -3], m), &den)?,
                "M" => frac(&p(&[0, 0, 0, 1, -6, 16, -25, 20, -5], m), &den)?,
                "Hprime" => frac(&p(&[0, 0, 0, 1, -2, 2], m), &(pw(&ONE_X, 3, m) * p(&ONE_2X, m)))?,
                _ => {
                    let g2 = gf_catalog(121, m)?.shift(2) + frac(&p(&[0, 0, 0, 2, -14, 42, -70, 64, -27, 4], m), &den)?;
                    let k: usize = name.strip_prefix('G').and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
                    match k {
                        2 => g2,
                        k if k >= 3 => {
                            let mut tail = vec![0i64; k + 2];
                            tail[k + 1] = 1;
                            g2.shift(k - 2) + frac(&p(&tail, m), &(pw(&ONE_X, 2, m) * p(&ONE_2X, m)))?
                        }
                        _ => return Err(unknown()),
                    }
                }
            }
        }
        125 => {
            let c = catalan_series::<Rational>(m)?;
            let c1 = &c - &p(&[1], m);
            match name {
                "B" => p(&ONE_X, m) * &c1 + frac(&p(&[0, -1, 5, -11, 13, -8, 3], m), &pw(&ONE_X, 6, m))?,
                "D" => {
                    p(&[0, 1, -1], m) * &c1
                        - frac(&p(&[0, 0, 1, -7, 21, -36, 37, -22, 7], m), &(pw(&ONE_X, 6, m) * p(&ONE_2X, m)))?
                }
                "E" => {
                    frac(&(p(&[0, 0, 2, -1], m) * &c1), &p(&ONE_X, m))?
                        - frac(&p(&[0, 0, 0, 2, -13, 36, -57, 54, -29, 8], m), &(pw(&ONE_X, 7, m) * p(&ONE_2X, m)))?
                }
                "G" => frac(&p(&[0, 0, 1, -5, 13, -18, 13, -6, 1], m), &(pw(&ONE_X, 6, m) * p(&ONE_2X, m)))?,
                _ => return Err(unknown()),
            }
        }
        149 => {
            let den = pw(&ONE_2X, 3, m) * p(&FIB, m);
            match name {
                "E" => p(&[1], m) + frac(&p(&[0, 1, -4, 7, -5, 2], m), &(pw(&ONE_X, 4, m) * p(&ONE_2X, m)))?,
                "B" => frac(&p(&[0, 0, 1, -10, 44, -108, 159, -144, 74, -14], m), &(pw(&ONE_X, 4, m) * den))?,
                "D" => frac(&p(&[0, 0, 0, 1, -9, 37, -91, 142, -141, 90, -36, 6], m), &(pw(&ONE_X, 6, m) * den))?,
                _ => return Err(unknown()),
            }
        }
        185 => {
            let c = catalan_series::<Rational>(m)?;
            let c2 = &c * &c;
            let d2 = pw(&ONE_X, 7, m) * pw(&ONE_2X, 2, m);
            match name {
                "B" => {
                    p(&[0, 1, -1], m) * &c2
                        + frac(&p(&[0, -1, 10, -44, 112, -181, 192, -134, 59, -15, 3], m), &d2)?
                }
                "D" => {
                    p(&[0, 0, 1, -1], m) * &c2
                        - frac(&p(&[0, 0, 1, -7, 20, -31, 27, -12, 3], m), &(pw(&ONE_X, 4, m) * pw(&ONE_2X, 2, m)))?
                }
                "E" => {
                    frac(&(p(&[0, 0, 0, 2, -1], m) * &c2), &p(&ONE_X, m))?
                        - frac(&p(&[0, 0, 0, 2, -13, 34, -49, 38, -14, 3], m), &(pw(&ONE_X, 5, m) * pw(&ONE_2X, 2, m)))?
                }
                "G" => {
                    frac(&(p(&[0, 0, 1], m) * &c2), &p(&ONE_X, m))?
                        + frac(&p(&[0, 0, 0, 0, 2, -7, 10, -8, 2], m), &(pw(&ONE_X, 5, m) * pw(&ONE_2X, 2, m)))?
                }
                _ => return Err(unknown()),
            }
        }
        188 => {
            let k = k188(m);
            let x14 = pw(&ONE_X, 4, m);
            match name {
                "K" => k,
                "A" => {
                    // A(1,1): the common factor (1 - x)^2 is written out.
                    let num = p(&[0, 0, 1], m) * pw(&ONE_X, 5, m) * p(&[1, -5, 9, -5], m) + p(&[0, 0, 1, -1], m) * &k;
                    frac(&num, &(pw(&ONE_X, 2, m) * &k))?
                }
                "Ap" => frac(&(p(&[0, 0, 0, 0, 0, 1, -2], m) * &x14), &(pw(&ONE_X, 2, m) * &k))?,
                "App" => frac(&(p(&[0, 0, 0, 0, 1], m) * pw(&ONE_2X, 2, m) * &x14), &(pw(&ONE_X, 2, m) * &k))?,
                "B" => {
                    let inner = p(&[1, -7, 19, -26, 18, -5], m);
                    frac(&(p(&[0, 0, 0, 1, -1], m) * inner), &(p(&ONE_X, m) * &k))?
                }
                "Bp" => frac(&(p(&[0, 0, 0, 0, 0, 1, -2], m) * &x14), &(p(&ONE_X, m) * &k))?,
                "G" => {
                    let inner = p(&[1, -4, 6, -3, 0], m);
                    frac(&(p(&[0, 0, 0, 1], m) * pw(&ONE_X, 2, m) * inner), &(p(&ONE_X, m) * &k))?
                }
                "Gp" => {
                    frac(&(p(&[0, 0, 0, 0, 0, 1, -3, 3], m) * pw(&ONE_X, 2, m)), &(p(&ONE_X, m) * &k))?
                }
                "D" => frac(&p(&[0, 0, 0, 0, 0, 0, 1, -3, 2, 1], m), &(p(&ONE_X, m) * &k))?,
                "L" => frac(&(p(&[0, 0, 0, 0, 0, 0, 1, -2], m) * p(&ONE_X, m)), &k)?,
                "Lp" => frac(&(p(&[0, 0, 0, 0, 0, 0, 1, -2], m) * pw(&ONE_X, 2, m)), &k)?,
                "Lpp" => frac(&p(&[0, 0, 0, 0, 0, 0, 1, -3, 3], m), &k)?,
                _ => return Err(unknown()),
            }
        }
        216 => match name {
            "H_total" => gf_catalog(216, m)? * catalan_series::<Rational>(m)?.shift(1),
            _ => return Err(unknown()),
        },
        228 => match name {
            "G2" => {
                let f = gf_catalog(228, m)?;
                let a = (&f * &f).shift(2);
                let den = p(&ONE_X, m) * (p(&ONE_X, m) - f.shift(1));
                a + frac(&f.shift(3), &den)?
            }
            _ => return Err(unknown()),
        },
        230 => match name {
            "B_1" => {
                let c = catalan_series::<Rational>(m)?;
                frac(&c.pow(4).shift(5), &p(&ONE_2X, m))? + frac(&p(&[0, 0, 0, 1, -1], m), &pw(&ONE_2X, 2, m))?
            }
            _ => return Err(unknown()),
        },
        240 => {
            let idx = ["A", "B", "C"].iter().position(|s| *s == name).ok_or_else(unknown)?;
            let [a, b, c] = case240_parts(m)?;
            [a, b, c][idx].project()?
        }
        _ => return Err(Error::UnknownCase(case)),
    };
    Ok(f.truncate(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::case_ids;

    fn ints(s: &RatSeries) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|v| v.try_into().unwrap()).collect()
    }

    #[test]
    fn all_cases_start_alike() {
        for case in case_ids() {
            let f = gf_catalog(case, 4).unwrap();
            assert_eq!(ints(&f), vec![1, 1, 2, 6, 21], "case {case}");
        }
        assert_eq!(gf_catalog(7, 4), Err(Error::UnknownCase(7)));
    }

    #[test]
    fn roots_of_kernel() {
        let (v1, v2) = case240_roots(12).unwrap();
        assert!(case240_kernel(&v1).is_zero());
        assert!(case240_kernel(&v2).is_zero());
        assert_eq!(v1.conj(), v2);
        let expect = [q5((1, 1), (0, 1)), q5((1, 1), (0, 1)), q5((3, 2), (1, 2)), q5((4, 1), (2, 1)), q5((15, 1), (7, 1)), q5((119, 2), (53, 2))];
        assert_eq!(&v1.coeffs()[..6], &expect);
    }
}
