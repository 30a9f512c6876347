//! Explicit sums and recurrences counting refined classes of avoiders.
//!
//! Every family is addressed by a case id and a name. Case `0` holds the
//! refinements of 123-avoiders shared by the other cases. Arguments always
//! start with the permutation length; parameterized families take extra
//! indices after it.
//!
//! Binomials with an out-of-range argument are zero, and a family is zero
//! wherever its class is empty.

pub mod case125;
pub mod case149;
pub mod case185;
pub mod case74;
pub mod oracle;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// `binom(n, k)`, zero unless `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}

/// `2^k` for `k >= 0`.
pub fn pow2(k: i64) -> BigInt {
    assert!(k >= 0, "negative power of two: {k}");
    BigInt::one() << k as usize
}

/// `c * 2^k`, taken as zero when `c` is zero so that `k` may be negative there.
pub fn times_pow2(c: i64, k: i64) -> BigInt {
    if c == 0 {
        BigInt::zero()
    } else {
        BigInt::from(c) * pow2(k)
    }
}

pub fn catalan(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    binom(2 * n, n) / (n + 1)
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Rows `1..=n_max` of the first-letter refinement of 123-avoiders; row `n`
/// has entries for `i = 1..=n` at indices `1..=n`.
pub fn refined_catalan_table(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::zero()]];
    for n in 1..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        row[1] = BigInt::one();
        for i in 2..=n {
            // Ballot recurrence C(n,i) = C(n,i-1) + C(n-1,i).
            let above = rows[n - 1].get(i).cloned().unwrap_or_default();
            row[i] = &row[i - 1] + above;
        }
        rows.push(row);
    }
    rows
}

fn range_err(what: &str, args: &[i64]) -> Error {
    Error::Precondition(format!("{what}: arguments {args:?} out of range"))
}

/// Number of 123-avoiders of length `n` with first letter `i`.
pub fn catalan_refined_first_letter(n: i64, i: i64) -> Result<BigInt, Error> {
    if n < 1 || i < 1 || i > n {
        return Err(range_err("C(n,i)", &[n, i]));
    }
    Ok(refined_catalan_table(n as usize)[n as usize][i as usize].clone())
}

fn c_first(table: &[Vec<BigInt>], n: i64, i: i64) -> BigInt {
    if n < 1 || i < 1 || i > n {
        return BigInt::zero();
    }
    table[n as usize][i as usize].clone()
}

/// Number of 123-avoiders of length `a` whose leftmost ascent is at index `i`;
/// the decreasing permutation counts at `i = a`.
pub fn catalan_refined_ascent_index(a: i64, i: i64) -> Result<BigInt, Error> {
    if a < 1 || i < 1 || i > a {
        return Err(range_err("C'(a,i)", &[a, i]));
    }
    let table = refined_catalan_table(a as usize);
    Ok(c_prime(&table, a, i))
}

fn c_prime(table: &[Vec<BigInt>], a: i64, i: i64) -> BigInt {
    if i == a {
        return BigInt::one();
    }
    (1..=a - i).map(|j| binom(a - j, i - 1) * c_first(table, a - i, j)).sum()
}

/// Number of 123-avoiders of length `a` with leftmost ascent at index `i` and
/// ascent bottom `j`.
pub fn catalan_refined_ascent_bottom(a: i64, i: i64, j: i64) -> Result<BigInt, Error> {
    if a < 2 || i < 1 || i >= a || j < 1 || j > a {
        return Err(range_err("C'(a,i,j)", &[a, i, j]));
    }
    if j > a - i {
        return Ok(BigInt::zero());
    }
    let table = refined_catalan_table(a as usize);
    Ok(binom(a - j, i - 1) * c_first(&table, a - i, j))
}

/// A named family and the names of its arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub case_id: u32,
    pub name: &'static str,
    pub params: &'static [&'static str],
}

const N: &[&str] = &["n"];
const NL: &[&str] = &["n", "l"];

pub const FAMILIES: &[FamilySpec] = &[
    FamilySpec { case_id: 0, name: "C", params: &["n", "i"] },
    FamilySpec { case_id: 0, name: "Cprime", params: &["a", "i"] },
    FamilySpec { case_id: 0, name: "Cprime3", params: &["a", "i", "j"] },
    FamilySpec { case_id: 74, name: "b", params: N },
    FamilySpec { case_id: 74, name: "ids2", params: N },
    FamilySpec { case_id: 74, name: "d", params: N },
    FamilySpec { case_id: 74, name: "a", params: N },
    FamilySpec { case_id: 125, name: "u", params: N },
    FamilySpec { case_id: 125, name: "uprime", params: &["m", "a"] },
    FamilySpec { case_id: 125, name: "b", params: N },
    FamilySpec { case_id: 125, name: "d", params: N },
    FamilySpec { case_id: 125, name: "e", params: N },
    FamilySpec { case_id: 125, name: "g", params: N },
    FamilySpec { case_id: 125, name: "a", params: N },
    FamilySpec { case_id: 149, name: "e", params: N },
    FamilySpec { case_id: 149, name: "e_star", params: NL },
    FamilySpec { case_id: 149, name: "e_nl", params: NL },
    FamilySpec { case_id: 149, name: "e_prime", params: NL },
    FamilySpec { case_id: 149, name: "g", params: N },
    FamilySpec { case_id: 149, name: "b", params: N },
    FamilySpec { case_id: 149, name: "d_ab", params: &["n", "a", "b"] },
    FamilySpec { case_id: 149, name: "d", params: N },
    FamilySpec { case_id: 149, name: "a", params: N },
    FamilySpec { case_id: 185, name: "u", params: N },
    FamilySpec { case_id: 185, name: "b", params: N },
    FamilySpec { case_id: 185, name: "d", params: N },
    FamilySpec { case_id: 185, name: "v", params: N },
    FamilySpec { case_id: 185, name: "w", params: N },
    FamilySpec { case_id: 185, name: "e", params: N },
    FamilySpec { case_id: 185, name: "g", params: N },
    FamilySpec { case_id: 185, name: "a", params: N },
];

pub fn family(case_id: u32, name: &str) -> Result<&'static FamilySpec, Error> {
    FAMILIES
        .iter()
        .find(|f| f.case_id == case_id && f.name == name)
        .ok_or_else(|| Error::UnknownName { case: case_id, name: name.to_string() })
}

/// Every valid argument list whose first entry is `n`.
pub fn param_space(spec: &FamilySpec, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    match spec.params.len() {
        1 => out.push(vec![n]),
        2 => {
            let (lo, hi) = match (spec.case_id, spec.name) {
                (125, "uprime") => (2, n.saturating_sub(2)),
                (149, "e_prime") => (1, n.saturating_sub(1)),
                _ => (1, n),
            };
            for k in lo..=hi {
                out.push(vec![n, k]);
            }
        }
        _ => {
            // Cprime3 takes 1 <= i < a and any bottom; d_ab takes 1 <= a < b < n.
            let cprime3 = spec.name == "Cprime3";
            for x in 1..n {
                let (lo, hi) = if cprime3 { (1, n) } else { (x + 1, n - 1) };
                for y in lo..=hi {
                    out.push(vec![n, x, y]);
                }
            }
        }
    }
    out
}

/// Value of a family at the given arguments.
pub fn evaluate(case_id: u32, name: &str, args: &[usize]) -> Result<BigInt, Error> {
    let spec = family(case_id, name)?;
    if args.len() != spec.params.len() {
        return Err(Error::Precondition(format!(
            "{case_id}:{name} takes {} arguments, got {}",
            spec.params.len(),
            args.len()
        )));
    }
    let a: Vec<i64> = args.iter().map(|&v| v as i64).collect();
    let n = a[0];
    let nu = args[0];
    match (case_id, name) {
        (0, "C") => catalan_refined_first_letter(n, a[1]),
        (0, "Cprime") => catalan_refined_ascent_index(n, a[1]),
        (0, "Cprime3") => catalan_refined_ascent_bottom(n, a[1], a[2]),
        (74, "b") => case74::b(n),
        (74, "ids2") => case74::ids2(n),
        (74, "d") => case74::d(n),
        (74, "a") => Ok(case74::a_upto(nu)?.swap_remove(nu)),
        (125, "u") => Ok(case125::u_upto(nu).swap_remove(nu)),
        (125, "uprime") => case125::uprime(n, a[1]),
        (125, "b") => Ok(case125::b_upto(nu).swap_remove(nu)),
        (125, "d") => Ok(case125::d_upto(nu).swap_remove(nu)),
        (125, "e") => Ok(case125::e_upto(nu).swap_remove(nu)),
        (125, "g") => Ok(case125::g_upto(nu).swap_remove(nu)),
        (125, "a") => Ok(case125::a_upto(nu).swap_remove(nu)),
        (149, "e") => Ok(case149::e_upto(nu)?.swap_remove(nu)),
        (149, "e_star") => case149::e_star(n, a[1]),
        (149, "e_nl") => case149::e_nl(n, a[1]),
        (149, "e_prime") => case149::e_prime(n, a[1]),
        (149, "g") => case149::g(n),
        (149, "b") => case149::b(n),
        (149, "d_ab") => case149::d_ab(n, a[1], a[2]),
        (149, "d") => Ok(case149::d(n)),
        (149, "a") => case149::a(n),
        (185, "u") => Ok(case125::u_upto(nu).swap_remove(nu)),
        (185, "b") => Ok(case185::b_upto(nu).swap_remove(nu)),
        (185, "d") => Ok(case185::d_upto(nu).swap_remove(nu)),
        (185, "v") => case185::v(n),
        (185, "w") => case185::w(n),
        (185, "e") => case185::e(n),
        (185, "g") => Ok(case185::g_upto(nu).swap_remove(nu)),
        (185, "a") => Ok(case185::a_upto(nu)?.swap_remove(nu)),
        _ => unreachable!("registered family without evaluator"),
    }
}

/// A one-index family tabulated over `0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFamily {
    pub case_id: u32,
    pub name: &'static str,
    pub values: BTreeMap<usize, BigInt>,
}

pub fn sequence_family(case_id: u32, name: &str, n_max: usize) -> Result<SequenceFamily, Error> {
    let spec = family(case_id, name)?;
    if spec.params.len() != 1 {
        return Err(Error::Precondition(format!("{case_id}:{name} is parameterized")));
    }
    let mut values = BTreeMap::new();
    for n in 0..=n_max {
        values.insert(n, evaluate(case_id, name, &[n])?);
    }
    Ok(SequenceFamily { case_id, name: spec.name, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(5, 2), big(10));
        assert_eq!(binom(5, 6), big(0));
        assert_eq!(binom(5, -1), big(0));
        assert_eq!(binom(-3, 1), big(0));
        assert_eq!(binom(0, 0), big(1));
    }

    #[test]
    fn refined_catalan_rows() {
        assert_eq!(catalan_refined_first_letter(1, 1).unwrap(), big(1));
        let table = refined_catalan_table(12);
        for n in 1..=12 {
            let s: BigInt = table[n].iter().sum();
            assert_eq!(s, catalan(n as i64));
            let s: BigInt = (1..=n as i64).map(|i| catalan_refined_ascent_index(n as i64, i).unwrap()).sum();
            assert_eq!(s, catalan(n as i64));
        }
        assert_eq!(catalan_refined_ascent_index(5, 5).unwrap(), big(1));
        assert!(catalan_refined_first_letter(3, 4).is_err());
        assert!(catalan_refined_ascent_index(0, 1).is_err());
    }

    #[test]
    fn ascent_bottom_refines_ascent_index() {
        for a in 2..=9 {
            for i in 1..a {
                let s: BigInt = (1..=a).map(|j| catalan_refined_ascent_bottom(a, i, j).unwrap()).sum();
                assert_eq!(s, catalan_refined_ascent_index(a, i).unwrap());
            }
        }
    }

    #[test]
    fn registry_is_consistent() {
        for f in FAMILIES {
            for n in 0..=7 {
                for args in param_space(f, n) {
                    evaluate(f.case_id, f.name, &args).unwrap_or_else(|e| panic!("{}:{} {args:?}: {e}", f.case_id, f.name));
                }
            }
        }
        assert!(matches!(evaluate(74, "zz", &[3]), Err(Error::UnknownName { .. })));
        assert!(evaluate(74, "b", &[3, 1]).is_err());
    }
}
