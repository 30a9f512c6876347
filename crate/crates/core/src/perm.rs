//! Permutations in one-line notation and classical pattern containment.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A permutation of `1..=n` in one-line notation. The empty permutation is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Perm(Vec<u8>);

impl Perm {
    /// Builds a permutation, checking that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<u8>) -> Result<Self, Error> {
        let n = values.len();
        if n > u8::MAX as usize {
            return Err(Error::Parse(format!("length {n} is too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!("{values:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Perm(values))
    }

    /// Wraps values that are known to form a permutation.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Perm::new(values.clone()).is_ok());
        Perm(values)
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    pub fn decreasing(n: usize) -> Self {
        Perm((1..=n as u8).rev().collect())
    }

    /// Order-isomorphic permutation of an arbitrary sequence of distinct values.
    pub fn standardize(seq: &[u8]) -> Self {
        let mut out = vec![0u8; seq.len()];
        for (i, &v) in seq.iter().enumerate() {
            out[i] = 1 + seq.iter().filter(|&&w| w < v).count() as u8;
        }
        Perm(out)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// Inserts the value `n + 1` at 1-based site `s` (so it becomes entry `s`).
    pub fn insert_max(&self, s: usize) -> Perm {
        let mut v = self.0.clone();
        v.insert(s - 1, self.0.len() as u8 + 1);
        Perm(v)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() > 9 {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        } else {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let values: Option<Vec<u8>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<u8>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
        };
        let values = values.ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))?;
        Perm::new(values)
    }
}

/// Three distinct patterns of length four, optionally tagged with a case number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PatternTriple {
    pub patterns: [Perm; 3],
    pub case_id: Option<u32>,
}

impl PatternTriple {
    pub fn new(patterns: [Perm; 3], case_id: Option<u32>) -> Result<Self, Error> {
        for p in &patterns {
            if p.len() != 4 {
                return Err(Error::Parse(format!("pattern {p} does not have length 4")));
            }
        }
        if patterns[0] == patterns[1] || patterns[0] == patterns[2] || patterns[1] == patterns[2] {
            return Err(Error::Parse("patterns must be distinct".into()));
        }
        Ok(PatternTriple { patterns, case_id })
    }

    /// Patterns sorted lexicographically.
    pub fn sorted(&self) -> [Perm; 3] {
        let mut p = self.patterns.clone();
        p.sort();
        p
    }
}

impl fmt::Display for PatternTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.patterns;
        write!(f, "{a},{b},{c}")
    }
}

impl FromStr for PatternTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected three patterns in {s:?}")));
        }
        let p: Vec<Perm> = parts.iter().map(|t| t.parse()).collect::<Result<_, _>>()?;
        PatternTriple::new([p[0].clone(), p[1].clone(), p[2].clone()], None)
    }
}

#[inline]
fn same_order(a: u8, b: u8, pa: u8, pb: u8) -> bool {
    (a < b) == (pa < pb)
}

/// Classical containment of `pattern` in `host`.
pub fn contains(host: &Perm, pattern: &Perm) -> bool {
    let h = host.as_slice();
    let p = pattern.as_slice();
    if p.len() > h.len() {
        return false;
    }
    if p.len() == 4 {
        return contains4(h, p);
    }
    let mut chosen = Vec::with_capacity(p.len());
    contains_rec(h, p, 0, &mut chosen)
}

fn contains_rec(h: &[u8], p: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    let k = chosen.len();
    if k == p.len() {
        return true;
    }
    let remaining = p.len() - k;
    for i in start..=h.len() - remaining {
        let v = h[i];
        if chosen.iter().enumerate().all(|(t, &c)| same_order(c, v, p[t], p[k])) {
            chosen.push(v);
            if contains_rec(h, p, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn contains4(h: &[u8], p: &[u8]) -> bool {
    let n = h.len();
    for a in 0..n - 3 {
        for b in a + 1..n - 2 {
            if !same_order(h[a], h[b], p[0], p[1]) {
                continue;
            }
            for c in b + 1..n - 1 {
                if !same_order(h[a], h[c], p[0], p[2]) || !same_order(h[b], h[c], p[1], p[2]) {
                    continue;
                }
                for d in c + 1..n {
                    if same_order(h[a], h[d], p[0], p[3])
                        && same_order(h[b], h[d], p[1], p[3])
                        && same_order(h[c], h[d], p[2], p[3])
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn avoids_all(host: &Perm, patterns: &[Perm]) -> bool {
    patterns.iter().all(|p| !contains(host, p))
}

/// Left-to-right maxima as `(position, value)` pairs, positions 1-based.
pub fn left_right_maxima(p: &Perm) -> Vec<(usize, u8)> {
    let mut out = Vec::new();
    let mut best = 0u8;
    for (i, &v) in p.as_slice().iter().enumerate() {
        if v > best {
            best = v;
            out.push((i + 1, v));
        }
    }
    out
}

/// Leftmost ascent as `(index, bottom, top)`, or `None` for a decreasing permutation.
pub fn leftmost_ascent(p: &Perm) -> Option<(usize, u8, u8)> {
    let s = p.as_slice();
    (1..s.len()).find(|&i| s[i - 1] < s[i]).map(|i| (i, s[i - 1], s[i]))
}

/// Rightmost ascent as `(index, bottom, top)`.
pub fn rightmost_ascent(p: &Perm) -> Option<(usize, u8, u8)> {
    let s = p.as_slice();
    (1..s.len()).rev().find(|&i| s[i - 1] < s[i]).map(|i| (i, s[i - 1], s[i]))
}

/// The maximal decreasing prefix.
pub fn initial_descent_sequence(p: &Perm) -> Result<Vec<u8>, Error> {
    let s = p.as_slice();
    if s.is_empty() {
        return Err(Error::Precondition("empty permutation has no initial descent".into()));
    }
    let mut end = 1;
    while end < s.len() && s[end] < s[end - 1] {
        end += 1;
    }
    Ok(s[..end].to_vec())
}

/// Whether the values form a set of consecutive integers. The empty set qualifies.
pub fn is_consecutive_interval(values: &[u8]) -> bool {
    match (values.iter().min(), values.iter().max()) {
        (Some(&lo), Some(&hi)) => (hi - lo) as usize + 1 == values.len(),
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(!contains(&p("23154"), &p("2341")));
        assert!(contains(&p("23154"), &p("231")));
        assert!(contains(&p("3142"), &p("3142")));
        assert!(avoids_all(&p("24135"), &[p("1243"), p("2341"), p("4123")]));
    }

    #[test]
    fn statistics() {
        assert_eq!(left_right_maxima(&p("24153")), vec![(1, 2), (2, 4), (4, 5)]);
        assert_eq!(leftmost_ascent(&p("87436512")), Some((4, 3, 6)));
        assert_eq!(leftmost_ascent(&p("64325178")), Some((4, 2, 5)));
        assert_eq!(leftmost_ascent(&p("321")), None);
        assert_eq!(initial_descent_sequence(&p("64325178")).unwrap(), vec![6, 4, 3, 2]);
        assert!(initial_descent_sequence(&Perm::default()).is_err());
        assert!(is_consecutive_interval(&[]));
        assert!(is_consecutive_interval(&[4, 2, 3]));
        assert!(!is_consecutive_interval(&[6, 4, 3, 2]));
    }

    #[test]
    fn text_round_trip() {
        let long = Perm::new((1..=11).rev().collect()).unwrap();
        assert_eq!(long.to_string(), "11,10,9,8,7,6,5,4,3,2,1");
        assert_eq!(long.to_string().parse::<Perm>().unwrap(), long);
        let t: PatternTriple = "1234,1243,3412".parse().unwrap();
        assert_eq!(t.to_string(), "1234,1243,3412");
        assert!("1234,1234,3412".parse::<PatternTriple>().is_err());
        assert!("122".parse::<Perm>().is_err());
    }
}
