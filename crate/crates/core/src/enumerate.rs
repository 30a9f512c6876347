//! Generating-tree enumeration of pattern avoiders.
//!
//! Children of an avoider of length `n` are obtained by inserting `n + 1`
//! at one of its `n + 1` sites. A site is active when the insertion keeps the
//! permutation an avoider. Any new occurrence must use the inserted maximum, so
//! a pattern `p` kills exactly the sites that split an occurrence of `p` minus
//! its maximum at the position the maximum takes in `p`.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::perm::{self, PatternTriple, Perm};

pub const DEFAULT_CAPACITY: usize = 50_000_000;

/// Counts `a_0, a_1, ..., a_{n_max}`.
pub type CountSequence = Vec<u64>;

#[derive(Clone, Debug)]
struct Split {
    rest: Vec<u8>,
    q: usize,
}

/// Active-site oracle for a finite set of patterns.
#[derive(Clone, Debug)]
pub struct Avoider {
    patterns: Vec<Perm>,
    splits: Vec<Split>,
}

impl Avoider {
    pub fn new(patterns: &[Perm]) -> Self {
        let splits = patterns
            .iter()
            .map(|p| {
                let s = p.as_slice();
                let q = s.iter().position(|&v| v as usize == s.len()).unwrap_or(0);
                let rest = s.iter().copied().filter(|&v| v as usize != s.len()).collect();
                Split { rest, q }
            })
            .collect();
        Avoider { patterns: patterns.to_vec(), splits }
    }

    pub fn for_triple(t: &PatternTriple) -> Self {
        Avoider::new(&t.patterns)
    }

    pub fn patterns(&self) -> &[Perm] {
        &self.patterns
    }

    /// Bitmask of active sites of `p` (bit `s` for site `s`, `1 <= s <= n + 1`).
    /// `p` is assumed to avoid the patterns.
    pub fn active_mask(&self, p: &[u8]) -> u64 {
        let n = p.len();
        let full = ((1u64 << (n + 1)) - 1) << 1;
        let mut killed = 0u64;
        for sp in &self.splits {
            killed |= killed_sites(p, sp, full & !killed);
            if killed == full {
                break;
            }
        }
        full & !killed
    }

    pub fn active_sites(&self, p: &Perm) -> Vec<usize> {
        let m = self.active_mask(p.as_slice());
        (1..=p.len() + 1).filter(|s| m >> s & 1 == 1).collect()
    }

    /// Active sites lying to the left of the maximum entry.
    pub fn left_active_sites(&self, p: &Perm) -> Vec<usize> {
        let pos_max = p.as_slice().iter().position(|&v| v as usize == p.len()).map_or(0, |i| i + 1);
        self.active_sites(p).into_iter().filter(|&s| s <= pos_max).collect()
    }

    pub fn avoids(&self, p: &Perm) -> bool {
        perm::avoids_all(p, &self.patterns)
    }
}

#[inline]
fn range_mask(lo: usize, hi: usize) -> u64 {
    if lo > hi {
        0
    } else {
        ((1u64 << (hi - lo + 1)) - 1) << lo
    }
}

#[inline]
fn kill_range(pos: &[usize], q: usize, n: usize) -> u64 {
    let lo = if q == 0 { 1 } else { pos[q - 1] + 1 };
    let hi = if q == pos.len() { n + 1 } else { pos[q] };
    range_mask(lo, hi)
}

fn killed_sites(p: &[u8], sp: &Split, open: u64) -> u64 {
    let n = p.len();
    let r = &sp.rest;
    if r.len() > n {
        return 0;
    }
    let mut killed = 0u64;
    if r.len() == 3 {
        let (r0, r1, r2) = (r[0], r[1], r[2]);
        for i in 0..n {
            for j in i + 1..n {
                if (p[i] < p[j]) != (r0 < r1) {
                    continue;
                }
                for k in j + 1..n {
                    if (p[i] < p[k]) == (r0 < r2) && (p[j] < p[k]) == (r1 < r2) {
                        killed |= kill_range(&[i + 1, j + 1, k + 1], sp.q, n);
                        if killed & open == open {
                            return killed;
                        }
                    }
                }
            }
        }
        return killed;
    }
    let mut pos = Vec::with_capacity(r.len());
    occurrences(p, r, 0, &mut pos, &mut |pos| {
        killed |= kill_range(pos, sp.q, n);
    });
    killed
}

fn occurrences(p: &[u8], r: &[u8], start: usize, pos: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let k = pos.len();
    if k == r.len() {
        f(pos);
        return;
    }
    for i in start..p.len() {
        let ok = pos.iter().enumerate().all(|(t, &j)| (p[j - 1] < p[i]) == (r[t] < r[k]));
        if ok {
            pos.push(i + 1);
            occurrences(p, r, i + 1, pos, f);
            pos.pop();
        }
    }
}

/// All avoiders of one length, stored contiguously.
#[derive(Clone, Debug)]
pub struct Level {
    pub n: usize,
    data: Vec<u8>,
}

impl Level {
    pub fn root() -> Self {
        Level { n: 0, data: Vec::new() }
    }

    pub fn len(&self) -> usize {
        if self.n == 0 {
            1
        } else {
            self.data.len() / self.n
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> {
        let n = self.n;
        let count = self.len();
        (0..count).map(move |i| &self.data[i * n..(i + 1) * n])
    }

    pub fn perms(&self) -> Vec<Perm> {
        self.iter().map(|s| Perm::from_vec_unchecked(s.to_vec())).collect()
    }

    /// Number of children in the next level.
    pub fn child_count(&self, av: &Avoider) -> u64 {
        self.iter().map(|p| av.active_mask(p).count_ones() as u64).sum()
    }

    pub fn expand(&self, av: &Avoider, capacity: usize) -> Result<Level, Error> {
        let n = self.n + 1;
        let mut data = Vec::new();
        let mut stored = 0usize;
        for p in self.iter() {
            let mask = av.active_mask(p);
            for s in 1..=n {
                if mask >> s & 1 == 1 {
                    stored += 1;
                    if stored > capacity {
                        return Err(Error::Capacity { level: n, capacity });
                    }
                    data.extend_from_slice(&p[..s - 1]);
                    data.push(n as u8);
                    data.extend_from_slice(&p[s - 1..]);
                }
            }
        }
        Ok(Level { n, data })
    }
}

fn check_patterns(patterns: &[Perm]) -> Result<(), Error> {
    if patterns.iter().any(|p| p.is_empty()) {
        return Err(Error::Precondition("empty pattern".into()));
    }
    Ok(())
}

const MAX_N: usize = 30;

fn check_n(n: usize) -> Result<(), Error> {
    if n > MAX_N {
        return Err(Error::Precondition(format!("length {n} exceeds {MAX_N}")));
    }
    Ok(())
}

/// Level-by-level counts for any pattern set. The last level is counted from
/// active sites without being stored.
pub fn count_avoiders_of(patterns: &[Perm], n_max: usize, capacity: usize) -> Result<CountSequence, Error> {
    check_patterns(patterns)?;
    check_n(n_max)?;
    let av = Avoider::new(patterns);
    let mut out = vec![1u64];
    let mut level = Level::root();
    for n in 1..=n_max {
        if n == n_max {
            out.push(level.child_count(&av));
        } else {
            level = level.expand(&av, capacity)?;
            out.push(level.len() as u64);
        }
    }
    Ok(out)
}

pub fn count_avoiders(t: &PatternTriple, n_max: usize) -> Result<CountSequence, Error> {
    count_avoiders_of(&t.patterns, n_max, DEFAULT_CAPACITY)
}

pub fn count_avoiders_with_capacity(
    t: &PatternTriple,
    n_max: usize,
    capacity: usize,
) -> Result<CountSequence, Error> {
    count_avoiders_of(&t.patterns, n_max, capacity)
}

/// Depth-first counts that keep only the current branch in memory.
pub fn count_avoiders_dfs(patterns: &[Perm], n_max: usize) -> Result<CountSequence, Error> {
    check_patterns(patterns)?;
    check_n(n_max)?;
    let av = Avoider::new(patterns);
    let mut out = vec![0u64; n_max + 1];
    out[0] = 1;
    let mut buf = Vec::with_capacity(n_max);
    if n_max > 0 {
        dfs(&av, &mut buf, n_max, &mut out);
    }
    Ok(out)
}

fn dfs(av: &Avoider, p: &mut Vec<u8>, n_max: usize, out: &mut [u64]) {
    let n = p.len();
    let mask = av.active_mask(p);
    out[n + 1] += mask.count_ones() as u64;
    if n + 1 == n_max {
        return;
    }
    for s in 1..=n + 1 {
        if mask >> s & 1 == 1 {
            p.insert(s - 1, n as u8 + 1);
            dfs(av, p, n_max, out);
            p.remove(s - 1);
        }
    }
}

/// All avoiders of length `n` in lexicographic order.
pub fn avoiders_of(patterns: &[Perm], n: usize, capacity: usize) -> Result<Vec<Perm>, Error> {
    check_patterns(patterns)?;
    check_n(n)?;
    let av = Avoider::new(patterns);
    let mut level = Level::root();
    for _ in 0..n {
        level = level.expand(&av, capacity)?;
    }
    let mut v = level.perms();
    v.sort();
    Ok(v)
}

pub fn filtered_list(t: &PatternTriple, n: usize, pred: impl Fn(&Perm) -> bool) -> Result<Vec<Perm>, Error> {
    Ok(avoiders_of(&t.patterns, n, DEFAULT_CAPACITY)?.into_iter().filter(|p| pred(p)).collect())
}

/// Statistics used to refine counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    FirstLetter,
    LastLetter,
    NumLRMaxima,
    LeftmostAscent,
    /// Position `m` of `n` when `pi_1 < ... < pi_m = n`.
    IncreasingPrefixToMax,
    /// Length `m` of a decreasing prefix `n - 2 >= pi_1 > ... > pi_m` followed by `pi_{m+1} = n - 1`.
    DescendingPrefix,
    IdsConsecutive,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StatisticKey {
    FirstLetter(u8),
    LastLetter(u8),
    NumLRMaxima(usize),
    LeftmostAscent(u8, u8),
    NoAscent,
    IncreasingPrefixToMax(usize),
    DescendingPrefix(usize),
    IdsConsecutive(bool),
}

/// The statistic of `p`, or `None` when `p` lies outside its domain.
pub fn statistic(stat: Statistic, p: &Perm) -> Option<StatisticKey> {
    let s = p.as_slice();
    let n = s.len();
    match stat {
        Statistic::FirstLetter => s.first().map(|&v| StatisticKey::FirstLetter(v)),
        Statistic::LastLetter => s.last().map(|&v| StatisticKey::LastLetter(v)),
        Statistic::NumLRMaxima => Some(StatisticKey::NumLRMaxima(perm::left_right_maxima(p).len())),
        Statistic::LeftmostAscent => Some(match perm::leftmost_ascent(p) {
            Some((_, a, b)) => StatisticKey::LeftmostAscent(a, b),
            None => StatisticKey::NoAscent,
        }),
        Statistic::IncreasingPrefixToMax => {
            let m = s.iter().position(|&v| v as usize == n)? + 1;
            s[..m].windows(2).all(|w| w[0] < w[1]).then_some(StatisticKey::IncreasingPrefixToMax(m))
        }
        Statistic::DescendingPrefix => {
            if n < 3 {
                return None;
            }
            let m = s.iter().position(|&v| v as usize == n - 1)?;
            let ok = m >= 1 && s[0] as usize <= n - 2 && s[..m].windows(2).all(|w| w[0] > w[1]);
            ok.then_some(StatisticKey::DescendingPrefix(m))
        }
        Statistic::IdsConsecutive => {
            let ids = perm::initial_descent_sequence(p).ok()?;
            Some(StatisticKey::IdsConsecutive(perm::is_consecutive_interval(&ids)))
        }
    }
}

pub fn refined_count(t: &PatternTriple, n: usize, stat: Statistic) -> Result<BTreeMap<StatisticKey, u64>, Error> {
    refined_count_of(&t.patterns, n, stat)
}

pub fn refined_count_of(patterns: &[Perm], n: usize, stat: Statistic) -> Result<BTreeMap<StatisticKey, u64>, Error> {
    let mut out = BTreeMap::new();
    for p in avoiders_of(patterns, n, DEFAULT_CAPACITY)? {
        if let Some(k) = statistic(stat, &p) {
            *out.entry(k).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Advances `v` to the next permutation in lexicographic order.
pub fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Visits every permutation of length `n` in lexicographic order.
pub fn for_each_perm(n: usize, mut f: impl FnMut(&Perm)) {
    let mut v: Vec<u8> = (1..=n as u8).collect();
    loop {
        let p = Perm::from_vec_unchecked(v.clone());
        f(&p);
        if !next_permutation(&mut v) {
            break;
        }
    }
}

/// Avoiders of length `n` found by scanning all `n!` permutations.
pub fn brute_force_avoiders(patterns: &[Perm], n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for_each_perm(n, |p| {
        if perm::avoids_all(p, patterns) {
            out.push(p.clone());
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::named_triple;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn matches_factorial_scan() {
        for case in [74, 125, 188, 240] {
            let t = named_triple(case).unwrap();
            let counts = count_avoiders(&t, 8).unwrap();
            for n in 0..=8 {
                assert_eq!(counts[n], brute_force_avoiders(&t.patterns, n).len() as u64, "case {case} n {n}");
            }
            assert_eq!(counts, count_avoiders_dfs(&t.patterns, 8).unwrap());
        }
    }

    #[test]
    fn single_patterns() {
        let c = count_avoiders_of(&[p("132")], 8, DEFAULT_CAPACITY).unwrap();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
        let c = count_avoiders_of(&[p("1234")], 7, DEFAULT_CAPACITY).unwrap();
        assert_eq!(c, vec![1, 1, 2, 6, 23, 103, 513, 2761]);
        let c = count_avoiders_of(&[p("12345")], 7, DEFAULT_CAPACITY).unwrap();
        assert_eq!(c, vec![1, 1, 2, 6, 24, 119, 694, 4582]);
    }

    #[test]
    fn capacity_error() {
        let t = named_triple(74).unwrap();
        assert!(matches!(count_avoiders_with_capacity(&t, 8, 100), Err(Error::Capacity { .. })));
    }

    #[test]
    fn active_sites_examples() {
        let av = Avoider::for_triple(&named_triple(240).unwrap());
        assert_eq!(av.left_active_sites(&p("23154")), vec![1, 2, 4]);
        assert_eq!(av.active_sites(&p("231")), vec![1, 2, 4]);
        let av = Avoider::for_triple(&named_triple(109).unwrap());
        assert_eq!(av.active_sites(&p("321")), vec![1, 3, 4]);
        assert_eq!(av.active_sites(&p("213")), vec![1, 2, 4]);
    }

    #[test]
    fn statistics() {
        assert_eq!(statistic(Statistic::IncreasingPrefixToMax, &p("2413")), Some(StatisticKey::IncreasingPrefixToMax(2)));
        assert_eq!(statistic(Statistic::IncreasingPrefixToMax, &p("3241")), None);
        assert_eq!(statistic(Statistic::DescendingPrefix, &p("2134")), Some(StatisticKey::DescendingPrefix(2)));
        assert_eq!(statistic(Statistic::DescendingPrefix, &p("4312")), None);
        assert_eq!(statistic(Statistic::LeftmostAscent, &p("321")), Some(StatisticKey::NoAscent));
    }
}
