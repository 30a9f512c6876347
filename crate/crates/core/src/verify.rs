//! The verification suite: every claim the library makes, checked against an
//! independent computation and reported one entry per check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cases::{self, NAMED_CASES};
use crate::catalog::{self, gf_catalog, intermediate_gf};
use crate::enumerate::{
    self, avoiders_of, count_avoiders_dfs, count_avoiders_of, filtered_list, refined_count, refined_count_of,
    Statistic, StatisticKey, DEFAULT_CAPACITY,
};
use crate::error::Error;
use crate::forest::{self, Label, RuleSystem};
use crate::formulas::{self, oracle::oracle, param_space, FAMILIES};
use crate::perm::{self, Perm};
use crate::series::{catalan_series, solve_algebraic};
use crate::symmetry::{self, Symmetry};
use crate::{RatSeries, Rational, Scalar, Sqrt5, Sqrt5Series};

/// Every operation the suite must exercise.
pub const ALL_OPS: &[&str] = &[
    "contains",
    "avoids_all",
    "left_right_maxima",
    "leftmost_ascent",
    "initial_descent_sequence",
    "is_consecutive_interval",
    "reverse",
    "complement",
    "inverse",
    "symmetry_classes",
    "wilf_group",
    "count_avoiders",
    "refined_count",
    "filtered_list",
    "add",
    "sub",
    "mul",
    "scale",
    "shift",
    "div",
    "sqrt",
    "catalan_series",
    "solve_algebraic",
    "gf_catalog",
    "intermediate_gf",
    "catalan_refined_first_letter",
    "catalan_refined_ascent_index",
    "case74_b",
    "case74_ids2",
    "case74_d",
    "case74_a",
    "case125_u",
    "case125_uprime",
    "case125_b",
    "case125_d",
    "case125_e",
    "case125_g",
    "case125_a",
    "case149_e",
    "case149_e_star",
    "case149_e_nl",
    "case149_g",
    "case149_b",
    "case149_d_ab",
    "case149_d",
    "case149_a",
    "case185_b",
    "case185_d",
    "case185_v",
    "case185_w",
    "case185_e",
    "case185_g",
    "case185_a",
    "succ_children",
    "level_counts",
    "active_sites",
    "label_of",
    "verify_rules",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest length for brute-force oracles.
    pub n_max: usize,
    /// Truncation order for series identities.
    pub order: usize,
    pub capacity: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: 10, order: crate::DEFAULT_ORDER, capacity: DEFAULT_CAPACITY }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: String,
    pub case_id: Option<u32>,
    /// Inclusive range of lengths or series indices covered.
    pub n_range: (usize, usize),
    pub passed: bool,
    /// What failed: a permutation, a coefficient index or a label.
    pub witness: Option<String>,
    /// Operations exercised.
    pub ops: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub entries: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn covered_ops(&self) -> BTreeSet<&str> {
        self.entries.iter().flat_map(|e| e.ops.iter().map(String::as_str)).collect()
    }

    /// Operations in [`ALL_OPS`] no entry exercised.
    pub fn uncovered_ops(&self) -> Vec<&'static str> {
        let covered = self.covered_ops();
        ALL_OPS.iter().copied().filter(|op| !covered.contains(op)).collect()
    }
}

/// Outcome of one check: the range it covered and, on failure, a witness.
struct Outcome {
    range: (usize, usize),
    witness: Option<String>,
}

fn pass(range: (usize, usize)) -> Outcome {
    Outcome { range, witness: None }
}

fn verdict(range: (usize, usize), witness: Option<String>) -> Outcome {
    Outcome { range, witness }
}

type Run = Box<dyn Fn(&VerifyConfig) -> Result<Outcome, Error> + Send + Sync>;

struct CheckDef {
    id: String,
    case_id: Option<u32>,
    ops: Vec<String>,
    run: Run,
}

fn def(id: impl Into<String>, case_id: Option<u32>, ops: &[&str], run: Run) -> CheckDef {
    CheckDef { id: id.into(), case_id, ops: ops.iter().map(|s| s.to_string()).collect(), run }
}

fn execute(d: &CheckDef, cfg: &VerifyConfig) -> CheckResult {
    let (range, passed, witness) = match (d.run)(cfg) {
        Ok(o) => (o.range, o.witness.is_none(), o.witness),
        Err(e) => ((0, 0), false, Some(format!("error: {e}"))),
    };
    CheckResult { id: d.id.clone(), case_id: d.case_id, n_range: range, passed, witness, ops: d.ops.clone() }
}

/// First index where two sequences differ, rendered as a witness.
fn first_mismatch<A: Display + PartialEq, B: Display>(left: &[A], right: &[B], eq: impl Fn(&A, &B) -> bool) -> Option<String> {
    if left.len() != right.len() {
        return Some(format!("lengths {} vs {}", left.len(), right.len()));
    }
    left.iter().zip(right).position(|(a, b)| !eq(a, b)).map(|i| format!("index {i}: {} vs {}", left[i], right[i]))
}

fn same_ints(left: &[BigInt], right: &[u64]) -> Option<String> {
    first_mismatch(left, right, |a, b| *a == BigInt::from(*b))
}

fn series_witness(name: &str, s: &RatSeries) -> Option<String> {
    s.valuation().map(|i| format!("{name}: nonzero coefficient at x^{i}"))
}

fn pats(list: &[&str]) -> Vec<Perm> {
    list.iter().map(|s| s.parse().expect("literal pattern")).collect()
}

fn triple_patterns(case: u32) -> Result<Vec<Perm>, Error> {
    Ok(cases::named_triple(case).ok_or(Error::UnknownCase(case))?.patterns.to_vec())
}

fn ints(c: &[i64], m: usize) -> RatSeries {
    RatSeries::from_ints(c, m)
}

fn contains_naive(host: &Perm, pattern: &Perm) -> bool {
    let (n, k) = (host.len(), pattern.len());
    if k > n {
        return false;
    }
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let sub: Vec<u8> = (0..n).filter(|i| m >> i & 1 == 1).map(|i| host.as_slice()[i]).collect();
        Perm::standardize(&sub) == *pattern
    })
}

fn check_contains(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let top = cfg.n_max.min(7);
    let spot = [("1432", "132", true), ("321", "123", false), ("23154", "2341", false)];
    for (h, p, want) in spot {
        if perm::contains(&h.parse()?, &p.parse()?) != want {
            return Ok(verdict((0, top), Some(format!("{h} contains {p}"))));
        }
    }
    let patterns = pats(&["132", "2341", "1243", "3412", "4123", "21"]);
    for n in 0..=top {
        let mut bad = None;
        enumerate::for_each_perm(n, |h| {
            if bad.is_none() {
                if let Some(p) = patterns.iter().find(|p| perm::contains(h, p) != contains_naive(h, p)) {
                    bad = Some(format!("{h} / {p}"));
                }
            }
        });
        if bad.is_some() {
            return Ok(verdict((0, top), bad));
        }
    }
    Ok(pass((0, top)))
}

fn check_avoids_all(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let top = cfg.n_max.min(8);
    let spot = [("2413", ["1243", "2413", "3142"], false), ("24135", ["1243", "2341", "4123"], true)];
    for (h, t, want) in spot {
        if perm::avoids_all(&h.parse()?, &pats(&t)) != want {
            return Ok(verdict((0, top), Some(h.to_string())));
        }
    }
    for (case, t) in NAMED_CASES {
        let t = pats(&t);
        let fast = count_avoiders_of(&t, top, cfg.capacity)?;
        for n in 0..=top {
            let slow = enumerate::brute_force_avoiders(&t, n).len() as u64;
            if slow != fast[n] {
                return Ok(verdict((0, top), Some(format!("case {case} n={n}: {slow} vs {}", fast[n]))));
            }
        }
    }
    Ok(pass((0, top)))
}

fn check_statistics(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let p = |s: &str| s.parse::<Perm>();
    let mut bad = Vec::new();
    if perm::left_right_maxima(&p("24153")?) != vec![(1, 2), (2, 4), (4, 5)] {
        bad.push("left_right_maxima(24153)");
    }
    if perm::left_right_maxima(&p("321")?) != vec![(1, 3)] {
        bad.push("left_right_maxima(321)");
    }
    if perm::leftmost_ascent(&p("87436512")?) != Some((4, 3, 6)) || perm::leftmost_ascent(&p("64325178")?) != Some((4, 2, 5)) {
        bad.push("leftmost_ascent");
    }
    if perm::leftmost_ascent(&p("4321")?).is_some() {
        bad.push("leftmost_ascent(4321)");
    }
    if perm::initial_descent_sequence(&p("64325178")?)? != vec![6, 4, 3, 2]
        || perm::initial_descent_sequence(&p("12345")?)? != vec![1]
        || perm::initial_descent_sequence(&p("54321")?)?.len() != 5
    {
        bad.push("initial_descent_sequence");
    }
    if !perm::is_consecutive_interval(&[3, 4, 5]) || perm::is_consecutive_interval(&[2, 4, 5]) || !perm::is_consecutive_interval(&[6]) {
        bad.push("is_consecutive_interval");
    }
    // Direct rescans over all short permutations.
    let top = cfg.n_max.min(7);
    for n in 1..=top {
        enumerate::for_each_perm(n, |q| {
            let s = q.as_slice();
            let lr: Vec<(usize, u8)> = (0..n).filter(|&i| s[..i].iter().all(|&v| v < s[i])).map(|i| (i + 1, s[i])).collect();
            if perm::left_right_maxima(q) != lr {
                bad.push("left_right_maxima scan");
            }
            let asc = (0..n - 1).find(|&i| s[i] < s[i + 1]).map(|i| (i + 1, s[i], s[i + 1]));
            if perm::leftmost_ascent(q) != asc {
                bad.push("leftmost_ascent scan");
            }
            let ids_len = asc.map_or(n, |(i, _, _)| i);
            if perm::initial_descent_sequence(q).map(|v| v.len()).ok() != Some(ids_len) {
                bad.push("initial_descent_sequence scan");
            }
        });
    }
    bad.dedup();
    Ok(verdict((1, top), (!bad.is_empty()).then(|| bad.join(", "))))
}

fn check_symmetry_group(_: &VerifyConfig) -> Result<Outcome, Error> {
    let mut bad = Vec::new();
    if symmetry::inverse(&"2413".parse()?) != "3142".parse()? || symmetry::complement(&"1234".parse()?) != "4321".parse()? {
        bad.push("spot values".to_string());
    }
    let all = Symmetry::all();
    enumerate::for_each_perm(5, |p| {
        let (r, c, i) = (symmetry::reverse(p), symmetry::complement(p), symmetry::inverse(p));
        if symmetry::reverse(&r) != *p || symmetry::complement(&c) != *p || symmetry::inverse(&i) != *p {
            bad.push(format!("involution fails at {p}"));
        }
        if symmetry::reverse(&c) != symmetry::complement(&r) {
            bad.push(format!("reverse and complement do not commute at {p}"));
        }
        // inverse(reverse(p)) = complement(inverse(p))
        if symmetry::inverse(&r) != symmetry::complement(&i) {
            bad.push(format!("inverse-reverse relation fails at {p}"));
        }
        let images: BTreeSet<Perm> = all.iter().map(|s| s.apply(p)).collect();
        for s in &all {
            for t in &all {
                if !images.contains(&t.apply(&s.apply(p))) {
                    bad.push(format!("not closed under composition at {p}"));
                }
            }
        }
    });
    bad.dedup();
    Ok(verdict((5, 5), bad.into_iter().next()))
}

fn check_symmetry_classes(_: &VerifyConfig) -> Result<Outcome, Error> {
    let triples = symmetry::all_triples();
    let classes = symmetry::symmetry_classes();
    let orbit_total: usize = classes.iter().map(|c| c.orbit.len()).sum();
    let mut witness = None;
    if triples.len() != 2024 || classes.len() != 317 || orbit_total != 2024 {
        witness = Some(format!("{} triples, {} classes, {orbit_total} in orbits", triples.len(), classes.len()));
    } else if let Some(c) = classes.iter().find(|c| 8 % c.orbit.len() != 0) {
        witness = Some(format!("orbit of {} has size {}", c.representative, c.orbit.len()));
    } else {
        let named: BTreeSet<u32> = classes.iter().filter_map(|c| c.case_id()).collect();
        if named.len() != NAMED_CASES.len() {
            witness = Some(format!("only {} named classes", named.len()));
        }
    }
    Ok(verdict((4, 4), witness))
}

fn check_wilf(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let n_max = cfg.n_max.max(5);
    let classes = symmetry::symmetry_classes();
    let seqs = symmetry::class_sequences(&classes, n_max, symmetry::dfs_counter)?;
    let counts: Vec<usize> = (5..=n_max).map(|n| symmetry::group_by_sequence(&classes, &seqs, n).len()).collect();
    let rendered = counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    let monotone = counts.windows(2).all(|w| w[0] <= w[1]);
    let last = *counts.last().expect("nonempty");
    let ok = monotone && last <= 242 && (n_max < 9 || last == 242);
    Ok(verdict((5, n_max), (!ok).then(|| format!("groups for n=5..{n_max}: {rendered}"))))
}

fn check_count_vs_catalog(case: u32, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let t = triple_patterns(case)?;
    let counts = count_avoiders_of(&t, cfg.n_max, cfg.capacity)?;
    let dfs = count_avoiders_dfs(&t, cfg.n_max)?;
    let f = gf_catalog(case, cfg.n_max)?.to_integers()?;
    let w = same_ints(&f, &counts).or_else(|| first_mismatch(&counts, &dfs, |a, b| a == b).map(|w| format!("dfs {w}")));
    Ok(verdict((0, cfg.n_max), w))
}

fn check_refined(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let n = cfg.n_max.min(8);
    for t in cases::all_named() {
        let total = count_avoiders_of(&t.patterns, n, cfg.capacity)?[n];
        for stat in [Statistic::FirstLetter, Statistic::LastLetter, Statistic::NumLRMaxima, Statistic::LeftmostAscent] {
            let sum: u64 = refined_count(&t, n, stat)?.values().sum();
            if sum != total {
                return Ok(verdict((n, n), Some(format!("{t} {stat:?}: {sum} vs {total}"))));
            }
        }
    }
    let t125 = cases::named_triple(125).ok_or(Error::UnknownCase(125))?;
    let by_ascent = refined_count(&t125, 4, Statistic::LeftmostAscent)?;
    let top_n: u64 = by_ascent.iter().filter(|(k, _)| matches!(k, StatisticKey::LeftmostAscent(a, 4) if *a >= 2)).map(|(_, v)| v).sum();
    let listed: Vec<String> = filtered_list(&t125, 4, |p| matches!(perm::leftmost_ascent(p), Some((_, a, 4)) if a >= 2))?
        .iter()
        .map(|p| p.to_string())
        .collect();
    if top_n != 5 || listed != ["2413", "2431", "3241", "3412", "3421"] {
        return Ok(verdict((4, 4), Some(format!("125 top-n class at n=4: {top_n} {listed:?}"))));
    }
    Ok(pass((4, n)))
}

fn check_series_ring(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let m = cfg.order;
    let a = ints(&[1, 2, -3, 5, 0, 7, -1, 4, 9, -2, 3, 1, 1, -6, 2, 8, 5], m);
    let b = ints(&[2, -1, 4, 0, 3, -5, 1, 1, 0, 2, -7, 3, 6, 1, -1, 2, 4], m);
    let c = ints(&[0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987], m);
    let three = Rational::from_i64(3);
    let mut bad = Vec::new();
    if &(&a + &b) - &b != a {
        bad.push("add/sub");
    }
    if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) || &a * &b != &b * &a {
        bad.push("mul");
    }
    if a.scale(&three) != &(&a + &a) + &a {
        bad.push("scale");
    }
    if a.shift(2) != &ints(&[0, 0, 1], m) * &a {
        bad.push("shift");
    }
    if &a.div(&b)? * &b != a {
        bad.push("div");
    }
    let sq = &a * &a;
    if sq.sqrt()? != a {
        bad.push("sqrt");
    }
    // The same identities over Q(sqrt 5), plus conjugation being a ring map.
    let root = Sqrt5Series::constant(Sqrt5::root(), m);
    let (qa, qb) = (&Sqrt5Series::lift(&a) + &(&root * &Sqrt5Series::lift(&c)), Sqrt5Series::lift(&b));
    if (&qa * &qb).conj() != &qa.conj() * &qb.conj() || &qa.div(&qb)? * &qb != qa {
        bad.push("sqrt5 field");
    }
    Ok(verdict((0, m), (!bad.is_empty()).then(|| bad.join(", "))))
}

fn check_catalan(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let m = cfg.order;
    let c = catalan_series::<Rational>(m)?;
    let one = RatSeries::one(m);
    let mut w = series_witness("xC^2 - (C - 1)", &(&(&c * &c).shift(1) - &(&c - &one)));
    if w.is_none() {
        let alt = one.div(&(&one - &c.shift(1)))?;
        w = series_witness("C - 1/(1 - xC)", &(&c - &alt));
    }
    if w.is_none() {
        let closed: Vec<BigInt> = (0..=m as i64).map(formulas::catalan).collect();
        w = first_mismatch(&c.to_integers()?, &closed, |a, b| a == b);
    }
    Ok(verdict((0, m), w))
}

fn check_algebraic(case: u32, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let eq = catalog::equation(case, cfg.order)?;
    let f = solve_algebraic(&eq)?;
    let w = series_witness("residual", &eq.residual(&f))
        .or_else(|| series_witness("solver vs catalog", &(&f - &gf_catalog(case, cfg.order).ok()?)));
    Ok(verdict((0, cfg.order), w))
}

fn check_case240(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let m = cfg.order;
    let (v1, v2) = catalog::case240_roots(m + 1)?;
    let mut bad = Vec::new();
    for (name, v) in [("v'", &v1), ("v''", &v2)] {
        let k = catalog::case240_kernel(v);
        if let Some(i) = k.valuation() {
            bad.push(format!("K(x,{name}) nonzero at x^{i}"));
        }
    }
    if v1.conj() != v2 {
        bad.push("conjugation does not swap the roots".into());
    }
    // The theorem's expression itself, before projection to Q.
    gf_catalog(240, m)?;
    Ok(verdict((0, m), bad.into_iter().next()))
}

fn check_integrality(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    for (case, _) in NAMED_CASES {
        let f = gf_catalog(case, cfg.order)?.to_integers()?;
        let head: Vec<BigInt> = [1, 1, 2, 6, 21].iter().map(|&v| BigInt::from(v)).collect();
        if f[..5] != head[..] || f.iter().any(|c| *c < BigInt::zero()) {
            return Ok(verdict((0, cfg.order), Some(format!("case {case}: {:?}", &f[..5]))));
        }
    }
    Ok(pass((0, cfg.order)))
}

fn igf(case: u32, name: &str, m: usize) -> Result<RatSeries, Error> {
    intermediate_gf(case, name, m)
}

/// Assembly identity of `case`, as a series that must vanish.
fn assembly_residual(case: u32, m: usize) -> Result<RatSeries, Error> {
    let f = gf_catalog(case, m)?;
    let one = RatSeries::one(m);
    let x = RatSeries::x(m);
    let sum = |names: &[&str]| -> Result<RatSeries, Error> {
        names.iter().try_fold(RatSeries::zero(m), |acc, n| Ok(&acc + &igf(case, n, m)?))
    };
    Ok(match case {
        109 | 240 => {
            let names: &[&str] = if case == 109 { &["A", "B", "C", "D"] } else { &["A", "B", "C"] };
            &f - &(&(&one + &x) + &sum(names)?)
        }
        121 => {
            let g2 = igf(121, "G2", m)?;
            let lhs = &(&(&f - &one) - &f.shift(1)) - &g2;
            let tail = ints(&[0, 0, 0, 0, 1], m).div(&(&ints(&[1, -1], m).pow(3) * &ints(&[1, -2], m)))?;
            let rhs = &g2.shift(1).div(&ints(&[1, -1], m))? + &tail;
            &lhs - &rhs
        }
        125 | 185 => {
            let c = catalan_series::<Rational>(m)?;
            let rhs = &(&(&one + &x) + &sum(&["B", "D", "E", "G"])?) + &(&c - &one).shift(1);
            &f - &rhs
        }
        149 => &f - &(&(&one + &sum(&["B", "D"])?) + &igf(149, "E", m)?.shift(1)),
        188 => {
            let names = ["A", "Ap", "App", "B", "Bp", "G", "Gp", "D", "L", "Lp", "Lpp"];
            &f - &(&(&one + &x) + &sum(&names)?)
        }
        228 => {
            let g2 = igf(228, "G2", m)?;
            let x2f2 = (&f * &f).shift(2);
            let fm1 = &f - &one;
            let rhs = &(&(&(&one + &f.shift(1)) + &g2) + &(&f * &(&fm1 - &f.shift(1))).shift(1)) + &(&fm1 * &(&g2 - &x2f2));
            &f - &rhs
        }
        _ => return Err(Error::UnknownCase(case)),
    })
}

pub const ASSEMBLY_CASES: [u32; 8] = [109, 121, 125, 149, 185, 188, 228, 240];

fn check_assembly(case: u32, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let mut w = series_witness("assembly", &assembly_residual(case, cfg.order)?);
    if case == 125 && w.is_none() {
        // D = xB + x^5 / ((1-x)^3 (1-2x)).
        let m = cfg.order;
        let tail = ints(&[0, 0, 0, 0, 0, 1], m).div(&(&ints(&[1, -1], m).pow(3) * &ints(&[1, -2], m)))?;
        let r = &(&igf(125, "D", m)? - &igf(125, "B", m)?.shift(1)) - &tail;
        w = series_witness("D - xB", &r);
    }
    Ok(verdict((0, cfg.order), w))
}

/// Brute-force refined counts matching an intermediate series.
fn intermediate_oracle(case: u32, name: &str, n_max: usize) -> Result<Vec<u64>, Error> {
    let lr2 = |p: &Perm| perm::left_right_maxima(p).len() == 2;
    (0..=n_max)
        .map(|n| -> Result<u64, Error> {
            Ok(match (case, name) {
                (121, "M") => {
                    let t = triple_patterns(121)?;
                    avoiders_of(&t, n, DEFAULT_CAPACITY)?.iter().filter(|p| lr2(p) && p.as_slice()[0] as usize + 2 <= n).count() as u64
                }
                (121 | 228, "G2") => {
                    let t = triple_patterns(case)?;
                    avoiders_of(&t, n, DEFAULT_CAPACITY)?.iter().filter(|p| lr2(p)).count() as u64
                }
                (216, "H_total") => refined_count_of(&triple_patterns(216)?, n, Statistic::IncreasingPrefixToMax)?.values().sum(),
                (230, "B_1") => refined_count_of(&triple_patterns(230)?, n, Statistic::DescendingPrefix)?
                    .get(&StatisticKey::DescendingPrefix(1))
                    .copied()
                    .unwrap_or(0),
                (149, "E") => count_avoiders_of(&pats(&["123", "3412"]), n, DEFAULT_CAPACITY)?[n],
                _ => return Err(Error::UnknownName { case, name: name.to_string() }),
            })
        })
        .collect()
}

pub const INTERMEDIATE_ORACLES: [(u32, &str); 6] = [(121, "M"), (121, "G2"), (216, "H_total"), (228, "G2"), (230, "B_1"), (149, "E")];

fn check_intermediate_oracle(case: u32, name: &'static str, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let s = igf(case, name, cfg.n_max)?.to_integers()?;
    let o = intermediate_oracle(case, name, cfg.n_max)?;
    Ok(verdict((0, cfg.n_max), same_ints(&s, &o)))
}

/// The auxiliary series of 125, 149 and 185 are the generating functions of
/// formula families.
fn check_series_vs_families(case: u32, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let pairs: &[(&str, &str)] = match case {
        125 | 185 => &[("B", "b"), ("D", "d"), ("E", "e"), ("G", "g")],
        149 => &[("E", "e"), ("B", "b"), ("D", "d")],
        _ => return Err(Error::UnknownCase(case)),
    };
    let m = cfg.order;
    for (series, fam) in pairs {
        let s = igf(case, series, m)?.to_integers()?;
        let f = formulas::sequence_family(case, fam, m)?;
        let vals: Vec<BigInt> = (0..=m).map(|n| f.values.get(&n).cloned().unwrap_or_default()).collect();
        if let Some(w) = first_mismatch(&s, &vals, |a, b| a == b) {
            return Ok(verdict((0, m), Some(format!("{series} vs {fam}: {w}"))));
        }
    }
    Ok(pass((0, m)))
}

fn family_op(case: u32, name: &str) -> String {
    match (case, name) {
        (0, "C") => "catalan_refined_first_letter".into(),
        (0, _) => "catalan_refined_ascent_index".into(),
        _ => format!("case{case}_{name}"),
    }
}

fn check_family(case: u32, name: &'static str, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let spec = formulas::family(case, name)?;
    let top = cfg.n_max.min(9);
    let mut population: BTreeMap<usize, Vec<Perm>> = BTreeMap::new();
    for n in 0..=top {
        for args in param_space(spec, n) {
            let o = oracle(case, name, &args)?;
            let pop = match population.get(&n) {
                Some(p) => p,
                None => {
                    population.insert(n, avoiders_of(&o.patterns, n, cfg.capacity)?);
                    &population[&n]
                }
            };
            let want = o.count_in(pop);
            let got = formulas::evaluate(case, name, &args)?;
            if got != BigInt::from(want) {
                return Ok(verdict((0, top), Some(format!("args {args:?}: formula {got}, brute force {want}"))));
            }
        }
    }
    Ok(pass((0, top)))
}

/// Spot values quoted alongside the lemmas.
pub const SPOT_VALUES: [(u32, &str, &[usize], i64); 11] = [
    (125, "b", &[3], 1),
    (125, "b", &[4], 5),
    (125, "d", &[5], 6),
    (125, "e", &[5], 2),
    (185, "b", &[3], 1),
    (185, "b", &[4], 5),
    (185, "e", &[5], 2),
    (185, "v", &[6], 3),
    (185, "w", &[7], 1),
    (149, "e_nl", &[4, 2], 5),
    (149, "e_nl", &[4, 3], 3),
];

fn check_spot_values(_: &VerifyConfig) -> Result<Outcome, Error> {
    for (case, name, args, want) in SPOT_VALUES {
        let got = formulas::evaluate(case, name, args)?;
        if got != BigInt::from(want) {
            return Ok(verdict((3, 7), Some(format!("{case}:{name}{args:?} = {got}, expected {want}"))));
        }
    }
    Ok(pass((3, 7)))
}

fn check_level_counts(case: u32, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let sys = RuleSystem::for_case(case)?;
    let top = cfg.order.max(cfg.n_max);
    let levels = forest::level_counts(&sys, top)?;
    let brute = count_avoiders_of(sys.patterns(), cfg.n_max, cfg.capacity)?;
    let f = gf_catalog(case, cfg.order)?.to_integers()?;
    let w = first_mismatch(&levels[..=cfg.n_max], &brute, |a, b| *a == (*b).into())
        .map(|w| format!("brute force {w}"))
        .or_else(|| first_mismatch(&levels[..=cfg.order], &f, |a, b| BigInt::from(a.clone()) == *b).map(|w| format!("series {w}")));
    Ok(verdict((2, top), w))
}

fn check_verify_rules(sys: RuleSystem, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let n = cfg.n_max.clamp(2, 10);
    let r = forest::verify_rules(&sys, n)?;
    Ok(verdict((2, n), r.failures.first().map(|f| format!("{}: {}", f.witness, f.detail))))
}

fn check_forest_examples(_: &VerifyConfig) -> Result<Outcome, Error> {
    use Label::*;
    let s240 = RuleSystem::for_case(240)?;
    let s109 = RuleSystem::for_case(109)?;
    let s188 = RuleSystem::for_case(188)?;
    let sorted = |mut v: Vec<Label>| {
        v.sort();
        v
    };
    let p = |s: &str| s.parse::<Perm>();
    let mut bad = Vec::new();
    if sorted(forest::succ_children(&s240, &Plain(3))?) != sorted(vec![Bar(3), Bar(4), Plain(4)]) {
        bad.push("240 children of 3");
    }
    if sorted(forest::succ_children(&s240, &Bar(3))?) != sorted(vec![Bar(3), DBar(3), Plain(4)]) {
        bad.push("240 children of 3'");
    }
    if forest::succ_children(&s188, &Beta(5))? != vec![Gamma(3), BetaP(5), BetaP(6), Beta(5), AlphaIK(2, 2)] {
        bad.push("188 children of beta(5)");
    }
    if forest::succ_children(&s240, &Gamma(3)).is_ok() {
        bad.push("label from another system accepted");
    }
    if forest::active_sites(&p("12")?, s240.patterns())? != vec![1, 2, 3]
        || forest::active_sites(&p("321")?, s109.patterns())? != vec![1, 3, 4]
    {
        bad.push("active sites");
    }
    let pairs = [(&s240, "12", Plain(3)), (&s240, "21", Bar(3)), (&s240, "231", DBar(3)), (&s109, "213", TBar(3))];
    for (sys, q, want) in pairs {
        if forest::label_of(&p(q)?, sys)? != want {
            bad.push("label_of");
        }
    }
    if !matches!(forest::label_of(&p("12")?, &s188), Err(Error::Unsupported(_))) {
        bad.push("188 labels should be unsupported");
    }
    bad.dedup();
    Ok(verdict((2, 3), (!bad.is_empty()).then(|| bad.join(", "))))
}

fn check_forest_families(case: u32, cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let sys = RuleSystem::for_case(case)?;
    let m = cfg.order;
    for (name, row) in forest::family_counts(&sys, m)? {
        let s = igf(case, name, m)?.to_integers()?;
        if let Some(w) = first_mismatch(&row, &s, |a, b| BigInt::from(a.clone()) == *b) {
            return Ok(verdict((2, m), Some(format!("family {name}: {w}"))));
        }
    }
    Ok(pass((2, m)))
}

fn check_av132(cfg: &VerifyConfig) -> Result<Outcome, Error> {
    let sys = RuleSystem::av132();
    let m = cfg.order;
    let c: Vec<BigInt> = (0..=m as i64).map(formulas::catalan).collect();
    let levels = forest::level_counts(&sys, m)?;
    let w = first_mismatch(&levels, &c, |a, b| BigInt::from(a.clone()) == *b);
    if w.is_some() {
        return Ok(verdict((2, m), w));
    }
    check_verify_rules(sys, cfg)
}

fn checks() -> Vec<CheckDef> {
    let mut out = vec![
        def("perm.contains", None, &["contains"], Box::new(check_contains)),
        def("perm.avoids_all", None, &["avoids_all"], Box::new(check_avoids_all)),
        def(
            "perm.statistics",
            None,
            &["left_right_maxima", "leftmost_ascent", "initial_descent_sequence", "is_consecutive_interval"],
            Box::new(check_statistics),
        ),
        def("symmetry.group", None, &["reverse", "complement", "inverse"], Box::new(check_symmetry_group)),
        def("symmetry.classes", None, &["symmetry_classes"], Box::new(check_symmetry_classes)),
        def("symmetry.wilf", None, &["wilf_group", "count_avoiders"], Box::new(check_wilf)),
        def("enumeration.refined", None, &["refined_count", "filtered_list"], Box::new(check_refined)),
        def("series.ring", None, &["add", "sub", "mul", "scale", "shift", "div", "sqrt"], Box::new(check_series_ring)),
        def("series.catalan", None, &["catalan_series"], Box::new(check_catalan)),
        def("series.integrality", None, &["gf_catalog"], Box::new(check_integrality)),
        def("series.case240", Some(240), &["gf_catalog"], Box::new(check_case240)),
        def("formulas.spot_values", None, &[], Box::new(check_spot_values)),
        def("forest.examples", None, &["succ_children", "active_sites", "label_of"], Box::new(check_forest_examples)),
        def("forest.av132", None, &["level_counts", "verify_rules", "label_of"], Box::new(check_av132)),
    ];
    for (case, _) in NAMED_CASES {
        out.push(def("enumeration.count_vs_series", Some(case), &["count_avoiders", "gf_catalog"], Box::new(move |c| check_count_vs_catalog(case, c))));
    }
    for case in [209, 228] {
        out.push(def("series.algebraic", Some(case), &["solve_algebraic"], Box::new(move |c| check_algebraic(case, c))));
    }
    for case in ASSEMBLY_CASES {
        out.push(def("series.assembly", Some(case), &["intermediate_gf"], Box::new(move |c| check_assembly(case, c))));
    }
    for (case, name) in INTERMEDIATE_ORACLES {
        out.push(def(
            format!("series.oracle.{name}"),
            Some(case),
            &["intermediate_gf", "refined_count"],
            Box::new(move |c| check_intermediate_oracle(case, name, c)),
        ));
    }
    for case in [125, 149, 185] {
        out.push(def("series.families", Some(case), &["intermediate_gf"], Box::new(move |c| check_series_vs_families(case, c))));
    }
    for spec in FAMILIES {
        let (case, name) = (spec.case_id, spec.name);
        let id = format!("formulas.{name}");
        out.push(def(id, Some(case), &[family_op(case, name).as_str()], Box::new(move |c| check_family(case, name, c))));
    }
    for case in RuleSystem::CASES {
        out.push(def("forest.level_counts", Some(case), &["level_counts"], Box::new(move |c| check_level_counts(case, c))));
        out.push(def(
            "forest.verify_rules",
            Some(case),
            &["verify_rules", "active_sites"],
            Box::new(move |c| check_verify_rules(RuleSystem::for_case(case)?, c)),
        ));
    }
    for case in [109, 188] {
        out.push(def("forest.families", Some(case), &["level_counts", "intermediate_gf"], Box::new(move |c| check_forest_families(case, c))));
    }
    out
}

/// Ids of all checks, in run order.
pub fn check_ids() -> Vec<(String, Option<u32>)> {
    checks().into_iter().map(|d| (d.id, d.case_id)).collect()
}

pub fn run_all(cfg: &VerifyConfig) -> VerificationReport {
    run_filtered(cfg, |_| true)
}

/// Checks tagged with `case_id`.
pub fn run_case(case_id: u32, cfg: &VerifyConfig) -> Result<VerificationReport, Error> {
    if cases::named_triple(case_id).is_none() {
        return Err(Error::UnknownCase(case_id));
    }
    Ok(run_filtered(cfg, |d| d.case_id == Some(case_id)))
}

/// Checks whose id starts with `prefix`.
pub fn run_prefix(prefix: &str, cfg: &VerifyConfig) -> VerificationReport {
    run_filtered(cfg, |d| d.id.starts_with(prefix))
}

fn run_filtered(cfg: &VerifyConfig, keep: impl Fn(&CheckDef) -> bool) -> VerificationReport {
    VerificationReport { entries: checks().iter().filter(|d| keep(d)).map(|d| execute(d, cfg)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_per_case() {
        let ids = check_ids();
        let set: BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
    }

    #[test]
    fn naive_containment() {
        assert!(contains_naive(&"1432".parse().unwrap(), &"132".parse().unwrap()));
        assert!(!contains_naive(&"321".parse().unwrap(), &"123".parse().unwrap()));
    }

    #[test]
    fn failing_check_reports_witness() {
        let d = def("demo", None, &[], Box::new(|_| Ok(verdict((0, 1), Some("x^1".into())))));
        let r = execute(&d, &VerifyConfig::default());
        assert!(!r.passed);
        assert_eq!(r.witness.as_deref(), Some("x^1"));
        let d = def("demo", None, &[], Box::new(|_| Err(Error::UnknownCase(1))));
        assert!(!execute(&d, &VerifyConfig::default()).passed);
    }
}
