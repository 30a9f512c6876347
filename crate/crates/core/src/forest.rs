//! Labelled generating forests.
//!
//! The forest of a pattern set has the avoiders of length 2 as roots, and the
//! children of a node are the avoiders obtained by inserting the new maximum
//! at an active site. A succession-rule system replaces each node by a label
//! such that the labels of the children depend only on the label of the
//! parent, so level sizes can be computed by iterating a sparse label map.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cases;
use crate::enumerate::{avoiders_of, count_avoiders_of, Avoider, DEFAULT_CAPACITY};
use crate::error::Error;
use crate::perm::{PatternTriple, Perm};

/// Node label. `Plain`, `Bar`, `DBar` and `TBar` carry the number of active
/// sites and take zero to three bars. The parameters of the remaining
/// variants name an irreducible permutation (its length for single-index
/// labels).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Plain(u32),
    Bar(u32),
    DBar(u32),
    TBar(u32),
    /// `i (i+1) ... k 1 2 ... (i-1)`.
    AlphaIK(u32, u32),
    /// `i ... (k-2) 1 (k-1) 2 k 3 4 ... (i-1)`.
    AlphaP(u32, u32),
    /// `i ... (k-1) 1 k 2 3 ... (i-1)`.
    AlphaPP(u32, u32),
    /// `1 k 2 3 ... (k-1)`.
    Beta(u32),
    /// `1 (k-1) 2 k 3 4 ... (k-2)`.
    BetaP(u32),
    /// `2 3 ... (k-1) 1 k`.
    Gamma(u32),
    /// `2 k 3 4 ... (k-2) 1 (k-1)`.
    GammaP(u32),
    /// `6 7 ... k 1 4 2 5 3`.
    Delta(u32),
    Fixed361425,
    Fixed142536,
    Fixed253614,
    /// `k ... 2 1`, for the forest of 132-avoiders.
    Decreasing(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Plain(k) => write!(f, "{k}"),
            Label::Bar(k) => write!(f, "{k}'"),
            Label::DBar(k) => write!(f, "{k}''"),
            Label::TBar(k) => write!(f, "{k}'''"),
            Label::AlphaIK(i, k) => write!(f, "alpha({i},{k})"),
            Label::AlphaP(i, k) => write!(f, "alpha'({i},{k})"),
            Label::AlphaPP(i, k) => write!(f, "alpha''({i},{k})"),
            Label::Beta(k) => write!(f, "beta({k})"),
            Label::BetaP(k) => write!(f, "beta'({k})"),
            Label::Gamma(k) => write!(f, "gamma({k})"),
            Label::GammaP(k) => write!(f, "gamma'({k})"),
            Label::Delta(k) => write!(f, "delta({k})"),
            Label::Fixed361425 => write!(f, "361425"),
            Label::Fixed142536 => write!(f, "142536"),
            Label::Fixed253614 => write!(f, "253614"),
            Label::Decreasing(k) => write!(f, "dec({k})"),
        }
    }
}

impl Label {
    /// The irreducible permutation a single-forest label stands for.
    /// `None` for the active-site labels.
    pub fn witness(&self) -> Option<Perm> {
        let seq = |r: std::ops::RangeInclusive<u32>| r.map(|v| v as u8).collect::<Vec<u8>>();
        let v: Vec<u8> = match *self {
            Label::AlphaIK(i, k) => [seq(i..=k), seq(1..=i - 1)].concat(),
            Label::AlphaP(i, k) => [seq(i..=k - 2), vec![1, (k - 1) as u8, 2, k as u8], seq(3..=i - 1)].concat(),
            Label::AlphaPP(i, k) => [seq(i..=k - 1), vec![1, k as u8], seq(2..=i - 1)].concat(),
            Label::Beta(k) => [vec![1, k as u8], seq(2..=k - 1)].concat(),
            Label::BetaP(k) => [vec![1, (k - 1) as u8, 2, k as u8], seq(3..=k - 2)].concat(),
            Label::Gamma(k) => [seq(2..=k - 1), vec![1, k as u8]].concat(),
            Label::GammaP(k) => [vec![2, k as u8], seq(3..=k - 2), vec![1, (k - 1) as u8]].concat(),
            Label::Delta(k) => [seq(6..=k), vec![1, 4, 2, 5, 3]].concat(),
            Label::Fixed361425 => vec![3, 6, 1, 4, 2, 5],
            Label::Fixed142536 => vec![1, 4, 2, 5, 3, 6],
            Label::Fixed253614 => vec![2, 5, 3, 6, 1, 4],
            Label::Decreasing(k) => seq(1..=k).into_iter().rev().collect(),
            _ => return None,
        };
        Some(Perm::new(v).expect("label parameters were validated"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Case240,
    Case109,
    Case188,
    Av132,
}

/// One of the built-in succession-rule systems together with its patterns.
#[derive(Clone, Debug)]
pub struct RuleSystem {
    kind: Kind,
    patterns: Vec<Perm>,
    avoider: Avoider,
}

fn too_small(label: &Label, sys: &RuleSystem) -> Error {
    Error::Precondition(format!("label {label} is not valid for the {} forest", sys.name()))
}

impl RuleSystem {
    /// Case ids with a rule system.
    pub const CASES: [u32; 3] = [240, 109, 188];

    pub fn for_case(case_id: u32) -> Result<Self, Error> {
        let kind = match case_id {
            240 => Kind::Case240,
            109 => Kind::Case109,
            188 => Kind::Case188,
            _ => return Err(Error::UnknownCase(case_id)),
        };
        let t = cases::named_triple(case_id).ok_or(Error::UnknownCase(case_id))?;
        Ok(Self::with(kind, t.patterns.to_vec()))
    }

    /// The forest of 132-avoiders with decreasing irreducibles.
    pub fn av132() -> Self {
        Self::with(Kind::Av132, vec!["132".parse().expect("literal")])
    }

    fn with(kind: Kind, patterns: Vec<Perm>) -> Self {
        let avoider = Avoider::new(&patterns);
        RuleSystem { kind, patterns, avoider }
    }

    pub fn case_id(&self) -> Option<u32> {
        match self.kind {
            Kind::Case240 => Some(240),
            Kind::Case109 => Some(109),
            Kind::Case188 => Some(188),
            Kind::Av132 => None,
        }
    }

    pub fn name(&self) -> String {
        self.case_id().map_or_else(|| "132".to_string(), |c| c.to_string())
    }

    pub fn patterns(&self) -> &[Perm] {
        &self.patterns
    }

    pub fn triple(&self) -> Option<PatternTriple> {
        self.case_id().and_then(cases::named_triple)
    }

    /// Labels of the avoiders of length 2.
    pub fn roots(&self) -> Vec<Label> {
        match self.kind {
            Kind::Case240 | Kind::Case109 => vec![Label::Plain(3), Label::Bar(3)],
            Kind::Case188 => vec![Label::AlphaIK(1, 2), Label::AlphaIK(2, 2)],
            Kind::Av132 => vec![Label::Decreasing(1), Label::Decreasing(2)],
        }
    }

    pub fn validate(&self, label: &Label) -> Result<(), Error> {
        use Label::*;
        let ok = match (self.kind, *label) {
            (Kind::Case240, Plain(k) | Bar(k)) => k >= 3,
            (Kind::Case240, DBar(k)) => k >= 2,
            (Kind::Case109, Plain(k) | Bar(k) | DBar(k)) => k >= 3,
            (Kind::Case109, TBar(k)) => k >= 2,
            (Kind::Case188, AlphaIK(i, k)) => i >= 1 && i <= k && k >= 2,
            (Kind::Case188, AlphaP(i, k)) => i >= 3 && i + 2 <= k,
            (Kind::Case188, AlphaPP(i, k)) => i >= 3 && i < k,
            (Kind::Case188, Beta(k) | Gamma(k)) => k >= 3,
            (Kind::Case188, BetaP(k) | GammaP(k)) => k >= 5,
            (Kind::Case188, Delta(k)) => k >= 6,
            (Kind::Case188, Fixed361425 | Fixed142536 | Fixed253614) => true,
            (Kind::Av132, Decreasing(k)) => k >= 1,
            _ => false,
        };
        // Keeps witnesses and insertions within u8 values.
        let bounded = match *label {
            Plain(k) | Bar(k) | DBar(k) | TBar(k) | AlphaIK(_, k) | AlphaP(_, k) | AlphaPP(_, k) | Beta(k)
            | BetaP(k) | Gamma(k) | GammaP(k) | Delta(k) | Decreasing(k) => k < 250,
            _ => true,
        };
        if ok && bounded {
            Ok(())
        } else {
            Err(too_small(label, self))
        }
    }

    /// Multiset of child labels, in the order the rule lists them.
    pub fn children(&self, label: &Label) -> Result<Vec<Label>, Error> {
        self.validate(label)?;
        use Label::*;
        let mut out = Vec::new();
        match (self.kind, *label) {
            (Kind::Case240, Plain(k)) => {
                out.extend((3..=k + 1).map(Bar));
                out.push(Plain(k + 1));
            }
            (Kind::Case240, Bar(k)) => {
                out.extend((3..=k).map(Bar));
                out.extend([DBar(k), Plain(k + 1)]);
            }
            (Kind::Case240, DBar(k)) => {
                out.extend((2..=k).map(DBar));
                out.push(Plain(k + 1));
            }
            (Kind::Case109, Plain(k)) => {
                out.extend((3..=k).map(DBar));
                out.extend([Bar(k + 1), Plain(k + 1)]);
            }
            (Kind::Case109, Bar(k)) => {
                out.extend((3..=k).map(DBar));
                out.extend([Bar(k + 1), TBar(k)]);
            }
            (Kind::Case109, DBar(k)) => {
                out.extend((3..=k).map(DBar));
                out.extend([DBar(k), TBar(k - 1)]);
            }
            (Kind::Case109, TBar(k)) => {
                out.extend((2..=k).map(TBar));
                out.push(TBar(k));
            }
            (Kind::Case188, l) => children188(l, &mut out),
            (Kind::Av132, Decreasing(k)) => out.extend((1..=k + 1).rev().map(Decreasing)),
            _ => unreachable!("validated above"),
        }
        Ok(out)
    }

    /// Structural label of an avoider. Only the active-site systems have one.
    pub fn label_of(&self, p: &Perm) -> Result<Label, Error> {
        if self.kind == Kind::Case188 {
            return Err(Error::Unsupported("labels of the 188 forest are defined only through its construction".into()));
        }
        let n = p.len();
        if n < 2 {
            return Err(Error::Precondition(format!("{p} is shorter than the roots")));
        }
        let mask = self.active_mask_checked(p)?;
        let k = mask.count_ones();
        let s = p.as_slice();
        let site_n_active = mask >> n & 1 == 1;
        Ok(match self.kind {
            Kind::Case240 => {
                if s[n - 1] as usize == n {
                    Label::Plain(k)
                } else if site_n_active {
                    Label::Bar(k)
                } else {
                    Label::DBar(k)
                }
            }
            Kind::Case109 => {
                if s.windows(2).all(|w| w[0] < w[1]) {
                    Label::Plain(k)
                } else if mostly_increasing(s) {
                    Label::Bar(k)
                } else if site_n_active {
                    Label::DBar(k)
                } else {
                    Label::TBar(k)
                }
            }
            Kind::Av132 => Label::Decreasing(k - 1),
            Kind::Case188 => unreachable!(),
        })
    }

    fn active_mask_checked(&self, p: &Perm) -> Result<u64, Error> {
        if !self.avoider.avoids(p) {
            return Err(Error::Precondition(format!("{p} does not avoid {}", self.pattern_list())));
        }
        if p.len() >= 63 {
            return Err(Error::Precondition(format!("length {} too large for a site mask", p.len())));
        }
        Ok(self.avoider.active_mask(p.as_slice()))
    }

    fn pattern_list(&self) -> String {
        self.patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// `12 ... (j-1) (j+1) ... n j` with `j < n`.
fn mostly_increasing(s: &[u8]) -> bool {
    let Some((&j, rest)) = s.split_last() else { return false };
    (j as usize) < s.len() && rest.iter().zip(1u8..).all(|(&v, i)| v == if i < j { i } else { i + 1 })
}

fn children188(label: Label, out: &mut Vec<Label>) {
    use Label::*;
    match label {
        AlphaIK(1, k) => {
            out.push(AlphaIK(1, k + 1));
            out.extend((3..=k + 1).map(Beta));
            out.push(AlphaIK(k + 1, k + 1));
        }
        AlphaIK(i, k) => {
            out.push(Gamma(k + 3 - i));
            out.extend((3..=i).map(|j| AlphaPP(j, j + k + 1 - i)));
            out.push(AlphaIK(i, k + 1));
            out.extend((3..=k + 2 - i).map(Beta));
            out.push(AlphaIK(k + 2 - i, k + 2 - i));
        }
        AlphaP(i, k) => {
            out.extend((3..=i).map(|j| AlphaP(j, j + k - i)));
            out.push(Fixed361425);
            out.extend((5..=k + 2 - i).map(GammaP));
            out.push(AlphaIK(k - i, k - i));
        }
        AlphaPP(i, k) => {
            out.extend((3..=i).map(|j| AlphaP(j, j + k + 1 - i)));
            out.extend([AlphaPP(i, k), Beta(3)]);
            out.extend((5..=k + 3 - i).map(GammaP));
            out.push(AlphaIK(k + 1 - i, k + 1 - i));
        }
        Beta(k) => {
            out.push(Gamma(3));
            out.extend((5..=k + 1).map(BetaP));
            out.extend([Beta(k), AlphaIK(2, 2)]);
        }
        BetaP(k) => {
            out.push(Fixed142536);
            out.extend((5..=k).map(BetaP));
            out.push(Delta(6));
        }
        Gamma(k) => {
            out.extend([Gamma(k), Gamma(3)]);
            out.extend((5..=k + 1).map(GammaP));
            out.push(AlphaIK(k - 1, k - 1));
        }
        GammaP(k) => {
            out.push(Fixed253614);
            out.extend((5..k).map(BetaP));
            out.extend([GammaP(k), AlphaIK(2, 2)]);
        }
        Delta(k) => {
            out.push(Delta(k + 1));
            out.extend((3..=k - 4).map(Beta));
            out.push(AlphaIK(k - 4, k - 4));
        }
        Fixed361425 => out.extend([Fixed361425, AlphaIK(2, 2)]),
        Fixed142536 => out.extend([Fixed142536, Delta(6)]),
        Fixed253614 => out.extend([Fixed253614, Delta(6)]),
        _ => unreachable!("validated by the caller"),
    }
}

pub fn succ_children(sys: &RuleSystem, label: &Label) -> Result<Vec<Label>, Error> {
    sys.children(label)
}

pub fn label_of(p: &Perm, sys: &RuleSystem) -> Result<Label, Error> {
    sys.label_of(p)
}

/// Active sites of `p` (1-based, `1..=n+1`); inserting `n + 1` at site `s`
/// makes it entry `s`.
pub fn active_sites(p: &Perm, patterns: &[Perm]) -> Result<Vec<usize>, Error> {
    let av = Avoider::new(patterns);
    if !av.avoids(p) {
        return Err(Error::Precondition(format!("{p} contains one of the patterns")));
    }
    Ok(av.active_sites(p))
}

pub type LabelCounts = BTreeMap<Label, BigUint>;

fn step(sys: &RuleSystem, level: &LabelCounts) -> Result<LabelCounts, Error> {
    let mut next = LabelCounts::new();
    for (label, c) in level {
        for child in sys.children(label)? {
            *next.entry(child).or_insert_with(BigUint::zero) += c;
        }
    }
    Ok(next)
}

/// Label distribution of every level `2..=n_max`, starting at index 0 for level 2.
pub fn level_distributions(sys: &RuleSystem, n_max: usize) -> Result<Vec<LabelCounts>, Error> {
    if n_max < 2 {
        return Err(Error::Precondition("forests start at level 2".into()));
    }
    let mut level = LabelCounts::new();
    for r in sys.roots() {
        *level.entry(r).or_insert_with(BigUint::zero) += 1u32;
    }
    let mut out = vec![level];
    for _ in 3..=n_max {
        let next = step(sys, out.last().expect("non-empty"))?;
        out.push(next);
    }
    Ok(out)
}

/// Level totals as series coefficients: entry `n` is the size of level `n`
/// for `n >= 2`, and entries 0 and 1 hold the constant and linear terms 1.
pub fn level_counts(sys: &RuleSystem, n_max: usize) -> Result<Vec<BigUint>, Error> {
    let mut out = vec![BigUint::one(); n_max.min(1) + 1];
    if n_max >= 2 {
        out.extend(level_distributions(sys, n_max)?.iter().map(|m| m.values().sum::<BigUint>()));
    }
    Ok(out)
}

/// The auxiliary generating function whose coefficients collect a label's
/// family, named as in [`crate::catalog::intermediate_names`]. The 240
/// series `B` and `C` split the barred labels differently from `Bar` and
/// `DBar`, so only their sum is comparable.
pub fn label_family(sys: &RuleSystem, label: &Label) -> Option<&'static str> {
    use Label::*;
    Some(match (sys.kind, label) {
        (Kind::Case188, AlphaIK(..)) => "A",
        (Kind::Case188, AlphaP(..)) => "Ap",
        (Kind::Case188, AlphaPP(..)) => "App",
        (Kind::Case188, Beta(_)) => "B",
        (Kind::Case188, BetaP(_)) => "Bp",
        (Kind::Case188, Gamma(_)) => "G",
        (Kind::Case188, GammaP(_)) => "Gp",
        (Kind::Case188, Delta(_)) => "D",
        (Kind::Case188, Fixed361425) => "L",
        (Kind::Case188, Fixed142536) => "Lp",
        (Kind::Case188, Fixed253614) => "Lpp",
        (Kind::Case240, Plain(_)) => "A",
        (Kind::Case109, Plain(_)) => "A",
        (Kind::Case109, Bar(_)) => "B",
        (Kind::Case109, DBar(_)) => "C",
        (Kind::Case109, TBar(_)) => "D",
        _ => return None,
    })
}

/// Per-family totals of every level, indexed like [`level_counts`] (zero below level 2).
pub fn family_counts(sys: &RuleSystem, n_max: usize) -> Result<BTreeMap<&'static str, Vec<BigUint>>, Error> {
    let dists = level_distributions(sys, n_max.max(2))?;
    let mut out: BTreeMap<&'static str, Vec<BigUint>> = BTreeMap::new();
    for (idx, dist) in dists.iter().enumerate().take(n_max.saturating_sub(1)) {
        for (label, c) in dist {
            if let Some(name) = label_family(sys, label) {
                let row = out.entry(name).or_insert_with(|| vec![BigUint::zero(); n_max + 1]);
                row[idx + 2] += c;
            }
        }
    }
    Ok(out)
}

/// A node whose children disagree with the rule for its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleFailure {
    pub witness: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct RuleReport {
    pub system: String,
    pub n_max: usize,
    pub nodes_checked: u64,
    pub failures: Vec<RuleFailure>,
}

impl RuleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn render(labels: &[Label]) -> String {
    labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn check_node(sys: &RuleSystem, p: &Perm) -> Result<Option<RuleFailure>, Error> {
    let label = sys.label_of(p)?;
    let mut expected = sys.children(&label)?;
    let mask = sys.avoider.active_mask(p.as_slice());
    let mut actual = (1..=p.len() + 1)
        .filter(|s| mask >> s & 1 == 1)
        .map(|s| sys.label_of(&p.insert_max(s)))
        .collect::<Result<Vec<_>, _>>()?;
    expected.sort();
    actual.sort();
    if expected == actual {
        return Ok(None);
    }
    Ok(Some(RuleFailure {
        witness: p.to_string(),
        detail: format!("label {label}: rule gives [{}], children have [{}]", render(&expected), render(&actual)),
    }))
}

/// Checks the rules against the forest itself. Systems with a structural
/// labelling are checked node by node for all parents of length below
/// `n_max`. The 188 system is checked through its level totals together with
/// the child count of every witness permutation that occurs.
pub fn verify_rules(sys: &RuleSystem, n_max: usize) -> Result<RuleReport, Error> {
    if !(2..=10).contains(&n_max) {
        return Err(Error::Precondition(format!("rule verification needs 2 <= n_max <= 10, got {n_max}")));
    }
    let mut failures = Vec::new();
    let mut nodes_checked = 0u64;
    if sys.kind == Kind::Case188 {
        let counts = level_counts(sys, n_max)?;
        let brute = count_avoiders_of(&sys.patterns, n_max, DEFAULT_CAPACITY)?;
        for n in 2..=n_max {
            nodes_checked += brute[n];
            if counts[n] != BigUint::from(brute[n]) {
                failures.push(RuleFailure {
                    witness: format!("level {n}"),
                    detail: format!("rules give {}, avoiders number {}", counts[n], brute[n]),
                });
            }
        }
        for dist in level_distributions(sys, n_max)? {
            for label in dist.keys() {
                let w = label.witness().expect("188 labels are irreducibles");
                let sites = match sys.active_mask_checked(&w) {
                    Ok(m) => m.count_ones() as usize,
                    Err(e) => {
                        failures.push(RuleFailure { witness: w.to_string(), detail: e.to_string() });
                        continue;
                    }
                };
                let kids = sys.children(label)?.len();
                if kids != sites {
                    failures.push(RuleFailure {
                        witness: w.to_string(),
                        detail: format!("label {label} has {kids} children but {sites} active sites"),
                    });
                }
            }
        }
        failures.dedup();
    } else {
        for n in 2..n_max {
            let level = avoiders_of(&sys.patterns, n, DEFAULT_CAPACITY)?;
            nodes_checked += level.len() as u64;
            let found: Vec<Option<RuleFailure>> =
                level.par_iter().map(|p| check_node(sys, p)).collect::<Result<_, Error>>()?;
            failures.extend(found.into_iter().flatten());
        }
    }
    Ok(RuleReport { system: sys.name(), n_max, nodes_checked, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Label::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn sorted(mut v: Vec<Label>) -> Vec<Label> {
        v.sort();
        v
    }

    #[test]
    fn quoted_rules() {
        let s240 = RuleSystem::for_case(240).unwrap();
        assert_eq!(sorted(s240.children(&Plain(3)).unwrap()), sorted(vec![Bar(3), Bar(4), Plain(4)]));
        assert_eq!(sorted(s240.children(&Bar(3)).unwrap()), sorted(vec![Bar(3), DBar(3), Plain(4)]));
        let s188 = RuleSystem::for_case(188).unwrap();
        assert_eq!(
            s188.children(&Beta(6)).unwrap(),
            vec![Gamma(3), BetaP(5), BetaP(6), BetaP(7), Beta(6), AlphaIK(2, 2)]
        );
        let s109 = RuleSystem::for_case(109).unwrap();
        assert_eq!(s109.children(&DBar(4)).unwrap(), vec![DBar(3), DBar(4), DBar(4), TBar(3)]);
        assert!(s240.children(&TBar(3)).is_err());
        assert!(s188.children(&AlphaP(3, 4)).is_err());
        assert!(s188.children(&Delta(5)).is_err());
        assert!(s240.children(&DBar(2)).is_ok());
    }

    #[test]
    fn quoted_labels_and_sites() {
        let s240 = RuleSystem::for_case(240).unwrap();
        let s109 = RuleSystem::for_case(109).unwrap();
        assert_eq!(s240.label_of(&p("12")).unwrap(), Plain(3));
        assert_eq!(s240.label_of(&p("21")).unwrap(), Bar(3));
        assert_eq!(s240.label_of(&p("231")).unwrap(), DBar(3));
        assert_eq!(s109.label_of(&p("213")).unwrap(), TBar(3));
        let kids: Vec<Label> = ["312", "132", "123"].iter().map(|q| s109.label_of(&p(q)).unwrap()).collect();
        assert_eq!(kids, vec![DBar(3), Bar(4), Plain(4)]);
        let kids: Vec<Label> = ["321", "231", "213"].iter().map(|q| s109.label_of(&p(q)).unwrap()).collect();
        assert_eq!(kids, vec![DBar(3), Bar(4), TBar(3)]);
        assert_eq!(active_sites(&p("12"), s240.patterns()).unwrap(), vec![1, 2, 3]);
        assert_eq!(s240.avoider.left_active_sites(&p("23154")), vec![1, 2, 4]);
        assert_eq!(active_sites(&p("321"), s109.patterns()).unwrap(), vec![1, 3, 4]);
        assert_eq!(active_sites(&p("213"), s109.patterns()).unwrap(), vec![1, 2, 4]);
        assert!(active_sites(&p("3412"), s240.patterns()).is_err());
        assert!(matches!(RuleSystem::for_case(188).unwrap().label_of(&p("12")), Err(Error::Unsupported(_))));
    }

    #[test]
    fn witnesses() {
        assert_eq!(AlphaIK(3, 5).witness().unwrap(), p("34512"));
        assert_eq!(AlphaP(3, 6).witness().unwrap(), p("341526"));
        assert_eq!(AlphaPP(3, 5).witness().unwrap(), p("34152"));
        assert_eq!(Beta(4).witness().unwrap(), p("1423"));
        assert_eq!(BetaP(6).witness().unwrap(), p("152634"));
        assert_eq!(Gamma(4).witness().unwrap(), p("2314"));
        assert_eq!(GammaP(6).witness().unwrap(), p("263415"));
        assert_eq!(Delta(7).witness().unwrap(), p("6714253"));
        assert_eq!(Decreasing(3).witness().unwrap(), p("321"));
    }

    #[test]
    fn small_levels() {
        for sys in [240, 109, 188].map(|c| RuleSystem::for_case(c).unwrap()).into_iter().chain([RuleSystem::av132()]) {
            let c = level_counts(&sys, 4).unwrap();
            let want: Vec<u32> = if sys.case_id().is_some() { vec![1, 1, 2, 6, 21] } else { vec![1, 1, 2, 5, 14] };
            assert_eq!(c, want.into_iter().map(BigUint::from).collect::<Vec<_>>(), "{}", sys.name());
        }
    }

    #[test]
    fn rules_hold_on_small_trees() {
        for sys in [RuleSystem::for_case(240).unwrap(), RuleSystem::for_case(109).unwrap(), RuleSystem::av132()] {
            let r = verify_rules(&sys, 7).unwrap();
            assert!(r.passed(), "{}: {:?}", sys.name(), r.failures.first());
        }
        let r = verify_rules(&RuleSystem::for_case(188).unwrap(), 9).unwrap();
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    fn ints(v: &[BigUint]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn series(case: u32, name: &str, n: usize) -> Vec<String> {
        let s = crate::catalog::intermediate_gf(case, name, n).unwrap().to_integers().unwrap();
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn family_totals_match_auxiliary_series() {
        for case in [188, 109] {
            let sys = RuleSystem::for_case(case).unwrap();
            let fam = family_counts(&sys, 16).unwrap();
            let names = crate::catalog::intermediate_names(case).iter().filter(|n| **n != "K").count();
            assert_eq!(fam.len(), names);
            for (name, row) in fam {
                assert_eq!(ints(&row), series(case, name, 16), "{case}:{name}");
            }
        }
        let sys = RuleSystem::for_case(240).unwrap();
        let total = level_counts(&sys, 16).unwrap();
        let plain = &family_counts(&sys, 16).unwrap()["A"];
        assert_eq!(ints(plain), series(240, "A", 16));
        let b = crate::catalog::intermediate_gf(240, "B", 16).unwrap();
        let c = crate::catalog::intermediate_gf(240, "C", 16).unwrap();
        let barred: Vec<String> = (b + c).to_integers().unwrap().iter().map(|x| x.to_string()).collect();
        let rest: Vec<BigUint> = (0..=16).map(|n| if n < 2 { BigUint::zero() } else { &total[n] - &plain[n] }).collect();
        assert_eq!(ints(&rest), barred);
    }

    #[test]
    fn totals_match_theorem_series() {
        for case in RuleSystem::CASES {
            let sys = RuleSystem::for_case(case).unwrap();
            let f = crate::catalog::gf_catalog(case, 16).unwrap().to_integers().unwrap();
            let f: Vec<String> = f.iter().map(|x| x.to_string()).collect();
            assert_eq!(ints(&level_counts(&sys, 16).unwrap()), f, "{case}");
        }
    }
}
