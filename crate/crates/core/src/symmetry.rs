//! The dihedral symmetries of the square acting on pattern triples, and Wilf
//! classification by counting sequences.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cases;
use crate::enumerate::{self, CountSequence};
use crate::error::Error;
use crate::perm::{PatternTriple, Perm};

pub fn reverse(p: &Perm) -> Perm {
    let mut v = p.as_slice().to_vec();
    v.reverse();
    Perm::from_vec_unchecked(v)
}

pub fn complement(p: &Perm) -> Perm {
    let n = p.len() as u8;
    Perm::from_vec_unchecked(p.as_slice().iter().map(|&v| n + 1 - v).collect())
}

pub fn inverse(p: &Perm) -> Perm {
    let mut v = vec![0u8; p.len()];
    for (i, &x) in p.as_slice().iter().enumerate() {
        v[x as usize - 1] = i as u8 + 1;
    }
    Perm::from_vec_unchecked(v)
}

/// One of the eight symmetries, encoded as optional inverse, then reverse, then complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub inverse: bool,
    pub reverse: bool,
    pub complement: bool,
}

impl Symmetry {
    pub fn all() -> [Symmetry; 8] {
        let mut out = [Symmetry { inverse: false, reverse: false, complement: false }; 8];
        for (k, s) in out.iter_mut().enumerate() {
            *s = Symmetry { inverse: k & 4 != 0, reverse: k & 2 != 0, complement: k & 1 != 0 };
        }
        out
    }

    pub fn apply(&self, p: &Perm) -> Perm {
        let mut q = p.clone();
        if self.inverse {
            q = inverse(&q);
        }
        if self.reverse {
            q = reverse(&q);
        }
        if self.complement {
            q = complement(&q);
        }
        q
    }

    pub fn apply_triple(&self, t: &[Perm; 3]) -> [Perm; 3] {
        let mut out = [self.apply(&t[0]), self.apply(&t[1]), self.apply(&t[2])];
        out.sort();
        out
    }
}

/// Lexicographically least sorted image of `t` under the eight symmetries.
pub fn canonical(t: &[Perm; 3]) -> [Perm; 3] {
    Symmetry::all().iter().map(|s| s.apply_triple(t)).min().expect("eight images")
}

#[derive(Clone, Debug)]
pub struct SymmetryClass {
    /// Position in the sorted list of classes, starting at 1.
    pub id: u32,
    pub representative: PatternTriple,
    pub orbit: Vec<[Perm; 3]>,
}

impl SymmetryClass {
    pub fn case_id(&self) -> Option<u32> {
        self.representative.case_id
    }
}

/// Every sorted triple of distinct length-4 patterns.
pub fn all_triples() -> Vec<[Perm; 3]> {
    let mut pats = Vec::new();
    enumerate::for_each_perm(4, |p| pats.push(p.clone()));
    let mut out = Vec::new();
    for a in 0..pats.len() {
        for b in a + 1..pats.len() {
            for c in b + 1..pats.len() {
                out.push([pats[a].clone(), pats[b].clone(), pats[c].clone()]);
            }
        }
    }
    out
}

pub fn symmetry_classes() -> Vec<SymmetryClass> {
    let mut orbits: BTreeMap<[Perm; 3], Vec<[Perm; 3]>> = BTreeMap::new();
    for t in all_triples() {
        orbits.entry(canonical(&t)).or_default().push(t);
    }
    let named: BTreeMap<[Perm; 3], u32> = cases::all_named()
        .into_iter()
        .map(|t| (canonical(&t.patterns), t.case_id.expect("named")))
        .collect();
    orbits
        .into_iter()
        .enumerate()
        .map(|(i, (rep, orbit))| SymmetryClass {
            id: i as u32 + 1,
            representative: PatternTriple { case_id: named.get(&rep).copied(), patterns: rep },
            orbit,
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct WilfGroup {
    /// Position in the list of groups ordered by sequence, starting at 1.
    pub index: u32,
    pub sequence: CountSequence,
    /// Ids of the member symmetry classes.
    pub members: Vec<u32>,
}

/// Counting sequence of every class up to `n_max`, computed in parallel.
pub fn class_sequences<F>(classes: &[SymmetryClass], n_max: usize, counter: F) -> Result<Vec<CountSequence>, Error>
where
    F: Fn(&PatternTriple, usize) -> Result<CountSequence, Error> + Sync,
{
    classes.par_iter().map(|c| counter(&c.representative, n_max)).collect()
}

/// Groups classes whose sequences agree on every index up to `n_max`.
pub fn group_by_sequence(classes: &[SymmetryClass], sequences: &[CountSequence], n_max: usize) -> Vec<WilfGroup> {
    let mut groups: BTreeMap<&[u64], Vec<u32>> = BTreeMap::new();
    for (c, s) in classes.iter().zip(sequences) {
        groups.entry(&s[..=n_max]).or_default().push(c.id);
    }
    groups
        .into_iter()
        .enumerate()
        .map(|(i, (s, members))| WilfGroup { index: i as u32 + 1, sequence: s.to_vec(), members })
        .collect()
}

pub fn wilf_group<F>(classes: &[SymmetryClass], n_max: usize, counter: F) -> Result<Vec<WilfGroup>, Error>
where
    F: Fn(&PatternTriple, usize) -> Result<CountSequence, Error> + Sync,
{
    let seqs = class_sequences(classes, n_max, counter)?;
    Ok(group_by_sequence(classes, &seqs, n_max))
}

/// Default counter for the census: depth-first, so memory stays flat.
pub fn dfs_counter(t: &PatternTriple, n_max: usize) -> Result<CountSequence, Error> {
    enumerate::count_avoiders_dfs(&t.patterns, n_max)
}

/// CSV lines `canonical,orbit_size,sequence,wilf_index` with a header.
pub fn census_csv(classes: &[SymmetryClass], groups: &[WilfGroup]) -> String {
    let mut index_of = BTreeMap::new();
    for g in groups {
        for &m in &g.members {
            index_of.insert(m, g);
        }
    }
    let mut out = String::from("canonical,orbit_size,sequence,wilf_index\n");
    for c in classes {
        let g = index_of[&c.id];
        let seq: Vec<String> = g.sequence.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!(
            "\"{}\",{},\"{}\",{}\n",
            c.representative,
            c.orbit.len(),
            seq.join(" "),
            g.index
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn basic_symmetries() {
        assert_eq!(inverse(&p("2413")), p("3142"));
        assert_eq!(reverse(&p("1243")), p("3421"));
        assert_eq!(complement(&p("1243")), p("4312"));
        let images: std::collections::BTreeSet<Perm> = Symmetry::all().iter().map(|s| s.apply(&p("1342"))).collect();
        assert_eq!(images.len(), 8);
    }

    #[test]
    fn class_count_and_orbits() {
        let classes = symmetry_classes();
        assert_eq!(classes.len(), 317);
        assert_eq!(classes.iter().map(|c| c.orbit.len()).sum::<usize>(), 2024);
        assert!(classes.iter().all(|c| 8 % c.orbit.len() == 0));
        let named: Vec<u32> = classes.iter().filter_map(|c| c.case_id()).collect();
        assert_eq!(named.len(), 13);
    }

    #[test]
    fn tiny_groups() {
        let classes = symmetry_classes();
        assert_eq!(wilf_group(&classes, 3, dfs_counter).unwrap().len(), 1);
        assert_eq!(wilf_group(&classes, 4, dfs_counter).unwrap().len(), 1);
    }
}
