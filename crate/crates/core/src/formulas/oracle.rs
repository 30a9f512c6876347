//! Direct membership tests for every formula family, used to count the
//! classes by filtering the avoiders themselves.

use crate::cases;
use crate::enumerate::{avoiders_of, DEFAULT_CAPACITY};
use crate::error::Error;
use crate::perm::{self, Perm};

use super::family;

type Pred = Box<dyn Fn(&Perm) -> bool + Send + Sync>;

/// Avoiders of `patterns` of length `length` satisfying a predicate.
pub struct Oracle {
    pub patterns: Vec<Perm>,
    pub length: usize,
    pred: Pred,
}

impl Oracle {
    pub fn matches(&self, p: &Perm) -> bool {
        (self.pred)(p)
    }

    /// Counts matches within a precomputed population of avoiders of the same
    /// patterns and length.
    pub fn count_in(&self, population: &[Perm]) -> u64 {
        population.iter().filter(|p| self.matches(p)).count() as u64
    }

    pub fn members(&self) -> Result<Vec<Perm>, Error> {
        Ok(avoiders_of(&self.patterns, self.length, DEFAULT_CAPACITY)?.into_iter().filter(|p| self.matches(p)).collect())
    }

    pub fn count(&self) -> Result<u64, Error> {
        Ok(self.members()?.len() as u64)
    }
}

fn pats(list: &[&str]) -> Vec<Perm> {
    list.iter().map(|s| s.parse().expect("literal pattern")).collect()
}

fn triple(case: u32) -> Vec<Perm> {
    cases::named_triple(case).expect("named case").patterns.to_vec()
}

/// `(bottom, top)` of the leftmost ascent.
fn ascent(p: &Perm) -> Option<(usize, usize)> {
    perm::leftmost_ascent(p).map(|(_, a, b)| (a as usize, b as usize))
}

fn ascent_index(p: &Perm) -> usize {
    perm::leftmost_ascent(p).map_or(p.len(), |(i, _, _)| i)
}

/// Length of the run from the rightmost ascent top to the end.
fn final_run(p: &Perm) -> usize {
    perm::rightmost_ascent(p).map_or(p.len(), |(i, _, _)| p.len() - i)
}

/// Whether the last letter plays the role of `1` in some 231.
fn last_ends_231(p: &Perm) -> bool {
    let s = p.as_slice();
    let Some((&z, rest)) = s.split_last() else { return false };
    (0..rest.len()).any(|i| rest[i] > z && rest[i + 1..].iter().any(|&y| y > rest[i]))
}

fn lr_values(p: &Perm) -> Vec<usize> {
    perm::left_right_maxima(p).into_iter().map(|(_, v)| v as usize).collect()
}

fn ids_consecutive(p: &Perm) -> bool {
    perm::initial_descent_sequence(p).map(|s| perm::is_consecutive_interval(&s)).unwrap_or(true)
}

fn first(p: &Perm) -> usize {
    p.as_slice().first().map_or(0, |&v| v as usize)
}

/// The class with leftmost ascent `(a, b)`, `2 <= a < b <= n - 2`, not starting with `n`.
fn middle_class(p: &Perm) -> bool {
    let n = p.len();
    first(p) != n && matches!(ascent(p), Some((a, b)) if a >= 2 && b + 2 <= n)
}

/// The letters strictly between the ascent bottom and top lying right of the top,
/// in order, and whether one of them lies right of `n`.
fn v_set(p: &Perm) -> (Vec<u8>, bool) {
    let s = p.as_slice();
    let (i, a, b) = perm::leftmost_ascent(p).expect("has an ascent");
    let pos_n = s.iter().position(|&v| v as usize == s.len()).expect("has a maximum");
    let mut v = Vec::new();
    let mut right_of_n = false;
    for (k, &x) in s.iter().enumerate().skip(i + 1) {
        if x > a && x < b {
            v.push(x);
            right_of_n |= k > pos_n;
        }
    }
    (v, right_of_n)
}

fn decreasing(v: &[u8]) -> bool {
    v.windows(2).all(|w| w[0] > w[1])
}

pub fn oracle(case_id: u32, name: &str, args: &[usize]) -> Result<Oracle, Error> {
    let spec = family(case_id, name)?;
    if args.len() != spec.params.len() {
        return Err(Error::Precondition(format!("{case_id}:{name} takes {} arguments", spec.params.len())));
    }
    let n = args[0];
    let x = args.get(1).copied().unwrap_or(0);
    let y = args.get(2).copied().unwrap_or(0);
    let (patterns, pred): (Vec<Perm>, Pred) = match (case_id, name) {
        (0, "C") => (pats(&["123"]), Box::new(move |p| first(p) == x)),
        (0, "Cprime") => (pats(&["123"]), Box::new(move |p| ascent_index(p) == x)),
        (0, "Cprime3") => (
            pats(&["123"]),
            Box::new(move |p| matches!(perm::leftmost_ascent(p), Some((i, j, _)) if i == x && j as usize == y)),
        ),
        (74, "b" | "ids2") => {
            let consecutive = name == "ids2";
            let pred = move |p: &Perm| {
                let n = p.len();
                first(p) + 2 <= n && ascent(p).map(|(_, t)| t) == Some(n) && ids_consecutive(p) == consecutive
            };
            (triple(74), Box::new(pred))
        }
        (74, "d") => (
            triple(74),
            Box::new(|p| first(p) + 2 <= p.len() && ascent(p).map(|(_, t)| t + 1) == Some(p.len())),
        ),
        (74 | 125 | 149 | 185, "a") => (triple(case_id), Box::new(|_| true)),
        (125 | 185, "u") => (
            triple(case_id),
            Box::new(|p| {
                let n = p.len();
                first(p) + 1 == n && matches!(ascent(p), Some((a, t)) if a >= 2 && t == n)
            }),
        ),
        (125, "uprime") => (
            triple(125),
            Box::new(move |p| {
                let s = p.as_slice();
                s.len() >= 3 && s[0] as usize + 1 == n && s[1] as usize == x && s[2] as usize == n
            }),
        ),
        (125 | 185, "b") => (triple(case_id), Box::new(|p| matches!(ascent(p), Some((a, t)) if a >= 2 && t == p.len()))),
        (125 | 185, "d") => (
            triple(case_id),
            Box::new(|p| {
                let n = p.len();
                first(p) != n && matches!(ascent(p), Some((a, t)) if a >= 2 && t + 1 == n)
            }),
        ),
        (125 | 185, "e") => (triple(case_id), Box::new(middle_class)),
        (125 | 185, "g") => (
            triple(case_id),
            Box::new(|p| first(p) != p.len() && matches!(ascent(p), Some((1, _)))),
        ),
        (185, "v") => (
            triple(185),
            Box::new(|p| {
                middle_class(p) && {
                    let (v, right) = v_set(p);
                    decreasing(&v) && right
                }
            }),
        ),
        (185, "w") => (triple(185), Box::new(|p| middle_class(p) && !decreasing(&v_set(p).0))),
        (149, "e") => (pats(&["123", "3412"]), Box::new(|_| true)),
        (149, "e_nl") => (pats(&["123", "3412"]), Box::new(move |p| final_run(p) == x)),
        (149, "e_star") => (pats(&["123", "3412"]), Box::new(move |p| final_run(p) == x && !last_ends_231(p))),
        (149, "e_prime") => (
            pats(&["123", "3412"]),
            Box::new(move |p| final_run(p) == x && ascent(p).map(|(_, t)| t) == Some(p.len())),
        ),
        (149, "b") => (triple(149), Box::new(|p| lr_values(p).len() == 2)),
        (149, "g") => (
            triple(149),
            Box::new(|p| {
                let s = p.as_slice();
                let pos_n = s.iter().position(|&v| v as usize == s.len()).unwrap_or(0);
                lr_values(p).len() == 2 && decreasing(&s[1..pos_n])
            }),
        ),
        (149, "d") => (triple(149), Box::new(|p| lr_values(p).len() == 3)),
        (149, "d_ab") => (triple(149), Box::new(move |p| lr_values(p) == [x, y, p.len()])),
        _ => return Err(Error::UnknownName { case: case_id, name: name.to_string() }),
    };
    Ok(Oracle { patterns, length: n, pred })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn listed(case: u32, name: &str, args: &[usize]) -> Vec<String> {
        oracle(case, name, args).unwrap().members().unwrap().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn quoted_members() {
        assert_eq!(listed(125, "b", &[3]), ["231"]);
        assert_eq!(listed(125, "b", &[4]), ["2413", "2431", "3241", "3412", "3421"]);
        assert_eq!(listed(125, "d", &[5]), ["24135", "24153", "24315", "32415", "34125", "34215"]);
        assert_eq!(listed(125, "e", &[5]), ["23145", "42315"]);
        assert_eq!(listed(185, "e", &[5]), ["23154", "42315"]);
        assert_eq!(listed(185, "v", &[6]), ["241635", "241653", "524163"]);
        assert_eq!(listed(185, "w", &[7]), ["2531764"]);
        assert_eq!(listed(149, "e_nl", &[4, 2]), ["2143", "3142", "3241", "4132", "4231"]);
        assert_eq!(listed(149, "e_nl", &[4, 3]), ["1432", "2431", "3421"]);
    }

    #[test]
    fn helpers() {
        let p: Perm = "87436512".parse().unwrap();
        assert_eq!(ascent(&p), Some((3, 6)));
        assert_eq!(final_run(&p), 1);
        assert!(last_ends_231(&"231".parse().unwrap()));
        assert!(!last_ends_231(&"321".parse().unwrap()));
    }
}
