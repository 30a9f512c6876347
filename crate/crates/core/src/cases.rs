//! The thirteen named triples.

use crate::perm::{PatternTriple, Perm};

/// `(case id, patterns)` for every named triple.
pub const NAMED_CASES: [(u32, [&str; 3]); 13] = [
    (74, ["1234", "1243", "3412"]),
    (109, ["3412", "3421", "2143"]),
    (121, ["1243", "2341", "3412"]),
    (125, ["1243", "2341", "4123"]),
    (149, ["1234", "3412", "4123"]),
    (185, ["1234", "2341", "4123"]),
    (188, ["1432", "2143", "3214"]),
    (209, ["3142", "1432", "1243"]),
    (216, ["2143", "3142", "3412"]),
    (225, ["1243", "2413", "3142"]),
    (228, ["2341", "2413", "3412"]),
    (230, ["2341", "1243", "1234"]),
    (240, ["3412", "3421", "2341"]),
];

pub fn case_ids() -> Vec<u32> {
    NAMED_CASES.iter().map(|(id, _)| *id).collect()
}

pub fn named_triple(case: u32) -> Option<PatternTriple> {
    NAMED_CASES.iter().find(|(id, _)| *id == case).map(|(id, pats)| {
        let p: Vec<Perm> = pats.iter().map(|s| s.parse().expect("valid pattern")).collect();
        PatternTriple::new([p[0].clone(), p[1].clone(), p[2].clone()], Some(*id))
            .expect("valid triple")
    })
}

pub fn all_named() -> Vec<PatternTriple> {
    case_ids().into_iter().filter_map(named_triple).collect()
}
