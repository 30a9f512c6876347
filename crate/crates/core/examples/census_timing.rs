use std::time::Instant;
use triperm::symmetry::*;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let classes = symmetry_classes();
    let t = Instant::now();
    let seqs = class_sequences(&classes, n, dfs_counter).unwrap();
    eprintln!("counted to {n} in {:?}", t.elapsed());
    for m in 5..=n {
        println!("n={m} groups={}", group_by_sequence(&classes, &seqs, m).len());
    }
    let mut big: Vec<u64> = seqs.iter().map(|s| s[n]).collect();
    big.sort();
    println!("max a_n {:?}", &big[big.len() - 3..]);
}
