use proptest::prelude::*;

use triperm::enumerate::{brute_force_avoiders, count_avoiders_of, statistic, Statistic, StatisticKey};
use triperm::perm::{avoids_all, contains};
use triperm::symmetry::{canonical, complement, inverse, reverse, Symmetry};
use triperm::{Perm, RatSeries, Rational, Sqrt5};

fn perm(max_len: usize) -> impl Strategy<Value = Perm> {
    (0..=max_len).prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Perm::new(v).unwrap())
}

fn perm_of_len(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::new(v).unwrap())
}

fn triple() -> impl Strategy<Value = [Perm; 3]> {
    prop::collection::btree_set(perm_of_len(4).prop_map(|p| p.to_string()), 3)
        .prop_map(|s| {
            let v: Vec<Perm> = s.iter().map(|x| x.parse().unwrap()).collect();
            [v[0].clone(), v[1].clone(), v[2].clone()]
        })
}

fn rat(lo: i64, hi: i64) -> impl Strategy<Value = Rational> {
    (lo..=hi, 1i64..=5).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn series(order: usize) -> impl Strategy<Value = RatSeries> {
    prop::collection::vec(rat(-6, 6), order + 1).prop_map(move |c| RatSeries::from_coeffs(c, order))
}

fn sqrt5() -> impl Strategy<Value = Sqrt5> {
    (rat(-9, 9), rat(-9, 9)).prop_map(|(a, b)| Sqrt5::new(a, b))
}

proptest! {
    #[test]
    fn display_parse_round_trip(p in perm(9)) {
        let back: Perm = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn basic_symmetries_are_involutions(p in perm(9)) {
        prop_assert_eq!(reverse(&reverse(&p)), p.clone());
        prop_assert_eq!(complement(&complement(&p)), p.clone());
        prop_assert_eq!(inverse(&inverse(&p)), p.clone());
        prop_assert_eq!(reverse(&complement(&p)), complement(&reverse(&p)));
    }

    #[test]
    fn symmetries_form_a_group(p in perm(8)) {
        let all = Symmetry::all();
        for s in &all {
            for t in &all {
                let composed = t.apply(&s.apply(&p));
                prop_assert!(all.iter().any(|u| u.apply(&p) == composed));
            }
        }
    }

    #[test]
    fn containment_is_transported(host in perm(8), pat in perm(4)) {
        let c = contains(&host, &pat);
        for s in Symmetry::all() {
            prop_assert_eq!(contains(&s.apply(&host), &s.apply(&pat)), c);
        }
    }

    #[test]
    fn first_and_last_letters_swap_under_reverse(p in perm(9)) {
        prop_assume!(!p.is_empty());
        let first = statistic(Statistic::FirstLetter, &p);
        let last = statistic(Statistic::LastLetter, &reverse(&p));
        match (first, last) {
            (Some(StatisticKey::FirstLetter(a)), Some(StatisticKey::LastLetter(b))) => prop_assert_eq!(a, b),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn counts_are_symmetry_invariant(t in triple()) {
        let base = count_avoiders_of(&t, 7, 1 << 20).unwrap();
        let canon = canonical(&t);
        prop_assert_eq!(count_avoiders_of(&canon, 7, 1 << 20).unwrap(), base.clone());
        let s = Symmetry { inverse: true, reverse: true, complement: false };
        prop_assert_eq!(count_avoiders_of(&s.apply_triple(&t), 7, 1 << 20).unwrap(), base);
    }

    #[test]
    fn generating_tree_matches_brute_force(t in triple()) {
        let counts = count_avoiders_of(&t, 7, 1 << 20).unwrap();
        for n in 0..=7 {
            let brute = brute_force_avoiders(&t, n);
            prop_assert!(brute.iter().all(|p| avoids_all(p, &t)));
            prop_assert_eq!(counts[n], brute.len() as u64);
        }
    }

    #[test]
    fn series_ring_laws(a in series(8), b in series(8), c in series(8)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn series_inverse_and_root(a in series(8)) {
        if a.coeff(0) != Rational::from_integer(0.into()) {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, RatSeries::one(8));
            let sq = &a * &a;
            let r = sq.sqrt().unwrap();
            prop_assert!(r == a || r == -a.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn conjugation_is_a_field_automorphism(x in sqrt5(), y in sqrt5()) {
        prop_assert_eq!((x.clone() * y.clone()).conj(), x.conj() * y.conj());
        prop_assert_eq!((x.clone() + y.clone()).conj(), x.conj() + y.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        prop_assert!((x.clone() * x.conj()).to_base().is_some());
    }
}
