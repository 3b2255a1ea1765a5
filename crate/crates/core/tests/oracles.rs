mod common;

use std::collections::BTreeSet;

use common::{desks, even_desk, two_block_desk, word};
use subshift_core::{BasicSet, CylinderAlgebra, WindowTail};

#[test]
fn language_matches_filtered_words() {
    for d in desks().into_iter().chain([two_block_desk()]) {
        for k in 0..=8 {
            assert_eq!(
                d.shift.enumerate_language(k),
                d.language(k),
                "{} at length {k}",
                d.name
            );
        }
    }
}

#[test]
fn language_counts() {
    let counts = |d: &common::Desk| (0..=5).map(|k| d.language(k).len()).collect::<Vec<_>>();
    assert_eq!(counts(&common::golden_desk()), [1, 2, 3, 5, 8, 13]);
    assert_eq!(counts(&common::full2_desk()), [1, 2, 4, 8, 16, 32]);
    assert_eq!(counts(&common::one_point_desk()), [1; 6]);
    assert_eq!(counts(&common::even_desk()), [1, 2, 4, 7, 12, 20]);
}

#[test]
fn language_is_factorial_and_extendable() {
    for d in desks() {
        for k in 1..=7 {
            let shorter: BTreeSet<_> = d.shift.enumerate_language(k - 1).into_iter().collect();
            for w in d.shift.enumerate_language(k) {
                assert!(shorter.contains(&w.prefix(k - 1)) && shorter.contains(&w.drop_prefix(1)));
                assert!(d
                    .shift
                    .alphabet()
                    .symbols()
                    .any(|a| d.shift.is_in_language(&w.append(a)).unwrap()));
            }
        }
    }
}

#[test]
fn sft_window_tails_match_brute_force() {
    for d in [
        common::golden_desk(),
        common::full2_desk(),
        common::one_point_desk(),
        two_block_desk(),
    ] {
        let m = d.shift.memory().unwrap();
        for n in m..=6 {
            for w in d.language(n) {
                let WindowTail::Determined(t) = d.shift.tail_type_of_window(&w).unwrap() else {
                    panic!("{}: window {w:?} of length {n} undetermined", d.name);
                };
                for l in 0..=6 {
                    assert_eq!(
                        d.shift.left_extensions(t, l),
                        d.left_extensions(&w, l),
                        "{} {w:?} l={l}",
                        d.name
                    );
                }
            }
        }
    }
}

#[test]
fn sofic_left_extensions_match_windows() {
    let d = even_desk();
    let mut determined = 0;
    for w in d.language(12) {
        if let WindowTail::Determined(t) = d.shift.tail_type_of_window(&w).unwrap() {
            determined += 1;
            for l in 0..=5 {
                assert_eq!(
                    d.shift.left_extensions(t, l),
                    d.left_extensions(&w, l),
                    "{w:?} l={l}"
                );
            }
        }
    }
    assert!(determined > 0);
    for l in 0..=5 {
        let tails: BTreeSet<_> = (0..d.shift.tail_count())
            .map(|t| d.shift.left_extensions(t, l))
            .collect();
        assert_eq!(tails, d.a_partition(l, 12), "l={l}");
    }
}

#[test]
fn left_extensions_are_monotone() {
    for d in desks() {
        for t in 0..d.shift.tail_count() {
            for l in 1..=5 {
                let small = d.shift.left_extensions(t, l - 1);
                let big: BTreeSet<_> = d
                    .shift
                    .left_extensions(t, l)
                    .into_iter()
                    .filter(|w| w.len() < l)
                    .collect();
                assert_eq!(small, big);
            }
        }
    }
}

#[test]
fn embedding_respects_emptiness() {
    for d in desks().into_iter().chain([two_block_desk()]) {
        let alg = CylinderAlgebra::new(d.shift.clone());
        let words = alg.shift().alphabet().words_up_to(3);
        for mu in &words {
            for nu in &words {
                let f = alg.basic(&BasicSet::new(mu.clone(), nu.clone())).unwrap();
                assert_eq!(
                    f.is_zero(),
                    !d.conditioned_nonempty(mu, nu, 10),
                    "{} C({mu:?},{nu:?})",
                    d.name
                );
            }
        }
    }
}

#[test]
fn atoms_partition_the_unit() {
    for d in desks() {
        let alg = CylinderAlgebra::new(d.shift.clone());
        for l in 0..=4 {
            for k in 0..=l {
                let level = subshift_core::Level::new(k, l).unwrap();
                let atoms = alg.atoms(level).unwrap();
                let mut sum = subshift_core::AlgebraElement::zero(level);
                for a in atoms.iter() {
                    sum = alg
                        .add(&sum, &alg.atom_indicator(level, a.clone()).unwrap())
                        .unwrap();
                }
                assert!(alg.equal(&sum, &alg.unit()).unwrap());
            }
        }
    }
}

#[test]
fn class_counts_are_non_decreasing_and_stabilise() {
    for d in desks().into_iter().chain([two_block_desk()]) {
        let alg = CylinderAlgebra::new(d.shift.clone());
        let m: Vec<usize> = (0..=8).map(|l| alg.class_count(l)).collect();
        assert!(m.windows(2).all(|p| p[0] <= p[1]), "{}: {m:?}", d.name);
        let s = alg.stable_level();
        assert!(m[s..].iter().all(|v| *v == m[s]));
    }
}

#[test]
fn golden_tail_of_short_windows() {
    let d = common::golden_desk();
    let t = |s: &str| d.shift.tail_type_of_window(&word(&d.shift, s)).unwrap();
    let WindowTail::Determined(a) = t("01") else {
        panic!()
    };
    let WindowTail::Determined(b) = t("0") else {
        panic!()
    };
    assert_eq!(a, b);
    assert!(d.shift.tail_type_of_window(&word(&d.shift, "11")).is_err());
}
