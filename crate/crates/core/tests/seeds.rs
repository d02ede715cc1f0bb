mod common;

use std::sync::Arc;

use common::{a_edges, d4_edges, DescentOracle};
use flagmult::seedcalc::{lex_word, nat_word, standard_seed, walk, Start, WalkLimits};
use flagmult::weylwords::{braid_positions, commutation_positions};
use flagmult::{build_root_system, Error, TypeLetter};

fn seed(t: TypeLetter, n: usize, start: &Start) -> flagmult::seedcalc::Seed {
    standard_seed(Arc::new(build_root_system(t, n).unwrap()), start).unwrap()
}

#[test]
fn start_words_are_reduced_for_w0() {
    for (t, n) in [(TypeLetter::A, 5), (TypeLetter::D, 4), (TypeLetter::D, 5)] {
        let rs = build_root_system(t, n).unwrap();
        let edges = if t == TypeLetter::A {
            a_edges(n)
        } else {
            common::d_edges(n)
        };
        let mut oracle = DescentOracle::new(n, &edges);
        for w in [nat_word(&rs).unwrap(), lex_word(&rs).unwrap()] {
            assert_eq!(w.len(), rs.w0_length());
            assert!(oracle.is_reduced(w.letters()));
            assert!(oracle.rho_image(w.letters()).iter().all(|&x| x == -1));
        }
        assert!(oracle.longest_count() > 0);
    }
}

#[test]
fn nat_and_lex_seeds_pass_checks() {
    for (t, n) in [
        (TypeLetter::A, 4),
        (TypeLetter::D, 4),
        (TypeLetter::D, 5),
        (TypeLetter::E, 6),
    ] {
        for start in [Start::Nat, Start::Lex] {
            let s = seed(t, n, &start);
            assert!(s.check_all().is_empty(), "{t:?}{n} {start:?}");
        }
    }
}

#[test]
fn word_start_is_transported() {
    let s = seed(
        TypeLetter::A,
        3,
        &Start::Word("2,1,2,3,2,1".parse().unwrap()),
    );
    assert!(s.check_all().is_empty());
    let rs = Arc::new(build_root_system(TypeLetter::A, 3).unwrap());
    let bad = standard_seed(rs, &Start::Word("1,2,1".parse().unwrap()));
    assert!(matches!(bad, Err(Error::NotLongestElement(_))));
}

#[test]
fn walks_agree_across_threads() {
    let s = seed(TypeLetter::A, 4, &Start::Nat);
    let one = walk(
        &s,
        &WalkLimits {
            max_seeds: None,
            threads: 1,
        },
    )
    .unwrap();
    let four = walk(
        &s,
        &WalkLimits {
            max_seeds: None,
            threads: 4,
        },
    )
    .unwrap();
    assert_eq!(one.words, four.words);
    assert_eq!(one.atlas, four.atlas);
    let mut oracle = DescentOracle::new(4, &a_edges(4));
    assert_eq!(one.words.len() as u128, oracle.longest_count());
}

#[test]
fn truncated_walk() {
    let s = seed(TypeLetter::D, 4, &Start::Nat);
    let r = walk(
        &s,
        &WalkLimits {
            max_seeds: Some(50),
            threads: 2,
        },
    )
    .unwrap();
    assert!(!r.stats.complete);
    assert_eq!(r.words.len(), 50);
    let oracle = DescentOracle::new(4, &d4_edges());
    assert!(r.words.iter().all(|w| oracle.is_reduced(w.letters())));
}

#[test]
fn exceptional_single_steps() {
    for n in [6, 7, 8] {
        let s = seed(TypeLetter::E, n, &Start::Nat);
        assert!(s.check_b().is_empty() && s.check_c().is_empty(), "E{n}");
        let rs = s.root_system();
        let k = braid_positions(rs, s.word())[0];
        let m = s.braid_mutate(k).unwrap();
        assert!(s.exchange_identity(k, &m), "E{n} at {k}");
        assert!(m.check_b().is_empty(), "E{n} after braid at {k}");
        assert!(s.braid_root_relation(k));
        if let Some(&c) = commutation_positions(rs, s.word()).first() {
            let moved = s.commute_move(c).unwrap();
            assert_eq!(moved.commute_move(c).unwrap(), s);
        }
    }
}
