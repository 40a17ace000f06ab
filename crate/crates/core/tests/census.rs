use std::collections::HashSet;

use bicross_core::matched_pair::{
    canonical_pair, enumerate_actions, enumerate_matched_pairs_h4h4, family_actions, trivial_pair, PairLabel, Side,
};
use bicross_core::{Field, Tensor3};

fn tables(actions: &[bicross_core::Action]) -> HashSet<Tensor3> {
    actions.iter().map(|a| a.table().clone()).collect()
}

#[test]
fn action_census_matches_closed_forms() {
    for p in [3u64, 5] {
        let f = Field::prime(p).unwrap();
        let n = (1 + p * p).pow(2) as usize;
        for side in [Side::Left, Side::Right] {
            let found = enumerate_actions(f, side).unwrap();
            assert_eq!(found.len(), n, "p={p} {side:?}");
            let families = family_actions(f, side).unwrap();
            assert_eq!(families.len(), n);
            assert_eq!(tables(&found), tables(&families), "p={p} {side:?}");
        }
    }
}

#[test]
fn matched_pairs_over_f3() {
    let census = enumerate_matched_pairs_h4h4(3).unwrap();
    let f = Field::prime(3).unwrap();
    let labels: Vec<PairLabel> = census.pairs.iter().map(|(l, _)| l.clone()).collect();
    let mut expected = vec![PairLabel::Trivial];
    expected.extend(f.elements().into_iter().map(PairLabel::Canonical));
    assert_eq!(labels, expected);
    assert_eq!(census.pairs[0].1, trivial_pair(f).unwrap());
    for (label, pair) in &census.pairs[1..] {
        let PairLabel::Canonical(l) = label else { panic!() };
        assert_eq!(*pair, canonical_pair(f, l).unwrap());
    }
}

#[test]
fn matched_pairs_over_f5() {
    let census = enumerate_matched_pairs_h4h4(5).unwrap();
    assert_eq!(census.left_actions.len(), 676);
    assert_eq!(census.right_actions.len(), 676);
    assert_eq!(census.pairs.len(), 6);
    assert_eq!(census.pairs[0].0, PairLabel::Trivial);
    assert!(census.pairs[1..].iter().all(|(l, _)| matches!(l, PairLabel::Canonical(_))));
}

#[test]
fn census_rejects_large_primes() {
    assert!(enumerate_matched_pairs_h4h4(11).is_err());
    assert!(enumerate_matched_pairs_h4h4(2).is_err());
}
