mod common;

use common::random_curve;
use lunefree::codec::{parse_corpus, relabel, run_corpus, serialize, serialize_corpus, CorpusEntry};
use lunefree::curve::{enumerate_up_to, PlanarCurve};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SHIPPED: &str = include_str!("../../../corpus/shipped.txt");

#[test]
fn shipped_corpus_holds() {
    let entries = parse_corpus(SHIPPED).unwrap();
    let (records, mismatches) = run_corpus(&entries);
    assert!(mismatches.is_empty(), "{mismatches:?}");
    assert!(records.iter().any(|r| r.name == "trefoil" && r.property == "tricolor" && r.value == "true"));
    assert!(records.iter().any(|r| r.name == "trivial" && r.property == "tricolor" && r.value == "false"));
}

#[test]
fn formatting_is_idempotent() {
    let once = serialize_corpus(&parse_corpus(SHIPPED).unwrap());
    let twice = serialize_corpus(&parse_corpus(&once).unwrap());
    assert_eq!(once, twice);
}

#[test]
fn enumerated_codes_round_trip() {
    for (i, c) in enumerate_up_to(5).into_iter().enumerate() {
        let entry = CorpusEntry { name: format!("c{i}"), code: c.canonical_code(), expected: Default::default() };
        assert_eq!(parse_corpus(&serialize(&entry)).unwrap(), vec![entry]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_codes_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_curve(&mut rng, 5, 8);
        let entry = CorpusEntry { name: "r".into(), code: c.to_signed_gauss_code(), expected: Default::default() };
        let back = parse_corpus(&serialize(&entry)).unwrap().pop().unwrap();
        prop_assert_eq!(&back.code, &relabel(&entry.code));
        prop_assert_eq!(PlanarCurve::from_signed_gauss_code(&back.code).unwrap(), c);
    }
}
