mod common;

use common::{code, LUNE_FREE_8, TREFOIL};
use lunefree::curve::PlanarCurve;
use lunefree::moves::{apply, apply_tracked, find_sites, monotonize, MoveError, MoveKind, MoveSequence, MoveSite};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn removal_touching(curve: &PlanarCurve, kind: MoveKind, created: &[u32]) -> Option<MoveSite> {
    find_sites(curve, &[kind]).into_iter().find(|s| match *s {
        MoveSite::KinkRemove { face } => created.contains(&curve.vertex_of(face)),
        MoveSite::LensRemove { face } => curve.face_of(face).darts.iter().any(|&d| created.contains(&curve.vertex_of(d))),
        _ => false,
    })
}

#[test]
fn kink_then_its_removal_vanishes() {
    let circle = PlanarCurve::trivial();
    for side in [0, 1] {
        let a = MoveSite::KinkInsert { side };
        let s = apply_tracked(&circle, &a).unwrap();
        let b = removal_touching(&s.curve, MoveKind::OneB, &s.created).unwrap();
        let seq = MoveSequence { start: circle.clone(), steps: vec![a, b] };
        assert!(monotonize(&seq).unwrap().steps.is_empty());
    }
}

#[test]
fn lens_then_kink_removal_becomes_one_kink() {
    for start in [PlanarCurve::trivial(), code(LUNE_FREE_8)] {
        let mut checked = 0;
        for a in find_sites(&start, &[MoveKind::TwoA]) {
            let s = apply_tracked(&start, &a).unwrap();
            let Some(b) = removal_touching(&s.curve, MoveKind::OneB, &s.created) else { continue };
            let end = apply(&s.curve, &b).unwrap();
            let out = monotonize(&MoveSequence { start: start.clone(), steps: vec![a, b] }).unwrap();
            assert_eq!(out.steps.len(), 1);
            assert_eq!(out.steps[0].kind(), MoveKind::OneA);
            assert!(out.end().unwrap().is_isotopic(&end));
            checked += 1;
        }
        assert!(checked > 0);
    }
}

#[test]
fn commuting_kinks_collapse() {
    let circle = PlanarCurve::trivial();
    let first = MoveSite::KinkInsert { side: 0 };
    let s1 = apply_tracked(&circle, &first).unwrap();
    let mut checked = 0;
    for second in find_sites(&s1.curve, &[MoveKind::OneA]) {
        let s2 = apply_tracked(&s1.curve, &second).unwrap();
        let old: Vec<u32> = s1.created.iter().filter_map(|&v| s2.vertices[v as usize]).collect();
        let Some(b) = removal_touching(&s2.curve, MoveKind::OneB, &old) else { continue };
        let seq = MoveSequence { start: circle.clone(), steps: vec![first, second, b] };
        let end = seq.end().unwrap();
        let out = monotonize(&seq).unwrap();
        assert_eq!(out.steps.len(), 1, "{second}");
        assert!(out.is_monotone());
        assert!(out.end().unwrap().is_isotopic(&end));
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn preconditions() {
    let seq = MoveSequence::new(code(TREFOIL));
    assert_eq!(monotonize(&seq).unwrap_err(), MoveError::NotReduced);
    let start = code(LUNE_FREE_8);
    let h3 = find_sites(&start, &[MoveKind::H3Weak, MoveKind::H3Strong])[0];
    let seq = MoveSequence { start, steps: vec![h3] };
    assert!(matches!(monotonize(&seq), Err(MoveError::KindOutOfScope(_))));
}

fn random_sequence(rng: &mut ChaCha8Rng, start: &PlanarCurve, len: usize) -> MoveSequence {
    let kinds = [MoveKind::OneA, MoveKind::OneB, MoveKind::TwoA, MoveKind::TwoB];
    let mut cur = start.clone();
    let mut seq = MoveSequence::new(start.clone());
    for _ in 0..len {
        let sites = find_sites(&cur, &kinds);
        let removals: Vec<MoveSite> = sites.iter().filter(|s| s.kind().is_removal()).copied().collect();
        let site = if !removals.is_empty() && rng.gen_bool(0.5) {
            *removals.choose(rng).unwrap()
        } else {
            *sites.choose(rng).unwrap()
        };
        cur = apply(&cur, &site).unwrap();
        seq.steps.push(site);
    }
    seq
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_sequences_become_monotone(seed in any::<u64>(), len in 1usize..=10, lunefree in any::<bool>()) {
        let start = if lunefree { code(LUNE_FREE_8) } else { PlanarCurve::trivial() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seq = random_sequence(&mut rng, &start, len);
        let out = monotonize(&seq).unwrap();
        prop_assert!(out.is_monotone());
        prop_assert_eq!(&out.start, &seq.start);
        prop_assert!(out.end().unwrap().is_isotopic(&seq.end().unwrap()));
    }
}
