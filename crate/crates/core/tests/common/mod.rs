#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use lunefree::curve::{CanonicalKey, PlanarCurve, SignedGaussCode};
use lunefree::moves::{self, MoveKind};
use rand::seq::SliceRandom;
use rand::Rng;

pub const TREFOIL: &str = "a+ b- c+ a+ b- c+";
pub const LUNE_FREE_8: &str = "a+ b+ c- d- e+ f+ b+ g- d- h+ f+ a+ g- c- h+ e+";

pub fn code(s: &str) -> PlanarCurve {
    PlanarCurve::from_signed_gauss_code(&SignedGaussCode::from_tokens(s).unwrap()).unwrap()
}

/// A random curve with at most `max` crossings, reached by random moves
/// from the circle.
pub fn random_curve<R: Rng>(rng: &mut R, max: usize, steps: usize) -> PlanarCurve {
    let mut cur = PlanarCurve::trivial();
    for _ in 0..steps {
        let sites: Vec<_> = moves::find_sites(&cur, &MoveKind::ALL)
            .into_iter()
            .filter(|s| cur.crossings() as i32 + s.kind().crossing_delta() <= max as i32)
            .collect();
        let site = sites.choose(rng).unwrap();
        cur = moves::apply(&cur, site).unwrap();
    }
    cur
}

/// Keys of every curve reachable from `start` with at most `bound` crossings.
pub fn reachable(start: &PlanarCurve, kinds: &[MoveKind], bound: usize) -> HashSet<CanonicalKey> {
    let mut seen = HashSet::from([start.canonical_key()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(c) = queue.pop_front() {
        for n in moves::neighbors(&c, kinds, bound) {
            if seen.insert(n.canonical_key()) {
                queue.push_back(n);
            }
        }
    }
    seen
}
