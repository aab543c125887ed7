//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lunefree::curve::{enumerate_up_to, CanonicalKey, PlanarCurve, SignedGaussCode};
use lunefree::invariants::{fox_coloring_count, is_weak13_trivial, weak13_invariant, Invariant};
use lunefree::moves::{self, apply, find_sites, monotonize, MoveKind, MoveSequence, MoveSite};
use lunefree::reduction::{self, ReductionMode};
use lunefree::resolution::{apply_omega, omega1_sites, omega3_sites, positive_resolution};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const LUNE_FREE_8: &str = "a+ b+ c- d- e+ f+ b+ g- d- h+ f+ a+ g- c- h+ e+";
const MODES: [ReductionMode; 3] = [ReductionMode::One, ReductionMode::Two, ReductionMode::OneTwo];

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn code(s: &str) -> PlanarCurve {
    PlanarCurve::from_signed_gauss_code(&SignedGaussCode::from_tokens(s).unwrap()).unwrap()
}

fn reachable(start: &PlanarCurve, kinds: &[MoveKind], bound: usize) -> HashSet<CanonicalKey> {
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

fn terminals(
    c: &PlanarCurve,
    mode: ReductionMode,
    memo: &mut HashMap<CanonicalKey, BTreeSet<CanonicalKey>>,
) -> BTreeSet<CanonicalKey> {
    let key = c.canonical_key();
    if let Some(t) = memo.get(&key) {
        return t.clone();
    }
    let sites = find_sites(c, mode.kinds());
    let out = if sites.is_empty() {
        BTreeSet::from([key.clone()])
    } else {
        sites.iter().flat_map(|s| terminals(&apply(c, s).unwrap(), mode, memo)).collect()
    };
    memo.insert(key, out.clone());
    out
}

/// Every maximal removal strategy on every curve up to 6 crossings ends at
/// one isotopy class.
fn confluence(curves: &[PlanarCurve]) -> Outcome {
    let bad: usize = MODES
        .par_iter()
        .map(|&mode| {
            let mut memo = HashMap::new();
            curves.iter().filter(|c| terminals(c, mode, &mut memo).len() != 1).count()
        })
        .sum();
    outcome(bad == 0, format!("{} curves x 3 modes, {bad} with several normal forms", curves.len()))
}

/// Reduction-based equivalence against bounded search, all pairs up to 4
/// crossings.
fn oracle_agreement() -> Outcome {
    let curves = enumerate_up_to(4);
    let results: Vec<(usize, usize)> = MODES
        .par_iter()
        .flat_map(|&mode| curves.par_iter().map(move |p| (mode, p)))
        .map(|(mode, p)| {
            let kinds: Vec<MoveKind> = mode.kinds().iter().chain(mode.creation_kinds()).copied().collect();
            let mut cache: HashMap<usize, HashSet<CanonicalKey>> = HashMap::new();
            let mut bad = 0;
            for q in &curves {
                let bound = p.crossings().max(q.crossings()) + 2;
                let reach = cache.entry(bound).or_insert_with(|| reachable(p, &kinds, bound));
                if reach.contains(&q.canonical_key()) != reduction::equivalent(p, q, mode) {
                    bad += 1;
                }
            }
            (curves.len(), bad)
        })
        .collect();
    let pairs: usize = results.iter().map(|r| r.0).sum();
    let bad: usize = results.iter().map(|r| r.1).sum();
    outcome(bad == 0, format!("{pairs} (pair, mode) checks, {bad} disagreements"))
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

/// 1000 random creation/removal sequences from lune-free starts.
fn monotonization() -> Outcome {
    let starts = [PlanarCurve::trivial(), code(LUNE_FREE_8)];
    let results: Vec<(bool, usize)> = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(i);
            let start = &starts[(i % 2) as usize];
            let len = rng.gen_range(1..=10);
            let seq = random_sequence(&mut rng, start, len);
            let removals = seq.steps.iter().filter(|s| s.kind().is_removal()).count();
            let ok = match monotonize(&seq) {
                Ok(out) => out.is_monotone() && out.end().unwrap().is_isotopic(&seq.end().unwrap()),
                Err(_) => false,
            };
            (ok, removals)
        })
        .collect();
    let ok = results.iter().filter(|r| r.0).count();
    let removals: usize = results.iter().map(|r| r.1).sum();
    outcome(ok == results.len(), format!("{ok}/{} sequences ({removals} removal moves rewritten)", results.len()))
}

/// Removing a 1-gon, or a weak triangle move, on the projection is a single
/// Reidemeister move on the positive resolution.
fn commutation(curves: &[PlanarCurve]) -> Outcome {
    let (sites, bad) = curves
        .par_iter()
        .map(|c| {
            let d = positive_resolution(c);
            let mut sites = 0;
            let mut bad = 0;
            for site in find_sites(c, &[MoveKind::OneB, MoveKind::H3Weak]) {
                sites += 1;
                let target = positive_resolution(&apply(c, &site).unwrap()).key();
                let candidates = if site.kind() == MoveKind::OneB { omega1_sites(&d) } else { omega3_sites(&d) };
                if !candidates.iter().any(|o| apply_omega(&d, o).unwrap().key() == target) {
                    bad += 1;
                }
            }
            (sites, bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    outcome(bad == 0, format!("{sites} sites, {bad} without a matching diagram move"))
}

fn resolution_well_defined(curves: &[PlanarCurve]) -> Outcome {
    let bad = curves
        .par_iter()
        .filter(|c| {
            let d = positive_resolution(c);
            !(d.is_positive() && d.writhe() == c.crossings() as i32 && d.reversed() == positive_resolution(&c.reversed()))
        })
        .count();
    outcome(bad == 0, format!("{} curves, {bad} failures", curves.len()))
}

/// The shipped corpus records tricolorability false for the circle and
/// true for the trefoil projection.
fn corpus_values() -> Outcome {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/shipped.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_lunefree")).args(["corpus", "run", path]).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let has = |l: &str| text.lines().any(|x| x == l);
    let ok = out.status.code() == Some(0) && has("trivial\ttricolor\tfalse") && has("trefoil\ttricolor\ttrue");
    outcome(ok, format!("corpus run exit {:?}, trivial=false trefoil=true recorded", out.status.code()))
}

/// Triviality decision against bounded search from the circle.
fn triviality() -> Outcome {
    let curves = enumerate_up_to(5);
    let kinds = [MoveKind::OneA, MoveKind::OneB, MoveKind::H3Weak];
    let reach: HashMap<usize, HashSet<CanonicalKey>> =
        (3..=8).into_par_iter().map(|b| (b, reachable(&PlanarCurve::trivial(), &kinds, b))).collect();
    let mut bad = 0;
    let mut trivial = 0;
    for c in &curves {
        let t = is_weak13_trivial(c);
        if reach[&(c.crossings() + 3)].contains(&c.canonical_key()) != t {
            bad += 1;
        }
        if t {
            trivial += 1;
            let d = positive_resolution(c);
            let unknot = [3, 5, 7].iter().all(|&p| fox_coloring_count(&d, p) == Ok(p as u64));
            if !unknot {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{} curves ({trivial} trivial), {bad} disagreements", curves.len()))
}

/// 20-step random walks through 1-moves and weak triangle moves.
fn invariance_walks() -> Outcome {
    let curves = enumerate_up_to(5);
    let kinds = [MoveKind::OneA, MoveKind::OneB, MoveKind::H3Weak];
    let values = |c: &PlanarCurve| {
        (weak13_invariant(c, Invariant::Tricolor).value, weak13_invariant(c, Invariant::Fox(5)).value)
    };
    let bad = curves
        .par_iter()
        .enumerate()
        .filter(|(i, c)| {
            let mut rng = ChaCha8Rng::seed_from_u64(*i as u64);
            let want = values(c);
            let mut cur = (*c).clone();
            (0..20).any(|_| {
                let sites = find_sites(&cur, &kinds);
                cur = apply(&cur, sites.choose(&mut rng).unwrap()).unwrap();
                values(&cur) != want
            })
        })
        .count();
    outcome(bad == 0, format!("{} walks, {bad} with a changed value", curves.len()))
}

fn main() -> ExitCode {
    let curves6 = enumerate_up_to(6);
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 confluence of reductions (<=6 crossings)", Box::new(|| confluence(&curves6))),
        ("2 equivalence agrees with bounded search (<=4 crossings)", Box::new(oracle_agreement)),
        ("3 monotonization of random sequences", Box::new(monotonization)),
        ("4 positive resolution commutes with 1-gon and weak triangle moves", Box::new(|| commutation(&curves6))),
        ("5 positive resolution is positive and orientation free", Box::new(|| resolution_well_defined(&curves6))),
        ("6 tricolorability values in the shipped corpus", Box::new(corpus_values)),
        ("7 weak (1,3) triviality agrees with bounded search (<=5 crossings)", Box::new(triviality)),
        ("8 invariants constant along random walks", Box::new(invariance_walks)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        let r = run();
        let took = t.elapsed();
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name}: {} [{:.1}s]", r.detail, secs(took));
        if !r.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}
