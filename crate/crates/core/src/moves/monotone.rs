//! Rewriting a sequence of 1/2-moves from a lune-free start into one that
//! only creates 1-gons and 2-gons.
//!
//! The first removal move is repeatedly exchanged with the creation move
//! just before it. When the two moves touch a common crossing the pair
//! cancels or collapses to a single move; otherwise they commute. A removal
//! can never reach the start, which has no 1-gon or 2-gon, so every removal
//! is eventually absorbed.

use crate::curve::{find_isomorphism, PlanarCurve};

use super::{apply, apply_tracked, find_sites, MoveError, MoveKind, MoveSite};

#[derive(Debug, Clone)]
pub struct MoveSequence {
    pub start: PlanarCurve,
    pub steps: Vec<MoveSite>,
}

impl MoveSequence {
    pub fn new(start: PlanarCurve) -> Self {
        MoveSequence { start, steps: Vec::new() }
    }

    /// The curve after every step.
    pub fn end(&self) -> Result<PlanarCurve, MoveError> {
        Ok(replay(self)?.pop().expect("replay includes the start"))
    }

    pub fn is_monotone(&self) -> bool {
        self.steps.iter().all(|s| s.kind().is_creation())
    }
}

/// All intermediate curves, starting with `seq.start`.
pub fn replay(seq: &MoveSequence) -> Result<Vec<PlanarCurve>, MoveError> {
    let mut curves = vec![seq.start.clone()];
    for site in &seq.steps {
        let next = apply(curves.last().unwrap(), site)?;
        curves.push(next);
    }
    Ok(curves)
}

/// Crossings deleted by a removal site, sorted.
fn deleted_vertices(curve: &PlanarCurve, site: &MoveSite) -> Vec<u32> {
    let mut vs: Vec<u32> = match *site {
        MoveSite::KinkRemove { face } => vec![curve.vertex_of(face)],
        MoveSite::LensRemove { face } => curve.face_of(face).darts.iter().map(|&d| curve.vertex_of(d)).collect(),
        _ => Vec::new(),
    };
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// A single move of kind `kind` on `from` whose result is `target` up to
/// orientation-preserving isotopy.
fn find_move_onto(from: &PlanarCurve, kind: MoveKind, target: &PlanarCurve) -> Option<MoveSite> {
    let want = target.canonical_key();
    find_sites(from, &[kind]).into_iter().find(|s| {
        let r = apply(from, s).expect("found sites apply");
        r.crossings() == target.crossings()
            && r.canonical_key() == want
            && find_isomorphism(&r, target, false).is_some()
    })
}

/// Moves `steps`, valid from `old`, re-expressed from `new`, a curve that
/// is orientation-preservingly isomorphic to `old`.
fn transport(old: &PlanarCurve, new: &PlanarCurve, steps: &[MoveSite]) -> Option<Vec<MoveSite>> {
    let (mut old, mut new) = (old.clone(), new.clone());
    let mut out = Vec::with_capacity(steps.len());
    for site in steps {
        let moved = if old.is_trivial() {
            *site
        } else {
            site.transport(&find_isomorphism(&old, &new, false)?)
        };
        old = apply(&old, site).ok()?;
        new = apply(&new, &moved).ok()?;
        out.push(moved);
    }
    Some(out)
}

/// Rewrites `seq` into a sequence of 1a/2a moves with the same start and
/// an isotopic end.
pub fn monotonize(seq: &MoveSequence) -> Result<MoveSequence, MoveError> {
    if seq.start.faces().iter().any(|f| (1..=2).contains(&f.degree())) {
        return Err(MoveError::NotReduced);
    }
    if let Some(s) = seq.steps.iter().find(|s| matches!(s.kind(), MoveKind::H3Weak | MoveKind::H3Strong)) {
        return Err(MoveError::KindOutOfScope(s.kind()));
    }
    let mut steps = seq.steps.clone();
    loop {
        let Some(k) = steps.iter().position(|s| s.kind().is_removal()) else {
            return Ok(MoveSequence { start: seq.start.clone(), steps });
        };
        let curves = replay(&MoveSequence { start: seq.start.clone(), steps: steps[..=k].to_vec() })?;
        if k == 0 {
            return Err(MoveError::NotReduced);
        }
        let (a, b) = (steps[k - 1], steps[k]);
        let before = &curves[k - 1];
        let after = &curves[k + 1];
        let made = apply_tracked(before, &a)?;
        let gone = deleted_vertices(&made.curve, &b);
        let touching = gone.iter().any(|v| made.created.contains(v));

        let replacement: Vec<MoveSite> = if touching {
            let cancels = || after.crossings() == before.crossings() && find_isomorphism(before, after, false).is_some();
            let r = match (a.kind(), b.kind()) {
                (MoveKind::OneA, MoveKind::OneB) | (MoveKind::TwoA, MoveKind::TwoB) => cancels().then(Vec::new),
                (MoveKind::TwoA, MoveKind::OneB) => find_move_onto(before, MoveKind::OneA, after).map(|s| vec![s]),
                (MoveKind::OneA, MoveKind::TwoB) => find_move_onto(before, MoveKind::OneB, after).map(|s| vec![s]),
                _ => None,
            };
            r.ok_or(MoveError::Unmatched { index: k - 1 })?
        } else {
            // the removed crossings already exist before `a`
            let preimage: Vec<u32> = {
                let mut p: Vec<u32> = (0..before.crossings() as u32)
                    .filter(|&v| made.vertices[v as usize].is_some_and(|nv| gone.contains(&nv)))
                    .collect();
                p.sort_unstable();
                p
            };
            let early = find_sites(before, &[b.kind()])
                .into_iter()
                .find(|s| deleted_vertices(before, s) == preimage)
                .ok_or(MoveError::Unmatched { index: k - 1 })?;
            let mid = apply(before, &early)?;
            let late = find_move_onto(&mid, a.kind(), after).ok_or(MoveError::Unmatched { index: k - 1 })?;
            vec![early, late]
        };

        let mut head: Vec<MoveSite> = steps[..k - 1].to_vec();
        head.extend(replacement);
        let new_after = replay(&MoveSequence { start: seq.start.clone(), steps: head.clone() })?.pop().unwrap();
        let tail = transport(after, &new_after, &steps[k + 1..]).ok_or(MoveError::Unmatched { index: k - 1 })?;
        head.extend(tail);
        steps = head;
    }
}
