//! Reduced projections: delete 1-gons and/or 2-gons until none remain.
//! The result does not depend on the order of deletions, so two curves are
//! equivalent exactly when their reductions are isotopic.

use crate::curve::PlanarCurve;
use crate::moves::{self, MoveKind, MoveSite};

/// Which removal moves a reduction may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionMode {
    One,
    Two,
    OneTwo,
}

impl ReductionMode {
    pub fn kinds(self) -> &'static [MoveKind] {
        match self {
            ReductionMode::One => &[MoveKind::OneB],
            ReductionMode::Two => &[MoveKind::TwoB],
            ReductionMode::OneTwo => &[MoveKind::OneB, MoveKind::TwoB],
        }
    }

    /// The matching creation moves, for the inverse direction.
    pub fn creation_kinds(self) -> &'static [MoveKind] {
        match self {
            ReductionMode::One => &[MoveKind::OneA],
            ReductionMode::Two => &[MoveKind::TwoA],
            ReductionMode::OneTwo => &[MoveKind::OneA, MoveKind::TwoA],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ReductionMode::One => "1",
            ReductionMode::Two => "2",
            ReductionMode::OneTwo => "12",
        }
    }
}

impl std::str::FromStr for ReductionMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(ReductionMode::One),
            "2" => Ok(ReductionMode::Two),
            "12" => Ok(ReductionMode::OneTwo),
            _ => Err(format!("unknown mode `{s}` (expected 1, 2 or 12)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionTrace {
    /// each site refers to the curve produced by the preceding steps
    pub steps: Vec<MoveSite>,
    pub result: PlanarCurve,
}

/// Greedy reduction, always taking the site with the lowest anchor dart.
pub fn reduce(curve: &PlanarCurve, mode: ReductionMode) -> ReductionTrace {
    let mut cur = curve.clone();
    let mut steps = Vec::new();
    while let Some(site) = moves::find_sites(&cur, mode.kinds()).into_iter().min_by_key(anchor) {
        cur = moves::apply(&cur, &site).expect("found sites apply");
        steps.push(site);
    }
    ReductionTrace { steps, result: cur }
}

fn anchor(site: &MoveSite) -> u32 {
    match *site {
        MoveSite::KinkRemove { face } | MoveSite::LensRemove { face } => face,
        _ => unreachable!("reduction only uses removal moves"),
    }
}

pub fn reduce_12(curve: &PlanarCurve) -> ReductionTrace {
    reduce(curve, ReductionMode::OneTwo)
}

pub fn reduce_1(curve: &PlanarCurve) -> ReductionTrace {
    reduce(curve, ReductionMode::One)
}

pub fn reduce_2(curve: &PlanarCurve) -> ReductionTrace {
    reduce(curve, ReductionMode::Two)
}

pub fn equivalent(p: &PlanarCurve, q: &PlanarCurve, mode: ReductionMode) -> bool {
    reduce(p, mode).result.is_isotopic(&reduce(q, mode).result)
}

pub fn equivalent_12(p: &PlanarCurve, q: &PlanarCurve) -> bool {
    equivalent(p, q, ReductionMode::OneTwo)
}

pub fn equivalent_1(p: &PlanarCurve, q: &PlanarCurve) -> bool {
    equivalent(p, q, ReductionMode::One)
}

pub fn equivalent_2(p: &PlanarCurve, q: &PlanarCurve) -> bool {
    equivalent(p, q, ReductionMode::Two)
}

/// No 1-gons and no 2-gons.
pub fn is_lune_free(curve: &PlanarCurve) -> bool {
    curve.faces().iter().all(|f| !(1..=2).contains(&f.degree()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::SignedGaussCode;

    fn curve(s: &str) -> PlanarCurve {
        PlanarCurve::from_signed_gauss_code(&SignedGaussCode::from_tokens(s).unwrap()).unwrap()
    }

    #[test]
    fn circle_is_fixed() {
        let t = reduce_12(&PlanarCurve::trivial());
        assert!(t.steps.is_empty());
        assert!(t.result.is_trivial());
        assert!(is_lune_free(&t.result));
    }

    #[test]
    fn trefoil_reduces_to_circle() {
        let tre = curve("a+ b- c+ a+ b- c+");
        assert!(reduce_12(&tre).result.is_trivial());
        let two = reduce_2(&tre);
        assert_eq!(two.steps.len(), 1);
        assert_eq!(two.result.crossings(), 1);
        let one = reduce_1(&tre);
        assert!(one.steps.is_empty());
        assert_eq!(one.result, tre);
    }

    #[test]
    fn kinks_reduce_by_one_moves() {
        assert!(reduce_1(&curve("a+ a+")).result.is_trivial());
        assert!(reduce_1(&curve("a+ a+ b- b-")).result.is_trivial());
        assert!(reduce_1(&curve("a+ b+ b+ a+")).result.is_trivial());
        assert!(reduce_2(&curve("a+ a+ b+ b+")).result.is_trivial());
        assert_eq!(reduce_2(&curve("a+ a+")).result.crossings(), 1);
    }

    #[test]
    fn equivalence_examples() {
        let tre = curve("a+ b- c+ a+ b- c+");
        let circle = PlanarCurve::trivial();
        assert!(equivalent_12(&tre, &circle));
        assert!(!equivalent_2(&tre, &circle));
        assert!(equivalent_2(&tre, &curve("a+ a+")));
        assert!(!equivalent_1(&tre, &circle));
        assert!(equivalent_12(&tre, &tre));
    }

    #[test]
    fn mode_names_round_trip() {
        for m in [ReductionMode::One, ReductionMode::Two, ReductionMode::OneTwo] {
            assert_eq!(m.name().parse::<ReductionMode>().unwrap(), m);
        }
        assert!("3".parse::<ReductionMode>().is_err());
    }
}
