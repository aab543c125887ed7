//! Homotopy moves on knot projections: kink (1a/1b), lens (2a/2b) and
//! triangle (weak/strong H3) moves, located by faces and applied as local
//! surgeries on the rotation system.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::curve::{CanonicalKey, CurveError, Dart, PlanarCurve};

mod monotone;
pub mod surgery;

pub use monotone::{monotonize, replay, MoveSequence};
pub use surgery::Surgery;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// create a 1-gon
    OneA,
    /// remove a 1-gon
    OneB,
    /// create a 2-gon
    TwoA,
    /// remove a 2-gon
    TwoB,
    H3Weak,
    H3Strong,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] = [
        MoveKind::OneA,
        MoveKind::OneB,
        MoveKind::TwoA,
        MoveKind::TwoB,
        MoveKind::H3Weak,
        MoveKind::H3Strong,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::OneA => "1a",
            MoveKind::OneB => "1b",
            MoveKind::TwoA => "2a",
            MoveKind::TwoB => "2b",
            MoveKind::H3Weak => "h3w",
            MoveKind::H3Strong => "h3s",
        }
    }

    pub fn is_removal(self) -> bool {
        matches!(self, MoveKind::OneB | MoveKind::TwoB)
    }

    pub fn is_creation(self) -> bool {
        matches!(self, MoveKind::OneA | MoveKind::TwoA)
    }

    /// Change in crossing number.
    pub fn crossing_delta(self) -> i32 {
        match self {
            MoveKind::OneA => 1,
            MoveKind::OneB => -1,
            MoveKind::TwoA => 2,
            MoveKind::TwoB => -2,
            MoveKind::H3Weak | MoveKind::H3Strong => 0,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1a" => Ok(MoveKind::OneA),
            "1b" => Ok(MoveKind::OneB),
            "2a" => Ok(MoveKind::TwoA),
            "2b" => Ok(MoveKind::TwoB),
            "h3w" | "h3weak" => Ok(MoveKind::H3Weak),
            "h3s" | "h3strong" => Ok(MoveKind::H3Strong),
            other => Err(format!("unknown move kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleKind {
    Weak,
    Strong,
}

/// A located move. Anchors are darts of the curve the site was found on
/// and mean nothing on any other curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveSite {
    /// 1a: kink whose loop lies in the face left of `side`
    KinkInsert { side: Dart },
    /// 1b: the 1-gon containing `face`
    KinkRemove { face: Dart },
    /// 2a: lens between two edge-sides of one face (`first == second`
    /// pushes one stretch of an edge across a later stretch of itself)
    LensInsert { first: Dart, second: Dart },
    /// 2b: the 2-gon containing `face`
    LensRemove { face: Dart },
    /// H3 at the 3-gon containing `face`
    Triangle { face: Dart, kind: TriangleKind },
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::KinkInsert { .. } => MoveKind::OneA,
            MoveSite::KinkRemove { .. } => MoveKind::OneB,
            MoveSite::LensInsert { .. } => MoveKind::TwoA,
            MoveSite::LensRemove { .. } => MoveKind::TwoB,
            MoveSite::Triangle { kind: TriangleKind::Weak, .. } => MoveKind::H3Weak,
            MoveSite::Triangle { kind: TriangleKind::Strong, .. } => MoveKind::H3Strong,
        }
    }

    /// Same site expressed on an isomorphic curve.
    pub fn transport(&self, iso: &crate::curve::Isomorphism) -> MoveSite {
        let m = |d: Dart| iso.apply(d);
        match *self {
            MoveSite::KinkInsert { side } => MoveSite::KinkInsert { side: m(side) },
            MoveSite::KinkRemove { face } => MoveSite::KinkRemove { face: m(face) },
            MoveSite::LensInsert { first, second } => MoveSite::LensInsert { first: m(first), second: m(second) },
            MoveSite::LensRemove { face } => MoveSite::LensRemove { face: m(face) },
            MoveSite::Triangle { face, kind } => MoveSite::Triangle { face: m(face), kind },
        }
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveSite::KinkInsert { side } => write!(f, "1a@{side}"),
            MoveSite::KinkRemove { face } => write!(f, "1b@{face}"),
            MoveSite::LensInsert { first, second } => write!(f, "2a@{first},{second}"),
            MoveSite::LensRemove { face } => write!(f, "2b@{face}"),
            MoveSite::Triangle { face, kind } => {
                let k = if *kind == TriangleKind::Weak { "h3w" } else { "h3s" };
                write!(f, "{k}@{face}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("site {site} does not match the curve")]
    InvalidSite { site: MoveSite },
    #[error("surgery produced an invalid curve: {0}")]
    SurgeryBroken(CurveError),
    #[error("sequence start has a 1-gon or 2-gon")]
    NotReduced,
    #[error("move kind {0} is not a 1a/1b/2a/2b move")]
    KindOutOfScope(MoveKind),
    #[error("no rewrite rule matches the moves at steps {index} and {next}", next = index + 1)]
    Unmatched { index: usize },
}

/// Distinct vertices at the corners of a face, or `None` if some vertex
/// repeats.
fn distinct_corners(curve: &PlanarCurve, face: &[Dart]) -> Option<Vec<u32>> {
    let vs: Vec<u32> = face.iter().map(|&d| curve.vertex_of(d)).collect();
    let set: HashSet<u32> = vs.iter().copied().collect();
    (set.len() == vs.len()).then_some(vs)
}

/// Weak or strong triangle. A triangle is strong when the curve runs around
/// it coherently (all three sides in the same rotational sense) and weak
/// otherwise. In terms of the Gauss word, strong triangles have 0 or 3
/// pairwise interleaved corner chords and weak ones have 1 or 2.
pub fn classify_3gon(curve: &PlanarCurve, face: &[Dart]) -> TriangleKind {
    assert_eq!(face.len(), 3, "classify_3gon needs a 3-gon");
    let strong = triangle_is_coherent(face);
    debug_assert_eq!(
        strong,
        matches!(interleaved_pairs(curve, &face.iter().map(|&d| curve.vertex_of(d)).collect::<Vec<_>>()), 0 | 3)
    );
    if strong {
        TriangleKind::Strong
    } else {
        TriangleKind::Weak
    }
}

/// Number of interleaved pairs among the chords of three vertices.
pub fn interleaved_pairs(curve: &PlanarCurve, vs: &[u32]) -> usize {
    let mut count = 0;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if curve.interleaved(vs[i], vs[j]) {
                count += 1;
            }
        }
    }
    count
}

/// True when the curve runs around the triangle coherently (every side
/// traversed in the same rotational sense).
pub fn triangle_is_coherent(face: &[Dart]) -> bool {
    let outs = face.iter().filter(|&&d| crate::curve::is_out(d)).count();
    outs == 0 || outs == face.len()
}

/// Every site of the requested kinds, in a deterministic order.
pub fn find_sites(curve: &PlanarCurve, kinds: &[MoveKind]) -> Vec<MoveSite> {
    let want = |k: MoveKind| kinds.contains(&k);
    let mut out = Vec::new();
    if curve.is_trivial() {
        // darts 1 and 0 stand for the two sides of the circle
        if want(MoveKind::OneA) {
            out.push(MoveSite::KinkInsert { side: 0 });
            out.push(MoveSite::KinkInsert { side: 1 });
        }
        if want(MoveKind::TwoA) {
            out.push(MoveSite::LensInsert { first: 0, second: 0 });
            out.push(MoveSite::LensInsert { first: 1, second: 1 });
        }
        return out;
    }
    if want(MoveKind::OneA) {
        out.extend((0..curve.dart_count() as Dart).map(|side| MoveSite::KinkInsert { side }));
    }
    let mut removed: HashSet<Vec<u32>> = HashSet::new();
    for face in curve.faces() {
        let anchor = face.darts[0];
        match face.degree() {
            1 if want(MoveKind::OneB) => {
                if removed.insert(vec![curve.vertex_of(anchor)]) {
                    out.push(MoveSite::KinkRemove { face: anchor });
                }
            }
            2 if want(MoveKind::TwoB) => {
                if let Some(mut vs) = distinct_corners(curve, &face.darts) {
                    vs.sort_unstable();
                    if removed.insert(vs) {
                        out.push(MoveSite::LensRemove { face: anchor });
                    }
                }
            }
            3 if (want(MoveKind::H3Weak) || want(MoveKind::H3Strong))
                && distinct_corners(curve, &face.darts).is_some() =>
            {
                let kind = classify_3gon(curve, &face.darts);
                let site = MoveSite::Triangle { face: anchor, kind };
                if want(site.kind()) {
                    out.push(site);
                }
            }
            _ => {}
        }
    }
    if want(MoveKind::TwoA) {
        for face in curve.faces() {
            for (i, &a) in face.darts.iter().enumerate() {
                for &b in &face.darts[i..] {
                    out.push(MoveSite::LensInsert { first: a, second: b });
                }
            }
        }
    }
    out.sort();
    out
}

/// Checks that `site` describes a configuration present on `curve`.
pub fn site_is_valid(curve: &PlanarCurve, site: &MoveSite) -> bool {
    let darts = curve.dart_count() as Dart;
    if curve.is_trivial() {
        return match *site {
            MoveSite::KinkInsert { side } => side < 2,
            MoveSite::LensInsert { first, second } => first == second && first < 2,
            _ => false,
        };
    }
    match *site {
        MoveSite::KinkInsert { side } => side < darts,
        MoveSite::KinkRemove { face } => face < darts && curve.face_of(face).degree() == 1,
        MoveSite::LensInsert { first, second } => {
            first < darts && second < darts && curve.face_index(first) == curve.face_index(second)
        }
        MoveSite::LensRemove { face } => {
            face < darts && {
                let f = curve.face_of(face);
                f.degree() == 2 && distinct_corners(curve, &f.darts).is_some()
            }
        }
        MoveSite::Triangle { face, kind } => {
            face < darts && {
                let f = curve.face_of(face);
                f.degree() == 3
                    && distinct_corners(curve, &f.darts).is_some()
                    && classify_3gon(curve, &f.darts) == kind
            }
        }
    }
}

/// Applies a move and reports how positions and vertices correspond.
pub fn apply_tracked(curve: &PlanarCurve, site: &MoveSite) -> Result<Surgery, MoveError> {
    if !site_is_valid(curve, site) {
        return Err(MoveError::InvalidSite { site: *site });
    }
    let result = match *site {
        MoveSite::KinkInsert { side } => surgery::insert_kink(curve, side),
        MoveSite::LensInsert { first, second } => surgery::insert_lens(curve, first, second),
        MoveSite::KinkRemove { face } => surgery::delete_vertices(curve, &[curve.vertex_of(face)]),
        MoveSite::LensRemove { face } => {
            let vs: Vec<u32> = curve.face_of(face).darts.iter().map(|&d| curve.vertex_of(d)).collect();
            surgery::delete_vertices(curve, &vs)
        }
        MoveSite::Triangle { face, .. } => {
            let edges: Vec<u32> =
                curve.face_of(face).darts.iter().map(|&d| surgery::edge_of(curve, d)).collect();
            surgery::swap_edges(curve, &edges)
        }
    };
    let s = result.map_err(MoveError::SurgeryBroken)?;
    let expected = curve.crossings() as i32 + site.kind().crossing_delta();
    if s.curve.crossings() as i32 != expected {
        return Err(MoveError::SurgeryBroken(CurveError::NonSphere {
            faces: s.curve.faces().len(),
            expected: expected as usize + 2,
        }));
    }
    Ok(s)
}

pub fn apply(curve: &PlanarCurve, site: &MoveSite) -> Result<PlanarCurve, MoveError> {
    apply_tracked(curve, site).map(|s| s.curve)
}

/// Results of every single move of the given kinds that stays within
/// `max_crossings`, one per isotopy class, ordered by key.
pub fn neighbors(curve: &PlanarCurve, kinds: &[MoveKind], max_crossings: usize) -> Vec<PlanarCurve> {
    let mut by_key: BTreeMap<CanonicalKey, PlanarCurve> = BTreeMap::new();
    for site in find_sites(curve, kinds) {
        let delta = site.kind().crossing_delta() as i64;
        if curve.crossings() as i64 + delta > max_crossings.min(i64::MAX as usize) as i64 {
            continue;
        }
        let next = apply(curve, &site).expect("sites from find_sites apply cleanly");
        by_key.entry(next.canonical_key()).or_insert(next);
    }
    by_key.into_values().collect()
}
