//! Knot diagrams over projections and the positive resolution map, which
//! makes every double point a positive crossing.

use std::fmt;

use thiserror::Error;

use crate::curve::{out_dart, CurveError, Dart, PlanarCurve, Sign, SignedGaussCode};
use crate::moves::{self, surgery, MoveSite, Surgery};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("site {0:?} does not match the diagram")]
    InvalidSite(OmegaSite),
    #[error("diagram has a negative crossing")]
    NotPositive,
    #[error("invalid underlying curve: {0}")]
    Curve(#[from] CurveError),
    #[error("malformed diagram token `{0}`")]
    Syntax(String),
}

/// A projection with over/under information at every crossing.
#[derive(Debug, Clone)]
pub struct KnotDiagram {
    curve: PlanarCurve,
    /// per vertex: the visit at the lower position is the over-strand
    over_first: Vec<bool>,
}

impl PartialEq for KnotDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.curve == other.curve && self.over_bits() == other.over_bits()
    }
}

impl Eq for KnotDiagram {}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey(pub Vec<u32>);

impl KnotDiagram {
    pub fn new(curve: PlanarCurve, over_first: Vec<bool>) -> Self {
        assert_eq!(curve.crossings(), over_first.len());
        KnotDiagram { curve, over_first }
    }

    pub fn shadow(&self) -> &PlanarCurve {
        &self.curve
    }

    pub fn crossings(&self) -> usize {
        self.curve.crossings()
    }

    /// Position of the over-strand visit at vertex `v`.
    pub fn over_position(&self, v: u32) -> u32 {
        let [f, s] = self.curve.visits(v);
        if self.over_first[v as usize] {
            f
        } else {
            s
        }
    }

    pub fn is_over(&self, pos: u32) -> bool {
        let v = self.curve.word()[pos as usize];
        self.over_position(v) == pos
    }

    /// Local writhe: `+` when the under-strand is the over-strand turned a
    /// quarter turn counterclockwise, i.e. the counterclockwise order is
    /// over-out, under-out, over-in, under-in.
    pub fn crossing_sign(&self, v: u32) -> Sign {
        let o = self.over_position(v);
        let [f, s] = self.curve.visits(v);
        let u = if o == f { s } else { f };
        if self.curve.sigma(out_dart(o)) == out_dart(u) {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn writhe(&self) -> i32 {
        (0..self.crossings() as u32).map(|v| self.crossing_sign(v).value()).sum()
    }

    pub fn is_positive(&self) -> bool {
        (0..self.crossings() as u32).all(|v| self.crossing_sign(v) == Sign::Pos)
    }

    /// Over/under bit of every position, in traversal order.
    pub fn over_bits(&self) -> Vec<bool> {
        (0..self.curve.word().len() as u32).map(|p| self.is_over(p)).collect()
    }

    /// The same diagram with the opposite traversal direction.
    pub fn reversed(&self) -> KnotDiagram {
        let len = self.curve.word().len() as u32;
        let rev = self.curve.reversed();
        let bits = self.over_bits();
        from_position_bits(rev, |t| bits[(len - 1 - t) as usize])
    }

    fn carry(&self, s: &Surgery) -> KnotDiagram {
        let mut over = vec![false; s.curve.crossings()];
        for (v, nv) in s.vertices.iter().enumerate() {
            if let Some(nv) = nv {
                let o = s.positions[self.over_position(v as u32) as usize].expect("kept visit");
                over[*nv as usize] = s.curve.visits(*nv)[0] == o;
            }
        }
        KnotDiagram::new(s.curve.clone(), over)
    }

    /// Isotopy key of the diagram on the unoriented sphere: least token
    /// string over starts, directions, and the reflection that also swaps
    /// over and under (a rotation of space, so the knot type is kept).
    pub fn key(&self) -> DiagramKey {
        let len = self.curve.word().len() as u32;
        if len == 0 {
            return DiagramKey(vec![0]);
        }
        let bits = self.over_bits();
        let mut best: Option<Vec<u32>> = None;
        for start in 0..len {
            for backward in [false, true] {
                for mirrored in [false, true] {
                    let lin = self.curve.linearize(start, backward, mirrored);
                    let mut k = Vec::with_capacity(len as usize + 1);
                    k.push(self.crossings() as u32);
                    for t in 0..len {
                        let old = if backward { (start + len - t) % len } else { (start + t) % len };
                        let v = lin.word[t as usize];
                        let neg = u32::from(lin.signs[v as usize] == Sign::Neg);
                        let over = u32::from(bits[old as usize] != mirrored);
                        k.push(4 * v + 2 * neg + over);
                    }
                    if best.as_ref().is_none_or(|b| k < *b) {
                        best = Some(k);
                    }
                }
            }
        }
        DiagramKey(best.unwrap())
    }

    /// Extended Gauss code: `<label><sign><o|u>` per visit, with the
    /// embedding sign of the projection.
    pub fn to_extended_code(&self) -> String {
        let code = self.curve.to_signed_gauss_code();
        code.word
            .iter()
            .enumerate()
            .map(|(p, label)| {
                let ou = if self.is_over(p as u32) { 'o' } else { 'u' };
                format!("{}{}{}", label, code.signs[label].symbol(), ou)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn from_extended_code(text: &str) -> Result<KnotDiagram, ResolutionError> {
        let mut tokens = Vec::new();
        let mut overs = Vec::new();
        for tok in text.split_whitespace() {
            let bad = || ResolutionError::Syntax(tok.to_string());
            let (rest, ou) = tok.split_at(tok.len().checked_sub(1).ok_or_else(bad)?);
            let (label, sign) = rest.split_at(rest.len().checked_sub(1).ok_or_else(bad)?);
            let sign = match sign {
                "+" => Sign::Pos,
                "-" => Sign::Neg,
                _ => return Err(bad()),
            };
            let over = match ou {
                "o" => true,
                "u" => false,
                _ => return Err(bad()),
            };
            if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(bad());
            }
            tokens.push((label.to_string(), sign));
            overs.push(over);
        }
        let curve = PlanarCurve::from_signed_gauss_code(&SignedGaussCode::new(tokens))?;
        for v in 0..curve.crossings() as u32 {
            let [f, s] = curve.visits(v);
            if overs[f as usize] == overs[s as usize] {
                return Err(ResolutionError::Syntax(format!("crossing {v} needs one o and one u")));
            }
        }
        Ok(from_position_bits(curve, |p| overs[p as usize]))
    }
}

impl fmt::Display for KnotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_extended_code())
    }
}

fn from_position_bits(curve: PlanarCurve, over: impl Fn(u32) -> bool) -> KnotDiagram {
    let over_first = (0..curve.crossings() as u32).map(|v| over(curve.visits(v)[0])).collect();
    KnotDiagram::new(curve, over_first)
}

/// Replaces every double point by the positive crossing. The choice does not
/// depend on the traversal direction, since reversing both strands keeps a
/// crossing's sign.
pub fn positive_resolution(curve: &PlanarCurve) -> KnotDiagram {
    let over_first = (0..curve.crossings() as u32)
        .map(|v| {
            let [f, s] = curve.visits(v);
            curve.sigma(out_dart(f)) == out_dart(s)
        })
        .collect();
    KnotDiagram::new(curve.clone(), over_first)
}

/// Reidemeister move on a diagram, anchored like the shadow's face moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OmegaSite {
    /// remove the kink bounding the 1-gon containing `face`
    KinkRemove { face: Dart },
    /// slide across the triangle containing `face`
    Triangle { face: Dart },
}

/// Every Ω1 (kink removal) site.
pub fn omega1_sites(d: &KnotDiagram) -> Vec<OmegaSite> {
    moves::find_sites(&d.curve, &[moves::MoveKind::OneB])
        .into_iter()
        .map(|s| match s {
            MoveSite::KinkRemove { face } => OmegaSite::KinkRemove { face },
            _ => unreachable!(),
        })
        .collect()
}

/// Sides of a triangle face as (edge, over at start, over at end).
fn triangle_strands(d: &KnotDiagram, face: &[Dart]) -> Vec<(u32, bool, bool)> {
    let len = d.curve.word().len() as u32;
    face.iter()
        .map(|&h| {
            let e = surgery::edge_of(&d.curve, h);
            (e, d.is_over(e), d.is_over((e + 1) % len))
        })
        .collect()
}

fn omega3_admissible(d: &KnotDiagram, face: Dart) -> bool {
    let f = d.curve.face_of(face);
    if f.degree() != 3 {
        return false;
    }
    let mut vs: Vec<u32> = f.darts.iter().map(|&h| d.curve.vertex_of(h)).collect();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() != 3 {
        return false;
    }
    let strands = triangle_strands(d, &f.darts);
    let top = strands.iter().any(|&(_, a, b)| a && b);
    let bottom = strands.iter().any(|&(_, a, b)| !a && !b);
    top && bottom
}

/// Triangles whose strands are stacked top, middle, bottom.
pub fn omega3_sites(d: &KnotDiagram) -> Vec<OmegaSite> {
    d.curve
        .faces()
        .iter()
        .filter(|f| f.degree() == 3 && omega3_admissible(d, f.darts[0]))
        .map(|f| OmegaSite::Triangle { face: f.darts[0] })
        .collect()
}

pub fn apply_omega(d: &KnotDiagram, site: &OmegaSite) -> Result<KnotDiagram, ResolutionError> {
    let invalid = || ResolutionError::InvalidSite(*site);
    let darts = d.curve.dart_count() as Dart;
    match *site {
        OmegaSite::KinkRemove { face } => {
            if face >= darts || d.curve.face_of(face).degree() != 1 {
                return Err(invalid());
            }
            let s = surgery::delete_vertices(&d.curve, &[d.curve.vertex_of(face)])?;
            Ok(d.carry(&s))
        }
        OmegaSite::Triangle { face } => {
            if face >= darts || !omega3_admissible(d, face) {
                return Err(invalid());
            }
            let edges: Vec<u32> =
                d.curve.face_of(face).darts.iter().map(|&h| surgery::edge_of(&d.curve, h)).collect();
            let s = surgery::swap_edges(&d.curve, &edges)?;
            Ok(d.carry(&s))
        }
    }
}

/// The projection move underlying a diagram move.
pub fn shadow_site(d: &KnotDiagram, site: &OmegaSite) -> MoveSite {
    match *site {
        OmegaSite::KinkRemove { face } => MoveSite::KinkRemove { face },
        OmegaSite::Triangle { face } => {
            let kind = moves::classify_3gon(&d.curve, &d.curve.face_of(face).darts);
            MoveSite::Triangle { face, kind }
        }
    }
}

/// Removes Ω1 kinks until none remain. Requires a positive diagram.
pub fn positive_unknot_reduce(d: &KnotDiagram) -> Result<KnotDiagram, ResolutionError> {
    if !d.is_positive() {
        return Err(ResolutionError::NotPositive);
    }
    let mut cur = d.clone();
    while let Some(site) = omega1_sites(&cur).first().copied() {
        cur = apply_omega(&cur, &site)?;
    }
    Ok(cur)
}
