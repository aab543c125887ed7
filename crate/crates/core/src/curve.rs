//! Knot projections as combinatorial maps on the sphere.
//!
//! A projection with `n` double points is stored as its Gauss word (the
//! vertex visited at each of the `2n` positions along the curve) together
//! with the counterclockwise rotation of the four half-edges at every vertex.
//!
//! Half-edges ("darts") are indexed by position: `2p` is the half-edge at
//! position `p` pointing back along the curve (`in_p`), `2p + 1` the one
//! pointing forward (`out_p`). Faces are the orbits of
//! `phi = sigma^-1 . alpha`, which keeps the face on the left of each dart.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Half-edge index, `2 * position + (0 for in, 1 for out)`.
pub type Dart = u32;

/// Upper bound on crossings accepted by [`realize_unsigned`] unless overridden.
pub const DEFAULT_REALIZE_BOUND: usize = 12;

#[inline]
pub fn in_dart(pos: u32) -> Dart {
    2 * pos
}

#[inline]
pub fn out_dart(pos: u32) -> Dart {
    2 * pos + 1
}

#[inline]
pub fn dart_pos(d: Dart) -> u32 {
    d / 2
}

#[inline]
pub fn is_out(d: Dart) -> bool {
    d & 1 == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("label `{label}` occurs {count} times, expected exactly 2")]
    DuplicateOccurrence { label: String, count: usize },
    #[error("label `{label}` has no sign")]
    MissingSign { label: String },
    #[error("code does not embed in the sphere: {faces} faces, expected {expected}")]
    NonSphere { faces: usize, expected: usize },
    #[error("rotation at vertex {vertex} does not make the word a single transversal circuit")]
    Disconnected { vertex: usize },
    #[error("{crossings} crossings exceed the realization bound {bound}")]
    BoundExceeded { crossings: usize, bound: usize },
}

/// Cyclic double-occurrence word with one embedding sign per label.
///
/// With sign `+` the counterclockwise order of the four half-edges at a
/// crossing is first-in, second-in, first-out, second-out; sign `-` swaps the
/// two half-edges of the second visit. "First" refers to the linear order of
/// the word as written, so rotating the word changes signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGaussCode {
    pub word: Vec<String>,
    pub signs: HashMap<String, Sign>,
}

impl SignedGaussCode {
    pub fn trivial() -> Self {
        SignedGaussCode { word: Vec::new(), signs: HashMap::new() }
    }

    pub fn new<S: Into<String>>(tokens: impl IntoIterator<Item = (S, Sign)>) -> Self {
        let mut word = Vec::new();
        let mut signs = HashMap::new();
        for (label, sign) in tokens {
            let label = label.into();
            signs.insert(label.clone(), sign);
            word.push(label);
        }
        SignedGaussCode { word, signs }
    }

    /// Parses whitespace separated `<label><sign>` tokens, e.g. `a+ b- a+ b-`.
    /// Mostly for tests; corpus files go through [`crate::codec`].
    pub fn from_tokens(text: &str) -> Option<Self> {
        let mut tokens = Vec::new();
        for tok in text.split_whitespace() {
            let (label, sign) = tok.split_at(tok.len().checked_sub(1)?);
            let sign = match sign {
                "+" => Sign::Pos,
                "-" => Sign::Neg,
                _ => return None,
            };
            if label.is_empty() {
                return None;
            }
            tokens.push((label.to_string(), sign));
        }
        Some(SignedGaussCode::new(tokens))
    }

    pub fn crossings(&self) -> usize {
        self.word.len() / 2
    }
}

impl fmt::Display for SignedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for label in &self.word {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let sign = self.signs.get(label).copied().unwrap_or(Sign::Pos);
            write!(f, "{}{}", label, sign.symbol())?;
        }
        Ok(())
    }
}

/// Canonical label for the `i`-th crossing in first-occurrence order:
/// `a`..`z`, then `aa`, `ab`, ...
pub fn canonical_label(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

/// A face: the cyclic sequence of darts (edge-sides) on its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }
}

/// Totally ordered isotopy key; equal keys iff the curves are related by a
/// homeomorphism of the sphere (either orientation).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<u32>);

/// A single closed curve on the sphere with transversal double points.
#[derive(Clone, Debug)]
pub struct PlanarCurve {
    word: Vec<u32>,
    rot: Vec<[Dart; 4]>,
    visits: Vec<[u32; 2]>,
    slot: Vec<u8>,
    faces: Vec<Face>,
    face_of: Vec<u32>,
}

/// Same traversal and same rotations; crossing numbering is ignored.
impl PartialEq for PlanarCurve {
    fn eq(&self, other: &Self) -> bool {
        self.word.len() == other.word.len()
            && (0..self.dart_count() as Dart).all(|d| self.sigma(d) == other.sigma(d))
    }
}

impl Eq for PlanarCurve {}

impl PlanarCurve {
    /// The simple closed curve.
    pub fn trivial() -> Self {
        PlanarCurve {
            word: Vec::new(),
            rot: Vec::new(),
            visits: Vec::new(),
            slot: Vec::new(),
            faces: vec![Face { darts: Vec::new() }, Face { darts: Vec::new() }],
            face_of: Vec::new(),
        }
    }

    pub fn from_signed_gauss_code(code: &SignedGaussCode) -> Result<Self, CurveError> {
        let mut ids: HashMap<&str, u32> = HashMap::new();
        let mut order: Vec<&str> = Vec::new();
        let mut word = Vec::with_capacity(code.word.len());
        for label in &code.word {
            let next = ids.len() as u32;
            let id = *ids.entry(label.as_str()).or_insert_with(|| {
                order.push(label.as_str());
                next
            });
            word.push(id);
        }
        let mut counts = vec![0usize; order.len()];
        for &v in &word {
            counts[v as usize] += 1;
        }
        if let Some(v) = counts.iter().position(|&c| c != 2) {
            return Err(CurveError::DuplicateOccurrence {
                label: order[v].to_string(),
                count: counts[v],
            });
        }
        let mut signs = Vec::with_capacity(order.len());
        for label in &order {
            match code.signs.get(*label) {
                Some(s) => signs.push(*s),
                None => return Err(CurveError::MissingSign { label: label.to_string() }),
            }
        }
        Self::from_signs(word, &signs)
    }

    /// Builds a curve from a word over dense vertex ids `0..n` and one sign
    /// per vertex, relative to the linear order of `word`.
    pub fn from_signs(word: Vec<u32>, signs: &[Sign]) -> Result<Self, CurveError> {
        let n = signs.len();
        let visits = visits_of(&word, n)?;
        let rot = visits
            .iter()
            .zip(signs)
            .map(|(&[f, s], sign)| match sign {
                Sign::Pos => [in_dart(f), in_dart(s), out_dart(f), out_dart(s)],
                Sign::Neg => [in_dart(f), out_dart(s), out_dart(f), in_dart(s)],
            })
            .collect();
        Self::from_rotation(word, rot)
    }

    /// Builds and validates a curve from a word and explicit counterclockwise
    /// rotations (darts refer to positions of `word`).
    pub fn from_rotation(word: Vec<u32>, rot: Vec<[Dart; 4]>) -> Result<Self, CurveError> {
        let n = rot.len();
        if word.is_empty() && n == 0 {
            return Ok(Self::trivial());
        }
        let visits = visits_of(&word, n)?;
        // store each cyclic order starting from its least dart
        let rot: Vec<[Dart; 4]> = rot
            .into_iter()
            .map(|r| {
                let k = (0..4).min_by_key(|&i| r[i]).unwrap();
                [r[k], r[(k + 1) % 4], r[(k + 2) % 4], r[(k + 3) % 4]]
            })
            .collect();
        let mut slot = vec![u8::MAX; word.len() * 2];
        for (v, r) in rot.iter().enumerate() {
            let [f, s] = visits[v];
            let expected = [in_dart(f), out_dart(f), in_dart(s), out_dart(s)];
            for (i, &d) in r.iter().enumerate() {
                if (d as usize) >= slot.len() || !expected.contains(&d) || slot[d as usize] != u8::MAX {
                    return Err(CurveError::Disconnected { vertex: v });
                }
                slot[d as usize] = i as u8;
            }
            // straight-ahead: opposite darts belong to the same visit
            if dart_pos(r[0]) != dart_pos(r[2]) || dart_pos(r[1]) != dart_pos(r[3]) {
                return Err(CurveError::Disconnected { vertex: v });
            }
        }
        let mut curve = PlanarCurve {
            word,
            rot,
            visits,
            slot,
            faces: Vec::new(),
            face_of: Vec::new(),
        };
        curve.trace_faces();
        let expected = n + 2;
        if curve.faces.len() != expected {
            return Err(CurveError::NonSphere { faces: curve.faces.len(), expected });
        }
        Ok(curve)
    }

    fn trace_faces(&mut self) {
        let total = self.word.len() * 2;
        let mut face_of = vec![u32::MAX; total];
        let mut faces = Vec::new();
        for start in 0..total as Dart {
            if face_of[start as usize] != u32::MAX {
                continue;
            }
            let id = faces.len() as u32;
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                face_of[d as usize] = id;
                darts.push(d);
                d = self.phi(d);
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts });
        }
        self.faces = faces;
        self.face_of = face_of;
    }

    pub fn crossings(&self) -> usize {
        self.rot.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rot.is_empty()
    }

    /// Vertex visited at each position along the curve.
    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Counterclockwise rotation at each vertex.
    pub fn rotations(&self) -> &[[Dart; 4]] {
        &self.rot
    }

    /// The two positions (ascending) at which vertex `v` is visited.
    pub fn visits(&self, v: u32) -> [u32; 2] {
        self.visits[v as usize]
    }

    pub fn dart_count(&self) -> usize {
        self.word.len() * 2
    }

    pub fn vertex_of(&self, d: Dart) -> u32 {
        self.word[dart_pos(d) as usize]
    }

    /// The other end of the edge carrying `d`.
    pub fn alpha(&self, d: Dart) -> Dart {
        let len = self.word.len() as u32;
        let p = dart_pos(d);
        if is_out(d) {
            in_dart((p + 1) % len)
        } else {
            out_dart((p + len - 1) % len)
        }
    }

    /// Next dart counterclockwise around its vertex.
    pub fn sigma(&self, d: Dart) -> Dart {
        let r = &self.rot[self.vertex_of(d) as usize];
        r[(self.slot[d as usize] as usize + 1) % 4]
    }

    /// Next dart clockwise around its vertex.
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        let r = &self.rot[self.vertex_of(d) as usize];
        r[(self.slot[d as usize] as usize + 3) % 4]
    }

    /// Face permutation: the dart following `d` along the face on its left.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma_inv(self.alpha(d))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_of(&self, d: Dart) -> &Face {
        &self.faces[self.face_of[d as usize] as usize]
    }

    pub fn face_index(&self, d: Dart) -> usize {
        self.face_of[d as usize] as usize
    }

    /// Embedding sign of vertex `v` relative to the stored linear order.
    pub fn sign(&self, v: u32) -> Sign {
        let [f, s] = self.visits[v as usize];
        let r = &self.rot[v as usize];
        let i = r.iter().position(|&d| d == in_dart(f)).unwrap();
        if r[(i + 1) % 4] == in_dart(s) {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    /// True when the chords of `u` and `v` interleave in the Gauss word.
    pub fn interleaved(&self, u: u32, v: u32) -> bool {
        let [a1, a2] = self.visits[u as usize];
        let [b1, b2] = self.visits[v as usize];
        let inside = |p: u32| a1 < p && p < a2;
        inside(b1) != inside(b2)
    }

    pub fn to_signed_gauss_code(&self) -> SignedGaussCode {
        let lin = self.linearize(0, false, false);
        lin.to_code()
    }

    /// Reflection of the sphere: reverses every rotation.
    pub fn mirror(&self) -> PlanarCurve {
        let rot = self.rot.iter().map(|r| [r[0], r[3], r[2], r[1]]).collect();
        PlanarCurve::from_rotation(self.word.clone(), rot).expect("mirror preserves validity")
    }

    /// Same curve with the traversal starting `shift` positions later.
    pub fn rotated(&self, shift: u32) -> PlanarCurve {
        let len = self.word.len() as u32;
        if len == 0 {
            return self.clone();
        }
        let shift = shift % len;
        let map = |d: Dart| {
            let t = (dart_pos(d) + len - shift) % len;
            if is_out(d) {
                out_dart(t)
            } else {
                in_dart(t)
            }
        };
        let word = (0..len).map(|t| self.word[((t + shift) % len) as usize]).collect();
        let rot = self.rot.iter().map(|r| r.map(map)).collect();
        PlanarCurve::from_rotation(word, rot).expect("rotation preserves validity")
    }

    /// Same curve traversed in the opposite direction.
    pub fn reversed(&self) -> PlanarCurve {
        let len = self.word.len() as u32;
        if len == 0 {
            return self.clone();
        }
        // new position t visits old position len - 1 - t
        let map = |d: Dart| {
            let p = dart_pos(d);
            let t = len - 1 - p;
            if is_out(d) {
                in_dart(t)
            } else {
                out_dart(t)
            }
        };
        let word = (0..len).map(|t| self.word[(len - 1 - t) as usize]).collect();
        let rot = self.rot.iter().map(|r| r.map(map)).collect();
        PlanarCurve::from_rotation(word, rot).expect("reversal preserves validity")
    }

    /// Word and signs read from position `start`, optionally backwards and
    /// optionally mirrored, with labels renumbered by first occurrence.
    pub(crate) fn linearize(&self, start: u32, backward: bool, mirrored: bool) -> Linearization {
        let len = self.word.len() as u32;
        let n = self.rot.len();
        let mut label = vec![u32::MAX; n];
        let mut word = Vec::with_capacity(len as usize);
        let mut first_pos = vec![0u32; n];
        let mut next = 0u32;
        for t in 0..len {
            let old = if backward { (start + len - t) % len } else { (start + t) % len };
            let v = self.word[old as usize] as usize;
            if label[v] == u32::MAX {
                label[v] = next;
                first_pos[v] = t;
                next += 1;
            }
            word.push(label[v]);
        }
        let new_dart = |d: Dart| -> Dart {
            let p = dart_pos(d);
            let t = if backward { (start + len - p) % len } else { (p + len - start) % len };
            match (is_out(d), backward) {
                (true, false) | (false, true) => out_dart(t),
                _ => in_dart(t),
            }
        };
        let mut signs = vec![Sign::Pos; n];
        for v in 0..n {
            let f = first_pos[v];
            let r = self.rot[v].map(new_dart);
            let i = r.iter().position(|&d| d == in_dart(f)).unwrap();
            let next_ccw = if mirrored { r[(i + 3) % 4] } else { r[(i + 1) % 4] };
            let sign = if dart_pos(next_ccw) != f && !is_out(next_ccw) { Sign::Pos } else { Sign::Neg };
            signs[label[v] as usize] = sign;
        }
        Linearization { word, signs }
    }

    fn key_candidates(&self) -> impl Iterator<Item = Linearization> + '_ {
        let len = self.word.len() as u32;
        (0..len.max(1)).flat_map(move |start| {
            [(false, false), (true, false), (false, true), (true, true)]
                .into_iter()
                .filter(move |_| len > 0)
                .map(move |(backward, mirrored)| self.linearize(start, backward, mirrored))
        })
    }

    /// Lexicographically least linearization over all starts, directions
    /// and the mirror image.
    pub fn canonical_linearization(&self) -> Linearization {
        if self.is_trivial() {
            return Linearization { word: Vec::new(), signs: Vec::new() };
        }
        self.key_candidates()
            .min_by(|a, b| a.cmp_tokens(b))
            .expect("nonempty curve has candidates")
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        self.canonical_linearization().key()
    }

    /// The canonical linearization as a code with labels `a`, `b`, ...
    pub fn canonical_code(&self) -> SignedGaussCode {
        self.canonical_linearization().to_code()
    }

    pub fn is_isotopic(&self, other: &PlanarCurve) -> bool {
        self.crossings() == other.crossings() && self.canonical_key() == other.canonical_key()
    }

    /// Multiset of face degrees, ascending.
    pub fn face_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.faces.iter().map(Face::degree).collect();
        d.sort_unstable();
        d
    }
}

impl fmt::Display for PlanarCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_signed_gauss_code().fmt(f)
    }
}

fn visits_of(word: &[u32], n: usize) -> Result<Vec<[u32; 2]>, CurveError> {
    let mut visits = vec![[u32::MAX; 2]; n];
    let mut counts = vec![0usize; n];
    for (p, &v) in word.iter().enumerate() {
        let v = v as usize;
        if v >= n {
            return Err(CurveError::DuplicateOccurrence { label: v.to_string(), count: 1 });
        }
        if counts[v] < 2 {
            visits[v][counts[v]] = p as u32;
        }
        counts[v] += 1;
    }
    if let Some(v) = counts.iter().position(|&c| c != 2) {
        return Err(CurveError::DuplicateOccurrence { label: v.to_string(), count: counts[v] });
    }
    Ok(visits)
}

/// A word with signs read in a particular linear order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linearization {
    pub word: Vec<u32>,
    pub signs: Vec<Sign>,
}

impl Linearization {
    fn token(&self, p: usize) -> u32 {
        let v = self.word[p];
        2 * v + u32::from(self.signs[v as usize] == Sign::Neg)
    }

    fn cmp_tokens(&self, other: &Self) -> Ordering {
        (0..self.word.len())
            .map(|p| self.token(p).cmp(&other.token(p)))
            .find(|o| o.is_ne())
            .unwrap_or_else(|| self.word.len().cmp(&other.word.len()))
    }

    pub fn key(&self) -> CanonicalKey {
        let mut k = Vec::with_capacity(self.word.len() + 1);
        k.push(self.signs.len() as u32);
        k.extend((0..self.word.len()).map(|p| self.token(p)));
        CanonicalKey(k)
    }

    pub fn to_code(&self) -> SignedGaussCode {
        let labels: Vec<String> = (0..self.signs.len()).map(canonical_label).collect();
        SignedGaussCode {
            word: self.word.iter().map(|&v| labels[v as usize].clone()).collect(),
            signs: labels.iter().cloned().zip(self.signs.iter().copied()).collect(),
        }
    }
}

/// Searches for a map isomorphism `a -> b` (a bijection of darts commuting
/// with `alpha` and with `sigma`, or with `sigma^-1` when `mirrored`).
/// Returns the dart map indexed by darts of `a`.
pub fn find_isomorphism(a: &PlanarCurve, b: &PlanarCurve, allow_mirror: bool) -> Option<Isomorphism> {
    if a.crossings() != b.crossings() {
        return None;
    }
    if a.is_trivial() {
        return Some(Isomorphism { map: Vec::new(), mirrored: false });
    }
    let total = a.dart_count();
    let mirrors: &[bool] = if allow_mirror { &[false, true] } else { &[false] };
    for &mirrored in mirrors {
        for target in 0..total as Dart {
            if let Some(map) = propagate(a, b, target, mirrored) {
                return Some(Isomorphism { map, mirrored });
            }
        }
    }
    None
}

fn propagate(a: &PlanarCurve, b: &PlanarCurve, target: Dart, mirrored: bool) -> Option<Vec<Dart>> {
    let total = a.dart_count();
    let mut map = vec![Dart::MAX; total];
    let mut used = vec![false; total];
    let mut queue = VecDeque::new();
    map[0] = target;
    used[target as usize] = true;
    queue.push_back(0 as Dart);
    while let Some(x) = queue.pop_front() {
        let y = map[x as usize];
        let pairs = [
            (a.alpha(x), b.alpha(y)),
            (a.sigma(x), if mirrored { b.sigma_inv(y) } else { b.sigma(y) }),
        ];
        for (xa, yb) in pairs {
            let cur = map[xa as usize];
            if cur == Dart::MAX {
                if used[yb as usize] {
                    return None;
                }
                map[xa as usize] = yb;
                used[yb as usize] = true;
                queue.push_back(xa);
            } else if cur != yb {
                return None;
            }
        }
    }
    Some(map)
}

/// Dart correspondence between two isomorphic curves.
#[derive(Debug, Clone)]
pub struct Isomorphism {
    pub map: Vec<Dart>,
    pub mirrored: bool,
}

impl Isomorphism {
    pub fn apply(&self, d: Dart) -> Dart {
        self.map[d as usize]
    }
}

/// Gauss's evenness condition: an even number of letters between the two
/// occurrences of every letter. Necessary for realizability on the sphere.
pub fn satisfies_evenness(word: &[u32]) -> bool {
    let mut first: HashMap<u32, usize> = HashMap::new();
    for (p, &v) in word.iter().enumerate() {
        if let Some(&f) = first.get(&v) {
            if (p - f - 1) % 2 != 0 {
                return false;
            }
        } else {
            first.insert(v, p);
        }
    }
    true
}

/// All sphere realizations of an unsigned double-occurrence word, up to
/// homeomorphism. An empty result means the word is not realizable.
pub fn realize_unsigned(word: &[u32], bound: usize) -> Result<Vec<PlanarCurve>, CurveError> {
    let n = word.len() / 2;
    if n > bound {
        return Err(CurveError::BoundExceeded { crossings: n, bound });
    }
    // normalize ids to first-occurrence order
    let mut ids: HashMap<u32, u32> = HashMap::new();
    let norm: Vec<u32> = word
        .iter()
        .map(|v| {
            let next = ids.len() as u32;
            *ids.entry(*v).or_insert(next)
        })
        .collect();
    visits_of(&norm, ids.len())?;
    if n == 0 {
        return Ok(vec![PlanarCurve::trivial()]);
    }
    if !satisfies_evenness(&norm) {
        return Ok(Vec::new());
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // the mirror flips every sign, so vertex 0 can be fixed to `+`
    for mask in 0u64..(1u64 << (n - 1)) {
        let signs: Vec<Sign> = (0..n)
            .map(|v| if v > 0 && mask >> (v - 1) & 1 == 1 { Sign::Neg } else { Sign::Pos })
            .collect();
        if let Ok(c) = PlanarCurve::from_signs(norm.clone(), &signs) {
            if seen.insert(c.canonical_key()) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Every double-occurrence word on `n` letters with labels in
/// first-occurrence order.
pub fn double_occurrence_words(n: usize) -> Vec<Vec<u32>> {
    fn rec(word: &mut Vec<u32>, counts: &mut Vec<u8>, opened: u32, n: usize, out: &mut Vec<Vec<u32>>) {
        if word.len() == 2 * n {
            out.push(word.clone());
            return;
        }
        for v in 0..opened {
            if counts[v as usize] == 1 {
                counts[v as usize] = 2;
                word.push(v);
                rec(word, counts, opened, n, out);
                word.pop();
                counts[v as usize] = 1;
            }
        }
        if (opened as usize) < n {
            counts[opened as usize] = 1;
            word.push(opened);
            rec(word, counts, opened + 1, n, out);
            word.pop();
            counts[opened as usize] = 0;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(2 * n), &mut vec![0; n], 0, n, &mut out);
    out
}

/// All curves with exactly `n` crossings, one per homeomorphism class,
/// sorted by canonical key.
pub fn enumerate_curves(n: usize) -> Vec<PlanarCurve> {
    use rayon::prelude::*;
    let words = double_occurrence_words(n);
    let found: Vec<(CanonicalKey, PlanarCurve)> = words
        .par_iter()
        .filter(|w| satisfies_evenness(w))
        .flat_map_iter(|w| {
            realize_unsigned(w, usize::MAX)
                .expect("bounded by construction")
                .into_iter()
                .map(|c| (c.canonical_key(), c))
        })
        .collect();
    let mut by_key: std::collections::BTreeMap<CanonicalKey, PlanarCurve> = Default::default();
    for (k, c) in found {
        by_key.entry(k).or_insert(c);
    }
    by_key.into_values().collect()
}

/// All curves with at most `max_n` crossings.
pub fn enumerate_up_to(max_n: usize) -> Vec<PlanarCurve> {
    (0..=max_n).flat_map(enumerate_curves).collect()
}
