//! Local rewrites of the rotation system. Each returns the new curve plus
//! the position and vertex correspondences needed to carry extra data
//! (sites, over/under information) across the move.

use crate::curve::{dart_pos, in_dart, is_out, out_dart, CurveError, Dart, PlanarCurve};

#[derive(Debug, Clone)]
pub struct Surgery {
    pub curve: PlanarCurve,
    /// old position -> new position, `None` for deleted visits
    pub positions: Vec<Option<u32>>,
    /// old vertex -> new vertex, `None` for deleted vertices
    pub vertices: Vec<Option<u32>>,
    /// ids of the vertices created by the move
    pub created: Vec<u32>,
}

/// Edge carrying dart `d`; edge `p` runs from position `p` to `p + 1`.
pub fn edge_of(curve: &PlanarCurve, d: Dart) -> u32 {
    let len = curve.word().len() as u32;
    if len == 0 {
        return 0;
    }
    let p = dart_pos(d);
    if is_out(d) {
        p
    } else {
        (p + len - 1) % len
    }
}

/// Removes the given vertices (both visits each).
pub fn delete_vertices(curve: &PlanarCurve, doomed: &[u32]) -> Result<Surgery, CurveError> {
    let n = curve.crossings();
    let mut vertices = vec![None; n];
    let mut next = 0u32;
    for (v, slot) in vertices.iter_mut().enumerate() {
        if !doomed.contains(&(v as u32)) {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut positions = vec![None; curve.word().len()];
    let mut word = Vec::new();
    for (p, &v) in curve.word().iter().enumerate() {
        if let Some(nv) = vertices[v as usize] {
            positions[p] = Some(word.len() as u32);
            word.push(nv);
        }
    }
    let remap = |d: Dart| {
        let p = positions[dart_pos(d) as usize].expect("kept vertex has kept visits");
        if is_out(d) {
            out_dart(p)
        } else {
            in_dart(p)
        }
    };
    let mut rot = vec![[0; 4]; next as usize];
    for (v, r) in curve.rotations().iter().enumerate() {
        if let Some(nv) = vertices[v] {
            rot[nv as usize] = r.map(remap);
        }
    }
    let curve = PlanarCurve::from_rotation(word, rot)?;
    Ok(Surgery { curve, positions, vertices, created: Vec::new() })
}

/// A visit to a new vertex: `(new vertex index, token)`; tokens are unique
/// within one insertion and name the visit in [`NewRotation`].
#[derive(Debug, Clone, Copy)]
pub struct Token {
    pub vertex: u32,
    pub id: u32,
}

/// Counterclockwise rotation of a new vertex as `(token, is_out)` pairs.
pub type NewRotation = [(u32, bool); 4];

/// Inserts visits of new vertices along edges. `inserts` lists, per edge,
/// the tokens in curve order; `rotations[i]` is the rotation of new vertex
/// `i`.
pub fn insert_visits(
    curve: &PlanarCurve,
    inserts: &[(u32, Vec<Token>)],
    rotations: &[NewRotation],
) -> Result<Surgery, CurveError> {
    let n = curve.crossings() as u32;
    let len = curve.word().len() as u32;
    let edges = len.max(1);
    let mut on_edge: Vec<Vec<Token>> = vec![Vec::new(); edges as usize];
    for (e, toks) in inserts {
        on_edge[*e as usize].extend(toks.iter().copied());
    }
    let token_count = inserts.iter().map(|(_, t)| t.len()).sum::<usize>();
    let mut token_pos = vec![u32::MAX; token_count];
    let mut positions = vec![None; len as usize];
    let mut word = Vec::new();
    for e in 0..edges {
        if e < len {
            positions[e as usize] = Some(word.len() as u32);
            word.push(curve.word()[e as usize]);
        }
        for t in &on_edge[e as usize] {
            token_pos[t.id as usize] = word.len() as u32;
            word.push(n + t.vertex);
        }
    }
    let remap = |d: Dart| {
        let p = positions[dart_pos(d) as usize].unwrap();
        if is_out(d) {
            out_dart(p)
        } else {
            in_dart(p)
        }
    };
    let mut rot: Vec<[Dart; 4]> = curve.rotations().iter().map(|r| r.map(remap)).collect();
    for r in rotations {
        rot.push(r.map(|(tok, out)| {
            let p = token_pos[tok as usize];
            if out {
                out_dart(p)
            } else {
                in_dart(p)
            }
        }));
    }
    let vertices = (0..n).map(Some).collect();
    let created = (n..n + rotations.len() as u32).collect();
    let curve = PlanarCurve::from_rotation(word, rot)?;
    Ok(Surgery { curve, positions, vertices, created })
}

/// Swaps the two visits on each of the given edges, keeping every rotation
/// fixed relative to the strands. This is the triangle move: each strand
/// meets the other two in the opposite order afterwards.
pub fn swap_edges(curve: &PlanarCurve, edges: &[u32]) -> Result<Surgery, CurveError> {
    let len = curve.word().len() as u32;
    let mut perm: Vec<u32> = (0..len).collect();
    for &e in edges {
        let a = e;
        let b = (e + 1) % len;
        perm.swap(a as usize, b as usize);
    }
    // perm[new] = old; positions[old] = new
    let mut positions = vec![None; len as usize];
    for (new, &old) in perm.iter().enumerate() {
        positions[old as usize] = Some(new as u32);
    }
    let word = perm.iter().map(|&old| curve.word()[old as usize]).collect();
    let remap = |d: Dart| {
        let p = positions[dart_pos(d) as usize].unwrap();
        if is_out(d) {
            out_dart(p)
        } else {
            in_dart(p)
        }
    };
    let rot = curve.rotations().iter().map(|r| r.map(remap)).collect();
    let n = curve.crossings() as u32;
    let curve = PlanarCurve::from_rotation(word, rot)?;
    Ok(Surgery {
        curve,
        positions,
        vertices: (0..n).map(Some).collect(),
        created: Vec::new(),
    })
}

/// Kink insertion into the face on the left of `side`. The loop lies in
/// that face, which fixes the rotation of the new vertex.
pub fn insert_kink(curve: &PlanarCurve, side: Dart) -> Result<Surgery, CurveError> {
    let e = edge_of(curve, side);
    let toks = vec![Token { vertex: 0, id: 0 }, Token { vertex: 0, id: 1 }];
    let rotation: NewRotation = if is_out(side) {
        // loop on the left of the curve
        [(0, false), (1, true), (0, true), (1, false)]
    } else {
        [(0, false), (1, false), (0, true), (1, true)]
    };
    insert_visits(curve, &[(e, toks)], &[rotation])
}

/// Pushes a finger of the strand along `first` across the strand along
/// `second`; both darts must border the same face (on their left).
///
/// In the darts' own directions, the first strand meets the new crossings
/// in order `x1, x2` and the second in order `x2, x1`.
pub fn insert_lens(curve: &PlanarCurve, first: Dart, second: Dart) -> Result<Surgery, CurveError> {
    // tokens: 0 = x1 on strand 1, 1 = x2 on strand 1, 2 = x2 on strand 2, 3 = x1 on strand 2
    let fwd1 = is_out(first);
    let fwd2 = is_out(second);
    // (token, dart-direction out) -> (token, curve out)
    let conv = |tok: u32, out: bool| -> (u32, bool) {
        let fwd = if tok < 2 { fwd1 } else { fwd2 };
        (tok, if fwd { out } else { !out })
    };
    let x1 = [conv(3, false), conv(0, true), conv(3, true), conv(0, false)];
    let x2 = [conv(2, false), conv(1, false), conv(2, true), conv(1, true)];
    let t = |vertex: u32, id: u32| Token { vertex, id };
    let strand1 = [t(0, 0), t(1, 1)];
    let strand2 = [t(1, 2), t(0, 3)];
    let e1 = edge_of(curve, first);
    let e2 = edge_of(curve, second);
    let ordered = |toks: &[Token], fwd: bool| -> Vec<Token> {
        if fwd {
            toks.to_vec()
        } else {
            toks.iter().rev().copied().collect()
        }
    };
    let inserts = if first == second {
        let all: Vec<Token> = strand1.iter().chain(strand2.iter()).copied().collect();
        vec![(e1, ordered(&all, fwd1))]
    } else {
        vec![(e1, ordered(&strand1, fwd1)), (e2, ordered(&strand2, fwd2))]
    };
    insert_visits(curve, &inserts, &[x1, x2])
}
