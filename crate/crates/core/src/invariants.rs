//! Fox colorings of knot diagrams, and the curve invariants obtained by
//! composing them with the positive resolution.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::curve::PlanarCurve;
use crate::reduction::reduce_1;
use crate::resolution::{positive_resolution, KnotDiagram};

pub const SUPPORTED_PRIMES: [u32; 5] = [3, 5, 7, 11, 13];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("unsupported modulus {0} (supported: 3, 5, 7, 11, 13)")]
    UnsupportedPrime(u32),
    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),
}

/// Arc index of every position: arcs start right after each under-crossing
/// visit, so the arc through an under visit is the one arriving there.
fn arcs(d: &KnotDiagram) -> Vec<usize> {
    let bits = d.over_bits();
    let len = bits.len();
    let Some(last_under) = bits.iter().rposition(|&o| !o) else {
        return vec![0; len];
    };
    let unders = bits.iter().filter(|&&o| !o).count();
    let mut arc = vec![0; len];
    // positions after the last under visit wrap into arc 0
    let mut cur = 0;
    for p in (0..len).map(|i| (last_under + 1 + i) % len) {
        arc[p] = cur % unders;
        if !bits[p] {
            cur += 1;
        }
    }
    arc
}

/// Coloring relations as rows over the arcs: `2 c_over - c_in - c_out`.
fn relations(d: &KnotDiagram) -> (usize, Vec<Vec<i64>>) {
    let n = d.crossings();
    let arc = arcs(d);
    let len = arc.len();
    let mut rows = Vec::with_capacity(n);
    for v in 0..n as u32 {
        let o = d.over_position(v) as usize;
        let [f, s] = d.shadow().visits(v);
        let u = if o == f as usize { s as usize } else { f as usize };
        let mut row = vec![0i64; n];
        row[arc[o]] += 2;
        row[arc[u]] -= 1;
        row[arc[(u + 1) % len]] -= 1;
        rows.push(row);
    }
    (n, rows)
}

fn rank_mod(mut rows: Vec<Vec<i64>>, cols: usize, p: i64) -> usize {
    let inv = |a: i64| (1..p).find(|&x| a * x % p == 1).expect("prime modulus");
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let k = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * k % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Number of Fox `p`-colorings, constant ones included.
pub fn fox_coloring_count(d: &KnotDiagram, p: u32) -> Result<u64, InvariantError> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(InvariantError::UnsupportedPrime(p));
    }
    if d.crossings() == 0 {
        return Ok(p as u64);
    }
    let (cols, rows) = relations(d);
    let nullity = cols - rank_mod(rows, cols, p as i64);
    Ok((p as u64).pow(nullity as u32))
}

/// A non-constant 3-coloring exists.
pub fn tricolorable(d: &KnotDiagram) -> bool {
    fox_coloring_count(d, 3).expect("3 is supported") > 3
}

/// Named invariants available through the positive resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    Tricolor,
    Fox(u32),
    Weak13Trivial,
}

impl Invariant {
    pub fn name(self) -> String {
        match self {
            Invariant::Tricolor => "tricolor".into(),
            Invariant::Fox(p) => format!("fox{p}"),
            Invariant::Weak13Trivial => "weak13trivial".into(),
        }
    }
}

impl FromStr for Invariant {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tricolor" => Ok(Invariant::Tricolor),
            "weak13trivial" => Ok(Invariant::Weak13Trivial),
            _ => {
                let p: u32 = s
                    .strip_prefix("fox")
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| InvariantError::UnknownInvariant(s.to_string()))?;
                if SUPPORTED_PRIMES.contains(&p) {
                    Ok(Invariant::Fox(p))
                } else {
                    Err(InvariantError::UnsupportedPrime(p))
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Value {
    Bool(bool),
    Int(u64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantValue {
    pub name: String,
    pub value: Value,
}

/// Evaluates an invariant of the positive resolution. These values cannot
/// change under 1-moves or weak triangle moves.
pub fn weak13_invariant(curve: &PlanarCurve, inv: Invariant) -> InvariantValue {
    let value = match inv {
        Invariant::Tricolor => Value::Bool(tricolorable(&positive_resolution(curve))),
        Invariant::Fox(p) => Value::Int(fox_coloring_count(&positive_resolution(curve), p).expect("checked on parse")),
        Invariant::Weak13Trivial => Value::Bool(is_weak13_trivial(curve)),
    };
    InvariantValue { name: inv.name(), value }
}

/// Trivial under 1-moves and weak triangle moves exactly when the
/// 1-reduction is the circle.
pub fn is_weak13_trivial(curve: &PlanarCurve) -> bool {
    reduce_1(curve).result.is_trivial()
}
