use serde::Serialize;

use crate::error::Result;
use crate::rational::{self, Rational};

use super::OrbifoldEquation;

/// Exponent pair: `m` of `alpha` (horizontal), `n` of `beta` (vertical).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub m: u32,
    pub n: u32,
}

impl LatticePoint {
    pub fn new(m: u32, n: u32) -> Self {
        LatticePoint { m, n }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Face {
    #[serde(serialize_with = "rational::serde_text::serialize")]
    pub slope: Rational,
    /// Upper-left end.
    pub start: LatticePoint,
    /// Lower-right end.
    pub end: LatticePoint,
    /// Support points lying on the face, left to right.
    pub points: Vec<LatticePoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NewtonPolygon {
    /// From the leftmost vertex down to the lowest one.
    pub vertices: Vec<LatticePoint>,
    /// Left to right, steepest first.
    pub faces: Vec<Face>,
}

fn slope(from: LatticePoint, to: LatticePoint) -> Rational {
    rational::ratio(
        i64::from(to.n) - i64::from(from.n),
        i64::from(to.m) - i64::from(from.m),
    )
}

/// Lower-left convex hull of the support plus the positive quadrant.
pub fn newton_polygon(g: &OrbifoldEquation) -> Result<NewtonPolygon> {
    Ok(hull(&g.support()))
}

pub(crate) fn hull(points: &[LatticePoint]) -> NewtonPolygon {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let start = *pts.iter().min_by_key(|p| (p.m, p.n)).expect("nonempty support");
    let n_min = pts.iter().map(|p| p.n).min().unwrap();
    let mut vertices = vec![start];
    let mut cur = start;
    while cur.n > n_min {
        let next = pts
            .iter()
            .filter(|p| p.n < cur.n && p.m > cur.m)
            .min_by(|p, q| slope(cur, **p).cmp(&slope(cur, **q)).then(q.m.cmp(&p.m)))
            .copied()
            .expect("a lower point exists to the right of every non-final vertex");
        vertices.push(next);
        cur = next;
    }
    let faces = vertices
        .windows(2)
        .map(|w| {
            let (s, e) = (w[0], w[1]);
            let on_face: Vec<LatticePoint> = pts
                .iter()
                .filter(|p| {
                    p.m >= s.m
                        && p.m <= e.m
                        && (i64::from(p.n) - i64::from(s.n)) * (i64::from(e.m) - i64::from(s.m))
                            == (i64::from(e.n) - i64::from(s.n)) * (i64::from(p.m) - i64::from(s.m))
                })
                .copied()
                .collect();
            Face { slope: slope(s, e), start: s, end: e, points: on_face }
        })
        .collect();
    NewtonPolygon { vertices, faces }
}
