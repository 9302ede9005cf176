use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{self, Rational};

use super::newton::{hull, Face, LatticePoint, NewtonPolygon};
use super::OrbifoldEquation;

/// Branch counts `(a_1, ..., a_{r-1})`: `a_i` branches of the resolved
/// curve meet the exceptional curve `D_i` transversely.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SingularityType(pub Vec<u32>);

impl SingularityType {
    pub fn new(branches: Vec<u32>) -> Self {
        SingularityType(branches)
    }

    pub fn branches(&self) -> &[u32] {
        &self.0
    }

    /// Total number of analytic branches.
    pub fn branch_count(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "Gamma({})", parts.join(","))
    }
}

/// `sum_i min(i, r-i) * a_i`.
pub fn multiplicity(t: &SingularityType, r: u32) -> Result<u32> {
    if r < 2 || t.0.len() != (r - 1) as usize {
        return Err(Error::InvalidArgument(format!(
            "{t} has {} branch counts, expected r-1 = {}",
            t.0.len(),
            r.saturating_sub(1)
        )));
    }
    Ok(t.0
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let i = k as u32 + 1;
            i.min(r - i) * a
        })
        .sum())
}

/// Face polynomial written as a binary form in `u = alpha^(r-i)`, `v = beta^i`
/// after stripping the common monomial factor.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaceForm {
    pub i: u32,
    #[serde(serialize_with = "rational::serde_text::serialize")]
    pub slope: Rational,
    pub degree: u32,
    /// `coefficients[k]` multiplies `u^k v^(degree-k)`.
    #[serde(serialize_with = "ser_coeffs")]
    pub coefficients: Vec<Rational>,
    pub square_free: bool,
}

fn ser_coeffs<S: serde::Serializer>(c: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(rational::format))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Degeneracy {
    /// No pure `beta` power: `alpha` divides the equation.
    AlphaDivides,
    /// No pure `alpha` power: `beta` divides the equation.
    BetaDivides,
    /// The support has a single point.
    NoFaces,
    SlopeMismatch { slope: String },
    NonIntegralFace { slope: String },
    RepeatedRoots { i: u32 },
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::AlphaDivides => write!(f, "alpha divides the equation"),
            Degeneracy::BetaDivides => write!(f, "beta divides the equation"),
            Degeneracy::NoFaces => write!(f, "Newton polygon has no compact face"),
            Degeneracy::SlopeMismatch { slope } => {
                write!(f, "face of slope {slope} matches no exceptional curve")
            }
            Degeneracy::NonIntegralFace { slope } => {
                write!(f, "face of slope {slope} is not a form in alpha^(r-i), beta^i")
            }
            Degeneracy::RepeatedRoots { i } => write!(f, "face form for D_{i} has a repeated root"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Classification {
    Type {
        #[serde(rename = "type")]
        singularity: SingularityType,
        multiplicity: u32,
        faces: Vec<FaceForm>,
    },
    Degenerate {
        reasons: Vec<Degeneracy>,
        polygon: NewtonPolygon,
    },
}

impl Classification {
    pub fn singularity_type(&self) -> Option<&SingularityType> {
        match self {
            Classification::Type { singularity, .. } => Some(singularity),
            Classification::Degenerate { .. } => None,
        }
    }

    pub fn multiplicity(&self) -> Option<u32> {
        match self {
            Classification::Type { multiplicity, .. } => Some(*multiplicity),
            Classification::Degenerate { .. } => None,
        }
    }
}

fn face_index(slope: &Rational, r: u32) -> Option<u32> {
    // slope = -i/(r-i)
    (1..r).find(|&i| *slope == rational::ratio(-i64::from(i), i64::from(r - i)))
}

fn face_form(g: &OrbifoldEquation, face: &Face, i: u32) -> Option<FaceForm> {
    let r = g.r();
    let (m0, n0) = (face.start.m, face.end.n);
    let du = r - i;
    let width = face.end.m - face.start.m;
    let height = face.start.n - face.end.n;
    if width % du != 0 || height % i != 0 || width / du != height / i {
        return None;
    }
    let degree = width / du;
    let mut coefficients = vec![Rational::zero(); degree as usize + 1];
    for p in &face.points {
        let (dm, dn) = (p.m - m0, p.n - n0);
        if dm % du != 0 || dn % i != 0 {
            return None;
        }
        coefficients[(dm / du) as usize] = g.poly().coefficient_of(&[p.m, p.n]);
    }
    // endpoints are vertices, so u^deg and v^deg are present; F(u,1) has full
    // degree and its square-freeness is that of the form
    let square_free = UniPoly::new(coefficients.clone()).is_square_free();
    Some(FaceForm { i, slope: face.slope.clone(), degree, coefficients, square_free })
}

/// Reads the singularity type off the Newton polygon, or reports why the
/// equation is degenerate.
pub fn classify(g: &OrbifoldEquation) -> Classification {
    let r = g.r();
    let polygon = hull(&g.support());
    let mut reasons = Vec::new();
    let first = polygon.vertices[0];
    let last = *polygon.vertices.last().unwrap();
    if first.m > 0 {
        reasons.push(Degeneracy::AlphaDivides);
    }
    if last.n > 0 {
        reasons.push(Degeneracy::BetaDivides);
    }
    if polygon.faces.is_empty() {
        reasons.push(Degeneracy::NoFaces);
    }
    let mut branches = vec![0u32; (r - 1) as usize];
    let mut faces = Vec::new();
    for face in &polygon.faces {
        let slope = rational::format(&face.slope);
        let Some(i) = face_index(&face.slope, r) else {
            reasons.push(Degeneracy::SlopeMismatch { slope });
            continue;
        };
        match face_form(g, face, i) {
            None => reasons.push(Degeneracy::NonIntegralFace { slope }),
            Some(ff) => {
                if !ff.square_free {
                    reasons.push(Degeneracy::RepeatedRoots { i });
                }
                branches[(i - 1) as usize] = ff.degree;
                faces.push(ff);
            }
        }
    }
    if !reasons.is_empty() {
        return Classification::Degenerate { reasons, polygon };
    }
    let singularity = SingularityType(branches);
    let multiplicity = multiplicity(&singularity, r).expect("branch vector has length r-1");
    Classification::Type { singularity, multiplicity, faces }
}

impl LatticePoint {
    /// Weighted degree `m + n(ra-1)` for orbinate weights `1/r, (ra-1)/r`,
    /// scaled by `r`.
    pub fn scaled_degree(&self, r: u32, a: u32) -> u32 {
        self.m + self.n * (r * a - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(r: u32, src: &str) -> Classification {
        classify(&OrbifoldEquation::parse(r, src).unwrap())
    }

    fn ty(v: &[u32]) -> SingularityType {
        SingularityType(v.to_vec())
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&ty(&[3]), 2).unwrap(), 3);
        assert_eq!(multiplicity(&ty(&[1, 3]), 3).unwrap(), 4);
        assert_eq!(multiplicity(&ty(&[4, 0]), 3).unwrap(), 4);
        assert_eq!(multiplicity(&ty(&[5, 0, 0]), 4).unwrap(), 5);
        assert_eq!(multiplicity(&ty(&[3, 2]), 3).unwrap(), 5);
        assert!(multiplicity(&ty(&[1, 1]), 2).is_err());
    }

    #[test]
    fn two_term_a2() {
        let c = class(3, "alpha^8 + beta^4");
        assert_eq!(c.singularity_type(), Some(&ty(&[4, 0])));
    }

    #[test]
    fn smooth_branch() {
        let c = class(3, "2*alpha^2 - 3*beta");
        assert_eq!(c.singularity_type(), Some(&ty(&[1, 0])));
        let c = class(3, "alpha - beta^2");
        assert_eq!(c.singularity_type(), Some(&ty(&[0, 1])));
    }

    #[test]
    fn repeated_root() {
        // (alpha^2 - beta)^2 in u = alpha^2, v = beta
        let c = class(3, "alpha^4 - 2*alpha^2*beta + beta^2");
        match c {
            Classification::Degenerate { reasons, .. } => {
                assert_eq!(reasons, vec![Degeneracy::RepeatedRoots { i: 1 }])
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn divisibility() {
        let c = class(3, "alpha^3*beta + alpha*beta^2");
        match c {
            Classification::Degenerate { reasons, .. } => {
                assert!(reasons.contains(&Degeneracy::AlphaDivides));
                assert!(reasons.contains(&Degeneracy::BetaDivides));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(class(2, "alpha^3"), Classification::Degenerate { .. }));
    }

    #[test]
    fn slope_mismatch() {
        // slope -1/3 is no -i/(3-i)
        let c = class(3, "alpha^3 + beta");
        match c {
            Classification::Degenerate { reasons, .. } => {
                assert_eq!(reasons, vec![Degeneracy::SlopeMismatch { slope: "-1/3".into() }])
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_integral_face() {
        let c = class(3, "alpha^6 + beta^3");
        // width 6, height 3: slope -1/2, degree 3 form u^3 + v^3
        assert_eq!(c.singularity_type(), Some(&ty(&[3, 0])));
        let c = class(4, "alpha^4 + beta^2");
        // -i/(4-i) = -1/2 has no integer solution
        assert!(matches!(c, Classification::Degenerate { .. }));
        let c = class(4, "alpha^2 + beta^2");
        // i = 2, u = alpha^2, v = beta^2: width 2 -> degree 1, height 2 -> 1
        assert_eq!(c.singularity_type(), Some(&ty(&[0, 1, 0])));
        let c = class(4, "alpha^3 + beta^3");
        // i = 2 but width 3 is not a multiple of 2
        match c {
            Classification::Degenerate { reasons, .. } => {
                assert_eq!(reasons, vec![Degeneracy::NonIntegralFace { slope: "-1".into() }])
            }
            other => panic!("{other:?}"),
        }
    }
}
