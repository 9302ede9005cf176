//! Curve germs through an `A_{r-1}` Du Val point, studied through their
//! orbifold equations in the orbinates `alpha`, `beta` (so that
//! `(x,y,z) = (alpha^r, alpha*beta, beta^r)`).
//!
//! Newton polygons are drawn with the `alpha` exponent on the horizontal
//! axis. A transverse branch `l*alpha^(r-i) - m*beta^i` then spans the face
//! from `(r-i, 0)` to `(0, i)`, of slope `-i/(r-i)`.

mod a3;
mod bounds;
mod classify;
mod formats;
mod minors;
mod newton;
mod normal_form;

pub use a3::{a3_obstruction, A3Report};
pub use bounds::{degree_bound_spec, AllowedMonomial, DegreeBoundSpec};
pub use classify::{classify, multiplicity, Classification, Degeneracy, FaceForm, SingularityType};
pub use formats::OrbifoldFormat;
pub use minors::{generic_minor_pullback, minor_presentation, MinorPresentation, MinorPullback};
pub use newton::{newton_polygon, Face, LatticePoint, NewtonPolygon};
pub use normal_form::{invariant_ring, orbifold_normal_form, reassemble, NormalForm};

use crate::error::{Error, Result};
use crate::poly::{Poly, Ring, WeightSystem};

pub const ALPHA: &str = "alpha";
pub const BETA: &str = "beta";

/// Orbinate ring with weights scaled by `r`: `alpha` has weight 1 and `beta`
/// weight `ra - 1`, so a curve of degree `d` has terms of degree `<= d`.
pub fn orbinate_ring(r: u32, a: u32) -> Ring {
    WeightSystem::new([(ALPHA, 1), (BETA, r * a - 1)]).expect("valid orbinate weights")
}

/// Orbinate ring with both weights one.
pub fn plain_orbinate_ring() -> Ring {
    WeightSystem::standard([ALPHA, BETA]).expect("valid orbinate weights")
}

/// Equation of the preimage of a curve germ in the smooth cover of an
/// `A_{r-1}` point.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbifoldEquation {
    r: u32,
    poly: Poly,
}

impl OrbifoldEquation {
    /// `poly` must be a nonzero polynomial over a ring with exactly the two
    /// variables `alpha`, `beta`.
    pub fn new(r: u32, poly: Poly) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidArgument(format!("A_(r-1) needs r >= 2, got {r}")));
        }
        let names = poly.ring().names();
        if names.len() != 2 || names[0] != ALPHA || names[1] != BETA {
            return Err(Error::InvalidArgument(
                "orbifold equations live in the ring (alpha, beta)".into(),
            ));
        }
        if poly.is_zero() {
            return Err(Error::InvalidArgument("orbifold equation is zero".into()));
        }
        Ok(OrbifoldEquation { r, poly })
    }

    /// Parses a polynomial in `alpha`, `beta`.
    pub fn parse(r: u32, src: &str) -> Result<Self> {
        let p = crate::parse::parse_poly(src, &plain_orbinate_ring())?;
        Self::new(r, p)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Support as `(alpha exponent, beta exponent)` points.
    pub fn support(&self) -> Vec<LatticePoint> {
        self.poly
            .terms()
            .map(|(m, _)| LatticePoint { m: m.exponent(0), n: m.exponent(1) })
            .collect()
    }
}
