//! Codimension 4 Gorenstein rings from 5x5 skew matrices: Pfaffians, Tom
//! and Jerry formats, and the consistency of the unprojection equations.
//!
//! Ambient variables `u, x, y, z, xi, nu, zeta` of weights `1,1,1,2,2,3,4`;
//! the unprojection variable `theta` has weight 5.

mod consistency;
mod curve;
mod families;
mod membership;
mod skew;

use std::sync::OnceLock;

use crate::poly::{Poly, Ring, WeightSystem};

pub use consistency::{family_consistency, unprojection_consistency, ConsistencyReport, PairCheck};
pub use curve::{family_curve, FamilyCurve};
pub use families::{
    build_jerry_family, build_tom_family, build_tom_jerry_family, degree_pattern, random_coefficient,
    random_family, random_rational, Family, FamilyKind, JerryCoefficients, TomCoefficients,
    TomJerryCoefficients, UNPROJECTION_VARIABLES,
};
pub use membership::{ideal_membership_bounded, MembershipCertificate};
pub use skew::{
    jerry_check, max_pfaffians, monomial_ideal_contains, pattern_degree, pf4, tom_check, DegreePattern,
    SkewMatrix5, POSITIONS,
};

pub const THETA_WEIGHT: u32 = 5;

pub fn ambient_ring() -> Ring {
    static RING: OnceLock<Ring> = OnceLock::new();
    RING.get_or_init(|| {
        WeightSystem::new([("u", 1), ("x", 1), ("y", 1), ("z", 2), ("xi", 2), ("nu", 3), ("zeta", 4)])
            .expect("valid weights")
    })
    .clone()
}

pub(crate) fn var(name: &str) -> Poly {
    ambient_ring().var(name).expect("ambient variable")
}

#[cfg(test)]
mod tests;
