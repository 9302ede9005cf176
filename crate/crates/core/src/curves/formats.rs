use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};

use super::classify::SingularityType;
use super::newton::LatticePoint;
use super::{plain_orbinate_ring, OrbifoldEquation};

/// The orbinate equation shapes that occur for the curves in the links,
/// plus the common degeneration of the two A_2 families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrbifoldFormat {
    /// `A_1`, type (3).
    G3,
    /// `A_2`, type (1,3).
    G13,
    /// `A_2`, type (4,0).
    G40,
    /// `A_3`, type (5,0,0).
    G500,
    /// `A_2`, type (3,2).
    G32,
}

impl OrbifoldFormat {
    pub const ALL: [OrbifoldFormat; 5] = [
        OrbifoldFormat::G3,
        OrbifoldFormat::G13,
        OrbifoldFormat::G40,
        OrbifoldFormat::G500,
        OrbifoldFormat::G32,
    ];

    pub fn r(self) -> u32 {
        match self {
            OrbifoldFormat::G3 => 2,
            OrbifoldFormat::G13 | OrbifoldFormat::G40 | OrbifoldFormat::G32 => 3,
            OrbifoldFormat::G500 => 4,
        }
    }

    /// Monomials `alpha^m beta^n`, highest `alpha` power first.
    pub fn support(self) -> Vec<LatticePoint> {
        let pts: &[(u32, u32)] = match self {
            OrbifoldFormat::G3 => &[(3, 0), (2, 1), (1, 2), (0, 3)],
            OrbifoldFormat::G13 => &[(5, 0), (3, 1), (2, 3), (1, 5), (0, 7)],
            OrbifoldFormat::G40 => &[(8, 0), (6, 1), (4, 2), (2, 3), (0, 4)],
            OrbifoldFormat::G500 => &[(15, 0), (12, 1), (9, 2), (6, 3), (3, 4), (0, 5)],
            OrbifoldFormat::G32 => &[(8, 0), (6, 1), (4, 2), (2, 3), (1, 5), (0, 7)],
        };
        pts.iter().map(|&(m, n)| LatticePoint::new(m, n)).collect()
    }

    pub fn expected_type(self) -> SingularityType {
        SingularityType::new(match self {
            OrbifoldFormat::G3 => vec![3],
            OrbifoldFormat::G13 => vec![1, 3],
            OrbifoldFormat::G40 => vec![4, 0],
            OrbifoldFormat::G500 => vec![5, 0, 0],
            OrbifoldFormat::G32 => vec![3, 2],
        })
    }

    /// Equation with the given scalars on the support, in order.
    pub fn instantiate(self, coeffs: &[Rational]) -> Result<OrbifoldEquation> {
        let support = self.support();
        if coeffs.len() != support.len() {
            return Err(Error::InvalidArgument(format!(
                "{self} takes {} coefficients, got {}",
                support.len(),
                coeffs.len()
            )));
        }
        let ring = plain_orbinate_ring();
        let p = Poly::from_terms(
            &ring,
            support.iter().zip(coeffs).map(|(pt, c)| (vec![pt.m, pt.n], c.clone())),
        );
        OrbifoldEquation::new(self.r(), p)
    }

    /// Fixed instance with square-free face forms.
    pub fn generic(self) -> OrbifoldEquation {
        let c: Vec<Rational> = match self {
            OrbifoldFormat::G3 => [1, -3, 5, 7].map(rational::int).to_vec(),
            OrbifoldFormat::G13 => [2, 1, -4, 3, 5].map(rational::int).to_vec(),
            OrbifoldFormat::G40 => [1, 2, -3, 5, 7].map(rational::int).to_vec(),
            OrbifoldFormat::G500 => [1, -2, 3, 5, -7, 11].map(rational::int).to_vec(),
            OrbifoldFormat::G32 => [1, 3, -2, 5, 7, 2].map(rational::int).to_vec(),
        };
        self.instantiate(&c).expect("fixed coefficients fit the support")
    }

    /// Random nonzero small rationals on the support.
    pub fn random<R: Rng>(self, rng: &mut R) -> OrbifoldEquation {
        let c: Vec<Rational> = self
            .support()
            .iter()
            .map(|_| loop {
                let q = rational::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5));
                if !q.is_zero() {
                    break q;
                }
            })
            .collect();
        self.instantiate(&c).expect("coefficient count matches")
    }
}

impl fmt::Display for OrbifoldFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrbifoldFormat::G3 => "gamma3",
            OrbifoldFormat::G13 => "gamma13",
            OrbifoldFormat::G40 => "gamma40",
            OrbifoldFormat::G500 => "gamma500",
            OrbifoldFormat::G32 => "gamma32",
        };
        f.write_str(s)
    }
}

impl FromStr for OrbifoldFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrbifoldFormat::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown orbifold format `{s}`")))
    }
}
