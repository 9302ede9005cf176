use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::curves::{degree_bound_spec, OrbifoldFormat};
use crate::error::{Error, Result};
use crate::poly::count_monomials;

/// The curve families in `P(1^3,2)` for case A.3: the two orbinate formats
/// and their common degeneration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModuliFamily {
    T,
    J,
    TJ,
}

impl ModuliFamily {
    pub const ALL: [ModuliFamily; 3] = [ModuliFamily::T, ModuliFamily::J, ModuliFamily::TJ];

    pub fn format(self) -> OrbifoldFormat {
        match self {
            ModuliFamily::T => OrbifoldFormat::G13,
            ModuliFamily::J => OrbifoldFormat::G40,
            ModuliFamily::TJ => OrbifoldFormat::G32,
        }
    }
}

impl fmt::Display for ModuliFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuliFamily::T => "T",
            ModuliFamily::J => "J",
            ModuliFamily::TJ => "TJ",
        })
    }
}

impl FromStr for ModuliFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T" | "TOM" => Ok(ModuliFamily::T),
            "J" | "JERRY" => Ok(ModuliFamily::J),
            "TJ" | "T∩J" => Ok(ModuliFamily::TJ),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}` (T, J or TJ)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuliReport {
    pub family: String,
    /// Coefficient degrees on the format's support.
    pub degrees: Vec<u32>,
    /// Monomials available in each coefficient.
    pub counts: Vec<u64>,
    pub total: u64,
    /// Projectivised: `total - 1`.
    pub dimension: u64,
}

const A3_WEIGHTS: [u32; 4] = [1, 1, 1, 2];

pub fn moduli_dimension(family: ModuliFamily) -> Result<ModuliReport> {
    // case A.3: (r, a, d) = (3, 1, 14)
    let spec = degree_bound_spec(3, 1, 14)?;
    let degrees = spec.restrict(&family.format().support()).ok_or_else(|| {
        Error::InvalidArgument(format!("format of family {family} is infeasible in degree 14"))
    })?;
    let counts: Vec<u64> = degrees.iter().map(|&k| count_monomials(&A3_WEIGHTS, k)).collect();
    let total: u64 = counts.iter().sum();
    Ok(ModuliReport { family: family.to_string(), degrees, counts, total, dimension: total - 1 })
}
