use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::poly::Poly;

use super::families::{Family, UNPROJECTION_VARIABLES};
use super::membership::{ideal_membership_bounded, MembershipCertificate};
use super::skew::max_pfaffians;
use super::var;

#[derive(Debug, Clone, Serialize)]
pub struct PairCheck {
    pub v1: &'static str,
    pub v2: &'static str,
    /// `v2 * g_v1 - v1 * g_v2`
    #[serde(skip)]
    pub target: Poly,
    pub degree: u32,
    pub certificate: Option<MembershipCertificate>,
}

impl PairCheck {
    pub fn verified(&self) -> bool {
        self.certificate.is_some()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    pub pairs: Vec<PairCheck>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.pairs.len() == 6 && self.pairs.iter().all(PairCheck::verified)
    }
}

/// For each pair of unprojection variables, `v2 g_v1 - v1 g_v2` must lie in
/// the Pfaffian ideal; each certificate is re-expanded before it is kept.
pub fn unprojection_consistency(pfaffians: &[Poly; 5], g: &[Poly; 4]) -> Result<ConsistencyReport> {
    let mut jobs = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            jobs.push((i, j));
        }
    }
    let pairs = jobs
        .par_iter()
        .map(|&(i, j)| {
            let (v1, v2) = (UNPROJECTION_VARIABLES[i], UNPROJECTION_VARIABLES[j]);
            let target = &var(v2) * &g[i] - &var(v1) * &g[j];
            let degree = target.weighted_degree().map(|d| d.degree).unwrap_or(0);
            let certificate = ideal_membership_bounded(&target, pfaffians)?;
            Ok(PairCheck { v1, v2, target, degree, certificate })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConsistencyReport { pairs })
}

pub fn family_consistency(f: &Family) -> Result<ConsistencyReport> {
    unprojection_consistency(&max_pfaffians(&f.matrix)?, &f.unprojection)
}
