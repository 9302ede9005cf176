use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, Ring, WeightSystem};

use super::normal_form::pullback_bindings;
use super::{ALPHA, BETA};

/// The curve `Gamma` in `C^3` cut out by the 2x2 minors of
/// `(x, y^(r-1), -psi; y, z, phi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinorPresentation {
    pub matrix: [[Poly; 3]; 2],
    /// Minors on columns (1,2), (1,3), (2,3).
    pub minors: [Poly; 3],
}

/// `phi` and `psi` must live in a ring containing `x`, `y`, `z`.
pub fn minor_presentation(r: u32, phi: &Poly, psi: &Poly) -> Result<MinorPresentation> {
    if !(2..=4).contains(&r) {
        return Err(Error::InvalidArgument(format!("minor presentation needs r in 2..=4, got {r}")));
    }
    let ring = phi.ring().clone();
    if psi.ring() != &ring {
        return Err(Error::IncompatibleRings);
    }
    let x = ring.var("x")?;
    let y = ring.var("y")?;
    let z = ring.var("z")?;
    let matrix = [[x, y.pow(r - 1), -psi], [y, z, phi.clone()]];
    let m = |i: usize, j: usize| &matrix[0][i] * &matrix[1][j] - &matrix[0][j] * &matrix[1][i];
    let minors = [m(0, 1), m(0, 2), m(1, 2)];
    Ok(MinorPresentation { matrix, minors })
}

#[derive(Debug, Clone, Serialize)]
pub struct MinorPullback {
    pub r: u32,
    /// Number of symbolic coefficients in `phi` and `psi`.
    pub unknowns: usize,
    pub relation_vanishes: bool,
    pub second_is_alpha_gamma: bool,
    pub third_is_beta_gamma: bool,
}

impl MinorPullback {
    pub fn passed(&self) -> bool {
        self.relation_vanishes && self.second_is_alpha_gamma && self.third_is_beta_gamma
    }
}

/// Pulls the minors back under `(x,y,z) = (alpha^r, alpha*beta, beta^r)`
/// with `phi(x,y)`, `psi(y,z)` having one symbolic coefficient per monomial
/// of total degree `<= max_degree`.
pub fn generic_minor_pullback(r: u32, max_degree: u32) -> Result<MinorPullback> {
    let mut p_names = Vec::new();
    let mut q_names = Vec::new();
    for i in 0..=max_degree {
        for j in 0..=max_degree - i {
            p_names.push((format!("p{i}_{j}"), i, j));
            q_names.push((format!("q{i}_{j}"), i, j));
        }
    }
    let coeff_names: Vec<&str> =
        p_names.iter().chain(&q_names).map(|(n, _, _)| n.as_str()).collect();
    let source: Ring = WeightSystem::standard(
        ["x", "y", "z"].into_iter().chain(coeff_names.iter().copied()),
    )?;
    let target: Ring = WeightSystem::standard(
        [ALPHA, BETA].into_iter().chain(coeff_names.iter().copied()),
    )?;
    let (x, y, z) = (source.var("x")?, source.var("y")?, source.var("z")?);
    let mut phi = source.zero();
    for (n, i, j) in &p_names {
        phi = phi + source.var(n)? * x.pow(*i) * y.pow(*j);
    }
    let mut psi = source.zero();
    for (n, i, j) in &q_names {
        psi = psi + source.var(n)? * y.pow(*i) * z.pow(*j);
    }
    let pres = minor_presentation(r, &phi, &psi)?;

    let mut binds = pullback_bindings(r, &target)?;
    for n in &coeff_names {
        binds.insert(n.to_string(), target.var(n)?);
    }
    let alpha = target.var(ALPHA)?;
    let beta = target.var(BETA)?;
    let gamma = alpha.pow(r - 1) * phi.substitute(&binds, &target)?
        + &beta * psi.substitute(&binds, &target)?;
    let pulled: Vec<Poly> =
        pres.minors.iter().map(|m| m.substitute(&binds, &target)).collect::<Result<_>>()?;
    Ok(MinorPullback {
        r,
        unknowns: coeff_names.len(),
        relation_vanishes: pulled[0].is_zero(),
        second_is_alpha_gamma: pulled[1] == &alpha * &gamma,
        third_is_beta_gamma: pulled[2] == beta.pow(r - 1) * &gamma,
    })
}
