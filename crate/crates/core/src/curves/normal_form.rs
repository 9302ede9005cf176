use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Bindings, Poly, Ring, WeightSystem};

use super::{plain_orbinate_ring, OrbifoldEquation, ALPHA, BETA};

/// `gamma = alpha^(r-1) * phi(x,y) + beta * psi(y,z)` with
/// `(x,y,z) = (alpha^r, alpha*beta, beta^r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalForm {
    pub r: u32,
    pub phi: Poly,
    pub psi: Poly,
}

/// Ring of invariants `x, y, z`.
pub fn invariant_ring() -> Ring {
    WeightSystem::standard(["x", "y", "z"]).expect("valid invariant ring")
}

/// Splits an orbinate equation into its `phi`, `psi` parts. Every monomial
/// must satisfy `m - n = -1 mod r`.
pub fn orbifold_normal_form(g: &OrbifoldEquation) -> Result<NormalForm> {
    let r = i64::from(g.r());
    let inv = invariant_ring();
    let mut phi = Vec::new();
    let mut psi = Vec::new();
    for (mono, c) in g.poly().terms() {
        let (m, n) = (i64::from(mono.exponent(0)), i64::from(mono.exponent(1)));
        if (m - n + 1).rem_euclid(r) != 0 {
            return Err(Error::Eigenvalue {
                monomial: Poly::format_monomial(g.poly().ring(), mono),
                r: g.r(),
            });
        }
        if m - n >= r - 1 {
            let (p, q) = (m - (r - 1), n);
            phi.push((vec![((p - q) / r) as u32, q as u32, 0], c.clone()));
        } else {
            let (p, q) = (m, n - 1);
            psi.push((vec![0, p as u32, ((q - p) / r) as u32], c.clone()));
        }
    }
    Ok(NormalForm {
        r: g.r(),
        phi: Poly::from_terms(&inv, phi),
        psi: Poly::from_terms(&inv, psi),
    })
}

/// `(x, y, z) -> (alpha^r, alpha*beta, beta^r)` into `target`, which must
/// contain `alpha` and `beta`.
pub fn pullback_bindings(r: u32, target: &Ring) -> Result<Bindings> {
    let a = target.var(ALPHA)?;
    let b = target.var(BETA)?;
    let mut out = BTreeMap::new();
    out.insert("x".to_string(), a.pow(r));
    out.insert("y".to_string(), &a * &b);
    out.insert("z".to_string(), b.pow(r));
    Ok(out)
}

/// Inverse of [`orbifold_normal_form`].
pub fn reassemble(nf: &NormalForm) -> Result<Poly> {
    let ring = plain_orbinate_ring();
    let binds = pullback_bindings(nf.r, &ring)?;
    let phi = nf.phi.embed(&invariant_ring())?.substitute(&binds, &ring)?;
    let psi = nf.psi.embed(&invariant_ring())?.substitute(&binds, &ring)?;
    Ok(ring.var(ALPHA)?.pow(nf.r - 1) * phi + ring.var(BETA)? * psi)
}
