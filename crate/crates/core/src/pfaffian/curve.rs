use serde::Serialize;

use crate::curves::{classify, invariant_ring, reassemble, Classification, NormalForm, OrbifoldEquation};
use crate::error::Result;
use crate::poly::{Bindings, Poly, Ring};

use super::families::Family;

/// The curve `Gamma` through the index 3 point of `P(1^3,2)`, read off the
/// family: `phi = a'x + c'y`, `psi = d'y + e'z`, restricted to `u = 1`.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyCurve {
    #[serde(serialize_with = "display")]
    pub phi: Poly,
    #[serde(serialize_with = "display")]
    pub psi: Poly,
    /// `alpha^2 phi + beta psi` in orbinates.
    #[serde(serialize_with = "display")]
    pub gamma: Poly,
    pub classification: Classification,
}

fn display<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

fn to_ring(p: &Poly, target: &Ring, images: [Poly; 4]) -> Result<Poly> {
    let mut b = Bindings::new();
    for (name, img) in ["u", "x", "y", "z"].into_iter().zip(images) {
        b.insert(name.to_string(), img);
    }
    p.substitute(&b, target)
}

pub fn family_curve(f: &Family) -> Result<FamilyCurve> {
    let [a, c, d, e] = &f.curve_data;
    let (x, y, z) = (super::var("x"), super::var("y"), super::var("z"));
    let phi = a * &x + c * &y;
    let psi = d * &y + e * &z;
    let inv = invariant_ring();
    let v = |n: &str| inv.var(n).expect("invariant variable");
    let images = || [inv.one(), v("x"), v("y"), v("z")];
    let nf = NormalForm { r: 3, phi: to_ring(&phi, &inv, images())?, psi: to_ring(&psi, &inv, images())? };
    let gamma = reassemble(&nf)?;
    let eq = OrbifoldEquation::new(3, gamma)?;
    let classification = classify(&eq);
    Ok(FamilyCurve { phi: nf.phi, psi: nf.psi, gamma: eq.poly().clone(), classification })
}
