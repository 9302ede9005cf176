//! Symbolic check that a curve through an `A_3` point with the required
//! extraction has orbinate equation `alpha^15 + ... + beta^5` shape: all the
//! low order coefficients `a, ..., g` of `phi`, `psi` must vanish.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::parse::parse_poly;
use crate::poly::{Poly, Ring, WeightSystem};
use crate::rational::{self, Rational};

const COORDS: [&str; 3] = ["x", "y", "z"];
const PARAMS: [&str; 2] = ["lambda", "mu"];

#[derive(Debug, Clone, Serialize)]
pub struct A3Report {
    /// `h = xz - y^4 + lambda(x phi + y psi) + mu(y^3 phi + z psi)`.
    pub h: String,
    pub quadratic_part_matches: bool,
    /// Determinant of the Hessian of the quadratic part.
    pub discriminant: String,
    /// `c` with `discriminant = c * displayed`, when such a scalar exists.
    pub discriminant_scalar: Option<String>,
    /// Variables forced to vanish, in the order they were forced.
    pub forced_by_discriminant: Vec<String>,
    pub discriminant_vanishes_on_locus: bool,
    /// Smallest order of `XZ - lambda(...)y^3 - h` at the origin.
    pub residue_order: Option<u32>,
    pub forced_by_quartic: Vec<String>,
    pub quartic_vanishes_on_locus: bool,
}

impl A3Report {
    pub fn passed(&self) -> bool {
        let set = |v: &[String]| v.iter().cloned().collect::<BTreeSet<_>>();
        self.quadratic_part_matches
            && self.discriminant_scalar.is_some()
            && set(&self.forced_by_discriminant) == set(&["a", "b", "f"].map(String::from))
            && self.discriminant_vanishes_on_locus
            && self.residue_order.is_none_or(|k| k >= 4)
            && set(&self.forced_by_quartic) == set(&["c", "d", "e", "g"].map(String::from))
            && self.quartic_vanishes_on_locus
    }
}

fn ring() -> Ring {
    // p*, q1 are the degree 3 parts of phi and psi
    WeightSystem::standard([
        "x", "y", "z", "lambda", "mu", "a", "b", "c", "d", "e", "f", "g", "h", "p1", "p2", "p3",
        "p4", "q1",
    ])
    .expect("valid ring")
}

fn p(src: &str, ring: &Ring) -> Poly {
    parse_poly(src, ring).expect("fixed expression parses")
}

fn det3(m: &[[Poly; 3]; 3]) -> Poly {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn set_zero(q: &Poly, vars: &[&str]) -> Result<Poly> {
    let vals: Vec<(&str, Rational)> = vars.iter().map(|v| (*v, Rational::zero())).collect();
    q.evaluate(&vals)
}

/// Repeatedly finds a condition that is a scalar times a power of the unit
/// `h` times a single target variable, and sets that variable to zero.
/// Returns the variables in the order they were forced.
fn forced_vanishing(conditions: &[Poly], targets: &[&str]) -> Result<Vec<String>> {
    let mut conds: Vec<Poly> = conditions.to_vec();
    let mut forced: Vec<String> = Vec::new();
    loop {
        let mut next = None;
        'search: for c in &conds {
            if c.num_terms() != 1 {
                continue;
            }
            let vars = c.support_variables();
            let hits: Vec<&&str> = targets.iter().filter(|t| vars.contains(t)).collect();
            let others_are_h = vars.iter().all(|v| *v == "h" || targets.contains(v));
            if hits.len() == 1 && others_are_h {
                let (mono, _) = c.terms().next().unwrap();
                let idx = c.ring().index_of(hits[0]).unwrap();
                if mono.exponent(idx) >= 1 && !forced.iter().any(|f| f == *hits[0]) {
                    next = Some(hits[0].to_string());
                    break 'search;
                }
            }
        }
        let Some(v) = next else { break };
        conds = conds.iter().map(|c| set_zero(c, &[&v])).collect::<Result<_>>()?;
        forced.push(v);
    }
    Ok(forced)
}

pub fn a3_obstruction() -> Result<A3Report> {
    let r = ring();
    let phi = p("a*x + b*y + c*x^2 + d*x*y + e*y^2 + p1*x^3 + p2*x^2*y + p3*x*y^2 + p4*y^3", &r);
    let psi = p("f*y + g*y^2 + h*z + q1*y^3", &r);
    let (x, y, z) = (r.var("x")?, r.var("y")?, r.var("z")?);
    let (lambda, mu) = (r.var("lambda")?, r.var("mu")?);
    let h = &x * &z - y.pow(4)
        + &lambda * (&x * &phi + &y * &psi)
        + &mu * (y.pow(3) * &phi + &z * &psi);

    let quad = h.part_of_order(&COORDS, 2)?;
    let displayed_quad =
        p("x*z + lambda*x*(a*x + b*y) + lambda*y*(f*y + h*z) + mu*z*(f*y + h*z)", &r);
    let quadratic_part_matches = quad == displayed_quad;

    let hess: Vec<Vec<Poly>> = COORDS
        .iter()
        .map(|u| {
            COORDS
                .iter()
                .map(|v| quad.derivative(u).and_then(|d| d.derivative(v)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let hm: [[Poly; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| hess[i][j].clone()));
    let disc = det3(&hm);
    let displayed = p("lambda*(a*(h*lambda - f*mu)^2 + b^2*h*lambda*mu - b*(h*lambda + f*mu) + f)", &r);
    let discriminant_scalar = scalar_multiple(&disc, &displayed);

    let disc_conditions: Vec<Poly> = disc.coefficients_in(&PARAMS)?.into_values().collect();
    let quad_targets = ["a", "b", "c", "d", "e", "f", "g"];
    let forced_by_discriminant = forced_vanishing(&disc_conditions, &quad_targets)?;
    let discriminant_vanishes_on_locus = set_zero(&disc, &["a", "b", "f"])?.is_zero();

    let h0 = set_zero(&h, &["a", "b", "f"])?;
    let big_x = p(
        "x + h*(lambda*y + mu*z) + g*mu*y^2 - h*lambda*mu*(c*x^2 + d*x*y + e*y^2) \
         + h^2*lambda^2*mu*y*(c*x + d*y) - c*h^3*lambda^3*mu*y^2",
        &r,
    );
    let big_z = p("z + lambda*(c*x^2 + d*x*y + e*y^2) - h*lambda^2*y*(c*x + d*y) + c*h^2*lambda^3*y^2", &r);
    let quartic = p("c*h^3*lambda^3 - d*h^2*lambda^2 + e*h*lambda - g", &r);
    let residue = &big_x * &big_z - &lambda * &quartic * y.pow(3) - &h0;
    let residue_order = residue.order_in(&COORDS)?;

    let quartic_conditions: Vec<Poly> = quartic.coefficients_in(&["lambda"])?.into_values().collect();
    let forced_by_quartic = forced_vanishing(&quartic_conditions, &["c", "d", "e", "g"])?;
    let quartic_vanishes_on_locus = set_zero(&quartic, &["c", "d", "e", "g"])?.is_zero();

    Ok(A3Report {
        h: h.to_string(),
        quadratic_part_matches,
        discriminant: disc.to_string(),
        discriminant_scalar: discriminant_scalar.map(|c| rational::format(&c)),
        forced_by_discriminant,
        discriminant_vanishes_on_locus,
        residue_order,
        forced_by_quartic,
        quartic_vanishes_on_locus,
    })
}

/// `Some(c)` with `p = c * q` and `c != 0`.
fn scalar_multiple(p: &Poly, q: &Poly) -> Option<Rational> {
    let (m, cq) = q.terms().next_back()?;
    let c = p.coefficient(m) / cq;
    (!c.is_zero() && *p == q.scale(&c)).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn obstruction_report() {
        let rep = a3_obstruction().unwrap();
        assert!(rep.quadratic_part_matches);
        assert_eq!(rep.discriminant_scalar.as_deref(), Some("-2"));
        assert_eq!(rep.forced_by_discriminant, vec!["f", "b", "a"]);
        assert!(rep.discriminant_vanishes_on_locus);
        assert!(rep.residue_order.unwrap() >= 4);
        assert_eq!(rep.forced_by_quartic.len(), 4);
        assert!(rep.quartic_vanishes_on_locus);
        assert!(rep.passed());
    }

    #[test]
    fn forced_vanishing_stops_on_mixed_condition() {
        let r = ring();
        let conds = vec![p("a + b", &r)];
        assert!(forced_vanishing(&conds, &["a", "b"]).unwrap().is_empty());
        let conds = vec![p("a*b", &r)];
        assert!(forced_vanishing(&conds, &["a", "b"]).unwrap().is_empty());
        let conds = vec![p("3*h^2*a", &r), p("a*b + h*b", &r)];
        assert_eq!(forced_vanishing(&conds, &["a", "b"]).unwrap(), vec!["a", "b"]);
    }
}
