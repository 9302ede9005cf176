//! Membership of a homogeneous polynomial in a homogeneous ideal, by linear
//! algebra over the monomials of the target degree. Cofactor degrees are
//! forced by homogeneity, so the search is finite.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, Poly};
use crate::rational::Rational;

/// `target = sum cofactors[i] * gens[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipCertificate {
    pub target: Poly,
    pub cofactors: Vec<Poly>,
}

impl MembershipCertificate {
    /// Re-expands the combination; the solver is not trusted.
    pub fn verify(&self, gens: &[Poly]) -> bool {
        if gens.len() != self.cofactors.len() {
            return false;
        }
        let mut sum = Poly::zero(self.target.ring());
        for (c, g) in self.cofactors.iter().zip(gens) {
            match c.checked_mul(g).and_then(|t| sum.checked_add(&t)) {
                Ok(s) => sum = s,
                Err(_) => return false,
            }
        }
        sum == self.target
    }
}

impl Serialize for MembershipCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.cofactors.iter().map(|c| c.to_string()))
    }
}

fn homogeneous_degree(p: &Poly, what: &str) -> Result<u32> {
    let d = p.weighted_degree()?;
    if !d.homogeneous {
        return Err(Error::Inhomogeneous(format!("{what}: {p}")));
    }
    Ok(d.degree)
}

type SparseVec = BTreeMap<usize, Rational>;

/// `a -= c * b`.
fn axpy(a: &mut SparseVec, c: &Rational, b: &SparseVec) {
    for (k, v) in b {
        let t = c * v;
        match a.entry(*k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(-t);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() -= t;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

struct Basis {
    /// pivot row -> (vector with that largest row, combination of columns)
    rows: HashMap<usize, (SparseVec, SparseVec)>,
}

impl Basis {
    /// Reduces `v` (with its column combination `combo`) until its leading
    /// row is not a pivot. Returns the remainder.
    fn reduce(&self, mut v: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        while let Some((&lead, c)) = v.iter().next_back() {
            let Some((bv, bc)) = self.rows.get(&lead) else { break };
            let c = c.clone();
            axpy(&mut v, &c, bv);
            axpy(&mut combo, &c, bc);
        }
        (v, combo)
    }
}

/// Finds cofactors of degree `deg(target) - deg(gens[i])`, or `None` when
/// the target is not in the ideal. Every returned certificate has been
/// re-expanded.
pub fn ideal_membership_bounded(target: &Poly, gens: &[Poly]) -> Result<Option<MembershipCertificate>> {
    let ring = target.ring().clone();
    let zero_cofactors = || gens.iter().map(|_| Poly::zero(&ring)).collect::<Vec<_>>();
    if target.is_zero() {
        return Ok(Some(MembershipCertificate { target: target.clone(), cofactors: zero_cofactors() }));
    }
    let dt = homogeneous_degree(target, "target")?;
    let mut row_of: HashMap<Monomial, usize> = HashMap::new();
    let mut row_index = |m: Monomial| {
        let n = row_of.len();
        *row_of.entry(m).or_insert(n)
    };
    // columns: (generator, cofactor monomial)
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    let mut col_vecs: Vec<SparseVec> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.ring() != &ring {
            return Err(Error::IncompatibleRings);
        }
        if g.is_zero() {
            continue;
        }
        let dg = homogeneous_degree(g, &format!("generator {}", i + 1))?;
        if dg > dt {
            continue;
        }
        for m in monomials_of_degree(&ring, dt - dg) {
            let v: SparseVec = g.shift(&m).terms().map(|(k, c)| (row_index(k.clone()), c.clone())).collect();
            columns.push((i, m));
            col_vecs.push(v);
        }
    }
    let tv: SparseVec = target.terms().map(|(k, c)| (row_index(k.clone()), c.clone())).collect();

    // order columns so that short ones are pivots first
    let mut order: Vec<usize> = (0..columns.len()).collect();
    order.sort_by_key(|&j| col_vecs[j].len());
    let mut basis = Basis { rows: HashMap::new() };
    for j in order {
        let combo: SparseVec = [(j, Rational::from_integer(1.into()))].into_iter().collect();
        let (v, combo) = basis.reduce(std::mem::take(&mut col_vecs[j]), combo);
        let Some((&lead, lc)) = v.iter().next_back() else { continue };
        let inv = Rational::from_integer(1.into()) / lc;
        let v: SparseVec = v.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        let combo: SparseVec = combo.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        basis.rows.insert(lead, (v, combo));
    }

    let (rest, combo) = basis.reduce(tv, SparseVec::new());
    if !rest.is_empty() {
        return Ok(None);
    }
    // target - sum(c_b v_b) = 0 and the tracked combo holds -sum(c_b combo_b)
    let mut cofactors = zero_cofactors();
    let mut terms: Vec<Vec<(Vec<u32>, Rational)>> = vec![Vec::new(); gens.len()];
    for (j, c) in combo {
        let (i, m) = &columns[j];
        terms[*i].push((m.exponents().to_vec(), -c));
    }
    for (i, t) in terms.into_iter().enumerate() {
        cofactors[i] = Poly::from_terms(&ring, t);
    }
    let cert = MembershipCertificate { target: target.clone(), cofactors };
    if !cert.verify(gens) {
        return Err(Error::InvalidArgument("membership solver produced an invalid certificate".into()));
    }
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::WeightSystem;

    #[test]
    fn multiple_of_generator() {
        let r = WeightSystem::standard(["x", "y", "z"]).unwrap();
        let g = vec![parse_poly("x*y - z^2", &r).unwrap(), parse_poly("y^2", &r).unwrap()];
        let t = parse_poly("x*(x*y - z^2)", &r).unwrap();
        let cert = ideal_membership_bounded(&t, &g).unwrap().unwrap();
        assert!(cert.verify(&g));
    }

    #[test]
    fn not_a_member() {
        let r = WeightSystem::new([("x", 1), ("y", 1), ("xi", 2)]).unwrap();
        let g = vec![r.var("x").unwrap(), r.var("y").unwrap()];
        let t = parse_poly("xi^2", &r).unwrap();
        assert!(ideal_membership_bounded(&t, &g).unwrap().is_none());
    }

    #[test]
    fn combination() {
        let r = WeightSystem::standard(["x", "y", "z"]).unwrap();
        let g = vec![parse_poly("x^2 - y*z", &r).unwrap(), parse_poly("y^2 - x*z", &r).unwrap()];
        let t = parse_poly("(x + 2*z)*(x^2 - y*z) - 3/2*y*(y^2 - x*z)", &r).unwrap();
        assert!(ideal_membership_bounded(&t, &g).unwrap().unwrap().verify(&g));
        let t = parse_poly("x^3", &r).unwrap();
        assert!(ideal_membership_bounded(&t, &g).unwrap().is_none());
    }

    #[test]
    fn inhomogeneous_rejected() {
        let r = WeightSystem::standard(["x", "y"]).unwrap();
        let g = vec![r.var("x").unwrap()];
        let t = parse_poly("x + x^2", &r).unwrap();
        assert!(matches!(ideal_membership_bounded(&t, &g), Err(Error::Inhomogeneous(_))));
    }
}
