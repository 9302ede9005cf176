use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

use super::{Monomial, Ring, WeightSystem};

/// Variable name to replacement polynomial.
pub type Bindings = BTreeMap<String, Poly>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedDegree {
    pub degree: u32,
    pub homogeneous: bool,
}

/// Sparse polynomial with rational coefficients over a [`WeightSystem`].
///
/// The term map never stores a zero coefficient, so structural equality is
/// mathematical equality. The arithmetic operators panic when the operands
/// belong to different rings; the `checked_*` methods report
/// [`Error::IncompatibleRings`] instead.
#[derive(Clone)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.len()), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.exponents().len(), ring.len(), "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Poly::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.len(), "exponent vector length mismatch");
            p.add_term(Monomial::new(e), c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient_of(&self, exponents: &[u32]) -> Rational {
        self.coefficient(&Monomial::new(exponents.to_vec()))
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ring.len()))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::IncompatibleRings)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let mut out = Poly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by a monomial with coefficient one.
    pub fn shift(&self, m: &Monomial) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Maximal weighted degree over the terms, and whether every term has it.
    pub fn weighted_degree(&self) -> Result<WeightedDegree> {
        let mut degrees = self.terms.keys().map(|m| self.ring.degree_of(m));
        let first = degrees.next().ok_or(Error::UndefinedDegree)?;
        let (mut lo, mut hi) = (first, first);
        for d in degrees {
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Ok(WeightedDegree { degree: hi, homogeneous: lo == hi })
    }

    /// True for the zero polynomial, or when every term has weighted degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| self.ring.degree_of(m) == d)
    }

    /// Sum of the terms of weighted degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        self.filter_terms(|m| self.ring.degree_of(m) == d)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn var_indices(&self, vars: &[&str]) -> Result<Vec<usize>> {
        vars.iter()
            .map(|v| self.ring.index_of(v).ok_or_else(|| Error::UnknownVariable(v.to_string())))
            .collect()
    }

    /// Smallest total (unweighted) degree in the listed variables among the
    /// terms; the local order at the origin when those are the coordinates.
    /// `None` for the zero polynomial.
    pub fn order_in(&self, vars: &[&str]) -> Result<Option<u32>> {
        let idx = self.var_indices(vars)?;
        Ok(self.terms.keys().map(|m| m.degree_in(&idx)).min())
    }

    /// Terms whose total degree in `vars` equals `k`.
    pub fn part_of_order(&self, vars: &[&str], k: u32) -> Result<Poly> {
        let idx = self.var_indices(vars)?;
        Ok(self.filter_terms(|m| m.degree_in(&idx) == k))
    }

    /// Expands as a polynomial in `vars` whose coefficients are polynomials in
    /// the remaining variables; keys are exponent vectors over `vars`.
    pub fn coefficients_in(&self, vars: &[&str]) -> Result<BTreeMap<Vec<u32>, Poly>> {
        let idx = self.var_indices(vars)?;
        let mut out: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = idx.iter().map(|&i| m.exponent(i)).collect();
            let mut rest = m.exponents().to_vec();
            for &i in &idx {
                rest[i] = 0;
            }
            out.entry(key)
                .or_insert_with(|| Poly::zero(&self.ring))
                .add_term(Monomial::new(rest), c.clone());
        }
        Ok(out)
    }

    /// Partial derivative with respect to the named variable.
    pub fn derivative(&self, var: &str) -> Result<Poly> {
        let i = self.var_indices(&[var])?[0];
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                let mut exps = m.exponents().to_vec();
                exps[i] -= 1;
                out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
            }
        }
        Ok(out)
    }

    /// Names of variables that occur with positive exponent.
    pub fn support_variables(&self) -> Vec<&str> {
        (0..self.ring.len())
            .filter(|&i| self.terms.keys().any(|m| m.exponent(i) > 0))
            .map(|i| self.ring.name(i))
            .collect()
    }

    /// Replaces each occurring variable by its binding, producing a
    /// polynomial over `target`.
    pub fn substitute(&self, bindings: &Bindings, target: &Ring) -> Result<Poly> {
        let mut images: Vec<Option<&Poly>> = Vec::with_capacity(self.ring.len());
        for name in self.ring.names() {
            match bindings.get(name) {
                Some(p) if !same_ring(p.ring(), target) => return Err(Error::IncompatibleRings),
                b => images.push(b),
            }
        }
        let mut powers: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = images[i]
                    .ok_or_else(|| Error::UnboundVariable(self.ring.name(i).to_string()))?;
                let p = powers.entry((i, e)).or_insert_with(|| image.pow(e));
                term = &term * &*p;
            }
            for (k, v) in term.terms {
                out.add_term(k, v);
            }
        }
        Ok(out)
    }

    /// Evaluates the listed variables at rational values, leaving the others.
    pub fn evaluate(&self, values: &[(&str, Rational)]) -> Result<Poly> {
        let mut assigned: Vec<Option<&Rational>> = vec![None; self.ring.len()];
        for (name, v) in values {
            let i = self.var_indices(&[name])?[0];
            assigned[i] = Some(v);
        }
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exponents().to_vec();
            for (i, a) in assigned.iter().enumerate() {
                if let Some(v) = a {
                    coeff *= num_traits::pow((*v).clone(), exps[i] as usize);
                    exps[i] = 0;
                }
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in a ring whose variable names include all
    /// occurring variables of this one.
    pub fn embed(&self, target: &Ring) -> Result<Poly> {
        let map: Vec<Option<usize>> =
            self.ring.names().iter().map(|n| target.index_of(n)).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.ring.name(i).into()))?;
                exps[j] = e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Renders a monomial of this ring as `x^2*y`.
    pub fn format_monomial(ring: &WeightSystem, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ring.name(i).to_string()
                } else {
                    format!("{}^{}", ring.name(i), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Poly {
    /// Canonical text form, highest graded-lex term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", rational::format(&a))?;
            } else if a.is_one() {
                write!(f, "{}", Poly::format_monomial(&self.ring, m))?;
            } else {
                write!(f, "{}*{}", rational::format(&a), Poly::format_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn xyz() -> Ring {
        WeightSystem::new([("x", 1), ("y", 1), ("z", 2)]).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let r = xyz();
        let x = r.var("x").unwrap();
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn binomial_square() {
        let r = xyz();
        let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
        let lhs = (&x + &y).pow(2);
        let rhs = &x * &x + (&x * &y).scale(&int(2)) + &y * &y;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplicative_identity() {
        let r = xyz();
        let (x, y, z) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("z").unwrap());
        let p = &x * &z - y.pow(3);
        assert_eq!(&p * &r.one(), p);
    }

    #[test]
    fn mismatched_rings() {
        let a = xyz();
        let b = WeightSystem::standard(["x", "y"]).unwrap();
        let err = a.var("x").unwrap().checked_add(&b.var("x").unwrap()).unwrap_err();
        assert_eq!(err, Error::IncompatibleRings);
    }

    #[test]
    fn degrees() {
        let r = xyz();
        let (x, y, z) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("z").unwrap());
        let a2 = &x * &z - y.pow(3);
        assert_eq!(a2.weighted_degree().unwrap(), WeightedDegree { degree: 3, homogeneous: true });

        let r2 = WeightSystem::new([("x", 1), ("z", 2)]).unwrap();
        let mixed = r2.var("x").unwrap() + r2.var("z").unwrap();
        assert_eq!(mixed.weighted_degree().unwrap(), WeightedDegree { degree: 2, homogeneous: false });

        assert_eq!(
            r.constant(int(5)).weighted_degree().unwrap(),
            WeightedDegree { degree: 0, homogeneous: true }
        );
        assert_eq!(r.zero().weighted_degree().unwrap_err(), Error::UndefinedDegree);
    }

    #[test]
    fn orbifold_parametrisation_kills_a2_relation() {
        let r = WeightSystem::standard(["x", "y", "z"]).unwrap();
        let (x, y, z) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("z").unwrap());
        let ab = WeightSystem::standard(["alpha", "beta"]).unwrap();
        let (al, be) = (ab.var("alpha").unwrap(), ab.var("beta").unwrap());
        let b: Bindings = [
            ("x".to_string(), al.pow(3)),
            ("y".to_string(), &al * &be),
            ("z".to_string(), be.pow(3)),
        ]
        .into();
        let rel = &x * &z - y.pow(3);
        assert!(rel.substitute(&b, &ab).unwrap().is_zero());
        assert_eq!(y.pow(4).substitute(&b, &ab).unwrap(), (&al * &be).pow(4));
    }

    #[test]
    fn identity_binding_and_unbound() {
        let r = xyz();
        let x = r.var("x").unwrap();
        let b: Bindings = [("x".to_string(), x.clone())].into();
        assert_eq!(x.substitute(&b, &r).unwrap(), x);
        let y = r.var("y").unwrap();
        assert_eq!(y.substitute(&b, &r).unwrap_err(), Error::UnboundVariable("y".into()));
    }

    #[test]
    fn display_canonical() {
        let r = xyz();
        let (x, y, z) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("z").unwrap());
        let p = &x * &z - y.pow(3);
        assert_eq!(p.to_string(), "-y^3 + x*z");
        let q = x.scale(&ratio(2, 3)) - r.constant(int(1));
        assert_eq!(q.to_string(), "2/3*x - 1");
        assert_eq!(r.zero().to_string(), "0");
    }

    #[test]
    fn local_order_and_coefficients() {
        let r = WeightSystem::standard(["x", "y", "l"]).unwrap();
        let (x, y, l) = (r.var("x").unwrap(), r.var("y").unwrap(), r.var("l").unwrap());
        let p = &l * &x + l.pow(3) * &y * &y + &x * &y;
        assert_eq!(p.order_in(&["x", "y"]).unwrap(), Some(1));
        let co = p.coefficients_in(&["l"]).unwrap();
        assert_eq!(co[&vec![1]], x);
        assert_eq!(co[&vec![0]], &x * &y);
        assert_eq!(p.derivative("l").unwrap(), &x + (l.pow(2) * &y * &y).scale(&int(3)));
    }
}
