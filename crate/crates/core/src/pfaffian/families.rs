use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Poly, Ring, WeightSystem};
use crate::rational::{self, Rational};

use super::skew::{DegreePattern, SkewMatrix5};
use super::{ambient_ring, var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FamilyKind {
    Tom,
    Jerry,
    /// Tom data that also has Jer_34 format.
    TomJerry,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [FamilyKind::Tom, FamilyKind::Jerry, FamilyKind::TomJerry];
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Tom => "tom",
            FamilyKind::Jerry => "jerry",
            FamilyKind::TomJerry => "tj",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tom" | "t" => Ok(FamilyKind::Tom),
            "jerry" | "j" => Ok(FamilyKind::Jerry),
            "tj" | "tomjerry" => Ok(FamilyKind::TomJerry),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}` (tom, jerry or tj)"))),
        }
    }
}

pub fn degree_pattern() -> DegreePattern {
    [vec![4, 3, 3, 2], vec![3, 3, 2], vec![2, 1], vec![1]]
}

/// A coefficient must be homogeneous of a fixed degree in a fixed set of
/// variables (zero is allowed unless stated).
fn check(name: &str, p: &Poly, degree: u32, vars: &[&str], nonzero: bool) -> Result<()> {
    let fail = |reason: String| Err(Error::Coefficient { name: name.to_string(), reason });
    if p.ring() != &ambient_ring() {
        return fail("not over the ambient ring".into());
    }
    if nonzero && p.is_zero() {
        return fail("must be nonzero".into());
    }
    if !p.is_homogeneous_of(degree) {
        return fail(format!("must be homogeneous of degree {degree}"));
    }
    if let Some(v) = p.support_variables().into_iter().find(|v| !vars.contains(v)) {
        return fail(format!("involves {v}; allowed variables are {}", vars.join(",")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct TomCoefficients {
    /// degree 3 in u,x,y
    pub a_prime: Poly,
    /// degree 3 in u,y
    pub c_prime: Poly,
    /// degree 2 in u,y
    pub d: Poly,
    /// degree 1 in u,y
    pub e: Poly,
    /// nonzero constant
    pub f: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JerryCoefficients {
    /// degree 2 in u,x,y
    pub a: Poly,
    pub b: Poly,
    /// degree 2 in u,y
    pub c: Poly,
    pub d: Poly,
    /// degree 2 in u,y,z
    pub e_prime: Poly,
}

/// The intersection family: Tom with `a' = a x + b y`, `c' = c y`.
#[derive(Debug, Clone, PartialEq)]
pub struct TomJerryCoefficients {
    /// degree 2 in u,x,y
    pub a: Poly,
    pub b: Poly,
    /// degree 2 in u,y
    pub c: Poly,
    pub d: Poly,
    /// degree 1 in u,y
    pub e: Poly,
    pub f: Rational,
}

impl TomCoefficients {
    pub fn validate(&self) -> Result<()> {
        check("a'", &self.a_prime, 3, &["u", "x", "y"], false)?;
        check("c'", &self.c_prime, 3, &["u", "y"], false)?;
        check("d", &self.d, 2, &["u", "y"], false)?;
        check("e", &self.e, 1, &["u", "y"], false)?;
        if self.f == Rational::from_integer(0.into()) {
            return Err(Error::Coefficient { name: "f".into(), reason: "must be nonzero".into() });
        }
        Ok(())
    }
}

impl JerryCoefficients {
    pub fn validate(&self) -> Result<()> {
        check("a", &self.a, 2, &["u", "x", "y"], false)?;
        check("b", &self.b, 2, &["u", "x", "y"], false)?;
        check("c", &self.c, 2, &["u", "y"], false)?;
        check("d", &self.d, 2, &["u", "y"], false)?;
        check("e'", &self.e_prime, 2, &["u", "y", "z"], true)
    }
}

impl TomJerryCoefficients {
    pub fn to_tom(&self) -> Result<TomCoefficients> {
        check("a", &self.a, 2, &["u", "x", "y"], false)?;
        check("b", &self.b, 2, &["u", "x", "y"], false)?;
        check("c", &self.c, 2, &["u", "y"], false)?;
        let (x, y) = (var("x"), var("y"));
        Ok(TomCoefficients {
            a_prime: &self.a * &x + &self.b * &y,
            c_prime: &self.c * &y,
            d: self.d.clone(),
            e: self.e.clone(),
            f: self.f.clone(),
        })
    }
}

/// A point of one of the families: the skew matrix, the four unprojection
/// equations `g_x, g_y, g_z, g_nu` (with `v * theta = g_v`), and the data of
/// the curve, `a', c', d', e'`.
#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    pub kind: FamilyKind,
    pub matrix: SkewMatrix5,
    pub unprojection: [Poly; 4],
    pub curve_data: [Poly; 4],
}

pub const UNPROJECTION_VARIABLES: [&str; 4] = ["x", "y", "z", "nu"];

fn matrix(ring: &Ring, m14: Poly, m15: Poly, m23: Poly, m24: Poly) -> Result<SkewMatrix5> {
    let v = |n: &str| ring.var(n).expect("ambient variable");
    SkewMatrix5::new([v("zeta"), v("nu"), m14, m15, m23, m24, v("xi"), v("z"), v("y"), v("x")])?
        .with_pattern(degree_pattern())
}

pub fn build_tom_family(c: &TomCoefficients) -> Result<Family> {
    c.validate()?;
    let ring = ambient_ring();
    let (y, z, xi, nu, zeta) = (var("y"), var("z"), var("xi"), var("nu"), var("zeta"));
    let f = ring.constant(c.f.clone());
    let (a, e, d) = (&c.a_prime, &c.e, &c.d);
    let xd = &xi + d;
    let nc = &nu + &c.c_prime;
    let ey_fz = e * &y + &f * &z;
    let m = matrix(&ring, &y * &xd, -&ey_fz, -a, nc.clone())?;
    let zae = &zeta + &(a * e);
    let g = [
        &xi * &xi * &xd + e * &xi * &nc + &f * &nc * &nc,
        &xi * &zeta - a * &f * &nc,
        &nc * &zae + a * &xi * &xd,
        &zeta * &zae + a * a * &f * &xd,
    ];
    let curve = [a.clone(), c.c_prime.clone(), d * &y, ey_fz];
    Ok(Family { kind: FamilyKind::Tom, matrix: m, unprojection: g, curve_data: curve })
}

pub fn build_jerry_family(c: &JerryCoefficients) -> Result<Family> {
    c.validate()?;
    let ring = ambient_ring();
    let (x, y, xi, nu, zeta) = (var("x"), var("y"), var("xi"), var("nu"), var("zeta"));
    let (a, b, cc, d, ep) = (&c.a, &c.b, &c.c, &c.d, &c.e_prime);
    let xd = &xi + d;
    let axby = a * &x + b * &y;
    let m = matrix(&ring, &y * &xd, -ep, -&axby, &nu + &(cc * &y))?;
    let zbe = &zeta + &(b * ep);
    let g = [
        &xi * &xi * &xi + d * &xi * &xi + cc * ep * &xi + ep * &zbe,
        &xi * &zeta - a * ep * ep,
        &nu * &zbe + &axby * &xi * &xd + cc * &xi * &nu + a * ep * &y * &xd,
        &zeta * &zbe + a * ep * &(&xi * &xi + d * &xi + cc * ep),
    ];
    let curve = [axby, cc * &y, d * &y, ep.clone()];
    Ok(Family { kind: FamilyKind::Jerry, matrix: m, unprojection: g, curve_data: curve })
}

pub fn build_tom_jerry_family(c: &TomJerryCoefficients) -> Result<Family> {
    let mut fam = build_tom_family(&c.to_tom()?)?;
    fam.kind = FamilyKind::TomJerry;
    Ok(fam)
}

/// A nonzero rational `p/q` with `|p| <= 9`, `1 <= q <= 4`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let mut p = rng.gen_range(1..=9i64);
    if rng.gen_bool(0.5) {
        p = -p;
    }
    rational::ratio(p, rng.gen_range(1..=4))
}

/// Homogeneous of `degree` in `vars`, every monomial with a nonzero
/// random coefficient.
pub fn random_coefficient<R: Rng + ?Sized>(rng: &mut R, degree: u32, vars: &[&str]) -> Poly {
    let ambient = ambient_ring();
    let sub = WeightSystem::new(vars.iter().map(|v| {
        let i = ambient.index_of(v).expect("ambient variable");
        (v.to_string(), ambient.weights()[i])
    }))
    .expect("valid weights");
    let mut out = Poly::zero(&ambient);
    for m in monomials_of_degree(&sub, degree) {
        let mut t = ambient.constant(random_rational(rng));
        for (k, v) in vars.iter().enumerate() {
            t = &t * &var(v).pow(m.exponent(k));
        }
        out = &out + &t;
    }
    out
}

impl TomCoefficients {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        TomCoefficients {
            a_prime: random_coefficient(rng, 3, &["u", "x", "y"]),
            c_prime: random_coefficient(rng, 3, &["u", "y"]),
            d: random_coefficient(rng, 2, &["u", "y"]),
            e: random_coefficient(rng, 1, &["u", "y"]),
            f: random_rational(rng),
        }
    }
}

impl JerryCoefficients {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        JerryCoefficients {
            a: random_coefficient(rng, 2, &["u", "x", "y"]),
            b: random_coefficient(rng, 2, &["u", "x", "y"]),
            c: random_coefficient(rng, 2, &["u", "y"]),
            d: random_coefficient(rng, 2, &["u", "y"]),
            e_prime: random_coefficient(rng, 2, &["u", "y", "z"]),
        }
    }
}

impl TomJerryCoefficients {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        TomJerryCoefficients {
            a: random_coefficient(rng, 2, &["u", "x", "y"]),
            b: random_coefficient(rng, 2, &["u", "x", "y"]),
            c: random_coefficient(rng, 2, &["u", "y"]),
            d: random_coefficient(rng, 2, &["u", "y"]),
            e: random_coefficient(rng, 1, &["u", "y"]),
            f: random_rational(rng),
        }
    }
}

pub fn random_family<R: Rng + ?Sized>(kind: FamilyKind, rng: &mut R) -> Result<Family> {
    match kind {
        FamilyKind::Tom => build_tom_family(&TomCoefficients::random(rng)),
        FamilyKind::Jerry => build_jerry_family(&JerryCoefficients::random(rng)),
        FamilyKind::TomJerry => build_tom_jerry_family(&TomJerryCoefficients::random(rng)),
    }
}
