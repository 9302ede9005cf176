use serde::Serialize;

use crate::error::{Error, Result};

use super::newton::LatticePoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AllowedMonomial {
    pub m: u32,
    pub n: u32,
    /// Largest degree of a coefficient of `alpha^m beta^n` in a curve of
    /// degree `d`.
    pub max_degree: u32,
}

/// Monomials an orbinate equation of a degree `d` curve may contain, when
/// `alpha`, `beta` have weights `1/r` and `(ra-1)/r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBoundSpec {
    pub r: u32,
    pub a: u32,
    pub d: u32,
    pub allowed: Vec<AllowedMonomial>,
}

pub fn degree_bound_spec(r: u32, a: u32, d: u32) -> Result<DegreeBoundSpec> {
    if r < 2 || a < 1 {
        return Err(Error::InvalidArgument(format!("need r >= 2 and a >= 1, got r={r}, a={a}")));
    }
    if d % r != r - 1 {
        return Err(Error::InvalidArgument(format!("degree {d} is not -1 mod {r}")));
    }
    let wb = r * a - 1;
    let mut allowed = Vec::new();
    for n in 0..=d / wb {
        for m in 0..=d - n * wb {
            if (m + 1 + r * n - n) % r == 0 {
                allowed.push(AllowedMonomial { m, n, max_degree: (d - m - n * wb) / r });
            }
        }
    }
    Ok(DegreeBoundSpec { r, a, d, allowed })
}

impl DegreeBoundSpec {
    pub fn max_degree(&self, p: LatticePoint) -> Option<u32> {
        self.allowed.iter().find(|x| x.m == p.m && x.n == p.n).map(|x| x.max_degree)
    }

    /// Coefficient degrees on a prescribed support, in order; `None` when
    /// some monomial is not allowed (the format is infeasible in degree `d`).
    pub fn restrict(&self, support: &[LatticePoint]) -> Option<Vec<u32>> {
        support.iter().map(|p| self.max_degree(*p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::OrbifoldFormat;

    fn on(f: OrbifoldFormat, r: u32, a: u32, d: u32) -> Option<Vec<u32>> {
        degree_bound_spec(r, a, d).unwrap().restrict(&f.support())
    }

    #[test]
    fn coefficient_degree_lists() {
        use OrbifoldFormat::*;
        assert_eq!(on(G3, 2, 1, 7), Some(vec![2, 2, 2, 2]));
        assert_eq!(on(G3, 2, 1, 5), Some(vec![1, 1, 1, 1]));
        assert_eq!(on(G13, 3, 1, 14), Some(vec![3, 3, 2, 1, 0]));
        assert_eq!(on(G40, 3, 1, 14), Some(vec![2, 2, 2, 2, 2]));
        assert_eq!(on(G32, 3, 1, 14), Some(vec![2, 2, 2, 2, 1, 0]));
        assert_eq!(on(G3, 2, 2, 9), Some(vec![3, 2, 1, 0]));
        assert_eq!(on(G40, 3, 1, 8), Some(vec![0, 0, 0, 0, 0]));
        assert_eq!(on(G13, 3, 1, 8), None);
        assert_eq!(on(G500, 4, 1, 15), Some(vec![0; 6]));
    }

    #[test]
    fn every_allowed_monomial_is_admissible() {
        let s = degree_bound_spec(3, 1, 14).unwrap();
        for x in &s.allowed {
            assert!(x.m + 2 * x.n <= 14);
            assert_eq!((x.m as i64 - x.n as i64 + 1).rem_euclid(3), 0);
            assert_eq!(x.m + 2 * x.n + 3 * x.max_degree, 14);
        }
        // brute force count
        let brute = (0..=14u32)
            .flat_map(|m| (0..=7u32).map(move |n| (m, n)))
            .filter(|&(m, n)| m + 2 * n <= 14 && (m as i64 - n as i64 + 1).rem_euclid(3) == 0)
            .count();
        assert_eq!(s.allowed.len(), brute);
    }

    #[test]
    fn bad_degree() {
        assert!(degree_bound_spec(3, 1, 13).is_err());
        assert!(degree_bound_spec(1, 1, 0).is_err());
    }
}
