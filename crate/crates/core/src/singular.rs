//! Cyclic quotient singularities `1/r(a,b,c)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The quotient of affine 3-space by `mu_r` acting with weights `(a,b,c)`.
/// Weights are stored reduced mod `r`; `r == 1` is a smooth point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicQuotient {
    r: u32,
    weights: [u32; 3],
}

impl CyclicQuotient {
    pub fn new(r: u32, weights: [i64; 3]) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("cyclic quotient order must be positive".into()));
        }
        let w = weights.map(|x| x.rem_euclid(i64::from(r)) as u32);
        Ok(CyclicQuotient { r, weights: w })
    }

    pub fn smooth() -> Self {
        CyclicQuotient { r: 1, weights: [0; 3] }
    }

    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn weights(&self) -> [u32; 3] {
        self.weights
    }

    /// Isolated iff every weight is coprime to the order.
    pub fn is_isolated(&self) -> bool {
        self.r == 1 || self.weights.iter().all(|w| w.gcd(&self.r) == 1)
    }

    fn require_isolated(&self) -> Result<()> {
        if self.is_isolated() {
            Ok(())
        } else {
            Err(Error::NotIsolated(self.to_string()))
        }
    }

    /// Reid-Tai criterion: for each `k = 1..r-1`,
    /// `sum_i frac(k*w_i/r) > 1`.
    pub fn is_terminal(&self) -> Result<bool> {
        self.require_isolated()?;
        let r = u64::from(self.r);
        Ok((1..r).all(|k| {
            let s: u64 = self.weights.iter().map(|&w| k * u64::from(w) % r).sum();
            s > r
        }))
    }

    /// Lexicographically least sorted weight triple over all unit rescalings.
    pub fn canonical_form(&self) -> Result<CyclicQuotient> {
        self.require_isolated()?;
        if self.r == 1 {
            return Ok(Self::smooth());
        }
        let r = u64::from(self.r);
        let best = (1..r)
            .filter(|k| k.gcd(&r) == 1)
            .map(|k| {
                let mut w = self.weights.map(|x| (k * u64::from(x) % r) as u32);
                w.sort_unstable();
                w
            })
            .min()
            .expect("r > 1 has at least one unit");
        Ok(CyclicQuotient { r: self.r, weights: best })
    }

    pub fn is_equivalent(&self, other: &CyclicQuotient) -> Result<bool> {
        Ok(self.r == other.r && self.canonical_form()? == other.canonical_form()?)
    }

    /// Member of the terminal family `1/r(1,a,-a)` up to rescaling and
    /// permutation: some pair of weights sums to zero mod `r`.
    pub fn is_in_terminal_family(&self) -> bool {
        if self.r == 1 {
            return true;
        }
        let w = self.weights;
        self.is_isolated()
            && [(0, 1), (0, 2), (1, 2)].iter().any(|&(i, j)| (w[i] + w[j]) % self.r == 0)
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.weights;
        write!(f, "1/{}({},{},{})", self.r, a, b, c)
    }
}

impl Serialize for CyclicQuotient {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for CyclicQuotient {
    type Err = Error;

    /// Parses `1/r(a,b,c)`; whitespace is not allowed.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("expected `1/r(a,b,c)`, got `{s}`"));
        let rest = s.strip_prefix("1/").ok_or_else(bad)?;
        let (r, rest) = rest.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let r: u32 = r.parse().map_err(|_| bad())?;
        let parts: Vec<i64> = inner
            .split(',')
            .map(|p| p.parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let w: [i64; 3] = parts.try_into().map_err(|_| bad())?;
        CyclicQuotient::new(r, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cq(s: &str) -> CyclicQuotient {
        s.parse().unwrap()
    }

    #[test]
    fn isolation() {
        assert!(cq("1/5(1,2,4)").is_isolated());
        assert!(!cq("1/4(1,2,3)").is_isolated());
        assert!(CyclicQuotient::smooth().is_isolated());
    }

    #[test]
    fn reid_tai_examples() {
        assert!(cq("1/3(1,2,2)").is_terminal().unwrap());
        assert!(cq("1/2(1,1,1)").is_terminal().unwrap());
        assert!(!cq("1/4(1,1,1)").is_terminal().unwrap());
        assert!(CyclicQuotient::smooth().is_terminal().unwrap());
        assert!(matches!(cq("1/4(1,2,3)").is_terminal(), Err(Error::NotIsolated(_))));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(
            cq("1/5(1,3,2)").canonical_form().unwrap(),
            cq("1/5(1,2,4)").canonical_form().unwrap()
        );
        assert_eq!(
            cq("1/7(1,4,3)").canonical_form().unwrap(),
            cq("1/7(1,2,6)").canonical_form().unwrap()
        );
        assert_eq!(cq("1/2(1,1,1)").canonical_form().unwrap(), cq("1/2(1,1,1)"));
        assert!(cq("1/6(1,2,3)").canonical_form().is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["1/5(1,2,4)", "1/7(1,2,6)", "1/1(0,0,0)"] {
            assert_eq!(cq(s).to_string(), s);
        }
        assert_eq!(cq("1/5(6,-1,2)").to_string(), "1/5(1,4,2)");
        assert!("1/5(1,2)".parse::<CyclicQuotient>().is_err());
        assert!("2/5(1,2,3)".parse::<CyclicQuotient>().is_err());
        assert!("1/0(1,2,3)".parse::<CyclicQuotient>().is_err());
    }

    #[test]
    fn terminal_family_small_r() {
        let mut hits = Vec::new();
        for r in 2..=10i64 {
            for a in 1..=10i64 {
                let n = (r * a - 1) as u32;
                let ok = n == 1 || CyclicQuotient::new(n, [1, 1, a]).unwrap().is_terminal().unwrap();
                if ok {
                    hits.push((r, a));
                }
            }
        }
        assert_eq!(hits, vec![(2, 1), (2, 2), (3, 1)]);
    }
}
