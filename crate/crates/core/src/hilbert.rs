//! Hilbert series as `numerator / prod_k (1 - t^k)`.
//!
//! Series are never brought to a reduced rational normal form: equality is
//! tested by cross-multiplying numerators against the other denominator.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::ser::{Error as _, SerializeStruct};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;

#[derive(Clone)]
pub struct HilbertSeries {
    numerator: UniPoly,
    /// Sorted multiset of exponents `k`, one per factor `(1 - t^k)`.
    denominator: Vec<u32>,
}

fn product_of_factors(factors: &[u32]) -> UniPoly {
    factors
        .iter()
        .fold(UniPoly::one(), |acc, &k| &acc * &UniPoly::one_minus_power(k as usize))
}

fn validate_weights(weights: &[u32]) -> Result<()> {
    if weights.is_empty() {
        return Err(Error::InvalidArgument("weight list is empty".into()));
    }
    if weights.contains(&0) {
        return Err(Error::InvalidArgument("weights must be positive".into()));
    }
    Ok(())
}

impl HilbertSeries {
    pub fn new(numerator: UniPoly, mut denominator: Vec<u32>) -> Result<Self> {
        if denominator.contains(&0) {
            return Err(Error::InvalidArgument("denominator factor (1 - t^0) is zero".into()));
        }
        denominator.sort_unstable();
        Ok(HilbertSeries { numerator, denominator })
    }

    /// `1 / prod (1 - t^{w_i})`.
    pub fn of_wps(weights: &[u32]) -> Result<Self> {
        validate_weights(weights)?;
        Self::new(UniPoly::one(), weights.to_vec())
    }

    /// `(1 - t^d) / prod (1 - t^{w_i})`; `d == 0` gives the zero series.
    pub fn of_hypersurface(weights: &[u32], d: u32) -> Result<Self> {
        validate_weights(weights)?;
        Self::new(UniPoly::one_minus_power(d as usize), weights.to_vec())
    }

    /// `(1 - t^{ra}) / ((1-t)^2 (1-t^a) (1-t^{ra-1}) (1-t^e))`.
    pub fn lemma1(r: u32, a: u32, e: u32) -> Result<Self> {
        if r < 2 || a < 1 || e < 1 {
            return Err(Error::InvalidArgument(format!(
                "need r >= 2, a >= 1, e >= 1; got ({r},{a},{e})"
            )));
        }
        Self::new(UniPoly::one_minus_power((r * a) as usize), vec![1, 1, a, r * a - 1, e])
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Sum over the least common multiset of the two denominators.
    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let count = |d: &[u32]| {
            let mut m = BTreeMap::new();
            for &k in d {
                *m.entry(k).or_insert(0usize) += 1;
            }
            m
        };
        let (ca, cb) = (count(&self.denominator), count(&other.denominator));
        let mut common = Vec::new();
        let mut extra_a = Vec::new();
        let mut extra_b = Vec::new();
        let keys: std::collections::BTreeSet<u32> = ca.keys().chain(cb.keys()).copied().collect();
        for k in keys {
            let (na, nb) = (ca.get(&k).copied().unwrap_or(0), cb.get(&k).copied().unwrap_or(0));
            let n = na.max(nb);
            common.extend(std::iter::repeat(k).take(n));
            extra_a.extend(std::iter::repeat(k).take(n - na));
            extra_b.extend(std::iter::repeat(k).take(n - nb));
        }
        let num = &(&self.numerator * &product_of_factors(&extra_a))
            + &(&other.numerator * &product_of_factors(&extra_b));
        HilbertSeries { numerator: num, denominator: common }
    }

    /// Cross-multiplied numerator identity.
    pub fn equals(&self, other: &HilbertSeries) -> bool {
        &self.numerator * &product_of_factors(&other.denominator)
            == &other.numerator * &product_of_factors(&self.denominator)
    }

    /// Power series coefficients of `t^0..=t^n`.
    pub fn expand(&self, n: i64) -> Result<Vec<Rational>> {
        let n: usize = n
            .try_into()
            .map_err(|_| Error::InvalidArgument(format!("expansion length {n} is negative")))?;
        Ok(self.numerator.series_over(&self.denominator, n))
    }

    /// The numerator of this series over `prod_{k in target} (1 - t^k)`.
    ///
    /// Fails with [`Error::InexactRewrite`] when the result is not a polynomial.
    pub fn numerator_wrt(&self, target: &[u32]) -> Result<UniPoly> {
        if target.contains(&0) {
            return Err(Error::InvalidArgument("denominator factor (1 - t^0) is zero".into()));
        }
        let full = &self.numerator * &product_of_factors(target);
        let (q, r) = full.div_rem(&product_of_factors(&self.denominator));
        match r.degree() {
            None => Ok(q),
            Some(degree) => Err(Error::InexactRewrite { degree }),
        }
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &k in &self.denominator {
            match groups.last_mut() {
                Some((g, n)) if *g == k => *n += 1,
                _ => groups.push((k, 1)),
            }
        }
        let factors: Vec<String> = groups
            .iter()
            .map(|&(k, n)| {
                let base = if k == 1 { "(1-t)".to_string() } else { format!("(1-t^{k})") };
                if n == 1 {
                    base
                } else {
                    format!("{base}^{n}")
                }
            })
            .collect();
        if factors.is_empty() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, factors.join("*"))
        }
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HilbertSeries({self})")
    }
}

/// JSON form `{numerator: [ints], denominator: [ints]}`.
impl Serialize for HilbertSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let num = integer_coefficients(&self.numerator)
            .ok_or_else(|| S::Error::custom("numerator has non-integer coefficients"))?;
        let mut st = s.serialize_struct("HilbertSeries", 2)?;
        st.serialize_field("numerator", &num)?;
        st.serialize_field("denominator", &self.denominator)?;
        st.end()
    }
}

/// Coefficients as machine integers, if they all are.
pub fn integer_coefficients(p: &UniPoly) -> Option<Vec<i64>> {
    p.coeffs()
        .iter()
        .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
        .collect()
}

/// The series `(1-t+t^2)/(1-t)^4 + (t^2+t^4)/((1-t)^3 (1-t^5))` of the
/// index 2, degree 7/5 Fano with one `1/5(1,2,4)` point.
pub fn ice_cream_a3() -> HilbertSeries {
    let smooth = HilbertSeries::new(UniPoly::from_ints(&[1, -1, 1]), vec![1, 1, 1, 1]).unwrap();
    let orbifold =
        HilbertSeries::new(UniPoly::from_ints(&[0, 0, 1, 0, 1]), vec![1, 1, 1, 5]).unwrap();
    smooth.add(&orbifold)
}

/// Denominator `(1-t)^3 (1-t^2)^2 (1-t^3) (1-t^4) (1-t^5)` of the codimension
/// 4 model in `P(1^3,2^2,3,4,5)`.
pub const A3_AMBIENT: [u32; 8] = [1, 1, 1, 2, 2, 3, 4, 5];

/// Numerator of a Gorenstein codimension 4 ring from its relation and
/// first-syzygy degrees: `1 - sum t^d + sum t^s - sum t^(top-d) + t^top`.
pub fn gorenstein_codim4_numerator(relations: &[u32], syzygies: &[u32], top: u32) -> UniPoly {
    let mut coeffs = vec![0i64; top as usize + 1];
    coeffs[0] += 1;
    coeffs[top as usize] += 1;
    for &d in relations {
        coeffs[d as usize] -= 1;
        coeffs[(top - d) as usize] -= 1;
    }
    for &s in syzygies {
        coeffs[s as usize] += 1;
    }
    UniPoly::from_ints(&coeffs)
}

/// `t^n * p(1/t) == p`.
pub fn is_palindromic(p: &UniPoly, n: usize) -> bool {
    p.degree().is_none_or(|d| d <= n) && p.reversed(n) == *p
}

/// True when every coefficient of `p` is zero beyond `t^n`.
pub fn vanishes_above(p: &[Rational], n: usize) -> bool {
    p.iter().skip(n + 1).all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::count_monomials;
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn p3_expansion() {
        let h = HilbertSeries::of_wps(&[1, 1, 1, 1]).unwrap();
        assert_eq!(h.expand(3).unwrap(), ints(&[1, 4, 10, 20]));
        assert!(HilbertSeries::of_wps(&[]).is_err());
    }

    #[test]
    fn wps_expansion_counts_monomials() {
        let h = HilbertSeries::of_wps(&[1, 1, 1, 2]).unwrap();
        assert_eq!(h.expand(4).unwrap(), ints(&[1, 3, 7, 13, 22]));
        let h = HilbertSeries::of_wps(&[1, 3, 2]).unwrap();
        assert_eq!(h.expand(14).unwrap()[14], int(count_monomials(&[1, 3, 2], 14) as i64));
        assert_eq!(h.expand(14).unwrap()[14], int(24));
    }

    #[test]
    fn hypersurface_by_inclusion_exclusion() {
        let w = [1, 1, 2, 2, 3];
        let h = HilbertSeries::of_hypersurface(&w, 4).unwrap();
        let got = h.expand(12).unwrap();
        for (k, c) in got.iter().enumerate() {
            let k = k as u32;
            let below = if k >= 4 { count_monomials(&w, k - 4) } else { 0 };
            assert_eq!(*c, int((count_monomials(&w, k) - below) as i64));
        }
        assert_eq!(&got[..5], &ints(&[1, 2, 5, 9, 15])[..]);
        assert!(HilbertSeries::of_hypersurface(&w, 0).unwrap().is_zero());
    }

    #[test]
    fn quadric_in_p4() {
        let h = HilbertSeries::of_hypersurface(&[1; 5], 2).unwrap();
        assert_eq!(h.expand(3).unwrap(), ints(&[1, 5, 14, 30]));
    }

    #[test]
    fn embedding_series_identities() {
        let h = HilbertSeries::lemma1(2, 1, 2).unwrap();
        assert!(h.equals(&HilbertSeries::of_wps(&[1, 1, 1, 1]).unwrap()));
        let h = HilbertSeries::lemma1(3, 1, 3).unwrap();
        assert!(h.equals(&HilbertSeries::of_wps(&[1, 1, 1, 2]).unwrap()));
        let h = HilbertSeries::lemma1(3, 1, 1).unwrap();
        assert!(h.equals(&HilbertSeries::of_hypersurface(&[1, 1, 1, 2, 1], 3).unwrap()));
        assert!(!h.equals(&HilbertSeries::of_wps(&[1, 1, 1, 2]).unwrap()));
        assert!(HilbertSeries::lemma1(1, 1, 1).is_err());
    }

    #[test]
    fn telescoping_rewrite() {
        let h = HilbertSeries::of_wps(&[1]).unwrap();
        assert_eq!(h.numerator_wrt(&[2]).unwrap(), UniPoly::from_ints(&[1, 1]));
        let h = HilbertSeries::of_wps(&[2]).unwrap();
        assert!(matches!(h.numerator_wrt(&[3]), Err(Error::InexactRewrite { .. })));
    }

    #[test]
    fn ice_cream_numerator() {
        let h = ice_cream_a3();
        let n = integer_coefficients(&h.numerator_wrt(&A3_AMBIENT).unwrap()).unwrap();
        assert_eq!(n, vec![1, 0, 0, 0, -2, -2, -2, 2, 3, 3, 2, -2, -2, -2, 0, 0, 0, 1]);
        let int = |k: i64| Rational::from_integer(k.into());
        assert_eq!(h.expand(3).unwrap(), [1, 3, 8, 17].map(int).to_vec());
        // third differences average to B^3 = 7/5 over a period of 5
        let c = h.expand(100).unwrap();
        let d3 = |i: usize| &c[i] - int(3) * &c[i - 1] + int(3) * &c[i - 2] - &c[i - 3];
        let avg: Rational = (96..=100).map(d3).sum::<Rational>() / int(5);
        assert_eq!(avg, Rational::new(7.into(), 5.into()));
    }

    #[test]
    fn negative_expansion_rejected() {
        assert!(HilbertSeries::of_wps(&[1]).unwrap().expand(-1).is_err());
    }

    #[test]
    fn display_and_json_shape() {
        let h = HilbertSeries::lemma1(3, 1, 1).unwrap();
        assert_eq!(h.to_string(), "(1 - t^3) / ((1-t)^4*(1-t^2))");
        let v = serde_json::to_value(&h).unwrap();
        assert_eq!(v["numerator"], serde_json::json!([1, 0, 0, -1]));
        assert_eq!(v["denominator"], serde_json::json!([1, 1, 1, 1, 2]));
    }
}
