//! Sparse multivariate polynomials over the rationals with weighted gradings,
//! plus dense univariate polynomials.

mod monomial;
mod multivariate;
mod ring;
mod univariate;

pub use monomial::Monomial;
pub use multivariate::{Bindings, Poly, WeightedDegree};
pub use ring::{Ring, WeightSystem};
pub use univariate::UniPoly;

/// Number of exponent vectors `e` with `sum e_i * w_i == degree`.
///
/// Counted by exhaustive recursion over the exponents, so it doubles as an
/// independent check of series expansions.
pub fn count_monomials(weights: &[u32], degree: u32) -> u64 {
    fn go(weights: &[u32], degree: u32) -> u64 {
        match weights.split_first() {
            None => u64::from(degree == 0),
            Some((&w, rest)) => (0..=degree / w).map(|k| go(rest, degree - k * w)).sum(),
        }
    }
    go(weights, degree)
}

/// All monomials of weighted degree `degree` in `ring`, in ascending
/// graded-lex order.
pub fn monomials_of_degree(ring: &WeightSystem, degree: u32) -> Vec<Monomial> {
    fn go(weights: &[u32], degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match weights.split_first() {
            None => {
                if degree == 0 {
                    out.push(Monomial::new(prefix.clone()));
                }
            }
            Some((&w, rest)) => {
                for k in 0..=degree / w {
                    prefix.push(k);
                    go(rest, degree - k * w, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(ring.weights(), degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}
