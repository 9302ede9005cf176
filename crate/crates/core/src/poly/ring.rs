use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{Monomial, Poly};

/// Shared handle to a weight system; every [`Poly`] carries one.
pub type Ring = Arc<WeightSystem>;

/// Ordered, named variables with positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl WeightSystem {
    pub fn new<I, S>(vars: I) -> Result<Ring>
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (name, w) in vars {
            let name = name.into();
            if w == 0 {
                return Err(Error::InvalidWeights(format!("variable `{name}` has weight 0")));
            }
            if name.is_empty() {
                return Err(Error::InvalidWeights("empty variable name".into()));
            }
            if names.contains(&name) {
                return Err(Error::InvalidWeights(format!("variable `{name}` declared twice")));
            }
            names.push(name);
            weights.push(w);
        }
        Ok(Arc::new(WeightSystem { names, weights }))
    }

    /// All variables with weight one.
    pub fn standard<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ring> {
        Self::new(names.into_iter().map(|n| (n, 1)))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree_of(&self, m: &Monomial) -> u32 {
        m.exponents().iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<Poly> {
        let i = self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Poly::monomial(self, Monomial::unit(self.len(), i, 1), Rational::from_integer(1.into())))
    }

    pub fn zero(self: &Arc<Self>) -> Poly {
        Poly::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> Poly {
        Poly::constant(self, Rational::from_integer(1.into()))
    }

    pub fn constant(self: &Arc<Self>, c: Rational) -> Poly {
        Poly::constant(self, c)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.names.iter().zip(&self.weights).map(|(n, w)| format!("{n}:{w}")).collect();
        write!(f, "{}", parts.join(","))
    }
}
