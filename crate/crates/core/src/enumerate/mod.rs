//! Embeddings `E = P(1,r,ra-1) ⊂ X` with `E ∈ |eA|`: the numerical cases,
//! their link invariants, and the reference tables.

mod links;
mod moduli;
mod registry;
mod render;
mod rules;

pub use links::{degree_of_x, feasible_formats, link_result, links, LinkResult};
pub use moduli::{moduli_dimension, ModuliFamily, ModuliReport};
pub use registry::{registry_check, Diff, Echo, Registry, RegistryReport, Table1Row, Table2Row, Table3Row};
pub use render::{render_table, TableFormat};
pub use rules::{hypersurface_failures, wps_terminal, ExclusionRule, RULES};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EmbeddingCase {
    pub r: u32,
    pub a: u32,
    pub e: u32,
    /// Sorted weights of the ambient space of `X`.
    #[serde(skip)]
    pub ambient: Vec<u32>,
    /// `Some(ra)` when `X` is a hypersurface.
    #[serde(skip)]
    pub hypersurface_degree: Option<u32>,
    pub q: u32,
    #[serde(rename = "qprime")]
    pub q_prime: u32,
    pub l: u32,
    pub d: u32,
    pub divisible: bool,
}

pub fn derive_invariants(r: u32, a: u32, e: u32) -> Result<EmbeddingCase> {
    if r < 2 || a < 1 || e < 1 || e > r * a {
        return Err(Error::InvalidArgument(format!(
            "need r >= 2, a >= 1, 1 <= e <= ra; got ({r},{a},{e})"
        )));
    }
    let ra = r * a;
    let mut ambient = vec![1, 1, a, ra - 1];
    let hypersurface_degree = if e == ra {
        None
    } else {
        ambient.push(e);
        Some(ra)
    };
    ambient.sort_unstable();
    let q = a + e + 1;
    let l = ra + r - 1;
    let d = l + r * e;
    Ok(EmbeddingCase {
        r,
        a,
        e,
        ambient,
        hypersurface_degree,
        q,
        q_prime: a + 1,
        l,
        d,
        divisible: d % (ra - 1) == 0,
    })
}

impl EmbeddingCase {
    pub fn is_hypersurface(&self) -> bool {
        self.hypersurface_degree.is_some()
    }

    /// Text form of `X`, e.g. `P^3` or `X_4 ⊂ P(1^3,2,3)`.
    pub fn x_form(&self) -> String {
        let p = wps_name(&self.ambient);
        match self.hypersurface_degree {
            None => p,
            Some(k) => format!("X_{k} ⊂ {p}"),
        }
    }

    fn order_key(&self) -> (bool, u32, Vec<u32>, u32) {
        (self.is_hypersurface(), self.r * self.a, self.ambient.clone(), self.r)
    }
}

impl fmt::Display for EmbeddingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (r,a,e)=({},{},{})", self.x_form(), self.r, self.a, self.e)
    }
}

/// `P^n` when all weights are one, else `P(1^3,2,3)`.
pub fn wps_name(weights: &[u32]) -> String {
    if weights.iter().all(|&w| w == 1) {
        return format!("P^{}", weights.len() - 1);
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < weights.len() {
        let w = weights[i];
        let k = weights[i..].iter().take_while(|&&x| x == w).count();
        parts.push(if k == 1 { w.to_string() } else { format!("{w}^{k}") });
        i += k;
    }
    format!("P({})", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Enumeration {
    pub r_max: u32,
    pub a_max: u32,
    pub cases: Vec<EmbeddingCase>,
    /// Admitted cases missing from the reference table.
    pub extras: Vec<EmbeddingCase>,
}

/// Every admitted `(r, a, e)` with `r <= r_max`, `a <= a_max`, in table
/// order: projective spaces first, then hypersurfaces by `ra`.
pub fn enumerate_cases(r_max: u32, a_max: u32) -> Result<Enumeration> {
    if r_max < 2 || a_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "bounds must be r_max >= 2, a_max >= 1; got ({r_max},{a_max})"
        )));
    }
    let mut cases = Vec::new();
    for r in 2..=r_max {
        for a in 1..=a_max {
            if wps_terminal(r, a) {
                cases.push(derive_invariants(r, a, r * a)?);
            }
            for e in 1..r * a {
                if hypersurface_failures(r, a, e).is_empty() {
                    cases.push(derive_invariants(r, a, e)?);
                }
            }
        }
    }
    cases.sort_by_key(EmbeddingCase::order_key);
    cases.dedup();
    let table = Registry::embedded();
    let extras = cases
        .iter()
        .filter(|c| !table.table2.iter().any(|row| (row.r, row.a, row.e) == (c.r, c.a, c.e)))
        .cloned()
        .collect();
    Ok(Enumeration { r_max, a_max, cases, extras })
}
