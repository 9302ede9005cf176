use num_traits::{One, Zero};
use serde::Serialize;

use crate::curves::{degree_bound_spec, OrbifoldFormat, SingularityType};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::singular::CyclicQuotient;

use super::{enumerate_cases, EmbeddingCase, Registry};

/// `prod d_i / prod w_j` for a quasi-smooth complete intersection.
pub fn degree_of_x(weights: &[u32], hypersurface_degrees: &[u32]) -> Result<Rational> {
    if weights.contains(&0) {
        return Err(Error::InvalidWeights("zero weight".into()));
    }
    let num: Rational = hypersurface_degrees.iter().map(|&d| rational::int(d.into())).product();
    let den: Rational = weights.iter().map(|&w| rational::int(w.into())).product();
    Ok(num / den)
}

/// Orbinate formats whose coefficients can be given non-negative degrees
/// for a curve of degree `d`, with those degrees.
pub fn feasible_formats(c: &EmbeddingCase) -> Vec<(OrbifoldFormat, Vec<u32>)> {
    let candidates: &[OrbifoldFormat] = match c.r {
        2 => &[OrbifoldFormat::G3],
        3 => &[OrbifoldFormat::G13, OrbifoldFormat::G40],
        4 => &[OrbifoldFormat::G500],
        _ => &[],
    };
    let Ok(spec) = degree_bound_spec(c.r, c.a, c.d) else { return Vec::new() };
    candidates
        .iter()
        .filter_map(|f| spec.restrict(&f.support()).map(|degs| (*f, degs)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkResult {
    pub label: Option<String>,
    #[serde(skip)]
    pub case: EmbeddingCase,
    #[serde(rename = "A3", serialize_with = "rational::serde_text::serialize")]
    pub a3: Rational,
    #[serde(rename = "B3", serialize_with = "rational::serde_text::serialize")]
    pub b3: Rational,
    #[serde(rename = "qY")]
    pub q_y: u32,
    /// `1/l(1, r, ra-1)`, the centre of the Kawamata blowdown.
    pub point: CyclicQuotient,
    #[serde(skip)]
    pub discrepancy: Rational,
    #[serde(skip)]
    pub singularity_types: Vec<SingularityType>,
    /// Components of the generic curve `Gamma`.
    #[serde(skip)]
    pub components: u32,
    #[serde(skip)]
    pub rho_y: u32,
    pub grdb: Option<u32>,
}

pub fn link_result(c: &EmbeddingCase, a3: Rational) -> Result<LinkResult> {
    if !c.divisible {
        return Err(Error::LinkNotConstructed { r: c.r, a: c.a, e: c.e });
    }
    let formats = feasible_formats(c);
    let singularity_types: Vec<SingularityType> =
        formats.iter().map(|(f, _)| f.expected_type()).collect();
    // constant coefficients: the orbinate equation is a product of its
    // face factors, one smooth component per branch
    let reducible = !formats.is_empty() && formats.iter().all(|(_, degs)| degs.iter().all(|&k| k == 0));
    let components = if reducible { singularity_types[0].branch_count() } else { 1 };
    let b3 = rational::ratio(c.d.into(), c.l.into()) * &a3;
    Ok(LinkResult {
        label: None,
        case: c.clone(),
        a3,
        b3,
        q_y: c.a + 1,
        point: CyclicQuotient::new(c.l, [1, c.r.into(), (c.r * c.a - 1).into()])?,
        discrepancy: Rational::one() / rational::int(c.l.into()),
        singularity_types,
        components,
        rho_y: components,
        grdb: None,
    })
}

/// The six links, labelled `A.*` (irreducible curve) then `B.*`, each group
/// ordered by `ra` and then by decreasing `e`.
pub fn links() -> Result<Vec<LinkResult>> {
    let mut out = Vec::new();
    for c in enumerate_cases(4, 3)?.cases.into_iter().filter(|c| c.divisible) {
        let degs: Vec<u32> = c.hypersurface_degree.into_iter().collect();
        let a3 = degree_of_x(&c.ambient, &degs)?;
        out.push(link_result(&c, a3)?);
    }
    out.retain(|l| !l.singularity_types.is_empty());
    out.sort_by_key(|l| (l.components > 1, l.case.r * l.case.a, std::cmp::Reverse(l.case.e)));
    let registry = Registry::embedded();
    let (mut na, mut nb) = (0, 0);
    for l in &mut out {
        let label = if l.components > 1 {
            nb += 1;
            format!("B.{nb}")
        } else {
            na += 1;
            format!("A.{na}")
        };
        l.grdb = registry.table1.iter().find(|row| row.label == label).map(|row| row.grdb);
        l.label = Some(label);
    }
    Ok(out)
}

impl LinkResult {
    pub fn b3_positive(&self) -> bool {
        self.b3 > Rational::zero()
    }
}
