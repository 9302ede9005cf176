//! Named end-to-end checks, run by `verify` and by the acceptance suite.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::curves::{a3_obstruction, classify, generic_minor_pullback, multiplicity, OrbifoldFormat, SingularityType};
use crate::enumerate::{enumerate_cases, links, moduli_dimension, registry_check, wps_terminal, ModuliFamily, Registry};
use crate::error::{Error, Result};
use crate::hilbert::{ice_cream_a3, integer_coefficients, A3_AMBIENT};
use crate::pfaffian::{
    family_consistency, family_curve, jerry_check, max_pfaffians, monomial_ideal_contains, random_family, tom_check,
    FamilyKind,
};
use crate::singular::CyclicQuotient;
use crate::HilbertSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyTarget {
    Tom,
    Jerry,
    A3,
    Minors,
    All,
}

impl FromStr for VerifyTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tom" => Ok(VerifyTarget::Tom),
            "jerry" => Ok(VerifyTarget::Jerry),
            "a3" => Ok(VerifyTarget::A3),
            "minors" => Ok(VerifyTarget::Minors),
            "all" => Ok(VerifyTarget::All),
            _ => Err(Error::InvalidArgument(format!("unknown check `{s}` (tom, jerry, a3, minors, all)"))),
        }
    }
}

impl fmt::Display for VerifyTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyTarget::Tom => "tom",
            VerifyTarget::Jerry => "jerry",
            VerifyTarget::A3 => "a3",
            VerifyTarget::Minors => "minors",
            VerifyTarget::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub target: String,
    pub seed: u64,
    pub trials: u32,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `N(t)` of the A.3 model over `(1-t)^3(1-t^2)^2(1-t^3)(1-t^4)(1-t^5)`.
pub const A3_NUMERATOR: [i64; 18] = [1, 0, 0, 0, -2, -2, -2, 2, 3, 3, 2, -2, -2, -2, 0, 0, 0, 1];

/// Degrees of the five Pfaffians and the four unprojection equations.
pub const EQUATION_DEGREES: [u32; 9] = [4, 4, 5, 5, 6, 6, 6, 7, 8];

fn family_index(kind: FamilyKind) -> u64 {
    match kind {
        FamilyKind::Tom => 1,
        FamilyKind::Jerry => 2,
        FamilyKind::TomJerry => 3,
    }
}

/// Independent stream per (family, trial).
pub fn trial_rng(seed: u64, kind: FamilyKind, trial: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((family_index(kind) << 32) | u64::from(trial));
    rng
}

fn expected_curve(kind: FamilyKind) -> SingularityType {
    match kind {
        FamilyKind::Tom => SingularityType(vec![1, 3]),
        FamilyKind::Jerry => SingularityType(vec![4, 0]),
        FamilyKind::TomJerry => SingularityType(vec![3, 2]),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    /// First failed check, if any.
    pub failure: Option<String>,
    /// The random curve landed on a degenerate locus (e.g. a face form with
    /// a repeated root); not counted as a failure.
    pub degenerate_curve: bool,
}

fn failed(m: String) -> Result<TrialOutcome> {
    Ok(TrialOutcome { failure: Some(m), degenerate_curve: false })
}

/// Runs every check on one random member of the family.
pub fn family_trial(kind: FamilyKind, seed: u64, trial: u32) -> Result<TrialOutcome> {
    let f = random_family(kind, &mut trial_rng(seed, kind, trial))?;
    let pf = max_pfaffians(&f.matrix)?;
    let mut degrees = Vec::new();
    for p in pf.iter().chain(&f.unprojection) {
        let d = p.weighted_degree()?;
        if !d.homogeneous {
            return failed(format!("inhomogeneous equation {p}"));
        }
        degrees.push(d.degree);
    }
    degrees.sort_unstable();
    if degrees != EQUATION_DEGREES {
        return failed(format!("equation degrees {degrees:?}"));
    }
    let ideal = ["x", "y", "z", "nu"];
    for (k, p) in pf.iter().enumerate() {
        if !monomial_ideal_contains(p, &ideal)? {
            return failed(format!("Pf{} not in (x,y,z,nu)", k + 1));
        }
    }
    let tom = tom_check(&f.matrix, &ideal, 2)?;
    let jerry = jerry_check(&f.matrix, &ideal, 3, 4)?;
    let format_ok = match kind {
        FamilyKind::Tom => tom,
        FamilyKind::Jerry => jerry,
        FamilyKind::TomJerry => tom && jerry,
    };
    if !format_ok {
        return failed(format!("format check (tom_2 {tom}, jer_34 {jerry})"));
    }
    let report = family_consistency(&f)?;
    if let Some(bad) = report.pairs.iter().find(|p| !p.verified()) {
        return failed(format!("{} g_{} - {} g_{} not in the Pfaffian ideal", bad.v2, bad.v1, bad.v1, bad.v2));
    }
    let curve = family_curve(&f)?;
    let want = expected_curve(kind);
    match curve.classification.singularity_type() {
        Some(t) if *t == want => Ok(TrialOutcome { failure: None, degenerate_curve: false }),
        Some(t) => failed(format!("curve {} classifies as {t}, expected {want}", curve.gamma)),
        None => Ok(TrialOutcome { failure: None, degenerate_curve: true }),
    }
}

pub fn family_check(kind: FamilyKind, seed: u64, trials: u32) -> Result<Check> {
    let outcomes =
        (0..trials).into_par_iter().map(|t| family_trial(kind, seed, t)).collect::<Result<Vec<_>>>()?;
    let failures: Vec<String> = outcomes
        .iter()
        .enumerate()
        .filter_map(|(t, o)| o.failure.as_ref().map(|m| format!("trial {t}: {m}")))
        .collect();
    let degenerate = outcomes.iter().filter(|o| o.degenerate_curve).count();
    let passed = trials > 0 && failures.is_empty();
    let detail = if failures.is_empty() {
        format!(
            "{trials}/{trials} members: degrees {EQUATION_DEGREES:?}, formats, 6/6 certificates; curve {} ({degenerate} degenerate draws)",
            expected_curve(kind)
        )
    } else {
        failures.join("; ")
    };
    Ok(Check::new(&format!("pfaffian-{kind}"), passed, detail))
}

pub fn a3_check() -> Result<Check> {
    let r = a3_obstruction()?;
    Ok(Check::new(
        "a3-obstruction",
        r.passed(),
        format!(
            "discriminant forces {} (scalar {}); residue order {}; quartic forces {}",
            r.forced_by_discriminant.join(","),
            r.discriminant_scalar.as_deref().unwrap_or("?"),
            r.residue_order.map_or("none".to_string(), |o| o.to_string()),
            r.forced_by_quartic.join(","),
        ),
    ))
}

pub fn minors_check() -> Result<Check> {
    let mut ok = Vec::new();
    for r in 2..=4 {
        ok.push(generic_minor_pullback(r, 3)?.passed());
    }
    Ok(Check::new("minor-pullback", ok.iter().all(|b| *b), format!("r = 2,3,4: {ok:?}")))
}

pub fn registry_tables_check() -> Result<Check> {
    let rep = registry_check(&Registry::embedded())?;
    let detail = if rep.passed() {
        format!("tables 1-3 agree; {} recorded-only fields echoed", rep.echoed.len())
    } else {
        rep.diffs.iter().map(|d| format!("T{} {} {}: {} vs {}", d.table, d.row, d.field, d.expected, d.recorded)).collect::<Vec<_>>().join("; ")
    };
    Ok(Check::new("registry", rep.passed(), detail))
}

pub fn hilbert_numerator_check() -> Result<Check> {
    let h = ice_cream_a3();
    let n = integer_coefficients(&h.numerator_wrt(&A3_AMBIENT)?);
    let ok = n.as_deref() == Some(&A3_NUMERATOR[..]);
    let t1 = h.expand(1)?[1].clone();
    Ok(Check::new("hilbert-numerator", ok, format!("N(t) = {n:?}; t^1 coefficient {t1}")))
}

pub fn embedding_series_check() -> Result<Check> {
    let cases = enumerate_cases(4, 3)?.cases;
    let mut bad = Vec::new();
    for c in &cases {
        let l = HilbertSeries::lemma1(c.r, c.a, c.e)?;
        let h = HilbertSeries::of_hypersurface(&[1, 1, c.a, c.r * c.a - 1, c.e], c.r * c.a)?;
        if !(l.equals(&h) && l.expand(20)? == h.expand(20)?) {
            bad.push(format!("({},{},{})", c.r, c.a, c.e));
        }
    }
    Ok(Check::new("embedding-series", bad.is_empty() && cases.len() == 10, format!("{} rows; mismatches {bad:?}", cases.len())))
}

/// Reid-Tai against the family `1/r(1,a,r-a)` for every isolated
/// `1/r(a,b,c)` with `r <= r_max`.
pub fn terminal_family_scan(r_max: u32) -> Result<Vec<CyclicQuotient>> {
    let mut disagree = Vec::new();
    for r in 2..=r_max {
        let ri = i64::from(r);
        for a in 1..ri {
            for b in 1..ri {
                for c in 1..ri {
                    let s = CyclicQuotient::new(r, [a, b, c])?;
                    if s.is_isolated() && s.is_terminal()? != s.is_in_terminal_family() {
                        disagree.push(s);
                    }
                }
            }
        }
    }
    Ok(disagree)
}

pub fn terminality_check() -> Result<Check> {
    let disagree = terminal_family_scan(50)?;
    let scan: Vec<(u32, u32)> =
        (2..=10).flat_map(|r| (1..=10).map(move |a| (r, a))).filter(|&(r, a)| wps_terminal(r, a)).collect();
    let mut points_ok = true;
    for c in enumerate_cases(4, 3)?.cases {
        points_ok &= CyclicQuotient::new(c.l, [1, c.r.into(), (c.r * c.a - 1).into()])?.is_terminal()?;
    }
    let passed = disagree.is_empty() && scan == [(2, 1), (2, 2), (3, 1)] && points_ok;
    Ok(Check::new(
        "terminality",
        passed,
        format!("r <= 50 disagreements {}; P(1,1,a,ra-1) terminal for {scan:?}; index-l points terminal {points_ok}", disagree.len()),
    ))
}

pub fn classification_check() -> Result<Check> {
    let mut parts = Vec::new();
    let mut ok = true;
    for f in [OrbifoldFormat::G3, OrbifoldFormat::G13, OrbifoldFormat::G40, OrbifoldFormat::G500, OrbifoldFormat::G32] {
        let c = classify(&f.generic());
        let want = f.expected_type();
        let m = multiplicity(&want, f.r())?;
        let good = c.singularity_type() == Some(&want) && c.multiplicity() == Some(m);
        ok &= good;
        parts.push(format!("{f}: {want} mult {m}{}", if good { "" } else { " FAILED" }));
    }
    Ok(Check::new("curve-classification", ok, parts.join(", ")))
}

pub fn moduli_check() -> Result<Check> {
    let mut got = Vec::new();
    for f in ModuliFamily::ALL {
        let r = moduli_dimension(f)?;
        got.push((r.total, r.dimension));
    }
    Ok(Check::new("moduli", got == [(37, 36), (35, 34), (32, 31)], format!("T, J, TJ (count, dim): {got:?}")))
}

pub fn links_check() -> Result<Check> {
    let ls = links()?;
    let ok = ls.len() == 6 && ls.iter().all(|l| l.b3_positive());
    Ok(Check::new("links", ok, format!("{} links with B^3 > 0", ls.len())))
}

pub fn verify(target: VerifyTarget, seed: u64, trials: u32) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    match target {
        VerifyTarget::Tom => checks.push(family_check(FamilyKind::Tom, seed, trials)?),
        VerifyTarget::Jerry => checks.push(family_check(FamilyKind::Jerry, seed, trials)?),
        VerifyTarget::A3 => checks.push(a3_check()?),
        VerifyTarget::Minors => checks.push(minors_check()?),
        VerifyTarget::All => {
            checks.push(registry_tables_check()?);
            checks.push(links_check()?);
            checks.push(hilbert_numerator_check()?);
            checks.push(embedding_series_check()?);
            checks.push(terminality_check()?);
            checks.push(classification_check()?);
            checks.push(moduli_check()?);
            for kind in FamilyKind::ALL {
                checks.push(family_check(kind, seed, trials)?);
            }
            checks.push(a3_check()?);
            checks.push(minors_check()?);
        }
    }
    Ok(VerifyReport { target: target.to_string(), seed, trials, checks })
}
