use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::poly::{Poly, Ring};

/// Upper-triangle positions, 1-indexed, in storage order.
pub const POSITIONS: [(usize, usize); 10] =
    [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];

fn slot(i: usize, j: usize) -> Option<usize> {
    POSITIONS.iter().position(|&p| p == (i, j))
}

/// Degrees of the upper triangle written row by row, e.g.
/// `[[4,3,3,2],[3,3,2],[2,1],[1]]`.
pub type DegreePattern = [Vec<u32>; 4];

pub fn pattern_degree(p: &DegreePattern, i: usize, j: usize) -> u32 {
    p[i - 1][j - i - 1]
}

/// A 5x5 skew-symmetric matrix of polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix5 {
    entries: [Poly; 10],
    pub pattern: Option<DegreePattern>,
}

impl SkewMatrix5 {
    /// `upper` lists `m12, m13, m14, m15, m23, m24, m25, m34, m35, m45`.
    pub fn new(upper: [Poly; 10]) -> Result<Self> {
        let ring = upper[0].ring().clone();
        if upper.iter().any(|p| p.ring() != &ring) {
            return Err(Error::IncompatibleRings);
        }
        Ok(SkewMatrix5 { entries: upper, pattern: None })
    }

    pub fn with_pattern(mut self, pattern: DegreePattern) -> Result<Self> {
        for (k, row) in pattern.iter().enumerate() {
            if row.len() != 4 - k {
                return Err(Error::InvalidArgument(format!(
                    "degree pattern row {} has {} entries, expected {}",
                    k + 1,
                    row.len(),
                    4 - k
                )));
            }
        }
        self.pattern = Some(pattern);
        Ok(self)
    }

    pub fn ring(&self) -> &Ring {
        self.entries[0].ring()
    }

    /// `m_ij`, 1-indexed, with `m_ji = -m_ij`.
    pub fn entry(&self, i: usize, j: usize) -> Poly {
        assert!((1..=5).contains(&i) && (1..=5).contains(&j), "index out of range");
        if i == j {
            return Poly::zero(self.ring());
        }
        if i < j {
            self.entries[slot(i, j).unwrap()].clone()
        } else {
            -&self.entries[slot(j, i).unwrap()]
        }
    }

    pub fn upper(&self) -> &[Poly; 10] {
        &self.entries
    }

    pub fn set_entry(&mut self, i: usize, j: usize, p: Poly) -> Result<()> {
        if p.ring() != self.ring() {
            return Err(Error::IncompatibleRings);
        }
        match (i < j).then(|| slot(i, j)).flatten() {
            Some(k) => {
                self.entries[k] = p;
                Ok(())
            }
            None => Err(Error::InvalidArgument(format!("({i},{j}) is not above the diagonal"))),
        }
    }

    /// Every nonzero entry must be homogeneous of the pattern degree.
    pub fn check_pattern(&self) -> Result<()> {
        let Some(p) = &self.pattern else { return Ok(()) };
        for (k, &(i, j)) in POSITIONS.iter().enumerate() {
            let expected = pattern_degree(p, i, j);
            if !self.entries[k].is_homogeneous_of(expected) {
                return Err(Error::DegreePattern { i, j, expected });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let entries: BTreeMap<String, String> = POSITIONS
            .iter()
            .zip(&self.entries)
            .map(|(&(i, j), p)| (format!("{i}{j}"), p.to_string()))
            .collect();
        let mut v = json!({ "entries": entries });
        if let Some(p) = &self.pattern {
            v["pattern"] = json!(p);
        }
        v
    }

    /// Reads `{"entries": {"12": "...", ...}, "pattern": [[..],..]}`; missing
    /// entries are zero.
    pub fn from_json(v: &Value, ring: &Ring) -> Result<Self> {
        let bad = |m: String| Error::InvalidArgument(m);
        let obj = v
            .get("entries")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("matrix JSON needs an `entries` object".into()))?;
        let mut entries: [Poly; 10] = std::array::from_fn(|_| Poly::zero(ring));
        for (key, val) in obj {
            let k = POSITIONS
                .iter()
                .position(|&(i, j)| format!("{i}{j}") == *key)
                .ok_or_else(|| bad(format!("bad entry key `{key}`")))?;
            let s = val.as_str().ok_or_else(|| bad(format!("entry {key} must be a string")))?;
            entries[k] = parse_poly(s, ring)?;
        }
        let m = SkewMatrix5::new(entries)?;
        match v.get("pattern") {
            None | Some(Value::Null) => Ok(m),
            Some(p) => {
                let rows: Vec<Vec<u32>> =
                    serde_json::from_value(p.clone()).map_err(|e| bad(format!("pattern: {e}")))?;
                let rows: DegreePattern =
                    rows.try_into().map_err(|_| bad("pattern needs 4 rows".into()))?;
                m.with_pattern(rows)
            }
        }
    }
}

/// Pfaffian of a 4x4 skew matrix given by `m12, m13, m14, m23, m24, m34`.
pub fn pf4(m12: &Poly, m13: &Poly, m14: &Poly, m23: &Poly, m24: &Poly, m34: &Poly) -> Poly {
    m12 * m34 - m13 * m24 + m14 * m23
}

/// The five `4x4` Pfaffians, `Pf_k = (-1)^(k+1) Pf(M without row/column k)`.
pub fn max_pfaffians(m: &SkewMatrix5) -> Result<[Poly; 5]> {
    m.check_pattern()?;
    Ok(std::array::from_fn(|k| {
        let idx: Vec<usize> = (1..=5).filter(|&i| i != k + 1).collect();
        let e = |a: usize, b: usize| m.entry(idx[a], idx[b]);
        let p = pf4(&e(0, 1), &e(0, 2), &e(0, 3), &e(1, 2), &e(1, 3), &e(2, 3));
        if k % 2 == 0 { p } else { -p }
    }))
}

/// Whether every term of `p` involves one of `vars`.
pub fn monomial_ideal_contains(p: &Poly, vars: &[&str]) -> Result<bool> {
    let ring = p.ring();
    let idx = vars
        .iter()
        .map(|v| ring.index_of(v).ok_or_else(|| Error::UnknownVariable(v.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Ok(p.terms().all(|(m, _)| idx.iter().any(|&i| m.exponent(i) > 0)))
}

/// Tom_k: entries away from row and column `k` lie in the ideal of `vars`.
pub fn tom_check(m: &SkewMatrix5, vars: &[&str], k: usize) -> Result<bool> {
    for &(i, j) in &POSITIONS {
        if i != k && j != k && !monomial_ideal_contains(&m.entry(i, j), vars)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Jer_kl: entries in rows or columns `k`, `l` lie in the ideal of `vars`.
pub fn jerry_check(m: &SkewMatrix5, vars: &[&str], k: usize, l: usize) -> Result<bool> {
    for &(i, j) in &POSITIONS {
        let touches = [i, j].iter().any(|t| *t == k || *t == l);
        if touches && !monomial_ideal_contains(&m.entry(i, j), vars)? {
            return Ok(false);
        }
    }
    Ok(true)
}
