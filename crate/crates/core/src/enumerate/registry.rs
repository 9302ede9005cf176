use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational;
use crate::singular::CyclicQuotient;

use super::{enumerate_cases, links, EmbeddingCase, LinkResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub label: String,
    pub y: String,
    pub rho_y: u32,
    pub codim: u32,
    pub q_y: u32,
    pub b3: String,
    pub basket: Vec<String>,
    pub grdb: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub x: String,
    pub r: u32,
    pub a: u32,
    pub q: u32,
    pub e: u32,
    pub q_prime: u32,
    pub l: u32,
    pub d: u32,
    pub divisible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub label: String,
    pub x: String,
    pub codim: u32,
    pub q_x: u32,
    pub a3: String,
    pub basket: Vec<String>,
    pub r: u32,
    pub a: u32,
    pub d: u32,
    pub singularity: Vec<String>,
}

/// Reference values the computations are checked against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Registry {
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
    pub table3: Vec<Table3Row>,
}

fn s(v: &[&str]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl Registry {
    pub fn embedded() -> Registry {
        let t1 = |label: &str, y: &str, rho_y, codim, q_y, b3: &str, basket: &[&str], grdb| Table1Row {
            label: label.into(),
            y: y.into(),
            rho_y,
            codim,
            q_y,
            b3: b3.into(),
            basket: s(basket),
            grdb,
        };
        let t2 = |x: &str, r, a, q, e, q_prime, l, d, divisible| Table2Row {
            x: x.into(),
            r,
            a,
            q,
            e,
            q_prime,
            l,
            d,
            divisible,
        };
        #[allow(clippy::too_many_arguments)]
        fn t3(
            label: &str,
            x: &str,
            codim: u32,
            q_x: u32,
            a3: &str,
            basket: &[&str],
            (r, a): (u32, u32),
            d: u32,
            singularity: &[&str],
        ) -> Table3Row {
            Table3Row {
                label: label.into(),
                x: x.into(),
                codim,
                q_x,
                a3: a3.into(),
                basket: s(basket),
                r,
                a,
                d,
                singularity: s(singularity),
            }
        }
        let half = "1/2(1,1,1)";
        Registry {
            table1: vec![
                t1("A.1", "P(1^4,2^2,3)", 1, 3, 2, "7/3", &["1/3(1,2,2)"], 40836),
                t1("A.2", "P(1^5,2^2,3)", 1, 4, 2, "10/3", &["1/3(1,2,2)"], 40933),
                t1("A.3", "P(1^3,2^2,3,4,5)", 1, 4, 2, "7/5", &["1/5(1,2,4)"], 40663),
                t1("A.4", "P(1^2,2^2,3^2,4,5)", 1, 4, 3, "3/5", &[half, half, "1/5(1,3,4)"], 41200),
                t1("B.1", "P(1^4,2^2,3,4,5)", 4, 5, 2, "12/5", &["1/5(1,2,4)"], 40837),
                t1("B.2", "P(1^3,2^2,3,4,5,6,7)", 5, 6, 2, "10/7", &["1/7(1,2,6)"], 40664),
            ],
            table2: vec![
                t2("P^3", 2, 1, 4, 2, 2, 3, 7, true),
                t2("P(1^3,2)", 3, 1, 5, 3, 2, 5, 14, true),
                t2("P(1^2,2,3)", 2, 2, 7, 4, 3, 5, 13, false),
                t2("X_2 ⊂ P^4", 2, 1, 3, 1, 2, 3, 5, true),
                t2("X_3 ⊂ P(1^4,2)", 3, 1, 3, 1, 2, 5, 8, true),
                t2("X_4 ⊂ P(1^3,2,3)", 2, 2, 4, 1, 3, 5, 7, false),
                t2("X_4 ⊂ P(1^3,2,3)", 4, 1, 4, 2, 2, 7, 15, true),
                t2("X_4 ⊂ P(1^2,2^2,3)", 2, 2, 5, 2, 3, 5, 9, true),
                t2("X_6 ⊂ P(1^2,2,3,5)", 2, 3, 6, 2, 4, 7, 11, false),
                t2("X_6 ⊂ P(1^2,2,3,5)", 3, 2, 6, 3, 3, 8, 17, false),
            ],
            table3: vec![
                t3("A.1", "P^3", 0, 4, "1", &[], (2, 1), 7, &["Gamma(3)"]),
                t3("A.2", "X_2 ⊂ P^4", 1, 3, "2", &[], (2, 1), 5, &["Gamma(3)"]),
                t3("A.3", "P(1^3,2)", 0, 5, "1/2", &[half], (3, 1), 14, &["Gamma(1,3)", "Gamma(4,0)"]),
                t3("A.4", "X_4 ⊂ P(1^2,2^2,3)", 1, 5, "1/3", &[half, half, "1/3(1,2,2)"], (2, 2), 9, &["Gamma(3)"]),
                t3("B.1", "X_3 ⊂ P(1^4,2)", 1, 3, "3/2", &[half], (3, 1), 8, &["Gamma(4,0)"]),
                t3("B.2", "X_4 ⊂ P(1^3,2,3)", 1, 4, "2/3", &["1/3(1,1,2)"], (4, 1), 15, &["Gamma(5,0,0)"]),
            ],
        }
    }
}

/// A computed value disagreeing with the registry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diff {
    pub table: u8,
    pub row: String,
    pub field: String,
    pub expected: String,
    pub recorded: String,
}

/// A recorded value that is reported but not derived.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Echo {
    pub table: u8,
    pub row: String,
    pub field: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegistryReport {
    pub diffs: Vec<Diff>,
    pub echoed: Vec<Echo>,
}

impl RegistryReport {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

struct Checker {
    diffs: Vec<Diff>,
    echoed: Vec<Echo>,
}

impl Checker {
    fn cmp<T: ToString>(&mut self, table: u8, row: &str, field: &str, expected: T, recorded: T) {
        let (e, r) = (expected.to_string(), recorded.to_string());
        if e != r {
            self.diffs.push(Diff { table, row: row.into(), field: field.into(), expected: e, recorded: r });
        }
    }

    fn echo(&mut self, table: u8, row: &str, field: &str, value: impl ToString) {
        self.echoed.push(Echo { table, row: row.into(), field: field.into(), value: value.to_string() });
    }

    /// Recorded rationals compare by value, so `2/4` matches `1/2`.
    fn cmp_rational(&mut self, table: u8, row: &str, field: &str, expected: &rational::Rational, recorded: &str) {
        let ok = rational::parse(recorded).is_some_and(|q| &q == expected);
        if !ok {
            self.cmp(table, row, field, rational::format(expected), recorded.to_string());
        }
    }

    /// `point` must be equivalent to some entry of `basket`.
    fn in_basket(&mut self, table: u8, row: &str, point: &CyclicQuotient, basket: &[String]) {
        let found = basket.iter().any(|b| {
            b.parse::<CyclicQuotient>()
                .ok()
                .and_then(|q| point.is_equivalent(&q).ok())
                .unwrap_or(false)
        });
        if !found {
            self.diffs.push(Diff {
                table,
                row: row.into(),
                field: "basket".into(),
                expected: format!("contains {point}"),
                recorded: basket.join(", "),
            });
        }
    }
}

fn check_table2(ck: &mut Checker, cases: &[EmbeddingCase], rows: &[Table2Row]) {
    ck.cmp(2, "*", "rows", cases.len(), rows.len());
    for (i, (c, row)) in cases.iter().zip(rows).enumerate() {
        let id = format!("{}", i + 1);
        ck.cmp(2, &id, "X", c.x_form(), row.x.clone());
        ck.cmp(2, &id, "(r,a)", format!("({},{})", c.r, c.a), format!("({},{})", row.r, row.a));
        ck.cmp(2, &id, "q", c.q, row.q);
        ck.cmp(2, &id, "e", c.e, row.e);
        ck.cmp(2, &id, "q'", c.q_prime, row.q_prime);
        ck.cmp(2, &id, "l", c.l, row.l);
        ck.cmp(2, &id, "d", c.d, row.d);
        ck.cmp(2, &id, "divisible", c.divisible, row.divisible);
    }
}

fn x_point(c: &EmbeddingCase) -> Option<CyclicQuotient> {
    let n = c.r * c.a - 1;
    if n == 1 {
        return None;
    }
    let third = if c.is_hypersurface() { c.e } else { c.a };
    let w = if c.is_hypersurface() { [1, c.a, third] } else { [1, 1, c.a] };
    CyclicQuotient::new(n, w.map(i64::from)).ok()
}

fn check_link(ck: &mut Checker, l: &LinkResult, reg: &Registry) {
    let label = l.label.clone().unwrap_or_default();
    let c = &l.case;
    match reg.table3.iter().find(|r| r.label == label) {
        None => ck.cmp(3, &label, "row", "present", "missing"),
        Some(row) => {
            ck.cmp(3, &label, "X", c.x_form(), row.x.clone());
            ck.cmp(3, &label, "codim", u32::from(c.is_hypersurface()), row.codim);
            ck.cmp(3, &label, "q_X", c.q, row.q_x);
            ck.cmp_rational(3, &label, "A^3", &l.a3, &row.a3);
            ck.cmp(3, &label, "(r,a)", format!("({},{})", c.r, c.a), format!("({},{})", row.r, row.a));
            ck.cmp(3, &label, "d", c.d, row.d);
            let types: Vec<String> = l.singularity_types.iter().map(|t| t.to_string()).collect();
            ck.cmp(3, &label, "singularity type", types.join(" or "), row.singularity.join(" or "));
            match x_point(c) {
                Some(p) => ck.in_basket(3, &label, &p, &row.basket),
                None => ck.cmp(3, &label, "basket", String::new(), row.basket.join(", ")),
            }
        }
    }
    match reg.table1.iter().find(|r| r.label == label) {
        None => ck.cmp(1, &label, "row", "present", "missing"),
        Some(row) => {
            ck.cmp(1, &label, "q_Y", l.q_y, row.q_y);
            ck.cmp_rational(1, &label, "B^3", &l.b3, &row.b3);
            ck.cmp(1, &label, "rho_Y", l.rho_y, row.rho_y);
            ck.in_basket(1, &label, &l.point, &row.basket);
            ck.echo(1, &label, "Y", &row.y);
            ck.echo(1, &label, "codim", row.codim);
            ck.echo(1, &label, "basket", row.basket.join(", "));
            ck.echo(1, &label, "GRDB", row.grdb);
        }
    }
}

/// Recomputes Tables 1-3 and lists every disagreement with `reg`.
pub fn registry_check(reg: &Registry) -> Result<RegistryReport> {
    let mut ck = Checker { diffs: Vec::new(), echoed: Vec::new() };
    let cases = enumerate_cases(4, 3)?.cases;
    check_table2(&mut ck, &cases, &reg.table2);
    let ls = links()?;
    ck.cmp(1, "*", "rows", ls.len(), reg.table1.len());
    ck.cmp(3, "*", "rows", ls.len(), reg.table3.len());
    for l in &ls {
        check_link(&mut ck, l, reg);
    }
    Ok(RegistryReport { diffs: ck.diffs, echoed: ck.echoed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_registry_is_consistent() {
        let rep = registry_check(&Registry::embedded()).unwrap();
        assert!(rep.passed(), "{:#?}", rep.diffs);
    }

    #[test]
    fn tampered_b3_reported() {
        let mut reg = Registry::embedded();
        reg.table1[0].b3 = "2".into();
        let rep = registry_check(&reg).unwrap();
        assert_eq!(
            rep.diffs,
            vec![Diff {
                table: 1,
                row: "A.1".into(),
                field: "B^3".into(),
                expected: "7/3".into(),
                recorded: "2".into()
            }]
        );
    }

    #[test]
    fn rho_echo() {
        let rep = registry_check(&Registry::embedded()).unwrap();
        assert_eq!(rep.echoed.iter().filter(|e| e.field == "GRDB").count(), 6);
        let reg = Registry::embedded();
        let rho: Vec<u32> = reg.table1.iter().map(|r| r.rho_y).collect();
        assert_eq!(rho, vec![1, 1, 1, 1, 4, 5]);
    }

    #[test]
    fn json_round_trip() {
        let reg = Registry::embedded();
        let text = serde_json::to_string(&reg).unwrap();
        let back: Registry = serde_json::from_str(&text).unwrap();
        assert_eq!(back, reg);
    }
}
