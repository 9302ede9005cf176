use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational;

use super::{enumerate_cases, links, Registry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
    Markdown,
    Text,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(TableFormat::Json),
            "csv" => Ok(TableFormat::Csv),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            "text" => Ok(TableFormat::Text),
            _ => Err(Error::InvalidArgument(format!("unknown format `{s}`"))),
        }
    }
}

impl fmt::Display for TableFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableFormat::Json => "json",
            TableFormat::Csv => "csv",
            TableFormat::Markdown => "markdown",
            TableFormat::Text => "text",
        })
    }
}

struct Grid {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
}

/// `2×1/2(1,1,1), 1/3(1,2,2)`; `∅` when empty.
pub(crate) fn basket_text(basket: &[String]) -> String {
    if basket.is_empty() {
        return "∅".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < basket.len() {
        let k = basket[i..].iter().take_while(|b| **b == basket[i]).count();
        parts.push(if k == 1 { basket[i].clone() } else { format!("{k}×{}", basket[i]) });
        i += k;
    }
    parts.join(", ")
}

fn table1() -> Result<Grid> {
    let reg = Registry::embedded();
    let ls = links()?;
    let mut rows = Vec::new();
    for l in &ls {
        let label = l.label.clone().unwrap_or_default();
        let row = reg.table1.iter().find(|r| r.label == label);
        rows.push(vec![
            label.clone(),
            row.map(|r| r.y.clone()).unwrap_or_default(),
            l.rho_y.to_string(),
            row.map(|r| r.codim.to_string()).unwrap_or_default(),
            l.q_y.to_string(),
            rational::format(&l.b3),
            row.map(|r| basket_text(&r.basket)).unwrap_or_default(),
            l.grdb.map(|g| g.to_string()).unwrap_or_default(),
        ]);
    }
    Ok(Grid {
        header: vec!["Case", "Y", "rho_Y", "codim", "q_Y", "B^3", "basket", "GRDB"],
        rows,
        json: serde_json::to_value(&ls).expect("links serialize"),
    })
}

fn table2() -> Result<Grid> {
    let cases = enumerate_cases(4, 3)?.cases;
    let rows = cases
        .iter()
        .map(|c| {
            vec![
                c.x_form(),
                format!("({},{})", c.r, c.a),
                c.q.to_string(),
                c.e.to_string(),
                c.q_prime.to_string(),
                c.l.to_string(),
                c.d.to_string(),
                if c.divisible { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    Ok(Grid {
        header: vec!["X", "(r,a)", "q", "e", "q'", "l", "d", "(ra-1)|d"],
        rows,
        json: serde_json::to_value(&cases).expect("cases serialize"),
    })
}

fn table3() -> Result<Grid> {
    let reg = Registry::embedded();
    let ls = links()?;
    let mut rows = Vec::new();
    let mut objs = Vec::new();
    for l in &ls {
        let label = l.label.clone().unwrap_or_default();
        let c = &l.case;
        let basket = reg
            .table3
            .iter()
            .find(|r| r.label == label)
            .map(|r| basket_text(&r.basket))
            .unwrap_or_default();
        let types: Vec<String> = l.singularity_types.iter().map(|t| t.to_string()).collect();
        rows.push(vec![
            label.clone(),
            c.x_form(),
            u32::from(c.is_hypersurface()).to_string(),
            c.q.to_string(),
            rational::format(&l.a3),
            basket.clone(),
            format!("({},{})", c.r, c.a),
            c.d.to_string(),
            types.join(" or "),
        ]);
        objs.push(json!({
            "label": label,
            "X": c.x_form(),
            "codim": u32::from(c.is_hypersurface()),
            "qX": c.q,
            "A3": rational::format(&l.a3),
            "basket": basket,
            "r": c.r,
            "a": c.a,
            "d": c.d,
            "type": l.singularity_types,
        }));
    }
    Ok(Grid {
        header: vec!["Case", "X", "codim", "q_X", "A^3", "basket", "(r,a)", "d", "singularity type"],
        rows,
        json: Value::Array(objs),
    })
}

fn to_csv(g: &Grid) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&g.header).expect("in-memory write");
    for r in &g.rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to vec")).expect("utf8 input")
}

fn to_markdown(g: &Grid) -> String {
    let mut out = format!("| {} |\n", g.header.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(g.header.len())));
    for r in &g.rows {
        out.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    out
}

fn to_text(g: &Grid) -> String {
    let n = g.header.len();
    let width: Vec<usize> = (0..n)
        .map(|j| {
            g.rows
                .iter()
                .map(|r| r[j].chars().count())
                .chain([g.header[j].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(g.header.clone());
    for r in &g.rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// Renders Table 1, 2 or 3 from computed values (recorded-only columns are
/// taken from the registry).
pub fn render_table(which: u8, format: TableFormat) -> Result<String> {
    let g = match which {
        1 => table1()?,
        2 => table2()?,
        3 => table3()?,
        _ => return Err(Error::InvalidArgument(format!("no table {which}; expected 1, 2 or 3"))),
    };
    Ok(match format {
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(&g.json).expect("json values serialize");
            s.push('\n');
            s
        }
        TableFormat::Csv => to_csv(&g),
        TableFormat::Markdown => to_markdown(&g),
        TableFormat::Text => to_text(&g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table2_csv() {
        let s = render_table(2, TableFormat::Csv).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 11);
        assert_eq!(lines[0], "X,\"(r,a)\",q,e,q',l,d,(ra-1)|d");
        assert_eq!(lines[1], "P^3,\"(2,1)\",4,2,2,3,7,yes");
        assert_eq!(lines[10], "\"X_6 ⊂ P(1^2,2,3,5)\",\"(3,2)\",6,3,3,8,17,no");
    }

    #[test]
    fn table1_json_schema() {
        let s = render_table(1, TableFormat::Json).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        let first = &v[0];
        let mut keys: Vec<&String> = first.as_object().unwrap().keys().collect();
        keys.sort();
        assert_eq!(keys, ["A3", "B3", "grdb", "label", "point", "qY"]);
        assert_eq!(first["B3"], "7/3");
        assert_eq!(first["point"], "1/3(1,2,1)");
    }

    #[test]
    fn table2_json_schema() {
        let s = render_table(2, TableFormat::Json).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        let mut keys: Vec<&String> = v[0].as_object().unwrap().keys().collect();
        keys.sort();
        assert_eq!(keys, ["a", "d", "divisible", "e", "l", "q", "qprime", "r"]);
    }

    #[test]
    fn markdown_and_text() {
        let md = render_table(3, TableFormat::Markdown).unwrap();
        assert!(md.contains("| A.3 | P(1^3,2) | 0 | 5 | 1/2 | 1/2(1,1,1) | (3,1) | 14 | Gamma(1,3) or Gamma(4,0) |"));
        let txt = render_table(1, TableFormat::Text).unwrap();
        assert!(txt.lines().nth(4).unwrap().starts_with("A.4"));
        assert!(txt.contains("2×1/2(1,1,1), 1/5(1,3,4)"));
        assert!(render_table(4, TableFormat::Text).is_err());
    }
}
