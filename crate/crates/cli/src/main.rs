use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use fanoforge_core::checks::{trial_rng, verify, VerifyTarget};
use fanoforge_core::curves::{classify, OrbifoldEquation};
use fanoforge_core::enumerate::{
    degree_of_x, derive_invariants, link_result, links, moduli_dimension, render_table, ModuliFamily, TableFormat,
};
use fanoforge_core::parse::parse_weight_system;
use fanoforge_core::pfaffian::{ambient_ring, max_pfaffians, random_family, FamilyKind, SkewMatrix5};
use fanoforge_core::{parse_poly, rational, CyclicQuotient, Error, HilbertSeries, WeightSystem};

mod render;

use render::Output;

#[derive(Parser)]
#[command(name = "fanoforge", version, about = "Exact checks for a family of Q-Fano 3-fold links")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// json, csv, markdown or text
    #[arg(long, global = true, default_value = "text")]
    format: TableFormat,
    #[arg(long, global = true, env = "FANOFORGE_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 20)]
    trials: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Tables 1, 2 and 3, recomputed
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
    /// Invariants of the embedding case (r, a, e) and its link, if any
    Invariants { r: u32, a: u32, e: u32 },
    /// Isolation, terminality and canonical form of `1/r(a,b,c)`
    Terminal { singularity: String },
    /// Hilbert series
    Hilbert {
        #[command(subcommand)]
        which: HilbertCommand,
        /// Number of expansion coefficients to print
        #[arg(long, global = true, default_value_t = 12)]
        terms: u32,
    },
    /// Newton polygon classification of an orbinate equation in alpha, beta
    Classify {
        #[arg(long)]
        r: u32,
        equation: String,
    },
    /// Moduli counts of the curve families T, J, TJ
    Moduli { family: Option<String> },
    /// Run a named verification (tom, jerry, a3, minors, all)
    Verify { target: String },
    /// Print a polynomial expression in canonical form
    Expand {
        expr: String,
        /// `name:weight,...`; defaults to the variables in order of appearance, weight 1
        #[arg(long)]
        vars: Option<String>,
    },
    /// Pfaffians of a 5x5 skew matrix (JSON file or `-`), or a random family member
    Pfaffians {
        #[arg(long, conflicts_with = "family")]
        input: Option<String>,
        #[arg(long)]
        family: Option<String>,
    },
}

#[derive(Subcommand)]
enum HilbertCommand {
    Lemma1 { r: u32, a: u32, e: u32 },
    Wps { weights: Vec<u32> },
    Hypersurface { degree: u32, weights: Vec<u32> },
    Icecream,
}

enum Failure {
    Usage(String),
    Verification(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<Output, Failure>;

fn series(h: &HilbertSeries, terms: u32) -> Result<Output, Failure> {
    let coeffs: Vec<String> = h.expand(i64::from(terms) - 1)?.iter().map(rational::format).collect();
    let v = json!({ "series": h, "expansion": coeffs });
    Ok(Output::object(v))
}

fn invariants(r: u32, a: u32, e: u32) -> Run {
    let c = derive_invariants(r, a, e)?;
    let mut v = serde_json::to_value(&c).expect("case serializes");
    v["X"] = json!(c.x_form());
    if c.divisible {
        let l = match links()?.into_iter().find(|k| k.case == c) {
            Some(l) => l,
            None => {
                let degs: Vec<u32> = c.hypersurface_degree.into_iter().collect();
                link_result(&c, degree_of_x(&c.ambient, &degs)?)?
            }
        };
        let mut lv = serde_json::to_value(&l).expect("link serializes");
        lv["type"] = json!(l.singularity_types);
        v["link"] = lv;
    } else {
        v["link"] = Value::Null;
    }
    Ok(Output::object(v))
}

fn terminal(spec: &str) -> Run {
    let s: CyclicQuotient = spec.parse()?;
    let isolated = s.is_isolated();
    let v = if isolated {
        json!({
            "singularity": s.to_string(),
            "isolated": true,
            "terminal": s.is_terminal()?,
            "canonical": s.canonical_form()?.to_string(),
        })
    } else {
        json!({ "singularity": s.to_string(), "isolated": false, "terminal": null, "canonical": null })
    };
    Ok(Output::object(v))
}

fn identifiers(src: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in src.chars().chain([' ']) {
        if ch.is_alphabetic() || ch == '_' || ch == '\'' || (!cur.is_empty() && ch.is_ascii_digit()) {
            cur.push(ch);
        } else if !cur.is_empty() {
            if !out.contains(&cur) {
                out.push(cur.clone());
            }
            cur.clear();
        }
    }
    out
}

fn expand(expr: &str, vars: Option<&str>) -> Run {
    let ring = match vars {
        Some(v) => parse_weight_system(v)?,
        None => {
            let names = identifiers(expr);
            if names.is_empty() {
                WeightSystem::standard(["t"])?
            } else {
                WeightSystem::standard(names)?
            }
        }
    };
    let p = parse_poly(expr, &ring).map_err(|e| Failure::Usage(e.to_string()))?;
    let degree = p.weighted_degree().ok();
    Ok(Output::object(json!({
        "poly": p.to_string(),
        "terms": p.num_terms(),
        "degree": degree.map(|d| d.degree),
        "homogeneous": degree.map(|d| d.homogeneous),
    })))
}

fn pfaffians(input: Option<&str>, family: Option<&str>, seed: u64) -> Run {
    let ring = ambient_ring();
    let (matrix, extra) = match (input, family) {
        (Some(path), _) => {
            let mut text = String::new();
            if path == "-" {
                std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(e.to_string()))?;
            } else {
                text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            }
            let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            (SkewMatrix5::from_json(&v, &ring)?, Value::Null)
        }
        (None, Some(kind)) => {
            let kind: FamilyKind = kind.parse()?;
            let f = random_family(kind, &mut trial_rng(seed, kind, 0))?;
            let g: Vec<String> = f.unprojection.iter().map(|p| p.to_string()).collect();
            (f.matrix, json!({ "family": kind.to_string(), "seed": seed, "unprojection": g }))
        }
        (None, None) => return Err(Failure::Usage("give --input FILE or --family tom|jerry|tj".into())),
    };
    let pf = max_pfaffians(&matrix)?;
    let mut v = matrix.to_json();
    v["pfaffians"] = json!(pf.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    if !extra.is_null() {
        v["family"] = extra["family"].clone();
        v["seed"] = extra["seed"].clone();
        v["unprojection"] = extra["unprojection"].clone();
    }
    Ok(Output::object(v))
}

fn run(cli: &Cli) -> Run {
    let g = &cli.global;
    match &cli.command {
        Command::Tables { which } => Ok(Output::Rendered(render_table(*which, g.format)?)),
        Command::Invariants { r, a, e } => invariants(*r, *a, *e),
        Command::Terminal { singularity } => terminal(singularity),
        Command::Hilbert { which, terms } => {
            let h = match which {
                HilbertCommand::Lemma1 { r, a, e } => HilbertSeries::lemma1(*r, *a, *e)?,
                HilbertCommand::Wps { weights } => HilbertSeries::of_wps(weights)?,
                HilbertCommand::Hypersurface { degree, weights } => HilbertSeries::of_hypersurface(weights, *degree)?,
                HilbertCommand::Icecream => fanoforge_core::hilbert::ice_cream_a3(),
            };
            series(&h, *terms)
        }
        Command::Classify { r, equation } => {
            let eq = OrbifoldEquation::parse(*r, equation)?;
            Ok(Output::object(serde_json::to_value(classify(&eq)).expect("classification serializes")))
        }
        Command::Moduli { family } => {
            let fams = match family {
                Some(f) => vec![f.parse::<ModuliFamily>()?],
                None => ModuliFamily::ALL.to_vec(),
            };
            let reports = fams.into_iter().map(moduli_dimension).collect::<Result<Vec<_>, _>>()?;
            Ok(Output::rows(serde_json::to_value(reports).expect("reports serialize")))
        }
        Command::Verify { target } => {
            let t: VerifyTarget = target.parse()?;
            let rep = verify(t, g.seed, g.trials)?;
            let passed = rep.passed();
            let out = Output::Verify(rep);
            if passed { Ok(out) } else { Err(Failure::Verification(out)) }
        }
        Command::Expand { expr, vars } => expand(expr, vars.as_deref()),
        Command::Pfaffians { input, family } => pfaffians(input.as_deref(), family.as_deref(), g.seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.global.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{}", out.render(cli.global.format));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
