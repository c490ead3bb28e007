//! Command-line front end for the `derivlie` library.
//!
//! [`run`] executes a parsed [`Cli`] and returns the text to print together
//! with the exit status: 0 on success, 1 when a consistency check fails.
//! Parse and validation problems are reported as [`CliError`] (exit 2).

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use derivlie::freealg::{enumerate_basis, hilton_milnor_dims, poincare, GradedDims};
use derivlie::hall::{alphabet, hall_reduce, DecoratedProduct, Letter};
use derivlie::partition::{homology_of, ActionCalculator, PartitionComplex, Permutation};
use derivlie::qbar::reduce_against;
use derivlie::trees::{cocompose, graft, normalize, TreePoint, WeightedTree};
use derivlie::QbarElement;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

mod parse;

pub use parse::{parse_bracket, parse_monomial};

pub const SCHEMA: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error(transparent)]
    Core(#[from] derivlie::Error),
    #[error("{0}")]
    Input(String),
}

/// Exit status for errors.
pub const EXIT_ERROR: i32 = 2;
/// Exit status for a failed consistency check.
pub const EXIT_CHECK_FAILED: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "derivlie",
    version,
    about = "Mod-2 homology of algebras over the derivatives of the identity"
)]
pub struct Cli {
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of a Q̄-monomial acting on a class of the given degree.
    Reduce {
        #[arg(long)]
        degree: u32,
        /// Monomial such as "Q7 Q4".
        monomial: String,
    },
    /// Basis of the free algebra on classes of the given degrees.
    Basis(AlgebraArgs),
    /// Dimensions of the free algebra on classes of the given degrees.
    Poincare(AlgebraArgs),
    /// Homology of the partition complex and the symmetric-group action.
    PartitionHomology {
        #[arg(long)]
        n: usize,
        /// Permutation in one-line notation, e.g. "2,3,1".
        #[arg(long)]
        action: Option<String>,
    },
    /// Reduce a bracket expression such as "[x1,[x1,x2]]" or "Q3 [x1,x2]".
    Bracket {
        /// Degree of x1, x2, ...
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        expr: String,
    },
    /// Compare the free algebra on a wedge of spheres with its splitting into
    /// single spheres.
    HiltonCheck {
        #[arg(long, value_delimiter = ',', required = true)]
        spheres: Vec<u32>,
        #[arg(long)]
        max_degree: i64,
    },
    /// Weighted trees.
    #[command(subcommand)]
    Tree(TreeCommand),
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<u32>,
    #[arg(long)]
    pub max_degree: i64,
}

#[derive(Debug, Subcommand)]
pub enum TreeCommand {
    /// Split a tree as an outer tree grafted with an inner one.
    Compose {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        labels_a: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        labels_b: Vec<String>,
        #[arg(long)]
        at: String,
    },
    /// Graft the inner tree onto the leaf of the outer tree labelled `at`.
    Graft {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
        #[arg(long)]
        at: String,
    },
    /// Canonical form of a tree (or the basepoint).
    Normalize {
        #[arg(long)]
        file: PathBuf,
    },
}

/// Printed text and exit status of a successful run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }

    fn json(value: Value) -> Self {
        Self::ok(serde_json::to_string_pretty(&value).expect("JSON values serialize"))
    }
}

/// One element `Q̄^J w` of a basis listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub ops: Vec<u32>,
    pub word: String,
    pub degree: i64,
}

impl From<&DecoratedProduct> for BasisEntry {
    fn from(e: &DecoratedProduct) -> Self {
        Self {
            ops: e.ops.entries().to_vec(),
            word: e.word.to_string(),
            degree: e.degree(),
        }
    }
}

/// JSON form of `basis`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub schema: String,
    pub degrees: Vec<u32>,
    pub max_degree: i64,
    pub basis: BTreeMap<i64, Vec<BasisEntry>>,
}

pub fn basis_report(degrees: &[u32], max_degree: i64) -> Result<BasisReport, CliError> {
    let letters = alphabet(degrees)?;
    let basis = enumerate_basis(&letters, max_degree)
        .into_iter()
        .map(|(d, v)| (d, v.iter().map(BasisEntry::from).collect()))
        .collect();
    Ok(BasisReport {
        schema: SCHEMA.into(),
        degrees: degrees.to_vec(),
        max_degree,
        basis,
    })
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Reduce { degree, monomial } => reduce(*degree, monomial, json),
        Command::Basis(a) => basis(a, json),
        Command::Poincare(a) => poincare_cmd(a, json),
        Command::PartitionHomology { n, action } => partition_homology(*n, action.as_deref(), json),
        Command::Bracket { degrees, expr } => bracket(degrees, expr, json),
        Command::HiltonCheck {
            spheres,
            max_degree,
        } => hilton_check(spheres, *max_degree, json),
        Command::Tree(t) => tree(t, json),
    }
}

fn reduce(degree: u32, text: &str, json: bool) -> Result<Output, CliError> {
    if degree < 2 {
        return Err(derivlie::Error::DegreeBelowTwo(i64::from(degree)).into());
    }
    let j = parse_monomial(text)?;
    let result = reduce_against(&j, degree)?;
    if json {
        let terms: Vec<&[u32]> = result.iter().map(|m| m.entries()).collect();
        return Ok(Output::json(json!({
            "schema": SCHEMA,
            "degree": degree,
            "input": j.entries(),
            "result": terms,
        })));
    }
    Ok(Output::ok(
        result.into_iter().collect::<QbarElement>().to_string(),
    ))
}

fn basis(a: &AlgebraArgs, json: bool) -> Result<Output, CliError> {
    let report = basis_report(&a.degrees, a.max_degree)?;
    if json {
        return Ok(Output::ok(
            serde_json::to_string_pretty(&report).expect("report serializes"),
        ));
    }
    let letters = alphabet(&a.degrees)?;
    let lines: Vec<String> = enumerate_basis(&letters, a.max_degree)
        .into_iter()
        .map(|(d, v)| {
            let items: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("{d}: {}", items.join(", "))
        })
        .collect();
    Ok(Output::ok(lines.join("\n")))
}

fn poincare_cmd(a: &AlgebraArgs, json: bool) -> Result<Output, CliError> {
    let dims = poincare(&alphabet(&a.degrees)?, a.max_degree);
    if json {
        return Ok(Output::json(json!({
            "schema": SCHEMA,
            "degrees": a.degrees,
            "max_degree": a.max_degree,
            "dims": dims,
        })));
    }
    Ok(Output::ok(dims_text(&dims)))
}

fn dims_text(dims: &BTreeMap<i64, usize>) -> String {
    dims.iter()
        .map(|(d, c)| format!("{d}: {c}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_permutation(text: &str) -> Result<Permutation, CliError> {
    let images = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("bad permutation entry {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation::new(images)?)
}

fn partition_homology(n: usize, action: Option<&str>, json: bool) -> Result<Output, CliError> {
    let perm = action.map(parse_permutation).transpose()?;
    if let Some(p) = &perm {
        if p.len() != n {
            return Err(CliError::Input(format!(
                "permutation has {} entries, expected {n}",
                p.len()
            )));
        }
    }
    let pc = PartitionComplex::build(n)?;
    let hom = homology_of(&pc)?;
    let dims = hom.nonzero_dims();
    let matrix = match &perm {
        Some(p) => {
            let m = ActionCalculator::new(&pc, &hom).action(p)?.matrix;
            let rows: Vec<Vec<u8>> = (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| u8::from(m.get(i, j))).collect())
                .collect();
            Some(rows)
        }
        None => None,
    };
    if json {
        let mut v = json!({ "schema": SCHEMA, "n": n, "dims": dims });
        if let (Some(p), Some(rows)) = (&perm, &matrix) {
            v["action"] = json!({ "permutation": p.images(), "matrix": rows });
        }
        return Ok(Output::json(v));
    }
    let mut lines: Vec<String> = dims.iter().map(|(k, d)| format!("H_{k}: {d}")).collect();
    if let Some(rows) = matrix {
        lines.push(format!("action of {}:", action.unwrap_or_default()));
        for r in rows {
            lines.push(r.iter().map(ToString::to_string).collect());
        }
    }
    Ok(Output::ok(lines.join("\n")))
}

fn bracket(degrees: &[u32], text: &str, json: bool) -> Result<Output, CliError> {
    let letters: Vec<Letter> = alphabet(degrees)?;
    let e = parse_bracket(text, &letters)?;
    let result = hall_reduce(&e)?;
    if json {
        let terms: Vec<BasisEntry> = result.terms().map(BasisEntry::from).collect();
        return Ok(Output::json(json!({
            "schema": SCHEMA,
            "input": e.to_string(),
            "result": terms,
        })));
    }
    Ok(Output::ok(result.to_string()))
}

fn hilton_check(spheres: &[u32], max_degree: i64, json: bool) -> Result<Output, CliError> {
    let split = hilton_milnor_dims(spheres, max_degree)?;
    let mut counts = BTreeMap::new();
    for &d in spheres {
        *counts.entry(i64::from(d)).or_insert(0) += 1;
    }
    let direct = derivlie::freealg::homology_of_free(&GradedDims::new(counts)?, max_degree);
    let agree = direct == split;
    let code = if agree { 0 } else { EXIT_CHECK_FAILED };
    let text = if json {
        serde_json::to_string_pretty(&json!({
            "schema": SCHEMA,
            "spheres": spheres,
            "max_degree": max_degree,
            "direct": direct,
            "split": split,
            "agree": agree,
        }))
        .expect("JSON values serialize")
    } else {
        let degrees: BTreeSet<i64> = direct.keys().chain(split.keys()).copied().collect();
        let mut lines = vec!["degree direct split".to_string()];
        for d in degrees {
            let (a, b) = (
                direct.get(&d).copied().unwrap_or(0),
                split.get(&d).copied().unwrap_or(0),
            );
            let mark = if a == b { "" } else { "  <- mismatch" };
            lines.push(format!("{d} {a} {b}{mark}"));
        }
        lines.push(if agree { "agree" } else { "MISMATCH" }.to_string());
        lines.join("\n")
    };
    Ok(Output { text, code })
}

fn read_tree(path: &PathBuf) -> Result<WeightedTree, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(WeightedTree::from_json(&text)?)
}

fn tree_value(t: &WeightedTree) -> Value {
    serde_json::to_value(t).expect("trees serialize")
}

fn tree(cmd: &TreeCommand, json: bool) -> Result<Output, CliError> {
    match cmd {
        TreeCommand::Compose {
            file,
            labels_a,
            labels_b,
            at,
        } => {
            let t = read_tree(file)?;
            let a: BTreeSet<String> = labels_a.iter().cloned().collect();
            let b: BTreeSet<String> = labels_b.iter().cloned().collect();
            let split = cocompose(&t, &a, at, &b)?;
            if json {
                let v = match &split {
                    None => json!({ "schema": SCHEMA, "basepoint": true }),
                    Some((u, v)) => json!({
                        "schema": SCHEMA,
                        "basepoint": false,
                        "outer": tree_value(u),
                        "inner": tree_value(v),
                    }),
                };
                return Ok(Output::json(v));
            }
            Ok(Output::ok(match split {
                None => "basepoint".into(),
                Some((u, v)) => format!("outer: {}\ninner: {}", u.to_json(), v.to_json()),
            }))
        }
        TreeCommand::Graft { outer, inner, at } => {
            let g = graft(&read_tree(outer)?, at, &read_tree(inner)?)?;
            if json {
                return Ok(Output::json(
                    json!({ "schema": SCHEMA, "tree": tree_value(&g) }),
                ));
            }
            Ok(Output::ok(g.to_json()))
        }
        TreeCommand::Normalize { file } => {
            let p = normalize(&read_tree(file)?)?;
            if json {
                let v = match &p {
                    TreePoint::Basepoint => json!({ "schema": SCHEMA, "basepoint": true }),
                    TreePoint::Tree(t) => {
                        json!({ "schema": SCHEMA, "basepoint": false, "tree": tree_value(t) })
                    }
                };
                return Ok(Output::json(v));
            }
            Ok(Output::ok(match p {
                TreePoint::Basepoint => "basepoint".into(),
                TreePoint::Tree(t) => t.to_json(),
            }))
        }
    }
}
