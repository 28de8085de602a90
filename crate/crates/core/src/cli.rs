//! Command line front end. JSON reports go to standard output, one-line
//! summaries to standard error. Exit codes: 0 success (and all identities
//! verified), 1 verification failure, 2 usage, 3 io, 4 malformed input,
//! 5 bad name or cycle notation, 6 degree mismatch, 7 invalid action,
//! 8 budget exceeded, 9 internal consistency violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::counting::{orbit_count_oracle, orbital_order_polynomial, verify_reciprocity};
use crate::error::{Error, Result};
use crate::graph::{
    acyclic_orientations, coloring_orbit_count, even_chromatic_polynomial,
    even_proper_coloring_orbits, orbital_chromatic_polynomial, verify_graph_reciprocity,
};
use crate::io::{
    format_permutation, parse_graph, parse_group, parse_poset, NamedGraph, NamedPoset, SymbolTable,
};
use crate::polynomial::Polynomial;
use crate::poset::order_polynomial;
use crate::{Rational, RationalPolynomial, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "orbipoly",
    version,
    about = "Exact order, orbital order, and orbital chromatic polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order polynomial of a poset
    OrderPoly {
        poset: PathBuf,
        /// Count strictly order preserving maps
        #[arg(long)]
        strict: bool,
        /// Tabulate values for n = 1,…,max_n (default: size + 1)
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Orbital order polynomial of a poset under a group action
    OrbitalOrderPoly {
        poset: PathBuf,
        /// Group file acting on the poset's elements
        #[arg(long)]
        group: PathBuf,
        /// Count strictly order preserving maps
        #[arg(long)]
        strict: bool,
        /// Cross-check every tabulated value against the enumeration oracle
        #[arg(long)]
        verify: bool,
        /// Tabulate values for n = 1,…,max_n (default: size + 1)
        #[arg(long)]
        max_n: Option<u32>,
        /// Enumeration budget (default: env ORBIPOLY_BUDGET or 2000000)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Orbital chromatic polynomial of a graph under a group action
    Chromatic {
        graph: PathBuf,
        /// Group file acting on the graph's vertices
        #[arg(long)]
        group: PathBuf,
        /// Count orbits of even proper colorings instead
        #[arg(long)]
        even: bool,
        /// Cross-check every tabulated value against the enumeration oracle
        #[arg(long)]
        verify: bool,
        /// Tabulate values for n = 1,…,max_n (default: vertex count + 1)
        #[arg(long)]
        max_n: Option<u32>,
        /// Enumeration budget (default: env ORBIPOLY_BUDGET or 2000000)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check both orbital order reciprocity identities
    VerifyReciprocity {
        poset: PathBuf,
        #[arg(long)]
        group: PathBuf,
        /// Check n = 1,…,max_n (default: size + 1)
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check both graph reciprocity identities
    VerifyGraphReciprocity {
        graph: PathBuf,
        #[arg(long)]
        group: PathBuf,
        /// Check n = 1,…,max_n (default: vertex count + 1)
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List the acyclic orientations of a graph
    AcyclicOrientations { graph: PathBuf },
    /// Evaluate a polynomial given by ascending coefficients at an integer
    Eval {
        /// Comma-separated rational coefficients, constant term first
        #[arg(long, required = true, value_delimiter = ',')]
        coeffs: Vec<String>,
        /// Evaluation point
        #[arg(long, allow_hyphen_values = true)]
        at: i64,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => 3,
        Error::Json(_)
        | Error::MalformedInput(_)
        | Error::NotAPartialOrder { .. }
        | Error::BadOrientationHead { .. } => 4,
        Error::UnknownElement { .. }
        | Error::RepeatedElement { .. }
        | Error::BadCycleSyntax(_)
        | Error::NotABijection { .. } => 5,
        Error::DegreeInputMismatch { .. } | Error::SizeMismatch { .. } => 6,
        Error::InvalidOrderAction { .. }
        | Error::InvalidGraphAction { .. }
        | Error::InvalidAction { .. } => 7,
        Error::BudgetExceeded { .. } => 8,
        Error::RouteMismatch { .. }
        | Error::DegreeMismatch { .. }
        | Error::NonIntegralBurnside { .. }
        | Error::CycleNotAntichain { .. }
        | Error::DuplicateAbscissa { .. }
        | Error::CyclicOrientation { .. } => 9,
    }
}

fn resolve_budget(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ORBIPOLY_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

fn load_poset(path: &Path) -> Result<NamedPoset> {
    parse_poset(&fs::read_to_string(path)?)
}

fn load_graph(path: &Path) -> Result<NamedGraph> {
    parse_graph(&fs::read_to_string(path)?)
}

fn load_group(path: &Path, names: &SymbolTable) -> Result<crate::permgroup::PermGroup> {
    parse_group(&fs::read_to_string(path)?, names)
}

fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn polynomial_json(p: &RationalPolynomial) -> Value {
    json!({
        "degree": p.degree(),
        "coefficients": p.coefficient_strings(),
    })
}

/// Rows n = 1,…,max_n of polynomial values, with an oracle column when the
/// supplied counter yields one; any disagreement is a route mismatch.
fn table_rows<F>(polynomial: &RationalPolynomial, max_n: u32, mut oracle: F) -> Result<Vec<Value>>
where
    F: FnMut(u32) -> Result<Option<u64>>,
{
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let value = polynomial.evaluate(n as i64);
        let row = match oracle(n)? {
            Some(count) => {
                if value != Rational::from_integer(BigInt::from(count)) {
                    return Err(Error::RouteMismatch {
                        n: n as i64,
                        formula: value.to_string(),
                        oracle: count.to_string(),
                    });
                }
                json!({"n": n, "value": rational_string(&value), "oracle": count})
            }
            None => json!({"n": n, "value": rational_string(&value)}),
        };
        rows.push(row);
    }
    Ok(rows)
}

fn emit(report: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serialization cannot fail")
    );
}

fn execute(command: Command) -> Result<bool> {
    match command {
        Command::OrderPoly {
            poset,
            strict,
            max_n,
        } => {
            let named = load_poset(&poset)?;
            let polynomial = order_polynomial(&named.poset, strict)?;
            let max_n = max_n.unwrap_or(named.poset.size() as u32 + 1);
            let report = json!({
                "command": "order-poly",
                "size": named.poset.size(),
                "strict": strict,
                "polynomial": polynomial_json(&polynomial),
                "values": table_rows(&polynomial, max_n, |_| Ok(None))?,
            });
            emit(&report);
            eprintln!(
                "order polynomial ({}) of a {}-element poset: degree {}",
                if strict { "strict" } else { "weak" },
                named.poset.size(),
                named.poset.size()
            );
            Ok(true)
        }
        Command::OrbitalOrderPoly {
            poset,
            group,
            strict,
            verify,
            max_n,
            budget,
        } => {
            let named = load_poset(&poset)?;
            let group = load_group(&group, &named.names)?;
            let budget = resolve_budget(budget);
            let result = orbital_order_polynomial(&named.poset, &group, strict, verify, budget)?;
            let max_n = max_n.unwrap_or(named.poset.size() as u32 + 1);
            let values = table_rows(&result.polynomial, max_n, |n| {
                if verify {
                    orbit_count_oracle(&named.poset, &group, n, strict, budget).map(Some)
                } else {
                    Ok(None)
                }
            })?;
            let report = json!({
                "command": "orbital-order-poly",
                "size": named.poset.size(),
                "group_order": group.order(),
                "strict": strict,
                "verified": verify,
                "polynomial": polynomial_json(&result.polynomial),
                "per_group_element": result
                    .per_group_element
                    .iter()
                    .map(|s| json!({
                        "element": format_permutation(&s.element, &named.names),
                        "cycle_count": s.cycle_count,
                        "polynomial": polynomial_json(&s.polynomial),
                    }))
                    .collect::<Vec<_>>(),
                "values": values,
            });
            emit(&report);
            eprintln!(
                "orbital order polynomial ({}) over a group of order {}: degree {}{}",
                if strict { "strict" } else { "weak" },
                group.order(),
                named.poset.size(),
                if verify {
                    format!(", oracle agreement checked for n = 1..={}", max_n)
                } else {
                    String::new()
                }
            );
            Ok(true)
        }
        Command::Chromatic {
            graph,
            group,
            even,
            verify,
            max_n,
            budget,
        } => {
            let named = load_graph(&graph)?;
            let group = load_group(&group, &named.names)?;
            let budget = resolve_budget(budget);
            let max_n = max_n.unwrap_or(named.graph.vertex_count() as u32 + 1);
            let (result, kind) = if even {
                (even_chromatic_polynomial(&named.graph, &group, budget)?, "even")
            } else {
                (
                    orbital_chromatic_polynomial(&named.graph, &group, verify, budget)?,
                    "orbital",
                )
            };
            let values = table_rows(&result.polynomial, max_n, |n| {
                if even {
                    even_proper_coloring_orbits(&named.graph, &group, n, budget).map(Some)
                } else if verify {
                    coloring_orbit_count(&named.graph, &group, n, budget).map(Some)
                } else {
                    Ok(None)
                }
            })?;
            let report = json!({
                "command": "chromatic",
                "vertex_count": named.graph.vertex_count(),
                "edge_count": named.graph.edge_count(),
                "group_order": group.order(),
                "even": even,
                "verified": verify || even,
                "polynomial": polynomial_json(&result.polynomial),
                "per_group_element": result
                    .per_group_element
                    .iter()
                    .map(|s| json!({
                        "element": format_permutation(&s.element, &named.names),
                        "fixed_orientations": s.fixed_orientations,
                        "polynomial": polynomial_json(&s.polynomial),
                    }))
                    .collect::<Vec<_>>(),
                "values": values,
            });
            emit(&report);
            eprintln!(
                "{} chromatic polynomial over a group of order {}: degree {}",
                kind,
                group.order(),
                named.graph.vertex_count()
            );
            Ok(true)
        }
        Command::VerifyReciprocity {
            poset,
            group,
            max_n,
            budget,
        } => {
            let named = load_poset(&poset)?;
            let group = load_group(&group, &named.names)?;
            let budget = resolve_budget(budget);
            let max_n = max_n.unwrap_or(named.poset.size() as u32 + 1);
            let report = verify_reciprocity(&named.poset, &group, max_n, budget)?;
            let value = json!({
                "command": "verify-reciprocity",
                "size": report.poset_size,
                "sign": report.sign,
                "group_order": group.order(),
                "weak_polynomial": polynomial_json(&report.weak_polynomial),
                "strict_polynomial": polynomial_json(&report.strict_polynomial),
                "rows": report
                    .rows
                    .iter()
                    .map(|r| json!({
                        "n": r.n,
                        "weak_at_negated": rational_string(&r.weak_at_negated),
                        "even_strict_orbits": r.even_strict_orbits,
                        "weak_identity_holds": r.weak_identity_holds,
                        "strict_at_negated": rational_string(&r.strict_at_negated),
                        "even_weak_orbits": r.even_weak_orbits,
                        "strict_identity_holds": r.strict_identity_holds,
                    }))
                    .collect::<Vec<_>>(),
                "all_hold": report.all_hold,
            });
            emit(&value);
            eprintln!(
                "order reciprocity for n = 1..={}: {}",
                max_n,
                if report.all_hold { "all identities hold" } else { "FAILED" }
            );
            Ok(report.all_hold)
        }
        Command::VerifyGraphReciprocity {
            graph,
            group,
            max_n,
            budget,
        } => {
            let named = load_graph(&graph)?;
            let group = load_group(&group, &named.names)?;
            let budget = resolve_budget(budget);
            let max_n = max_n.unwrap_or(named.graph.vertex_count() as u32 + 1);
            let report = verify_graph_reciprocity(&named.graph, &group, max_n, budget)?;
            let value = json!({
                "command": "verify-graph-reciprocity",
                "vertex_count": report.vertex_count,
                "sign": report.sign,
                "group_order": group.order(),
                "chromatic_polynomial": polynomial_json(&report.chromatic),
                "even_chromatic_polynomial": polynomial_json(&report.even_chromatic),
                "rows": report
                    .rows
                    .iter()
                    .map(|r| json!({
                        "n": r.n,
                        "chromatic_at_negated": rational_string(&r.chromatic_at_negated),
                        "even_pair_orbits": r.even_pair_orbits,
                        "main_identity_holds": r.main_identity_holds,
                        "even_chromatic_at_negated": rational_string(&r.even_chromatic_at_negated),
                        "pair_orbits": r.pair_orbits,
                        "twin_identity_holds": r.twin_identity_holds,
                    }))
                    .collect::<Vec<_>>(),
                "all_hold": report.all_hold,
            });
            emit(&value);
            eprintln!(
                "graph reciprocity for n = 1..={}: {}",
                max_n,
                if report.all_hold { "all identities hold" } else { "FAILED" }
            );
            Ok(report.all_hold)
        }
        Command::AcyclicOrientations { graph } => {
            let named = load_graph(&graph)?;
            let list = acyclic_orientations(&named.graph);
            let report = json!({
                "command": "acyclic-orientations",
                "vertex_count": named.graph.vertex_count(),
                "edge_count": named.graph.edge_count(),
                "count": list.len(),
                "orientations": list
                    .iter()
                    .map(|o| o
                        .arcs(&named.graph)
                        .iter()
                        .map(|&(tail, head)| json!([named.names.name(tail), named.names.name(head)]))
                        .collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            emit(&report);
            eprintln!("{} acyclic orientations", list.len());
            Ok(true)
        }
        Command::Eval { coeffs, at } => {
            let mut parsed = Vec::with_capacity(coeffs.len());
            for c in &coeffs {
                let r = Rational::from_str(c.trim()).map_err(|e| {
                    Error::MalformedInput(format!("bad coefficient {:?}: {}", c, e))
                })?;
                parsed.push(r);
            }
            let polynomial = Polynomial::from_coefficients(parsed);
            let value = polynomial.evaluate(at);
            let report = json!({
                "command": "eval",
                "at": at,
                "polynomial": polynomial_json(&polynomial),
                "value": rational_string(&value),
            });
            emit(&report);
            eprintln!("p({}) = {}", at, rational_string(&value));
            Ok(true)
        }
    }
}
