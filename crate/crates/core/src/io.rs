//! JSON input formats and cycle notation over named elements.
//!
//! Posets: {"elements": ["a","b"], "relations": [["a","b"]]}
//! Graphs: {"vertices": ["u","v"], "edges": [["u","v"]]}
//! Groups: {"degree": 2, "generators": ["(a b)"]}
//!
//! Group generators are written in disjoint-cycle notation over the element
//! names of the accompanying poset or graph file.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::permgroup::{PermGroup, Permutation};
use crate::poset::Poset;

/// Element names in index order, with reverse lookup.
#[derive(Debug, Clone)]
pub struct SymbolTable {
    names: Vec<String>,
}

impl SymbolTable {
    pub fn new(names: Vec<String>) -> Result<Self> {
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains(|c: char| c.is_whitespace() || c == '(' || c == ')')
            {
                return Err(Error::MalformedInput(format!(
                    "element name {:?} must be nonempty and free of whitespace and parentheses",
                    name
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::MalformedInput(format!(
                    "element name {:?} appears twice",
                    name
                )));
            }
        }
        Ok(SymbolTable { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index(name).ok_or_else(|| Error::UnknownElement {
            name: name.to_string(),
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    elements: Vec<String>,
    relations: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    degree: usize,
    generators: Vec<String>,
}

pub struct NamedPoset {
    pub poset: Poset,
    pub names: SymbolTable,
}

pub struct NamedGraph {
    pub graph: SimpleGraph,
    pub names: SymbolTable,
}

pub fn parse_poset(text: &str) -> Result<NamedPoset> {
    let file: PosetFile = serde_json::from_str(text)?;
    let names = SymbolTable::new(file.elements)?;
    let mut relations = Vec::with_capacity(file.relations.len());
    for (p, q) in &file.relations {
        relations.push((names.require(p)?, names.require(q)?));
    }
    let poset = Poset::from_relations(names.len(), &relations)?;
    Ok(NamedPoset { poset, names })
}

pub fn parse_graph(text: &str) -> Result<NamedGraph> {
    let file: GraphFile = serde_json::from_str(text)?;
    let names = SymbolTable::new(file.vertices)?;
    let mut edges = Vec::with_capacity(file.edges.len());
    for (u, v) in &file.edges {
        edges.push((names.require(u)?, names.require(v)?));
    }
    let graph = SimpleGraph::new(names.len(), &edges)?;
    Ok(NamedGraph { graph, names })
}

/// Parses one permutation in disjoint-cycle notation, e.g. "(a b)(c d)" or
/// "()" for the identity. Every name must belong to the symbol table and may
/// appear at most once.
pub fn parse_cycle_notation(text: &str, names: &SymbolTable) -> Result<Permutation> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; names.len()];
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::BadCycleSyntax("empty permutation string".into()));
    }
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::BadCycleSyntax(format!(
                "expected '(' at {:?}",
                rest
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::BadCycleSyntax(format!("unclosed cycle in {:?}", text)))?;
        let mut cycle = Vec::new();
        for name in rest[1..close].split_whitespace() {
            let index = names.require(name)?;
            if seen[index] {
                return Err(Error::RepeatedElement {
                    name: name.to_string(),
                });
            }
            seen[index] = true;
            cycle.push(index);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Permutation::from_cycles(names.len(), &cycles)
}

/// Renders a permutation in cycle notation over element names, the inverse
/// of `parse_cycle_notation`.
pub fn format_permutation(g: &Permutation, names: &SymbolTable) -> String {
    let mut seen = vec![false; g.degree()];
    let mut out = String::new();
    for start in 0..g.degree() {
        if seen[start] || g.apply(start) == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            out.push_str(names.name(x));
            x = g.apply(x);
            if x == start {
                break;
            }
            out.push(' ');
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses a group file and closes its generators. The file's degree must
/// match the element count of the poset or graph it acts on.
pub fn parse_group(text: &str, names: &SymbolTable) -> Result<PermGroup> {
    let file: GroupFile = serde_json::from_str(text)?;
    if file.degree != names.len() {
        return Err(Error::DegreeInputMismatch {
            group: file.degree,
            expected: names.len(),
        });
    }
    let mut generators = Vec::with_capacity(file.generators.len());
    for g in &file.generators {
        generators.push(parse_cycle_notation(g, names)?);
    }
    PermGroup::closure(names.len(), &generators)
}
