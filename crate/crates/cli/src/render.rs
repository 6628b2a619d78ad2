//! Text, JSON and DOT documents for the subcommands.

use std::fmt::Write;

use numsgp::{NumericalSemigroup, TreeLevel};
use serde::Serialize;

#[derive(Serialize)]
struct CheckDoc<'a> {
    member: bool,
    msg: &'a [i64],
    apery: &'a [i64],
    frobenius: i64,
    genus: u64,
    pf: Vec<i64>,
    r#type: usize,
}

#[derive(Serialize)]
struct EnumerateDoc<'a> {
    genus: u64,
    count: usize,
    semigroups: &'a [NumericalSemigroup],
}

#[derive(Serialize)]
struct TreeDoc<'a> {
    levels: &'a [TreeLevel],
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

pub fn check_json(s: &NumericalSemigroup, member: bool) -> String {
    let inv = s.invariants();
    to_json(&CheckDoc {
        member,
        msg: s.msg(),
        apery: s.apery_table().as_slice(),
        frobenius: inv.frobenius,
        genus: inv.genus,
        r#type: inv.r#type,
        pf: inv.pseudo_frobenius,
    })
}

pub fn check_text(s: &NumericalSemigroup, member: bool, family: &str) -> String {
    let inv = s.invariants();
    let mut doc = String::new();
    let _ = writeln!(doc, "{s} in {family}: {member}");
    let _ = writeln!(doc, "msg: {:?}", s.msg());
    let _ = writeln!(doc, "apery: {:?}", s.apery_table().as_slice());
    let _ = writeln!(doc, "frobenius: {}", inv.frobenius);
    let _ = writeln!(doc, "genus: {}", inv.genus);
    let _ = writeln!(doc, "pf: {:?}", inv.pseudo_frobenius);
    let _ = write!(doc, "type: {}", inv.r#type);
    doc
}

pub fn enumerate_json(genus: u64, semigroups: &[NumericalSemigroup]) -> String {
    to_json(&EnumerateDoc {
        genus,
        count: semigroups.len(),
        semigroups,
    }) + "\n"
}

pub fn enumerate_text(genus: u64, semigroups: &[NumericalSemigroup]) -> String {
    let mut doc = format!("genus {genus}: {} semigroups\n", semigroups.len());
    for s in semigroups {
        let _ = writeln!(doc, "{s}");
    }
    doc
}

pub fn tree_json(levels: &[TreeLevel]) -> String {
    to_json(&TreeDoc { levels }) + "\n"
}

pub fn tree_text(levels: &[TreeLevel]) -> String {
    let mut doc = String::new();
    for (depth, level) in levels.iter().enumerate() {
        let _ = writeln!(doc, "genus {} ({} nodes)", level.genus, level.nodes.len());
        for node in &level.nodes {
            match (node.parent, node.edge) {
                (Some(p), Some(x)) => {
                    let parent = &levels[depth - 1].nodes[p].semigroup;
                    let _ = writeln!(doc, "  {}  <- {parent} minus {x}", node.semigroup);
                }
                _ => {
                    let _ = writeln!(doc, "  {}", node.semigroup);
                }
            }
        }
    }
    doc
}

/// Directed graph, parent -> child, each edge labeled with the removed
/// generator.
pub fn tree_dot(levels: &[TreeLevel]) -> String {
    let mut doc = String::from("digraph tree {\n");
    for level in levels {
        for node in &level.nodes {
            let _ = writeln!(doc, "    \"{}\";", node.semigroup);
        }
    }
    for (depth, level) in levels.iter().enumerate().skip(1) {
        for node in &level.nodes {
            if let (Some(p), Some(x)) = (node.parent, node.edge) {
                let parent = &levels[depth - 1].nodes[p].semigroup;
                let _ = writeln!(
                    doc,
                    "    \"{parent}\" -> \"{}\" [label=\"{x}\"];",
                    node.semigroup
                );
            }
        }
    }
    doc.push_str("}\n");
    doc
}
