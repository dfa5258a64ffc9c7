//! JSON and DOT rendering of results.
//!
//! Every JSON document has the shape
//! `{"schema": 1, "command": .., "meta": {..}, "result": ..}`. Sets are label
//! arrays in ascending id order and families are sorted lexicographically by
//! ids, so equal inputs give byte-identical output.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::Labels;
use crate::bitset::VertexSet;
use crate::decomposition::DecompositionTree;
use crate::graph::AbParams;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Meta {
    pub alpha: usize,
    pub beta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strategy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Only filled in on request; it would break byte-stability.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl Meta {
    pub fn new(p: AbParams) -> Meta {
        Meta { alpha: p.alpha, beta: p.beta, ..Meta::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultDocument {
    pub schema: u32,
    pub command: String,
    pub meta: Meta,
    pub result: Value,
}

impl ResultDocument {
    pub fn new(command: &str, meta: Meta, result: Value) -> ResultDocument {
        ResultDocument { schema: SCHEMA_VERSION, command: command.to_owned(), meta, result }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents always serialize")
    }
}

pub fn set_json(labels: &Labels, s: &VertexSet) -> Value {
    json!(labels.names_of(s))
}

/// Sorted copy of `family`, lexicographic on ascending ids.
pub fn sorted_family(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = family.to_vec();
    out.sort_by_cached_key(VertexSet::to_vec);
    out
}

pub fn family_json(labels: &Labels, family: &[VertexSet]) -> Value {
    Value::Array(sorted_family(family).iter().map(|s| set_json(labels, s)).collect())
}

pub fn tree_json(labels: &Labels, tree: &DecompositionTree) -> Value {
    fn node(labels: &Labels, tree: &DecompositionTree, id: usize) -> Value {
        let n = &tree.nodes[id];
        let children: Vec<Value> = n.children.iter().map(|&c| node(labels, tree, c)).collect();
        json!({ "kind": n.kind.as_str(), "vertices": set_json(labels, &n.vertices), "children": children })
    }
    node(labels, tree, tree.root)
}

/// Indented text form, one node per line.
pub fn tree_text(labels: &Labels, tree: &DecompositionTree) -> String {
    let mut out = String::new();
    let mut stack = vec![(tree.root, 0)];
    while let Some((id, depth)) = stack.pop() {
        let n = &tree.nodes[id];
        let _ = writeln!(out, "{:indent$}{} {{{}}}", "", n.kind.as_str(), labels.format_set(&n.vertices), indent = 2 * depth);
        stack.extend(n.children.iter().rev().map(|&c| (c, depth + 1)));
    }
    out
}

pub fn tree_dot(labels: &Labels, tree: &DecompositionTree) -> String {
    let mut out = String::from("digraph decomposition {\n  node [shape=box];\n");
    for id in tree.preorder() {
        let n = &tree.nodes[id];
        let label = format!("{}\\n{{{}}}", n.kind.as_str(), labels.format_set(&n.vertices)).replace('"', "\\\"");
        let _ = writeln!(out, "  n{id} [label=\"{label}\"];");
        for &c in &n.children {
            let _ = writeln!(out, "  n{id} -> n{c};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{decomposition_tree, Strategy};
    use crate::graph::families;

    #[test]
    fn families_are_sorted_lexicographically() {
        let l = Labels::numeric(4);
        let fam = [VertexSet::from_ids(4, [1, 2]), VertexSet::from_ids(4, [0, 3]), VertexSet::from_ids(4, [0, 1])];
        assert_eq!(family_json(&l, &fam), json!([["0", "1"], ["0", "3"], ["1", "2"]]));
    }

    #[test]
    fn meta_omits_absent_fields() {
        let doc = ResultDocument::new("check", Meta::new(AbParams::new(1, 0)), json!(true));
        let v: Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["meta"], json!({"alpha": 1, "beta": 0}));
    }

    #[test]
    fn tree_renderings() {
        let g = families::complete(4);
        let t = decomposition_tree(&g, AbParams::new(0, 0), Strategy::Exact).unwrap();
        let l = Labels::numeric(4);
        let v = tree_json(&l, &t);
        assert_eq!(v["kind"], "alpha_series");
        assert_eq!(v["children"].as_array().unwrap().len(), 4);
        let dot = tree_dot(&l, &t);
        assert!(dot.starts_with("digraph") && dot.matches("->").count() == 4);
        assert_eq!(tree_text(&l, &t).lines().count(), 5);
    }
}
