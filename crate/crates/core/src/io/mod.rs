//! The `.g` edge-list format, vertex labels, generators and result output.
//!
//! ```text
//! c comment lines start with `c`
//! p <n> <m>
//! l <id> <label>        optional, one per labelled vertex
//! s <mask-or-ids>       optional side X of a bipartite graph
//! <u> <v>               one edge per line
//! ```
//!
//! The side line takes either a bitmask (`0x..` or `0b..`, bit `i` is vertex
//! `i`) or a comma/space separated list of ids. Blank lines are ignored.

pub mod generate;
pub mod output;

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex names. Unlabelled graphs use their decimal ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labels {
    names: Vec<String>,
    index: HashMap<String, usize>,
    explicit: bool,
}

impl Labels {
    pub fn numeric(n: usize) -> Labels {
        Labels { names: (0..n).map(|v| v.to_string()).collect(), index: HashMap::new(), explicit: false }
    }

    /// Panics on duplicate names.
    pub fn from_names(names: Vec<String>) -> Labels {
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            assert!(index.insert(name.clone(), i).is_none(), "duplicate label {name}");
        }
        Labels { names, index, explicit: true }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Whether the names came from the input rather than from the ids.
    pub fn is_explicit(&self) -> bool {
        self.explicit
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    /// Resolves a label first, then a decimal id.
    pub fn id(&self, token: &str) -> Option<usize> {
        if let Some(&v) = self.index.get(token) {
            return Some(v);
        }
        token.parse::<usize>().ok().filter(|&v| v < self.names.len())
    }

    /// Parses `a,b,c` (commas and/or spaces) into a set of `g`'s vertices.
    pub fn parse_set(&self, g: &Graph, text: &str) -> Result<VertexSet> {
        let mut s = g.empty_set();
        for token in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let v = self.id(token).ok_or_else(|| Error::UnknownVertex(token.to_owned()))?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Like [`Labels::parse_set`] but panics; meant for tests and fixtures.
    pub fn set(&self, g: &Graph, text: &str) -> VertexSet {
        self.parse_set(g, text).unwrap_or_else(|e| panic!("bad set {text:?}: {e}"))
    }

    /// `a,b,c` in ascending id order.
    pub fn format_set(&self, s: &VertexSet) -> String {
        s.iter().map(|v| self.name(v)).collect::<Vec<_>>().join(",")
    }

    pub fn names_of(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.name(v).to_owned()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("second `p` header")]
    DuplicateHeader,
    #[error("{0}")]
    Malformed(String),
    #[error("expected a non-negative integer, found `{0}`")]
    BadNumber(String),
    #[error("self-loop on vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {id} out of range for n = {n}")]
    OutOfRange { id: usize, n: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("edge {{{0}, {1}}} does not cross the side partition")]
    NonCrossing(usize, usize),
    #[error("label `{0}` is used twice")]
    DuplicateLabel(String),
    #[error("vertex {0} is labelled twice")]
    Relabelled(usize),
    #[error("second `s` line")]
    DuplicateSide,
}

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

/// A parsed `.g` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub labels: Labels,
    /// The X side, when the file has an `s` line.
    pub side: Option<VertexSet>,
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(i, t)| (line[..i].chars().count() + 1, t)).collect()
}

struct Cursor {
    line: usize,
}

impl Cursor {
    fn err(&self, col: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, col, kind }
    }

    fn number(&self, (col, tok): (usize, &str)) -> std::result::Result<usize, ParseError> {
        tok.parse().map_err(|_| self.err(col, ParseErrorKind::BadNumber(tok.to_owned())))
    }

    fn vertex(&self, t: (usize, &str), n: usize) -> std::result::Result<usize, ParseError> {
        let id = self.number(t)?;
        if id >= n {
            return Err(self.err(t.0, ParseErrorKind::OutOfRange { id, n }));
        }
        Ok(id)
    }
}

/// Parses a side specification: a `0x`/`0b` bitmask or a list of ids.
pub fn parse_side(text: &str, n: usize) -> std::result::Result<VertexSet, ParseErrorKind> {
    let text = text.trim();
    let text = text.strip_prefix("s ").map(str::trim).unwrap_or(text);
    let mut side = VertexSet::new(n);
    let (digits, radix) = if let Some(h) = text.strip_prefix("0x") {
        (Some(h), 16)
    } else if let Some(b) = text.strip_prefix("0b") {
        (Some(b), 2)
    } else {
        (None, 10)
    };
    if let Some(digits) = digits {
        let bits_per_digit = if radix == 16 { 4 } else { 1 };
        let digits: Vec<char> = digits.chars().filter(|&c| c != '_').collect();
        if digits.is_empty() {
            return Err(ParseErrorKind::BadNumber(text.to_owned()));
        }
        for (pos, c) in digits.iter().rev().enumerate() {
            let d = c.to_digit(radix).ok_or_else(|| ParseErrorKind::BadNumber(text.to_owned()))?;
            for b in 0..bits_per_digit {
                if d >> b & 1 == 1 {
                    let id = pos * bits_per_digit + b;
                    if id >= n {
                        return Err(ParseErrorKind::OutOfRange { id, n });
                    }
                    side.insert(id);
                }
            }
        }
        return Ok(side);
    }
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let id: usize = tok.parse().map_err(|_| ParseErrorKind::BadNumber(tok.to_owned()))?;
        if id >= n {
            return Err(ParseErrorKind::OutOfRange { id, n });
        }
        side.insert(id);
    }
    Ok(side)
}

/// Parses a `.g` document. When an `s` line is present every edge must
/// cross the side partition.
pub fn parse_graph(text: &str) -> std::result::Result<GraphDocument, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut names: Vec<Option<String>> = Vec::new();
    let mut seen_labels: HashMap<String, usize> = HashMap::new();
    let mut side: Option<VertexSet> = None;
    let mut edges: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut adjacency: std::collections::HashSet<(usize, usize)> = Default::default();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let cur = Cursor { line: i + 1 };
        last_line = i + 1;
        let toks = tokens(raw);
        let Some(&(col, first)) = toks.first() else { continue };
        if first.starts_with('c') {
            continue;
        }
        match first {
            "p" => {
                if header.is_some() {
                    return Err(cur.err(col, ParseErrorKind::DuplicateHeader));
                }
                if toks.len() != 3 {
                    return Err(cur.err(col, ParseErrorKind::Malformed("expected `p <n> <m>`".into())));
                }
                let n = cur.number(toks[1])?;
                let m = cur.number(toks[2])?;
                header = Some((n, m, cur.line));
                names = vec![None; n];
            }
            _ if header.is_none() => return Err(cur.err(col, ParseErrorKind::MissingHeader)),
            "l" => {
                let n = header.unwrap().0;
                if toks.len() != 3 {
                    return Err(cur.err(col, ParseErrorKind::Malformed("expected `l <id> <label>`".into())));
                }
                let v = cur.vertex(toks[1], n)?;
                let (lcol, label) = toks[2];
                if label.contains(',') {
                    return Err(cur.err(lcol, ParseErrorKind::Malformed("labels may not contain commas".into())));
                }
                if names[v].is_some() {
                    return Err(cur.err(toks[1].0, ParseErrorKind::Relabelled(v)));
                }
                if seen_labels.insert(label.to_owned(), v).is_some() {
                    return Err(cur.err(lcol, ParseErrorKind::DuplicateLabel(label.to_owned())));
                }
                names[v] = Some(label.to_owned());
            }
            "s" => {
                if side.is_some() {
                    return Err(cur.err(col, ParseErrorKind::DuplicateSide));
                }
                let n = header.unwrap().0;
                let rest_col = toks.get(1).map_or(col + 2, |t| t.0);
                let rest: String = toks[1..].iter().map(|t| t.1).collect::<Vec<_>>().join(" ");
                side = Some(parse_side(&rest, n).map_err(|k| cur.err(rest_col, k))?);
            }
            _ => {
                let n = header.unwrap().0;
                if toks.len() != 2 {
                    return Err(cur.err(col, ParseErrorKind::Malformed("expected an edge `u v`".into())));
                }
                let u = cur.vertex(toks[0], n)?;
                let v = cur.vertex(toks[1], n)?;
                if u == v {
                    return Err(cur.err(toks[1].0, ParseErrorKind::Loop(u)));
                }
                let key = (u.min(v), u.max(v));
                if !adjacency.insert(key) {
                    return Err(cur.err(col, ParseErrorKind::DuplicateEdge(key.0, key.1)));
                }
                edges.push((u, v, cur.line, col));
            }
        }
    }

    let Some((n, m, header_line)) = header else {
        return Err(ParseError { line: last_line.max(1), col: 1, kind: ParseErrorKind::MissingHeader });
    };
    if edges.len() != m {
        return Err(ParseError {
            line: header_line,
            col: 1,
            kind: ParseErrorKind::EdgeCountMismatch { declared: m, found: edges.len() },
        });
    }
    if let Some(x) = &side {
        if let Some(&(u, v, line, col)) = edges.iter().find(|(u, v, ..)| x.contains(*u) == x.contains(*v)) {
            return Err(ParseError { line, col, kind: ParseErrorKind::NonCrossing(u, v) });
        }
    }
    let graph = Graph::new(n, edges.iter().map(|&(u, v, ..)| (u, v))).expect("edges validated while parsing");
    let labels = if names.iter().any(Option::is_some) {
        let names: Vec<String> =
            names.into_iter().enumerate().map(|(v, s)| s.unwrap_or_else(|| v.to_string())).collect();
        let mut distinct = std::collections::HashSet::new();
        if let Some(dup) = names.iter().find(|s| !distinct.insert(s.as_str())) {
            return Err(ParseError { line: header_line, col: 1, kind: ParseErrorKind::DuplicateLabel(dup.clone()) });
        }
        Labels::from_names(names)
    } else {
        Labels::numeric(n)
    };
    Ok(GraphDocument { graph, labels, side })
}

/// Writes a graph in `.g` form; `l` lines only for explicit labels.
pub fn write_graph(g: &Graph, labels: &Labels, side: Option<&VertexSet>) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    if labels.is_explicit() {
        for v in 0..g.n() {
            writeln!(out, "l {} {}", v, labels.name(v)).unwrap();
        }
    }
    if let Some(x) = side {
        let ids: Vec<String> = x.iter().map(|v| v.to_string()).collect();
        writeln!(out, "s {}", ids.join(",")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_edge_document() {
        let doc = parse_graph("p 3 0\n").unwrap();
        assert_eq!(doc.graph.n(), 3);
        assert_eq!(doc.graph.m(), 0);
        assert!(!doc.labels.is_explicit());
    }

    #[test]
    fn loop_is_reported_with_location() {
        let e = parse_graph("p 3 1\n2 2\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Loop(2));
        assert_eq!((e.line, e.col), (2, 3));
    }

    #[test]
    fn duplicate_edge_is_reported_with_location() {
        let e = parse_graph("c dup\np 3 2\n0 1\n  1 0\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateEdge(0, 1));
        assert_eq!((e.line, e.col), (4, 3));
    }

    #[test]
    fn header_problems() {
        assert_eq!(parse_graph("0 1\n").unwrap_err().kind, ParseErrorKind::MissingHeader);
        assert_eq!(parse_graph("").unwrap_err().kind, ParseErrorKind::MissingHeader);
        assert_eq!(parse_graph("p 2 0\np 2 0\n").unwrap_err().kind, ParseErrorKind::DuplicateHeader);
        assert_eq!(
            parse_graph("p 3 2\n0 1\n").unwrap_err().kind,
            ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 }
        );
        assert_eq!(parse_graph("p x 0\n").unwrap_err().kind, ParseErrorKind::BadNumber("x".into()));
    }

    #[test]
    fn out_of_range_ids() {
        let e = parse_graph("p 3 1\n0 3\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::OutOfRange { id: 3, n: 3 });
        assert_eq!(e.col, 3);
    }

    #[test]
    fn labels_and_sets() {
        let doc = parse_graph("p 3 2\nl 0 x\nl 2 z\n0 1\n1 2\n").unwrap();
        let l = &doc.labels;
        assert_eq!(l.name(1), "1");
        assert_eq!(l.id("z"), Some(2));
        assert_eq!(l.id("1"), Some(1));
        assert_eq!(l.parse_set(&doc.graph, "x, 1").unwrap().to_vec(), vec![0, 1]);
        assert_eq!(l.parse_set(&doc.graph, "w"), Err(Error::UnknownVertex("w".into())));
        assert_eq!(
            parse_graph("p 2 0\nl 0 a\nl 1 a\n").unwrap_err().kind,
            ParseErrorKind::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn side_line_forms() {
        for spec in ["s 0x5", "s 0b101", "s 0,2", "s 0 2"] {
            let doc = parse_graph(&format!("p 4 2\n{spec}\n0 1\n2 3\n")).unwrap();
            assert_eq!(doc.side.unwrap().to_vec(), vec![0, 2], "{spec}");
        }
        let e = parse_graph("p 4 1\ns 0,1\n0 1\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonCrossing(0, 1));
        assert_eq!(e.line, 3);
        assert_eq!(parse_side("0x10", 4), Err(ParseErrorKind::OutOfRange { id: 4, n: 4 }));
    }

    #[test]
    fn round_trip() {
        let text = "p 4 3\nl 0 a\nl 1 b\nl 2 c\nl 3 d\ns 0,2\n0 1\n0 3\n1 2\n";
        let doc = parse_graph(text).unwrap();
        assert_eq!(write_graph(&doc.graph, &doc.labels, doc.side.as_ref()), text);
    }
}
