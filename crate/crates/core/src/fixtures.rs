//! Small labelled graphs with known module structure, shared by the tests,
//! the acceptance suite and `abmod gen fixture`.

use crate::graph::{families, Graph};
use crate::io::Labels;

fn labelled(names: &str, edges: &str) -> (Graph, Labels) {
    let labels = Labels::from_names(names.split(',').map(str::to_owned).collect());
    let pairs = edges.split_whitespace().map(|e| {
        let (u, v) = e.split_once('-').expect("edge written as u-v");
        (labels.id(u).expect("known label"), labels.id(v).expect("known label"))
    });
    let g = Graph::new(labels.len(), pairs).expect("fixture edges are valid");
    (g, labels)
}

/// Eight vertices `a..h` whose standard modular decomposition has a prime
/// root over `{a}, {b,c,d}, {e}, {f,g}, {h}`, a series node on `{b,c,d}` and
/// parallel nodes on `{b,d}` and `{f,g}`.
pub fn gallai8() -> (Graph, Labels) {
    labelled("a,b,c,d,e,f,g,h", "a-b a-c a-d b-c c-d e-b e-c e-d e-f e-g f-h g-h")
}

/// Seven vertices `a..g` where `{d,e,f}` is a (1,1)-module but not a (1,0)-
/// or (0,1)-module.
pub fn near_module7() -> (Graph, Labels) {
    labelled("a,b,c,d,e,f,g", "a-b b-c d-a d-b e-a e-b e-c e-g f-a f-b f-c")
}

/// Two induced P4s, `a-b-c-d` and `e-f-g-h`, joined so that every vertex
/// misses at most one edge to the other side.
pub fn two_p4_join() -> (Graph, Labels) {
    labelled(
        "a,b,c,d,e,f,g,h",
        "a-b b-c a-e c-d e-f f-g g-h b-e b-f a-g b-h c-e a-f c-h c-g d-e d-f d-h d-g",
    )
}

/// The 5-cycle `a-b-c-d-e`.
pub fn c5() -> (Graph, Labels) {
    (families::cycle(5), Labels::from_names(["a", "b", "c", "d", "e"].map(String::from).to_vec()))
}

/// Triangle `a,b,c` with pendant vertices `d` on `a` and `e` on `b`.
pub fn bull() -> (Graph, Labels) {
    (families::bull(), Labels::from_names(["a", "b", "c", "d", "e"].map(String::from).to_vec()))
}

/// Looks a fixture up by name.
pub fn by_name(name: &str) -> Option<(Graph, Labels)> {
    Some(match name {
        "gallai8" => gallai8(),
        "near-module7" => near_module7(),
        "two-p4-join" => two_p4_join(),
        "c5" => c5(),
        "bull" => bull(),
        _ => return None,
    })
}

pub const NAMES: [&str; 5] = ["gallai8", "near-module7", "two-p4-join", "c5", "bull"];
