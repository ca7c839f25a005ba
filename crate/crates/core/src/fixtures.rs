//! Small named graphs used by tests, benches and the CLI self-test.

use crate::graph::{EdgePair, Graph};
use crate::ordering::VertexOrdering;

/// Seven vertices, thirteen edges; threshold dimension two but neither
/// split nor paraglider-free.
pub const SEVEN_VERTEX_TEXT: &str = "7 13\n1 4\n1 5\n2 3\n2 4\n2 5\n2 7\n3 5\n3 6\n4 5\n4 6\n4 7\n5 6\n6 7\n";

fn one_based(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().map(|&(a, b)| (a - 1, b - 1))).expect("fixture is simple")
}

pub fn seven_vertex() -> Graph {
    crate::io::parse_graph(SEVEN_VERTEX_TEXT).expect("fixture parses")
}

/// A Lex-BFS ordering of [`seven_vertex`]: 1, 4, 5, 6, 2, 7, 3.
pub fn seven_vertex_lexbfs_order() -> VertexOrdering {
    VertexOrdering::from_sequence(vec![0, 3, 4, 5, 1, 6, 2]).expect("permutation")
}

/// Complement of `P3 ∪ K2`, labeled so that `1 2 3 4 5` is a pentagon
/// after two-coloring.
pub fn paraglider() -> Graph {
    one_based(5, &[(1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)])
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).expect("clique")
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star")
}

/// `k` disjoint edges.
pub fn matching(k: usize) -> Graph {
    Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).expect("matching")
}

/// Converts 1-based pairs.
pub fn pairs(list: &[(usize, usize)]) -> Vec<EdgePair> {
    list.iter().map(|&(a, b)| EdgePair::new(a - 1, b - 1)).collect()
}
