//! Simple undirected graphs with a dense adjacency matrix.

use std::fmt;

use thiserror::Error;

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgePair {
    u: usize,
    v: usize,
}

impl EdgePair {
    /// Normalizes the endpoints so that the smaller id comes first.
    ///
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge pair needs two distinct vertices");
        if a < b {
            EdgePair { u: a, v: b }
        } else {
            EdgePair { u: b, v: a }
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_endpoint(self, other: EdgePair) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }
}

/// Prints the pair with 1-based ids, e.g. `1-4`.
impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u + 1, self.v + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(EdgePair),
}

#[derive(Clone, PartialEq, Eq)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { words, bits: vec![0; words * n] }
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// The edge list is sorted ascending and edge ids are positions in it.
/// Adjacency and non-adjacency queries are constant time.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<EdgePair>,
    matrix: BitMatrix,
    // (neighbor, edge id), sorted by neighbor
    incidence: Vec<Vec<(usize, EdgeId)>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), matrix: BitMatrix::new(n), incidence: vec![Vec::new(); n] }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut matrix = BitMatrix::new(n);
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = EdgePair::new(a, b);
            if matrix.get(a, b) {
                return Err(GraphError::DuplicateEdge(e));
            }
            matrix.set(a, b);
            matrix.set(b, a);
            list.push(e);
        }
        list.sort_unstable();
        let mut incidence = vec![Vec::new(); n];
        for (id, e) in list.iter().enumerate() {
            incidence[e.u].push((e.v, id));
            incidence[e.v].push((e.u, id));
        }
        for row in &mut incidence {
            row.sort_unstable();
        }
        Ok(Graph { n, edges: list, matrix, incidence })
    }

    /// Like [`Graph::from_edges`] for pairs that are already known to be valid.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = EdgePair>,
    {
        Self::from_edges(n, pairs.into_iter().map(EdgePair::endpoints))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgePair] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> EdgePair {
        self.edges[id]
    }

    /// `false` for `a == b`.
    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.matrix.get(a, b)
    }

    /// True iff `a != b` and `ab` is not an edge.
    #[inline]
    pub fn non_adjacent(&self, a: usize, b: usize) -> bool {
        a != b && !self.matrix.get(a, b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge id)` pairs of `v`, ascending by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.incidence[v]
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<EdgeId> {
        if a >= self.n || b >= self.n || !self.adjacent(a, b) {
            return None;
        }
        let row = &self.incidence[a];
        row.binary_search_by_key(&b, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    /// The spanning subgraph with the given edges.
    ///
    /// Panics if an id is out of range; duplicates are collapsed.
    pub fn spanning_subgraph<I>(&self, ids: I) -> Graph
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut keep = vec![false; self.m()];
        for id in ids {
            keep[id] = true;
        }
        let pairs = self.edges.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e);
        Graph::from_pairs(self.n, pairs).expect("subset of a simple graph is simple")
    }

    /// Removes one vertex and renumbers the rest to `0..n-1`.
    pub fn remove_vertex(&self, x: usize) -> Graph {
        let shift = |v: usize| if v > x { v - 1 } else { v };
        let pairs = self.edges.iter().filter(|e| !e.contains(x)).map(|e| (shift(e.u), shift(e.v)));
        Graph::from_edges(self.n - 1, pairs).expect("induced subgraph of a simple graph")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges.iter().map(ToString::to_string).collect::<Vec<_>>())
            .finish()
    }
}
