//! Vertex orderings and the induced lexicographic order on vertex pairs.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::EdgePair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("vertex {vertex} is out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} appears more than once")]
    Repeated(usize),
    #[error("ordering has {got} vertices, the graph has {expected}")]
    WrongLength { expected: usize, got: usize },
}

/// A total order on `0..n`, stored both as a sequence and as ranks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    sequence: Vec<usize>,
    rank: Vec<usize>,
}

impl VertexOrdering {
    pub fn identity(n: usize) -> Self {
        VertexOrdering { sequence: (0..n).collect(), rank: (0..n).collect() }
    }

    /// `sequence[i]` is the vertex placed at position `i`.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self, OrderingError> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(OrderingError::OutOfRange { vertex: v, n });
            }
            if rank[v] != usize::MAX {
                return Err(OrderingError::Repeated(v));
            }
            rank[v] = i;
        }
        Ok(VertexOrdering { sequence, rank })
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// 0-based position of `v`.
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn vertex_at(&self, position: usize) -> usize {
        self.sequence[position]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sequence
    }

    /// Ranks of the pair's endpoints, smaller first.
    pub fn pair_ranks(&self, p: EdgePair) -> (usize, usize) {
        let (a, b) = (self.rank[p.u()], self.rank[p.v()]);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn compare_pairs(&self, p: EdgePair, q: EdgePair) -> Ordering {
        self.pair_ranks(p).cmp(&self.pair_ranks(q))
    }
}

/// Compares two pairs as 2-element sets: first by their earlier vertex,
/// then by their later one.
pub fn pair_lex_compare(order: &VertexOrdering, p: EdgePair, q: EdgePair) -> Ordering {
    order.compare_pairs(p, q)
}
