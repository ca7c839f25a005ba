//! The auxiliary graph on edges: two edges are adjacent when they are the
//! opposite edges of an alternating 4-cycle.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::graph::{EdgeId, EdgePair, Graph};
use crate::ordering::VertexOrdering;
use crate::partition::{EdgeClass, TriPartition};
use crate::recognition::alternating_cycle_between;

/// Largest edge count for which the adjacency matrix is kept.
pub const DEFAULT_DENSE_LIMIT: usize = 4000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    neighbors: Vec<Vec<EdgeId>>,
    dense: Option<(usize, Vec<u64>)>,
    component: Vec<usize>,
    components: Vec<Vec<EdgeId>>,
}

pub fn build_auxiliary(g: &Graph) -> AuxiliaryGraph {
    AuxiliaryGraph::build(g, None, DEFAULT_DENSE_LIMIT)
}

/// Like [`build_auxiliary`], but edges with `include[e] == false` are left
/// isolated without being tested.
pub fn build_auxiliary_restricted(g: &Graph, include: &[bool]) -> AuxiliaryGraph {
    assert_eq!(include.len(), g.m());
    AuxiliaryGraph::build(g, Some(include), DEFAULT_DENSE_LIMIT)
}

impl AuxiliaryGraph {
    pub fn build(g: &Graph, include: Option<&[bool]>, dense_limit: usize) -> Self {
        let m = g.m();
        let edges = g.edges();
        let wanted = |e: EdgeId| include.is_none_or(|inc| inc[e]);
        let mut neighbors = vec![Vec::new(); m];
        for i in 0..m {
            if !wanted(i) {
                continue;
            }
            for j in i + 1..m {
                if wanted(j) && alternating_cycle_between(g, edges[i], edges[j]).is_some() {
                    neighbors[i].push(j);
                    neighbors[j].push(i);
                }
            }
        }
        let dense = (m <= dense_limit).then(|| {
            let words = m.div_ceil(64).max(1);
            let mut bits = vec![0u64; words * m];
            for (e, row) in neighbors.iter().enumerate() {
                for &f in row {
                    bits[e * words + f / 64] |= 1 << (f % 64);
                }
            }
            (words, bits)
        });

        let mut component = vec![usize::MAX; m];
        let mut components = Vec::new();
        for start in 0..m {
            if component[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            component[start] = id;
            let mut head = 0;
            while head < members.len() {
                let e = members[head];
                head += 1;
                for &f in &neighbors[e] {
                    if component[f] == usize::MAX {
                        component[f] = id;
                        members.push(f);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }

        AuxiliaryGraph { neighbors, dense, component, components }
    }

    /// Number of vertices, i.e. edges of the underlying graph.
    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, e: EdgeId) -> &[EdgeId] {
        &self.neighbors[e]
    }

    pub fn adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        match &self.dense {
            Some((words, bits)) => bits[e * words + f / 64] >> (f % 64) & 1 == 1,
            None => self.neighbors[e].binary_search(&f).is_ok(),
        }
    }

    pub fn is_isolated(&self, e: EdgeId) -> bool {
        self.neighbors[e].is_empty()
    }

    /// Auxiliary edges `(e, f)` with `e < f`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(e, row)| row.iter().filter(move |&&f| f > e).map(move |&f| (e, f)))
    }

    pub fn component_of(&self, e: EdgeId) -> usize {
        self.component[e]
    }

    /// All components, trivial ones included, ordered by smallest member.
    pub fn components(&self) -> &[Vec<EdgeId>] {
        &self.components
    }
}

/// A closed walk of odd length in the auxiliary graph, listed as edges of
/// the underlying graph. Consecutive entries (cyclically) are adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleCertificate {
    pub edges: Vec<EdgePair>,
}

impl OddCycleCertificate {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Re-checks the cycle directly against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let k = self.edges.len();
        k >= 3
            && k % 2 == 1
            && self.edges.iter().all(|e| g.edge_id(e.u(), e.v()).is_some())
            && (0..k).all(|i| alternating_cycle_between(g, self.edges[i], self.edges[(i + 1) % k]).is_some())
    }
}

/// Colors every non-trivial component: its lexicographically smallest
/// member gets class 1 and the coloring is propagated by BFS. Isolated
/// auxiliary vertices stay free. Fails with an odd cycle if some component
/// is not bipartite.
pub fn two_color(aux: &AuxiliaryGraph, g: &Graph, order: &VertexOrdering) -> Result<TriPartition, OddCycleCertificate> {
    let m = aux.vertex_count();
    let mut tp = TriPartition::all_free(m);
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![0usize; m];

    for comp in aux.components() {
        if comp.len() < 2 {
            continue;
        }
        let root =
            *comp.iter().min_by(|&&e, &&f| order.compare_pairs(g.edge(e), g.edge(f))).expect("component is non-empty");
        tp.set(root, EdgeClass::One);
        let mut queue = VecDeque::from([root]);
        while let Some(e) = queue.pop_front() {
            let ce = tp.class(e);
            for &f in aux.neighbors(e) {
                match tp.class(f) {
                    EdgeClass::Free => {
                        tp.set(f, ce.opposite());
                        parent[f] = e;
                        depth[f] = depth[e] + 1;
                        queue.push_back(f);
                    }
                    cf if cf == ce => {
                        return Err(odd_cycle(g, &parent, &depth, e, f));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(tp)
}

fn odd_cycle(g: &Graph, parent: &[usize], depth: &[usize], x: usize, y: usize) -> OddCycleCertificate {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    // lca .. x, then y .. back up to just below the lca
    let cycle: Vec<EdgeId> = left.into_iter().rev().chain(right).collect();
    OddCycleCertificate { edges: cycle.into_iter().map(|e| g.edge(e)).collect() }
}

/// Text form: one `u-v u-v` line per auxiliary edge, sorted, framed by
/// comment lines with the vertex count and the isolated vertices.
pub fn format_auxiliary(g: &Graph, aux: &AuxiliaryGraph) -> String {
    let mut lines: Vec<(EdgePair, EdgePair)> = aux
        .edges()
        .map(|(e, f)| {
            let (p, q) = (g.edge(e), g.edge(f));
            if p < q {
                (p, q)
            } else {
                (q, p)
            }
        })
        .collect();
    lines.sort_unstable();
    let mut out = String::new();
    let _ = writeln!(out, "# vertices {} edges {}", aux.vertex_count(), lines.len());
    for (p, q) in lines {
        let _ = writeln!(out, "{p} {q}");
    }
    let isolated: Vec<String> =
        (0..aux.vertex_count()).filter(|&e| aux.is_isolated(e)).map(|e| g.edge(e).to_string()).collect();
    let _ = writeln!(out, "# isolated {}", isolated.join(" ").trim_end());
    out
}
