//! Recognition of threshold, chain and split graphs.

use thiserror::Error;

use crate::graph::{EdgePair, Graph};
use crate::patterns::{find_induced, Pattern, PatternWitness};

/// Four distinct vertices with `ab`, `cd` edges and `bc`, `ad` non-edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlternatingFourCycle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl AlternatingFourCycle {
    pub fn opposite_edges(&self) -> (EdgePair, EdgePair) {
        (EdgePair::new(self.a, self.b), EdgePair::new(self.c, self.d))
    }

    pub fn holds_in(&self, g: &Graph) -> bool {
        let AlternatingFourCycle { a, b, c, d } = *self;
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        distinct && g.adjacent(a, b) && g.adjacent(c, d) && !g.adjacent(b, c) && !g.adjacent(a, d)
    }
}

/// Alternating 4-cycle with opposite edges `e` and `f`, if any.
///
/// Tries both ways of lining up the endpoints.
pub fn alternating_cycle_between(g: &Graph, e: EdgePair, f: EdgePair) -> Option<AlternatingFourCycle> {
    if e.shares_endpoint(f) {
        return None;
    }
    let (x, y) = e.endpoints();
    let (z, w) = f.endpoints();
    // a=x b=y c=z d=w: needs yz, xw non-edges
    if !g.adjacent(y, z) && !g.adjacent(x, w) {
        return Some(AlternatingFourCycle { a: x, b: y, c: z, d: w });
    }
    // a=y b=x c=z d=w: needs xz, yw non-edges
    if !g.adjacent(x, z) && !g.adjacent(y, w) {
        return Some(AlternatingFourCycle { a: y, b: x, c: z, d: w });
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdCertificate {
    /// Each vertex is isolated or universal in what remains when it is removed.
    Elimination(Vec<usize>),
    Violation(AlternatingFourCycle),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdCheck {
    pub is_threshold: bool,
    pub certificate: ThresholdCertificate,
}

/// Decides thresholdness by isolated/universal elimination; on failure the
/// first alternating 4-cycle in edge-pair order is reported.
pub fn is_threshold(g: &Graph) -> ThresholdCheck {
    match elimination_order(g) {
        Some(seq) => ThresholdCheck { is_threshold: true, certificate: ThresholdCertificate::Elimination(seq) },
        None => {
            let cycle =
                first_alternating_cycle(g).expect("a graph without an elimination order has an alternating 4-cycle");
            ThresholdCheck { is_threshold: false, certificate: ThresholdCertificate::Violation(cycle) }
        }
    }
}

fn elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut left = n;
    let mut seq = Vec::with_capacity(n);
    while left > 0 {
        let v = (0..n).find(|&v| alive[v] && (degree[v] == 0 || degree[v] == left - 1))?;
        alive[v] = false;
        left -= 1;
        for w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
        seq.push(v);
    }
    Some(seq)
}

/// First pair of edges, in edge-id order, forming an alternating 4-cycle.
pub fn first_alternating_cycle(g: &Graph) -> Option<AlternatingFourCycle> {
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if let Some(c) = alternating_cycle_between(g, e, f) {
                return Some(c);
            }
        }
    }
    None
}

/// `true` iff the spanning subgraph on these pairs is threshold.
pub fn edges_form_threshold(n: usize, edges: &[EdgePair]) -> bool {
    let h = Graph::from_pairs(n, edges.iter().copied()).expect("edge set of a simple graph");
    elimination_order(&h).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {0} is on neither side or on both sides")]
    NotAPartition(usize),
    #[error("edge {0} lies within one side")]
    EdgeWithinSide(EdgePair),
    #[error("graph is not bipartite")]
    NotBipartite,
}

/// Side membership for each vertex; `true` means side A.
pub fn side_mask(g: &Graph, a: &[usize], b: &[usize]) -> Result<Vec<bool>, PartitionError> {
    let mut seen = vec![None; g.n()];
    for (side, verts) in [(true, a), (false, b)] {
        for &v in verts {
            if v >= g.n() || seen[v].is_some() {
                return Err(PartitionError::NotAPartition(v));
            }
            seen[v] = Some(side);
        }
    }
    let mask: Vec<bool> =
        seen.iter().enumerate().map(|(v, s)| s.ok_or(PartitionError::NotAPartition(v))).collect::<Result<_, _>>()?;
    if let Some(&e) = g.edges().iter().find(|e| mask[e.u()] == mask[e.v()]) {
        return Err(PartitionError::EdgeWithinSide(e));
    }
    Ok(mask)
}

/// Two edges whose four endpoints induce `2K2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoK2 {
    pub first: EdgePair,
    pub second: EdgePair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCheck {
    pub is_chain: bool,
    pub witness: Option<TwoK2>,
}

/// Chain-graph test for a bipartite graph with the given sides.
pub fn is_chain(g: &Graph, a: &[usize], b: &[usize]) -> Result<ChainCheck, PartitionError> {
    side_mask(g, a, b)?;
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if e.shares_endpoint(f) {
                continue;
            }
            let (x, y) = e.endpoints();
            let (z, w) = f.endpoints();
            let induced = !g.adjacent(x, z) && !g.adjacent(x, w) && !g.adjacent(y, z) && !g.adjacent(y, w);
            if induced {
                return Ok(ChainCheck { is_chain: false, witness: Some(TwoK2 { first: e, second: f }) });
            }
        }
    }
    Ok(ChainCheck { is_chain: true, witness: None })
}

/// A split partition: `clique` is a clique and `independent` an independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Tries the prefixes of the degree-descending vertex order as the clique
/// side and returns the longest one that works.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    let mut in_clique = vec![false; n];
    // edges with both ends outside the prefix
    let mut outside_edges = g.m();
    let mut best = None;
    for k in 0..=n {
        if outside_edges == 0 {
            best = Some(k);
        }
        if k == n {
            break;
        }
        let v = by_degree[k];
        if !by_degree[..k].iter().all(|&u| g.adjacent(u, v)) {
            break;
        }
        in_clique[v] = true;
        outside_edges -= g.neighbors(v).filter(|&w| !in_clique[w]).count();
    }
    best.map(|k| {
        let mut clique: Vec<usize> = by_degree[..k].to_vec();
        let mut independent: Vec<usize> = by_degree[k..].to_vec();
        clique.sort_unstable();
        independent.sort_unstable();
        SplitPartition { clique, independent }
    })
}

pub fn is_paraglider_free(g: &Graph) -> (bool, Option<PatternWitness>) {
    let w = find_induced(g, Pattern::Paraglider);
    (w.is_none(), w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(a, b)| (a - 1, b - 1))).unwrap()
    }

    fn seven() -> Graph {
        graph(
            7,
            &[(1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (2, 7), (3, 5), (3, 6), (4, 5), (4, 6), (4, 7), (5, 6), (6, 7)],
        )
    }

    fn assert_elimination_valid(g: &Graph, seq: &[usize]) {
        let mut alive = vec![true; g.n()];
        let mut left = g.n();
        for &v in seq {
            let deg = g.neighbors(v).filter(|&w| alive[w]).count();
            assert!(deg == 0 || deg == left - 1);
            alive[v] = false;
            left -= 1;
        }
        assert_eq!(left, 0);
    }

    #[test]
    fn star_is_threshold() {
        let star = graph(4, &[(1, 2), (1, 3), (1, 4)]);
        let check = is_threshold(&star);
        assert!(check.is_threshold);
        let ThresholdCertificate::Elimination(seq) = check.certificate else { panic!() };
        assert_elimination_valid(&star, &seq);
    }

    #[test]
    fn p4_violation_uses_end_edges() {
        let p4 = graph(4, &[(1, 2), (2, 3), (3, 4)]);
        let check = is_threshold(&p4);
        assert!(!check.is_threshold);
        let ThresholdCertificate::Violation(c) = check.certificate else { panic!() };
        assert!(c.holds_in(&p4));
        assert_eq!(c.opposite_edges(), (EdgePair::new(0, 1), EdgePair::new(2, 3)));
    }

    #[test]
    fn phase_two_part_of_example_is_not_threshold() {
        let h1 = graph(7, &[(1, 4), (2, 4), (2, 7), (3, 5), (4, 5), (4, 6), (6, 7)]);
        assert!(!is_threshold(&h1).is_threshold);
        assert!(find_induced(&h1, Pattern::C4).is_some());
    }

    #[test]
    fn empty_graphs_are_in_every_class() {
        for n in 0..3 {
            let g = Graph::empty(n);
            assert!(is_threshold(&g).is_threshold);
            assert!(split_partition(&g).is_some());
            let all: Vec<usize> = (0..n).collect();
            assert!(is_chain(&g, &all, &[]).unwrap().is_chain);
        }
    }

    #[test]
    fn chain_examples() {
        let k22 = graph(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]);
        assert!(is_chain(&k22, &[0, 1], &[2, 3]).unwrap().is_chain);

        let two_k2 = graph(4, &[(1, 2), (3, 4)]);
        let check = is_chain(&two_k2, &[0, 2], &[1, 3]).unwrap();
        assert!(!check.is_chain);
        assert_eq!(check.witness, Some(TwoK2 { first: EdgePair::new(0, 1), second: EdgePair::new(2, 3) }));

        let p5 = graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]);
        let check = is_chain(&p5, &[0, 2, 4], &[1, 3]).unwrap();
        assert_eq!(check.witness, Some(TwoK2 { first: EdgePair::new(0, 1), second: EdgePair::new(3, 4) }));
    }

    #[test]
    fn chain_rejects_bad_partitions() {
        let p3 = graph(3, &[(1, 2), (2, 3)]);
        assert_eq!(is_chain(&p3, &[0, 1], &[2]).unwrap_err(), PartitionError::EdgeWithinSide(EdgePair::new(0, 1)));
        assert_eq!(is_chain(&p3, &[0, 2], &[]).unwrap_err(), PartitionError::NotAPartition(1));
        assert_eq!(is_chain(&p3, &[0, 2], &[1, 2]).unwrap_err(), PartitionError::NotAPartition(2));
    }

    #[test]
    fn split_examples() {
        let k3 = graph(3, &[(1, 2), (1, 3), (2, 3)]);
        let sp = split_partition(&k3).unwrap();
        assert_eq!(sp.clique, vec![0, 1, 2]);
        assert!(sp.independent.is_empty());

        let c4 = graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_eq!(split_partition(&c4), None);
        assert_eq!(split_partition(&seven()), None);
        assert!(find_induced(&seven(), Pattern::C4).is_some());
    }

    #[test]
    fn paraglider_freeness() {
        let pg = graph(5, &[(1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]);
        let (free, w) = is_paraglider_free(&pg);
        assert!(!free);
        assert!(w.unwrap().holds_in(&pg));
        assert!(!is_paraglider_free(&seven()).0);
        let split = graph(5, &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5)]);
        assert!(split_partition(&split).is_some());
        assert_eq!(is_paraglider_free(&split), (true, None));
    }
}
