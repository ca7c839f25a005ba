//! Shortcuts for split and paraglider-free graphs, and 2-chain subgraph
//! covers of bipartite graphs through their split completion.

use std::collections::VecDeque;

use thiserror::Error;

use crate::auxiliary::{build_auxiliary, build_auxiliary_restricted, two_color, OddCycleCertificate};
use crate::cover::{
    assemble_cover, check_cover, nontrivial_components, CoverOutcome, CoverResult, Diagnostics, OrderingSource,
};
use crate::graph::{EdgePair, Graph};
use crate::lexbfs::lexbfs;
use crate::ordering::VertexOrdering;
use crate::patterns::PatternWitness;
use crate::recognition::{is_chain, is_paraglider_free, side_mask, split_partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("input is not a split graph")]
    NotSplit,
    #[error("input contains a paraglider: {0}")]
    ContainsParaglider(PatternWitness),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("ordering covers {got} vertices, the graph has {expected}")]
    OrderingLength { expected: usize, got: usize },
    #[error("reduced cover failed verification")]
    VerificationFailed,
}

/// Phase II only, on the given ordering, then assembly and verification.
fn color_and_assemble(
    g: &Graph,
    ordering: VertexOrdering,
    source: OrderingSource,
) -> Result<CoverResult, ReductionError> {
    let aux = build_auxiliary(g);
    let mut diagnostics = Diagnostics {
        ordering,
        ordering_source: source,
        ordering_is_lexbfs: source == OrderingSource::LexBfs,
        auxiliary_edges: aux.edge_count(),
        nontrivial_components: nontrivial_components(&aux),
        after_coloring: None,
        recolored: None,
        verification: None,
    };
    let tp = match two_color(&aux, g, &diagnostics.ordering) {
        Ok(tp) => tp,
        Err(cert) => return Ok(CoverResult { outcome: CoverOutcome::OddCycle(cert), partition: None, diagnostics }),
    };
    diagnostics.after_coloring = Some(tp.sizes());
    let (h1, h2) = assemble_cover(g, &tp);
    let check = check_cover(g, &h1, &h2);
    if !check.passed() {
        return Err(ReductionError::VerificationFailed);
    }
    diagnostics.verification = Some(check);
    Ok(CoverResult { outcome: CoverOutcome::Cover { h1, h2 }, partition: Some(tp), diagnostics })
}

/// Split graphs need neither Lex-BFS nor pentagon recoloring; any ordering
/// works. Uses the identity ordering.
pub fn cover2_split(g: &Graph) -> Result<CoverResult, ReductionError> {
    cover2_split_with_order(g, VertexOrdering::identity(g.n()))
}

pub fn cover2_split_with_order(g: &Graph, ordering: VertexOrdering) -> Result<CoverResult, ReductionError> {
    if ordering.len() != g.n() {
        return Err(ReductionError::OrderingLength { expected: g.n(), got: ordering.len() });
    }
    if split_partition(g).is_none() {
        return Err(ReductionError::NotSplit);
    }
    let source =
        if ordering == VertexOrdering::identity(g.n()) { OrderingSource::Identity } else { OrderingSource::Override };
    color_and_assemble(g, ordering, source)
}

/// Paraglider-free graphs need Lex-BFS but no pentagon recoloring.
pub fn cover2_paraglider_free(g: &Graph) -> Result<CoverResult, ReductionError> {
    if let (false, Some(w)) = is_paraglider_free(g) {
        return Err(ReductionError::ContainsParaglider(w));
    }
    color_and_assemble(g, lexbfs(g), OrderingSource::LexBfs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// A bipartite graph with one side completed to a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatGraph {
    pub graph: Graph,
    /// `true` for the clique-fill edges, indexed by edge id of `graph`.
    pub fill: Vec<bool>,
    /// Edge id in the original graph for every non-fill edge.
    pub original: Vec<Option<usize>>,
}

impl HatGraph {
    /// Original edges, i.e. `graph` with the fill dropped.
    pub fn original_edges(&self) -> Vec<EdgePair> {
        self.graph.edges().iter().zip(&self.fill).filter(|(_, &f)| !f).map(|(e, _)| *e).collect()
    }
}

pub fn hat_graph(g: &Graph, a: &[usize], b: &[usize], side: Side) -> Result<HatGraph, ReductionError> {
    side_mask(g, a, b)?;
    let clique = match side {
        Side::A => a,
        Side::B => b,
    };
    let mut pairs: Vec<EdgePair> = g.edges().to_vec();
    for (i, &x) in clique.iter().enumerate() {
        for &y in &clique[i + 1..] {
            pairs.push(EdgePair::new(x, y));
        }
    }
    let graph = Graph::from_pairs(g.n(), pairs).expect("fill edges join vertices of one side only");
    let original: Vec<Option<usize>> = graph.edges().iter().map(|e| g.edge_id(e.u(), e.v())).collect();
    let fill = original.iter().map(Option::is_none).collect();
    Ok(HatGraph { graph, fill, original })
}

/// Sides of a bipartite graph: per component, the smallest vertex goes to A.
pub fn bipartition(g: &Graph) -> Result<(Vec<usize>, Vec<usize>), ReductionError> {
    let n = g.n();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(true);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let here = side[v].unwrap();
            for w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!here);
                        queue.push_back(w);
                    }
                    Some(x) if x == here => return Err(PartitionError::NotBipartite.into()),
                    Some(_) => {}
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == Some(true)).collect();
    let b = (0..n).filter(|&v| side[v] == Some(false)).collect();
    Ok((a, b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCover {
    pub c1: Vec<EdgePair>,
    pub c2: Vec<EdgePair>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainCoverOutcome {
    Cover(ChainCover),
    /// Odd cycle among the original edges.
    OddCycle(OddCycleCertificate),
}

/// Two chain graphs covering a bipartite graph, if they exist.
///
/// The clique side defaults to the smaller part (A on ties). Fill edges are
/// isolated in the auxiliary graph of the completion, so only original
/// edges are tested.
pub fn chain_cover2(g: &Graph, side: Option<Side>) -> Result<ChainCoverOutcome, ReductionError> {
    let (a, b) = bipartition(g)?;
    chain_cover2_with_parts(g, &a, &b, side)
}

pub fn chain_cover2_with_parts(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    side: Option<Side>,
) -> Result<ChainCoverOutcome, ReductionError> {
    let side = side.unwrap_or(if b.len() < a.len() { Side::B } else { Side::A });
    let hat = hat_graph(g, a, b, side)?;
    let include: Vec<bool> = hat.fill.iter().map(|f| !f).collect();
    let aux = build_auxiliary_restricted(&hat.graph, &include);
    let tp = match two_color(&aux, &hat.graph, &VertexOrdering::identity(g.n())) {
        Ok(tp) => tp,
        Err(cert) => return Ok(ChainCoverOutcome::OddCycle(cert)),
    };
    let (h1, h2) = assemble_cover(&hat.graph, &tp);
    let keep =
        |h: Vec<EdgePair>| -> Vec<EdgePair> { h.into_iter().filter(|e| g.edge_id(e.u(), e.v()).is_some()).collect() };
    let cover = ChainCover { c1: keep(h1), c2: keep(h2), a: a.to_vec(), b: b.to_vec() };
    for part in [&cover.c1, &cover.c2] {
        let sub = Graph::from_pairs(g.n(), part.iter().copied()).expect("subset of E(g)");
        if !is_chain(&sub, a, b)?.is_chain {
            return Err(ReductionError::VerificationFailed);
        }
    }
    Ok(ChainCoverOutcome::Cover(cover))
}
