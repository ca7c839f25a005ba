//! The three-phase 2-threshold cover algorithm.
//!
//! 1. Order the vertices by Lex-BFS.
//! 2. Two-color every non-trivial component of the auxiliary graph,
//!    starting each component at its lexicographically smallest edge.
//! 3. Move the free edges that close a pentagon into the opposite class.
//!
//! The two parts are then `class 1 ∪ free` and `class 2 ∪ free`.

use thiserror::Error;

use crate::auxiliary::{build_auxiliary, two_color, AuxiliaryGraph, OddCycleCertificate};
use crate::detect::ClassMatrix;
use crate::graph::{EdgeId, EdgePair, Graph};
use crate::lexbfs::{lexbfs, verify_lexbfs};
use crate::ordering::{OrderingError, VertexOrdering};
use crate::partition::{EdgeClass, TriPartition};
use crate::recognition::{is_threshold, ThresholdCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("ordering override: {0}")]
    Ordering(#[from] OrderingError),
    #[error("free edge {0} closes pentagons of both classes")]
    OverlappingPentagonSets(EdgePair),
    #[error("assembled cover failed verification: {0}")]
    VerificationFailed(String),
}

/// Free edges that are the `cd` edge of some class-1 (`s1`) or class-2
/// (`s2`) pentagon.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PentagonSets {
    pub s1: Vec<EdgeId>,
    pub s2: Vec<EdgeId>,
}

/// For each free edge `cd` and class `i`, looks for two non-adjacent
/// vertices `b, e` joined to both `c` and `d` by edges of the other class,
/// and a common neighbor `a` of `b, e` through class-`i` edges that misses
/// both `c` and `d`. Worst case `O(m n^3)`.
pub fn compute_s(g: &Graph, tp: &TriPartition) -> Result<PentagonSets, CoverError> {
    let cm = ClassMatrix::new(g, tp);
    let n = g.n();
    let mut sets = PentagonSets::default();
    for cd in tp.ids(EdgeClass::Free) {
        let (c, d) = g.edge(cd).endpoints();
        let mut hit = [false; 2];
        for (slot, i) in [EdgeClass::One, EdgeClass::Two].into_iter().enumerate() {
            let j = i.opposite();
            let both: Vec<usize> =
                g.neighbors(c).filter(|&v| cm.get(v, c) == Some(j) && cm.get(v, d) == Some(j)).collect();
            'pairs: for (k, &b) in both.iter().enumerate() {
                for &e in &both[k + 1..] {
                    if g.adjacent(b, e) {
                        continue;
                    }
                    for a in 0..n {
                        if cm.get(a, b) == Some(i)
                            && cm.get(a, e) == Some(i)
                            && g.non_adjacent(a, c)
                            && g.non_adjacent(a, d)
                        {
                            hit[slot] = true;
                            break 'pairs;
                        }
                    }
                }
            }
        }
        match hit {
            [true, true] => return Err(CoverError::OverlappingPentagonSets(g.edge(cd))),
            [true, false] => sets.s1.push(cd),
            [false, true] => sets.s2.push(cd),
            [false, false] => {}
        }
    }
    Ok(sets)
}

/// Recolors `s1` to class 2 and `s2` to class 1.
pub fn phase3(tp: &TriPartition, sets: &PentagonSets) -> TriPartition {
    let mut out = tp.clone();
    for &e in &sets.s1 {
        debug_assert_eq!(tp.class(e), EdgeClass::Free);
        out.set(e, EdgeClass::Two);
    }
    for &e in &sets.s2 {
        debug_assert_eq!(tp.class(e), EdgeClass::Free);
        out.set(e, EdgeClass::One);
    }
    out
}

/// `(class 1 ∪ free, class 2 ∪ free)`, each sorted.
pub fn assemble_cover(g: &Graph, tp: &TriPartition) -> (Vec<EdgePair>, Vec<EdgePair>) {
    let mut h1 = Vec::new();
    let mut h2 = Vec::new();
    for (id, &e) in g.edges().iter().enumerate() {
        match tp.class(id) {
            EdgeClass::Free => {
                h1.push(e);
                h2.push(e);
            }
            EdgeClass::One => h1.push(e),
            EdgeClass::Two => h2.push(e),
        }
    }
    (h1, h2)
}

/// Outcome of checking a candidate cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCheck {
    /// Every edge of the graph is in some part and no part has extra pairs.
    pub covers: bool,
    pub h1: ThresholdCheck,
    pub h2: ThresholdCheck,
}

impl CoverCheck {
    pub fn passed(&self) -> bool {
        self.covers && self.h1.is_threshold && self.h2.is_threshold
    }
}

pub fn check_cover(g: &Graph, h1: &[EdgePair], h2: &[EdgePair]) -> CoverCheck {
    let mut seen = vec![false; g.m()];
    let mut covers = true;
    for e in h1.iter().chain(h2) {
        match g.edge_id(e.u(), e.v()) {
            Some(id) => seen[id] = true,
            None => covers = false,
        }
    }
    covers &= seen.iter().all(|&s| s);
    let part = |h: &[EdgePair]| {
        let mut h = h.to_vec();
        h.sort_unstable();
        h.dedup();
        let sub = Graph::from_pairs(g.n(), h).expect("parts are edge sets of g");
        is_threshold(&sub)
    };
    CoverCheck { covers, h1: part(h1), h2: part(h2) }
}

/// `true` iff the parts cover exactly `E(g)` and both are threshold.
pub fn verify_cover(g: &Graph, h1: &[EdgePair], h2: &[EdgePair]) -> bool {
    check_cover(g, h1, h2).passed()
}

#[derive(Debug, Clone, Default)]
pub struct CoverOptions {
    /// Use this ordering instead of running Lex-BFS.
    pub ordering: Option<VertexOrdering>,
    /// Without an override, use the identity ordering.
    pub skip_phase1: bool,
    pub skip_phase3: bool,
    pub verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingSource {
    LexBfs,
    Identity,
    Override,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    pub ordering: VertexOrdering,
    pub ordering_source: OrderingSource,
    /// Whether the ordering used passes the Lex-BFS check.
    pub ordering_is_lexbfs: bool,
    pub auxiliary_edges: usize,
    pub nontrivial_components: usize,
    /// `[|F0|, |F1|, |F2|]` after two-coloring.
    pub after_coloring: Option<[usize; 3]>,
    /// `None` when pentagon recoloring was skipped.
    pub recolored: Option<(Vec<EdgePair>, Vec<EdgePair>)>,
    pub verification: Option<CoverCheck>,
}

impl Diagnostics {
    /// A truncated run is one without the guarantees of the full pipeline.
    pub fn truncated(&self) -> bool {
        !self.ordering_is_lexbfs || (self.after_coloring.is_some() && self.recolored.is_none())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverOutcome {
    Cover { h1: Vec<EdgePair>, h2: Vec<EdgePair> },
    OddCycle(OddCycleCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub outcome: CoverOutcome,
    /// Final partition when the coloring succeeded.
    pub partition: Option<TriPartition>,
    pub diagnostics: Diagnostics,
}

impl CoverResult {
    pub fn is_yes(&self) -> bool {
        matches!(self.outcome, CoverOutcome::Cover { .. })
    }

    /// The graph itself is threshold: no alternating 4-cycle at all.
    pub fn threshold_dimension_one(&self) -> bool {
        self.is_yes() && self.diagnostics.auxiliary_edges == 0
    }
}

pub(crate) fn nontrivial_components(aux: &AuxiliaryGraph) -> usize {
    aux.components().iter().filter(|c| c.len() > 1).count()
}

/// Runs the pipeline. Skipped or overridden phases produce a truncated run
/// whose cover may legitimately fail verification; that is reported in the
/// diagnostics. A full run that fails verification is an error.
pub fn cover2(g: &Graph, options: &CoverOptions) -> Result<CoverResult, CoverError> {
    let (ordering, ordering_source) = match &options.ordering {
        Some(o) => {
            if o.len() != g.n() {
                return Err(OrderingError::WrongLength { expected: g.n(), got: o.len() }.into());
            }
            (o.clone(), OrderingSource::Override)
        }
        None if options.skip_phase1 => (VertexOrdering::identity(g.n()), OrderingSource::Identity),
        None => (lexbfs(g), OrderingSource::LexBfs),
    };
    let ordering_is_lexbfs = ordering_source == OrderingSource::LexBfs || verify_lexbfs(g, &ordering).is_ok();

    let aux = build_auxiliary(g);
    let mut diagnostics = Diagnostics {
        ordering,
        ordering_source,
        ordering_is_lexbfs,
        auxiliary_edges: aux.edge_count(),
        nontrivial_components: nontrivial_components(&aux),
        after_coloring: None,
        recolored: None,
        verification: None,
    };

    let colored = match two_color(&aux, g, &diagnostics.ordering) {
        Ok(tp) => tp,
        Err(cert) => return Ok(CoverResult { outcome: CoverOutcome::OddCycle(cert), partition: None, diagnostics }),
    };
    diagnostics.after_coloring = Some(colored.sizes());

    let partition = if options.skip_phase3 {
        colored
    } else {
        let sets = compute_s(g, &colored)?;
        let to_pairs = |ids: &[EdgeId]| ids.iter().map(|&e| g.edge(e)).collect::<Vec<_>>();
        diagnostics.recolored = Some((to_pairs(&sets.s1), to_pairs(&sets.s2)));
        phase3(&colored, &sets)
    };

    let (h1, h2) = assemble_cover(g, &partition);
    if options.verify {
        let check = check_cover(g, &h1, &h2);
        if !check.passed() && !diagnostics.truncated() {
            return Err(CoverError::VerificationFailed(describe_failure(&check)));
        }
        diagnostics.verification = Some(check);
    }
    Ok(CoverResult { outcome: CoverOutcome::Cover { h1, h2 }, partition: Some(partition), diagnostics })
}

fn describe_failure(check: &CoverCheck) -> String {
    let mut parts = Vec::new();
    if !check.covers {
        parts.push("parts do not cover the edge set".to_string());
    }
    for (name, c) in [("H1", &check.h1), ("H2", &check.h2)] {
        if !c.is_threshold {
            parts.push(format!("{name} is not threshold"));
        }
    }
    parts.join("; ")
}
