//! Brute-force ground truth and instance generators.
//!
//! Nothing here calls into the cover pipeline except [`equivalence_sweep`],
//! which compares the pipeline against the brute-force answers.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::auxiliary::{build_auxiliary, two_color};
use crate::cover::{compute_s, cover2, phase3, verify_cover, CoverOptions, CoverOutcome};
use crate::detect::{detect_pentagon, detect_switching, SwitchingKind};
use crate::graph::{EdgeId, EdgePair, Graph};
use crate::io::serialize_graph;
use crate::lexbfs::lexbfs;
use crate::ordering::VertexOrdering;
use crate::recognition::is_paraglider_free;

/// Largest edge count accepted by the brute-force searches.
/// Edge sets of the two parts of a cover.
pub type TwoParts = (Vec<EdgePair>, Vec<EdgePair>);

pub const MAX_BRUTE_EDGES: usize = 20;
/// Largest vertex count for exhaustive generation.
pub const MAX_EXHAUSTIVE_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("brute force is limited to {MAX_BRUTE_EDGES} edges, got {0}")]
    TooManyEdges(usize),
    #[error("exhaustive generation is limited to n <= {MAX_EXHAUSTIVE_N}, got {0}")]
    ExhaustiveTooLarge(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
}

/// Auxiliary-graph edges by direct enumeration of vertex 4-tuples.
pub fn brute_aux_edges(g: &Graph) -> Vec<(EdgeId, EdgeId)> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !g.adjacent(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || g.adjacent(b, c) {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c || !g.adjacent(c, d) || g.adjacent(d, a) {
                        continue;
                    }
                    let e = g.edge_id(a, b).unwrap();
                    let f = g.edge_id(c, d).unwrap();
                    out.push((e.min(f), e.max(f)));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Union-find with parity; `None` on an odd cycle.
fn parity_classes(m: usize, edges: &[(usize, usize)]) -> Option<Vec<(usize, bool)>> {
    let mut parent: Vec<usize> = (0..m).collect();
    let mut parity = vec![false; m];
    fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
        if parent[x] == x {
            return (x, false);
        }
        let (root, p) = find(parent, parity, parent[x]);
        parity[x] ^= p;
        parent[x] = root;
        (root, parity[x])
    }
    for &(e, f) in edges {
        let (re, pe) = find(&mut parent, &mut parity, e);
        let (rf, pf) = find(&mut parent, &mut parity, f);
        if re == rf {
            if pe == pf {
                return None;
            }
        } else {
            parent[re] = rf;
            parity[re] = !(pe ^ pf);
        }
    }
    Some((0..m).map(|x| find(&mut parent, &mut parity, x)).collect())
}

/// Bipartiteness of the auxiliary graph, computed without the library's
/// auxiliary-graph builder.
pub fn aux_is_bipartite(g: &Graph) -> bool {
    parity_classes(g.m(), &brute_aux_edges(g)).is_some()
}

/// Four-vertex configuration that must not appear in a part: edges `e, f`
/// present and the listed edges of `g` absent. Pairs that are non-edges of
/// `g` are absent automatically and are not listed.
#[derive(Debug, Clone)]
struct Obstruction {
    present: [EdgeId; 2],
    absent: Vec<EdgeId>,
}

fn threshold_obstructions(g: &Graph) -> Vec<Obstruction> {
    // alternating 4-cycles a b c d: ab, cd present, bc, da absent
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = g.edge_id(a, b) else { continue };
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    let Some(cd) = g.edge_id(c, d) else { continue };
                    if ab > cd {
                        continue;
                    }
                    let absent = [g.edge_id(b, c), g.edge_id(d, a)].into_iter().flatten().collect();
                    out.push(Obstruction { present: [ab, cd], absent });
                }
            }
        }
    }
    out
}

fn chain_obstructions(g: &Graph) -> Vec<Obstruction> {
    // two edges whose endpoints would induce 2K2
    let mut out = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        for (j, f) in g.edges().iter().enumerate().skip(i + 1) {
            if e.shares_endpoint(*f) {
                continue;
            }
            let (x, y) = e.endpoints();
            let (z, w) = f.endpoints();
            let absent = [(x, z), (x, w), (y, z), (y, w)].into_iter().filter_map(|(p, q)| g.edge_id(p, q)).collect();
            out.push(Obstruction { present: [i, j], absent });
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    One,
    Two,
    Both,
}

impl Slot {
    fn in_part(self, part: usize) -> bool {
        matches!((self, part), (Slot::Both, _) | (Slot::One, 0) | (Slot::Two, 1))
    }
}

/// Searches for two edge subsets covering `E(g)` that both avoid every
/// obstruction. Backtracks over edges in id order, pruning as soon as an
/// obstruction is fully decided inside one part.
fn two_part_search(g: &Graph, obstructions: &[Obstruction]) -> Option<(Vec<EdgePair>, Vec<EdgePair>)> {
    let m = g.m();
    if m == 0 {
        return Some((Vec::new(), Vec::new()));
    }
    // obstructions that become decidable once edge k is assigned
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, ob) in obstructions.iter().enumerate() {
        let last = ob.present.iter().chain(&ob.absent).copied().max().unwrap();
        by_last[last].push(i);
    }
    let mut assign = vec![Slot::Both; m];

    fn violated(ob: &Obstruction, assign: &[Slot], part: usize) -> bool {
        ob.present.iter().all(|&e| assign[e].in_part(part)) && ob.absent.iter().all(|&e| !assign[e].in_part(part))
    }

    fn go(k: usize, assign: &mut Vec<Slot>, obs: &[Obstruction], by_last: &[Vec<usize>]) -> bool {
        if k == assign.len() {
            return true;
        }
        // the two parts are interchangeable, so edge 0 never goes to part 2 alone
        let options: &[Slot] = if k == 0 { &[Slot::Both, Slot::One] } else { &[Slot::Both, Slot::One, Slot::Two] };
        for &s in options {
            assign[k] = s;
            let ok = by_last[k].iter().all(|&i| !violated(&obs[i], assign, 0) && !violated(&obs[i], assign, 1));
            if ok && go(k + 1, assign, obs, by_last) {
                return true;
            }
        }
        false
    }

    if !go(0, &mut assign, obstructions, &by_last) {
        return None;
    }
    let part =
        |p: usize| g.edges().iter().zip(&assign).filter(|(_, s)| s.in_part(p)).map(|(e, _)| *e).collect::<Vec<_>>();
    Some((part(0), part(1)))
}

/// Decides `thd(g) <= 2` by direct search, returning a cover when one
/// exists. Edges adjacent in the auxiliary graph can never share a part,
/// so an odd cycle there answers no at once.
pub fn brute_thd_le2(g: &Graph) -> Result<Option<TwoParts>, OracleError> {
    if g.m() > MAX_BRUTE_EDGES {
        return Err(OracleError::TooManyEdges(g.m()));
    }
    if !aux_is_bipartite(g) {
        return Ok(None);
    }
    Ok(two_part_search(g, &threshold_obstructions(g)))
}

/// `true` iff `edges` on `n` vertices contains no alternating 4-cycle.
pub fn brute_is_threshold(n: usize, edges: &[EdgePair]) -> bool {
    let h = Graph::from_pairs(n, edges.iter().copied()).expect("simple edge set");
    threshold_obstructions(&h).iter().all(|ob| !ob.absent.is_empty())
}

/// Two chain subgraphs covering a bipartite graph, by direct search.
pub fn brute_chain_cover2(g: &Graph) -> Result<Option<TwoParts>, OracleError> {
    if g.m() > MAX_BRUTE_EDGES {
        return Err(OracleError::TooManyEdges(g.m()));
    }
    let obs = chain_obstructions(g);
    let conflicts: Vec<(usize, usize)> =
        obs.iter().filter(|o| o.absent.is_empty()).map(|o| (o.present[0], o.present[1])).collect();
    if parity_classes(g.m(), &conflicts).is_none() {
        return Ok(None);
    }
    Ok(two_part_search(g, &obs))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenMode {
    /// Every labeled graph on `n` vertices.
    Exhaustive,
    /// `G(n, p)`.
    Gnp,
    /// Union of two random threshold graphs; threshold dimension <= 2.
    UnionOfTwoThreshold,
    /// Bipartite union of two random chain graphs between the first
    /// `n / 2` vertices and the rest.
    UnionOfTwoChain,
    /// Random clique, independent rest, cross edges with probability `p`.
    RandomSplit,
    /// Split graph with threshold dimension <= 2: a clique completion of a
    /// union of two chain graphs.
    SplitUnionOfTwoThreshold,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub mode: GenMode,
    /// Edge probability; for threshold-based modes, the chance that a new
    /// vertex is universal.
    pub p: f64,
    pub seed: u64,
    /// Number of graphs for random modes.
    pub count: usize,
}

impl GenSpec {
    pub fn exhaustive(n: usize) -> Self {
        GenSpec { n, mode: GenMode::Exhaustive, p: 0.5, seed: 0, count: 0 }
    }

    pub fn random(mode: GenMode, n: usize, p: f64, seed: u64, count: usize) -> Self {
        GenSpec { n, mode, p, seed, count }
    }
}

/// Random threshold graph: vertices arrive in random order and each is
/// isolated or universal at that point.
pub fn random_threshold_edges<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<EdgePair> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        if rng.random_bool(p) {
            edges.extend(order[..i].iter().map(|&u| EdgePair::new(u, v)));
        }
    }
    edges
}

/// Random chain graph between `a` and `b` with nested neighborhoods.
pub fn random_chain_edges<R: Rng>(a: &[usize], b: &[usize], rng: &mut R) -> Vec<EdgePair> {
    let mut bs = b.to_vec();
    bs.shuffle(rng);
    let mut edges = Vec::new();
    for &x in a {
        let t = rng.random_range(0..=bs.len());
        edges.extend(bs[..t].iter().map(|&y| EdgePair::new(x, y)));
    }
    edges
}

fn union_graph(n: usize, parts: impl IntoIterator<Item = EdgePair>) -> Graph {
    let mut all: Vec<EdgePair> = parts.into_iter().collect();
    all.sort_unstable();
    all.dedup();
    Graph::from_pairs(n, all).expect("union of simple edge sets")
}

fn random_graph(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Graph {
    let n = spec.n;
    match spec.mode {
        GenMode::Exhaustive => unreachable!("exhaustive mode is not random"),
        GenMode::Gnp => {
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.random_bool(spec.p) {
                        edges.push(EdgePair::new(a, b));
                    }
                }
            }
            union_graph(n, edges)
        }
        GenMode::UnionOfTwoThreshold => {
            let first = random_threshold_edges(n, spec.p, rng);
            let second = random_threshold_edges(n, spec.p, rng);
            union_graph(n, first.into_iter().chain(second))
        }
        GenMode::UnionOfTwoChain => {
            let a: Vec<usize> = (0..n / 2).collect();
            let b: Vec<usize> = (n / 2..n).collect();
            let first = random_chain_edges(&a, &b, rng);
            let second = random_chain_edges(&a, &b, rng);
            union_graph(n, first.into_iter().chain(second))
        }
        GenMode::RandomSplit => {
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(rng);
            let k = rng.random_range(0..=n);
            let (clique, rest) = verts.split_at(k);
            let mut edges = Vec::new();
            for (i, &x) in clique.iter().enumerate() {
                edges.extend(clique[i + 1..].iter().map(|&y| EdgePair::new(x, y)));
                for &y in rest {
                    if rng.random_bool(spec.p) {
                        edges.push(EdgePair::new(x, y));
                    }
                }
            }
            union_graph(n, edges)
        }
        GenMode::SplitUnionOfTwoThreshold => {
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(rng);
            let k = rng.random_range(0..=n);
            let (clique, rest) = verts.split_at(k);
            let mut edges = Vec::new();
            for (i, &x) in clique.iter().enumerate() {
                edges.extend(clique[i + 1..].iter().map(|&y| EdgePair::new(x, y)));
            }
            edges.extend(random_chain_edges(clique, rest, rng));
            edges.extend(random_chain_edges(clique, rest, rng));
            union_graph(n, edges)
        }
    }
}

/// Graph number `code` in the exhaustive enumeration: bit `k` of `code`
/// selects the `k`-th vertex pair in lexicographic order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if code >> k & 1 == 1 {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("distinct pairs")
}

pub fn generate(spec: &GenSpec) -> Result<Box<dyn Iterator<Item = Graph>>, OracleError> {
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(OracleError::BadProbability(spec.p));
    }
    let n = spec.n;
    if spec.mode == GenMode::Exhaustive {
        if n > MAX_EXHAUSTIVE_N {
            return Err(OracleError::ExhaustiveTooLarge(n));
        }
        let pairs = n * n.saturating_sub(1) / 2;
        return Ok(Box::new((0..1u64 << pairs).map(move |code| graph_from_code(n, code))));
    }
    let spec = *spec;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(Box::new((0..spec.count).map(move |_| random_graph(&spec, &mut rng))))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub instances: usize,
    pub yes: usize,
    pub no: usize,
    /// Instances small enough for the brute-force cover search.
    pub brute_checked: usize,
    /// Paraglider-free yes-instances on which the identity ordering without
    /// Lex-BFS fails. Recorded only.
    pub paraglider_free_skip_phase1_failures: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{reason} (seed {seed}) on graph:\n{graph}")]
pub struct SweepFailure {
    pub reason: String,
    pub seed: u64,
    pub graph: String,
}

/// Checks, per instance, that the pipeline agrees with the brute-force
/// answers and that none of the forbidden configurations survive.
pub fn check_instance(g: &Graph) -> Result<InstanceVerdict, String> {
    let bipartite = aux_is_bipartite(g);
    let brute = if g.m() <= MAX_BRUTE_EDGES { Some(brute_thd_le2(g).map_err(|e| e.to_string())?) } else { None };
    let result = cover2(g, &CoverOptions { verify: true, ..Default::default() }).map_err(|e| e.to_string())?;
    let yes = result.is_yes();
    if yes != bipartite {
        return Err(format!("pipeline says {yes}, auxiliary bipartite = {bipartite}"));
    }
    if let Some(b) = &brute {
        if b.is_some() != bipartite {
            return Err(format!("brute force says {}, auxiliary bipartite = {bipartite}", b.is_some()));
        }
        if let Some((h1, h2)) = b {
            if !brute_is_threshold(g.n(), h1) || !brute_is_threshold(g.n(), h2) {
                return Err("brute-force witness is not a threshold cover".into());
            }
        }
    }
    match &result.outcome {
        CoverOutcome::OddCycle(cert) => {
            if !cert.holds_in(g) {
                return Err("odd-cycle certificate does not check".into());
            }
        }
        CoverOutcome::Cover { h1, h2 } => {
            if !verify_cover(g, h1, h2) {
                return Err("cover fails verification".into());
            }
            check_invariants(g, &lexbfs(g))?;
        }
    }
    let skip_phase1_fails = yes && is_paraglider_free(g).0 && {
        let r = cover2(g, &CoverOptions { skip_phase1: true, verify: true, ..Default::default() })
            .map_err(|e| e.to_string())?;
        !r.diagnostics.verification.as_ref().is_some_and(|c| c.passed())
    };
    Ok(InstanceVerdict { yes, brute_checked: brute.is_some(), skip_phase1_fails })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceVerdict {
    pub yes: bool,
    pub brute_checked: bool,
    pub skip_phase1_fails: bool,
}

/// For a graph with bipartite auxiliary graph and a Lex-BFS ordering:
/// after two-coloring there is no strict pentagon or strict switching
/// path, and after recoloring no pentagon, switching path or switching
/// cycle.
pub fn check_invariants(g: &Graph, order: &VertexOrdering) -> Result<(), String> {
    let aux = build_auxiliary(g);
    let colored = two_color(&aux, g, order).map_err(|_| "auxiliary graph is not bipartite".to_string())?;
    if !colored.is_valid(&aux) {
        return Err("two-coloring is not a valid partition".into());
    }
    if let Some(w) = detect_pentagon(g, &colored, true) {
        return Err(format!("strict pentagon after coloring: {w:?}"));
    }
    if let Some(w) = detect_switching(g, &colored, SwitchingKind::Path, true) {
        return Err(format!("strict switching path after coloring: {w:?}"));
    }
    let sets = compute_s(g, &colored).map_err(|e| e.to_string())?;
    let fin = phase3(&colored, &sets);
    if !fin.is_valid(&aux) {
        return Err("recolored partition is not valid".into());
    }
    if let Some(w) = detect_pentagon(g, &fin, false) {
        return Err(format!("pentagon after recoloring: {w:?}"));
    }
    for kind in [SwitchingKind::Path, SwitchingKind::Cycle] {
        if let Some(w) = detect_switching(g, &fin, kind, false) {
            return Err(format!("switching {kind:?} after recoloring: {w:?}"));
        }
    }
    Ok(())
}

/// Runs [`check_instance`] over every generated graph; stops at the first
/// failure.
pub fn equivalence_sweep(spec: &GenSpec) -> Result<SweepReport, SweepFailure> {
    let graphs =
        generate(spec).map_err(|e| SweepFailure { reason: e.to_string(), seed: spec.seed, graph: String::new() })?;
    let mut report = SweepReport::default();
    for g in graphs {
        let verdict = check_instance(&g).map_err(|reason| SweepFailure {
            reason,
            seed: spec.seed,
            graph: serialize_graph(&g),
        })?;
        report.instances += 1;
        if verdict.yes {
            report.yes += 1;
        } else {
            report.no += 1;
        }
        report.brute_checked += usize::from(verdict.brute_checked);
        report.paraglider_free_skip_phase1_failures += usize::from(verdict.skip_phase1_fails);
    }
    Ok(report)
}
