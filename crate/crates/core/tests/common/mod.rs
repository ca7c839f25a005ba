//! Naive reference implementations used as oracles by the integration
//! tests. Everything here enumerates vertex tuples directly from the
//! definitions and shares no code with the library algorithms.

#![allow(dead_code)]

use thcover::{EdgeClass, EdgePair, Graph, TriPartition, VertexOrdering};

pub fn adj(n: usize, edges: &[EdgePair]) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    for e in edges {
        let (a, b) = e.endpoints();
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

fn distinct(vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, x)| !vs[..i].contains(x))
}

/// Threshold test straight from the definition: no alternating 4-cycle.
pub fn naive_is_threshold(n: usize, edges: &[EdgePair]) -> bool {
    let m = adj(n, edges);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if distinct(&[a, b, c, d]) && m[a][b] && m[c][d] && !m[b][c] && !m[a][d] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Opposite-edge pairs of alternating 4-cycles, as sorted pairs of pairs.
pub fn naive_aux_edges(g: &Graph) -> Vec<(EdgePair, EdgePair)> {
    let n = g.n();
    let m = adj(n, g.edges());
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if distinct(&[a, b, c, d]) && m[a][b] && m[c][d] && !m[b][c] && !m[a][d] {
                        let (p, q) = (EdgePair::new(a, b), EdgePair::new(c, d));
                        out.push(if p < q { (p, q) } else { (q, p) });
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Dense class table: `None` for non-edges.
pub struct Classes {
    n: usize,
    cells: Vec<Option<EdgeClass>>,
}

impl Classes {
    pub fn new(g: &Graph, tp: &TriPartition) -> Self {
        let n = g.n();
        let mut cells = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    cells[a * n + b] = tp.class_of(g, a, b);
                }
            }
        }
        Classes { n, cells }
    }

    pub fn get(&self, a: usize, b: usize) -> Option<EdgeClass> {
        self.cells[a * self.n + b]
    }

    fn non_edge(&self, a: usize, b: usize) -> bool {
        self.get(a, b).is_none()
    }

    fn is(&self, a: usize, b: usize, c: EdgeClass) -> bool {
        self.get(a, b) == Some(c)
    }

    fn is_or_free(&self, a: usize, b: usize, c: EdgeClass) -> bool {
        self.is(a, b, c) || self.is(a, b, EdgeClass::Free)
    }
}

const COLORS: [EdgeClass; 2] = [EdgeClass::One, EdgeClass::Two];

fn tuples(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                if rec(n, k, cur, f) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    rec(n, k, &mut Vec::with_capacity(k), f)
}

pub fn naive_pentagon(g: &Graph, tp: &TriPartition, strict_only: bool) -> Option<Vec<usize>> {
    let cl = Classes::new(g, tp);
    let mut found = None;
    tuples(g.n(), 5, &mut |t| {
        let (a, b, c, d, e) = (t[0], t[1], t[2], t[3], t[4]);
        let hit = COLORS.iter().any(|&i| {
            let o = i.opposite();
            cl.non_edge(a, c)
                && cl.non_edge(a, d)
                && cl.non_edge(b, e)
                && cl.is(a, b, i)
                && cl.is(a, e, i)
                && cl.is(b, c, o)
                && cl.is(b, d, o)
                && cl.is(e, c, o)
                && cl.is(e, d, o)
                && if strict_only { cl.is(c, d, i) } else { cl.is_or_free(c, d, i) }
        });
        if hit {
            found = Some(t.to_vec());
        }
        hit
    });
    found
}

pub fn naive_switching_path(g: &Graph, tp: &TriPartition, strict_only: bool) -> Option<Vec<usize>> {
    let cl = Classes::new(g, tp);
    let mut found = None;
    tuples(g.n(), 4, &mut |t| {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let hit = COLORS.iter().any(|&i| {
            let side = |p: usize, q: usize| if strict_only { cl.is(p, q, i) } else { cl.is_or_free(p, q, i) };
            cl.non_edge(x, w) && side(x, y) && side(z, w) && cl.is(y, z, i.opposite())
        });
        if hit {
            found = Some(t.to_vec());
        }
        hit
    });
    found
}

pub fn naive_switching_cycle(g: &Graph, tp: &TriPartition) -> Option<Vec<usize>> {
    let cl = Classes::new(g, tp);
    let mut found = None;
    tuples(g.n(), 4, &mut |t| {
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        let hit = COLORS.iter().any(|&i| {
            let o = i.opposite();
            cl.is_or_free(a, b, i) && cl.is_or_free(c, d, i) && cl.is(b, c, o) && cl.is(a, d, o)
        });
        if hit {
            found = Some(t.to_vec());
        }
        hit
    });
    found
}

pub fn naive_ap6(g: &Graph, tp: &TriPartition) -> Option<Vec<usize>> {
    let cl = Classes::new(g, tp);
    let mut found = None;
    tuples(g.n(), 6, &mut |t| {
        let hit = COLORS.iter().any(|&i| {
            (0..3).all(|k| cl.is(t[2 * k], t[2 * k + 1], i))
                && (0..3).all(|k| cl.non_edge(t[2 * k + 1], t[(2 * k + 2) % 6]))
        });
        if hit {
            found = Some(t.to_vec());
        }
        hit
    });
    found
}

/// The four-point condition characterizing Lex-BFS orderings: whenever
/// `a < b < c` with `ac` an edge and `ab` a non-edge, some `d < a` is
/// adjacent to `b` and not to `c`.
pub fn four_point(g: &Graph, order: &VertexOrdering) -> bool {
    let n = g.n();
    let m = adj(n, g.edges());
    let at = |i: usize| order.vertex_at(i);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (at(i), at(j), at(k));
                if m[a][c] && !m[a][b] && !(0..i).any(|h| m[at(h)][b] && !m[at(h)][c]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Bipartiteness of the auxiliary graph by BFS over the naive edge list.
pub fn naive_aux_bipartite(g: &Graph) -> bool {
    let edges = naive_aux_edges(g);
    let idx = |p: EdgePair| g.edges().binary_search(&p).expect("edge of g");
    let mut nbrs = vec![Vec::new(); g.m()];
    for (p, q) in edges {
        nbrs[idx(p)].push(idx(q));
        nbrs[idx(q)].push(idx(p));
    }
    let mut color: Vec<Option<bool>> = vec![None; g.m()];
    for s in 0..g.m() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let cx = color[x].unwrap();
            for &y in &nbrs[x] {
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        stack.push(y);
                    }
                    Some(cy) if cy == cx => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Exhaustive 2-chain-cover search straight from the definition, for
/// bipartite graphs with few edges: every edge goes to part 1, part 2 or
/// both, and both parts must have no induced 2K2.
pub fn naive_chain_cover2(g: &Graph) -> bool {
    let m = g.m();
    assert!(m <= 12, "too many edges for the naive search");
    let mut pow = 1usize;
    for _ in 0..m {
        pow *= 3;
    }
    (0..pow).any(|mut code| {
        let (mut p1, mut p2) = (Vec::new(), Vec::new());
        for &e in g.edges() {
            match code % 3 {
                0 => p1.push(e),
                1 => p2.push(e),
                _ => {
                    p1.push(e);
                    p2.push(e);
                }
            }
            code /= 3;
        }
        no_induced_2k2(g.n(), &p1) && no_induced_2k2(g.n(), &p2)
    })
}

pub fn no_induced_2k2(n: usize, edges: &[EdgePair]) -> bool {
    let m = adj(n, edges);
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            let (a, b) = e.endpoints();
            let (c, d) = f.endpoints();
            if distinct(&[a, b, c, d]) && !m[a][c] && !m[a][d] && !m[b][c] && !m[b][d] {
                return false;
            }
        }
    }
    true
}
