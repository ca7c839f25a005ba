//! Exhaustive detectors for the configurations that must not survive the
//! coloring phases. They scan vertex tuples in lexicographic order and
//! report the first hit, so results are reproducible. Meant for
//! verification at small and medium sizes, not for speed.

use crate::graph::Graph;
use crate::partition::{EdgeClass, TriPartition};

/// Dense per-pair view of a partition: `None` for non-edges.
pub(crate) struct ClassMatrix {
    n: usize,
    cells: Vec<Option<EdgeClass>>,
}

impl ClassMatrix {
    pub(crate) fn new(g: &Graph, tp: &TriPartition) -> Self {
        assert_eq!(tp.len(), g.m(), "partition does not match the graph");
        let n = g.n();
        let mut cells = vec![None; n * n];
        for (id, e) in g.edges().iter().enumerate() {
            let c = Some(tp.class(id));
            cells[e.u() * n + e.v()] = c;
            cells[e.v() * n + e.u()] = c;
        }
        ClassMatrix { n, cells }
    }

    #[inline]
    pub(crate) fn get(&self, a: usize, b: usize) -> Option<EdgeClass> {
        self.cells[a * self.n + b]
    }

    #[inline]
    fn is(&self, a: usize, b: usize, class: EdgeClass) -> bool {
        self.get(a, b) == Some(class)
    }

    /// Edge in class `class` or free.
    #[inline]
    fn is_or_free(&self, a: usize, b: usize, class: EdgeClass) -> bool {
        matches!(self.get(a, b), Some(c) if c == class || c == EdgeClass::Free)
    }
}

fn colored(c: Option<EdgeClass>) -> Option<EdgeClass> {
    c.filter(|&c| c != EdgeClass::Free)
}

/// `(a,b,c,d,e)` with `ac, ad, be` non-edges, `ab, ae` in class `class`,
/// `bc, bd, ec, ed` in the other class and `cd` in `class` or free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PentagonWitness {
    pub vertices: [usize; 5],
    pub class: EdgeClass,
    /// `cd` is in `class` rather than free.
    pub strict: bool,
}

impl PentagonWitness {
    pub fn holds_in(&self, g: &Graph, tp: &TriPartition) -> bool {
        let cm = ClassMatrix::new(g, tp);
        let [a, b, c, d, e] = self.vertices;
        let i = self.class;
        let j = i.opposite();
        let cd_ok = if self.strict { cm.is(c, d, i) } else { cm.is(c, d, EdgeClass::Free) };
        i != EdgeClass::Free
            && g.non_adjacent(a, c)
            && g.non_adjacent(a, d)
            && g.non_adjacent(b, e)
            && cm.is(a, b, i)
            && cm.is(a, e, i)
            && [(b, c), (b, d), (e, c), (e, d)].iter().all(|&(x, y)| cm.is(x, y, j))
            && cd_ok
    }
}

/// First pentagon in tuple order, or first strict one with `strict_only`.
pub fn detect_pentagon(g: &Graph, tp: &TriPartition, strict_only: bool) -> Option<PentagonWitness> {
    let cm = ClassMatrix::new(g, tp);
    for a in 0..g.n() {
        for b in g.neighbors(a) {
            let Some(i) = colored(cm.get(a, b)) else { continue };
            let j = i.opposite();
            for c in g.neighbors(b) {
                if !g.non_adjacent(a, c) || !cm.is(b, c, j) {
                    continue;
                }
                for d in g.neighbors(b) {
                    if !g.non_adjacent(a, d) || !cm.is(b, d, j) {
                        continue;
                    }
                    let strict = match cm.get(c, d) {
                        Some(x) if x == i => true,
                        Some(EdgeClass::Free) if !strict_only => false,
                        _ => continue,
                    };
                    for e in g.neighbors(a) {
                        if cm.is(a, e, i) && g.non_adjacent(b, e) && cm.is(e, c, j) && cm.is(e, d, j) {
                            return Some(PentagonWitness { vertices: [a, b, c, d, e], class: i, strict });
                        }
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchingKind {
    /// `(x,y,z,w)`: `xw` a non-edge, `xy, zw` in the class or free, `yz` in
    /// the other class.
    Path,
    /// `(a,b,c,d)`: `ab, cd` in the class or free, `bc, ad` in the other class.
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwitchingWitness {
    pub kind: SwitchingKind,
    pub vertices: [usize; 4],
    pub class: EdgeClass,
    /// Both class-or-free edges are actually in the class.
    pub strict: bool,
}

impl SwitchingWitness {
    pub fn holds_in(&self, g: &Graph, tp: &TriPartition) -> bool {
        let cm = ClassMatrix::new(g, tp);
        let [p, q, r, s] = self.vertices;
        let i = self.class;
        let j = i.opposite();
        let distinct = p != q && p != r && p != s && q != r && q != s && r != s;
        let sides = if self.strict {
            cm.is(p, q, i) && cm.is(r, s, i)
        } else {
            cm.is_or_free(p, q, i) && cm.is_or_free(r, s, i)
        };
        let closing = match self.kind {
            SwitchingKind::Path => g.non_adjacent(p, s),
            SwitchingKind::Cycle => cm.is(p, s, j),
        };
        i != EdgeClass::Free && distinct && sides && cm.is(q, r, j) && closing
    }
}

/// Scans for a switching path or cycle. Works on any partition, valid or
/// not.
pub fn detect_switching(
    g: &Graph,
    tp: &TriPartition,
    kind: SwitchingKind,
    strict_only: bool,
) -> Option<SwitchingWitness> {
    let cm = ClassMatrix::new(g, tp);
    let side_ok = |x: usize, y: usize, i: EdgeClass| {
        if strict_only {
            cm.is(x, y, i)
        } else {
            cm.is_or_free(x, y, i)
        }
    };
    for p in 0..g.n() {
        for q in g.neighbors(p) {
            for r in g.neighbors(q) {
                if r == p {
                    continue;
                }
                let Some(j) = colored(cm.get(q, r)) else { continue };
                let i = j.opposite();
                if !side_ok(p, q, i) {
                    continue;
                }
                for s in g.neighbors(r) {
                    if s == p || s == q || !side_ok(r, s, i) {
                        continue;
                    }
                    let closing = match kind {
                        SwitchingKind::Path => g.non_adjacent(p, s),
                        SwitchingKind::Cycle => cm.is(p, s, j),
                    };
                    if closing {
                        let strict = cm.is(p, q, i) && cm.is(r, s, i);
                        return Some(SwitchingWitness { kind, vertices: [p, q, r, s], class: i, strict });
                    }
                }
            }
        }
    }
    None
}

/// Six distinct vertices `v0..v5` with `v0v1, v2v3, v4v5` in one class and
/// `v1v2, v3v4, v5v0` non-edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ap6Witness {
    pub vertices: [usize; 6],
    pub class: EdgeClass,
}

/// Scans a full 2-coloring (no free edges) for an AP6.
///
/// Panics if some edge is still free.
pub fn detect_ap6(g: &Graph, coloring: &TriPartition) -> Option<Ap6Witness> {
    assert!(coloring.ids(EdgeClass::Free).next().is_none(), "AP6 detection needs every edge in class 1 or 2");
    let cm = ClassMatrix::new(g, coloring);
    let n = g.n();
    for v0 in 0..n {
        for v1 in g.neighbors(v0) {
            let c = cm.get(v0, v1).expect("edge");
            for v2 in 0..n {
                if v2 == v0 || !g.non_adjacent(v1, v2) {
                    continue;
                }
                for v3 in g.neighbors(v2) {
                    if v3 == v0 || v3 == v1 || !cm.is(v2, v3, c) {
                        continue;
                    }
                    for v4 in 0..n {
                        if [v0, v1, v2].contains(&v4) || !g.non_adjacent(v3, v4) {
                            continue;
                        }
                        for v5 in g.neighbors(v4) {
                            if [v0, v1, v2, v3].contains(&v5) || !cm.is(v4, v5, c) || !g.non_adjacent(v5, v0) {
                                continue;
                            }
                            return Some(Ap6Witness { vertices: [v0, v1, v2, v3, v4, v5], class: c });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Replaces every free edge by the class chosen for it.
pub fn fold_free<F>(tp: &TriPartition, mut choose: F) -> TriPartition
where
    F: FnMut(usize) -> EdgeClass,
{
    let mut out = tp.clone();
    for e in tp.ids(EdgeClass::Free).collect::<Vec<_>>() {
        let c = choose(e);
        assert_ne!(c, EdgeClass::Free, "fold must pick class 1 or 2");
        out.set(e, c);
    }
    out
}
