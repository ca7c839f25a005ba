//! Lexicographic breadth-first search.

use crate::graph::Graph;
use crate::ordering::VertexOrdering;

const NIL: usize = usize::MAX;

/// Lex-BFS with ties broken by smallest vertex id.
pub fn lexbfs(g: &Graph) -> VertexOrdering {
    lexbfs_with_priority(g, &VertexOrdering::identity(g.n()))
}

/// Lex-BFS where, among vertices with equal labels, the one placed earliest
/// by `priority` is chosen. Any priority yields a valid Lex-BFS ordering.
///
/// Partition refinement: the unvisited vertices are kept as a sequence of
/// classes, each a linked list in priority order. Visiting a vertex moves
/// its unvisited neighbors to a new class just in front of their old one,
/// so the front class always holds the vertices with the best label.
pub fn lexbfs_with_priority(g: &Graph, priority: &VertexOrdering) -> VertexOrdering {
    let n = g.n();
    assert_eq!(priority.len(), n, "priority must order every vertex");
    if n == 0 {
        return VertexOrdering::identity(0);
    }

    // vertex lists
    let mut next = vec![NIL; n];
    let mut prev = vec![NIL; n];
    let mut class_of = vec![0usize; n];
    // class lists
    let mut head = vec![NIL];
    let mut tail = vec![NIL];
    let mut class_next = vec![NIL];
    let mut class_prev = vec![NIL];
    let mut split_into = vec![NIL];
    let mut split_stamp = vec![NIL];
    let mut first_class = 0;

    let seq = priority.as_slice();
    for (i, &v) in seq.iter().enumerate() {
        prev[v] = if i == 0 { NIL } else { seq[i - 1] };
        next[v] = seq.get(i + 1).copied().unwrap_or(NIL);
    }
    head[0] = seq[0];
    tail[0] = seq[n - 1];

    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(n);
    // neighbors of each vertex sorted by priority, so moved vertices keep
    // their relative priority order inside the new class
    let by_priority = |v: usize| {
        let mut ws: Vec<usize> = g.neighbors(v).collect();
        ws.sort_unstable_by_key(|&w| priority.rank(w));
        ws
    };

    for step in 0..n {
        while head[first_class] == NIL {
            first_class = class_next[first_class];
        }
        let pivot = head[first_class];
        unlink(pivot, &mut next, &mut prev, &mut head, &mut tail, first_class);
        visited[pivot] = true;
        out.push(pivot);

        for w in by_priority(pivot) {
            if visited[w] {
                continue;
            }
            let old = class_of[w];
            if split_stamp[old] != step {
                split_stamp[old] = step;
                let c = head.len();
                head.push(NIL);
                tail.push(NIL);
                split_stamp.push(NIL);
                split_into.push(NIL);
                // insert c before old
                class_prev.push(class_prev[old]);
                class_next.push(old);
                if class_prev[old] != NIL {
                    let p = class_prev[old];
                    class_next[p] = c;
                }
                if class_prev[old] == NIL || old == first_class {
                    first_class = c;
                }
                class_prev[old] = c;
                split_into[old] = c;
            }
            let c = split_into[old];
            unlink(w, &mut next, &mut prev, &mut head, &mut tail, old);
            // append to c
            prev[w] = tail[c];
            next[w] = NIL;
            if tail[c] == NIL {
                head[c] = w;
            } else {
                next[tail[c]] = w;
            }
            tail[c] = w;
            class_of[w] = c;
        }
    }
    VertexOrdering::from_sequence(out).expect("every vertex is visited once")
}

fn unlink(v: usize, next: &mut [usize], prev: &mut [usize], head: &mut [usize], tail: &mut [usize], class: usize) {
    let (p, q) = (prev[v], next[v]);
    if p == NIL {
        head[class] = q;
    } else {
        next[p] = q;
    }
    if q == NIL {
        tail[class] = p;
    } else {
        prev[q] = p;
    }
    prev[v] = NIL;
    next[v] = NIL;
}

/// A step at which the given ordering picked a vertex whose label is
/// strictly worse than that of another unplaced vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexBfsViolation {
    /// 0-based position in the ordering.
    pub step: usize,
    pub chosen: usize,
    pub better: usize,
}

/// Checks that `order` could have been produced by Lex-BFS under some
/// tie-breaking.
///
/// Labels are compared by the positions of already-placed neighbors; a
/// label is better when, at the first difference, it has the earlier
/// position, or when the other label is a proper prefix of it.
pub fn verify_lexbfs(g: &Graph, order: &VertexOrdering) -> Result<(), LexBfsViolation> {
    let n = g.n();
    assert_eq!(order.len(), n, "ordering must cover every vertex");
    // labels[v] = positions of placed neighbors, increasing
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut placed = vec![false; n];
    for step in 0..n {
        let chosen = order.vertex_at(step);
        for v in 0..n {
            if !placed[v] && v != chosen && label_better(&labels[v], &labels[chosen]) {
                return Err(LexBfsViolation { step, chosen, better: v });
            }
        }
        placed[chosen] = true;
        for w in g.neighbors(chosen) {
            if !placed[w] {
                labels[w].push(step);
            }
        }
    }
    Ok(())
}

/// `true` iff label `a` is strictly better than `b`.
fn label_better(a: &[usize], b: &[usize]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x < y;
        }
    }
    a.len() > b.len()
}
