//! Induced detection of a handful of small fixed patterns.

use std::fmt;

use crate::graph::Graph;

/// Small forbidden patterns used by the recognizers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    TwoK2,
    P4,
    C4,
    C5,
    /// Complement of `P3 ∪ K2`. Position 0 is the middle of the `P3`; the
    /// non-edges are exactly `{0,2}`, `{0,3}`, `{1,4}`.
    Paraglider,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [Pattern::TwoK2, Pattern::P4, Pattern::C4, Pattern::C5, Pattern::Paraglider];

    pub fn order(self) -> usize {
        match self {
            Pattern::TwoK2 | Pattern::P4 | Pattern::C4 => 4,
            Pattern::C5 | Pattern::Paraglider => 5,
        }
    }

    /// Edges of the labeled template, as position pairs.
    pub fn template_edges(self) -> &'static [(usize, usize)] {
        match self {
            Pattern::TwoK2 => &[(0, 1), (2, 3)],
            Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
            Pattern::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            Pattern::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            Pattern::Paraglider => &[(0, 1), (0, 4), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
        }
    }

    fn template_adjacent(self, i: usize, j: usize) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.template_edges().contains(&(i, j))
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::TwoK2 => "2K2",
            Pattern::P4 => "P4",
            Pattern::C4 => "C4",
            Pattern::C5 => "C5",
            Pattern::Paraglider => "paraglider",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An ordered vertex tuple realizing `pattern` as an induced subgraph, with
/// `vertices[i]` playing template position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl PatternWitness {
    /// Re-checks the induced edge profile against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let k = self.pattern.order();
        if self.vertices.len() != k || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (self.vertices[i], self.vertices[j]);
                if a == b || g.adjacent(a, b) != self.pattern.template_adjacent(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pattern)?;
        for v in &self.vertices {
            write!(f, " {}", v + 1)?;
        }
        Ok(())
    }
}

/// Returns the lexicographically first vertex tuple that induces `pattern`.
///
/// Backtracking over tuples in lexicographic order, checking each new vertex
/// against the ones already placed.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<PatternWitness> {
    let k = pattern.order();
    let mut tuple = Vec::with_capacity(k);
    if extend(g, pattern, &mut tuple) {
        Some(PatternWitness { pattern, vertices: tuple })
    } else {
        None
    }
}

fn extend(g: &Graph, pattern: Pattern, tuple: &mut Vec<usize>) -> bool {
    let pos = tuple.len();
    if pos == pattern.order() {
        return true;
    }
    'candidates: for v in 0..g.n() {
        for (i, &w) in tuple.iter().enumerate() {
            if w == v || g.adjacent(v, w) != pattern.template_adjacent(i, pos) {
                continue 'candidates;
            }
        }
        tuple.push(v);
        if extend(g, pattern, tuple) {
            return true;
        }
        tuple.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(a, b)| (a - 1, b - 1))).unwrap()
    }

    fn one_based(w: &PatternWitness) -> Vec<usize> {
        w.vertices.iter().map(|v| v + 1).collect()
    }

    #[test]
    fn path_has_no_2k2() {
        let p4 = graph(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(find_induced(&p4, Pattern::TwoK2), None);
        let w = find_induced(&p4, Pattern::P4).unwrap();
        assert_eq!(one_based(&w), vec![1, 2, 3, 4]);
    }

    #[test]
    fn c4_witness_is_first_tuple() {
        let c4 = graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let w = find_induced(&c4, Pattern::C4).unwrap();
        assert_eq!(one_based(&w), vec![1, 2, 3, 4]);
        assert!(w.holds_in(&c4));
        assert_eq!(find_induced(&c4, Pattern::P4), None);
    }

    #[test]
    fn paraglider_witness_has_expected_non_edges() {
        let pg = graph(5, &[(1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]);
        let w = find_induced(&pg, Pattern::Paraglider).unwrap();
        assert!(w.holds_in(&pg));
        let mut non_edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                let (a, b) = (w.vertices[i], w.vertices[j]);
                if !pg.adjacent(a, b) {
                    non_edges.push((a.min(b) + 1, a.max(b) + 1));
                }
            }
        }
        non_edges.sort();
        assert_eq!(non_edges, vec![(1, 3), (1, 4), (2, 5)]);
        assert_eq!(one_based(&w), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn c5_found_in_pentagon_only() {
        let c5 = graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
        assert!(find_induced(&c5, Pattern::C5).is_some());
        let k5 = graph(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]);
        for p in Pattern::ALL {
            assert_eq!(find_induced(&k5, p), None, "{p}");
        }
    }

    #[test]
    fn too_few_vertices() {
        let g = graph(3, &[(1, 2)]);
        for p in Pattern::ALL {
            assert_eq!(find_induced(&g, p), None);
        }
    }
}
