//! Three-way edge partitions `(F0, F1, F2)`.

use crate::auxiliary::AuxiliaryGraph;
use crate::graph::{EdgeId, EdgePair, Graph};

/// Class of an edge: uncolored (`Free`, class 0) or one of the two colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    Free,
    One,
    Two,
}

impl EdgeClass {
    /// The other color; `Free` stays `Free`.
    pub fn opposite(self) -> EdgeClass {
        match self {
            EdgeClass::Free => EdgeClass::Free,
            EdgeClass::One => EdgeClass::Two,
            EdgeClass::Two => EdgeClass::One,
        }
    }

    pub fn index(self) -> usize {
        match self {
            EdgeClass::Free => 0,
            EdgeClass::One => 1,
            EdgeClass::Two => 2,
        }
    }
}

/// Class of every edge of a graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriPartition {
    classes: Vec<EdgeClass>,
}

impl TriPartition {
    pub fn all_free(m: usize) -> Self {
        TriPartition { classes: vec![EdgeClass::Free; m] }
    }

    pub fn from_classes(classes: Vec<EdgeClass>) -> Self {
        TriPartition { classes }
    }

    /// Builds a partition from explicit edge sets; edges not listed are free.
    ///
    /// Panics if a pair is not an edge of `g`.
    pub fn from_sets(g: &Graph, one: &[EdgePair], two: &[EdgePair]) -> Self {
        let mut classes = vec![EdgeClass::Free; g.m()];
        for (set, class) in [(one, EdgeClass::One), (two, EdgeClass::Two)] {
            for e in set {
                let id = g.edge_id(e.u(), e.v()).unwrap_or_else(|| panic!("{e} is not an edge"));
                classes[id] = class;
            }
        }
        TriPartition { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, e: EdgeId) -> EdgeClass {
        self.classes[e]
    }

    pub fn set(&mut self, e: EdgeId, class: EdgeClass) {
        self.classes[e] = class;
    }

    pub fn classes(&self) -> &[EdgeClass] {
        &self.classes
    }

    pub fn ids(&self, class: EdgeClass) -> impl Iterator<Item = EdgeId> + '_ {
        self.classes.iter().enumerate().filter(move |(_, &c)| c == class).map(|(i, _)| i)
    }

    pub fn pairs(&self, g: &Graph, class: EdgeClass) -> Vec<EdgePair> {
        self.ids(class).map(|e| g.edge(e)).collect()
    }

    /// Sizes of `(F0, F1, F2)`.
    pub fn sizes(&self) -> [usize; 3] {
        let mut out = [0; 3];
        for c in &self.classes {
            out[c.index()] += 1;
        }
        out
    }

    /// Every auxiliary edge joins a class-1 edge to a class-2 edge.
    pub fn is_valid(&self, aux: &AuxiliaryGraph) -> bool {
        aux.edges().all(|(e, f)| {
            matches!(
                (self.classes[e], self.classes[f]),
                (EdgeClass::One, EdgeClass::Two) | (EdgeClass::Two, EdgeClass::One)
            )
        })
    }

    /// Class of the edge `ab` in `g`, `None` for non-edges.
    pub fn class_of(&self, g: &Graph, a: usize, b: usize) -> Option<EdgeClass> {
        g.edge_id(a, b).map(|e| self.classes[e])
    }
}
