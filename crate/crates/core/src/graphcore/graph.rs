use std::collections::VecDeque;
use std::ops::Range;

use super::composition::{ComponentSpec, Composition, Kind};
use crate::error::{Error, Result};
use crate::families::{VertexSet, MAX_VERTICES};

/// A realized component occupying a contiguous range of global indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placed {
    pub spec: ComponentSpec,
    pub start: usize,
    /// True only for the first component in global order.
    pub distinguished: bool,
}

impl Placed {
    pub fn range(&self) -> Range<usize> {
        self.start..self.start + self.spec.size
    }

    pub fn vertices(&self) -> VertexSet {
        self.range().collect()
    }
}

/// An undirected simple graph on at most 64 vertices.
///
/// Graphs realized from a [`Composition`] carry their component layout; graphs
/// obtained by deleting vertices do not, and operations that need the
/// path/cycle structure refuse them with [`Error::DerivedGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    labels: Vec<String>,
    layout: Option<Vec<Placed>>,
    source: Option<Composition>,
}

pub fn realize(comp: &Composition) -> Result<Graph> {
    let n = comp.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, limit: MAX_VERTICES });
    }
    let mut adjacency = vec![VertexSet::EMPTY; n];
    let mut labels = Vec::with_capacity(n);
    let mut layout = Vec::new();
    let mut start = 0;
    for (ci, spec) in comp.layout_order().into_iter().enumerate() {
        for a in 0..spec.size {
            labels.push(if ci == 0 { format!("{}", a + 1) } else { format!("{}^{ci}", a + 1) });
            for b in 0..spec.size {
                if spec.adjacent(a, b) {
                    adjacency[start + a] = adjacency[start + a].with(start + b);
                }
            }
        }
        layout.push(Placed { spec, start, distinguished: ci == 0 });
        start += spec.size;
    }
    Ok(Graph { adjacency, labels, layout: Some(layout), source: Some(comp.clone()) })
}

impl Graph {
    /// Builds a derived graph from explicit adjacency. Used for tests and
    /// for vertex deletions.
    pub fn from_adjacency(adjacency: Vec<VertexSet>, labels: Vec<String>) -> Result<Self> {
        let n = adjacency.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, limit: MAX_VERTICES });
        }
        assert_eq!(labels.len(), n, "one label per vertex");
        for (v, nb) in adjacency.iter().enumerate() {
            assert!(nb.is_subset(VertexSet::prefix(n)), "neighbour out of range at {v}");
            assert!(!nb.contains(v), "self-loop at {v}");
            for w in nb.iter() {
                assert!(adjacency[w].contains(v), "asymmetric edge {v}-{w}");
            }
        }
        Ok(Graph { adjacency, labels, layout: None, source: None })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n())
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adjacency
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].contains(v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adjacency[u].iter().filter(move |&w| w > u).map(move |w| (u, w)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn layout(&self) -> Option<&[Placed]> {
        self.layout.as_deref()
    }

    pub fn composition(&self) -> Option<&Composition> {
        self.source.as_ref()
    }

    pub fn is_derived(&self) -> bool {
        self.layout.is_none()
    }

    pub fn require_layout(&self) -> Result<&[Placed]> {
        self.layout.as_deref().ok_or(Error::DerivedGraph)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
        }
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adjacency[v].intersects(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adjacency[v]))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Shortest-path length in edges; `None` when `v` and `w` lie in different components.
    pub fn distance(&self, v: usize, w: usize) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([v]);
        dist[v] = 0;
        while let Some(x) = queue.pop_front() {
            if x == w {
                return Ok(Some(dist[x]));
            }
            for y in self.adjacency[x].iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(None)
    }

    /// Induced subgraph on `keep`, re-indexed in ascending order, labels preserved.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let kept = keep.intersection(self.vertices()).to_vec();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            position[v] = i;
        }
        let adjacency = kept
            .iter()
            .map(|&v| self.adjacency[v].intersection(keep).iter().map(|w| position[w]).collect())
            .collect();
        let labels = kept.iter().map(|&v| self.labels[v].clone()).collect();
        Graph { adjacency, labels, layout: None, source: None }
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().without(v)))
    }

    /// `G ↓ v`: delete `v` together with its neighbours.
    pub fn collapse_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().difference(self.adjacency[v].with(v))))
    }

    /// Vertices of non-distinguished cycle components, plus the distinguished
    /// component when it is a cycle that is not complete.
    pub(crate) fn rotating_components(&self) -> Result<Vec<Placed>> {
        Ok(self
            .require_layout()?
            .iter()
            .filter(|p| p.spec.kind == Kind::Cycle && !(p.distinguished && p.spec.is_complete()))
            .copied()
            .collect())
    }

    pub fn distinguished(&self) -> Result<Placed> {
        Ok(self.require_layout()?[0])
    }
}
