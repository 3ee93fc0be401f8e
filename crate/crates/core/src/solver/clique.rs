//! Maximum clique by branch and bound with a greedy-colouring bound, and
//! maximal clique enumeration, on graphs given as bitset adjacency rows.

use std::time::Instant;

use super::bits::Bits;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Limits {
    pub max_nodes: u64,
    pub deadline: Option<Instant>,
}

#[derive(Debug, Clone)]
pub(crate) struct Outcome {
    pub best: Vec<usize>,
    pub nodes: u64,
    /// False when the search stopped on its budget before proving `best` optimal.
    pub exact: bool,
}

/// Depth up to which the branching order is re-sorted by degree inside the
/// candidate set; deeper levels inherit their parent's order.
const REORDER_DEPTH: usize = 2;

/// Candidates in descending degree order within `cand`, ties by index.
pub(crate) fn degree_order(adj: &[Bits], cand: &Bits) -> Vec<usize> {
    let mut order: Vec<(usize, usize)> = cand.iter().map(|v| (adj[v].and_count(cand), v)).collect();
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    order.into_iter().map(|(_, v)| v).collect()
}

/// Sequential greedy colouring in `order`. Returns the vertices grouped by
/// colour class and, for each position, its class number (1-based), which
/// bounds the clique size among that vertex and everything before it.
pub(crate) fn colour_classes(adj: &[Bits], len: usize, order: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Bits> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for &v in order {
        match classes.iter().position(|c| !c.intersects(&adj[v])) {
            Some(c) => {
                classes[c].insert(v);
                members[c].push(v);
            }
            None => {
                let mut c = Bits::new(len);
                c.insert(v);
                classes.push(c);
                members.push(vec![v]);
            }
        }
    }
    let mut list = Vec::with_capacity(order.len());
    let mut colours = Vec::with_capacity(order.len());
    for (k, vs) in members.into_iter().enumerate() {
        for v in vs {
            list.push(v);
            colours.push(k + 1);
        }
    }
    (list, colours)
}

pub(crate) fn colour_bound(adj: &[Bits], cand: &Bits) -> usize {
    let order = degree_order(adj, cand);
    let (_, colours) = colour_classes(adj, adj.len(), &order);
    colours.last().copied().unwrap_or(0)
}

struct Search<'a> {
    adj: &'a [Bits],
    limits: Limits,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    stopped: bool,
}

impl Search<'_> {
    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.limits.max_nodes {
            self.stopped = true;
        } else if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.limits.deadline {
                if Instant::now() >= deadline {
                    self.stopped = true;
                }
            }
        }
        self.stopped
    }

    fn expand(&mut self, mut cand: Bits, order: &[usize], depth: usize) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let (list, colours) = colour_classes(self.adj, self.adj.len(), order);
        for i in (0..list.len()).rev() {
            if self.stopped || self.current.len() + colours[i] <= self.best.len() {
                return;
            }
            let v = list[i];
            let next = cand.and(&self.adj[v]);
            self.current.push(v);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                let child: Vec<usize> = if depth < REORDER_DEPTH {
                    degree_order(self.adj, &next)
                } else {
                    order.iter().copied().filter(|&u| next.contains(u)).collect()
                };
                self.expand(next, &child, depth + 1);
            }
            self.current.pop();
            cand.remove(v);
        }
    }
}

/// Largest clique of the graph, starting from a known clique `incumbent`.
pub(crate) fn max_clique(adj: &[Bits], incumbent: Vec<usize>, limits: Limits) -> Outcome {
    let all = Bits::full(adj.len());
    let mut search = Search { adj, limits, best: incumbent, current: Vec::new(), nodes: 0, stopped: false };
    if !all.is_empty() {
        let order = degree_order(adj, &all);
        search.expand(all, &order, 0);
    }
    Outcome { best: search.best, nodes: search.nodes, exact: !search.stopped }
}

/// Maximal cliques in Bron–Kerbosch order with Tomita pivoting, stopping
/// after `limit`. The boolean is true when the enumeration is complete.
pub(crate) fn maximal_cliques(adj: &[Bits], limit: usize) -> (Vec<Vec<usize>>, bool) {
    fn go(adj: &[Bits], r: &mut Vec<usize>, mut p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>, limit: usize) -> bool {
        if p.is_empty() && x.is_empty() {
            if out.len() == limit {
                return false;
            }
            out.push(r.clone());
            return true;
        }
        let pivot = p.iter().chain(x.iter()).max_by_key(|&u| (adj[u].and_count(&p), usize::MAX - u));
        let branch = match pivot {
            Some(u) => p.and_not(&adj[u]),
            None => p.clone(),
        };
        for v in branch.iter() {
            r.push(v);
            let ok = go(adj, r, p.and(&adj[v]), x.and(&adj[v]), out, limit);
            r.pop();
            if !ok {
                return false;
            }
            p.remove(v);
            x.insert(v);
        }
        true
    }
    let mut out = Vec::new();
    let complete = go(adj, &mut Vec::new(), Bits::full(adj.len()), Bits::new(adj.len()), &mut out, limit);
    (out, complete)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Bits> {
        let mut adj = vec![Bits::new(n); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    const NO_LIMIT: Limits = Limits { max_nodes: u64::MAX, deadline: None };

    #[test]
    fn finds_clique_in_small_graph() {
        // triangle 0-1-2 plus a 4-clique 3..7
        let mut edges = vec![(0, 1), (1, 2), (0, 2), (2, 3)];
        for a in 3..7 {
            for b in a + 1..7 {
                edges.push((a, b));
            }
        }
        let adj = graph(7, &edges);
        let out = max_clique(&adj, vec![0], NO_LIMIT);
        assert!(out.exact);
        let mut best = out.best;
        best.sort();
        assert_eq!(best, vec![3, 4, 5, 6]);
    }

    #[test]
    fn node_budget_stops_search() {
        let n = 40;
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).filter(move |b| (a * b) % 3 != 1).map(move |b| (a, b))).collect();
        let adj = graph(n, &edges);
        let out = max_clique(&adj, vec![], Limits { max_nodes: 3, deadline: None });
        assert!(!out.exact);
        assert_eq!(out.nodes, 3);
    }

    #[test]
    fn enumerates_maximal_cliques() {
        // path 0-1-2 has maximal cliques {0,1} and {1,2}; vertex 3 isolated
        let adj = graph(4, &[(0, 1), (1, 2)]);
        let (mut all, complete) = maximal_cliques(&adj, 10);
        assert!(complete);
        for c in &mut all {
            c.sort();
        }
        all.sort();
        assert_eq!(all, vec![vec![0, 1], vec![1, 2], vec![3]]);
        let (some, complete) = maximal_cliques(&adj, 2);
        assert_eq!(some.len(), 2);
        assert!(!complete);
    }
}
