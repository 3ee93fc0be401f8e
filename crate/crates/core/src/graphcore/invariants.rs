//! Exact ω, α and μ by bitset search. Graphs have at most 64 vertices.

use super::Graph;
use crate::families::VertexSet;

pub fn clique_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut best = 0;
    expand_clique(g.adjacency(), 0, g.vertices(), &mut best);
    best
}

pub fn independence_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let all = g.vertices();
    let complement: Vec<VertexSet> =
        (0..g.n()).map(|v| all.difference(g.neighbours(v)).without(v)).collect();
    let mut best = 0;
    expand_clique(&complement, 0, all, &mut best);
    best
}

/// μ(G): size of a smallest maximal independent set (equivalently, a
/// smallest independent dominating set).
pub fn min_maximal_independent(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut best = independence_number(g);
    min_dominating(g, 0, g.vertices(), &mut best);
    best
}

/// Greedy colouring of `candidates`; returns vertices in colour order with
/// the colour count reached so far, so `colours[i]` bounds any clique inside
/// `order[..=i]`.
fn colour_sort(adj: &[VertexSet], candidates: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.len());
    let mut colours = Vec::with_capacity(candidates.len());
    let mut uncoloured = candidates;
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured;
        while let Some(v) = q.first() {
            q = q.difference(adj[v]).without(v);
            uncoloured = uncoloured.without(v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

fn expand_clique(adj: &[VertexSet], size: usize, mut candidates: VertexSet, best: &mut usize) {
    let (order, colours) = colour_sort(adj, candidates);
    for i in (0..order.len()).rev() {
        if size + colours[i] <= *best {
            return;
        }
        let v = order[i];
        let next = candidates.intersection(adj[v]);
        if next.is_empty() {
            *best = (*best).max(size + 1);
        } else {
            expand_clique(adj, size + 1, next, best);
        }
        candidates = candidates.without(v);
    }
}

/// `free` holds the vertices neither chosen nor adjacent to a chosen one.
fn min_dominating(g: &Graph, chosen: usize, free: VertexSet, best: &mut usize) {
    if free.is_empty() {
        *best = (*best).min(chosen);
        return;
    }
    if chosen + 1 >= *best {
        return;
    }
    // branch on the free vertex with the fewest ways to be dominated
    let u = free
        .iter()
        .min_by_key(|&u| g.neighbours(u).with(u).intersection(free).len())
        .expect("free is non-empty");
    for w in g.neighbours(u).with(u).intersection(free).iter() {
        min_dominating(g, chosen + 1, free.difference(g.neighbours(w)).without(w), best);
    }
}
