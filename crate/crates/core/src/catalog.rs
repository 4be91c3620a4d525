//! All graphs on a few vertices, one per isomorphism class.
//!
//! Classes are grown one vertex at a time and deduplicated by a canonical
//! code: the largest graph6 bit string over vertex orders that respect an
//! equitable partition.

use std::collections::HashSet;

use crate::graph::Graph;

/// Larger orders are refused; the search becomes slow past this point.
pub const MAX_CATALOG_N: usize = 8;

/// Upper-triangle bits in graph6 order, first bit most significant.
fn code_of(n: usize, adj: &[u32], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | (adj[order[i]] >> order[j] & 1) as u64;
        }
    }
    code
}

fn adjacency_bits(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w)).collect()
}

/// Ordered cells of the coarsest equitable partition refining the degree partition.
fn equitable_cells(n: usize, adj: &[u32]) -> Vec<Vec<usize>> {
    let mut cell_of = vec![0usize; n];
    let mut cells = 1;
    loop {
        let signature = |v: usize| {
            let mut counts = vec![0u32; cells];
            for w in 0..n {
                if adj[v] >> w & 1 == 1 {
                    counts[cell_of[w]] += 1;
                }
            }
            (cell_of[v], counts)
        };
        let mut sigs: Vec<_> = (0..n).map(signature).collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for (v, sig) in sigs.iter_mut().enumerate() {
            cell_of[v] = distinct.binary_search(sig).unwrap();
        }
        if distinct.len() == cells {
            break;
        }
        cells = distinct.len();
    }
    let mut out = vec![Vec::new(); cells];
    for v in 0..n {
        out[cell_of[v]].push(v);
    }
    out
}

fn best_order(cells: &[Vec<usize>], n: usize, adj: &[u32], order: &mut Vec<usize>, used: &mut [bool], best: &mut u64) {
    let pos = order.len();
    if pos == n {
        *best = (*best).max(code_of(n, adj, order));
        return;
    }
    let mut start = 0;
    let cell = cells
        .iter()
        .find(|c| {
            start += c.len();
            start > pos
        })
        .unwrap();
    for &v in cell {
        if !used[v] {
            used[v] = true;
            order.push(v);
            best_order(cells, n, adj, order, used, best);
            order.pop();
            used[v] = false;
        }
    }
}

/// A number that two graphs share exactly when they are isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical codes need n(n-1)/2 <= 64");
    let adj = adjacency_bits(g);
    let cells = equitable_cells(n, &adj);
    let mut best = 0;
    best_order(&cells, n, &adj, &mut Vec::with_capacity(n), &mut vec![false; n], &mut best);
    best
}

pub fn from_code(n: usize, code: u64) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (bits - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("code describes a simple graph")
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_code(a) == canonical_code(b)
}

fn codes(n: usize) -> Vec<u64> {
    let mut level = vec![0u64];
    for k in 2..=n {
        let mut seen = HashSet::new();
        for &code in &level {
            let base = from_code(k - 1, code);
            for mask in 0u32..1 << (k - 1) {
                let mut edges = base.edges().to_vec();
                edges.extend((0..k - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, k - 1)));
                seen.insert(canonical_code(&Graph::new(k, edges).unwrap()));
            }
        }
        level = seen.into_iter().collect();
    }
    level.sort_unstable();
    level
}

/// Every graph on `n` vertices up to isomorphism, in canonical labeling,
/// ordered by edge count and then by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CATALOG_N).contains(&n), "catalog supports 1 <= n <= {MAX_CATALOG_N}");
    let mut graphs: Vec<Graph> = codes(n).into_iter().map(|c| from_code(n, c)).collect();
    graphs.sort_by_key(|g| (g.edge_count(), canonical_code(g)));
    graphs
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
