//! Simple-cycle enumeration for small undirected graphs.
//!
//! Each cycle is reported once, rooted at its smallest vertex and oriented
//! so that the second vertex is smaller than the last one.

use std::ops::ControlFlow;

use crate::graph::Graph;

/// Calls `visit` with the vertex sequence of every simple cycle of `g`.
/// Stops early when `visit` breaks.
pub fn for_each_cycle<B>(g: &Graph, mut visit: impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        let res = extend(g, start, &mut path, &mut on_path, &mut visit);
        on_path[start] = false;
        path.pop();
        if let ControlFlow::Break(b) = res {
            return Some(b);
        }
    }
    None
}

fn extend<B>(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let tip = *path.last().unwrap();
    for &next in g.neighbors(tip) {
        if next == start {
            if path.len() >= 3 && path[1] < tip {
                visit(path)?;
            }
            continue;
        }
        if next < start || on_path[next] {
            continue;
        }
        path.push(next);
        on_path[next] = true;
        let res = extend(g, start, path, on_path, visit);
        on_path[next] = false;
        path.pop();
        res?;
    }
    ControlFlow::Continue(())
}

/// All simple cycles as vertex sequences.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_cycle::<()>(g, |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Number of simple cycles of odd length.
pub fn count_odd_cycles(g: &Graph) -> u64 {
    let mut count = 0;
    for_each_cycle::<()>(g, |c| {
        if c.len() % 2 == 1 {
            count += 1;
        }
        ControlFlow::Continue(())
    });
    count
}

pub fn has_even_cycle(g: &Graph) -> bool {
    for_each_cycle(g, |c| if c.len() % 2 == 0 { ControlFlow::Break(()) } else { ControlFlow::Continue(()) })
        .is_some()
}

/// Whether every odd cycle of `g` passes through `v`.
pub fn all_odd_cycles_contain(g: &Graph, v: usize) -> bool {
    for_each_cycle(g, |c| {
        if c.len() % 2 == 1 && !c.contains(&v) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_none()
}
