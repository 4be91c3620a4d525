//! Simple undirected graphs with a fixed edge labeling.
//!
//! Vertices are `0..n` inside the library. Everything that faces a user
//! (parsers, reports, error messages) shows them as `1..=n`.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} ({}, {}) is a self-loop", .u + 1, .v + 1)]
    SelfLoop { index: usize, u: usize, v: usize },
    #[error("edge {index} ({}, {}) duplicates an earlier edge", .u + 1, .v + 1)]
    DuplicateEdge { index: usize, u: usize, v: usize },
    #[error("edge {index} ({}, {}) has an endpoint outside 1..={n}", .u + 1, .v + 1)]
    VertexOutOfRange { index: usize, u: usize, v: usize, n: usize },
    #[error("edge index {index} is outside 1..={m}", index = .index + 1)]
    IndexOutOfRange { index: usize, m: usize },
}

/// A simple graph on vertices `0..n`. The position of an edge in
/// [`Graph::edges`] is its label, and every matrix column follows it.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { index: index + 1, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index: index + 1, u, v });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { index: index + 1, u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges, adjacency })
    }

    /// Builds a graph from 1-indexed endpoint pairs.
    pub fn from_one_indexed(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut shifted = Vec::with_capacity(edges.len());
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u == 0 || v == 0 {
                // wrapping keeps the 1-indexed display of the offending pair honest
                return Err(GraphError::VertexOutOfRange {
                    index: index + 1,
                    u: u.wrapping_sub(1),
                    v: v.wrapping_sub(1),
                    n,
                });
            }
            shifted.push((u - 1, v - 1));
        }
        Graph::new(n, shifted)
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adjacency: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, edges).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, edges).expect("path is simple")
    }

    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, edges).expect("star is simple")
    }

    /// The paw: a triangle on 2, 3, 4 with a pendant vertex 1 hung on 2.
    pub fn paw() -> Self {
        Graph::from_one_indexed(4, &[(1, 2), (2, 3), (3, 4), (2, 4)]).expect("paw is simple")
    }

    /// Vertex-disjoint union; `other`'s vertices and edges come after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::new(self.n + other.n, edges).expect("union of simple graphs is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// The spanning subgraph keeping exactly the edges indexed by `subset`,
    /// relabeled in increasing order of their index in `self`.
    pub fn spanning_subgraph(&self, subset: &[usize]) -> Result<Graph, GraphError> {
        let m = self.edges.len();
        let mut keep = vec![false; m];
        for &index in subset {
            if index >= m {
                return Err(GraphError::IndexOutOfRange { index, m });
            }
            keep[index] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&keep)
            .filter_map(|(&e, &k)| k.then_some(e))
            .collect();
        Ok(Graph::new(self.n, edges).expect("subgraph of a simple graph is simple"))
    }

    pub fn components(&self) -> ComponentProfile {
        let mut builder = ProfileBuilder::new(self.n);
        for &(u, v) in &self.edges {
            builder.add_edge(u, v);
        }
        builder.finish()
    }

    /// Two-colors the graph or returns an odd closed walk through a
    /// monochromatic edge.
    pub fn bipartition(&self) -> Bipartition {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartition::OddWalk(odd_walk(&parent, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Coloring(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Coloring(_))
    }
}

/// Walks both BFS-tree branches up to their meeting point and closes the
/// loop through the monochromatic edge `u`–`w`.
fn odd_walk(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut chain = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            chain.push(x);
        }
        chain
    };
    let mut up_u = ancestors(u);
    let mut up_w = ancestors(w);
    while up_u.len() > 1 && up_w.len() > 1 && up_u[up_u.len() - 2] == up_w[up_w.len() - 2] {
        up_u.pop();
        up_w.pop();
    }
    // both chains now end at the lowest common ancestor
    up_w.pop();
    up_w.reverse();
    up_u.extend(up_w);
    up_u
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        write!(f, "])")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// `coloring[v]` is the side of vertex `v`.
    Coloring(Vec<bool>),
    /// Closed walk `w[0], w[1], .., w[last], w[0]` of odd length.
    OddWalk(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    Tree,
    OddUnicyclic,
    EvenUnicyclic,
    MultiCyclic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Sorted vertex set.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    pub kind: ComponentKind,
    /// Whether the component contains an odd cycle.
    pub has_odd_cycle: bool,
}

impl Component {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

/// Connected components ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentProfile {
    pub components: Vec<Component>,
}

impl ComponentProfile {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn count(&self, kind: ComponentKind) -> usize {
        self.components.iter().filter(|c| c.kind == kind).count()
    }

    pub fn kinds(&self) -> impl Iterator<Item = ComponentKind> + '_ {
        self.components.iter().map(|c| c.kind)
    }

    /// Every component is a tree or odd-unicyclic.
    pub fn is_tu(&self) -> bool {
        self.kinds().all(|k| matches!(k, ComponentKind::Tree | ComponentKind::OddUnicyclic))
    }

    pub fn component_of(&self, v: usize) -> Option<&Component> {
        self.components.iter().find(|c| c.vertices.binary_search(&v).is_ok())
    }
}

/// Incremental union-find with edge parity. Tracks per-root vertex and edge
/// counts plus whether an odd cycle closed inside the root's set, which is
/// all a component classification needs.
#[derive(Debug, Clone)]
pub struct ProfileBuilder {
    parent: Vec<usize>,
    // parity of the path from a vertex to its parent
    parity: Vec<bool>,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    odd: Vec<bool>,
}

impl ProfileBuilder {
    pub fn new(n: usize) -> Self {
        ProfileBuilder {
            parent: (0..n).collect(),
            parity: vec![false; n],
            vertices: vec![1; n],
            edges: vec![0; n],
            odd: vec![false; n],
        }
    }

    pub fn reset(&mut self) {
        for (v, p) in self.parent.iter_mut().enumerate() {
            *p = v;
        }
        self.parity.fill(false);
        self.vertices.fill(1);
        self.edges.fill(0);
        self.odd.fill(false);
    }

    /// Returns the root of `v` and the parity of `v` relative to it.
    pub fn find(&mut self, v: usize) -> (usize, bool) {
        let p = self.parent[v];
        if p == v {
            return (v, false);
        }
        let (root, up) = self.find(p);
        self.parity[v] ^= up;
        self.parent[v] = root;
        (root, self.parity[v])
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            self.edges[ru] += 1;
            if pu == pv {
                self.odd[ru] = true;
            }
            return;
        }
        let (big, small) = if self.vertices[ru] >= self.vertices[rv] { (ru, rv) } else { (rv, ru) };
        self.parent[small] = big;
        self.parity[small] = !(pu ^ pv);
        self.vertices[big] += self.vertices[small];
        self.edges[big] += self.edges[small] + 1;
        self.odd[big] |= self.odd[small];
    }

    /// Kind of the component rooted at `root` (which must be a root).
    pub fn root_kind(&self, root: usize) -> ComponentKind {
        kind_of(self.vertices[root], self.edges[root], self.odd[root])
    }

    pub fn root_vertex_count(&self, root: usize) -> usize {
        self.vertices[root]
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v] == v
    }

    pub fn finish(mut self) -> ComponentProfile {
        let n = self.parent.len();
        let mut index_of_root = vec![usize::MAX; n];
        let mut components: Vec<Component> = Vec::new();
        for v in 0..n {
            let (root, _) = self.find(v);
            if index_of_root[root] == usize::MAX {
                index_of_root[root] = components.len();
                components.push(Component {
                    vertices: Vec::with_capacity(self.vertices[root]),
                    edge_count: self.edges[root],
                    kind: self.root_kind(root),
                    has_odd_cycle: self.odd[root],
                });
            }
            components[index_of_root[root]].vertices.push(v);
        }
        ComponentProfile { components }
    }
}

fn kind_of(vertices: usize, edges: usize, odd: bool) -> ComponentKind {
    match edges.cmp(&vertices) {
        std::cmp::Ordering::Less => ComponentKind::Tree,
        std::cmp::Ordering::Equal if odd => ComponentKind::OddUnicyclic,
        std::cmp::Ordering::Equal => ComponentKind::EvenUnicyclic,
        std::cmp::Ordering::Greater => ComponentKind::MultiCyclic,
    }
}
