//! Edge-subset enumeration, classification of spanning subgraphs with
//! `n - 1` or `n` edges, and the TU-subgraph censuses behind the minor and
//! determinant expansions of the signless Laplacian.
//!
//! A TU-graph is one whose components are all trees or odd-unicyclic. With
//! `n - 1` edges such a graph has exactly one tree; with `n` edges it has
//! none. The weight of a TU-subgraph is `4^c` where `c` counts its
//! odd-unicyclic components.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combin::{binomial, Combinations};
use crate::cycles;
use crate::graph::{ComponentKind, Graph, GraphError, ProfileBuilder};
use crate::matrix::{incidence_matrix, Select};

/// Largest number of edge subsets a single enumeration may visit.
pub const SUBSET_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, need at least 2")]
    TooSmall { n: usize },
    #[error("vertex {} is outside 1..={n}", .vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("subgraph has {found} edges, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("edge subset repeats edge {}", .index + 1)]
    RepeatedEdge { index: usize },
    #[error("C({m}, {k}) = {count} edge subsets exceeds the budget of {SUBSET_BUDGET}")]
    BudgetExceeded { m: usize, k: usize, count: u128 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Refuses enumerations of more than [`SUBSET_BUDGET`] `k`-subsets of `m` edges.
pub fn check_budget(m: usize, k: usize) -> Result<u128, EnumError> {
    let count = binomial(m as u64, k as u64);
    if count > SUBSET_BUDGET {
        Err(EnumError::BudgetExceeded { m, k, count })
    } else {
        Ok(count)
    }
}

/// Cases for a spanning subgraph with `n - 1` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NMinusOneClass {
    Tree,
    EvenCyclePlusOutsideVertex,
    OddMultiCyclicPlusTrees,
    /// Odd-unicyclic components plus exactly one tree, whose (sorted)
    /// vertex set is kept.
    Tu { odd_unicyclic: usize, tree_vertices: Vec<usize> },
}

/// Cases for a spanning subgraph with `n` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NClass {
    HasTreeComponent,
    UnicyclicWithEven,
    AllOddUnicyclic(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgraphClass {
    NMinusOne(NMinusOneClass),
    N(NClass),
}

impl SubgraphClass {
    pub fn of(h: &Graph) -> Result<Self, EnumError> {
        if h.edge_count() == h.vertex_count() {
            classify_n(h).map(SubgraphClass::N)
        } else {
            classify_nminus1(h).map(SubgraphClass::NMinusOne)
        }
    }
}

pub fn classify_nminus1(h: &Graph) -> Result<NMinusOneClass, EnumError> {
    let n = h.vertex_count();
    if h.edge_count() + 1 != n {
        return Err(EnumError::ArityMismatch { expected: n.saturating_sub(1), found: h.edge_count() });
    }
    let profile = h.components();
    if profile.len() == 1 {
        return Ok(NMinusOneClass::Tree);
    }
    let cyclic_beyond_odd = profile
        .kinds()
        .any(|k| matches!(k, ComponentKind::EvenUnicyclic | ComponentKind::MultiCyclic));
    if cyclic_beyond_odd {
        return Ok(if cycles::has_even_cycle(h) {
            NMinusOneClass::EvenCyclePlusOutsideVertex
        } else {
            NMinusOneClass::OddMultiCyclicPlusTrees
        });
    }
    let mut trees = profile.components.iter().filter(|c| c.kind == ComponentKind::Tree);
    let tree = trees.next().expect("n - 1 edges force a tree component");
    debug_assert!(trees.next().is_none());
    Ok(NMinusOneClass::Tu {
        odd_unicyclic: profile.count(ComponentKind::OddUnicyclic),
        tree_vertices: tree.vertices.clone(),
    })
}

pub fn classify_n(h: &Graph) -> Result<NClass, EnumError> {
    let n = h.vertex_count();
    if h.edge_count() != n {
        return Err(EnumError::ArityMismatch { expected: n, found: h.edge_count() });
    }
    let profile = h.components();
    Ok(if profile.count(ComponentKind::Tree) > 0 {
        NClass::HasTreeComponent
    } else if profile.count(ComponentKind::EvenUnicyclic) > 0 {
        NClass::UnicyclicWithEven
    } else {
        // no trees and m = n leave only unicyclic components
        NClass::AllOddUnicyclic(profile.len())
    })
}

/// Counts of qualifying TU-subgraphs keyed by their number of
/// odd-unicyclic components.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TuCensus {
    pub by_components: BTreeMap<usize, u64>,
}

impl TuCensus {
    pub fn record(&mut self, c: usize) {
        *self.by_components.entry(c).or_default() += 1;
    }

    pub fn merge(&mut self, other: &TuCensus) {
        for (&c, &count) in &other.by_components {
            *self.by_components.entry(c).or_default() += count;
        }
    }

    pub fn count(&self, c: usize) -> u64 {
        self.by_components.get(&c).copied().unwrap_or(0)
    }

    /// Number of qualifying subgraphs regardless of weight.
    pub fn total(&self) -> u64 {
        self.by_components.values().sum()
    }

    /// `Σ count(c) · 4^c`.
    pub fn weighted_sum(&self) -> BigInt {
        self.by_components
            .iter()
            .map(|(&c, &count)| BigInt::from(count) * (BigInt::one() << (2 * c)))
            .sum()
    }
}

/// Calls `f` with the component builder of every `k`-edge spanning
/// subgraph, in lexicographic order of edge indices.
fn for_each_subset_profile(g: &Graph, k: usize, mut f: impl FnMut(&[usize], &mut ProfileBuilder)) {
    let edges = g.edges();
    let mut builder = ProfileBuilder::new(g.vertex_count());
    let mut subsets = Combinations::new(edges.len(), k);
    while let Some(s) = subsets.next_subset() {
        builder.reset();
        for &e in s {
            let (u, v) = edges[e];
            builder.add_edge(u, v);
        }
        f(s, &mut builder);
    }
}

fn require_connected_pair(g: &Graph) -> Result<(), EnumError> {
    if g.vertex_count() < 2 {
        return Err(EnumError::TooSmall { n: g.vertex_count() });
    }
    if !g.is_connected() {
        return Err(EnumError::Disconnected);
    }
    Ok(())
}

/// Minor censuses for every vertex at once: entry `i` holds the TU-subgraphs
/// with `n - 1` edges whose unique tree contains vertex `i`.
pub fn enumerate_minor_censuses(g: &Graph) -> Result<Vec<TuCensus>, EnumError> {
    require_connected_pair(g)?;
    let n = g.vertex_count();
    check_budget(g.edge_count(), n - 1)?;
    let mut censuses = vec![TuCensus::default(); n];
    let mut roots = Vec::with_capacity(n);
    for_each_subset_profile(g, n - 1, |_, b| {
        roots.clear();
        roots.extend((0..n).filter(|&v| b.is_root(v)));
        let mut tree_root = None;
        let mut odd = 0;
        for &r in &roots {
            match b.root_kind(r) {
                ComponentKind::Tree => tree_root = Some(r),
                ComponentKind::OddUnicyclic => odd += 1,
                _ => return,
            }
        }
        let tree_root = tree_root.expect("TU-graph with n - 1 edges has a tree");
        for (v, census) in censuses.iter_mut().enumerate() {
            if b.find(v).0 == tree_root {
                census.record(odd);
            }
        }
    });
    Ok(censuses)
}

/// TU-subgraphs with `n - 1` edges whose unique tree contains `vertex`.
/// The weighted sum equals `det(Q(vertex))`.
pub fn enumerate_minor_census(g: &Graph, vertex: usize) -> Result<TuCensus, EnumError> {
    let n = g.vertex_count();
    if vertex >= n {
        return Err(EnumError::VertexOutOfRange { vertex, n });
    }
    require_connected_pair(g)?;
    check_budget(g.edge_count(), n - 1)?;
    let mut census = TuCensus::default();
    for_each_subset_profile(g, n - 1, |_, b| {
        let tu = (0..n).filter(|&v| b.is_root(v)).all(|r| {
            matches!(b.root_kind(r), ComponentKind::Tree | ComponentKind::OddUnicyclic)
        });
        if !tu {
            return;
        }
        let (root, _) = b.find(vertex);
        if b.root_kind(root) == ComponentKind::Tree {
            let odd = (0..n)
                .filter(|&v| b.is_root(v) && b.root_kind(v) == ComponentKind::OddUnicyclic)
                .count();
            census.record(odd);
        }
    });
    Ok(census)
}

/// Spanning subgraphs with `n` edges whose components are all
/// odd-unicyclic, keyed by component count. The weighted sum equals
/// `det(Q)`. Empty when `m < n`.
pub fn enumerate_det_census(g: &Graph) -> Result<TuCensus, EnumError> {
    let n = g.vertex_count();
    check_budget(g.edge_count(), n)?;
    let mut census = TuCensus::default();
    for_each_subset_profile(g, n, |_, b| {
        let mut components = 0;
        for r in 0..n {
            if b.is_root(r) {
                if b.root_kind(r) != ComponentKind::OddUnicyclic {
                    return;
                }
                components += 1;
            }
        }
        census.record(components);
    });
    Ok(census)
}

/// Number of spanning subgraphs whose every component is odd-unicyclic.
pub fn count_ous(g: &Graph) -> Result<u64, EnumError> {
    Ok(enumerate_det_census(g)?.total())
}

/// Spanning trees counted by brute force over `(n - 1)`-edge subsets.
pub fn count_spanning_trees_enum(g: &Graph) -> Result<u64, EnumError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    check_budget(g.edge_count(), n - 1)?;
    let mut trees = 0;
    for_each_subset_profile(g, n - 1, |_, b| {
        let (root, _) = b.find(0);
        if b.root_vertex_count(root) == n {
            trees += 1;
        }
    });
    Ok(trees)
}

/// Determinant values a classification allows for an incidence submatrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub values: BTreeSet<BigInt>,
}

impl Prediction {
    fn zero() -> Self {
        Prediction { values: BTreeSet::from([BigInt::zero()]) }
    }

    fn plus_minus_pow2(exp: usize) -> Self {
        let p = BigInt::one() << exp;
        Prediction { values: BTreeSet::from([-p.clone(), p]) }
    }

    pub fn contains(&self, value: &BigInt) -> bool {
        self.values.contains(value)
    }
}

/// Predicts `det(N(i;S])` (with `vertex = Some(i)`, `|S| = n - 1`) or
/// `det(N[S])` (with `vertex = None`, `|S| = n`) from the classification of
/// the spanning subgraph `H` on `S`.
pub fn predict_subdet(h_class: &SubgraphClass, vertex: Option<usize>) -> Prediction {
    match (h_class, vertex) {
        (SubgraphClass::NMinusOne(NMinusOneClass::Tree), _) => Prediction::plus_minus_pow2(0),
        (SubgraphClass::NMinusOne(NMinusOneClass::Tu { odd_unicyclic, tree_vertices }), Some(i))
            if tree_vertices.binary_search(&i).is_ok() =>
        {
            Prediction::plus_minus_pow2(*odd_unicyclic)
        }
        (SubgraphClass::N(NClass::AllOddUnicyclic(k)), _) => Prediction::plus_minus_pow2(*k),
        _ => Prediction::zero(),
    }
}

/// The exact incidence subdeterminant for `(vertex, subset)` together with
/// the set of values its classification predicts.
pub fn incidence_subdet_classified(
    g: &Graph,
    vertex: Option<usize>,
    subset: &[usize],
) -> Result<(BigInt, Prediction), EnumError> {
    let n = g.vertex_count();
    let expected = if vertex.is_some() { n.saturating_sub(1) } else { n };
    if subset.len() != expected {
        return Err(EnumError::ArityMismatch { expected, found: subset.len() });
    }
    if let Some(i) = vertex {
        if i >= n {
            return Err(EnumError::VertexOutOfRange { vertex: i, n });
        }
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(EnumError::RepeatedEdge { index: w[0] });
    }
    let h = g.spanning_subgraph(&sorted)?;
    let class = SubgraphClass::of(&h)?;
    let rows: Vec<usize> = vertex.into_iter().collect();
    let det = incidence_matrix(g)
        .submatrix(Select::Delete(&rows), Select::Keep(&sorted))
        .and_then(|m| m.det())
        .expect("square by construction");
    Ok((det, predict_subdet(&class, vertex)))
}
