//! Evaluates both sides of every minor, determinant and bound identity on a
//! graph and records the outcome as a [`VerificationReport`].
//!
//! Results that need a connected graph (the principal-minor expansion and
//! everything derived from it) are skipped with a reason on disconnected
//! input. The determinant expansion and the odd-cycle bounds run on any
//! graph.

use std::cell::OnceCell;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combin::Combinations;
use crate::cycles;
use crate::graph::Graph;
use crate::matrix::{incidence_matrix, signless_laplacian, IntMatrix, Select};
use crate::spectral;
use crate::subgraph::{self, predict_subdet, EnumError, SubgraphClass, TuCensus};

/// Frozen identifiers; reports and downstream diffs key on these strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    MinorFormula,
    DetFormula,
    Mtt,
    OcBound,
    OusBound,
    MinorVsTrees,
    EigenSum,
    BipartiteSpectra,
    SubdetClassification,
    Charpoly,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::MinorFormula,
        TheoremId::DetFormula,
        TheoremId::Mtt,
        TheoremId::OcBound,
        TheoremId::OusBound,
        TheoremId::MinorVsTrees,
        TheoremId::EigenSum,
        TheoremId::BipartiteSpectra,
        TheoremId::SubdetClassification,
        TheoremId::Charpoly,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::MinorFormula => "MINOR_FORMULA",
            TheoremId::DetFormula => "DET_FORMULA",
            TheoremId::Mtt => "MTT",
            TheoremId::OcBound => "OC_BOUND",
            TheoremId::OusBound => "OUS_BOUND",
            TheoremId::MinorVsTrees => "MINOR_VS_TREES",
            TheoremId::EigenSum => "EIGEN_SUM",
            TheoremId::BipartiteSpectra => "BIPARTITE_SPECTRA",
            TheoremId::SubdetClassification => "SUBDET_CLASSIFICATION",
            TheoremId::Charpoly => "CHARPOLY",
        }
    }

    /// Whether the result needs a connected graph on at least two vertices.
    pub fn needs_connected(self) -> bool {
        matches!(
            self,
            TheoremId::MinorFormula
                | TheoremId::Mtt
                | TheoremId::MinorVsTrees
                | TheoremId::EigenSum
                | TheoremId::SubdetClassification
        )
    }

    pub fn per_vertex(self) -> bool {
        matches!(self, TheoremId::MinorFormula | TheoremId::MinorVsTrees)
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(BigInt),
    Real(f64),
    Bool(bool),
    List(Vec<Value>),
}

impl Value {
    pub fn int(x: impl Into<BigInt>) -> Self {
        Value::Int(x.into())
    }

    pub fn ints<T: Into<BigInt>>(xs: impl IntoIterator<Item = T>) -> Self {
        Value::List(xs.into_iter().map(|x| Value::Int(x.into())).collect())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(x) => write!(f, "{x}"),
            Value::Real(x) => write!(f, "{}", round_significant(*x, 12)),
            Value::Bool(b) => write!(f, "{b}"),
            Value::List(xs) => {
                write!(f, "[")?;
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Rounds to `digits` significant decimal digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let text = format!("{:.*e}", digits - 1, x);
    let rounded: f64 = text.parse().expect("formatted float parses");
    if rounded == 0.0 { 0.0 } else { rounded }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equals,
    Geq,
    MemberOf,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Equals => "equals",
            Relation::Geq => "geq",
            Relation::MemberOf => "memberOf",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equals => "=",
            Relation::Geq => ">=",
            Relation::MemberOf => "in",
        }
    }
}

/// A two-sided equality characterization: equality in the relation must
/// hold exactly when the structural predicate does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityCase {
    pub predicate: &'static str,
    pub predicate_holds: bool,
    pub equality_holds: bool,
}

impl EqualityCase {
    pub fn consistent(&self) -> bool {
        self.predicate_holds == self.equality_holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub vertex: Option<usize>,
    pub edges: Option<Vec<usize>>,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Passed => "passed",
            Status::Failed => "failed",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationItem {
    pub theorem: TheoremId,
    pub vertex: Option<usize>,
    pub relation: Relation,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub status: Status,
    pub equality: Option<EqualityCase>,
    pub witness: Option<Witness>,
    pub skip_reason: Option<String>,
    /// Set when the skip came from the enumeration budget.
    pub budget_exceeded: bool,
    pub elapsed: Duration,
}

impl VerificationItem {
    #[allow(clippy::too_many_arguments)]
    fn evaluated(
        theorem: TheoremId,
        vertex: Option<usize>,
        relation: Relation,
        lhs: Value,
        rhs: Value,
        relation_holds: bool,
        equality: Option<EqualityCase>,
        witness: impl FnOnce() -> Witness,
    ) -> Self {
        let passed = relation_holds && equality.as_ref().is_none_or(EqualityCase::consistent);
        VerificationItem {
            theorem,
            vertex,
            relation,
            lhs: Some(lhs),
            rhs: Some(rhs),
            status: if passed { Status::Passed } else { Status::Failed },
            equality,
            witness: (!passed).then(witness),
            skip_reason: None,
            budget_exceeded: false,
            elapsed: Duration::ZERO,
        }
    }

    pub fn skipped(theorem: TheoremId, vertex: Option<usize>, reason: impl Into<String>) -> Self {
        VerificationItem {
            theorem,
            vertex,
            relation: Relation::Equals,
            lhs: None,
            rhs: None,
            status: Status::Skipped,
            equality: None,
            witness: None,
            skip_reason: Some(reason.into()),
            budget_exceeded: false,
            elapsed: Duration::ZERO,
        }
    }

    fn from_error(theorem: TheoremId, vertex: Option<usize>, err: &EnumError) -> Self {
        let reason = match err {
            EnumError::Disconnected => "requires connected graph".to_string(),
            EnumError::TooSmall { .. } => "requires at least 2 vertices".to_string(),
            other => other.to_string(),
        };
        let mut item = Self::skipped(theorem, vertex, reason);
        item.budget_exceeded = matches!(err, EnumError::BudgetExceeded { .. });
        item
    }

    pub fn passed(&self) -> Option<bool> {
        match self.status {
            Status::Passed => Some(true),
            Status::Failed => Some(false),
            Status::Skipped => None,
        }
    }

    /// Human-readable statement in matrix notation, vertices 1-indexed.
    pub fn statement(&self) -> String {
        let v = self.vertex.map_or(String::new(), |v| (v + 1).to_string());
        match self.theorem {
            TheoremId::MinorFormula => format!("det(Q({v})) = Σ4^c(H)"),
            TheoremId::DetFormula => "det(Q) = Σ4^c(H)".into(),
            TheoremId::Mtt => "t(G) = det(L(i)) = μ2···μn/n".into(),
            TheoremId::OcBound => "det(Q) >= 4·oc(G)".into(),
            TheoremId::OusBound => "det(Q) >= 4·ous(G)".into(),
            TheoremId::MinorVsTrees => format!("det(Q({v})) >= t(G)"),
            TheoremId::EigenSum => "Σdet(Q(i)) >= n·t(G)".into(),
            TheoremId::BipartiteSpectra => "spec(L) = spec(Q) iff bipartite".into(),
            TheoremId::SubdetClassification => "det(N(i;S]), det(N[S]) in {0, ±2^c}".into(),
            TheoremId::Charpoly => "(a1, a2, an) = (-2m, 2m²-m-½Σd², (-1)^n det(Q))".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub odd_cycles: u64,
    /// `None` when the enumeration exceeds the budget.
    pub ous: Option<u64>,
    pub spanning_trees: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub name: Option<String>,
    pub summary: GraphSummary,
    pub items: Vec<VerificationItem>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationItem> {
        self.items.iter().filter(|i| i.status == Status::Failed)
    }

    pub fn budget_exceeded(&self) -> bool {
        self.items.iter().any(|i| i.budget_exceeded)
    }

    pub fn item(&self, theorem: TheoremId, vertex: Option<usize>) -> Option<&VerificationItem> {
        self.items.iter().find(|i| i.theorem == theorem && i.vertex == vertex)
    }
}

/// Quantities shared between items, computed on first use.
struct Context<'g> {
    g: &'g Graph,
    q: OnceCell<IntMatrix>,
    det_q: OnceCell<BigInt>,
    minors: OnceCell<Vec<BigInt>>,
    minor_censuses: OnceCell<Result<Vec<TuCensus>, EnumError>>,
    det_census: OnceCell<Result<TuCensus, EnumError>>,
    trees: OnceCell<Result<u64, EnumError>>,
    odd_cycles: OnceCell<u64>,
}

impl<'g> Context<'g> {
    fn new(g: &'g Graph) -> Self {
        Context {
            g,
            q: OnceCell::new(),
            det_q: OnceCell::new(),
            minors: OnceCell::new(),
            minor_censuses: OnceCell::new(),
            det_census: OnceCell::new(),
            trees: OnceCell::new(),
            odd_cycles: OnceCell::new(),
        }
    }

    fn q(&self) -> &IntMatrix {
        self.q.get_or_init(|| signless_laplacian(self.g))
    }

    fn det_q(&self) -> &BigInt {
        self.det_q.get_or_init(|| self.q().det().expect("Q is square"))
    }

    fn minors(&self) -> &[BigInt] {
        self.minors.get_or_init(|| {
            (0..self.g.vertex_count())
                .map(|i| self.q().principal_deleted(i).unwrap().det().unwrap())
                .collect()
        })
    }

    fn minor_censuses(&self) -> Result<&[TuCensus], EnumError> {
        self.minor_censuses
            .get_or_init(|| subgraph::enumerate_minor_censuses(self.g))
            .as_deref()
            .map_err(Clone::clone)
    }

    fn det_census(&self) -> Result<&TuCensus, EnumError> {
        self.det_census.get_or_init(|| subgraph::enumerate_det_census(self.g)).as_ref().map_err(Clone::clone)
    }

    fn trees(&self) -> Result<u64, EnumError> {
        self.trees.get_or_init(|| subgraph::count_spanning_trees_enum(self.g)).clone()
    }

    fn odd_cycles(&self) -> u64 {
        *self.odd_cycles.get_or_init(|| cycles::count_odd_cycles(self.g))
    }

    fn require_connected(&self) -> Result<(), EnumError> {
        if self.g.vertex_count() < 2 {
            return Err(EnumError::TooSmall { n: self.g.vertex_count() });
        }
        if !self.g.is_connected() {
            return Err(EnumError::Disconnected);
        }
        Ok(())
    }

    fn require_vertex(&self, i: usize) -> Result<(), EnumError> {
        let n = self.g.vertex_count();
        if i >= n {
            return Err(EnumError::VertexOutOfRange { vertex: i, n });
        }
        Ok(())
    }

    fn minor_formula(&self, i: usize) -> Result<VerificationItem, EnumError> {
        self.require_vertex(i)?;
        self.require_connected()?;
        let lhs = self.minors()[i].clone();
        let rhs = self.minor_censuses()?[i].weighted_sum();
        let holds = lhs == rhs;
        Ok(VerificationItem::evaluated(
            TheoremId::MinorFormula,
            Some(i),
            Relation::Equals,
            Value::Int(lhs),
            Value::Int(rhs),
            holds,
            None,
            || Witness { vertex: Some(i), ..Witness::default() },
        ))
    }

    fn det_formula(&self) -> Result<VerificationItem, EnumError> {
        let lhs = self.det_q().clone();
        let rhs = self.det_census()?.weighted_sum();
        let holds = lhs == rhs;
        Ok(VerificationItem::evaluated(
            TheoremId::DetFormula,
            None,
            Relation::Equals,
            Value::Int(lhs),
            Value::Int(rhs),
            holds,
            None,
            || Witness { note: "census weighted sum differs from det(Q)".into(), ..Witness::default() },
        ))
    }

    fn minor_vs_trees(&self, i: usize) -> Result<VerificationItem, EnumError> {
        self.require_vertex(i)?;
        self.require_connected()?;
        let lhs = self.minors()[i].clone();
        let t = BigInt::from(self.trees()?);
        let equality = EqualityCase {
            predicate: "every odd cycle contains the vertex",
            predicate_holds: cycles::all_odd_cycles_contain(self.g, i),
            equality_holds: lhs == t,
        };
        let holds = lhs >= t;
        Ok(VerificationItem::evaluated(
            TheoremId::MinorVsTrees,
            Some(i),
            Relation::Geq,
            Value::Int(lhs),
            Value::Int(t),
            holds,
            Some(equality),
            || Witness { vertex: Some(i), ..Witness::default() },
        ))
    }

    fn eigen_sum(&self) -> Result<VerificationItem, EnumError> {
        self.require_connected()?;
        let sum: BigInt = self.minors().iter().sum();
        let n_t = BigInt::from(self.g.vertex_count()) * BigInt::from(self.trees()?);
        let equality = EqualityCase {
            predicate: "graph is an odd cycle or bipartite",
            predicate_holds: is_odd_cycle(self.g) || self.g.is_bipartite(),
            equality_holds: sum == n_t,
        };
        let holds = sum >= n_t;
        Ok(VerificationItem::evaluated(
            TheoremId::EigenSum,
            None,
            Relation::Geq,
            Value::Int(sum),
            Value::Int(n_t),
            holds,
            Some(equality),
            Witness::default,
        ))
    }

    fn oc_bound(&self) -> VerificationItem {
        let lhs = self.det_q().clone();
        let rhs = BigInt::from(4) * BigInt::from(self.odd_cycles());
        let equality = EqualityCase {
            predicate: "graph is bipartite or odd-unicyclic",
            predicate_holds: self.g.is_bipartite() || is_odd_unicyclic(self.g),
            equality_holds: lhs == rhs,
        };
        let holds = lhs >= rhs;
        VerificationItem::evaluated(
            TheoremId::OcBound,
            None,
            Relation::Geq,
            Value::Int(lhs),
            Value::Int(rhs),
            holds,
            Some(equality),
            || Witness {
                note: if holds {
                    "equality case disagrees with the structural predicate".into()
                } else {
                    "det(Q) is smaller than 4·oc(G)".into()
                },
                ..Witness::default()
            },
        )
    }

    fn ous_bound(&self) -> Result<VerificationItem, EnumError> {
        let lhs = self.det_q().clone();
        let rhs = BigInt::from(4) * BigInt::from(self.det_census()?.total());
        let holds = lhs >= rhs;
        Ok(VerificationItem::evaluated(
            TheoremId::OusBound,
            None,
            Relation::Geq,
            Value::Int(lhs),
            Value::Int(rhs),
            holds,
            None,
            Witness::default,
        ))
    }

    fn mtt(&self) -> Result<VerificationItem, EnumError> {
        self.require_connected()?;
        let t = self.trees()?;
        let l = crate::matrix::laplacian(self.g);
        let mut rhs: Vec<Value> =
            (0..self.g.vertex_count()).map(|i| Value::Int(l.principal_deleted(i).unwrap().det().unwrap())).collect();
        let spectrum = spectral::laplacian_spectrum(self.g);
        let eigen = spectrum.values.iter().skip(1).product::<f64>() / self.g.vertex_count() as f64;
        let exact = BigInt::from(t);
        let holds = rhs.iter().all(|v| *v == Value::Int(exact.clone()))
            && spectral::relative_close(eigen, t as f64);
        rhs.push(Value::Real(eigen));
        Ok(VerificationItem::evaluated(
            TheoremId::Mtt,
            None,
            Relation::Equals,
            Value::Int(exact),
            Value::List(rhs),
            holds,
            None,
            Witness::default,
        ))
    }

    fn bipartite_spectra(&self) -> VerificationItem {
        let check = spectral::bipartite_spectral_check(self.g);
        VerificationItem::evaluated(
            TheoremId::BipartiteSpectra,
            None,
            Relation::Equals,
            Value::Bool(check.spectra_equal),
            Value::Bool(check.bipartite),
            check.holds(),
            None,
            || Witness {
                note: format!("spec(L) = {:?}, spec(Q) = {:?}", check.laplacian.values, check.signless.values),
                ..Witness::default()
            },
        )
    }

    fn charpoly(&self) -> VerificationItem {
        let check = spectral::charpoly_check(self.g);
        VerificationItem::evaluated(
            TheoremId::Charpoly,
            None,
            Relation::Equals,
            Value::ints(check.observed.iter().cloned()),
            Value::ints(check.expected.iter().cloned()),
            check.holds(),
            None,
            Witness::default,
        )
    }

    fn subdet_classification(&self) -> Result<VerificationItem, EnumError> {
        self.require_connected()?;
        let g = self.g;
        let n = g.vertex_count();
        let m = g.edge_count();
        subgraph::check_budget(m, n - 1)?;
        subgraph::check_budget(m, n)?;
        let incidence = incidence_matrix(g);
        let mut observed = std::collections::BTreeSet::new();
        let mut predicted = std::collections::BTreeSet::new();
        for k in [n - 1, n] {
            let mut subsets = Combinations::new(m, k);
            while let Some(s) = subsets.next_subset() {
                let h = g.spanning_subgraph(s)?;
                let class = SubgraphClass::of(&h)?;
                let vertices: Vec<Option<usize>> = if k == n { vec![None] } else { (0..n).map(Some).collect() };
                for vertex in vertices {
                    let rows: Vec<usize> = vertex.into_iter().collect();
                    let det = incidence
                        .submatrix(Select::Delete(&rows), Select::Keep(s))
                        .and_then(|sub| sub.det())
                        .expect("square by construction");
                    let prediction = predict_subdet(&class, vertex);
                    if !prediction.contains(&det) {
                        let set: Vec<BigInt> = prediction.values.into_iter().collect();
                        return Ok(VerificationItem::evaluated(
                            TheoremId::SubdetClassification,
                            None,
                            Relation::MemberOf,
                            Value::Int(det),
                            Value::ints(set),
                            false,
                            None,
                            || Witness { vertex, edges: Some(s.to_vec()), note: format!("class {class:?}") },
                        ));
                    }
                    observed.insert(det);
                    predicted.extend(prediction.values);
                }
            }
        }
        Ok(VerificationItem::evaluated(
            TheoremId::SubdetClassification,
            None,
            Relation::MemberOf,
            Value::ints(observed),
            Value::ints(predicted),
            true,
            None,
            Witness::default,
        ))
    }

    fn run(&self, theorem: TheoremId, vertex: Option<usize>) -> VerificationItem {
        let start = Instant::now();
        let result = match (theorem, vertex) {
            (TheoremId::MinorFormula, Some(i)) => self.minor_formula(i),
            (TheoremId::MinorVsTrees, Some(i)) => self.minor_vs_trees(i),
            (TheoremId::DetFormula, _) => self.det_formula(),
            (TheoremId::Mtt, _) => self.mtt(),
            (TheoremId::OcBound, _) => Ok(self.oc_bound()),
            (TheoremId::OusBound, _) => self.ous_bound(),
            (TheoremId::EigenSum, _) => self.eigen_sum(),
            (TheoremId::BipartiteSpectra, _) => Ok(self.bipartite_spectra()),
            (TheoremId::SubdetClassification, _) => self.subdet_classification(),
            (TheoremId::Charpoly, _) => Ok(self.charpoly()),
            (t, None) => unreachable!("{t} is evaluated per vertex"),
        };
        let mut item = result.unwrap_or_else(|e| VerificationItem::from_error(theorem, vertex, &e));
        item.elapsed = start.elapsed();
        item
    }
}

/// A connected graph with exactly one cycle, of odd length.
pub fn is_odd_unicyclic(g: &Graph) -> bool {
    g.vertex_count() == g.edge_count() && g.is_connected() && !g.is_bipartite()
}

/// The cycle graph on an odd number of vertices.
pub fn is_odd_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 3 && n % 2 == 1 && g.edge_count() == n && g.is_connected() && (0..n).all(|v| g.degree(v) == 2)
}

pub fn verify_minor_formula(g: &Graph, i: usize) -> Result<VerificationItem, EnumError> {
    Context::new(g).minor_formula(i)
}

pub fn verify_det_formula(g: &Graph) -> Result<VerificationItem, EnumError> {
    Context::new(g).det_formula()
}

pub fn verify_minor_vs_trees(g: &Graph, i: usize) -> Result<VerificationItem, EnumError> {
    Context::new(g).minor_vs_trees(i)
}

pub fn verify_eigen_sum(g: &Graph) -> Result<VerificationItem, EnumError> {
    Context::new(g).eigen_sum()
}

pub fn verify_oc_bound(g: &Graph) -> VerificationItem {
    Context::new(g).oc_bound()
}

pub fn verify_ous_bound(g: &Graph) -> Result<VerificationItem, EnumError> {
    Context::new(g).ous_bound()
}

pub fn verify_subdet_classification(g: &Graph) -> Result<VerificationItem, EnumError> {
    Context::new(g).subdet_classification()
}

pub fn verify_mtt(g: &Graph) -> Result<VerificationItem, EnumError> {
    Context::new(g).mtt()
}

pub fn verify_bipartite_spectra(g: &Graph) -> VerificationItem {
    Context::new(g).bipartite_spectra()
}

pub fn verify_charpoly(g: &Graph) -> VerificationItem {
    Context::new(g).charpoly()
}

pub fn verify_all(g: &Graph) -> VerificationReport {
    verify_selected(g, &TheoremId::ALL)
}

/// Runs the listed theorems, in the canonical order of [`TheoremId::ALL`].
/// Per-vertex theorems produce one item per vertex.
pub fn verify_selected(g: &Graph, only: &[TheoremId]) -> VerificationReport {
    let ctx = Context::new(g);
    let mut items = Vec::new();
    for theorem in TheoremId::ALL.into_iter().filter(|t| only.contains(t)) {
        if theorem.per_vertex() {
            if g.vertex_count() < 2 || !g.is_connected() {
                let err = if g.vertex_count() < 2 {
                    EnumError::TooSmall { n: g.vertex_count() }
                } else {
                    EnumError::Disconnected
                };
                items.push(VerificationItem::from_error(theorem, None, &err));
                continue;
            }
            for i in 0..g.vertex_count() {
                items.push(ctx.run(theorem, Some(i)));
            }
        } else {
            items.push(ctx.run(theorem, None));
        }
    }
    let summary = GraphSummary {
        n: g.vertex_count(),
        m: g.edge_count(),
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        odd_cycles: ctx.odd_cycles(),
        ous: ctx.det_census().ok().map(TuCensus::total),
        spanning_trees: ctx.trees().ok(),
    };
    VerificationReport { name: None, summary, items }
}

/// `det(Q(i))` for every vertex, exactly.
pub fn principal_minors(g: &Graph) -> Vec<BigInt> {
    Context::new(g).minors().to_vec()
}

pub fn det_signless(g: &Graph) -> BigInt {
    let d = Context::new(g).det_q().clone();
    debug_assert!(d >= BigInt::zero());
    d
}
