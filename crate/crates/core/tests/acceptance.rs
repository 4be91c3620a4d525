//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero unless the failing set is exactly the documented one.

use std::collections::BTreeMap;
use std::fs;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use signless::catalog::all_graphs;
use signless::cycles::{all_odd_cycles_contain, count_odd_cycles};
use signless::io::{parse_edgelist, parse_graph6, write_edgelist, write_graph6};
use signless::matrix::{incidence_matrix, laplacian, signless_laplacian, IntMatrix};
use signless::spectral::{
    bipartite_spectral_check, charpoly_check, laplacian_spectrum, relative_close, smallest_signless_eigenvalue,
    DEFAULT_TOLERANCE,
};
use signless::subgraph::{
    count_ous, count_spanning_trees_enum, enumerate_det_census, enumerate_minor_census, enumerate_minor_censuses,
};
use signless::verify::{det_signless, is_odd_cycle, is_odd_unicyclic, principal_minors, verify_subdet_classification};
use signless::{Graph, TheoremId};

/// Criteria that cannot pass as stated; see the decisions ledger.
const KNOWN_UNATTAINABLE: &[u32] = &[7];

fn catalog() -> &'static BTreeMap<usize, Vec<Graph>> {
    static CATALOG: OnceLock<BTreeMap<usize, Vec<Graph>>> = OnceLock::new();
    CATALOG.get_or_init(|| (1..=7).map(|n| (n, all_graphs(n))).collect())
}

fn graphs_up_to(n: usize) -> impl Iterator<Item = &'static Graph> {
    catalog().range(..=n).flat_map(|(_, gs)| gs.iter())
}

fn connected_up_to(n: usize) -> impl Iterator<Item = &'static Graph> {
    graphs_up_to(n).filter(|g| g.is_connected())
}

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    sub: Vec<(String, bool, String)>,
}

impl Outcome {
    fn new(id: u32, title: &'static str) -> Self {
        Outcome { id, title, pass: true, sub: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.sub.push((label.into(), pass, detail.into()));
    }

    fn print(&self) {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        println!("[{mark}] criterion {:>2}: {}", self.id, self.title);
        for (label, pass, detail) in &self.sub {
            println!("         [{}] {label}: {detail}", if *pass { "PASS" } else { "FAIL" });
        }
    }
}

mod oracle {
    use std::collections::BTreeMap;

    use signless::Graph;

    /// Leibniz expansion over i128.
    pub fn det(m: &[Vec<i128>]) -> i128 {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0;
        permute(&mut perm, 0, &mut |p| {
            let inversions = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
            let term: i128 = (0..n).map(|r| m[r][p[r]]).product();
            total += if inversions % 2 == 0 { term } else { -term };
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    pub fn q(g: &Graph) -> Vec<Vec<i128>> {
        let n = g.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for &(u, v) in g.edges() {
            m[u][u] += 1;
            m[v][v] += 1;
            m[u][v] += 1;
            m[v][u] += 1;
        }
        m
    }

    pub fn minor(m: &[Vec<i128>], i: usize) -> Vec<Vec<i128>> {
        m.iter()
            .enumerate()
            .filter(|&(r, _)| r != i)
            .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &x)| x).collect())
            .collect()
    }

    /// (vertices, edges, has odd cycle) per component of the spanning subgraph on `edges`.
    fn components(n: usize, edges: &[(usize, usize)]) -> Vec<(Vec<usize>, usize, bool)> {
        let mut color = vec![None::<(usize, bool)>; n];
        let mut out = Vec::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            let id = out.len();
            color[s] = Some((id, false));
            let mut stack = vec![s];
            let mut verts = vec![s];
            let mut odd = false;
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap().1;
                for &(a, b) in edges {
                    let w = if a == u { b } else if b == u { a } else { continue };
                    match color[w] {
                        None => {
                            color[w] = Some((id, !cu));
                            verts.push(w);
                            stack.push(w);
                        }
                        Some((_, cw)) => odd |= cw == cu,
                    }
                }
            }
            out.push((verts, 0, odd));
        }
        for &(a, _) in edges {
            out[color[a].unwrap().0].1 += 1;
        }
        out
    }

    fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
        (0u64..1 << m).filter(|x| x.count_ones() as usize == k).map(|x| (0..m).filter(|i| x >> i & 1 == 1).collect()).collect()
    }

    /// `c(H)` histogram over (n-1)-edge TU-subgraphs whose tree holds `i`.
    pub fn minor_census(g: &Graph, i: usize) -> BTreeMap<usize, u64> {
        let n = g.vertex_count();
        let mut census = BTreeMap::new();
        for s in subsets(g.edge_count(), n - 1) {
            let edges: Vec<_> = s.iter().map(|&e| g.edges()[e]).collect();
            let comps = components(n, &edges);
            let trees: Vec<_> = comps.iter().filter(|c| c.1 + 1 == c.0.len()).collect();
            let tu = comps.iter().all(|c| c.1 + 1 == c.0.len() || (c.1 == c.0.len() && c.2));
            if tu && trees.len() == 1 && trees[0].0.contains(&i) {
                *census.entry(comps.len() - 1).or_insert(0) += 1;
            }
        }
        census
    }

    /// `c(H)` histogram over n-edge spanning subgraphs with only odd-unicyclic components.
    pub fn det_census(g: &Graph) -> BTreeMap<usize, u64> {
        let n = g.vertex_count();
        let mut census = BTreeMap::new();
        for s in subsets(g.edge_count(), n) {
            let edges: Vec<_> = s.iter().map(|&e| g.edges()[e]).collect();
            let comps = components(n, &edges);
            if comps.iter().all(|c| c.1 == c.0.len() && c.2) {
                *census.entry(comps.len()).or_insert(0) += 1;
            }
        }
        census
    }

    pub fn spanning_trees(g: &Graph) -> u64 {
        let n = g.vertex_count();
        subsets(g.edge_count(), n - 1)
            .into_iter()
            .filter(|s| {
                let edges: Vec<_> = s.iter().map(|&e| g.edges()[e]).collect();
                components(n, &edges).len() == 1
            })
            .count() as u64
    }

    /// Closed walks without repeated vertices, each cycle counted once.
    pub fn odd_cycles(g: &Graph) -> u64 {
        fn extend(g: &Graph, path: &mut Vec<usize>, count: &mut u64) {
            let (start, last) = (path[0], *path.last().unwrap());
            if path.len() >= 3 && path.len() % 2 == 1 && g.has_edge(last, start) {
                *count += 1;
            }
            for w in 0..g.vertex_count() {
                if w > start && !path.contains(&w) && g.has_edge(last, w) {
                    path.push(w);
                    extend(g, path, count);
                    path.pop();
                }
            }
        }
        let mut count = 0;
        for s in 0..g.vertex_count() {
            extend(g, &mut vec![s], &mut count);
        }
        // each cycle is found once per direction
        count / 2
    }

    /// graph6 bits read as a 0/1 string, then paired off column by column.
    pub fn decode_graph6(s: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes = s.as_bytes();
        let n = (bytes[0] - 63) as usize;
        let bits: String = bytes[1..].iter().map(|b| format!("{:06b}", b - 63)).collect();
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
        let edges = pairs.zip(bits.chars()).filter(|(_, c)| *c == '1').map(|(p, _)| p).collect();
        (n, edges)
    }
}

fn bigint(x: i128) -> BigInt {
    BigInt::from(x)
}

fn pow4_sum(census: &BTreeMap<usize, u64>) -> BigInt {
    census.iter().map(|(&c, &k)| BigInt::from(k) * (BigInt::from(1) << (2 * c))).sum()
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new(1, "paw principal minors");
    let paw = Graph::paw();
    let start = Instant::now();
    let minors = principal_minors(&paw);
    let elapsed = start.elapsed();
    let expected: Vec<BigInt> = [7, 3, 3, 3].into_iter().map(BigInt::from).collect();
    o.check("det(Q(i)) = 7, 3, 3, 3", minors == expected, format!("{minors:?}"));
    o.check("runtime < 1 ms", elapsed < Duration::from_millis(1), format!("{elapsed:?}"));
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new(2, "paw census at vertex 1");
    let census = enumerate_minor_census(&Graph::paw(), 0).unwrap();
    let expected: BTreeMap<usize, u64> = [(0, 3), (1, 1)].into();
    o.check(
        "c-values {0,0,0,1}, weighted sum 7",
        census.by_components == expected && census.total() == 4 && census.weighted_sum() == BigInt::from(7),
        format!("{:?} sum {}", census.by_components, census.weighted_sum()),
    );
    let brute = oracle::minor_census(&Graph::paw(), 0);
    o.check("brute-force census agrees", brute == expected, format!("{brute:?}"));
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new(3, "minor formula sweep, connected n in 2..=7");
    let start = Instant::now();
    let (mut graphs, mut checks, mut bad) = (0, 0, Vec::new());
    for g in connected_up_to(7).filter(|g| g.vertex_count() >= 2) {
        graphs += 1;
        let minors = principal_minors(g);
        let censuses = enumerate_minor_censuses(g).unwrap();
        for (i, (d, c)) in minors.iter().zip(&censuses).enumerate() {
            checks += 1;
            if *d != c.weighted_sum() {
                bad.push(format!("{} at {}", write_graph6(g), i + 1));
            }
        }
    }
    let elapsed = start.elapsed();
    o.check("det(Q(i)) = Σ4^c(H)", bad.is_empty(), format!("{graphs} graphs, {checks} minors, mismatches {bad:?}"));
    o.check("runtime < 5 min", elapsed < Duration::from_secs(300), format!("{elapsed:.2?}"));
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new(4, "determinant formula sweep, n <= 7");
    let (mut graphs, mut bad) = (0, Vec::new());
    for g in graphs_up_to(7) {
        graphs += 1;
        if det_signless(g) != enumerate_det_census(g).unwrap().weighted_sum() {
            bad.push(write_graph6(g));
        }
    }
    o.check("det(Q) = Σ4^c(H)", bad.is_empty(), format!("{graphs} graphs, mismatches {bad:?}"));
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new(5, "subdeterminant classification, connected n <= 6");
    let (mut graphs, mut bad) = (0, Vec::new());
    for g in connected_up_to(6).filter(|g| g.vertex_count() >= 2) {
        graphs += 1;
        let item = verify_subdet_classification(g).unwrap();
        if item.passed() != Some(true) {
            bad.push(write_graph6(g));
        }
    }
    o.check("every det(N(i;S]) and det(N[S]) predicted", bad.is_empty(), format!("{graphs} graphs, violations {bad:?}"));
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new(6, "matrix tree triangulation, connected n <= 7");
    let (mut graphs, mut exact_bad, mut eigen_bad) = (0, Vec::new(), Vec::new());
    for g in connected_up_to(7) {
        graphs += 1;
        let n = g.vertex_count();
        let t = count_spanning_trees_enum(g).unwrap();
        let l = laplacian(g);
        if n >= 2 && (0..n).any(|i| l.principal_deleted(i).unwrap().det().unwrap() != BigInt::from(t)) {
            exact_bad.push(write_graph6(g));
        }
        let eigen = laplacian_spectrum(g).values.iter().skip(1).product::<f64>() / n as f64;
        if !relative_close(eigen, t as f64) {
            eigen_bad.push(write_graph6(g));
        }
    }
    o.check("enumeration = det(L(i)) for all i", exact_bad.is_empty(), format!("{graphs} graphs, mismatches {exact_bad:?}"));
    o.check("μ₂···μₙ/n within 1e-6 relative", eigen_bad.is_empty(), format!("mismatches {eigen_bad:?}"));
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new(7, "bounds and their equality cases, n <= 7");
    let mut ous_bad = Vec::new();
    let (mut conn_bad, mut disc_bound_bad, mut disc_iff_bad) = (Vec::new(), Vec::new(), Vec::new());
    let (mut minor_bad, mut eigen_bad) = (Vec::new(), Vec::new());
    let (mut all, mut connected) = (0, 0);
    for g in graphs_up_to(7) {
        all += 1;
        let det = det_signless(g);
        let four = |x: u64| BigInt::from(4u64 * x);
        if det < four(count_ous(g).unwrap()) {
            ous_bad.push(write_graph6(g));
        }
        let oc = count_odd_cycles(g);
        let bound = det >= four(oc);
        let iff = (det == four(oc)) == (g.is_bipartite() || is_odd_unicyclic(g));
        if g.is_connected() {
            connected += 1;
            if !bound || !iff {
                conn_bad.push(write_graph6(g));
            }
            if g.vertex_count() < 2 {
                continue;
            }
            let t = BigInt::from(count_spanning_trees_enum(g).unwrap());
            let minors = principal_minors(g);
            for (i, d) in minors.iter().enumerate() {
                if *d < t || (*d == t) != all_odd_cycles_contain(g, i) {
                    minor_bad.push(format!("{} at {}", write_graph6(g), i + 1));
                }
            }
            let sum: BigInt = minors.iter().sum();
            let n = BigInt::from(g.vertex_count());
            if sum < &n * &t || (sum == &n * &t) != (is_odd_cycle(g) || g.is_bipartite()) {
                eigen_bad.push(write_graph6(g));
            }
        } else {
            if !bound {
                disc_bound_bad.push(write_graph6(g));
            }
            if !iff {
                disc_iff_bad.push(write_graph6(g));
            }
        }
    }
    let head = |v: &[String]| v.iter().take(3).cloned().collect::<Vec<_>>();
    o.check("det(Q) >= 4·ous(G), all graphs", ous_bad.is_empty(), format!("{all} graphs, violations {ous_bad:?}"));
    o.check(
        "det(Q) >= 4·oc(G), equality iff bipartite or odd-unicyclic, connected graphs",
        conn_bad.is_empty(),
        format!("{connected} graphs, violations {conn_bad:?}"),
    );
    o.check(
        "det(Q) >= 4·oc(G), disconnected graphs",
        disc_bound_bad.is_empty(),
        format!(
            "{} of {} violate, e.g. {:?} (an odd cycle beside a bipartite component makes Q singular)",
            disc_bound_bad.len(),
            all - connected,
            head(&disc_bound_bad)
        ),
    );
    o.check(
        "oc equality iff bipartite or odd-unicyclic, disconnected graphs",
        disc_iff_bad.is_empty(),
        format!("{} violate, e.g. {:?}", disc_iff_bad.len(), head(&disc_iff_bad)),
    );
    o.check(
        "det(Q(i)) >= t(G), equality iff every odd cycle holds i",
        minor_bad.is_empty(),
        format!("violations {minor_bad:?}"),
    );
    o.check(
        "Σdet(Q(i))/n >= t(G), equality iff odd cycle or bipartite",
        eigen_bad.is_empty(),
        format!("violations {eigen_bad:?}"),
    );
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new(8, "spectral cross-checks, n <= 7");
    let (mut spec_bad, mut small_bad, mut small_disc, mut poly_bad) = (Vec::new(), Vec::new(), 0, Vec::new());
    let mut graphs = 0;
    for g in graphs_up_to(7) {
        graphs += 1;
        if !bipartite_spectral_check(g).holds() {
            spec_bad.push(write_graph6(g));
        }
        let smallest = smallest_signless_eigenvalue(g);
        if g.is_connected() {
            if !smallest.holds(DEFAULT_TOLERANCE) {
                small_bad.push(write_graph6(g));
            }
        } else if smallest.near_zero != g.components().components.iter().any(|c| !c.has_odd_cycle) {
            small_disc += 1;
        }
        if !charpoly_check(g).holds() {
            poly_bad.push(write_graph6(g));
        }
    }
    o.check("spec(L) = spec(Q) iff bipartite", spec_bad.is_empty(), format!("{graphs} graphs, violations {spec_bad:?}"));
    o.check(
        "smallest Q-eigenvalue ≈ 0 iff bipartite, connected graphs",
        small_bad.is_empty(),
        format!("violations {small_bad:?}"),
    );
    o.check(
        "disconnected graphs: ≈ 0 iff some component is bipartite",
        small_disc == 0,
        format!("violations {small_disc}"),
    );
    o.check("a₁, a₂, aₙ identities", poly_bad.is_empty(), format!("violations {poly_bad:?}"));
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new(9, "derived spot values");
    let k3 = Graph::complete(3);
    let k3_det = oracle::det(&oracle::q(&k3));
    let k3_census = oracle::det_census(&k3);
    o.check(
        "K3: det(Q) = 4, census {1↦1}",
        k3_det == 4
            && det_signless(&k3) == bigint(k3_det)
            && k3_census == BTreeMap::from([(1, 1)])
            && enumerate_det_census(&k3).unwrap().by_components == k3_census,
        format!("oracle det {k3_det}, census {k3_census:?}"),
    );

    let k4 = Graph::complete(4);
    let q = oracle::q(&k4);
    let minors: Vec<i128> = (0..4).map(|i| oracle::det(&oracle::minor(&q, i))).collect();
    let det = oracle::det(&q);
    let ous: u64 = oracle::det_census(&k4).values().sum();
    let oc = oracle::odd_cycles(&k4);
    let t = oracle::spanning_trees(&k4);
    let brute_minor_sums: Vec<BigInt> = (0..4).map(|i| pow4_sum(&oracle::minor_census(&k4, i))).collect();
    o.check(
        "K4 oracles: det(Q(i)) = 20, det(Q) = 48, ous = 12, oc = 4, t = 16",
        minors == [20; 4] && det == 48 && ous == 12 && oc == 4 && t == 16 && brute_minor_sums.iter().all(|s| *s == bigint(20)),
        format!("minors {minors:?}, det {det}, ous {ous}, oc {oc}, t {t}"),
    );
    o.check(
        "K4 library agrees with oracles",
        principal_minors(&k4) == vec![bigint(20); 4]
            && det_signless(&k4) == bigint(48)
            && count_ous(&k4).unwrap() == 12
            && count_odd_cycles(&k4) == 4
            && count_spanning_trees_enum(&k4).unwrap() == 16,
        String::new(),
    );
    o
}

fn run_verify(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_signless")).args(args).output().ok()?.status.code()
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new(10, "I/O");
    let mut bad = Vec::new();
    let mut count = 0;
    for g in graphs_up_to(7) {
        count += 1;
        let s = write_graph6(g);
        let (n, edges) = oracle::decode_graph6(&s);
        let ok = n == g.vertex_count()
            && edges == g.edges()
            && parse_graph6(&s).map(|d| d.graph == *g).unwrap_or(false)
            && parse_edgelist(&write_edgelist(g)).map(|d| d.graph == *g).unwrap_or(false);
        if !ok {
            bad.push(s);
        }
    }
    o.check("graph6 round trip against independent decoder", bad.is_empty(), format!("{count} graphs, failures {bad:?}"));

    let paw = parse_edgelist("4 4\n1 2\n2 3\n3 4\n2 4").unwrap().graph;
    let expected_q =
        IntMatrix::from_rows(&[vec![1, 1, 0, 0], vec![1, 3, 1, 1], vec![0, 1, 2, 1], vec![0, 1, 1, 2]]);
    let n = incidence_matrix(&paw);
    o.check(
        "paw edge list gives Q of the fixture",
        signless_laplacian(&paw) == expected_q && &n * &n.transpose() == expected_q,
        String::new(),
    );

    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: String| {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    };
    let paw_file = write("paw.el", "4 4\n1 2\n2 3\n3 4\n2 4\n".into());
    let fail_file = write("triangle_plus_vertex.el", "4 3\n1 2\n2 3\n1 3\n".into());
    // a 30-cycle with 10 chords: every (n-1)-subset enumeration is over budget
    let mut big = String::from("30 40\n");
    for v in 1..=30 {
        big += &format!("{} {}\n", v, v % 30 + 1);
    }
    for k in 0..10 {
        let a = 1 + 2 * k;
        big += &format!("{} {}\n", a, (a + 14) % 30 + 1);
    }
    let big_file = write("sparse30.el", big);
    let missing = dir.path().join("nosuch.el").to_string_lossy().into_owned();
    let codes = [
        (run_verify(&["verify", &paw_file]), 0),
        (run_verify(&["verify", &fail_file]), 1),
        (run_verify(&["verify", &missing]), 2),
        (run_verify(&["verify", &big_file, "--format", "json"]), 3),
    ];
    o.check(
        "verify exit codes 0/1/2/3",
        codes.iter().all(|(got, want)| *got == Some(*want)),
        format!("{:?}", codes.iter().map(|c| c.0).collect::<Vec<_>>()),
    );
    o
}

fn main() {
    assert_eq!(TheoremId::ALL.len(), 10);
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    for o in &outcomes {
        o.print();
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    println!("failing criteria: {failed:?} (documented as unattainable: {KNOWN_UNATTAINABLE:?})");
    if failed != KNOWN_UNATTAINABLE {
        eprintln!("failing criteria differ from the documented set");
        std::process::exit(1);
    }
}
