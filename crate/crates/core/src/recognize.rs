//! Class-specific recognition of strongly chordal digraphs. Every yes carries a
//! strong ordering; every no carries a certificate or is marked uncertified.

use std::collections::{BTreeMap, VecDeque};

use crate::bits::BitMatrix;
use crate::catalog::{self, find_induced, find_induced_extending, verify_embedding, Obstruction, Triangle};
use crate::digraph::{Bigraph, Digraph, Ordering};
use crate::error::{Error, Result};
use crate::gamma::{
    check_strong_ordering, columns_for_rows, find_strong_ordering, gamma_free_matrix, is_totally_balanced_bounded,
    BiadjacencyOrdering, OracleOutcome,
};

/// Node budget for oracle fallbacks.
pub const ORACLE_BUDGET: u64 = 20_000_000;
/// Constructed orderings are re-verified up to this many vertices.
pub const VERIFY_LIMIT: usize = 2000;
/// Obstruction searches by induced embedding run up to this many vertices.
pub const SEARCH_LIMIT: usize = 60;
/// Below this size the oracle runs before any pattern search.
const SMALL: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confidence {
    Certified,
    Uncertified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Trivial,
    Tournament,
    TournamentWithLoops,
    Bipartite,
    MinusArc,
    ReflexiveMultipartite,
    Balanced,
    Oracle,
}

impl Class {
    pub fn as_str(self) -> &'static str {
        match self {
            Class::Trivial => "trivial",
            Class::Tournament => "tournament",
            Class::TournamentWithLoops => "tournament-with-loops",
            Class::Bipartite => "bipartite",
            Class::MinusArc => "minus-arc",
            Class::ReflexiveMultipartite => "reflexive-multipartite",
            Class::Balanced => "balanced",
            Class::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// Two parts with at least two vertices each; the vertices form an induced C4.
    NotCompleteSplit,
    DirectedCycle,
    /// Both one-way bigraphs are connected. Carries no witness.
    BothOneWayBigraphsConnected,
    /// An induced fence, listed along the cycle.
    Fence,
    FenceSearchFailed,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::NotCompleteSplit => "not-complete-split",
            ViolationKind::DirectedCycle => "directed-cycle",
            ViolationKind::BothOneWayBigraphsConnected => "both-one-way-bigraphs-connected",
            ViolationKind::Fence => "fence",
            ViolationKind::FenceSearchFailed => "fence-search-failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `vertices[p]` is the host vertex of pattern vertex `p`.
    NamedObstruction { name: String, vertices: Vec<usize> },
    ArcDisjointTriangles { first: Triangle, second: Triangle },
    StructuralViolation { kind: ViolationKind, vertices: Vec<usize> },
    /// Vertices inducing a subdigraph without a strong ordering, found by
    /// exhaustive search; minimal when every deletion test finished.
    OracleWitness { vertices: Vec<usize>, minimal: bool },
    OracleExhausted,
}

impl Certificate {
    pub fn type_name(&self) -> &'static str {
        match self {
            Certificate::NamedObstruction { .. } => "named-obstruction",
            Certificate::ArcDisjointTriangles { .. } => "arc-disjoint-triangles",
            Certificate::StructuralViolation { .. } => "structural-violation",
            Certificate::OracleWitness { .. } => "oracle-witness",
            Certificate::OracleExhausted => "oracle-exhausted",
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Certificate::NamedObstruction { vertices, .. }
            | Certificate::StructuralViolation { vertices, .. }
            | Certificate::OracleWitness { vertices, .. } => vertices.clone(),
            Certificate::ArcDisjointTriangles { first, second } => first.iter().chain(second).copied().collect(),
            Certificate::OracleExhausted => Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    pub ordering: Option<Ordering>,
    pub certificate: Option<Certificate>,
    pub class_used: Class,
    pub confidence: Confidence,
}

impl RecognitionResult {
    fn yes(class: Class, ord: Ordering) -> Self {
        RecognitionResult {
            verdict: Verdict::Yes,
            ordering: Some(ord),
            certificate: None,
            class_used: class,
            confidence: Confidence::Certified,
        }
    }

    fn no(class: Class, cert: Certificate) -> Self {
        RecognitionResult {
            verdict: Verdict::No,
            ordering: None,
            certificate: Some(cert),
            class_used: class,
            confidence: Confidence::Certified,
        }
    }

    fn uncertified(class: Class, cert: Certificate) -> Self {
        RecognitionResult { confidence: Confidence::Uncertified, ..RecognitionResult::no(class, cert) }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// `Some(yes)` if `ord` is a strong ordering (checked up to [`VERIFY_LIMIT`]).
fn yes_if_strong(d: &Digraph, class: Class, ord: Vec<usize>) -> Option<RecognitionResult> {
    let ord = Ordering::new(ord).ok()?;
    if d.n() <= VERIFY_LIMIT && check_strong_ordering(d, &ord).ok()?.is_some() {
        return None;
    }
    Some(RecognitionResult::yes(class, ord))
}

fn named(name: &str, vertices: Vec<usize>) -> Certificate {
    Certificate::NamedObstruction { name: name.to_string(), vertices }
}

/// Exhaustive search under [`ORACLE_BUDGET`]. A no is certified by an induced
/// subdigraph shrunk by vertex deletion, named when it matches a pattern.
pub fn decide_by_oracle(d: &Digraph, class: Class, patterns: &[Obstruction]) -> RecognitionResult {
    match find_strong_ordering(d, Some(ORACLE_BUDGET)) {
        OracleOutcome::Found(ord) => RecognitionResult::yes(class, ord),
        OracleOutcome::NoOrdering => RecognitionResult::no(class, shrink_witness(d, patterns)),
        OracleOutcome::Exhausted => RecognitionResult::uncertified(class, Certificate::OracleExhausted),
    }
}

fn shrink_witness(d: &Digraph, patterns: &[Obstruction]) -> Certificate {
    let mut keep: Vec<usize> = (0..d.n()).collect();
    let mut minimal = true;
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        match find_strong_ordering(&d.induced_subdigraph(&trial), Some(ORACLE_BUDGET)) {
            OracleOutcome::NoOrdering => keep = trial,
            OracleOutcome::Found(_) => i += 1,
            OracleOutcome::Exhausted => {
                minimal = false;
                i += 1;
            }
        }
    }
    let sub = d.induced_subdigraph(&keep);
    if minimal {
        for p in patterns.iter().filter(|p| p.pattern.n() == keep.len()) {
            if let Some(m) = find_induced(&sub, &p.pattern) {
                return named(&p.name, m.iter().map(|&v| keep[v]).collect());
            }
        }
    }
    Certificate::OracleWitness { vertices: keep, minimal }
}

/// Pattern search at moderate size, then the oracle.
fn decide_by_search(d: &Digraph, class: Class, patterns: &[Obstruction]) -> RecognitionResult {
    if d.n() > SMALL && d.n() <= SEARCH_LIMIT {
        let mut sorted: Vec<&Obstruction> = patterns.iter().collect();
        sorted.sort_by_key(|p| p.pattern.n());
        for p in sorted {
            if let Some(m) = find_induced(d, &p.pattern) {
                return RecognitionResult::no(class, named(&p.name, m));
            }
        }
    }
    decide_by_oracle(d, class, patterns)
}

fn patterns_named(names: &[&str]) -> Vec<Obstruction> {
    names.iter().filter_map(|n| catalog::by_name(n).ok()).collect()
}

fn tournament_patterns() -> Vec<Obstruction> {
    patterns_named(&["T1", "T2", "T3", "T4", "T5", "T6"])
}

// ---------------------------------------------------------------- tournaments

/// Out-degrees ignoring loops.
fn loopless_scores(d: &Digraph) -> Vec<usize> {
    (0..d.n()).map(|v| d.out_degree(v) - usize::from(d.has_loop(v))).collect()
}

/// Topological order (source first) if the tournament, loops ignored, is transitive.
pub fn transitive_order(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.n();
    let s = loopless_scores(d);
    let mut by_score = vec![usize::MAX; n];
    for (v, &k) in s.iter().enumerate() {
        if k >= n || by_score[k] != usize::MAX {
            return None;
        }
        by_score[k] = v;
    }
    by_score.reverse();
    Some(by_score)
}

/// Arcs `(u, v)` of a tournament whose reversal leaves a transitive tournament,
/// found from the out-degree sequence. Empty for transitive input.
pub fn transitivity_restoring_arcs(d: &Digraph) -> Vec<(usize, usize)> {
    let n = d.n();
    let s = loopless_scores(d);
    let mut cnt = vec![0isize; n + 1];
    for &k in &s {
        if k >= n {
            return Vec::new();
        }
        cnt[k] += 1;
    }
    let excess: Vec<isize> = cnt[..n].iter().map(|c| c - 1).collect();
    let positive: Vec<usize> = (0..n).filter(|&k| excess[k] > 0).collect();
    if excess.iter().filter(|&&e| e > 0).sum::<isize>() != 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for &sigma in &positive {
        for &tau in &positive {
            if sigma == 0 || tau + 1 >= n || (sigma == tau && excess[sigma] < 2) {
                continue;
            }
            let mut expect = vec![0isize; n];
            expect[sigma] += 1;
            expect[tau] += 1;
            expect[sigma - 1] -= 1;
            expect[tau + 1] -= 1;
            if expect != excess {
                continue;
            }
            for u in (0..n).filter(|&u| s[u] == sigma) {
                for v in (0..n).filter(|&v| s[v] == tau && v != u) {
                    if d.has_arc(u, v) && !out.contains(&(u, v)) {
                        out.push((u, v));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Topological order of the tournament obtained by reversing the arc `(u, v)`.
fn restored_order(d: &Digraph, u: usize, v: usize) -> Vec<usize> {
    let mut s = loopless_scores(d);
    s[u] -= 1;
    s[v] += 1;
    let mut order: Vec<usize> = (0..d.n()).collect();
    order.sort_by_key(|&w| std::cmp::Reverse(s[w]));
    order
}

/// Strong ordering for a tournament with one reversed arc `(u, v)`: the span of
/// the reversed arc in topological order, then the vertices before it
/// backwards, then the vertices after it. The span is reversed when its first
/// vertex has a loop.
fn one_reversal_ordering(d: &Digraph, u: usize, v: usize) -> Vec<usize> {
    let s = restored_order(d, u, v);
    let a = s.iter().position(|&w| w == v).expect("vertex in order");
    let b = s.iter().position(|&w| w == u).expect("vertex in order");
    let mut span = s[a..=b].to_vec();
    if d.has_loop(span[0]) {
        span.reverse();
    }
    span.extend(s[..a].iter().rev());
    span.extend(&s[b + 1..]);
    span
}

fn normalize_triangle(t: Triangle) -> Triangle {
    let i = (0..3).min_by_key(|&i| t[i]).expect("three entries");
    [t[i], t[(i + 1) % 3], t[(i + 2) % 3]]
}

fn triangle_arcs(t: &Triangle) -> [(usize, usize); 3] {
    [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
}

/// A directed triangle `u -> v -> w -> u` using the arc `(u, v)`, if any.
fn triangle_on(d: &Digraph, t: &BitMatrix, u: usize, v: usize) -> Option<usize> {
    d.out_row(v)
        .iter()
        .zip(t.row(u))
        .enumerate()
        .find_map(|(wi, (a, b))| {
            let mut m = a & b;
            while m != 0 {
                let w = wi * 64 + m.trailing_zeros() as usize;
                if w != u && w != v {
                    return Some(w);
                }
                m &= m - 1;
            }
            None
        })
}

fn first_triangle(d: &Digraph, t: &BitMatrix) -> Option<Triangle> {
    (0..d.n()).find_map(|u| {
        d.out_iter(u)
            .filter(|&v| v != u)
            .find_map(|v| triangle_on(d, t, u, v).map(|w| [u, v, w]))
    })
}

/// Two arc-disjoint directed triangles, if the digraph has them. Every
/// triangle sharing no arc with the first one found is tried; otherwise two
/// triangles through different arcs of the first one are arc-disjoint.
pub fn arc_disjoint_triangle_pair(d: &Digraph) -> Option<(Triangle, Triangle)> {
    let t = d.matrix().transpose();
    let t1 = first_triangle(d, &t)?;
    let a1 = triangle_arcs(&t1);
    for p in 0..d.n() {
        for q in d.out_iter(p).filter(|&q| q != p) {
            if a1.contains(&(p, q)) {
                continue;
            }
            for w in d.out_iter(q) {
                if w == p || w == q || !d.has_arc(w, p) {
                    continue;
                }
                if !a1.contains(&(q, w)) && !a1.contains(&(w, p)) {
                    return Some((normalize_triangle(t1), normalize_triangle([p, q, w])));
                }
            }
        }
    }
    let mut through: Vec<Option<Triangle>> = Vec::new();
    for &(u, v) in &a1 {
        let w = d
            .out_iter(v)
            .find(|&w| w != u && w != v && !t1.contains(&w) && d.has_arc(w, u));
        through.push(w.map(|w| [u, v, w]));
    }
    let found: Vec<Triangle> = through.into_iter().flatten().collect();
    if found.len() >= 2 {
        return Some((normalize_triangle(found[0]), normalize_triangle(found[1])));
    }
    None
}

fn small_case(d: &Digraph, class: Class, patterns: &[Obstruction]) -> RecognitionResult {
    if d.n() <= 1 {
        RecognitionResult::yes(class, Ordering::identity(d.n()))
    } else {
        decide_by_oracle(d, class, patterns)
    }
}

/// Irreflexive tournaments: strongly chordal iff at most one arc away from
/// transitive. A no carries two arc-disjoint triangles.
pub fn recognize_irreflexive_tournament(d: &Digraph) -> Result<RecognitionResult> {
    if !d.is_irreflexive() || !d.is_tournament() {
        return Err(precondition("not an irreflexive tournament"));
    }
    let class = Class::Tournament;
    if d.n() <= 2 {
        return Ok(small_case(d, class, &[]));
    }
    if let Some(order) = transitive_order(d) {
        if let Some(r) = yes_if_strong(d, class, order) {
            return Ok(r);
        }
    }
    for (u, v) in transitivity_restoring_arcs(d) {
        if let Some(r) = yes_if_strong(d, class, one_reversal_ordering(d, u, v)) {
            return Ok(r);
        }
    }
    if transitive_order(d).is_none() && transitivity_restoring_arcs(d).is_empty() {
        if let Some((first, second)) = arc_disjoint_triangle_pair(d) {
            return Ok(RecognitionResult::no(class, Certificate::ArcDisjointTriangles { first, second }));
        }
    }
    Ok(decide_by_oracle(d, class, &tournament_patterns()))
}

/// A directed triangle inside `vertices`.
fn triangle_within(d: &Digraph, vertices: &[usize]) -> Option<Triangle> {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    let sub = d.induced_subdigraph(&sorted);
    if sub.is_tournament() && transitive_order(&sub).is_some() {
        return None;
    }
    let tri = first_triangle(&sub, &sub.matrix().transpose())?;
    Some(tri.map(|i| sorted[i]))
}

/// Tournaments with loops. Yes when the loopless tournament is at most one arc
/// from transitive with some such arc having an irreflexive end, and the
/// reflexive vertices induce a transitive tournament. Other inputs are decided
/// by validated obstructions and exhaustive search, because some loop
/// decorations of T1 are strongly chordal.
pub fn recognize_tournament_with_loops(d: &Digraph) -> Result<RecognitionResult> {
    if !d.is_tournament() {
        return Err(precondition("not a tournament"));
    }
    let class = Class::TournamentWithLoops;
    let patterns = catalog::validated_t_circ();
    if d.n() <= 2 {
        return Ok(small_case(d, class, patterns));
    }
    if let Some(tri) = triangle_within(d, &d.loops()) {
        return Ok(RecognitionResult::no(class, named("REFLEXIVE_C3", tri.to_vec())));
    }
    if let Some(order) = transitive_order(d) {
        if let Some(r) = yes_if_strong(d, class, order) {
            return Ok(r);
        }
    }
    let arcs = transitivity_restoring_arcs(d);
    for &(u, v) in arcs.iter().filter(|(u, v)| !d.has_loop(*u) || !d.has_loop(*v)) {
        if let Some(r) = yes_if_strong(d, class, one_reversal_ordering(d, u, v)) {
            return Ok(r);
        }
    }
    if let Some(&(u, v)) = arcs.first() {
        if arcs.iter().all(|&(p, q)| d.has_loop(p) && d.has_loop(q)) {
            let s = restored_order(d, u, v);
            let a = s.iter().position(|&w| w == v).expect("vertex in order");
            let b = s.iter().position(|&w| w == u).expect("vertex in order");
            if b >= a + 3 {
                let map = vec![s[a], s[a + 1], s[a + 2], s[b]];
                if verify_embedding(d, &catalog::t0(), &map) {
                    return Ok(RecognitionResult::no(class, named("T0", map)));
                }
            }
        }
    }
    Ok(decide_by_search(d, class, patterns))
}

// ------------------------------------------------------ bipartite tournaments

/// The two parts of an irreflexive bipartite tournament; the part holding
/// vertex 0 comes first.
pub fn bipartition(d: &Digraph) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = d.n();
    if !d.is_irreflexive() || !d.is_oriented() {
        return Err(precondition("not an irreflexive oriented digraph"));
    }
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut side = vec![false; n];
    for v in 1..n {
        side[v] = d.adjacent(0, v);
    }
    let xs: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
    let ys: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    for &x in &xs {
        for &y in &ys {
            if !d.adjacent(x, y) {
                return Err(precondition(format!("vertices {x} and {y} are in different parts but not adjacent")));
            }
        }
    }
    for part in [&xs, &ys] {
        for (i, &a) in part.iter().enumerate() {
            if let Some(&b) = part[i + 1..].iter().find(|&&b| d.adjacent(a, b)) {
                return Err(precondition(format!("vertices {a} and {b} are adjacent inside a part")));
            }
        }
    }
    if n >= 2 && ys.is_empty() {
        return Err(precondition("not a bipartite tournament: one part is empty"));
    }
    Ok((xs, ys))
}

/// `B_X` (rows `xs`, columns `ys`, an edge per arc from X to Y) and `B_Y` (rows
/// `ys`, columns `xs`, an edge per arc from Y to X).
pub fn one_way_bigraphs(d: &Digraph, xs: &[usize], ys: &[usize]) -> Result<(Bigraph, Bigraph)> {
    for part in [xs, ys] {
        for &a in part {
            if a >= d.n() {
                return Err(Error::VertexOutOfRange { v: a, n: d.n() });
            }
            if let Some(&b) = part.iter().find(|&&b| d.has_arc(a, b)) {
                return Err(precondition(format!("arc ({a}, {b}) inside a part")));
            }
        }
    }
    let mut mx = BitMatrix::new(xs.len(), ys.len());
    let mut my = BitMatrix::new(ys.len(), xs.len());
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            mx.set(i, j, d.has_arc(x, y));
            my.set(j, i, d.has_arc(y, x));
        }
    }
    Ok((Bigraph::new(xs.to_vec(), ys.to_vec(), mx)?, Bigraph::new(ys.to_vec(), xs.to_vec(), my)?))
}

/// Outcome of [`is_bipartite_chain`], in vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainCheck {
    /// Both sides ordered by increasing neighbourhood.
    Chain { x_order: Vec<usize>, y_order: Vec<usize> },
    /// Edges `x1 y1` and `x2 y2` with `x1 y2` and `x2 y1` missing.
    TwoK2 { x1: usize, y1: usize, x2: usize, y2: usize },
}

fn inclusion_order(m: &BitMatrix) -> std::result::Result<Vec<usize>, (usize, usize, usize, usize)> {
    let mut order: Vec<usize> = (0..m.rows()).collect();
    order.sort_by_key(|&r| (m.row_count(r), r));
    for w in order.windows(2) {
        let (a, b) = (w[0], w[1]);
        if let Some(ya) = m.row_ones(a).find(|&c| !m.get(b, c)) {
            let yb = m.row_ones(b).find(|&c| !m.get(a, c)).expect("degree of b is at least that of a");
            return Err((a, ya, b, yb));
        }
    }
    Ok(order)
}

pub fn is_bipartite_chain(g: &Bigraph) -> ChainCheck {
    let m = &g.biadj;
    match inclusion_order(m) {
        Err((a, ya, b, yb)) => ChainCheck::TwoK2 {
            x1: g.x_labels[a],
            y1: g.y_labels[ya],
            x2: g.x_labels[b],
            y2: g.y_labels[yb],
        },
        Ok(xo) => {
            let yo = inclusion_order(&m.transpose()).expect("chain on one side is a chain on the other");
            ChainCheck::Chain {
                x_order: xo.iter().map(|&i| g.x_labels[i]).collect(),
                y_order: yo.iter().map(|&i| g.y_labels[i]).collect(),
            }
        }
    }
}

fn sub_bigraph(g: &Bigraph, xs: &[usize], ys: &[usize]) -> Bigraph {
    let m = g.biadj.permuted(xs, ys);
    Bigraph {
        x_labels: xs.iter().map(|&i| g.x_labels[i]).collect(),
        y_labels: ys.iter().map(|&i| g.y_labels[i]).collect(),
        biadj: m,
    }
}

/// What a one-way bigraph says about strong chordality.
enum OneWayShape {
    /// Disconnected, at most two non-trivial components, all chain graphs.
    Good { chains: Vec<(Vec<usize>, Vec<usize>)>, isolated: Vec<usize> },
    Connected,
    /// Three edges forming an induced matching, as (row label, column label).
    ThreeK2([(usize, usize); 3]),
    Bad,
}

fn classify_one_way(g: &Bigraph) -> OneWayShape {
    let comps = g.components();
    if comps.len() <= 1 {
        return OneWayShape::Connected;
    }
    let mut isolated = Vec::new();
    let mut nontrivial = Vec::new();
    for (xs, ys) in &comps {
        if xs.is_empty() || ys.is_empty() {
            isolated.extend(xs.iter().map(|&i| g.x_labels[i]));
            isolated.extend(ys.iter().map(|&i| g.y_labels[i]));
        } else {
            nontrivial.push(sub_bigraph(g, xs, ys));
        }
    }
    let an_edge = |b: &Bigraph| -> (usize, usize) {
        let r = (0..b.x_size()).find(|&r| b.biadj.row_count(r) > 0).expect("non-trivial component");
        let c = b.biadj.row_ones(r).next().expect("row has an edge");
        (b.x_labels[r], b.y_labels[c])
    };
    if nontrivial.len() >= 3 {
        return OneWayShape::ThreeK2([an_edge(&nontrivial[0]), an_edge(&nontrivial[1]), an_edge(&nontrivial[2])]);
    }
    let mut chains = Vec::new();
    for (i, b) in nontrivial.iter().enumerate() {
        match is_bipartite_chain(b) {
            ChainCheck::Chain { x_order, y_order } => chains.push((x_order, y_order)),
            ChainCheck::TwoK2 { x1, y1, x2, y2 } => {
                return match nontrivial.get(1 - i.min(1)).filter(|_| nontrivial.len() == 2) {
                    Some(other) => OneWayShape::ThreeK2([(x1, y1), (x2, y2), an_edge(other)]),
                    None => OneWayShape::Bad,
                };
            }
        }
    }
    OneWayShape::Good { chains, isolated }
}

/// Rows of the first component, columns of the second, columns of the first
/// reversed, rows of the second reversed, then isolated vertices.
fn bipartite_ordering(chains: &[(Vec<usize>, Vec<usize>)], isolated: &[usize], swap: bool) -> Vec<usize> {
    let empty = (Vec::new(), Vec::new());
    let (c1, c2) = match chains.len() {
        0 => (&empty, &empty),
        1 => (&chains[0], &empty),
        _ if swap => (&chains[1], &chains[0]),
        _ => (&chains[0], &chains[1]),
    };
    let mut ord = c1.0.clone();
    ord.extend(&c2.1);
    ord.extend(c1.1.iter().rev());
    ord.extend(c2.0.iter().rev());
    ord.extend(isolated);
    ord
}

fn bipartite_patterns() -> Vec<Obstruction> {
    patterns_named(&["B1", "B2", "B3", "B4"])
}

/// Irreflexive bipartite tournaments: strongly chordal iff one one-way bigraph
/// is disconnected with at most two non-trivial components, each a chain graph.
pub fn recognize_irreflexive_bipartite(d: &Digraph) -> Result<RecognitionResult> {
    let (xs, ys) = bipartition(d)?;
    let class = Class::Bipartite;
    if d.n() <= 2 {
        return Ok(small_case(d, class, &[]));
    }
    let (bx, by) = one_way_bigraphs(d, &xs, &ys)?;
    let shapes = [classify_one_way(&bx), classify_one_way(&by)];
    for shape in &shapes {
        if let OneWayShape::Good { chains, isolated } = shape {
            for swap in [false, true] {
                if let Some(r) = yes_if_strong(d, class, bipartite_ordering(chains, isolated, swap)) {
                    return Ok(r);
                }
            }
        }
    }
    if shapes.iter().all(|s| matches!(s, OneWayShape::Connected)) {
        return Ok(RecognitionResult::uncertified(
            class,
            Certificate::StructuralViolation { kind: ViolationKind::BothOneWayBigraphsConnected, vertices: Vec::new() },
        ));
    }
    let b4 = catalog::bipartite_obstruction(4);
    for shape in &shapes {
        if let OneWayShape::ThreeK2(edges) = shape {
            let map: Vec<usize> = edges.iter().map(|e| e.0).chain(edges.iter().map(|e| e.1)).collect();
            if verify_embedding(d, &b4, &map) {
                return Ok(RecognitionResult::no(class, named("B4", map)));
            }
        }
    }
    Ok(decide_by_search(d, class, &bipartite_patterns()))
}

/// Whether repeatedly taking bipartite complements of connected components
/// reduces the bigraph to isolated vertices.
pub fn is_co_bigraph(g: &Bigraph) -> bool {
    if g.x_size() + g.y_size() <= 1 {
        return true;
    }
    let comps = g.components();
    if comps.len() == 1 {
        let mut c = g.biadj.clone();
        for r in 0..c.rows() {
            for col in 0..c.cols() {
                c.set(r, col, !g.biadj.get(r, col));
            }
        }
        let complement = Bigraph { x_labels: g.x_labels.clone(), y_labels: g.y_labels.clone(), biadj: c };
        if complement.components().len() == 1 {
            return false;
        }
        return is_co_bigraph(&complement);
    }
    comps.iter().all(|(xs, ys)| is_co_bigraph(&sub_bigraph(g, xs, ys)))
}

/// Three edges, pairwise non-adjacent and with no edges between them.
pub fn has_induced_3k2(g: &Bigraph) -> bool {
    let m = &g.biadj;
    let edges: Vec<(usize, usize)> = (0..m.rows()).flat_map(|r| m.row_ones(r).map(move |c| (r, c))).collect();
    let free = |a: (usize, usize), b: (usize, usize)| a.0 != b.0 && a.1 != b.1 && !m.get(a.0, b.1) && !m.get(b.0, a.1);
    for (i, &a) in edges.iter().enumerate() {
        for (j, &b) in edges.iter().enumerate().skip(i + 1) {
            if !free(a, b) {
                continue;
            }
            if edges[j + 1..].iter().any(|&c| free(a, c) && free(b, c)) {
                return true;
            }
        }
    }
    false
}

/// An induced 6-cycle: three rows and three columns, each with exactly two edges.
pub fn has_induced_c6(g: &Bigraph) -> bool {
    let m = &g.biadj;
    let (r, c) = (m.rows(), m.cols());
    for r1 in 0..r {
        for r2 in r1 + 1..r {
            for r3 in r2 + 1..r {
                for c1 in 0..c {
                    for c2 in c1 + 1..c {
                        for c3 in c2 + 1..c {
                            let rows = [r1, r2, r3];
                            let cols = [c1, c2, c3];
                            let ok = rows.iter().all(|&x| cols.iter().filter(|&&y| m.get(x, y)).count() == 2)
                                && cols.iter().all(|&y| rows.iter().filter(|&&x| m.get(x, y)).count() == 2);
                            if ok {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

// -------------------------------------------------- tournaments minus one arc

/// Critical-arc condition (1..=8) met by the arc from position `x` to position
/// `y` (1-based topological positions) when the arc between positions `a < b`
/// is reversed; `None` for transitive tournaments or non-critical arcs.
pub fn is_critical_arc(n: usize, reversed: Option<(usize, usize)>, x: usize, y: usize) -> Result<Option<usize>> {
    let in_range = |p: usize| (1..=n).contains(&p);
    if !in_range(x) || !in_range(y) {
        return Err(precondition(format!("positions ({x}, {y}) outside 1..={n}")));
    }
    let Some((a, b)) = reversed else { return Ok(None) };
    if !in_range(a) || !in_range(b) || a >= b {
        return Err(precondition(format!("reversed arc ({a}, {b}) needs 1 <= a < b <= {n}")));
    }
    let (x, y, a, b) = (x as isize, y as isize, a as isize, b as isize);
    let conditions = [
        x + 1 < y && y < a,
        x < a - 1 && a - 1 < y - 1 && y - 1 < b - 2,
        x < a && a < y - 1 && y - 1 < b - 1,
        x < a && a < b - 1 && b - 1 < y - 1,
        a < x && x < y - 1 && y - 1 < b - 1,
        a < x && x < b - 1 && b - 1 < y - 1,
        a + 1 < x && x < b && b < y - 1,
        b < x && x < y - 1,
    ];
    Ok(conditions.iter().position(|&c| c).map(|i| i + 1))
}

/// The non-adjacent pair of an irreflexive oriented digraph in which all other pairs are adjacent.
pub fn missing_pair(d: &Digraph) -> Result<(usize, usize)> {
    if !d.is_irreflexive() || !d.is_oriented() {
        return Err(precondition("not an irreflexive oriented digraph"));
    }
    let n = d.n();
    let mut found = None;
    for u in 0..n {
        for v in u + 1..n {
            if !d.adjacent(u, v) {
                if found.is_some() {
                    return Err(precondition("more than one non-adjacent pair"));
                }
                found = Some((u, v));
            }
        }
    }
    found.ok_or_else(|| precondition("no non-adjacent pair: the digraph is a tournament"))
}

fn minus_arc_patterns() -> Vec<Obstruction> {
    let mut p = tournament_patterns();
    p.extend((1..=19).filter_map(|i| catalog::by_name(&format!("S{i}")).ok()));
    p
}

/// Orderings that the tournament `t = d + (p, q)` hands to `d` when the added arc is
/// not critical for some one-reversal description of `t`.
fn noncritical_orderings(t: &Digraph, p: usize, q: usize) -> Vec<Vec<usize>> {
    let n = t.n();
    let mut out = Vec::new();
    if let Some(order) = transitive_order(t) {
        out.push(order);
        return out;
    }
    for (u, v) in transitivity_restoring_arcs(t) {
        let s = restored_order(t, u, v);
        let pos = |w: usize| s.iter().position(|&z| z == w).expect("vertex in order") + 1;
        let critical = if (p, q) == (u, v) {
            None
        } else {
            is_critical_arc(n, Some((pos(v), pos(u))), pos(p), pos(q)).ok().flatten()
        };
        if critical.is_none() {
            out.push(one_reversal_ordering(t, u, v));
        }
    }
    out
}

/// Irreflexive tournaments minus one arc, trying both orientations of the
/// missing arc: either the tournament is strongly chordal and the arc is not
/// critical, or one end of the pair is a false twin of the other and deleting
/// it leaves a strongly chordal tournament.
pub fn recognize_tournament_minus_arc(d: &Digraph) -> Result<RecognitionResult> {
    let (x, y) = missing_pair(d)?;
    let class = Class::MinusArc;
    let patterns = minus_arc_patterns();
    if d.n() <= 2 {
        return Ok(small_case(d, class, &patterns));
    }
    for (p, q) in [(x, y), (y, x)] {
        let mut t = d.clone();
        t.add_arc(p, q);
        for ord in noncritical_orderings(&t, p, q) {
            if let Some(r) = yes_if_strong(d, class, ord) {
                return Ok(r);
            }
        }
    }
    if d.are_false_twins(x, y)? {
        for (keep, drop) in [(x, y), (y, x)] {
            let rest: Vec<usize> = (0..d.n()).filter(|&v| v != drop).collect();
            let sub = d.induced_subdigraph(&rest);
            let r = recognize_irreflexive_tournament(&sub)?;
            if let Some(ord) = r.ordering {
                let base: Vec<usize> = ord.as_slice().iter().map(|&i| rest[i]).collect();
                let at = base.iter().position(|&v| v == keep).expect("kept vertex present");
                for offset in [1, 0] {
                    let mut full = base.clone();
                    full.insert(at + offset, drop);
                    if let Some(r) = yes_if_strong(d, class, full) {
                        return Ok(r);
                    }
                }
            }
        }
    }
    if let Some(cert) = minus_arc_certificate(d, x, y, &patterns) {
        return Ok(RecognitionResult::no(class, cert));
    }
    Ok(decide_by_oracle(d, class, &patterns))
}

fn minus_arc_certificate(d: &Digraph, x: usize, y: usize, patterns: &[Obstruction]) -> Option<Certificate> {
    for drop in [x, y] {
        let rest: Vec<usize> = (0..d.n()).filter(|&v| v != drop).collect();
        let sub = d.induced_subdigraph(&rest);
        if transitive_order(&sub).is_some() || !transitivity_restoring_arcs(&sub).is_empty() {
            continue;
        }
        let Some((t1, t2)) = arc_disjoint_triangle_pair(&sub) else { continue };
        let mut core: Vec<usize> = t1.iter().chain(&t2).map(|&i| rest[i]).collect();
        core.sort_unstable();
        core.dedup();
        let small = d.induced_subdigraph(&core);
        for p in patterns.iter().filter(|p| p.name.starts_with('T')) {
            if let Some(m) = find_induced(&small, &p.pattern) {
                return Some(named(&p.name, m.iter().map(|&i| core[i]).collect()));
            }
        }
    }
    if d.n() > 4 * SEARCH_LIMIT {
        return None;
    }
    for p in patterns.iter().filter(|p| p.name.starts_with('S')) {
        let pat = &p.pattern;
        let Ok((p0, p1)) = missing_pair(pat) else { continue };
        let mut perm = vec![p0, p1];
        perm.extend((0..pat.n()).filter(|&v| v != p0 && v != p1));
        let relabeled = pat.relabeled(&perm);
        for prefix in [[x, y], [y, x]] {
            if let Some(m) = find_induced_extending(d, &relabeled, &prefix) {
                let mut map = vec![0; pat.n()];
                for (a, &old) in perm.iter().enumerate() {
                    map[old] = m[a];
                }
                return Some(named(&p.name, map));
            }
        }
    }
    None
}

// --------------------------------------- reflexive multipartite tournaments

/// Parts of a complete multipartite underlying graph, or an induced `K1 + K2`
/// `(u, v, w)`: `u w` adjacent, `v` adjacent to neither.
fn multipartite_parts(d: &Digraph) -> std::result::Result<Vec<Vec<usize>>, [usize; 3]> {
    let n = d.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&u| u == v || !d.adjacent(u, v)).collect();
        for &u in &members {
            if part_of[u] != usize::MAX {
                // u is non-adjacent to v and to a vertex of an earlier part that v meets
                let w = parts[part_of[u]].iter().copied().find(|&w| d.adjacent(w, v)).expect("parts differ");
                return Err([u, v, w]);
            }
        }
        for (i, &a) in members.iter().enumerate() {
            if let Some(&b) = members[i + 1..].iter().find(|&&b| d.adjacent(a, b)) {
                return Err([a, v, b]);
            }
        }
        for &u in &members {
            part_of[u] = parts.len();
        }
        parts.push(members);
    }
    Ok(parts)
}

/// Level of each stable vertex: its number of in-neighbours in the clique part.
/// Checks that the clique is transitive and that each stable vertex is entered
/// from an initial segment of its topological order and points to the rest.
pub fn levels(d: &Digraph, t: &[usize], s: &[usize]) -> Result<BTreeMap<usize, usize>> {
    let topo = clique_order(d, t)?;
    let mut out = BTreeMap::new();
    for &v in s {
        let l = topo.iter().take_while(|&&u| d.has_arc(u, v)).count();
        if topo[l..].iter().any(|&u| !d.has_arc(v, u) || d.has_arc(u, v)) {
            return Err(precondition(format!("vertex {v} does not split the clique into two segments")));
        }
        out.insert(v, l);
    }
    Ok(out)
}

/// Topological order of a transitive tournament on `t`, loops ignored.
fn clique_order(d: &Digraph, t: &[usize]) -> Result<Vec<usize>> {
    let sub = d.induced_subdigraph(t).without_loops();
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    if !sub.is_tournament() {
        return Err(precondition("clique part is not a tournament"));
    }
    let order = transitive_order(&sub).ok_or_else(|| precondition("clique part is not transitive"))?;
    Ok(order.into_iter().map(|i| sorted[i]).collect())
}

/// A directed cycle inside a non-trivial strong component, shortened to a
/// triangle when one exists among its vertices.
fn directed_cycle(d: &Digraph) -> Option<Vec<usize>> {
    let comp = d.without_loops().strong_components().into_iter().find(|c| c.len() > 1)?;
    if let Some(tri) = triangle_within(d, &comp) {
        return Some(tri.to_vec());
    }
    let mut inside = vec![false; d.n()];
    for &v in &comp {
        inside[v] = true;
    }
    let start = comp[0];
    let mut parent = vec![usize::MAX; d.n()];
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for w in d.out_iter(u) {
            if w == start && u != start {
                let mut cycle = vec![u];
                let mut c = u;
                while c != start {
                    c = parent[c];
                    cycle.push(c);
                }
                cycle.reverse();
                return Some(cycle);
            }
            if inside[w] && w != start && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

fn multipartite_patterns() -> Vec<Obstruction> {
    patterns_named(&["T202", "T1111", "T10101", "REFLEXIVE_C3"])
}

/// Lowest windows `{i, i + 1}` holding every repeated level and all but at
/// most one stable vertex, with the vertex left outside.
fn level_windows(levels: &[(usize, usize)], m: usize) -> Vec<(usize, Option<(usize, usize)>)> {
    let mut out = Vec::new();
    for i in 0..=m {
        let outside: Vec<&(usize, usize)> = levels.iter().filter(|(_, l)| *l != i && *l != i + 1).collect();
        if outside.len() <= 1 {
            out.push((i, outside.first().map(|&&p| p)));
        }
    }
    out
}

/// Stable vertices of levels `i` and `i + 1`, the clique vertices above them
/// backwards, then the rest of the clique with the lone vertex `s_k` placed
/// after the first `k` clique vertices.
fn split_ordering(topo: &[usize], levels: &[(usize, usize)], i: usize, lone: Option<(usize, usize)>) -> Vec<usize> {
    let m = topo.len();
    let j = (i + 1).min(m);
    let mut ord: Vec<usize> = levels.iter().filter(|(_, l)| *l == i).map(|&(v, _)| v).collect();
    ord.extend(levels.iter().filter(|(_, l)| *l == i + 1).map(|&(v, _)| v));
    ord.extend(topo[..j].iter().rev());
    match lone {
        Some((s, k)) => {
            ord.extend(&topo[j..k]);
            ord.push(s);
            ord.extend(&topo[k..]);
        }
        None => ord.extend(&topo[j..]),
    }
    ord
}

/// Candidate strong orderings from the level structure: windows from the
/// lowest up, the lone vertex above the window as given, or below it through
/// the reversed digraph, whose levels are `m - l`.
fn multipartite_candidates(topo: &[usize], levels: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let m = topo.len();
    let mut out = Vec::new();
    for (i, lone) in level_windows(levels, m) {
        if lone.is_none_or(|(_, k)| k > i + 1) {
            out.push(split_ordering(topo, levels, i, lone));
        }
    }
    let rtopo: Vec<usize> = topo.iter().rev().copied().collect();
    let rlevels: Vec<(usize, usize)> = levels.iter().map(|&(v, l)| (v, m - l)).collect();
    for (i, lone) in level_windows(&rlevels, m) {
        if lone.is_none_or(|(_, k)| k > i + 1) {
            out.push(split_ordering(&rtopo, &rlevels, i, lone));
        }
    }
    out
}

/// T202, T1111 or T10101 among a few representatives of each level.
fn level_obstruction(d: &Digraph, topo: &[usize], levels: &[(usize, usize)]) -> Option<Certificate> {
    let mut distinct: Vec<usize> = levels.iter().map(|&(_, l)| l).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let rep = |l: usize| levels.iter().find(|&&(_, x)| x == l).map(|&(v, _)| v).expect("level present");
    if distinct.len() >= 4 {
        let ls = &distinct[..4];
        let map = vec![topo[ls[0]], topo[ls[1]], topo[ls[2]], rep(ls[0]), rep(ls[1]), rep(ls[2]), rep(ls[3])];
        if verify_embedding(d, &catalog::t1111(), &map) {
            return Some(named("T1111", map));
        }
    }
    let mut chosen: Vec<usize> = Vec::new();
    for &l in &distinct {
        chosen.extend(levels.iter().filter(|&&(_, x)| x == l).take(2).map(|&(v, _)| v));
    }
    let mut bounds = vec![0];
    bounds.extend(&distinct);
    bounds.push(topo.len());
    for w in bounds.windows(2) {
        chosen.extend(topo[w[0]..w[1].max(w[0])].iter().take(4));
    }
    chosen.sort_unstable();
    chosen.dedup();
    let small = d.induced_subdigraph(&chosen);
    for (name, pattern) in [("T202", catalog::t202()), ("T1111", catalog::t1111()), ("T10101", catalog::t10101())] {
        if let Some(m) = find_induced(&small, &pattern) {
            return Some(named(name, m.iter().map(|&i| chosen[i]).collect()));
        }
    }
    None
}

/// Reflexive multipartite tournaments: strongly chordal iff the underlying
/// graph is complete split, the orientation is acyclic, and all stable
/// vertices but at most one lie in two consecutive levels.
pub fn recognize_reflexive_multipartite(d: &Digraph) -> Result<RecognitionResult> {
    if let Some(v) = (0..d.n()).find(|&v| !d.has_loop(v)) {
        return Err(precondition(format!("vertex {v} has no loop")));
    }
    if !d.is_oriented() {
        return Err(precondition("opposite arcs between two vertices"));
    }
    let parts = multipartite_parts(d)
        .map_err(|[u, v, w]| precondition(format!("vertices {u}, {v}, {w} induce K1+K2 in the underlying graph")))?;
    let class = Class::ReflexiveMultipartite;
    let patterns = multipartite_patterns();
    if d.n() <= 2 {
        return Ok(small_case(d, class, &patterns));
    }
    let big: Vec<&Vec<usize>> = parts.iter().filter(|p| p.len() >= 2).collect();
    if big.len() >= 2 {
        let vertices = vec![big[0][0], big[1][0], big[0][1], big[1][1]];
        return Ok(RecognitionResult::no(class, Certificate::StructuralViolation { kind: ViolationKind::NotCompleteSplit, vertices }));
    }
    if let Some(cycle) = directed_cycle(d) {
        let cert = if cycle.len() == 3 {
            named("REFLEXIVE_C3", cycle)
        } else {
            Certificate::StructuralViolation { kind: ViolationKind::DirectedCycle, vertices: cycle }
        };
        return Ok(RecognitionResult::no(class, cert));
    }
    let stable: Vec<usize> = big.first().map(|p| p.to_vec()).unwrap_or_default();
    let clique: Vec<usize> = (0..d.n()).filter(|v| !stable.contains(v)).collect();
    let topo = clique_order(d, &clique)?;
    let levels: Vec<(usize, usize)> = self::levels(d, &clique, &stable)?.into_iter().collect();
    let candidates = multipartite_candidates(&topo, &levels);
    for ord in &candidates {
        if let Some(r) = yes_if_strong(d, class, ord.clone()) {
            return Ok(r);
        }
    }
    if candidates.is_empty() {
        if let Some(cert) = level_obstruction(d, &topo, &levels) {
            return Ok(RecognitionResult::no(class, cert));
        }
    }
    Ok(decide_by_search(d, class, &patterns))
}

// -------------------------------------------------------- balanced digraphs

/// Outcome of [`layering`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layering {
    /// Every arc goes from some layer to the next one.
    Layers(Vec<Vec<usize>>),
    /// A closed walk with unequal numbers of forward and backward arcs.
    Unbalanced(Vec<usize>),
}

/// Integer potentials per weakly connected component, `pot(v) = pot(u) + 1` for
/// every arc `(u, v)`, shifted to start at 0 in each component.
pub fn layering(d: &Digraph) -> Result<Layering> {
    if !d.is_irreflexive() {
        return Err(precondition("balanced digraphs have no loops"));
    }
    let n = d.n();
    let t = d.matrix().transpose();
    let mut pot: Vec<Option<isize>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut layer_of = vec![0usize; n];
    for root in 0..n {
        if pot[root].is_some() {
            continue;
        }
        pot[root] = Some(0);
        let mut comp = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let pu = pot[u].expect("visited");
            let nbrs = d.out_iter(u).map(|w| (w, 1)).chain(t.row_ones(u).map(|w| (w, -1)));
            for (w, step) in nbrs {
                match pot[w] {
                    None => {
                        pot[w] = Some(pu + step);
                        parent[w] = u;
                        comp.push(w);
                        queue.push_back(w);
                    }
                    Some(pw) if pw != pu + step => {
                        let path = |mut v: usize| {
                            let mut p = vec![v];
                            while v != root {
                                v = parent[v];
                                p.push(v);
                            }
                            p.reverse();
                            p
                        };
                        let mut walk = path(u);
                        let back = path(w);
                        walk.extend(back.iter().rev().take(back.len() - 1));
                        return Ok(Layering::Unbalanced(walk));
                    }
                    Some(_) => {}
                }
            }
        }
        let low = comp.iter().map(|&v| pot[v].expect("visited")).min().expect("non-empty");
        for &v in &comp {
            layer_of[v] = (pot[v].expect("visited") - low) as usize;
        }
    }
    let k = layer_of.iter().max().map_or(0, |&m| m + 1);
    let mut layers = vec![Vec::new(); k];
    for v in 0..n {
        layers[layer_of[v]].push(v);
    }
    Ok(Layering::Layers(layers))
}

fn block(d: &Digraph, rows: &[usize], cols: &[usize]) -> BitMatrix {
    let mut m = BitMatrix::new(rows.len(), cols.len());
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            m.set(i, j, d.has_arc(r, c));
        }
    }
    m
}

/// Chains Γ-free orders through consecutive layers: the order of one layer fixes
/// the next by the column precedences it forces, to the right as columns and
/// to the left as rows.
fn chain_orders(blocks: &[BitMatrix], start: usize, first: Vec<usize>) -> Option<Vec<Vec<usize>>> {
    let k = blocks.len() + 1;
    let mut orders: Vec<Option<Vec<usize>>> = vec![None; k];
    orders[start] = Some(first);
    for q in start..k - 1 {
        let next = columns_for_rows(&blocks[q], orders[q].as_ref().expect("set"))?;
        orders[q + 1] = Some(next);
    }
    for q in (0..start).rev() {
        let prev = columns_for_rows(&blocks[q].transpose(), orders[q + 1].as_ref().expect("set"))?;
        orders[q] = Some(prev);
    }
    orders.into_iter().collect()
}

fn fence_patterns(n: usize) -> Vec<Obstruction> {
    (6..=n).step_by(2).filter_map(|len| catalog::by_name(&format!("FENCE_{len}")).ok()).collect()
}

/// Balanced digraphs. A layer pair whose bigraph is not chordal yields an
/// induced fence. Otherwise the layer orders are chained and checked, with
/// exhaustive search as the fallback: chordal layer bigraphs do not guarantee
/// a strong ordering.
pub fn recognize_balanced(d: &Digraph) -> Result<RecognitionResult> {
    let layers = match layering(d)? {
        Layering::Layers(l) => l,
        Layering::Unbalanced(walk) => return Err(precondition(format!("not balanced: closed walk {walk:?}"))),
    };
    let class = Class::Balanced;
    let patterns = fence_patterns(d.n());
    if d.n() <= 2 {
        return Ok(small_case(d, class, &patterns));
    }
    let blocks: Vec<BitMatrix> = layers.windows(2).map(|w| block(d, &w[0], &w[1])).collect();
    let mut starts: Vec<(usize, Vec<usize>)> = Vec::new();
    for (p, m) in blocks.iter().enumerate() {
        match gamma_free_matrix(m) {
            BiadjacencyOrdering::Found { rows, cols } => {
                starts.push((p, rows));
                starts.push((p + 1, cols));
            }
            BiadjacencyOrdering::Impossible => {
                let cert = fence_certificate(m, &layers[p], &layers[p + 1]);
                return Ok(match cert {
                    Certificate::StructuralViolation { kind: ViolationKind::Fence, .. } => RecognitionResult::no(class, cert),
                    _ => RecognitionResult::uncertified(class, cert),
                });
            }
            BiadjacencyOrdering::Unresolved => return Ok(decide_by_oracle(d, class, &patterns)),
        }
    }
    if blocks.is_empty() {
        return Ok(RecognitionResult::yes(class, Ordering::identity(d.n())));
    }
    for (start, first) in starts {
        if let Some(orders) = chain_orders(&blocks, start, first) {
            let ord: Vec<usize> = orders.iter().zip(&layers).flat_map(|(o, l)| o.iter().map(|&i| l[i])).collect();
            if let Some(r) = yes_if_strong(d, class, ord) {
                return Ok(r);
            }
        }
    }
    Ok(decide_by_oracle(d, class, &patterns))
}

fn fence_certificate(m: &BitMatrix, rows: &[usize], cols: &[usize]) -> Certificate {
    match is_totally_balanced_bounded(m, usize::MAX) {
        Ok(Some(w)) => {
            let vertices = w.rows.iter().zip(&w.cols).flat_map(|(&r, &c)| [rows[r], cols[c]]).collect();
            Certificate::StructuralViolation { kind: ViolationKind::Fence, vertices }
        }
        _ => Certificate::StructuralViolation { kind: ViolationKind::FenceSearchFailed, vertices: Vec::new() },
    }
}

// --------------------------------------------------------------- dispatch

fn is_bipartite_tournament(d: &Digraph) -> bool {
    d.n() >= 2 && bipartition(d).is_ok()
}

/// Classifies the input and runs the matching recognizer; anything else goes
/// to exhaustive search under the budget.
pub fn recognize_auto(d: &Digraph) -> RecognitionResult {
    if d.n() <= 1 {
        return RecognitionResult::yes(Class::Trivial, Ordering::identity(d.n()));
    }
    let attempt = if d.is_tournament() {
        if d.is_irreflexive() {
            recognize_irreflexive_tournament(d)
        } else {
            recognize_tournament_with_loops(d)
        }
    } else if is_bipartite_tournament(d) {
        recognize_irreflexive_bipartite(d)
    } else if missing_pair(d).is_ok() {
        recognize_tournament_minus_arc(d)
    } else if d.is_reflexive() && d.is_oriented() && multipartite_parts(d).is_ok() {
        recognize_reflexive_multipartite(d)
    } else if d.is_irreflexive() && matches!(layering(d), Ok(Layering::Layers(_))) {
        recognize_balanced(d)
    } else {
        Err(precondition("no recognized class"))
    };
    attempt.unwrap_or_else(|_| {
        let mut all = catalog::catalog();
        all.extend(catalog::validated_t_circ().iter().cloned());
        decide_by_oracle(d, Class::Oracle, &all)
    })
}

// ------------------------------------------------------------ certificates

fn is_induced_fence(d: &Digraph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 6 || len % 2 == 1 || cycle.iter().any(|&v| v >= d.n() || d.has_loop(v)) {
        return false;
    }
    let mut s = cycle.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != len {
        return false;
    }
    for a in 0..len {
        for b in a + 1..len {
            let consecutive = b == a + 1 || (a == 0 && b == len - 1);
            if d.adjacent(cycle[a], cycle[b]) != consecutive {
                return false;
            }
        }
    }
    (0..len).all(|i| {
        let (p, v, q) = (cycle[(i + len - 1) % len], cycle[i], cycle[(i + 1) % len]);
        let through = (d.has_arc(p, v) && d.has_arc(v, q)) || (d.has_arc(q, v) && d.has_arc(v, p));
        !through && !(d.has_arc(p, v) && d.has_arc(v, p))
    })
}

/// Re-checks a certificate against the digraph, independently of how it was found.
pub fn verify_certificate(d: &Digraph, cert: &Certificate) -> bool {
    match cert {
        Certificate::NamedObstruction { name, vertices } => {
            catalog::by_name(name).is_ok_and(|o| verify_embedding(d, &o.pattern, vertices))
        }
        Certificate::ArcDisjointTriangles { first, second } => {
            catalog::is_directed_triangle(d, first)
                && catalog::is_directed_triangle(d, second)
                && catalog::arc_disjoint(first, second)
        }
        Certificate::StructuralViolation { kind, vertices } => match kind {
            ViolationKind::NotCompleteSplit => {
                vertices.len() == 4 && {
                    let v = |i: usize| vertices[i % 4];
                    (0..4).all(|i| d.adjacent(v(i), v(i + 1))) && !d.adjacent(v(0), v(2)) && !d.adjacent(v(1), v(3))
                }
            }
            ViolationKind::DirectedCycle => {
                vertices.len() >= 2
                    && vertices.iter().all(|&v| v < d.n())
                    && (0..vertices.len()).all(|i| d.has_arc(vertices[i], vertices[(i + 1) % vertices.len()]))
            }
            ViolationKind::BothOneWayBigraphsConnected => bipartition(d).is_ok_and(|(xs, ys)| {
                one_way_bigraphs(d, &xs, &ys).is_ok_and(|(bx, by)| bx.components().len() == 1 && by.components().len() == 1)
            }),
            ViolationKind::Fence => is_induced_fence(d, vertices),
            ViolationKind::FenceSearchFailed => false,
        },
        Certificate::OracleWitness { vertices, .. } => {
            vertices.iter().all(|&v| v < d.n())
                && find_strong_ordering(&d.induced_subdigraph(vertices), None) == OracleOutcome::NoOrdering
        }
        Certificate::OracleExhausted => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{gen_fence, gen_tt, gen_tt_star};

    fn strong(d: &Digraph, r: &RecognitionResult) -> bool {
        r.is_yes() && check_strong_ordering(d, r.ordering.as_ref().unwrap()).unwrap().is_none()
    }

    fn reflexive(d: &Digraph) -> Digraph {
        d.with_loops(&(0..d.n()).collect::<Vec<_>>())
    }

    #[test]
    fn irreflexive_tournament_examples() {
        let tt6 = gen_tt(6).unwrap();
        let r = recognize_irreflexive_tournament(&tt6).unwrap();
        assert!(strong(&tt6, &r));
        let ord = r.ordering.unwrap();
        assert!(ord.as_slice().windows(2).all(|w| tt6.in_degree(w[0]) < tt6.in_degree(w[1])));
        let t5 = catalog::tournament_obstruction(5);
        let r = recognize_irreflexive_tournament(&t5).unwrap();
        assert!(matches!(r.certificate, Some(Certificate::ArcDisjointTriangles { .. })));
        assert!(verify_certificate(&t5, r.certificate.as_ref().unwrap()));
        let star = gen_tt_star(4).unwrap();
        assert!(strong(&star, &recognize_irreflexive_tournament(&star).unwrap()));
        assert!(recognize_irreflexive_tournament(&reflexive(&tt6)).is_err());
    }

    #[test]
    fn loop_tournament_examples() {
        let t0 = catalog::t0();
        let r = recognize_tournament_with_loops(&t0).unwrap();
        assert_eq!(r.certificate, Some(named("T0", vec![0, 1, 2, 3])));
        let c3 = reflexive(&Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap());
        let r = recognize_tournament_with_loops(&c3).unwrap();
        assert!(matches!(&r.certificate, Some(Certificate::NamedObstruction { name, .. }) if name == "REFLEXIVE_C3"));
        let tt5 = reflexive(&gen_tt(5).unwrap());
        let r = recognize_tournament_with_loops(&tt5).unwrap();
        assert_eq!(r.ordering.unwrap().as_slice(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn one_way_bigraph_examples() {
        let b1 = catalog::bipartite_obstruction(1);
        let (xs, ys) = bipartition(&b1).unwrap();
        let (bx, by) = one_way_bigraphs(&b1, &xs, &ys).unwrap();
        for b in [&bx, &by] {
            let degrees: Vec<usize> = (0..b.x_size()).map(|r| b.biadj.row_count(r)).collect();
            assert_eq!(b.components().len(), 1);
            assert_eq!(b.edge_count(), 6);
            assert!(degrees.iter().all(|&k| k <= 2));
        }
        let c4 = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (bx, _) = one_way_bigraphs(&c4, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(bx.components().len(), 2);
        assert_eq!(bx.edge_count(), 2);
        let full = Digraph::from_arcs(3, &[(0, 1), (0, 2)]).unwrap();
        let (bx, by) = one_way_bigraphs(&full, &[0], &[1, 2]).unwrap();
        assert_eq!((bx.edge_count(), by.edge_count()), (2, 0));
        assert!(one_way_bigraphs(&full, &[0, 1], &[2]).is_err());
    }

    #[test]
    fn chain_examples() {
        let k23 = Bigraph::from_matrix(BitMatrix::from_rows(&[vec![true; 3], vec![true; 3]]).unwrap());
        assert!(matches!(is_bipartite_chain(&k23), ChainCheck::Chain { .. }));
        let two_k2 = Bigraph::from_matrix(BitMatrix::from_rows(&[vec![true, false], vec![false, true]]).unwrap());
        assert!(matches!(is_bipartite_chain(&two_k2), ChainCheck::TwoK2 { .. }));
        let p7 = BitMatrix::from_rows(&[
            vec![true, false, false, false],
            vec![true, true, false, false],
            vec![false, true, true, false],
        ])
        .unwrap();
        match is_bipartite_chain(&Bigraph::from_matrix(p7.clone())) {
            ChainCheck::TwoK2 { x1, y1, x2, y2 } => {
                assert!(p7.get(x1, y1) && p7.get(x2, y2) && !p7.get(x1, y2) && !p7.get(x2, y1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bipartite_examples() {
        let b1 = catalog::bipartite_obstruction(1);
        assert!(!recognize_irreflexive_bipartite(&b1).unwrap().is_yes());
        let c4 = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = recognize_irreflexive_bipartite(&c4).unwrap();
        assert!(strong(&c4, &r));
        let m = c4.ordered_matrix(r.ordering.as_ref().unwrap());
        assert!((0..4).all(|i| m.row_count(i) == 1));
        let b4 = catalog::bipartite_obstruction(4);
        let r = recognize_irreflexive_bipartite(&b4).unwrap();
        assert!(matches!(&r.certificate, Some(Certificate::NamedObstruction { name, .. }) if name == "B4"));
        assert!(verify_certificate(&b4, r.certificate.as_ref().unwrap()));
    }

    #[test]
    fn critical_arc_examples() {
        assert_eq!(is_critical_arc(6, None, 2, 4).unwrap(), None);
        assert_eq!(is_critical_arc(6, Some((1, 6)), 2, 4).unwrap(), Some(5));
        assert_eq!(is_critical_arc(6, Some((1, 6)), 1, 6).unwrap(), None);
        assert!(is_critical_arc(6, Some((1, 6)), 0, 4).is_err());
    }

    fn tt_minus(n: usize, reversed: Option<(usize, usize)>, gone: (usize, usize)) -> Digraph {
        let mut d = gen_tt(n).unwrap();
        if let Some((a, b)) = reversed {
            d.remove_arc(a, b);
            d.add_arc(b, a);
        }
        d.remove_arc(gone.0, gone.1);
        d
    }

    #[test]
    fn minus_arc_examples() {
        let d = tt_minus(4, None, (1, 2));
        assert!(strong(&d, &recognize_tournament_minus_arc(&d).unwrap()));
        let d = tt_minus(6, Some((0, 5)), (1, 3));
        let r = recognize_tournament_minus_arc(&d).unwrap();
        assert!(!r.is_yes() && verify_certificate(&d, r.certificate.as_ref().unwrap()));
        assert!(find_induced(&d, &catalog::minus_arc_obstruction(10)).is_some());
        let d = tt_minus(6, None, (1, 4));
        assert!(strong(&d, &recognize_tournament_minus_arc(&d).unwrap()));
    }

    #[test]
    fn level_examples() {
        let t10101 = catalog::t10101();
        let l = levels(&t10101, &[0, 1, 2, 3], &[4, 5, 6]).unwrap();
        assert_eq!(l.values().copied().collect::<Vec<_>>(), vec![0, 2, 4]);
        let t202 = catalog::t202();
        let l = levels(&t202, &[0, 1], &[2, 3, 4, 5]).unwrap();
        let mut got: Vec<usize> = l.values().copied().collect();
        got.sort_unstable();
        assert_eq!(got, vec![0, 0, 2, 2]);
        assert!(levels(&t202, &[0, 1], &[]).unwrap().is_empty());
    }

    #[test]
    fn multipartite_examples() {
        let t1111 = catalog::t1111();
        let r = recognize_reflexive_multipartite(&t1111).unwrap();
        assert!(matches!(&r.certificate, Some(Certificate::NamedObstruction { name, .. }) if name == "T1111"));
        let tt5 = reflexive(&gen_tt(5).unwrap());
        let r = recognize_reflexive_multipartite(&tt5).unwrap();
        assert_eq!(r.ordering.unwrap().as_slice(), &[0, 1, 2, 3, 4]);
        let (d, _) = crate::suites::figure_instance();
        let r = recognize_reflexive_multipartite(&d).unwrap();
        assert_eq!(r.ordering.unwrap().as_slice(), &[6, 7, 8, 9, 3, 2, 1, 0, 4, 10, 5]);
        assert!(recognize_reflexive_multipartite(&gen_tt(3).unwrap()).is_err());
        let c4 = reflexive(&Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap());
        let r = recognize_reflexive_multipartite(&c4).unwrap();
        assert!(verify_certificate(&c4, r.certificate.as_ref().unwrap()));
    }

    #[test]
    fn layering_examples() {
        let path = Digraph::from_arcs(3, &[(0, 1), (2, 1)]).unwrap();
        assert_eq!(layering(&path).unwrap(), Layering::Layers(vec![vec![0, 2], vec![1]]));
        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(layering(&c3).unwrap(), Layering::Unbalanced(_)));
        match layering(&gen_fence(6).unwrap()).unwrap() {
            Layering::Layers(l) => assert_eq!(l.iter().map(Vec::len).collect::<Vec<_>>(), vec![3, 3]),
            other => panic!("{other:?}"),
        }
        assert!(layering(&reflexive(&path)).is_err());
    }

    #[test]
    fn balanced_examples() {
        let fence = gen_fence(6).unwrap();
        let r = recognize_balanced(&fence).unwrap();
        let cert = r.certificate.unwrap();
        assert!(matches!(cert, Certificate::StructuralViolation { kind: ViolationKind::Fence, .. }));
        assert!(verify_certificate(&fence, &cert));
        let chain = Digraph::from_arcs(5, &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4)]).unwrap();
        assert!(strong(&chain, &recognize_balanced(&chain).unwrap()));
        let tree = Digraph::from_arcs(6, &[(0, 1), (2, 1), (2, 3), (4, 3), (3, 5)]).unwrap();
        assert!(strong(&tree, &recognize_balanced(&tree).unwrap()));
        let known = crate::suites::layered_counterexample();
        let r = recognize_balanced(&known).unwrap();
        assert!(!r.is_yes() && verify_certificate(&known, r.certificate.as_ref().unwrap()));
    }

    #[test]
    fn auto_dispatch() {
        assert_eq!(recognize_auto(&catalog::tournament_obstruction(5)).class_used, Class::Tournament);
        assert_eq!(recognize_auto(&catalog::bipartite_obstruction(1)).class_used, Class::Bipartite);
        let mut odd = catalog::t0();
        odd.remove_arc(0, 1);
        odd.add_arc(2, 0);
        assert_eq!(recognize_auto(&odd).class_used, Class::Oracle);
        assert_eq!(recognize_auto(&Digraph::new(1)).verdict, Verdict::Yes);
    }
}
