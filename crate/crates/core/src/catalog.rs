//! Named minimal obstructions, parametric families and induced-embedding search.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::gamma::find_strong_ordering;

/// The class of digraphs whose characterization lists the obstruction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// T0: a tournament with two reflexive vertices.
    MixedTournament,
    /// T1..T6, irreflexive tournaments.
    Tournament,
    /// Reflexive directed triangle.
    ReflexiveTournament,
    /// Loop-decorated members of the tournament family.
    LoopTournament,
    /// B1..B4, irreflexive bipartite tournaments.
    Bipartite,
    /// S1..S19, irreflexive tournaments minus one arc.
    MinusArc,
    /// T202, T1111, T10101.
    ReflexiveMultipartite,
    /// Fences, balanced digraphs.
    Balanced,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub name: String,
    pub pattern: Digraph,
    pub family: Family,
}

type Arcs = &'static [(usize, usize)];

const T1: Arcs = &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 0), (4, 1)];
const T2: Arcs = &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3), (3, 1), (3, 4), (4, 0), (4, 2)];
const T3: Arcs = &[(0, 2), (0, 4), (1, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)];
const T4: Arcs = &[(0, 1), (0, 4), (1, 2), (1, 4), (2, 0), (2, 4), (3, 0), (3, 1), (3, 2), (4, 3)];
const T5: Arcs = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3), (2, 4), (3, 0), (4, 1)];
const T6: Arcs = &[
    (0, 5), (1, 0), (2, 0), (2, 1), (2, 4), (2, 5), (3, 0), (3, 1),
    (3, 2), (3, 5), (4, 0), (4, 1), (4, 3), (4, 5), (5, 1),
];

// Bipartite obstructions are drawn with vertices 1..k; stored 0-based below.
const B1: Arcs = &[
    (0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6),
    (4, 2), (4, 3), (5, 0), (5, 3), (6, 0), (6, 1),
];
const B2: Arcs = &[
    (0, 5), (1, 4), (1, 5), (1, 6), (2, 5), (2, 6), (2, 7), (3, 6),
    (4, 0), (4, 2), (4, 3), (5, 3), (6, 0), (7, 0), (7, 1), (7, 3),
];
const B3: Arcs = &[
    (0, 4), (0, 5), (1, 5), (2, 5), (2, 6), (3, 6),
    (4, 1), (4, 2), (4, 3), (5, 3), (6, 0), (6, 1),
];
const B4: Arcs = &[(0, 3), (1, 4), (2, 5), (3, 1), (3, 2), (4, 0), (4, 2), (5, 0), (5, 1)];

const S: [Arcs; 19] = [
    &[(0, 4), (1, 3), (2, 0), (2, 1), (3, 0), (3, 2), (4, 1), (4, 2), (4, 3)],
    &[(0, 2), (0, 4), (1, 3), (2, 1), (3, 0), (3, 2), (4, 1), (4, 2), (4, 3)],
    &[(0, 3), (0, 4), (1, 3), (2, 0), (2, 1), (3, 2), (4, 1), (4, 2), (4, 3)],
    &[(0, 2), (0, 4), (1, 4), (2, 1), (3, 0), (3, 1), (3, 2), (4, 2), (4, 3)],
    &[(0, 3), (0, 4), (1, 4), (2, 0), (2, 1), (3, 1), (3, 2), (4, 2), (4, 3)],
    &[(0, 3), (0, 4), (1, 2), (1, 4), (2, 0), (3, 1), (3, 2), (4, 2), (4, 3)],
    &[(0, 2), (0, 3), (2, 1), (2, 4), (3, 1), (3, 2), (4, 0), (4, 1), (4, 3)],
    &[(0, 2), (0, 3), (0, 4), (2, 1), (2, 4), (3, 1), (3, 2), (4, 1), (4, 3)],
    &[(0, 3), (1, 2), (2, 0), (2, 4), (3, 1), (3, 2), (4, 0), (4, 1), (4, 3)],
    &[(0, 2), (0, 3), (1, 2), (2, 4), (3, 1), (3, 2), (4, 0), (4, 1), (4, 3)],
    &[(0, 2), (0, 4), (1, 2), (2, 4), (3, 0), (3, 1), (3, 2), (4, 1), (4, 3)],
    &[(0, 3), (0, 4), (1, 2), (2, 0), (2, 4), (3, 1), (3, 2), (4, 1), (4, 3)],
    &[(0, 2), (0, 3), (0, 4), (1, 2), (2, 4), (3, 1), (3, 2), (4, 1), (4, 3)],
    &[(0, 2), (0, 4), (1, 2), (1, 3), (2, 4), (3, 0), (3, 2), (4, 1), (4, 3)],
    &[
        (0, 2), (0, 3), (0, 5), (1, 3), (2, 1), (3, 2), (4, 0),
        (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4),
    ],
    &[
        (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 4),
        (3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4),
    ],
    &[
        (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4),
        (2, 4), (3, 2), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4),
    ],
    &[
        (0, 3), (2, 0), (2, 1), (2, 3), (2, 5), (3, 1), (4, 0),
        (4, 1), (4, 2), (4, 3), (5, 0), (5, 1), (5, 3), (5, 4),
    ],
    &[
        (0, 2), (0, 3), (2, 1), (2, 3), (2, 5), (3, 1), (4, 0),
        (4, 1), (4, 2), (4, 3), (5, 0), (5, 1), (5, 3), (5, 4),
    ],
];

fn build(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    Digraph::from_arcs(n, arcs).expect("catalogue arcs are in range")
}

fn reflexive(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    let mut d = build(n, arcs);
    for v in 0..n {
        d.add_arc(v, v);
    }
    d
}

pub fn t0() -> Digraph {
    build(4, &[(0, 0), (3, 3), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 0)])
}

/// The irreflexive tournament obstructions T1..T6 (`index` in 1..=6).
pub fn tournament_obstruction(index: usize) -> Digraph {
    match index {
        1 => build(5, T1),
        2 => build(5, T2),
        3 => build(5, T3),
        4 => build(5, T4),
        5 => build(5, T5),
        6 => build(6, T6),
        _ => panic!("tournament obstructions are T1..T6"),
    }
}

/// S1..S19 (`index` in 1..=19).
pub fn minus_arc_obstruction(index: usize) -> Digraph {
    let arcs = S[index - 1];
    build(if index <= 14 { 5 } else { 6 }, arcs)
}

/// B1..B4 (`index` in 1..=4).
pub fn bipartite_obstruction(index: usize) -> Digraph {
    match index {
        1 => build(7, B1),
        2 => build(8, B2),
        3 => build(7, B3),
        4 => build(6, B4),
        _ => panic!("bipartite obstructions are B1..B4"),
    }
}

/// Vertices 0,1 form the clique `t1 -> t2`; 2..5 are `s1..s4`.
pub fn t202() -> Digraph {
    reflexive(6, &[(0, 1), (2, 0), (2, 1), (3, 0), (3, 1), (0, 4), (1, 4), (0, 5), (1, 5)])
}

/// Vertices 0..2 are `t1..t3`; 3..6 are `s1..s4` with levels 0, 1, 2, 3.
pub fn t1111() -> Digraph {
    reflexive(
        7,
        &[
            (0, 1), (1, 2), (0, 2),
            (3, 0), (3, 1), (3, 2),
            (0, 4), (4, 1), (4, 2),
            (0, 5), (1, 5), (5, 2),
            (0, 6), (1, 6), (2, 6),
        ],
    )
}

/// Vertices 0..3 are `t1..t4`; 4..6 are `s1..s3` with levels 0, 2, 4.
pub fn t10101() -> Digraph {
    reflexive(
        7,
        &[
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
            (4, 0), (4, 1), (4, 2), (4, 3),
            (0, 5), (1, 5), (5, 2), (5, 3),
            (0, 6), (1, 6), (2, 6), (3, 6),
        ],
    )
}

pub fn reflexive_c3() -> Digraph {
    reflexive(3, &[(0, 1), (1, 2), (2, 0)])
}

/// Transitive tournament with `0 -> 1 -> ... -> n-1`.
pub fn gen_tt(n: usize) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::Precondition("TT_n needs n >= 1".into()));
    }
    let arcs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Digraph::from_arcs(n, &arcs)
}

/// Transitive tournament with the arc from the source to the sink reversed.
pub fn gen_tt_star(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::Precondition("TT*_n needs n >= 3".into()));
    }
    let mut d = gen_tt(n)?;
    d.remove_arc(0, n - 1);
    d.add_arc(n - 1, 0);
    Ok(d)
}

/// Even cycle `0, 1, ..., len-1` where each odd vertex points to both neighbours.
pub fn gen_fence(len: usize) -> Result<Digraph> {
    if len < 6 || len % 2 == 1 {
        return Err(Error::Precondition("a fence has even length at least 6".into()));
    }
    let mut d = Digraph::new(len);
    for v in (1..len).step_by(2) {
        d.add_arc(v, v - 1);
        d.add_arc(v, (v + 1) % len);
    }
    Ok(d)
}

fn entry(name: &str, pattern: Digraph, family: Family) -> Obstruction {
    Obstruction { name: name.to_string(), pattern, family }
}

/// Every fixed obstruction, plus fences of length 6, 8 and 10.
pub fn catalog() -> Vec<Obstruction> {
    let mut out = vec![entry("T0", t0(), Family::MixedTournament)];
    for i in 1..=6 {
        out.push(entry(&format!("T{i}"), tournament_obstruction(i), Family::Tournament));
    }
    out.push(entry("REFLEXIVE_C3", reflexive_c3(), Family::ReflexiveTournament));
    for i in 1..=4 {
        out.push(entry(&format!("B{i}"), bipartite_obstruction(i), Family::Bipartite));
    }
    for i in 1..=19 {
        out.push(entry(&format!("S{i}"), minus_arc_obstruction(i), Family::MinusArc));
    }
    out.push(entry("T202", t202(), Family::ReflexiveMultipartite));
    out.push(entry("T1111", t1111(), Family::ReflexiveMultipartite));
    out.push(entry("T10101", t10101(), Family::ReflexiveMultipartite));
    for len in [6, 8, 10] {
        out.push(entry(&format!("FENCE_{len}"), gen_fence(len).expect("valid length"), Family::Balanced));
    }
    out
}

/// Looks up a catalogue entry; `FENCE_<len>` accepts any valid length.
pub fn by_name(name: &str) -> Result<Obstruction> {
    if let Some(len) = name.strip_prefix("FENCE_") {
        let len: usize = len.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return Ok(entry(name, gen_fence(len)?, Family::Balanced));
    }
    if name.starts_with("TCIRC_") {
        if let Some(o) = validated_t_circ().iter().find(|o| o.name == name) {
            return Ok(o.clone());
        }
        return generate_t_circ(6).into_iter().find(|o| o.name == name).ok_or_else(|| Error::UnknownName(name.to_string()));
    }
    catalog().into_iter().find(|o| o.name == name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Whether two digraphs are isomorphic (loops included). Exponential; small inputs only.
pub fn isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.n() == b.n() && a.arc_count() == b.arc_count() && find_induced(a, b).is_some()
}

fn canonical_key(d: &Digraph) -> Vec<bool> {
    let n = d.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let key: Vec<bool> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| d.has_arc(perm[a], perm[b])).collect();
        if best.as_ref().is_none_or(|k| key < *k) {
            best = Some(key);
        }
        if !crate::gamma::next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

/// Loop decorations of T1..T6 on vertex sets inducing a transitive
/// subtournament and containing no induced T0, up to isomorphism, together
/// with T0 and the reflexive triangle.
pub fn generate_t_circ(max_n: usize) -> Vec<Obstruction> {
    let mut out = Vec::new();
    if max_n >= 4 {
        out.push(entry("T0", t0(), Family::MixedTournament));
    }
    if max_n >= 3 {
        out.push(entry("REFLEXIVE_C3", reflexive_c3(), Family::ReflexiveTournament));
    }
    let t0 = t0();
    for i in 1..=6 {
        let base = tournament_obstruction(i);
        let n = base.n();
        if n > max_n {
            continue;
        }
        let mut seen = HashSet::new();
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            let loops: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if !base.induced_subdigraph(&loops).strong_components().iter().all(|c| c.len() == 1) {
                continue;
            }
            let d = base.with_loops(&loops);
            if find_induced(&d, &t0).is_some() {
                continue;
            }
            if seen.insert(canonical_key(&d)) {
                let name = if loops.is_empty() { format!("T{i}") } else { format!("TCIRC_{i}_{count}") };
                if !loops.is_empty() {
                    count += 1;
                }
                out.push(entry(&name, d, Family::LoopTournament));
            }
        }
    }
    out
}

/// Members of [`generate_t_circ`]`(6)` that have no strong ordering. The other
/// members (some loop decorations of T1) are strongly chordal.
pub fn validated_t_circ() -> &'static [Obstruction] {
    static CELL: OnceLock<Vec<Obstruction>> = OnceLock::new();
    CELL.get_or_init(|| {
        generate_t_circ(6).into_iter().filter(|o| !find_strong_ordering(&o.pattern, None).is_found()).collect()
    })
}

/// Lexicographically first induced embedding of `pattern` into `d`: `map[p]` is
/// the host vertex of pattern vertex `p`. Arcs, non-arcs and loops must match.
pub fn find_induced(d: &Digraph, pattern: &Digraph) -> Option<Vec<usize>> {
    find_induced_extending(d, pattern, &[])
}

/// Like [`find_induced`], with pattern vertices `0..prefix.len()` already
/// mapped to `prefix`.
pub fn find_induced_extending(d: &Digraph, pattern: &Digraph, prefix: &[usize]) -> Option<Vec<usize>> {
    let (n, k) = (d.n(), pattern.n());
    if k > n || prefix.len() > k || prefix.iter().any(|&v| v >= n) {
        return None;
    }
    if !verify_embedding(d, &pattern.induced_subdigraph(&(0..prefix.len()).collect::<Vec<_>>()), prefix) {
        return None;
    }
    let host_deg: Vec<(usize, usize)> = (0..n).map(|v| (d.out_degree(v), d.in_degree(v))).collect();
    let pat_deg: Vec<(usize, usize)> = (0..k).map(|v| (pattern.out_degree(v), pattern.in_degree(v))).collect();
    let mut map = prefix.to_vec();
    let mut used = vec![false; n];
    for &v in prefix {
        used[v] = true;
    }
    fn rec(
        d: &Digraph,
        p: &Digraph,
        host_deg: &[(usize, usize)],
        pat_deg: &[(usize, usize)],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = map.len();
        if i == p.n() {
            return true;
        }
        for v in 0..d.n() {
            if used[v]
                || d.has_loop(v) != p.has_loop(i)
                || host_deg[v].0 < pat_deg[i].0
                || host_deg[v].1 < pat_deg[i].1
            {
                continue;
            }
            let fits = map
                .iter()
                .enumerate()
                .all(|(j, &u)| d.has_arc(u, v) == p.has_arc(j, i) && d.has_arc(v, u) == p.has_arc(i, j));
            if !fits {
                continue;
            }
            map.push(v);
            used[v] = true;
            if rec(d, p, host_deg, pat_deg, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    rec(d, pattern, &host_deg, &pat_deg, &mut map, &mut used).then_some(map)
}

/// Checks that `map` is an injective induced embedding of `pattern` into `d`.
pub fn verify_embedding(d: &Digraph, pattern: &Digraph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&v| v >= d.n()) {
        return false;
    }
    let mut s = map.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != map.len() {
        return false;
    }
    (0..map.len()).all(|a| (0..map.len()).all(|b| d.has_arc(map[a], map[b]) == pattern.has_arc(a, b)))
}

/// A directed triangle written from its smallest vertex along its arcs.
pub type Triangle = [usize; 3];

/// Directed triangles ordered by their sorted vertex triples.
pub fn directed_triangles(d: &Digraph) -> Vec<Triangle> {
    let n = d.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a) {
                    out.push([a, b, c]);
                } else if d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a) {
                    out.push([a, c, b]);
                }
            }
        }
    }
    out
}

fn triangle_arcs(t: &Triangle) -> [(usize, usize); 3] {
    [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
}

pub fn arc_disjoint(a: &Triangle, b: &Triangle) -> bool {
    let bs = triangle_arcs(b);
    triangle_arcs(a).iter().all(|e| !bs.contains(e))
}

pub fn is_directed_triangle(d: &Digraph, t: &Triangle) -> bool {
    t[0] != t[1] && t[1] != t[2] && t[0] != t[2] && triangle_arcs(t).iter().all(|&(u, v)| d.has_arc(u, v))
}

/// First pair of arc-disjoint directed triangles, scanning pairs in the order
/// of [`directed_triangles`].
pub fn find_arc_disjoint_triangles(d: &Digraph) -> Option<(Triangle, Triangle)> {
    let ts = directed_triangles(d);
    for (i, a) in ts.iter().enumerate() {
        for b in &ts[i + 1..] {
            if arc_disjoint(a, b) {
                return Some((*a, *b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_figures() {
        for o in catalog() {
            let n = o.pattern.n();
            let loopless = o.pattern.without_loops().arc_count();
            match o.family {
                Family::Tournament | Family::MixedTournament | Family::ReflexiveTournament => {
                    assert!(o.pattern.is_tournament(), "{}", o.name);
                    assert_eq!(loopless, n * (n - 1) / 2, "{}", o.name);
                }
                Family::MinusArc => assert_eq!(loopless, n * (n - 1) / 2 - 1, "{}", o.name),
                Family::Bipartite => assert!(o.pattern.is_irreflexive()),
                Family::ReflexiveMultipartite => assert!(o.pattern.is_reflexive()),
                Family::Balanced => assert_eq!(loopless, n),
                Family::LoopTournament => unreachable!(),
            }
        }
        assert_eq!(catalog().len(), 1 + 6 + 1 + 4 + 19 + 3 + 3);
    }

    #[test]
    fn parametric_families() {
        assert_eq!(gen_tt(3).unwrap().arcs(), vec![(0, 1), (0, 2), (1, 2)]);
        let s = gen_tt_star(4).unwrap();
        assert!(s.has_arc(3, 0) && !s.has_arc(0, 3));
        assert!(gen_tt_star(2).is_err());
        let f = gen_fence(6).unwrap();
        assert_eq!(f.out_neighbors(1).unwrap(), vec![0, 2]);
        assert_eq!(f.out_neighbors(5).unwrap(), vec![0, 4]);
        assert!(gen_fence(7).is_err() && gen_fence(4).is_err());
    }

    #[test]
    fn embeddings() {
        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let m = find_induced(&tournament_obstruction(6), &c3).unwrap();
        assert!(verify_embedding(&tournament_obstruction(6), &c3, &m));
        assert_eq!(find_induced(&gen_tt(6).unwrap(), &c3), None);
        assert_eq!(find_induced(&t0().without_loops(), &t0()), None);
    }

    #[test]
    fn triangles_of_t6() {
        let t6 = tournament_obstruction(6);
        assert_eq!(find_arc_disjoint_triangles(&t6), Some(([0, 5, 1], [2, 4, 3])));
        assert_eq!(find_arc_disjoint_triangles(&gen_tt_star(6).unwrap()), None);
        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(find_arc_disjoint_triangles(&c3), None);
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("T1111").unwrap().pattern, t1111());
        assert_eq!(by_name("FENCE_12").unwrap().pattern.n(), 12);
        assert!(by_name("T7").is_err());
    }
}
