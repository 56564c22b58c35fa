//! Greedy domination on strong orderings, verifiers and exhaustive oracles.

use crate::digraph::{Digraph, Ordering};
use crate::error::{Error, Result};
use crate::gamma::check_strong_ordering;

/// Largest input for the exhaustive oracles.
pub const BRUTEFORCE_BOUND: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    /// Dominated.
    N,
    /// Member of the packing set.
    C,
    /// Member of the dominating set.
    D,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationSolution {
    /// Sorted.
    pub dominating_set: Vec<usize>,
    /// Sorted.
    pub packing_set: Vec<usize>,
    /// Labels applied to each vertex, in order.
    pub label_trace: Vec<Vec<Label>>,
    /// Ordering positions at which a packing vertex was picked; non-decreasing.
    pub cursor_positions: Vec<usize>,
}

/// Repeatedly takes the first vertex `x` not yet dominated and the last
/// in-neighbour `y` of `x`, puts `x` in the packing set and `y` in the
/// dominating set, and marks every out-neighbour of `y` dominated.
pub fn greedy_domination(d: &Digraph, ord: &Ordering) -> Result<DominationSolution> {
    let n = d.n();
    if let Some(g) = check_strong_ordering(d, ord)? {
        return Err(Error::Precondition(format!(
            "ordering is not strong: rows {} < {} and columns {} < {} form a Γ",
            g.i, g.j, g.k, g.l
        )));
    }
    let into = d.matrix().transpose();
    if let Some(v) = (0..n).find(|&v| into.row_count(v) == 0) {
        return Err(Error::Precondition(format!("vertex {v} has no in-neighbour and cannot be dominated")));
    }
    let pos = ord.positions();
    let mut dominated = vec![false; n];
    let mut trace = vec![Vec::new(); n];
    let (mut dom, mut pack, mut cursors) = (Vec::new(), Vec::new(), Vec::new());
    let mut i = 0;
    loop {
        while i < n && dominated[ord.as_slice()[i]] {
            i += 1;
        }
        if i == n {
            break;
        }
        let x = ord.as_slice()[i];
        let y = into.row_ones(x).max_by_key(|&u| pos[u]).expect("in-degree checked");
        cursors.push(i);
        trace[x].push(Label::C);
        trace[y].push(Label::D);
        pack.push(x);
        dom.push(y);
        for w in d.out_iter(y) {
            if !dominated[w] {
                dominated[w] = true;
                trace[w].push(Label::N);
            }
        }
    }
    dom.sort_unstable();
    pack.sort_unstable();
    Ok(DominationSolution { dominating_set: dom, packing_set: pack, label_trace: trace, cursor_positions: cursors })
}

/// Every vertex has an in-neighbour in `s`; a loop lets a vertex dominate itself.
pub fn verify_dominating(d: &Digraph, s: &[usize]) -> bool {
    let mut hit = vec![false; d.n()];
    for &u in s.iter().filter(|&&u| u < d.n()) {
        for w in d.out_iter(u) {
            hit[w] = true;
        }
    }
    hit.into_iter().all(|h| h)
}

/// In-neighbourhoods of the members of `s` are pairwise disjoint.
pub fn verify_disjoint_in_neighborhoods(d: &Digraph, s: &[usize]) -> bool {
    let mut owner = vec![usize::MAX; d.n()];
    let mut distinct = s.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for &v in &distinct {
        if v >= d.n() {
            return false;
        }
        for u in (0..d.n()).filter(|&u| d.has_arc(u, v)) {
            if owner[u] != usize::MAX {
                return false;
            }
            owner[u] = v;
        }
    }
    true
}

fn masks(d: &Digraph, outgoing: bool) -> Result<Vec<u32>> {
    let n = d.n();
    if n > BRUTEFORCE_BOUND {
        return Err(Error::BoundExceeded { got: n, bound: BRUTEFORCE_BOUND });
    }
    Ok((0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| if outgoing { d.has_arc(v, u) } else { d.has_arc(u, v) })
                .fold(0u32, |m, u| m | 1 << u)
        })
        .collect())
}

fn bits_to_vec(m: u32) -> Vec<usize> {
    (0..32).filter(|&i| m >> i & 1 == 1).collect()
}

/// A smallest dominating set, by exhaustive search in increasing size.
pub fn min_dominating_bruteforce(d: &Digraph) -> Result<Vec<usize>> {
    let out = masks(d, true)?;
    let n = d.n();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let reach = out.iter().fold(0, |m, &o| m | o);
    if reach != full {
        let v = (0..n).find(|&v| reach >> v & 1 == 0).expect("unreached vertex");
        return Err(Error::Precondition(format!("vertex {v} has no in-neighbour and cannot be dominated")));
    }
    // Some chosen vertex must dominate the first undominated one.
    fn pick(out: &[u32], full: u32, left: usize, covered: u32, chosen: u32) -> Option<u32> {
        if covered == full {
            return Some(chosen);
        }
        if left == 0 {
            return None;
        }
        let first = (!covered & full).trailing_zeros();
        out.iter()
            .enumerate()
            .filter(|(_, &o)| o >> first & 1 == 1)
            .find_map(|(v, &o)| pick(out, full, left - 1, covered | o, chosen | 1 << v))
    }
    for k in 0..=n {
        if let Some(s) = pick(&out, full, k, 0, 0) {
            return Ok(bits_to_vec(s));
        }
    }
    unreachable!("the whole vertex set dominates")
}

/// A largest set with pairwise disjoint in-neighbourhoods, by branch and bound.
pub fn max_disjoint_in_neighborhoods_bruteforce(d: &Digraph) -> Result<Vec<usize>> {
    let inn = masks(d, false)?;
    fn grow(inn: &[u32], v: usize, used: u32, chosen: u32, best: &mut u32) {
        if chosen.count_ones() + (inn.len() - v) as u32 <= best.count_ones() {
            return;
        }
        if v == inn.len() {
            *best = chosen;
            return;
        }
        if inn[v] & used == 0 {
            grow(inn, v + 1, used | inn[v], chosen | 1 << v, best);
        }
        grow(inn, v + 1, used, chosen, best);
    }
    let mut best = 0;
    grow(&inn, 0, 0, 0, &mut best);
    Ok(bits_to_vec(best))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reflexive_tt(n: usize) -> Digraph {
        let mut d = Digraph::new(n);
        for u in 0..n {
            for v in u..n {
                d.add_arc(u, v);
            }
        }
        d
    }

    fn cycle3() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let s = greedy_domination(&reflexive_tt(3), &Ordering::identity(3)).unwrap();
        assert_eq!((s.dominating_set, s.packing_set), (vec![0], vec![0]));
        let s = greedy_domination(&cycle3(), &Ordering::identity(3)).unwrap();
        assert_eq!((s.dominating_set, s.packing_set), (vec![0, 1, 2], vec![0, 1, 2]));
        let tt3 = Digraph::from_arcs(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(greedy_domination(&tt3, &Ordering::identity(3)).is_err());
    }

    #[test]
    fn refuses_non_strong_orderings() {
        let d = Digraph::from_arcs(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        let bad = Ordering::new(vec![1, 0, 2]).unwrap();
        assert!(check_strong_ordering(&d, &bad).unwrap().is_some());
        assert!(greedy_domination(&d, &bad).is_err());
    }

    #[test]
    fn verifier_examples() {
        let c = cycle3();
        assert!(verify_dominating(&c, &[0, 1, 2]));
        assert!(!verify_dominating(&c, &[]));
        assert!(verify_dominating(&reflexive_tt(5), &[0]));
        assert!(verify_disjoint_in_neighborhoods(&c, &[1]));
        assert!(verify_disjoint_in_neighborhoods(&c, &[0, 1, 2]));
        let star = Digraph::from_arcs(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(!verify_disjoint_in_neighborhoods(&star, &[1, 2]));
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(min_dominating_bruteforce(&reflexive_tt(4)).unwrap().len(), 1);
        assert_eq!(min_dominating_bruteforce(&cycle3()).unwrap().len(), 3);
        assert_eq!(max_disjoint_in_neighborhoods_bruteforce(&cycle3()).unwrap().len(), 3);
        let k2 = Digraph::from_arcs(2, &[(0, 0), (1, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(min_dominating_bruteforce(&k2).unwrap().len(), 1);
        assert!(min_dominating_bruteforce(&Digraph::new(21)).is_err());
    }
}
