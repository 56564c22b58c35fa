//! Γ-free orderings: verification, the backtracking oracle, totally balanced
//! matrices and independent row/column orderings of bi-adjacency matrices.
//!
//! Γ is the 2×2 matrix `[[1, 1], [1, 0]]`. A symmetric Γ-free ordering of the
//! adjacency matrix of a digraph is a strong ordering.

use std::collections::HashSet;

use serde::Serialize;

use crate::bits::{is_subset, words_for, BitMatrix, Ones};
use crate::digraph::{Bigraph, Digraph, Ordering};
use crate::error::{Error, Result};

/// Rows `i < j` and columns `k < l` (ordered positions) with entries
/// `(i,k) = (i,l) = (j,k) = 1` and `(j,l) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GammaViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

/// Rows and columns of a cycle submatrix, listed along the cycle: row `rows[t]`
/// meets columns `cols[t]` and `cols[t-1]` (indices mod length).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleMatrixWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn first_one(a: impl Iterator<Item = u64>) -> Option<usize> {
    for (wi, w) in a.enumerate() {
        if w != 0 {
            return Some(wi * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// Smallest set position `> after` in `a & !b`.
fn next_in_difference(a: &[u64], b: &[u64], after: usize) -> Option<usize> {
    let start = after + 1;
    let mut wi = start / 64;
    if wi >= a.len() {
        return None;
    }
    let mut w = (a[wi] & !b[wi]) & (!0u64).checked_shl((start % 64) as u32).unwrap_or(0);
    loop {
        if w != 0 {
            return Some(wi * 64 + w.trailing_zeros() as usize);
        }
        wi += 1;
        if wi >= a.len() {
            return None;
        }
        w = a[wi] & !b[wi];
    }
}

/// Lexicographically first Γ in the matrix as given (rows and columns in place).
pub fn find_gamma(m: &BitMatrix) -> Option<GammaViolation> {
    for i in 0..m.rows() {
        let ri = m.row(i);
        for j in i + 1..m.rows() {
            let rj = m.row(j);
            let Some(k) = first_one(ri.iter().zip(rj).map(|(a, b)| a & b)) else { continue };
            if let Some(l) = next_in_difference(ri, rj, k) {
                return Some(GammaViolation { i, j, k, l });
            }
        }
    }
    None
}

/// Whether `ord` is a strong ordering; if not, the lexicographically first Γ
/// (by `i`, then `j`, `k`, `l`) in the symmetrically permuted matrix.
pub fn check_strong_ordering(d: &Digraph, ord: &Ordering) -> Result<Option<GammaViolation>> {
    if ord.len() != d.n() {
        return Err(Error::LengthMismatch { expected: d.n(), got: ord.len() });
    }
    Ok(find_gamma(&d.ordered_matrix(ord)))
}

/// Independent row and column orders; `Ok(None)` when the reordered matrix is Γ-free.
pub fn check_biadjacency_ordering(m: &BitMatrix, rows: &[usize], cols: &[usize]) -> Result<Option<GammaViolation>> {
    if rows.len() != m.rows() {
        return Err(Error::LengthMismatch { expected: m.rows(), got: rows.len() });
    }
    if cols.len() != m.cols() {
        return Err(Error::LengthMismatch { expected: m.cols(), got: cols.len() });
    }
    Ordering::new(rows.to_vec())?;
    Ordering::new(cols.to_vec())?;
    Ok(find_gamma(&m.permuted(rows, cols)))
}

/// Simple vertex test inside the subdigraph induced by the vertex mask `alive`.
fn is_simple_within(d: &Digraph, t: &BitMatrix, v: usize, alive: &[u64]) -> bool {
    let w = alive.len();
    let mut outs = vec![0u64; w];
    for (o, (a, b)) in outs.iter_mut().zip(d.out_row(v).iter().zip(alive)) {
        *o = a & b;
    }
    let mut ins = vec![0u64; w];
    for (o, (a, b)) in ins.iter_mut().zip(t.row(v).iter().zip(alive)) {
        *o = a & b;
    }
    let masked = |row: &[u64]| -> Vec<u64> { row.iter().zip(alive).map(|(a, b)| a & b).collect() };
    if d.has_loop(v) {
        for u in Ones::new(&ins) {
            if !is_subset(&outs, d.out_row(u)) {
                return false;
            }
        }
    }
    let chain = |rows: Vec<Vec<u64>>| -> bool {
        let mut rows = rows;
        rows.sort_by_key(|r| crate::bits::popcount(r));
        rows.windows(2).all(|p| is_subset(&p[0], &p[1]))
    };
    chain(Ones::new(&ins).map(|u| masked(d.out_row(u))).collect())
        && chain(Ones::new(&outs).map(|x| masked(t.row(x))).collect())
}

/// Whether each vertex of `ord` is simple once its predecessors are deleted.
pub fn check_simple_ordering(d: &Digraph, ord: &Ordering) -> Result<bool> {
    let n = d.n();
    if ord.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: ord.len() });
    }
    let t = d.matrix().transpose();
    let mut alive = vec![!0u64; words_for(n)];
    clear_tail(&mut alive, n);
    for &v in ord.as_slice() {
        if !is_simple_within(d, &t, v, &alive) {
            return Ok(false);
        }
        alive[v / 64] &= !(1 << (v % 64));
    }
    Ok(true)
}

fn clear_tail(words: &mut [u64], n: usize) {
    if n % 64 != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << (n % 64)) - 1;
        }
    }
}

/// Searches for a simple ordering by memoised elimination over vertex subsets.
pub fn find_simple_ordering(d: &Digraph) -> Result<Option<Ordering>> {
    let n = d.n();
    if n > 24 {
        return Err(Error::BoundExceeded { got: n, bound: 24 });
    }
    let t = d.matrix().transpose();
    let mut dead: HashSet<u32> = HashSet::new();
    let mut order = Vec::with_capacity(n);
    fn rec(
        d: &Digraph,
        t: &BitMatrix,
        mask: u32,
        order: &mut Vec<usize>,
        dead: &mut HashSet<u32>,
    ) -> bool {
        if mask == 0 {
            return true;
        }
        if dead.contains(&mask) {
            return false;
        }
        let alive = [mask as u64];
        for v in Ones::new(&alive) {
            if is_simple_within(d, t, v, &alive) {
                order.push(v);
                if rec(d, t, mask & !(1 << v), order, dead) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(mask);
        false
    }
    Ok(if rec(d, &t, (1u32 << n) - 1, &mut order, &mut dead) { Some(Ordering::new(order)?) } else { None })
}

/// Result of the backtracking oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(Ordering),
    NoOrdering,
    Exhausted,
}

impl OracleOutcome {
    pub fn ordering(&self) -> Option<&Ordering> {
        match self {
            OracleOutcome::Found(o) => Some(o),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, OracleOutcome::Found(_))
    }
}

struct Search<'a> {
    d: &'a Digraph,
    t: BitMatrix,
    n: usize,
    w: usize,
    order: Vec<usize>,
    used: Vec<bool>,
    alive: Vec<u64>,
    rows: Vec<u64>,
    cols: Vec<u64>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn set(buf: &mut [u64], w: usize, q: usize, bit: usize) {
        buf[q * w + bit / 64] |= 1 << (bit % 64);
    }

    fn clear(buf: &mut [u64], w: usize, q: usize, bit: usize) {
        buf[q * w + bit / 64] &= !(1 << (bit % 64));
    }

    fn place(&mut self, v: usize) {
        let p = self.order.len();
        let w = self.w;
        for q in 0..p {
            let u = self.order[q];
            if self.d.has_arc(u, v) {
                Self::set(&mut self.rows, w, q, p);
                Self::set(&mut self.cols, w, p, q);
            }
            if self.d.has_arc(v, u) {
                Self::set(&mut self.rows, w, p, q);
                Self::set(&mut self.cols, w, q, p);
            }
        }
        if self.d.has_loop(v) {
            Self::set(&mut self.rows, w, p, p);
            Self::set(&mut self.cols, w, p, p);
        }
        self.order.push(v);
        self.used[v] = true;
        self.alive[v / 64] &= !(1 << (v % 64));
    }

    fn unplace(&mut self) {
        let v = self.order.pop().expect("unplace on empty prefix");
        let p = self.order.len();
        let w = self.w;
        for q in 0..p {
            Self::clear(&mut self.rows, w, q, p);
            Self::clear(&mut self.cols, w, q, p);
        }
        self.rows[p * w..(p + 1) * w].fill(0);
        self.cols[p * w..(p + 1) * w].fill(0);
        self.used[v] = false;
        self.alive[v / 64] |= 1 << (v % 64);
    }

    /// Γ patterns whose largest position is the newest one, `p`.
    fn last_is_consistent(&self) -> bool {
        let p = self.order.len() - 1;
        let w = self.w;
        for buf in [&self.rows, &self.cols] {
            let new = &buf[p * w..(p + 1) * w];
            for q in 0..p {
                let old = &buf[q * w..(q + 1) * w];
                if let Some(k) = first_one(old.iter().zip(new).map(|(a, b)| a & b)) {
                    if next_in_difference(old, new, k).is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self) -> Option<bool> {
        if self.order.len() == self.n {
            return Some(true);
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            if !is_simple_within(self.d, &self.t, v, &self.alive) {
                continue;
            }
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    return None;
                }
            }
            self.place(v);
            if self.last_is_consistent() {
                match self.run() {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.unplace();
        }
        Some(false)
    }
}

/// Backtracking search for a strong ordering. Vertices are tried in ascending
/// index order at every position; `budget` caps the number of placements.
pub fn find_strong_ordering(d: &Digraph, budget: Option<u64>) -> OracleOutcome {
    let n = d.n();
    let w = words_for(n).max(1);
    let mut alive = vec![!0u64; w];
    clear_tail(&mut alive, n);
    let mut s = Search {
        d,
        t: d.matrix().transpose(),
        n,
        w,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        alive,
        rows: vec![0; n * w],
        cols: vec![0; n * w],
        nodes: 0,
        budget,
    };
    match s.run() {
        Some(true) => OracleOutcome::Found(Ordering::new(s.order).expect("search yields a permutation")),
        Some(false) => OracleOutcome::NoOrdering,
        None => OracleOutcome::Exhausted,
    }
}

pub const TOTALLY_BALANCED_BOUND: usize = 12;

/// Searches for a cycle submatrix (an induced cycle of length at least 6 in the
/// bipartite graph of `m`). Refuses matrices beyond the default bound.
pub fn is_totally_balanced_bruteforce(m: &BitMatrix) -> Result<Option<CycleMatrixWitness>> {
    is_totally_balanced_bounded(m, TOTALLY_BALANCED_BOUND)
}

pub fn is_totally_balanced_bounded(m: &BitMatrix, bound: usize) -> Result<Option<CycleMatrixWitness>> {
    let big = m.rows().max(m.cols());
    if big > bound {
        return Err(Error::BoundExceeded { got: big, bound });
    }
    let t = m.transpose();
    for r0 in 0..m.rows() {
        let mut rows = vec![r0];
        let mut cols = Vec::new();
        if extend_cycle(m, &t, &mut rows, &mut cols) {
            return Ok(Some(CycleMatrixWitness { rows, cols }));
        }
    }
    Ok(None)
}

/// Grows an induced path `r0 c1 r1 c2 ...` ending in a row; rows other than `r0` exceed it.
fn extend_cycle(m: &BitMatrix, t: &BitMatrix, rows: &mut Vec<usize>, cols: &mut Vec<usize>) -> bool {
    let r0 = rows[0];
    let last = *rows.last().expect("path has a row");
    for c in m.row_ones(last) {
        if cols.contains(&c) {
            continue;
        }
        // c may touch only `last` among the inner rows; touching r0 closes the cycle
        if rows.len() > 1 && rows[1..rows.len() - 1].iter().any(|&r| m.get(r, c)) {
            continue;
        }
        if rows.len() > 1 && m.get(r0, c) {
            if rows.len() >= 3 {
                cols.push(c);
                return true;
            }
            continue;
        }
        cols.push(c);
        for r in t.row_ones(c) {
            if r <= r0 || rows.contains(&r) {
                continue;
            }
            // r may touch only c among the chosen columns
            if cols[..cols.len() - 1].iter().any(|&cc| m.get(r, cc)) {
                continue;
            }
            rows.push(r);
            if extend_cycle(m, t, rows, cols) {
                return true;
            }
            rows.pop();
        }
        cols.pop();
    }
    false
}

/// Outcome of [`gamma_free_biadjacency`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BiadjacencyOrdering {
    Found { rows: Vec<usize>, cols: Vec<usize> },
    /// Decided: no Γ-free ordering exists.
    Impossible,
    /// The sorting iteration did not settle and the matrix is too large for
    /// exhaustive search.
    Unresolved,
}

pub const EXHAUSTIVE_SIDE: usize = 8;

/// Independent row and column orders making the bi-adjacency matrix Γ-free.
pub fn gamma_free_biadjacency(b: &Bigraph) -> BiadjacencyOrdering {
    gamma_free_matrix(&b.biadj)
}

pub fn gamma_free_matrix(m: &BitMatrix) -> BiadjacencyOrdering {
    match doubly_lexical(m) {
        Some((rows, cols)) if find_gamma(&m.permuted(&rows, &cols)).is_none() => BiadjacencyOrdering::Found { rows, cols },
        // a doubly lexical ordering of a totally balanced matrix is Γ-free
        Some(_) => BiadjacencyOrdering::Impossible,
        None if m.rows() <= EXHAUSTIVE_SIDE && m.cols() <= EXHAUSTIVE_SIDE => match exhaustive_biadjacency(m) {
            Some((rows, cols)) => BiadjacencyOrdering::Found { rows, cols },
            None => BiadjacencyOrdering::Impossible,
        },
        None => BiadjacencyOrdering::Unresolved,
    }
}

/// Sorts `rows` ascending by their entries in `cols`, the last column most significant.
fn lex_sort(m: &BitMatrix, rows: &mut [usize], cols: &[usize]) -> bool {
    let key = |r: usize| -> Vec<bool> { cols.iter().rev().map(|&c| m.get(r, c)).collect() };
    let before = rows.to_vec();
    rows.sort_by_cached_key(|&r| (key(r), r));
    before != rows
}

/// Alternates row and column sorts until both are stable, which makes the
/// ordering doubly lexical. `None` if the iteration cap is reached first.
pub fn doubly_lexical(m: &BitMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    let t = m.transpose();
    let mut rows: Vec<usize> = (0..m.rows()).collect();
    let mut cols: Vec<usize> = (0..m.cols()).collect();
    for _ in 0..4 * (m.rows() + m.cols() + 1) {
        let a = lex_sort(m, &mut rows, &cols);
        let b = lex_sort(&t, &mut cols, &rows);
        if !a && !b {
            return Some((rows, cols));
        }
    }
    None
}

/// Every row order, each completed by a topological sort of the column
/// precedences it forces. Complete for small matrices.
fn exhaustive_biadjacency(m: &BitMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    if m.rows() > m.cols() {
        let t = m.transpose();
        return exhaustive_biadjacency(&t).map(|(r, c)| (c, r));
    }
    let mut perm: Vec<usize> = (0..m.rows()).collect();
    loop {
        if let Some(cols) = columns_for_rows(m, &perm) {
            return Some((perm, cols));
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

/// Column order making `m` Γ-free under the fixed row order, if one exists.
pub fn columns_for_rows(m: &BitMatrix, rows: &[usize]) -> Option<Vec<usize>> {
    let nc = m.cols();
    let mut succ = vec![Vec::new(); nc];
    let mut indeg = vec![0usize; nc];
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            let (ra, rb) = (rows[a], rows[b]);
            for c in m.row_ones(ra) {
                if !m.get(rb, c) {
                    continue;
                }
                for d in m.row_ones(ra) {
                    if !m.get(rb, d) {
                        // column d must precede column c
                        succ[d].push(c);
                        indeg[c] += 1;
                    }
                }
            }
        }
    }
    let mut out = Vec::with_capacity(nc);
    let mut ready: Vec<usize> = (0..nc).filter(|&c| indeg[c] == 0).rev().collect();
    while let Some(c) = ready.pop() {
        out.push(c);
        for &s in &succ[c] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                ready.push(s);
            }
        }
    }
    (out.len() == nc).then_some(out)
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn reflexive_transitive_is_gamma_free() {
        let d = tt(5).with_loops(&[0, 1, 2, 3, 4]);
        assert_eq!(check_strong_ordering(&d, &Ordering::identity(5)).unwrap(), None);
    }

    #[test]
    fn reports_first_violation() {
        let m = BitMatrix::from_text("2 2\n11\n10\n").unwrap();
        assert_eq!(find_gamma(&m), Some(GammaViolation { i: 0, j: 1, k: 0, l: 1 }));
        let d = Digraph::from_matrix(m).unwrap();
        assert!(check_strong_ordering(&d, &Ordering::identity(3)).is_err());
    }

    #[test]
    fn cycle_orderings() {
        let c = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(check_strong_ordering(&c, &Ordering::identity(3)).unwrap(), None);
        assert!(find_strong_ordering(&c.with_loops(&[0, 1, 2]), None) == OracleOutcome::NoOrdering);
    }

    #[test]
    fn oracle_budget() {
        let c = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0), (0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(find_strong_ordering(&c, Some(0)), OracleOutcome::NoOrdering);
        assert!(find_strong_ordering(&tt(4), Some(2)) == OracleOutcome::Exhausted);
        assert!(find_strong_ordering(&Digraph::new(1), None).is_found());
    }

    #[test]
    fn totally_balanced() {
        let c3 = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0), (0, 0), (1, 1), (2, 2)]).unwrap();
        let w = is_totally_balanced_bruteforce(c3.matrix()).unwrap().unwrap();
        assert_eq!(w.rows.len(), 3);
        let id = BitMatrix::from_text("3 3\n100\n010\n001\n").unwrap();
        assert_eq!(is_totally_balanced_bruteforce(&id).unwrap(), None);
        let big = BitMatrix::new(13, 2);
        assert!(is_totally_balanced_bruteforce(&big).is_err());
        assert!(is_totally_balanced_bounded(&big, 13).unwrap().is_none());
    }

    #[test]
    fn biadjacency_orderings() {
        let c6 = BitMatrix::from_text("3 3\n011\n101\n110\n").unwrap();
        assert_eq!(gamma_free_matrix(&c6), BiadjacencyOrdering::Impossible);
        let ones = BitMatrix::from_text("2 3\n111\n111\n").unwrap();
        assert!(matches!(gamma_free_matrix(&ones), BiadjacencyOrdering::Found { .. }));
    }

    #[test]
    fn permutations_enumerate_all() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
