//! Digraphs with loops, vertex orderings and bigraphs.

use std::fmt;

use crate::bits::{is_subset, popcount, BitMatrix, Ones};
use crate::error::{Error, Result};

/// A digraph on vertices `0..n`; loops are diagonal entries of the adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    adj: BitMatrix,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { adj: BitMatrix::new(n, n) }
    }

    /// Builds a digraph from an arc list; `(v, v)` is a loop. Repeated arcs are merged.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.check(u)?;
            d.check(v)?;
            d.adj.set(u, v, true);
        }
        Ok(d)
    }

    pub fn from_matrix(adj: BitMatrix) -> Result<Self> {
        if adj.rows() != adj.cols() {
            return Err(Error::Precondition(format!("adjacency matrix is {}x{}", adj.rows(), adj.cols())));
        }
        Ok(Digraph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.adj
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n() })
        }
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.adj.get(v, v)
    }

    #[inline]
    pub fn set_arc(&mut self, u: usize, v: usize, present: bool) {
        self.adj.set(u, v, present);
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.adj.set(u, v, true);
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.adj.set(u, v, false);
    }

    /// Adjacent means an arc in at least one direction between distinct vertices.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && (self.has_arc(u, v) || self.has_arc(v, u))
    }

    /// Out-neighbourhood of `v` as a bit row.
    #[inline]
    pub fn out_row(&self, v: usize) -> &[u64] {
        self.adj.row(v)
    }

    pub fn out_neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        Ok(self.adj.row_ones(v).collect())
    }

    pub fn in_neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        Ok((0..self.n()).filter(|&u| self.has_arc(u, v)).collect())
    }

    pub fn out_iter(&self, v: usize) -> Ones<'_> {
        self.adj.row_ones(v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj.row_count(v)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n()).filter(|&u| self.has_arc(u, v)).count()
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.has_loop(v)).collect()
    }

    /// All arcs in row-major order, loops included.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|u| self.adj.row_ones(u).map(move |v| (u, v))).collect()
    }

    pub fn arc_count(&self) -> usize {
        (0..self.n()).map(|v| self.out_degree(v)).sum()
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n()).all(|v| !self.has_loop(v))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n()).all(|v| self.has_loop(v))
    }

    /// Every pair of distinct vertices joined by exactly one arc; loops are ignored.
    pub fn is_tournament(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| (u + 1..n).all(|v| self.has_arc(u, v) != self.has_arc(v, u)))
    }

    /// No pair of opposite arcs between distinct vertices.
    pub fn is_oriented(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| (u + 1..n).all(|v| !(self.has_arc(u, v) && self.has_arc(v, u))))
    }

    pub fn without_loops(&self) -> Digraph {
        let mut d = self.clone();
        for v in 0..self.n() {
            d.remove_arc(v, v);
        }
        d
    }

    pub fn with_loops(&self, loops: &[usize]) -> Digraph {
        let mut d = self.clone();
        for &v in loops {
            d.add_arc(v, v);
        }
        d
    }

    pub fn reverse(&self) -> Digraph {
        Digraph { adj: self.adj.transpose() }
    }

    /// Vertex `a` of the result is vertex `perm[a]` of `self`.
    pub fn relabeled(&self, perm: &[usize]) -> Digraph {
        Digraph { adj: self.adj.permuted(perm, perm) }
    }

    /// Adjacency restricted to `vertices`, relabelled to `0..k` in ascending vertex order.
    pub fn induced_subdigraph(&self, vertices: &[usize]) -> Digraph {
        let mut s = vertices.to_vec();
        s.sort_unstable();
        s.dedup();
        self.relabeled(&s)
    }

    /// Deletes one vertex, keeping the relative order of the others.
    pub fn delete_vertex(&self, v: usize) -> Digraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.relabeled(&keep)
    }

    /// Symmetric closure with loops dropped.
    pub fn underlying_graph(&self) -> Digraph {
        let n = self.n();
        let mut g = Digraph::new(n);
        for u in 0..n {
            for v in self.out_iter(u) {
                if u != v {
                    g.add_arc(u, v);
                    g.add_arc(v, u);
                }
            }
        }
        g
    }

    /// Simplicial in the literal sense: an irreflexive vertex always is; a reflexive
    /// vertex needs every in-neighbour to reach every out-neighbour.
    pub fn is_simplicial(&self, v: usize) -> bool {
        if !self.has_loop(v) {
            return true;
        }
        self.out_to_all_of_row(v)
    }

    /// Every in-neighbour of `v` has an arc to every out-neighbour of `v`.
    pub fn arcs_cover_in_out(&self, v: usize) -> bool {
        self.out_to_all_of_row(v)
    }

    fn out_to_all_of_row(&self, v: usize) -> bool {
        let outs = self.out_row(v);
        (0..self.n()).filter(|&u| self.has_arc(u, v)).all(|u| is_subset(outs, self.out_row(u)))
    }

    pub fn is_simple(&self, v: usize) -> bool {
        if !self.is_simplicial(v) {
            return false;
        }
        let ins: Vec<usize> = (0..self.n()).filter(|&u| self.has_arc(u, v)).collect();
        let rows: Vec<&[u64]> = ins.iter().map(|&u| self.out_row(u)).collect();
        if !is_chain(&rows) {
            return false;
        }
        let t = self.adj.transpose();
        let cols: Vec<&[u64]> = self.out_iter(v).map(|w| t.row(w)).collect();
        is_chain(&cols)
    }

    pub fn is_peak(&self, v: usize) -> bool {
        let outs = self.out_row(v);
        (0..self.n())
            .filter(|&u| self.has_arc(u, v))
            .any(|u| self.out_row(u).iter().zip(outs).any(|(a, b)| a & b != 0))
    }

    /// Strongly connected components, listed in a topological order of the condensation.
    /// Loops play no role.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = Vec::new();
        let mut counter = 0;
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call: Vec<(usize, Ones<'_>)> = vec![(root, self.out_iter(root))];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some((v, it)) = call.last_mut() {
                let v = *v;
                if let Some(w) = it.next() {
                    if index[w] == usize::MAX {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, self.out_iter(w)));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some((p, _)) = call.last() {
                        low[*p] = low[*p].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        comps.reverse();
        comps
    }

    /// Non-adjacent vertices with equal loop status and equal neighbourhoods outside `{u, v}`.
    pub fn are_false_twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        if self.adjacent(u, v) || self.has_loop(u) != self.has_loop(v) {
            return Ok(false);
        }
        Ok((0..self.n())
            .filter(|&w| w != u && w != v)
            .all(|w| self.has_arc(u, w) == self.has_arc(v, w) && self.has_arc(w, u) == self.has_arc(w, v)))
    }

    /// The bigraph with a copy of every vertex on each side and `biadj = adj`.
    pub fn split_bigraph(&self) -> Bigraph {
        let n = self.n();
        Bigraph { x_labels: (0..n).collect(), y_labels: (0..n).collect(), biadj: self.adj.clone() }
    }

    /// The adjacency matrix with rows and columns permuted by `ord`.
    pub fn ordered_matrix(&self, ord: &Ordering) -> BitMatrix {
        self.adj.permuted(ord.as_slice(), ord.as_slice())
    }
}

fn is_chain(rows: &[&[u64]]) -> bool {
    let mut sorted: Vec<&[u64]> = rows.to_vec();
    sorted.sort_by_key(|r| popcount(r));
    sorted.windows(2).all(|w| is_subset(w[0], w[1]))
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n(), self.arcs())
    }
}

/// A vertex ordering `v_1, ..., v_n`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering(Vec<usize>);

impl Ordering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(Error::NotPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Ordering(perm))
    }

    pub fn identity(n: usize) -> Self {
        Ordering((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `positions()[v]` is the index of vertex `v` in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (p, &v) in self.0.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    pub fn reversed(&self) -> Ordering {
        Ordering(self.0.iter().rev().copied().collect())
    }
}

/// A bipartitioned graph given by its bi-adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigraph {
    pub x_labels: Vec<usize>,
    pub y_labels: Vec<usize>,
    pub biadj: BitMatrix,
}

impl Bigraph {
    pub fn new(x_labels: Vec<usize>, y_labels: Vec<usize>, biadj: BitMatrix) -> Result<Self> {
        if biadj.rows() != x_labels.len() || biadj.cols() != y_labels.len() {
            return Err(Error::Precondition("bi-adjacency dimensions do not match the parts".into()));
        }
        for labels in [&x_labels, &y_labels] {
            let mut s = labels.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != labels.len() {
                return Err(Error::Precondition("duplicate label in a part".into()));
            }
        }
        Ok(Bigraph { x_labels, y_labels, biadj })
    }

    pub fn from_matrix(biadj: BitMatrix) -> Self {
        Bigraph { x_labels: (0..biadj.rows()).collect(), y_labels: (0..biadj.cols()).collect(), biadj }
    }

    pub fn x_size(&self) -> usize {
        self.biadj.rows()
    }

    pub fn y_size(&self) -> usize {
        self.biadj.cols()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.x_size()).map(|r| self.biadj.row_count(r)).sum()
    }

    /// Connected components as pairs of local row and column indices, ordered by their
    /// smallest row (isolated columns come last, one per component).
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let (nx, ny) = (self.x_size(), self.y_size());
        let t = self.biadj.transpose();
        let mut seen_x = vec![false; nx];
        let mut seen_y = vec![false; ny];
        let mut comps = Vec::new();
        let grow = |sx: Option<usize>, sy: Option<usize>, seen_x: &mut Vec<bool>, seen_y: &mut Vec<bool>| {
            let (mut xs, mut ys) = (Vec::new(), Vec::new());
            let mut qx: Vec<usize> = sx.into_iter().collect();
            let mut qy: Vec<usize> = sy.into_iter().collect();
            for &x in &qx {
                seen_x[x] = true;
            }
            for &y in &qy {
                seen_y[y] = true;
            }
            while !qx.is_empty() || !qy.is_empty() {
                if let Some(x) = qx.pop() {
                    xs.push(x);
                    for y in self.biadj.row_ones(x) {
                        if !seen_y[y] {
                            seen_y[y] = true;
                            qy.push(y);
                        }
                    }
                }
                if let Some(y) = qy.pop() {
                    ys.push(y);
                    for x in t.row_ones(y) {
                        if !seen_x[x] {
                            seen_x[x] = true;
                            qx.push(x);
                        }
                    }
                }
            }
            xs.sort_unstable();
            ys.sort_unstable();
            (xs, ys)
        };
        for x in 0..nx {
            if !seen_x[x] {
                comps.push(grow(Some(x), None, &mut seen_x, &mut seen_y));
            }
        }
        for y in 0..ny {
            if !seen_y[y] {
                comps.push(grow(None, Some(y), &mut seen_x, &mut seen_y));
            }
        }
        comps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> Digraph {
        Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn tt(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    fn t0() -> Digraph {
        Digraph::from_arcs(4, &[(0, 0), (3, 3), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn neighbourhoods() {
        assert_eq!(cycle3().in_neighbors(1).unwrap(), vec![0]);
        let r = Digraph::from_arcs(1, &[(0, 0)]).unwrap();
        assert_eq!(r.in_neighbors(0).unwrap(), vec![0]);
        assert_eq!(t0().out_neighbors(3).unwrap(), vec![0, 3]);
        assert!(cycle3().out_neighbors(3).is_err());
    }

    #[test]
    fn simplicial_literal_reading() {
        let t = tt(3);
        assert!(t.is_simplicial(0));
        // irreflexive vertices are simplicial whatever their neighbourhoods
        let path = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(path.is_simplicial(1));
        assert!(!path.arcs_cover_in_out(1));
        let looped = path.with_loops(&[1]);
        assert!(!looped.is_simplicial(1));
        assert!((0..3).all(|v| !cycle3().arcs_cover_in_out(v)));
        assert!((0..3).all(|v| !cycle3().with_loops(&[0, 1, 2]).is_simplicial(v)));
    }

    #[test]
    fn simple_vertices() {
        assert!((0..4).all(|v| !t0().is_simple(v)));
        assert!(Digraph::new(1).is_simple(0));
        assert!(tt(4).is_simple(0));
    }

    #[test]
    fn peaks() {
        assert!(tt(3).is_peak(1));
        assert!((0..3).all(|v| !cycle3().is_peak(v)));
    }

    #[test]
    fn components_in_topological_order() {
        let c = tt(5).strong_components();
        assert_eq!(c, vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
        let mut star = tt(5);
        star.remove_arc(0, 4);
        star.add_arc(4, 0);
        assert_eq!(star.strong_components(), vec![vec![0, 1, 2, 3, 4]]);
        let mut d = tt(4);
        d.remove_arc(1, 3);
        d.add_arc(3, 1);
        assert_eq!(d.strong_components(), vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn false_twins() {
        let mut d = tt(4);
        d.remove_arc(1, 2);
        assert!(d.are_false_twins(1, 2).unwrap());
        assert!(!tt(4).are_false_twins(0, 1).unwrap());
        assert!(d.are_false_twins(1, 1).is_err());
    }

    #[test]
    fn induced_and_underlying() {
        let t = tt(4);
        assert_eq!(t.induced_subdigraph(&[0, 1, 2, 3]), t);
        assert_eq!(t.induced_subdigraph(&[]).n(), 0);
        assert_eq!(t.induced_subdigraph(&[3, 1]), tt(2));
        let g = t0().underlying_graph();
        assert!(g.is_irreflexive());
        assert_eq!(g.arc_count(), 12);
    }

    #[test]
    fn split_bigraph_matches_adjacency() {
        let b = cycle3().split_bigraph();
        assert_eq!(&b.biadj, cycle3().matrix());
    }

    #[test]
    fn ordering_validation() {
        assert!(Ordering::new(vec![1, 0, 2]).is_ok());
        assert!(Ordering::new(vec![1, 1]).is_err());
        assert_eq!(Ordering::new(vec![2, 0, 1]).unwrap().positions(), vec![1, 2, 0]);
    }

    #[test]
    fn bigraph_components() {
        let m = BitMatrix::from_text("3 3\n100\n100\n001\n").unwrap();
        let b = Bigraph::from_matrix(m);
        assert_eq!(b.components(), vec![(vec![0, 1], vec![0]), (vec![2], vec![2]), (vec![], vec![1])]);
    }
}
