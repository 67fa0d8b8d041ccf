//! Dense undirected graphs on indexed vertices, vertex sets, densities and
//! certified partitions.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::CurveFamily;

const W: usize = 64;

/// A subset of `0..n` as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VSet {
    n: usize,
    words: Vec<u64>,
}

impl fmt::Debug for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VSet {
    pub fn new(n: usize) -> Self {
        VSet { n, words: vec![0; n.div_ceil(W)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter(n: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VSet::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn range(n: usize, r: std::ops::Range<usize>) -> Self {
        VSet::from_iter(n, r)
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.words[v / W] |= 1 << (v % W);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / W] &= !(1 << (v % W));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / W] >> (v % W) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * W + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip(&self, o: &VSet, f: impl Fn(u64, u64) -> u64) -> VSet {
        assert_eq!(self.n, o.n, "vertex sets over different graphs");
        VSet { n: self.n, words: self.words.iter().zip(&o.words).map(|(&a, &b)| f(a, b)).collect() }
    }

    pub fn union(&self, o: &VSet) -> VSet {
        self.zip(o, |a, b| a | b)
    }

    pub fn intersection(&self, o: &VSet) -> VSet {
        self.zip(o, |a, b| a & b)
    }

    pub fn difference(&self, o: &VSet) -> VSet {
        self.zip(o, |a, b| a & !b)
    }

    pub fn intersection_len(&self, o: &VSet) -> usize {
        self.words.iter().zip(&o.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_disjoint(&self, o: &VSet) -> bool {
        self.words.iter().zip(&o.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, o: &VSet) -> bool {
        self.words.iter().zip(&o.words).all(|(a, b)| a & !b == 0)
    }

    /// Lexicographic comparison of the sorted vertex lists.
    pub fn lex_cmp(&self, o: &VSet) -> Ordering {
        self.iter().cmp(o.iter())
    }

    /// The first `k` members in increasing order.
    pub fn take(&self, k: usize) -> VSet {
        VSet::from_iter(self.n, self.iter().take(k))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairStatus {
    Complete,
    Empty,
    Mixed,
}

/// Undirected simple graph with bitset rows. Symmetric, no loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<VSet>,
    pub labels: Option<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, rows: vec![VSet::new(n); n], labels: None }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!("bad edge {u}-{v} on {} vertices", self.n)));
        }
        self.set_edge(u, v);
        Ok(())
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VSet::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    pub fn all(&self) -> VSet {
        VSet::full(self.n)
    }

    pub fn vset(&self, it: impl IntoIterator<Item = usize>) -> VSet {
        VSet::from_iter(self.n, it)
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for u in 0..self.n {
            let mut row = VSet::full(self.n).difference(&self.rows[u]);
            row.remove(u);
            g.rows[u] = row;
        }
        g.labels = self.labels.clone();
        g
    }

    /// Induced subgraph on `s`; returns the graph and the original index of
    /// each new vertex.
    pub fn induced(&self, s: &VSet) -> (SimpleGraph, Vec<usize>) {
        let map = s.to_vec();
        let mut g = SimpleGraph::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g.labels = self.labels.as_ref().map(|l| map.iter().map(|&v| l[v]).collect());
        (g, map)
    }

    pub fn edges_within(&self, s: &VSet) -> usize {
        s.iter().map(|v| self.rows[v].intersection_len(s)).sum::<usize>() / 2
    }

    pub fn edges_between(&self, a: &VSet, b: &VSet) -> usize {
        a.iter().map(|v| self.rows[v].intersection_len(b)).sum()
    }

    /// Edge density of the whole graph, `e / C(n,2)` (zero below two vertices).
    pub fn density(&self) -> Rational64 {
        if self.n < 2 {
            return Rational64::zero();
        }
        let n = self.n as i64;
        Rational64::new(self.edge_count() as i64, n * (n - 1) / 2)
    }

    /// Density of the induced subgraph on `s`.
    pub fn induced_density(&self, s: &VSet) -> Result<Rational64> {
        let k = s.len() as i64;
        if k < 2 {
            return Err(Error::InvalidVertexSet(format!("density needs at least 2 vertices, got {k}")));
        }
        Ok(Rational64::new(self.edges_within(s) as i64, k * (k - 1) / 2))
    }

    fn check_pair(&self, a: &VSet, b: &VSet) -> Result<()> {
        if a.universe() != self.n || b.universe() != self.n {
            return Err(Error::InvalidVertexSet("vertex set belongs to another graph".into()));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidVertexSet("empty side".into()));
        }
        if !a.is_disjoint(b) {
            return Err(Error::InvalidVertexSet("sides overlap".into()));
        }
        Ok(())
    }

    pub fn bipartite_density(&self, a: &VSet, b: &VSet) -> Result<Rational64> {
        self.check_pair(a, b)?;
        Ok(Rational64::new(self.edges_between(a, b) as i64, (a.len() * b.len()) as i64))
    }

    pub fn pair_status(&self, a: &VSet, b: &VSet) -> Result<PairStatus> {
        self.check_pair(a, b)?;
        Ok(self.status_unchecked(a, b))
    }

    pub(crate) fn status_unchecked(&self, a: &VSet, b: &VSet) -> PairStatus {
        let e = self.edges_between(a, b);
        if e == 0 {
            PairStatus::Empty
        } else if e == a.len() * b.len() {
            PairStatus::Complete
        } else {
            PairStatus::Mixed
        }
    }

    /// Induced density is at most `eps` or at least `1 - eps`.
    pub fn eps_homogeneous(&self, s: &VSet, eps: Rational64) -> Result<bool> {
        let d = self.induced_density(s)?;
        Ok(d <= eps || d >= Rational64::one() - eps)
    }

    /// Replaces each vertex `v` by `mult[v]` pairwise non-adjacent clones
    /// carrying its neighbourhood.
    pub fn clone_blowup(&self, mult: &[usize]) -> Result<Blowup> {
        if mult.len() != self.n {
            return Err(Error::InvalidArgument(format!("{} multiplicities for {} vertices", mult.len(), self.n)));
        }
        if let Some(v) = mult.iter().position(|&m| m == 0) {
            return Err(Error::InvalidArgument(format!("vertex {v} has multiplicity 0")));
        }
        let mut first = Vec::with_capacity(self.n + 1);
        let mut origin = Vec::new();
        for (v, &m) in mult.iter().enumerate() {
            first.push(origin.len());
            origin.extend(std::iter::repeat_n(v, m));
        }
        first.push(origin.len());
        let mut g = SimpleGraph::new(origin.len());
        for (u, v) in self.edges() {
            for cu in first[u]..first[u + 1] {
                for cv in first[v]..first[v + 1] {
                    g.set_edge(cu, cv);
                }
            }
        }
        Ok(Blowup { graph: g, origin, first })
    }

    /// Compares the induced density of `s` with the bounds implied by the
    /// global density `d`: at most `2d/δ²` and at least `1 - 2(1-d)/δ²`
    /// where `δ = |S|/n`.
    pub fn density_bound_check(&self, s: &VSet) -> Result<SubhomCheck> {
        if s.is_empty() {
            return Err(Error::InvalidVertexSet("empty set".into()));
        }
        let d = self.density();
        let delta = Rational64::new(s.len() as i64, self.n as i64);
        let upper = subhom_bound(d, delta);
        let lower = Rational64::one() - subhom_bound(Rational64::one() - d, delta);
        let observed = self.induced_density(s).ok();
        Ok(SubhomCheck { observed, global: d, delta, upper, lower })
    }
}

/// `2ε/δ²`.
pub fn subhom_bound(eps: Rational64, delta: Rational64) -> Rational64 {
    Rational64::from_integer(2) * eps / (delta * delta)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubhomCheck {
    /// `None` when `|S| < 2`.
    pub observed: Option<Rational64>,
    pub global: Rational64,
    pub delta: Rational64,
    pub upper: Rational64,
    pub lower: Rational64,
}

impl SubhomCheck {
    pub fn upper_holds(&self) -> bool {
        self.observed.is_none_or(|d| d <= self.upper)
    }

    pub fn lower_holds(&self) -> bool {
        self.observed.is_none_or(|d| d >= self.lower)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blowup {
    pub graph: SimpleGraph,
    /// Original vertex of each clone.
    pub origin: Vec<usize>,
    /// Clones of `v` are `first[v]..first[v + 1]`.
    pub first: Vec<usize>,
}

impl Blowup {
    pub fn clones(&self, v: usize) -> std::ops::Range<usize> {
        self.first[v]..self.first[v + 1]
    }

    /// Lifts a set of original vertices to all of their clones.
    pub fn lift(&self, s: &VSet) -> VSet {
        VSet::from_iter(self.origin.len(), s.iter().flat_map(|v| self.clones(v)))
    }

    /// Original vertices having at least one clone in `s`.
    pub fn project(&self, s: &VSet) -> VSet {
        VSet::from_iter(self.first.len() - 1, s.iter().map(|c| self.origin[c]))
    }
}

/// Advances a sorted `k`-combination of `0..m` in place; false after the
/// last one.
pub(crate) fn next_combination(c: &mut [usize], m: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < m - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `u_i ~ v_j` iff `i < j`; `u_i` is vertex `i-1`, `v_j` is vertex `n+j-1`.
pub fn half_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(2 * n);
    for i in 0..n {
        for j in i + 1..n {
            g.set_edge(i, n + j);
        }
    }
    g
}

/// Curves are adjacent iff they share a point. Labels are curve ids.
pub fn intersection_graph(f: &CurveFamily) -> Result<SimpleGraph> {
    let report = f.valid_report()?;
    let mut g = SimpleGraph::new(f.len());
    for c in &report.contacts {
        g.set_edge(c.a, c.b);
    }
    g.labels = Some(f.curves.iter().map(|c| c.id).collect());
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Certificate {
    Complete,
    Empty,
    Exceptional,
}

impl Certificate {
    pub fn of(g: &SimpleGraph, a: &VSet, b: &VSet) -> Certificate {
        if a.is_empty() || b.is_empty() {
            return Certificate::Empty;
        }
        match g.status_unchecked(a, b) {
            PairStatus::Complete => Certificate::Complete,
            PairStatus::Empty => Certificate::Empty,
            PairStatus::Mixed => Certificate::Exceptional,
        }
    }
}

/// An ordered equipartition with a certificate for every pair of blocks.
/// Pairs involving an empty block are vacuously `Empty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegPartition {
    pub blocks: Vec<VSet>,
    pub epsilon: Rational64,
    certificates: Vec<Certificate>,
}

impl RegPartition {
    pub fn new(g: &SimpleGraph, blocks: Vec<VSet>, epsilon: Rational64) -> Result<Self> {
        let certificates = Self::certify(g, &blocks);
        let p = RegPartition { blocks, epsilon, certificates };
        p.check_shape(g.n())?;
        Ok(p)
    }

    fn certify(g: &SimpleGraph, blocks: &[VSet]) -> Vec<Certificate> {
        let k = blocks.len();
        let mut out = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                out.push(Certificate::of(g, &blocks[i], &blocks[j]));
            }
        }
        out
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let k = self.k();
        i * (2 * k - i - 1) / 2 + (j - i - 1)
    }

    pub fn certificate(&self, i: usize, j: usize) -> Certificate {
        assert!(i != j, "no certificate for a block with itself");
        self.certificates[self.idx(i, j)]
    }

    pub fn certificates(&self) -> &[Certificate] {
        &self.certificates
    }

    pub fn exceptional_count(&self) -> usize {
        self.certificates.iter().filter(|&&c| c == Certificate::Exceptional).count()
    }

    /// Exceptional pairs divided by `K²`.
    pub fn exceptional_fraction(&self) -> Rational64 {
        let k = self.k().max(1) as i64;
        Rational64::new(self.exceptional_count() as i64, k * k)
    }

    pub fn is_equipartition(&self) -> bool {
        let sizes = self.blocks.iter().map(VSet::len);
        match (sizes.clone().min(), sizes.max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    fn check_shape(&self, n: usize) -> Result<()> {
        let mut seen = VSet::new(n);
        for b in &self.blocks {
            if b.universe() != n || !b.is_disjoint(&seen) {
                return Err(Error::Certificate("blocks overlap".into()));
            }
            seen = seen.union(b);
        }
        if seen.len() != n {
            return Err(Error::Certificate("blocks do not cover all vertices".into()));
        }
        if !self.is_equipartition() {
            return Err(Error::Certificate("block sizes differ by more than one".into()));
        }
        Ok(())
    }

    /// Recomputes every certificate from scratch and checks the partition
    /// shape and the exceptional budget.
    pub fn verify(&self, g: &SimpleGraph) -> Result<()> {
        self.check_shape(g.n())?;
        if Self::certify(g, &self.blocks) != self.certificates {
            return Err(Error::Certificate("stored certificates differ from recomputation".into()));
        }
        let k = self.k() as i64;
        if Rational64::from_integer(self.exceptional_count() as i64) > self.epsilon * Rational64::from_integer(k * k) {
            return Err(Error::Certificate(format!(
                "{} exceptional pairs exceed eps*K^2 = {}",
                self.exceptional_count(),
                self.epsilon * Rational64::from_integer(k * k)
            )));
        }
        Ok(())
    }

    /// Block index of every vertex.
    pub fn block_of(&self) -> Vec<usize> {
        let n = self.blocks.first().map_or(0, VSet::universe);
        let mut out = vec![usize::MAX; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for v in b.iter() {
                out[v] = i;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{PolylineCurve, RPoint};

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn vset_basics() {
        let mut s = VSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        let t = VSet::range(130, 0..10);
        assert_eq!(s.intersection(&t).to_vec(), vec![0]);
        assert_eq!(s.union(&t).len(), 11);
        assert_eq!(t.difference(&s).len(), 9);
        assert_eq!(VSet::from_iter(5, [1, 2]).lex_cmp(&VSet::from_iter(5, [1, 3])), Ordering::Less);
    }

    #[test]
    fn half_graph_examples() {
        assert_eq!(half_graph(1).n(), 2);
        assert_eq!(half_graph(1).edge_count(), 0);
        let g = half_graph(2);
        assert_eq!(g.edges(), vec![(0, 3)]);
        assert_eq!(half_graph(4).edge_count(), 6);
    }

    #[test]
    fn density_examples() {
        let g = half_graph(3);
        let a = g.vset(0..3);
        let b = g.vset(3..6);
        assert_eq!(g.bipartite_density(&a, &b).unwrap(), r(3, 9));
        let k = SimpleGraph::complete(4);
        assert_eq!(k.bipartite_density(&k.vset([0, 1]), &k.vset([2, 3])).unwrap(), r(1, 1));
        let e = SimpleGraph::new(4);
        assert_eq!(e.bipartite_density(&e.vset([0, 1]), &e.vset([2, 3])).unwrap(), r(0, 1));
        assert!(g.bipartite_density(&a, &a).is_err());
        assert!(g.bipartite_density(&a, &g.vset([])).is_err());
    }

    #[test]
    fn pair_status_examples() {
        let k = SimpleGraph::complete(4);
        assert_eq!(k.pair_status(&k.vset([0]), &k.vset([1, 2])).unwrap(), PairStatus::Complete);
        let e = SimpleGraph::new(4);
        assert_eq!(e.pair_status(&e.vset([0]), &e.vset([1, 2])).unwrap(), PairStatus::Empty);
        let h = half_graph(2);
        assert_eq!(h.pair_status(&h.vset([0, 1]), &h.vset([2, 3])).unwrap(), PairStatus::Mixed);
    }

    #[test]
    fn homogeneity_examples() {
        let k = SimpleGraph::complete(5);
        assert!(k.eps_homogeneous(&k.all(), r(0, 1)).unwrap());
        let e = SimpleGraph::new(5);
        assert!(e.eps_homogeneous(&e.all(), r(0, 1)).unwrap());
        let c5 = SimpleGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(c5.induced_density(&c5.all()).unwrap(), r(1, 2));
        assert!(!c5.eps_homogeneous(&c5.all(), r(1, 10)).unwrap());
        assert!(c5.eps_homogeneous(&c5.vset([0]), r(1, 10)).is_err());
    }

    #[test]
    fn blowup_examples() {
        let tri = SimpleGraph::complete(3);
        let same = tri.clone_blowup(&[1, 1, 1]).unwrap();
        assert_eq!(same.graph, tri);
        let edge = SimpleGraph::from_edges(2, [(0, 1)]).unwrap();
        let b = edge.clone_blowup(&[2, 1]).unwrap();
        assert_eq!(b.graph.n(), 3);
        assert_eq!(b.graph.edges(), vec![(0, 2), (1, 2)]);
        let b = tri.clone_blowup(&[2, 1, 1]).unwrap();
        assert_eq!((b.graph.n(), b.graph.edge_count()), (4, 5));
        assert!(tri.clone_blowup(&[1, 0, 1]).is_err());
        assert_eq!(b.project(&b.graph.vset([0, 1, 3])).to_vec(), vec![0, 2]);
        assert_eq!(b.lift(&tri.vset([0])).to_vec(), vec![0, 1]);
    }

    #[test]
    fn subhom_arithmetic() {
        assert_eq!(subhom_bound(r(1, 10), r(1, 2)), r(4, 5));
        let g = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = g.density_bound_check(&g.all()).unwrap();
        assert_eq!(c.upper, g.density() * 2);
        assert!(c.upper_holds() && c.lower_holds());
    }

    #[test]
    fn complement_and_induced() {
        let g = half_graph(3);
        let c = g.complement();
        assert_eq!(c.edge_count(), 15 - 3);
        assert!(!c.has_edge(0, 0));
        let (h, map) = g.induced(&g.vset([0, 4, 5]));
        assert_eq!(map, vec![0, 4, 5]);
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
    }

    fn seg(id: usize, a: (i64, i64), b: (i64, i64)) -> PolylineCurve {
        PolylineCurve::segment(id, RPoint::ints(a.0, a.1), RPoint::ints(b.0, b.1)).unwrap()
    }

    #[test]
    fn intersection_graph_examples() {
        let mut f = CurveFamily::new(vec![seg(0, (0, 0), (1, 0)), seg(1, (0, 1), (1, 1)), seg(2, (0, 2), (1, 2))]);
        assert_eq!(intersection_graph(&f), Err(Error::NotValidated));
        f.validate();
        assert_eq!(intersection_graph(&f).unwrap().edge_count(), 0);
        let f = CurveFamily::new(vec![seg(0, (0, 0), (4, 4)), seg(1, (0, 4), (4, 0)), seg(2, (0, 1), (4, 2))])
            .validated()
            .unwrap();
        let g = intersection_graph(&f).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.labels, Some(vec![0, 1, 2]));
    }

    #[test]
    fn partition_certificates() {
        let g = half_graph(2);
        let blocks = vec![g.vset([0, 1]), g.vset([2, 3])];
        let p = RegPartition::new(&g, blocks, r(1, 1)).unwrap();
        assert_eq!(p.certificate(0, 1), Certificate::Exceptional);
        assert_eq!(p.exceptional_fraction(), r(1, 4));
        p.verify(&g).unwrap();
        let tight = RegPartition { epsilon: r(0, 1), ..p.clone() };
        assert!(tight.verify(&g).is_err());
        assert!(RegPartition::new(&g, vec![g.vset([0]), g.vset([1, 2, 3])], r(1, 1)).is_err());
        assert!(RegPartition::new(&g, vec![g.vset([0, 1]), g.vset([2])], r(1, 1)).is_err());
    }
}
