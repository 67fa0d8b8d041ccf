//! Topological drawings: simplicity checks, disjoint edges, odd crossings,
//! bisection width, the parity identity and the edge-count bound.

use std::collections::BTreeMap;

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{curve_crossings, CrossingKind, CrossingRecord, PolylineCurve, RPoint};
use crate::graph::{next_combination, SimpleGraph, VSet};
use crate::homog::Mode;

/// Largest edge count handled by the exact matching search.
pub const MATCHING_EXACT_LIMIT: usize = 20;
/// Largest vertex count handled by exact bisection.
pub const BISECTION_EXACT_LIMIT: usize = 20;
/// Largest edge count handled by the exact grid search.
pub const GRID_EXACT_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawnEdge {
    pub u: usize,
    pub v: usize,
    pub curve: PolylineCurve,
}

/// Vertex points and one curve per edge. Pairwise crossing records are
/// computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopoDrawing {
    pub points: Vec<RPoint>,
    pub edges: Vec<DrawnEdge>,
    crossings: BTreeMap<(usize, usize), Vec<CrossingRecord>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeRelation {
    SharedVertex,
    Crossing,
    Disjoint,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TopoViolation {
    Loop { edge: usize },
    DuplicatePoint { a: usize, b: usize },
    EndpointMismatch { edge: usize },
    VertexOnEdge { edge: usize, vertex: usize },
    MultipleCommonPoints { a: usize, b: usize, count: usize },
    CrossingAndSharedVertex { a: usize, b: usize },
    Tangency { a: usize, b: usize },
    Overlap { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopoReport {
    pub valid: bool,
    pub violations: Vec<TopoViolation>,
}

impl TopoDrawing {
    pub fn new(points: Vec<RPoint>, edges: Vec<(usize, usize, PolylineCurve)>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (i, (u, v, c)) in edges.into_iter().enumerate() {
            if u >= points.len() || v >= points.len() {
                return Err(Error::InvalidArgument(format!("edge {i} names a missing vertex")));
            }
            out.push(DrawnEdge { u, v, curve: c.with_id(i) });
        }
        let mut crossings = BTreeMap::new();
        for i in 0..out.len() {
            for j in i + 1..out.len() {
                let r = curve_crossings(&out[i].curve, &out[j].curve);
                if !r.is_empty() {
                    crossings.insert((i, j), r);
                }
            }
        }
        Ok(TopoDrawing { points, edges: out, crossings })
    }

    /// Straight-line drawing of the given edges.
    pub fn straight(points: Vec<RPoint>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut drawn = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = (points.get(u), points.get(v));
            let (Some(a), Some(b)) = (a, b) else {
                return Err(Error::InvalidArgument(format!("edge {i} names a missing vertex")));
            };
            drawn.push((u, v, PolylineCurve::segment(i, a.clone(), b.clone())?));
        }
        TopoDrawing::new(points, drawn)
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn records(&self, i: usize, j: usize) -> &[CrossingRecord] {
        let key = if i < j { (i, j) } else { (j, i) };
        self.crossings.get(&key).map_or(&[], Vec::as_slice)
    }

    fn shares_vertex(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.edges[i], &self.edges[j]);
        a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v
    }

    pub fn relation(&self, i: usize, j: usize) -> EdgeRelation {
        if self.shares_vertex(i, j) {
            EdgeRelation::SharedVertex
        } else if !self.records(i, j).is_empty() {
            EdgeRelation::Crossing
        } else {
            EdgeRelation::Disjoint
        }
    }

    /// Underlying abstract graph (parallel edges collapse).
    pub fn graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.points.len());
        for e in &self.edges {
            if e.u != e.v {
                g.add_edge(e.u, e.v).expect("indices checked at construction");
            }
        }
        g
    }

    /// Pairwise disjointness as bitmasks over edges (edge count <= 64).
    fn disjoint_masks(&self) -> Vec<u64> {
        let m = self.edges.len();
        let mut masks = vec![0u64; m];
        for i in 0..m {
            for j in i + 1..m {
                if self.relation(i, j) == EdgeRelation::Disjoint {
                    masks[i] |= 1 << j;
                    masks[j] |= 1 << i;
                }
            }
        }
        masks
    }

    pub fn pairwise_disjoint(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(x, &i)| set[x + 1..].iter().all(|&j| self.relation(i, j) == EdgeRelation::Disjoint))
    }
}

/// Flags every pair that breaks simplicity plus malformed edges.
pub fn validate_simple(d: &TopoDrawing) -> TopoReport {
    let mut v = Vec::new();
    for a in 0..d.points.len() {
        for b in a + 1..d.points.len() {
            if d.points[a] == d.points[b] {
                v.push(TopoViolation::DuplicatePoint { a, b });
            }
        }
    }
    for (i, e) in d.edges.iter().enumerate() {
        if e.u == e.v {
            v.push(TopoViolation::Loop { edge: i });
        }
        let (p, q) = (&d.points[e.u], &d.points[e.v]);
        let (s, t) = (e.curve.start(), e.curve.end());
        if !((s == p && t == q) || (s == q && t == p)) {
            v.push(TopoViolation::EndpointMismatch { edge: i });
        }
        for (w, pt) in d.points.iter().enumerate() {
            if w != e.u && w != e.v && !e.curve.is_endpoint(pt) && e.curve.contains_point(pt) {
                v.push(TopoViolation::VertexOnEdge { edge: i, vertex: w });
            }
        }
    }
    for (&(a, b), recs) in &d.crossings {
        if recs.len() >= 2 {
            v.push(TopoViolation::MultipleCommonPoints { a, b, count: recs.len() });
        }
        let shared = d.shares_vertex(a, b);
        for r in recs {
            match r.kind {
                CrossingKind::ProperCrossing if shared => {
                    v.push(TopoViolation::CrossingAndSharedVertex { a, b });
                }
                CrossingKind::Tangency => {
                    // An edge ending on another's interior is reported as VertexOnEdge.
                    let at_vertex = d.edges[a].curve.is_endpoint(&r.point) || d.edges[b].curve.is_endpoint(&r.point);
                    if !at_vertex {
                        v.push(TopoViolation::Tangency { a, b });
                    }
                }
                CrossingKind::Overlap => v.push(TopoViolation::Overlap { a, b }),
                _ => {}
            }
        }
    }
    v.sort();
    v.dedup();
    TopoReport { valid: v.is_empty(), violations: v }
}

fn max_clique_masks(masks: &[u64], limit: Option<usize>) -> u64 {
    fn rec(masks: &[u64], cand: u64, cur: u64, best: &mut u64, limit: usize) {
        if best.count_ones() as usize >= limit {
            return;
        }
        if cand == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        rec(masks, cand & masks[v], cur | bit, best, limit);
        rec(masks, cand & !bit, cur, best, limit);
    }
    let all = if masks.len() == 64 { u64::MAX } else { (1u64 << masks.len()) - 1 };
    let mut best = 0;
    rec(masks, all, 0, &mut best, limit.unwrap_or(usize::MAX));
    best
}

/// Largest found set of pairwise disjoint edges, stopping at `k` if given.
pub fn disjoint_matching(d: &TopoDrawing, k: Option<usize>, mode: Mode) -> Result<Vec<usize>> {
    let m = d.edge_count();
    let exact = match mode {
        Mode::Exact if m > MATCHING_EXACT_LIMIT => {
            return Err(Error::ExactLimit { size: m, limit: MATCHING_EXACT_LIMIT })
        }
        Mode::Exact => true,
        Mode::Auto => m <= MATCHING_EXACT_LIMIT,
        Mode::Heuristic => false,
    };
    let mut set: Vec<usize> = if exact {
        let masks = d.disjoint_masks();
        let best = max_clique_masks(&masks, k);
        (0..m).filter(|&i| best >> i & 1 == 1).collect()
    } else {
        let conflicts: Vec<usize> =
            (0..m).map(|i| (0..m).filter(|&j| j != i && d.relation(i, j) != EdgeRelation::Disjoint).count()).collect();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| (conflicts[i], i));
        let mut chosen: Vec<usize> = Vec::new();
        for i in order {
            if chosen.iter().all(|&j| d.relation(i, j) == EdgeRelation::Disjoint) {
                chosen.push(i);
            }
        }
        chosen.sort_unstable();
        chosen
    };
    if let Some(k) = k {
        set.truncate(k);
    }
    if !d.pairwise_disjoint(&set) {
        return Err(Error::Certificate("matching edges are not pairwise disjoint".into()));
    }
    Ok(set)
}

/// Number of edge pairs with an odd number of proper crossings in this
/// drawing. This bounds the odd-crossing number of the graph from above.
pub fn odd_crossing_count(d: &TopoDrawing) -> usize {
    d.crossings
        .values()
        .filter(|recs| recs.iter().filter(|r| r.kind == CrossingKind::ProperCrossing).count() % 2 == 1)
        .count()
}

fn binom2(k: u128) -> u128 {
    k * k.saturating_sub(1) / 2
}

/// `C(k1+k2, 2) - C(k1, 2) - C(k2, 2)`, which equals `k1 * k2`.
pub fn parity_value(k1: u64, k2: u64) -> u128 {
    assert!(k1 >= 1 && k2 >= 1, "parity_value needs positive arguments");
    let (a, b) = (k1 as u128, k2 as u128);
    let v = binom2(a + b) - binom2(a) - binom2(b);
    if k1 % 2 == 1 && k2 % 2 == 1 {
        assert!(v % 2 == 1, "parity value {v} is even for odd inputs {k1}, {k2}");
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisection {
    pub v1: VSet,
    pub v2: VSet,
    pub cut: usize,
    pub exact: bool,
}

/// A part is admissible when `3|V_i| <= 2n`.
pub fn part_admissible(size: usize, n: usize) -> bool {
    3 * size <= 2 * n
}

/// Minimum cut over bipartitions whose parts satisfy `3|V_i| <= 2n`.
pub fn bisection_width(g: &SimpleGraph, mode: Mode, seed: u64) -> Result<Bisection> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument("bisection needs at least 2 vertices".into()));
    }
    let exact = match mode {
        Mode::Exact if n > BISECTION_EXACT_LIMIT => {
            return Err(Error::ExactLimit { size: n, limit: BISECTION_EXACT_LIMIT })
        }
        Mode::Exact => true,
        Mode::Auto => n <= BISECTION_EXACT_LIMIT,
        Mode::Heuristic => false,
    };
    let side: Vec<bool> = if exact { exact_bisection(g) } else { local_search_bisection(g, seed) };
    let v1 = VSet::from_iter(n, (0..n).filter(|&v| side[v]));
    let v2 = g.all().difference(&v1);
    if !part_admissible(v1.len(), n) || !part_admissible(v2.len(), n) {
        return Err(Error::Invariant("bisection part exceeds 2n/3".into()));
    }
    let cut = g.edges_between(&v1, &v2);
    Ok(Bisection { v1, v2, cut, exact })
}

fn exact_bisection(g: &SimpleGraph) -> Vec<bool> {
    let n = g.n();
    let rows: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut best = (usize::MAX, 0u32);
    // Vertex 0 always sits in V1.
    for rest in 0..1u32 << (n - 1) {
        let mask = rest << 1 | 1;
        let size = mask.count_ones() as usize;
        if !part_admissible(size, n) || !part_admissible(n - size, n) {
            continue;
        }
        let other = full & !mask;
        let mut cut = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            cut += (rows[v] & other).count_ones() as usize;
        }
        if cut < best.0 {
            best = (cut, mask);
        }
    }
    (0..n).map(|v| best.1 >> v & 1 == 1).collect()
}

fn local_search_bisection(g: &SimpleGraph, seed: u64) -> Vec<bool> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cut_of = |side: &[bool]| g.edges().iter().filter(|&&(u, v)| side[u] != side[v]).count();
    let mut best: Option<(usize, Vec<bool>)> = None;
    for _ in 0..8 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut side = vec![false; n];
        for &v in &order[..n / 2] {
            side[v] = true;
        }
        let mut cut = cut_of(&side);
        loop {
            let mut improved = false;
            let size1 = side.iter().filter(|&&s| s).count();
            // Single moves.
            for v in 0..n {
                let to1 = !side[v];
                let new1 = if to1 { size1 + 1 } else { size1 - 1 };
                if !part_admissible(new1, n) || !part_admissible(n - new1, n) {
                    continue;
                }
                let (same, other) = g.neighbors(v).iter().fold((0i64, 0i64), |(s, o), w| {
                    if side[w] == side[v] {
                        (s + 1, o)
                    } else {
                        (s, o + 1)
                    }
                });
                if same < other {
                    side[v] = to1;
                    cut = (cut as i64 + same - other) as usize;
                    improved = true;
                    break;
                }
            }
            if !improved {
                'swap: for u in 0..n {
                    for v in u + 1..n {
                        if side[u] == side[v] {
                            continue;
                        }
                        side.swap(u, v);
                        let c = cut_of(&side);
                        if c < cut {
                            cut = c;
                            improved = true;
                            break 'swap;
                        }
                        side.swap(u, v);
                    }
                }
            }
            if !improved {
                break;
            }
        }
        if best.as_ref().is_none_or(|(c, _)| cut < *c) {
            best = Some((cut, side));
        }
    }
    best.expect("at least one start").1
}

#[derive(Clone, Debug, PartialEq)]
pub struct BisectReport {
    pub n: usize,
    pub b_found: usize,
    pub exact: bool,
    pub odd_cr: usize,
    pub sum_deg_sq: usize,
    /// `b / (log2 n * sqrt(odd_cr + sum d^2))`, zero when `b = 0`.
    pub ratio: f64,
}

pub fn bisect_inequality_report(d: &TopoDrawing, seed: u64) -> Result<BisectReport> {
    let g = d.graph();
    let b = bisection_width(&g, Mode::Auto, seed)?;
    let odd = odd_crossing_count(d);
    let sum_deg_sq = (0..g.n()).map(|v| g.degree(v) * g.degree(v)).sum::<usize>();
    let ratio = if b.cut == 0 {
        0.0
    } else {
        b.cut as f64 / ((g.n() as f64).log2() * ((odd + sum_deg_sq) as f64).sqrt())
    };
    Ok(BisectReport { n: g.n(), b_found: b.cut, exact: b.exact, odd_cr: odd, sum_deg_sq, ratio })
}

/// Upper bound on the edges of a simple drawing with no `k` pairwise
/// disjoint edges.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EdgeBound {
    /// An exact rational value (base cases).
    Exact(Rational64),
    /// `log2` of the bound, rounded up.
    Log2(f64),
}

/// Default constant of the linear bound for `k = 2`.
pub const THRACKLE_CONSTANT: (i64, i64) = (7, 5);

fn round_up(x: f64) -> f64 {
    x + x.abs() * 4.0 * f64::EPSILON + f64::MIN_POSITIVE
}

impl EdgeBound {
    /// `log2` of the bound, rounded up.
    pub fn log2(&self) -> f64 {
        match *self {
            EdgeBound::Exact(r) => round_up((*r.numer() as f64 / *r.denom() as f64).log2()),
            EdgeBound::Log2(l) => l,
        }
    }

    pub fn admits(&self, edges: usize) -> bool {
        match *self {
            EdgeBound::Exact(r) => Rational64::from_integer(edges as i64) <= r,
            EdgeBound::Log2(l) => edges == 0 || (edges as f64).log2() <= l,
        }
    }
}

pub fn edge_bound(n: usize, k: usize, c2: f64) -> EdgeBound {
    edge_bound_with(n, k, c2, Rational64::new(THRACKLE_CONSTANT.0, THRACKLE_CONSTANT.1))
}

/// `1` for `n = 2`, `thrackle * n` for `k = 2`, otherwise the larger of
/// `n (log2 n)^(c2 log2 k)` and `thrackle * n`.
pub fn edge_bound_with(n: usize, k: usize, c2: f64, thrackle: Rational64) -> EdgeBound {
    assert!(n >= 2 && k >= 2, "edge_bound needs n >= 2 and k >= 2");
    if n == 2 {
        return EdgeBound::Exact(Rational64::from_integer(1));
    }
    let linear = thrackle * Rational64::from_integer(n as i64);
    if k == 2 {
        return EdgeBound::Exact(linear);
    }
    let ln = (n as f64).log2();
    let poly = round_up(ln + round_up(c2 * (k as f64).log2()) * round_up(ln.log2()));
    let lin = EdgeBound::Exact(linear).log2();
    if poly >= lin {
        EdgeBound::Log2(poly)
    } else {
        EdgeBound::Exact(linear)
    }
}

pub fn check_edge_bound(d: &TopoDrawing, k: usize, c2: f64) -> bool {
    edge_bound(d.vertex_count().max(2), k, c2).admits(d.edge_count())
}

/// Two `k`-sets of pairwise disjoint edges with every cross pair crossing,
/// or `None` after exhausting all candidates.
pub fn find_natural_grid(d: &TopoDrawing, k: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let m = d.edge_count();
    if m > GRID_EXACT_LIMIT {
        return Err(Error::ExactLimit { size: m, limit: GRID_EXACT_LIMIT });
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if 2 * k > m {
        return Ok(None);
    }
    let mut e1: Vec<usize> = (0..k).collect();
    loop {
        if d.pairwise_disjoint(&e1) {
            let cand: Vec<usize> =
                (0..m).filter(|&j| e1.iter().all(|&i| d.relation(i, j) == EdgeRelation::Crossing)).collect();
            if cand.len() >= k {
                let mut pick: Vec<usize> = (0..k).collect();
                loop {
                    let e2: Vec<usize> = pick.iter().map(|&i| cand[i]).collect();
                    if d.pairwise_disjoint(&e2) {
                        return Ok(Some((e1, e2)));
                    }
                    if !next_combination(&mut pick, cand.len()) {
                        break;
                    }
                }
            }
        }
        if !next_combination(&mut e1, m) {
            return Ok(None);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{convex_cycle, convex_drawing, star_drawing};

    fn pts(p: &[(i64, i64)]) -> Vec<RPoint> {
        p.iter().map(|&(x, y)| RPoint::ints(x, y)).collect()
    }

    fn brute_matching(d: &TopoDrawing) -> usize {
        let m = d.edge_count();
        (0u32..1 << m)
            .filter(|&s| d.pairwise_disjoint(&(0..m).filter(|&i| s >> i & 1 == 1).collect::<Vec<_>>()))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn convex_k4() {
        let d = convex_drawing(4).unwrap();
        assert!(validate_simple(&d).valid);
        assert_eq!(disjoint_matching(&d, None, Mode::Exact).unwrap().len(), 2);
        assert_eq!(brute_matching(&d), 2);
        assert_eq!(odd_crossing_count(&d), 1);
    }

    #[test]
    fn cycle_and_star() {
        let c = convex_cycle(5).unwrap();
        assert_eq!(disjoint_matching(&c, None, Mode::Exact).unwrap().len(), 2);
        assert_eq!(brute_matching(&c), 2);
        let s = star_drawing(6).unwrap();
        assert_eq!(disjoint_matching(&s, None, Mode::Exact).unwrap().len(), 1);
        assert_eq!(odd_crossing_count(&s), 0);
    }

    #[test]
    fn double_crossing_is_invalid_and_even() {
        let zig = PolylineCurve::new(0, pts(&[(0, 0), (2, 2), (4, 0)])).unwrap();
        let flat = PolylineCurve::segment(1, RPoint::ints(0, 1), RPoint::ints(4, 1)).unwrap();
        let d = TopoDrawing::new(pts(&[(0, 0), (4, 0), (0, 1), (4, 1)]), vec![(0, 1, zig), (2, 3, flat)]).unwrap();
        let r = validate_simple(&d);
        assert_eq!(r.violations, vec![TopoViolation::MultipleCommonPoints { a: 0, b: 1, count: 2 }]);
        assert_eq!(odd_crossing_count(&d), 0);
    }

    #[test]
    fn vertex_on_edge() {
        let d = TopoDrawing::straight(pts(&[(0, 0), (2, 0), (1, 0), (1, 5)]), &[(0, 1), (2, 3)]).unwrap();
        let r = validate_simple(&d);
        assert_eq!(r.violations, vec![TopoViolation::VertexOnEdge { edge: 0, vertex: 2 }]);
    }

    #[test]
    fn crossing_adjacent_edges_flagged() {
        let a = PolylineCurve::new(0, pts(&[(0, 0), (4, 4)])).unwrap();
        let b = PolylineCurve::new(1, pts(&[(0, 0), (4, 0), (1, 3)])).unwrap();
        let d = TopoDrawing::new(pts(&[(0, 0), (4, 4), (1, 3)]), vec![(0, 1, a), (0, 2, b)]).unwrap();
        let r = validate_simple(&d);
        assert!(r.violations.contains(&TopoViolation::CrossingAndSharedVertex { a: 0, b: 1 }));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_value(1, 1), 1);
        assert_eq!(parity_value(1, 3), 3);
        assert_eq!(parity_value(2, 3), 6);
    }

    #[test]
    fn bisection_examples() {
        let two_tri = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(bisection_width(&two_tri, Mode::Exact, 0).unwrap().cut, 0);
        let k4 = SimpleGraph::complete(4);
        let b = bisection_width(&k4, Mode::Exact, 0).unwrap();
        assert_eq!((b.cut, b.v1.len(), b.v2.len()), (4, 2, 2));
        let p6 = SimpleGraph::from_edges(6, (0..5).map(|i| (i, i + 1))).unwrap();
        assert_eq!(bisection_width(&p6, Mode::Exact, 0).unwrap().cut, 1);
        assert_eq!(bisection_width(&p6, Mode::Heuristic, 3).unwrap().cut, 1);
        assert!(bisection_width(&SimpleGraph::new(1), Mode::Exact, 0).is_err());
    }

    #[test]
    fn edge_bound_examples() {
        assert_eq!(edge_bound(2, 5, 10.0), EdgeBound::Exact(Rational64::from_integer(1)));
        assert_eq!(edge_bound(10, 2, 10.0), EdgeBound::Exact(Rational64::from_integer(14)));
        assert!(edge_bound(10, 2, 1.0).admits(14));
        assert!(!edge_bound(10, 2, 1.0).admits(15));
        let k6 = convex_drawing(6).unwrap();
        assert!(check_edge_bound(&k6, 3, 10.0));
        assert!(edge_bound(6, 3, 10.0).log2() >= (15f64).log2());
    }

    #[test]
    fn grid_examples() {
        let x = TopoDrawing::straight(pts(&[(0, 0), (2, 2), (0, 2), (2, 0)]), &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(find_natural_grid(&x, 1).unwrap(), Some((vec![0], vec![1])));
        let plane = convex_cycle(6).unwrap();
        assert_eq!(find_natural_grid(&plane, 1).unwrap(), None);
        let grid = TopoDrawing::straight(
            pts(&[(1, 0), (1, 3), (2, 0), (2, 3), (0, 1), (3, 1), (0, 2), (3, 2)]),
            &[(0, 1), (2, 3), (4, 5), (6, 7)],
        )
        .unwrap();
        assert_eq!(find_natural_grid(&grid, 2).unwrap(), Some((vec![0, 1], vec![2, 3])));
        assert_eq!(find_natural_grid(&grid, 3).unwrap(), None);
    }

    #[test]
    fn relation_trichotomy() {
        let d = convex_drawing(5).unwrap();
        for i in 0..d.edge_count() {
            for j in i + 1..d.edge_count() {
                if d.relation(i, j) == EdgeRelation::Disjoint {
                    assert!(d.records(i, j).is_empty());
                    let (a, b) = (&d.edges[i], &d.edges[j]);
                    let mut ends = vec![a.u, a.v, b.u, b.v];
                    ends.sort_unstable();
                    ends.dedup();
                    assert_eq!(ends.len(), 4);
                }
            }
        }
    }
}
