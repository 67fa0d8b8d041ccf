//! Independent oracles for the integration tests. Nothing here calls the
//! library's geometry or search code; inputs are read through public
//! accessors only.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use psreg::geom::{CurveFamily, Violation};
use psreg::graph::{SimpleGraph, VSet};
use psreg::RPoint;

type Q = BigRational;

fn orient(p: &RPoint, q: &RPoint, r: &RPoint) -> i32 {
    let v = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Common point set of two closed segments.
#[derive(Debug, PartialEq, Eq)]
pub enum Meet {
    None,
    Point(RPoint),
    Overlap,
}

fn within(p: &RPoint, a: &RPoint, b: &RPoint) -> bool {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    lo <= p && p <= hi
}

pub fn segment_meet(p1: &RPoint, p2: &RPoint, q1: &RPoint, q2: &RPoint) -> Meet {
    let (d1, d2) = (orient(p1, p2, q1), orient(p1, p2, q2));
    let (d3, d4) = (orient(q1, q2, p1), orient(q1, q2, p2));
    if d1 == 0 && d2 == 0 {
        // Collinear: points compare lexicographically along the line.
        let (pl, ph) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
        let (ql, qh) = if q1 <= q2 { (q1, q2) } else { (q2, q1) };
        let lo = pl.max(ql);
        let hi = ph.min(qh);
        return match lo.cmp(hi) {
            std::cmp::Ordering::Less => Meet::Overlap,
            std::cmp::Ordering::Equal => Meet::Point(lo.clone()),
            std::cmp::Ordering::Greater => Meet::None,
        };
    }
    if d1 * d2 < 0 && d3 * d4 < 0 {
        let (rx, ry) = (&p2.x - &p1.x, &p2.y - &p1.y);
        let (sx, sy) = (&q2.x - &q1.x, &q2.y - &q1.y);
        let den = &rx * &sy - &ry * &sx;
        let t = ((&q1.x - &p1.x) * &sy - (&q1.y - &p1.y) * &sx) / den;
        return Meet::Point(RPoint::new(&p1.x + &t * &rx, &p1.y + &t * &ry));
    }
    for (d, pt, a, b) in [(d1, q1, p1, p2), (d2, q2, p1, p2), (d3, p1, q1, q2), (d4, p2, q1, q2)] {
        if d == 0 && within(pt, a, b) {
            return Meet::Point(pt.clone());
        }
    }
    Meet::None
}

fn ends(f: &CurveFamily, i: usize) -> (&RPoint, &RPoint) {
    let v = f.curves[i].vertices();
    assert_eq!(v.len(), 2, "segment oracle needs straight segments");
    (&v[0], &v[1])
}

/// Violations of a family of straight segments, by pairwise brute force.
pub fn segment_violations(f: &CurveFamily) -> BTreeSet<Violation> {
    let mut out = BTreeSet::new();
    let mut ids = BTreeSet::new();
    for c in &f.curves {
        if !ids.insert(c.id) {
            out.insert(Violation::DuplicateId(c.id));
        }
    }
    let mut on: BTreeMap<RPoint, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let ((a0, a1), (b0, b1)) = (ends(f, i), ends(f, j));
            let (ia, ib) = (f.curves[i].id, f.curves[j].id);
            match segment_meet(a0, a1, b0, b1) {
                Meet::None => {}
                Meet::Overlap => {
                    out.insert(Violation::Overlap { a: ia, b: ib });
                }
                Meet::Point(p) => {
                    let end_a = &p == a0 || &p == a1;
                    let end_b = &p == b0 || &p == b1;
                    if end_a != end_b {
                        out.insert(Violation::Tangency { a: ia, b: ib, point: p.clone() });
                    }
                    let e = on.entry(p).or_default();
                    e.insert(ia);
                    e.insert(ib);
                }
            }
        }
    }
    for (p, s) in on {
        if s.len() >= 3 {
            out.insert(Violation::TriplePoint { point: p, curves: s.into_iter().collect() });
        }
    }
    out
}

/// Intersection graph of straight segments by brute force.
pub fn segment_graph(f: &CurveFamily) -> SimpleGraph {
    let mut g = SimpleGraph::new(f.len());
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let ((a0, a1), (b0, b1)) = (ends(f, i), ends(f, j));
            if segment_meet(a0, a1, b0, b1) != Meet::None {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// `Some(true)` complete, `Some(false)` empty, `None` mixed or degenerate.
pub fn pair_kind(g: &SimpleGraph, a: &VSet, b: &VSet) -> Option<bool> {
    if a.is_empty() || b.is_empty() || !a.is_disjoint(b) {
        return None;
    }
    let mut seen = (false, false);
    for u in a.iter() {
        for v in b.iter() {
            if g.has_edge(u, v) {
                seen.0 = true;
            } else {
                seen.1 = true;
            }
        }
    }
    match seen {
        (true, false) => Some(true),
        (false, true) => Some(false),
        _ => None,
    }
}

/// Edges inside `s` counted pair by pair.
pub fn edges_inside(g: &SimpleGraph, s: &[usize]) -> usize {
    let mut e = 0;
    for (k, &u) in s.iter().enumerate() {
        e += s[k + 1..].iter().filter(|&&v| g.has_edge(u, v)).count();
    }
    e
}

/// Largest clique and largest independent set by enumerating all subsets.
pub fn brute_clique_and_independent(g: &SimpleGraph) -> (usize, usize) {
    let n = g.n();
    assert!(n <= 20);
    let adj: Vec<u32> = (0..n).map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v)).collect();
    let (mut clique, mut ind) = (0, 0);
    for s in 1u32..(1 << n) {
        let size = s.count_ones() as usize;
        if size <= clique && size <= ind {
            continue;
        }
        let mut is_clique = true;
        let mut is_ind = true;
        for u in 0..n {
            if s >> u & 1 == 1 {
                let others = s & !(1 << u);
                is_clique &= adj[u] & others == others;
                is_ind &= adj[u] & others == 0;
            }
        }
        if is_clique {
            clique = clique.max(size);
        }
        if is_ind {
            ind = ind.max(size);
        }
    }
    (clique, ind)
}

/// Canonical adjacency form by individualization and refinement; two
/// graphs are isomorphic iff their forms agree.
pub fn canonical_form(g: &SimpleGraph) -> (usize, Vec<Vec<bool>>) {
    let n = g.n();
    let start = refine(g, vec![(0..n).collect()]);
    let mut best = None;
    search(g, start, &mut best);
    (n, best.unwrap_or_default())
}

fn refine(g: &SimpleGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let index: Vec<usize> = {
            let mut idx = vec![0; g.n()];
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    idx[v] = c;
                }
            }
            idx
        };
        let sig = |v: usize| {
            let mut s = vec![0usize; cells.len()];
            for u in 0..g.n() {
                if g.has_edge(u, v) {
                    s[index[u]] += 1;
                }
            }
            s
        };
        let mut next = Vec::new();
        for cell in &cells {
            let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                groups.entry(sig(v)).or_default().push(v);
            }
            next.extend(groups.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &SimpleGraph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<Vec<bool>>>) {
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let form: Vec<Vec<bool>> =
                order.iter().map(|&u| order.iter().map(|&v| g.has_edge(u, v)).collect()).collect();
            if best.as_ref().is_none_or(|b| form < *b) {
                *best = Some(form);
            }
        }
        Some(k) => {
            for &v in &cells[k] {
                let mut split = cells.clone();
                let rest: Vec<usize> = cells[k].iter().copied().filter(|&u| u != v).collect();
                split[k] = vec![v];
                split.insert(k + 1, rest);
                search(g, refine(g, split), best);
            }
        }
    }
}

/// Height of a polyline at `x` inside its x-range, by direct interpolation.
pub fn height(pts: &[RPoint], x: &Q) -> Q {
    for w in pts.windows(2) {
        let (a, b) = if w[0].x <= w[1].x { (&w[0], &w[1]) } else { (&w[1], &w[0]) };
        if &a.x <= x && x <= &b.x {
            if a.x == b.x {
                return a.y.clone();
            }
            return &a.y + (&b.y - &a.y) * (x - &a.x) / (&b.x - &a.x);
        }
    }
    panic!("abscissa outside the polyline");
}

/// Sorted disjoint open x-intervals.
pub type Intervals = Vec<(Q, Q)>;

/// Exact "curve i is strictly above curve j" sets for x-monotone curves
/// spanning the same slab, as sorted disjoint open x-intervals. Common
/// points are found by testing every pair of x-overlapping segments; the
/// sign on each gap between them is read at the gap midpoint.
pub struct AboveOracle {
    curves: Vec<Vec<RPoint>>,
    cache: std::cell::RefCell<BTreeMap<(usize, usize), Intervals>>,
}

impl AboveOracle {
    pub fn new(curves: Vec<Vec<RPoint>>) -> Self {
        let curves = curves
            .into_iter()
            .map(|mut c| {
                if c[0].x > c[c.len() - 1].x {
                    c.reverse();
                }
                c
            })
            .collect();
        AboveOracle { curves, cache: Default::default() }
    }

    fn compute(&self, i: usize, j: usize) -> Vec<(Q, Q)> {
        let (a, b) = (&self.curves[i], &self.curves[j]);
        let lo = a[0].x.clone().max(b[0].x.clone());
        let hi = a[a.len() - 1].x.clone().min(b[b.len() - 1].x.clone());
        let mut xs: BTreeSet<Q> = BTreeSet::from([lo.clone(), hi.clone()]);
        for s in a.windows(2) {
            for t in b.windows(2) {
                if s[1].x < t[0].x || t[1].x < s[0].x {
                    continue;
                }
                match segment_meet(&s[0], &s[1], &t[0], &t[1]) {
                    Meet::None => {}
                    Meet::Point(p) => {
                        xs.insert(p.x);
                    }
                    Meet::Overlap => panic!("curves {i} and {j} overlap"),
                }
            }
        }
        let xs: Vec<Q> = xs.into_iter().filter(|x| &lo <= x && x <= &hi).collect();
        let two = Q::from_integer(BigInt::from(2));
        let mut out: Vec<(Q, Q)> = Vec::new();
        for w in xs.windows(2) {
            let m = (&w[0] + &w[1]) / &two;
            if height(a, &m) > height(b, &m) {
                out.push((w[0].clone(), w[1].clone()));
            }
        }
        out
    }

    pub fn above(&self, i: usize, j: usize) -> Vec<(Q, Q)> {
        self.cache.borrow_mut().entry((i, j)).or_insert_with(|| self.compute(i, j)).clone()
    }

    /// Whether curve `c` enters `x0 < x < x1, lower(x) < y < upper(x)`.
    pub fn enters_cell(&self, c: usize, lower: Option<usize>, upper: Option<usize>, x0: &Q, x1: &Q) -> bool {
        if Some(c) == lower || Some(c) == upper {
            return false;
        }
        let mut region = vec![(x0.clone(), x1.clone())];
        for set in [lower.map(|l| self.above(c, l)), upper.map(|u| self.above(u, c))].into_iter().flatten() {
            region = intersect(&region, &set);
        }
        !region.is_empty()
    }
}

fn intersect(a: &[(Q, Q)], b: &[(Q, Q)]) -> Vec<(Q, Q)> {
    let mut out = Vec::new();
    for (a0, a1) in a {
        for (b0, b1) in b {
            let lo = a0.max(b0);
            let hi = a1.min(b1);
            if lo < hi {
                out.push((lo.clone(), hi.clone()));
            }
        }
    }
    out
}
