//! Curve separators through the planarization of an arrangement, and the
//! disjoint-pair routes they power.

use std::collections::{BTreeMap, VecDeque};

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::geom::{Color, CurveFamily, RPoint, Rational};
use crate::graph::{intersection_graph, SimpleGraph, VSet};
use crate::homog::{best_bipair, HomPair, HomStatus, Method, OracleConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorResult {
    pub s0: VSet,
    pub v1: VSet,
    pub v2: VSet,
    /// Proper crossings in the family.
    pub crossing_count_m: usize,
}

impl SeparatorResult {
    /// `|s0| / sqrt(m + 1)`.
    pub fn ratio(&self) -> f64 {
        self.s0.len() as f64 / ((self.crossing_count_m + 1) as f64).sqrt()
    }

    /// Exhaustive check: the three sets partition the vertices, both sides
    /// satisfy `3|v_i| <= 2n` (or `|v_i| <= 1` when `n = 1`) and no edge
    /// joins `v1` to `v2`.
    pub fn verify(&self, g: &SimpleGraph) -> Result<()> {
        let n = g.n();
        let union = self.s0.union(&self.v1).union(&self.v2);
        let sizes = self.s0.len() + self.v1.len() + self.v2.len();
        if union.len() != n || sizes != n {
            return Err(Error::Certificate("separator sets do not partition the vertices".into()));
        }
        let cap = side_cap(n);
        if self.v1.len() > cap || self.v2.len() > cap {
            return Err(Error::Certificate(format!(
                "separator sides {} and {} exceed the cap {cap}",
                self.v1.len(),
                self.v2.len()
            )));
        }
        if g.edges_between(&self.v1, &self.v2) != 0 {
            return Err(Error::Certificate("an edge joins the two separator sides".into()));
        }
        Ok(())
    }
}

/// Largest side allowed: `floor(2n/3)`, or 1 for a single curve.
pub fn side_cap(n: usize) -> usize {
    (2 * n / 3).max(n.min(1))
}

/// Planar graph of an arrangement: nodes are crossing points and curve
/// endpoints; edges are the pieces of curves between consecutive nodes.
struct Planarization {
    points: Vec<RPoint>,
    adj: Vec<Vec<usize>>,
    /// Piece geometry per undirected edge `(min, max)`.
    pieces: BTreeMap<(usize, usize), Vec<RPoint>>,
    /// Curves (family indices) through each node.
    through: Vec<Vec<usize>>,
    weight: Vec<usize>,
}

impl Planarization {
    fn build(f: &CurveFamily, crossings: &BTreeMap<usize, Vec<RPoint>>, curves: &[usize]) -> Self {
        let mut ids: BTreeMap<RPoint, usize> = BTreeMap::new();
        let mut p = Planarization {
            points: Vec::new(),
            adj: Vec::new(),
            pieces: BTreeMap::new(),
            through: Vec::new(),
            weight: Vec::new(),
        };
        let mut node = |p: &mut Planarization, pt: &RPoint| -> usize {
            *ids.entry(pt.clone()).or_insert_with(|| {
                p.points.push(pt.clone());
                p.adj.push(Vec::new());
                p.through.push(Vec::new());
                p.weight.push(0);
                p.points.len() - 1
            })
        };
        for &ci in curves {
            let c = &f.curves[ci];
            let mut on: Vec<((usize, Rational), RPoint)> = vec![
                (c.position(c.start()).expect("start on curve"), c.start().clone()),
                (c.position(c.end()).expect("end on curve"), c.end().clone()),
            ];
            for x in crossings.get(&ci).into_iter().flatten() {
                on.push((c.position(x).expect("crossing on curve"), x.clone()));
            }
            on.sort();
            on.dedup_by(|x, y| x.1 == y.1);
            let left = node(&mut p, c.left_endpoint());
            p.weight[left] += 1;
            let mut prev: Option<(usize, (usize, Rational), RPoint)> = None;
            for (pos, pt) in on {
                let id = node(&mut p, &pt);
                p.through[id].push(ci);
                if let Some((pid, ppos, ppt)) = prev {
                    let mut geo = vec![ppt];
                    geo.extend(c.vertices()[ppos.0 + 1..=pos.0].iter().cloned());
                    if geo.last() != Some(&pt) {
                        geo.push(pt.clone());
                    }
                    geo.dedup();
                    let key = (pid.min(id), pid.max(id));
                    if pid > id {
                        geo.reverse();
                    }
                    p.adj[pid].push(id);
                    p.adj[id].push(pid);
                    p.pieces.insert(key, geo);
                }
                prev = Some((id, pos, pt));
            }
        }
        p
    }

    fn len(&self) -> usize {
        self.points.len()
    }

    fn bfs(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let mut dist = vec![usize::MAX; self.len()];
        let mut parent = vec![usize::MAX; self.len()];
        let mut q = VecDeque::from([root]);
        dist[root] = 0;
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    fn curves_on(&self, nodes: impl Iterator<Item = usize>, n: usize) -> VSet {
        VSet::from_iter(n, nodes.flat_map(|v| self.through[v].iter().copied()))
    }

    /// Closed polygon along the tree paths to `u` and `v` plus the piece
    /// `u`-`v`; returns the cycle's nodes and its vertex chain.
    fn fundamental_cycle(&self, parent: &[usize], u: usize, v: usize) -> (Vec<usize>, Vec<RPoint>) {
        let path = |mut x: usize| {
            let mut out = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                out.push(x);
            }
            out
        };
        let (pu, pv) = (path(u), path(v));
        // Strip the common tail above the lowest common ancestor.
        let (mut i, mut j) = (pu.len(), pv.len());
        while i > 1 && j > 1 && pu[i - 2] == pv[j - 2] {
            i -= 1;
            j -= 1;
        }
        let mut nodes: Vec<usize> = pu[..i].to_vec();
        nodes.extend(pv[..j - 1].iter().rev());
        // nodes: u .. lca .. v; close with v -> u.
        let mut poly: Vec<RPoint> = Vec::new();
        let mut walk = nodes.clone();
        walk.push(u);
        for w in walk.windows(2) {
            let (a, b) = (w[0], w[1]);
            let mut geo = self.pieces[&(a.min(b), a.max(b))].clone();
            if a > b {
                geo.reverse();
            }
            if poly.last() == geo.first() {
                poly.pop();
            }
            poly.extend(geo);
        }
        poly.pop();
        (nodes, poly)
    }
}

/// Even-odd test for a point not on the polygon boundary.
fn inside_polygon(p: &RPoint, poly: &[RPoint]) -> bool {
    let mut inside = false;
    for i in 0..poly.len() {
        let (a, b) = (&poly[i], &poly[(i + 1) % poly.len()]);
        if (a.y > p.y) != (b.y > p.y) {
            // x-coordinate of the edge at height p.y, compared exactly.
            let x = &a.x + (&b.x - &a.x) * (&p.y - &a.y) / (&b.y - &a.y);
            if x > p.x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Splits a heavy component by a BFS level or a fundamental cycle of its
/// planarization; returns the curves to remove.
fn split_component(
    f: &CurveFamily,
    crossings: &BTreeMap<usize, Vec<RPoint>>,
    comp: &[usize],
    cap: usize,
) -> VSet {
    let n = f.len();
    let p = Planarization::build(f, crossings, comp);
    let total: usize = p.weight.iter().sum();
    // Pseudo-peripheral root, then the BFS tree from the middle of a long path.
    let (d0, _) = p.bfs(0);
    let far = (0..p.len()).max_by_key(|&v| (d0[v], v)).expect("nonempty");
    let (d1, _) = p.bfs(far);
    let other = (0..p.len()).max_by_key(|&v| (d1[v], v)).expect("nonempty");
    let (d2, _) = p.bfs(other);
    let root = (0..p.len()).min_by_key(|&v| (d1[v].max(d2[v]), v)).expect("nonempty");
    let (dist, parent) = p.bfs(root);
    let depth = dist.iter().copied().max().unwrap_or(0);
    let mut level_w = vec![0usize; depth + 1];
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); depth + 1];
    for v in 0..p.len() {
        level_w[dist[v]] += p.weight[v];
        levels[dist[v]].push(v);
    }
    let mut best: Option<VSet> = None;
    let mut consider = |cut: VSet| {
        if best.as_ref().is_none_or(|b| cut.len() < b.len()) {
            best = Some(cut);
        }
    };
    let mut below = 0;
    for i in 0..=depth {
        let above = total - below - level_w[i];
        if below <= cap && above <= cap {
            consider(p.curves_on(levels[i].iter().copied(), n));
        }
        below += level_w[i];
    }
    // Fundamental cycles from evenly sampled non-tree edges.
    let non_tree: Vec<(usize, usize)> = p
        .pieces
        .keys()
        .copied()
        .filter(|&(a, b)| parent[a] != b && parent[b] != a)
        .collect();
    let samples = 24.min(non_tree.len());
    for k in 0..samples {
        let (u, v) = non_tree[k * non_tree.len() / samples];
        let (nodes, poly) = p.fundamental_cycle(&parent, u, v);
        let on: std::collections::BTreeSet<usize> = nodes.iter().copied().collect();
        let mut inside = 0;
        let mut outside = 0;
        for w in 0..p.len() {
            if p.weight[w] == 0 || on.contains(&w) {
                continue;
            }
            if inside_polygon(&p.points[w], &poly) {
                inside += p.weight[w];
            } else {
                outside += p.weight[w];
            }
        }
        if inside <= cap && outside <= cap {
            consider(p.curves_on(nodes.into_iter(), n));
        }
    }
    best.expect("the median level always qualifies")
}

fn components(g: &SimpleGraph, alive: &VSet) -> Vec<Vec<usize>> {
    let mut seen = VSet::new(g.n());
    let mut out = Vec::new();
    for s in alive.iter() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for v in g.neighbors(u).intersection(alive).iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn crossing_points(f: &CurveFamily) -> Result<BTreeMap<usize, Vec<RPoint>>> {
    let report = f.valid_report()?;
    let mut by_curve: BTreeMap<usize, Vec<RPoint>> = BTreeMap::new();
    for c in &report.contacts {
        for r in &c.records {
            by_curve.entry(c.a).or_default().push(r.point.clone());
            by_curve.entry(c.b).or_default().push(r.point.clone());
        }
    }
    Ok(by_curve)
}

/// Separator of the intersection graph of a validated family, found in the
/// planarization and lifted back to whole curves.
pub fn curve_separator(f: &CurveFamily) -> Result<SeparatorResult> {
    let g = intersection_graph(f)?;
    let m = f.valid_report()?.proper_crossings;
    let crossings = crossing_points(f)?;
    let n = f.len();
    let cap = side_cap(n);
    let mut s0 = VSet::new(n);
    loop {
        let alive = g.all().difference(&s0);
        let comps = components(&g, &alive);
        let Some(heavy) = comps.iter().find(|c| c.len() > cap) else {
            restore(&g, &mut s0, cap);
            let comps = components(&g, &g.all().difference(&s0));
            let (v1, v2) = pack(n, comps);
            let res = SeparatorResult { s0, v1, v2, crossing_count_m: m };
            res.verify(&g)?;
            return Ok(res);
        };
        let cut = split_component(f, &crossings, heavy, cap);
        if cut.is_subset(&s0) {
            return Err(Error::Invariant("separator made no progress".into()));
        }
        s0 = s0.union(&cut);
    }
}

/// Returns separator curves to the graph while every component stays
/// within the cap.
fn restore(g: &SimpleGraph, s0: &mut VSet, cap: usize) {
    for v in s0.to_vec() {
        let mut alive = g.all().difference(s0);
        alive.insert(v);
        let mut comp = VSet::from_iter(g.n(), [v]);
        let mut frontier = comp.clone();
        while !frontier.is_empty() && comp.len() <= cap {
            let mut next = VSet::new(g.n());
            for u in frontier.iter() {
                next = next.union(&g.neighbors(u).intersection(&alive));
            }
            frontier = next.difference(&comp);
            comp = comp.union(&frontier);
        }
        if comp.len() <= cap {
            s0.remove(v);
        }
    }
}

/// Components go to two sides: a component of at least a third of the
/// total stands alone, otherwise largest first onto the lighter side.
fn pack(n: usize, mut comps: Vec<Vec<usize>>) -> (VSet, VSet) {
    comps.sort_by_key(|c| (std::cmp::Reverse(c.len()), c[0]));
    let total: usize = comps.iter().map(Vec::len).sum();
    let (mut v1, mut v2) = (VSet::new(n), VSet::new(n));
    if let Some(first) = comps.first() {
        if 3 * first.len() >= total {
            for (i, c) in comps.iter().enumerate() {
                let side = if i == 0 { &mut v1 } else { &mut v2 };
                c.iter().for_each(|&v| side.insert(v));
            }
            return (v1, v2);
        }
    }
    for c in comps {
        let side = if v1.len() <= v2.len() { &mut v1 } else { &mut v2 };
        c.iter().for_each(|&v| side.insert(v));
    }
    (v1, v2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisjointOutcome {
    Pair { red: VSet, blue: VSet },
    NotApplicable(String),
}

fn colors_of(f: &CurveFamily) -> Result<&[Color]> {
    f.colors.as_deref().ok_or_else(|| Error::InvalidArgument("family has no red/blue colors".into()))
}

/// Intersecting pairs among red, among blue, and between the colors.
pub fn color_pair_counts(f: &CurveFamily) -> Result<(usize, usize, usize)> {
    let colors = colors_of(f)?;
    let report = f.valid_report()?;
    let mut counts = (0, 0, 0);
    for c in &report.contacts {
        match (colors[c.a], colors[c.b]) {
            (Color::Red, Color::Red) => counts.0 += 1,
            (Color::Blue, Color::Blue) => counts.1 += 1,
            _ => counts.2 += 1,
        }
    }
    Ok(counts)
}

/// Red and blue sets with no red curve meeting a blue one, each of size at
/// least `ceil(n/24)`, for sparse families with `n` curves of each color.
pub fn disjoint_linear_pair(f: &CurveFamily, eps0: Rational64) -> Result<DisjointOutcome> {
    let colors = colors_of(f)?;
    let g = intersection_graph(f)?;
    let reds: Vec<usize> = (0..f.len()).filter(|&i| colors[i] == Color::Red).collect();
    let blues: Vec<usize> = (0..f.len()).filter(|&i| colors[i] == Color::Blue).collect();
    let n = reds.len();
    if n == 0 || blues.len() != n {
        return Ok(DisjointOutcome::NotApplicable(format!(
            "needs equal nonempty color classes, got {} red and {} blue",
            n,
            blues.len()
        )));
    }
    let (rr, bb, rb) = color_pair_counts(f)?;
    let limit = eps0 * Rational64::from_integer((n * n) as i64);
    for (what, count) in [("red-red", rr), ("blue-blue", bb), ("red-blue", rb)] {
        if Rational64::from_integer(count as i64) > limit {
            return Ok(DisjointOutcome::NotApplicable(format!("{what} intersecting pairs {count} exceed {limit}")));
        }
    }
    let sep = curve_separator(f)?;
    let alive = g.all().difference(&sep.s0);
    let comps = components(&g, &alive);
    let (red, blue) = best_color_split(&comps, colors, f.len());
    let need = n.div_ceil(24);
    if red.len() < need || blue.len() < need {
        return Ok(DisjointOutcome::NotApplicable(format!(
            "best split has {} red and {} blue, below n/24 = {need}",
            red.len(),
            blue.len()
        )));
    }
    if g.edges_between(&red, &blue) != 0 {
        return Err(Error::Certificate("red and blue sides intersect".into()));
    }
    Ok(DisjointOutcome::Pair { red, blue })
}

/// Picks components `I` maximizing `min(red in I, blue outside I)` by a
/// knapsack over red counts.
fn best_color_split(comps: &[Vec<usize>], colors: &[Color], n: usize) -> (VSet, VSet) {
    let counts: Vec<(usize, usize)> = comps
        .iter()
        .map(|c| {
            let r = c.iter().filter(|&&v| colors[v] == Color::Red).count();
            (r, c.len() - r)
        })
        .collect();
    let red_total: usize = counts.iter().map(|c| c.0).sum();
    let blue_total: usize = counts.iter().map(|c| c.1).sum();
    // dp[r] = (least blue inside, choice) over subsets with r reds inside.
    let mut dp: Vec<Option<(usize, Vec<bool>)>> = vec![None; red_total + 1];
    dp[0] = Some((0, vec![false; comps.len()]));
    for (k, &(r, b)) in counts.iter().enumerate() {
        if r == 0 {
            continue;
        }
        for s in (r..=red_total).rev() {
            if let Some((bi, choice)) = dp[s - r].clone() {
                let cand = bi + b;
                if dp[s].as_ref().is_none_or(|(cur, _)| cand < *cur) {
                    let mut choice = choice;
                    choice[k] = true;
                    dp[s] = Some((cand, choice));
                }
            }
        }
    }
    let mut best: Option<(usize, &Vec<bool>)> = None;
    for (s, entry) in dp.iter().enumerate() {
        if let Some((bi, choice)) = entry {
            let v = s.min(blue_total - bi);
            if best.is_none_or(|(bv, _)| v > bv) {
                best = Some((v, choice));
            }
        }
    }
    let choice = best.map(|b| b.1.clone()).unwrap_or_default();
    let mut red = VSet::new(n);
    let mut blue = VSet::new(n);
    for (k, c) in comps.iter().enumerate() {
        for &v in c {
            match (colors[v], choice.get(k).copied().unwrap_or(false)) {
                (Color::Red, true) => red.insert(v),
                (Color::Blue, false) => blue.insert(v),
                _ => {}
            }
        }
    }
    (red, blue)
}

/// Homogeneous red/blue pair for families whose same-color intersection
/// graphs are sparse. Few red-blue intersections go through the separator;
/// otherwise the complete-pair search decides.
pub fn low_low_pair(f: &CurveFamily, cfg: &OracleConfig) -> Result<HomPair> {
    let colors = colors_of(f)?;
    let g = intersection_graph(f)?;
    let red = g.vset((0..f.len()).filter(|&i| colors[i] == Color::Red));
    let blue = g.vset((0..f.len()).filter(|&i| colors[i] == Color::Blue));
    if red.is_empty() || blue.is_empty() {
        return Err(Error::Precondition("both colors must be present".into()));
    }
    for (what, side) in [("red", &red), ("blue", &blue)] {
        if side.len() >= 2 {
            let d = g.induced_density(side)?;
            if d >= cfg.eps1 {
                return Err(Error::Precondition(format!("{what} density {d} is not below {}", cfg.eps1)));
            }
        }
    }
    let n = red.len().max(blue.len());
    let rb = g.edges_between(&red, &blue);
    let mut pair: Option<HomPair> = None;
    if Rational64::from_integer(rb as i64) <= cfg.eps0 * Rational64::from_integer((n * n) as i64) {
        if let DisjointOutcome::Pair { red: r, blue: b } = disjoint_linear_pair(f, cfg.eps0)? {
            pair = Some(HomPair::new(&g, r, b, HomStatus::Empty, Method::SeparatorRoute)?);
        }
    }
    let pair = match pair {
        Some(p) => p,
        None => {
            let c = best_bipair(&g, &red, &blue, HomStatus::Complete, cfg)?;
            let e = best_bipair(&g, &red, &blue, HomStatus::Empty, cfg)?;
            match (c, e) {
                (Some(c), Some(e)) => {
                    if (e.min_side(), e.total()) > (c.min_side(), c.total()) {
                        e
                    } else {
                        c
                    }
                }
                (Some(p), None) | (None, Some(p)) => p,
                (None, None) => return Err(Error::OracleFailure("no homogeneous red/blue pair".into())),
            }
        }
    };
    let (a, b) = maximal_extension(&g, pair.a, pair.b, &red, &blue, pair.status);
    HomPair::new(&g, a, b, pair.status, pair.method)
}

/// Greedily adds vertices of `A` then `B` compatible with the other side.
fn maximal_extension(g: &SimpleGraph, a: VSet, b: VSet, big_a: &VSet, big_b: &VSet, st: HomStatus) -> (VSet, VSet) {
    let fits = |v: usize, other: &VSet| {
        let k = g.neighbors(v).intersection_len(other);
        match st {
            HomStatus::Complete => k == other.len(),
            HomStatus::Empty => k == 0,
        }
    };
    let mut a = a;
    for v in big_a.difference(&a).iter() {
        if fits(v, &b) {
            a.insert(v);
        }
    }
    let mut b = b;
    for v in big_b.difference(&b).iter() {
        if fits(v, &a) {
            b.insert(v);
        }
    }
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::PolylineCurve;
    use crate::instances::{gen_random_segments, random_segments, BBox, SegmentParams};

    fn seg(id: usize, a: (i64, i64), b: (i64, i64)) -> PolylineCurve {
        PolylineCurve::segment(id, RPoint::ints(a.0, a.1), RPoint::ints(b.0, b.1)).unwrap()
    }

    #[test]
    fn disjoint_curves_need_no_separator() {
        let f = CurveFamily::new((0..7).map(|i| seg(i, (0, i as i64), (5, i as i64))).collect()).validated().unwrap();
        let r = curve_separator(&f).unwrap();
        assert!(r.s0.is_empty());
        assert!(3 * r.v1.len() <= 14 && 3 * r.v2.len() <= 14);
    }

    #[test]
    fn two_crossing_curves() {
        let f = CurveFamily::new(vec![seg(0, (0, 0), (2, 2)), seg(1, (0, 2), (2, 0))]).validated().unwrap();
        let r = curve_separator(&f).unwrap();
        assert!(r.s0.len() <= 1);
        r.verify(&intersection_graph(&f).unwrap()).unwrap();
    }

    #[test]
    fn random_segments_separate() {
        for seed in 0..5 {
            let f = gen_random_segments(30, seed, BBox::default()).unwrap();
            let r = curve_separator(&f).unwrap();
            r.verify(&intersection_graph(&f).unwrap()).unwrap();
        }
    }

    #[test]
    fn polygon_parity() {
        let sq: Vec<RPoint> = [(0, 0), (4, 0), (4, 4), (0, 4)].iter().map(|&(x, y)| RPoint::ints(x, y)).collect();
        assert!(inside_polygon(&RPoint::ints(1, 1), &sq));
        assert!(!inside_polygon(&RPoint::ints(5, 1), &sq));
        assert!(inside_polygon(&RPoint::new(crate::geom::int(2), crate::geom::ratio(1, 2)), &sq));
    }

    fn colored(f: CurveFamily, reds: usize) -> CurveFamily {
        let n = f.len();
        f.with_colors((0..n).map(|i| if i < reds { Color::Red } else { Color::Blue }).collect())
            .unwrap()
            .validated()
            .unwrap()
    }

    #[test]
    fn separated_disks() {
        // Red segments on the left, blue on the right, no crossings.
        let mut curves = Vec::new();
        for i in 0..24 {
            curves.push(seg(i, (0, 2 * i as i64), (3, 2 * i as i64 + 1)));
        }
        for i in 0..24 {
            curves.push(seg(24 + i, (10, 2 * i as i64), (13, 2 * i as i64 + 1)));
        }
        let f = colored(CurveFamily::new(curves), 24);
        match disjoint_linear_pair(&f, Rational64::new(1, 64)).unwrap() {
            DisjointOutcome::Pair { red, blue } => {
                assert!(!red.is_empty() && !blue.is_empty());
                assert!(red.iter().all(|v| v < 24) && blue.iter().all(|v| v >= 24));
            }
            other => panic!("unexpected {other:?}"),
        }
        let p = low_low_pair(&f, &OracleConfig::default()).unwrap();
        assert_eq!((p.status, p.a.len(), p.b.len()), (HomStatus::Empty, 24, 24));
    }

    #[test]
    fn dense_is_not_applicable() {
        let f = crate::instances::gen_wiring_diagram(8, 1).unwrap();
        let f = colored(f, 4);
        assert!(matches!(
            disjoint_linear_pair(&f, Rational64::new(1, 64)).unwrap(),
            DisjointOutcome::NotApplicable(_)
        ));
    }

    #[test]
    fn all_cross_gives_complete() {
        // Horizontal reds, vertical blues, every pair crossing once.
        let mut curves = Vec::new();
        for i in 0..5 {
            curves.push(seg(i, (0, 2 * i as i64 + 1), (20, 2 * i as i64 + 1)));
        }
        for j in 0..5 {
            curves.push(seg(5 + j, (2 * j as i64 + 1, 0), (2 * j as i64 + 1, 20)));
        }
        let f = colored(CurveFamily::new(curves), 5);
        let p = low_low_pair(&f, &OracleConfig::default()).unwrap();
        assert_eq!((p.status, p.a.len(), p.b.len()), (HomStatus::Complete, 5, 5));
    }

    #[test]
    fn sparse_low_low() {
        let p = SegmentParams { max_len: Some(8), ..SegmentParams::new(24, 3) };
        let f = colored(random_segments(&p).unwrap(), 12);
        let pair = low_low_pair(&f, &OracleConfig::default()).unwrap();
        assert!(!pair.a.is_empty() && !pair.b.is_empty());
        pair.verify(&intersection_graph(&f).unwrap()).unwrap();
    }
}
