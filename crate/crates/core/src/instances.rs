//! Deterministic instance generators. Every generator is a pure function of
//! its parameters and seed.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{curve_crossings, int, ratio, Color, CrossingKind, CurveFamily, PolylineCurve, RPoint, Rational};
use crate::topo::TopoDrawing;

/// Integer bounding box `[x0, x1] x [y0, y1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BBox {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

impl Default for BBox {
    fn default() -> Self {
        BBox { x0: 0, y0: 0, x1: 100, y1: 100 }
    }
}

impl BBox {
    pub fn square(side: i64) -> Self {
        BBox { x0: 0, y0: 0, x1: side, y1: side }
    }
}

/// Denominator of the generic-position perturbation.
const PERTURB_DEN: i64 = 1009;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn perturbed(rng: &mut ChaCha8Rng, b: &BBox, used: &mut BTreeSet<i64>) -> RPoint {
    let gx = rng.random_range(b.x0..b.x1);
    let gy = rng.random_range(b.y0..b.y1);
    // Distinct perturbation numerators keep the family away from the grid.
    let mut draw = || loop {
        let k = rng.random_range(1..PERTURB_DEN);
        if used.insert(k) || used.len() >= (PERTURB_DEN - 1) as usize {
            return k;
        }
    };
    let (px, py) = (draw(), draw());
    RPoint::new(int(gx) + ratio(px, PERTURB_DEN), int(gy) + ratio(py, PERTURB_DEN))
}

fn grid_segment(rng: &mut ChaCha8Rng, b: &BBox, max_len: Option<i64>) -> (RPoint, RPoint) {
    loop {
        let p = (rng.random_range(b.x0..=b.x1), rng.random_range(b.y0..=b.y1));
        let q = match max_len {
            Some(l) => (
                (p.0 + rng.random_range(-l..=l)).clamp(b.x0, b.x1),
                (p.1 + rng.random_range(-l..=l)).clamp(b.y0, b.y1),
            ),
            None => (rng.random_range(b.x0..=b.x1), rng.random_range(b.y0..=b.y1)),
        };
        if p != q {
            return (RPoint::ints(p.0, p.1), RPoint::ints(q.0, q.1));
        }
    }
}

/// Integer-grid segments with no generic-position repair: triple points,
/// T-junctions and overlaps occur. Used to exercise the validator.
pub fn raw_grid_segments(n: usize, seed: u64, b: BBox) -> CurveFamily {
    let mut rng = rng(seed);
    let curves = (0..n)
        .map(|i| {
            let (p, q) = grid_segment(&mut rng, &b, None);
            PolylineCurve::segment(i, p, q).expect("distinct endpoints")
        })
        .collect();
    CurveFamily::new(curves)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SegmentParams {
    pub n: usize,
    pub seed: u64,
    pub bbox: BBox,
    /// Largest coordinate offset between the two endpoints.
    pub max_len: Option<i64>,
}

impl SegmentParams {
    pub fn new(n: usize, seed: u64) -> Self {
        SegmentParams { n, seed, bbox: BBox::default(), max_len: None }
    }
}

pub fn gen_random_segments(n: usize, seed: u64, bbox: BBox) -> Result<CurveFamily> {
    random_segments(&SegmentParams { n, seed, bbox, max_len: None })
}

/// Segments with perturbed grid endpoints, each resampled until it meets the
/// earlier ones in generic position. The result is validated.
pub fn random_segments(p: &SegmentParams) -> Result<CurveFamily> {
    let budget = 1000 * p.n.max(1);
    let mut rng = rng(p.seed);
    let mut used = BTreeSet::new();
    let mut curves: Vec<PolylineCurve> = Vec::with_capacity(p.n);
    let mut points: BTreeSet<RPoint> = BTreeSet::new();
    let mut resamples = 0;
    while curves.len() < p.n {
        let a = perturbed(&mut rng, &p.bbox, &mut used);
        let b = match p.max_len {
            Some(l) => {
                let d = (rng.random_range(-l..=l), rng.random_range(-l..=l));
                let k = (rng.random_range(1..PERTURB_DEN), rng.random_range(1..PERTURB_DEN));
                RPoint::new(&a.x + int(d.0) + ratio(k.0, PERTURB_DEN), &a.y + int(d.1) + ratio(k.1, PERTURB_DEN))
            }
            None => perturbed(&mut rng, &p.bbox, &mut used),
        };
        let Ok(c) = PolylineCurve::segment(curves.len(), a, b) else {
            resamples += 1;
            continue;
        };
        let mut fresh = Vec::new();
        let ok = curves.iter().all(|o| {
            let r = curve_crossings(o, &c);
            let good = r.len() <= 1 && r.iter().all(|x| x.kind == CrossingKind::ProperCrossing);
            fresh.extend(r.into_iter().map(|x| x.point));
            good
        });
        let distinct = fresh.iter().collect::<BTreeSet<_>>().len() == fresh.len();
        if ok && distinct && fresh.iter().all(|q| !points.contains(q)) {
            points.extend(fresh);
            curves.push(c);
        } else {
            resamples += 1;
            if resamples > budget {
                return Err(Error::ResampleBudget(resamples));
            }
        }
    }
    CurveFamily::new(curves).validated()
}

/// Colors the first half red and the rest blue.
pub fn halves_colored(f: CurveFamily) -> Result<CurveFamily> {
    let n = f.len();
    let colors = (0..n).map(|i| if i < n / 2 { Color::Red } else { Color::Blue }).collect();
    f.with_colors(colors)
}

/// `u_i` (curve `i-1`) is horizontal at height `i` over `[i + 1/2, n + 1]`;
/// `v_j` (curve `n+j-1`) is vertical at `x = j` over `[1/2, n + 1/2]`.
/// So `u_i` meets `v_j` iff `i < j`.
pub fn gen_halfgraph_segments(n: usize) -> Result<CurveFamily> {
    let half = ratio(1, 2);
    let mut curves = Vec::with_capacity(2 * n);
    for i in 1..=n as i64 {
        let y = int(i);
        curves.push(PolylineCurve::segment(
            curves.len(),
            RPoint::new(int(i) + &half, y.clone()),
            RPoint::new(int(n as i64 + 1), y),
        )?);
    }
    for j in 1..=n as i64 {
        let x = int(j);
        curves.push(PolylineCurve::segment(
            curves.len(),
            RPoint::new(x.clone(), half.clone()),
            RPoint::new(x, int(n as i64) + &half),
        )?);
    }
    let colors = (0..2 * n).map(|i| if i < n { Color::Red } else { Color::Blue }).collect();
    CurveFamily::new(curves).with_colors(colors)?.validated()
}

/// Wires `0..n` start at heights `0..n` and swap adjacent positions along a
/// random reduced word for the reversal; step `s` spans `x in [s, s+1]`.
fn wire_paths(start: &[usize], swaps: &[usize], x0: i64) -> Vec<Vec<(i64, i64)>> {
    let n = start.len();
    let mut at: Vec<usize> = start.to_vec(); // position -> wire
    let mut paths: Vec<Vec<(i64, i64)>> = vec![Vec::new(); n];
    for (p, &w) in at.iter().enumerate() {
        paths[w].push((x0, p as i64));
    }
    for (s, &p) in swaps.iter().enumerate() {
        let x = x0 + s as i64 + 1;
        at.swap(p, p + 1);
        for (q, &w) in at.iter().enumerate() {
            paths[w].push((x, q as i64));
        }
    }
    paths.into_iter().map(compress).collect()
}

/// Drops vertices strictly inside straight runs.
fn compress(path: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = Vec::with_capacity(path.len());
    for p in path {
        if out.len() >= 2 {
            let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
            if (b.0 - a.0) * (p.1 - b.1) == (b.1 - a.1) * (p.0 - b.0) {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

fn to_curve(id: usize, path: &[(i64, i64)], dy: &Rational) -> Result<PolylineCurve> {
    PolylineCurve::new(id, path.iter().map(|&(x, y)| RPoint::new(int(x), int(y) + dy)).collect())
}

/// A random reduced word of adjacent transpositions taking the identity to
/// the reversal.
fn random_reversal_word(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut word = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    loop {
        let open: Vec<usize> = (0..n.saturating_sub(1)).filter(|&p| perm[p] < perm[p + 1]).collect();
        if open.is_empty() {
            return word;
        }
        let p = open[rng.random_range(0..open.len())];
        perm.swap(p, p + 1);
        word.push(p);
    }
}

/// `n` x-monotone wires; every pair crosses exactly once.
pub fn gen_wiring_diagram(n: usize, seed: u64) -> Result<CurveFamily> {
    if n == 0 {
        return Err(Error::InvalidArgument("wiring diagram needs n >= 1".into()));
    }
    let mut rng = rng(seed);
    let word = random_reversal_word(n, &mut rng);
    let start: Vec<usize> = (0..n).collect();
    let mut paths = wire_paths(&start, &word, 0);
    if word.is_empty() {
        for p in &mut paths {
            let y = p[0].1;
            p.push((1, y));
        }
    }
    let curves = paths.iter().enumerate().map(|(i, p)| to_curve(i, p, &Rational::zero())).collect::<Result<_>>()?;
    CurveFamily::new(curves).validated()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroundedShape {
    /// A uniformly random target order.
    Random,
    /// Identity order: pairwise disjoint parallel curves.
    Nested,
    /// Reversed order: every pair crosses.
    Twist,
}

pub fn gen_grounded(n: usize, seed: u64, monotone: bool) -> Result<CurveFamily> {
    gen_grounded_shape(n, seed, monotone, GroundedShape::Random)
}

/// Curves between two vertical grounds at `x = 0` and `x = W`. Curve `i`
/// starts at height `i + 1` on the left ground; two curves cross iff their
/// order is inverted on the right ground. With `monotone = false` a
/// piecewise-linear homeomorphism fixing both grounds bends the curves.
pub fn gen_grounded_shape(n: usize, seed: u64, monotone: bool, shape: GroundedShape) -> Result<CurveFamily> {
    if n == 0 {
        return Err(Error::InvalidArgument("grounded family needs n >= 1".into()));
    }
    let mut rng = rng(seed);
    // rank[w]: final position of wire w.
    let mut rank: Vec<usize> = (0..n).collect();
    match shape {
        GroundedShape::Random => rank.shuffle(&mut rng),
        GroundedShape::Nested => {}
        GroundedShape::Twist => rank.reverse(),
    }
    let mut at: Vec<usize> = (0..n).collect();
    let mut word = Vec::new();
    loop {
        let open: Vec<usize> = (0..n - 1).filter(|&p| rank[at[p]] > rank[at[p + 1]]).collect();
        if open.is_empty() {
            break;
        }
        let p = open[rng.random_range(0..open.len())];
        at.swap(p, p + 1);
        word.push(p);
    }
    let start: Vec<usize> = (0..n).collect();
    let w = word.len() as i64 + 2;
    let mut paths = wire_paths(&start, &word, 1);
    for p in &mut paths {
        let (first, last) = (p[0], *p.last().expect("nonempty path"));
        p.insert(0, (0, first.1));
        p.push((w, last.1));
        *p = compress(std::mem::take(p));
    }
    let one = Rational::one();
    let mut curves: Vec<PolylineCurve> =
        paths.iter().enumerate().map(|(i, p)| to_curve(i, p, &one)).collect::<Result<_>>()?;
    let top = int(n as i64 + 1);
    let g1 = PolylineCurve::segment(n, RPoint::ints(0, 0), RPoint::new(int(0), top.clone()))?;
    let g2 = PolylineCurve::segment(n + 1, RPoint::ints(w, 0), RPoint::new(int(w), top))?;
    if !monotone {
        let h = StripMap::new(n, w, &mut rng);
        curves = curves.iter().map(|c| h.apply(c)).collect::<Result<_>>()?;
    }
    let f = CurveFamily::new(curves).with_grounds(g1, g2).validated()?;
    let errs = f.grounding_errors();
    if !errs.is_empty() {
        return Err(Error::Invariant(format!("grounded generator: {}", errs.join("; "))));
    }
    Ok(f)
}

/// A piecewise-linear homeomorphism of the strip `0 <= x <= w` that keeps
/// every height and both boundary lines fixed. Row `k` sits at height
/// `k + 1/2`; its midpoint `mid` moves to `alpha[k]`, and each band between
/// rows is split into four triangles mapped affinely.
struct StripMap {
    rows: Vec<Rational>,
    alpha: Vec<Rational>,
    mid: Rational,
    w: Rational,
}

impl StripMap {
    fn new(n: usize, w: i64, rng: &mut ChaCha8Rng) -> Self {
        let w = int(w);
        let mid = &w / int(2);
        let rows: Vec<Rational> = (0..=n as i64 + 1).map(|k| int(k) - ratio(1, 2)).collect();
        let last = rows.len() - 1;
        let alpha = (0..rows.len())
            .map(|k| {
                if k == 0 || k == last {
                    return mid.clone();
                }
                // Shift alternately left and right by up to 2/5 of the half width.
                let f = ratio(rng.random_range(1..=8), 20);
                let shift = &mid * f;
                if k % 2 == 0 {
                    &mid + shift
                } else {
                    &mid - shift
                }
            })
            .collect();
        StripMap { rows, alpha, mid, w }
    }

    /// Source and image triangles of band `k` (between rows `k` and `k+1`).
    fn triangles(&self, k: usize) -> [([RPoint; 3], [RPoint; 3]); 4] {
        let (y0, y1) = (&self.rows[k], &self.rows[k + 1]);
        let p = |x: &Rational, y: &Rational| RPoint::new(x.clone(), y.clone());
        let z = Rational::zero();
        let (a0, a1) = (&self.alpha[k], &self.alpha[k + 1]);
        let (m, w) = (&self.mid, &self.w);
        [
            ([p(&z, y0), p(m, y0), p(m, y1)], [p(&z, y0), p(a0, y0), p(a1, y1)]),
            ([p(&z, y0), p(m, y1), p(&z, y1)], [p(&z, y0), p(a1, y1), p(&z, y1)]),
            ([p(m, y0), p(w, y0), p(w, y1)], [p(a0, y0), p(w, y0), p(w, y1)]),
            ([p(m, y0), p(w, y1), p(m, y1)], [p(a0, y0), p(w, y1), p(a1, y1)]),
        ]
    }

    fn band(&self, y: &Rational) -> Option<usize> {
        (0..self.rows.len() - 1).find(|&k| &self.rows[k] <= y && y <= &self.rows[k + 1])
    }

    fn map_point(&self, q: &RPoint) -> RPoint {
        let Some(k) = self.band(&q.y) else { return q.clone() };
        for (src, dst) in self.triangles(k) {
            if let Some((l0, l1, l2)) = barycentric(&src, q) {
                let x = &l0 * &dst[0].x + &l1 * &dst[1].x + &l2 * &dst[2].x;
                let y = l0 * &dst[0].y + l1 * &dst[1].y + l2 * &dst[2].y;
                return RPoint::new(x, y);
            }
        }
        q.clone()
    }

    /// Every triangle edge as a segment, for subdividing curves.
    fn edges(&self) -> Vec<(RPoint, RPoint)> {
        let mut out = Vec::new();
        for k in 0..self.rows.len() - 1 {
            for (src, _) in self.triangles(k) {
                for i in 0..3 {
                    out.push((src[i].clone(), src[(i + 1) % 3].clone()));
                }
            }
        }
        out
    }

    fn apply(&self, c: &PolylineCurve) -> Result<PolylineCurve> {
        let edges = self.edges();
        let mut pts: Vec<RPoint> = Vec::new();
        for i in 0..c.segment_count() {
            let (a, b) = c.seg(i);
            let mut cuts: Vec<RPoint> = vec![a.clone(), b.clone()];
            for (e0, e1) in &edges {
                match crate::geom::segment_intersection(a, b, e0, e1) {
                    crate::geom::SegHit::Point(p) => cuts.push(p),
                    crate::geom::SegHit::Overlap(p, q) => {
                        cuts.push(p);
                        cuts.push(q);
                    }
                    crate::geom::SegHit::None => {}
                }
            }
            // Order along the segment from a to b.
            let forward = a < b;
            cuts.sort();
            cuts.dedup();
            if !forward {
                cuts.reverse();
            }
            for p in cuts {
                if pts.last() != Some(&p) {
                    pts.push(p);
                }
            }
        }
        let mapped: Vec<RPoint> = pts.iter().map(|p| self.map_point(p)).collect();
        PolylineCurve::new(c.id, drop_collinear(mapped))
    }
}

fn drop_collinear(pts: Vec<RPoint>) -> Vec<RPoint> {
    let mut out: Vec<RPoint> = Vec::with_capacity(pts.len());
    for p in pts {
        if out.len() >= 2 {
            let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
            let straight = crate::geom::orient(a, b, &p) == 0 && (a < b) == (b < &p);
            if straight {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

/// Barycentric coordinates of `q` in the closed triangle `t`.
fn barycentric(t: &[RPoint; 3], q: &RPoint) -> Option<(BigRational, BigRational, BigRational)> {
    let d = (&t[1].x - &t[0].x) * (&t[2].y - &t[0].y) - (&t[2].x - &t[0].x) * (&t[1].y - &t[0].y);
    let l1 = ((&q.x - &t[0].x) * (&t[2].y - &t[0].y) - (&t[2].x - &t[0].x) * (&q.y - &t[0].y)) / &d;
    let l2 = ((&t[1].x - &t[0].x) * (&q.y - &t[0].y) - (&q.x - &t[0].x) * (&t[1].y - &t[0].y)) / &d;
    let l0 = Rational::one() - &l1 - &l2;
    let z = Rational::zero();
    (l0 >= z && l1 >= z && l2 >= z).then_some((l0, l1, l2))
}

/// Convex position on the parabola `y = x^2`.
fn parabola(n: usize) -> Vec<RPoint> {
    (0..n as i64).map(|i| RPoint::ints(i, i * i)).collect()
}

/// Straight-line `K_n` on the parabola.
pub fn convex_drawing(n: usize) -> Result<TopoDrawing> {
    if n < 3 {
        return Err(Error::InvalidArgument("convex drawing needs n >= 3".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    TopoDrawing::straight(parabola(n), &edges)
}

/// Straight-line `C_n` in convex position.
pub fn convex_cycle(n: usize) -> Result<TopoDrawing> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    TopoDrawing::straight(parabola(n), &edges)
}

/// Star with center 0 and `leaves` leaves.
pub fn star_drawing(leaves: usize) -> Result<TopoDrawing> {
    let mut pts = vec![RPoint::ints(0, 0)];
    pts.extend(parabola(leaves + 1).into_iter().skip(1).map(|p| RPoint::new(p.x, p.y + int(1))));
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    TopoDrawing::straight(pts, &edges)
}

/// Straight-line drawing of a random graph on perturbed grid points; the
/// drawing is resampled until it is simple.
pub fn random_drawing(n: usize, edge_prob: (u32, u32), seed: u64) -> Result<TopoDrawing> {
    let mut rng = rng(seed);
    for _ in 0..100 {
        let mut used = BTreeSet::new();
        let b = BBox::square(4 * n as i64 + 4);
        let pts: Vec<RPoint> = (0..n).map(|_| perturbed(&mut rng, &b, &mut used)).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_ratio(edge_prob.0, edge_prob.1) {
                    edges.push((u, v));
                }
            }
        }
        let d = TopoDrawing::straight(pts, &edges)?;
        if crate::topo::validate_simple(&d).valid {
            return Ok(d);
        }
    }
    Err(Error::ResampleBudget(100))
}
