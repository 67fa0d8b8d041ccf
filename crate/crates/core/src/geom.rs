//! Exact plane geometry for piecewise-linear curves.
//!
//! Coordinates are [`BigRational`]s, which are always stored reduced with a
//! positive denominator, so equality and hashing of points are exact.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RPoint { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        RPoint::new(int(x), int(y))
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Self {
        RPoint::new(&self.x + dx, &self.y + dy)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }
}

fn sub(a: &RPoint, b: &RPoint) -> (Rational, Rational) {
    (&a.x - &b.x, &a.y - &b.y)
}

fn cross(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn dot(u: &(Rational, Rational), v: &(Rational, Rational)) -> Rational {
    &u.0 * &v.0 + &u.1 * &v.1
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// `a - b` as an unreduced numerator over a positive denominator.
fn diff_parts(a: &Rational, b: &Rational) -> (BigInt, BigInt) {
    (a.numer() * b.denom() - b.numer() * a.denom(), a.denom() * b.denom())
}

/// Sign of the cross product `(q - p) x (r - p)`: `+1` for a left turn.
/// Computed without reducing intermediate fractions.
pub fn orient(p: &RPoint, q: &RPoint, r: &RPoint) -> i8 {
    let (ux, uxd) = diff_parts(&q.x, &p.x);
    let (uy, uyd) = diff_parts(&q.y, &p.y);
    let (vx, vxd) = diff_parts(&r.x, &p.x);
    let (vy, vyd) = diff_parts(&r.y, &p.y);
    let lhs = ux * vy * (&uyd * &vxd);
    let rhs = uy * vx * (uxd * vyd);
    match lhs.cmp(&rhs) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// Intersection of two closed segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum SegHit {
    None,
    Point(RPoint),
    /// Collinear overlap of positive length, endpoints in lexicographic order.
    Overlap(RPoint, RPoint),
}

fn boxes_meet(a0: &RPoint, a1: &RPoint, b0: &RPoint, b1: &RPoint) -> bool {
    let (ax0, ax1) = if a0.x <= a1.x { (&a0.x, &a1.x) } else { (&a1.x, &a0.x) };
    let (bx0, bx1) = if b0.x <= b1.x { (&b0.x, &b1.x) } else { (&b1.x, &b0.x) };
    if ax1 < bx0 || bx1 < ax0 {
        return false;
    }
    let (ay0, ay1) = if a0.y <= a1.y { (&a0.y, &a1.y) } else { (&a1.y, &a0.y) };
    let (by0, by1) = if b0.y <= b1.y { (&b0.y, &b1.y) } else { (&b1.y, &b0.y) };
    !(ay1 < by0 || by1 < ay0)
}

pub(crate) fn segment_intersection(a0: &RPoint, a1: &RPoint, b0: &RPoint, b1: &RPoint) -> SegHit {
    if !boxes_meet(a0, a1, b0, b1) {
        return SegHit::None;
    }
    let o1 = orient(a0, a1, b0);
    let o2 = orient(a0, a1, b1);
    if o1 == 0 && o2 == 0 {
        // Collinear: lexicographic order is the order along the common line.
        let (alo, ahi) = if a0 <= a1 { (a0, a1) } else { (a1, a0) };
        let (blo, bhi) = if b0 <= b1 { (b0, b1) } else { (b1, b0) };
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        return match lo.cmp(hi) {
            Ordering::Greater => SegHit::None,
            Ordering::Equal => SegHit::Point(lo.clone()),
            Ordering::Less => SegHit::Overlap(lo.clone(), hi.clone()),
        };
    }
    if o1 * o2 > 0 {
        return SegHit::None;
    }
    let o3 = orient(b0, b1, a0);
    let o4 = orient(b0, b1, a1);
    if o3 * o4 > 0 {
        return SegHit::None;
    }
    if o1 == 0 {
        return SegHit::Point(b0.clone());
    }
    if o2 == 0 {
        return SegHit::Point(b1.clone());
    }
    if o3 == 0 {
        return SegHit::Point(a0.clone());
    }
    if o4 == 0 {
        return SegHit::Point(a1.clone());
    }
    let r = sub(a1, a0);
    let s = sub(b1, b0);
    let t = cross(&sub(b0, a0), &s) / cross(&r, &s);
    SegHit::Point(RPoint::new(&a0.x + &t * &r.0, &a0.y + &t * &r.1))
}

/// Is `p` on the closed segment `a`–`b`?
pub(crate) fn on_segment(p: &RPoint, a: &RPoint, b: &RPoint) -> bool {
    orient(a, b, p) == 0 && boxes_meet(a, b, p, p)
}

#[derive(Clone, Debug)]
pub struct PolylineCurve {
    pub id: usize,
    vertices: Vec<RPoint>,
    /// Rounded copies of `vertices`, used only to skip pairs that are
    /// certainly apart.
    approx: Vec<(f64, f64)>,
}

impl PartialEq for PolylineCurve {
    fn eq(&self, o: &Self) -> bool {
        self.id == o.id && self.vertices == o.vertices
    }
}

impl Eq for PolylineCurve {}

impl std::hash::Hash for PolylineCurve {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.id.hash(h);
        self.vertices.hash(h);
    }
}

/// Where a point sits on a polyline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Location {
    Vertex(usize),
    Interior(usize),
}

impl PolylineCurve {
    /// Builds a curve, rejecting repeated consecutive vertices and
    /// self-intersections.
    pub fn new(id: usize, vertices: Vec<RPoint>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidCurve(format!("curve {id} has fewer than two vertices")));
        }
        for (k, w) in vertices.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(Error::InvalidCurve(format!("curve {id} repeats vertex {k}")));
            }
        }
        let segs = vertices.len() - 1;
        for i in 0..segs {
            for j in i + 1..segs {
                let hit = segment_intersection(&vertices[i], &vertices[i + 1], &vertices[j], &vertices[j + 1]);
                let ok = if j == i + 1 {
                    hit == SegHit::Point(vertices[j].clone())
                } else {
                    hit == SegHit::None
                };
                if !ok {
                    return Err(Error::InvalidCurve(format!(
                        "curve {id} self-intersects (segments {i} and {j})"
                    )));
                }
            }
        }
        Ok(PolylineCurve::build(id, vertices))
    }

    fn build(id: usize, vertices: Vec<RPoint>) -> Self {
        let approx = vertices.iter().map(RPoint::to_f64).collect();
        PolylineCurve { id, vertices, approx }
    }

    pub fn segment(id: usize, a: RPoint, b: RPoint) -> Result<Self> {
        PolylineCurve::new(id, vec![a, b])
    }

    pub fn vertices(&self) -> &[RPoint] {
        &self.vertices
    }

    pub fn start(&self) -> &RPoint {
        &self.vertices[0]
    }

    pub fn end(&self) -> &RPoint {
        self.vertices.last().expect("at least two vertices")
    }

    /// Endpoint with the smaller x (ties: smaller y).
    pub fn left_endpoint(&self) -> &RPoint {
        self.start().min(self.end())
    }

    pub fn right_endpoint(&self) -> &RPoint {
        self.start().max(self.end())
    }

    pub fn is_endpoint(&self, p: &RPoint) -> bool {
        p == self.start() || p == self.end()
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub(crate) fn seg(&self, i: usize) -> (&RPoint, &RPoint) {
        (&self.vertices[i], &self.vertices[i + 1])
    }

    /// Every vertical line meets the curve at most once.
    pub fn is_x_monotone(&self) -> bool {
        let inc = self.vertices.windows(2).all(|w| w[0].x < w[1].x);
        let dec = self.vertices.windows(2).all(|w| w[0].x > w[1].x);
        inc || dec
    }

    pub fn bbox(&self) -> (RPoint, RPoint) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            if v.x < lo.x {
                lo.x = v.x.clone();
            }
            if v.y < lo.y {
                lo.y = v.y.clone();
            }
            if v.x > hi.x {
                hi.x = v.x.clone();
            }
            if v.y > hi.y {
                hi.y = v.y.clone();
            }
        }
        (lo, hi)
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Self {
        PolylineCurve::build(self.id, self.vertices.iter().map(|v| v.translate(dx, dy)).collect())
    }

    pub fn with_id(&self, id: usize) -> Self {
        PolylineCurve { id, ..self.clone() }
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PolylineCurve::build(self.id, vertices)
    }

    pub(crate) fn locate(&self, p: &RPoint) -> Option<Location> {
        if let Some(k) = self.vertices.iter().position(|v| v == p) {
            return Some(Location::Vertex(k));
        }
        (0..self.segment_count())
            .find(|&i| on_segment(p, &self.vertices[i], &self.vertices[i + 1]))
            .map(Location::Interior)
    }

    pub fn contains_point(&self, p: &RPoint) -> bool {
        self.locate(p).is_some()
    }

    /// Neighbouring vertices of `p` along the curve (one for an endpoint).
    fn rays(&self, loc: Location) -> (Option<&RPoint>, Option<&RPoint>) {
        match loc {
            Location::Interior(i) => (Some(&self.vertices[i]), Some(&self.vertices[i + 1])),
            Location::Vertex(k) => (
                if k > 0 { Some(&self.vertices[k - 1]) } else { None },
                self.vertices.get(k + 1),
            ),
        }
    }

    /// Position along the curve, usable as a sort key for points on it.
    pub(crate) fn position(&self, p: &RPoint) -> Option<(usize, Rational)> {
        match self.locate(p)? {
            Location::Vertex(k) if k == self.segment_count() => Some((k - 1, Rational::one())),
            Location::Vertex(k) => Some((k, Rational::zero())),
            Location::Interior(i) => {
                let (a, b) = self.seg(i);
                let d = sub(b, a);
                let t = dot(&sub(p, a), &d) / dot(&d, &d);
                Some((i, t))
            }
        }
    }
}

fn boxes_overlap(a: &(RPoint, RPoint), b: &(RPoint, RPoint)) -> bool {
    !(a.1.x < b.0.x || b.1.x < a.0.x || a.1.y < b.0.y || b.1.y < a.0.y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingKind {
    ProperCrossing,
    SharedEndpoint,
    Tangency,
    Overlap,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossingRecord {
    pub curve_a: usize,
    pub curve_b: usize,
    pub point: RPoint,
    pub kind: CrossingKind,
}

impl CrossingRecord {
    pub fn swapped(&self) -> Self {
        CrossingRecord {
            curve_a: self.curve_b,
            curve_b: self.curve_a,
            point: self.point.clone(),
            kind: self.kind,
        }
    }
}

/// Half-plane index of `w` relative to `base` for ccw angular sorting.
fn half(base: &(Rational, Rational), w: &(Rational, Rational)) -> u8 {
    let c = cross(base, w);
    if c.is_positive() || (c.is_zero() && dot(base, w).is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(base: &(Rational, Rational), u: &(Rational, Rational), v: &(Rational, Rational)) -> Ordering {
    let (hu, hv) = (half(base, u), half(base, v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    match sign(&cross(u, v)) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

/// Whether the second path strictly changes sides of the first at `p`.
/// Each path is given by the two neighbouring vertices around `p`.
fn separates(p: &RPoint, a: (&RPoint, &RPoint), b: (&RPoint, &RPoint)) -> bool {
    let base = sub(a.1, p);
    let other = sub(a.0, p);
    let inside = |w: &RPoint| {
        let w = sub(w, p);
        let along_base = cross(&base, &w).is_zero() && dot(&base, &w).is_positive();
        !along_base && angle_cmp(&base, &w, &other) == Ordering::Less
    };
    inside(b.0) != inside(b.1)
}

/// Orientation sign from rounded coordinates, or `None` when rounding
/// could hide the true sign. Conversions and the determinant each err by a
/// few ulps of `m^2`; the tolerance is several orders of magnitude wider.
fn orient_approx(p: (f64, f64), q: (f64, f64), r: (f64, f64)) -> Option<i8> {
    let det = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
    let m = [p.0, p.1, q.0, q.1, r.0, r.1].iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-10 * m * m;
    if det > tol {
        Some(1)
    } else if det < -tol {
        Some(-1)
    } else {
        None
    }
}

/// Certainly no common point: one segment lies strictly on one side of the
/// other's line.
fn apart_approx(a0: (f64, f64), a1: (f64, f64), b0: (f64, f64), b1: (f64, f64)) -> bool {
    let same_side = |x: Option<i8>, y: Option<i8>| matches!((x, y), (Some(u), Some(v)) if u == v);
    same_side(orient_approx(a0, a1, b0), orient_approx(a0, a1, b1))
        || same_side(orient_approx(b0, b1, a0), orient_approx(b0, b1, a1))
}

/// All common points of two curves, each reported once and classified.
pub fn curve_crossings(a: &PolylineCurve, b: &PolylineCurve) -> Vec<CrossingRecord> {
    let fa = &a.approx;
    let fb = &b.approx;
    let candidates: Vec<(usize, usize)> = (0..a.segment_count())
        .flat_map(|i| (0..b.segment_count()).map(move |j| (i, j)))
        .filter(|&(i, j)| !apart_approx(fa[i], fa[i + 1], fb[j], fb[j + 1]))
        .collect();
    if candidates.is_empty() {
        return Vec::new();
    }
    let mut points: BTreeSet<RPoint> = BTreeSet::new();
    let mut overlaps: Vec<(RPoint, RPoint)> = Vec::new();
    for (i, j) in candidates {
        let ((a0, a1), (b0, b1)) = (a.seg(i), b.seg(j));
        match segment_intersection(a0, a1, b0, b1) {
            SegHit::None => {}
            SegHit::Point(p) => {
                points.insert(p);
            }
            SegHit::Overlap(lo, hi) => overlaps.push((lo, hi)),
        }
    }
    let mut out = Vec::new();
    if !overlaps.is_empty() {
        // Merge overlapping pieces that touch end to end.
        overlaps.sort();
        let mut groups: Vec<(RPoint, RPoint)> = Vec::new();
        for (lo, hi) in overlaps {
            match groups.iter_mut().find(|g| g.1 == lo || g.0 == hi) {
                Some(g) => {
                    if lo < g.0 {
                        g.0 = lo;
                    }
                    if hi > g.1 {
                        g.1 = hi;
                    }
                }
                None => groups.push((lo, hi)),
            }
        }
        points.retain(|p| !groups.iter().any(|(lo, hi)| on_segment(p, lo, hi)));
        for (lo, _) in groups {
            out.push(CrossingRecord { curve_a: a.id, curve_b: b.id, point: lo, kind: CrossingKind::Overlap });
        }
    }
    for p in points {
        let kind = classify(a, b, &p);
        out.push(CrossingRecord { curve_a: a.id, curve_b: b.id, point: p, kind });
    }
    out.sort_by(|x, y| x.point.cmp(&y.point));
    out
}

fn classify(a: &PolylineCurve, b: &PolylineCurve, p: &RPoint) -> CrossingKind {
    let (ea, eb) = (a.is_endpoint(p), b.is_endpoint(p));
    if ea && eb {
        return CrossingKind::SharedEndpoint;
    }
    if ea || eb {
        return CrossingKind::Tangency;
    }
    let la = a.locate(p).expect("point on a");
    let lb = b.locate(p).expect("point on b");
    // Two segments meeting at one interior point of each cross transversally.
    if matches!((la, lb), (Location::Interior(_), Location::Interior(_))) {
        return CrossingKind::ProperCrossing;
    }
    let (Some(a0), Some(a1)) = a.rays(la) else { return CrossingKind::Tangency };
    let (Some(b0), Some(b1)) = b.rays(lb) else { return CrossingKind::Tangency };
    if separates(p, (a0, a1), (b0, b1)) {
        CrossingKind::ProperCrossing
    } else {
        CrossingKind::Tangency
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

/// A problem found while validating pseudo-segments. Curves are named by id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    DuplicateId(usize),
    MultipleCommonPoints { a: usize, b: usize, count: usize },
    Tangency { a: usize, b: usize, point: RPoint },
    Overlap { a: usize, b: usize },
    TriplePoint { point: RPoint, curves: Vec<usize> },
}

/// One intersecting pair, by curve index within the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contact {
    pub a: usize,
    pub b: usize,
    pub records: Vec<CrossingRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Pairs whose single common point is a shared endpoint (allowed).
    pub shared_endpoints: Vec<(usize, usize)>,
    pub contacts: Vec<Contact>,
    pub proper_crossings: usize,
}

impl ValidationReport {
    pub fn violation_set(&self) -> BTreeSet<Violation> {
        self.violations.iter().cloned().collect()
    }
}

/// The union of the common points recorded for a family.
pub(crate) fn triple_points<'a>(
    records: impl Iterator<Item = &'a CrossingRecord>,
) -> Vec<Violation> {
    let mut at: BTreeMap<&RPoint, BTreeSet<usize>> = BTreeMap::new();
    for r in records {
        if r.kind == CrossingKind::Overlap {
            continue;
        }
        let e = at.entry(&r.point).or_default();
        e.insert(r.curve_a);
        e.insert(r.curve_b);
    }
    at.into_iter()
        .filter(|(_, s)| s.len() >= 3)
        .map(|(p, s)| Violation::TriplePoint { point: p.clone(), curves: s.into_iter().collect() })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CurveFamily {
    pub curves: Vec<PolylineCurve>,
    pub colors: Option<Vec<Color>>,
    pub grounds: Option<(PolylineCurve, PolylineCurve)>,
    validity: Option<ValidationReport>,
}

/// Equality ignores the cached validation report.
impl PartialEq for CurveFamily {
    fn eq(&self, o: &Self) -> bool {
        self.curves == o.curves && self.colors == o.colors && self.grounds == o.grounds
    }
}

impl Eq for CurveFamily {}

impl CurveFamily {
    pub fn new(curves: Vec<PolylineCurve>) -> Self {
        CurveFamily { curves, colors: None, grounds: None, validity: None }
    }

    pub fn with_colors(mut self, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != self.curves.len() {
            return Err(Error::InvalidArgument(format!(
                "{} colors for {} curves",
                colors.len(),
                self.curves.len()
            )));
        }
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn with_grounds(mut self, g1: PolylineCurve, g2: PolylineCurve) -> Self {
        self.grounds = Some((g1, g2));
        self
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// Validates and caches the report.
    pub fn validate(&mut self) -> &ValidationReport {
        let report = validate_family(self);
        self.validity = Some(report);
        self.validity.as_ref().expect("just set")
    }

    pub fn validated(mut self) -> Result<Self> {
        let report = self.validate();
        if !report.valid {
            return Err(Error::InvalidFamily(report.violations.len()));
        }
        Ok(self)
    }

    pub fn report(&self) -> Option<&ValidationReport> {
        self.validity.as_ref()
    }

    /// The cached report, provided it says the family is valid.
    pub fn valid_report(&self) -> Result<&ValidationReport> {
        match &self.validity {
            Some(r) if r.valid => Ok(r),
            Some(r) => Err(Error::InvalidFamily(r.violations.len())),
            None => Err(Error::NotValidated),
        }
    }

    pub fn color_of(&self, i: usize) -> Option<Color> {
        self.colors.as_ref().map(|c| c[i])
    }

    /// Sub-family on the given curve indices (colors and grounds kept).
    pub fn subfamily(&self, idx: &[usize]) -> CurveFamily {
        CurveFamily {
            curves: idx.iter().map(|&i| self.curves[i].clone()).collect(),
            colors: self.colors.as_ref().map(|c| idx.iter().map(|&i| c[i]).collect()),
            grounds: self.grounds.clone(),
            validity: None,
        }
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> CurveFamily {
        CurveFamily {
            curves: self.curves.iter().map(|c| c.translate(dx, dy)).collect(),
            colors: self.colors.clone(),
            grounds: self.grounds.as_ref().map(|(a, b)| (a.translate(dx, dy), b.translate(dx, dy))),
            validity: None,
        }
    }

    /// Checks the double-grounded condition: every curve has one endpoint on
    /// each ground and its interior misses both grounds.
    pub fn grounding_errors(&self) -> Vec<String> {
        let Some((g1, g2)) = &self.grounds else {
            return vec!["family has no grounds".into()];
        };
        let mut errs = Vec::new();
        if !curve_crossings(g1, g2).is_empty() {
            errs.push("grounds intersect".into());
        }
        for c in &self.curves {
            let on1 = [c.start(), c.end()].map(|p| g1.contains_point(p));
            let on2 = [c.start(), c.end()].map(|p| g2.contains_point(p));
            if !((on1[0] && on2[1]) || (on1[1] && on2[0])) {
                errs.push(format!("curve {} is not grounded on both grounds", c.id));
                continue;
            }
            for g in [g1, g2] {
                for r in curve_crossings(c, g) {
                    if !c.is_endpoint(&r.point) || r.kind == CrossingKind::Overlap {
                        errs.push(format!("curve {} meets a ground in its interior", c.id));
                    }
                }
            }
        }
        errs
    }
}

/// Pseudo-segment validation: every pair meets at most once (a shared
/// endpoint counts as the one common point), never tangentially or along a
/// piece, and no point lies on three curves.
pub fn validate_family(f: &CurveFamily) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut seen = BTreeSet::new();
    for c in &f.curves {
        if !seen.insert(c.id) {
            report.violations.push(Violation::DuplicateId(c.id));
        }
    }
    let boxes: Vec<_> = f.curves.iter().map(|c| c.bbox()).collect();
    for i in 0..f.curves.len() {
        for j in i + 1..f.curves.len() {
            if !boxes_overlap(&boxes[i], &boxes[j]) {
                continue;
            }
            let (a, b) = (&f.curves[i], &f.curves[j]);
            let records = curve_crossings(a, b);
            if records.is_empty() {
                continue;
            }
            if records.len() >= 2 {
                report.violations.push(Violation::MultipleCommonPoints { a: a.id, b: b.id, count: records.len() });
            }
            for r in &records {
                match r.kind {
                    CrossingKind::ProperCrossing => report.proper_crossings += 1,
                    CrossingKind::SharedEndpoint => report.shared_endpoints.push((i, j)),
                    CrossingKind::Tangency => report.violations.push(Violation::Tangency {
                        a: a.id,
                        b: b.id,
                        point: r.point.clone(),
                    }),
                    CrossingKind::Overlap => report.violations.push(Violation::Overlap { a: a.id, b: b.id }),
                }
            }
            report.contacts.push(Contact { a: i, b: j, records });
        }
    }
    let triples = triple_points(report.contacts.iter().flat_map(|c| c.records.iter()));
    report.violations.extend(triples);
    report.valid = report.violations.is_empty();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(id: usize, a: (i64, i64), b: (i64, i64)) -> PolylineCurve {
        PolylineCurve::segment(id, RPoint::ints(a.0, a.1), RPoint::ints(b.0, b.1)).unwrap()
    }

    fn poly(id: usize, pts: &[(i64, i64)]) -> PolylineCurve {
        PolylineCurve::new(id, pts.iter().map(|&(x, y)| RPoint::ints(x, y)).collect()).unwrap()
    }

    #[test]
    fn orientation_signs() {
        let o = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
            orient(&RPoint::ints(a.0, a.1), &RPoint::ints(b.0, b.1), &RPoint::ints(c.0, c.1))
        };
        assert_eq!(o((0, 0), (1, 0), (0, 1)), 1);
        assert_eq!(o((0, 0), (1, 1), (2, 2)), 0);
        assert_eq!(o((0, 0), (0, 1), (1, 0)), -1);
    }

    #[test]
    fn rationals_are_canonical() {
        let p = RPoint::new(ratio(2, 4), ratio(-3, -6));
        assert_eq!(p, RPoint::new(ratio(1, 2), ratio(1, 2)));
        assert_eq!(ratio(3, -6).denom(), &BigInt::from(2));
    }

    #[test]
    fn x_crossing() {
        let r = curve_crossings(&seg(0, (0, 0), (2, 2)), &seg(1, (0, 2), (2, 0)));
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].kind, CrossingKind::ProperCrossing);
        assert_eq!(r[0].point, RPoint::ints(1, 1));
    }

    #[test]
    fn parallel_segments_miss() {
        assert!(curve_crossings(&seg(0, (0, 0), (1, 0)), &seg(1, (0, 1), (1, 1))).is_empty());
    }

    #[test]
    fn zigzag_crosses_twice() {
        let z = poly(0, &[(0, 0), (2, 2), (4, 0)]);
        let h = seg(1, (0, 1), (4, 1));
        let r = curve_crossings(&z, &h);
        let pts: Vec<_> = r.iter().map(|c| (c.point.clone(), c.kind)).collect();
        assert_eq!(
            pts,
            vec![
                (RPoint::ints(1, 1), CrossingKind::ProperCrossing),
                (RPoint::ints(3, 1), CrossingKind::ProperCrossing)
            ]
        );
    }

    #[test]
    fn vertex_touch_is_tangency() {
        // A "V" whose apex touches a horizontal line from above.
        let v = poly(0, &[(0, 2), (2, 0), (4, 2)]);
        let h = seg(1, (0, 0), (4, 0));
        let r = curve_crossings(&v, &h);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].kind, CrossingKind::Tangency);
        // Passing through the line at a vertex is a genuine crossing.
        let s = poly(2, &[(0, 2), (2, 0), (4, -2)]);
        assert_eq!(curve_crossings(&s, &h)[0].kind, CrossingKind::ProperCrossing);
        let bent = poly(3, &[(0, 2), (2, 0), (3, -2)]);
        assert_eq!(curve_crossings(&bent, &h)[0].kind, CrossingKind::ProperCrossing);
    }

    #[test]
    fn vertex_against_vertex() {
        // Two polylines meeting at a common interior vertex.
        let a = poly(0, &[(0, 0), (2, 2), (4, 0)]);
        let crossing = poly(1, &[(0, 4), (2, 2), (4, 4)]);
        assert_eq!(curve_crossings(&a, &crossing)[0].kind, CrossingKind::Tangency);
        let through = poly(2, &[(1, 4), (2, 2), (3, 0)]);
        assert_eq!(curve_crossings(&a, &through)[0].kind, CrossingKind::ProperCrossing);
    }

    #[test]
    fn endpoint_cases() {
        let a = seg(0, (0, 0), (2, 0));
        let t = seg(1, (1, 0), (1, 3));
        assert_eq!(curve_crossings(&a, &t)[0].kind, CrossingKind::Tangency);
        let s = seg(2, (2, 0), (3, 5));
        assert_eq!(curve_crossings(&a, &s)[0].kind, CrossingKind::SharedEndpoint);
    }

    #[test]
    fn overlap_reported_once() {
        let a = poly(0, &[(0, 0), (2, 0), (4, 0)]);
        let b = seg(1, (1, 0), (3, 0));
        let r = curve_crossings(&a, &b);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].kind, CrossingKind::Overlap);
    }

    #[test]
    fn self_intersection_rejected() {
        let pts = [(0, 0), (2, 2), (2, 0), (0, 2)];
        assert!(PolylineCurve::new(0, pts.iter().map(|&(x, y)| RPoint::ints(x, y)).collect()).is_err());
        let fold = [(0, 0), (2, 0), (1, 0)];
        assert!(PolylineCurve::new(0, fold.iter().map(|&(x, y)| RPoint::ints(x, y)).collect()).is_err());
        assert!(PolylineCurve::new(0, vec![RPoint::ints(0, 0), RPoint::ints(0, 0)]).is_err());
    }

    #[test]
    fn family_validation_examples() {
        let ok = CurveFamily::new(vec![seg(0, (0, 0), (2, 2)), seg(1, (0, 2), (2, 0)), seg(2, (5, 5), (6, 6))]);
        assert!(validate_family(&ok).valid);

        let twice = CurveFamily::new(vec![poly(0, &[(0, 0), (2, 2), (4, 0)]), seg(1, (0, 1), (4, 1))]);
        let r = validate_family(&twice);
        assert!(!r.valid);
        assert_eq!(r.violations, vec![Violation::MultipleCommonPoints { a: 0, b: 1, count: 2 }]);

        let triple = CurveFamily::new(vec![
            seg(0, (0, 0), (2, 2)),
            seg(1, (0, 2), (2, 0)),
            seg(2, (1, 0), (1, 2)),
        ]);
        let r = validate_family(&triple);
        assert_eq!(
            r.violations,
            vec![Violation::TriplePoint { point: RPoint::ints(1, 1), curves: vec![0, 1, 2] }]
        );
    }

    #[test]
    fn shared_endpoint_is_flagged_but_valid() {
        let f = CurveFamily::new(vec![seg(0, (0, 0), (1, 0)), seg(1, (1, 0), (1, 1))]);
        let r = validate_family(&f);
        assert!(r.valid);
        assert_eq!(r.shared_endpoints, vec![(0, 1)]);
    }

    #[test]
    fn duplicate_ids() {
        let f = CurveFamily::new(vec![seg(3, (0, 0), (1, 0)), seg(3, (0, 5), (1, 5))]);
        assert_eq!(validate_family(&f).violations, vec![Violation::DuplicateId(3)]);
    }

    #[test]
    fn left_endpoint_tie_breaks_on_y() {
        let c = seg(0, (1, 5), (1, 2));
        assert_eq!(c.left_endpoint(), &RPoint::ints(1, 2));
        let d = seg(1, (3, 0), (1, 9));
        assert_eq!(d.left_endpoint(), &RPoint::ints(1, 9));
    }
}
