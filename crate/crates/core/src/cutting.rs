//! Vertical cuttings of double-grounded x-monotone families: trapezoids of a
//! random sample, refined until every cell is crossed by at most `n/r`
//! curves.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{int, CurveFamily, PolylineCurve, Rational};

const REFINE_ROUNDS: usize = 64;
const SEED_RETRIES: usize = 8;

/// Graph of an x-monotone polyline, vertices sorted by x.
#[derive(Clone, Debug)]
pub struct MonotoneChain {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
}

impl MonotoneChain {
    pub fn new(c: &PolylineCurve) -> Result<Self> {
        if !c.is_x_monotone() {
            return Err(Error::InvalidCurve(format!("curve {} is not x-monotone", c.id)));
        }
        let mut pts: Vec<_> = c.vertices().to_vec();
        if pts[0].x > pts[pts.len() - 1].x {
            pts.reverse();
        }
        Ok(MonotoneChain {
            xs: pts.iter().map(|p| p.x.clone()).collect(),
            ys: pts.iter().map(|p| p.y.clone()).collect(),
        })
    }

    pub fn x_range(&self) -> (&Rational, &Rational) {
        (&self.xs[0], &self.xs[self.xs.len() - 1])
    }

    /// Height at `x`, which must lie in the x-range.
    pub fn y_at(&self, x: &Rational) -> Rational {
        let k = self.xs.partition_point(|v| v < x);
        if k < self.xs.len() && &self.xs[k] == x {
            return self.ys[k].clone();
        }
        assert!(k > 0 && k < self.xs.len(), "abscissa outside the chain");
        let (x0, x1) = (&self.xs[k - 1], &self.xs[k]);
        let (y0, y1) = (&self.ys[k - 1], &self.ys[k]);
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }
}

/// Vertical trapezoid: open x-interval between two bounding chains. A
/// missing chain means the cell is unbounded on that side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub x0: Rational,
    pub x1: Rational,
    /// Family index of the lower bounding curve.
    pub lower: Option<usize>,
    pub upper: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CuttingResult {
    pub cells: Vec<Cell>,
    /// Ids of the curves meeting each cell's interior.
    pub crossing_lists: Vec<Vec<usize>>,
    pub r: usize,
    pub t: usize,
    /// Family indices of the final sample.
    pub sample: Vec<usize>,
    pub seed: u64,
    pub attempts: usize,
}

impl CuttingResult {
    /// `t / r²`, the empirical constant.
    pub fn c0(&self) -> Rational64 {
        Rational64::new(self.t as i64, (self.r * self.r) as i64)
    }

    pub fn max_crossings(&self) -> usize {
        self.crossing_lists.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Checked form of a grounded x-monotone family.
pub struct GroundedSlab {
    pub x_left: Rational,
    pub x_right: Rational,
    pub chains: Vec<MonotoneChain>,
    /// Abscissa of the one common point of each meeting pair `(i, j)`, `i < j`.
    meets: BTreeMap<(usize, usize), Rational>,
}

impl GroundedSlab {
    pub fn new(f: &CurveFamily) -> Result<Self> {
        f.valid_report()?;
        let errs = f.grounding_errors();
        if !errs.is_empty() {
            return Err(Error::Precondition(errs.join("; ")));
        }
        let (g1, g2) = f.grounds.as_ref().expect("grounds checked");
        let vertical = |g: &PolylineCurve| {
            g.segment_count() == 1 && g.start().x == g.end().x
        };
        if !vertical(g1) || !vertical(g2) {
            return Err(Error::Precondition("grounds must be vertical segments".into()));
        }
        let (mut xl, mut xr) = (g1.start().x.clone(), g2.start().x.clone());
        if xl > xr {
            std::mem::swap(&mut xl, &mut xr);
        }
        let chains = f.curves.iter().map(MonotoneChain::new).collect::<Result<Vec<_>>>()?;
        let mut meets = BTreeMap::new();
        for c in &f.valid_report()?.contacts {
            meets.insert((c.a, c.b), c.records[0].point.x.clone());
        }
        Ok(GroundedSlab { x_left: xl, x_right: xr, chains, meets })
    }

    /// Open x-interval on which chain `c` is strictly above chain `o`. Two
    /// chains share at most one point, so the sign of their difference flips
    /// at most once and the ground heights decide it.
    fn above(&self, c: usize, o: usize) -> Option<(Rational, Rational)> {
        let (a, b) = (&self.chains[c], &self.chains[o]);
        let left = a.ys[0] > b.ys[0];
        let right = a.ys[a.ys.len() - 1] > b.ys[b.ys.len() - 1];
        let full = || Some((self.x_left.clone(), self.x_right.clone()));
        match self.meets.get(&(c.min(o), c.max(o))) {
            None => left.then(full).flatten(),
            Some(x) if *x == self.x_left => right.then(full).flatten(),
            Some(x) if *x == self.x_right => left.then(full).flatten(),
            Some(x) if left => Some((self.x_left.clone(), x.clone())),
            Some(x) => Some((x.clone(), self.x_right.clone())),
        }
    }

    /// Exact test: some `x` in the open interval has the chain strictly
    /// between the cell's bounds.
    pub fn meets_interior(&self, c: usize, cell: &Cell) -> bool {
        if Some(c) == cell.lower || Some(c) == cell.upper {
            return false;
        }
        let (mut lo, mut hi) = (cell.x0.clone(), cell.x1.clone());
        let bounds = [cell.lower.map(|l| (c, l)), cell.upper.map(|u| (u, c))];
        for (top, bottom) in bounds.into_iter().flatten() {
            let Some((a, b)) = self.above(top, bottom) else { return false };
            lo = lo.max(a);
            hi = hi.min(b);
        }
        lo < hi
    }

    /// Vertical decomposition of the sample: slabs cut at sample crossings,
    /// merged while the same two curves stay adjacent.
    pub fn decompose(&self, f: &CurveFamily, sample: &[usize]) -> Result<Vec<Cell>> {
        let in_sample: BTreeSet<usize> = sample.iter().copied().collect();
        let mut breaks: BTreeSet<Rational> = BTreeSet::from([self.x_left.clone(), self.x_right.clone()]);
        for c in &f.valid_report()?.contacts {
            if in_sample.contains(&c.a) && in_sample.contains(&c.b) {
                breaks.extend(c.records.iter().map(|r| r.point.x.clone()));
            }
        }
        let breaks: Vec<Rational> = breaks.into_iter().collect();
        let mut cells: Vec<Cell> = Vec::new();
        let mut open: BTreeMap<(Option<usize>, Option<usize>), usize> = BTreeMap::new();
        for w in breaks.windows(2) {
            let m = (&w[0] + &w[1]) / int(2);
            let mut order: Vec<(Rational, usize)> = sample.iter().map(|&i| (self.chains[i].y_at(&m), i)).collect();
            order.sort();
            let mut bounds: Vec<Option<usize>> = vec![None];
            bounds.extend(order.iter().map(|o| Some(o.1)));
            bounds.push(None);
            let mut next_open = BTreeMap::new();
            for pair in bounds.windows(2) {
                let key = (pair[0], pair[1]);
                let idx = match open.get(&key) {
                    Some(&i) => {
                        cells[i].x1 = w[1].clone();
                        i
                    }
                    None => {
                        cells.push(Cell { x0: w[0].clone(), x1: w[1].clone(), lower: pair[0], upper: pair[1] });
                        cells.len() - 1
                    }
                };
                next_open.insert(key, idx);
            }
            open = next_open;
        }
        Ok(cells)
    }

    pub fn crossing_list(&self, f: &CurveFamily, cell: &Cell) -> Vec<usize> {
        (0..self.chains.len()).filter(|&c| self.meets_interior(c, cell)).map(|c| f.curves[c].id).collect()
    }
}

/// Cutting with every cell crossed by at most `n/r` curves; `t` cells.
pub fn vertical_cutting(f: &CurveFamily, r: usize, seed: u64) -> Result<CuttingResult> {
    if r <= 1 {
        return Err(Error::InvalidArgument(format!("cutting parameter r = {r} must exceed 1")));
    }
    let slab = GroundedSlab::new(f)?;
    let n = f.len();
    // |list| <= n/r  <=>  r |list| <= n.
    let fits = |len: usize| r * len <= n;
    let index_of: BTreeMap<usize, usize> = f.curves.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
    for attempt in 0..SEED_RETRIES {
        let run_seed = seed.wrapping_add(attempt as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(run_seed);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut sample: Vec<usize> = order[..n.min(2 * r)].to_vec();
        for _ in 0..REFINE_ROUNDS {
            sample.sort_unstable();
            let cells = slab.decompose(f, &sample)?;
            let lists: Vec<Vec<usize>> = cells.iter().map(|c| slab.crossing_list(f, c)).collect();
            let failing: Vec<&Vec<usize>> = lists.iter().filter(|l| !fits(l.len())).collect();
            if failing.is_empty() {
                return Ok(CuttingResult {
                    t: cells.len(),
                    cells,
                    crossing_lists: lists,
                    r,
                    sample,
                    seed: run_seed,
                    attempts: attempt + 1,
                });
            }
            let mut add: BTreeSet<usize> = BTreeSet::new();
            for l in failing {
                let pick = *l.choose(&mut rng).expect("failing cells are crossed");
                add.insert(index_of[&pick]);
            }
            sample.extend(add);
        }
    }
    Err(Error::CuttingFailed { attempts: SEED_RETRIES })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_grounded, gen_grounded_shape, GroundedShape};

    fn check(f: &CurveFamily, res: &CuttingResult) {
        let slab = GroundedSlab::new(f).unwrap();
        assert_eq!(res.t, res.cells.len());
        for (cell, list) in res.cells.iter().zip(&res.crossing_lists) {
            assert!(cell.x0 < cell.x1);
            assert!(res.r * list.len() <= f.len());
            assert_eq!(&slab.crossing_list(f, cell), list);
        }
    }

    #[test]
    fn full_sample_when_r_large() {
        let f = gen_grounded(6, 2, true).unwrap();
        let res = vertical_cutting(&f, 6, 0).unwrap();
        assert_eq!(res.sample.len(), 6);
        assert!(res.crossing_lists.iter().all(|l| l.len() <= 1));
        check(&f, &res);
    }

    #[test]
    fn nested_curves() {
        let f = gen_grounded_shape(8, 0, true, GroundedShape::Nested).unwrap();
        let res = vertical_cutting(&f, 4, 1).unwrap();
        assert!(res.max_crossings() <= 2);
        check(&f, &res);
    }

    #[test]
    fn halves() {
        for seed in 0..4 {
            let f = gen_grounded(12, seed, true).unwrap();
            let res = vertical_cutting(&f, 2, seed).unwrap();
            assert!(2 * res.max_crossings() <= 12);
            check(&f, &res);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let f = gen_grounded(4, 0, true).unwrap();
        assert!(vertical_cutting(&f, 1, 0).is_err());
        let bent = (0..20)
            .map(|s| gen_grounded_shape(8, s, false, GroundedShape::Twist).unwrap())
            .find(|f| f.curves.iter().any(|c| !c.is_x_monotone()))
            .unwrap();
        assert!(matches!(vertical_cutting(&bent, 2, 0), Err(Error::InvalidCurve(_))));
    }

    #[test]
    fn chain_heights() {
        let c = PolylineCurve::new(
            0,
            vec![crate::geom::RPoint::ints(4, 0), crate::geom::RPoint::ints(2, 2), crate::geom::RPoint::ints(0, 0)],
        )
        .unwrap();
        let ch = MonotoneChain::new(&c).unwrap();
        assert_eq!(ch.y_at(&int(1)), int(1));
        assert_eq!(ch.y_at(&int(2)), int(2));
        assert_eq!(ch.y_at(&crate::geom::ratio(7, 2)), crate::geom::ratio(1, 2));
    }
}
