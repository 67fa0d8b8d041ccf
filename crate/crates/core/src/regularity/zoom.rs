//! Zooming into dense bipartite pairs without large empty subpairs, and the
//! density/mighty bridges built on it.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geom::Rational;
use crate::graph::{next_combination, SimpleGraph, VSet};
use crate::homog::{best_bipair, mighty_pair, HomPair, HomStatus, Method, Mode, OracleConfig};

/// Combination checks allowed in the exhaustive fallbacks of the zoom.
pub const ZOOM_SEARCH_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZoomResult {
    pub a0: VSet,
    pub b0: VSet,
    pub density: Rational64,
    /// Bipartite density after each zoom step, starting with the input.
    pub densities: Vec<Rational64>,
    /// Property 3 was checked exhaustively.
    pub certified: bool,
    /// The greedy zoom failed property 3 and the output came from the
    /// exhaustive search.
    pub searched: bool,
}

fn big(r: Rational64) -> Rational {
    Rational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// `ceil(eps^(1/c^2) * n)`, exact when `1/c^2` is an integer.
pub fn zoom_target(eps: Rational64, c: Rational64, n: usize) -> usize {
    let e = Rational64::one() / (c * c);
    let v = if e.is_integer() {
        let p = big(eps).pow(e.to_integer() as i32) * Rational::from_integer(BigInt::from(n));
        p.ceil().to_integer().to_usize().expect("fits")
    } else {
        let x = eps.to_f64().expect("finite").powf(e.to_f64().expect("finite")) * n as f64;
        x.ceil() as usize
    };
    v.max(1)
}

fn bip_density(g: &SimpleGraph, a: &VSet, b: &VSet) -> Rational64 {
    if a.is_empty() || b.is_empty() {
        return Rational64::zero();
    }
    Rational64::new(g.edges_between(a, b) as i64, (a.len() * b.len()) as i64)
}

/// Removes minimum-degree vertices alternately from each side until both
/// have size `s`; each removal keeps the density from dropping.
fn peel_to(g: &SimpleGraph, mut a: VSet, mut b: VSet, s: usize) -> (VSet, VSet) {
    while a.len() > s || b.len() > s {
        let from_a = a.len() >= b.len();
        let (side, other) = if from_a { (&mut a, &b) } else { (&mut b, &a) };
        let v = side
            .iter()
            .min_by_key(|&v| (g.neighbors(v).intersection_len(other), std::cmp::Reverse(v)))
            .expect("nonempty side");
        side.remove(v);
    }
    (a, b)
}

/// Whether some `A' ⊆ a0`, `B' ⊆ b0` with `|A'|, |B'| >= k` have no edge
/// between them. Exhaustive over `k`-subsets of the smaller side when the
/// count fits the budget; `None` when it does not.
pub fn empty_subpair(g: &SimpleGraph, a0: &VSet, b0: &VSet, k: usize, budget: u64) -> Option<Option<(VSet, VSet)>> {
    let (x, y) = if a0.len() <= b0.len() { (a0, b0) } else { (b0, a0) };
    if k == 0 {
        return Some(Some((VSet::new(g.n()), VSet::new(g.n()))));
    }
    if k > x.len() || k > y.len() {
        return Some(None);
    }
    if binomial(x.len(), k) > budget as u128 {
        return None;
    }
    let xs = x.to_vec();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let chosen = g.vset(pick.iter().map(|&i| xs[i]));
        let free = chosen.iter().fold(y.clone(), |acc, v| acc.difference(g.neighbors(v)));
        if free.len() >= k {
            let other = free.take(k);
            return Some(Some(if x == a0 { (chosen, other) } else { (other, chosen) }));
        }
        if !next_combination(&mut pick, xs.len()) {
            return Some(None);
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Equal-size subsets of size `ceil(eps^(1/c^2) n)` with density at least
/// `eps` and an edge between any two subsets of at least a `c`-fraction of
/// each side.
pub fn komlos_sos_zoom(g: &SimpleGraph, a: &VSet, b: &VSet, eps: Rational64, c: Rational64) -> Result<ZoomResult> {
    g.pair_status(a, b)?;
    let n = a.len();
    if n == 0 || b.len() != n {
        return Err(Error::InvalidArgument(format!("zoom needs |A| = |B| > 0, got {} and {}", a.len(), b.len())));
    }
    if c <= Rational64::zero() || c > Rational64::new(1, 2) {
        return Err(Error::InvalidArgument(format!("c = {c} must lie in (0, 1/2]")));
    }
    if eps <= Rational64::zero() || eps > Rational64::one() {
        return Err(Error::InvalidArgument(format!("eps = {eps} must lie in (0, 1]")));
    }
    let d0 = bip_density(g, a, b);
    if d0 < eps {
        return Err(Error::Precondition(format!("density {d0} is below eps = {eps}")));
    }
    let m = zoom_target(eps, c, n).min(n);
    let k_of = |s: usize| (c * Rational64::from_integer(s as i64)).ceil().to_integer() as usize;
    let mut densities = vec![d0];
    let (mut cur_a, mut cur_b) = (a.clone(), b.clone());
    while cur_a.len() > m {
        let s = cur_a.len();
        let next = m.max(k_of(s)).min(s - 1);
        let (na, nb) = peel_to(g, cur_a, cur_b, next);
        cur_a = na;
        cur_b = nb;
        let d = bip_density(g, &cur_a, &cur_b);
        if d < *densities.last().expect("seeded") {
            return Err(Error::Invariant(format!("zoom density fell to {d}")));
        }
        densities.push(d);
    }
    let k = k_of(m);
    let check = |x: &VSet, y: &VSet| empty_subpair(g, x, y, k, ZOOM_SEARCH_BUDGET);
    match check(&cur_a, &cur_b) {
        Some(None) => {
            let density = bip_density(g, &cur_a, &cur_b);
            return Ok(ZoomResult { a0: cur_a, b0: cur_b, density, densities, certified: true, searched: false });
        }
        None => {
            return Err(Error::ExactLimit { size: 2 * m, limit: ZOOM_SEARCH_BUDGET as usize });
        }
        Some(Some(_)) => {}
    }
    // Exhaustive fallback over m-subsets, high-degree vertices first.
    let order = |s: &VSet, o: &VSet| {
        let mut v = s.to_vec();
        v.sort_by_key(|&x| (std::cmp::Reverse(g.neighbors(x).intersection_len(o)), x));
        v
    };
    let (xa, xb) = (order(a, b), order(b, a));
    if binomial(n, m).saturating_mul(binomial(n, m)) > ZOOM_SEARCH_BUDGET as u128 {
        return Err(Error::OracleFailure(format!(
            "zoom reached size {m} without property 3 and the exhaustive search exceeds its budget"
        )));
    }
    let mut pa: Vec<usize> = (0..m).collect();
    loop {
        let sa = g.vset(pa.iter().map(|&i| xa[i]));
        let mut pb: Vec<usize> = (0..m).collect();
        loop {
            let sb = g.vset(pb.iter().map(|&i| xb[i]));
            let d = bip_density(g, &sa, &sb);
            if d >= eps && check(&sa, &sb) == Some(None) {
                densities.push(d);
                return Ok(ZoomResult { a0: sa, b0: sb, density: d, densities, certified: true, searched: true });
            }
            if !next_combination(&mut pb, n) {
                break;
            }
        }
        if !next_combination(&mut pa, n) {
            break;
        }
    }
    Err(Error::OracleFailure(format!("no pair of size {m} with density >= {eps} and property 3")))
}

/// Grows a complete pair to a maximal one inside `(A, B)`.
fn extend_complete(g: &SimpleGraph, mut x: VSet, mut y: VSet, a: &VSet, b: &VSet) -> (VSet, VSet) {
    for v in a.difference(&x).iter() {
        if g.neighbors(v).intersection_len(&y) == y.len() {
            x.insert(v);
        }
    }
    for v in b.difference(&y).iter() {
        if g.neighbors(v).intersection_len(&x) == x.len() {
            y.insert(v);
        }
    }
    (x, y)
}

/// Complete pair between dense sides: zoom at the oracle's `c`, then an
/// exact mighty pair inside the zoomed pair, which property 3 forces to be
/// complete. The result is grown to a maximal complete pair.
pub fn density_to_complete(g: &SimpleGraph, a: &VSet, b: &VSet, eps: Rational64, cfg: &OracleConfig) -> Result<HomPair> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument("density_to_complete needs |A| = |B|".into()));
    }
    if g.pair_status(a, b)? == crate::graph::PairStatus::Complete {
        return HomPair::new(g, a.clone(), b.clone(), HomStatus::Complete, Method::Exact);
    }
    let z = komlos_sos_zoom(g, a, b, eps, cfg.c_target)?;
    let exact = OracleConfig { mode: Mode::Exact, ..cfg.clone() };
    let inner = mighty_pair(g, &z.a0, &z.b0, &exact, None)?;
    let pair = match (inner.pair.status, inner.target_met) {
        (HomStatus::Complete, _) => inner.pair,
        (HomStatus::Empty, true) => {
            return Err(Error::OracleFailure("an empty c-fraction pair contradicts the zoom certificate".into()))
        }
        (HomStatus::Empty, false) => best_bipair(g, &z.a0, &z.b0, HomStatus::Complete, &exact)?
            .ok_or_else(|| Error::OracleFailure("zoomed pair holds no complete subpair".into()))?,
    };
    let (x, y) = extend_complete(g, pair.a, pair.b, a, b);
    HomPair::new(g, x, y, HomStatus::Complete, Method::Exact)
}

/// Oracle returning a complete pair between sides of density at least its
/// threshold.
pub trait DensityOracle {
    fn complete_pair(&self, g: &SimpleGraph, a: &VSet, b: &VSet) -> Result<HomPair>;
}

/// [`density_to_complete`] at a fixed threshold.
#[derive(Clone, Debug)]
pub struct ZoomDensity {
    pub eps: Rational64,
    pub cfg: OracleConfig,
}

impl DensityOracle for ZoomDensity {
    fn complete_pair(&self, g: &SimpleGraph, a: &VSet, b: &VSet) -> Result<HomPair> {
        density_to_complete(g, a, b, self.eps, &self.cfg)
    }
}

/// Density at least 1/2 asks `dens` for a complete pair in `G`; otherwise
/// `co_dens` finds a complete pair of the complement, which is empty in `G`.
pub fn mighty_from_density(
    g: &SimpleGraph,
    a: &VSet,
    b: &VSet,
    dens: &dyn DensityOracle,
    co_dens: &dyn DensityOracle,
) -> Result<HomPair> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument("mighty_from_density needs |A| = |B|".into()));
    }
    let d = g.bipartite_density(a, b)?;
    let pair = if d >= Rational64::new(1, 2) {
        let p = dens.complete_pair(g, a, b)?;
        HomPair::new(g, p.a, p.b, HomStatus::Complete, p.method)?
    } else {
        let p = co_dens.complete_pair(&g.complement(), a, b)?;
        HomPair::new(g, p.a, p.b, HomStatus::Empty, p.method)?
    };
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::half_graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    fn random_bip(n: usize, p: f64, seed: u64) -> SimpleGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = SimpleGraph::new(2 * n);
        for u in 0..n {
            for v in n..2 * n {
                if rng.random_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn targets() {
        assert_eq!(zoom_target(r(1, 2), r(1, 2), 16), 1);
        assert_eq!(zoom_target(r(1, 2), r(1, 2), 20), 2);
        assert_eq!(zoom_target(r(1, 2), r(1, 2), 32), 2);
        assert_eq!(zoom_target(r(1, 2), r(1, 2), 33), 3);
    }

    #[test]
    fn complete_bipartite_zoom() {
        let mut g = SimpleGraph::new(16);
        for u in 0..8 {
            for v in 8..16 {
                g.add_edge(u, v).unwrap();
            }
        }
        let z = komlos_sos_zoom(&g, &g.vset(0..8), &g.vset(8..16), r(1, 2), r(1, 2)).unwrap();
        assert_eq!((z.a0.len(), z.density), (1, r(1, 1)));
    }

    #[test]
    fn random_zoom_certified() {
        for seed in 0..10 {
            let g = random_bip(20, 0.6, seed);
            let (a, b) = (g.vset(0..20), g.vset(20..40));
            if g.bipartite_density(&a, &b).unwrap() < r(1, 2) {
                continue;
            }
            let z = komlos_sos_zoom(&g, &a, &b, r(1, 2), r(1, 2)).unwrap();
            assert_eq!((z.a0.len(), z.b0.len()), (2, 2));
            assert!(z.certified && z.density >= r(1, 2));
            assert!(z.densities.windows(2).all(|w| w[0] <= w[1]) || z.searched);
            // c|A0| = 1: every cross pair must be an edge.
            assert_eq!(g.edges_between(&z.a0, &z.b0), 4);
        }
    }

    #[test]
    fn preconditions() {
        let g = SimpleGraph::new(8);
        let (a, b) = (g.vset(0..4), g.vset(4..8));
        assert!(matches!(komlos_sos_zoom(&g, &a, &b, r(1, 2), r(1, 2)), Err(Error::Precondition(_))));
        assert!(komlos_sos_zoom(&g, &a, &b, r(1, 2), r(3, 4)).is_err());
    }

    #[test]
    fn half_graph_complete_pair() {
        let h = half_graph(4);
        let (a, b) = (h.vset(0..4), h.vset(4..8));
        let p = density_to_complete(&h, &a, &b, r(6, 16), &OracleConfig::exact().with_c(r(1, 2))).unwrap();
        assert_eq!(p.status, HomStatus::Complete);
        assert!(p.a.is_subset(&a) && p.b.is_subset(&b) && !p.a.is_empty());
    }

    #[test]
    fn density_branches() {
        let cfg = OracleConfig::exact().with_c(r(1, 2));
        let o = ZoomDensity { eps: r(1, 2), cfg };
        let mut k = SimpleGraph::new(8);
        for u in 0..4 {
            for v in 4..8 {
                k.add_edge(u, v).unwrap();
            }
        }
        let (a, b) = (k.vset(0..4), k.vset(4..8));
        assert_eq!(mighty_from_density(&k, &a, &b, &o, &o).unwrap().status, HomStatus::Complete);
        let e = SimpleGraph::new(8);
        assert_eq!(mighty_from_density(&e, &a, &b, &o, &o).unwrap().status, HomStatus::Empty);
    }
}
