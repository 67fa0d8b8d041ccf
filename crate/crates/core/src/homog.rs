//! Searches for homogeneous pairs: exact enumeration at desk scale, greedy
//! heuristics, and the mighty/strong/unbalanced front ends.

use std::cmp::Ordering;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geom::{Color, CurveFamily};
use crate::graph::{PairStatus, SimpleGraph, VSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    Exact,
    Heuristic,
    #[default]
    Auto,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "heuristic" => Ok(Mode::Heuristic),
            "auto" => Ok(Mode::Auto),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomStatus {
    Complete,
    Empty,
}

impl HomStatus {
    pub fn as_pair_status(self) -> PairStatus {
        match self {
            HomStatus::Complete => PairStatus::Complete,
            HomStatus::Empty => PairStatus::Empty,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            HomStatus::Complete => HomStatus::Empty,
            HomStatus::Empty => HomStatus::Complete,
        }
    }
}

/// How a pair was found. Only `Exact` results are optimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Heuristic,
    SeparatorRoute,
}

/// Largest `exact_limit` accepted; the subset table has `2^(limit/2)` rows.
pub const MAX_EXACT_LIMIT: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub mode: Mode,
    /// Largest `|A| + |B|` searched exhaustively.
    pub exact_limit: usize,
    /// Largest vertex count for the exact strong-pair search.
    pub strong_exact_limit: usize,
    /// Node cap for the exact strong-pair search; `None` is unbounded.
    pub node_budget: Option<u64>,
    pub seed: u64,
    pub c_target: Rational64,
    /// Crossing threshold (fraction of `n²`) for the separator route.
    pub eps0: Rational64,
    /// Density ceiling for same-color graphs on the separator route.
    pub eps1: Rational64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            mode: Mode::Auto,
            exact_limit: 24,
            strong_exact_limit: 128,
            node_budget: None,
            seed: 0,
            c_target: Rational64::new(1, 8),
            eps0: Rational64::new(1, 64),
            eps1: Rational64::new(1, 4),
        }
    }
}

impl OracleConfig {
    pub fn exact() -> Self {
        OracleConfig { mode: Mode::Exact, ..Self::default() }
    }

    pub fn heuristic() -> Self {
        OracleConfig { mode: Mode::Heuristic, ..Self::default() }
    }

    pub fn with_c(mut self, c: Rational64) -> Self {
        self.c_target = c;
        self
    }

    pub fn check(&self) -> Result<()> {
        if self.exact_limit < 2 || self.exact_limit > MAX_EXACT_LIMIT {
            return Err(Error::InvalidArgument(format!("exact_limit must lie in 2..={MAX_EXACT_LIMIT}")));
        }
        if self.strong_exact_limit > 128 {
            return Err(Error::InvalidArgument("strong_exact_limit is at most 128".into()));
        }
        if self.c_target <= Rational64::zero() || self.c_target > Rational64::new(1, 2) {
            return Err(Error::InvalidArgument(format!("c_target {} outside (0, 1/2]", self.c_target)));
        }
        Ok(())
    }
}

/// Disjoint nonempty sides with a verified status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPair {
    pub a: VSet,
    pub b: VSet,
    pub status: HomStatus,
    pub method: Method,
}

impl HomPair {
    pub fn new(g: &SimpleGraph, a: VSet, b: VSet, status: HomStatus, method: Method) -> Result<Self> {
        let actual = g.pair_status(&a, &b)?;
        if actual != status.as_pair_status() {
            return Err(Error::Certificate(format!("pair declared {status:?} but is {actual:?}")));
        }
        Ok(HomPair { a, b, status, method })
    }

    pub fn min_side(&self) -> usize {
        self.a.len().min(self.b.len())
    }

    pub fn total(&self) -> usize {
        self.a.len() + self.b.len()
    }

    pub fn verify(&self, g: &SimpleGraph) -> Result<()> {
        HomPair::new(g, self.a.clone(), self.b.clone(), self.status, self.method).map(|_| ())
    }

    fn key_cmp(&self, o: &HomPair) -> Ordering {
        o.min_side()
            .cmp(&self.min_side())
            .then(o.total().cmp(&self.total()))
            .then(self.a.lex_cmp(&o.a))
            .then(self.b.lex_cmp(&o.b))
    }

    /// `min(|a|/|A|, |b|/|B|)`.
    pub fn fraction_of(&self, na: usize, nb: usize) -> Rational64 {
        Rational64::new(self.a.len() as i64, na as i64).min(Rational64::new(self.b.len() as i64, nb as i64))
    }
}

/// Vertices of `within` related to `v` as `want` asks (adjacent for
/// Complete, non-adjacent for Empty).
fn want_nbrs(g: &SimpleGraph, v: usize, within: &VSet, want: HomStatus) -> VSet {
    match want {
        HomStatus::Complete => g.neighbors(v).intersection(within),
        HomStatus::Empty => {
            let mut s = within.difference(g.neighbors(v));
            s.remove(v);
            s
        }
    }
}

fn common_want(g: &SimpleGraph, of: &VSet, within: &VSet, want: HomStatus) -> VSet {
    of.iter().fold(within.clone(), |acc, v| acc.intersection(&want_nbrs(g, v, within, want)))
}

fn mask_lex_cmp(a: u64, b: u64) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x.cmp(&y);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

/// Largest pair with the requested status between `A` and `B`: maximum
/// `min(|a|, |b|)`, then maximum `|a| + |b|`, then lexicographically first.
/// `Ok(None)` when no pair with that status exists.
pub fn best_bipair(
    g: &SimpleGraph,
    a: &VSet,
    b: &VSet,
    want: HomStatus,
    cfg: &OracleConfig,
) -> Result<Option<HomPair>> {
    cfg.check()?;
    g.pair_status(a, b)?;
    let total = a.len() + b.len();
    let exact = match cfg.mode {
        Mode::Exact if total > cfg.exact_limit => {
            return Err(Error::ExactLimit { size: total, limit: cfg.exact_limit })
        }
        Mode::Exact => true,
        Mode::Auto => total <= cfg.exact_limit,
        Mode::Heuristic => false,
    };
    if exact {
        exact_bipair(g, a, b, want)
    } else {
        heuristic_bipair(g, a, b, want)
    }
}

fn exact_bipair(g: &SimpleGraph, a: &VSet, b: &VSet, want: HomStatus) -> Result<Option<HomPair>> {
    let av = a.to_vec();
    let bv = b.to_vec();
    let rel = |u: usize, v: usize| g.has_edge(u, v) == (want == HomStatus::Complete);
    let mask_row = |u: usize, side: &[usize]| {
        side.iter().enumerate().fold(0u64, |m, (j, &v)| if rel(u, v) { m | 1 << j } else { m })
    };
    let adj_a: Vec<u64> = av.iter().map(|&u| mask_row(u, &bv)).collect();
    let adj_b: Vec<u64> = bv.iter().map(|&v| mask_row(v, &av)).collect();
    let a_small = av.len() <= bv.len();
    let (adj_x, adj_y, ny) = if a_small { (&adj_a, &adj_b, bv.len()) } else { (&adj_b, &adj_a, av.len()) };
    let nx = adj_x.len();
    let y_full = if ny == 64 { u64::MAX } else { (1u64 << ny) - 1 };
    let x_full = if nx == 64 { u64::MAX } else { (1u64 << nx) - 1 };
    // common[s] = Y-vertices related to every member of s.
    let mut common = vec![y_full; 1 << nx];
    // Best as (a mask, b mask) in local indices.
    let mut best: Option<(u64, u64)> = None;
    let better = |cand: (u64, u64), cur: (u64, u64)| {
        let key = |p: (u64, u64)| {
            let (x, y) = (p.0.count_ones(), p.1.count_ones());
            (x.min(y), x + y)
        };
        let (kc, ko) = (key(cand), key(cur));
        kc > ko
            || (kc == ko
                && mask_lex_cmp(cand.0, cur.0).then(mask_lex_cmp(cand.1, cur.1)) == Ordering::Less)
    };
    for s in 1usize..1 << nx {
        let low = s.trailing_zeros() as usize;
        let t = common[s & (s - 1)] & adj_x[low];
        common[s] = t;
        if t == 0 {
            continue;
        }
        let mut closure = x_full;
        let mut m = t;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            closure &= adj_y[j];
        }
        // Only closed sets are candidates; each is met at s == closure.
        if closure != s as u64 {
            continue;
        }
        let cand = if a_small { (closure, t) } else { (t, closure) };
        if best.is_none_or(|cur| better(cand, cur)) {
            best = Some(cand);
        }
    }
    let Some((ma, mb)) = best else { return Ok(None) };
    let pick = |mask: u64, side: &[usize]| VSet::from_iter(g.n(), (0..side.len()).filter(|&i| mask >> i & 1 == 1).map(|i| side[i]));
    HomPair::new(g, pick(ma, &av), pick(mb, &bv), want, Method::Exact).map(Some)
}

/// Closes `(a, b)` by adding every vertex of `A` (then `B`) related to all of
/// the other side.
fn extend(g: &SimpleGraph, a: VSet, b: VSet, big_a: &VSet, big_b: &VSet, want: HomStatus) -> (VSet, VSet) {
    let a = a.union(&common_want(g, &b, big_a, want));
    let b = b.union(&common_want(g, &a, big_b, want));
    (a, b)
}

fn heuristic_bipair(g: &SimpleGraph, big_a: &VSet, big_b: &VSet, want: HomStatus) -> Result<Option<HomPair>> {
    let mut cands: Vec<(VSet, VSet)> = Vec::new();
    // Peeling from the full pair.
    let (mut a, mut b) = (big_a.clone(), big_b.clone());
    loop {
        if a.is_empty() || b.is_empty() {
            break;
        }
        let viol = |v: usize, other: &VSet| other.len() - want_nbrs(g, v, other, want).len();
        let worst_a = a.iter().map(|v| (viol(v, &b), v)).max();
        let worst_b = b.iter().map(|v| (viol(v, &a), v)).max();
        let (Some(wa), Some(wb)) = (worst_a, worst_b) else { break };
        if wa.0 == 0 && wb.0 == 0 {
            cands.push((a.clone(), b.clone()));
            break;
        }
        // Most violations first; ties drop from the larger side, then the higher index.
        let take_a = match wa.0.cmp(&wb.0) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => a.len() > b.len() || (a.len() == b.len() && wa.1 > wb.1),
        };
        if take_a {
            a.remove(wa.1);
        } else {
            b.remove(wb.1);
        }
    }
    // Closures of single vertices.
    for v in big_a.iter() {
        let t = want_nbrs(g, v, big_b, want);
        if !t.is_empty() {
            let s = common_want(g, &t, big_a, want);
            cands.push((s, t));
        }
    }
    for v in big_b.iter() {
        let s = want_nbrs(g, v, big_a, want);
        if !s.is_empty() {
            let t = common_want(g, &s, big_b, want);
            cands.push((s, t));
        }
    }
    let mut best: Option<HomPair> = None;
    for (a, b) in cands {
        if a.is_empty() || b.is_empty() {
            continue;
        }
        let (a, b) = extend(g, a, b, big_a, big_b, want);
        let p = HomPair::new(g, a, b, want, Method::Heuristic)?;
        if best.as_ref().is_none_or(|cur| p.key_cmp(cur) == Ordering::Less) {
            best = Some(p);
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MightyOutcome {
    pub pair: HomPair,
    /// `min(|a|/|A|, |b|/|B|)`.
    pub c_achieved: Rational64,
    pub target_met: bool,
}

fn better_of(x: Option<HomPair>, y: Option<HomPair>) -> Option<HomPair> {
    // Ties go to the first argument.
    match (x, y) {
        (Some(p), Some(q)) => {
            if (q.min_side(), q.total()) > (p.min_side(), p.total()) {
                Some(q)
            } else {
                Some(p)
            }
        }
        (p, q) => p.or(q),
    }
}

fn both_statuses(g: &SimpleGraph, a: &VSet, b: &VSet, cfg: &OracleConfig) -> Result<HomPair> {
    let c = best_bipair(g, a, b, HomStatus::Complete, cfg)?;
    let e = best_bipair(g, a, b, HomStatus::Empty, cfg)?;
    better_of(c, e).ok_or_else(|| Error::OracleFailure("no homogeneous pair between nonempty sides".into()))
}

/// Large homogeneous pair between equal-size sides. Curve data, when given,
/// indexes the vertices of `g` and enables the separator route above the
/// exact limit.
pub fn mighty_pair(
    g: &SimpleGraph,
    a: &VSet,
    b: &VSet,
    cfg: &OracleConfig,
    curves: Option<&CurveFamily>,
) -> Result<MightyOutcome> {
    cfg.check()?;
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!("mighty pair needs |A| = |B|, got {} and {}", a.len(), b.len())));
    }
    g.pair_status(a, b)?;
    let total = a.len() + b.len();
    let pair = match cfg.mode {
        Mode::Exact | Mode::Heuristic => both_statuses(g, a, b, cfg)?,
        Mode::Auto if total <= cfg.exact_limit => both_statuses(g, a, b, cfg)?,
        Mode::Auto => {
            let geometric = curves.and_then(|f| geometric_route(g, a, b, f, cfg).ok());
            let heuristic = both_statuses(g, a, b, &OracleConfig { mode: Mode::Heuristic, ..cfg.clone() })?;
            better_of(geometric, Some(heuristic)).expect("heuristic pair present")
        }
    };
    pair.verify(g)?;
    let c_achieved = pair.fraction_of(a.len(), b.len());
    Ok(MightyOutcome { target_met: c_achieved >= cfg.c_target, c_achieved, pair, })
}

fn geometric_route(g: &SimpleGraph, a: &VSet, b: &VSet, f: &CurveFamily, cfg: &OracleConfig) -> Result<HomPair> {
    if f.len() != g.n() {
        return Err(Error::InvalidArgument("curve family does not index the graph".into()));
    }
    let idx: Vec<usize> = a.iter().chain(b.iter()).collect();
    let colors = a.iter().map(|_| Color::Red).chain(b.iter().map(|_| Color::Blue)).collect();
    let sub = f.subfamily(&idx).with_colors(colors)?.validated()?;
    let local = crate::separator::low_low_pair(&sub, cfg)?;
    let lift = |s: &VSet| g.vset(s.iter().map(|i| idx[i]));
    HomPair::new(g, lift(&local.a), lift(&local.b), local.status, local.method)
}

/// Large homogeneous pair over the whole vertex set.
pub fn strong_pair(g: &SimpleGraph, cfg: &OracleConfig) -> Result<HomPair> {
    cfg.check()?;
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument("strong pair needs at least 2 vertices".into()));
    }
    let exact = match cfg.mode {
        Mode::Exact if n > cfg.strong_exact_limit => {
            return Err(Error::ExactLimit { size: n, limit: cfg.strong_exact_limit })
        }
        Mode::Exact => true,
        Mode::Auto => n <= cfg.exact_limit,
        Mode::Heuristic => false,
    };
    let pair = if exact {
        let mut search = StrongSearch::new(g, cfg.node_budget);
        let c = search.run(HomStatus::Complete, 0)?;
        let floor = c.as_ref().map_or(0, |p| p.0.count_ones().min(p.1.count_ones()) as usize);
        let e = search.run(HomStatus::Empty, floor)?;
        let to_pair = |(x, y): (u128, u128), st| {
            let set = |m: u128| g.vset((0..n).filter(|&i| m >> i & 1 == 1));
            HomPair::new(g, set(x), set(y), st, Method::Exact)
        };
        match (e, c) {
            (Some(e), _) => to_pair(e, HomStatus::Empty)?,
            (None, Some(c)) => to_pair(c, HomStatus::Complete)?,
            (None, None) => return Err(Error::OracleFailure("no strong pair found".into())),
        }
    } else {
        strong_heuristic(g)?
    };
    pair.verify(g)?;
    Ok(pair)
}

/// Greedy strong pair: for each status, grow both sides from a seed pair by
/// adding the vertex that keeps most candidates alive, alternating sides.
fn strong_heuristic(g: &SimpleGraph) -> Result<HomPair> {
    let n = g.n();
    let all = g.all();
    let mut best: Option<HomPair> = None;
    for want in [HomStatus::Complete, HomStatus::Empty] {
        let starts: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| g.has_edge(u, v) == (want == HomStatus::Complete))
            .take(4 * n)
            .collect();
        for (u, v) in starts {
            let (mut a, mut b) = (g.vset([u]), g.vset([v]));
            // Candidates related to all of the opposite side.
            let mut ca = want_nbrs(g, v, &all, want).difference(&a);
            let mut cb = want_nbrs(g, u, &all, want).difference(&b);
            loop {
                let grow_a = a.len() <= b.len();
                let (pool, other_pool) = if grow_a { (&ca, &cb) } else { (&cb, &ca) };
                // Pick the vertex losing the fewest opposite candidates.
                let pick = pool
                    .iter()
                    .map(|w| (other_pool.len() - want_nbrs(g, w, other_pool, want).len(), w))
                    .min();
                let Some((_, w)) = pick else { break };
                if grow_a {
                    a.insert(w);
                    ca.remove(w);
                    cb = want_nbrs(g, w, &cb, want);
                    cb.remove(w);
                } else {
                    b.insert(w);
                    cb.remove(w);
                    ca = want_nbrs(g, w, &ca, want);
                    ca.remove(w);
                }
            }
            let p = HomPair::new(g, a, b, want, Method::Heuristic)?;
            if best.as_ref().is_none_or(|cur| p.key_cmp(cur) == Ordering::Less) {
                best = Some(p);
            }
        }
    }
    best.ok_or_else(|| Error::OracleFailure("no strong pair found".into()))
}

/// Branch and bound for disjoint `a, b` with no conflict edges between them,
/// maximizing `min(|a|, |b|)`. The conflict graph is `G` for Empty pairs and
/// its complement for Complete pairs.
struct StrongSearch {
    n: usize,
    rows: Vec<u128>,
    budget: Option<u64>,
    nodes: u64,
}

impl StrongSearch {
    fn new(g: &SimpleGraph, budget: Option<u64>) -> Self {
        let rows = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u128, |m, w| m | 1 << w)).collect();
        StrongSearch { n: g.n(), rows, budget, nodes: 0 }
    }

    fn conflicts(&self, want: HomStatus) -> Vec<u128> {
        let full = if self.n == 128 { u128::MAX } else { (1u128 << self.n) - 1 };
        match want {
            HomStatus::Empty => self.rows.clone(),
            HomStatus::Complete => (0..self.n).map(|v| full & !self.rows[v] & !(1 << v)).collect(),
        }
    }

    /// Best pair strictly better than `floor`, if any.
    fn run(&mut self, want: HomStatus, floor: usize) -> Result<Option<(u128, u128)>> {
        let h = self.conflicts(want);
        let full = if self.n == 128 { u128::MAX } else { (1u128 << self.n) - 1 };
        let mut st = Bnb { h: &h, best: None, best_val: floor, nodes: &mut self.nodes, budget: self.budget };
        st.greedy_incumbent(full);
        st.rec(0, 0, 0, 0, full, 0)?;
        Ok(st.best)
    }
}

struct Bnb<'a> {
    h: &'a [u128],
    best: Option<(u128, u128)>,
    best_val: usize,
    nodes: &'a mut u64,
    budget: Option<u64>,
}

fn pc(m: u128) -> usize {
    m.count_ones() as usize
}

impl Bnb<'_> {
    fn nbr(&self, set: u128) -> u128 {
        let mut m = set;
        let mut out = 0;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= self.h[v];
        }
        out
    }

    fn offer(&mut self, a: u128, b: u128) {
        let v = pc(a).min(pc(b));
        if v > self.best_val {
            self.best_val = v;
            self.best = Some((a, b));
        }
    }

    /// Component packing: conflict-graph components go whole to the lighter side.
    fn greedy_incumbent(&mut self, full: u128) {
        let mut comps: Vec<u128> = Vec::new();
        let mut left = full;
        while left != 0 {
            let s = left & left.wrapping_neg();
            let mut comp = s;
            loop {
                let grown = (comp | self.nbr(comp)) & full;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            comps.push(comp);
            left &= !comp;
        }
        comps.sort_by_key(|&c| std::cmp::Reverse(pc(c)));
        let (mut a, mut b) = (0u128, 0u128);
        for c in comps {
            if pc(a) <= pc(b) {
                a |= c;
            } else {
                b |= c;
            }
        }
        if a != 0 && b != 0 {
            self.offer(a, b);
        }
    }

    /// `a`, `b` placed; `pa`/`pb` candidates allowed only in `a`/`b`
    /// (they conflict with the other side); `free` undecided and
    /// conflict-free with both sides; `agents` conflict-free with everything
    /// still undecided, placed at the leaf.
    fn rec(&mut self, a: u128, b: u128, pa: u128, pb: u128, free: u128, agents: u128) -> Result<()> {
        *self.nodes += 1;
        if let Some(limit) = self.budget {
            if *self.nodes > limit {
                return Err(Error::ExactLimit { size: *self.nodes as usize, limit: limit as usize });
            }
        }
        let (mut a, mut b, mut pa, mut pb, mut free, mut agents) = (a, b, pa, pb, free, agents);
        // A candidate with no undecided conflicts across joins its only side.
        loop {
            let mut changed = false;
            let (block_a, block_b) = (pb | free, pa | free);
            for (side, pool, blockers) in [(&mut a, &mut pa, block_a), (&mut b, &mut pb, block_b)] {
                let mut m = *pool;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if self.h[v] & blockers == 0 {
                        *side |= 1 << v;
                        *pool &= !(1 << v);
                        changed = true;
                    }
                }
            }
            let undecided = pa | pb | free;
            let mut m = free;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if self.h[v] & undecided == 0 {
                    free &= !(1 << v);
                    agents |= 1 << v;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let (x, y, k) = (pc(a), pc(b), pc(agents));
        let (npa, npb, nf) = (pc(pa), pc(pb), pc(free));
        let bound = (x + npa + nf + k).min(y + npb + nf + k).min((x + y + npa + npb + nf + k) / 2);
        if bound <= self.best_val {
            return Ok(());
        }
        let undecided = pa | pb | free;
        if undecided == 0 {
            let mut m = agents;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if pc(a) <= pc(b) {
                    a |= 1 << v;
                } else {
                    b |= 1 << v;
                }
            }
            if a != 0 && b != 0 {
                self.offer(a, b);
            }
            return Ok(());
        }
        // Branch on the undecided vertex with most undecided conflicts.
        let mut v = undecided.trailing_zeros() as usize;
        let mut best_d = 0;
        let mut m = undecided;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            let d = pc(self.h[w] & undecided);
            if d > best_d {
                v = w;
                best_d = d;
            }
        }
        let bit = 1u128 << v;
        let hv = self.h[v];
        if pb & bit == 0 {
            self.rec(a | bit, b, (pa & !bit) | (free & hv), pb & !hv, free & !bit & !hv, agents)?;
        }
        // The first placed vertex goes to `a`.
        if pa & bit == 0 && a | b != 0 {
            self.rec(a, b | bit, pa & !hv, (pb & !bit) | (free & hv), free & !bit & !hv, agents)?;
        }
        self.rec(a, b, pa & !bit, pb & !bit, free & !bit, agents)
    }
}

/// Homogeneous pair between sides of different sizes through the cloning
/// reduction: `A`-vertices are cloned `|B|` times and `B`-vertices `|A|`
/// times, the balanced instance is solved and clones project back.
pub fn unbalanced_mighty(g: &SimpleGraph, a: &VSet, b: &VSet, cfg: &OracleConfig) -> Result<MightyOutcome> {
    g.pair_status(a, b)?;
    let union = a.union(b);
    let (h, map) = g.induced(&union);
    let mult: Vec<usize> = map.iter().map(|&v| if a.contains(v) { b.len() } else { a.len() }).collect();
    let blow = h.clone_blowup(&mult)?;
    let local_a: Vec<usize> = (0..map.len()).filter(|&i| a.contains(map[i])).collect();
    let local_b: Vec<usize> = (0..map.len()).filter(|&i| b.contains(map[i])).collect();
    let big_a = blow.lift(&h.vset(local_a));
    let big_b = blow.lift(&h.vset(local_b));
    let inner = mighty_pair(&blow.graph, &big_a, &big_b, cfg, None)?;
    let to_g = |s: &VSet| g.vset(blow.project(s).iter().map(|i| map[i]));
    let pa = to_g(&inner.pair.a);
    let pb = to_g(&inner.pair.b);
    let projected = HomPair::new(g, pa, pb, inner.pair.status, inner.pair.method)?;
    let c_achieved = projected.fraction_of(a.len(), b.len());
    Ok(MightyOutcome { target_met: c_achieved >= cfg.c_target, c_achieved, pair: projected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::half_graph;

    fn complete_bip(na: usize, nb: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(na + nb);
        for u in 0..na {
            for v in na..na + nb {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn best_bipair_examples() {
        let g = complete_bip(3, 4);
        let (a, b) = (g.vset(0..3), g.vset(3..7));
        let p = best_bipair(&g, &a, &b, HomStatus::Complete, &OracleConfig::exact()).unwrap().unwrap();
        assert_eq!((p.a, p.b), (a.clone(), b.clone()));
        let e = SimpleGraph::new(7);
        assert_eq!(best_bipair(&e, &a, &b, HomStatus::Complete, &OracleConfig::exact()).unwrap(), None);
        let h = half_graph(3);
        let p = best_bipair(&h, &h.vset(0..3), &h.vset(3..6), HomStatus::Complete, &OracleConfig::exact())
            .unwrap()
            .unwrap();
        assert_eq!((p.a.to_vec(), p.b.to_vec()), (vec![0], vec![4, 5]));
    }

    #[test]
    fn exact_limit_refused() {
        let g = SimpleGraph::new(30);
        let cfg = OracleConfig::exact();
        let r = best_bipair(&g, &g.vset(0..15), &g.vset(15..30), HomStatus::Empty, &cfg);
        assert_eq!(r, Err(Error::ExactLimit { size: 30, limit: 24 }));
    }

    #[test]
    fn mighty_examples() {
        let g = complete_bip(4, 4);
        let (a, b) = (g.vset(0..4), g.vset(4..8));
        let m = mighty_pair(&g, &a, &b, &OracleConfig::exact(), None).unwrap();
        assert_eq!((m.pair.status, m.c_achieved), (HomStatus::Complete, Rational64::from_integer(1)));
        let e = SimpleGraph::new(8);
        let m = mighty_pair(&e, &a, &b, &OracleConfig::exact(), None).unwrap();
        assert_eq!((m.pair.status, m.pair.total()), (HomStatus::Empty, 8));
        assert!(mighty_pair(&e, &a, &e.vset(4..7), &OracleConfig::exact(), None).is_err());
    }

    #[test]
    fn strong_examples() {
        let k = SimpleGraph::complete(6);
        let p = strong_pair(&k, &OracleConfig::exact()).unwrap();
        assert_eq!((p.status, p.a.len(), p.b.len()), (HomStatus::Complete, 3, 3));
        let e = SimpleGraph::new(7);
        let p = strong_pair(&e, &OracleConfig::exact()).unwrap();
        assert_eq!((p.status, p.min_side()), (HomStatus::Empty, 3));
        assert!(strong_pair(&SimpleGraph::new(1), &OracleConfig::exact()).is_err());
    }

    #[test]
    fn unbalanced_examples() {
        let g = complete_bip(1, 5);
        let m = unbalanced_mighty(&g, &g.vset([0]), &g.vset(1..6), &OracleConfig::exact()).unwrap();
        assert_eq!((m.pair.a.to_vec(), m.pair.b.len()), (vec![0], 5));
        let e = SimpleGraph::new(6);
        let m = unbalanced_mighty(&e, &e.vset(0..2), &e.vset(2..6), &OracleConfig::exact()).unwrap();
        assert_eq!((m.pair.status, m.pair.a.len(), m.pair.b.len()), (HomStatus::Empty, 2, 4));
        let h = half_graph(3);
        let m = unbalanced_mighty(&h, &h.vset(0..3), &h.vset([4]), &OracleConfig::exact()).unwrap();
        m.pair.verify(&h).unwrap();
        assert!(m.pair.b.to_vec() == vec![4]);
    }

    #[test]
    fn config_checks() {
        let bad = OracleConfig { c_target: Rational64::new(3, 4), ..OracleConfig::default() };
        assert!(bad.check().is_err());
        let bad = OracleConfig { exact_limit: 1, ..OracleConfig::default() };
        assert!(bad.check().is_err());
    }
}
