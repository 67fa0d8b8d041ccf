//! Equipartitions with few non-homogeneous pairs, refined through a mighty
//! oracle, and the reverse extraction of a homogeneous pair.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive};

use super::MightyOracle;
use crate::error::{Error, Result};
use crate::geom::Rational;
use crate::graph::{Certificate, PairStatus, RegPartition, SimpleGraph, VSet};
use crate::homog::{HomPair, HomStatus, Method, OracleConfig};

/// Improvement passes of the vertex-swap cleanup.
pub const CLEANUP_PASSES: usize = 50;

/// Tracked pairs of one round; every side has the same size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementState {
    pub round: usize,
    pub pairs: Vec<(VSet, VSet)>,
    pub eps_prime: Rational64,
    pub c: Rational64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTally {
    pub round: usize,
    pub pairs: usize,
    pub block_size: usize,
    /// Vertex pairs between tracked pairs.
    pub covered: usize,
    /// Vertex pairs between tracked pairs that are not homogeneous.
    pub non_homogeneous: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementTrace {
    pub t: usize,
    pub eps_prime: Rational64,
    pub c: Rational64,
    pub i0: usize,
    /// Vertices dropped to equalize the initial parts.
    pub trimmed: Vec<usize>,
    pub rounds: Vec<RoundTally>,
    /// First round whose pairs are all single vertices; later rounds repeat it.
    pub fixed_point: Option<usize>,
    pub refinement_parts: usize,
    pub exceptional_before_cleanup: usize,
    pub exceptional_after_cleanup: usize,
}

#[derive(Clone, Debug)]
pub struct RegularityOutcome {
    pub partition: RegPartition,
    pub trace: Option<RefinementTrace>,
}

fn big(r: Rational64) -> Rational {
    Rational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn big_int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `i0 = ceil(c^-2 ln(4/eps))`.
pub fn refinement_rounds(eps: Rational64, c: Rational64) -> usize {
    let ln = (4.0 / eps.to_f64().expect("finite")).ln();
    let inv = (Rational64::one() / (c * c)).to_f64().expect("finite");
    (inv * ln).ceil().max(0.0) as usize
}

impl RefinementState {
    fn block_size(&self) -> usize {
        self.pairs.first().map_or(0, |p| p.0.len())
    }

    /// Checks the four loop properties with exact arithmetic.
    fn check(&self, g: &SimpleGraph, t: usize, covered0: usize) -> Result<RoundTally> {
        let n = g.n();
        let i = self.round as i32;
        let size = self.block_size();
        if self.pairs.iter().any(|(a, b)| a.len() != size || b.len() != size) {
            return Err(Error::Invariant(format!("round {i}: tracked pairs differ in size")));
        }
        let inv = big(Rational64::one() / self.eps_prime);
        if big_int(self.pairs.len()) > big_int(t * t) * inv.pow(2 * i) {
            return Err(Error::Invariant(format!("round {i}: {} pairs exceed t^2 (1/eps')^(2i)", self.pairs.len())));
        }
        let mut seen = vec![false; n * n];
        let (mut covered, mut non_hom) = (0usize, 0usize);
        for (a, b) in &self.pairs {
            for u in a.iter() {
                for v in b.iter() {
                    let key = u.min(v) * n + u.max(v);
                    if std::mem::replace(&mut seen[key], true) {
                        return Err(Error::Invariant(format!("round {i}: vertex pair ({u}, {v}) tracked twice")));
                    }
                }
            }
            covered += a.len() * b.len();
            if g.status_unchecked(a, b) == PairStatus::Mixed {
                non_hom += a.len() * b.len();
            }
        }
        let keep = big(Rational64::one() - self.eps_prime * 2).pow(2 * i);
        if big_int(covered) < keep * big_int(covered0) {
            return Err(Error::Invariant(format!("round {i}: coverage {covered} below (1-2eps')^(2i) of {covered0}")));
        }
        let all_pairs = n * (n - 1) / 2;
        let decay = big(Rational64::one() - self.c * self.c).pow(i);
        if big_int(non_hom) > decay * big_int(all_pairs) {
            return Err(Error::Invariant(format!("round {i}: {non_hom} non-homogeneous vertex pairs exceed (1-c^2)^i")));
        }
        Ok(RoundTally { round: self.round, pairs: self.pairs.len(), block_size: size, covered, non_homogeneous: non_hom })
    }

    /// One refinement round: split each pair along its homogeneous subpair
    /// into chunks of `max(1, floor(eps' |A|))` and track all cross chunks.
    fn refine(&self, g: &SimpleGraph, oracle: &dyn MightyOracle) -> Result<RefinementState> {
        let size = self.block_size();
        let z = ((self.eps_prime * Rational64::from_integer(size as i64)).floor().to_integer() as usize).max(1);
        let chunks = |s: &VSet| -> Vec<VSet> {
            let v = s.to_vec();
            v.chunks_exact(z).map(|c| VSet::from_iter(s.universe(), c.iter().copied())).collect()
        };
        let mut next = Vec::new();
        for (a, b) in &self.pairs {
            let out = oracle.mighty(g, a, b)?;
            if !out.target_met {
                return Err(Error::OracleFailure(format!(
                    "round {}: mighty oracle reached c = {} below its target {}",
                    self.round,
                    out.c_achieved,
                    self.c
                )));
            }
            let (a1, b1) = (out.pair.a, out.pair.b);
            let mut ca = chunks(&a1);
            ca.extend(chunks(&a.difference(&a1)));
            let mut cb = chunks(&b1);
            cb.extend(chunks(&b.difference(&b1)));
            for x in &ca {
                for y in &cb {
                    next.push((x.clone(), y.clone()));
                }
            }
        }
        Ok(RefinementState { round: self.round + 1, pairs: next, eps_prime: self.eps_prime, c: self.c })
    }
}

/// Equipartition into `k` blocks with at most `eps k^2` non-homogeneous
/// pairs, certified exactly.
pub fn regularity_partition(
    g: &SimpleGraph,
    eps: Rational64,
    oracle: &dyn MightyOracle,
    k: usize,
) -> Result<RegularityOutcome> {
    let n = g.n();
    if eps <= Rational64::from_integer(0) || eps >= Rational64::one() {
        return Err(Error::InvalidArgument(format!("eps = {eps} must lie in (0, 1)")));
    }
    if Rational64::from_integer(k as i64) * eps < Rational64::from_integer(4) {
        return Err(Error::Precondition(format!("K = {k} is below 4/eps = {}", Rational64::from_integer(4) / eps)));
    }
    if n <= k {
        let blocks = (0..k).map(|i| if i < n { VSet::from_iter(n, [i]) } else { VSet::new(n) }).collect();
        let partition = RegPartition::new(g, blocks, eps)?;
        partition.verify(g)?;
        return Ok(RegularityOutcome { partition, trace: None });
    }
    let c = oracle.c();
    let t = (Rational64::from_integer(4) / eps).ceil().to_integer() as usize;
    let eps_prime = c * c * eps / Rational64::from_integer(100);
    let i0 = refinement_rounds(eps, c);

    // Initial split into t parts of size floor(n/t) after one-vertex trims.
    let q = n / t;
    let mut parts = Vec::with_capacity(t);
    let mut trimmed = Vec::new();
    let mut next = 0;
    for i in 0..t {
        let len = q + usize::from(i < n % t);
        if len > q {
            trimmed.push(next + q);
        }
        parts.push(VSet::range(n, next..next + q));
        next += len;
    }
    let pairs0: Vec<(VSet, VSet)> =
        (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).map(|(i, j)| (parts[i].clone(), parts[j].clone())).collect();
    let mut state = RefinementState { round: 0, pairs: pairs0, eps_prime, c };
    let covered0 = state.pairs.iter().map(|(a, b)| a.len() * b.len()).sum();
    let mut rounds = vec![state.check(g, t, covered0)?];
    let mut fixed_point = None;
    while state.round < i0 {
        if state.block_size() <= 1 {
            fixed_point = Some(state.round);
            break;
        }
        state = state.refine(g, oracle)?;
        rounds.push(state.check(g, t, covered0)?);
    }

    // Common refinement of the bipartitions by every tracked side, built
    // only from the vertex signatures that occur.
    let mut signature: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (idx, (a, b)) in state.pairs.iter().enumerate() {
        for v in a.iter() {
            signature[v].push(2 * idx as u32);
        }
        for v in b.iter() {
            signature[v].push(2 * idx as u32 + 1);
        }
    }
    let mut groups: BTreeMap<&[u32], Vec<usize>> = BTreeMap::new();
    for (v, s) in signature.iter().enumerate() {
        groups.entry(s.as_slice()).or_default().push(v);
    }
    let refinement_parts = groups.len();
    let mut blocks = equipartition_from(n, k, groups.into_values());
    let before = exceptional_count(g, &blocks);
    let after = swap_cleanup(g, &mut blocks);
    let blocks = blocks.into_iter().map(|b| VSet::from_iter(n, b)).collect();
    let partition = RegPartition::new(g, blocks, eps)?;
    if partition.exceptional_count() != after {
        return Err(Error::Invariant("cleanup tally differs from the certificates".into()));
    }
    partition.verify(g)?;
    let trace = RefinementTrace {
        t,
        eps_prime,
        c,
        i0,
        trimmed,
        rounds,
        fixed_point,
        refinement_parts,
        exceptional_before_cleanup: before,
        exceptional_after_cleanup: after,
    };
    Ok(RegularityOutcome { partition, trace: Some(trace) })
}

/// Cuts each part into whole blocks of the `k`-slot equipartition sizes and
/// pools the leftovers into the remaining slots.
fn equipartition_from(n: usize, k: usize, parts: impl Iterator<Item = Vec<usize>>) -> Vec<Vec<usize>> {
    let lo = n / k;
    let mut big_left = n % k;
    let mut small_left = k - big_left;
    let mut blocks = Vec::with_capacity(k);
    let mut pool = Vec::new();
    for part in parts {
        let mut rest: &[usize] = &part;
        loop {
            if big_left > 0 && rest.len() > lo {
                blocks.push(rest[..lo + 1].to_vec());
                rest = &rest[lo + 1..];
                big_left -= 1;
            } else if small_left > 0 && lo > 0 && rest.len() >= lo {
                blocks.push(rest[..lo].to_vec());
                rest = &rest[lo..];
                small_left -= 1;
            } else {
                break;
            }
        }
        pool.extend_from_slice(rest);
    }
    let mut rest: &[usize] = &pool;
    for size in std::iter::repeat_n(lo + 1, big_left).chain(std::iter::repeat_n(lo, small_left)) {
        blocks.push(rest[..size].to_vec());
        rest = &rest[size..];
    }
    debug_assert!(rest.is_empty());
    blocks
}

fn mixed(g: &SimpleGraph, x: &VSet, y: &VSet) -> bool {
    g.status_unchecked(x, y) == PairStatus::Mixed
}

fn exceptional_count(g: &SimpleGraph, blocks: &[Vec<usize>]) -> usize {
    let sets: Vec<VSet> = blocks.iter().map(|b| VSet::from_iter(g.n(), b.iter().copied())).collect();
    (0..sets.len()).flat_map(|i| (i + 1..sets.len()).map(move |j| (i, j))).filter(|&(i, j)| mixed(g, &sets[i], &sets[j])).count()
}

/// First-improvement local search over vertex swaps between blocks; block
/// sizes never change. Returns the final exceptional count.
fn swap_cleanup(g: &SimpleGraph, blocks: &mut [Vec<usize>]) -> usize {
    let k = blocks.len();
    let n = g.n();
    let mut sets: Vec<VSet> = blocks.iter().map(|b| VSet::from_iter(n, b.iter().copied())).collect();
    let mut ex = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let m = mixed(g, &sets[i], &sets[j]);
            ex[i][j] = m;
            ex[j][i] = m;
        }
    }
    let touched = |ex: &Vec<Vec<bool>>, i: usize, j: usize| -> usize {
        (0..k).filter(|&l| l != i && l != j).map(|l| usize::from(ex[i][l]) + usize::from(ex[j][l])).sum::<usize>()
            + usize::from(ex[i][j])
    };
    for _ in 0..CLEANUP_PASSES {
        let mut improved = false;
        for i in 0..k {
            for j in i + 1..k {
                if touched(&ex, i, j) == 0 {
                    continue;
                }
                'pairs: for u in sets[i].to_vec() {
                    for v in sets[j].to_vec() {
                        let old = touched(&ex, i, j);
                        let (mut si, mut sj) = (sets[i].clone(), sets[j].clone());
                        si.remove(u);
                        si.insert(v);
                        sj.remove(v);
                        sj.insert(u);
                        let mut row_i = vec![false; k];
                        let mut row_j = vec![false; k];
                        let mut new = usize::from(mixed(g, &si, &sj));
                        for l in (0..k).filter(|&l| l != i && l != j) {
                            row_i[l] = mixed(g, &si, &sets[l]);
                            row_j[l] = mixed(g, &sj, &sets[l]);
                            new += usize::from(row_i[l]) + usize::from(row_j[l]);
                            if new >= old {
                                break;
                            }
                        }
                        if new < old {
                            let ij = mixed(g, &si, &sj);
                            sets[i] = si;
                            sets[j] = sj;
                            for l in (0..k).filter(|&l| l != i && l != j) {
                                ex[i][l] = row_i[l];
                                ex[l][i] = row_i[l];
                                ex[j][l] = row_j[l];
                                ex[l][j] = row_j[l];
                            }
                            ex[i][j] = ij;
                            ex[j][i] = ij;
                            improved = true;
                            break 'pairs;
                        }
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    for (b, s) in blocks.iter_mut().zip(&sets) {
        *b = s.to_vec();
    }
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| ex[i][j]).count()
}

/// Oracle producing a certified equipartition of a graph.
pub trait PartitionOracle {
    fn partition(&self, g: &SimpleGraph) -> Result<RegPartition>;
}

/// [`regularity_partition`] at a fixed epsilon and block count.
#[derive(Clone, Debug)]
pub struct RegularityBackend {
    pub eps: Rational64,
    pub k: usize,
    pub mighty: OracleConfig,
}

/// Epsilon used when the partition backs a mighty pair.
pub const PROOF_EPS: (i64, i64) = (1, 200);

impl RegularityBackend {
    /// Proof epsilon 1/200 with the smallest admissible block count.
    pub fn new(mighty: OracleConfig) -> Self {
        let eps = Rational64::new(PROOF_EPS.0, PROOF_EPS.1);
        let k = (Rational64::from_integer(4) / eps).ceil().to_integer() as usize;
        RegularityBackend { eps, k, mighty }
    }
}

impl PartitionOracle for RegularityBackend {
    fn partition(&self, g: &SimpleGraph) -> Result<RegPartition> {
        regularity_partition(g, self.eps, &self.mighty, self.k).map(|o| o.partition)
    }
}

/// Homogeneous pair with both sides of size at least `n/(2K)`: a certified
/// pair of blocks `(V_i, V_j)` where `V_i` holds that many of `A` and `V_j`
/// that many of `B`.
pub fn mighty_from_partition(g: &SimpleGraph, a: &VSet, b: &VSet, oracle: &dyn PartitionOracle) -> Result<HomPair> {
    g.pair_status(a, b)?;
    let n = a.len();
    if n == 0 || b.len() != n {
        return Err(Error::InvalidArgument("mighty_from_partition needs |A| = |B| > 0".into()));
    }
    let (h, map) = g.induced(&a.union(b));
    let local = |s: &VSet| h.vset((0..map.len()).filter(|&i| s.contains(map[i])));
    let (la, lb) = (local(a), local(b));
    let p = oracle.partition(&h)?;
    p.verify(&h)?;
    let k = p.k();
    let heavy = |s: &VSet, side: &VSet| 2 * k * s.intersection_len(side) >= n;
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..k {
        if !heavy(&p.blocks[i], &la) {
            continue;
        }
        for j in (0..k).filter(|&j| j != i) {
            if !heavy(&p.blocks[j], &lb) || p.certificate(i, j) == Certificate::Exceptional {
                continue;
            }
            let size = p.blocks[i].intersection_len(&la).min(p.blocks[j].intersection_len(&lb));
            if best.is_none_or(|(s, _, _)| size > s) {
                best = Some((size, i, j));
            }
        }
    }
    let Some((_, i, j)) = best else {
        return Err(Error::OracleFailure(format!(
            "no certified block pair carries n/(2K) of both sides (K = {k}, {} exceptional)",
            p.exceptional_count()
        )));
    };
    let lift = |s: VSet| g.vset(s.iter().map(|x| map[x]));
    let x = lift(p.blocks[i].intersection(&la));
    let y = lift(p.blocks[j].intersection(&lb));
    let status = match g.pair_status(&x, &y)? {
        PairStatus::Complete => HomStatus::Complete,
        PairStatus::Empty => HomStatus::Empty,
        PairStatus::Mixed => return Err(Error::Certificate("certified block pair is mixed on the sides".into())),
    };
    HomPair::new(g, x, y, status, Method::Exact)
}
