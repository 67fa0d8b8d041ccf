//! Large near-homogeneous sets from repeated strong pairs: `t` levels of
//! splitting give `2^t` cells whose quotient is a cograph.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};

use super::cotree::{cograph_clique_or_ind, Cotree};
use super::StrongOracle;
use crate::error::{Error, Result};
use crate::geom::Rational;
use crate::graph::{PairStatus, SimpleGraph, VSet};
use crate::homog::HomStatus;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RodlNode {
    pub depth: usize,
    /// Vertices of `G` handed to this node.
    pub cell: VSet,
    /// Status of the strong pair splitting this node; `None` at leaves.
    pub status: Option<HomStatus>,
    pub children: Option<(usize, usize)>,
    /// Size of each trimmed child side.
    pub side: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RodlTrace {
    pub t: usize,
    pub nodes: Vec<RodlNode>,
    /// Final cells, trimmed to `m_star` vertices each.
    pub cells: Vec<VSet>,
    pub m_star: usize,
    pub cotree: Cotree,
    pub selected: Vec<usize>,
    pub clique: bool,
    pub output: VSet,
    /// Smallest child-to-parent size ratio over all splits.
    pub c_achieved: Rational64,
    /// `c^t n s / 2^t`.
    pub bound: Rational,
}

/// `t = ceil(2 log2(1/eps))`: the least `t` with `2^t eps^2 >= 1`.
pub fn rodl_levels(eps: Rational64) -> usize {
    let (p, q) = (BigInt::from(*eps.numer()), BigInt::from(*eps.denom()));
    let (p2, q2) = (&p * &p, &q * &q);
    let mut t = 0;
    while (BigInt::one() << t) * &p2 < q2 {
        t += 1;
    }
    t
}

struct Builder<'a> {
    g: &'a SimpleGraph,
    oracle: &'a dyn StrongOracle,
    t: usize,
    nodes: Vec<RodlNode>,
    c: Rational64,
}

impl Builder<'_> {
    fn split(&mut self, cell: VSet, depth: usize) -> Result<(usize, Cotree)> {
        let id = self.nodes.len();
        self.nodes.push(RodlNode { depth, cell: cell.clone(), status: None, children: None, side: cell.len() });
        if depth == self.t {
            return Ok((id, Cotree::Leaf(id)));
        }
        if cell.len() < 2 {
            return Err(Error::OracleFailure(format!("cell at depth {depth} has {} vertices, too few to split", cell.len())));
        }
        let (h, map) = self.g.induced(&cell);
        let pair = self.oracle.strong(&h)?;
        let m = pair.a.len().min(pair.b.len());
        let lift = |s: &VSet| self.g.vset(s.take(m).iter().map(|i| map[i]));
        let (x, y) = (lift(&pair.a), lift(&pair.b));
        self.c = self.c.min(Rational64::new(m as i64, cell.len() as i64));
        let (ix, tx) = self.split(x, depth + 1)?;
        let (iy, ty) = self.split(y, depth + 1)?;
        let node = &mut self.nodes[id];
        node.status = Some(pair.status);
        node.children = Some((ix, iy));
        node.side = m;
        let tree = match pair.status {
            HomStatus::Complete => Cotree::join(tx, ty),
            HomStatus::Empty => Cotree::union(tx, ty),
        };
        Ok((id, tree))
    }
}

/// Union of cells forming a clique or independent set of the cell
/// quotient; `eps`-homogeneous when `s >= 1/eps`.
pub fn rodl_extract(g: &SimpleGraph, eps: Rational64, oracle: &dyn StrongOracle) -> Result<(VSet, RodlTrace)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument("rodl_extract needs at least 2 vertices".into()));
    }
    if eps <= Rational64::zero() || eps >= Rational64::one() {
        return Err(Error::InvalidArgument(format!("eps = {eps} must lie in (0, 1)")));
    }
    let t = rodl_levels(eps);
    let mut b = Builder { g, oracle, t, nodes: Vec::new(), c: Rational64::one() };
    let (_, tree) = b.split(g.all(), 0)?;
    let Builder { nodes, c: c_achieved, .. } = b;

    // Leaves in tree order become cells 0..2^t; relabel the cotree to match.
    let leaf_ids = tree.leaves();
    let m_star = leaf_ids.iter().map(|&i| nodes[i].cell.len()).min().expect("cells");
    let cells: Vec<VSet> = leaf_ids.iter().map(|&i| nodes[i].cell.take(m_star)).collect();
    let position = |id: usize| leaf_ids.iter().position(|&x| x == id).expect("leaf listed");
    let cotree = relabel(&tree, &position);
    if cells.len() != 1 << t {
        return Err(Error::Invariant(format!("{} cells instead of 2^{t}", cells.len())));
    }

    // Certify: cells are disjoint and each pair has the status the cotree says.
    let quotient = cotree.to_graph()?;
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if !cells[i].is_disjoint(&cells[j]) {
                return Err(Error::Certificate(format!("cells {i} and {j} overlap")));
            }
            let want = if quotient.has_edge(i, j) { PairStatus::Complete } else { PairStatus::Empty };
            if g.pair_status(&cells[i], &cells[j])? != want {
                return Err(Error::Certificate(format!("cells {i} and {j} disagree with the cotree")));
            }
        }
    }

    let choice = cograph_clique_or_ind(&cotree)?;
    let selected = choice.set.to_vec();
    let s = selected.len();
    let output = selected.iter().fold(VSet::new(n), |acc, &i| acc.union(&cells[i]));
    if output.len() != s * m_star {
        return Err(Error::Invariant(format!("|S| = {} is not s m* = {}", output.len(), s * m_star)));
    }
    let big = |r: Rational64| Rational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    let bound = big(c_achieved).pow(t as i32) * Rational::from_integer(BigInt::from(n * s))
        / Rational::from_integer(BigInt::one() << t);
    if Rational::from_integer(BigInt::from(output.len())) < bound {
        return Err(Error::Invariant(format!("|S| = {} is below c^t n s / 2^t", output.len())));
    }
    if !g.eps_homogeneous(&output, eps)? {
        return Err(Error::Certificate(format!(
            "output of {} vertices has density {}, not {eps}-homogeneous",
            output.len(),
            g.induced_density(&output)?
        )));
    }
    let trace = RodlTrace {
        t,
        nodes,
        cells,
        m_star,
        cotree,
        selected,
        clique: choice.clique,
        output: output.clone(),
        c_achieved,
        bound,
    };
    Ok((output, trace))
}

fn relabel(t: &Cotree, pos: &dyn Fn(usize) -> usize) -> Cotree {
    match t {
        Cotree::Leaf(v) => Cotree::Leaf(pos(*v)),
        Cotree::Union(a, b) => Cotree::union(relabel(a, pos), relabel(b, pos)),
        Cotree::Join(a, b) => Cotree::join(relabel(a, pos), relabel(b, pos)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homog::OracleConfig;

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn levels() {
        assert_eq!(rodl_levels(r(1, 4)), 4);
        assert_eq!(rodl_levels(r(1, 2)), 2);
        assert_eq!(rodl_levels(r(1, 3)), 4);
        assert_eq!(rodl_levels(r(1, 8)), 6);
    }

    #[test]
    fn empty_graph_keeps_everything() {
        let g = SimpleGraph::new(32);
        let (s, tr) = rodl_extract(&g, r(1, 4), &OracleConfig::exact()).unwrap();
        assert_eq!(tr.t, 4);
        assert_eq!(tr.cells.len(), 16);
        assert_eq!(s.len(), 32);
        assert!(!tr.clique);
    }

    #[test]
    fn complete_graph() {
        let g = SimpleGraph::complete(32);
        let (s, tr) = rodl_extract(&g, r(1, 4), &OracleConfig::exact()).unwrap();
        assert!(tr.clique && s.len() == 32);
    }

    #[test]
    fn random_graph_homogeneous() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut g = SimpleGraph::new(48);
        for u in 0..48 {
            for v in u + 1..48 {
                if rng.random_bool(0.08) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let (s, tr) = rodl_extract(&g, r(1, 4), &OracleConfig::exact()).unwrap();
        assert!(g.eps_homogeneous(&s, r(1, 4)).unwrap());
        assert!(tr.selected.len() >= 4);
    }
}
