//! Cotrees: binary Union/Join trees whose leaves are the vertices of a
//! cograph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Box<Cotree>, Box<Cotree>),
    Join(Box<Cotree>, Box<Cotree>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    Union,
    Join,
}

impl Cotree {
    pub fn union(a: Cotree, b: Cotree) -> Cotree {
        Cotree::Union(Box::new(a), Box::new(b))
    }

    pub fn join(a: Cotree, b: Cotree) -> Cotree {
        Cotree::Join(Box::new(a), Box::new(b))
    }

    fn node(label: Label, a: Cotree, b: Cotree) -> Cotree {
        match label {
            Label::Union => Cotree::union(a, b),
            Label::Join => Cotree::join(a, b),
        }
    }

    fn label(&self) -> Option<Label> {
        match self {
            Cotree::Leaf(_) => None,
            Cotree::Union(..) => Some(Label::Union),
            Cotree::Join(..) => Some(Label::Join),
        }
    }

    fn children(&self) -> Option<(&Cotree, &Cotree)> {
        match self {
            Cotree::Leaf(_) => None,
            Cotree::Union(a, b) | Cotree::Join(a, b) => Some((a, b)),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self.children() {
            None => {
                if let Cotree::Leaf(v) = self {
                    out.push(*v);
                }
            }
            Some((a, b)) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.children().map_or(1, |(a, b)| a.leaf_count() + b.leaf_count())
    }

    /// Leaves must be exactly `0..m`, each once.
    pub fn check(&self) -> Result<usize> {
        let mut leaves = self.leaves();
        let m = leaves.len();
        leaves.sort_unstable();
        if leaves.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::MalformedCotree(format!("leaves are not exactly 0..{m}")));
        }
        Ok(m)
    }

    /// The cograph: two leaves adjacent iff their lowest common ancestor is
    /// a Join.
    pub fn to_graph(&self) -> Result<SimpleGraph> {
        let m = self.check()?;
        let mut g = SimpleGraph::new(m);
        self.add_edges(&mut g);
        Ok(g)
    }

    fn add_edges(&self, g: &mut SimpleGraph) {
        if let Some((a, b)) = self.children() {
            a.add_edges(g);
            b.add_edges(g);
            if self.label() == Some(Label::Join) {
                for u in a.leaves() {
                    for v in b.leaves() {
                        g.add_edge(u, v).expect("leaves in range");
                    }
                }
            }
        }
    }

    /// Internal nodes on the longest root-leaf path.
    pub fn depth(&self) -> usize {
        self.children().map_or(0, |(a, b)| 1 + a.depth().max(b.depth()))
    }

    /// Same cograph with every maximal run of equal labels rebuilt by
    /// repeatedly merging the two shallowest subtrees, which minimizes the
    /// depth of that run.
    pub fn normalized(&self) -> Cotree {
        let Some(label) = self.label() else {
            return self.clone();
        };
        let mut parts = Vec::new();
        self.flatten(label, &mut parts);
        let mut pool: Vec<Cotree> = parts.into_iter().map(Cotree::normalized).collect();
        while pool.len() > 1 {
            pool.sort_by_key(|t| std::cmp::Reverse(t.depth()));
            let a = pool.pop().expect("two or more");
            let b = pool.pop().expect("two or more");
            pool.push(Cotree::node(label, a, b));
        }
        pool.pop().expect("nonempty run")
    }

    fn flatten<'a>(&'a self, label: Label, out: &mut Vec<&'a Cotree>) {
        match self.children() {
            Some((a, b)) if self.label() == Some(label) => {
                a.flatten(label, out);
                b.flatten(label, out);
            }
            _ => out.push(self),
        }
    }

    /// All-Join tree on `0..k` (a clique), built as a left chain.
    pub fn clique_chain(k: usize) -> Cotree {
        Self::chain(k, Label::Join)
    }

    pub fn independent_chain(k: usize) -> Cotree {
        Self::chain(k, Label::Union)
    }

    fn chain(k: usize, label: Label) -> Cotree {
        assert!(k >= 1, "a cotree needs a leaf");
        (1..k).fold(Cotree::Leaf(0), |t, v| Cotree::node(label, t, Cotree::Leaf(v)))
    }

    /// Random cotree on `0..m` with random labels and shape.
    pub fn random(m: usize, seed: u64) -> Cotree {
        assert!(m >= 1, "a cotree needs a leaf");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pool: Vec<Cotree> = (0..m).map(Cotree::Leaf).collect();
        while pool.len() > 1 {
            let i = rng.random_range(0..pool.len());
            let a = pool.swap_remove(i);
            let j = rng.random_range(0..pool.len());
            let b = pool.swap_remove(j);
            let label = if rng.random_bool(0.5) { Label::Join } else { Label::Union };
            pool.push(Cotree::node(label, a, b));
        }
        pool.pop().expect("one tree left")
    }
}

/// Largest clique or independent set of a cograph, read off its cotree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CographChoice {
    pub set: VSet,
    pub clique: bool,
}

/// Bottom-up: a Join adds its children's cliques and keeps the larger
/// independent set; a Union does the dual. Ties favor the clique.
pub fn cograph_clique_or_ind(ct: &Cotree) -> Result<CographChoice> {
    let m = ct.check()?;
    let (clique, ind) = dp(ct, m);
    Ok(if clique.len() >= ind.len() {
        CographChoice { set: clique, clique: true }
    } else {
        CographChoice { set: ind, clique: false }
    })
}

fn dp(ct: &Cotree, m: usize) -> (VSet, VSet) {
    let larger = |x: VSet, y: VSet| if y.len() > x.len() { y } else { x };
    match ct {
        Cotree::Leaf(v) => (VSet::from_iter(m, [*v]), VSet::from_iter(m, [*v])),
        Cotree::Join(a, b) => {
            let ((ca, ia), (cb, ib)) = (dp(a, m), dp(b, m));
            (ca.union(&cb), larger(ia, ib))
        }
        Cotree::Union(a, b) => {
            let ((ca, ia), (cb, ib)) = (dp(a, m), dp(b, m));
            (larger(ca, cb), ia.union(&ib))
        }
    }
}

pub fn cograph_depth(ct: &Cotree) -> usize {
    ct.depth()
}
