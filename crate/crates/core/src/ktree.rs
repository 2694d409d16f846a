//! k-trees, their dual block graphs, and the mean order of sub-k-trees.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::blocks::require_block_graph;
use crate::cis::stats::mean;
use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexSet};
use crate::rational::Rational;

/// Largest k-tree the subset oracle will enumerate.
pub const ORACLE_CAP: usize = 12;

/// A vertex added adjacent to the k-clique `clique`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub vertex: usize,
    pub clique: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTree {
    graph: Graph,
    k: usize,
    build_order: Option<Vec<Attachment>>,
}

impl Serialize for KTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            k: usize,
            graph: EdgeList,
            build_order: &'a Option<Vec<Attachment>>,
        }
        Repr {
            k: self.k,
            graph: EdgeList::from(&self.graph),
            build_order: &self.build_order,
        }
        .serialize(s)
    }
}

/// Whether `g` reduces to `K_k` by deleting simplicial vertices of degree `k`.
pub fn is_k_tree(g: &Graph, k: usize) -> bool {
    if k == 0 || g.order() < k {
        return false;
    }
    let mut alive = g.vertices();
    while alive.len() > k {
        let simplicial = alive.iter().find(|&v| {
            let nbrs = g.neighbors_in(v, alive);
            nbrs.len() == k && g.is_clique(nbrs)
        });
        match simplicial {
            Some(v) => alive.remove(v),
            None => return false,
        }
    }
    g.is_clique(alive)
}

/// All `size`-subsets of `within` that are cliques, in lexicographic order.
fn cliques_of_size(g: &Graph, within: VertexSet, size: usize) -> Vec<VertexSet> {
    fn grow(g: &Graph, cur: VertexSet, cand: VertexSet, size: usize, out: &mut Vec<VertexSet>) {
        if cur.len() == size {
            out.push(cur);
            return;
        }
        for v in cand {
            let rest = VertexSet(cand.0 & !((2u64 << v) - 1));
            grow(g, cur.with(v), rest.intersection(g.neighbors(v)), size, out);
        }
    }
    let mut out = Vec::new();
    grow(g, VertexSet::EMPTY, within, size, &mut out);
    out
}

impl KTree {
    /// Wraps a graph after checking it is a k-tree.
    pub fn from_graph(graph: Graph, k: usize) -> Result<Self> {
        if !is_k_tree(&graph, k) {
            return Err(Error::InvalidParameter(format!("graph is not a {k}-tree")));
        }
        Ok(KTree {
            graph,
            k,
            build_order: None,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn build_order(&self) -> Option<&[Attachment]> {
        self.build_order.as_deref()
    }

    pub fn k_cliques(&self) -> Vec<VertexSet> {
        cliques_of_size(&self.graph, self.graph.vertices(), self.k)
    }

    fn require_nontrivial(&self) -> Result<()> {
        if self.order() <= self.k {
            return Err(Error::InvalidParameter(format!(
                "k-tree of order {} <= k = {} is trivial",
                self.order(),
                self.k
            )));
        }
        Ok(())
    }

    /// The `(k+1)`-cliques, adjacent when they share a k-clique. Vertex `i`
    /// of the dual is the `i`-th clique in lexicographic order.
    pub fn dual(&self) -> Result<Graph> {
        self.require_nontrivial()?;
        let cliques = cliques_of_size(&self.graph, self.graph.vertices(), self.k + 1);
        let mut edges = Vec::new();
        for (i, a) in cliques.iter().enumerate() {
            for (j, b) in cliques.iter().enumerate().skip(i + 1) {
                if a.intersection(*b).len() == self.k {
                    edges.push((i, j));
                }
            }
        }
        Graph::build(cliques.len(), &edges)
    }

    /// `μ(T) = W_{T'} / (N_{T'} + (n-k)k + 1) + k` with `T'` the dual.
    pub fn mean_sub_k_tree(&self) -> Result<Rational> {
        let d = self.dual()?;
        let r = mean(&d)?;
        let k = self.k;
        let trivial = BigUint::from((self.order() - k) * k + 1);
        Ok(Rational::ratio(&r.total, &(r.count + trivial)) + Rational::from(k as i64))
    }

    /// Every vertex set inducing a k-tree of order at least `k+1`, then every
    /// k-clique; each group in ascending bitmask order.
    pub fn enum_sub_k_trees_brute(&self) -> Result<Vec<VertexSet>> {
        self.require_nontrivial()?;
        let n = self.order();
        if n > ORACLE_CAP {
            return Err(Error::OverCap { n, cap: ORACLE_CAP });
        }
        let k = self.k;
        let mut out: Vec<VertexSet> = (1..1u64 << n)
            .map(VertexSet)
            .filter(|s| s.len() > k && is_k_tree(&self.graph.induced(*s), k))
            .collect();
        out.extend(self.k_cliques());
        Ok(out)
    }

    /// Mean order of the sets from [`KTree::enum_sub_k_trees_brute`].
    pub fn mean_sub_k_tree_brute(&self) -> Result<Rational> {
        let sets = self.enum_sub_k_trees_brute()?;
        let total: usize = sets.iter().map(|s| s.len()).sum();
        Ok(Rational::new(total as i64, sets.len() as i64))
    }

    /// Every dual is a connected block graph; errors otherwise.
    pub fn check_dual(&self) -> Result<Graph> {
        let d = self.dual()?;
        require_block_graph(&d)?;
        Ok(d)
    }
}

/// `K_k` on `0..k`, then vertex `k + i` joined to `attachments[i]`.
pub fn build_k_tree(k: usize, attachments: &[Vec<usize>]) -> Result<KTree> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut g = crate::graph::complete(k)?;
    let mut order = Vec::with_capacity(attachments.len());
    for clique in attachments {
        let set = VertexSet::from_slice(clique);
        let in_range = clique.iter().all(|&v| v < g.order());
        if !in_range || clique.len() != k || set.len() != k || !g.is_clique(set) {
            return Err(Error::BadAttachment(clique.clone()));
        }
        g = crate::graph::add_vertex(&g, set)?;
        order.push(Attachment {
            vertex: g.order() - 1,
            clique: set.to_vec(),
        });
    }
    Ok(KTree {
        graph: g,
        k,
        build_order: Some(order),
    })
}

/// Order-`n` k-tree; each new vertex attaches to a uniformly chosen
/// existing k-clique.
pub fn random_k_tree<R: Rng + ?Sized>(k: usize, n: usize, rng: &mut R) -> Result<KTree> {
    if k == 0 || n < k {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let mut cliques: Vec<Vec<usize>> = vec![(0..k).collect()];
    let mut attachments = Vec::with_capacity(n - k);
    for v in k..n {
        let base = cliques.choose(rng).expect("at least one k-clique").clone();
        for drop in 0..k {
            let mut c: Vec<usize> = base.iter().copied().filter(|&w| w != base[drop]).collect();
            c.push(v);
            cliques.push(c);
        }
        attachments.push(base);
    }
    build_k_tree(k, &attachments)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};
    use crate::random::seeded_rng;

    #[test]
    fn recognition() {
        assert!(is_k_tree(&path(5).unwrap(), 1));
        assert!(is_k_tree(&star(4).unwrap(), 1));
        assert!(is_k_tree(&complete(4).unwrap(), 3));
        assert!(!is_k_tree(&cycle(4).unwrap(), 2));
        assert!(!is_k_tree(&Graph::empty(2).unwrap(), 1));
        assert!(is_k_tree(&complete(1).unwrap(), 1));
    }

    #[test]
    fn builds() {
        let p = build_k_tree(1, &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(p.graph().is_path());
        let d = build_k_tree(2, &[vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(d.graph().size(), 5);
        assert!(build_k_tree(2, &[vec![0, 2]]).is_err());
        assert!(build_k_tree(2, &[vec![0, 0]]).is_err());
        // fan: every new vertex on vertex 0 and the previous one
        let fan = build_k_tree(2, &[vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert!(is_k_tree(fan.graph(), 2));
        assert_eq!(fan.k_cliques().len(), (5 - 2) * 2 + 1);
    }

    #[test]
    fn duals() {
        let p3 = KTree::from_graph(path(3).unwrap(), 1).unwrap();
        assert!(p3.dual().unwrap().is_complete());
        assert_eq!(p3.dual().unwrap().order(), 2);
        let s = KTree::from_graph(star(3).unwrap(), 1).unwrap();
        assert_eq!(s.dual().unwrap(), complete(3).unwrap());
        let k3 = KTree::from_graph(complete(3).unwrap(), 2).unwrap();
        assert_eq!(k3.dual().unwrap().order(), 1);
        assert!(KTree::from_graph(complete(2).unwrap(), 2)
            .unwrap()
            .dual()
            .is_err());
    }

    #[test]
    fn formula_examples() {
        let p3 = KTree::from_graph(path(3).unwrap(), 1).unwrap();
        assert_eq!(p3.mean_sub_k_tree().unwrap(), Rational::new(5, 3));
        assert_eq!(p3.enum_sub_k_trees_brute().unwrap().len(), 6);
        let s = KTree::from_graph(star(3).unwrap(), 1).unwrap();
        assert_eq!(s.mean_sub_k_tree().unwrap(), Rational::new(23, 11));
        assert_eq!(s.mean_sub_k_tree_brute().unwrap(), Rational::new(23, 11));
        let k3 = KTree::from_graph(complete(3).unwrap(), 2).unwrap();
        assert_eq!(k3.mean_sub_k_tree_brute().unwrap(), Rational::new(9, 4));
        assert_eq!(k3.mean_sub_k_tree().unwrap(), Rational::new(9, 4));
    }

    #[test]
    fn random_k_trees_have_block_graph_duals() {
        let mut rng = seeded_rng(3);
        for k in 1..=3 {
            for n in k + 1..=12 {
                let t = random_k_tree(k, n, &mut rng).unwrap();
                assert!(is_k_tree(t.graph(), k));
                assert_eq!(t.k_cliques().len(), (n - k) * k + 1);
                t.check_dual().unwrap();
            }
        }
    }
}
