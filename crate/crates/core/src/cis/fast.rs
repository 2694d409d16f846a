//! CIS polynomials of block graphs by recursion on the block structure.
//!
//! At a cut vertex `v` whose removal leaves components `H_1..H_k`, with
//! `G_i = G[V(H_i) + v]`:
//!
//! ```text
//! Φ_{G,v} = x^{1-k} · Π Φ_{G_i,v}
//! ```
//!
//! At a non-cut vertex `v` lying in block `B`, with `G_u` the component of
//! `G - E(B)` containing `u`:
//!
//! ```text
//! Φ_{G,v} = x · Π_{u ∈ B - v} (1 + Φ_{G_u,u})
//! ```
//!
//! The global polynomial peels off non-cut vertices of end-blocks using
//! `Φ_G = Φ_{G,v} + Φ_{G-v}`.

use crate::blocks::{blocks_in, cut_vertices_of};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::IntPolynomial;

/// `Φ_{G[within], v}` for a connected block graph `G[within]` containing `v`.
pub(crate) fn local_in(g: &Graph, within: VertexSet, v: usize) -> IntPolynomial {
    let rest = within.without(v);
    let branches = g.components_in(rest);
    if branches.len() >= 2 {
        let k = branches.len();
        let prod = branches
            .iter()
            .map(|&c| local_in(g, c.with(v), v))
            .fold(IntPolynomial::one(), |acc, p| &acc * &p);
        return prod.shift_down(k - 1);
    }
    let block_rest = g.neighbors_in(v, within);
    let one = IntPolynomial::one();
    let mut prod = IntPolynomial::x();
    for u in block_rest {
        let side = g.component_of(u, within.difference(block_rest.with(v)).with(u));
        prod = &prod * &(&one + &local_in(g, side, u));
    }
    prod
}

/// Non-cut vertex of an end-block of the connected block graph
/// `G[within]`; the lowest-indexed such vertex.
fn peelable_vertex(g: &Graph, within: VertexSet) -> usize {
    let blocks = blocks_in(g, within);
    let cuts = cut_vertices_of(&blocks);
    blocks
        .iter()
        .filter(|b| b.intersection(cuts).len() <= 1)
        .filter_map(|b| b.difference(cuts).first())
        .min()
        .expect("every nonempty block graph has an end-block with a non-cut vertex")
}

/// `Φ_{G[within]}` for a vertex set whose components induce block graphs.
pub(crate) fn global_in(g: &Graph, within: VertexSet) -> IntPolynomial {
    let mut acc = IntPolynomial::zero();
    for comp in g.components_in(within) {
        let mut mask = comp;
        while !mask.is_empty() {
            let v = peelable_vertex(g, mask);
            acc += &local_in(g, mask, v);
            mask.remove(v);
        }
    }
    acc
}

fn require_block_components(g: &Graph) -> Result<()> {
    for comp in g.components() {
        if let Some(b) = blocks_in(g, comp).into_iter().find(|&b| !g.is_clique(b)) {
            return Err(Error::NotBlockGraph(b.to_vec()));
        }
    }
    Ok(())
}

/// `Φ_{G,v}` of a connected block graph.
pub fn phi_local_fast(g: &Graph, v: usize) -> Result<IntPolynomial> {
    g.check_vertex(v)?;
    g.require_connected()?;
    require_block_components(g)?;
    Ok(local_in(g, g.vertices(), v))
}

/// `Φ_G` of a graph whose components are block graphs; for a disconnected
/// graph this is the sum over components.
pub fn phi_fast(g: &Graph) -> Result<IntPolynomial> {
    require_block_components(g)?;
    Ok(global_in(g, g.vertices()))
}
