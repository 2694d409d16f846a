//! One mean-decreasing move on a non-path block graph, and iteration to `P_n`.

use serde::Serialize;

use crate::blocks::{require_block_graph, BlockCutTree};
use crate::cis::stats::mean;
use crate::error::{Error, Result};
use crate::graph::{attach_path, path, Graph, VertexSet};
use crate::lemmas::families::FamilyKind;
use crate::rational::Rational;

/// Result of [`improve_step`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Improvement {
    #[serde(skip)]
    pub graph: Graph,
    pub lemma: FamilyKind,
    /// The block or cut vertex the move was applied at, in the input labelling.
    pub at: Vec<usize>,
    pub before: Rational,
    pub after: Rational,
}

/// `g` with `removed` deleted and a pendant path of `len` new vertices at `at`.
fn replace_with_path(g: &Graph, removed: VertexSet, at: usize, len: usize) -> Graph {
    let keep = g.vertices().difference(removed);
    let below = (keep.0 & ((1u64 << at) - 1)).count_ones() as usize;
    attach_path(&g.induced(keep), below, len)
        .expect("order is preserved")
        .0
}

/// Whether `set` induces a path having `end` as an endpoint.
fn is_path_from(g: &Graph, set: VertexSet, end: usize) -> bool {
    if !g.is_connected_set(set) || g.neighbors_in(end, set).len() > 1 {
        return false;
    }
    let degrees: Vec<usize> = set.iter().map(|w| g.neighbors_in(w, set).len()).collect();
    degrees.iter().all(|&d| d <= 2) && degrees.iter().sum::<usize>() == 2 * (set.len() - 1)
}

/// The vertices hanging off `x` away from block `b`, when they form a
/// nonempty pendant path ending at `x`.
fn pendant_path(g: &Graph, b: VertexSet, x: usize) -> Option<VertexSet> {
    let side = g.component_of(x, g.vertices().difference(b).with(x));
    (side.len() >= 2 && is_path_from(g, side, x)).then(|| side.without(x))
}

fn by_size_then_index(bct: &BlockCutTree) -> Vec<VertexSet> {
    let mut blocks: Vec<VertexSet> = bct
        .blocks()
        .iter()
        .copied()
        .filter(|b| b.len() >= 3)
        .collect();
    blocks.sort_by_key(|b| (b.len(), b.first()));
    blocks
}

/// A cyclic block with at most two cut vertices whose far side (if any) is
/// a pendant path: replace block plus path by a single pendant path.
fn stretching(g: &Graph, bct: &BlockCutTree) -> Option<(Graph, Vec<usize>)> {
    for b in by_size_then_index(bct) {
        let cuts = b.intersection(bct.cut_vertices()).to_vec();
        let (anchor, tail) = match cuts.as_slice() {
            [] => return Some((path(g.order()).expect("order >= 1"), b.to_vec())),
            [c] => (*c, VertexSet::EMPTY),
            [x, y] => match (pendant_path(g, b, *y), pendant_path(g, b, *x)) {
                (Some(t), _) => (*x, t),
                (None, Some(t)) => (*y, t),
                (None, None) => continue,
            },
            _ => continue,
        };
        let removed = b.without(anchor).union(tail);
        return Some((
            replace_with_path(g, removed, anchor, removed.len()),
            b.to_vec(),
        ));
    }
    None
}

/// A cut vertex with at least three branches, two of them pendant paths:
/// merge those two into one pendant path.
fn vertex_gluing(g: &Graph, bct: &BlockCutTree) -> Option<(Graph, Vec<usize>)> {
    for u in bct.cut_vertices() {
        let branches = g.components_in(g.vertices().without(u));
        if branches.len() < 3 {
            continue;
        }
        let mut paths = branches.iter().filter(|&&c| is_path_from(g, c.with(u), u));
        if let (Some(&a), Some(&b)) = (paths.next(), paths.next()) {
            let removed = a.union(b);
            return Some((replace_with_path(g, removed, u, removed.len()), vec![u]));
        }
    }
    None
}

/// A cyclic block carrying pendant paths at two of its vertices: move both
/// onto one vertex as a single path.
fn edge_gluing(g: &Graph, bct: &BlockCutTree) -> Option<(Graph, Vec<usize>)> {
    for b in by_size_then_index(bct) {
        let mut tails = b
            .iter()
            .filter_map(|x| pendant_path(g, b, x).map(|t| (x, t)));
        if let (Some((x1, t1)), Some((_, t2))) = (tails.next(), tails.next()) {
            let removed = t1.union(t2);
            return Some((replace_with_path(g, removed, x1, removed.len()), b.to_vec()));
        }
    }
    None
}

/// A graph of the same order with strictly smaller mean CIS order.
///
/// Moves are tried in the order stretching, vertex gluing, edge gluing;
/// within a move the candidate with the smallest (block size, lowest
/// vertex) wins. The decrease is checked exactly.
pub fn improve_step(g: &Graph) -> Result<Improvement> {
    let bct = require_block_graph(g)?;
    if g.order() < 3 {
        return Err(Error::Hypothesis(format!(
            "order must be >= 3, got {}",
            g.order()
        )));
    }
    if g.is_path() {
        return Err(Error::IsPath("already minimal"));
    }
    let (graph, lemma, at) = if let Some((h, at)) = stretching(g, &bct) {
        (h, FamilyKind::Stretching, at)
    } else if let Some((h, at)) = vertex_gluing(g, &bct) {
        (h, FamilyKind::VertexGluing, at)
    } else if let Some((h, at)) = edge_gluing(g, &bct) {
        (h, FamilyKind::EdgeGluing, at)
    } else {
        return Err(Error::NoImprovement(format!(
            "no applicable move on {:?}",
            g.edges()
        )));
    };
    let before = mean(g)?.mean;
    let after = mean(&graph)?.mean;
    if after >= before {
        return Err(Error::NoImprovement(format!(
            "{lemma:?} at {at:?} gave {after} >= {before} on {:?}",
            g.edges()
        )));
    }
    Ok(Improvement {
        graph,
        lemma,
        at,
        before,
        after,
    })
}

/// Applies [`improve_step`] until the path is reached; the steps in order.
pub fn improve_to_path(g: &Graph) -> Result<Vec<Improvement>> {
    let mut steps = Vec::new();
    let mut cur = g.clone();
    while !cur.is_path() {
        let step = improve_step(&cur)?;
        cur = step.graph.clone();
        steps.push(step);
    }
    Ok(steps)
}
