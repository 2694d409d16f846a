//! Block decomposition (biconnected components), block-cut trees and
//! antennas of block graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Blocks and cut vertices of a connected graph.
///
/// A block is joined to a cut vertex exactly when the block contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    blocks: Vec<VertexSet>,
    cut_vertices: VertexSet,
}

impl BlockCutTree {
    /// Blocks sorted by their ascending vertex lists.
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn cut_vertices(&self) -> VertexSet {
        self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.contains(v)
    }

    /// `(block index, cut vertex)` pairs.
    pub fn incidence(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for c in b.intersection(self.cut_vertices) {
                out.push((i, c));
            }
        }
        out
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.blocks[i].contains(v))
            .collect()
    }

    pub fn block_cut_count(&self, block: usize) -> usize {
        self.blocks[block].intersection(self.cut_vertices).len()
    }

    /// Block containing exactly one cut vertex.
    pub fn is_end_block(&self, block: usize) -> bool {
        self.block_cut_count(block) == 1
    }

    /// Block-cut tree as a graph: blocks are `0..b`, cut vertex `c` is the
    /// node `b + rank(c)` where `rank` counts cut vertices below `c`.
    pub fn tree(&self) -> Graph {
        let cuts = self.cut_vertices.to_vec();
        let b = self.blocks.len();
        let edges: Vec<_> = self
            .incidence()
            .into_iter()
            .map(|(i, c)| (i, b + cuts.iter().position(|&x| x == c).unwrap()))
            .collect();
        Graph::build(b + cuts.len(), &edges).expect("block-cut tree fits")
    }
}

/// Blocks of the subgraph induced by `within`, for any (possibly
/// disconnected) vertex set. Isolated vertices form singleton blocks.
pub(crate) fn blocks_in(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    struct Dfs<'a> {
        g: &'a Graph,
        within: VertexSet,
        disc: [u32; 64],
        low: [u32; 64],
        time: u32,
        stack: Vec<(usize, usize)>,
        out: Vec<VertexSet>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for w in self.g.neighbors_in(u, self.within) {
                if self.disc[w] == 0 {
                    self.stack.push((u, w));
                    self.visit(w, Some(u));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = self.stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }

    let mut dfs = Dfs {
        g,
        within,
        disc: [0; 64],
        low: [0; 64],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in within {
        if dfs.disc[v] == 0 {
            if g.neighbors_in(v, within).is_empty() {
                dfs.out.push(VertexSet::singleton(v));
            }
            dfs.visit(v, None);
        }
    }
    let mut blocks = dfs.out;
    blocks.sort_by_key(|b| b.to_vec());
    blocks
}

/// Cut vertices given the block list: vertices in two or more blocks.
pub(crate) fn cut_vertices_of(blocks: &[VertexSet]) -> VertexSet {
    let mut seen = VertexSet::EMPTY;
    let mut cut = VertexSet::EMPTY;
    for &b in blocks {
        cut = cut.union(seen.intersection(b));
        seen = seen.union(b);
    }
    cut
}

pub fn block_decomposition(g: &Graph) -> Result<BlockCutTree> {
    g.require_connected()?;
    let blocks = blocks_in(g, g.vertices());
    let cut_vertices = cut_vertices_of(&blocks);
    Ok(BlockCutTree {
        blocks,
        cut_vertices,
    })
}

/// Whether every block of the connected graph `g` is complete.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let bct = block_decomposition(g)?;
    Ok(bct.blocks().iter().all(|&b| g.is_clique(b)))
}

/// Errors unless `g` is a connected block graph.
pub fn require_block_graph(g: &Graph) -> Result<BlockCutTree> {
    let bct = block_decomposition(g)?;
    if let Some(b) = bct.blocks().iter().find(|&&b| !g.is_clique(b)) {
        return Err(Error::NotBlockGraph(b.to_vec()));
    }
    Ok(bct)
}

/// Shortest path from a leaf to the nearest vertex of degree at least three.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Antenna {
    pub leaf: usize,
    /// Vertices from the leaf up to and including `vertex`.
    pub path: Vec<usize>,
    /// The degree->=3 endpoint.
    pub vertex: usize,
    /// Blocks containing `vertex` and no other vertex of the path.
    pub blocks: Vec<Vec<usize>>,
}

impl Antenna {
    /// Number of edges on the antenna.
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.path.len() <= 1
    }
}

pub fn antennas(g: &Graph) -> Result<Vec<Antenna>> {
    let bct = require_block_graph(g)?;
    if g.is_path() {
        return Err(Error::IsPath("antennas are undefined"));
    }
    let mut out = Vec::new();
    for leaf in g.leaves() {
        let mut path = vec![leaf];
        let mut prev = usize::MAX;
        let mut cur = leaf;
        while g.degree(cur) < 3 {
            let next = g
                .neighbors(cur)
                .iter()
                .find(|&w| w != prev)
                .expect("a leaf of a connected non-path block graph reaches a branch vertex");
            prev = cur;
            cur = next;
            path.push(cur);
        }
        let on_path = VertexSet::from_slice(&path);
        let blocks = bct
            .blocks()
            .iter()
            .filter(|b| b.contains(cur) && b.intersection(on_path).len() == 1)
            .map(|b| b.to_vec())
            .collect();
        out.push(Antenna {
            leaf,
            path,
            vertex: cur,
            blocks,
        });
    }
    Ok(out)
}
