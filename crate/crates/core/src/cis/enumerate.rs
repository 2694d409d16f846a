use crate::graph::{Graph, VertexSet};

/// Every vertex subset inducing a connected subgraph, each exactly once.
///
/// Sets are grown from an anchor `r` (their minimum vertex) by adding only
/// vertices above `r` that are adjacent to the current set but were not
/// already adjacent to an earlier member, so each connected set has a unique
/// growth sequence. Output order is deterministic: anchors ascend, and
/// within an anchor the lowest candidate is tried first.
pub struct ConnectedSets<'a> {
    g: &'a Graph,
    within: u64,
    roots: u64,
    above_root: u64,
    stack: Vec<Frame>,
}

#[derive(Clone, Copy)]
struct Frame {
    set: u64,
    ext: u64,
    /// `set` together with all its neighbours.
    closed: u64,
}

impl<'a> ConnectedSets<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Self::within(g, g.vertices())
    }

    /// Restricts enumeration to the subgraph induced by `within`.
    pub fn within(g: &'a Graph, within: VertexSet) -> Self {
        ConnectedSets {
            g,
            within: within.0,
            roots: within.0,
            above_root: 0,
            stack: Vec::with_capacity(g.order()),
        }
    }
}

impl Iterator for ConnectedSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(top) = self.stack.last_mut() {
                if top.ext == 0 {
                    self.stack.pop();
                    continue;
                }
                let w = top.ext.trailing_zeros() as usize;
                top.ext &= top.ext - 1;
                let nw = self.g.neighbors(w).0 & self.within & self.above_root;
                let frame = Frame {
                    set: top.set | 1u64 << w,
                    ext: top.ext | (nw & !top.closed),
                    closed: top.closed | nw | 1u64 << w,
                };
                self.stack.push(frame);
                return Some(VertexSet(frame.set));
            }
            if self.roots == 0 {
                return None;
            }
            let r = self.roots.trailing_zeros() as usize;
            self.roots &= self.roots - 1;
            self.above_root = if r >= 63 { 0 } else { !((2u64 << r) - 1) };
            let nr = self.g.neighbors(r).0 & self.within & self.above_root;
            self.stack.push(Frame {
                set: 1u64 << r,
                ext: nr,
                closed: nr | 1u64 << r,
            });
            return Some(VertexSet::singleton(r));
        }
    }
}

pub fn enum_connected_sets(g: &Graph) -> ConnectedSets<'_> {
    ConnectedSets::new(g)
}
