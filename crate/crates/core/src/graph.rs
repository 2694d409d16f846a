//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, stored as
//! adjacency bitmasks, plus constructors for the graph families used
//! throughout the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported order; vertex sets are packed into a `u64`.
pub const MAX_ORDER: usize = 64;

/// A set of vertices packed into a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        VertexSet(vs.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u, v));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::NoSuchVertex { v, n: self.n })
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !((2u64 << u) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Neighbours of `v` that lie in `within`.
    #[inline]
    pub fn neighbors_in(&self, v: usize, within: VertexSet) -> VertexSet {
        VertexSet(self.adj[v] & within.0)
    }

    /// Union of the neighbourhoods of all vertices in `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        VertexSet(set.iter().fold(0u64, |acc, v| acc | self.adj[v]))
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = VertexSet(self.neighborhood(frontier).0 & within.0 & !seen.0);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest vertex.
    pub fn components_in(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_in(self.vertices())
    }

    /// Whether the subgraph induced by `set` is connected (the empty set is not).
    #[inline]
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(v) => self.component_of(v, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_connected_set(self.vertices())
    }

    /// Returns an error naming two vertices in different components, if any.
    pub fn require_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Empty);
        }
        let comps = self.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected(
                comps[0].first().unwrap(),
                comps[1].first().unwrap(),
            ));
        }
        Ok(())
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` preserving order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts = set.to_vec();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                VertexSet(self.adj[v] & set.0)
                    .iter()
                    .fold(0u64, |acc, w| acc | (1u64 << index[w]))
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Graph with `v` deleted; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices().without(v))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for w in self.neighbors(u) {
                adj[perm[u]] |= 1u64 << perm[w];
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Whether `set` induces a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    /// Vertices of degree at most one.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) <= 1).collect()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    /// Whether the graph is isomorphic to a path (`P_1` included).
    pub fn is_path(&self) -> bool {
        self.is_tree() && (0..self.n).all(|v| self.degree(v) <= 2)
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Tree whose vertices of degree at least two induce a path.
    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        let spine: VertexSet = (0..self.n).filter(|&v| self.degree(v) >= 2).collect();
        if spine.len() <= 1 {
            return true;
        }
        // the spine of a tree is connected automatically; it is a path iff
        // every spine vertex has at most two spine neighbours
        spine.iter().all(|v| self.neighbors_in(v, spine).len() <= 2)
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "path order must be at least 1".into(),
        ));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "clique order must be at least 1".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "cycle order must be at least 3".into(),
        ));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges)
}

/// Clique `K_s` on `0..s` joined completely to vertex `s`, the first vertex
/// of a path `s - (s+1) - ... - (s+t-1)`.
///
/// `broom(1, t)` is the path on `t + 1` vertices and `broom(s, 1)` is `K_{s+1}`.
pub fn broom(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidParameter(format!(
            "broom needs clique size and tail length >= 1, got ({s}, {t})"
        )));
    }
    let n = s + t;
    let mut edges = Vec::new();
    for u in 0..s {
        for v in u + 1..=s {
            edges.push((u, v));
        }
    }
    for i in s + 1..n {
        edges.push((i - 1, i));
    }
    Graph::build(n, &edges)
}

/// Spine path `0..legs.len()` where spine vertex `i` gets `legs[i]` pendant leaves.
pub fn caterpillar(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() {
        return Err(Error::InvalidParameter(
            "caterpillar spine must be nonempty".into(),
        ));
    }
    let spine = legs.len();
    let n = spine + legs.iter().sum::<usize>();
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for (i, &k) in legs.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::build(n, &edges)
}

/// Centre `0` with pendant paths of the given lengths.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.contains(&0) {
        return Err(Error::InvalidParameter(
            "spider legs must have length >= 1".into(),
        ));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::build(n, &edges)
}

/// Star `K_{1,k}` with centre `0`.
pub fn star(k: usize) -> Result<Graph> {
    spider(&vec![1; k])
}

/// Identifies vertex `v` of `h` with vertex `u` of `g`.
///
/// The glued vertex becomes `0`; the remaining vertices of `h` follow in
/// ascending order, then the remaining vertices of `g`.
pub fn glue_at_vertex(h: &Graph, v: usize, g: &Graph, u: usize) -> Result<Graph> {
    h.check_vertex(v)?;
    g.check_vertex(u)?;
    let n = h.order() + g.order() - 1;
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let map_h: Vec<usize> = (0..h.order())
        .map(|x| match x.cmp(&v) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => x + 1,
            std::cmp::Ordering::Greater => x,
        })
        .collect();
    let offset = h.order() - 1;
    let map_g: Vec<usize> = (0..g.order())
        .map(|x| match x.cmp(&u) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => offset + x + 1,
            std::cmp::Ordering::Greater => offset + x,
        })
        .collect();
    let mut out = Graph::empty(n)?;
    for (a, b) in h.edges() {
        out.add_edge_unchecked(map_h[a], map_h[b]);
    }
    for (a, b) in g.edges() {
        out.add_edge_unchecked(map_g[a], map_g[b]);
    }
    Ok(out)
}

/// Attaches a pendant path with `len` new vertices at `v`; returns the new
/// graph and the far end of the path (or `v` itself when `len == 0`).
pub fn attach_path(g: &Graph, v: usize, len: usize) -> Result<(Graph, usize)> {
    g.check_vertex(v)?;
    let n = g.order() + len;
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut adj = g.adj.clone();
    adj.resize(n, 0);
    let mut out = Graph::from_adjacency(adj);
    let mut prev = v;
    for w in g.order()..n {
        out.add_edge_unchecked(prev, w);
        prev = w;
    }
    Ok((out, prev))
}

/// Attaches a new clique of `size` vertices, each joined to `v` and to each other.
pub fn attach_clique(g: &Graph, v: usize, size: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let n = g.order() + size;
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut adj = g.adj.clone();
    adj.resize(n, 0);
    let mut out = Graph::from_adjacency(adj);
    for a in g.order()..n {
        out.add_edge_unchecked(v, a);
        for b in a + 1..n {
            out.add_edge_unchecked(a, b);
        }
    }
    Ok(out)
}

/// Adds a new vertex adjacent to every member of `to`.
pub fn add_vertex(g: &Graph, to: VertexSet) -> Result<Graph> {
    let n = g.order() + 1;
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut adj = g.adj.clone();
    adj.push(0);
    let mut out = Graph::from_adjacency(adj);
    for w in to {
        g.check_vertex(w)?;
        out.add_edge_unchecked(w, n - 1);
    }
    Ok(out)
}

/// Serialisable edge-list view of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList {
            n: g.order(),
            edges: g.edges(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;
    fn try_from(e: EdgeList) -> Result<Graph> {
        Graph::build(e.n, &e.edges)
    }
}
