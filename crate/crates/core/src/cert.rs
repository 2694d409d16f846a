//! Canonical certificates via partition refinement and individualisation.
//!
//! The search tree is the usual one: refine to an equitable ordered
//! partition, individualise each vertex of the first smallest non-singleton
//! cell, recurse. The certificate is the lexicographically least packed
//! upper-triangle adjacency bitstring over all leaves. Twin vertices and
//! automorphisms discovered at leaves are used to prune siblings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Isomorphism-invariant byte string: the order followed by the packed
/// adjacency bits of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert(Vec<u8>);

impl CanonicalCert {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let bits = &self.0[1..];
        let mut g = Graph::empty(n).expect("certificate order is bounded");
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    g.add_edge_unchecked(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cert({})", self.to_hex())
    }
}

impl FromStr for CanonicalCert {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bytes = hex::decode(s.trim()).map_err(|e| Error::BadCertificate(e.to_string()))?;
        let n = *bytes
            .first()
            .ok_or_else(|| Error::BadCertificate("empty".into()))? as usize;
        if n > MAX_ORDER || bytes.len() != 1 + packed_len(n) {
            return Err(Error::BadCertificate(format!(
                "length {} does not match order {n}",
                bytes.len()
            )));
        }
        Ok(CanonicalCert(bytes))
    }
}

impl Serialize for CanonicalCert {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCert {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn packed_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(8)
}

/// Packed adjacency bits of `g` under the vertex ordering `order`
/// (`order[i]` is the vertex placed at position `i`).
fn encode(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = vec![0u8; 1 + packed_len(n)];
    out[0] = n as u8;
    let mut k = 0;
    for i in 0..n {
        let row = g.neighbors(order[i]);
        for &w in &order[i + 1..] {
            if row.contains(w) {
                out[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    out
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Cells split by neighbour-count signatures, sorted ascending, so the
/// result depends only on the isomorphism type of (graph, partition).
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| VertexSet::from_slice(c).0).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbors(v).0;
                    let sig = masks.iter().map(|m| (row & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    changed |= start > 0 || i < keyed.len();
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if !changed {
            *cells = next;
            return;
        }
        *cells = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    /// Automorphisms found so far, as vertex maps.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, order: Vec<usize>) {
        let code = encode(self.g, &order);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == code {
                let mut gamma = vec![0; order.len()];
                for (i, &v) in order.iter().enumerate() {
                    gamma[v] = reference.1[i];
                }
                if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                    self.autos.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((code.clone(), order.clone()));
        }
        match &self.best {
            Some((b, _)) if *b <= code => {}
            _ => self.best = Some((code, order)),
        }
    }

    /// Orbit representative map for the subgroup generated by known
    /// automorphisms that fix every vertex of `prefix`.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for gamma in &self.autos {
            if prefix.iter().all(|&v| gamma[v] == v) {
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }

    fn visit(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let cell = cells[t].clone();
        // twins in the same cell are swapped by an automorphism fixing the prefix
        let mut candidates: Vec<usize> = Vec::new();
        for &v in &cell {
            let nv = self.g.neighbors(v);
            let twin_seen = candidates.iter().any(|&w| {
                let nw = self.g.neighbors(w);
                nv.without(w) == nw.without(v)
            });
            if !twin_seen {
                candidates.push(v);
            }
        }
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() {
                let orbit = self.orbits(prefix);
                if explored.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
            child.splice(t..=t, [vec![v], rest]);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical certificate together with a canonical labelling:
/// `labelling[i]` is the vertex of `g` placed at canonical position `i`.
pub fn canonical_form(g: &Graph) -> (CanonicalCert, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (CanonicalCert(vec![0]), Vec::new());
    }
    let mut search = Search {
        g,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    search.visit(vec![(0..n).collect()], &mut Vec::new());
    let (code, order) = search.best.expect("search reaches at least one leaf");
    (CanonicalCert(code), order)
}

pub fn canonical_cert(g: &Graph) -> CanonicalCert {
    canonical_form(g).0
}

/// Relabels `g` into its canonical representative.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_cert(g).to_graph()
}
