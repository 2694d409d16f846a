//! Path- and broom-gluing families `G_s` and their monotone mean chains.

use num_bigint::BigUint;
use serde::Serialize;

use crate::blocks::require_block_graph;
use crate::cert::canonical_cert;
use crate::cis::closed::binomial;
use crate::cis::stats::{phi, CisReport};
use crate::error::{Error, Result};
use crate::graph::{attach_path, broom, glue_at_vertex, path, EdgeList, Graph};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    VertexGluing,
    EdgeGluing,
    Stretching,
}

/// Per-member counts: engine values next to the closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Member {
    pub s: usize,
    pub graph: EdgeList,
    #[serde(flatten)]
    pub engine: CisReport,
    #[serde(rename = "N_closed", serialize_with = "decimal")]
    pub count_closed: BigUint,
    #[serde(rename = "W_closed", serialize_with = "decimal")]
    pub total_closed: BigUint,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `G_1, G_2, ...` of one family with the checks on them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyChain {
    pub kind: FamilyKind,
    pub members: Vec<Member>,
    pub means: Vec<Rational>,
    pub chain_ok: bool,
    /// `None` where the family has no reflection symmetry.
    pub symmetry_ok: Option<bool>,
    pub closed_form_ok: bool,
}

impl FamilyChain {
    pub fn graphs(&self) -> Vec<Graph> {
        self.members
            .iter()
            .map(|m| Graph::build(m.graph.n, &m.graph.edges).expect("valid member"))
            .collect()
    }

    pub fn all_ok(&self) -> bool {
        self.chain_ok && self.symmetry_ok.unwrap_or(true) && self.closed_form_ok
    }
}

fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}

fn require_host(h: &Graph, min_order: usize) -> Result<()> {
    if h.order() < min_order {
        return Err(hypothesis(format!(
            "H needs order >= {min_order}, got {}",
            h.order()
        )));
    }
    require_block_graph(h)?;
    Ok(())
}

fn local(g: &Graph, v: usize) -> CisReport {
    CisReport::from_poly(&crate::cis::stats::phi_local(g, v).expect("in range")).expect("nonempty")
}

/// `(N, W)` of a possibly empty or disconnected graph.
fn totals(g: &Graph) -> (BigUint, BigUint) {
    let p = phi(g);
    (p.eval_one(), p.derivative_at_one())
}

fn strictly_increasing(means: &[Rational]) -> bool {
    means.windows(2).all(|w| w[0] < w[1])
}

fn finish(
    kind: FamilyKind,
    graphs: Vec<Graph>,
    closed: Vec<(BigUint, BigUint)>,
    chain_len: usize,
    mirror: Option<usize>,
) -> FamilyChain {
    let engine: Vec<CisReport> = graphs
        .iter()
        .map(|g| CisReport::from_poly(&phi(g)).expect("nonempty"))
        .collect();
    let means: Vec<Rational> = engine.iter().map(|r| r.mean.clone()).collect();
    let chain_ok = strictly_increasing(&means[..chain_len]);
    let symmetry_ok = mirror.map(|total| {
        let certs: Vec<_> = graphs.iter().map(canonical_cert).collect();
        // member s (1-based) mirrors member total - s
        (1..total).all(|s| certs[s - 1] == certs[total - s - 1])
    });
    let closed_form_ok = engine
        .iter()
        .zip(&closed)
        .all(|(r, (n, w))| r.count == *n && r.total == *w);
    let members = graphs
        .iter()
        .zip(engine)
        .zip(closed)
        .enumerate()
        .map(|(i, ((g, engine), (count_closed, total_closed)))| Member {
            s: i + 1,
            graph: EdgeList::from(g),
            engine,
            count_closed,
            total_closed,
        })
        .collect();
    FamilyChain {
        kind,
        members,
        means,
        chain_ok,
        symmetry_ok,
        closed_form_ok,
    }
}

/// Glues vertex `v` of `H` to the `s`-th vertex of `P_n`, `s = 1..n`.
///
/// Checks `M_{G_i} < M_{G_j}` for `i < j <= (n+1)/2`, `G_s ≅ G_{n-s+1}`, and
///
/// ```text
/// N_{G_s} = C(n+1,2) + N_H - N_{H,v} + s(n-s+1)(N_{H,v} - 1)
/// W_{G_s} = C(n+2,3) + W_H - W_{H,v} + s(n-s+1)(n+1)/2 · (N_{H,v} - 1)
///           + s(n-s+1)(W_{H,v} - N_{H,v})
/// ```
pub fn family_vertex_gluing(h: &Graph, v: usize, n: usize) -> Result<FamilyChain> {
    require_host(h, 2)?;
    h.check_vertex(v)?;
    if n < 3 {
        return Err(hypothesis(format!("path order n must be >= 3, got {n}")));
    }
    let p = path(n)?;
    let (nh, wh) = totals(h);
    let hv = local(h, v);
    let one = BigUint::from(1u8);
    let mut graphs = Vec::with_capacity(n);
    let mut closed = Vec::with_capacity(n);
    for s in 1..=n {
        graphs.push(glue_at_vertex(h, v, &p, s - 1)?);
        let k = big(s * (n - s + 1));
        let count = binomial(n as u64 + 1, 2) + &nh - &hv.count + &k * (&hv.count - &one);
        // s(n-s+1)(n+1) is always even
        let half = big(s * (n - s + 1) * (n + 1) / 2);
        let total = binomial(n as u64 + 2, 3) + &wh - &hv.total
            + half * (&hv.count - &one)
            + &k * (&hv.total - &hv.count);
        closed.push((count, total));
    }
    Ok(finish(
        FamilyKind::VertexGluing,
        graphs,
        closed,
        n.div_ceil(2),
        Some(n + 1),
    ))
}

/// Attaches `P_s` at `u` and `P_{n-s}` at `v` by a leaf, `s = 1..n-1`, for
/// adjacent non-cut vertices `u, v` of `H`.
///
/// Checks the chain for `s <= n/2`, `G_s ≅ G_{n-s}`, and with `F = H - v`:
///
/// ```text
/// N = N_{F,u}(s(n-s)+n) + N_{F-u} + C(s,2) + C(n-s,2)
/// W = W_{F,u}(s(n-s)+n) + N_{F,u}(s(n-s) + C(s,2)(n-s+1) + (s+1)C(n-s,2))
///     + W_{F-u} + C(s+1,3) + C(n-s+1,3)
/// ```
pub fn family_edge_gluing(h: &Graph, u: usize, v: usize, n: usize) -> Result<FamilyChain> {
    require_host(h, 3)?;
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    if !h.has_edge(u, v) {
        return Err(hypothesis(format!("{u} and {v} are not adjacent")));
    }
    let bct = require_block_graph(h)?;
    if bct.is_cut_vertex(u) || bct.is_cut_vertex(v) {
        return Err(hypothesis("u and v must not be cut vertices"));
    }
    if n < 4 {
        return Err(hypothesis(format!("n must be >= 4, got {n}")));
    }
    let f = h.remove_vertex(v);
    let fu = u - usize::from(u > v);
    let f_local = local(&f, fu);
    let (nfu_rest, wfu_rest) = totals(&f.remove_vertex(fu));
    let mut graphs = Vec::with_capacity(n - 1);
    let mut closed = Vec::with_capacity(n - 1);
    for s in 1..n {
        let (g, _) = attach_path(h, u, s - 1)?;
        let (g, _) = attach_path(&g, v, n - s - 1)?;
        graphs.push(g);
        let (s64, t64) = (s as u64, (n - s) as u64);
        let mult = big(s * (n - s) + n);
        let count = &f_local.count * &mult + &nfu_rest + binomial(s64, 2) + binomial(t64, 2);
        let inner =
            big(s * (n - s)) + binomial(s64, 2) * big(n - s + 1) + big(s + 1) * binomial(t64, 2);
        let total = &f_local.total * &mult
            + &f_local.count * inner
            + &wfu_rest
            + binomial(s64 + 1, 3)
            + binomial(t64 + 1, 3);
        closed.push((count, total));
    }
    Ok(finish(
        FamilyKind::EdgeGluing,
        graphs,
        closed,
        n / 2,
        Some(n),
    ))
}

/// Identifies `u` with a clique vertex of the broom `F_{s,n-s}`, `s = 1..n-1`.
///
/// Checks the full chain and
///
/// ```text
/// N = 2^(s-1)(n-s+1)(N_{H,u}+1) + N_{H-u} + C(n-s,2) - 1
/// W = 2^(s-2)(n-s+1)[(n-1)(N_{H,u}+1) + 2W_{H,u}] + W_{H-u} + C(n-s+1,3)
/// ```
pub fn family_stretching(h: &Graph, u: usize, n: usize) -> Result<FamilyChain> {
    require_host(h, 2)?;
    h.check_vertex(u)?;
    if n < 3 {
        return Err(hypothesis(format!("broom order n must be >= 3, got {n}")));
    }
    let hu = local(h, u);
    let (n_rest, w_rest) = totals(&h.remove_vertex(u));
    let one = BigUint::from(1u8);
    let mut graphs = Vec::with_capacity(n - 1);
    let mut closed = Vec::with_capacity(n - 1);
    for s in 1..n {
        graphs.push(glue_at_vertex(h, u, &broom(s, n - s)?, 0)?);
        let t = (n - s) as u64;
        let count =
            (&one << (s - 1)) * big(n - s + 1) * (&hu.count + &one) + &n_rest + binomial(t, 2)
                - &one;
        // 2^(s-2) is 1/2 at s = 1, so the bracket is scaled by 2^(s-1) and halved
        let bracket = big(n - 1) * (&hu.count + &one) + big(2) * &hu.total;
        let doubled = (&one << (s - 1)) * big(n - s + 1) * bracket;
        let total = doubled / big(2) + &w_rest + binomial(t + 1, 3);
        closed.push((count, total));
    }
    Ok(finish(FamilyKind::Stretching, graphs, closed, n - 1, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn vertex_gluing_k2() {
        let c = family_vertex_gluing(&complete(2).unwrap(), 0, 3).unwrap();
        assert_eq!(c.members.len(), 3);
        assert!(c.graphs()[0].is_path());
        assert_eq!(c.members[0].count_closed, BigUint::from(10u8));
        assert!(c.means[0] < c.means[1]);
        assert!(c.all_ok(), "{c:?}");
    }

    #[test]
    fn vertex_gluing_k3() {
        let c = family_vertex_gluing(&complete(3).unwrap(), 1, 5).unwrap();
        assert!(c.all_ok());
        assert!(c.means[0] < c.means[1] && c.means[1] < c.means[2]);
    }

    #[test]
    fn edge_gluing_k3() {
        let c = family_edge_gluing(&complete(3).unwrap(), 0, 1, 4).unwrap();
        assert_eq!(c.members[1].engine.count, BigUint::from(19u8));
        assert_eq!(c.members[1].count_closed, BigUint::from(19u8));
        assert!(c.graphs().iter().all(|g| g.order() == 5));
        assert!(c.all_ok(), "{c:?}");
        let k4 = family_edge_gluing(&complete(4).unwrap(), 2, 3, 6).unwrap();
        assert!(k4.all_ok());
    }

    #[test]
    fn edge_gluing_hypotheses() {
        let p3 = path(3).unwrap();
        assert!(family_edge_gluing(&p3, 0, 1, 4).is_err());
        assert!(family_edge_gluing(&complete(3).unwrap(), 0, 1, 3).is_err());
    }

    #[test]
    fn stretching_examples() {
        let c = family_stretching(&complete(2).unwrap(), 0, 3).unwrap();
        assert!(c.graphs()[0].is_path());
        assert_eq!(c.members[0].count_closed, BigUint::from(10u8));
        assert!(c.all_ok(), "{c:?}");
        let p = family_stretching(&path(3).unwrap(), 0, 4).unwrap();
        assert!(p.all_ok());
        assert_eq!(p.symmetry_ok, None);
    }
}
