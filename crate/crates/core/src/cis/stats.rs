use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::blocks::{blocks_in, require_block_graph};
use crate::cis::{brute, fast};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::rational::Rational;

/// Count `N`, total order `W` and mean `M = W / N` of a family of
/// connected induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CisReport {
    #[serde(rename = "N", serialize_with = "decimal")]
    pub count: BigUint,
    #[serde(rename = "W", serialize_with = "decimal")]
    pub total: BigUint,
    #[serde(rename = "M")]
    pub mean: Rational,
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl CisReport {
    /// `None` when the polynomial counts nothing.
    pub fn from_poly(p: &IntPolynomial) -> Option<Self> {
        let mean = p.mean()?;
        Some(CisReport {
            count: p.eval_one(),
            total: p.derivative_at_one(),
            mean,
        })
    }

    pub fn from_counts(count: BigUint, total: BigUint) -> Self {
        let mean = Rational::ratio(&total, &count);
        CisReport { count, total, mean }
    }
}

fn components_are_block_graphs(g: &Graph) -> bool {
    g.components()
        .into_iter()
        .all(|c| blocks_in(g, c).iter().all(|&b| g.is_clique(b)))
}

/// `Φ_G`, using the block recursion when every component is a block
/// graph and enumeration otherwise.
pub fn phi(g: &Graph) -> IntPolynomial {
    if components_are_block_graphs(g) {
        fast::global_in(g, g.vertices())
    } else {
        brute::phi_brute(g)
    }
}

/// `Φ_{G,v}` with the same dispatch as [`phi`]. Subgraphs containing `v`
/// live in its component, so only that component matters.
pub fn phi_local(g: &Graph, v: usize) -> Result<IntPolynomial> {
    g.check_vertex(v)?;
    let comp = g.component_of(v, g.vertices());
    if blocks_in(g, comp).iter().all(|&b| g.is_clique(b)) {
        Ok(fast::local_in(g, comp, v))
    } else {
        brute::phi_local_brute(g, v)
    }
}

/// `N_G`, `W_G`, `M_G` of a connected graph.
pub fn mean(g: &Graph) -> Result<CisReport> {
    g.require_connected()?;
    Ok(CisReport::from_poly(&phi(g)).expect("connected graphs have subgraphs"))
}

/// `N_{G,v}`, `W_{G,v}`, `M_{G,v}`.
pub fn local_mean(g: &Graph, v: usize) -> Result<CisReport> {
    g.require_connected()?;
    Ok(CisReport::from_poly(&phi_local(g, v)?).expect("v lies in a subgraph"))
}

/// `N*_{G,U}`, `W*_{G,U}`, `M*_{G,U}`: subgraphs meeting `U`.
pub fn mean_star(g: &Graph, u: &[usize]) -> Result<CisReport> {
    g.require_connected()?;
    if u.is_empty() {
        return Err(Error::InvalidParameter("U must be nonempty".into()));
    }
    Ok(CisReport::from_poly(&brute::phi_star_brute(g, u)?).expect("U is nonempty"))
}

/// `μ_{G,v} = (W_{G,v} - N_{G,v}) / (N_{G,v} - 1)`.
///
/// When `v` is not a cut vertex of a block graph this is the mean order of
/// the connected induced subgraphs of `G - v` meeting the neighbourhood of `v`.
pub fn mu(g: &Graph, v: usize) -> Result<Rational> {
    let local = local_mean(g, v)?;
    if local.count <= BigUint::one() {
        return Err(Error::InvalidParameter(format!(
            "mu undefined at vertex {v}: N_(G,v) = {}",
            local.count
        )));
    }
    let one = BigUint::one();
    Ok(Rational::ratio(
        &(&local.total - &local.count),
        &(&local.count - &one),
    ))
}

/// Local mean at every vertex of a connected block graph.
pub fn local_means(g: &Graph) -> Result<Vec<CisReport>> {
    require_block_graph(g)?;
    (0..g.order()).map(|v| local_mean(g, v)).collect()
}
