//! Reference CIS polynomials by direct enumeration. These work on any graph
//! and serve as the oracle for the block-graph recursions.

use crate::cis::enumerate::ConnectedSets;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::poly::IntPolynomial;

/// Histogram of `|S|` over connected sets `S` of `G[within]` accepted by `keep`.
pub(crate) fn count_where(
    g: &Graph,
    within: VertexSet,
    keep: impl Fn(VertexSet) -> bool,
) -> IntPolynomial {
    let mut hist = vec![0u64; within.len() + 1];
    for s in ConnectedSets::within(g, within) {
        if keep(s) {
            hist[s.len()] += 1;
        }
    }
    IntPolynomial::from_u64s(&hist)
}

/// `Φ_G`: all connected induced subgraphs by order.
pub fn phi_brute(g: &Graph) -> IntPolynomial {
    count_where(g, g.vertices(), |_| true)
}

/// `Φ_{G,v}`: connected induced subgraphs containing `v`.
pub fn phi_local_brute(g: &Graph, v: usize) -> Result<IntPolynomial> {
    g.check_vertex(v)?;
    Ok(count_where(g, g.vertices(), |s| s.contains(v)))
}

/// `Φ_{G,U}`: connected induced subgraphs containing every vertex of `U`.
pub fn phi_local_set_brute(g: &Graph, u: &[usize]) -> Result<IntPolynomial> {
    for &x in u {
        g.check_vertex(x)?;
    }
    let need = VertexSet::from_slice(u);
    Ok(count_where(g, g.vertices(), |s| need.is_subset(s)))
}

/// `Φ*_{G,U}`: connected induced subgraphs containing at least one vertex of `U`.
pub fn phi_star_brute(g: &Graph, u: &[usize]) -> Result<IntPolynomial> {
    for &x in u {
        g.check_vertex(x)?;
    }
    let any = VertexSet::from_slice(u);
    Ok(count_where(g, g.vertices(), |s| {
        !s.intersection(any).is_empty()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn small_polynomials() {
        assert_eq!(
            phi_brute(&path(3).unwrap()),
            IntPolynomial::from_u64s(&[0, 3, 2, 1])
        );
        assert_eq!(
            phi_brute(&complete(3).unwrap()),
            IntPolynomial::from_u64s(&[0, 3, 3, 1])
        );
        assert_eq!(
            phi_local_brute(&path(3).unwrap(), 1).unwrap(),
            IntPolynomial::from_u64s(&[0, 1, 2, 1])
        );
        let k2 = complete(2).unwrap();
        assert_eq!(
            phi_star_brute(&k2, &[0, 1]).unwrap().eval_one(),
            3u32.into()
        );
        assert_eq!(
            phi_local_set_brute(&path(3).unwrap(), &[0, 2]).unwrap(),
            IntPolynomial::monomial(3, 1u32)
        );
        assert!(phi_local_brute(&k2, 2).is_err());
    }
}
