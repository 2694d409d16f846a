//! Per-graph inequalities and identities on local and global CIS counts.

use num_bigint::BigUint;

use crate::blocks::{blocks_in, cut_vertices_of};
use crate::cis::brute::phi_star_brute;
use crate::cis::fast::local_in;
use crate::cis::stats::{phi, phi_local, CisReport};
use crate::graph::{Graph, VertexSet};
use crate::lemmas::verdict::{Statement, Verdict, Witness};
use crate::rational::Rational;

fn int(v: &BigUint) -> Rational {
    Rational::ratio(v, &BigUint::from(1u8))
}

fn local(g: &Graph, within: VertexSet, v: usize) -> CisReport {
    CisReport::from_poly(&local_in(g, within, v)).expect("v lies in a subgraph")
}

/// Index of `w` in `g - v`.
fn shifted(w: usize, v: usize) -> usize {
    w - usize::from(w > v)
}

/// Structure shared by the block-graph checks.
struct Shape {
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
    block_graph: bool,
}

fn shape(g: &Graph) -> Option<Shape> {
    if g.order() == 0 || !g.is_connected() {
        return None;
    }
    let blocks = blocks_in(g, g.vertices());
    let cuts = cut_vertices_of(&blocks);
    let block_graph = blocks.iter().all(|&b| g.is_clique(b));
    Some(Shape {
        blocks,
        cuts,
        block_graph,
    })
}

fn disconnected(statement: Statement, g: &Graph) -> Vec<Verdict> {
    vec![Verdict::skip(
        statement,
        Witness::new(g, vec![]),
        "graph is empty or disconnected",
    )]
}

/// `W_{G,v} <= (N_{G,v}^2 + N_{G,v}) / 2` at every vertex.
pub fn verify_local_weight(g: &Graph) -> Vec<Verdict> {
    if shape(g).is_none() {
        return disconnected(Statement::LocalWeight, g);
    }
    let path = g.is_path();
    (0..g.order())
        .map(|v| {
            let r = local(g, g.vertices(), v);
            let n = int(&r.count);
            let rhs = (&n * &n + n) / Rational::from(2);
            Verdict::at_most(
                Statement::LocalWeight,
                Witness::new(g, vec![v]),
                int(&r.total),
                rhs,
                Some(path && g.degree(v) <= 1),
            )
        })
        .collect()
}

/// `N_{G-v,u} <= N_{G,v} - 1` for every ordered adjacent pair `(u, v)`.
pub fn verify_adjacent_count(g: &Graph) -> Vec<Verdict> {
    if shape(g).is_none() {
        return disconnected(Statement::AdjacentCount, g);
    }
    let mut out = Vec::new();
    for v in 0..g.order() {
        let n_v = local(g, g.vertices(), v).count;
        let minus = g.remove_vertex(v);
        for u in g.neighbors(v) {
            let lhs = phi_local(&minus, shifted(u, v))
                .expect("u is a vertex of G - v")
                .eval_one();
            out.push(Verdict::at_most(
                Statement::AdjacentCount,
                Witness::new(g, vec![u, v]),
                int(&lhs),
                int(&n_v) - Rational::one(),
                Some(g.degree(v) == 1),
            ));
        }
    }
    if out.is_empty() {
        out.push(Verdict::skip(
            Statement::AdjacentCount,
            Witness::new(g, vec![]),
            "no adjacent pair",
        ));
    }
    out
}

/// `N_{G,v} <= N_{G-v} + 1` at every non-cut vertex of a block graph.
pub fn verify_noncut_count(g: &Graph) -> Vec<Verdict> {
    let Some(s) = shape(g) else {
        return disconnected(Statement::NoncutCount, g);
    };
    if !s.block_graph {
        return vec![Verdict::skip(
            Statement::NoncutCount,
            Witness::new(g, vec![]),
            "not a block graph",
        )];
    }
    let complete = g.is_complete();
    g.vertices()
        .difference(s.cuts)
        .iter()
        .map(|v| {
            let n_v = local(g, g.vertices(), v).count;
            let rest = phi(&g.remove_vertex(v)).eval_one();
            Verdict::at_most(
                Statement::NoncutCount,
                Witness::new(g, vec![v]),
                int(&n_v),
                int(&rest) + Rational::one(),
                Some(complete),
            )
        })
        .collect()
}

/// `N_G <= W_{G,u}` at every vertex of a graph of order at least two.
pub fn verify_count_vs_weight(g: &Graph) -> Vec<Verdict> {
    if shape(g).is_none() {
        return disconnected(Statement::CountVsWeight, g);
    }
    if g.order() < 2 {
        return vec![Verdict::skip(
            Statement::CountVsWeight,
            Witness::new(g, vec![]),
            "order < 2",
        )];
    }
    let total = int(&phi(g).eval_one());
    (0..g.order())
        .map(|u| {
            let w = local(g, g.vertices(), u).total;
            Verdict::at_most(
                Statement::CountVsWeight,
                Witness::new(g, vec![u]),
                total.clone(),
                int(&w),
                None,
            )
        })
        .collect()
}

/// The four count bounds over all applicable vertices and pairs.
pub fn verify_count_bounds(g: &Graph) -> Vec<Verdict> {
    let mut out = verify_local_weight(g);
    out.extend(verify_adjacent_count(g));
    out.extend(verify_noncut_count(g));
    out.extend(verify_count_vs_weight(g));
    out
}

#[allow(clippy::result_large_err)]
fn vertex_hypotheses(statement: Statement, g: &Graph, v: usize) -> Result<Shape, Verdict> {
    let witness = || Witness::new(g, vec![v]);
    if v >= g.order() {
        return Err(Verdict::skip(
            statement,
            Witness::new(g, vec![]),
            format!("no vertex {v}"),
        ));
    }
    let Some(s) = shape(g) else {
        return Err(Verdict::skip(statement, witness(), "graph is disconnected"));
    };
    if !s.block_graph {
        return Err(Verdict::skip(statement, witness(), "not a block graph"));
    }
    if g.order() < 2 {
        return Err(Verdict::skip(statement, witness(), "order < 2"));
    }
    Ok(s)
}

/// `W_{G-v} <= N_{G,v} · N_{G-v} / 2`.
pub fn verify_weight_bound(g: &Graph, v: usize) -> Verdict {
    if let Err(skip) = vertex_hypotheses(Statement::WeightBound, g, v) {
        return skip;
    }
    let n_v = local(g, g.vertices(), v).count;
    let rest = phi(&g.remove_vertex(v));
    let rhs = int(&(n_v * rest.eval_one())) / Rational::from(2);
    Verdict::at_most(
        Statement::WeightBound,
        Witness::new(g, vec![v]),
        int(&rest.derivative_at_one()),
        rhs,
        None,
    )
}

/// `M_{G-v} <= μ_{G,v}` at a non-cut vertex; equality exactly for cliques.
pub fn verify_mu(g: &Graph, v: usize) -> Verdict {
    let s = match vertex_hypotheses(Statement::Mu, g, v) {
        Ok(s) => s,
        Err(skip) => return skip,
    };
    if s.cuts.contains(v) {
        return Verdict::skip(Statement::Mu, Witness::new(g, vec![v]), "v is a cut vertex");
    }
    let r = local(g, g.vertices(), v);
    let one = BigUint::from(1u8);
    let mu = Rational::ratio(&(&r.total - &r.count), &(&r.count - &one));
    let rest = phi(&g.remove_vertex(v)).mean().expect("G - v is nonempty");
    Verdict::at_most(
        Statement::Mu,
        Witness::new(g, vec![v]),
        rest,
        mu,
        Some(g.is_complete()),
    )
}

/// `M_G <= M_{G,v}` at every vertex and `M_G <= M*_{G,B}` at every block.
pub fn verify_local_global(g: &Graph) -> Vec<Verdict> {
    let Some(s) = shape(g) else {
        let mut out = disconnected(Statement::LocalGlobalVertex, g);
        out.extend(disconnected(Statement::LocalGlobalBlock, g));
        return out;
    };
    if !s.block_graph {
        return [Statement::LocalGlobalVertex, Statement::LocalGlobalBlock]
            .into_iter()
            .map(|st| Verdict::skip(st, Witness::new(g, vec![]), "not a block graph"))
            .collect();
    }
    let m = phi(g).mean().expect("nonempty graph");
    let mut out: Vec<Verdict> = (0..g.order())
        .map(|v| {
            Verdict::at_most(
                Statement::LocalGlobalVertex,
                Witness::new(g, vec![v]),
                m.clone(),
                local(g, g.vertices(), v).mean,
                None,
            )
        })
        .collect();
    for &b in &s.blocks {
        let star = phi_star_brute(g, &b.to_vec())
            .expect("block vertices are in range")
            .mean()
            .expect("blocks are nonempty");
        out.push(Verdict::at_most(
            Statement::LocalGlobalBlock,
            Witness::new(g, b.to_vec()),
            m.clone(),
            star,
            None,
        ));
    }
    out
}

/// At every cut vertex `v` with branches `G_1..G_k`:
/// `M_{G,v} = Σ M_{G_i,v} - (k-1)` and `M_{G,v} >= M_{G_i,v}`.
pub fn verify_local_sum(g: &Graph) -> Vec<Verdict> {
    let Some(s) = shape(g) else {
        return disconnected(Statement::LocalSum, g);
    };
    if !s.block_graph {
        return vec![Verdict::skip(
            Statement::LocalSum,
            Witness::new(g, vec![]),
            "not a block graph",
        )];
    }
    if s.cuts.is_empty() {
        return vec![Verdict::skip(
            Statement::LocalSum,
            Witness::new(g, vec![]),
            "no cut vertex",
        )];
    }
    s.cuts
        .iter()
        .map(|v| {
            let whole = local(g, g.vertices(), v).mean;
            let branches = g.components_in(g.vertices().without(v));
            let k = branches.len() as i64;
            let parts: Vec<Rational> = branches
                .iter()
                .map(|&c| local(g, c.with(v), v).mean)
                .collect();
            let dominates = parts.iter().all(|p| *p <= whole);
            let rhs = parts.into_iter().sum::<Rational>() - Rational::from(k - 1);
            Verdict::identity(
                Statement::LocalSum,
                Witness::new(g, vec![v]),
                whole,
                rhs,
                dominates,
            )
        })
        .collect()
}

/// At every block `U = {u_1..u_b}`, with `G_i` the component of `G - E(U)`
/// containing `u_i`:
/// `M*_{G,U} = (N*+1)/N* · Σ W_{G_i,u_i} / (N_{G_i,u_i} + 1)`.
pub fn verify_block_star(g: &Graph) -> Vec<Verdict> {
    let Some(s) = shape(g) else {
        return disconnected(Statement::BlockStar, g);
    };
    if !s.block_graph {
        return vec![Verdict::skip(
            Statement::BlockStar,
            Witness::new(g, vec![]),
            "not a block graph",
        )];
    }
    s.blocks
        .iter()
        .map(|&b| {
            let star = CisReport::from_poly(&phi_star_brute(g, &b.to_vec()).expect("in range"))
                .expect("blocks are nonempty");
            let n_star = int(&star.count);
            let sum: Rational = b
                .iter()
                .map(|u| {
                    let side = g.component_of(u, g.vertices().difference(b).with(u));
                    let r = local(g, side, u);
                    int(&r.total) / (int(&r.count) + Rational::one())
                })
                .sum();
            let rhs = (&n_star + &Rational::one()) / n_star * sum;
            Verdict::identity(
                Statement::BlockStar,
                Witness::new(g, b.to_vec()),
                star.mean,
                rhs,
                true,
            )
        })
        .collect()
}

/// `Φ_G = Φ_{G,v} + Φ_{G-v}` at every vertex, compared as polynomials;
/// `lhs`/`rhs` carry the counts at `x = 1`.
pub fn verify_partition(g: &Graph) -> Vec<Verdict> {
    if g.order() == 0 {
        return disconnected(Statement::Partition, g);
    }
    let whole = phi(g);
    (0..g.order())
        .map(|v| {
            let split = phi_local(g, v).expect("in range") + phi(&g.remove_vertex(v));
            let holds = split == whole;
            Verdict::identity(
                Statement::Partition,
                Witness::new(g, vec![v]),
                int(&whole.eval_one()),
                int(&split.eval_one()),
                holds,
            )
        })
        .collect()
}

/// Every per-graph statement, or only those in `only`.
pub fn sweep_graph(g: &Graph, only: Option<&[Statement]>) -> Vec<Verdict> {
    let wanted = |st: Statement| only.is_none_or(|o| o.contains(&st));
    let mut out = Vec::new();
    for st in Statement::SWEEP {
        if !wanted(st) {
            continue;
        }
        match st {
            Statement::LocalSum => out.extend(verify_local_sum(g)),
            Statement::BlockStar => out.extend(verify_block_star(g)),
            Statement::Partition => out.extend(verify_partition(g)),
            Statement::LocalWeight => out.extend(verify_local_weight(g)),
            Statement::AdjacentCount => out.extend(verify_adjacent_count(g)),
            Statement::NoncutCount => out.extend(verify_noncut_count(g)),
            Statement::CountVsWeight => out.extend(verify_count_vs_weight(g)),
            Statement::WeightBound => out.extend((0..g.order()).map(|v| verify_weight_bound(g, v))),
            Statement::Mu => out.extend((0..g.order()).map(|v| verify_mu(g, v))),
            Statement::LocalGlobalVertex => out.extend(
                verify_local_global(g)
                    .into_iter()
                    .filter(|v| v.statement == Statement::LocalGlobalVertex),
            ),
            Statement::LocalGlobalBlock => out.extend(
                verify_local_global(g)
                    .into_iter()
                    .filter(|v| v.statement == Statement::LocalGlobalBlock),
            ),
            _ => unreachable!("not a per-graph statement"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{broom, complete, cycle, path};

    fn k3_pendant() -> Graph {
        Graph::build(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn local_weight_equality_at_path_leaf() {
        let vs = verify_local_weight(&path(4).unwrap());
        assert_eq!(vs[0].lhs, Rational::from(10));
        assert!(vs[0].equality && vs[0].holds);
        assert!(!vs[1].equality && vs[1].holds);
        assert!(verify_local_weight(&cycle(5).unwrap())
            .iter()
            .all(|v| v.holds));
    }

    #[test]
    fn noncut_count_on_triangle() {
        let vs = verify_noncut_count(&complete(3).unwrap());
        assert_eq!(vs.len(), 3);
        assert!(vs
            .iter()
            .all(|v| v.holds && v.equality && v.lhs == Rational::from(4)));
        assert!(verify_noncut_count(&cycle(4).unwrap())[0].skipped.is_some());
    }

    #[test]
    fn count_vs_weight_on_p3() {
        let vs = verify_count_vs_weight(&path(3).unwrap());
        assert_eq!(
            (vs[1].lhs.clone(), vs[1].rhs.clone()),
            (Rational::from(6), Rational::from(8))
        );
        assert!(verify_count_vs_weight(&complete(1).unwrap())[0]
            .skipped
            .is_some());
    }

    #[test]
    fn weight_bound_examples() {
        let k2 = verify_weight_bound(&complete(2).unwrap(), 0);
        assert!(k2.holds && k2.equality);
        let p3 = verify_weight_bound(&path(3).unwrap(), 1);
        assert_eq!((p3.lhs, p3.rhs), (Rational::from(2), Rational::from(4)));
        let kp = verify_weight_bound(&k3_pendant(), 3);
        assert_eq!((kp.lhs, kp.rhs), (Rational::from(12), Rational::new(35, 2)));
    }

    #[test]
    fn mu_examples() {
        for n in 2..=4 {
            let v = verify_mu(&complete(n).unwrap(), 0);
            assert!(v.holds && v.equality, "K_{n}");
        }
        let p3 = verify_mu(&path(3).unwrap(), 0);
        assert_eq!(
            (p3.lhs.clone(), p3.rhs.clone()),
            (Rational::new(4, 3), Rational::new(3, 2))
        );
        assert!(p3.holds && !p3.equality);
        assert!(verify_mu(&path(3).unwrap(), 1).skipped.is_some());
        let b = broom(3, 2).unwrap();
        let tail = verify_mu(&b, 4);
        assert!(tail.holds && !tail.equality);
    }

    #[test]
    fn identities_on_a_mixed_graph() {
        let g = Graph::build(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (3, 5),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap();
        for v in sweep_graph(&g, None) {
            assert!(!v.is_failure(), "{v:?}");
        }
    }

    #[test]
    fn local_global_examples() {
        let vs = verify_local_global(&path(3).unwrap());
        assert_eq!(vs[0].lhs, Rational::new(5, 3));
        assert_eq!(vs[0].rhs, Rational::from(2));
        assert!(vs.iter().all(|v| v.holds));
    }

    #[test]
    fn filter_selects_statements() {
        let vs = sweep_graph(&path(4).unwrap(), Some(&[Statement::Mu]));
        assert!(vs.iter().all(|v| v.statement == Statement::Mu));
        assert_eq!(vs.len(), 4);
    }
}
