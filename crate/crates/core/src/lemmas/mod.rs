//! Executable checks of the inequalities, identities, gluing families and
//! the constructive minimality argument.

pub mod bounds;
pub mod families;
pub mod improve;
pub mod verdict;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;

pub use bounds::{
    sweep_graph, verify_adjacent_count, verify_block_star, verify_count_bounds,
    verify_count_vs_weight, verify_local_global, verify_local_sum, verify_local_weight, verify_mu,
    verify_noncut_count, verify_partition, verify_weight_bound,
};
pub use families::{
    family_edge_gluing, family_stretching, family_vertex_gluing, FamilyChain, FamilyKind, Member,
};
pub use improve::{improve_step, improve_to_path, Improvement};
pub use verdict::{Statement, Verdict, Witness};

/// Tallies for one statement across a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub skipped: usize,
    pub failed: usize,
    pub equalities: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub graphs: usize,
    pub tallies: BTreeMap<Statement, Tally>,
    pub verdicts: Vec<Verdict>,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.is_failure())
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Runs [`sweep_graph`] over `graphs` in parallel; verdicts keep the input order.
pub fn sweep(graphs: &[Graph], only: Option<&[Statement]>) -> SweepReport {
    let verdicts: Vec<Verdict> = graphs
        .par_iter()
        .map(|g| sweep_graph(g, only))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut tallies: BTreeMap<Statement, Tally> = BTreeMap::new();
    for v in &verdicts {
        let t = tallies.entry(v.statement).or_default();
        if v.skipped.is_some() {
            t.skipped += 1;
            continue;
        }
        t.checked += 1;
        t.failed += usize::from(!v.holds);
        t.equalities += usize::from(v.equality);
    }
    SweepReport {
        graphs: graphs.len(),
        tallies,
        verdicts,
    }
}
