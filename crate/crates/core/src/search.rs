//! Isomorph-free generation and extremal scans of mean CIS order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cert::{canonical_cert, CanonicalCert};
use crate::cis::stats::mean;
use crate::error::{Error, Result};
use crate::graph::{add_vertex, attach_clique, complete, path, Graph, VertexSet};
use crate::lemmas::{Statement, Verdict, Witness};
use crate::rational::Rational;

/// Largest order the block-graph generator accepts.
pub const BLOCK_HARD_CAP: usize = 12;
/// Largest order the connected-graph generator accepts.
pub const CONNECTED_HARD_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Block,
    Connected,
}

impl Family {
    pub fn hard_cap(self) -> usize {
        match self {
            Family::Block => BLOCK_HARD_CAP,
            Family::Connected => CONNECTED_HARD_CAP,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Block => "block",
            Family::Connected => "connected",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "block" => Ok(Family::Block),
            "connected" => Ok(Family::Connected),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

/// Per-order catalogues of canonical representatives, built order by order.
///
/// Every class of order `n` is kept as its canonical graph, sorted by
/// certificate, so output is independent of thread scheduling.
#[derive(Debug, Clone)]
pub struct Generator {
    family: Family,
    /// `levels[i]` holds order `i + 1`.
    levels: Vec<Option<Vec<Graph>>>,
}

impl Generator {
    pub fn new(family: Family) -> Self {
        Generator {
            family,
            levels: Vec::new(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Seeds order `n` from stored certificates (for example a cache file).
    pub fn insert_level(&mut self, n: usize, certs: &[CanonicalCert]) -> Result<()> {
        self.check(n)?;
        if let Some(bad) = certs.iter().find(|c| c.order() != n) {
            return Err(Error::BadCertificate(format!("{bad} is not of order {n}")));
        }
        let mut graphs: Vec<(CanonicalCert, Graph)> =
            certs.iter().map(|c| (c.clone(), c.to_graph())).collect();
        graphs.sort_by(|a, b| a.0.cmp(&b.0));
        graphs.dedup_by(|a, b| a.0 == b.0);
        self.slot(n)
            .replace(graphs.into_iter().map(|(_, g)| g).collect());
        Ok(())
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidParameter("order must be at least 1".into()));
        }
        if n > self.family.hard_cap() {
            return Err(Error::OverCap {
                n,
                cap: self.family.hard_cap(),
            });
        }
        Ok(())
    }

    fn slot(&mut self, n: usize) -> &mut Option<Vec<Graph>> {
        if self.levels.len() < n {
            self.levels.resize(n, None);
        }
        &mut self.levels[n - 1]
    }

    fn known(&self, n: usize) -> &[Graph] {
        self.levels[n - 1].as_deref().expect("level computed")
    }

    /// One representative per isomorphism class of order `n`.
    pub fn level(&mut self, n: usize) -> Result<&[Graph]> {
        self.check(n)?;
        for m in 1..=n {
            if self.slot(m).is_none() {
                let built = match self.family {
                    Family::Block => self.block_level(m),
                    Family::Connected => self.connected_level(m),
                };
                *self.slot(m) = Some(built);
            }
        }
        Ok(self.known(n))
    }

    /// `K_m`, plus `K_{j+1}` attached at each vertex of each class of order `m - j`.
    fn block_level(&self, m: usize) -> Vec<Graph> {
        let mut seeds: Vec<(usize, &Graph)> = Vec::new();
        for j in 1..m {
            seeds.extend(self.known(m - j).iter().map(|g| (j, g)));
        }
        let found: Vec<Vec<CanonicalCert>> = seeds
            .par_iter()
            .map(|&(j, g)| {
                (0..g.order())
                    .map(|v| canonical_cert(&attach_clique(g, v, j).expect("below the cap")))
                    .collect()
            })
            .collect();
        let mut certs: BTreeSet<CanonicalCert> = found.into_iter().flatten().collect();
        certs.insert(canonical_cert(&complete(m).expect("m >= 1")));
        certs.into_iter().map(|c| c.to_graph()).collect()
    }

    /// A new vertex joined to each nonempty subset of each class of order `m - 1`.
    fn connected_level(&self, m: usize) -> Vec<Graph> {
        if m == 1 {
            return vec![complete(1).expect("K_1")];
        }
        let found: Vec<Vec<CanonicalCert>> = self
            .known(m - 1)
            .par_iter()
            .map(|g| {
                (1..1u64 << g.order())
                    .map(|s| canonical_cert(&add_vertex(g, VertexSet(s)).expect("below the cap")))
                    .collect()
            })
            .collect();
        let certs: BTreeSet<CanonicalCert> = found.into_iter().flatten().collect();
        certs.into_iter().map(|c| c.to_graph()).collect()
    }

    pub fn scan(&mut self, n: usize) -> Result<SearchResult> {
        let start = Instant::now();
        let family = self.family;
        let graphs = self.level(n)?;
        if graphs.is_empty() {
            return Err(Error::InvalidParameter(format!("no graphs of order {n}")));
        }
        let means: Vec<Rational> = graphs
            .par_iter()
            .map(|g| mean(g).expect("generated graphs are connected").mean)
            .collect();
        let min = means.iter().min().expect("nonempty").clone();
        let max = means.iter().max().expect("nonempty").clone();
        let attaining = |target: &Rational| -> Vec<CanonicalCert> {
            graphs
                .iter()
                .zip(&means)
                .filter(|(_, m)| *m == target)
                .map(|(g, _)| canonical_cert(g))
                .collect()
        };
        Ok(SearchResult {
            n,
            family,
            family_count: graphs.len(),
            argmin: attaining(&min),
            argmax: attaining(&max),
            min_m: min,
            max_m: max,
            elapsed: start.elapsed(),
        })
    }
}

/// Exact extremes of `M` over one order of a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub family: Family,
    pub family_count: usize,
    pub min_m: Rational,
    pub max_m: Rational,
    /// Sorted certificates of every graph attaining `min_m`.
    pub argmin: Vec<CanonicalCert>,
    pub argmax: Vec<CanonicalCert>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Connected block graphs of order `n`, one per isomorphism class.
pub fn gen_block_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(Generator::new(Family::Block).level(n)?.to_vec())
}

/// Connected graphs of order `n <= 8`, one per isomorphism class.
pub fn gen_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(Generator::new(Family::Connected).level(n)?.to_vec())
}

pub fn extremal_scan(family: Family, n: usize) -> Result<SearchResult> {
    Generator::new(family).scan(n)
}

/// The path is the unique minimiser, with `M = (n+2)/3`.
pub fn min_theorem_verdict(result: &SearchResult) -> Verdict {
    let n = result.n;
    let p = path(n).expect("n >= 1");
    let expected = Rational::new(n as i64 + 2, 3);
    let holds = result.argmin == [canonical_cert(&p)] && result.min_m == expected;
    Verdict::flag(
        Statement::MinPath,
        Witness::new(&result.argmin[0].to_graph(), vec![]),
        holds,
        result.min_m.clone(),
        expected,
    )
}

/// Maximisers are `K_n` for `n <= 4` and caterpillars otherwise.
pub fn max_conjecture_verdict(result: &SearchResult) -> Verdict {
    let n = result.n;
    let witness = Witness::new(&result.argmax[0].to_graph(), vec![]);
    if n < 3 {
        return Verdict::skip(Statement::MaxCaterpillar, witness, "order < 3");
    }
    let holds = if n <= 4 {
        result.argmax == [canonical_cert(&complete(n).expect("n >= 1"))]
    } else {
        result.argmax.iter().all(|c| c.to_graph().is_caterpillar())
    };
    Verdict::flag(
        Statement::MaxCaterpillar,
        witness,
        holds,
        result.max_m.clone(),
        result.max_m.clone(),
    )
}

pub fn check_min_theorem(n: usize) -> Result<Verdict> {
    Ok(min_theorem_verdict(&extremal_scan(Family::Block, n)?))
}

pub fn check_max_conjecture(n: usize) -> Result<Verdict> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "order must be >= 3, got {n}"
        )));
    }
    Ok(max_conjecture_verdict(&extremal_scan(Family::Block, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::is_block_graph;

    #[test]
    fn small_block_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| gen_block_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 22]);
        for g in gen_block_graphs(6).unwrap() {
            assert!(is_block_graph(&g).unwrap());
        }
    }

    #[test]
    fn small_connected_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| gen_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert!(gen_connected_graphs(9).is_err());
        assert!(gen_block_graphs(0).is_err());
    }

    #[test]
    fn scan_order_three() {
        let r = extremal_scan(Family::Block, 3).unwrap();
        assert_eq!(r.min_m, Rational::new(5, 3));
        assert_eq!(r.max_m, Rational::new(12, 7));
        assert_eq!(r.argmin, vec![canonical_cert(&path(3).unwrap())]);
        assert_eq!(r.argmax, vec![canonical_cert(&complete(3).unwrap())]);
        let c = extremal_scan(Family::Connected, 5).unwrap();
        assert_eq!(c.min_m, Rational::new(7, 3));
        assert_eq!(c.argmin.len(), 1);
    }

    #[test]
    fn theorem_checks() {
        for n in [1, 3, 7] {
            assert!(check_min_theorem(n).unwrap().holds, "n={n}");
        }
        assert_eq!(check_min_theorem(7).unwrap().rhs, Rational::from(3));
        assert!(check_max_conjecture(4).unwrap().holds);
        assert!(check_max_conjecture(5).unwrap().holds);
        assert!(check_max_conjecture(2).is_err());
    }

    #[test]
    fn seeded_levels_are_used() {
        let mut g = Generator::new(Family::Block);
        let certs: Vec<CanonicalCert> = gen_block_graphs(4)
            .unwrap()
            .iter()
            .map(canonical_cert)
            .collect();
        g.insert_level(4, &certs).unwrap();
        assert_eq!(g.level(5).unwrap().len(), 9);
        assert!(g.insert_level(3, &certs).is_err());
    }
}
