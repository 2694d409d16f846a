use std::fmt;

use serde::Serialize;

use crate::cert::{canonical_cert, CanonicalCert};
use crate::graph::Graph;
use crate::rational::Rational;

/// The statements the lemma lab can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// `M_{G,v} = Σ M_{G_i,v} - (k-1)` at a cut vertex, and `M_{G,v} >= M_{G_i,v}`.
    LocalSum,
    /// `M*_{G,U} = (N*+1)/N* · Σ W_{G_i,u_i} / (N_{G_i,u_i}+1)` at a block `U`.
    BlockStar,
    /// `Φ_G = Φ_{G,v} + Φ_{G-v}`.
    Partition,
    /// `W_{G,v} <= (N_{G,v}^2 + N_{G,v}) / 2`; equality iff path at a leaf.
    LocalWeight,
    /// `N_{G-v,u} <= N_{G,v} - 1` for adjacent `u, v`; equality iff `v` is a leaf.
    AdjacentCount,
    /// `N_{G,v} <= N_{G-v} + 1` at a non-cut vertex; equality iff complete.
    NoncutCount,
    /// `N_G <= W_{G,u}`.
    CountVsWeight,
    /// `W_{G-v} <= N_{G,v} N_{G-v} / 2`.
    WeightBound,
    /// `M_{G-v} <= μ_{G,v}` at a non-cut vertex; equality iff complete.
    Mu,
    /// `M_G <= M_{G,v}`.
    LocalGlobalVertex,
    /// `M_G <= M*_{G,B}`.
    LocalGlobalBlock,
    /// Path is the unique minimiser of `M` over a family.
    MinPath,
    /// Maximisers of `M` over block graphs are complete (n <= 4) or caterpillars.
    MaxCaterpillar,
    VertexGluing,
    EdgeGluing,
    Stretching,
    ImproveStep,
}

impl Statement {
    /// Statements run by a per-graph lemma sweep.
    pub const SWEEP: [Statement; 11] = [
        Statement::LocalSum,
        Statement::BlockStar,
        Statement::Partition,
        Statement::LocalWeight,
        Statement::AdjacentCount,
        Statement::NoncutCount,
        Statement::CountVsWeight,
        Statement::WeightBound,
        Statement::Mu,
        Statement::LocalGlobalVertex,
        Statement::LocalGlobalBlock,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::LocalSum => "local-sum",
            Statement::BlockStar => "block-star",
            Statement::Partition => "partition",
            Statement::LocalWeight => "local-weight",
            Statement::AdjacentCount => "adjacent-count",
            Statement::NoncutCount => "noncut-count",
            Statement::CountVsWeight => "count-vs-weight",
            Statement::WeightBound => "weight-bound",
            Statement::Mu => "mu",
            Statement::LocalGlobalVertex => "local-global-vertex",
            Statement::LocalGlobalBlock => "local-global-block",
            Statement::MinPath => "min-path",
            Statement::MaxCaterpillar => "max-caterpillar",
            Statement::VertexGluing => "vertex-gluing",
            Statement::EdgeGluing => "edge-gluing",
            Statement::Stretching => "stretching",
            Statement::ImproveStep => "improve-step",
        }
    }

    pub fn parse(s: &str) -> Option<Statement> {
        let all = Statement::SWEEP.iter().chain(&[
            Statement::MinPath,
            Statement::MaxCaterpillar,
            Statement::VertexGluing,
            Statement::EdgeGluing,
            Statement::Stretching,
            Statement::ImproveStep,
        ]);
        all.copied().find(|st| st.name() == s)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a verdict was evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub cert: CanonicalCert,
    pub edges: Vec<(usize, usize)>,
    /// Vertices the statement was applied at (a vertex, a pair, or a block).
    pub at: Vec<usize>,
}

impl Witness {
    pub fn new(g: &Graph, at: Vec<usize>) -> Self {
        Witness {
            cert: canonical_cert(g),
            edges: g.edges(),
            at,
        }
    }
}

/// Outcome of checking one statement at one configuration.
///
/// `holds` covers both the inequality (or identity) and, when the statement
/// characterises its equality case, agreement of `equality` with
/// `expected_equality`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub statement: Statement,
    pub holds: bool,
    pub equality: bool,
    pub expected_equality: Option<bool>,
    /// Set when the hypotheses were not met; the check was not run.
    pub skipped: Option<String>,
    pub witness: Witness,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Verdict {
    /// Inequality `lhs <= rhs` with an optional equality characterisation.
    pub fn at_most(
        statement: Statement,
        witness: Witness,
        lhs: Rational,
        rhs: Rational,
        expected_equality: Option<bool>,
    ) -> Self {
        let equality = lhs == rhs;
        let holds = lhs <= rhs && expected_equality.is_none_or(|e| e == equality);
        Verdict {
            statement,
            holds,
            equality,
            expected_equality,
            skipped: None,
            witness,
            lhs,
            rhs,
        }
    }

    /// Identity `lhs = rhs`, with an extra side condition folded into `holds`.
    pub fn identity(
        statement: Statement,
        witness: Witness,
        lhs: Rational,
        rhs: Rational,
        side_condition: bool,
    ) -> Self {
        let equality = lhs == rhs;
        Verdict {
            statement,
            holds: equality && side_condition,
            equality,
            expected_equality: Some(true),
            skipped: None,
            witness,
            lhs,
            rhs,
        }
    }

    pub fn flag(
        statement: Statement,
        witness: Witness,
        holds: bool,
        lhs: Rational,
        rhs: Rational,
    ) -> Self {
        Verdict {
            statement,
            holds,
            equality: lhs == rhs,
            expected_equality: None,
            skipped: None,
            witness,
            lhs,
            rhs,
        }
    }

    pub fn skip(statement: Statement, witness: Witness, reason: impl Into<String>) -> Self {
        Verdict {
            statement,
            holds: true,
            equality: false,
            expected_equality: None,
            skipped: Some(reason.into()),
            witness,
            lhs: Rational::zero(),
            rhs: Rational::zero(),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.skipped.is_none() && !self.holds
    }
}
