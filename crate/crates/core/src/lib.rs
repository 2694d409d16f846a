//! Exact connected-induced-subgraph (CIS) polynomials and mean CIS orders
//! of block graphs, with executable checks of the inequalities and
//! extremal results that govern them.

pub mod blocks;
pub mod cert;
pub mod cis;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod ktree;
pub mod lemmas;
pub mod poly;
pub mod random;
pub mod rational;
pub mod search;

pub use blocks::{antennas, block_decomposition, is_block_graph, Antenna, BlockCutTree};
pub use cert::{canonical_cert, canonical_form, CanonicalCert};
pub use cis::CisReport;
pub use error::{Error, Result};
pub use graph::{EdgeList, Graph, VertexSet};
pub use ktree::{build_k_tree, is_k_tree, random_k_tree, KTree};
pub use lemmas::{FamilyChain, FamilyKind, Improvement, Statement, SweepReport, Verdict};
pub use poly::IntPolynomial;
pub use random::{random_block_graph, seeded_rng};
pub use rational::Rational;
pub use search::{
    extremal_scan, gen_block_graphs, gen_connected_graphs, Family, Generator, SearchResult,
};
