//! Connected induced subgraph (CIS) polynomials and means.
//!
//! Two independent routes compute every polynomial: enumeration of
//! connected vertex sets (any graph) and recursion over the block
//! structure (block graphs only).

pub mod brute;
pub mod closed;
pub mod enumerate;
pub mod fast;
pub mod stats;

pub use brute::{phi_brute, phi_local_brute, phi_local_set_brute, phi_star_brute};
pub use closed::{closed_form_stats, ClosedFamily, ClosedFormValue};
pub use enumerate::{enum_connected_sets, ConnectedSets};
pub use fast::{phi_fast, phi_local_fast};
pub use stats::{local_mean, mean, mean_star, mu, phi, phi_local, CisReport};
