//! Seeded random block graphs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{attach_clique, complete, Graph, MAX_ORDER};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected block graph of order `n`, grown by attaching cliques at
/// uniformly chosen vertices. Half of the attachments are single pendant
/// vertices; the rest are cliques of 2 to 4 new vertices.
pub fn random_block_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "order must be in 1..={MAX_ORDER}, got {n}"
        )));
    }
    let first = rng.gen_range(1..=n.min(4));
    let mut g = complete(first)?;
    while g.order() < n {
        let room = n - g.order();
        let size = if room == 1 || rng.gen_bool(0.5) {
            1
        } else {
            rng.gen_range(2..=room.min(4))
        };
        let at = rng.gen_range(0..g.order());
        g = attach_clique(&g, at, size)?;
    }
    Ok(g)
}
