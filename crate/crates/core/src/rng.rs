//! Deterministic random streams.
//!
//! All randomness in the crate flows through ChaCha12 streams derived from a
//! single master seed. Independent pipeline stages (seed drawing, per-row
//! covariate sampling, forest trees, benchmark runs, ...) get their own
//! `(domain, index)` substream, so the same master seed reproduces the same
//! output no matter how stages are interleaved or parallelized.

use rand_chacha::rand_core::SeedableRng;
pub use rand_chacha::ChaCha12Rng as Stream;

/// Substream domains; one per independent consumer of randomness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    SeedDraw,
    Covariates,
    Targets,
    Clustering,
    Forest,
    Splits,
    Learners,
}

impl Domain {
    fn code(self) -> u64 {
        match self {
            Domain::SeedDraw => 1,
            Domain::Covariates => 2,
            Domain::Targets => 3,
            Domain::Clustering => 4,
            Domain::Forest => 5,
            Domain::Splits => 6,
            Domain::Learners => 7,
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Collapse `(master, domain, index)` into one 64-bit substream key.
pub fn derive_key(master: u64, domain: Domain, index: u64) -> u64 {
    let mut s = splitmix64(master);
    s = splitmix64(s ^ domain.code().wrapping_mul(0xA076_1D64_78BD_642F));
    splitmix64(s ^ index.wrapping_mul(0xE703_7ED1_A0B4_28DB))
}

/// Deterministic substream for one `(domain, index)` slot.
pub fn substream(master: u64, domain: Domain, index: u64) -> Stream {
    Stream::seed_from_u64(derive_key(master, domain, index))
}

/// Top-level stream for a master seed (domain-free).
pub fn master_stream(master: u64) -> Stream {
    Stream::seed_from_u64(splitmix64(master))
}
