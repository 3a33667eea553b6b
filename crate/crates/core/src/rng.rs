//! Deterministic randomness: one master seed fans out into named substreams.
//!
//! Every source of randomness in the crate is a [`SeedStream`] derived from a
//! single `u64` seed. Streams form a tree: `child(tag)` and `named(name)`
//! derive statistically independent branches, and `rng()` finalizes a branch
//! into a concrete ChaCha generator. Derivation is pure, so parallel workers
//! can each derive their own branch without sharing mutable state.

use rand_chacha::ChaCha12Rng;
use rand_chacha::rand_core::SeedableRng;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A node in the seed-derivation tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedStream {
    state: u64,
}

impl SeedStream {
    pub fn from_seed(seed: u64) -> Self {
        SeedStream {
            state: splitmix(seed),
        }
    }

    /// Derive an indexed branch (patch index, epoch number, ...).
    pub fn child(self, tag: u64) -> Self {
        SeedStream {
            state: splitmix(self.state ^ splitmix(tag ^ 0xA5A5_A5A5_A5A5_A5A5)),
        }
    }

    /// Derive a named branch ("init", "shuffle", "shots", "analysis").
    pub fn named(self, name: &str) -> Self {
        // FNV-1a over the name, folded into the tree state.
        let mut h: u64 = 0xCBF2_9CE4_8422_2325;
        for &b in name.as_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01B3);
        }
        self.child(h)
    }

    /// Finalize this branch into a generator.
    pub fn rng(self) -> ChaCha12Rng {
        let mut key = [0u8; 32];
        let mut s = self.state;
        for chunk in key.chunks_exact_mut(8) {
            s = splitmix(s);
            chunk.copy_from_slice(&s.to_le_bytes());
        }
        ChaCha12Rng::from_seed(key)
    }
}
