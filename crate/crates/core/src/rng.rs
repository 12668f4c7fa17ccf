//! Splittable, counter-style random streams.
//!
//! A [`StreamKey`] names an independent stream; children are derived by
//! mixing the parent key with a tag, so the stream used at any node of a
//! recursion tree depends only on the root seed and the path to that node.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StreamKey(u64);

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl StreamKey {
    pub fn new(seed: u64) -> Self {
        StreamKey(splitmix(seed))
    }

    pub fn child(self, tag: u64) -> Self {
        StreamKey(splitmix(self.0 ^ splitmix(tag ^ 0xA076_1D64_78BD_642F)))
    }

    pub fn raw(self) -> u64 {
        self.0
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}
