//! Seeded random streams. Every trial draws from its own ChaCha stream
//! keyed by `(seed, stream)`, so serial and parallel runs agree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::prefix::RealPrefix;

pub type StreamRng = ChaCha8Rng;

pub fn substream(seed: u64, stream: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A stream keyed by a purpose tag in the high bits and a trial index.
pub fn tagged_substream(seed: u64, tag: u16, trial: u64) -> StreamRng {
    assert!(trial < 1 << 48, "trial index out of range");
    substream(seed, (u64::from(tag) << 48) | trial)
}

/// `n` i.i.d. uniform values in `[0, 1)`.
///
/// A tie among 53-bit uniforms is astronomically rare; if it happens the
/// whole prefix is redrawn from the same stream, which keeps the result
/// deterministic.
pub fn uniform_prefix<R: Rng + ?Sized>(n: usize, rng: &mut R) -> RealPrefix {
    loop {
        let values: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        if let Ok(p) = RealPrefix::new(values) {
            return p;
        }
    }
}
