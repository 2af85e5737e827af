//! Seeded synthetic inputs for benchmarks and randomized tests.
//!
//! PRNG: ChaCha8 keyed with the caller's u64 seed, so operation counters are
//! reproducible across platforms.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::Sym;

/// A length-n sequence over the declared alphabet 1..=p: a random
/// permutation block over a random subset, tiled boustrophedon-style
/// (forward, backward, forward, ...) with the duplicated boundary symbol
/// dropped, for q blocks.
///
/// The zigzag matters: walking a block backward makes each symbol's next
/// occurrence decrease along the block, so the q block areas nest and the
/// measured domination number equals the requested q (less when truncation
/// merges the tail). Repeating the block in the same direction instead
/// yields sliding windows, which are maximally anti-nested and drive q
/// toward the block size. With q = 1 and n = p the output is a uniform
/// random permutation of the alphabet.
pub fn generate(n: usize, p: usize, q: usize, seed: u64) -> Vec<Sym> {
    assert!(n >= 1 && p >= 1 && q >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = ((n - 1).div_ceil(q) + 1).clamp(1, p);
    let mut alphabet: Vec<Sym> = (1..=p).collect();
    alphabet.shuffle(&mut rng);
    let block = &alphabet[..m];
    let mut out = Vec::with_capacity(n);
    if m == 1 {
        out.resize(n, block[0]);
        return out;
    }
    out.extend_from_slice(block);
    out.truncate(n);
    let mut backward = true;
    while out.len() < n {
        if backward {
            for i in (0..m - 1).rev() {
                out.push(block[i]);
                if out.len() == n {
                    break;
                }
            }
        } else {
            for &c in &block[1..] {
                out.push(c);
                if out.len() == n {
                    break;
                }
            }
        }
        backward = !backward;
    }
    out
}

/// Uniform iid sequence over 1..=p (denser repeats than [`generate`]).
pub fn generate_uniform(n: usize, p: usize, seed: u64) -> Vec<Sym> {
    assert!(n >= 1 && p >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(1..=p)).collect()
}
