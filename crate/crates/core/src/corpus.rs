//! Seeded random instances for verification sweeps.

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ci3::{detect_ci3, CiEdim3Structure};
use crate::family::GluedSemigroup;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_SEED: u64 = 20_130_917;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random complete intersection `⟨a, px, py⟩` of embedding dimension 3 with
/// `2 <= p, x, y <= max_pxy` and `a <= max_a`.
///
/// The returned structure is one of those detected on the semigroup.
pub fn random_ci3<R: Rng>(
    rng: &mut R,
    max_pxy: u64,
    max_a: u64,
) -> (NumericalSemigroup, CiEdim3Structure) {
    loop {
        let p = rng.gen_range(2..=max_pxy);
        let x = rng.gen_range(2..=max_pxy);
        let y = rng.gen_range(2..=max_pxy);
        if x == y || x.gcd(&y) != 1 {
            continue;
        }
        let a = rng.gen_range(2..=max_a);
        let Ok(s) = CiEdim3Structure::new(a, p, x, y) else {
            continue;
        };
        let Ok(h) = NumericalSemigroup::new(&s.generators()) else {
            continue;
        };
        if h.embedding_dimension() != 3 {
            continue;
        }
        let found = detect_ci3(&h).expect("edim 3");
        if found.contains(&s) {
            return (h, s);
        }
    }
}

pub fn ci3_corpus(seed: u64, count: usize) -> Vec<(NumericalSemigroup, CiEdim3Structure)> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_ci3(&mut rng, 30, 1000)).collect()
}

/// Random coprime pair `2 <= a < b <= max`.
pub fn random_coprime_pair<R: Rng>(rng: &mut R, max: u64) -> (u64, u64) {
    loop {
        let a = rng.gen_range(2..max);
        let b = rng.gen_range(a + 1..=max);
        if a.gcd(&b) == 1 {
            return (a, b);
        }
    }
}

pub fn coprime_pairs(seed: u64, count: usize, max: u64) -> Vec<(u64, u64)> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_coprime_pair(&mut rng, max)).collect()
}

const GLUING_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Random gluing chain of 1 to `max_depth` steps on a coprime pair `<= 20`,
/// keeping the Frobenius number at most `max_frobenius`.
///
/// Each step glues an element of order at least 2 that is at most `3·f` of
/// the current semigroup (at most `2·a_e` when that range has no candidate)
/// with a prime `p <= 13` coprime to it.
pub fn random_gluing_chain<R: Rng>(
    rng: &mut R,
    max_depth: usize,
    max_frobenius: i64,
) -> GluedSemigroup {
    let (u, v) = random_coprime_pair(rng, 20);
    let mut current =
        GluedSemigroup::root(NumericalSemigroup::new(&[u, v]).expect("coprime pair"));
    let depth = rng.gen_range(1..=max_depth);
    let mut attempts = 0;
    while current.chain.len() < depth && attempts < 64 {
        attempts += 1;
        let h = &current.semigroup;
        let f = h.frobenius().max(0) as u64;
        let mut candidates: Vec<u64> = (2..=3 * f)
            .filter(|&w| h.contains(w) && !h.is_generator(w))
            .collect();
        if candidates.is_empty() {
            candidates = (2..=2 * h.max_generator())
                .filter(|&w| h.contains(w) && !h.is_generator(w))
                .collect();
        }
        let a = *candidates.choose(rng).expect("a_1 + a_1 is always a candidate");
        let primes: Vec<u64> = GLUING_PRIMES
            .iter()
            .copied()
            .filter(|p| !a.is_multiple_of(*p))
            .collect();
        let Some(&p) = primes.choose(rng) else {
            continue;
        };
        let Ok(next) = current.glue(a, p) else {
            continue;
        };
        if next.semigroup.frobenius() <= max_frobenius {
            current = next;
        }
    }
    current
}

pub fn gluing_corpus(seed: u64, count: usize) -> Vec<GluedSemigroup> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_gluing_chain(&mut rng, 3, 100_000))
        .collect()
}
