//! Seeded random spot checks at sizes far beyond exhaustive reach.

use lattice_bijections_core::hockey;
use lattice_bijections_core::path::{StepUD, UDPath};
use lattice_bijections_core::PathTriple;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A uniformly random balanced path of semilength `m`.
pub fn random_balanced(rng: &mut impl Rng, m: usize) -> UDPath {
    let mut steps = vec![StepUD::Up; m];
    steps.resize(2 * m, StepUD::Down);
    steps.shuffle(rng);
    UDPath::new(steps)
}

/// A random triple of total semilength `n`. The split `(i, j, n - i - j)` is
/// drawn first, each part is then a uniform balanced path.
pub fn random_triple(rng: &mut impl Rng, n: usize) -> PathTriple {
    let i = rng.gen_range(0..=n);
    let j = rng.gen_range(0..=n - i);
    PathTriple::new(
        random_balanced(rng, i),
        random_balanced(rng, j),
        random_balanced(rng, n - i - j),
    )
    .expect("balanced parts")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotReport {
    pub n: usize,
    pub seed: u64,
    pub checked: usize,
    pub failures: usize,
    /// Seed-relative index of the first failing sample.
    pub first_failure: Option<usize>,
}

impl SpotReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Checks `marked_to_triple(triple_to_marked(t)) == t` on `count` random
/// triples of semilength `n` drawn from a ChaCha8 stream seeded with `seed`.
pub fn spot_check_triples(n: usize, count: usize, seed: u64) -> SpotReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SpotReport {
        n,
        seed,
        checked: 0,
        failures: 0,
        first_failure: None,
    };
    for i in 0..count {
        let t = random_triple(&mut rng, n);
        let m = hockey::triple_to_marked(&t);
        let ok = m.n() == n && hockey::marked_to_triple(&m) == t;
        report.checked += 1;
        if !ok {
            report.failures += 1;
            report.first_failure.get_or_insert(i);
        }
    }
    report
}
