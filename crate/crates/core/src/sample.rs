//! Deterministic function samples used by the audits.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::function::{random_functions, sign_patterns, MeasurableFn};
use crate::space::MeasurableSpace;
use crate::subset::Subset;

/// Random functions drawn per sample unless told otherwise.
pub const DEFAULT_RANDOM_COUNT: usize = 100;

/// Default seed for every randomized check.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// The full sign-pattern quotient followed by seeded random functions.
#[derive(Clone, Debug)]
pub struct Sample {
    seed: u64,
    pattern_count: usize,
    functions: Vec<MeasurableFn>,
    zero_sets: Vec<Subset>,
}

impl Sample {
    pub fn new(space: &MeasurableSpace, seed: u64, random_count: usize) -> Result<Self> {
        let mut functions = sign_patterns(space)?;
        let pattern_count = functions.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        functions.extend(random_functions(space, random_count, &mut rng));
        let zero_sets = functions.iter().map(MeasurableFn::zero_set).collect();
        Ok(Sample { seed, pattern_count, functions, zero_sets })
    }

    /// Sign patterns only.
    pub fn patterns_only(space: &MeasurableSpace) -> Result<Self> {
        Self::new(space, DEFAULT_SEED, 0)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn functions(&self) -> &[MeasurableFn] {
        &self.functions
    }

    pub fn patterns(&self) -> &[MeasurableFn] {
        &self.functions[..self.pattern_count]
    }

    pub fn random(&self) -> &[MeasurableFn] {
        &self.functions[self.pattern_count..]
    }

    pub fn zero_set(&self, i: usize) -> Subset {
        self.zero_sets[i]
    }

    pub fn zero_sets(&self) -> &[Subset] {
        &self.zero_sets
    }
}
