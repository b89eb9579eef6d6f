//! Seeded sampling of rational test points.
//!
//! All randomized checks draw from [`Sampler`], which wraps a ChaCha stream
//! cipher RNG so that a given seed reproduces the same sequence on every run.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::rational::Rat;

/// Ranges for sampled rationals: numerator uniform in
/// `[-numerator_abs, numerator_abs]`, denominator uniform in `[1, denominator_max]`.
#[derive(Clone, Debug)]
pub struct SampleBounds {
    pub numerator_abs: i64,
    pub denominator_max: i64,
}

impl Default for SampleBounds {
    fn default() -> Self {
        Self { numerator_abs: 1000, denominator_max: 100 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SampleError {
    #[error("resample budget of {budget} retries exhausted")]
    ResampleExhausted { budget: usize },
}

/// Deterministic rational sampler.
pub struct Sampler {
    rng: ChaCha8Rng,
    bounds: SampleBounds,
    retry_budget: usize,
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_bounds(seed, SampleBounds::default())
    }

    pub fn with_bounds(seed: u64, bounds: SampleBounds) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed), bounds, retry_budget: 1000, seed }
    }

    /// Number of redraws allowed when an acceptance predicate rejects a value.
    pub fn retry_budget(mut self, budget: usize) -> Self {
        self.retry_budget = budget;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// One rational from the configured ranges, in lowest terms.
    pub fn rational(&mut self) -> Rat {
        let num = self.rng.gen_range(-self.bounds.numerator_abs..=self.bounds.numerator_abs);
        let den = self.rng.gen_range(1..=self.bounds.denominator_max);
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    /// Redraws until `accept` holds, spending at most the retry budget.
    pub fn rational_where(&mut self, accept: impl Fn(&Rat) -> bool) -> Result<Rat, SampleError> {
        let first = self.rational();
        if accept(&first) {
            return Ok(first);
        }
        for _ in 0..self.retry_budget {
            let candidate = self.rational();
            if accept(&candidate) {
                return Ok(candidate);
            }
        }
        Err(SampleError::ResampleExhausted { budget: self.retry_budget })
    }

    pub fn nonzero(&mut self) -> Result<Rat, SampleError> {
        self.rational_where(|r| !r.is_zero())
    }

    /// `count` pairwise-distinct rationals, all satisfying `accept`.
    pub fn distinct(
        &mut self,
        count: usize,
        accept: impl Fn(&Rat) -> bool,
    ) -> Result<Vec<Rat>, SampleError> {
        let mut out: Vec<Rat> = Vec::with_capacity(count);
        for _ in 0..count {
            let next = self.rational_where(|r| accept(r) && !out.contains(r))?;
            out.push(next);
        }
        Ok(out)
    }
}
