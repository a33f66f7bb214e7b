//! Exhaustive or fixed-seed sampled sweeps over the matrices of `T_n(R, σ)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::skewtri::{SkewTriRing, TriMatrix};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    Exhaustive,
    Sampled,
}

/// How large a space may be swept exhaustively and how to sample above that.
#[derive(Copy, Clone, Debug)]
pub struct SweepPlan {
    pub limit: u64,
    pub sample_size: u64,
    pub seed: u64,
}

pub struct SweepOutcome {
    pub mode: SweepMode,
    pub checked: u64,
    /// First failure in sweep order, with a description.
    pub failure: Option<(TriMatrix, String)>,
}

impl SweepPlan {
    pub fn mode_for(&self, space: u128) -> SweepMode {
        if space <= self.limit as u128 {
            SweepMode::Exhaustive
        } else {
            SweepMode::Sampled
        }
    }

    /// Sample indices for a space too large to sweep.
    pub fn sample(&self, space: u128) -> Vec<u128> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.sample_size).map(|_| rng.gen_range(0..space)).collect()
    }

    /// Runs `check` on every visited matrix in parallel. The reported
    /// failure is the first one in sweep order, whatever the scheduling.
    pub fn run<F>(&self, t: &SkewTriRing, check: F) -> SweepOutcome
    where
        F: Fn(&TriMatrix) -> Result<(), String> + Sync,
    {
        let space = t.matrix_count();
        let probe = |i: u128| {
            let a = t.matrix_at(i);
            check(&a).err().map(|why| (a, why))
        };
        match self.mode_for(space) {
            SweepMode::Exhaustive => SweepOutcome {
                mode: SweepMode::Exhaustive,
                checked: space as u64,
                failure: (0..space as u64).into_par_iter().find_map_first(|i| probe(i as u128)),
            },
            SweepMode::Sampled => {
                let indices = self.sample(space);
                SweepOutcome {
                    mode: SweepMode::Sampled,
                    checked: indices.len() as u64,
                    failure: indices.par_iter().find_map_first(|&i| probe(i)),
                }
            }
        }
    }
}
