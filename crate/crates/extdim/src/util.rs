//! Budgets, seeded randomness, and the parallel/sequential map switch.

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

/// Step/size budget for exploratory computations (knitting, searches).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest total dimension of any module the search may produce.
    pub max_dim: usize,
    /// Maximum number of expansion steps.
    pub max_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_dim: 80, max_steps: 512 }
    }
}

/// Whether a budgeted computation finished or ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Completion {
    Complete,
    BudgetExhausted,
}

impl Completion {
    pub fn is_complete(&self) -> bool {
        matches!(self, Completion::Complete)
    }
}

pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Execution mode for data-parallel inner loops. `Parallel` falls back to
/// sequential when the crate is built without the `parallel` feature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExecMode {
    #[default]
    Parallel,
    Sequential,
}

/// Map a pure function over items, in parallel when allowed. Output order
/// always matches input order, so downstream merges are deterministic.
pub fn par_map<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_preserves_order() {
        let xs: Vec<usize> = (0..100).collect();
        let seq = par_map(ExecMode::Sequential, xs.clone(), |x| x * x);
        let par = par_map(ExecMode::Parallel, xs, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}
