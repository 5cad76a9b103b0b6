use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::category::FiniteCategory;
use crate::error::{Error, Result};

/// Largest hom-set a suite will enumerate.
pub const DEFAULT_MAX_HOM: usize = 100_000;

/// Random subset of subject morphisms, reproducible from `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub seed: u64,
    pub count: usize,
}

/// Enumeration limits for a suite run.
///
/// Every hom-set of the instance must fit under `max_hom`. With `sample` set,
/// the outer quantifier of each clause ranges over a seeded random subset of
/// morphisms instead of all of them; inner universal properties are still
/// enumerated in full.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub max_hom: usize,
    pub sample: Option<Sample>,
}

impl Default for Bound {
    fn default() -> Self {
        Bound::exhaustive()
    }
}

impl Bound {
    pub fn exhaustive() -> Self {
        Bound {
            max_hom: DEFAULT_MAX_HOM,
            sample: None,
        }
    }

    pub fn sampled(seed: u64, count: usize) -> Self {
        Bound {
            max_hom: DEFAULT_MAX_HOM,
            sample: Some(Sample { seed, count }),
        }
    }

    pub fn with_max_hom(mut self, max_hom: usize) -> Self {
        self.max_hom = max_hom;
        self
    }

    /// Fails with the first hom-set (in object order) larger than the budget.
    pub fn admit<C: FiniteCategory>(&self, cat: &C) -> Result<()> {
        let objects = cat.objects();
        for a in objects.iter() {
            for b in objects.iter() {
                let size = cat.hom_size(a, b);
                if size > self.max_hom as u128 {
                    return Err(Error::BudgetExceeded {
                        dom: cat.object_id(a).to_string(),
                        cod: cat.object_id(b).to_string(),
                        size,
                        limit: self.max_hom,
                    });
                }
            }
        }
        Ok(())
    }

    /// Outer-quantifier morphisms: everything, or a seeded subset kept in
    /// enumeration order.
    pub fn subjects<C: FiniteCategory>(&self, cat: &C) -> Vec<C::Morphism> {
        let all = cat.all_morphisms();
        self.pick(all)
    }

    pub(crate) fn pick<T: Clone>(&self, all: Vec<T>) -> Vec<T> {
        match self.sample {
            None => all,
            Some(Sample { seed, count }) if count < all.len() => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut idx: Vec<usize> = (0..all.len()).collect();
                idx.shuffle(&mut rng);
                idx.truncate(count);
                idx.sort_unstable();
                idx.into_iter().map(|i| all[i].clone()).collect()
            }
            Some(_) => all,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_seeded_and_ordered() {
        let b = Bound::sampled(7, 5);
        let all: Vec<u32> = (0..100).collect();
        let a = b.pick(all.clone());
        assert_eq!(a, b.pick(all.clone()));
        assert_eq!(a.len(), 5);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_ne!(a, Bound::sampled(8, 5).pick(all));
    }

    #[test]
    fn small_universe_is_not_sampled() {
        let b = Bound::sampled(1, 10);
        assert_eq!(b.pick(vec![1, 2, 3]), vec![1, 2, 3]);
    }
}
