//! Shared generators for the integration tests.
#![allow(dead_code)]

use hfe_order::{Grade, SetOrders, Thfe};
use proptest::prelude::*;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Grid steps per unit; grades are multiples of `1 / STEPS`.
pub const STEPS: i64 = 20;
pub const MAX_CARD: usize = 5;

pub fn grade(i: i64) -> Grade {
    Grade::new(i, STEPS).unwrap()
}

pub fn from_indices(indices: impl IntoIterator<Item = i64>) -> Thfe {
    Thfe::normalize(indices.into_iter().map(grade)).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonempty subset of the `1/20` grid with at most five grades.
pub fn random_thfe<R: Rng>(rng: &mut R) -> Thfe {
    let card = rng.random_range(1..=MAX_CARD);
    let picks = sample(rng, STEPS as usize + 1, card);
    from_indices(picks.into_iter().map(|i| i as i64))
}

/// A random set that is `≤⁰`-above `a`: drop a (possibly empty) block of the
/// smallest grades of `a` and add grades above `a⁺`.
pub fn random_upper<R: Rng>(rng: &mut R, a: &Thfe) -> Thfe {
    let top = a.sup();
    let above: Vec<i64> = (0..=STEPS).filter(|i| grade(*i) > top).collect();
    loop {
        let keep_from = rng.random_range(0..=a.cardinality());
        let mut grades: Vec<Grade> = a.grades()[keep_from..].to_vec();
        for i in &above {
            if rng.random_bool(0.3) {
                grades.push(grade(*i));
            }
        }
        if let Ok(b) = Thfe::normalize(grades) {
            debug_assert!(a.leq_symmetric(&b));
            return b;
        }
    }
}

/// Disjoint pair `(b, c)` drawn from the grid.
pub fn random_disjoint<R: Rng>(rng: &mut R) -> (Thfe, Thfe) {
    loop {
        let b = random_thfe(rng);
        let c = random_thfe(rng);
        if let Some(rest) = c.difference(&b) {
            return (b, rest);
        }
    }
}

pub fn thfe_strategy() -> impl Strategy<Value = Thfe> {
    proptest::collection::btree_set(0..=STEPS, 1..=MAX_CARD).prop_map(from_indices)
}
