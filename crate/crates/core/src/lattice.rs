//! Meet and join for the symmetric order on finite sets.
//!
//! `A ≤⁰ U` holds exactly when `U ∩ [0, A⁺]` is a final segment of `A`: going
//! up in the order drops a block of the smallest grades and adds grades above
//! `A⁺`. With `A⁺ ≤ B⁺`, the least common upper bound therefore keeps the
//! longest common top segment of `A` and `B ∩ [0, A⁺]` and adds `B ∩ (A⁺, 1]`.
//! The meet is the mirror image. Both constructions are cross-checked against
//! [`oracle_is_least_upper_bound`] and [`oracle_is_greatest_lower_bound`],
//! which enumerate every subset of a small grid.

use rayon::prelude::*;

use crate::error::{HfeError, Result};
use crate::grid::Grid;
use crate::orders::SetOrders;
use crate::thfe::Thfe;

/// Largest grid the brute-force oracles will enumerate.
pub const ORACLE_MAX_POINTS: usize = 12;

/// `A ∨₀ B`.
pub fn join0(a: &Thfe, b: &Thfe) -> Thfe {
    let (low, high) = if a.sup() <= b.sup() { (a, b) } else { (b, a) };
    let top = low.sup();
    let split = high.grades().partition_point(|g| *g <= top);
    let (high_below, high_above) = high.grades().split_at(split);
    let shared = common_suffix_len(low.grades(), high_below);
    let mut grades = low.grades()[low.cardinality() - shared..].to_vec();
    grades.extend_from_slice(high_above);
    Thfe::from_sorted(grades)
}

/// `A ∧₀ B`.
pub fn meet0(a: &Thfe, b: &Thfe) -> Thfe {
    let (high, low) = if a.inf() >= b.inf() { (a, b) } else { (b, a) };
    let bottom = high.inf();
    let split = low.grades().partition_point(|g| *g < bottom);
    let (low_below, low_above) = low.grades().split_at(split);
    let shared = common_prefix_len(high.grades(), low_above);
    let mut grades = low_below.to_vec();
    grades.extend_from_slice(&high.grades()[..shared]);
    Thfe::from_sorted(grades)
}

fn common_suffix_len<T: PartialEq>(x: &[T], y: &[T]) -> usize {
    x.iter()
        .rev()
        .zip(y.iter().rev())
        .take_while(|(p, q)| p == q)
        .count()
}

fn common_prefix_len<T: PartialEq>(x: &[T], y: &[T]) -> usize {
    x.iter().zip(y).take_while(|(p, q)| p == q).count()
}

/// Outcome of an exhaustive bound check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeWitness {
    pub candidate: Thfe,
    /// Number of common bounds found in the universe and compared against.
    pub checked_bounds: usize,
    pub verdict: bool,
}

fn oracle_family(a: &Thfe, b: &Thfe, c: &Thfe, universe: &Grid) -> Result<Vec<Thfe>> {
    if universe.len() > ORACLE_MAX_POINTS {
        return Err(HfeError::OracleBudget(format!(
            "universe has {} points, limit is {ORACLE_MAX_POINTS}",
            universe.len()
        )));
    }
    for set in [a, b, c] {
        if !universe.contains_all(set) {
            return Err(HfeError::Sample(format!(
                "{set} is not contained in the universe"
            )));
        }
    }
    Ok(universe.nonempty_subsets())
}

/// Checks that `c` is an upper bound of `a` and `b` lying `≤⁰` below every
/// other common upper bound drawn from `universe`.
pub fn oracle_is_least_upper_bound(
    a: &Thfe,
    b: &Thfe,
    c: &Thfe,
    universe: &Grid,
) -> Result<LatticeWitness> {
    let family = oracle_family(a, b, c, universe)?;
    let is_bound = |u: &Thfe| a.leq_symmetric(u) && b.leq_symmetric(u);
    let (checked, all_above) = family
        .par_iter()
        .filter(|u| is_bound(u))
        .map(|u| (1usize, c.leq_symmetric(u)))
        .reduce(|| (0, true), |x, y| (x.0 + y.0, x.1 && y.1));
    Ok(LatticeWitness {
        candidate: c.clone(),
        checked_bounds: checked,
        verdict: is_bound(c) && all_above,
    })
}

/// Dual of [`oracle_is_least_upper_bound`].
pub fn oracle_is_greatest_lower_bound(
    a: &Thfe,
    b: &Thfe,
    c: &Thfe,
    universe: &Grid,
) -> Result<LatticeWitness> {
    let family = oracle_family(a, b, c, universe)?;
    let is_bound = |l: &Thfe| l.leq_symmetric(a) && l.leq_symmetric(b);
    let (checked, all_below) = family
        .par_iter()
        .filter(|l| is_bound(l))
        .map(|l| (1usize, l.leq_symmetric(c)))
        .reduce(|| (0, true), |x, y| (x.0 + y.0, x.1 && y.1));
    Ok(LatticeWitness {
        candidate: c.clone(),
        checked_bounds: checked,
        verdict: is_bound(c) && all_below,
    })
}
