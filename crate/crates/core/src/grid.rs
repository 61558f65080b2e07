//! Finite grids of grades and the families of subsets they generate.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{HfeError, Result};
use crate::grade::{parse_decimal, Grade};
use crate::thfe::Thfe;

/// A sorted, duplicate-free set of grades.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid(Vec<Grade>);

impl Grid {
    pub fn new(points: impl IntoIterator<Item = Grade>) -> Self {
        let mut points: Vec<Grade> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        Grid(points)
    }

    /// `start, start + step, ...` up to and including `stop` when it is hit exactly.
    pub fn range(start: Grade, stop: Grade, step: &BigRational) -> Result<Self> {
        if !step.is_positive() {
            return Err(HfeError::parse(
                step.to_string(),
                "grid step must be positive",
            ));
        }
        let stop = stop.to_big();
        let mut points = Vec::new();
        let mut x = start.to_big();
        while x <= stop {
            points.push(Grade::from_big(&x)?);
            x += step;
        }
        Ok(Grid::new(points))
    }

    pub fn points(&self) -> &[Grade] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_all(&self, a: &Thfe) -> bool {
        a.grades().iter().all(|g| self.0.binary_search(g).is_ok())
    }

    /// Every nonempty subset, in bitmask order.
    pub fn nonempty_subsets(&self) -> Vec<Thfe> {
        self.subsets_up_to(self.0.len())
    }

    /// Every nonempty subset with at most `max_size` elements.
    pub fn subsets_up_to(&self, max_size: usize) -> Vec<Thfe> {
        let n = self.0.len();
        assert!(n < usize::BITS as usize, "grid too large to enumerate");
        (1usize..(1 << n))
            .filter(|mask| mask.count_ones() as usize <= max_size)
            .map(|mask| {
                Thfe::from_sorted(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = HfeError;

    /// `start:stop:step` (e.g. `0:1:0.25`) or a comma-separated list of grades.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [start, stop, step] => {
                let step = parse_decimal(step.trim())?;
                if step.is_zero() {
                    return Err(HfeError::parse(s, "grid step must be positive"));
                }
                Grid::range(start.parse()?, stop.parse()?, &step)
            }
            [list] => Ok(Grid::new(
                list.split(',')
                    .map(|t| t.parse::<Grade>())
                    .collect::<Result<Vec<_>>>()?,
            )),
            _ => Err(HfeError::parse(
                s,
                "expected start:stop:step or a comma list",
            )),
        }
    }
}
