//! Typical hesitant fuzzy elements: finite nonempty subsets of `[0, 1]`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{HfeError, Result};
use crate::grade::Grade;

/// A finite nonempty set of grades, kept as a strictly increasing tuple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Thfe {
    grades: Vec<Grade>,
}

impl Thfe {
    /// Sorts and deduplicates `raw`. Duplicates are dropped silently.
    pub fn normalize(raw: impl IntoIterator<Item = Grade>) -> Result<Self> {
        let mut grades: Vec<Grade> = raw.into_iter().collect();
        if grades.is_empty() {
            return Err(HfeError::EmptyHfe);
        }
        grades.sort_unstable();
        grades.dedup();
        Ok(Thfe { grades })
    }

    /// Parses each literal with [`Grade::from_str`](std::str::FromStr).
    pub fn parse<S: AsRef<str>>(literals: &[S]) -> Result<Self> {
        let grades = literals
            .iter()
            .map(|s| s.as_ref().parse::<Grade>())
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(grades)
    }

    pub fn singleton(grade: Grade) -> Self {
        Thfe {
            grades: vec![grade],
        }
    }

    /// Wraps an already strictly increasing, nonempty vector.
    pub(crate) fn from_sorted(grades: Vec<Grade>) -> Self {
        debug_assert!(!grades.is_empty());
        debug_assert!(grades.windows(2).all(|w| w[0] < w[1]));
        Thfe { grades }
    }

    /// Like [`from_sorted`](Self::from_sorted) but `None` for an empty vector.
    pub(crate) fn from_sorted_opt(grades: Vec<Grade>) -> Option<Self> {
        (!grades.is_empty()).then(|| Self::from_sorted(grades))
    }

    /// The canonical tuple `a1 < ... < an`.
    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn cardinality(&self) -> usize {
        self.grades.len()
    }

    pub fn inf(&self) -> Grade {
        self.grades[0]
    }

    pub fn sup(&self) -> Grade {
        self.grades[self.grades.len() - 1]
    }

    pub fn contains(&self, grade: &Grade) -> bool {
        self.grades.binary_search(grade).is_ok()
    }

    pub fn is_singleton_of(&self, grade: Grade) -> bool {
        self.grades.len() == 1 && self.grades[0] == grade
    }

    /// `1 - A`.
    pub fn complement(&self) -> Thfe {
        Thfe {
            grades: self.grades.iter().rev().map(Grade::complement).collect(),
        }
    }

    pub fn union(&self, other: &Thfe) -> Thfe {
        let mut grades = Vec::with_capacity(self.grades.len() + other.grades.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.grades, &other.grades);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    grades.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    grades.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    grades.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        grades.extend_from_slice(&a[i..]);
        grades.extend_from_slice(&b[j..]);
        Thfe { grades }
    }

    /// `A ∩ B`, `None` when empty.
    pub fn intersection(&self, other: &Thfe) -> Option<Thfe> {
        Self::from_sorted_opt(
            self.grades
                .iter()
                .copied()
                .filter(|g| other.contains(g))
                .collect(),
        )
    }

    /// `A ∖ B`, `None` when empty.
    pub fn difference(&self, other: &Thfe) -> Option<Thfe> {
        Self::from_sorted_opt(
            self.grades
                .iter()
                .copied()
                .filter(|g| !other.contains(g))
                .collect(),
        )
    }

    pub fn with(&self, grade: Grade) -> Thfe {
        self.union(&Thfe::singleton(grade))
    }

    /// Exact arithmetic mean of the grades.
    pub(crate) fn mean_big(&self) -> num_rational::BigRational {
        let sum: num_rational::BigRational = self.grades.iter().map(Grade::to_big).sum();
        sum / num_rational::BigRational::from_integer(self.grades.len().into())
    }
}

/// `X < Y` on finite sets: every element of `X` is below every element of `Y`.
/// Vacuously true when either side is empty.
pub fn strictly_below_finite(x: Option<&Thfe>, y: Option<&Thfe>) -> bool {
    match (x, y) {
        (Some(x), Some(y)) => x.sup() < y.inf(),
        _ => true,
    }
}

impl fmt::Display for Thfe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.grades.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Thfe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Thfe {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.grades.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Thfe {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let grades = Vec::<Grade>::deserialize(deserializer)?;
        Thfe::normalize(grades).map_err(serde::de::Error::custom)
    }
}

/// Builds a THFE from decimal literals; panics on invalid input. Intended for tests and examples.
#[macro_export]
macro_rules! thfe {
    ($($x:literal),+ $(,)?) => {
        $crate::Thfe::parse(&[$(stringify!($x)),+]).expect("valid THFE literal")
    };
}
