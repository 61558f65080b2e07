//! Dominance functions: scoring a set against a control set.
//!
//! A dominance function `D` relative to an order `≼` satisfies `D(X, X) = 1/2`
//! and `Y ≼ Z ⇒ D(X, Y) ≤ D(X, Z)`. The first argument is always the control
//! (baseline) set. The two built-in kinds average a pointwise kernel over all
//! pairs `(x, y) ∈ X × Y`:
//!
//! * DDF uses the step kernel `s(x, y) ∈ {0, 1/2, 1}`,
//! * RDF uses the affine kernel `r(x, y) = (y − x + 1) / 2`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HfeError, Result};
use crate::exact::half;
use crate::grade::Grade;
use crate::orders::OrderKind;
use crate::thfe::Thfe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominanceKind {
    /// Discrete dominance, built on the step kernel.
    Ddf,
    /// Relative dominance, built on the affine kernel.
    Rdf,
}

impl DominanceKind {
    pub const ALL: [DominanceKind; 2] = [DominanceKind::Ddf, DominanceKind::Rdf];

    pub fn kernel(self, x: Grade, y: Grade) -> BigRational {
        match self {
            DominanceKind::Ddf => kernel_s(x, y),
            DominanceKind::Rdf => kernel_r(x, y),
        }
    }
}

impl fmt::Display for DominanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DominanceKind::Ddf => "ddf",
            DominanceKind::Rdf => "rdf",
        })
    }
}

impl FromStr for DominanceKind {
    type Err = HfeError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ddf" | "s" | "discrete" => Ok(DominanceKind::Ddf),
            "rdf" | "r" | "relative" => Ok(DominanceKind::Rdf),
            _ => Err(HfeError::parse(s, "unknown dominance kind")),
        }
    }
}

/// Step kernel: `1` if `x < y`, `1/2` if equal, `0` if `x > y`.
pub fn kernel_s(x: Grade, y: Grade) -> BigRational {
    match x.cmp(&y) {
        Ordering::Less => BigRational::one(),
        Ordering::Equal => half(),
        Ordering::Greater => BigRational::zero(),
    }
}

/// Affine kernel `(y − x + 1) / 2`.
pub fn kernel_r(x: Grade, y: Grade) -> BigRational {
    (y.to_big() - x.to_big() + BigRational::one()) * half()
}

/// `D(control, y)`: the mean kernel value over `control × y`.
pub fn dominance(kind: DominanceKind, control: &Thfe, y: &Thfe) -> BigRational {
    let mut total = BigRational::zero();
    for &a in control.grades() {
        for &b in y.grades() {
            total += kind.kernel(a, b);
        }
    }
    let pairs = control.cardinality() * y.cardinality();
    total / BigRational::from_integer(BigInt::from(pairs))
}

/// How `y` and `z` relate when scored against the same control set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceRelation {
    /// `D(X, Y) > D(X, Z)`.
    Dominates,
    /// `D(X, Y) < D(X, Z)`.
    Dominated,
    /// `D(X, Y) = D(X, Z)`.
    Indifferent,
}

pub fn relation(kind: DominanceKind, control: &Thfe, y: &Thfe, z: &Thfe) -> DominanceRelation {
    match dominance(kind, control, y).cmp(&dominance(kind, control, z)) {
        Ordering::Greater => DominanceRelation::Dominates,
        Ordering::Less => DominanceRelation::Dominated,
        Ordering::Equal => DominanceRelation::Indifferent,
    }
}

/// Pairwise kernel values, rows over the sorted control set and columns over
/// the sorted evaluated set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<BigRational>>,
}

impl KernelMatrix {
    pub fn mean(&self) -> BigRational {
        let total: BigRational = self.entries.iter().flatten().sum();
        total / BigRational::from_integer(BigInt::from(self.rows * self.cols))
    }
}

pub fn kernel_matrix(kind: DominanceKind, a: &Thfe, b: &Thfe) -> KernelMatrix {
    let entries: Vec<Vec<BigRational>> = a
        .grades()
        .iter()
        .map(|&x| b.grades().iter().map(|&y| kind.kernel(x, y)).collect())
        .collect();
    KernelMatrix {
        rows: a.cardinality(),
        cols: b.cardinality(),
        entries,
    }
}

/// A sampled violation of the dominance-function contract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractViolation {
    /// `D(X, X) ≠ 1/2`.
    Diagonal { x: Thfe, value: BigRational },
    /// `Y ≼ Z` but `D(X, Y) > D(X, Z)`.
    Monotonicity { x: Thfe, y: Thfe, z: Thfe },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractReport {
    pub order: OrderKind,
    pub holds_on_sample: bool,
    pub counterexample: Option<ContractViolation>,
    /// Number of `(Y, Z)` orientations that were comparable and checked.
    pub comparable: usize,
    /// Triples whose `Y` and `Z` were incomparable under the order.
    pub skipped: usize,
}

/// Checks `D(X, X) = 1/2` and monotonicity in the second argument on every
/// triple `(X, Y, Z)`. Both orientations of `(Y, Z)` are tried; triples with
/// incomparable `Y`, `Z` only contribute the diagonal check.
pub fn check_dominance_contract<D>(
    d: D,
    order: OrderKind,
    triples: &[(Thfe, Thfe, Thfe)],
) -> ContractReport
where
    D: Fn(&Thfe, &Thfe) -> BigRational,
{
    let mut counterexample = None;
    let mut comparable = 0;
    let mut skipped = 0;
    for (x, y, z) in triples {
        let diagonal = d(x, x);
        if diagonal != half() && counterexample.is_none() {
            counterexample = Some(ContractViolation::Diagonal {
                x: x.clone(),
                value: diagonal,
            });
        }
        let mut any = false;
        for (lo, hi) in [(y, z), (z, y)] {
            if !order.leq(lo, hi) {
                continue;
            }
            any = true;
            comparable += 1;
            if d(x, lo) > d(x, hi) && counterexample.is_none() {
                counterexample = Some(ContractViolation::Monotonicity {
                    x: x.clone(),
                    y: lo.clone(),
                    z: hi.clone(),
                });
            }
        }
        if !any {
            skipped += 1;
        }
    }
    ContractReport {
        order,
        holds_on_sample: counterexample.is_none(),
        counterexample,
        comparable,
        skipped,
    }
}
