//! Partial orders on hesitant fuzzy elements.
//!
//! Cardinality-based orders (product, list, pessimistic, optimistic) work on
//! [`Thfe`] tuples. The set-based right, left and symmetric orders are defined
//! through strict domination of set differences and are available for both
//! finite sets and interval unions via [`SetOrders`].

use std::fmt;
use std::str::FromStr;

use crate::error::{HfeError, Result};
use crate::grade::Grade;
use crate::interval::{strictly_below, IntervalUnionHfe};
use crate::thfe::{strictly_below_finite, Thfe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Product,
    List,
    Pessimistic,
    Optimistic,
    Right,
    Left,
    Symmetric,
}

impl OrderKind {
    pub const ALL: [OrderKind; 7] = [
        OrderKind::Product,
        OrderKind::List,
        OrderKind::Pessimistic,
        OrderKind::Optimistic,
        OrderKind::Right,
        OrderKind::Left,
        OrderKind::Symmetric,
    ];

    /// The six orders defined on all of `F*([0,1])`.
    pub const HFE_ORDERS: [OrderKind; 6] = [
        OrderKind::List,
        OrderKind::Pessimistic,
        OrderKind::Optimistic,
        OrderKind::Right,
        OrderKind::Left,
        OrderKind::Symmetric,
    ];

    /// `a ≼ b` on finite sets. `Product` only relates sets of equal cardinality.
    pub fn leq(self, a: &Thfe, b: &Thfe) -> bool {
        match self {
            OrderKind::Product => {
                a.cardinality() == b.cardinality() && leq_prod_unchecked(a.grades(), b.grades())
            }
            OrderKind::List => leq_list(a, b),
            OrderKind::Pessimistic => leq_pes(a, b),
            OrderKind::Optimistic => leq_opt(a, b),
            OrderKind::Right => a.leq_right(b),
            OrderKind::Left => a.leq_left(b),
            OrderKind::Symmetric => a.leq_symmetric(b),
        }
    }

    /// `a ≼ b` on interval unions; only right, left and symmetric apply.
    pub fn leq_interval(self, a: &IntervalUnionHfe, b: &IntervalUnionHfe) -> Result<bool> {
        match self {
            OrderKind::Right => Ok(a.leq_right(b)),
            OrderKind::Left => Ok(a.leq_left(b)),
            OrderKind::Symmetric => Ok(a.leq_symmetric(b)),
            other => Err(HfeError::UnsupportedOrder(other.to_string())),
        }
    }

    pub fn verdict(self, a: &Thfe, b: &Thfe) -> OrderVerdict {
        let leq = self.leq(a, b);
        OrderVerdict {
            leq,
            strict: leq && a != b,
        }
    }

    pub fn compare(self, a: &Thfe, b: &Thfe) -> Comparison {
        Comparison::from_flags(self.leq(a, b), self.leq(b, a))
    }

    pub fn compare_interval(
        self,
        a: &IntervalUnionHfe,
        b: &IntervalUnionHfe,
    ) -> Result<Comparison> {
        Ok(Comparison::from_flags(
            self.leq_interval(a, b)?,
            self.leq_interval(b, a)?,
        ))
    }

    pub fn supports_intervals(self) -> bool {
        matches!(
            self,
            OrderKind::Right | OrderKind::Left | OrderKind::Symmetric
        )
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Product => "prod",
            OrderKind::List => "list",
            OrderKind::Pessimistic => "pes",
            OrderKind::Optimistic => "opt",
            OrderKind::Right => "right",
            OrderKind::Left => "left",
            OrderKind::Symmetric => "sym",
        })
    }
}

impl FromStr for OrderKind {
    type Err = HfeError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "prod" | "product" => OrderKind::Product,
            "list" => OrderKind::List,
            "pes" | "pessimistic" => OrderKind::Pessimistic,
            "opt" | "optimistic" => OrderKind::Optimistic,
            "right" => OrderKind::Right,
            "left" => OrderKind::Left,
            "sym" | "symmetric" => OrderKind::Symmetric,
            _ => return Err(HfeError::parse(s, "unknown order")),
        })
    }
}

/// Result of testing `a ≼ b`; `strict` means `a ≺ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderVerdict {
    pub leq: bool,
    pub strict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Leq,
    Geq,
    Equal,
    Incomparable,
}

impl Comparison {
    fn from_flags(leq: bool, geq: bool) -> Self {
        match (leq, geq) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Leq,
            (false, true) => Comparison::Geq,
            (false, false) => Comparison::Incomparable,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Leq => "leq",
            Comparison::Geq => "geq",
            Comparison::Equal => "equal",
            Comparison::Incomparable => "incomparable",
        })
    }
}

/// Componentwise comparison of equal-length tuples.
pub fn leq_prod(x: &[Grade], y: &[Grade]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(HfeError::Arity(format!(
            "product order compares tuples of equal length, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(leq_prod_unchecked(x, y))
}

fn leq_prod_unchecked(x: &[Grade], y: &[Grade]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

fn check_extension_length(a: &Thfe, n: usize) -> Result<()> {
    if n < a.cardinality() {
        return Err(HfeError::Arity(format!(
            "cannot extend a set of {} grades to length {n}",
            a.cardinality()
        )));
    }
    Ok(())
}

/// `A₍ₙ₎`: left-pads the canonical tuple with its minimum up to length `n`.
pub fn pessimistic_extension(a: &Thfe, n: usize) -> Result<Vec<Grade>> {
    check_extension_length(a, n)?;
    let mut out = vec![a.inf(); n - a.cardinality()];
    out.extend_from_slice(a.grades());
    Ok(out)
}

/// `A⁽ⁿ⁾`: right-pads the canonical tuple with its maximum up to length `n`.
pub fn optimistic_extension(a: &Thfe, n: usize) -> Result<Vec<Grade>> {
    check_extension_length(a, n)?;
    let mut out = a.grades().to_vec();
    out.resize(n, a.sup());
    Ok(out)
}

/// `A = {0}`, or `B = {1}`, or equal cardinalities with `A* ≤_prod B*`.
pub fn leq_list(a: &Thfe, b: &Thfe) -> bool {
    a.is_singleton_of(Grade::ZERO)
        || b.is_singleton_of(Grade::ONE)
        || (a.cardinality() == b.cardinality() && leq_prod_unchecked(a.grades(), b.grades()))
}

/// Pessimistic order: both tuples padded with their minimum to `max(#A, #B)`.
pub fn leq_pes(a: &Thfe, b: &Thfe) -> bool {
    leq_pes_at(a, b, a.cardinality().max(b.cardinality()))
}

/// Optimistic order: both tuples padded with their maximum to `max(#A, #B)`.
pub fn leq_opt(a: &Thfe, b: &Thfe) -> bool {
    leq_opt_at(a, b, a.cardinality().max(b.cardinality()))
}

/// `A₍ₖ₎ ≤_prod B₍ₖ₎` for an explicit `k ≥ max(#A, #B)`.
pub fn leq_pes_at(a: &Thfe, b: &Thfe, k: usize) -> bool {
    match (pessimistic_extension(a, k), pessimistic_extension(b, k)) {
        (Ok(x), Ok(y)) => leq_prod_unchecked(&x, &y),
        _ => false,
    }
}

/// `A⁽ᵏ⁾ ≤_prod B⁽ᵏ⁾` for an explicit `k ≥ max(#A, #B)`.
pub fn leq_opt_at(a: &Thfe, b: &Thfe, k: usize) -> bool {
    match (optimistic_extension(a, k), optimistic_extension(b, k)) {
        (Ok(x), Ok(y)) => leq_prod_unchecked(&x, &y),
        _ => false,
    }
}

/// The right, left and symmetric orders.
pub trait SetOrders {
    /// `A⁺ ≤ B⁺` and `A < B ∖ A`.
    fn leq_right(&self, other: &Self) -> bool;
    /// `A⁻ ≤ B⁻` and `A ∖ B < B`.
    fn leq_left(&self, other: &Self) -> bool;
    /// `A < B ∖ A` and `A ∖ B < B`.
    fn leq_symmetric(&self, other: &Self) -> bool;
    /// `A ∩ B = ∅` and `A < B`, or `A ∖ B < A ∩ B < B ∖ A`.
    fn leq_symmetric_via_partition(&self, other: &Self) -> bool;
}

// The finite versions scan the sorted tuples without building the differences.
impl SetOrders for Thfe {
    fn leq_right(&self, other: &Self) -> bool {
        self.sup() <= other.sup() && below_new_elements(self, other)
    }

    fn leq_left(&self, other: &Self) -> bool {
        self.inf() <= other.inf() && dropped_elements_below(self, other)
    }

    fn leq_symmetric(&self, other: &Self) -> bool {
        below_new_elements(self, other) && dropped_elements_below(self, other)
    }

    fn leq_symmetric_via_partition(&self, other: &Self) -> bool {
        let common = self.intersection(other);
        match common {
            None => strictly_below_finite(Some(self), Some(other)),
            Some(ref c) => {
                strictly_below_finite(self.difference(other).as_ref(), Some(c))
                    && strictly_below_finite(Some(c), other.difference(self).as_ref())
            }
        }
    }
}

/// `A < B ∖ A`: every element of `B` outside `A` exceeds `A⁺`.
fn below_new_elements(a: &Thfe, b: &Thfe) -> bool {
    let top = a.sup();
    b.grades().iter().all(|x| *x > top || a.contains(x))
}

/// `A ∖ B < B`: every element of `A` outside `B` is below `B⁻`.
fn dropped_elements_below(a: &Thfe, b: &Thfe) -> bool {
    let bottom = b.inf();
    a.grades().iter().all(|x| *x < bottom || b.contains(x))
}

impl SetOrders for IntervalUnionHfe {
    fn leq_right(&self, other: &Self) -> bool {
        self.sup().value <= other.sup().value
            && strictly_below(Some(self), other.difference(self).as_ref())
    }

    fn leq_left(&self, other: &Self) -> bool {
        self.inf().value <= other.inf().value
            && strictly_below(self.difference(other).as_ref(), Some(other))
    }

    fn leq_symmetric(&self, other: &Self) -> bool {
        strictly_below(Some(self), other.difference(self).as_ref())
            && strictly_below(self.difference(other).as_ref(), Some(other))
    }

    fn leq_symmetric_via_partition(&self, other: &Self) -> bool {
        match self.intersection(other) {
            None => strictly_below(Some(self), Some(other)),
            Some(ref c) => {
                strictly_below(self.difference(other).as_ref(), Some(c))
                    && strictly_below(Some(c), other.difference(self).as_ref())
            }
        }
    }
}

/// The two sets used to show the pessimistic order has no infima.
pub fn non_lattice_pair() -> (Thfe, Thfe) {
    (crate::thfe![0.1, 0.4, 0.5, 0.7], crate::thfe![0.3, 0.6])
}

/// The seed lower bound `{0.1, 0.2, 0.3, 0.6}`.
pub fn non_lattice_seed() -> Thfe {
    crate::thfe![0.1, 0.2, 0.3, 0.6]
}

/// Given a common `≤_pes` lower bound `X` (with `#X ≥ 4`) of `{0.1,0.4,0.5,0.7}`
/// and `{0.3,0.6}`, returns a strictly larger common lower bound by replacing
/// `x_{k-2}` with `(x_{k-2} + x_{k-1}) / 2`.
pub fn ex1_next_lower_bound(x: &Thfe) -> Result<Thfe> {
    let (a, b) = non_lattice_pair();
    let k = x.cardinality();
    if k < 4 {
        return Err(HfeError::Witness(format!("{x} has fewer than four grades")));
    }
    if !(leq_pes(x, &a) && leq_pes(x, &b)) {
        return Err(HfeError::Witness(format!(
            "{x} is not a common lower bound of {a} and {b}"
        )));
    }
    let mut grades = x.grades().to_vec();
    grades[k - 3] = grades[k - 3]
        .midpoint(&grades[k - 2])
        .ok_or_else(|| HfeError::Witness("midpoint overflows 64-bit fractions".into()))?;
    let y = Thfe::from_sorted(grades);
    if !(leq_pes(&y, &a) && leq_pes(&y, &b) && leq_pes(x, &y) && *x != y) {
        return Err(HfeError::Witness(format!(
            "{y} is not a strictly larger common lower bound"
        )));
    }
    Ok(y)
}
