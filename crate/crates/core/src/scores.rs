//! Score functions and the order-relative score contract.
//!
//! A map `s` into `[0, 1]` is a `≼`-score when `A ≼ B` implies `s(A) ≤ s(B)`,
//! and a strong `≼`-score when `A ≺ B` implies `s(A) < s(B)`. The checkers in
//! this module are falsifiers over finite samples: `is_score == true` only
//! means no counterexample was found in the sample.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{HfeError, Result};
use crate::grade::Grade;
use crate::orders::OrderKind;
use crate::thfe::Thfe;

/// Absolute tolerance used whenever a floating-point score is compared.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// A score value. Rational aggregations stay exact; the geometric mean is a float.
#[derive(Clone, Debug, PartialEq)]
pub enum ScoreValue {
    Exact(BigRational),
    Approx(f64),
}

impl ScoreValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ScoreValue::Exact(v) => v.to_f64().unwrap_or(f64::NAN),
            ScoreValue::Approx(v) => *v,
        }
    }

    /// Exact when both sides are exact, otherwise equal within [`FLOAT_TOLERANCE`].
    pub fn compare(&self, other: &ScoreValue) -> Ordering {
        match (self, other) {
            (ScoreValue::Exact(a), ScoreValue::Exact(b)) => a.cmp(b),
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                if (a - b).abs() <= FLOAT_TOLERANCE {
                    Ordering::Equal
                } else {
                    a.total_cmp(&b)
                }
            }
        }
    }

    pub fn le(&self, other: &ScoreValue) -> bool {
        self.compare(other) != Ordering::Greater
    }

    pub fn lt(&self, other: &ScoreValue) -> bool {
        self.compare(other) == Ordering::Less
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            ScoreValue::Exact(v) => Some(v),
            ScoreValue::Approx(_) => None,
        }
    }
}

impl From<BigRational> for ScoreValue {
    fn from(v: BigRational) -> Self {
        ScoreValue::Exact(v)
    }
}

impl From<Grade> for ScoreValue {
    fn from(g: Grade) -> Self {
        ScoreValue::Exact(g.to_big())
    }
}

impl fmt::Display for ScoreValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScoreValue::Exact(v) => write!(f, "{v}"),
            ScoreValue::Approx(v) => write!(f, "{v}"),
        }
    }
}

/// Anything that maps a finite HFE to a score.
pub trait Score {
    fn score(&self, a: &Thfe) -> ScoreValue;
}

impl<F> Score for F
where
    F: Fn(&Thfe) -> ScoreValue,
{
    fn score(&self, a: &Thfe) -> ScoreValue {
        self(a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScoreKind {
    ArithmeticMean,
    GeometricMean,
    Min,
    Max,
    Product,
}

impl ScoreKind {
    pub const ALL: [ScoreKind; 5] = [
        ScoreKind::ArithmeticMean,
        ScoreKind::GeometricMean,
        ScoreKind::Min,
        ScoreKind::Max,
        ScoreKind::Product,
    ];
}

impl Score for ScoreKind {
    fn score(&self, a: &Thfe) -> ScoreValue {
        score(*self, a)
    }
}

/// Evaluates a built-in score on `a`.
pub fn score(kind: ScoreKind, a: &Thfe) -> ScoreValue {
    match kind {
        ScoreKind::ArithmeticMean => ScoreValue::Exact(a.mean_big()),
        ScoreKind::GeometricMean => ScoreValue::Approx(geometric_mean(a)),
        ScoreKind::Min => a.inf().into(),
        ScoreKind::Max => a.sup().into(),
        ScoreKind::Product => ScoreValue::Exact(
            a.grades()
                .iter()
                .map(Grade::to_big)
                .fold(BigRational::one(), |acc, g| acc * g),
        ),
    }
}

fn geometric_mean(a: &Thfe) -> f64 {
    if a.inf().is_zero() {
        return 0.0;
    }
    let log_sum: f64 = a.grades().iter().map(|g| g.to_f64().ln()).sum();
    (log_sum / a.cardinality() as f64).exp()
}

impl fmt::Display for ScoreKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScoreKind::ArithmeticMean => "mean",
            ScoreKind::GeometricMean => "gmean",
            ScoreKind::Min => "min",
            ScoreKind::Max => "max",
            ScoreKind::Product => "product",
        })
    }
}

impl FromStr for ScoreKind {
    type Err = HfeError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "mean" | "arithmetic" => ScoreKind::ArithmeticMean,
            "gmean" | "geometric" => ScoreKind::GeometricMean,
            "min" => ScoreKind::Min,
            "max" => ScoreKind::Max,
            "product" | "prod" => ScoreKind::Product,
            _ => return Err(HfeError::parse(s, "unknown score kind")),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScoreReport {
    pub order: OrderKind,
    pub is_score: bool,
    pub is_strong: bool,
    /// First pair `(A, B)` with `A ≼ B` breaking monotonicity, or, if none,
    /// the first pair `A ≺ B` breaking strict monotonicity.
    pub counterexample: Option<(Thfe, Thfe)>,
    /// Number of ordered comparable pairs inspected.
    pub comparable_pairs: usize,
}

/// Tests the `≼`-score and strong `≼`-score conditions on every comparable
/// pair of the sample (both directions of each pair are considered).
pub fn check_score_wrt<S: Score + ?Sized>(
    s: &S,
    order: OrderKind,
    sample: &[(Thfe, Thfe)],
) -> ScoreReport {
    let mut weak_violation = None;
    let mut strict_violation = None;
    let mut comparable_pairs = 0;
    for (a, b) in sample {
        for (x, y) in [(a, b), (b, a)] {
            if !order.leq(x, y) {
                continue;
            }
            comparable_pairs += 1;
            let (sx, sy) = (s.score(x), s.score(y));
            if !sx.le(&sy) && weak_violation.is_none() {
                weak_violation = Some((x.clone(), y.clone()));
            }
            if x != y && !sx.lt(&sy) && strict_violation.is_none() {
                strict_violation = Some((x.clone(), y.clone()));
            }
        }
    }
    let is_score = weak_violation.is_none();
    ScoreReport {
        order,
        is_score,
        is_strong: is_score && strict_violation.is_none(),
        counterexample: weak_violation.or(strict_violation),
        comparable_pairs,
    }
}

/// `E⁻ ≤ s(E) ≤ E⁺` on every sampled set.
pub fn check_boundedness<S: Score + ?Sized>(s: &S, sample: &[Thfe]) -> bool {
    sample.iter().all(|e| {
        let v = s.score(e);
        ScoreValue::from(e.inf()).le(&v) && v.le(&ScoreValue::from(e.sup()))
    })
}

/// `s({a}) = a` for every sampled grade.
pub fn check_compatibility<S: Score + ?Sized>(s: &S, grades: &[Grade]) -> bool {
    grades
        .iter()
        .all(|g| s.score(&Thfe::singleton(*g)).compare(&ScoreValue::from(*g)) == Ordering::Equal)
}

/// The constant score, handy as a degenerate example.
pub fn constant_score(value: BigRational) -> impl Fn(&Thfe) -> ScoreValue + Sync {
    move |_| ScoreValue::Exact(value.clone())
}

/// `s(A) = 0` for every `A`.
pub fn zero_score(_: &Thfe) -> ScoreValue {
    ScoreValue::Exact(BigRational::zero())
}
