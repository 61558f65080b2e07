//! Normative properties of scores and their link to the symmetric order.
//!
//! The sample checkers are falsifiers: a report that holds only says no
//! counterexample was found. [`closed_family_equivalence_suite`] instead
//! evaluates every property on the whole family of nonempty subsets of a small
//! grid, a family closed under unions and differences, so the verdicts there
//! are exact for that family.
//!
//! No score can satisfy [SMU] once every subinterval of `[0, 1]` is in its
//! domain (strictly increasing rationals would have to be chosen for every
//! real). That is a non-existence statement and nothing here tries to check it.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{HfeError, Result};
use crate::exact::half;
use crate::grade::Grade;
use crate::grid::Grid;
use crate::interval::IntervalUnionHfe;
use crate::orders::SetOrders;
use crate::scores::{Score, ScoreValue};
use crate::thfe::{strictly_below_finite, Thfe};

/// Largest grid [`closed_family_equivalence_suite`] will enumerate.
pub const FAMILY_MAX_POINTS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropertyKind {
    /// Strong monotonicity with respect to unions.
    Smu,
    /// Weak monotonicity with respect to unions.
    Wmu,
    /// Gärdenfors property.
    G,
    /// Weak Gärdenfors property.
    Wg,
    /// Extremes monotonicity of interval scores.
    Em,
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PropertyKind::Smu => "SMU",
            PropertyKind::Wmu => "WMU",
            PropertyKind::G => "G",
            PropertyKind::Wg => "WG",
            PropertyKind::Em => "EM",
        })
    }
}

impl FromStr for PropertyKind {
    type Err = HfeError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "smu" => Ok(PropertyKind::Smu),
            "wmu" => Ok(PropertyKind::Wmu),
            "g" => Ok(PropertyKind::G),
            "wg" => Ok(PropertyKind::Wg),
            "em" => Ok(PropertyKind::Em),
            _ => Err(HfeError::parse(s, "unknown property")),
        }
    }
}

/// The instance that broke a property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// `X < Y` with the union chain violated.
    Pair(Thfe, Thfe),
    /// `A` and the grade `x` added to it.
    Insertion(Thfe, Grade),
    /// Two intervals in an [EM] configuration with non-increasing scores.
    Intervals(ClosedInterval, ClosedInterval),
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Pair(x, y) => write!(f, "X={x} Y={y}"),
            Counterexample::Insertion(a, x) => write!(f, "A={a} x={x}"),
            Counterexample::Intervals(p, q) => write!(f, "{p} vs {q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: PropertyKind,
    pub holds_on_sample: bool,
    pub counterexample: Option<Counterexample>,
    /// Instances whose hypothesis applied and were evaluated.
    pub checked: usize,
}

impl PropertyReport {
    fn new(property: PropertyKind, counterexample: Option<Counterexample>, checked: usize) -> Self {
        PropertyReport {
            property,
            holds_on_sample: counterexample.is_none(),
            counterexample,
            checked,
        }
    }
}

fn union_chain<S: Score + ?Sized>(s: &S, x: &Thfe, y: &Thfe, strict: bool) -> bool {
    let (sx, sxy, sy) = (s.score(x), s.score(&x.union(y)), s.score(y));
    if strict {
        sx.lt(&sxy) && sxy.lt(&sy)
    } else {
        sx.le(&sxy) && sxy.le(&sy)
    }
}

fn check_unions<S: Score + ?Sized>(
    s: &S,
    sample: &[(Thfe, Thfe)],
    property: PropertyKind,
) -> Result<PropertyReport> {
    let strict = property == PropertyKind::Smu;
    let mut counterexample = None;
    for (x, y) in sample {
        if !strictly_below_finite(Some(x), Some(y)) {
            return Err(HfeError::Sample(format!("{x} < {y} does not hold")));
        }
        if counterexample.is_none() && !union_chain(s, x, y, strict) {
            counterexample = Some(Counterexample::Pair(x.clone(), y.clone()));
        }
    }
    Ok(PropertyReport::new(property, counterexample, sample.len()))
}

/// `s(X) < s(X ∪ Y) < s(Y)` on every sampled `X < Y`.
pub fn check_smu<S: Score + ?Sized>(s: &S, sample: &[(Thfe, Thfe)]) -> Result<PropertyReport> {
    check_unions(s, sample, PropertyKind::Smu)
}

/// `s(X) ≤ s(X ∪ Y) ≤ s(Y)` on every sampled `X < Y`.
pub fn check_wmu<S: Score + ?Sized>(s: &S, sample: &[(Thfe, Thfe)]) -> Result<PropertyReport> {
    check_unions(s, sample, PropertyKind::Wmu)
}

/// `Some(holds)` when `x` lies outside `[A⁻, A⁺]`, `None` when neither
/// implication fires.
fn gardenfors_instance<S: Score + ?Sized>(s: &S, a: &Thfe, x: Grade, strict: bool) -> Option<bool> {
    let (low, high) = if x < a.inf() {
        (a.with(x), a.clone())
    } else if x > a.sup() {
        (a.clone(), a.with(x))
    } else {
        return None;
    };
    let (sl, sh) = (s.score(&low), s.score(&high));
    Some(if strict { sl.lt(&sh) } else { sl.le(&sh) })
}

/// [G] when `strict`, [WG] otherwise. Instances with `x` between `A⁻` and
/// `A⁺` pass vacuously; since `x ∉ A` is part of the property's quantifier,
/// instances with `x ∈ A` are vacuous too.
pub fn check_gardenfors<S: Score + ?Sized>(
    s: &S,
    sample: &[(Thfe, Grade)],
    strict: bool,
) -> PropertyReport {
    let property = if strict {
        PropertyKind::G
    } else {
        PropertyKind::Wg
    };
    let mut counterexample = None;
    let mut checked = 0;
    for (a, x) in sample {
        if a.contains(x) {
            continue;
        }
        if let Some(holds) = gardenfors_instance(s, a, *x, strict) {
            checked += 1;
            if !holds && counterexample.is_none() {
                counterexample = Some(Counterexample::Insertion(a.clone(), *x));
            }
        }
    }
    PropertyReport::new(property, counterexample, checked)
}

/// A closed interval `[lo, hi]` with `lo ≤ hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosedInterval {
    lo: Grade,
    hi: Grade,
}

impl ClosedInterval {
    pub fn new(lo: Grade, hi: Grade) -> Result<Self> {
        if lo > hi {
            return Err(HfeError::InvalidPiece(format!("[{lo}, {hi}] has lo > hi")));
        }
        Ok(ClosedInterval { lo, hi })
    }

    pub fn lo(&self) -> Grade {
        self.lo
    }

    pub fn hi(&self) -> Grade {
        self.hi
    }

    pub fn to_hfe(&self) -> IntervalUnionHfe {
        if self.lo == self.hi {
            IntervalUnionHfe::point(self.lo)
        } else {
            IntervalUnionHfe::closed_interval(self.lo, self.hi).expect("lo < hi")
        }
    }

    /// `[a, b] ≤ [c, d]` endpoint-wise, which is how the symmetric order
    /// restricts to closed intervals.
    pub fn endpoint_leq(&self, other: &ClosedInterval) -> bool {
        self.lo <= other.lo && self.hi <= other.hi
    }
}

impl fmt::Display for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub trait IntervalScore {
    fn score(&self, i: &ClosedInterval) -> ScoreValue;
}

impl<F> IntervalScore for F
where
    F: Fn(&ClosedInterval) -> ScoreValue,
{
    fn score(&self, i: &ClosedInterval) -> ScoreValue {
        self(i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalScoreKind {
    Midpoint,
    LeftEndpoint,
    RightEndpoint,
}

impl IntervalScore for IntervalScoreKind {
    fn score(&self, i: &ClosedInterval) -> ScoreValue {
        ScoreValue::Exact(match self {
            IntervalScoreKind::Midpoint => (i.lo.to_big() + i.hi.to_big()) * half(),
            IntervalScoreKind::LeftEndpoint => i.lo.to_big(),
            IntervalScoreKind::RightEndpoint => i.hi.to_big(),
        })
    }
}

impl FromStr for IntervalScoreKind {
    type Err = HfeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "midpoint" | "mid" => Ok(IntervalScoreKind::Midpoint),
            "left" | "lo" => Ok(IntervalScoreKind::LeftEndpoint),
            "right" | "hi" => Ok(IntervalScoreKind::RightEndpoint),
            _ => Err(HfeError::parse(s, "unknown interval score")),
        }
    }
}

/// [EM] on sampled pairs, trying both orientations. A pair is checked under
/// [EM1] when the left endpoints agree and under [EM2] when the right ones
/// do; other pairs are skipped.
pub fn check_em<S: IntervalScore + ?Sized>(
    s: &S,
    pairs: &[(ClosedInterval, ClosedInterval)],
) -> PropertyReport {
    let mut counterexample = None;
    let mut checked = 0;
    for (p, q) in pairs {
        for (lo, hi) in [(p, q), (q, p)] {
            let em1 = lo.lo == hi.lo && lo.hi < hi.hi;
            let em2 = lo.hi == hi.hi && lo.lo < hi.lo;
            if !(em1 || em2) {
                continue;
            }
            checked += 1;
            if !s.score(lo).lt(&s.score(hi)) && counterexample.is_none() {
                counterexample = Some(Counterexample::Intervals(*lo, *hi));
            }
        }
    }
    PropertyReport::new(PropertyKind::Em, counterexample, checked)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalScoreReport {
    pub is_score: bool,
    pub is_strong: bool,
    pub counterexample: Option<(ClosedInterval, ClosedInterval)>,
    pub comparable_pairs: usize,
}

/// `≤⁰`-score and strong `≤⁰`-score conditions for an interval score, with
/// the order evaluated through the interval-union set algebra.
pub fn check_interval_score_symmetric<S: IntervalScore + ?Sized>(
    s: &S,
    pairs: &[(ClosedInterval, ClosedInterval)],
) -> IntervalScoreReport {
    let mut weak = None;
    let mut strict = None;
    let mut comparable_pairs = 0;
    for (p, q) in pairs {
        let (hp, hq) = (p.to_hfe(), q.to_hfe());
        for ((lo, hlo), (hi, hhi)) in [((p, &hp), (q, &hq)), ((q, &hq), (p, &hp))] {
            if !hlo.leq_symmetric(hhi) {
                continue;
            }
            comparable_pairs += 1;
            let (sl, sh) = (s.score(lo), s.score(hi));
            if !sl.le(&sh) && weak.is_none() {
                weak = Some((*lo, *hi));
            }
            if lo != hi && !sl.lt(&sh) && strict.is_none() {
                strict = Some((*lo, *hi));
            }
        }
    }
    IntervalScoreReport {
        is_score: weak.is_none(),
        is_strong: weak.is_none() && strict.is_none(),
        counterexample: weak.or(strict),
        comparable_pairs,
    }
}

fn strictly_symmetric_below(a: &Thfe, b: &Thfe) -> bool {
    a != b && a.leq_symmetric(b)
}

/// For disjoint `X`, `Y`: the four predicates `X < Y`, `X <⁰ Y`,
/// `X <⁰ X ∪ Y` and `X ∪ Y <⁰ Y`, which always agree. `None` if the sets meet.
pub fn disjoint_union_predicates(x: &Thfe, y: &Thfe) -> Option<[bool; 4]> {
    if x.intersection(y).is_some() {
        return None;
    }
    let xy = x.union(y);
    Some([
        strictly_below_finite(Some(x), Some(y)),
        strictly_symmetric_below(x, y),
        strictly_symmetric_below(x, &xy),
        strictly_symmetric_below(&xy, y),
    ])
}

/// Verdicts of every property on the full subset family of a grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub family_size: usize,
    pub wmu: bool,
    pub monotone: bool,
    pub wg: bool,
    pub smu: bool,
    pub strictly_monotone: bool,
    pub g: bool,
}

impl EquivalenceReport {
    /// `[WMU] ⟺ ≤⁰-score ⟺ [WG]`.
    pub fn weak_consistent(&self) -> bool {
        self.wmu == self.monotone && self.monotone == self.wg
    }

    /// `[SMU] ⟺ strong ≤⁰-score ⟺ [G]`.
    pub fn strong_consistent(&self) -> bool {
        self.smu == self.strictly_monotone && self.strictly_monotone == self.g
    }

    pub fn consistent(&self) -> bool {
        self.weak_consistent() && self.strong_consistent()
    }

    /// `[SMU] ⇒ [WMU]`, `[SMU] ⇒ [G]` and `[WMU] ⇒ [WG]`.
    pub fn implications_hold(&self) -> bool {
        (!self.smu || self.wmu) && (!self.smu || self.g) && (!self.wmu || self.wg)
    }

    pub fn verdict(&self, property: PropertyKind) -> Option<bool> {
        match property {
            PropertyKind::Smu => Some(self.smu),
            PropertyKind::Wmu => Some(self.wmu),
            PropertyKind::G => Some(self.g),
            PropertyKind::Wg => Some(self.wg),
            PropertyKind::Em => None,
        }
    }
}

/// Folds a per-subset check over masks `1..=full` into `(weak holds, strict holds)`.
fn all_masks<F>(full: usize, f: F) -> (bool, bool)
where
    F: Fn(usize) -> (bool, bool) + Sync + Send,
{
    (1..=full)
        .into_par_iter()
        .map(f)
        .reduce(|| (true, true), |a, b| (a.0 && b.0, a.1 && b.1))
}

fn weak_strict(lo: &ScoreValue, hi: &ScoreValue) -> (bool, bool) {
    (lo.le(hi), lo.lt(hi))
}

/// Evaluates [WMU], `≤⁰`-monotonicity, [WG], [SMU], strict
/// `≤⁰`-monotonicity and [G] on every nonempty subset of `universe`.
pub fn closed_family_equivalence_suite<S: Score + Sync + ?Sized>(
    s: &S,
    universe: &Grid,
) -> Result<EquivalenceReport> {
    let n = universe.len();
    if n > FAMILY_MAX_POINTS {
        return Err(HfeError::OracleBudget(format!(
            "universe has {n} points, limit is {FAMILY_MAX_POINTS}"
        )));
    }
    if n == 0 {
        return Err(HfeError::Sample("empty universe".into()));
    }
    // family[mask - 1] is the subset selected by `mask`.
    let family = universe.nonempty_subsets();
    let scores: Vec<ScoreValue> = family.par_iter().map(|a| s.score(a)).collect();
    let full = (1usize << n) - 1;
    let at = |mask: usize| &scores[mask - 1];
    let top_bit = |mask: usize| usize::BITS - 1 - mask.leading_zeros();
    let low_bit = |mask: usize| mask.trailing_zeros();

    let (wmu, smu) = all_masks(full, |x| {
        let mut verdict = (true, true);
        for y in 1..=full {
            if low_bit(y) <= top_bit(x) {
                continue;
            }
            let (sx, sxy, sy) = (at(x), at(x | y), at(y));
            verdict.0 &= sx.le(sxy) && sxy.le(sy);
            verdict.1 &= sx.lt(sxy) && sxy.lt(sy);
        }
        verdict
    });

    let (monotone, strictly_monotone) = all_masks(full, |a| {
        let mut verdict = (true, true);
        for b in 1..=full {
            if a == b || !family[a - 1].leq_symmetric(&family[b - 1]) {
                continue;
            }
            let (w, st) = weak_strict(at(a), at(b));
            verdict.0 &= w;
            verdict.1 &= st;
        }
        verdict
    });

    let (wg, g) = all_masks(full, |a| {
        let mut verdict = (true, true);
        for i in 0..n {
            let bit = 1 << i;
            if a & bit != 0 {
                continue;
            }
            let with = a | bit;
            let (lo, hi) = if i < low_bit(a) as usize {
                (with, a)
            } else if i > top_bit(a) as usize {
                (a, with)
            } else {
                continue;
            };
            let (w, st) = weak_strict(at(lo), at(hi));
            verdict.0 &= w;
            verdict.1 &= st;
        }
        verdict
    });

    Ok(EquivalenceReport {
        family_size: family.len(),
        wmu,
        monotone,
        wg,
        smu,
        strictly_monotone,
        g,
    })
}

/// The constant-`1/2` score, weakly but not strictly monotone everywhere.
pub fn half_score(_: &Thfe) -> ScoreValue {
    ScoreValue::Exact(half())
}

/// `1 − s(A)`, useful for building order-reversing counterexamples.
pub fn reversed<S: Score + Sync>(s: S) -> impl Fn(&Thfe) -> ScoreValue + Sync {
    move |a| match s.score(a) {
        ScoreValue::Exact(v) => ScoreValue::Exact(BigRational::one() - v),
        ScoreValue::Approx(v) => ScoreValue::Approx(1.0 - v),
    }
}
