//! Finite unions of points and intervals in `[0, 1]`.
//!
//! Pieces are kept sorted, disjoint and non-adjacent, so two unions denoting
//! the same point set have identical representations. Set operations that can
//! produce the empty set return `Option`, with `None` standing for `∅`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{HfeError, Result};
use crate::grade::Grade;
use crate::thfe::Thfe;

/// A point `{a}` (when `lo == hi`, both ends closed) or a proper interval.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Piece {
    lo: Grade,
    hi: Grade,
    lo_closed: bool,
    hi_closed: bool,
}

impl Piece {
    pub fn point(at: Grade) -> Self {
        Piece {
            lo: at,
            hi: at,
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// A proper interval; `lo` must be strictly below `hi`.
    pub fn interval(lo: Grade, hi: Grade, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo >= hi {
            return Err(HfeError::InvalidPiece(format!(
                "lower endpoint {lo} must be below upper endpoint {hi}"
            )));
        }
        Ok(Piece {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn closed(lo: Grade, hi: Grade) -> Result<Self> {
        if lo == hi {
            Ok(Piece::point(lo))
        } else {
            Piece::interval(lo, hi, true, true)
        }
    }

    pub fn lo(&self) -> Grade {
        self.lo
    }

    pub fn hi(&self) -> Grade {
        self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: Grade) -> bool {
        let above = x > self.lo || (x == self.lo && self.lo_closed);
        let below = x < self.hi || (x == self.hi && self.hi_closed);
        above && below
    }

    /// Builds a piece from raw endpoints, `None` if they describe the empty set.
    fn from_bounds(lo: Grade, lo_closed: bool, hi: Grade, hi_closed: bool) -> Option<Piece> {
        match lo.cmp(&hi) {
            Ordering::Less => Some(Piece {
                lo,
                hi,
                lo_closed,
                hi_closed,
            }),
            Ordering::Equal if lo_closed && hi_closed => Some(Piece::point(lo)),
            _ => None,
        }
    }

    /// Orders lower endpoints by where the piece starts: `[a` before `(a`.
    fn lower_key(&self) -> (Grade, bool) {
        (self.lo, !self.lo_closed)
    }

    /// Orders upper endpoints by where the piece ends: `a)` before `a]`.
    fn upper_key(&self) -> (Grade, bool) {
        (self.hi, self.hi_closed)
    }

    fn intersect(&self, other: &Piece) -> Option<Piece> {
        let start = if self.lower_key() >= other.lower_key() {
            self
        } else {
            other
        };
        let end = if self.upper_key() <= other.upper_key() {
            self
        } else {
            other
        };
        Piece::from_bounds(start.lo, start.lo_closed, end.hi, end.hi_closed)
    }

    fn reflect(&self) -> Piece {
        Piece {
            lo: self.hi.complement(),
            hi: self.lo.complement(),
            lo_closed: self.hi_closed,
            hi_closed: self.lo_closed,
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)
        } else {
            let open = if self.lo_closed { '[' } else { '(' };
            let close = if self.hi_closed { ']' } else { ')' };
            write!(f, "{open}{}, {}{close}", self.lo, self.hi)
        }
    }
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An infimum or supremum, with whether the set contains it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: Grade,
    pub attained: bool,
}

/// A nonempty finite union of disjoint points and intervals in `[0, 1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntervalUnionHfe {
    pieces: Vec<Piece>,
}

impl IntervalUnionHfe {
    /// Canonicalizes arbitrary (possibly overlapping) pieces.
    pub fn new(pieces: impl IntoIterator<Item = Piece>) -> Result<Self> {
        Self::from_pieces(pieces).ok_or(HfeError::EmptyHfe)
    }

    pub fn point(at: Grade) -> Self {
        IntervalUnionHfe {
            pieces: vec![Piece::point(at)],
        }
    }

    pub fn closed_interval(lo: Grade, hi: Grade) -> Result<Self> {
        Ok(IntervalUnionHfe {
            pieces: vec![Piece::closed(lo, hi)?],
        })
    }

    fn from_pieces(pieces: impl IntoIterator<Item = Piece>) -> Option<Self> {
        let mut pieces: Vec<Piece> = pieces.into_iter().collect();
        pieces.sort_by_key(Piece::lower_key);
        let mut merged: Vec<Piece> = Vec::with_capacity(pieces.len());
        for p in pieces {
            match merged.last_mut() {
                Some(cur)
                    if p.lo < cur.hi || (p.lo == cur.hi && (p.lo_closed || cur.hi_closed)) =>
                {
                    if p.upper_key() > cur.upper_key() {
                        cur.hi = p.hi;
                        cur.hi_closed = p.hi_closed;
                    }
                }
                _ => merged.push(p),
            }
        }
        (!merged.is_empty()).then_some(IntervalUnionHfe { pieces: merged })
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn inf(&self) -> Bound {
        let first = &self.pieces[0];
        Bound {
            value: first.lo,
            attained: first.lo_closed,
        }
    }

    pub fn sup(&self) -> Bound {
        let last = &self.pieces[self.pieces.len() - 1];
        Bound {
            value: last.hi,
            attained: last.hi_closed,
        }
    }

    pub fn contains(&self, x: Grade) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    /// True when every piece is a point, i.e. the set is finite.
    pub fn to_thfe(&self) -> Option<Thfe> {
        self.pieces
            .iter()
            .all(Piece::is_point)
            .then(|| Thfe::from_sorted(self.pieces.iter().map(|p| p.lo).collect()))
    }

    /// `1 - A`.
    pub fn complement(&self) -> Self {
        IntervalUnionHfe {
            pieces: self.pieces.iter().rev().map(Piece::reflect).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_pieces(self.pieces.iter().chain(other.pieces.iter()).copied())
            .expect("union of nonempty sets is nonempty")
    }

    pub fn intersection(&self, other: &Self) -> Option<Self> {
        intersect_lists(&self.pieces, &other.pieces)
    }

    pub fn difference(&self, other: &Self) -> Option<Self> {
        let outside = gaps_in_unit(&other.pieces);
        intersect_lists(&self.pieces, &outside)
    }
}

fn intersect_lists(a: &[Piece], b: &[Piece]) -> Option<IntervalUnionHfe> {
    let pieces = a
        .iter()
        .flat_map(|p| b.iter().filter_map(move |q| p.intersect(q)));
    IntervalUnionHfe::from_pieces(pieces)
}

/// `[0, 1]` minus the union of the sorted, disjoint `pieces`.
fn gaps_in_unit(pieces: &[Piece]) -> Vec<Piece> {
    let mut gaps = Vec::with_capacity(pieces.len() + 1);
    let (mut start, mut start_closed) = (Grade::ZERO, true);
    for p in pieces {
        gaps.extend(Piece::from_bounds(start, start_closed, p.lo, !p.lo_closed));
        start = p.hi;
        start_closed = !p.hi_closed;
    }
    gaps.extend(Piece::from_bounds(start, start_closed, Grade::ONE, true));
    gaps
}

/// `X < Y`: every element of `X` lies strictly below every element of `Y`.
///
/// Vacuously true when either side is empty. Otherwise `X⁺ < Y⁻`, or the two
/// bounds coincide and at most one of the sets contains that value.
pub fn strictly_below(x: Option<&IntervalUnionHfe>, y: Option<&IntervalUnionHfe>) -> bool {
    let (Some(x), Some(y)) = (x, y) else {
        return true;
    };
    let (top, bottom) = (x.sup(), y.inf());
    top.value < bottom.value || (top.value == bottom.value && !(top.attained && bottom.attained))
}

impl From<&Thfe> for IntervalUnionHfe {
    fn from(a: &Thfe) -> Self {
        IntervalUnionHfe {
            pieces: a.grades().iter().map(|&g| Piece::point(g)).collect(),
        }
    }
}

impl fmt::Display for IntervalUnionHfe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntervalUnionHfe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON form of one piece: `{"point": a}` or `{"lo", "hi", "lo_closed", "hi_closed"}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPiece {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    point: Option<Grade>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lo: Option<Grade>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hi: Option<Grade>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lo_closed: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hi_closed: Option<bool>,
}

impl RawPiece {
    fn into_piece(self) -> Result<Piece> {
        match self {
            RawPiece {
                point: Some(at),
                lo: None,
                hi: None,
                lo_closed: None,
                hi_closed: None,
            } => Ok(Piece::point(at)),
            RawPiece {
                point: None,
                lo: Some(lo),
                hi: Some(hi),
                lo_closed,
                hi_closed,
            } => {
                let (lc, hc) = (lo_closed.unwrap_or(true), hi_closed.unwrap_or(true));
                if lo == hi && lc && hc {
                    Ok(Piece::point(lo))
                } else {
                    Piece::interval(lo, hi, lc, hc)
                }
            }
            _ => Err(HfeError::InvalidPiece(
                "expected either \"point\" or both \"lo\" and \"hi\"".into(),
            )),
        }
    }
}

impl From<&Piece> for RawPiece {
    fn from(p: &Piece) -> Self {
        if p.is_point() {
            RawPiece {
                point: Some(p.lo),
                lo: None,
                hi: None,
                lo_closed: None,
                hi_closed: None,
            }
        } else {
            RawPiece {
                point: None,
                lo: Some(p.lo),
                hi: Some(p.hi),
                lo_closed: Some(p.lo_closed),
                hi_closed: Some(p.hi_closed),
            }
        }
    }
}

impl Serialize for IntervalUnionHfe {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.pieces.iter().map(RawPiece::from))
    }
}

impl<'de> Deserialize<'de> for IntervalUnionHfe {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let raw = Vec::<RawPiece>::deserialize(deserializer)?;
        let pieces = raw
            .into_iter()
            .map(RawPiece::into_piece)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        IntervalUnionHfe::new(pieces).map_err(D::Error::custom)
    }
}
