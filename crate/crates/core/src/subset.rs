//! Ground sets and fixed-width subsets.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set. Subsets are packed into a single `u64`.
pub const MAX_POINTS: usize = 64;

/// A finite, nonempty set of labelled points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Points labelled `0..size`.
    pub fn new(size: usize) -> Result<Self> {
        Self::with_labels((0..size).map(|i| i.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidGround("ground set must contain at least one point".into()));
        }
        if labels.len() > MAX_POINTS {
            return Err(Error::InvalidGround(format!(
                "{} points exceeds the supported maximum of {MAX_POINTS}",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(Error::InvalidGround("empty point label".into()));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGround(format!("duplicate point label '{l}'")));
            }
        }
        Ok(GroundSet { labels })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.size())
    }

    /// Renders a subset as `{a, b}` in ground order.
    pub fn render(&self, s: &Subset) -> String {
        let names: Vec<&str> = s.points().map(|p| self.label(p)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Subset from a list of labels.
    pub fn subset_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = self.empty();
        for l in labels {
            let l = l.as_ref();
            let p = self.index_of(l).ok_or_else(|| Error::UnknownPoint(l.to_string()))?;
            s = s.with(p);
        }
        Ok(s)
    }
}

/// A subset of a ground set of `width` points, bit `i` set iff point `i` is a member.
///
/// Ordering is by (cardinality, numeric value of the bit vector), which is the
/// canonical order used for every stored family.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    width: u8,
}

impl Subset {
    fn mask(width: usize) -> u64 {
        if width >= 64 {
            u64::MAX
        } else {
            (1u64 << width) - 1
        }
    }

    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_POINTS);
        Subset { bits: 0, width: width as u8 }
    }

    pub fn full(width: usize) -> Self {
        assert!(width <= MAX_POINTS);
        Subset { bits: Self::mask(width), width: width as u8 }
    }

    pub fn singleton(width: usize, point: usize) -> Self {
        Self::empty(width).with(point)
    }

    /// Builds a subset from raw bits; bits beyond `width` are rejected.
    pub fn from_bits(width: usize, bits: u64) -> Result<Self> {
        if width > MAX_POINTS {
            return Err(Error::InputShape(format!("width {width} exceeds {MAX_POINTS}")));
        }
        if bits & !Self::mask(width) != 0 {
            return Err(Error::InputShape(format!("bit pattern {bits:#b} does not fit in width {width}")));
        }
        Ok(Subset { bits, width: width as u8 })
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(width: usize, points: I) -> Self {
        points.into_iter().fold(Self::empty(width), |s, p| s.with(p))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[must_use]
    pub fn with(self, point: usize) -> Self {
        assert!(point < self.width(), "point {point} outside width {}", self.width);
        Subset { bits: self.bits | (1 << point), ..self }
    }

    pub fn contains(&self, point: usize) -> bool {
        point < self.width() && self.bits >> point & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == Self::mask(self.width())
    }

    pub fn complement(&self) -> Self {
        Subset { bits: !self.bits & Self::mask(self.width()), ..*self }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Subset { bits: self.bits | other.bits, ..*self }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Subset { bits: self.bits & other.bits, ..*self }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Subset { bits: self.bits & !other.bits, ..*self }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn meets(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    /// Lowest point, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn points(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.width()).filter(move |&i| bits >> i & 1 == 1)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.width, self.bits.count_ones(), self.bits).cmp(&(other.width, other.bits.count_ones(), other.bits))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", pts.join(","))
    }
}

/// Union of a family; empty family gives the empty set.
pub fn union_all<'a, I: IntoIterator<Item = &'a Subset>>(width: usize, family: I) -> Subset {
    family.into_iter().fold(Subset::empty(width), |acc, s| acc.union(s))
}

/// Intersection of a family; empty family gives the full set.
pub fn intersection_all<'a, I: IntoIterator<Item = &'a Subset>>(width: usize, family: I) -> Subset {
    family.into_iter().fold(Subset::full(width), |acc, s| acc.intersection(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_by_size_then_value() {
        let a = Subset::from_points(3, [2]);
        let b = Subset::from_points(3, [0, 1]);
        let c = Subset::from_points(3, [0]);
        let mut v = vec![b, a, c, Subset::empty(3)];
        v.sort();
        assert_eq!(v, vec![Subset::empty(3), c, a, b]);
    }

    #[test]
    fn complement_stays_in_width() {
        let s = Subset::from_points(5, [1, 3]);
        assert_eq!(s.complement().bits(), 0b10101);
        assert_eq!(Subset::full(64).complement(), Subset::empty(64));
    }

    #[test]
    fn from_bits_rejects_overflow() {
        assert!(Subset::from_bits(2, 0b100).is_err());
        assert!(Subset::from_bits(3, 0b100).is_ok());
    }

    #[test]
    fn ground_rejects_duplicates_and_empty() {
        assert!(GroundSet::with_labels(vec!["a".into(), "a".into()]).is_err());
        assert!(GroundSet::with_labels(vec![]).is_err());
        assert!(GroundSet::new(65).is_err());
        let g = GroundSet::with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let s = g.subset_of_labels(&["c", "a"]).unwrap();
        assert_eq!(g.render(&s), "{a, c}");
        assert!(matches!(g.subset_of_labels(&["z"]), Err(Error::UnknownPoint(_))));
    }
}
