use std::fmt;

use super::{Label, MAX_LABEL};

/// A set of edge labels, stored as a bitmask where bit `l - 1` stands for label `l`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        EdgeSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Panics if a label is outside `1..=MAX_LABEL`.
    pub fn from_labels<I: IntoIterator<Item = Label>>(labels: I) -> Self {
        let mut set = EdgeSet::EMPTY;
        for l in labels {
            set.insert(l);
        }
        set
    }

    fn bit(label: Label) -> u64 {
        assert!(
            (1..=MAX_LABEL).contains(&label),
            "edge label {label} outside 1..={MAX_LABEL}"
        );
        1u64 << (label - 1)
    }

    pub fn contains(self, label: Label) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    pub fn insert(&mut self, label: Label) {
        self.0 |= Self::bit(label);
    }

    pub fn remove(&mut self, label: Label) {
        self.0 &= !Self::bit(label);
    }

    pub fn toggle(&mut self, label: Label) {
        self.0 ^= Self::bit(label);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = Label> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let tz = bits.trailing_zeros();
            bits &= bits - 1;
            Some(tz + 1)
        })
    }

    /// The subset of `self` selected by `mask`, where bit `i` of `mask` picks the
    /// `i`-th smallest label of `self`.
    pub fn select(self, mask: u64) -> EdgeSet {
        let mut out = 0u64;
        for (i, l) in self.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out |= 1u64 << (l - 1);
            }
        }
        EdgeSet(out)
    }
}

impl FromIterator<Label> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        EdgeSet::from_labels(iter)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_ascending() {
        let s = EdgeSet::from_labels([7, 1, 64, 3]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 7, 64]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_string(), "{1,3,7,64}");
    }

    #[test]
    fn select_picks_by_rank() {
        let s = EdgeSet::from_labels([2, 5, 9]);
        assert_eq!(s.select(0b101), EdgeSet::from_labels([2, 9]));
        assert_eq!(s.select(0), EdgeSet::EMPTY);
    }

    #[test]
    fn contains_out_of_range_is_false() {
        let s = EdgeSet::from_labels([1]);
        assert!(!s.contains(0));
        assert!(!s.contains(65));
    }
}
