use std::fmt;

/// A set of edge colors, stored as a bitmask. Ranks up to 32 are supported,
/// which is far beyond anything a flag-graph computation can enumerate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn empty() -> Self {
        ColorSet(0)
    }

    /// All colors `0..rank`.
    pub fn full(rank: usize) -> Self {
        debug_assert!(rank <= 32);
        if rank == 32 {
            ColorSet(u32::MAX)
        } else {
            ColorSet((1u32 << rank) - 1)
        }
    }

    /// The inclusive interval `lo..=hi`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        let mut s = ColorSet(0);
        let mut i = lo;
        while i <= hi {
            s = s.with(i);
            i += 1;
        }
        s
    }

    pub fn single(i: usize) -> Self {
        ColorSet(0).with(i)
    }

    pub fn from_slice(colors: &[usize]) -> Self {
        colors.iter().fold(ColorSet(0), |s, &i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        debug_assert!(i < 32);
        ColorSet(self.0 | (1 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        ColorSet(self.0 & !(1 << i))
    }

    pub fn complement(self, rank: usize) -> Self {
        ColorSet(Self::full(rank).0 & !self.0)
    }

    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> Self {
        ColorSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Proper subset of the colors of a rank-`rank` premaniplex.
    pub fn is_proper(self, rank: usize) -> bool {
        self.is_subset(Self::full(rank)) && self != Self::full(rank)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// Shift every color down by one, dropping color 0. Matches the color
    /// relabeling of a section that starts at ambient color 1.
    #[must_use]
    pub fn shift_down(self) -> Self {
        ColorSet(self.0 >> 1)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

// Debug delegates to Display; a raw bitmask is unreadable in test output.
impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_and_complement() {
        let s = ColorSet::interval(1, 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(s.complement(5).iter().collect::<Vec<_>>(), vec![0, 4]);
        assert!(ColorSet::interval(2, 1).is_empty());
        assert!(s.is_proper(5));
        assert!(!ColorSet::full(4).is_proper(4));
    }

    #[test]
    fn shift_down_drops_color_zero() {
        let s = ColorSet::from_slice(&[0, 2, 3]);
        assert_eq!(s.shift_down().iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn display() {
        assert_eq!(ColorSet::from_slice(&[0, 3]).to_string(), "{0,3}");
        assert_eq!(ColorSet::empty().to_string(), "{}");
    }
}
