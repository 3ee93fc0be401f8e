use std::fmt;

/// Most vertices any graph may have; sets are a single machine word.
pub const MAX_VERTICES: usize = 64;

/// A set of global vertex indices below [`MAX_VERTICES`].
///
/// Ordering compares the underlying bit pattern as an integer, which is the
/// canonical order of members inside a [`Family`](super::Family).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn prefix(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && (self.0 >> v) & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        if v >= MAX_VERTICES {
            return self;
        }
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

/// Family line format: ascending indices joined by commas, empty string for ∅.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s: VertexSet = [5, 0, 63, 7].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 5, 7, 63]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(63));
    }

    #[test]
    fn display_is_line_format() {
        let s: VertexSet = [3, 1].into_iter().collect();
        assert_eq!(s.to_string(), "1,3");
        assert_eq!(VertexSet::EMPTY.to_string(), "");
        assert_eq!(format!("{s:?}"), "{1,3}");
    }

    #[test]
    fn prefix_sets() {
        assert_eq!(VertexSet::prefix(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::prefix(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(VertexSet::prefix(64).len(), 64);
    }
}
