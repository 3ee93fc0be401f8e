use super::VertexSet;
use crate::error::{Error, Result};

/// A duplicate-free collection of vertex sets in canonical order.
///
/// Families are values: every operation returns a new family.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Family {
    sets: Vec<VertexSet>,
    rank: Option<usize>,
}

impl Family {
    /// Sorts and deduplicates; `uniform_size` is inferred when the family is
    /// non-empty and all members have one size.
    pub fn new<I: IntoIterator<Item = VertexSet>>(sets: I) -> Self {
        let sets = canonical(sets);
        let rank = sets.first().map(|s| s.len()).filter(|&r| sets.iter().all(|s| s.len() == r));
        Family { sets, rank }
    }

    /// A family whose members must all have exactly `r` elements. An empty
    /// family keeps `r` as its size.
    pub fn uniform<I: IntoIterator<Item = VertexSet>>(r: usize, sets: I) -> Result<Self> {
        let sets = canonical(sets);
        if sets.iter().any(|s| s.len() != r) {
            return Err(Error::NotUniform);
        }
        Ok(Family { sets, rank: Some(r) })
    }

    pub fn empty(rank: Option<usize>) -> Self {
        Family { sets: Vec::new(), rank }
    }

    pub(crate) fn from_sorted(sets: Vec<VertexSet>, rank: Option<usize>) -> Self {
        debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(rank.map_or(true, |r| sets.iter().all(|s| s.len() == r)));
        Family { sets, rank }
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, VertexSet>> {
        self.sets.iter().copied()
    }

    pub fn uniform_size(&self) -> Option<usize> {
        self.rank
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &Family) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// True iff every two members share an element.
    pub fn is_intersecting(&self) -> bool {
        self.disjoint_pair().is_none()
    }

    /// Some pair of members (possibly a set with itself when it is ∅) that
    /// do not intersect.
    pub fn disjoint_pair(&self) -> Option<(VertexSet, VertexSet)> {
        if self.sets.len() < 2 {
            return None;
        }
        for (i, &a) in self.sets.iter().enumerate() {
            if let Some(&b) = self.sets[i + 1..].iter().find(|&&b| !a.intersects(b)) {
                return Some((a, b));
            }
        }
        None
    }

    /// Members containing `x`.
    pub fn star(&self, x: usize) -> Family {
        self.filter(|s| s.contains(x))
    }

    pub fn filter(&self, keep: impl Fn(VertexSet) -> bool) -> Family {
        Family { sets: self.iter().filter(|&s| keep(s)).collect(), rank: self.rank }
    }

    /// Image under a set map. Size can shrink when the map is not injective,
    /// and the uniform size is re-inferred.
    pub fn map(&self, f: impl Fn(VertexSet) -> VertexSet) -> Family {
        Family::new(self.iter().map(f))
    }

    pub fn union(&self, other: &Family) -> Family {
        let rank = if self.is_empty() {
            other.rank
        } else if other.is_empty() || self.rank == other.rank {
            self.rank
        } else {
            None
        };
        Family { sets: canonical(self.iter().chain(other.iter())), rank }
    }

    pub fn intersection(&self, other: &Family) -> Family {
        self.filter(|s| other.contains(s))
    }

    /// `{A \ {x} : A ∈ F}`.
    pub fn remove_vertex(&self, x: usize) -> Family {
        let mut out = self.map(|s| s.without(x));
        if out.is_empty() {
            out.rank = self.rank.map(|r| r.saturating_sub(1));
        }
        out
    }

    /// `{A ∪ {x} : A ∈ F}`.
    pub fn add_vertex(&self, x: usize) -> Family {
        let mut out = self.map(|s| s.with(x));
        if out.is_empty() {
            out.rank = self.rank.map(|r| r + 1);
        }
        out
    }

    /// `∂F`: every (r-1)-subset of a member. Needs a uniform family with r ≥ 1.
    pub fn shadow(&self) -> Result<Family> {
        let r = match self.rank {
            Some(r) if r >= 1 => r,
            _ => return Err(Error::NotUniform),
        };
        let sets = self.iter().flat_map(|s| s.iter().map(move |x| s.without(x)));
        Ok(Family { sets: canonical(sets), rank: Some(r - 1) })
    }
}

fn canonical<I: IntoIterator<Item = VertexSet>>(sets: I) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = sets.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

impl std::fmt::Debug for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.sets.iter()).finish()
    }
}

impl FromIterator<VertexSet> for Family {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        Family::new(iter)
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = VertexSet;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexSet>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}
