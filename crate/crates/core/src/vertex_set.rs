use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the vertices `0..universe`.
///
/// Equality, ordering and hashing take the universe size into account, so
/// sets meant to be compared should be built over the same graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        Self { bits: FixedBitSet::with_capacity(universe) }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set, growing the universe if a member does not fit.
    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::new(universe);
        for v in vertices {
            if v >= set.universe() {
                set.bits.grow(v + 1);
            }
            set.bits.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe() {
            self.bits.remove(v);
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.bits.maximum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    /// Complement relative to the universe.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.universe());
        out.difference_with(self);
        out
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Comma-separated ascending members, e.g. `0,2,5`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let mut a = VertexSet::from_vertices(6, [0, 2, 4]);
        let b = VertexSet::from_vertices(6, [2, 3]);
        assert_eq!(a.intersection_count(&b), 1);
        assert!(!a.is_disjoint(&b));
        a.difference_with(&b);
        assert_eq!(a.to_vec(), vec![0, 4]);
        assert_eq!(a.complement().to_vec(), vec![1, 2, 3, 5]);
        a.union_with(&b);
        assert_eq!(a.to_string(), "0,2,3,4");
        assert_eq!(a.max_vertex(), Some(4));
    }

    #[test]
    fn from_vertices_grows_universe() {
        let s = VertexSet::from_vertices(2, [5]);
        assert_eq!(s.universe(), 6);
        assert!(s.contains(5));
        assert!(!s.contains(100));
    }

    #[test]
    fn empty_display() {
        assert_eq!(VertexSet::new(3).to_string(), "");
        assert!(VertexSet::new(0).is_empty());
    }
}
