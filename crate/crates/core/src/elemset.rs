use std::fmt;

/// Maximum ground-set size of a matroid.
pub const MAX_GROUND: usize = 128;

/// A subset of a matroid ground set `{0, ..., m-1}`, `m <= 128`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_GROUND);
        if m == MAX_GROUND {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << m) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElemSet(1u128 << i)
    }

    pub fn from_bits(bits: u128) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | 1u128 << i)
    }

    pub fn without(self, i: usize) -> Self {
        ElemSet(self.0 & !(1u128 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        ElemSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        ElemSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        ElemSet(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// Orders by size, then lexicographically by increasing element lists.
    pub fn size_lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElemSet::EMPTY, ElemSet::with)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: ElemSet = [0, 3, 127].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(127));
        assert_eq!(a.iter().collect::<Vec<_>>(), [0, 3, 127]);
        assert_eq!(a.without(3).len(), 2);
        assert_eq!(ElemSet::full(128).len(), 128);
        assert_eq!(ElemSet::full(5).difference(a), [1, 2, 4].into_iter().collect());
        assert_eq!(a.min(), Some(0));
        assert_eq!(ElemSet::EMPTY.min(), None);
    }

    #[test]
    fn size_then_lex() {
        let mut v: Vec<ElemSet> =
            vec![[1, 2].into_iter().collect(), [0].into_iter().collect(), [0, 5].into_iter().collect()];
        v.sort_by(ElemSet::size_lex_cmp);
        assert_eq!(v[0], ElemSet::singleton(0));
        assert_eq!(v[1], [0, 5].into_iter().collect());
    }
}
