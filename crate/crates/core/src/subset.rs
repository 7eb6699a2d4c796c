//! Fixed-width subsets of a finite carrier `{0, .., n-1}`.

use std::fmt;

/// Largest carrier size supported by [`Subset`]; every subset fits in one `u16`.
pub const ORDER_CAP: usize = 16;

/// A subset of the carrier `{0, .., ORDER_CAP-1}` stored as a bitmask.
///
/// Bit `i` is set iff element `i` belongs to the set. The ordering derived
/// from the mask value is the order used for lexicographic witnesses and
/// canonical forms.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u16) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    /// `{x}`. Panics if `x >= ORDER_CAP`.
    #[inline]
    pub const fn singleton(x: usize) -> Self {
        assert!(x < ORDER_CAP, "element index exceeds ORDER_CAP");
        Subset(1 << x)
    }

    /// `{0, .., order-1}`.
    #[inline]
    pub const fn full(order: usize) -> Self {
        assert!(order <= ORDER_CAP, "order exceeds ORDER_CAP");
        if order == ORDER_CAP {
            Subset(u16::MAX)
        } else {
            Subset(((1u32 << order) - 1) as u16)
        }
    }

    /// Builds a subset from element indices. Returns `None` if any index is
    /// at or beyond `ORDER_CAP`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Option<Self> {
        let mut bits = 0u16;
        for x in elements {
            if x >= ORDER_CAP {
                return None;
            }
            bits |= 1 << x;
        }
        Some(Subset(bits))
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        x < ORDER_CAP && self.0 & (1 << x) != 0
    }

    #[inline]
    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// True iff every set bit is below `order`.
    #[inline]
    pub const fn fits_order(self, order: usize) -> bool {
        self.is_subset_of(Subset::full(order))
    }

    /// Largest element, if any.
    pub const fn max_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(15 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in ascending order.
    #[inline]
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Every nonempty subset of `{0, .., order-1}`, in ascending mask order.
    pub fn all_nonempty(order: usize) -> impl DoubleEndedIterator<Item = Subset> + Clone {
        let top = Subset::full(order).0 as u32;
        (1..=top).map(|b| Subset(b as u16))
    }

    /// Image of this subset under an element relabeling `perm[x]`.
    pub fn relabel(self, perm: &[usize]) -> Subset {
        let mut bits = 0u16;
        for x in self.iter() {
            bits |= 1 << perm[x];
        }
        Subset(bits)
    }
}

/// Iterator over the elements of a [`Subset`].
#[derive(Clone)]
pub struct Elements(u16);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl FromIterator<usize> for Subset {
    /// Panics on indices at or beyond `ORDER_CAP`; use [`Subset::from_elements`]
    /// for untrusted input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter).expect("element index exceeds ORDER_CAP")
    }
}

impl std::ops::BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl std::ops::BitOrAssign for Subset {
    fn bitor_assign(&mut self, rhs: Subset) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
