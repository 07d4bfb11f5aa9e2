use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::structure::{Elem, MAX_ORDER};

/// A set of elements of a structure with at most [`MAX_ORDER`] elements,
/// stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(u32);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 32 {
            ElemSet(u32::MAX)
        } else {
            ElemSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(a: Elem) -> Self {
        ElemSet(1 << a)
    }

    pub fn from_bits(bits: u32) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, a: Elem) -> bool {
        self.0 >> a & 1 == 1
    }

    pub fn insert(&mut self, a: Elem) -> bool {
        let fresh = !self.contains(a);
        self.0 |= 1 << a;
        fresh
    }

    pub fn remove(&mut self, a: Elem) {
        self.0 &= !(1 << a);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Elem> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let a = bits.trailing_zeros() as Elem;
                bits &= bits - 1;
                Some(a)
            }
        })
    }

    pub fn min(self) -> Option<Elem> {
        self.iter().next()
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let elems = Vec::<Elem>::deserialize(d)?;
        if let Some(&bad) = elems.iter().find(|&&a| a >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("element {bad} out of range")));
        }
        Ok(elems.into_iter().collect())
    }
}
