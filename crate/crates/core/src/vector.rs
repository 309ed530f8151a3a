//! Small fixed-capacity integer vectors and index subsets.
//!
//! Everything in this crate lives in rank at most [`MAX_RANK`], so coordinate
//! vectors are stored inline and are `Copy`.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// Largest supported rank of a finite root system.
pub const MAX_RANK: usize = 8;

/// Integer coefficient vector over a basis of simple roots (or simple coroots).
///
/// Entries past the rank of the ambient system are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootVec(pub(crate) [i32; MAX_RANK]);

impl RootVec {
    pub const ZERO: RootVec = RootVec([0; MAX_RANK]);

    pub fn unit(i: usize) -> Self {
        let mut v = Self::ZERO;
        v.0[i] = 1;
        v
    }

    /// Builds a vector from a coefficient slice; panics if it is longer than [`MAX_RANK`].
    pub fn from_slice(coeffs: &[i32]) -> Self {
        assert!(
            coeffs.len() <= MAX_RANK,
            "rank {} exceeds MAX_RANK",
            coeffs.len()
        );
        let mut v = Self::ZERO;
        v.0[..coeffs.len()].copy_from_slice(coeffs);
        v
    }

    #[inline]
    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: i32) {
        self.0[i] = value;
    }

    pub fn coords(&self, rank: usize) -> &[i32] {
        &self.0[..rank]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with every coefficient nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// Nonzero with every coefficient nonpositive.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// Sum of the coefficients.
    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Indices with a nonzero coefficient.
    pub fn support(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for (i, &c) in self.0.iter().enumerate() {
            if c != 0 {
                s.insert(i);
            }
        }
        s
    }

    pub fn scale(&self, k: i32) -> Self {
        let mut v = *self;
        v.0.iter_mut().for_each(|c| *c *= k);
        v
    }

    /// `self + k * other`
    pub fn add_scaled(&self, k: i32, other: &RootVec) -> Self {
        let mut v = *self;
        for i in 0..MAX_RANK {
            v.0[i] += k * other.0[i];
        }
        v
    }

    /// Formats as `a1+a1+2a2` style with 1-based indices.
    pub fn to_root_string(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("a{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&c| c != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_root_string())
    }
}

impl Add for RootVec {
    type Output = RootVec;
    fn add(self, rhs: RootVec) -> RootVec {
        self.add_scaled(1, &rhs)
    }
}

impl AddAssign for RootVec {
    fn add_assign(&mut self, rhs: RootVec) {
        *self = *self + rhs;
    }
}

impl Sub for RootVec {
    type Output = RootVec;
    fn sub(self, rhs: RootVec) -> RootVec {
        self.add_scaled(-1, &rhs)
    }
}

impl SubAssign for RootVec {
    fn sub_assign(&mut self, rhs: RootVec) {
        *self = *self - rhs;
    }
}

impl Neg for RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        self.scale(-1)
    }
}

/// A subset of the index set `{0, .., MAX_RANK-1}`, stored as a bitmask.
///
/// Indices are 0-based internally; [`fmt::Display`] and the JSON layer use
/// 1-based labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u16);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(rank: usize) -> Self {
        Subset(((1u32 << rank) - 1) as u16)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = Self::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// From 1-based labels; zero labels are rejected by returning `None`.
    pub fn from_labels(labels: &[usize]) -> Option<Self> {
        let mut s = Self::EMPTY;
        for &l in labels {
            if l == 0 || l > MAX_RANK {
                return None;
            }
            s.insert(l - 1);
        }
        Some(s)
    }

    pub fn bits(&self) -> u16 {
        self.0
    }

    pub fn from_bits(bits: u16) -> Self {
        Subset(bits)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_RANK);
        self.0 |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 16 && self.0 & (1 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(&self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(&self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(&self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..16).filter(move |i| bits & (1 << i) != 0)
    }

    /// 1-based labels in increasing order.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(&self) -> Vec<Subset> {
        let mask = self.0;
        let mut out = Vec::with_capacity(1 << self.len());
        let mut sub: u16 = 0;
        loop {
            out.push(Subset(sub));
            if sub == mask {
                break;
            }
            sub = (sub.wrapping_sub(mask)) & mask;
        }
        out.sort();
        out
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}
