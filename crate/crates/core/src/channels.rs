//! Channel sets as single-word bitmasks.

use std::fmt;

/// Largest channel universe representable by [`ChannelSet`].
pub const MAX_CHANNELS: usize = 62;

/// Index of a channel in the universe `0..k`.
pub type Channel = usize;

/// A set of channels stored as a bitmask. Bit `c` is set iff channel `c` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ChannelSet(u64);

impl ChannelSet {
    pub const EMPTY: ChannelSet = ChannelSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ChannelSet(bits)
    }

    /// All channels `0..k`.
    pub fn full(k: usize) -> Self {
        assert!(k <= MAX_CHANNELS, "channel universe {k} exceeds {MAX_CHANNELS}");
        ChannelSet(if k == 0 { 0 } else { (1u64 << k) - 1 })
    }

    pub fn single(c: Channel) -> Self {
        assert!(c < MAX_CHANNELS);
        ChannelSet(1u64 << c)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, c: Channel) -> bool {
        c < 64 && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: Channel) {
        assert!(c < MAX_CHANNELS);
        self.0 |= 1u64 << c;
    }

    pub fn union(self, other: ChannelSet) -> ChannelSet {
        ChannelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ChannelSet) -> ChannelSet {
        ChannelSet(self.0 & other.0)
    }

    pub fn intersects(self, other: ChannelSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: ChannelSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<Channel> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Highest channel id plus one (0 for the empty set).
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Every subset of `self`, in ascending bitmask order (including `∅` and `self`).
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// Subsets with `1 <= |S| <= max_len`, ascending by bitmask.
    pub fn nonempty_subsets_up_to(self, max_len: usize) -> impl Iterator<Item = ChannelSet> {
        self.subsets()
            .filter(move |s| !s.is_empty() && s.len() <= max_len)
    }
}

impl FromIterator<Channel> for ChannelSet {
    fn from_iter<I: IntoIterator<Item = Channel>>(iter: I) -> Self {
        let mut set = ChannelSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

impl fmt::Debug for ChannelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the members of a [`ChannelSet`], ascending.
pub struct Members(u64);

impl Iterator for Members {
    type Item = Channel;

    fn next(&mut self) -> Option<Channel> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(c)
    }
}

/// Ascending enumeration of the subsets of a bitmask.
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ChannelSet;

    fn next(&mut self) -> Option<ChannelSet> {
        let cur = self.next?;
        // (cur - universe) & universe is the next larger submask.
        self.next = if cur == self.universe {
            None
        } else {
            Some(cur.wrapping_sub(self.universe) & self.universe)
        };
        Some(ChannelSet(cur))
    }
}
