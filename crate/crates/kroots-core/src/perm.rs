//! Permutations of `{1..n}` in one-line notation, with descent statistics
//! and block-unimodality tests.
//!
//! The public interface is 1-indexed throughout: `image(i)` is the value at
//! position `i` of the one-line word. Storage is 0-indexed internally.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{factorial, Partition, PrefixMarkers};

/// Hard upper bound for full enumeration of the symmetric group.
pub const MAX_ENUM_N: usize = 12;

/// A permutation of `{1..n}` stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // map[i] = image of position i, both 0-indexed
    map: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of `{1..n}`. Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations act on at least one point");
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Builds a permutation from its one-line word with 1-indexed values,
    /// e.g. `[5,3,6,8,7,1,4,2]`.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &v in word {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "word {word:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v - 1] = true;
            map.push(v - 1);
        }
        Ok(Permutation { map })
    }

    pub(crate) fn from_zero_indexed(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; map.len()];
            map.iter().all(|&v| {
                v < map.len() && {
                    let ok = !seen[v];
                    seen[v] = true;
                    ok
                }
            })
        });
        Permutation { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of position `i` (1-indexed in and out).
    pub fn image(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    /// The one-line word with 1-indexed values.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Functional composition: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        let map = other.map.iter().map(|&v| self.map[v]).collect();
        Ok(Permutation { map })
    }

    /// `k`-fold composition of `self` with itself; `power(0)` is the identity.
    pub fn power(&self, k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.n());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base).expect("same size");
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base).expect("same size");
            }
        }
        acc
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// Disjoint cycles, each rotated so its smallest element comes first,
    /// sorted by length descending then by smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.map[cur];
            }
            cycles.push(cycle);
        }
        cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        cycles
    }

    /// Cycle type as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let lengths: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        Partition::new(lengths).expect("cycle lengths are sorted descending")
    }

    /// Positions `i` with `image(i) > image(i+1)`.
    pub fn descent_set(&self) -> DescentSet {
        let mut mask = 0u32;
        for i in 1..self.n() {
            if self.map[i - 1] > self.map[i] {
                mask |= 1 << (i - 1);
            }
        }
        DescentSet { mask, n: self.n() }
    }

    /// Whether the values on each block of positions cut out by the partial
    /// sums of `mu` strictly decrease and then strictly increase (either run
    /// possibly empty).
    pub fn is_mu_unimodal(&self, mu: &Partition) -> Result<bool> {
        if mu.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: mu.n(),
            });
        }
        for (lo, hi) in mu.prefix_markers().blocks() {
            let mut j = lo;
            while j < hi && self.map[j - 1] > self.map[j] {
                j += 1;
            }
            while j < hi {
                if self.map[j - 1] > self.map[j] {
                    return Ok(false);
                }
                j += 1;
            }
        }
        Ok(true)
    }

    /// `|D(self) \ S(mu)|`: the number of descents that do not sit on a
    /// partial sum of `mu`.
    pub fn sign_exponent(&self, mu: &Partition) -> Result<usize> {
        if mu.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: mu.n(),
            });
        }
        Ok(self
            .descent_set()
            .without_markers(&mu.prefix_markers())
            .count())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &v in &self.map {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the comma-separated encoding `"5,3,6,8,7,1,4,2"`, or the
    /// digits-only shorthand `"53687142"` when `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPermutation("empty string".into()));
        }
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(&word)
    }
}

/// A subset of the descent positions `{1..n-1}`, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DescentSet {
    mask: u32,
    n: usize,
}

impl DescentSet {
    pub fn empty(n: usize) -> Self {
        DescentSet { mask: 0, n }
    }

    /// Builds a descent set from 1-indexed positions; each must lie in `1..n`.
    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I, n: usize) -> Result<Self> {
        let mut mask = 0u32;
        for pos in positions {
            if pos == 0 || pos >= n {
                return Err(Error::PositionOutOfRange {
                    pos,
                    max: n.saturating_sub(1),
                });
            }
            mask |= 1 << (pos - 1);
        }
        Ok(DescentSet { mask, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, pos: usize) -> bool {
        pos >= 1 && pos < self.n && self.mask & (1 << (pos - 1)) != 0
    }

    pub fn count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Sorted 1-indexed positions.
    pub fn positions(&self) -> Vec<usize> {
        (1..self.n).filter(|&p| self.contains(p)).collect()
    }

    /// This set minus the positions sitting on a prefix marker.
    pub fn without_markers(&self, markers: &PrefixMarkers) -> DescentSet {
        let mut mask = self.mask;
        for &m in markers.marks() {
            if m >= 1 && m < self.n {
                mask &= !(1 << (m - 1));
            }
        }
        DescentSet { mask, n: self.n }
    }

    /// All `2^(n-1)` subsets of `{1..n-1}`, in increasing bitmask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = DescentSet> {
        assert!(n >= 1 && n <= MAX_ENUM_N);
        (0u32..(1 << (n - 1))).map(move |mask| DescentSet { mask, n })
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in 1..self.n {
            if self.contains(p) {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Streams all `n!` permutations of `{1..n}` in lexicographic order of the
/// one-line word. Errors if `n == 0` or `n` exceeds [`MAX_ENUM_N`].
pub fn symmetric_group(n: usize) -> Result<SymmetricGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > MAX_ENUM_N {
        return Err(Error::CapExceeded { n, cap: MAX_ENUM_N });
    }
    Ok(SymmetricGroup {
        next: Some((0..n).collect()),
    })
}

pub struct SymmetricGroup {
    next: Option<Vec<usize>>,
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut word = cur.clone();
        if next_lex_word(&mut word) {
            self.next = Some(word);
        }
        Some(Permutation { map: cur })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match &self.next {
            Some(w) => (1, Some(factorial(w.len()) as usize)),
            None => (0, Some(0)),
        }
    }
}

// Standard in-place next-permutation; returns false after the last word.
fn next_lex_word(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
