//! Integer partitions, their prefix-sum markers, and conjugacy-class sizes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n`: weakly decreasing positive parts.
///
/// The empty partition (of `n = 0`) is allowed; it is the base case of the
/// character recursions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Creates a partition, validating that the parts are weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive: {parts:?}"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// The single-row partition `(n)`.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            return Partition { parts: vec![] };
        }
        Partition { parts: vec![n] }
    }

    /// The all-ones partition `(1, ..., 1)` of `n`.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part multiplicities as `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The strictly increasing partial sums of the parts.
    pub fn prefix_markers(&self) -> PrefixMarkers {
        let mut marks = Vec::with_capacity(self.parts.len());
        let mut acc = 0;
        for &p in &self.parts {
            acc += p;
            marks.push(acc);
        }
        PrefixMarkers { marks }
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// the product over distinct part sizes `i` of `i^{k_i} * k_i!`.
    pub fn centralizer_order(&self) -> u64 {
        self.multiplicities()
            .iter()
            .map(|&(part, mult)| (part as u64).pow(mult as u32) * factorial(mult))
            .product()
    }

    /// Size of the conjugacy class with this cycle type: `n! / z`.
    pub fn class_size(&self) -> u64 {
        factorial(self.n()) / self.centralizer_order()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated encoding, e.g. `"4,3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::InvalidPartition("empty string".into()));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The partial-sum sequence of a partition: strictly increasing marks ending
/// at `n`. Positions in `1..=n` that sit on a mark start a new block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixMarkers {
    marks: Vec<usize>,
}

impl PrefixMarkers {
    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.marks.binary_search(&pos).is_ok()
    }

    /// Inclusive 1-indexed position ranges `(lo, hi)` of the blocks cut out
    /// by the marks: `(1, m1), (m1+1, m2), ...`.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let lows = std::iter::once(0).chain(self.marks.iter().copied());
        lows.zip(self.marks.iter().copied())
            .map(|(prev, hi)| (prev + 1, hi))
    }
}

impl fmt::Display for PrefixMarkers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in &self.marks {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        Ok(())
    }
}

/// `n!` as a `u64`; exact for `n <= 20`.
pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial({n}) overflows u64");
    (1..=n as u64).product()
}

/// Iterator over all partitions of `n`, in descending lexicographic order:
/// `(n), (n-1,1), ..., (1,...,1)`.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { vec![] } else { vec![n] }),
    }
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // Decrement the rightmost part > 1 and re-lay out everything after it
        // in chunks as large as allowed.
        if let Some(i) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur[..i].to_vec();
            let chunk = cur[i] - 1;
            let mut rem = cur[i] + (cur.len() - 1 - i);
            while rem > chunk {
                next.push(chunk);
                rem -= chunk;
            }
            if rem > 0 {
                next.push(rem);
            }
            self.next = Some(next);
        }
        Some(Partition { parts: cur })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent count oracle: p(n) by the classical two-variable recurrence
    // (number of partitions of n with parts <= k).
    fn partition_count_oracle(n: usize) -> u64 {
        fn count(n: usize, max: usize) -> u64 {
            if n == 0 {
                return 1;
            }
            (1..=max.min(n)).map(|k| count(n - k, k)).sum()
        }
        count(n, n)
    }

    #[test]
    fn new_rejects_bad_parts() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert!(Partition::new(vec![3, 2, 1]).is_ok());
    }

    #[test]
    fn partitions_of_one() {
        let all: Vec<_> = partitions_of(1).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].parts(), &[1]);
    }

    #[test]
    fn partitions_of_four_listed() {
        let all: Vec<Vec<usize>> = partitions_of(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1],
            ]
        );
    }

    #[test]
    fn partition_counts_match_recurrence_oracle() {
        for n in 1..=10 {
            let count = partitions_of(n).count() as u64;
            assert_eq!(count, partition_count_oracle(n), "p({n})");
        }
        assert_eq!(partitions_of(7).count(), 15);
    }

    #[test]
    fn partitions_are_distinct_and_valid() {
        for n in 1..=9 {
            let all: Vec<_> = partitions_of(n).collect();
            for p in &all {
                assert_eq!(p.n(), n);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
        }
    }

    #[test]
    fn prefix_markers_paper_example() {
        let mu = Partition::new(vec![4, 3, 1]).unwrap();
        assert_eq!(mu.prefix_markers().marks(), &[4, 7, 8]);
    }

    #[test]
    fn prefix_markers_trivial_cases() {
        assert_eq!(Partition::single_row(5).prefix_markers().marks(), &[5]);
        assert_eq!(Partition::ones(3).prefix_markers().marks(), &[1, 2, 3]);
    }

    #[test]
    fn blocks_cover_positions() {
        let mu = Partition::new(vec![4, 3, 1]).unwrap();
        let blocks: Vec<_> = mu.prefix_markers().blocks().collect();
        assert_eq!(blocks, vec![(1, 4), (5, 7), (8, 8)]);
    }

    #[test]
    fn centralizer_orders_s3() {
        let id3 = Partition::ones(3);
        assert_eq!(id3.centralizer_order(), 6);
        assert_eq!(id3.class_size(), 1);

        let t = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(t.centralizer_order(), 2);
        assert_eq!(t.class_size(), 3);

        let c3 = Partition::single_row(3);
        assert_eq!(c3.centralizer_order(), 3);
        assert_eq!(c3.class_size(), 2);
    }

    #[test]
    fn class_sizes_partition_the_group() {
        for n in 1..=10 {
            let total: u64 = partitions_of(n).map(|p| p.class_size()).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        let mu = Partition::new(vec![4, 3, 1]).unwrap();
        assert_eq!(mu.to_string(), "4,3,1");
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), mu);
        assert!("".parse::<Partition>().is_err());
        assert!("3,4".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }

    #[test]
    fn multiplicities_grouped() {
        let lam = Partition::new(vec![3, 2, 2, 1, 1, 1]).unwrap();
        assert_eq!(lam.multiplicities(), vec![(3, 1), (2, 2), (1, 3)]);
    }
}
