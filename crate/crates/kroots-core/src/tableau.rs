//! Standard Young tableaux with descent statistics.
//!
//! Tableaux are stored base-row-first (French convention): `rows[0]` is the
//! longest, bottom row, and columns increase upward. A descent of a tableau
//! is a position `i` whose successor `i+1` sits in a strictly higher row.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::DescentSet;

/// A standard Young tableau: the entries `1..=n` arranged so that rows
/// increase left-to-right and columns increase bottom-to-top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates and builds a tableau from its rows, base row first.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(lengths)
            .map_err(|_| Error::InvalidParameter(format!("rows {rows:?} do not form a shape")))?;
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n];
        for row in &rows {
            for &e in row {
                if e == 0 || e > n || seen[e - 1] {
                    return Err(Error::InvalidParameter(format!(
                        "entries of {rows:?} are not exactly 1..={n}"
                    )));
                }
                seen[e - 1] = true;
            }
        }
        for (r, row) in rows.iter().enumerate() {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "row {r} of {rows:?} is not increasing"
                )));
            }
            if r > 0 {
                for (c, &e) in row.iter().enumerate() {
                    if e <= rows[r - 1][c] {
                        return Err(Error::InvalidParameter(format!(
                            "column {c} of {rows:?} is not increasing upward"
                        )));
                    }
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("row lengths of a tableau form a partition")
    }

    /// Row index (0 = base) of each entry; `slot[e-1]` is the row of `e`.
    fn row_index(&self) -> Vec<usize> {
        let mut slot = vec![0; self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                slot[e - 1] = r;
            }
        }
        slot
    }

    /// Positions `i` such that `i+1` lies in a strictly higher row than `i`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.n();
        let row_of = self.row_index();
        DescentSet::from_positions(
            (1..n).filter(|&i| row_of[i] > row_of[i - 1]),
            n.max(1),
        )
        .expect("tableau descents lie in 1..n")
    }

    /// Whether the tableau descents, after removing the partial sums of
    /// `mu`, form a prefix run at the start of each block.
    pub fn is_mu_unimodal(&self, mu: &Partition) -> Result<bool> {
        if mu.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: mu.n(),
            });
        }
        let markers = mu.prefix_markers();
        let rest = self.descent_set().without_markers(&markers);
        for (lo, hi) in markers.blocks() {
            let mut p = lo;
            while p < hi && rest.contains(p) {
                p += 1;
            }
            while p < hi {
                if rest.contains(p) {
                    return Ok(false);
                }
                p += 1;
            }
        }
        Ok(true)
    }
}

impl fmt::Display for StandardTableau {
    /// Rows base-first, separated by slashes: `1,3,6 / 2,4 / 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, " / ")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for StandardTableau {
    /// Serializes as a bare JSON array of rows, base row first.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows.len()))?;
        for row in &self.rows {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

/// All standard tableaux of the given shape, in lexicographic order of the
/// sequence (row of 1, row of 2, ..., row of n).
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    let parts = shape.parts().to_vec();
    let n = shape.n();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    fill(1, n, &parts, &mut rows, &mut out);
    out
}

fn fill(
    entry: usize,
    n: usize,
    parts: &[usize],
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if entry > n {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for r in 0..parts.len() {
        let len = rows[r].len();
        // the cell below must already be filled
        if len < parts[r] && (r == 0 || rows[r - 1].len() > len) {
            rows[r].push(entry);
            fill(entry + 1, n, parts, rows, out);
            rows[r].pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{factorial, partitions_of};

    fn partition(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// The tableau with base row (1,3,6), middle row (2,4), top row (5).
    fn t0() -> StandardTableau {
        StandardTableau::new(vec![vec![1, 3, 6], vec![2, 4], vec![5]]).unwrap()
    }

    // Hook-length count, used only as an independent oracle for tableau
    // counts: f = n! / prod(hooks).
    fn hook_length_count(shape: &Partition) -> u64 {
        let parts = shape.parts();
        let col_len = |c: usize| parts.iter().filter(|&&p| p > c).count();
        let mut product: u64 = 1;
        for (r, &len) in parts.iter().enumerate() {
            for c in 0..len {
                let hook = (len - c) + (col_len(c) - r) - 1;
                product *= hook as u64;
            }
        }
        factorial(shape.n()) / product
    }

    #[test]
    fn single_row_has_one_tableau() {
        for n in 1..=6 {
            assert_eq!(enumerate_syt(&Partition::single_row(n)).len(), 1);
        }
    }

    #[test]
    fn two_one_has_two_tableaux_in_lex_order() {
        let tabs = enumerate_syt(&partition("2,1"));
        assert_eq!(tabs.len(), 2);
        assert_eq!(tabs[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(tabs[1].rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn three_three_has_five_tableaux() {
        let tabs = enumerate_syt(&partition("3,3"));
        assert_eq!(tabs.len(), 5);
        assert_eq!(hook_length_count(&partition("3,3")), 5);
    }

    #[test]
    fn counts_match_hook_length_oracle() {
        for n in 1..=7 {
            for shape in partitions_of(n) {
                let tabs = enumerate_syt(&shape);
                assert_eq!(
                    tabs.len() as u64,
                    hook_length_count(&shape),
                    "shape {shape}"
                );
                for t in &tabs {
                    assert_eq!(t.shape(), shape);
                }
            }
        }
    }

    #[test]
    fn enumerated_tableaux_are_distinct() {
        for shape in partitions_of(6) {
            let tabs = enumerate_syt(&shape);
            let mut sorted: Vec<_> = tabs.iter().map(|t| t.rows().to_vec()).collect();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), tabs.len());
        }
    }

    #[test]
    fn square_sum_identity() {
        for n in 1..=7 {
            let total: u64 = partitions_of(n)
                .map(|shape| {
                    let f = enumerate_syt(&shape).len() as u64;
                    f * f
                })
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn descents_of_extreme_shapes() {
        let row = enumerate_syt(&Partition::single_row(5)).remove(0);
        assert!(row.descent_set().is_empty());

        let col = enumerate_syt(&Partition::ones(5)).remove(0);
        assert_eq!(col.descent_set().positions(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn descents_of_paper_tableau() {
        assert_eq!(t0().descent_set().positions(), vec![1, 3, 4]);
    }

    #[test]
    fn paper_tableau_unimodality() {
        assert!(t0().is_mu_unimodal(&partition("3,3")).unwrap());
        assert!(!t0().is_mu_unimodal(&partition("4,2")).unwrap());
    }

    #[test]
    fn ones_partition_makes_every_tableau_unimodal() {
        for shape in partitions_of(6) {
            let ones = Partition::ones(6);
            for t in enumerate_syt(&shape) {
                assert!(t.is_mu_unimodal(&ones).unwrap());
            }
        }
    }

    #[test]
    fn unimodal_size_mismatch() {
        let err = t0().is_mu_unimodal(&partition("3,3,3")).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch { .. }));
    }

    #[test]
    fn validation_rejects_bad_tableaux() {
        // not a shape
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        // bad entries
        assert!(StandardTableau::new(vec![vec![1, 1], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 5], vec![2]]).is_err());
        // non-increasing row
        assert!(StandardTableau::new(vec![vec![2, 1], vec![3]]).is_err());
        // non-increasing column
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }

    #[test]
    fn display_and_json_rendering() {
        assert_eq!(t0().to_string(), "1,3,6 / 2,4 / 5");
        let json = serde_json::to_string(&t0()).unwrap();
        assert_eq!(json, "[[1,3,6],[2,4],[5]]");
    }
}
