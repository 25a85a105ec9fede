//! Zigzag (ribbon) skew shapes determined by a set of down steps, and
//! counting of their standard fillings.

use std::collections::HashMap;

use crate::perm::DescentSet;

/// A connected skew shape with no 2x2 square, stored as its reading
/// sequence of cells. Cell `i+1` is directly below cell `i` exactly when
/// `i` is a descent position, and directly to its right otherwise.
///
/// Coordinates are `(row, col)` with row 0 at the bottom and rows
/// increasing upward (French convention).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonShape {
    cells: Vec<(usize, usize)>,
    descents: DescentSet,
}

impl RibbonShape {
    /// The zigzag shape of `n` cells whose reading sequence steps down at
    /// exactly the positions of `descents`.
    pub fn zigzag(descents: &DescentSet) -> RibbonShape {
        let n = descents.n();
        let mut row = descents.count();
        let mut col = 0;
        let mut cells = Vec::with_capacity(n);
        cells.push((row, col));
        for i in 1..n {
            if descents.contains(i) {
                row -= 1;
            } else {
                col += 1;
            }
            cells.push((row, col));
        }
        RibbonShape {
            cells,
            descents: *descents,
        }
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    /// Cells in reading order.
    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn descent_positions(&self) -> &DescentSet {
        &self.descents
    }

    /// Row sizes from the top row down, the order the shape is drawn in.
    pub fn row_sizes_top_down(&self) -> Vec<usize> {
        let top = self.cells.iter().map(|&(r, _)| r).max().unwrap_or(0);
        let mut sizes = vec![0; top + 1];
        for &(r, _) in &self.cells {
            sizes[top - r] += 1;
        }
        sizes
    }

    /// Number of standard fillings: assignments of `1..=n` to the cells
    /// with rows increasing rightward and columns increasing upward.
    ///
    /// Counted directly on the cell grid: values are placed in increasing
    /// order, each into a cell whose left and lower neighbors (when part of
    /// the shape) are already filled.
    pub fn count_standard_fillings(&self) -> u64 {
        let n = self.n();
        if n == 0 {
            return 1;
        }
        assert!(n <= 28, "filling count uses a bitmask over cells");
        let index_of = |cell: (usize, usize)| self.cells.iter().position(|&c| c == cell);
        let preds: Vec<u32> = self
            .cells
            .iter()
            .map(|&(r, c)| {
                let mut mask = 0u32;
                if c > 0 {
                    if let Some(i) = index_of((r, c - 1)) {
                        mask |= 1 << i;
                    }
                }
                if r > 0 {
                    if let Some(i) = index_of((r - 1, c)) {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();

        // memo: filled-cell mask -> number of completions
        let mut memo: HashMap<u32, u64> = HashMap::new();
        fn completions(filled: u32, n: usize, preds: &[u32], memo: &mut HashMap<u32, u64>) -> u64 {
            if filled == (1u32 << n) - 1 {
                return 1;
            }
            if let Some(&v) = memo.get(&filled) {
                return v;
            }
            let mut total = 0;
            for cell in 0..n {
                let bit = 1u32 << cell;
                if filled & bit == 0 && preds[cell] & !filled == 0 {
                    total += completions(filled | bit, n, preds, memo);
                }
            }
            memo.insert(filled, total);
            total
        }
        completions(0, n, &preds, &mut memo)
    }
}
