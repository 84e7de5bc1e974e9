//! Dense Gaussian elimination over F_p: ranks, kernels, solving. Sizes here
//! are graded pieces of modules (at most a few thousand on a side).

use crate::ring::field::Fp;

#[derive(Debug, Clone)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<u64>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            a: vec![0; rows * cols],
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.a[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.a[r * self.cols + c] = v;
    }

    /// In-place row echelon reduction; returns pivot columns.
    pub fn row_reduce(&mut self, fp: Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut piv = None;
            for r in row..self.rows {
                if self.at(r, col) != 0 {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            self.a.swap_unchecked_rows(piv, row, self.cols);
            let inv = fp.inv(self.at(row, col));
            for c in col..self.cols {
                let v = fp.mul(self.at(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let f = self.at(r, col);
                    for c in col..self.cols {
                        let v = fp.sub(self.at(r, c), fp.mul(f, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(mut self, fp: Fp) -> usize {
        self.row_reduce(fp).len()
    }

    /// Basis of the right kernel {x : Ax = 0}.
    pub fn kernel_basis(mut self, fp: Fp) -> Vec<Vec<u64>> {
        let pivots = self.row_reduce(fp);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = fp.neg(self.at(r, free));
            }
            out.push(v);
        }
        out
    }
}

trait SwapRows {
    fn swap_unchecked_rows(&mut self, r1: usize, r2: usize, cols: usize);
}

impl SwapRows for Vec<u64> {
    fn swap_unchecked_rows(&mut self, r1: usize, r2: usize, cols: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..cols {
            self.swap(r1 * cols + c, r2 * cols + c);
        }
    }
}
