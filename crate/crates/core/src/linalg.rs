//! Dense linear algebra over F_p: row reduction and nullspace bases. Used by
//! the degreewise closure materializations.

use crate::field::PrimeField;

/// Row-major dense matrix over F_p.
#[derive(Clone, Debug)]
pub struct MatFp {
    pub field: PrimeField,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl MatFp {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        MatFp {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = self.field.from_u64(v);
    }

    /// In-place reduced row echelon form; returns pivot column per row rank.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, pr * self.cols + c);
                }
            }
            let inv = f.inv(self.at(row, col)).expect("pivot nonzero");
            for c in col..self.cols {
                let v = f.mul(self.at(row, c), inv);
                self.data[row * self.cols + c] = v;
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.at(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.at(r, c), f.mul(factor, self.at(row, c)));
                    self.data[r * self.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the right nullspace {v : A v = 0}, deterministic order.
    pub fn nullspace(mut self) -> Vec<Vec<u64>> {
        let f = self.field;
        let cols = self.cols;
        let pivots = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![0u64; cols];
            vec[free] = 1;
            for (c, pr) in pivot_set.iter().enumerate() {
                if let Some(r) = pr {
                    vec[c] = f.neg(self.at(*r, free));
                }
            }
            basis.push(vec);
        }
        basis
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }
}
