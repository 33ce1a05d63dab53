//! Dense matrices over a coefficient field: elimination, rank, kernels.

use num_traits::{One, Zero};

use crate::field::FieldScalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<K> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<K>,
}

impl<K: FieldScalar> Mat<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat<K> {
        let mut t = Mat::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = K::zero();
                for c in 0..self.cols {
                    if !self.get(r, c).is_zero() && !v[c].is_zero() {
                        acc = acc + self.get(r, c).clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Selects contiguous column blocks of width `block` whose block indices
    /// appear in `blocks`, in the given order.
    pub fn select_col_blocks(&self, blocks: &[usize], block: usize) -> Mat<K> {
        let mut m = Mat::zero(self.rows, blocks.len() * block);
        for r in 0..self.rows {
            for (bi, &b) in blocks.iter().enumerate() {
                for j in 0..block {
                    m.set(r, bi * block + j, self.get(r, b * block + j).clone());
                }
            }
        }
        m
    }

    /// Row-reduces in place; returns the pivot column of each pivot row.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inv();
            for c in col..self.cols {
                let v = self.get(row, c).clone() * inv.clone();
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c).clone() - f.clone() * self.get(row, c).clone();
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -m.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// A solution of `self * x = rhs`, if one exists.
    pub fn solve(&self, rhs: &[K]) -> Option<Vec<K>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![K::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.get(prow, self.cols).clone();
        }
        Some(x)
    }

    /// A vector outside the column space, when the rank is deficient.
    pub fn outside_column_space(&self) -> Option<Vec<K>> {
        let mut t = self.transpose();
        let pivots = t.rref();
        if pivots.len() == self.rows {
            return None;
        }
        let mut is_pivot = vec![false; self.rows];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free = (0..self.rows).find(|&i| !is_pivot[i]).unwrap();
        let mut v = vec![K::zero(); self.rows];
        v[free] = K::one();
        debug_assert!(self.solve(&v).is_none());
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldSpec, Fp};

    fn f2(v: i64) -> Fp {
        Fp::embed_i64(&FieldSpec::Fp(2), v)
    }

    #[test]
    fn rank_and_kernel_over_f2() {
        let m = Mat::from_rows(vec![
            vec![f2(1), f2(1), f2(0)],
            vec![f2(0), f2(1), f2(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|x| x.is_zero()));

        assert_eq!(Mat::<Fp>::identity(4).rank(), 4);
    }

    #[test]
    fn solve_and_outside() {
        let m = Mat::from_rows(vec![
            vec![f2(1), f2(0)],
            vec![f2(0), f2(0)],
        ]);
        assert_eq!(m.rank(), 1);
        let sol = m.solve(&[f2(1), f2(0)]).unwrap();
        assert_eq!(m.mul_vec(&sol), vec![f2(1), f2(0)]);
        assert!(m.solve(&[f2(0), f2(1)]).is_none());
        let out = m.outside_column_space().unwrap();
        assert!(m.solve(&out).is_none());

        let full = Mat::<Fp>::identity(3);
        assert!(full.outside_column_space().is_none());
    }
}
