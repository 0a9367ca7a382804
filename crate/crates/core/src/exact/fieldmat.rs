//! Dense matrices over a coefficient field, Gaussian elimination.

use rand::Rng;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl FieldMatrix {
    pub fn new(field: &Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(bad) = entries.iter().find(|e| !field.contains(e)) {
            return Err(Error::FieldMismatch(format!("entry {bad} is not in {field}")));
        }
        Ok(FieldMatrix { field: field.clone(), rows, cols, entries })
    }

    pub fn from_i64_rows(field: &Field, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flatten().map(|&x| field.from_i64(x)).collect();
        Self::new(field, rows.len(), cols, entries)
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Self::scalar(field, n, &field.one())
    }

    /// `c * I_n`
    pub fn scalar(field: &Field, n: usize, c: &Scalar) -> Self {
        let mut entries = vec![field.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = c.clone();
        }
        FieldMatrix { field: field.clone(), rows: n, cols: n, entries }
    }

    pub fn diagonal(field: &Field, diag: &[Scalar]) -> Self {
        let n = diag.len();
        let mut m = Self::identity(field, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    /// A uniformly random invertible matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(field: &Field, n: usize, rng: &mut R) -> Self {
        loop {
            let entries = (0..n * n).map(|_| field.random(rng)).collect();
            let m = FieldMatrix { field: field.clone(), rows: n, cols: n, entries };
            if !m.det().is_zero() {
                return m;
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                entries.push(acc);
            }
        }
        Ok(FieldMatrix { field: self.field.clone(), rows: self.rows, cols: rhs.cols, entries })
    }

    pub fn scale(&self, c: &Scalar) -> FieldMatrix {
        let entries = self.entries.iter().map(|e| e * c).collect();
        FieldMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries }
    }

    /// Row echelon form in place; returns (rank, sign of the row permutation,
    /// product of pivots).
    fn eliminate(&mut self) -> (usize, bool, Scalar) {
        let mut rank = 0;
        let mut flipped = false;
        let mut pivot_product = self.field.one();
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..self.cols {
                    self.entries.swap(p * self.cols + j, rank * self.cols + j);
                }
                flipped = !flipped;
            }
            let pivot = self.get(rank, c).clone();
            pivot_product = &pivot_product * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in rank + 1..self.rows {
                let factor = self.get(i, c) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = self.get(i, j) - &(&factor * self.get(rank, j));
                    self.entries[i * self.cols + j] = v;
                }
            }
            rank += 1;
        }
        (rank, flipped, pivot_product)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let (rank, flipped, prod) = m.eliminate();
        if rank < self.rows {
            self.field.zero()
        } else if flipped {
            -prod
        } else {
            prod
        }
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<FieldMatrix> {
        if !self.is_square() {
            return Err(Error::NonInvertibleMatrix);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(&self.field, n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a.get(i, c).is_zero()).ok_or(Error::NonInvertibleMatrix)?;
            if p != c {
                for j in 0..n {
                    a.entries.swap(p * n + j, c * n + j);
                    inv.entries.swap(p * n + j, c * n + j);
                }
            }
            let pinv = a.get(c, c).inv().expect("nonzero pivot");
            for j in 0..n {
                a.entries[c * n + j] = a.get(c, j) * &pinv;
                inv.entries[c * n + j] = inv.get(c, j) * &pinv;
            }
            for i in 0..n {
                if i == c || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    a.entries[i * n + j] = a.get(i, j) - &(&f * a.get(c, j));
                    inv.entries[i * n + j] = inv.get(i, j) - &(&f * inv.get(c, j));
                }
            }
        }
        Ok(inv)
    }

    /// True when the matrix is `c * I` for some scalar `c`.
    pub fn is_scalar_matrix(&self) -> Option<Scalar> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0);
        let ok = (0..self.rows)
            .all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j) == c } else { self.get(i, j).is_zero() }));
        ok.then(|| c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn inverse_and_det_over_q() {
        let q = Field::Rational;
        let a = FieldMatrix::from_i64_rows(&q, &[vec![1, 1], vec![0, 1]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(inv, FieldMatrix::from_i64_rows(&q, &[vec![1, -1], vec![0, 1]]).unwrap());
        assert_eq!(a.det(), q.one());
        let swap = FieldMatrix::from_i64_rows(&q, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(swap.det(), q.from_i64(-1));
    }

    #[test]
    fn singular_matrix_rejected() {
        let f = Field::parse("5").unwrap();
        let a = FieldMatrix::from_i64_rows(&f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(a.inverse(), Err(Error::NonInvertibleMatrix));
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn random_inverse_roundtrip() {
        let f = Field::parse("101^2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let a = FieldMatrix::random_invertible(&f, 3, &mut rng);
            let prod = a.mul(&a.inverse().unwrap()).unwrap();
            assert_eq!(prod, FieldMatrix::identity(&f, 3));
        }
    }

    #[test]
    fn det_is_multiplicative() {
        let f = Field::parse("101").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = FieldMatrix::random_invertible(&f, 3, &mut rng);
        let b = FieldMatrix::random_invertible(&f, 3, &mut rng);
        assert_eq!(a.mul(&b).unwrap().det(), &a.det() * &b.det());
    }
}
