//! Integer matrices, Smith and Hermite normal forms, and finitely generated
//! abelian groups given by generators and relations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            entries.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(source, j)] * factor;
            self[(target, j)] += v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, source)] * factor;
            self[(i, target)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Smith form `U * M * V = diag(factors)` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// `min(rows, cols)` nonnegative entries, each dividing the next; zeros trail.
    pub factors: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    for t in 0..steps {
        loop {
            // smallest nonzero magnitude in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &d[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v, steps);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &pivot);
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &pivot);
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(d, u, v, steps)
}

fn finish(d: IntMatrix, left: IntMatrix, right: IntMatrix, steps: usize) -> SmithForm {
    let factors = (0..steps).map(|i| d[(i, i)].clone()).collect();
    SmithForm { factors, left, right }
}

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        // gcd-combine everything below r into row r
        for i in r + 1..a.rows {
            if a[(i, c)].is_zero() {
                continue;
            }
            let x = a[(r, c)].clone();
            let y = a[(i, c)].clone();
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let (xg, yg) = (&x / &g, &y / &g);
            for j in 0..a.cols {
                let ar = a[(r, j)].clone();
                let ai = a[(i, j)].clone();
                a[(r, j)] = &s * &ar + &t * &ai;
                a[(i, j)] = &xg * &ai - &yg * &ar;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        let pivot = a[(r, c)].clone();
        for i in 0..r {
            let q = -a[(i, c)].div_floor(&pivot);
            a.add_row(i, r, &q);
        }
        r += 1;
    }
    let kept: Vec<Vec<BigInt>> = a.to_rows().into_iter().filter(|row| row.iter().any(|x| !x.is_zero())).collect();
    IntMatrix::from_rows(a.cols, &kept).expect("rows have matching width")
}

/// Order of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// `Z^g / rowspan(relations)` with its invariant factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianPresentation {
    generator_count: usize,
    relations: IntMatrix,
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianPresentation {
    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Invariant factors `d_1 | d_2 | ...`, all at least 2.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn order(&self) -> GroupOrder {
        if self.free_rank > 0 {
            GroupOrder::Infinite
        } else {
            GroupOrder::Finite(self.invariant_factors.iter().product())
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() + self.free_rank <= 1
    }

    /// Same invariant factors and free rank.
    pub fn is_isomorphic(&self, other: &AbelianPresentation) -> bool {
        self.invariant_factors == other.invariant_factors && self.free_rank == other.free_rank
    }
}

impl fmt::Display for AbelianPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// The group with `g` generators and the rows of `relations` as relations.
pub fn group_from_relations(g: usize, relations: &IntMatrix) -> Result<AbelianPresentation> {
    if relations.cols() != g {
        return Err(Error::DimensionMismatch(format!(
            "relation matrix has {} columns for {g} generators",
            relations.cols()
        )));
    }
    let snf = smith_normal_form(relations);
    let nonzero: Vec<&BigInt> = snf.factors.iter().filter(|d| !d.is_zero()).collect();
    let free_rank = g - nonzero.len();
    let invariant_factors = nonzero.into_iter().filter(|d| !d.is_one()).cloned().collect();
    Ok(AbelianPresentation { generator_count: g, relations: relations.clone(), invariant_factors, free_rank })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(cols: usize, rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(cols, rows).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_transform(m: &IntMatrix) {
        let s = smith_normal_form(m);
        let prod = s.left.mul(m).unwrap().mul(&s.right).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let expect = if i == j { s.factors[i].clone() } else { BigInt::zero() };
                assert_eq!(prod[(i, j)], expect);
            }
        }
        assert_eq!(s.left.det().unwrap().abs(), BigInt::one());
        assert_eq!(s.right.det().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&IntMatrix::identity(2)).factors, big(&[1, 1]));
        assert_eq!(smith_normal_form(&mat(2, &[vec![2, 0], vec![0, 3]])).factors, big(&[1, 6]));
        assert_eq!(smith_normal_form(&mat(2, &[vec![2, 4], vec![4, 2]])).factors, big(&[2, 6]));
        check_transform(&mat(2, &[vec![2, 4], vec![4, 2]]));
        check_transform(&mat(3, &[vec![0, 0, 0], vec![0, 6, 4], vec![3, 0, 9]]));
    }

    #[test]
    fn group_examples() {
        let g = group_from_relations(2, &IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(g.free_rank(), 2);
        assert_eq!(g.order(), GroupOrder::Infinite);

        let g = group_from_relations(1, &mat(1, &[vec![10]])).unwrap();
        assert_eq!(g.invariant_factors(), big(&[10]).as_slice());
        assert_eq!(g.to_string(), "Z/10");

        let g = group_from_relations(2, &mat(2, &[vec![2, -4], vec![4, -2], vec![-2, -2]])).unwrap();
        assert_eq!(g.invariant_factors(), big(&[2, 6]).as_slice());
        assert_eq!(g.order(), GroupOrder::Finite(12.into()));
        assert_eq!(g.to_string(), "Z/2 x Z/6");
    }

    #[test]
    fn trivial_and_mismatched() {
        let g = group_from_relations(1, &mat(1, &[vec![-1]])).unwrap();
        assert_eq!(g.to_string(), "0");
        assert_eq!(g.order(), GroupOrder::Finite(1.into()));
        assert!(group_from_relations(3, &mat(2, &[vec![1, 1]])).is_err());
    }

    #[test]
    fn det_bareiss() {
        assert_eq!(mat(3, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]).det().unwrap(), BigInt::from(6));
        assert_eq!(mat(3, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]).det().unwrap(), BigInt::zero());
        assert_eq!(mat(2, &[vec![0, 1], vec![1, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(mat(2, &[vec![2, 4], vec![1, 2]]).det().unwrap(), BigInt::zero());
    }

    #[test]
    fn hnf_of_lattice_basis() {
        let h = hermite_normal_form(&mat(2, &[vec![2, 4], vec![0, 3], vec![2, 7]]));
        assert_eq!(h, mat(2, &[vec![2, 1], vec![0, 3]]));
    }
}
