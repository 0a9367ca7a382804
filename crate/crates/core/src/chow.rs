//! Truncated polynomial rings `Z[h_1, ..., h_k] / (h_i^{t_i})` modelling the
//! Chow rings of products of projective spaces, and the degree computations
//! done in them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Hyperplane classes with their truncation exponents (dimension + 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowRing {
    names: Vec<String>,
    truncation: Vec<u32>,
}

impl ChowRing {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Arc<Self> {
        let (names, truncation) = vars.into_iter().map(|(n, t)| (n.into(), t)).unzip();
        Arc::new(ChowRing { names, truncation })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn truncation(&self) -> &[u32] {
        &self.truncation
    }

    fn admits(&self, e: &[u32]) -> bool {
        e.iter().zip(&self.truncation).all(|(a, t)| a < t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    ring: Arc<ChowRing>,
    coeffs: BTreeMap<Vec<u32>, BigInt>,
}

impl ChowClass {
    pub fn zero(ring: &Arc<ChowRing>) -> Self {
        ChowClass { ring: ring.clone(), coeffs: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<ChowRing>, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(ring);
        out.add_term(vec![0; ring.rank()], c.into());
        out
    }

    /// The hyperplane class with index `i`.
    pub fn generator(ring: &Arc<ChowRing>, i: usize) -> Self {
        let mut e = vec![0; ring.rank()];
        e[i] = 1;
        let mut out = Self::zero(ring);
        out.add_term(e, BigInt::one());
        out
    }

    /// `sum_i c_i h_i`.
    pub fn linear(ring: &Arc<ChowRing>, coeffs: &[i64]) -> Self {
        assert_eq!(coeffs.len(), ring.rank(), "one coefficient per generator");
        let mut out = Self::zero(ring);
        for (i, &c) in coeffs.iter().enumerate() {
            out = out.add(&Self::generator(ring, i).scale(&BigInt::from(c)));
        }
        out
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() || !self.ring.admits(&e) {
            return;
        }
        let slot = self.coeffs.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn ring(&self) -> &Arc<ChowRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the monomial `prod h_i^{e_i}`; zero beyond truncation.
    pub fn coefficient(&self, e: &[u32]) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add(&self, rhs: &ChowClass) -> ChowClass {
        assert_eq!(self.ring, rhs.ring, "classes in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> ChowClass {
        let mut out = Self::zero(&self.ring);
        for (e, x) in &self.coeffs {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> ChowClass {
        let mut acc = Self::constant(&self.ring, 1);
        for _ in 0..k {
            acc = chow_mul(&acc, self).expect("same ring");
        }
        acc
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .zip(&self.ring.names)
                .filter(|(k, _)| **k > 0)
                .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{c}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Product with monomials at or beyond the truncation discarded.
pub fn chow_mul(a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
    if a.ring != b.ring {
        return Err(Error::DimensionMismatch("classes live in different Chow rings".into()));
    }
    let mut out = ChowClass::zero(&a.ring);
    for (ea, ca) in &a.coeffs {
        for (eb, cb) in &b.coeffs {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(e, ca * cb);
        }
    }
    Ok(out)
}

/// Degree of the locus of singular forms of degree `m` in `n + 1` variables.
///
/// The incidence variety in `P^n x P(forms)` has class `((m-1) xi + eta)^{n+1}`;
/// its image has degree equal to the coefficient of `xi^n eta`. Only the
/// linear term in `eta` is read, so `eta` is truncated at 2.
pub fn discriminant_degree(n: u32, m: u32) -> BigInt {
    let ring = ChowRing::new([("xi", n + 1), ("eta", 2)]);
    let class = ChowClass::linear(&ring, &[m as i64 - 1, 1]).pow(n + 1);
    class.coefficient(&[n, 1])
}

/// Bidegree of the locus `Z` of pairs of binary forms of degrees
/// `2 d1 - d2` and `2 d2 - d1` with a common zero.
///
/// In `P^1 x P^{N1} x P^{N2}` the incidence class is
/// `((2d1 - d2) eta + xi1)((2d2 - d1) eta + xi2)`; pushing forward along
/// `P^1` reads the coefficients of `eta xi1` and `eta xi2`.
pub fn z_bidegree(d1: u32, d2: u32) -> Result<(BigInt, BigInt)> {
    let (a, b) = (2 * d1 as i64 - d2 as i64, 2 * d2 as i64 - d1 as i64);
    if a < 0 || b < 0 {
        return Err(Error::InvalidBranchDegrees(format!("need 2d1 - d2 >= 0 and 2d2 - d1 >= 0, got ({d1}, {d2})")));
    }
    let ring = ChowRing::new([("eta", 2), ("xi1", 2), ("xi2", 2)]);
    let first = ChowClass::linear(&ring, &[a, 1, 0]);
    let second = ChowClass::linear(&ring, &[b, 0, 1]);
    let class = chow_mul(&first, &second)?;
    Ok((class.coefficient(&[1, 1, 0]), class.coefficient(&[1, 0, 1])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_products() {
        let ring = ChowRing::new([("xi", 2), ("eta", 5)]);
        let xi = ChowClass::generator(&ring, 0);
        let eta = ChowClass::generator(&ring, 1);
        assert!(chow_mul(&xi, &xi).unwrap().is_zero());
        let s = xi.add(&eta).pow(2);
        assert_eq!(s.to_string(), "2*xi*eta + eta^2");
        let t = ChowClass::linear(&ring, &[2, 1]).pow(2);
        assert_eq!(t.coefficient(&[1, 1]), BigInt::from(4));
        assert_eq!(t.coefficient(&[0, 2]), BigInt::from(1));
        let other = ChowRing::new([("xi", 3)]);
        assert!(chow_mul(&xi, &ChowClass::generator(&other, 0)).is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(discriminant_degree(1, 1), BigInt::from(0));
        assert_eq!(discriminant_degree(1, 4), BigInt::from(6));
        assert_eq!(discriminant_degree(2, 3), BigInt::from(12));
        assert_eq!(z_bidegree(1, 1).unwrap(), (BigInt::from(1), BigInt::from(1)));
        assert_eq!(z_bidegree(2, 2).unwrap(), (BigInt::from(2), BigInt::from(2)));
        assert!(matches!(z_bidegree(1, 3), Err(Error::InvalidBranchDegrees(_))));
    }
}
