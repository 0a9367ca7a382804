//! Prime fields and their extensions `F_{p^k}`.
//!
//! Elements of `F_{p^k}` are coefficient vectors in the power basis
//! `1, t, ..., t^{k-1}` modulo a fixed monic irreducible polynomial. The
//! modulus is the first irreducible polynomial in lexicographic coefficient
//! order (leading coefficient first, then `c_{k-1}, ..., c_0`), so two
//! constructions of the same field always agree element for element.

use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Coeffs = SmallVec<[u64; 4]>;

/// Largest characteristic accepted; keeps `(p - 1)^2` inside a `u64`.
pub const MAX_CHARACTERISTIC: u64 = (1 << 32) - 1;

pub struct GaloisField {
    p: u64,
    degree: u32,
    /// Monic modulus, lowest coefficient first, length `degree + 1`.
    modulus: Vec<u64>,
    order: Option<u64>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.degree)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree
    }
}

impl Eq for GaloisField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl GaloisField {
    pub fn new(p: u64, degree: u32) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::InvalidField(format!(
                "characteristic {p} exceeds {MAX_CHARACTERISTIC}"
            )));
        }
        if degree == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let order = (0..degree).try_fold(1u64, |acc, _| acc.checked_mul(p));
        if degree > 1 && order.is_none() {
            return Err(Error::InvalidField(format!("{p}^{degree} is too large")));
        }
        let modulus = first_irreducible(p, degree as usize);
        Ok(Arc::new(GaloisField { p, degree, modulus, order }))
    }

    pub fn prime(p: u64) -> Result<Arc<Self>> {
        Self::new(p, 1)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements, when it fits in a `u64`.
    pub fn order(&self) -> Option<u64> {
        self.order
    }

    /// The modulus polynomial, lowest coefficient first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub(crate) fn zero_coeffs(&self) -> Coeffs {
        SmallVec::from_elem(0, self.degree as usize)
    }

    pub(crate) fn constant_coeffs(&self, c: u64) -> Coeffs {
        let mut v = self.zero_coeffs();
        v[0] = c % self.p;
        v
    }

    pub(crate) fn add(&self, a: &[u64], b: &[u64]) -> Coeffs {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub(crate) fn sub(&self, a: &[u64], b: &[u64]) -> Coeffs {
        a.iter().zip(b).map(|(x, y)| (x + self.p - y) % self.p).collect()
    }

    pub(crate) fn neg(&self, a: &[u64]) -> Coeffs {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }

    pub(crate) fn mul(&self, a: &[u64], b: &[u64]) -> Coeffs {
        let p = self.p;
        let k = self.degree as usize;
        if k == 1 {
            return SmallVec::from_elem(a[0] * b[0] % p, 1);
        }
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y % p) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + p - c * m % p) % p;
            }
        }
        prod.truncate(k);
        prod.into_iter().collect()
    }

    pub(crate) fn inv(&self, a: &[u64]) -> Option<Coeffs> {
        if a.iter().all(|&c| c == 0) {
            return None;
        }
        if self.degree == 1 {
            return Some(SmallVec::from_elem(inv_mod(a[0], self.p), 1));
        }
        // extended Euclid in F_p[t]: find s with s * a = 1 mod modulus
        let p = self.p;
        let mut r0 = upoly::trim(self.modulus.clone());
        let mut r1 = upoly::trim(a.to_vec());
        let mut s0: Vec<u64> = vec![];
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = upoly::divrem(&r0, &r1, p);
            let s2 = upoly::sub(&s0, &upoly::mul(&q, &s1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant
        let c = inv_mod(r0[0], p);
        let mut out = self.zero_coeffs();
        for (i, s) in s0.iter().enumerate() {
            out[i] = s * c % p;
        }
        Some(out)
    }

    pub(crate) fn pow(&self, a: &[u64], mut e: u128) -> Coeffs {
        let mut base: Coeffs = a.iter().copied().collect();
        let mut acc = self.constant_coeffs(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Element with the given enumeration index (base-`p` digits, low first).
    pub(crate) fn coeffs_from_index(&self, mut index: u64) -> Coeffs {
        let mut v = self.zero_coeffs();
        for c in v.iter_mut() {
            *c = index % self.p;
            index /= self.p;
        }
        v
    }

    pub(crate) fn index_of(&self, a: &[u64]) -> u64 {
        a.iter().rev().fold(0u64, |acc, &c| acc * self.p + c)
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    t.rem_euclid(p as i128) as u64
}

/// First monic irreducible polynomial of the given degree, lowest coefficient
/// first. Candidates are visited with `c_{k-1}` as the most significant digit.
fn first_irreducible(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1];
    }
    let mut digits = vec![0u64; k]; // digits[0] = c_{k-1}, ..., digits[k-1] = c_0
    loop {
        let mut f: Vec<u64> = digits.iter().rev().copied().collect();
        f.push(1);
        if upoly::is_irreducible(&f, p) {
            return f;
        }
        // increment, last digit fastest
        let mut pos = k;
        loop {
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
            assert!(pos > 0, "no irreducible polynomial of degree {k} over F_{p}");
        }
    }
}

/// Dense polynomials over `F_p` with `u64` coefficients, lowest first. Only
/// used to set up extension fields.
pub(crate) mod upoly {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y % p) % p;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let b = trim(b.to_vec());
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (vec![], r);
        }
        let lead_inv = super::inv_mod(*b.last().unwrap(), p);
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * lead_inv % p;
            q[shift] = c;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * bc % p) % p;
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y, p);
            x = std::mem::replace(&mut y, r);
        }
        x
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        divrem(&mul(a, b, p), m, p).1
    }

    fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = divrem(base, m, p).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            e >>= 1;
            if e > 0 {
                b = mulmod(&b, &b, m, p);
            }
        }
        acc
    }

    /// `x^(p^i) mod f`, by `i` successive `p`-th powers.
    fn frobenius_iter(f: &[u64], i: usize, p: u64) -> Vec<u64> {
        let mut h = vec![0, 1];
        for _ in 0..i {
            h = powmod(&h, p, f, p);
        }
        h
    }

    fn prime_divisors(mut n: usize) -> Vec<usize> {
        let mut out = vec![];
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                out.push(d);
                while n.is_multiple_of(d) {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    /// Rabin's test for a monic `f` of degree `k >= 1`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let k = f.len() - 1;
        let x = vec![0u64, 1];
        if sub(&frobenius_iter(f, k, p), &divrem(&x, f, p).1, p) != Vec::<u64>::new() {
            return false;
        }
        prime_divisors(k).into_iter().all(|l| {
            let h = sub(&frobenius_iter(f, k / l, p), &x, p);
            gcd(f, &h, p).len() == 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_is_first_irreducible() {
        // over F_2 the only irreducible quadratic is t^2 + t + 1
        let f = GaloisField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // over F_3: t^2 + 1 is the first irreducible (t^2, t^2+1 -> c1 = 0 first)
        let f = GaloisField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        // F_7: -1 is a non-residue, so t^2 + 1 is irreducible and comes before
        // any t^2 + c with smaller c that is reducible (t^2 itself)
        let f = GaloisField::new(7, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn multiplicative_group_has_expected_order() {
        for (p, k) in [(2u64, 3u32), (3, 2), (5, 2), (7, 1), (2, 4)] {
            let f = GaloisField::new(p, k).unwrap();
            let q = f.order().unwrap();
            for idx in 1..q {
                let a = f.coeffs_from_index(idx);
                assert_eq!(f.pow(&a, (q - 1) as u128), f.constant_coeffs(1), "{p}^{k} idx {idx}");
                let inv = f.inv(&a).unwrap();
                assert_eq!(f.mul(&a, &inv), f.constant_coeffs(1));
            }
        }
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(GaloisField::new(9, 1).is_err());
        assert!(GaloisField::new(101, 0).is_err());
    }

    #[test]
    fn index_roundtrip() {
        let f = GaloisField::new(5, 3).unwrap();
        for idx in [0u64, 1, 7, 124] {
            assert_eq!(f.index_of(&f.coeffs_from_index(idx)), idx);
        }
    }
}
