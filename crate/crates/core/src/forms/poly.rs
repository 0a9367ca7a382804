//! Sparse multivariate polynomials over a coefficient field.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Field, Scalar, UniPoly};

pub type Exponents = Vec<u32>;

/// A polynomial in `nvars` variables `x_0, ..., x_{nvars-1}`; no zero
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Exponents, Scalar>,
}

impl Poly {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        Poly { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        let mut p = Self::zero(&c.field(), nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(field: &Field, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e, field.one())
    }

    pub fn monomial(field: &Field, exps: Exponents, c: Scalar) -> Self {
        let mut p = Self::zero(field, exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I>(field: &Field, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, Scalar)>,
    {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} in {nvars} variables",
                    e.len()
                )));
            }
            if !field.contains(&c) {
                return Err(Error::FieldMismatch(format!("coefficient {c} is not in {field}")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Adds `c * x^e`, merging with an existing term.
    pub(crate) fn add_term(&mut self, e: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in increasing lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is a (possibly zero) constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(self.field.zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Self::zero(&self.field, self.nvars);
        }
        self.map_coeffs(|c| c * s)
    }

    fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), f(c))).filter(|(_, c)| !c.is_zero()).collect();
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        self.check_compatible(rhs);
        let mut out = Self::zero(&self.field, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Self::constant(self.field.one(), self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Poly {
        let mut out = Self::zero(&self.field, self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            out.add_term(d, c.mul_int(e[var] as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k as u64);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Sets `x_var = value`; the variable stays in the ring with exponent 0.
    pub fn substitute(&self, var: usize, value: &Scalar) -> Poly {
        let mut out = Self::zero(&self.field, self.nvars);
        let mut powers: Vec<Scalar> = vec![self.field.one()];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut d = e.clone();
            d[var] = 0;
            out.add_term(d, c * &powers[k]);
        }
        out
    }

    /// The polynomial as a univariate one in `var`, if no other variable occurs.
    pub fn as_univariate(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs: Vec<Scalar> = vec![];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return None;
            }
            let k = e[var] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, self.field.zero());
            }
            coeffs[k] = c.clone();
        }
        Some(UniPoly::new(&self.field, coeffs))
    }

    /// Maps every coefficient into another field.
    pub fn change_field(&self, target: &Field, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Poly> {
        let mut out = Self::zero(target, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Reduction of a rational polynomial modulo a prime, or embedding of a
    /// prime-field polynomial into an extension of the same characteristic.
    pub fn to_field(&self, target: &Field) -> Result<Poly> {
        if *target == self.field {
            return Ok(self.clone());
        }
        self.change_field(target, |c| self.field.embed_prime(c, target))
    }

    fn check_compatible(&self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different numbers of variables");
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
    }
}

/// Inline rendering such as `3*x0^2*x1 - x2^3`, largest exponents first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { format!("x{v}") } else { format!("x{v}^{k}") })
                .collect();
            let value = c.value_string();
            let (negative, magnitude) = match value.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, value),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (mono.is_empty(), magnitude.as_str()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, "1") => write!(f, "{}", mono.join("*"))?,
                (false, _) => write!(f, "{magnitude}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_display() {
        let q = Field::Rational;
        let x = Poly::var(&q, 3, 0);
        let z = Poly::var(&q, 3, 2);
        let p = x.pow(2).scale(&q.from_i64(3)).sub(&z).add(&Poly::constant(q.from_i64(-2), 3));
        assert_eq!(p.to_string(), "3*x0^2 - x2 - 2");
        assert_eq!(Poly::zero(&q, 2).to_string(), "0");
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let q = Field::Rational;
        let x = Poly::var(&q, 2, 0);
        let y = Poly::var(&q, 2, 1);
        let sq = x.add(&y).mul(&x.sub(&y));
        let expect = x.pow(2).sub(&y.pow(2));
        assert_eq!(sq, expect);
        assert!(sq.sub(&expect).is_zero());
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert_eq!(sq.add(&Poly::constant(q.one(), 2)).homogeneous_degree(), None);
    }

    #[test]
    fn substitution_and_univariate_view() {
        let f = Field::parse("7").unwrap();
        let x = Poly::var(&f, 3, 0);
        let y = Poly::var(&f, 3, 1);
        let z = Poly::var(&f, 3, 2);
        let p = x.mul(&y).add(&z.pow(3));
        assert!(p.as_univariate(2).is_none());
        let s = p.substitute(0, &f.zero());
        let u = s.as_univariate(2).unwrap();
        assert_eq!(u.degree(), Some(3));
        assert_eq!(p.eval(&[f.from_i64(2), f.from_i64(3), f.from_i64(1)]), f.from_i64(0));
    }

    #[test]
    fn partials_and_reduction() {
        let q = Field::Rational;
        let x = Poly::var(&q, 2, 0);
        let y = Poly::var(&q, 2, 1);
        let p = x.pow(3).mul(&y).scale(&q.from_i64(7));
        assert_eq!(p.partial(0), x.pow(2).mul(&y).scale(&q.from_i64(21)));
        let f7 = Field::parse("7").unwrap();
        assert!(p.to_field(&f7).unwrap().is_zero());
    }
}
