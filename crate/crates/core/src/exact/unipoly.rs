//! Dense univariate polynomials over a coefficient field.

use super::scalar::{Field, Scalar};

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        UniPoly { field: field.clone(), coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Self::new(&field, vec![c])
    }

    /// The monomial `x`.
    pub fn x(field: &Field) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul_int(i as i64)).collect();
        Self::new(&self.field, coeffs)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Self::new(&self.field, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Self::new(&self.field, coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.leading().expect("division by the zero polynomial");
        let dinv = dlead.inv().expect("nonzero leading coefficient");
        let dn = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return (Self::zero(&self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dn + 1];
        for top in (dn - 1..rem.len()).rev() {
            let c = &rem[top] * &dinv;
            if c.is_zero() {
                continue;
            }
            let shift = top + 1 - dn;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * d);
            }
            quot[shift] = c;
        }
        (Self::new(&self.field, quot), Self::new(&self.field, rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Self::new(&self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// `base^e mod m`.
    pub fn powmod(base: &Self, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::constant(m.field.one()).divrem(m).1;
        let mut b = base.divrem(m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).divrem(m).1;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b).divrem(m).1;
            }
        }
        acc
    }

    /// Distinct roots in a finite field, in enumeration order, plus the
    /// number of field elements evaluated to find them.
    ///
    /// The root count comes from `gcd(f, x^q - x)`; elements are enumerated
    /// only when that gcd has degree at least 2.
    pub fn roots_in_field(&self) -> (Vec<Scalar>, u64) {
        let q = self.field.order().expect("roots_in_field needs a finite field");
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let x = Self::x(&self.field);
        let split = Self::powmod(&x, q, self).sub(&x).divrem(self).1;
        let g = self.gcd(&split);
        match g.degree() {
            Some(0) | None => (vec![], 0),
            Some(1) => (vec![-&g.coeffs[0]], 0),
            Some(count) => {
                let mut found = Vec::with_capacity(count);
                let mut evaluated = 0;
                for e in self.field.elements() {
                    evaluated += 1;
                    if g.eval(&e).is_zero() {
                        found.push(e);
                        if found.len() == count {
                            break;
                        }
                    }
                }
                (found, evaluated)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &Field, c: &[i64]) -> UniPoly {
        UniPoly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn gcd_detects_repeated_factor() {
        let q = Field::Rational;
        // (x - 1)^2 (x + 2) = x^3 - 3x + 2
        let f = poly(&q, &[2, -3, 0, 1]);
        let g = f.gcd(&f.derivative());
        assert_eq!(g, poly(&q, &[-1, 1]));
    }

    #[test]
    fn roots_over_prime_and_extension() {
        let f7 = Field::parse("7").unwrap();
        // x^2 + 1 has no roots mod 7
        assert!(poly(&f7, &[1, 0, 1]).roots_in_field().0.is_empty());
        let f49 = Field::parse("7^2").unwrap();
        let (roots, _) = poly(&f49, &[1, 0, 1]).roots_in_field();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!(poly(&f49, &[1, 0, 1]).eval(&r).is_zero());
        }
        assert!(poly(&f7, &[5]).roots_in_field().0.is_empty());
        let cubic = poly(&f7, &[-1, 1]).mul(&poly(&f7, &[-2, 1])).mul(&poly(&f7, &[-3, 1]));
        let (roots, _) = cubic.roots_in_field();
        assert_eq!(roots, vec![f7.from_i64(1), f7.from_i64(2), f7.from_i64(3)]);
    }

    #[test]
    fn divrem_identity() {
        let f = Field::parse("101").unwrap();
        let a = poly(&f, &[3, 1, 4, 1, 5, 9]);
        let b = poly(&f, &[2, 6, 5]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }
}
