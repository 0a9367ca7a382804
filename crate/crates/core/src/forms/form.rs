//! Homogeneous forms and the linear group actions on them.

use std::fmt;

use rand::Rng;

use super::poly::{Exponents, Poly};
use super::text;
use crate::error::{Error, Result};
use crate::exact::{Field, FieldMatrix, Scalar};

/// A homogeneous polynomial of fixed degree in `num_vars` variables.
///
/// The zero form keeps its nominal degree so that spaces of forms stay
/// closed under addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    poly: Poly,
    degree: u32,
}

impl Form {
    /// Wraps a nonzero homogeneous polynomial.
    pub fn new(poly: Poly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::InvalidForm("zero polynomial has no intrinsic degree; use Form::zero".into()));
        }
        let degree = poly
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidForm("polynomial is not homogeneous".into()))?;
        Ok(Form { poly, degree })
    }

    /// Wraps a polynomial that is zero or homogeneous of the given degree.
    pub fn with_degree(poly: Poly, degree: u32) -> Result<Self> {
        if !poly.is_zero() && poly.homogeneous_degree() != Some(degree) {
            return Err(Error::InvalidForm(format!("polynomial is not homogeneous of degree {degree}")));
        }
        Ok(Form { poly, degree })
    }

    pub fn zero(field: &Field, num_vars: usize, degree: u32) -> Self {
        Form { poly: Poly::zero(field, num_vars), degree }
    }

    pub fn constant(c: Scalar, num_vars: usize) -> Self {
        Form { poly: Poly::constant(c, num_vars), degree: 0 }
    }

    pub fn var(field: &Field, num_vars: usize, i: usize) -> Self {
        Form { poly: Poly::var(field, num_vars, i), degree: 1 }
    }

    pub fn from_terms<I>(field: &Field, num_vars: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, Scalar)>,
    {
        Self::with_degree(Poly::from_terms(field, num_vars, terms)?, degree)
    }

    /// Binary form `sum_i c[i] x^(m-i) y^i` from coefficients listed from `x^m` down.
    pub fn binary(field: &Field, coeffs: &[Scalar]) -> Result<Self> {
        let m = coeffs.len().checked_sub(1).ok_or_else(|| Error::InvalidForm("no coefficients".into()))? as u32;
        let terms = coeffs.iter().enumerate().map(|(i, c)| (vec![m - i as u32, i as u32], c.clone()));
        Self::from_terms(field, 2, m, terms)
    }

    /// A form with independent uniform coefficients on every monomial.
    pub fn random<R: Rng + ?Sized>(field: &Field, num_vars: usize, degree: u32, rng: &mut R) -> Self {
        let terms = monomials(num_vars, degree).into_iter().map(|e| (e, field.random(rng)));
        Self::from_terms(field, num_vars, degree, terms).expect("monomials have the right degree")
    }

    pub fn parse(input: &str, field: Option<&Field>) -> Result<Self> {
        Self::new(text::parse_poly(input, field)?)
    }

    /// The form in the text format; empty for the zero form.
    pub fn to_text(&self) -> String {
        text::format_poly(&self.poly)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn field(&self) -> &Field {
        self.poly.field()
    }

    pub fn num_vars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coefficient(&self, e: &[u32]) -> Scalar {
        self.poly.coefficient(e)
    }

    /// Coefficients of a binary form from `x^m` down to `y^m`.
    pub fn binary_coeffs(&self) -> Vec<Scalar> {
        assert_eq!(self.num_vars(), 2, "not a binary form");
        let m = self.degree;
        (0..=m).map(|i| self.coefficient(&[m - i, i])).collect()
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.poly.eval(point)
    }

    pub fn add(&self, rhs: &Form) -> Form {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degrees");
        Form { poly: self.poly.add(&rhs.poly), degree: self.degree }
    }

    pub fn sub(&self, rhs: &Form) -> Form {
        assert_eq!(self.degree, rhs.degree, "subtracting forms of different degrees");
        Form { poly: self.poly.sub(&rhs.poly), degree: self.degree }
    }

    pub fn mul(&self, rhs: &Form) -> Form {
        Form { poly: self.poly.mul(&rhs.poly), degree: self.degree + rhs.degree }
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        Form { poly: self.poly.scale(c), degree: self.degree }
    }

    /// `dF/dx_i` for every variable; degree drops by one (degree-0 forms
    /// give zero forms of degree 0).
    pub fn partials(&self) -> Vec<Form> {
        let degree = self.degree.saturating_sub(1);
        (0..self.num_vars()).map(|i| Form { poly: self.poly.partial(i), degree }).collect()
    }

    /// Reduction modulo a prime or embedding into an extension field.
    pub fn to_field(&self, target: &Field) -> Result<Form> {
        Ok(Form { poly: self.poly.to_field(target)?, degree: self.degree })
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// All exponent vectors of the given total degree, in increasing
/// lexicographic order.
pub fn monomials(num_vars: usize, degree: u32) -> Vec<Exponents> {
    fn fill(prefix: &mut Exponents, left: usize, remaining: u32, out: &mut Vec<Exponents>) {
        if left == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in 0..=remaining {
            prefix.push(k);
            fill(prefix, left - 1, remaining - k, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    if num_vars > 0 {
        fill(&mut vec![], num_vars, degree, &mut out);
    }
    out
}

/// The character twisting a linear substitution: the result is multiplied
/// by `alpha^scalar_exponent * det(A)^det_exponent`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TwistSpec {
    pub det_exponent: i64,
    pub scalar_exponent: i64,
}

impl TwistSpec {
    pub const TRIVIAL: TwistSpec = TwistSpec { det_exponent: 0, scalar_exponent: 0 };

    pub fn new(det_exponent: i64, scalar_exponent: i64) -> Self {
        TwistSpec { det_exponent, scalar_exponent }
    }

    /// Twist for degree-`rd` forms in `n+1` variables once `GL_{n+1}/mu_d`
    /// is identified with `G_m x PGL_{n+1}` (`d = q(n+1)`) or with
    /// `GL_{n+1}` (`d = q(n+1) +- 1`). When `n+1 = 2` and `d` is odd the
    /// `+1` form is used.
    pub fn uniform(n: u32, r: u32, d: u32) -> Result<TwistSpec> {
        let m = n + 1;
        let (r, d64, m64) = (r as i64, d as i64, m as i64);
        match d % m {
            0 => Ok(TwistSpec::new(r * (d64 / m64), -r)),
            1 => Ok(TwistSpec::new(r * (d64 / m64), 0)),
            x if x == m - 1 => Ok(TwistSpec::new(-r * ((d64 + 1) / m64), 0)),
            _ => Err(Error::NoClosedFormIsomorphism { d, m }),
        }
    }

    /// Twists for `(f1, f2)` under `G_m x GL_2`: `alpha^{d2}` and `alpha^{-2 d2}`.
    pub fn triple(d2: u32) -> (TwistSpec, TwistSpec) {
        let d2 = d2 as i64;
        (TwistSpec::new(0, d2), TwistSpec::new(0, -2 * d2))
    }
}

/// `alpha^{scalar_exponent} det(A)^{det_exponent} f(A^{-1} x)`.
pub fn act_linear(f: &Form, a: &FieldMatrix, alpha: Option<&Scalar>, twist: TwistSpec) -> Result<Form> {
    let n = f.num_vars();
    if !a.is_square() || a.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix acting on forms in {n} variables",
            a.rows(),
            a.cols()
        )));
    }
    if a.field() != f.field() {
        return Err(Error::FieldMismatch(format!("matrix over {} acting on a form over {}", a.field(), f.field())));
    }
    let inv = a.inverse()?;
    let mut factor = a.det().powi(twist.det_exponent).expect("invertible matrix has nonzero determinant");
    if twist.scalar_exponent != 0 {
        let alpha = alpha.ok_or_else(|| {
            Error::InvalidParameter("the twist has a scalar exponent but no scalar was given".into())
        })?;
        if !f.field().contains(alpha) {
            return Err(Error::FieldMismatch(format!("scalar {alpha} is not in {}", f.field())));
        }
        let s = alpha
            .powi(twist.scalar_exponent)
            .ok_or_else(|| Error::InvalidParameter("scalar must be nonzero".into()))?;
        factor = &factor * &s;
    }
    let substituted = substitute_linear(f.poly(), &inv);
    Ok(Form { poly: substituted.scale(&factor), degree: f.degree() })
}

/// `p(M x)`: variable `x_i` becomes `sum_j M[i][j] x_j`.
pub fn substitute_linear(p: &Poly, m: &FieldMatrix) -> Poly {
    let n = p.nvars();
    let field = p.field();
    let linear: Vec<Poly> = (0..n)
        .map(|i| {
            let terms = (0..n).map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                (e, m.get(i, j).clone())
            });
            Poly::from_terms(field, n, terms).expect("matrix entries lie in the field")
        })
        .collect();
    let mut powers: Vec<Vec<Poly>> = linear.iter().map(|l| vec![Poly::constant(field.one(), n), l.clone()]).collect();
    let mut out = Poly::zero(field, n);
    for (e, c) in p.terms() {
        let mut t = Poly::constant(c.clone(), n);
        for (i, &k) in e.iter().enumerate() {
            let k = k as usize;
            while powers[i].len() <= k {
                let next = powers[i].last().unwrap().mul(&linear[i]);
                powers[i].push(next);
            }
            if k > 0 {
                t = t.mul(&powers[i][k]);
            }
        }
        out = out.add(&t);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(3, 4).len(), 15);
        assert_eq!(monomials(2, 0), vec![vec![0, 0]]);
        assert!(monomials(2, 3).iter().all(|e| e.iter().sum::<u32>() == 3));
    }

    #[test]
    fn shear_substitution() {
        let q = Field::Rational;
        let x = Form::var(&q, 2, 0);
        let y = Form::var(&q, 2, 1);
        let f = x.mul(&x);
        let a = FieldMatrix::from_i64_rows(&q, &[vec![1, 1], vec![0, 1]]).unwrap();
        let g = act_linear(&f, &a, None, TwistSpec::TRIVIAL).unwrap();
        let xmy = x.sub(&y);
        assert_eq!(g, xmy.mul(&xmy));
    }

    #[test]
    fn scalar_matrix_scales_by_inverse_power() {
        let f7 = Field::parse("7").unwrap();
        let f = Form::binary(&f7, &[1, 2, 3, 4].map(|c| f7.from_i64(c))).unwrap();
        let beta = f7.from_i64(3);
        let a = FieldMatrix::scalar(&f7, 2, &beta);
        let g = act_linear(&f, &a, None, TwistSpec::TRIVIAL).unwrap();
        assert_eq!(g, f.scale(&beta.powi(-3).unwrap()));
    }

    #[test]
    fn action_errors() {
        let q = Field::Rational;
        let f = Form::var(&q, 2, 0);
        let singular = FieldMatrix::from_i64_rows(&q, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(act_linear(&f, &singular, None, TwistSpec::TRIVIAL), Err(Error::NonInvertibleMatrix));
        let id = FieldMatrix::identity(&q, 2);
        assert!(matches!(act_linear(&f, &id, None, TwistSpec::new(0, 1)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn uniform_twists() {
        assert_eq!(TwistSpec::uniform(1, 2, 4).unwrap(), TwistSpec::new(4, -2));
        assert_eq!(TwistSpec::uniform(1, 2, 3).unwrap(), TwistSpec::new(2, 0));
        assert_eq!(TwistSpec::uniform(2, 2, 5).unwrap(), TwistSpec::new(-4, 0));
        assert_eq!(TwistSpec::uniform(3, 1, 2), Err(Error::NoClosedFormIsomorphism { d: 2, m: 4 }));
    }

    #[test]
    fn partials_of_product() {
        let q = Field::Rational;
        let x = Form::var(&q, 2, 0);
        let y = Form::var(&q, 2, 1);
        assert_eq!(x.mul(&y).partials(), vec![y.clone(), x.clone()]);
    }
}
