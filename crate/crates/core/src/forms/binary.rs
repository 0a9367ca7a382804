//! Resultants, discriminants and squarefreeness of binary forms.
//!
//! A binary form of degree `m` is `sum_i a_i x^(m-i) y^i`. The resultant is
//! the determinant of the Sylvester matrix built from the coefficient lists
//! `a_0, ..., a_m` (highest power of `x` first) at the full formal degrees:
//! `m2` shifted rows of `f` followed by `m1` shifted rows of `g`. With this
//! convention `Res(x, y) = 1` and `Res(f, g) = (-1)^(m1 m2) Res(g, f)`.
//! Working with formal degrees accounts for the point `(1:0)`: the
//! resultant vanishes exactly when the forms share a projective zero.

use super::form::Form;
use crate::error::{Error, Result};
use crate::exact::{FieldMatrix, Scalar, UniPoly};

fn check_binary(f: &Form) -> Result<()> {
    if f.num_vars() != 2 {
        return Err(Error::InvalidForm(format!("expected a binary form, got {} variables", f.num_vars())));
    }
    Ok(())
}

pub fn sylvester_resultant(f: &Form, g: &Form) -> Result<Scalar> {
    check_binary(f)?;
    check_binary(g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroFormResultant);
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch(format!("resultant of forms over {} and {}", f.field(), g.field())));
    }
    let field = f.field();
    let (m1, m2) = (f.degree() as usize, g.degree() as usize);
    let size = m1 + m2;
    if size == 0 {
        return Ok(field.one());
    }
    let a = f.binary_coeffs();
    let b = g.binary_coeffs();
    let mut entries = vec![field.zero(); size * size];
    for row in 0..m2 {
        for (j, c) in a.iter().enumerate() {
            entries[row * size + row + j] = c.clone();
        }
    }
    for row in 0..m1 {
        for (j, c) in b.iter().enumerate() {
            entries[(m2 + row) * size + row + j] = c.clone();
        }
    }
    Ok(FieldMatrix::new(field, size, size, entries)?.det())
}

fn check_characteristic(f: &Form) -> Result<()> {
    if f.field().char_divides(f.degree() as u64) {
        return Err(Error::BadCharacteristic(format!(
            "characteristic {} divides the degree {}",
            f.field().characteristic(),
            f.degree()
        )));
    }
    Ok(())
}

/// `Res(df/dx, df/dy)`, of degree `2(m-1)` in the coefficients of `f`.
///
/// Vanishes exactly when `f` has a multiple projective root. When a partial
/// is identically zero, `f` is `c y^m` or `c x^m` and the value is 0.
pub fn disc_binary(f: &Form) -> Result<Scalar> {
    check_binary(f)?;
    if f.degree() < 2 {
        return Err(Error::InvalidParameter(format!("discriminant needs degree at least 2, got {}", f.degree())));
    }
    check_characteristic(f)?;
    let partials = f.partials();
    if partials.iter().any(Form::is_zero) {
        return Ok(f.field().zero());
    }
    sylvester_resultant(&partials[0], &partials[1])
}

/// Dehomogenization `f(t, 1)` together with the multiplicity of the root `(1:0)`.
pub fn dehomogenize(f: &Form) -> (UniPoly, u32) {
    let field = f.field();
    let coeffs = f.binary_coeffs();
    // coefficient of t^k in f(t, 1) is the coefficient of x^k y^(m-k)
    let up = UniPoly::new(field, coeffs.into_iter().rev().collect());
    let at_infinity = f.degree() - up.degree().map_or(0, |d| d as u32);
    (up, at_infinity)
}

/// Squarefreeness through `gcd(g, g')` on the affine chart plus the
/// multiplicity of the point at infinity.
pub fn is_squarefree_binary(f: &Form) -> Result<bool> {
    check_binary(f)?;
    check_characteristic(f)?;
    if f.is_zero() {
        return Err(Error::InvalidForm("zero form".into()));
    }
    let (g, at_infinity) = dehomogenize(f);
    if at_infinity > 1 {
        return Ok(false);
    }
    Ok(g.gcd(&g.derivative()).degree() == Some(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;

    fn bin(field: &Field, c: &[i64]) -> Form {
        Form::binary(field, &c.iter().map(|&x| field.from_i64(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn resultant_examples() {
        let q = Field::Rational;
        assert_eq!(sylvester_resultant(&bin(&q, &[1, 0]), &bin(&q, &[0, 1])).unwrap(), q.one());
        assert_eq!(sylvester_resultant(&bin(&q, &[1, 0, 1]), &bin(&q, &[1, -1])).unwrap(), q.from_i64(2));
        let f = bin(&q, &[1, 3, 2]);
        assert!(sylvester_resultant(&f, &f).unwrap().is_zero());
        let z = Form::zero(&q, 2, 3);
        assert_eq!(sylvester_resultant(&z, &f), Err(Error::ZeroFormResultant));
    }

    #[test]
    fn discriminant_examples() {
        let q = Field::Rational;
        assert!(disc_binary(&bin(&q, &[1, 0, 0, 0])).unwrap().is_zero());
        assert!(!disc_binary(&bin(&q, &[0, 1, 0])).unwrap().is_zero());
        assert_eq!(disc_binary(&bin(&q, &[1, 1, 1])).unwrap(), q.from_i64(3));
        let f3 = Field::parse("3").unwrap();
        assert!(disc_binary(&bin(&f3, &[1, 1, 1])).unwrap().is_zero());
        assert!(matches!(disc_binary(&bin(&f3, &[1, 0, 0, 1])), Err(Error::BadCharacteristic(_))));
    }

    #[test]
    fn squarefree_examples() {
        let q = Field::Rational;
        // x^2 y
        assert!(!is_squarefree_binary(&bin(&q, &[0, 1, 0, 0])).unwrap());
        // xy(x - y) = x^2 y - x y^2
        assert!(is_squarefree_binary(&bin(&q, &[0, 1, -1, 0])).unwrap());
        // y^2 x: double root at (1:0)
        assert!(!is_squarefree_binary(&bin(&q, &[0, 0, 1, 0])).unwrap());
    }
}
