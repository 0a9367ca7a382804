//! Hypersurfaces with a single ordinary double point.
//!
//! With `g(x) = x^m - x^2`, which has a double root at 0 and simple roots
//! elsewhere, `F = sum_i a_i (x_i^m - x_i^2 x_0^{m-2})` is singular at
//! `(1:0:...:0)` with nondegenerate Hessian `diag(-2 a_i)`. For generic
//! `a_i` there are no other singular points; for special ones (e.g. when
//! some partial sum `sum_{i in S} a_i xi_i^2` vanishes at critical points
//! `xi_i` of `g`) there are, and callers retry with fresh coefficients.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{Field, FieldMatrix, Scalar};
use crate::forms::{singular_point_search, Form, Poly, ProjectivePoint, SearchOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub form: Form,
    pub point: Vec<Scalar>,
    pub coefficients: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub partials_vanish: bool,
    /// Rank of the linear parts of the dehomogenized partials at the point.
    pub linear_rank: usize,
    /// Singular points found other than the expected one.
    pub extra_points: Vec<ProjectivePoint>,
    pub expected_found: bool,
    pub passed: bool,
}

/// Builds `F` for the coefficients `a = (a_1, ..., a_n)`.
pub fn generate_singular_witness(n: u32, m: u32, field: &Field, a: &[Scalar]) -> Result<Witness> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if m < 3 {
        return Err(Error::InvalidParameter(format!("m must be at least 3, got {m}")));
    }
    for (k, what) in [(m as u64, "m"), (m as u64 - 2, "m - 2"), (2, "2")] {
        if field.char_divides(k) {
            return Err(Error::BadCharacteristic(format!("characteristic {} divides {what}", field.characteristic())));
        }
    }
    if a.len() != n as usize {
        return Err(Error::InvalidParameter(format!("expected {n} coefficients, got {}", a.len())));
    }
    if let Some(bad) = a.iter().find(|c| !field.contains(c)) {
        return Err(Error::FieldMismatch(format!("coefficient {bad} is not in {field}")));
    }
    if a.iter().any(Scalar::is_zero) {
        return Err(Error::InvalidParameter("coefficients must be nonzero".into()));
    }
    let nv = n as usize + 1;
    let mut terms = vec![];
    for (i, c) in a.iter().enumerate() {
        let mut top = vec![0; nv];
        top[i + 1] = m;
        terms.push((top, c.clone()));
        let mut low = vec![0; nv];
        low[i + 1] = 2;
        low[0] = m - 2;
        terms.push((low, -c));
    }
    let form = Form::from_terms(field, nv, m, terms)?;
    let mut point = vec![field.zero(); nv];
    point[0] = field.one();
    Ok(Witness { form, point, coefficients: a.to_vec() })
}

/// Rank of the matrix of linear terms of `dF/dx_i`, `i >= 1`, after setting
/// `x_0 = 1`.
pub fn linear_part_rank(form: &Form) -> usize {
    let field = form.field();
    let nv = form.num_vars();
    let partials = form.partials();
    let mut entries = vec![];
    for g in &partials[1..] {
        let affine: Poly = g.poly().substitute(0, &field.one());
        for j in 1..nv {
            let mut e = vec![0; nv];
            e[j] = 1;
            entries.push(affine.coefficient(&e));
        }
    }
    FieldMatrix::new(field, nv - 1, nv - 1, entries).expect("square").rank()
}

/// Checks the point, the linear rank, and searches for other singular
/// points. Forms over the rationals are reduced into `search_field` first.
pub fn verify_witness(w: &Witness, search_field: Option<&Field>, options: SearchOptions) -> Result<WitnessCheck> {
    let partials_vanish = w.form.partials().iter().all(|g| g.eval(&w.point).is_zero());
    let linear_rank = linear_part_rank(&w.form);
    let searched = match (w.form.field(), search_field) {
        (Field::Rational, Some(target)) => w.form.to_field(target)?,
        (Field::Rational, None) => {
            return Err(Error::InvalidParameter("a prime field is needed to search a rational form".into()))
        }
        _ => w.form.clone(),
    };
    let points = singular_point_search(&searched, options)?;
    let expected_found = points.iter().any(ProjectivePoint::is_first_coordinate_point);
    let extra_points: Vec<ProjectivePoint> =
        points.into_iter().filter(|p| !p.is_first_coordinate_point()).collect();
    let n = w.form.num_vars() - 1;
    let passed = partials_vanish && linear_rank == n && expected_found && extra_points.is_empty();
    Ok(WitnessCheck { partials_vanish, linear_rank, extra_points, expected_found, passed })
}

/// Draws random nonzero coefficients until the witness verifies.
pub fn generate_verified_witness<R: Rng + ?Sized>(
    n: u32,
    m: u32,
    field: &Field,
    rng: &mut R,
    max_attempts: u32,
    options: SearchOptions,
) -> Result<(Witness, WitnessCheck, u32)> {
    for attempt in 1..=max_attempts {
        let a: Vec<Scalar> = (0..n).map(|_| field.random_nonzero(rng)).collect();
        let w = generate_singular_witness(n, m, field, &a)?;
        let check = verify_witness(&w, None, options)?;
        if check.passed {
            return Ok((w, check, attempt));
        }
    }
    Err(Error::InvalidParameter(format!("no generic coefficients found in {max_attempts} attempts")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_quartic_witness() {
        let f = Field::parse("101").unwrap();
        let w = generate_singular_witness(2, 4, &f, &[f.one(), f.one()]).unwrap();
        let check = verify_witness(&w, None, SearchOptions::new(2)).unwrap();
        assert!(check.passed, "{check:?}");
        assert_eq!(check.linear_rank, 2);
    }

    #[test]
    fn special_coefficients_add_singularities() {
        // a = (1, -1): xi_1 = xi_2 = a critical point makes the x0-partial vanish too
        let f = Field::parse("101").unwrap();
        let w = generate_singular_witness(2, 4, &f, &[f.one(), -f.one()]).unwrap();
        let check = verify_witness(&w, None, SearchOptions::new(2)).unwrap();
        assert!(check.partials_vanish && check.expected_found);
        assert!(!check.extra_points.is_empty());
        assert!(!check.passed);
    }

    #[test]
    fn rejects_bad_input() {
        let f5 = Field::parse("5").unwrap();
        assert!(matches!(
            generate_singular_witness(2, 5, &f5, &[f5.one(), f5.one()]),
            Err(Error::BadCharacteristic(_))
        ));
        let q = Field::Rational;
        assert!(generate_singular_witness(2, 2, &q, &[q.one(), q.one()]).is_err());
        assert!(generate_singular_witness(2, 4, &q, &[q.one(), q.zero()]).is_err());
    }
}
