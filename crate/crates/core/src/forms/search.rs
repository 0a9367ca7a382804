//! Search for singular points of projective hypersurfaces over finite fields.
//!
//! For each extension `F_{p^j}`, `j <= ext_bound`, every affine chart
//! `x_0 = ... = x_{c-1} = 0, x_c = 1` is explored by assigning the free
//! coordinates one at a time. A branch is cut as soon as some partial
//! becomes a nonzero constant, and when a partial depends on the next
//! coordinate alone only the roots of the gcd of such partials are tried.
//! Both cuts are exact, so the result is the complete singular locus over
//! each enumerated field.

use std::fmt;

use super::form::Form;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::exact::{Field, Scalar, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest extension degree searched.
    pub ext_bound: u32,
    /// Maximum number of search steps (nodes visited plus field elements
    /// tried during root finding).
    pub budget: u64,
}

impl SearchOptions {
    pub const DEFAULT_BUDGET: u64 = 5_000_000;

    pub fn new(ext_bound: u32) -> Self {
        SearchOptions { ext_bound, budget: Self::DEFAULT_BUDGET }
    }
}

/// A point of `P^n` normalized so that its first nonzero coordinate is 1,
/// defined over `F_{p^degree}` and over no smaller field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePoint {
    pub coords: Vec<Scalar>,
    pub degree: u32,
}

impl ProjectivePoint {
    /// True for the point `(1:0:...:0)`.
    pub fn is_first_coordinate_point(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Scalar::is_zero)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(Scalar::value_string).collect();
        write!(f, "({})", parts.join(":"))?;
        if let Some(field) = self.coords.first().map(Scalar::field) {
            write!(f, " over {field}")?;
        }
        Ok(())
    }
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn spend(&mut self, n: u64) -> Result<()> {
        self.used += n;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        Ok(())
    }
}

/// Every point over `F_{p^j}`, `1 <= j <= ext_bound`, where all partial
/// derivatives of `f` vanish. Points are listed by field degree, then by
/// the enumeration index of their coordinates. Requires a form over a
/// prime field `F_p`; forms over the rationals must be reduced first.
pub fn singular_point_search(f: &Form, options: SearchOptions) -> Result<Vec<ProjectivePoint>> {
    let p = match f.field() {
        Field::Finite(g) if g.degree() == 1 => g.characteristic(),
        Field::Rational => {
            return Err(Error::Unsupported("singular point search over Q; reduce the form modulo a prime".into()))
        }
        other => return Err(Error::Unsupported(format!("singular point search needs a prime field, got {other}"))),
    };
    if options.ext_bound == 0 {
        return Err(Error::InvalidParameter("extension bound must be at least 1".into()));
    }
    let mut budget = Budget { limit: options.budget, used: 0 };
    let mut points = vec![];
    for j in 1..=options.ext_bound {
        let field = Field::finite(p, j)?;
        let partials: Vec<Poly> =
            f.partials().iter().map(|g| g.poly().to_field(&field)).collect::<Result<_>>()?;
        let mut found = vec![];
        let n = f.num_vars();
        for chart in 0..n {
            let mut assigned = vec![field.zero(); chart];
            assigned.push(field.one());
            let polys: Vec<Poly> = partials
                .iter()
                .map(|g| {
                    let mut g = g.clone();
                    for (i, v) in assigned.iter().enumerate() {
                        g = g.substitute(i, v);
                    }
                    g
                })
                .collect();
            explore(&field, n, polys, &mut assigned, &mut budget, &mut found)?;
        }
        let proper: Vec<u32> = (1..j).filter(|i| j % i == 0).collect();
        let mut new_points: Vec<ProjectivePoint> = found
            .into_iter()
            .filter(|c| !proper.iter().any(|&i| c.iter().all(|x| x.frobenius(i) == *x)))
            .map(|coords| ProjectivePoint { coords, degree: j })
            .collect();
        new_points.sort_by_key(|pt| pt.coords.iter().map(index_of).collect::<Vec<_>>());
        points.extend(new_points);
    }
    Ok(points)
}

fn index_of(s: &Scalar) -> u64 {
    match s {
        Scalar::Finite(x) => x.index(),
        Scalar::Rational(_) => 0,
    }
}

fn explore(
    field: &Field,
    n: usize,
    polys: Vec<Poly>,
    assigned: &mut Vec<Scalar>,
    budget: &mut Budget,
    found: &mut Vec<Vec<Scalar>>,
) -> Result<()> {
    budget.spend(1)?;
    let mut live = Vec::with_capacity(polys.len());
    for g in polys {
        match g.as_constant() {
            Some(c) if c.is_zero() => {}
            Some(_) => return Ok(()),
            None => live.push(g),
        }
    }
    let v = assigned.len();
    if v == n {
        found.push(assigned.clone());
        return Ok(());
    }
    if live.is_empty() {
        // every completion is singular
        let free = (n - v) as u32;
        let q = field.order().expect("finite field");
        let total = q.checked_pow(free).ok_or(Error::BudgetExceeded { budget: budget.limit })?;
        budget.spend(total)?;
        for idx in 0..total {
            let mut pt = assigned.clone();
            let mut rest = idx;
            let mut tail = vec![];
            for _ in 0..free {
                tail.push(field.element(rest % q));
                rest /= q;
            }
            tail.reverse();
            pt.extend(tail);
            found.push(pt);
        }
        return Ok(());
    }
    let univariate: Vec<UniPoly> = live
        .iter()
        .filter(|g| (0..n).all(|i| i == v || !g.involves(i)))
        .filter_map(|g| g.as_univariate(v))
        .collect();
    let candidates: Vec<Scalar> = if univariate.is_empty() {
        let q = field.order().expect("finite field");
        budget.spend(q)?;
        field.elements().collect()
    } else {
        let g = univariate.iter().skip(1).fold(univariate[0].clone(), |acc, u| acc.gcd(u));
        let (roots, tried) = g.roots_in_field();
        budget.spend(tried)?;
        roots
    };
    for value in candidates {
        let next: Vec<Poly> = live.iter().map(|g| g.substitute(v, &value)).collect();
        assigned.push(value);
        explore(field, n, next, assigned, budget, found)?;
        assigned.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(text: &str, field: &str) -> Form {
        Form::parse(text, Some(&Field::parse(field).unwrap())).unwrap()
    }

    #[test]
    fn smooth_conic_has_no_singular_points() {
        let f = form("1 2,0,0\n1 0,2,0\n1 0,0,2\n", "7");
        assert!(singular_point_search(&f, SearchOptions::new(2)).unwrap().is_empty());
    }

    #[test]
    fn double_plane_is_singular_along_a_line() {
        // x0^2 x1: partials 2 x0 x1 and x0^2 vanish on the line x0 = 0
        let f = form("1 2,1,0\n", "5");
        let pts = singular_point_search(&f, SearchOptions::new(1)).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|p| p.coords[0].is_zero()));
        assert!(!pts.iter().any(ProjectivePoint::is_first_coordinate_point));
    }

    #[test]
    fn points_defined_over_extensions_only_once() {
        // the cone x^2 + y^2 is singular only at its vertex
        let f = form("1 2,0,0\n1 0,2,0\n", "7");
        let pts = singular_point_search(&f, SearchOptions::new(2)).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].degree, 1);
        assert_eq!(pts[0].to_string(), "(0:0:1) over F_7");
    }

    #[test]
    fn budget_is_enforced() {
        let f = form("1 1,1,1\n", "101");
        let opts = SearchOptions { ext_bound: 1, budget: 2 };
        assert_eq!(singular_point_search(&f, opts), Err(Error::BudgetExceeded { budget: 2 }));
    }
}
