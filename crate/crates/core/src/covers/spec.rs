//! Validated parameters of uniform and triple cyclic covers.

use crate::error::{Error, Result};
use crate::forms::Form;

/// A uniform cyclic cover of `P^n` of degree `r`, branched along the
/// hypersurface `F = 0` of degree `r d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformCoverSpec {
    pub n: u32,
    pub r: u32,
    pub d: u32,
    pub form: Form,
}

impl UniformCoverSpec {
    pub fn new(n: u32, r: u32, d: u32, form: Form) -> Result<Self> {
        if n == 0 || r == 0 || d == 0 {
            return Err(Error::InvalidParameter(format!("n, r, d must be positive, got ({n}, {r}, {d})")));
        }
        if form.num_vars() != n as usize + 1 {
            return Err(Error::InvalidForm(format!("expected {} variables, got {}", n + 1, form.num_vars())));
        }
        if form.degree() as u64 != r as u64 * d as u64 {
            return Err(Error::InvalidForm(format!("expected degree r*d = {}, got {}", r as u64 * d as u64, form.degree())));
        }
        if form.is_zero() {
            return Err(Error::InvalidForm("branch form is zero".into()));
        }
        Ok(UniformCoverSpec { n, r, d, form })
    }

    /// Reads `n` and `d` off the form: `n + 1` variables, degree `r d`.
    pub fn from_form(r: u32, form: Form) -> Result<Self> {
        if r == 0 || !form.degree().is_multiple_of(r) {
            return Err(Error::InvalidForm(format!("degree {} is not a multiple of r = {r}", form.degree())));
        }
        let n = form.num_vars().checked_sub(1).ok_or_else(|| Error::InvalidForm("no variables".into()))? as u32;
        Self::new(n, r, form.degree() / r, form)
    }
}

/// A cyclic triple cover of `P^1` with branch degrees `(d1, d2)` and
/// branch forms of degrees `2 d1 - d2` and `2 d2 - d1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleCoverSpec {
    pub d1: u32,
    pub d2: u32,
    pub f1: Form,
    pub f2: Form,
}

/// `(2 d1 - d2, 2 d2 - d1)` when both are nonnegative.
pub fn branch_form_degrees(d1: u32, d2: u32) -> Result<(u32, u32)> {
    let (a, b) = (2 * d1 as i64 - d2 as i64, 2 * d2 as i64 - d1 as i64);
    if a < 0 || b < 0 {
        return Err(Error::InvalidBranchDegrees(format!("need 2d1 - d2 >= 0 and 2d2 - d1 >= 0, got ({d1}, {d2})")));
    }
    Ok((a as u32, b as u32))
}

impl TripleCoverSpec {
    pub fn new(d1: u32, d2: u32, f1: Form, f2: Form) -> Result<Self> {
        let (m1, m2) = branch_form_degrees(d1, d2)?;
        for (f, m, name) in [(&f1, m1, "f1"), (&f2, m2, "f2")] {
            if f.num_vars() != 2 {
                return Err(Error::InvalidForm(format!("{name} must be a binary form")));
            }
            if f.degree() != m {
                return Err(Error::InvalidForm(format!("{name} must have degree {m}, got {}", f.degree())));
            }
            if f.is_zero() {
                return Err(Error::InvalidForm(format!("{name} is zero")));
            }
        }
        if f1.field() != f2.field() {
            return Err(Error::FieldMismatch(format!("f1 over {} but f2 over {}", f1.field(), f2.field())));
        }
        Ok(TripleCoverSpec { d1, d2, f1, f2 })
    }

    /// Recovers `d1 = (2 m1 + m2)/3` and `d2 = (m1 + 2 m2)/3` from the degrees.
    pub fn from_forms(f1: Form, f2: Form) -> Result<Self> {
        let (m1, m2) = (f1.degree(), f2.degree());
        if (2 * m1 + m2) % 3 != 0 {
            return Err(Error::InvalidBranchDegrees(format!(
                "degrees ({m1}, {m2}) do not come from integral branch degrees"
            )));
        }
        Self::new((2 * m1 + m2) / 3, (m1 + 2 * m2) / 3, f1, f2)
    }

    /// The same cover with the roles of the two eigensheaves exchanged.
    pub fn swapped(&self) -> Self {
        TripleCoverSpec { d1: self.d2, d2: self.d1, f1: self.f2.clone(), f2: self.f1.clone() }
    }
}
