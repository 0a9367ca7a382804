//! Smoothness of covers, decided through their branch divisors.

use std::fmt;

use serde_json::{json, Value};

use super::spec::{TripleCoverSpec, UniformCoverSpec};
use crate::error::{Error, Result};
use crate::forms::{disc_binary, is_squarefree_binary, singular_point_search, Form, ProjectivePoint, SearchOptions};

/// How much a verdict proves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strength {
    /// Decided over the algebraic closure.
    Exact,
    /// Only the points over `F_{p^j}`, `j <= ext_bound`, were examined.
    Bounded { ext_bound: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub smooth: bool,
    pub strength: Strength,
    pub reason: String,
    pub witness: Option<ProjectivePoint>,
}

impl Verdict {
    fn exact(smooth: bool, reason: impl Into<String>) -> Self {
        Verdict { smooth, strength: Strength::Exact, reason: reason.into(), witness: None }
    }

    pub fn to_json(&self) -> Value {
        let (strength, bound) = match self.strength {
            Strength::Exact => ("exact", Value::Null),
            Strength::Bounded { ext_bound } => ("bounded", json!(ext_bound)),
        };
        json!({
            "smooth": self.smooth,
            "strength": strength,
            "ext_bound": bound,
            "reason": self.reason,
            "witness": self.witness.as_ref().map(|p| p.to_string()),
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.smooth { "smooth" } else { "not smooth" };
        match self.strength {
            Strength::Exact => write!(f, "{word} (exact): {}", self.reason)?,
            Strength::Bounded { ext_bound } => {
                write!(f, "{word} (checked over extensions of degree <= {ext_bound}): {}", self.reason)?
            }
        }
        if let Some(p) = &self.witness {
            write!(f, "; singular point {p}")?;
        }
        Ok(())
    }
}

fn guard_characteristic(form: &Form, n: u64, what: &str) -> Result<()> {
    if form.field().char_divides(n) {
        return Err(Error::BadCharacteristic(format!(
            "characteristic {} divides {what} = {n}",
            form.field().characteristic()
        )));
    }
    Ok(())
}

/// The cover is smooth exactly when its branch hypersurface `F = 0` is.
///
/// For `n = 1` the discriminant decides this exactly. For `n >= 2` the
/// singular locus is searched over `F_{p^j}`, `j <= ext_bound`; the form
/// must then be defined over a prime field.
pub fn is_smooth_uniform(spec: &UniformCoverSpec, options: SearchOptions) -> Result<Verdict> {
    let f = &spec.form;
    guard_characteristic(f, 2 * spec.r as u64 * spec.d as u64, "2rd")?;
    if f.degree() == 1 {
        return Ok(Verdict::exact(true, "the branch divisor is a hyperplane"));
    }
    if spec.n == 1 {
        let disc = disc_binary(f)?;
        return Ok(if disc.is_zero() {
            Verdict::exact(false, "discriminant vanishes: repeated root")
        } else {
            Verdict::exact(true, format!("discriminant {} is nonzero", disc.value_string()))
        });
    }
    let points = singular_point_search(f, options)?;
    let strength = Strength::Bounded { ext_bound: options.ext_bound };
    Ok(match points.into_iter().next() {
        Some(p) => Verdict { smooth: false, strength, reason: "partials have a common zero".into(), witness: Some(p) },
        None => Verdict { smooth: true, strength, reason: "no common zero of the partials found".into(), witness: None },
    })
}

/// Smooth exactly when `f1` and `f2` have no repeated roots and no common
/// root: squarefreeness on each form plus a resultant.
pub fn is_smooth_triple(spec: &TripleCoverSpec) -> Result<Verdict> {
    let (f1, f2) = (&spec.f1, &spec.f2);
    guard_characteristic(f1, 2, "2")?;
    for f in [f1, f2] {
        if f.degree() >= 2 {
            guard_characteristic(f, f.degree() as u64, "a branch form degree")?;
        }
    }
    for (f, name) in [(f1, "f1"), (f2, "f2")] {
        if f.degree() >= 2 && !is_squarefree_binary(f)? {
            return Ok(Verdict::exact(false, format!("{name} has a repeated root")));
        }
    }
    let res = crate::forms::sylvester_resultant(f1, f2)?;
    Ok(if res.is_zero() {
        Verdict::exact(false, "f1 and f2 have a common root")
    } else {
        Verdict::exact(true, "f1 and f2 are squarefree and coprime")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;

    fn bin(field: &Field, c: &[i64]) -> Form {
        Form::binary(field, &c.iter().map(|&x| field.from_i64(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn uniform_binary_examples() {
        let q = Field::Rational;
        // xy(x - y)(x + y) = x^3 y - x y^3
        let spec = UniformCoverSpec::new(1, 2, 2, bin(&q, &[0, 1, 0, -1, 0])).unwrap();
        let v = is_smooth_uniform(&spec, SearchOptions::new(1)).unwrap();
        assert!(v.smooth);
        assert_eq!(v.strength, Strength::Exact);
        let spec = UniformCoverSpec::new(1, 2, 1, bin(&q, &[1, 0, 0])).unwrap();
        assert!(!is_smooth_uniform(&spec, SearchOptions::new(1)).unwrap().smooth);
    }

    #[test]
    fn fermat_sextic() {
        let f7 = Field::parse("7").unwrap();
        let f = Form::parse("1 6,0,0\n1 0,6,0\n1 0,0,6\n", Some(&f7)).unwrap();
        let spec = UniformCoverSpec::new(2, 2, 3, f).unwrap();
        let v = is_smooth_uniform(&spec, SearchOptions::new(2)).unwrap();
        assert!(v.smooth);
        assert_eq!(v.strength, Strength::Bounded { ext_bound: 2 });
    }

    #[test]
    fn triple_examples() {
        let q = Field::Rational;
        let x = bin(&q, &[1, 0]);
        let y = bin(&q, &[0, 1]);
        assert!(is_smooth_triple(&TripleCoverSpec::new(1, 1, x.clone(), y).unwrap()).unwrap().smooth);
        assert!(!is_smooth_triple(&TripleCoverSpec::new(1, 1, x.clone(), x).unwrap()).unwrap().smooth);
        // f1 = x^2 y, f2 constant: (d1, d2) = (2, 1)
        let spec = TripleCoverSpec::new(2, 1, bin(&q, &[0, 1, 0, 0]), bin(&q, &[1])).unwrap();
        assert!(!is_smooth_triple(&spec).unwrap().smooth);
    }
}
