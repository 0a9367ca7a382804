//! Line-based text format for polynomials and forms.
//!
//! One term per line: `<coefficient> <e0,e1,...,en>`. Coefficients are an
//! integer `-3`, a rational `5/7`, or a finite-field element `a mod p^k`
//! where `a` is an integer (prime subfield) or a power-basis vector
//! `[c0,c1,...]`; `mod p` abbreviates `mod p^1`. Blank lines and lines
//! starting with `#` are ignored.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::{Exponents, Poly};
use crate::error::{Error, Result};
use crate::exact::{Field, Scalar};

/// Prints terms from the highest exponent vector (in lexicographic order) down.
pub fn format_poly(p: &Poly) -> String {
    let mut out = String::new();
    for (e, c) in p.terms().rev() {
        let exps: Vec<String> = e.iter().map(|k| k.to_string()).collect();
        out.push_str(&format!("{c} {}\n", exps.join(",")));
    }
    out
}

enum RawCoeff {
    Rational(BigRational),
    Finite { value: FiniteValue, field: Field },
}

enum FiniteValue {
    Integer(BigInt),
    Vector(Vec<i64>),
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_coefficient(text: &str, line: usize) -> Result<RawCoeff> {
    if let Some((value, modulus)) = text.split_once(" mod ") {
        let field = Field::parse(modulus).map_err(|e| parse_err(line, e.to_string()))?;
        let value = value.trim();
        let value = if let Some(inner) = value.strip_prefix('[').and_then(|v| v.strip_suffix(']')) {
            let parts = inner
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| parse_err(line, format!("bad coefficient vector {value:?}")))?;
            FiniteValue::Vector(parts)
        } else {
            FiniteValue::Integer(
                value.parse().map_err(|_| parse_err(line, format!("bad coefficient {value:?}")))?,
            )
        };
        return Ok(RawCoeff::Finite { value, field });
    }
    let q = match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| parse_err(line, format!("bad numerator in {text:?}")))?;
            let d: BigInt = d.trim().parse().map_err(|_| parse_err(line, format!("bad denominator in {text:?}")))?;
            if d == BigInt::from(0) {
                return Err(parse_err(line, "zero denominator"));
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(
            text.trim().parse().map_err(|_| parse_err(line, format!("bad coefficient {text:?}")))?,
        ),
    };
    Ok(RawCoeff::Rational(q))
}

/// Parses the text format. With `field = None` the field is inferred: the
/// rationals unless some coefficient carries a `mod` suffix. An explicit
/// field reduces plain coefficients into it.
pub fn parse_poly(text: &str, field: Option<&Field>) -> Result<Poly> {
    let mut raw: Vec<(usize, Exponents, RawCoeff)> = vec![];
    let mut nvars: Option<usize> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (coeff, exps) = line
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| parse_err(lineno, "expected `<coefficient> <e0,...,en>`"))?;
        let exps: Exponents = exps
            .split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(lineno, format!("bad exponent vector {exps:?}")))?;
        match nvars {
            None => nvars = Some(exps.len()),
            Some(n) if n != exps.len() => {
                return Err(parse_err(lineno, format!("exponent vector has {} entries, expected {n}", exps.len())))
            }
            _ => {}
        }
        raw.push((lineno, exps, parse_coefficient(coeff.trim(), lineno)?));
    }
    let nvars = nvars.ok_or_else(|| Error::InvalidForm("no terms".into()))?;

    let mut target = field.cloned();
    for (lineno, _, c) in &raw {
        if let RawCoeff::Finite { field: f, .. } = c {
            match &target {
                None => target = Some(f.clone()),
                Some(t) if t != f => {
                    return Err(parse_err(*lineno, format!("coefficient field {f} conflicts with {t}")));
                }
                _ => {}
            }
        }
    }
    let target = target.unwrap_or(Field::Rational);

    let mut terms = Vec::with_capacity(raw.len());
    for (lineno, e, c) in raw {
        let s: Scalar = match c {
            RawCoeff::Rational(q) => target.from_rational(&q).map_err(|e| parse_err(lineno, e.to_string()))?,
            RawCoeff::Finite { value: FiniteValue::Integer(n), .. } => target.from_bigint(&n),
            RawCoeff::Finite { value: FiniteValue::Vector(v), .. } => {
                target.from_coeffs(&v).map_err(|e| parse_err(lineno, e.to_string()))?
            }
        };
        terms.push((e, s));
    }
    Poly::from_terms(&target, nvars, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_prints_back() {
        let text = "1 2,0\n-3/6 1,1\n# comment\n\n2 0,2\n";
        let p = parse_poly(text, None).unwrap();
        assert_eq!(p.field(), &Field::Rational);
        assert_eq!(format_poly(&p), "1 2,0\n-1/2 1,1\n2 0,2\n");
        assert_eq!(parse_poly(&format_poly(&p), None).unwrap(), p);
    }

    #[test]
    fn parses_finite_field_coefficients() {
        let p = parse_poly("[1,2] mod 7^2 1,0\n3 0,1\n", None).unwrap();
        assert_eq!(p.field().to_string(), "F_7^2");
        assert_eq!(format_poly(&p), "[1,2] mod 7^2 1,0\n3 mod 7^2 0,1\n");
        let again = parse_poly(&format_poly(&p), None).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn explicit_field_reduces_plain_coefficients() {
        let f = Field::parse("5").unwrap();
        let p = parse_poly("7 1,0\n1/2 0,1\n", Some(&f)).unwrap();
        assert_eq!(format_poly(&p), "2 mod 5 1,0\n3 mod 5 0,1\n");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_poly("1 1,0\n1 1,0,0\n", None), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_poly("x 1,0\n", None), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_poly("1 mod 7 1,0\n1 mod 11 0,1\n", None), Err(Error::Parse { line: 2, .. })));
        assert!(parse_poly("# nothing\n", None).is_err());
        assert!(parse_poly("1/0 1,1\n", None).is_err());
    }
}
