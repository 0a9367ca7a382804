//! Coefficient fields and their elements.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::galois::{Coeffs, GaloisField};
use crate::error::{Error, Result};

/// A coefficient field: the rationals or a finite field `F_{p^k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Finite(Arc<GaloisField>),
}

/// An element of `F_{p^k}` together with its field.
#[derive(Clone)]
pub struct Fq {
    field: Arc<GaloisField>,
    coeffs: Coeffs,
}

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Finite(Fq),
}

impl Field {
    pub fn finite(p: u64, k: u32) -> Result<Field> {
        Ok(Field::Finite(GaloisField::new(p, k)?))
    }

    /// Parses `Q`, `p` or `p^k`.
    pub fn parse(spec: &str) -> Result<Field> {
        let s = spec.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("qq") {
            return Ok(Field::Rational);
        }
        let (p, k) = match s.split_once('^') {
            Some((p, k)) => (p.trim(), k.trim()),
            None => (s, "1"),
        };
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidField(format!("cannot parse characteristic in {spec:?}")))?;
        let k: u32 = k
            .parse()
            .map_err(|_| Error::InvalidField(format!("cannot parse degree in {spec:?}")))?;
        Field::finite(p, k)
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Finite(f) => f.characteristic(),
        }
    }

    /// `Some(q)` for a finite field of `q` elements.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Finite(f) => f.order(),
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, Field::Finite(f) if f.degree() == 1)
    }

    /// True when `char` divides `n` (never for the rationals).
    pub fn char_divides(&self, n: u64) -> bool {
        let p = self.characteristic();
        p != 0 && n.is_multiple_of(p)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Finite(f) => {
                let p = BigInt::from(f.characteristic());
                let r = ((n % &p) + &p) % &p;
                let c = r.to_u64().expect("residue fits in u64");
                Scalar::Finite(Fq { field: f.clone(), coeffs: f.constant_coeffs(c) })
            }
        }
    }

    /// Maps a rational into this field; fails when the denominator is not
    /// invertible.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        den.inv()
            .map(|d| &num * &d)
            .ok_or_else(|| Error::BadCharacteristic(format!("denominator {} vanishes in {self}", q.denom())))
    }

    /// Element with the given index in the canonical enumeration of a finite
    /// field (base-`p` digits of the power-basis coefficients).
    pub fn element(&self, index: u64) -> Scalar {
        match self {
            Field::Rational => panic!("cannot enumerate the rationals"),
            Field::Finite(f) => Scalar::Finite(Fq { field: f.clone(), coeffs: f.coeffs_from_index(index) }),
        }
    }

    /// Builds an element of `F_{p^k}` from power-basis coefficients.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Scalar> {
        match self {
            Field::Rational => Err(Error::FieldMismatch("coefficient vector given for Q".into())),
            Field::Finite(f) => {
                if coeffs.len() > f.degree() as usize {
                    return Err(Error::InvalidField(format!(
                        "{} coefficients for an extension of degree {}",
                        coeffs.len(),
                        f.degree()
                    )));
                }
                let p = f.characteristic() as i64;
                let mut c = f.zero_coeffs();
                for (slot, &v) in c.iter_mut().zip(coeffs) {
                    *slot = v.rem_euclid(p) as u64;
                }
                Ok(Scalar::Finite(Fq { field: f.clone(), coeffs: c }))
            }
        }
    }

    /// All elements of a finite field in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        let q = self.order().expect("enumerating a field requires a finite field of known order");
        (0..q).map(move |i| self.element(i))
    }

    /// A uniformly random element; over the rationals, a small random integer.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Rational => self.from_i64(rng.gen_range(-20..=20)),
            Field::Finite(f) => {
                let q = f.order().expect("field order fits in u64");
                self.element(rng.gen_range(0..q))
            }
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Rational(_)) => true,
            (Field::Finite(f), Scalar::Finite(x)) => **f == *x.field,
            _ => false,
        }
    }

    /// Embeds an element of the prime subfield of `self` into `target`,
    /// which must have the same characteristic.
    pub fn embed_prime(&self, s: &Scalar, target: &Field) -> Result<Scalar> {
        match s {
            Scalar::Finite(x) if x.coeffs[1..].iter().all(|&c| c == 0) => {
                if target.characteristic() != x.field.characteristic() {
                    return Err(Error::FieldMismatch(format!("cannot embed {s} into {target}")));
                }
                Ok(target.from_i64(x.coeffs[0] as i64))
            }
            Scalar::Rational(q) => target.from_rational(q),
            _ => Err(Error::FieldMismatch(format!("{s} is not in the prime subfield"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Finite(g) if g.degree() == 1 => write!(f, "F_{}", g.characteristic()),
            Field::Finite(g) => write!(f, "F_{}^{}", g.characteristic(), g.degree()),
        }
    }
}

impl Fq {
    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    /// Power-basis coefficients, lowest first.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn index(&self) -> u64 {
        self.field.index_of(&self.coeffs)
    }

    pub fn in_prime_subfield(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Fq {}

impl Hash for Fq {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.characteristic().hash(state);
        self.field.degree().hash(state);
        self.coeffs.hash(state);
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Finite(x) => Field::Finite(x.field.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Finite(x) => x.coeffs.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Finite(x) => x.coeffs[0] == 1 && x.in_prime_subfield(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => None,
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Finite(x) => x
                .field
                .inv(&x.coeffs)
                .map(|c| Scalar::Finite(Fq { field: x.field.clone(), coeffs: c })),
        }
    }

    pub fn pow(&self, e: u64) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(num_traits::pow(q.clone(), e as usize)),
            Scalar::Finite(x) => Scalar::Finite(Fq {
                field: x.field.clone(),
                coeffs: x.field.pow(&x.coeffs, e as u128),
            }),
        }
    }

    /// Integer power; `None` for a negative power of zero.
    pub fn powi(&self, e: i64) -> Option<Scalar> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inv().map(|i| i.pow(e.unsigned_abs()))
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|i| self * &i)
    }

    /// Multiplies by an integer.
    pub fn mul_int(&self, n: i64) -> Scalar {
        self * &self.field().from_i64(n)
    }

    /// The `p`-power Frobenius `x -> x^(p^i)`; identity on the rationals.
    pub fn frobenius(&self, i: u32) -> Scalar {
        match self {
            Scalar::Rational(_) => self.clone(),
            Scalar::Finite(x) => {
                let e = (x.field.characteristic() as u128).pow(i);
                Scalar::Finite(Fq { field: x.field.clone(), coeffs: x.field.pow(&x.coeffs, e) })
            }
        }
    }

    /// Coefficient text without the field suffix: `3`, `-2/5`, `[1,4]`.
    pub fn value_string(&self) -> String {
        match self {
            Scalar::Rational(q) => q.to_string(),
            Scalar::Finite(x) if x.in_prime_subfield() => x.coeffs[0].to_string(),
            Scalar::Finite(x) => {
                let parts: Vec<String> = x.coeffs.iter().map(|c| c.to_string()).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Finite(_) => None,
        }
    }

    /// Rational value as a signed integer when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

/// Display uses the form-file coefficient syntax: `3/4`, `5 mod 7`,
/// `[1,2] mod 7^2`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Finite(x) if x.field.degree() == 1 => {
                write!(f, "{} mod {}", self.value_string(), x.field.characteristic())
            }
            Scalar::Finite(x) => write!(
                f,
                "{} mod {}^{}",
                self.value_string(),
                x.field.characteristic(),
                x.field.degree()
            ),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Scalar::Finite(self.clone()))
    }
}

fn same_field<'a>(a: &'a Fq, b: &Fq) -> &'a Arc<GaloisField> {
    assert!(*a.field == *b.field, "field mismatch: {:?} vs {:?}", a.field, b.field);
    &a.field
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $fin:ident) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (Scalar::Finite(a), Scalar::Finite(b)) => {
                        let f = same_field(a, b);
                        Scalar::Finite(Fq { field: f.clone(), coeffs: f.$fin(&a.coeffs, &b.coeffs) })
                    }
                    _ => panic!("field mismatch: {self} vs {rhs}"),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, add);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, sub);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Finite(x) => Scalar::Finite(Fq { field: x.field.clone(), coeffs: x.field.neg(&x.coeffs) }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
