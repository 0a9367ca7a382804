//! Character lattices of `GL_{n+1}/mu_d` and of `Gamma(d1, d2)`, classes of
//! invariant cones, and checks of the explicit isomorphisms
//! `GL_{n+1}/mu_d -> G_m x PGL_{n+1}` or `GL_{n+1}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{group_from_relations, Field, FieldMatrix, GroupOrder, IntMatrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    OddD1,
    BothEven,
}

/// Which lattice a character's coordinates refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Rank 1, generated by `det` on `GL_{n+1}`.
    Det,
    /// Rank 2: `e1` is the projection to `G_m`, `e2` is `det` on `G_m x GL_2`.
    E,
    /// The basis `v1, v2` of the characters of `Gamma(d1, d2)`.
    V { d1: u32, d2: u32, parity: Parity },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub basis: Basis,
    pub coords: Vec<i128>,
}

impl Character {
    pub fn e(x1: i128, x2: i128) -> Self {
        Character { basis: Basis::E, coords: vec![x1, x2] }
    }

    pub fn pair(&self) -> (i128, i128) {
        assert_eq!(self.coords.len(), 2, "rank-2 character expected");
        (self.coords[0], self.coords[1])
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = match self.basis {
            Basis::Det => &["det"],
            Basis::E => &["e1", "e2"],
            Basis::V { .. } => &["v1", "v2"],
        };
        let parts: Vec<String> = self.coords.iter().zip(names).map(|(c, n)| format!("{c}*{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Index of the characters of `GL_{n+1}/mu_d` in those of `GL_{n+1}`:
/// `det^k` descends exactly when `d | k(n+1)`.
pub fn uniform_char_index(n: u32, d: u32) -> u32 {
    d / d.gcd(&(n + 1))
}

/// The character lattice of `Gamma(d1, d2)` inside the e-basis lattice:
/// `(x1, x2)` belongs to it iff `x1 = 2 x2 (mod d1)` and `x1 = 0 (mod d2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaLattice {
    pub d1: u32,
    pub d2: u32,
    pub parity: Parity,
    pub v1: (i128, i128),
    pub v2: (i128, i128),
}

fn check_degrees(d1: u32, d2: u32) -> Result<Parity> {
    if d1 == 0 || d2 == 0 {
        return Err(Error::InvalidBranchDegrees(format!("branch degrees must be positive, got ({d1}, {d2})")));
    }
    match (d1 % 2, d2 % 2) {
        (1, _) => Ok(Parity::OddD1),
        (0, 0) => Ok(Parity::BothEven),
        _ => Err(Error::SwapRequired),
    }
}

/// True when `(x1, x2)` satisfies both congruences.
pub fn in_gamma_lattice(d1: u32, d2: u32, x1: i128, x2: i128) -> bool {
    (x1 - 2 * x2).rem_euclid(d1 as i128) == 0 && x1.rem_euclid(d2 as i128) == 0
}

/// Index in `Z^2` of the congruence lattice, from the Smith form of the
/// cokernel of `Z^2 -> Z/d1 x Z/d2`, `(x1, x2) -> (x1 - 2 x2, x1)`.
pub fn congruence_index(d1: u32, d2: u32) -> BigInt {
    let relations = IntMatrix::from_rows(2, &[vec![d1 as i64, 0], vec![0, d2 as i64], vec![1, 1], vec![-2, 0]])
        .expect("well-formed rows");
    let coker = group_from_relations(2, &relations).expect("two columns");
    match coker.order() {
        GroupOrder::Finite(c) => BigInt::from(d1) * BigInt::from(d2) / c,
        GroupOrder::Infinite => unreachable!("the cokernel of a map to a finite group is finite"),
    }
}

/// Basis `v1, v2` of the characters of `Gamma(d1, d2)`, checked against the
/// congruences and the lattice index at construction.
pub fn gamma_lattice(d1: u32, d2: u32) -> Result<GammaLattice> {
    let parity = check_degrees(d1, d2)?;
    let (a, b) = (d1 as i128, d2 as i128);
    let (v1, v2) = match parity {
        Parity::OddD1 => ((b, (a + 1) * b / 2), (0, a)),
        Parity::BothEven => ((b, b / 2), (0, a / 2)),
    };
    for v in [v1, v2] {
        assert!(in_gamma_lattice(d1, d2, v.0, v.1), "basis vector {v:?} violates the congruences");
    }
    let det = (v1.0 * v2.1 - v1.1 * v2.0).abs();
    assert_eq!(BigInt::from(det), congruence_index(d1, d2), "basis spans a proper sublattice");
    Ok(GammaLattice { d1, d2, parity, v1, v2 })
}

impl GammaLattice {
    pub fn contains(&self, c: &Character) -> bool {
        let (x1, x2) = c.pair();
        in_gamma_lattice(self.d1, self.d2, x1, x2)
    }

    fn v_basis(&self) -> Basis {
        Basis::V { d1: self.d1, d2: self.d2, parity: self.parity }
    }
}

/// Class in the e-basis of an invariant cone of bidegree `(a1, a2)`:
/// `((a1 - 2 a2) d2, -(a1 (2 d1 - d2) + a2 (2 d2 - d1)) / 2)`.
pub fn cone_class_e(a1: i128, a2: i128, d1: u32, d2: u32) -> Result<Character> {
    let (d1, d2) = (d1 as i128, d2 as i128);
    let numerator = a1 * (2 * d1 - d2) + a2 * (2 * d2 - d1);
    if numerator % 2 != 0 {
        return Err(Error::NonIntegralClass);
    }
    Ok(Character::e((a1 - 2 * a2) * d2, -numerator / 2))
}

/// Coordinates of an e-basis character in the basis `v1, v2`.
pub fn to_v_basis(c: &Character, lattice: &GammaLattice) -> Result<Character> {
    if c.basis != Basis::E {
        return Err(Error::InvalidParameter(format!("expected an e-basis character, got {c}")));
    }
    if !lattice.contains(c) {
        return Err(Error::NotGammaInvariant);
    }
    let (x1, x2) = c.pair();
    let (v1, v2) = (lattice.v1, lattice.v2);
    // v2 has no e1 component in either parity case
    assert_eq!(v2.0, 0);
    assert_eq!(x1 % v1.0, 0, "membership forces v1.0 | x1");
    let m1 = x1 / v1.0;
    let rest = x2 - m1 * v1.1;
    assert_eq!(rest % v2.1, 0, "membership forces exact division by v2");
    Ok(Character { basis: lattice.v_basis(), coords: vec![m1, rest / v2.1] })
}

pub fn from_v_basis(c: &Character, lattice: &GammaLattice) -> Character {
    let (m1, m2) = c.pair();
    Character::e(m1 * lattice.v1.0 + m2 * lattice.v2.0, m1 * lattice.v1.1 + m2 * lattice.v2.1)
}

/// The closed-form v-basis class of a cone of bidegree `(a1, a2)` as stated
/// for the two parity cases, kept for comparison with [`to_v_basis`]. The
/// odd-case coefficient of `v2` is not always an integer.
pub fn stated_cone_class_v(a1: i64, a2: i64, d2: u32, parity: Parity) -> (BigRational, BigRational) {
    let r = |n: i64| BigRational::from_integer(n.into());
    let first = r(a1 - 2 * a2);
    let second = match parity {
        Parity::OddD1 => r(-a1 + a2 * d2 as i64) + BigRational::new((a2 * a1 * d2 as i64).into(), 2.into()),
        Parity::BothEven => r(-2 * a1 + a2),
    };
    (first, second)
}

/// Which closed-form isomorphism applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsomCase {
    /// `d = q(n+1)`: `[A] -> (det(A)^q, [A])` into `G_m x PGL_{n+1}`.
    Zero,
    /// `d = q(n+1) + 1`: `[A] -> det(A)^q A`.
    One,
    /// `d = q(n+1) - 1`: `[A] -> det(A)^{-q} A`.
    MinusOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomReport {
    pub case: IsomCase,
    pub q: u32,
    pub samples: usize,
    pub multiplicative: bool,
    pub kernel_is_mu_d: bool,
    pub injective_on_samples: bool,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Image of a matrix: a scalar (only in the `Zero` case) and a matrix,
/// projectively normalized in the `Zero` case.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Image {
    scalar: Option<Scalar>,
    matrix: FieldMatrix,
}

fn projective_normal(m: &FieldMatrix) -> FieldMatrix {
    let lead = m.entries().iter().find(|x| !x.is_zero()).expect("invertible matrix is nonzero");
    m.scale(&lead.inv().expect("nonzero"))
}

fn apply(case: IsomCase, q: u32, a: &FieldMatrix) -> Image {
    let det = a.det();
    match case {
        IsomCase::Zero => Image { scalar: Some(det.pow(q as u64)), matrix: projective_normal(a) },
        IsomCase::One => Image { scalar: None, matrix: a.scale(&det.pow(q as u64)) },
        IsomCase::MinusOne => {
            Image { scalar: None, matrix: a.scale(&det.powi(-(q as i64)).expect("invertible")) }
        }
    }
}

fn compose(case: IsomCase, x: &Image, y: &Image) -> Image {
    let m = x.matrix.mul(&y.matrix).expect("square matrices of equal size");
    match case {
        IsomCase::Zero => Image {
            scalar: Some(x.scalar.as_ref().unwrap() * y.scalar.as_ref().unwrap()),
            matrix: projective_normal(&m),
        },
        _ => Image { scalar: None, matrix: m },
    }
}

fn is_identity(img: &Image) -> bool {
    img.scalar.as_ref().is_none_or(Scalar::is_one) && img.matrix.is_scalar_matrix().is_some_and(|c| c.is_one())
}

/// Residue case and `q` for `d` modulo `n + 1`; `d = 1 (mod 2)` is read as
/// the `One` case when `n + 1 = 2`.
pub fn isom_case(n: u32, d: u32) -> Result<(IsomCase, u32)> {
    let m = n + 1;
    match d % m {
        0 => Ok((IsomCase::Zero, d / m)),
        1 => Ok((IsomCase::One, d / m)),
        x if x == m - 1 => Ok((IsomCase::MinusOne, (d + 1) / m)),
        _ => Err(Error::NoClosedFormIsomorphism { d, m }),
    }
}

/// Samples random invertible matrices and checks that the closed-form map
/// is a homomorphism with kernel exactly `mu_d` (scalars `lambda I` with
/// `lambda^d = 1`) and separates non-equivalent sampled classes.
pub fn isom_check(n: u32, d: u32, samples: usize, field: &Field, seed: u64) -> Result<IsomReport> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter("n and d must be positive".into()));
    }
    let (case, q) = isom_case(n, d)?;
    if field.order().is_some_and(|o| o < 4) {
        return Err(Error::InvalidField(format!("{field} is too small to sample from")));
    }
    let size = (n + 1) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness = None;
    let mut multiplicative = true;
    let mut injective = true;
    for _ in 0..samples {
        let a = FieldMatrix::random_invertible(field, size, &mut rng);
        let b = FieldMatrix::random_invertible(field, size, &mut rng);
        let ab = a.mul(&b)?;
        let (fa, fb) = (apply(case, q, &a), apply(case, q, &b));
        if apply(case, q, &ab) != compose(case, &fa, &fb) && multiplicative {
            multiplicative = false;
            witness.get_or_insert_with(|| format!("phi(AB) != phi(A) phi(B) for A = {:?}, B = {:?}", a, b));
        }
        let ratio = a.mul(&b.inverse()?)?;
        let equivalent = ratio.is_scalar_matrix().is_some_and(|c| c.pow(d as u64).is_one());
        if (fa == fb) != equivalent && injective {
            injective = false;
            witness.get_or_insert_with(|| format!("phi separates classes incorrectly for A = {:?}, B = {:?}", a, b));
        }
    }
    let scalars: Vec<Scalar> = match field {
        Field::Rational => (-3..=3).filter(|&x| x != 0).map(|x| field.from_i64(x)).collect(),
        _ => field.elements().filter(|x| !x.is_zero()).take(2000).collect(),
    };
    let mut kernel_is_mu_d = true;
    for lambda in scalars {
        let img = apply(case, q, &FieldMatrix::scalar(field, size, &lambda));
        if is_identity(&img) != lambda.pow(d as u64).is_one() {
            kernel_is_mu_d = false;
            witness.get_or_insert_with(|| format!("phi({lambda} I) disagrees with lambda^d = 1"));
            break;
        }
    }
    Ok(IsomReport {
        case,
        q,
        samples,
        multiplicative,
        kernel_is_mu_d,
        injective_on_samples: injective,
        passed: multiplicative && kernel_is_mu_d && injective,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_examples() {
        assert_eq!(uniform_char_index(1, 1), 1);
        assert_eq!(uniform_char_index(1, 2), 1);
        assert_eq!(uniform_char_index(1, 3), 3);
    }

    #[test]
    fn lattice_examples() {
        let l = gamma_lattice(1, 1).unwrap();
        assert_eq!((l.v1, l.v2), ((1, 1), (0, 1)));
        let l = gamma_lattice(2, 2).unwrap();
        assert_eq!((l.v1, l.v2), ((2, 1), (0, 1)));
        let l = gamma_lattice(3, 2).unwrap();
        assert_eq!((l.v1, l.v2), ((2, 4), (0, 3)));
        assert_eq!(gamma_lattice(2, 3), Err(Error::SwapRequired));
    }

    #[test]
    fn cone_classes() {
        assert_eq!(cone_class_e(0, 0, 5, 7).unwrap(), Character::e(0, 0));
        assert_eq!(cone_class_e(2, 0, 2, 2).unwrap(), Character::e(4, -2));
        assert_eq!(cone_class_e(2, 2, 2, 2).unwrap(), Character::e(-4, -4));
        assert_eq!(cone_class_e(1, 0, 2, 1), Err(Error::NonIntegralClass));
        let l = gamma_lattice(2, 2).unwrap();
        assert_eq!(to_v_basis(&Character::e(4, -2), &l).unwrap().coords, vec![2, -4]);
        assert_eq!(to_v_basis(&Character::e(-4, -4), &l).unwrap().coords, vec![-2, -2]);
        assert_eq!(to_v_basis(&Character::e(2, 1), &l).unwrap().coords, vec![1, 0]);
        assert_eq!(to_v_basis(&Character::e(1, 0), &l), Err(Error::NotGammaInvariant));
    }

    #[test]
    fn stated_odd_form_is_not_integral() {
        let (_, second) = stated_cone_class_v(1, 1, 1, Parity::OddD1);
        assert!(!second.is_integer());
    }

    #[test]
    fn isomorphisms() {
        let f = Field::parse("101").unwrap();
        let r = isom_check(2, 4, 20, &f, 7).unwrap();
        assert_eq!((r.case, r.q), (IsomCase::One, 1));
        assert!(r.passed, "{r:?}");
        for (n, d) in [(1, 2), (1, 3), (2, 3), (2, 5), (3, 4), (3, 7)] {
            assert!(isom_check(n, d, 10, &f, 1).unwrap().passed, "n = {n}, d = {d}");
        }
        assert!(isom_check(1, 2, 10, &Field::Rational, 3).unwrap().passed);
        assert_eq!(isom_check(3, 2, 5, &f, 0), Err(Error::NoClosedFormIsomorphism { d: 2, m: 4 }));
    }

    #[test]
    fn minus_identity_is_killed_for_d_two() {
        let q = Field::Rational;
        let minus = FieldMatrix::scalar(&q, 2, &q.from_i64(-1));
        let (case, k) = isom_case(1, 2).unwrap();
        assert!(is_identity(&apply(case, k, &minus)));
    }
}
