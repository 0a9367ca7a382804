//! Picard groups of the stacks of smooth uniform cyclic covers of `P^n`
//! and of smooth cyclic triple covers of `P^1`, and their dimensions.
//!
//! Both are computed as a character group modulo the classes of the
//! invariant hypersurfaces removed from the space of forms. The closed
//! forms are checked against the computation, never used in its place.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Number, Value};

use crate::chargroups::{cone_class_e, gamma_lattice, to_v_basis, uniform_char_index, GammaLattice, Parity};
use crate::chow::{discriminant_degree, z_bidegree};
use crate::error::{Error, Result};
use crate::exact::{group_from_relations, AbelianPresentation, GroupOrder, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PicardKind {
    Uniform { n: u32, r: u32, d: u32 },
    Triple { d1: u32, d2: u32 },
}

/// Intermediate values of the computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    /// Degree of each discriminant hypersurface in the coefficients.
    pub deg_delta: Vec<BigInt>,
    /// Relation rows in the ambient basis (`det` or `e1, e2`).
    pub rows_e: Vec<Vec<BigInt>>,
    /// Relation rows in the generators of the character group.
    pub rows_v: Vec<Vec<BigInt>>,
    /// Indices of rows that vanish identically.
    pub zero_rows: Vec<usize>,
    /// Rows given by the closed-form formulas, for comparison.
    pub closed_form_rows: Vec<Vec<BigRational>>,
    /// Whether the closed-form rows agree with `rows_v` (each up to sign).
    pub closed_form_match: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardResult {
    pub kind: PicardKind,
    pub presentation: AbelianPresentation,
    pub provenance: Provenance,
}

impl PicardResult {
    pub fn order(&self) -> GroupOrder {
        self.presentation.order()
    }

    pub fn to_json(&self) -> Value {
        let (kind, params) = match self.kind {
            PicardKind::Uniform { n, r, d } => ("uniform", json!({"n": n, "r": r, "d": d})),
            PicardKind::Triple { d1, d2 } => ("triple", json!({"d1": d1, "d2": d2})),
        };
        let order = match self.order() {
            GroupOrder::Finite(n) => big_json(&n),
            GroupOrder::Infinite => json!("infinite"),
        };
        let p = &self.provenance;
        let rows = |rows: &[Vec<BigInt>]| -> Value {
            Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(big_json).collect())).collect())
        };
        let closed: Vec<Value> =
            p.closed_form_rows.iter().map(|r| json!(r.iter().map(|x| x.to_string()).collect::<Vec<_>>())).collect();
        json!({
            "kind": kind,
            "params": params,
            "invariant_factors": self.presentation.invariant_factors().iter().map(big_json).collect::<Vec<_>>(),
            "free_rank": self.presentation.free_rank(),
            "order": order,
            "provenance": {
                "deg_delta": p.deg_delta.iter().map(big_json).collect::<Vec<_>>(),
                "rows_e": rows(&p.rows_e),
                "rows_v": rows(&p.rows_v),
                "zero_rows": p.zero_rows,
                "closed_form_rows": closed,
                "paper_closed_form_match": p.closed_form_match,
                "notes": p.notes,
            },
        })
    }
}

impl fmt::Display for PicardResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.presentation)?;
        writeln!(f, "order: {}", self.order())?;
        let p = &self.provenance;
        let join = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        let degs: Vec<String> = p.deg_delta.iter().map(|x| x.to_string()).collect();
        writeln!(f, "discriminant degrees: {}", degs.join(", "))?;
        for (i, (e, v)) in p.rows_e.iter().zip(&p.rows_v).enumerate() {
            writeln!(f, "relation {}: ({}) -> ({})", i + 1, join(e), join(v))?;
        }
        writeln!(f, "closed forms agree: {}", p.closed_form_match)?;
        for note in &p.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}

/// A JSON number holding an arbitrary-size integer.
pub fn big_json(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

/// Picard group of the stack of smooth uniform cyclic covers of `P^n` of
/// degree `r` with branch degree `d`.
///
/// The discriminant has degree `deg` in the coefficients, so scalar
/// matrices act on its equation through `det^{rd deg/(n+1)}`; characters
/// of `GL_{n+1}/mu_d` are the powers of `det^{d/gcd(d, n+1)}`.
pub fn picard_uniform(n: u32, r: u32, d: u32) -> Result<PicardResult> {
    if n == 0 || r == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!("n, r, d must be positive, got ({n}, {r}, {d})")));
    }
    let m = r.checked_mul(d).ok_or_else(|| Error::InvalidParameter("r * d overflows".into()))?;
    if m == 1 {
        return Err(Error::NoDiscriminantLocus);
    }
    let deg = discriminant_degree(n, m);
    let (class_det, rem) = (BigInt::from(m) * &deg).div_rem(&BigInt::from(n + 1));
    assert!(rem.is_zero(), "discriminant class is not a power of det");
    let index = BigInt::from(uniform_char_index(n, d));
    let (order, rem) = class_det.div_rem(&index);
    assert!(rem.is_zero(), "discriminant class does not descend");
    let g = d.gcd(&(n + 1));
    let closed = BigInt::from(r) * BigInt::from(m - 1).pow(n) * BigInt::from(g);
    assert_eq!(order, closed, "computed order differs from r (rd - 1)^n gcd(d, n + 1)");
    let presentation = group_from_relations(1, &IntMatrix::new(1, 1, vec![order.clone()])?)?;
    let provenance = Provenance {
        deg_delta: vec![deg],
        rows_e: vec![vec![class_det]],
        rows_v: vec![vec![order]],
        zero_rows: vec![],
        closed_form_rows: vec![vec![BigRational::from_integer(closed)]],
        closed_form_match: true,
        notes: vec![format!("character index d/gcd(d, n+1) = {index}")],
    };
    Ok(PicardResult { kind: PicardKind::Uniform { n, r, d }, presentation, provenance })
}

/// Smooth hyperelliptic curves of genus `g`: double covers of `P^1` with
/// branch degree `g + 1`.
pub fn hyperelliptic_picard(g: u32) -> Result<PicardResult> {
    if g == 0 {
        return Err(Error::InvalidParameter("genus must be at least 1".into()));
    }
    let result = picard_uniform(1, 2, g + 1)?;
    let expected = if g.is_multiple_of(2) { 2 * (2 * g as u64 + 1) } else { 4 * (2 * g as u64 + 1) };
    assert_eq!(result.order(), GroupOrder::Finite(BigInt::from(expected)));
    Ok(result)
}

/// Relation rows of the triple-cover Picard group, with the data they
/// come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleRelations {
    pub lattice: GammaLattice,
    /// Bidegrees of `Delta_1`, `Delta_2` and `Z`.
    pub bidegrees: [(i128, i128); 3],
    pub rows_e: [(i128, i128); 3],
    pub rows_v: [(i128, i128); 3],
}

impl TripleRelations {
    pub fn matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = self.rows_v.iter().map(|&(a, b)| vec![a.into(), b.into()]).collect();
        IntMatrix::from_rows(2, &rows).expect("three rows of length two")
    }

    pub fn zero_rows(&self) -> Vec<usize> {
        (0..3).filter(|&i| self.rows_v[i] == (0, 0)).collect()
    }
}

fn check_interior(d1: u32, d2: u32) -> Result<()> {
    if d1 == 0 || d2 == 0 {
        return Err(Error::InvalidBranchDegrees(format!("branch degrees must be positive, got ({d1}, {d2})")));
    }
    let (a, b) = (2 * d1 as i64 - d2 as i64, 2 * d2 as i64 - d1 as i64);
    if a < 0 || b < 0 {
        return Err(Error::InvalidBranchDegrees(format!("need 2d1 - d2 >= 0 and 2d2 - d1 >= 0, got ({d1}, {d2})")));
    }
    if a == 0 || b == 0 {
        return Err(Error::DegenerateTriple);
    }
    Ok(())
}

/// Classes of `Delta_1`, `Delta_2` (forms with a repeated root) and `Z`
/// (pairs with a common root) in the basis `v1, v2`.
pub fn triple_relation_matrix(d1: u32, d2: u32) -> Result<TripleRelations> {
    check_interior(d1, d2)?;
    let lattice = gamma_lattice(d1, d2)?;
    let m1 = 2 * d1 - d2;
    let m2 = 2 * d2 - d1;
    let deg1 = discriminant_degree(1, m1);
    let deg2 = discriminant_degree(1, m2);
    let (z1, z2) = z_bidegree(d1, d2)?;
    let to_i = |x: &BigInt| i128::try_from(x).expect("bidegree fits in i128");
    let bidegrees = [(to_i(&deg1), 0), (0, to_i(&deg2)), (to_i(&z1), to_i(&z2))];
    let mut rows_e = [(0, 0); 3];
    let mut rows_v = [(0, 0); 3];
    for (i, &(a1, a2)) in bidegrees.iter().enumerate() {
        let e = cone_class_e(a1, a2, d1, d2)?;
        rows_e[i] = e.pair();
        rows_v[i] = to_v_basis(&e, &lattice)?.pair();
    }
    Ok(TripleRelations { lattice, bidegrees, rows_e, rows_v })
}

/// The three relations in closed form, with the third even-case
/// relation taken as `(4 d2 - 5 d1) v1 + (4 d1 - 5 d2) v2`.
pub fn triple_closed_form_rows(d1: u32, d2: u32, parity: Parity) -> [(BigRational, BigRational); 3] {
    let (a, b) = (d1 as i64, d2 as i64);
    let q = |n: i64| BigRational::from_integer(n.into());
    match parity {
        Parity::OddD1 => {
            let k1 = 2 * a - b - 1;
            let k2 = 2 * b - a - 1;
            [
                (q(2 * k1), q(-(b + 2) * k1)),
                (q(4 * k2), q(-(2 * b + 1) * k2)),
                (q(-5 * a + 4 * b), BigRational::new((4 * a - 5 * b * (a + 1) - 4 * b * b).into(), 2.into())),
            ]
        }
        Parity::BothEven => {
            let k1 = 2 * (2 * a - b - 1);
            let k2 = 2 * (2 * b - a - 1);
            [(q(k1), q(-2 * k1)), (q(2 * k2), q(-k2)), (q(4 * b - 5 * a), q(4 * a - 5 * b))]
        }
    }
}

/// True when every pair of rows agrees up to sign.
pub fn rows_match_up_to_sign(computed: &[(i128, i128); 3], closed: &[(BigRational, BigRational); 3]) -> bool {
    computed.iter().zip(closed).all(|(&(x, y), (u, v))| {
        let (x, y) = (BigRational::from_integer(x.into()), BigRational::from_integer(y.into()));
        (x == *u && y == *v) || (x == -u && y == -v)
    })
}

pub fn triple_picard(d1: u32, d2: u32) -> Result<PicardResult> {
    let rel = triple_relation_matrix(d1, d2)?;
    let presentation = group_from_relations(2, &rel.matrix())?;
    let closed = triple_closed_form_rows(d1, d2, rel.lattice.parity);
    let closed_form_match = rows_match_up_to_sign(&rel.rows_v, &closed);
    let big = |(a, b): (i128, i128)| vec![BigInt::from(a), BigInt::from(b)];
    let hyp = 2 * (2 * d1 as u64 - d2 as u64) * (2 * d2 as u64 - d1 as u64);
    let mut notes = vec![format!("valid when the characteristic does not divide {hyp}")];
    if rel.lattice.parity == Parity::BothEven {
        notes.push(format!(
            "third even-case closed form taken as (4d2 - 5d1, 4d1 - 5d2) = ({}, {})",
            4 * d2 as i64 - 5 * d1 as i64,
            4 * d1 as i64 - 5 * d2 as i64
        ));
    }
    let zero_rows = rel.zero_rows();
    for &i in &zero_rows {
        notes.push(format!("relation {} vanishes: its branch form has degree 1", i + 1));
    }
    let provenance = Provenance {
        deg_delta: vec![BigInt::from(rel.bidegrees[0].0), BigInt::from(rel.bidegrees[1].1)],
        rows_e: rel.rows_e.iter().map(|&r| big(r)).collect(),
        rows_v: rel.rows_v.iter().map(|&r| big(r)).collect(),
        zero_rows,
        closed_form_rows: closed.iter().map(|(a, b)| vec![a.clone(), b.clone()]).collect(),
        closed_form_match,
        notes,
    };
    Ok(PicardResult { kind: PicardKind::Triple { d1, d2 }, presentation, provenance })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StackKind {
    Uniform { n: u32, r: u32, d: u32 },
    Triple { d1: u32, d2: u32 },
}

/// `binom(rd + n, n) - (n + 1)^2`, or `(2d1 - d2 + 1)(2d2 - d1 + 1) - 5`.
pub fn stack_dimension(kind: StackKind) -> BigInt {
    match kind {
        StackKind::Uniform { n, r, d } => {
            let top = BigInt::from(r as u64 * d as u64 + n as u64);
            binomial(top, BigInt::from(n)) - BigInt::from(n as u64 + 1).pow(2)
        }
        StackKind::Triple { d1, d2 } => {
            let a = 2 * d1 as i64 - d2 as i64 + 1;
            let b = 2 * d2 as i64 - d1 as i64 + 1;
            BigInt::from(a) * BigInt::from(b) - 5
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(r: &PicardResult) -> BigInt {
        match r.order() {
            GroupOrder::Finite(n) => n,
            GroupOrder::Infinite => panic!("infinite"),
        }
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(order(&picard_uniform(1, 2, 3).unwrap()), BigInt::from(10));
        assert_eq!(order(&picard_uniform(1, 2, 2).unwrap()), BigInt::from(12));
        assert_eq!(order(&picard_uniform(2, 2, 3).unwrap()), BigInt::from(150));
        assert_eq!(picard_uniform(1, 1, 1), Err(Error::NoDiscriminantLocus));
        assert!(picard_uniform(1, 2, 3).unwrap().presentation.is_cyclic());
    }

    #[test]
    fn hyperelliptic_examples() {
        for (g, o) in [(2, 10), (3, 28), (4, 18)] {
            assert_eq!(order(&hyperelliptic_picard(g).unwrap()), BigInt::from(o));
        }
    }

    #[test]
    fn triple_rows() {
        assert_eq!(triple_relation_matrix(2, 2).unwrap().rows_v, [(2, -4), (-4, 2), (-2, -2)]);
        assert_eq!(triple_relation_matrix(1, 1).unwrap().rows_v, [(0, 0), (0, 0), (-1, 0)]);
        assert_eq!(triple_relation_matrix(3, 3).unwrap().rows_v, [(4, -10), (-8, 14), (-3, 3)]);
        assert_eq!(triple_relation_matrix(2, 4).unwrap_err(), Error::DegenerateTriple);
        assert_eq!(triple_relation_matrix(4, 3).unwrap_err(), Error::SwapRequired);
        assert!(matches!(triple_relation_matrix(1, 3), Err(Error::InvalidBranchDegrees(_))));
    }

    #[test]
    fn triple_groups() {
        let g = triple_picard(2, 2).unwrap();
        assert_eq!(g.presentation.invariant_factors(), &[BigInt::from(2), BigInt::from(6)]);
        assert!(g.provenance.closed_form_match);
        let g = triple_picard(1, 1).unwrap();
        assert_eq!(g.presentation.free_rank(), 1);
        assert_eq!(g.provenance.zero_rows, vec![0, 1]);
        let g = triple_picard(3, 3).unwrap();
        assert_eq!(g.presentation.invariant_factors(), &[BigInt::from(6)]);
    }

    #[test]
    fn dimensions() {
        assert_eq!(stack_dimension(StackKind::Uniform { n: 1, r: 2, d: 3 }), BigInt::from(3));
        assert_eq!(stack_dimension(StackKind::Uniform { n: 2, r: 2, d: 3 }), BigInt::from(19));
        assert_eq!(stack_dimension(StackKind::Triple { d1: 1, d2: 1 }), BigInt::from(-1));
    }
}
