//! Multiplication tables of cyclic cover algebras.

use serde_json::{json, Value};

use super::spec::UniformCoverSpec;
use crate::error::{Error, Result};
use crate::forms::{Form, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Uniform { r: u32 },
    Triple,
}

/// A commutative algebra free of finite rank over the polynomial ring, with
/// basis graded by `Z/r`.
///
/// `table[i][j][k]` is the coefficient of basis element `k` in `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverAlgebra {
    kind: AlgebraKind,
    labels: Vec<String>,
    grades: Vec<u32>,
    modulus: u32,
    table: Vec<Vec<Vec<Poly>>>,
}

/// Nonzero associators `(e_i e_j) e_k - e_i (e_j e_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityAudit {
    pub failures: Vec<((usize, usize, usize), Vec<Poly>)>,
}

impl AssociativityAudit {
    pub fn is_associative(&self) -> bool {
        self.failures.is_empty()
    }
}

impl CoverAlgebra {
    /// `k[x]/(t^r - h)` on the basis `1, t, ..., t^{r-1}`: `t^i t^j = t^{i+j}`
    /// when `i + j < r`, else `h t^{i+j-r}`.
    pub fn uniform(r: u32, h: &Poly) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be positive".into()));
        }
        let ru = r as usize;
        let zero = Poly::zero(h.field(), h.nvars());
        let one = Poly::constant(h.field().one(), h.nvars());
        let mut table = vec![vec![vec![zero.clone(); ru]; ru]; ru];
        for i in 0..ru {
            for j in 0..ru {
                if i + j < ru {
                    table[i][j][i + j] = one.clone();
                } else {
                    table[i][j][i + j - ru] = h.clone();
                }
            }
        }
        let labels = (0..r)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        Ok(CoverAlgebra { kind: AlgebraKind::Uniform { r }, labels, grades: (0..r).collect(), modulus: r, table })
    }

    /// Basis `1, t1, t2` with `t1^2 = f1 t2`, `t2^2 = f2 t1`, `t1 t2 = h`.
    pub fn triple(f1: &Poly, f2: &Poly, h: &Poly) -> Result<Self> {
        if f1.field() != f2.field() || f1.field() != h.field() {
            return Err(Error::FieldMismatch("triple cover data over different fields".into()));
        }
        if f1.nvars() != f2.nvars() || f1.nvars() != h.nvars() {
            return Err(Error::DimensionMismatch("triple cover data in different numbers of variables".into()));
        }
        let zero = Poly::zero(f1.field(), f1.nvars());
        let one = Poly::constant(f1.field().one(), f1.nvars());
        let mut table = vec![vec![vec![zero; 3]; 3]; 3];
        for i in 0..3 {
            table[0][i][i] = one.clone();
            table[i][0][i] = one.clone();
        }
        table[1][1][2] = f1.clone();
        table[2][2][1] = f2.clone();
        table[1][2][0] = h.clone();
        table[2][1][0] = h.clone();
        Ok(CoverAlgebra {
            kind: AlgebraKind::Triple,
            labels: vec!["1".into(), "t1".into(), "t2".into()],
            grades: vec![0, 1, 2],
            modulus: 3,
            table,
        })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grades(&self) -> &[u32] {
        &self.grades
    }

    /// Coordinates of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Poly] {
        &self.table[i][j]
    }

    fn zero_vector(&self) -> Vec<Poly> {
        let p = &self.table[0][0][0];
        vec![Poly::zero(p.field(), p.nvars()); self.rank()]
    }

    /// Product of two elements given by coordinates.
    pub fn multiply(&self, x: &[Poly], y: &[Poly]) -> Vec<Poly> {
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].add(&c.mul(t));
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Poly> {
        let mut v = self.zero_vector();
        let p = &self.table[0][0][0];
        v[i] = Poly::constant(p.field().one(), p.nvars());
        v
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank()).all(|i| (0..self.rank()).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn is_unital(&self) -> bool {
        (0..self.rank()).all(|i| self.table[0][i] == self.basis_vector(i) && self.table[i][0] == self.basis_vector(i))
    }

    /// Every nonzero structure constant of `e_i e_j` sits in grade `g_i + g_j`.
    pub fn respects_grading(&self) -> bool {
        let r = self.modulus;
        (0..self.rank()).all(|i| {
            (0..self.rank()).all(|j| {
                self.table[i][j]
                    .iter()
                    .enumerate()
                    .all(|(k, c)| c.is_zero() || self.grades[k] == (self.grades[i] + self.grades[j]) % r)
            })
        })
    }

    /// Expands every associator on basis triples.
    pub fn associativity_audit(&self) -> AssociativityAudit {
        let n = self.rank();
        let mut failures = vec![];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.multiply(&self.table[i][j], &self.basis_vector(k));
                    let right = self.multiply(&self.basis_vector(i), &self.table[j][k]);
                    let diff: Vec<Poly> = left.iter().zip(&right).map(|(a, b)| a.sub(b)).collect();
                    if diff.iter().any(|p| !p.is_zero()) {
                        failures.push(((i, j, k), diff));
                    }
                }
            }
        }
        AssociativityAudit { failures }
    }

    /// Basis labels and nonzero structure constants, in the form text format.
    pub fn to_json(&self) -> Value {
        let p = &self.table[0][0][0];
        let mut products = vec![];
        for i in 0..self.rank() {
            for j in i..self.rank() {
                let terms: Vec<Value> = self.table[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| json!({"basis": self.labels[k], "coefficient": c.to_string()}))
                    .collect();
                products.push(json!({"left": self.labels[i], "right": self.labels[j], "terms": terms}));
            }
        }
        let kind = match self.kind {
            AlgebraKind::Uniform { .. } => "uniform",
            AlgebraKind::Triple => "triple",
        };
        json!({
            "kind": kind,
            "rank": self.rank(),
            "basis": self.labels,
            "grades": self.grades,
            "field": p.field().to_string(),
            "num_vars": p.nvars(),
            "products": products,
        })
    }
}

pub fn build_uniform_algebra(spec: &UniformCoverSpec) -> CoverAlgebra {
    CoverAlgebra::uniform(spec.r, spec.form.poly()).expect("validated spec has r >= 1")
}

/// The triple cover algebra with `h = f1 f2` unless another `h` is given,
/// together with its associativity audit.
pub fn build_triple_algebra(f1: &Form, f2: &Form, h: Option<&Poly>) -> Result<(CoverAlgebra, AssociativityAudit)> {
    let product = f1.poly().mul(f2.poly());
    let h = h.unwrap_or(&product);
    let algebra = CoverAlgebra::triple(f1.poly(), f2.poly(), h)?;
    let audit = algebra.associativity_audit();
    Ok((algebra, audit))
}
