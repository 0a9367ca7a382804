use cyclic_covers::exact::{group_from_relations, smith_normal_form, Field, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(cols, rows).unwrap()
}

fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..4, 1usize..5).prop_flat_map(|(cols, rows)| {
        (Just(cols), prop::collection::vec(prop::collection::vec(-12i64..=12, cols), rows))
    })
}

/// gcd of all k x k minors, by brute force over row and column subsets.
fn minors_gcd(m: &IntMatrix, k: usize) -> BigInt {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let mut g = BigInt::zero();
    for rs in subsets(m.rows(), k) {
        for cs in subsets(m.cols(), k) {
            let rows: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| m[(i, j)].clone()).collect()).collect();
            let det = IntMatrix::from_rows(k, &rows).unwrap().det().unwrap();
            g = g.gcd(&det);
        }
    }
    g
}

proptest! {
    #[test]
    fn smith_transforms_are_exact((cols, rows) in small_matrix()) {
        let m = matrix(&rows, cols);
        let s = smith_normal_form(&m);
        let prod = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let expect = if i == j { s.factors[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&prod[(i, j)], &expect);
            }
        }
        prop_assert!(s.left.det().unwrap().abs().is_one());
        prop_assert!(s.right.det().unwrap().abs().is_one());
        for w in s.factors.windows(2) {
            if !w[1].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn factors_are_minor_gcd_quotients((cols, rows) in small_matrix()) {
        let m = matrix(&rows, cols);
        let s = smith_normal_form(&m);
        let mut prefix = BigInt::one();
        for k in 1..=s.factors.len() {
            prefix *= &s.factors[k - 1];
            prop_assert_eq!(prefix.clone(), minors_gcd(&m, k));
        }
    }

    #[test]
    fn group_invariant_under_row_operations((cols, rows) in small_matrix(), a in 0usize..5, b in 0usize..5) {
        let base = group_from_relations(cols, &matrix(&rows, cols)).unwrap();
        let (a, b) = (a % rows.len(), b % rows.len());
        let mut permuted = rows.clone();
        permuted.swap(a, b);
        let mut negated = rows.clone();
        negated[a] = negated[a].iter().map(|x| -x).collect();
        let mut added = rows.clone();
        if a != b {
            added[a] = added[a].iter().zip(&rows[b]).map(|(x, y)| x + y).collect();
        }
        for variant in [permuted, negated, added] {
            let g = group_from_relations(cols, &matrix(&variant, cols)).unwrap();
            prop_assert!(g.is_isomorphic(&base));
        }
    }

    #[test]
    fn field_axioms_in_extension(i in 0u64..343, j in 0u64..343, k in 0u64..343) {
        let f = Field::parse("7^3").unwrap();
        let (a, b, c) = (f.element(i), f.element(j), f.element(k));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.pow(343), a.clone());
    }
}

#[test]
fn worked_examples() {
    let g = group_from_relations(2, &matrix(&[vec![2, -4], vec![4, -2], vec![-2, -2]], 2)).unwrap();
    assert_eq!(g.invariant_factors(), &[BigInt::from(2), BigInt::from(6)]);
    assert_eq!(g.to_string(), "Z/2 x Z/6");
    let g = group_from_relations(2, &IntMatrix::zeros(0, 2)).unwrap();
    assert_eq!(g.free_rank(), 2);
}

#[test]
fn extension_moduli_are_reproducible() {
    let a = Field::parse("5^4").unwrap();
    let b = Field::parse("5^4").unwrap();
    assert_eq!(a, b);
    let x = a.element(17);
    let y = b.element(17);
    assert_eq!(&x * &x, &y * &y);
}
