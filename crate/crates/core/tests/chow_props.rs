use cyclic_covers::chow::{chow_mul, discriminant_degree, z_bidegree, ChowClass, ChowRing};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn discriminant_degree_matches_closed_form() {
    for n in 1..=6u32 {
        for m in 2..=30u32 {
            let expect = BigInt::from(n + 1) * BigInt::from(m - 1).pow(n);
            assert_eq!(discriminant_degree(n, m), expect, "n = {n}, m = {m}");
        }
    }
}

#[test]
fn binary_discriminant_degrees() {
    // the discriminant of a binary form of degree m has degree 2(m - 1)
    for m in 2..=40u32 {
        assert_eq!(discriminant_degree(1, m), BigInt::from(2 * (m - 1)));
    }
}

#[test]
fn z_bidegree_is_swapped_branch_degrees() {
    for d1 in 1..=15u32 {
        for d2 in 1..=15u32 {
            let ok = 2 * d1 >= d2 && 2 * d2 >= d1;
            match z_bidegree(d1, d2) {
                Ok((a, b)) => {
                    assert!(ok);
                    assert_eq!(a, BigInt::from(2 * d2 - d1));
                    assert_eq!(b, BigInt::from(2 * d1 - d2));
                }
                Err(_) => assert!(!ok, "({d1}, {d2}) rejected"),
            }
        }
    }
}

fn ring() -> std::sync::Arc<ChowRing> {
    ChowRing::new([("a", 4), ("b", 3), ("c", 5)])
}

fn class_strategy() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), -20i64..=20), 0..6)
}

fn build(terms: &[(Vec<u32>, i64)]) -> ChowClass {
    let r = ring();
    let mut out = ChowClass::zero(&r);
    for (e, c) in terms {
        let mut mono = ChowClass::constant(&r, *c);
        for (i, &k) in e.iter().enumerate() {
            mono = chow_mul(&mono, &ChowClass::generator(&r, i).pow(k)).unwrap();
        }
        out = out.add(&mono);
    }
    out
}

proptest! {
    #[test]
    fn ring_axioms(x in class_strategy(), y in class_strategy(), z in class_strategy()) {
        let (x, y, z) = (build(&x), build(&y), build(&z));
        prop_assert_eq!(chow_mul(&x, &y).unwrap(), chow_mul(&y, &x).unwrap());
        let left = chow_mul(&chow_mul(&x, &y).unwrap(), &z).unwrap();
        let right = chow_mul(&x, &chow_mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let dist = chow_mul(&x, &y.add(&z)).unwrap();
        prop_assert_eq!(dist, chow_mul(&x, &y).unwrap().add(&chow_mul(&x, &z).unwrap()));
    }

    #[test]
    fn truncation_is_respected(x in class_strategy()) {
        let x = build(&x);
        for (e, c) in x.terms() {
            prop_assert!(!num_traits::Zero::is_zero(c));
            prop_assert!(e[0] < 4 && e[1] < 3 && e[2] < 5);
        }
    }
}

#[test]
fn mismatched_rings_are_rejected() {
    let a = ChowClass::generator(&ChowRing::new([("x", 3)]), 0);
    let b = ChowClass::generator(&ChowRing::new([("x", 4)]), 0);
    assert!(chow_mul(&a, &b).is_err());
}
