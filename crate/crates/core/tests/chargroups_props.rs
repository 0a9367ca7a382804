use cyclic_covers::chargroups::{
    congruence_index, cone_class_e, from_v_basis, gamma_lattice, in_gamma_lattice, isom_case, isom_check,
    stated_cone_class_v, to_v_basis, uniform_char_index, Character, IsomCase, Parity,
};
use cyclic_covers::exact::Field;
use cyclic_covers::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Index of the congruence lattice, by counting residues in one period box.
fn counted_index(d1: u32, d2: u32) -> u64 {
    let period = (d1 * d2) as i128;
    let mut members = 0u64;
    for x1 in 0..period {
        for x2 in 0..period {
            if in_gamma_lattice(d1, d2, x1, x2) {
                members += 1;
            }
        }
    }
    (period * period) as u64 / members
}

#[test]
fn congruence_index_matches_counting() {
    for d1 in 1..=9u32 {
        for d2 in 1..=9u32 {
            assert_eq!(congruence_index(d1, d2), BigInt::from(counted_index(d1, d2)), "({d1}, {d2})");
        }
    }
}

#[test]
fn uniform_index_is_least_descending_power() {
    for n in 1..=8u32 {
        for d in 1..=30u32 {
            let least = (1..).find(|k| (k * (n + 1)) % d == 0).unwrap();
            assert_eq!(uniform_char_index(n, d), least, "n = {n}, d = {d}");
        }
    }
}

#[test]
fn lattice_basis_spans_the_congruence_lattice() {
    for d1 in 1..=12u32 {
        for d2 in 1..=12u32 {
            match gamma_lattice(d1, d2) {
                Ok(l) => {
                    let det = (l.v1.0 * l.v2.1 - l.v1.1 * l.v2.0).abs();
                    assert_eq!(BigInt::from(det), congruence_index(d1, d2));
                    // every lattice point in a box has integral v-coordinates
                    for x1 in -30i128..=30 {
                        for x2 in -30i128..=30 {
                            let c = Character::e(x1, x2);
                            assert_eq!(to_v_basis(&c, &l).is_ok(), in_gamma_lattice(d1, d2, x1, x2));
                        }
                    }
                }
                Err(Error::SwapRequired) => assert!(d1 % 2 == 0 && d2 % 2 == 1),
                Err(e) => panic!("unexpected {e}"),
            }
        }
    }
}

#[test]
fn integral_cone_classes_are_invariant() {
    for d1 in 1..=12u32 {
        for d2 in 1..=12u32 {
            if 2 * d1 < d2 || 2 * d2 < d1 {
                continue;
            }
            let Ok(l) = gamma_lattice(d1, d2) else { continue };
            for a1 in -4i128..=4 {
                for a2 in -4i128..=4 {
                    if let Ok(c) = cone_class_e(a1, a2, d1, d2) {
                        assert!(l.contains(&c), "({a1}, {a2}) on ({d1}, {d2})");
                    }
                }
            }
        }
    }
}

#[test]
fn even_closed_form_agrees_with_basis_change() {
    for d1 in (2..=12u32).step_by(2) {
        for d2 in (2..=12u32).step_by(2) {
            if 2 * d1 < d2 || 2 * d2 < d1 {
                continue;
            }
            let l = gamma_lattice(d1, d2).unwrap();
            assert_eq!(l.parity, Parity::BothEven);
            for a1 in -4i64..=4 {
                for a2 in -4i64..=4 {
                    let c = cone_class_e(a1 as i128, a2 as i128, d1, d2).unwrap();
                    let v = to_v_basis(&c, &l).unwrap().pair();
                    let r = |x: i128| BigRational::from_integer(BigInt::from(x));
                    assert_eq!(stated_cone_class_v(a1, a2, d2, Parity::BothEven), (r(v.0), r(v.1)));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn basis_change_round_trips(d1 in 1u32..20, d2 in 1u32..20, m1 in -50i128..50, m2 in -50i128..50) {
        prop_assume!(!(d1 % 2 == 0 && d2 % 2 == 1));
        let l = gamma_lattice(d1, d2).unwrap();
        let basis = to_v_basis(&Character::e(0, 0), &l).unwrap().basis;
        let v = Character { basis, coords: vec![m1, m2] };
        let e = from_v_basis(&v, &l);
        prop_assert!(l.contains(&e));
        prop_assert_eq!(to_v_basis(&e, &l).unwrap(), v);
    }
}

#[test]
fn isomorphism_checks_over_prime_field() {
    let f = Field::parse("101").unwrap();
    for (n, d) in [(2u32, 4u32), (2, 3), (2, 2), (1, 2), (1, 3), (3, 4), (3, 5)] {
        let report = isom_check(n, d, 40, &f, 7).unwrap();
        assert!(report.passed, "n = {n}, d = {d}: {report:?}");
    }
    assert_eq!(isom_case(2, 4).unwrap(), (IsomCase::One, 1));
    assert_eq!(isom_case(2, 5).unwrap(), (IsomCase::MinusOne, 2));
    assert!(matches!(isom_case(3, 2), Err(Error::NoClosedFormIsomorphism { .. })));
}
