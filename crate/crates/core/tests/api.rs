use affschur::afcomb::{enumerate_theta, PeriodicMatrix, ZVector};
use affschur::schur::{canonical_basis, compute_f, compute_g, delta_theta, SchurElement};
use affschur::LaurentPoly;

fn e(i: i64, j: i64) -> PeriodicMatrix {
    PeriodicMatrix::unit(2, i, j)
}

#[test]
fn divided_power_coproduct_constant() {
    let a = e(1, 2).scale(2);
    assert_eq!(compute_f(&a, &e(1, 2), &e(1, 2)).unwrap(), LaurentPoly::v());
    assert_eq!(compute_f(&a, &a, &PeriodicMatrix::zero(2)).unwrap(), LaurentPoly::one());
}

#[test]
fn canonical_basis_is_bar_invariant_and_unitriangular() {
    for a in enumerate_theta(2, 2, 1) {
        let theta = canonical_basis(&a).unwrap();
        assert_eq!(theta.bar().unwrap(), theta, "{a:?}");
        assert_eq!(theta.coeff(&a), LaurentPoly::one());
        for (b, c) in theta.terms() {
            assert!(b == &a || c.in_vinv_z_vinv(), "{a:?} {b:?}");
        }
    }
}

#[test]
fn delta_theta_agrees_with_compute_g() {
    let a = e(1, 1).add(&e(1, 2)).unwrap();
    let coords = delta_theta(&a, 1).unwrap();
    assert!(!coords.is_empty());
    for ((b, c), g) in &coords {
        assert_eq!(&compute_g(&a, b, c, 1, 1).unwrap(), g);
        assert!(g.is_nonneg());
    }
}

#[test]
fn std_products_of_idempotents() {
    let d = PeriodicMatrix::diag(&[1, 1]);
    let other = PeriodicMatrix::diag(&[2, 0]);
    let x = SchurElement::std(&d);
    assert_eq!(x.mul(&x).unwrap(), x);
    assert!(x.mul(&SchurElement::std(&other)).unwrap().is_zero());
    let shifted = d.add_diag(&ZVector::new(vec![1, 0])).unwrap();
    assert_eq!(shifted, PeriodicMatrix::diag(&[2, 1]));
    assert_eq!(x.iota(3).unwrap(), SchurElement::std(&PeriodicMatrix::diag(&[1, 1, 0])));
}
