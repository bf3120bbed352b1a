use congruence_lab::arith::ExactRat;
use congruence_lab::sequences::{euler_numbers, eulerian_row, genocchi_numbers, zigzag};
use congruence_lab::series::{gf, PowerSeries, DEFAULT_ORDER};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn int(v: &BigInt) -> ExactRat {
    ExactRat::from_integer(v.clone())
}

fn rat(n: i64, d: i64) -> ExactRat {
    ExactRat::new(n.into(), d.into())
}

#[test]
fn sech_gives_euler_numbers() {
    let s = gf::sech(DEFAULT_ORDER);
    for (n, e) in euler_numbers(12).iter().enumerate() {
        assert_eq!(s.nth_coeff_times_factorial(n).unwrap(), int(e), "n = {n}");
    }
}

#[test]
fn tan_and_sec_give_zigzag_numbers() {
    let (t, s) = (gf::tan(DEFAULT_ORDER), gf::sec(DEFAULT_ORDER));
    let z = zigzag(13);
    for (n, zn) in z.iter().enumerate() {
        let series = if n % 2 == 1 { &t } else { &s };
        assert_eq!(series.nth_coeff_times_factorial(n).unwrap(), int(zn), "n = {n}");
    }
    let e = euler_numbers(12);
    for k in 0..=6 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(int(&z[2 * k]), int(&(&e[2 * k] * sign)));
    }
}

#[test]
fn sec_plus_tan_satisfies_the_ode() {
    let n = 16;
    let y = gf::sec(n).try_add(&gf::tan(n)).unwrap();
    let lhs = y.derive().scale(&rat(2, 1));
    let rhs = y.try_mul(&y).unwrap().try_add(&PowerSeries::one(n)).unwrap().truncate(n - 1);
    assert_eq!(lhs, rhs);
}

#[test]
fn genocchi_generating_function() {
    let g = gf::genocchi(DEFAULT_ORDER);
    let printed = [1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073];
    for (i, &v) in printed.iter().enumerate() {
        assert_eq!(g.nth_coeff_times_factorial(i + 1).unwrap(), rat(v, 1), "n = {}", i + 1);
    }
    for (n, v) in genocchi_numbers(12).unwrap().iter().enumerate() {
        assert_eq!(g.nth_coeff_times_factorial(n).unwrap(), int(v));
    }
}

#[test]
fn euler_polynomial_at_one_half() {
    let s = gf::euler_polynomial(&rat(1, 2), DEFAULT_ORDER);
    for (n, e) in euler_numbers(12).iter().enumerate() {
        let scaled = s.nth_coeff_times_factorial(n).unwrap() * int(&(BigInt::one() << n));
        assert_eq!(scaled, int(e), "n = {n}");
    }
}

#[test]
fn eulerian_generating_function() {
    for x in [rat(2, 1), rat(3, 1), rat(1, 2), rat(-1, 1)] {
        let s = gf::eulerian(&x, DEFAULT_ORDER).unwrap();
        for n in 1..=10 {
            let h = s.nth_coeff_times_factorial(n).unwrap();
            let lhs = h * pow(&(x.clone() - ExactRat::one()), n);
            let rhs: ExactRat = eulerian_row(n).iter().enumerate().map(|(m, e)| int(e) * pow(&x, m)).sum();
            assert_eq!(lhs, rhs, "x = {x}, n = {n}");
        }
    }
}

fn pow(x: &ExactRat, n: usize) -> ExactRat {
    (0..n).fold(ExactRat::one(), |a, _| a * x)
}

fn series(max: i64) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-max..=max, 1..=max), 9).prop_map(|v| {
        PowerSeries::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)).collect(), 8)
    })
}

proptest! {
    #[test]
    fn ring_laws(a in series(9), b in series(9), c in series(9)) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(ab.clone(), b.try_mul(&a).unwrap());
        prop_assert_eq!(ab.try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        let lhs = a.try_add(&b).unwrap().try_mul(&c).unwrap();
        prop_assert_eq!(lhs, a.try_mul(&c).unwrap().try_add(&b.try_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.coeffs().len(), 9);
    }

    #[test]
    fn inverse_times_series_is_one(a in series(9)) {
        prop_assume!(!a.coeffs()[0].is_zero());
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.try_mul(&inv).unwrap(), PowerSeries::one(8));
    }

    #[test]
    fn derivative_is_linear(a in series(9), b in series(9)) {
        let sum = a.try_add(&b).unwrap().derive();
        prop_assert_eq!(sum, a.derive().try_add(&b.derive()).unwrap());
    }
}
