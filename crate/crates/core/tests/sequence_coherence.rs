use congruence_lab::arith::{factorial, prime_power, primes_in, ExactRat, PrimeRange, Residue};
use congruence_lab::sequences::{
    bernoulli_exact, bernoulli_mod, divided_genocchi, eulerian_closed, eulerian_mod, eulerian_row, eulerian_row_mod,
    euler_numbers, generalized_euler, generalized_eulerian_row, genocchi_numbers, harmonic_table, multiset_count,
    power_sum, zigzag, ZigzagMod, GENERALIZED_EULERIAN_CAP,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

const N: usize = 30;

fn primes(hi: u64) -> Vec<u64> {
    primes_in(PrimeRange::new(5, hi))
}

fn reduce(v: &BigInt, m: u64) -> Residue {
    Residue::from_bigint(v, m)
}

#[test]
fn eulerian_rows_are_symmetric_positive_and_sum_to_factorial() {
    for n in 1..=50 {
        let row = eulerian_row(n);
        assert_eq!(row.len(), n);
        assert!(row[0].is_one());
        assert!(row.iter().all(|v| v.is_positive()));
        assert!(row.iter().eq(row.iter().rev()), "n = {n}");
        assert_eq!(row.iter().sum::<BigInt>(), factorial(n as u64));
    }
}

#[test]
fn closed_form_matches_recurrence() {
    for n in 1..=25u64 {
        let row = eulerian_row(n as usize);
        for m in 0..n {
            assert_eq!(eulerian_closed(n, m), row[m as usize]);
        }
        assert!(eulerian_closed(n, n).is_zero());
    }
}

#[test]
fn generalized_rows_sum_to_multiset_count() {
    for i in 1..=4u64 {
        for n in 1..=8u64 {
            if multiset_count(n, i) > BigInt::from(GENERALIZED_EULERIAN_CAP) {
                break;
            }
            let row = generalized_eulerian_row(n, i).unwrap();
            assert!(row.iter().all(|v| !v.is_negative()));
            assert_eq!(row.iter().sum::<BigInt>(), multiset_count(n, i));
            if i == 1 {
                assert_eq!(row, eulerian_row(n as usize));
            }
        }
    }
}

#[test]
fn generalized_euler_signs() {
    let z = zigzag(13);
    for (n, zn) in z.iter().enumerate() {
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        assert_eq!(generalized_euler(n), zn * sign);
    }
    let table = [1, 1, -1, -2, 5, 16, -61, -272, 1385, 7936, -50521, -353792, 2702765];
    for (n, &v) in table.iter().enumerate() {
        assert_eq!(generalized_euler(n), BigInt::from(v), "n = {n}");
    }
}

/// Every modular mirror agrees with its exact counterpart after reduction.
#[test]
fn exact_and_modular_mirrors_agree() {
    let z = zigzag(N + 1);
    let euler = euler_numbers(N);
    let genocchi = genocchi_numbers(N).unwrap();
    let bern = bernoulli_exact(N);
    for p in primes(199) {
        for e in 1..=3 {
            let m = prime_power(p, e);
            let zm = ZigzagMod::build(N + 1, m);
            let rows: Vec<Vec<Residue>> = (1..=N).map(|n| eulerian_row_mod(n, m)).collect();
            for n in 0..=N {
                assert_eq!(zm.zigzag(n), reduce(&z[n], m));
                assert_eq!(zm.euler(n), reduce(&euler[n], m));
                assert_eq!(zm.ehat(n), reduce(&generalized_euler(n), m));
                assert_eq!(zm.genocchi(n).unwrap(), reduce(&genocchi[n], m));
                if n >= 1 && n as u64 % p != 0 {
                    let g = ExactRat::new(genocchi[n].clone(), BigInt::from(n));
                    assert_eq!(divided_genocchi(n, p, e).unwrap(), Residue::from_rat(&g, m).unwrap());
                }
                if !bern[n].denom().is_multiple_of(&BigInt::from(p)) {
                    if let Ok(b) = bernoulli_mod(n, p, e) {
                        assert_eq!(b, Residue::from_rat(&bern[n], m).unwrap(), "B_{n} mod {p}^{e}");
                    }
                }
                if n >= 1 {
                    let exact = eulerian_row(n);
                    for (k, v) in exact.iter().enumerate() {
                        assert_eq!(rows[n - 1][k], reduce(v, m));
                        if (k as u64) + 1 < p {
                            assert_eq!(eulerian_mod(&BigInt::from(n), k as u64, p, e).unwrap(), reduce(v, m));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn bernoulli_mod_is_defined_whenever_one_minus_two_pow_is_a_unit() {
    let bern = bernoulli_exact(N);
    for p in primes(199) {
        for n in (2..=N).step_by(2) {
            let unit = (BigInt::one() - (BigInt::one() << n)) % BigInt::from(p) != BigInt::zero();
            if unit && n % (p as usize - 1) != 0 {
                assert_eq!(bernoulli_mod(n, p, 1).unwrap(), Residue::from_rat(&bern[n], p).unwrap());
            }
        }
    }
}

#[test]
fn harmonic_tables_match_exact_sums() {
    for p in primes(199) {
        for e in 1..=3 {
            let m = prime_power(p, e);
            let t = harmonic_table(p, e);
            let mut h = ExactRat::zero();
            for k in 1..p {
                h += ExactRat::new(BigInt::one(), BigInt::from(k));
                assert_eq!(t.h[k as usize], Residue::from_rat(&h, m).unwrap());
                assert_eq!(t.h[k as usize] - t.h[k as usize - 1], Residue::new(k, m).inv().unwrap());
            }
            let odd: ExactRat = (1..p).step_by(2).map(|j| ExactRat::new(BigInt::one(), BigInt::from(j))).sum();
            assert_eq!(t.h_odd, Residue::from_rat(&odd, m).unwrap());
        }
    }
}

#[test]
fn power_sums_match_exact() {
    for p in primes(60) {
        for k in 1..12u32 {
            let exact: BigInt = (1..=(p - 1) / 2).map(|r| BigInt::from(r).pow(k)).sum();
            assert_eq!(power_sum(k as u64, p, 3), reduce(&exact, prime_power(p, 3)));
        }
    }
}

proptest! {
    #[test]
    fn lemma_one(p in prop::sample::select(primes(500)), idx in any::<prop::sample::Index>()) {
        let k = idx.index(p as usize - 2) as u64;
        let h = harmonic_table(p, 1);
        prop_assert_eq!(eulerian_mod(&BigInt::from(p - 2), k, p, 1).unwrap(), h.h[k as usize + 1]);
    }

    #[test]
    fn eulerian_mod_handles_huge_n(p in prop::sample::select(primes(60)), m in 0u64..4, n in 1u64..60, j in 1u32..=2) {
        prop_assume!(m + 1 < p);
        let i = (0..).find(|&i| p.pow(i) > m).unwrap();
        let shift = prime_power(p, i + j - 1) * (p - 1);
        let a = eulerian_mod(&BigInt::from(n), m, p, j).unwrap();
        let b = eulerian_mod(&BigInt::from(n + shift), m, p, j).unwrap();
        prop_assert_eq!(a, b);
    }
}
