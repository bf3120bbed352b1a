use std::time::Instant;

use congruence_lab::oracles::{
    alternating_count, ascent_distribution, dumont_count, gun_count, multiset_descent_distribution,
    newcomb_distribution, newcomb_piles, MULTISET_CAP,
};
use congruence_lab::sequences::{eulerian_row, generalized_eulerian_row, genocchi_number, multiset_count, zigzag};
use num_bigint::BigInt;
use num_traits::Signed;

fn unsigned_genocchi(n: usize) -> BigInt {
    genocchi_number(2 * n).unwrap().abs()
}

#[test]
fn permutation_statistics_match_sequences() {
    let start = Instant::now();
    for n in 1..=8 {
        assert_eq!(ascent_distribution(n).unwrap().counts, eulerian_row(n), "ascents n = {n}");
    }
    let z = zigzag(10);
    for (n, zn) in z.iter().enumerate() {
        assert_eq!(&alternating_count(n).unwrap(), zn, "alternating n = {n}");
    }
    for n in 1..=7 {
        assert_eq!(newcomb_distribution(n).unwrap().counts, eulerian_row(n), "newcomb n = {n}");
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn genocchi_interpretations() {
    let dumont: Vec<BigInt> = (1..=5).map(|n| dumont_count(n).unwrap()).collect();
    let want: Vec<BigInt> = [1, 1, 3, 17, 155].into_iter().map(BigInt::from).collect();
    assert_eq!(dumont, want);
    for n in 1..=5 {
        assert_eq!(dumont_count(n).unwrap(), unsigned_genocchi(n));
    }
    for n in 1..=8 {
        assert_eq!(gun_count(n).unwrap(), unsigned_genocchi(n), "guns n = {n}");
    }
}

#[test]
fn multiset_descents_match_generalized_rows() {
    let mut checked = 0;
    for i in 1..=4u64 {
        for n in 1..=8u64 {
            if multiset_count(n, i) > BigInt::from(MULTISET_CAP) {
                break;
            }
            let oracle = multiset_descent_distribution(n as usize, i as usize).unwrap();
            assert_eq!(oracle.total(), multiset_count(n, i));
            assert_eq!(oracle.counts, generalized_eulerian_row(n, i).unwrap(), "n = {n}, i = {i}");
            checked += 1;
        }
    }
    assert!(checked >= 12);
}

#[test]
fn newcomb_pile_examples() {
    assert_eq!(newcomb_piles(&[3, 2, 1]), 1);
    assert_eq!(newcomb_piles(&[1, 2, 3]), 3);
    assert_eq!(newcomb_piles(&[2, 2, 1, 1]), 1);
    assert_eq!(newcomb_piles(&[1, 1, 2, 2]), 2);
}

#[test]
fn enumerators_refuse_oversized_inputs() {
    assert!(ascent_distribution(11).is_err());
    assert!(dumont_count(6).is_err());
    assert!(gun_count(9).is_err());
    assert!(multiset_descent_distribution(6, 3).is_err());
}
