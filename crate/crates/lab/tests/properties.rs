//! Ideal lattices of Z/n and small product rings against closed forms.

use cirsa_core::rsa::RsaVerdict;
use cirsa_lab::tables::{parse_tables, write_tables};
use cirsa_lab::verify::maximal_ideals;
use cirsa_lab::{
    all_ideals, crt_cor1_verify, fideal_intersection, fideal_product, fideal_sum, is_ci_ring,
    is_rsa_ideal_fin, principal_ideal, quotient_ring, theorem5_verify, unit_count, FiniteRing,
    RingKind, DEFAULT_ORDER_CAP,
};
use proptest::prelude::*;

fn zmod(n: u64) -> FiniteRing {
    FiniteRing::build(&RingKind::ZMod(n), DEFAULT_ORDER_CAP).unwrap()
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn totient(n: u64) -> u64 {
    prime_factors(n)
        .iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

fn divisor_count(n: u64) -> usize {
    prime_factors(n)
        .iter()
        .map(|(_, k)| *k as usize + 1)
        .product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zmod_ideals_are_the_divisors(n in 2u64..=120) {
        let ring = zmod(n);
        let lattice = all_ideals(&ring, DEFAULT_ORDER_CAP).unwrap();
        prop_assert_eq!(lattice.len(), divisor_count(n));
        prop_assert_eq!(maximal_ideals(&ring, &lattice).len(), prime_factors(n).len());
        prop_assert_eq!(unit_count(&ring) as u64, totient(n));
        prop_assert!(is_ci_ring(&ring, &lattice).unwrap());
    }

    #[test]
    fn zmod_rsa_ideals_are_squarefree(n in 3u64..=120, d_seed in any::<u64>()) {
        let ring = zmod(n);
        let divisors: Vec<u64> = (2..=n).filter(|d| n % d == 0).collect();
        let d = divisors[(d_seed % divisors.len() as u64) as usize];
        let a = principal_ideal(&ring, d as usize % n as usize);
        let verdict = is_rsa_ideal_fin(&ring, &a).unwrap();
        let q = quotient_ring(&ring, &a).unwrap();
        prop_assert_eq!(q.order() as u64, d);
        if d <= 2 || totient(d) <= 2 {
            prop_assert_eq!(verdict, RsaVerdict::Ineligible);
        } else {
            let squarefree = prime_factors(d).iter().all(|(_, k)| *k == 1);
            prop_assert_eq!(verdict == RsaVerdict::RsaIdeal, squarefree, "d = {}", d);
        }
    }

    #[test]
    fn comaximal_products_are_intersections(n in 2u64..=90, x in any::<u64>(), y in any::<u64>()) {
        let ring = zmod(n);
        let lattice = all_ideals(&ring, DEFAULT_ORDER_CAP).unwrap();
        let a = lattice.get((x % lattice.len() as u64) as usize);
        let b = lattice.get((y % lattice.len() as u64) as usize);
        let ab = fideal_product(&ring, a, b).unwrap();
        prop_assert!(ab.is_subset(a) && ab.is_subset(b));
        if fideal_sum(&ring, a, b).unwrap().is_whole(&ring) {
            prop_assert_eq!(ab, fideal_intersection(&ring, a, b).unwrap());
        }
    }

    #[test]
    fn tables_round_trip(n in 2u64..=40) {
        let ring = zmod(n);
        let text = write_tables(&ring);
        let back = parse_tables(&text, "copy", DEFAULT_ORDER_CAP).unwrap();
        prop_assert_eq!(write_tables(&back), text);
    }
}

#[test]
fn product_lattices_multiply() {
    for (left, right) in [(4u64, 9u64), (6, 10), (8, 3), (12, 5)] {
        let spec = format!("product(zmod:{left},zmod:{right})");
        let ring = FiniteRing::build(&spec.parse().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let lattice = all_ideals(&ring, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(
            lattice.len(),
            divisor_count(left) * divisor_count(right),
            "{spec}"
        );
    }
}

#[test]
fn commutative_rings_satisfy_both_verifiers() {
    for spec in [
        "zmod:30",
        "zmod:72",
        "gf9",
        "product(zmod:4,gf3)",
        "product(zmod:6,zmod:10)",
    ] {
        let ring = FiniteRing::build(&spec.parse().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let lattice = all_ideals(&ring, DEFAULT_ORDER_CAP).unwrap();
        let t5 = theorem5_verify(&ring, &lattice).unwrap();
        assert!(t5.is_clean(), "{t5}");
        let crt = crt_cor1_verify(&ring, &lattice).unwrap();
        assert!(crt.is_clean(), "{crt}");
    }
}

#[test]
fn upper_triangular_matrices_are_not_ci() {
    for spec in ["triangular2:gf2", "triangular2:gf3"] {
        let ring = FiniteRing::build(&spec.parse().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let lattice = all_ideals(&ring, DEFAULT_ORDER_CAP).unwrap();
        assert!(!is_ci_ring(&ring, &lattice).unwrap(), "{spec}");
        assert!(theorem5_verify(&ring, &lattice).is_err());
    }
}
