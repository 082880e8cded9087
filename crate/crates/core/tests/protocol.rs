//! Key generation, serialization and the encrypt/decrypt protocol.

use cirsa_core::quotient::{enumerate_residues, ideals_up_to_norm, mod_pow};
use cirsa_core::rsa::keyfile::{parse_private, parse_public, write_private, write_public};
use cirsa_core::rsa::{
    decrypt_block, decrypt_block_crt, decrypt_message, encrypt_block, encrypt_message,
    is_rsa_ideal, keygen, keygen_from_primes, verify_rsa_ideal_exhaustive,
};
use cirsa_core::{phi_brute, Element, RingId, RsaVerdict};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RINGS: [&str; 8] = [
    "integer",
    "gaussian",
    "quadratic:-2",
    "quadratic:2",
    "quadratic:3",
    "poly:2",
    "poly:3",
    "poly:4",
];

#[test]
fn textbook_key() {
    let (pk, sk) = keygen_from_primes(
        &Element::integer(61),
        &Element::integer(53),
        &BigUint::from(17u32),
    )
    .unwrap();
    assert_eq!(pk.e(), &BigUint::from(17u32));
    assert_eq!(sk.d(), &BigUint::from(2753u32));
    assert_eq!(sk.phi(), &BigUint::from(3120u32));
    let c = encrypt_block(&BigUint::from(65u32), &pk).unwrap();
    assert_eq!(c, BigUint::from(2790u32));
    assert_eq!(decrypt_block(&c, &sk, &pk).unwrap(), BigUint::from(65u32));
    assert_eq!(
        decrypt_block_crt(&c, &sk, &pk).unwrap(),
        BigUint::from(65u32)
    );
}

#[test]
fn zero_block_is_fixed() {
    for (i, tag) in RINGS.iter().enumerate() {
        let ring: RingId = tag.parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
        let (pk, sk) = keygen(&ring, 40, &BigUint::from(65537u32), &mut rng).unwrap();
        let zero = BigUint::zero();
        assert_eq!(encrypt_block(&zero, &pk).unwrap(), zero, "{tag}");
        assert_eq!(decrypt_block(&zero, &sk, &pk).unwrap(), zero, "{tag}");
    }
}

#[test]
fn keys_serialize_round_trip() {
    for (i, tag) in RINGS.iter().enumerate() {
        let ring: RingId = tag.parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(100 + i as u64);
        let (pk, sk) = keygen(&ring, 48, &BigUint::from(65537u32), &mut rng).unwrap();
        assert_eq!(parse_public(&write_public(&pk)).unwrap(), pk);
        assert_eq!(parse_private(&write_private(&pk, &sk)).unwrap(), (pk, sk));
    }
}

#[test]
fn keygen_is_reproducible() {
    for tag in RINGS {
        let ring: RingId = tag.parse().unwrap();
        let draw = || {
            keygen(
                &ring,
                40,
                &BigUint::from(3u32),
                &mut ChaCha8Rng::seed_from_u64(9),
            )
            .unwrap()
        };
        assert_eq!(draw(), draw(), "{tag}");
    }
}

/// Every admissible exponent pair of a small RSA-ideal inverts on all residues.
#[test]
fn rsa_ideals_invert_for_every_exponent() {
    for tag in RINGS {
        let ring: RingId = tag.parse().unwrap();
        let mut checked = 0;
        for a in ideals_up_to_norm(&ring, 120).unwrap() {
            if is_rsa_ideal(&a).unwrap() != RsaVerdict::RsaIdeal {
                continue;
            }
            let phi = phi_brute(&a, 1000).unwrap();
            let mut e = BigUint::from(2u32);
            while e < phi {
                if e.gcd(&phi).is_one() {
                    let d = e.modinv(&phi).unwrap();
                    if d > BigUint::one() {
                        assert!(
                            verify_rsa_ideal_exhaustive(&a, &e, &d, 1000).unwrap(),
                            "{a}: e = {e}"
                        );
                    }
                }
                e += 1u32;
            }
            checked += 1;
        }
        assert!(checked > 0, "{tag}");
    }
}

/// A repeated prime factor breaks the identity for some residue.
#[test]
fn non_squarefree_moduli_fail_somewhere() {
    for tag in RINGS {
        let ring: RingId = tag.parse().unwrap();
        for a in ideals_up_to_norm(&ring, 120).unwrap() {
            if is_rsa_ideal(&a).unwrap() != RsaVerdict::NotRsaIdeal {
                continue;
            }
            let phi = phi_brute(&a, 1000).unwrap();
            let e = (2u32..)
                .map(BigUint::from)
                .find(|e| e.gcd(&phi).is_one())
                .unwrap();
            let ed = &e * e.modinv(&phi).unwrap();
            let fixed = enumerate_residues(&a, 1000)
                .unwrap()
                .all(|w| mod_pow(&w, &ed, &a).unwrap() == w);
            assert!(!fixed, "{a}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn messages_survive_the_protocol(
        ring in prop::sample::select(RINGS.to_vec()),
        seed in any::<u64>(),
        msg in prop::collection::vec(any::<u8>(), 0..600),
    ) {
        let ring: RingId = ring.parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (pk, sk) = keygen(&ring, 48, &BigUint::from(65537u32), &mut rng).unwrap();
        let ct = encrypt_message(&msg, &pk).unwrap();
        for c in &ct {
            prop_assert_eq!(decrypt_block(c, &sk, &pk).unwrap(), decrypt_block_crt(c, &sk, &pk).unwrap());
        }
        prop_assert_eq!(decrypt_message(&ct, &sk, &pk).unwrap(), msg);
    }
}
