//! Prime elements: maximality tests and seeded random generation.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::intmath::{is_prime, legendre, sqrt_mod, to_signed};
use crate::poly;
use crate::ring::{Element, RingId};

/// Attempts per requested prime before giving up.
pub const PRIME_ATTEMPTS: usize = 100_000;

/// True iff `(p)` is a maximal ideal, i.e. R/(p) is a field.
pub fn is_prime_element(p: &Element) -> Result<bool> {
    if p.is_zero() || p.is_unit() {
        return Err(Error::NotApplicable);
    }
    let norm = p.norm()?;
    match p.ring() {
        RingId::Integer => Ok(is_prime(&norm)),
        RingId::Gaussian | RingId::Quadratic(_) => {
            if is_prime(&norm) {
                return Ok(true);
            }
            // Otherwise (p) is maximal only if p is an associate of an inert rational prime.
            let root = norm.sqrt();
            if &root * &root != norm || !is_prime(&root) {
                return Ok(false);
            }
            let k = p.ring().quadratic_k().unwrap();
            if !is_inert(k, &root) {
                return Ok(false);
            }
            let rational = Element::from_int(p.ring(), to_signed(&root));
            p.is_associate(&rational)
        }
        RingId::PolyOverGF(field) => Ok(poly::is_irreducible(field, p.as_poly().unwrap())),
    }
}

/// Whether the rational prime `p` stays prime in Z[sqrt(k)].
pub fn is_inert(k: i64, p: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if p == &two {
        // 2 ramifies for every supported k (-2, -1, 2, 3)
        return false;
    }
    legendre(&BigInt::from(k), p) == -1
}

/// A prime element of norm `p` lying over a split or ramified rational
/// prime `p`, computed as gcd(p, t + sqrt(k)) with t^2 = k mod p.
pub fn prime_above(ring: &RingId, p: &BigUint) -> Result<Option<Element>> {
    let k = ring
        .quadratic_k()
        .ok_or_else(|| Error::UnsupportedRing(format!("{ring} is not quadratic")))?;
    let t = if p == &BigUint::from(2u32) {
        BigUint::from((k.rem_euclid(2)) as u32)
    } else {
        match sqrt_mod(&BigInt::from(k), p) {
            Some(t) => t,
            None => return Ok(None),
        }
    };
    let rational = Element::from_int(ring, to_signed(p));
    let pi = rational.gcd(&Element::quadratic(ring, to_signed(&t), 1)?)?;
    debug_assert_eq!(pi.norm()?, *p);
    Ok(Some(pi))
}

/// Polynomial degree matching a requested norm size: round(bits / log2 q), at least 1.
pub fn poly_degree_for_bits(q: u64, norm_bits: u32) -> usize {
    let d = (norm_bits as f64 / (q as f64).log2()).round() as usize;
    d.max(1)
}

/// Seeded random prime element.
///
/// Z and the quadratic rings return an element whose norm is a rational prime
/// in `[2^(bits-1), 2^bits)`; the quadratic case picks a split prime and takes
/// the prime lying above it. GF(q)[x] returns a monic irreducible polynomial
/// of degree `round(bits / log2 q)`, the norm q^deg being a power of q.
pub fn random_prime_element<R: Rng>(ring: &RingId, norm_bits: u32, rng: &mut R) -> Result<Element> {
    if norm_bits < 4 {
        return Err(Error::BadExponents(format!(
            "norm_bits = {norm_bits} is below 4"
        )));
    }
    let lo = BigUint::one() << (norm_bits - 1);
    let hi = BigUint::one() << norm_bits;
    match ring {
        RingId::Integer => {
            for _ in 0..PRIME_ATTEMPTS {
                let n = rng.gen_biguint_range(&lo, &hi) | BigUint::one();
                if n < hi && is_prime(&n) {
                    return Ok(Element::integer(to_signed(&n)));
                }
            }
            Err(Error::ExhaustedAttempts(PRIME_ATTEMPTS))
        }
        RingId::Gaussian | RingId::Quadratic(_) => {
            let k = ring.quadratic_k().unwrap();
            for _ in 0..PRIME_ATTEMPTS {
                let n = rng.gen_biguint_range(&lo, &hi) | BigUint::one();
                if n >= hi
                    || !is_prime(&n)
                    || is_inert(k, &n)
                    || (k.abs() > 1 && (&n % k.unsigned_abs()).is_zero())
                {
                    continue;
                }
                if let Some(pi) = prime_above(ring, &n)? {
                    // Pick one of the two conjugate primes.
                    let pi = if rng.gen_bool(0.5) {
                        pi.conjugate().canonical()
                    } else {
                        pi
                    };
                    return Ok(pi);
                }
            }
            Err(Error::ExhaustedAttempts(PRIME_ATTEMPTS))
        }
        RingId::PolyOverGF(field) => {
            let q = field.order();
            let deg = poly_degree_for_bits(q, norm_bits);
            for _ in 0..PRIME_ATTEMPTS {
                let mut c: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
                c.push(1);
                if poly::is_irreducible(field, &c) {
                    return Element::poly(ring, &c);
                }
            }
            Err(Error::ExhaustedAttempts(PRIME_ATTEMPTS))
        }
    }
}
