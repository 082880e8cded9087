//! The cryptosystem over `A = M1 * M2`, plus RSA-ideal verdicts.

pub mod codec;
pub mod keyfile;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::factor::factor_element;
use crate::numtheory::{
    crt_solve, mod_inverse_int, phi_brute, phi_from_factorization, CongruenceSystem,
};
use crate::primes::{is_prime_element, random_prime_element};
use crate::quotient::{
    element_at, enumerate_residues, index_of, mod_pow, PrincipalIdeal, ResidueBox,
};
use crate::ring::{Element, RingId};

pub use codec::{block_capacity, decode_bytes, encode_bytes};

pub const DEFAULT_E: u64 = 65537;
pub const DEFAULT_VERIFY_CAP: u64 = 10_000;
const DISTINCT_RETRIES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicKey {
    modulus: PrincipalIdeal,
    e: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrivateKey {
    p: Element,
    q: Element,
    m1: PrincipalIdeal,
    m2: PrincipalIdeal,
    d: BigUint,
    phi: BigUint,
}

impl PublicKey {
    pub fn ring(&self) -> &RingId {
        self.modulus.ring()
    }

    pub fn modulus(&self) -> &PrincipalIdeal {
        &self.modulus
    }

    pub fn e(&self) -> &BigUint {
        &self.e
    }

    pub fn residue_box(&self) -> ResidueBox {
        self.modulus.residue_box()
    }
}

impl PrivateKey {
    pub fn ring(&self) -> &RingId {
        self.m1.ring()
    }

    pub fn p(&self) -> &Element {
        &self.p
    }

    pub fn q(&self) -> &Element {
        &self.q
    }

    pub fn m1(&self) -> &PrincipalIdeal {
        &self.m1
    }

    pub fn m2(&self) -> &PrincipalIdeal {
        &self.m2
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn phi(&self) -> &BigUint {
        &self.phi
    }
}

/// Draws two non-associate primes of about `norm_bits / 2` bits each.
pub fn keygen<R: Rng>(
    ring: &RingId,
    norm_bits: u32,
    e_pref: &BigUint,
    rng: &mut R,
) -> Result<(PublicKey, PrivateKey)> {
    if norm_bits < 8 {
        return Err(Error::InvalidParameter(format!(
            "norm bits {norm_bits} < 8"
        )));
    }
    check_e_pref(e_pref)?;
    let half = norm_bits / 2;
    let p = random_prime_element(ring, half, rng)?;
    for _ in 0..DISTINCT_RETRIES {
        let q = random_prime_element(ring, norm_bits - half, rng)?;
        if !p.is_associate(&q)? {
            return keygen_from_primes(&p, &q, e_pref);
        }
    }
    Err(Error::DistinctPrimesRequired)
}

/// Builds a key pair from the given primes.
pub fn keygen_from_primes(
    p: &Element,
    q: &Element,
    e_pref: &BigUint,
) -> Result<(PublicKey, PrivateKey)> {
    check_e_pref(e_pref)?;
    for x in [p, q] {
        if !is_prime_element(x).unwrap_or(false) {
            return Err(Error::NotPrime(x.to_string()));
        }
    }
    if p.is_associate(q)? {
        return Err(Error::DistinctPrimesRequired);
    }
    let one = BigUint::one();
    let phi = (p.norm()? - &one) * (q.norm()? - &one);
    if phi <= BigUint::from(2u32) {
        return Err(Error::PhiTooSmall(phi.to_string()));
    }
    let e = choose_e(e_pref, &phi);
    let d = mod_inverse_int(&e, &phi)?;
    let pk = PublicKey {
        modulus: PrincipalIdeal::new(p.mul(q)?)?,
        e,
    };
    let sk = PrivateKey {
        p: p.clone(),
        q: q.clone(),
        m1: PrincipalIdeal::new(p.clone())?,
        m2: PrincipalIdeal::new(q.clone())?,
        d,
        phi,
    };
    Ok((pk, sk))
}

fn check_e_pref(e: &BigUint) -> Result<()> {
    if e.is_even() || e <= &BigUint::from(2u32) {
        return Err(Error::InvalidParameter(format!(
            "preferred exponent {e} must be odd and > 2"
        )));
    }
    Ok(())
}

/// `e_pref, e_pref + 2, ...` below phi, then `3, 5, ...`, then every
/// integer from 2 (phi is odd over GF(2^k)[x]). `phi - 1` always qualifies.
fn choose_e(e_pref: &BigUint, phi: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    let ok = |e: &BigUint| e > &BigUint::one() && e < phi && e.gcd(phi).is_one();
    let mut e = e_pref.clone();
    while &e < phi {
        if ok(&e) {
            return e;
        }
        e += &two;
    }
    let mut e = BigUint::from(3u32);
    while &e < phi {
        if ok(&e) {
            return e;
        }
        e += &two;
    }
    let mut e = two;
    while !ok(&e) {
        e += 1u32;
    }
    e
}

pub fn encrypt_block(m_idx: &BigUint, pk: &PublicKey) -> Result<BigUint> {
    let rbox = pk.residue_box();
    let m = element_at(m_idx, &rbox)?;
    index_of(&mod_pow(&m, &pk.e, &pk.modulus)?, &rbox)
}

pub fn decrypt_block(c_idx: &BigUint, sk: &PrivateKey, pk: &PublicKey) -> Result<BigUint> {
    let rbox = pk.residue_box();
    let c = element_at(c_idx, &rbox)?;
    index_of(&mod_pow(&c, &sk.d, &pk.modulus)?, &rbox)
}

/// Decryption through the two residue fields `R/M1`, `R/M2`, recombined by CRT.
pub fn decrypt_block_crt(c_idx: &BigUint, sk: &PrivateKey, pk: &PublicKey) -> Result<BigUint> {
    let rbox = pk.residue_box();
    let c = element_at(c_idx, &rbox)?;
    let mut pairs = Vec::with_capacity(2);
    for m in [&sk.m1, &sk.m2] {
        // x^(N-1) = 1 for nonzero x in the field R/M; zero stays zero
        let order = m.norm() - 1u32;
        let mut dm = &sk.d % &order;
        if dm.is_zero() {
            dm = order;
        }
        pairs.push((mod_pow(&c, &dm, m)?, m.clone()));
    }
    let x = crt_solve(&CongruenceSystem::new(pairs)?)?;
    index_of(&crate::quotient::reduce(&x, &pk.modulus)?, &rbox)
}

pub fn encrypt_message(payload: &[u8], pk: &PublicKey) -> Result<Vec<BigUint>> {
    let blocks = encode_bytes(payload, &pk.residue_box())?;
    blocks.iter().map(|m| encrypt_block(m, pk)).collect()
}

pub fn decrypt_message(blocks: &[BigUint], sk: &PrivateKey, pk: &PublicKey) -> Result<Vec<u8>> {
    let plain = blocks
        .iter()
        .map(|c| decrypt_block(c, sk, pk))
        .collect::<Result<Vec<_>>>()?;
    decode_bytes(&plain, &pk.residue_box())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RsaVerdict {
    RsaIdeal,
    NotRsaIdeal,
    /// No exponents `1 < e, d < phi` exist, so the defining property is vacuous.
    Ineligible,
}

/// Verdict from the factorization: a product of distinct maximal ideals.
pub fn is_rsa_ideal(a: &PrincipalIdeal) -> Result<RsaVerdict> {
    if a.norm() <= BigUint::from(2u32) {
        return Ok(RsaVerdict::Ineligible);
    }
    let f = factor_element(a.generator()).map_err(|e| match e {
        Error::BudgetExceeded(msg) | Error::FactoringFailed(msg) => Error::FactoringFailed(msg),
        other => other,
    })?;
    if phi_from_factorization(&f) <= BigUint::from(2u32) {
        return Ok(RsaVerdict::Ineligible);
    }
    Ok(if f.is_squarefree() {
        RsaVerdict::RsaIdeal
    } else {
        RsaVerdict::NotRsaIdeal
    })
}

/// Checks `w^(ed) = w` for every residue of `A`.
pub fn verify_rsa_ideal_exhaustive(
    a: &PrincipalIdeal,
    e: &BigUint,
    d: &BigUint,
    cap: u64,
) -> Result<bool> {
    let residues = enumerate_residues(a, cap)?;
    let phi = phi_brute(a, cap)?;
    let one = BigUint::one();
    let in_range = |x: &BigUint| x > &one && x < &phi;
    if !in_range(e) || !in_range(d) || !((e * d) % &phi).is_one() {
        return Err(Error::BadExponents(format!(
            "e = {e}, d = {d}, phi = {phi}"
        )));
    }
    let ed = e * d;
    for w in residues {
        if mod_pow(&w, &ed, a)? != w {
            return Ok(false);
        }
    }
    Ok(true)
}
