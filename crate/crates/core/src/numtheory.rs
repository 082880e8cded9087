//! Comaximality, Chinese remaindering, ideal products and intersections,
//! and Euler's function of an ideal.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::factor::{factor_element, Factorization};
use crate::intmath::to_signed;
use crate::poly;
use crate::quotient::{enumerate_residues, reduce, PrincipalIdeal};
use crate::ring::{Element, RingId};

/// Simultaneous congruences `X = x_i (mod A_i)` over one ring.
#[derive(Clone, Debug)]
pub struct CongruenceSystem {
    pairs: Vec<(Element, PrincipalIdeal)>,
}

impl CongruenceSystem {
    pub fn new(pairs: Vec<(Element, PrincipalIdeal)>) -> Result<Self> {
        if let Some((x0, _)) = pairs.first() {
            for (x, a) in &pairs {
                for ring in [x.ring(), a.ring()] {
                    if ring != x0.ring() {
                        return Err(Error::RingMismatch {
                            left: x0.ring().to_string(),
                            right: ring.to_string(),
                        });
                    }
                }
            }
        }
        Ok(CongruenceSystem { pairs })
    }

    pub fn pairs(&self) -> &[(Element, PrincipalIdeal)] {
        &self.pairs
    }
}

fn same_ring(a: &PrincipalIdeal, b: &PrincipalIdeal) -> Result<()> {
    if a.ring() == b.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.ring().to_string(),
            right: b.ring().to_string(),
        })
    }
}

/// `A + B = R`.
pub fn are_comaximal(a: &PrincipalIdeal, b: &PrincipalIdeal) -> Result<bool> {
    same_ring(a, b)?;
    Ok(a.generator().gcd(b.generator())?.is_unit())
}

/// Solves the system modulo the product of the ideals, merging congruences
/// pairwise from left to right with Bezout witnesses.
pub fn crt_solve(sys: &CongruenceSystem) -> Result<Element> {
    let pairs = sys.pairs();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if !are_comaximal(&pairs[i].1, &pairs[j].1)? {
                return Err(Error::NotComaximal {
                    first: i,
                    second: j,
                });
            }
        }
    }
    let Some(((x0, a0), rest)) = pairs.split_first() else {
        return Err(Error::Parse("empty congruence system".into()));
    };
    let mut x = reduce(x0, a0)?;
    let mut modulus = a0.clone();
    for (xi, ai) in rest {
        let (g, u, _) = modulus.generator().xgcd(ai.generator())?;
        // g is a unit: u' m + v' a_i = 1 with u' = u / g
        let u = u.mul(&g.unit_inverse().expect("comaximal"))?;
        let lift = u.mul(modulus.generator())?;
        let delta = xi.sub(&x)?;
        x = x.add(&delta.mul(&lift)?)?;
        modulus = ideal_product(&modulus, ai)?;
        x = reduce(&x, &modulus)?;
    }
    Ok(x)
}

/// `AB = (a b)`.
pub fn ideal_product(a: &PrincipalIdeal, b: &PrincipalIdeal) -> Result<PrincipalIdeal> {
    same_ring(a, b)?;
    PrincipalIdeal::new(a.generator().mul(b.generator())?)
}

/// `A ∩ B = (lcm(a, b))`.
pub fn ideal_intersection(a: &PrincipalIdeal, b: &PrincipalIdeal) -> Result<PrincipalIdeal> {
    same_ring(a, b)?;
    let g = a.generator().gcd(b.generator())?;
    let lcm = a
        .generator()
        .mul(b.generator())?
        .exact_div(&g)?
        .expect("gcd divides the product");
    PrincipalIdeal::new(lcm)
}

/// Euler's function from the factorization of the generator:
/// the product of `N(p)^e - N(p)^(e-1)` over the prime-power factors.
pub fn phi_closed(a: &PrincipalIdeal) -> Result<BigUint> {
    let f = factor_element(a.generator()).map_err(|e| match e {
        Error::BudgetExceeded(msg) | Error::FactoringFailed(msg) => Error::FactoringFailed(msg),
        other => other,
    })?;
    Ok(phi_from_factorization(&f))
}

pub fn phi_from_factorization(f: &Factorization) -> BigUint {
    let mut phi = BigUint::one();
    for (p, e) in &f.factors {
        let n = p.norm().expect("primes are nonzero");
        phi *= n.pow(*e) - n.pow(*e - 1);
    }
    phi
}

/// Euler's function by counting residues `w` with `gcd(w, m)` a unit.
pub fn phi_brute(a: &PrincipalIdeal, cap: u64) -> Result<BigUint> {
    let m = a.generator();
    let mut count = 0u64;
    let size = a.norm();
    if size > BigUint::from(cap) {
        // let the enumerator report the cap
        enumerate_residues(a, cap)?;
    }
    if let Some(n) = small_quadratic_phi(a) {
        return Ok(BigUint::from(n));
    }
    if let Some(n) = small_prime_poly_phi(a) {
        return Ok(BigUint::from(n));
    }
    if let (RingId::Integer, Some(n)) = (
        a.ring(),
        m.as_integer().and_then(|n| n.magnitude().to_u64()),
    ) {
        return Ok(BigUint::from((0..n).filter(|w| w.gcd(&n) == 1).count()));
    }
    if let (RingId::PolyOverGF(field), Some(g)) = (a.ring(), m.as_poly()) {
        let q = field.order();
        let (g, _) = poly::monic(field, g);
        let deg = g.len() - 1;
        let mut w = vec![0u64; deg];
        loop {
            if poly::is_one(&poly::gcd(field, &poly::trim(w.clone()), &g)) {
                count += 1;
            }
            // mixed-radix increment, first coefficient least significant
            let Some(i) = w.iter().position(|&c| c + 1 < q) else {
                break;
            };
            w[i] += 1;
            w[..i].iter_mut().for_each(|c| *c = 0);
        }
        return Ok(BigUint::from(count));
    }
    if let RingId::Integer = a.ring() {
        let n = m.as_integer().unwrap();
        for w in enumerate_residues(a, cap)? {
            if w.as_integer().unwrap().gcd(n).is_one() {
                count += 1;
            }
        }
    } else {
        for w in enumerate_residues(a, cap)? {
            if w.gcd(m)?.is_unit() {
                count += 1;
            }
        }
    }
    Ok(BigUint::from(count))
}

/// Brute count for moduli over GF(p), p < 256, of degree at most 32, with
/// Euclid's algorithm on fixed arrays and table arithmetic.
fn small_prime_poly_phi(a: &PrincipalIdeal) -> Option<u64> {
    const MAX_LEN: usize = 33;
    let field = a.ring().field()?;
    let p = field.order() as usize;
    let m = a.generator().as_poly()?;
    if !field.is_prime_field() || p >= 256 || m.len() > MAX_LEN {
        return None;
    }
    let mul: Vec<u8> = (0..p * p).map(|i| (i / p * (i % p) % p) as u8).collect();
    let inv: Vec<u8> = (0..p)
        .map(|x| (1..p).find(|y| x * y % p == 1).unwrap_or(0) as u8)
        .collect();
    let trim = |v: &[u8; MAX_LEN], mut len: usize| {
        while len > 0 && v[len - 1] == 0 {
            len -= 1;
        }
        len
    };
    // a mod b in place; b nonzero
    let reduce = |a: &mut [u8; MAX_LEN], mut la: usize, b: &[u8; MAX_LEN], lb: usize| {
        let lead_inv = inv[b[lb - 1] as usize] as usize;
        while la >= lb {
            let c = mul[a[la - 1] as usize * p + lead_inv] as usize;
            let neg_c = (p - c) % p;
            let shift = la - lb;
            for j in 0..lb {
                let t = a[shift + j] as usize + mul[neg_c * p + b[j] as usize] as usize;
                a[shift + j] = if t >= p { t - p } else { t } as u8;
            }
            la = trim(a, la - 1);
        }
        la
    };
    let deg = m.len() - 1;
    let mut modulus = [0u8; MAX_LEN];
    for (d, &c) in modulus.iter_mut().zip(m) {
        *d = c as u8;
    }
    let mut w = [0u8; MAX_LEN];
    let mut count = 0u64;
    loop {
        let (mut x, mut y) = (modulus, w);
        let (mut lx, mut ly) = (deg + 1, trim(&w, deg));
        while ly > 0 {
            lx = reduce(&mut x, lx, &y, ly);
            std::mem::swap(&mut x, &mut y);
            std::mem::swap(&mut lx, &mut ly);
        }
        if lx == 1 {
            count += 1;
        }
        // mixed-radix increment, first coefficient least significant
        let Some(i) = w[..deg].iter().position(|&c| (c as usize) + 1 < p) else {
            break;
        };
        w[i] += 1;
        w[..i].iter_mut().for_each(|c| *c = 0);
    }
    Some(count)
}

/// Brute count for quadratic moduli of norm below 2^20, with Euclidean gcds
/// carried out in machine words.
fn small_quadratic_phi(a: &PrincipalIdeal) -> Option<u64> {
    let k = a.ring().quadratic_k()? as i128;
    let (ma, mb) = a.generator().as_quadratic()?;
    if a.norm() >= BigUint::from(1u32 << 20) {
        return None;
    }
    let m = (ma.to_i128()?, mb.to_i128()?);
    let shape: Vec<i128> = a
        .residue_box()
        .shape()
        .iter()
        .map(|d| d.to_i128().unwrap())
        .collect();
    let norm = |(x, y): (i128, i128)| (x * x - k * y * y).abs();
    let rem = |(x, y): (i128, i128), (u, v): (i128, i128)| {
        // x + y w divided by u + v w, quotient rounded coordinatewise
        let n = u * u - k * v * v;
        let (p, r) = (x * u - k * y * v, y * u - x * v);
        let (p, r, n) = if n < 0 { (-p, -r, -n) } else { (p, r, n) };
        let q0 = (2 * p + n).div_euclid(2 * n);
        let q1 = (2 * r + n).div_euclid(2 * n);
        (x - (q0 * u + k * q1 * v), y - (q0 * v + q1 * u))
    };
    let mut count = 0u64;
    for x in 0..shape[0] {
        for y in 0..shape[1] {
            let (mut f, mut g) = (m, (x, y));
            while g != (0, 0) {
                let r = rem(f, g);
                debug_assert!(norm(r) < norm(g));
                f = g;
                g = r;
            }
            if norm(f) == 1 {
                count += 1;
            }
        }
    }
    Some(count)
}

/// `d` in `[1, n)` with `e d = 1 (mod n)`.
pub fn mod_inverse_int(e: &BigUint, n: &BigUint) -> Result<BigUint> {
    if n <= &BigUint::one() {
        return Err(Error::BadExponents(format!("modulus {n} must exceed 1")));
    }
    let (e_s, n_s) = (to_signed(e), to_signed(n));
    let eg = e_s.extended_gcd(&n_s);
    if !eg.gcd.is_one() {
        return Err(Error::NotCoprime(e.to_string(), n.to_string()));
    }
    let d: BigInt = eg.x.mod_floor(&n_s);
    let d = d.to_biguint().expect("non-negative");
    Ok(if d.is_zero() { BigUint::one() } else { d })
}
