//! Finite fields GF(q). Prime fields use plain modular arithmetic; extension
//! fields GF(p^k) use exp/log tables built from a primitive element.
//!
//! Elements are naturals in `[0, q)`. For an extension field the base-p
//! digits of the natural are the coefficients (least significant first) of
//! the residue polynomial modulo the defining polynomial.

use std::fmt;

use crate::error::{Error, Result};
use crate::intmath::{is_prime_u64, prime_power};

/// Largest extension field order we tabulate.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 16;
const MAX_ADD_TABLE_ORDER: u64 = 256;

#[derive(Clone)]
pub struct GaloisField {
    p: u64,
    degree: u32,
    order: u64,
    /// Monic defining polynomial over GF(p), least degree first (`[0, 1]` for prime fields).
    modulus: Vec<u64>,
    default_modulus: bool,
    tables: Option<LogTables>,
    /// Addition table for small extension fields of odd characteristic.
    add_table: Option<Vec<u16>>,
}

#[derive(Clone)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}", self.order)?;
        if self.degree > 1 {
            write!(f, "; modulus {:?}", self.modulus)?;
        }
        write!(f, ")")
    }
}

impl GaloisField {
    /// GF(q) for a prime power q. Extension fields use the smallest monic
    /// irreducible polynomial of the right degree (ordered by coefficient
    /// digits, constant term least significant).
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::UnsupportedRing(format!("{q} is not a prime power")))?;
        if k == 1 {
            return Ok(GaloisField {
                p,
                degree: 1,
                order: p,
                modulus: vec![0, 1],
                default_modulus: true,
                tables: None,
                add_table: None,
            });
        }
        if q > MAX_EXTENSION_ORDER {
            return Err(Error::UnsupportedRing(format!(
                "extension field order {q} exceeds {MAX_EXTENSION_ORDER}"
            )));
        }
        let modulus = (0..p.pow(k))
            .map(|low| {
                let mut f = digits(low, p, k as usize);
                f.push(1);
                f
            })
            .find(|f| zp_irreducible(f, p))
            .expect("an irreducible polynomial exists in every degree");
        Self::build(p, k, modulus, true)
    }

    /// GF(p^k) defined by an explicit monic irreducible polynomial of degree k.
    pub fn with_modulus(q: u64, modulus: Vec<u64>) -> Result<Self> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::UnsupportedRing(format!("{q} is not a prime power")))?;
        if modulus.len() != k as usize + 1
            || modulus.last() != Some(&1)
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(Error::UnsupportedRing(format!(
                "field polynomial for GF({q}) must be monic of degree {k} with coefficients below {p}"
            )));
        }
        if !zp_irreducible(&modulus, p) {
            return Err(Error::UnsupportedRing(format!(
                "{modulus:?} is reducible over GF({p})"
            )));
        }
        let default = GaloisField::new(q)?;
        if default.modulus == modulus {
            return Ok(default);
        }
        if k == 1 {
            // every monic linear polynomial defines the same prime field
            return Ok(default);
        }
        Self::build(p, k, modulus, false)
    }

    fn build(p: u64, k: u32, modulus: Vec<u64>, default_modulus: bool) -> Result<Self> {
        debug_assert!(is_prime_u64(p));
        let q = p.pow(k);
        let mut field = GaloisField {
            p,
            degree: k,
            order: q,
            modulus,
            default_modulus,
            tables: None,
            add_table: None,
        };
        if p != 2 && q <= MAX_ADD_TABLE_ORDER {
            let table = (0..q * q)
                .map(|i| field.digitwise(i / q, i % q, |x, y| (x + y) % p) as u16)
                .collect();
            field.add_table = Some(table);
        }
        let n = (q - 1) as usize;
        for g in 2..q {
            let mut exp = Vec::with_capacity(n);
            let mut x = 1u64;
            loop {
                exp.push(x as u32);
                x = field.mul_slow(x, g);
                if x == 1 || exp.len() > n {
                    break;
                }
            }
            if exp.len() == n {
                let mut log = vec![0u32; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                // doubled so that exp[log a + log b] needs no reduction
                exp.extend_from_within(..);
                field.tables = Some(LogTables { exp, log });
                return Ok(field);
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn has_default_modulus(&self) -> bool {
        self.default_modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            let (s, carry) = a.overflowing_add(b);
            if carry || s >= self.p {
                s.wrapping_sub(self.p)
            } else {
                s
            }
        } else if self.p == 2 {
            a ^ b
        } else if let Some(t) = &self.add_table {
            t[(a * self.order + b) as usize] as u64
        } else {
            self.digitwise(a, b, |x, y| (x + y) % self.p)
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.degree == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            None if self.p <= u32::MAX as u64 => a * b % self.p,
            None => ((a as u128 * b as u128) % self.p as u128) as u64,
            Some(t) => {
                if a == 0 || b == 0 {
                    return 0;
                }
                t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize] as u64
            }
        }
    }

    /// `out[j] += x * ys[j]` for every `j`.
    pub fn axpy(&self, x: u64, ys: &[u64], out: &mut [u64]) {
        if x == 0 {
            return;
        }
        match &self.tables {
            Some(t) => {
                let lx = t.log[x as usize] as usize;
                for (o, &y) in out.iter_mut().zip(ys) {
                    if y != 0 {
                        *o = self.add(*o, t.exp[lx + t.log[y as usize] as usize] as u64);
                    }
                }
            }
            None => {
                for (o, &y) in out.iter_mut().zip(ys) {
                    *o = self.add(*o, self.mul(x, y));
                }
            }
        }
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        match &self.tables {
            None => Some(self.pow(a, self.p - 2)),
            Some(t) => {
                let l = t.log[a as usize] as u64;
                let s = (self.order - 1 - l) % (self.order - 1);
                Some(t.exp[s as usize] as u64)
            }
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer under Z -> GF(q) (lands in the prime subfield).
    pub fn from_int(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }

    fn digitwise(&self, a: u64, b: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.degree {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    // Multiplication by polynomial arithmetic; only used to build the tables.
    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let k = self.degree as usize;
        let p = self.p;
        let da = digits(a, p, k);
        let db = digits(b, p, k);
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for i in (k..2 * k).rev() {
            let c = prod[i];
            if c != 0 {
                for (j, &m) in self.modulus.iter().enumerate() {
                    let idx = i - k + j;
                    prod[idx] = (prod[idx] + (p - c) * m) % p;
                }
            }
        }
        undigits(&prod[..k], p)
    }
}

fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Irreducibility over GF(p) by trial division with every monic polynomial
/// of degree up to half the degree. Only used for small defining polynomials.
fn zp_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if zp_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

// Remainder of f by a monic g over GF(p).
fn zp_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = r[r.len() - 1];
        let shift = r.len() - 1 - dg;
        for (j, &m) in g.iter().enumerate() {
            r[shift + j] = (r[shift + j] + (p - c) * m % p) % p;
        }
        r.pop();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(f: &GaloisField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), 1, "a = {a}");
            }
            for b in 0..q {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
                assert_eq!(f.add(a, b), f.add(b, a));
            }
        }
    }

    #[test]
    fn small_fields_are_fields() {
        for q in [2, 3, 4, 5, 8, 9, 16, 25, 27] {
            check_field_axioms(&GaloisField::new(q).unwrap());
        }
    }

    #[test]
    fn gf4_uses_x2_x_1() {
        let f = GaloisField::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x * x = x + 1
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn gf9_default_is_x2_plus_1() {
        let f = GaloisField::new(9).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_non_prime_powers_and_reducible_moduli() {
        assert!(GaloisField::new(12).is_err());
        assert!(GaloisField::new(1).is_err());
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(GaloisField::with_modulus(4, vec![1, 0, 1]).is_err());
        let alt = GaloisField::with_modulus(9, vec![2, 1, 1]).unwrap();
        assert!(!alt.has_default_modulus());
        check_field_axioms(&alt);
    }

    #[test]
    fn large_prime_field() {
        let p = 18_446_744_073_709_551_557u64;
        let f = GaloisField::new(p).unwrap();
        let a = p - 2;
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        assert_eq!(f.add(a, 5), 3);
    }
}
