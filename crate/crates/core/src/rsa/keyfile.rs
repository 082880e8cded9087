//! Line-oriented text formats for keys and ciphertexts.
//!
//! ```text
//! CIRSA-PUBLIC v1        CIRSA-PRIVATE v1        CIRSA-CT v1
//! ring: <tag>            ring: <tag>             ring: <tag>
//! modulus: <element>     modulus: <element>      modulus: <element>
//! e: <nat>               e: <nat>                <block index>
//!                        p: <element>            ...
//!                        q: <element>
//!                        d: <nat>
//!                        phi: <nat>
//! ```
//!
//! Fields appear in exactly this order; anything else is a format error
//! naming the offending line.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use super::{PrivateKey, PublicKey};
use crate::error::{Error, Result};
use crate::quotient::PrincipalIdeal;
use crate::ring::{Element, RingId};

pub const PUBLIC_HEADER: &str = "CIRSA-PUBLIC v1";
pub const PRIVATE_HEADER: &str = "CIRSA-PRIVATE v1";
pub const CIPHERTEXT_HEADER: &str = "CIRSA-CT v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ciphertext {
    pub modulus: PrincipalIdeal,
    pub blocks: Vec<BigUint>,
}

pub fn write_public(pk: &PublicKey) -> String {
    let mut s = header(PUBLIC_HEADER, &pk.modulus);
    writeln!(s, "e: {}", pk.e).unwrap();
    s
}

pub fn write_private(pk: &PublicKey, sk: &PrivateKey) -> String {
    let mut s = header(PRIVATE_HEADER, &pk.modulus);
    writeln!(s, "e: {}", pk.e).unwrap();
    writeln!(s, "p: {}", sk.p).unwrap();
    writeln!(s, "q: {}", sk.q).unwrap();
    writeln!(s, "d: {}", sk.d).unwrap();
    writeln!(s, "phi: {}", sk.phi).unwrap();
    s
}

pub fn write_ciphertext(ct: &Ciphertext) -> String {
    let mut s = header(CIPHERTEXT_HEADER, &ct.modulus);
    for b in &ct.blocks {
        writeln!(s, "{b}").unwrap();
    }
    s
}

fn header(tag: &str, modulus: &PrincipalIdeal) -> String {
    format!(
        "{tag}\nring: {}\nmodulus: {}\n",
        modulus.ring(),
        modulus.generator()
    )
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn err(&self, line: usize, msg: impl Into<String>) -> Error {
        Error::Format {
            line,
            msg: msg.into(),
        }
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let (i, l) = self.inner.next()?;
        self.last = i + 1;
        Some((i + 1, l))
    }

    fn expect_header(&mut self, tag: &str) -> Result<()> {
        match self.next_line() {
            Some((_, l)) if l == tag => Ok(()),
            Some((n, l)) => Err(self.err(n, format!("expected header {tag:?}, found {l:?}"))),
            None => Err(self.err(1, format!("missing header {tag:?}"))),
        }
    }

    /// The value of a `key: value` line; returns it with its line number.
    fn field(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let Some((n, l)) = self.next_line() else {
            return Err(self.err(self.last + 1, format!("missing field {key:?}")));
        };
        match l.split_once(": ") {
            Some((k, v)) if k == key && !v.is_empty() => Ok((n, v)),
            Some((k, _)) if k != key => {
                Err(self.err(n, format!("expected field {key:?}, found {k:?}")))
            }
            _ => Err(self.err(n, format!("malformed field line {l:?}"))),
        }
    }

    fn nat(&mut self, key: &str) -> Result<BigUint> {
        let (n, v) = self.field(key)?;
        parse_nat(v).ok_or_else(|| self.err(n, format!("{key}: not a natural number: {v:?}")))
    }

    fn element(&mut self, key: &str, ring: &RingId) -> Result<(usize, Element)> {
        let (n, v) = self.field(key)?;
        let e = Element::parse(ring, v).map_err(|e| self.err(n, format!("{key}: {e}")))?;
        Ok((n, e))
    }

    fn modulus(&mut self) -> Result<PrincipalIdeal> {
        let (n, v) = self.field("ring")?;
        let ring: RingId = v
            .parse()
            .map_err(|e: Error| self.err(n, format!("ring: {e}")))?;
        let (n, g) = self.element("modulus", &ring)?;
        PrincipalIdeal::new(g).map_err(|e| self.err(n, format!("modulus: {e}")))
    }

    fn finish(&mut self) -> Result<()> {
        match self.next_line() {
            None => Ok(()),
            Some((n, l)) => Err(self.err(n, format!("unexpected trailing line {l:?}"))),
        }
    }
}

fn parse_nat(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_public(text: &str) -> Result<PublicKey> {
    let mut lines = Lines::new(text);
    lines.expect_header(PUBLIC_HEADER)?;
    let modulus = lines.modulus()?;
    let e = lines.nat("e")?;
    if e <= BigUint::one() {
        return Err(lines.err(lines.last, "e must exceed 1"));
    }
    lines.finish()?;
    Ok(PublicKey { modulus, e })
}

pub fn parse_private(text: &str) -> Result<(PublicKey, PrivateKey)> {
    let mut lines = Lines::new(text);
    lines.expect_header(PRIVATE_HEADER)?;
    let modulus = lines.modulus()?;
    let ring = modulus.ring().clone();
    let e = lines.nat("e")?;
    let (_, p) = lines.element("p", &ring)?;
    let (qn, q) = lines.element("q", &ring)?;
    let d = lines.nat("d")?;
    let phi_line = lines.last + 1;
    let phi = lines.nat("phi")?;
    lines.finish()?;

    let bad = |line: usize, msg: &str| Error::Format {
        line,
        msg: msg.into(),
    };
    let (pk, sk) = super::keygen_from_primes(&p, &q, &BigUint::from(3u32))
        .map_err(|e| bad(qn, &format!("p, q: {e}")))?;
    if pk.modulus != modulus {
        return Err(bad(3, "modulus is not p * q"));
    }
    if sk.phi != phi {
        return Err(bad(phi_line, "phi does not match (N(p) - 1)(N(q) - 1)"));
    }
    let one = BigUint::one();
    if e <= one || e >= phi || d <= one || d >= phi || !((&e * &d) % &phi).is_one() {
        return Err(bad(
            phi_line,
            "e and d are not inverse exponents modulo phi",
        ));
    }
    let pk = PublicKey { modulus, e };
    let sk = PrivateKey { d, ..sk };
    Ok((pk, sk))
}

pub fn parse_ciphertext(text: &str) -> Result<Ciphertext> {
    let mut lines = Lines::new(text);
    lines.expect_header(CIPHERTEXT_HEADER)?;
    let modulus = lines.modulus()?;
    // range checks are left to decryption, which reports IndexOutOfRange
    let mut blocks = Vec::new();
    while let Some((n, l)) = lines.next_line() {
        let v = parse_nat(l).ok_or_else(|| lines.err(n, format!("not a block index: {l:?}")))?;
        blocks.push(v);
    }
    Ok(Ciphertext { modulus, blocks })
}
