//! Principal ideals, their canonical residue systems W and arithmetic in R/A.
//!
//! W is a "box" of representatives read off the canonical lattice form of
//! the ideal:
//!
//! - Z: `[0, n)`.
//! - quadratic rings: the ideal (a + b w) is the lattice spanned by
//!   `(a, b)` and `(k b, a)` in the coordinates `x + y w`. Its Hermite
//!   normal form has basis `(d1, 0)`, `(c, d2)` with `0 <= c < d1`, and
//!   W = `{x + y w : 0 <= x < d1, 0 <= y < d2}`. The form depends only on
//!   the lattice, so associate generators give identical ideals even in
//!   Z[sqrt(2)] and Z[sqrt(3)], where the unit group is infinite.
//! - GF(q)[x]: polynomials of degree below `deg m` (monic generator).
//!
//! The bijection W <-> `[0, |W|)` is mixed radix with the first
//! coordinate least significant.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intmath::to_signed;
use crate::poly;
use crate::ring::{Element, RingId};

/// Default bound on `|R/A|` for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Unit-invariant representation of a principal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LatticeForm {
    Integer(BigUint),
    /// Hermite normal form `[[d1, c], [0, d2]]`.
    Quadratic {
        d1: BigUint,
        c: BigUint,
        d2: BigUint,
    },
    /// Monic generator.
    Poly(Vec<u64>),
}

/// A principal ideal `(m)` with `m` neither zero nor a unit.
#[derive(Clone, Debug)]
pub struct PrincipalIdeal {
    generator: Element,
    lattice: LatticeForm,
}

impl PartialEq for PrincipalIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring() == other.ring() && self.lattice == other.lattice
    }
}

impl Eq for PrincipalIdeal {}

impl fmt::Display for PrincipalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

impl PrincipalIdeal {
    pub fn new(generator: Element) -> Result<Self> {
        if generator.is_zero() || generator.is_unit() {
            return Err(Error::InvalidIdeal);
        }
        let lattice = match generator.ring() {
            RingId::Integer => {
                LatticeForm::Integer(generator.as_integer().unwrap().magnitude().clone())
            }
            RingId::Gaussian | RingId::Quadratic(_) => quadratic_hnf(&generator),
            RingId::PolyOverGF(field) => {
                LatticeForm::Poly(poly::monic(field, generator.as_poly().unwrap()).0)
            }
        };
        Ok(PrincipalIdeal { generator, lattice })
    }

    pub fn ring(&self) -> &RingId {
        self.generator.ring()
    }

    pub fn generator(&self) -> &Element {
        &self.generator
    }

    pub fn lattice_form(&self) -> &LatticeForm {
        &self.lattice
    }

    /// `|R/A|`.
    pub fn norm(&self) -> BigUint {
        self.generator.norm().expect("generator is nonzero")
    }

    /// Membership: `x` lies in the ideal.
    pub fn contains(&self, x: &Element) -> Result<bool> {
        Ok(reduce(x, self)?.is_zero())
    }

    pub fn residue_box(&self) -> ResidueBox {
        residue_box(self)
    }
}

fn quadratic_hnf(m: &Element) -> LatticeForm {
    let k = BigInt::from(m.ring().quadratic_k().unwrap());
    let (a, b) = m.as_quadratic().unwrap();
    // (s, t) with s*b + t*a = d2
    let eg = b.extended_gcd(a);
    let d2 = eg.gcd.abs();
    let (s, t) = if eg.gcd.is_negative() {
        (-eg.x, -eg.y)
    } else {
        (eg.x, eg.y)
    };
    let norm = m.quadratic_norm().unwrap().abs();
    let d1 = &norm / &d2;
    let c = (s * a + t * &k * b).mod_floor(&d1);
    LatticeForm::Quadratic {
        d1: d1.to_biguint().unwrap(),
        c: c.to_biguint().unwrap(),
        d2: d2.to_biguint().unwrap(),
    }
}

/// The complete residue system W modulo an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueBox {
    ideal: PrincipalIdeal,
    shape: Vec<BigUint>,
    size: BigUint,
}

impl ResidueBox {
    pub fn ideal(&self) -> &PrincipalIdeal {
        &self.ideal
    }

    /// Mixed-radix digit bounds, least significant first.
    pub fn shape(&self) -> &[BigUint] {
        &self.shape
    }

    pub fn size(&self) -> &BigUint {
        &self.size
    }
}

pub fn residue_box(ideal: &PrincipalIdeal) -> ResidueBox {
    let shape = match &ideal.lattice {
        LatticeForm::Integer(n) => vec![n.clone()],
        LatticeForm::Quadratic { d1, d2, .. } => vec![d1.clone(), d2.clone()],
        LatticeForm::Poly(m) => {
            let q = BigUint::from(ideal.ring().field().unwrap().order());
            vec![q; m.len() - 1]
        }
    };
    let size = shape.iter().product();
    ResidueBox {
        ideal: ideal.clone(),
        shape,
        size,
    }
}

/// The unique `w` in W with `x - w` in the ideal.
pub fn reduce(x: &Element, ideal: &PrincipalIdeal) -> Result<Element> {
    if x.ring() != ideal.ring() {
        return Err(Error::RingMismatch {
            left: x.ring().to_string(),
            right: ideal.ring().to_string(),
        });
    }
    Ok(match &ideal.lattice {
        LatticeForm::Integer(n) => {
            let n = to_signed(n);
            Element::integer(x.as_integer().unwrap().mod_floor(&n))
        }
        LatticeForm::Quadratic { d1, c, d2 } => {
            let (a, b) = x.as_quadratic().unwrap();
            let (d1, c, d2) = (to_signed(d1), to_signed(c), to_signed(d2));
            let (t, y) = b.div_mod_floor(&d2);
            let x0 = (a - t * c).mod_floor(&d1);
            Element::quadratic(x.ring(), x0, y)?
        }
        LatticeForm::Poly(m) => {
            let field = ideal.ring().field().unwrap();
            Element::poly(x.ring(), &poly::rem(field, x.as_poly().unwrap(), m))?
        }
    })
}

/// Position of a representative in W.
pub fn index_of(w: &Element, rbox: &ResidueBox) -> Result<BigUint> {
    if w.ring() != rbox.ideal.ring() {
        return Err(Error::RingMismatch {
            left: w.ring().to_string(),
            right: rbox.ideal.ring().to_string(),
        });
    }
    let out_of_range = || Error::OutOfRange {
        index: w.to_string(),
        size: rbox.size.to_string(),
    };
    let digits: Vec<BigInt> = match &rbox.ideal.lattice {
        LatticeForm::Poly(m) => {
            let c = w.as_poly().ok_or_else(out_of_range)?;
            if c.len() >= m.len() {
                return Err(out_of_range());
            }
            c.iter().map(|&x| BigInt::from(x)).collect()
        }
        _ => w.coords(),
    };
    let mut idx = BigUint::zero();
    for (d, radix) in digits.iter().zip(&rbox.shape).rev() {
        let d = d
            .to_biguint()
            .filter(|d| d < radix)
            .ok_or_else(out_of_range)?;
        idx = idx * radix + d;
    }
    Ok(idx)
}

/// Representative at position `idx` of W.
pub fn element_at(idx: &BigUint, rbox: &ResidueBox) -> Result<Element> {
    if idx >= &rbox.size {
        return Err(Error::OutOfRange {
            index: idx.to_string(),
            size: rbox.size.to_string(),
        });
    }
    let mut rest = idx.clone();
    let mut digits = Vec::with_capacity(rbox.shape.len());
    for radix in &rbox.shape {
        let (q, r) = rest.div_rem(radix);
        digits.push(to_signed(&r));
        rest = q;
    }
    let ring = rbox.ideal.ring();
    match ring {
        RingId::PolyOverGF(_) => {
            let cs: Vec<u64> = digits.iter().map(|d| d.to_u64().unwrap()).collect();
            Element::poly(ring, &cs)
        }
        _ => Element::from_coords(ring, &digits),
    }
}

/// `reduce(a * b)`.
pub fn mod_mul(a: &Element, b: &Element, ideal: &PrincipalIdeal) -> Result<Element> {
    reduce(&a.mul(b)?, ideal)
}

/// `reduce(x^s)` by binary square-and-multiply, reducing after every product.
pub fn mod_pow(x: &Element, s: &BigUint, ideal: &PrincipalIdeal) -> Result<Element> {
    let base = reduce(x, ideal)?;
    if let (LatticeForm::Integer(n), Some(b)) = (&ideal.lattice, base.as_integer()) {
        let b = b.to_biguint().expect("reduced");
        return Ok(Element::integer(to_signed(&b.modpow(s, n))));
    }
    if let (LatticeForm::Poly(m), Some(b)) = (&ideal.lattice, base.as_poly()) {
        let field = ideal.ring().field().expect("polynomial ring");
        return Element::poly(ideal.ring(), &poly::powmod(field, b, s, m));
    }
    if let Some(small) = SmallQuadratic::new(ideal) {
        return small.pow(&base, s);
    }
    let mut acc = reduce(&Element::one(ideal.ring()), ideal)?;
    for i in (0..s.bits()).rev() {
        acc = reduce(&acc.mul(&acc)?, ideal)?;
        if s.bit(i) {
            acc = reduce(&acc.mul(&base)?, ideal)?;
        }
    }
    Ok(acc)
}

/// Every principal ideal of norm `2..=max_norm`, ordered by norm and then
/// by lattice form, each generated by one representative.
///
/// Quadratic rings are searched over a coordinate box. In the real rings an
/// associate of any generator `a + b w` of norm `n` has both conjugates
/// below `sqrt(n eps)` in absolute value, `eps` the fundamental unit, so
/// `|a| <= sqrt(n eps)` and `|b| <= sqrt(n eps / k)`.
pub fn ideals_up_to_norm(ring: &RingId, max_norm: u64) -> Result<Vec<PrincipalIdeal>> {
    let mut out = Vec::new();
    match ring {
        RingId::Integer => {
            for n in 2..=max_norm {
                out.push(PrincipalIdeal::new(Element::integer(n))?);
            }
        }
        RingId::Gaussian | RingId::Quadratic(_) => {
            let k = ring.quadratic_k().unwrap();
            let eps = match k {
                2 => 1.0 + 2f64.sqrt(),
                3 => 2.0 + 3f64.sqrt(),
                _ => 1.0,
            };
            let n = max_norm as f64;
            let amax = (n * eps).sqrt().ceil() as i64 + 1;
            let bmax = (n * eps / k.abs() as f64).sqrt().ceil() as i64 + 1;
            let mut seen = std::collections::HashSet::new();
            for a in -amax..=amax {
                for b in -bmax..=bmax {
                    let norm =
                        (a as i128 * a as i128 - k as i128 * b as i128 * b as i128).unsigned_abs();
                    if norm < 2 || norm > max_norm as u128 {
                        continue;
                    }
                    let ideal = PrincipalIdeal::new(Element::quadratic(ring, a, b)?)?;
                    if seen.insert(ideal.lattice.clone()) {
                        out.push(ideal);
                    }
                }
            }
        }
        RingId::PolyOverGF(field) => {
            let q = field.order();
            let mut deg = 1u32;
            while q.checked_pow(deg).is_some_and(|n| n <= max_norm) {
                let count = q.pow(deg);
                for i in 0..count {
                    let mut c = Vec::with_capacity(deg as usize + 1);
                    let mut rest = i;
                    for _ in 0..deg {
                        c.push(rest % q);
                        rest /= q;
                    }
                    c.push(1);
                    out.push(PrincipalIdeal::new(Element::poly(ring, &c)?)?);
                }
                deg += 1;
            }
        }
    }
    out.sort_by(|a, b| {
        a.norm()
            .cmp(&b.norm())
            .then_with(|| a.generator().coords().cmp(&b.generator().coords()))
    });
    Ok(out)
}

/// Arithmetic on reduced representatives of a quadratic ideal whose norm is
/// below 2^31, so every intermediate fits in an i128.
struct SmallQuadratic<'a> {
    ideal: &'a PrincipalIdeal,
    k: i128,
    d1: i128,
    c: i128,
    d2: i128,
}

impl<'a> SmallQuadratic<'a> {
    fn new(ideal: &'a PrincipalIdeal) -> Option<Self> {
        let LatticeForm::Quadratic { d1, c, d2 } = &ideal.lattice else {
            return None;
        };
        if d1 * d2 >= BigUint::from(1u64 << 31) {
            return None;
        }
        Some(SmallQuadratic {
            ideal,
            k: ideal.ring().quadratic_k()? as i128,
            d1: d1.to_i128()?,
            c: c.to_i128()?,
            d2: d2.to_i128()?,
        })
    }

    fn reduce(&self, a: i128, b: i128) -> (i128, i128) {
        let y = b.rem_euclid(self.d2);
        let t = (b - y) / self.d2;
        ((a - t * self.c).rem_euclid(self.d1), y)
    }

    fn mul(&self, (a, b): (i128, i128), (c, d): (i128, i128)) -> (i128, i128) {
        self.reduce(a * c + self.k * b * d, a * d + b * c)
    }

    fn pow(&self, base: &Element, s: &BigUint) -> Result<Element> {
        let (a, b) = base.as_quadratic().unwrap();
        let base = (a.to_i128().unwrap(), b.to_i128().unwrap());
        let mut acc = self.reduce(1, 0);
        for i in (0..s.bits()).rev() {
            acc = self.mul(acc, acc);
            if s.bit(i) {
                acc = self.mul(acc, base);
            }
        }
        Element::quadratic(self.ideal.ring(), acc.0, acc.1)
    }
}

/// Iterator over W in index order.
pub struct Residues {
    rbox: ResidueBox,
    next: BigUint,
}

impl Iterator for Residues {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.next >= self.rbox.size {
            return None;
        }
        let e = element_at(&self.next, &self.rbox).ok();
        self.next += 1u32;
        e
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (&self.rbox.size - &self.next).to_usize();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// Every representative of W exactly once; fails when `|W|` exceeds `cap`.
pub fn enumerate_residues(ideal: &PrincipalIdeal, cap: u64) -> Result<Residues> {
    let rbox = residue_box(ideal);
    if rbox.size > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            size: rbox.size.to_string(),
            cap: cap.to_string(),
        });
    }
    Ok(Residues {
        rbox,
        next: BigUint::zero(),
    })
}

/// `reduce(1)`, the representative of the identity class.
pub fn one_mod(ideal: &PrincipalIdeal) -> Element {
    reduce(&Element::one(ideal.ring()), ideal).expect("same ring")
}
