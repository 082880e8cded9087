//! Elements of the supported Euclidean domains: Z, Z[i], Z[sqrt(k)] for
//! k in {-2, 2, 3}, and GF(q)[x].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf::GaloisField;
use crate::poly;

/// Square-free k for which Z[sqrt(k)] is norm-Euclidean and supported.
pub const QUADRATIC_KS: [i64; 3] = [-2, 2, 3];

/// The ambient ring.
#[derive(Clone, Debug)]
pub enum RingId {
    Integer,
    Gaussian,
    Quadratic(i64),
    PolyOverGF(Arc<GaloisField>),
}

impl PartialEq for RingId {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (RingId::Integer, RingId::Integer) | (RingId::Gaussian, RingId::Gaussian) => true,
            (RingId::Quadratic(a), RingId::Quadratic(b)) => a == b,
            (RingId::PolyOverGF(a), RingId::PolyOverGF(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for RingId {}

impl RingId {
    pub fn quadratic(k: i64) -> Result<RingId> {
        match k {
            -1 => Ok(RingId::Gaussian),
            k if QUADRATIC_KS.contains(&k) => Ok(RingId::Quadratic(k)),
            k => Err(Error::UnsupportedRing(format!(
                "Z[sqrt({k})] is not among the supported norm-Euclidean rings"
            ))),
        }
    }

    pub fn poly(q: u64) -> Result<RingId> {
        Ok(RingId::PolyOverGF(Arc::new(GaloisField::new(q)?)))
    }

    /// `k` with the ring being Z[sqrt(k)]; the Gaussian integers are k = -1.
    pub fn quadratic_k(&self) -> Option<i64> {
        match self {
            RingId::Gaussian => Some(-1),
            RingId::Quadratic(k) => Some(*k),
            _ => None,
        }
    }

    pub fn field(&self) -> Option<&GaloisField> {
        match self {
            RingId::PolyOverGF(f) => Some(f),
            _ => None,
        }
    }

    /// True for Z[sqrt(2)] and Z[sqrt(3)], whose unit groups are infinite.
    pub fn is_real_quadratic(&self) -> bool {
        matches!(self, RingId::Quadratic(k) if *k > 0)
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingId::Integer => write!(f, "integer"),
            RingId::Gaussian => write!(f, "gaussian"),
            RingId::Quadratic(k) => write!(f, "quadratic:{k}"),
            RingId::PolyOverGF(field) => {
                write!(f, "poly:{}", field.order())?;
                if !field.has_default_modulus() {
                    let m: Vec<String> = field.modulus().iter().map(|c| c.to_string()).collect();
                    write!(f, ":{}", m.join(","))?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for RingId {
    type Err = Error;

    /// Ring tags: `integer`, `gaussian`, `quadratic:k`, `poly:q` and
    /// `poly:q:c0,...,ck` for an explicit field polynomial.
    fn from_str(s: &str) -> Result<RingId> {
        let bad = || Error::Parse(format!("unknown ring tag {s:?}"));
        let mut parts = s.trim().splitn(3, ':');
        match (parts.next(), parts.next(), parts.next()) {
            (Some("integer"), None, None) => Ok(RingId::Integer),
            (Some("gaussian"), None, None) => Ok(RingId::Gaussian),
            (Some("quadratic"), Some(k), None) => RingId::quadratic(k.parse().map_err(|_| bad())?),
            (Some("poly"), Some(q), modulus) => {
                let q: u64 = q.parse().map_err(|_| bad())?;
                let field = match modulus {
                    None => GaloisField::new(q)?,
                    Some(m) => {
                        let coeffs = m
                            .split(',')
                            .map(|c| c.trim().parse::<u64>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| bad())?;
                        GaloisField::with_modulus(q, coeffs)?
                    }
                };
                Ok(RingId::PolyOverGF(Arc::new(field)))
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Value {
    Int(BigInt),
    /// a + b sqrt(k)
    Quad(BigInt, BigInt),
    Poly(poly::Poly),
}

/// A value in one of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    ring: RingId,
    value: Value,
}

/// Operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Ring arithmetic by operation tag; `Neg` ignores `b` apart from the ring check.
pub fn arith(op: ArithOp, a: &Element, b: &Element) -> Result<Element> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Neg => {
            a.check_ring(b)?;
            Ok(a.neg())
        }
    }
}

impl Element {
    pub fn integer(n: impl Into<BigInt>) -> Element {
        Element {
            ring: RingId::Integer,
            value: Value::Int(n.into()),
        }
    }

    pub fn gaussian(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Element {
        Element {
            ring: RingId::Gaussian,
            value: Value::Quad(a.into(), b.into()),
        }
    }

    /// a + b sqrt(k) in a Gaussian or quadratic ring.
    pub fn quadratic(ring: &RingId, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Element> {
        if ring.quadratic_k().is_none() {
            return Err(Error::UnsupportedRing(format!(
                "{ring} has no (a, b) coordinates"
            )));
        }
        Ok(Element {
            ring: ring.clone(),
            value: Value::Quad(a.into(), b.into()),
        })
    }

    /// Polynomial from field-element coefficients, least degree first.
    /// Prime-field coefficients are reduced; extension-field coefficients must lie in `[0, q)`.
    pub fn poly(ring: &RingId, coeffs: &[u64]) -> Result<Element> {
        let field = ring
            .field()
            .ok_or_else(|| Error::UnsupportedRing(format!("{ring} is not a polynomial ring")))?;
        let q = field.order();
        let coeffs = if field.is_prime_field() {
            coeffs.iter().map(|&c| c % q).collect()
        } else {
            if let Some(c) = coeffs.iter().find(|&&c| c >= q) {
                return Err(Error::Parse(format!(
                    "coefficient {c} is not an element of GF({q})"
                )));
            }
            coeffs.to_vec()
        };
        Ok(Element {
            ring: ring.clone(),
            value: Value::Poly(poly::trim(coeffs)),
        })
    }

    /// Builds an element from its coordinate list.
    pub fn from_coords(ring: &RingId, coords: &[BigInt]) -> Result<Element> {
        match ring {
            RingId::Integer => match coords {
                [n] => Ok(Element::integer(n.clone())),
                _ => Err(Error::Parse("integer elements have one coordinate".into())),
            },
            RingId::Gaussian | RingId::Quadratic(_) => match coords {
                [a, b] => Element::quadratic(ring, a.clone(), b.clone()),
                _ => Err(Error::Parse(
                    "quadratic elements have two coordinates a,b".into(),
                )),
            },
            RingId::PolyOverGF(field) => {
                let q = BigInt::from(field.order());
                let mut cs = Vec::with_capacity(coords.len());
                for c in coords {
                    let c = if field.is_prime_field() {
                        c.mod_floor(&q)
                    } else if c.is_negative() || c >= &q {
                        return Err(Error::Parse(format!(
                            "coefficient {c} is not an element of GF({q})"
                        )));
                    } else {
                        c.clone()
                    };
                    cs.push(u64::try_from(c).expect("reduced below q"));
                }
                Element::poly(ring, &cs)
            }
        }
    }

    pub fn zero(ring: &RingId) -> Element {
        Element::from_int(ring, 0)
    }

    pub fn one(ring: &RingId) -> Element {
        Element::from_int(ring, 1)
    }

    /// Image of an integer under the canonical map Z -> R.
    pub fn from_int(ring: &RingId, n: impl Into<BigInt>) -> Element {
        let n = n.into();
        let value = match ring {
            RingId::Integer => Value::Int(n),
            RingId::Gaussian | RingId::Quadratic(_) => Value::Quad(n, BigInt::zero()),
            RingId::PolyOverGF(field) => {
                let p = BigInt::from(field.characteristic());
                let c = u64::try_from(n.mod_floor(&p)).expect("reduced below p");
                Value::Poly(poly::trim(vec![c]))
            }
        };
        Element {
            ring: ring.clone(),
            value,
        }
    }

    pub fn ring(&self) -> &RingId {
        &self.ring
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.value {
            Value::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_quadratic(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.value {
            Value::Quad(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&[u64]> {
        match &self.value {
            Value::Poly(c) => Some(c),
            _ => None,
        }
    }

    /// Coordinate list as in the textual form.
    pub fn coords(&self) -> Vec<BigInt> {
        match &self.value {
            Value::Int(n) => vec![n.clone()],
            Value::Quad(a, b) => vec![a.clone(), b.clone()],
            Value::Poly(c) => c.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_zero(),
            Value::Quad(a, b) => a.is_zero() && b.is_zero(),
            Value::Poly(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Int(n) => n.is_one(),
            Value::Quad(a, b) => a.is_one() && b.is_zero(),
            Value::Poly(c) => poly::is_one(c),
        }
    }

    pub(crate) fn check_ring(&self, other: &Element) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    fn with_value(&self, value: Value) -> Element {
        Element {
            ring: self.ring.clone(),
            value,
        }
    }

    fn k(&self) -> i64 {
        self.ring.quadratic_k().expect("quadratic ring")
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.check_ring(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn neg(&self) -> Element {
        self.with_value(match &self.value {
            Value::Int(n) => Value::Int(-n),
            Value::Quad(a, b) => Value::Quad(-a, -b),
            Value::Poly(c) => Value::Poly(poly::neg(self.ring.field().unwrap(), c)),
        })
    }

    pub(crate) fn add_unchecked(&self, other: &Element) -> Element {
        self.with_value(match (&self.value, &other.value) {
            (Value::Int(x), Value::Int(y)) => Value::Int(x + y),
            (Value::Quad(a, b), Value::Quad(c, d)) => Value::Quad(a + c, b + d),
            (Value::Poly(x), Value::Poly(y)) => {
                Value::Poly(poly::add(self.ring.field().unwrap(), x, y))
            }
            _ => unreachable!("ring checked by caller"),
        })
    }

    pub(crate) fn mul_unchecked(&self, other: &Element) -> Element {
        self.with_value(match (&self.value, &other.value) {
            (Value::Int(x), Value::Int(y)) => Value::Int(x * y),
            (Value::Quad(a, b), Value::Quad(c, d)) => {
                let k = self.k();
                Value::Quad(a * c + b * d * k, a * d + b * c)
            }
            (Value::Poly(x), Value::Poly(y)) => {
                Value::Poly(poly::mul(self.ring.field().unwrap(), x, y))
            }
            _ => unreachable!("ring checked by caller"),
        })
    }

    pub fn pow(&self, mut e: u64) -> Element {
        let mut acc = Element::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Conjugate a - b sqrt(k); identity outside the quadratic rings.
    pub fn conjugate(&self) -> Element {
        match &self.value {
            Value::Quad(a, b) => self.with_value(Value::Quad(a.clone(), -b)),
            _ => self.clone(),
        }
    }

    /// Signed field norm a^2 - k b^2 of a quadratic element.
    pub fn quadratic_norm(&self) -> Option<BigInt> {
        match &self.value {
            Value::Quad(a, b) => Some(a * a - b * b * self.k()),
            _ => None,
        }
    }

    /// |R/(m)|: |n| in Z, |a^2 - k b^2| in quadratic rings, q^deg in GF(q)[x].
    pub fn norm(&self) -> Result<BigUint> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.norm_or_zero())
    }

    /// Euclidean size: the norm, or 0 for the zero element.
    pub(crate) fn norm_or_zero(&self) -> BigUint {
        match &self.value {
            Value::Int(n) => n.magnitude().clone(),
            Value::Quad(..) => self.quadratic_norm().unwrap().magnitude().clone(),
            Value::Poly(c) => match poly::degree(c) {
                None => BigUint::zero(),
                Some(d) => BigUint::from(self.ring.field().unwrap().order()).pow(d as u32),
            },
        }
    }

    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.norm_or_zero().is_one()
    }

    /// Multiplicative inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Element> {
        if !self.is_unit() {
            return None;
        }
        Some(match &self.value {
            Value::Int(n) => self.with_value(Value::Int(n.clone())),
            Value::Quad(..) => {
                // conj / N with N = +-1
                let conj = self.conjugate();
                if self.quadratic_norm().unwrap().is_negative() {
                    conj.neg()
                } else {
                    conj
                }
            }
            Value::Poly(c) => {
                let inv = self.ring.field().unwrap().inv(c[0]).unwrap();
                self.with_value(Value::Poly(vec![inv]))
            }
        })
    }

    /// Division with remainder: `self = quot * divisor + rem` with
    /// `rem = 0` or `norm(rem) < norm(divisor)`.
    ///
    /// Quadratic quotients round each coordinate of the exact fraction-field
    /// quotient to the nearest integer, ties toward zero. Integer division
    /// floors, so integer remainders are non-negative for positive divisors.
    pub fn euclid_div(&self, divisor: &Element) -> Result<(Element, Element)> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&self.value, &divisor.value) {
            (Value::Int(a), Value::Int(b)) => {
                let (q, r) = a.div_mod_floor(b);
                (
                    self.with_value(Value::Int(q)),
                    self.with_value(Value::Int(r)),
                )
            }
            (Value::Quad(..), Value::Quad(..)) => {
                let n = divisor.quadratic_norm().unwrap();
                let num = self.mul_unchecked(&divisor.conjugate());
                let (u, v) = num.as_quadratic().unwrap();
                let q = self.with_value(Value::Quad(round_div(u, &n), round_div(v, &n)));
                let r = self.add_unchecked(&q.mul_unchecked(divisor).neg());
                (q, r)
            }
            (Value::Poly(a), Value::Poly(b)) => {
                let (q, r) = poly::divrem(self.ring.field().unwrap(), a, b);
                (
                    self.with_value(Value::Poly(q)),
                    self.with_value(Value::Poly(r)),
                )
            }
            _ => unreachable!("ring checked above"),
        })
    }

    /// True iff `divisor` divides `self`.
    pub fn divisible_by(&self, divisor: &Element) -> Result<bool> {
        if divisor.is_zero() {
            return Ok(self.is_zero());
        }
        Ok(self.euclid_div(divisor)?.1.is_zero())
    }

    /// Exact quotient, when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Element) -> Result<Option<Element>> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.euclid_div(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Unit `u` such that `u * self` is the canonical associate.
    ///
    /// Z: positive. Z[i]: real part > 0 and imaginary part >= 0. Z[sqrt(-2)]
    /// and the real quadratic rings: first nonzero coordinate positive (for
    /// the real quadratic rings this only fixes the sign; ideal equality goes
    /// through the lattice form instead). GF(q)[x]: monic.
    pub fn normalizing_unit(&self) -> Element {
        let one = Element::one(&self.ring);
        match &self.value {
            Value::Int(n) if n.is_negative() => one.neg(),
            Value::Int(_) => one,
            Value::Quad(a, b) if self.ring == RingId::Gaussian => {
                let zero = BigInt::zero();
                if a > &zero && b >= &zero || self.is_zero() {
                    one
                } else if a <= &zero && b > &zero {
                    Element::gaussian(0, -1)
                } else if a < &zero && b <= &zero {
                    one.neg()
                } else {
                    Element::gaussian(0, 1)
                }
            }
            Value::Quad(a, b) => {
                if a.is_negative() || (a.is_zero() && b.is_negative()) {
                    one.neg()
                } else {
                    one
                }
            }
            Value::Poly(c) => match c.last() {
                None => one,
                Some(&lead) => {
                    let inv = self.ring.field().unwrap().inv(lead).unwrap();
                    self.with_value(Value::Poly(vec![inv]))
                }
            },
        }
    }

    /// Canonical associate (see [`Element::normalizing_unit`]).
    pub fn canonical(&self) -> Element {
        self.normalizing_unit().mul_unchecked(self)
    }

    /// Extended gcd: `(g, u, v)` with `u * self + v * other = g`, where `g`
    /// generates `(self) + (other)` and is canonically normalized.
    pub fn xgcd(&self, other: &Element) -> Result<(Element, Element, Element)> {
        self.check_ring(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let zero = Element::zero(&self.ring);
        let one = Element::one(&self.ring);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.euclid_div(&r1)?;
            let s = s0.add_unchecked(&q.mul_unchecked(&s1).neg());
            let t = t0.add_unchecked(&q.mul_unchecked(&t1).neg());
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let unit = r0.normalizing_unit();
        Ok((
            unit.mul_unchecked(&r0),
            unit.mul_unchecked(&s0),
            unit.mul_unchecked(&t0),
        ))
    }

    pub fn gcd(&self, other: &Element) -> Result<Element> {
        Ok(self.xgcd(other)?.0)
    }

    /// True iff the two elements generate the same principal ideal.
    pub fn is_associate(&self, other: &Element) -> Result<bool> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.is_zero() && other.is_zero());
        }
        Ok(self.divisible_by(other)? && other.divisible_by(self)?)
    }
}

/// Nearest integer to `num / den`, ties rounded toward zero.
fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (num, den) = if den.is_negative() {
        (-num, -den)
    } else {
        (num.clone(), den.clone())
    };
    let (q, r) = num.div_mod_floor(&den);
    let twice = &r * 2;
    if twice > den || (twice == den && q.is_negative()) {
        q + 1
    } else {
        q
    }
}

impl fmt::Display for Element {
    /// Textual form: `n` in Z, `a,b` in the quadratic rings, `c0,c1,...,cd`
    /// in GF(q)[x] (`0` for the zero polynomial).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(n) => write!(f, "{n}"),
            Value::Quad(a, b) => write!(f, "{a},{b}"),
            Value::Poly(c) if c.is_empty() => write!(f, "0"),
            Value::Poly(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

impl Element {
    /// Parses the textual form for the given ring.
    pub fn parse(ring: &RingId, s: &str) -> Result<Element> {
        let coords = s
            .split(',')
            .map(|c| c.trim().parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("{s:?} is not a {ring} element")))?;
        Element::from_coords(ring, &coords)
    }
}
