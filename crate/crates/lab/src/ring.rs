//! Finite rings given by addition and multiplication tables.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use cirsa_core::gf::GaloisField;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LabError, Result};

/// Default bound on the order of rings the lab will build.
pub const DEFAULT_ORDER_CAP: usize = 256;
/// Constructed rings up to this order have every axiom checked on every
/// triple; larger ones are spot-checked.
pub const FULL_VERIFY_LIMIT: usize = 256;
const SAMPLED_TRIPLES: usize = 100_000;

static NEXT_ID: AtomicU64 = AtomicU64::new(0);

/// An associative ring with identity `one != zero` on `0..order`.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    id: u64,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    label: String,
    names: Vec<String>,
    add_gens: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    Full,
    Sampled,
}

/// Recipes for the standard test rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingKind {
    ZMod(u64),
    /// GF(q) for a prime power q.
    Gf(u64),
    Matrix2(Box<RingKind>),
    Triangular2(Box<RingKind>),
    Product(Vec<RingKind>),
}

impl RingKind {
    /// Order of the ring this recipe builds (saturating).
    pub fn order(&self) -> u128 {
        match self {
            RingKind::ZMod(n) | RingKind::Gf(n) => *n as u128,
            RingKind::Matrix2(b) => b.order().saturating_pow(4),
            RingKind::Triangular2(b) => b.order().saturating_pow(3),
            RingKind::Product(parts) => parts
                .iter()
                .fold(1u128, |acc, p| acc.saturating_mul(p.order())),
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::ZMod(n) => write!(f, "zmod:{n}"),
            RingKind::Gf(q) => write!(f, "gf{q}"),
            RingKind::Matrix2(b) => write!(f, "matrix2:{b}"),
            RingKind::Triangular2(b) => write!(f, "triangular2:{b}"),
            RingKind::Product(parts) => {
                write!(f, "product(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FiniteRing {
    /// Wraps raw tables after checking every ring axiom.
    pub fn from_tables(
        label: impl Into<String>,
        names: Option<Vec<String>>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        verification: Verification,
    ) -> Result<Self> {
        let order = (add.len() as f64).sqrt().round() as usize;
        let shape = |detail: String| LabError::InvalidTables {
            axiom: "table shape",
            detail,
        };
        if order * order != add.len() || mul.len() != add.len() {
            return Err(shape(format!("{} and {} entries", add.len(), mul.len())));
        }
        if zero >= order || one >= order {
            return Err(shape("identity index out of range".into()));
        }
        if let Some(&bad) = add.iter().chain(&mul).find(|&&v| v as usize >= order) {
            return Err(shape(format!("entry {bad} is not below {order}")));
        }
        let names = names.unwrap_or_else(|| (0..order).map(|i| i.to_string()).collect());
        let mut ring = FiniteRing {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            order,
            add,
            mul,
            neg: Vec::new(),
            zero,
            one,
            label: label.into(),
            names,
            add_gens: Vec::new(),
        };
        ring.check_group()?;
        ring.neg = (0..order)
            .map(|a| (0..order).find(|&b| ring.add(a, b) == zero).unwrap() as u32)
            .collect();
        ring.check_ring(verification)?;
        ring.add_gens = crate::ideal::greedy_generators(&ring, 0..order);
        Ok(ring)
    }

    pub fn build(kind: &RingKind, cap: usize) -> Result<Self> {
        let order = kind.order();
        if order > cap as u128 {
            return Err(LabError::CapExceeded {
                order: order.to_string(),
                cap,
            });
        }
        let (names, add, mul, zero, one) = raw(kind)?;
        let verification = if order as usize <= FULL_VERIFY_LIMIT {
            Verification::Full
        } else {
            Verification::Sampled
        };
        Self::from_tables(
            kind.to_string(),
            Some(names),
            add,
            mul,
            zero,
            one,
            verification,
        )
    }

    pub(crate) fn id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, mut a: usize, mut e: u64) -> usize {
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// A generating set of the additive group.
    pub fn additive_generators(&self) -> &[usize] {
        &self.add_gens
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn check_group(&self) -> Result<()> {
        let n = self.order;
        let fail = |axiom, detail| Err(LabError::InvalidTables { axiom, detail });
        for a in 0..n {
            if self.add(self.zero, a) != a || self.add(a, self.zero) != a {
                return fail("additive identity", format!("0 + {a}"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", format!("{a} + {b}"));
                }
            }
            if !(0..n).any(|b| self.add(a, b) == self.zero) {
                return fail("additive inverses", format!("-{a}"));
            }
        }
        Ok(())
    }

    fn check_ring(&self, verification: Verification) -> Result<()> {
        let n = self.order;
        let fail = |axiom, detail| Err(LabError::InvalidTables { axiom, detail });
        if n < 2 || self.one == self.zero {
            return fail("nonzero identity", format!("one = zero = {}", self.zero));
        }
        for a in 0..n {
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return fail("multiplicative identity", format!("1 * {a}"));
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("additive associativity", format!("({a} + {b}) + {c}"));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("multiplicative associativity", format!("({a} * {b}) * {c}"));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("left distributivity", format!("{a} * ({b} + {c})"));
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return fail("right distributivity", format!("({a} + {b}) * {c}"));
            }
            Ok(())
        };
        match verification {
            Verification::Full => {
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            check(a, b, c)?;
                        }
                    }
                }
            }
            Verification::Sampled => {
                let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
                for _ in 0..SAMPLED_TRIPLES {
                    check(
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    )?;
                }
            }
        }
        Ok(())
    }
}

type Raw = (Vec<String>, Vec<u32>, Vec<u32>, usize, usize);

fn tabulate(
    n: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
) -> (Vec<u32>, Vec<u32>) {
    let mut at = Vec::with_capacity(n * n);
    let mut mt = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            at.push(add(a, b) as u32);
            mt.push(mul(a, b) as u32);
        }
    }
    (at, mt)
}

fn raw(kind: &RingKind) -> Result<Raw> {
    Ok(match kind {
        RingKind::ZMod(m) => {
            let n = *m as usize;
            if n < 2 {
                return Err(LabError::Spec(format!("zmod:{m} has no nonzero identity")));
            }
            let names = (0..n).map(|i| i.to_string()).collect();
            let (a, m) = tabulate(n, |a, b| (a + b) % n, |a, b| (a * b) % n);
            (names, a, m, 0, 1)
        }
        RingKind::Gf(q) => {
            let field = GaloisField::new(*q).map_err(|e| LabError::Spec(e.to_string()))?;
            let n = *q as usize;
            let names = (0..n).map(|i| i.to_string()).collect();
            let (a, m) = tabulate(
                n,
                |a, b| field.add(a as u64, b as u64) as usize,
                |a, b| field.mul(a as u64, b as u64) as usize,
            );
            (names, a, m, 0, 1)
        }
        RingKind::Matrix2(base) => {
            let (bn, ba, bm, z, o) = raw(base)?;
            let n = bn.len();
            let base = Tables {
                n,
                add: &ba,
                mul: &bm,
            };
            // [[x0, x1], [x2, x3]] has index x0 + n x1 + n^2 x2 + n^3 x3
            let split = |i: usize| [i % n, i / n % n, i / (n * n) % n, i / (n * n * n)];
            let join = |x: [usize; 4]| x[0] + n * (x[1] + n * (x[2] + n * x[3]));
            let order = n.pow(4);
            let names = (0..order)
                .map(|i| {
                    let x = split(i);
                    format!("[{} {}; {} {}]", bn[x[0]], bn[x[1]], bn[x[2]], bn[x[3]])
                })
                .collect();
            let (a, m) = tabulate(
                order,
                |i, j| {
                    let (x, y) = (split(i), split(j));
                    join([0, 1, 2, 3].map(|k| base.add(x[k], y[k])))
                },
                |i, j| {
                    let (x, y) = (split(i), split(j));
                    join([
                        base.add(base.mul(x[0], y[0]), base.mul(x[1], y[2])),
                        base.add(base.mul(x[0], y[1]), base.mul(x[1], y[3])),
                        base.add(base.mul(x[2], y[0]), base.mul(x[3], y[2])),
                        base.add(base.mul(x[2], y[1]), base.mul(x[3], y[3])),
                    ])
                },
            );
            (names, a, m, join([z, z, z, z]), join([o, z, z, o]))
        }
        RingKind::Triangular2(base) => {
            let (bn, ba, bm, z, o) = raw(base)?;
            let n = bn.len();
            let base = Tables {
                n,
                add: &ba,
                mul: &bm,
            };
            // [[x0, x1], [0, x2]] has index x0 + n x1 + n^2 x2
            let split = |i: usize| [i % n, i / n % n, i / (n * n)];
            let join = |x: [usize; 3]| x[0] + n * (x[1] + n * x[2]);
            let order = n.pow(3);
            let names = (0..order)
                .map(|i| {
                    let x = split(i);
                    format!("[{} {}; {} {}]", bn[x[0]], bn[x[1]], bn[z], bn[x[2]])
                })
                .collect();
            let (a, m) = tabulate(
                order,
                |i, j| {
                    let (x, y) = (split(i), split(j));
                    join([0, 1, 2].map(|k| base.add(x[k], y[k])))
                },
                |i, j| {
                    let (x, y) = (split(i), split(j));
                    join([
                        base.mul(x[0], y[0]),
                        base.add(base.mul(x[0], y[1]), base.mul(x[1], y[2])),
                        base.mul(x[2], y[2]),
                    ])
                },
            );
            (names, a, m, join([z, z, z]), join([o, z, o]))
        }
        RingKind::Product(parts) => {
            if parts.is_empty() {
                return Err(LabError::Spec("empty product".into()));
            }
            let raws = parts.iter().map(raw).collect::<Result<Vec<_>>>()?;
            let sizes: Vec<usize> = raws.iter().map(|r| r.0.len()).collect();
            let order: usize = sizes.iter().product();
            // first factor is the least significant digit
            let split = |mut i: usize| {
                sizes
                    .iter()
                    .map(|&s| {
                        let d = i % s;
                        i /= s;
                        d
                    })
                    .collect::<Vec<_>>()
            };
            let join = |x: &[usize]| {
                x.iter()
                    .zip(&sizes)
                    .rev()
                    .fold(0, |acc, (&d, &s)| acc * s + d)
            };
            let names = (0..order)
                .map(|i| {
                    let parts: Vec<&str> = split(i)
                        .iter()
                        .zip(&raws)
                        .map(|(&d, r)| r.0[d].as_str())
                        .collect();
                    format!("({})", parts.join(","))
                })
                .collect();
            let op = |i: usize, j: usize, table: fn(&Raw) -> &Vec<u32>| {
                let (x, y) = (split(i), split(j));
                let z: Vec<usize> = (0..sizes.len())
                    .map(|k| table(&raws[k])[x[k] * sizes[k] + y[k]] as usize)
                    .collect();
                join(&z)
            };
            let (a, m) = tabulate(order, |i, j| op(i, j, |r| &r.1), |i, j| op(i, j, |r| &r.2));
            let zeros: Vec<usize> = raws.iter().map(|r| r.3).collect();
            let ones: Vec<usize> = raws.iter().map(|r| r.4).collect();
            (names, a, m, join(&zeros), join(&ones))
        }
    })
}

struct Tables<'a> {
    n: usize,
    add: &'a [u32],
    mul: &'a [u32],
}

impl Tables<'_> {
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Box<RingKind> {
        Box::new(RingKind::Gf(q))
    }

    #[test]
    fn orders() {
        let cases = [
            (RingKind::ZMod(12), 12),
            (RingKind::Matrix2(gf(2)), 16),
            (
                RingKind::Product(vec![RingKind::ZMod(2), RingKind::ZMod(4)]),
                8,
            ),
            (RingKind::Triangular2(gf(3)), 27),
            (RingKind::Gf(9), 9),
        ];
        for (kind, n) in cases {
            let r = FiniteRing::build(&kind, DEFAULT_ORDER_CAP).unwrap();
            assert_eq!(r.order(), n);
            assert_eq!(r.label(), kind.to_string());
        }
    }

    #[test]
    fn caps_and_degenerate() {
        let big = RingKind::Matrix2(Box::new(RingKind::ZMod(5)));
        assert!(matches!(
            FiniteRing::build(&big, DEFAULT_ORDER_CAP),
            Err(LabError::CapExceeded { .. })
        ));
        assert_eq!(FiniteRing::build(&big, 625).unwrap().order(), 625);
        assert!(FiniteRing::build(&RingKind::ZMod(1), 10).is_err());
        assert!(FiniteRing::build(&RingKind::Gf(6), 10).is_err());
    }

    #[test]
    fn matrix_arithmetic() {
        let r = FiniteRing::build(&RingKind::Matrix2(gf(2)), 16).unwrap();
        let idx = |name: &str| (0..16).find(|&i| r.name(i) == name).unwrap();
        let e12 = idx("[0 1; 0 0]");
        let e21 = idx("[0 0; 1 0]");
        assert_eq!(r.mul(e12, e12), r.zero());
        assert_eq!(r.name(r.mul(e12, e21)), "[1 0; 0 0]");
        assert_eq!(r.name(r.mul(e21, e12)), "[0 0; 0 1]");
        assert_eq!(r.name(r.one()), "[1 0; 0 1]");
    }

    #[test]
    fn rejects_bad_tables() {
        // Z/2 with a broken multiplication: 1 * 1 = 0
        let add = vec![0, 1, 1, 0];
        let mul = vec![0, 0, 0, 0];
        match FiniteRing::from_tables("bad", None, add.clone(), mul, 0, 1, Verification::Full) {
            Err(LabError::InvalidTables { axiom, .. }) => {
                assert_eq!(axiom, "multiplicative identity")
            }
            other => panic!("{other:?}"),
        }
        let bad_add = vec![0, 1, 0, 0];
        match FiniteRing::from_tables(
            "bad",
            None,
            bad_add,
            vec![0, 0, 0, 1],
            0,
            1,
            Verification::Full,
        ) {
            Err(LabError::InvalidTables { axiom, .. }) => {
                assert_eq!(axiom, "additive commutativity")
            }
            other => panic!("{other:?}"),
        }
        match FiniteRing::from_tables("bad", None, add, vec![0, 0, 0, 1], 1, 0, Verification::Full)
        {
            Err(LabError::InvalidTables { axiom, .. }) => assert_eq!(axiom, "additive identity"),
            other => panic!("{other:?}"),
        }
    }
}
