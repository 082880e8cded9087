//! Dense univariate polynomials over GF(q), coefficients least degree first.
//! Every function returns trimmed vectors; the zero polynomial is empty.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;

use crate::gf::GaloisField;

pub type Poly = Vec<u64>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn is_one(a: &[u64]) -> bool {
    a == [1]
}

pub fn x() -> Poly {
    vec![0, 1]
}

pub fn add(f: &GaloisField, a: &[u64], b: &[u64]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(out)
}

pub fn neg(f: &GaloisField, a: &[u64]) -> Poly {
    a.iter().map(|&c| f.neg(c)).collect()
}

pub fn sub(f: &GaloisField, a: &[u64], b: &[u64]) -> Poly {
    add(f, a, &neg(f, b))
}

pub fn scale(f: &GaloisField, a: &[u64], c: u64) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul(f: &GaloisField, a: &[u64], b: &[u64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        f.axpy(x, b, &mut out[i..]);
    }
    trim(out)
}

/// Long division. Panics on a zero divisor; callers check first.
pub fn divrem(f: &GaloisField, a: &[u64], b: &[u64]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let top = r.len() - 1;
        let c = if lead_inv == 1 {
            r[top]
        } else {
            f.mul(r[top], lead_inv)
        };
        let shift = top - db;
        q[shift] = c;
        f.axpy(f.neg(c), b, &mut r[shift..]);
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(f: &GaloisField, a: &[u64], b: &[u64]) -> Poly {
    divrem(f, a, b).1
}

/// Scales to a monic polynomial. Returns the polynomial and the factor used.
pub fn monic(f: &GaloisField, a: &[u64]) -> (Poly, u64) {
    match a.last() {
        None => (Vec::new(), 1),
        Some(&lead) => {
            let inv = f.inv(lead).expect("nonzero leading coefficient");
            (scale(f, a, inv), inv)
        }
    }
}

/// Monic gcd.
pub fn gcd(f: &GaloisField, a: &[u64], b: &[u64]) -> Poly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a).0
}

pub fn mulmod(f: &GaloisField, a: &[u64], b: &[u64], m: &[u64]) -> Poly {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &GaloisField, base: &[u64], exp: &BigUint, m: &[u64]) -> Poly {
    let Some(ctx) = ModContext::new(f, m) else {
        // constant modulus: everything is zero
        return Vec::new();
    };
    let mut acc = rem(f, &[1], m);
    let base = rem(f, base, m);
    for i in (0..exp.bits()).rev() {
        acc = ctx.mulmod(&acc, &acc);
        if exp.bit(i) {
            acc = ctx.mulmod(&acc, &base);
        }
    }
    acc
}

/// Repeated multiplication modulo a fixed `m` of degree `n >= 1`.
///
/// Over GF(2) polynomials are packed into bit words. Over other prime
/// fields below 2^16 the residues of `x^n, ..., x^(2n-2)` are precomputed
/// and each product is reduced by one pass of multiply-adds accumulated in
/// machine words; extension fields use the same table with field
/// arithmetic.
pub struct ModContext<'a> {
    f: &'a GaloisField,
    n: usize,
    kind: ContextKind,
}

enum ContextKind {
    /// `m` as bit words.
    Binary(Vec<u64>),
    /// `fold[k]` is `x^(n+k) mod m`, padded to `n` coefficients.
    Folded {
        fold: Vec<Vec<u64>>,
        small_prime: Option<u64>,
    },
}

impl<'a> ModContext<'a> {
    pub fn new(f: &'a GaloisField, m: &[u64]) -> Option<Self> {
        let n = degree(m).filter(|&d| d >= 1)?;
        if f.order() == 2 {
            return Some(ModContext {
                f,
                n,
                kind: ContextKind::Binary(pack_bits(m)),
            });
        }
        let mut fold = Vec::with_capacity(n - 1);
        let mut xn = vec![0u64; n];
        xn.push(1);
        let mut cur = rem(f, &xn, m);
        for _ in 0..n - 1 {
            let mut row = cur.clone();
            row.resize(n, 0);
            fold.push(row);
            cur.insert(0, 0);
            cur = rem(f, &cur, m);
        }
        let small_prime = (f.is_prime_field() && f.order() < 1 << 16).then_some(f.order());
        Some(ModContext {
            f,
            n,
            kind: ContextKind::Folded { fold, small_prime },
        })
    }

    /// `a b mod m` for `a`, `b` already reduced.
    pub fn mulmod(&self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let n = self.n;
        let (fold, small_prime) = match &self.kind {
            ContextKind::Binary(m) => return binary_mulmod(a, b, m, n),
            ContextKind::Folded { fold, small_prime } => (fold, *small_prime),
        };
        match small_prime {
            Some(p) => {
                let mut c = vec![0u64; a.len() + b.len() - 1];
                for (i, &x) in a.iter().enumerate() {
                    if x != 0 {
                        for (acc, &y) in c[i..].iter_mut().zip(b) {
                            *acc += x * y;
                        }
                    }
                }
                let mut out: Vec<u64> = c.iter().take(n).map(|&v| v % p).collect();
                out.resize(n, 0);
                for (k, &v) in c.iter().enumerate().skip(n) {
                    let v = v % p;
                    if v != 0 {
                        for (acc, &t) in out.iter_mut().zip(&fold[k - n]) {
                            *acc += v * t;
                        }
                    }
                }
                out.iter_mut().for_each(|v| *v %= p);
                trim(out)
            }
            None => {
                let f = self.f;
                let c = mul(f, a, b);
                let mut out: Vec<u64> = c.iter().take(n).copied().collect();
                out.resize(n, 0);
                for (k, &v) in c.iter().enumerate().skip(n) {
                    f.axpy(v, &fold[k - n], &mut out);
                }
                trim(out)
            }
        }
    }
}

fn pack_bits(a: &[u64]) -> Vec<u64> {
    let mut w = vec![0u64; a.len().div_ceil(64)];
    for (i, _) in a.iter().enumerate().filter(|(_, &c)| c == 1) {
        w[i / 64] |= 1 << (i % 64);
    }
    w
}

fn bit(w: &[u64], i: usize) -> bool {
    (w[i / 64] >> (i % 64)) & 1 == 1
}

/// `dst ^= src << shift`; `dst` must have room for the shifted words.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (words, bits) = (shift / 64, shift % 64);
    for (i, &s) in src.iter().enumerate() {
        dst[i + words] ^= s << bits;
        if bits != 0 {
            dst[i + words + 1] ^= s >> (64 - bits);
        }
    }
}

fn binary_mulmod(a: &[u64], b: &[u64], m: &[u64], n: usize) -> Poly {
    let (pa, pb) = (pack_bits(a), pack_bits(b));
    let top = a.len() + b.len() - 2;
    let mut c = vec![0u64; top / 64 + m.len() + 2];
    for i in (0..a.len()).filter(|&i| bit(&pa, i)) {
        xor_shifted(&mut c, &pb, i);
    }
    for k in (n..=top).rev() {
        if bit(&c, k) {
            xor_shifted(&mut c, m, k - n);
        }
    }
    trim((0..n).map(|i| u64::from(bit(&c, i))).collect())
}

pub fn derivative(f: &GaloisField, a: &[u64]) -> Poly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int(i as i128)))
            .collect(),
    )
}

/// Ben-Or irreducibility test: f of degree n is irreducible iff
/// gcd(f, x^(q^i) - x) = 1 for every 1 <= i <= n/2.
pub fn is_irreducible(f: &GaloisField, a: &[u64]) -> bool {
    let n = match degree(a) {
        None | Some(0) => return false,
        Some(n) => n,
    };
    let q = BigUint::from(f.order());
    let mut h = rem(f, &x(), a);
    for _ in 1..=n / 2 {
        h = powmod(f, &h, &q, a);
        let g = gcd(f, a, &sub(f, &h, &x()));
        if !is_one(&g) {
            return false;
        }
    }
    true
}

/// Complete factorization of a monic polynomial of positive degree into
/// monic irreducible factors with multiplicities (unsorted).
pub fn factor<R: Rng>(f: &GaloisField, a: &[u64], rng: &mut R) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    for (sq, mult) in squarefree(f, a) {
        for (g, d) in distinct_degree(f, &sq) {
            for h in equal_degree(f, &g, d, rng) {
                out.push((h, mult));
            }
        }
    }
    out
}

fn squarefree(f: &GaloisField, a: &[u64]) -> Vec<(Poly, u32)> {
    let p = f.characteristic() as u32;
    let mut out = Vec::new();
    let da = derivative(f, a);
    if da.is_empty() {
        for (g, e) in squarefree(f, &pth_root(f, a)) {
            out.push((g, e * p));
        }
        return out;
    }
    let mut c = gcd(f, a, &da);
    let mut w = divrem(f, a, &c).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(f, &w, &c);
        let fac = divrem(f, &w, &y).0;
        if !is_one(&fac) {
            out.push((fac, i));
        }
        i += 1;
        c = divrem(f, &c, &y).0;
        w = y;
    }
    if !is_one(&c) {
        for (g, e) in squarefree(f, &pth_root(f, &c)) {
            out.push((g, e * p));
        }
    }
    out
}

// a(x) = b(x^p); returns b with each coefficient replaced by its p-th root.
fn pth_root(f: &GaloisField, a: &[u64]) -> Poly {
    let p = f.characteristic() as usize;
    let root_exp = f.order() / f.characteristic();
    trim(a.iter().step_by(p).map(|&c| f.pow(c, root_exp)).collect())
}

fn distinct_degree(f: &GaloisField, a: &[u64]) -> Vec<(Poly, usize)> {
    let q = BigUint::from(f.order());
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let mut h = rem(f, &x(), &rest);
    let mut i = 1;
    while degree(&rest).unwrap_or(0) >= 2 * i {
        h = powmod(f, &h, &q, &rest);
        let g = gcd(f, &rest, &sub(f, &h, &x()));
        if !is_one(&g) {
            rest = divrem(f, &rest, &g).0;
            h = rem(f, &h, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = degree(&rest) {
        if d > 0 {
            out.push((rest, d));
        }
    }
    out
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
fn equal_degree<R: Rng>(f: &GaloisField, a: &[u64], d: usize, rng: &mut R) -> Vec<Poly> {
    let n = degree(a).unwrap_or(0);
    if n <= d {
        return vec![a.to_vec()];
    }
    let q = f.order();
    loop {
        let r: Poly = trim((0..n).map(|_| rng.gen_range(0..q)).collect());
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            let e = (BigUint::from(q).pow(d as u32) - BigUint::one()) >> 1;
            sub(f, &powmod(f, &r, &e, a), &[1])
        } else {
            // absolute trace to GF(2): r + r^2 + r^4 + ... + r^(2^(kd - 1))
            let steps = f.degree() as usize * d;
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..steps {
                t = mulmod(f, &t, &t, a);
                acc = add(f, &acc, &t);
            }
            acc
        };
        let g = gcd(f, a, &b);
        let dg = degree(&g).unwrap_or(0);
        if g.is_empty() || dg == 0 || dg == n {
            continue;
        }
        let h = divrem(f, a, &g).0;
        let mut out = equal_degree(f, &g, d, rng);
        out.extend(equal_degree(f, &h, d, rng));
        return out;
    }
}

/// Interprets a polynomial's coefficients as base-q digits.
pub fn to_index(f: &GaloisField, a: &[u64]) -> BigUint {
    let q = BigUint::from(f.order());
    a.iter().rev().fold(BigUint::zero(), |acc, &c| acc * &q + c)
}
