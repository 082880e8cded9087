//! Rational-integer helpers: primality, square roots modulo a prime and
//! factorization by trial division plus Pollard rho (Brent's variant).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const SMALL_PRIMES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with the first twenty primes as bases. Deterministic for
/// every n < 3.3 * 10^24 and a fixed-base probable-prime test beyond.
pub fn is_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'bases: for &a in SMALL_PRIMES.iter() {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

/// If `n = p^k` for a prime p, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    if is_prime_u64(n) {
        return Some((n, 1));
    }
    for k in 2..64u32 {
        let r = BigUint::from(n).nth_root(k).to_u64()?;
        if r < 2 {
            break;
        }
        if r.checked_pow(k) == Some(n) && is_prime_u64(r) {
            return Some((r, k));
        }
    }
    None
}

/// Non-negative residue of a signed integer modulo m.
pub fn mod_floor(a: &BigInt, m: &BigUint) -> BigUint {
    let m = BigInt::from(m.clone());
    a.mod_floor(&m).to_biguint().expect("non-negative residue")
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
pub fn legendre(a: &BigInt, p: &BigUint) -> i32 {
    let a = mod_floor(a, p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Square root of `a` modulo an odd prime p (Tonelli-Shanks). Returns
/// `None` when `a` is a non-residue.
pub fn sqrt_mod(a: &BigInt, p: &BigUint) -> Option<BigUint> {
    let a = mod_floor(a, p);
    if a.is_zero() {
        return Some(a);
    }
    if p == &BigUint::from(2u32) {
        return Some(a);
    }
    if legendre(&BigInt::from(a.clone()), p) != 1 {
        return None;
    }
    let one = BigUint::one();
    let p_minus_one = p - &one;
    let s = p_minus_one.trailing_zeros().unwrap_or(0);
    let q = &p_minus_one >> s;
    let mut z = BigUint::from(2u32);
    while legendre(&BigInt::from(z.clone()), p) != -1 {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) >> 1), p);
    while !t.is_one() {
        let mut i = 0;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2) % p;
            i += 1;
        }
        let b = c.modpow(&(BigUint::one() << (m - i - 1)), p);
        m = i;
        c = (&b * &b) % p;
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(r)
}

/// Effort bound for integer factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub trial_limit: u64,
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_limit: 1 << 20,
            rho_iterations: 1 << 22,
        }
    }
}

/// Factors a positive integer into `(prime, exponent)` pairs sorted by prime.
pub fn factor_integer(n: &BigUint, budget: FactorBudget) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut rest = n.clone();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let push =
        |p: BigUint, out: &mut Vec<(BigUint, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
            Some(entry) => entry.1 += 1,
            None => out.push((p, 1)),
        };

    let mut d = 2u64;
    while d <= budget.trial_limit {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            push(dd.clone(), &mut out);
        }
        d += if d == 2 { 1 } else { 2 };
    }

    let mut stack = Vec::new();
    if !rest.is_one() {
        stack.push(rest);
    }
    while let Some(m) = stack.pop() {
        if is_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let f = pollard_rho(&m, budget.rho_iterations).ok_or_else(|| {
            Error::BudgetExceeded(format!(
                "Pollard rho gave up on {m} after {} iterations",
                budget.rho_iterations
            ))
        })?;
        stack.push(&m / &f);
        stack.push(f);
    }
    out.sort();
    Ok(out)
}

/// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor.
fn pollard_rho(n: &BigUint, max_iterations: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    let mut spent = 0u64;
    for c in 1u32..64 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x = y.clone();
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        let mut ys = y.clone();
        let m = 128u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (q * abs_diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
            spent += r;
            if spent > max_iterations {
                return None;
            }
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n && !g.is_one() {
            return Some(g);
        }
    }
    None
}

fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a > b {
        a - b
    } else {
        b - a
    }
}

/// Converts an unsigned big integer to a signed one.
pub fn to_signed(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}

/// `n` as a `u64` if it fits.
pub fn small(n: &BigUint) -> Option<u64> {
    n.to_u64()
}
