//! Factorization of elements into pairwise non-associate primes.
//!
//! Z and the quadratic rings factor the norm over Z and lift each rational
//! prime to ring primes through gcd computations. GF(q)[x] uses square-free
//! decomposition, distinct-degree and Cantor-Zassenhaus equal-degree
//! splitting with a fixed internal seed, so results are deterministic.

use std::cmp::Ordering;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::intmath::{factor_integer, to_signed, FactorBudget};
use crate::poly;
use crate::primes::{is_inert, prime_above};
use crate::ring::{Element, RingId};

/// `element = unit * prod(prime^exponent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Element,
    pub factors: Vec<(Element, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn recompose(&self) -> Element {
        self.factors.iter().fold(self.unit.clone(), |acc, (p, e)| {
            acc.mul(&p.pow(*e as u64)).expect("factors share the ring")
        })
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

pub fn factor_element(m: &Element) -> Result<Factorization> {
    factor_element_with(m, FactorBudget::default())
}

pub fn factor_element_with(m: &Element, budget: FactorBudget) -> Result<Factorization> {
    if m.is_zero() || m.is_unit() {
        return Err(Error::NotApplicable);
    }
    let ring = m.ring().clone();
    let mut factors = match &ring {
        RingId::Integer => factor_integer(&m.norm()?, budget)?
            .into_iter()
            .map(|(p, e)| (Element::integer(to_signed(&p)), e))
            .collect(),
        RingId::Gaussian | RingId::Quadratic(_) => factor_quadratic(m, budget)?,
        RingId::PolyOverGF(field) => {
            let (monic, _) = poly::monic(field, m.as_poly().unwrap());
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            let mut out: Vec<(poly::Poly, u32)> = Vec::new();
            for (g, e) in poly::factor(field, &monic, &mut rng) {
                match out.iter_mut().find(|(h, _)| *h == g) {
                    Some(entry) => entry.1 += e,
                    None => out.push((g, e)),
                }
            }
            out.into_iter()
                .map(|(g, e)| Ok((Element::poly(&ring, &g)?, e)))
                .collect::<Result<Vec<_>>>()?
        }
    };
    factors.sort_by(|a, b| compare_elements(&a.0, &b.0));

    let product = factors.iter().fold(Element::one(&ring), |acc, (p, e)| {
        acc.mul(&p.pow(*e as u64)).unwrap()
    });
    let unit = m
        .exact_div(&product)?
        .filter(|u| u.is_unit())
        .ok_or_else(|| Error::FactoringFailed(format!("factors of {m} do not recompose")))?;
    Ok(Factorization { unit, factors })
}

fn factor_quadratic(m: &Element, budget: FactorBudget) -> Result<Vec<(Element, u32)>> {
    let ring = m.ring().clone();
    let k = ring.quadratic_k().unwrap();
    let mut rest = m.clone();
    let mut out = Vec::new();
    for (p, _) in factor_integer(&m.norm()?, budget)? {
        let candidates = if is_inert(k, &p) {
            vec![Element::from_int(&ring, to_signed(&p))]
        } else {
            let pi = prime_above(&ring, &p)?
                .ok_or_else(|| Error::FactoringFailed(format!("no prime above {p} in {ring}")))?;
            let conj = pi.conjugate().canonical();
            if conj.is_associate(&pi)? {
                vec![pi]
            } else {
                vec![pi, conj]
            }
        };
        for pi in candidates {
            let mut e = 0;
            while let Some(q) = rest.exact_div(&pi)? {
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((pi, e));
            }
        }
    }
    if !rest.is_unit() {
        return Err(Error::FactoringFailed(format!(
            "cofactor {rest} of {m} is not a unit"
        )));
    }
    Ok(out)
}

/// Deterministic order: by norm, then coordinates.
pub fn compare_elements(a: &Element, b: &Element) -> Ordering {
    let na = a.norm().unwrap_or_else(|_| BigUint::from(0u32));
    let nb = b.norm().unwrap_or_else(|_| BigUint::from(0u32));
    na.cmp(&nb).then_with(|| a.coords().cmp(&b.coords()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::is_prime_element;

    #[test]
    fn integer_example() {
        let f = factor_element(&Element::integer(12)).unwrap();
        assert_eq!(
            f.factors,
            vec![(Element::integer(2), 2), (Element::integer(3), 1)]
        );
        assert!(f.unit.is_one());
        let f = factor_element(&Element::integer(-30)).unwrap();
        assert_eq!(f.unit, Element::integer(-1));
        assert_eq!(f.recompose(), Element::integer(-30));
    }

    #[test]
    fn gaussian_five() {
        let f = factor_element(&Element::gaussian(5, 0)).unwrap();
        assert_eq!(f.factors.len(), 2);
        let (a, b) = (&f.factors[0].0, &f.factors[1].0);
        assert!(!a.is_associate(b).unwrap());
        for (p, e) in &f.factors {
            assert_eq!(*e, 1);
            assert!(
                p.is_associate(&Element::gaussian(2, 1)).unwrap()
                    || p.is_associate(&Element::gaussian(2, -1)).unwrap()
            );
        }
        assert_eq!(f.recompose(), Element::gaussian(5, 0));
    }

    #[test]
    fn polynomial_example() {
        let r = RingId::poly(2).unwrap();
        let f = factor_element(&Element::poly(&r, &[0, 1, 1]).unwrap()).unwrap();
        assert_eq!(
            f.factors,
            vec![
                (Element::poly(&r, &[0, 1]).unwrap(), 1),
                (Element::poly(&r, &[1, 1]).unwrap(), 1)
            ]
        );
    }

    #[test]
    fn units_rejected() {
        assert_eq!(
            factor_element(&Element::integer(-1)),
            Err(Error::NotApplicable)
        );
        assert_eq!(
            factor_element(&Element::integer(0)),
            Err(Error::NotApplicable)
        );
    }

    #[test]
    fn recomposes_in_every_ring() {
        let rings = [
            RingId::Integer,
            RingId::Gaussian,
            RingId::Quadratic(-2),
            RingId::Quadratic(2),
            RingId::Quadratic(3),
        ];
        for ring in &rings {
            for a in -12i64..=12 {
                for b in -12i64..=12 {
                    let m = match ring {
                        RingId::Integer => Element::integer(a * 25 + b),
                        _ => Element::quadratic(ring, a, b).unwrap(),
                    };
                    if m.is_zero() || m.is_unit() {
                        continue;
                    }
                    let f = factor_element(&m).unwrap();
                    assert_eq!(f.recompose(), m);
                    for (i, (p, _)) in f.factors.iter().enumerate() {
                        assert!(is_prime_element(p).unwrap(), "{ring}: {p} in {m}");
                        for (q, _) in &f.factors[i + 1..] {
                            assert!(!p.is_associate(q).unwrap());
                        }
                    }
                }
            }
        }
    }
}
