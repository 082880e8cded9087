//! Textual ring recipes: `zmod:12`, `gf4`, `gf3^2`, `matrix2:gf2`,
//! `triangular2:zmod:4`, `product(zmod:6,gf4)`.

use std::str::FromStr;

use cirsa_core::intmath::prime_power;

use crate::error::LabError;
use crate::ring::RingKind;

impl FromStr for RingKind {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let s = s.trim();
        let bad = || LabError::Spec(format!("cannot parse ring spec {s:?}"));
        if let Some(n) = s.strip_prefix("zmod:") {
            return n.parse().map(RingKind::ZMod).map_err(|_| bad());
        }
        if let Some(base) = s.strip_prefix("matrix2:") {
            return Ok(RingKind::Matrix2(Box::new(base.parse()?)));
        }
        if let Some(base) = s.strip_prefix("triangular2:") {
            return Ok(RingKind::Triangular2(Box::new(base.parse()?)));
        }
        if let Some(q) = s.strip_prefix("gf") {
            let q = match q.split_once('^') {
                Some((p, k)) => {
                    let p: u64 = p.parse().map_err(|_| bad())?;
                    let k: u32 = k.parse().map_err(|_| bad())?;
                    p.checked_pow(k).ok_or_else(bad)?
                }
                None => q.parse().map_err(|_| bad())?,
            };
            if prime_power(q).is_none() {
                return Err(LabError::Spec(format!("{q} is not a prime power")));
            }
            return Ok(RingKind::Gf(q));
        }
        if let Some(inner) = s.strip_prefix("product(").and_then(|r| r.strip_suffix(')')) {
            let mut parts = Vec::new();
            let (mut depth, mut start) = (0usize, 0);
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.checked_sub(1).ok_or_else(bad)?,
                    ',' if depth == 0 => {
                        parts.push(inner[start..i].parse()?);
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            if depth != 0 {
                return Err(bad());
            }
            parts.push(inner[start..].parse()?);
            return Ok(RingKind::Product(parts));
        }
        Err(bad())
    }
}
