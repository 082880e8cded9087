//! Byte strings <-> residue indices.
//!
//! With capacity `C` (the largest natural with `256^(C+1) <= |W|`), a block
//! carrying `j <= C` payload bytes `b_1..b_j` is the index
//! `j * 256^C + sum(b_i * 256^(C - i))`: the top base-256 digit holds the
//! length and the payload fills the next digits from the top down.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::quotient::ResidueBox;

const MIN_BOX: u32 = 65536;

/// Payload bytes per block for a residue system of this size.
pub fn block_capacity(size: &BigUint) -> Result<usize> {
    if size < &BigUint::from(MIN_BOX) {
        return Err(Error::ModulusTooSmall(size.to_string()));
    }
    // 256^(C+1) <= size  <=>  C + 1 <= floor(log_256 size)
    let bytes = (size.bits() as usize - 1) / 8;
    Ok(bytes - 1)
}

pub fn encode_bytes(payload: &[u8], rbox: &ResidueBox) -> Result<Vec<BigUint>> {
    let cap = block_capacity(rbox.size())?;
    Ok(payload
        .chunks(cap)
        .map(|chunk| {
            let mut digits = vec![0u8; cap + 1];
            // big-endian: digits[0] is the 256^C place
            digits[0] = chunk.len() as u8;
            digits[1..=chunk.len()].copy_from_slice(chunk);
            BigUint::from_bytes_be(&digits)
        })
        .collect())
}

pub fn decode_bytes(blocks: &[BigUint], rbox: &ResidueBox) -> Result<Vec<u8>> {
    let cap = block_capacity(rbox.size())?;
    let place = BigUint::from(256u32).pow(cap as u32);
    let mut out = Vec::with_capacity(blocks.len() * cap);
    for v in blocks {
        let (len, body) = v.div_rem(&place);
        let len = len
            .to_usize()
            .filter(|&j| j >= 1 && j <= cap)
            .ok_or_else(|| Error::MalformedBlock(v.to_string()))?;
        let mut digits = body.to_bytes_be();
        if body.is_zero() {
            digits.clear();
        }
        let mut padded = vec![0u8; cap - digits.len()];
        padded.extend_from_slice(&digits);
        if padded[len..].iter().any(|&b| b != 0) {
            return Err(Error::MalformedBlock(v.to_string()));
        }
        out.extend_from_slice(&padded[..len]);
    }
    Ok(out)
}
