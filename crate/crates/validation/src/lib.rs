//! Fixtures shared by the acceptance suite: the ring families it sweeps.

use cirsa_core::RingId;
use cirsa_lab::RingKind;

/// Every cryptosystem ring family, with small and composite field orders.
pub const CRYPTO_RINGS: [&str; 9] = [
    "integer",
    "gaussian",
    "quadratic:-2",
    "quadratic:2",
    "quadratic:3",
    "poly:2",
    "poly:3",
    "poly:4",
    "poly:9",
];

pub fn ring(tag: &str) -> RingId {
    tag.parse().expect("fixture ring tags are valid")
}

/// The finite rings on which the RSA-ideal characterization is checked.
pub fn theorem5_suite() -> Vec<RingKind> {
    [
        "zmod:360",
        "zmod:32",
        "product(zmod:2,zmod:8)",
        "gf4",
        "matrix2:gf2",
        "product(zmod:6,gf4)",
    ]
    .iter()
    .map(|s| s.parse().expect("fixture specs are valid"))
    .collect()
}
