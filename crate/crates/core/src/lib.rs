//! RSA over principal ideals of Euclidean rings.
//!
//! - [`ring`]: elements of Z, Z[i], Z[sqrt(k)] (k = -2, 2, 3) and GF(q)[x]
//! - [`primes`], [`factor`]: prime elements and factorization
//! - [`quotient`]: principal ideals, residue systems and modular arithmetic
//! - [`numtheory`]: comaximality, CRT, ideal products and Euler's function
//! - [`rsa`]: key generation, block codec, encryption and RSA-ideal checks

pub mod error;
pub mod factor;
pub mod gf;
pub mod intmath;
pub mod numtheory;
pub mod poly;
pub mod primes;
pub mod quotient;
pub mod ring;
pub mod rsa;

pub use error::{Error, Result};
pub use factor::{factor_element, factor_element_with, Factorization};
pub use numtheory::{
    are_comaximal, crt_solve, ideal_intersection, ideal_product, phi_brute, phi_closed,
    CongruenceSystem,
};
pub use primes::{is_prime_element, random_prime_element};
pub use quotient::{
    element_at, index_of, mod_pow, reduce, residue_box, PrincipalIdeal, ResidueBox,
};
pub use ring::{arith, ArithOp, Element, RingId};
pub use rsa::{PrivateKey, PublicKey, RsaVerdict};
