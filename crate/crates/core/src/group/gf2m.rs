//! Arithmetic in GF(2^m), m <= 5, with elements stored as bit-packed
//! polynomials over GF(2).

use crate::error::{Error, Result};

/// Fixed reduction polynomials, indexed by degree. Bit i is the coefficient
/// of x^i.
const MODULI: [u16; 6] = [
    0,
    0b11,     // x + 1
    0b111,    // x^2 + x + 1
    0b1011,   // x^3 + x + 1
    0b10011,  // x^4 + x + 1
    0b100101, // x^5 + x^2 + 1
];

#[derive(Debug, Clone)]
pub struct Gf2m {
    degree: u32,
    modulus: u16,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

fn poly_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

fn clmul(a: u32, b: u32) -> u32 {
    let mut acc = 0;
    for i in 0..16 {
        if b >> i & 1 == 1 {
            acc ^= a << i;
        }
    }
    acc
}

/// Irreducible iff no polynomial of degree 1..=deg/2 divides it.
pub(crate) fn is_irreducible(poly: u32) -> bool {
    let d = poly_degree(poly);
    if d < 1 {
        return false;
    }
    for cand in 2u32..(1 << (d / 2 + 1)) {
        let dc = poly_degree(cand);
        if dc >= 1 && dc <= d / 2 && poly_rem(poly, cand) == 0 {
            return false;
        }
    }
    true
}

impl Gf2m {
    pub fn new(degree: u32) -> Result<Gf2m> {
        if !(1..=5).contains(&degree) {
            return Err(Error::Unsupported(format!("GF(2^{degree})")));
        }
        let modulus = MODULI[degree as usize];
        if !is_irreducible(modulus as u32) {
            return Err(Error::Internal(format!(
                "field polynomial {modulus:#b} is reducible"
            )));
        }
        let q = 1usize << degree;
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                mul[a * q + b] = poly_rem(clmul(a as u32, b as u32), modulus as u32) as u8;
            }
        }
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8;
        }
        Ok(Gf2m {
            degree,
            modulus,
            mul,
            inv,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        1 << self.degree
    }

    pub fn modulus(&self) -> u16 {
        self.modulus
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.size() + b as usize]
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        a ^ b
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// The Frobenius map a -> a^2.
    #[inline]
    pub fn frobenius(&self, a: u8) -> u8 {
        self.mul(a, a)
    }
}
