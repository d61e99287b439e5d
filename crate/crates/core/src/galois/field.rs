//! GF(4^m) as exponent-or-zero over log/antilog tables.

use alloc::vec;
use alloc::vec::Vec;

use super::Gf4;
use crate::error::{Error, Result};
use crate::poly::{BaseField, Poly};
use crate::weights;

/// Largest `m` for which tables are built (`2^16` entries).
pub const MAX_M: u32 = 8;

/// Default primitive polynomials of degree `2m` for `m = 1..=8`, as bitmasks
/// (bit `i` is the coefficient of `z^i`). Each is re-checked at build time.
pub const DEFAULT_MODULI: [u32; 8] = [
    0x7,     // z^2 + z + 1
    0x13,    // z^4 + z + 1
    0x43,    // z^6 + z + 1
    0x11D,   // z^8 + z^4 + z^3 + z^2 + 1
    0x409,   // z^10 + z^3 + 1
    0x1053,  // z^12 + z^6 + z^4 + z + 1
    0x4443,  // z^14 + z^10 + z^6 + z + 1
    0x1100B, // z^16 + z^12 + z^3 + z + 1
];

pub fn default_modulus(m: u32) -> Option<u32> {
    if (1..=MAX_M).contains(&m) {
        Some(DEFAULT_MODULI[m as usize - 1])
    } else {
        None
    }
}

/// Which primitive cube root of unity `w` is sent to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Embedding {
    /// `w -> alpha^(n/3)`.
    #[default]
    Standard,
    /// `w -> alpha^(2n/3)`; conjugates every code.
    Conjugate,
}

/// An element of GF(4^m): zero or `alpha^k` with `k` in `[0, n)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ext(u32);

impl Ext {
    pub const ZERO: Ext = Ext(u32::MAX);
    pub const ONE: Ext = Ext(0);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == u32::MAX
    }

    /// Discrete log, `None` for zero.
    #[inline]
    pub fn exponent(self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(self.0)
        }
    }
}

/// Immutable arithmetic context for GF(4^m).
#[derive(Clone, Debug)]
pub struct FieldContext {
    m: u32,
    n: u32,
    modulus: u32,
    // exp[k] = alpha^k as a bit vector over GF(2), k in [0, n)
    exp: Vec<u32>,
    // log[x] for nonzero x; log[0] unused
    log: Vec<u32>,
    embedding: Embedding,
}

impl FieldContext {
    /// Builds the tables for GF(4^m), verifying that `z` has order exactly
    /// `n = 4^m - 1` modulo the chosen polynomial.
    pub fn build(m: u32, modulus_override: Option<u32>) -> Result<FieldContext> {
        if !(1..=MAX_M).contains(&m) {
            return Err(Error::UnsupportedSize(m));
        }
        let degree = 2 * m;
        let modulus = modulus_override.unwrap_or(DEFAULT_MODULI[m as usize - 1]);
        if modulus >> degree != 1 {
            return Err(Error::BadModulusDegree {
                modulus,
                expected: degree,
            });
        }
        let size = 1u32 << degree;
        let n = size - 1;
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![u32::MAX; size as usize];
        let mut x = 1u32;
        for k in 0..n {
            if k > 0 && x == 1 {
                return Err(Error::NonPrimitiveModulus { modulus, n });
            }
            exp[k as usize] = x;
            log[x as usize] = k;
            x <<= 1;
            if x & size != 0 {
                x ^= modulus;
            }
        }
        if x != 1 {
            return Err(Error::NonPrimitiveModulus { modulus, n });
        }
        Ok(FieldContext {
            m,
            n,
            modulus,
            exp,
            log,
            embedding: Embedding::Standard,
        })
    }

    pub fn with_embedding(mut self, embedding: Embedding) -> FieldContext {
        self.embedding = embedding;
        self
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Multiplicative group order `4^m - 1`, also the code length.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn embedding(&self) -> Embedding {
        self.embedding
    }

    #[inline]
    pub fn alpha(&self) -> Ext {
        self.alpha_pow(1)
    }

    /// `alpha^k` for any integer exponent.
    #[inline]
    pub fn alpha_pow(&self, k: i64) -> Ext {
        Ext(k.rem_euclid(self.n as i64) as u32)
    }

    /// Polynomial-basis bits of an element.
    #[inline]
    pub fn to_bits(&self, a: Ext) -> u32 {
        match a.exponent() {
            None => 0,
            Some(k) => self.exp[k as usize],
        }
    }

    pub fn from_bits(&self, bits: u32) -> Ext {
        if bits == 0 {
            Ext::ZERO
        } else {
            Ext(self.log[bits as usize])
        }
    }

    #[inline]
    pub fn add(&self, a: Ext, b: Ext) -> Ext {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        self.from_bits(self.exp[a.0 as usize] ^ self.exp[b.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: Ext, b: Ext) -> Ext {
        if a.is_zero() || b.is_zero() {
            return Ext::ZERO;
        }
        let s = a.0 + b.0;
        Ext(if s >= self.n { s - self.n } else { s })
    }

    pub fn pow(&self, a: Ext, e: u64) -> Ext {
        match a.exponent() {
            None if e == 0 => Ext::ONE,
            None => Ext::ZERO,
            Some(k) => Ext(((k as u64 * (e % self.n as u64)) % self.n as u64) as u32),
        }
    }

    pub fn inv(&self, a: Ext) -> Result<Ext> {
        match a.exponent() {
            None => Err(Error::DivisionByZero),
            Some(0) => Ok(Ext::ONE),
            Some(k) => Ok(Ext(self.n - k)),
        }
    }

    fn omega_exponent(&self) -> u32 {
        match self.embedding {
            Embedding::Standard => self.n / 3,
            Embedding::Conjugate => 2 * self.n / 3,
        }
    }

    /// Image of a GF(4) element in GF(4^m).
    pub fn embed(&self, x: Gf4) -> Ext {
        let w = self.omega_exponent();
        match x {
            Gf4::ZERO => Ext::ZERO,
            Gf4::ONE => Ext::ONE,
            Gf4::OMEGA => Ext(w),
            _ => Ext((2 * w) % self.n),
        }
    }

    /// Inverse of [`embed`](Self::embed); `None` outside the subfield.
    pub fn restrict(&self, a: Ext) -> Option<Gf4> {
        let w = self.omega_exponent();
        match a.exponent() {
            None => Some(Gf4::ZERO),
            Some(0) => Some(Gf4::ONE),
            Some(k) if k == w => Some(Gf4::OMEGA),
            Some(k) if k == (2 * w) % self.n => Some(Gf4::OMEGA2),
            Some(_) => None,
        }
    }

    /// `prod (x - alpha^e)` over the given exponents, coefficients ascending.
    pub fn root_product<I: IntoIterator<Item = u32>>(&self, exponents: I) -> Vec<Ext> {
        let mut acc = vec![Ext::ONE];
        for e in exponents {
            let root = Ext(e % self.n);
            acc.push(Ext::ZERO);
            for i in (0..acc.len()).rev() {
                let shifted = if i > 0 { acc[i - 1] } else { Ext::ZERO };
                acc[i] = self.add(shifted, self.mul(acc[i], root));
            }
        }
        acc
    }

    /// Maps extension-field coefficients back to GF(4), failing on the first
    /// coefficient outside the embedded subfield.
    pub fn restrict_poly(&self, coeffs: &[Ext]) -> Result<Poly> {
        let mut out = Vec::with_capacity(coeffs.len());
        for &c in coeffs {
            match self.restrict(c) {
                Some(x) => out.push(x),
                None => return Err(Error::NotInSubfield { exponent: c.0 }),
            }
        }
        Ok(Poly::new(BaseField::Gf4, out))
    }

    /// Minimal polynomial over GF(4) of `alpha^j`: the product of `x - alpha^i`
    /// over the 4-cyclotomic coset of `j` modulo `n`.
    pub fn minimal_poly(&self, j: u64) -> Result<Poly> {
        let n = self.n as u64;
        if j >= n {
            return Err(Error::OutOfRange { residue: j, n });
        }
        let coset = weights::cyclotomic_coset(j, 4, n)?;
        let prod = self.root_product(coset.iter().map(|&i| i as u32));
        self.restrict_poly(&prod)
    }

    /// Evaluates a GF(4) (or GF(2)) polynomial at an extension element.
    pub fn eval(&self, p: &Poly, x: Ext) -> Ext {
        let mut acc = Ext::ZERO;
        for &c in p.coeffs().iter().rev() {
            acc = self.add(self.mul(acc, x), self.embed(c));
        }
        acc
    }
}
