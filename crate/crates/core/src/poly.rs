//! Dense univariate polynomials over GF(2) and GF(4), and generator
//! polynomials synthesized from defining sets.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::galois::{FieldContext, Gf4};
use crate::weights::DefiningSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Gf2,
    Gf4,
}

impl BaseField {
    pub fn order(self) -> u32 {
        match self {
            BaseField::Gf2 => 2,
            BaseField::Gf4 => 4,
        }
    }

    pub fn from_order(q: u32) -> Option<BaseField> {
        match q {
            2 => Some(BaseField::Gf2),
            4 => Some(BaseField::Gf4),
            _ => None,
        }
    }
}

/// Coefficients ascending, no trailing zeros; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: BaseField,
    coeffs: Vec<Gf4>,
}

impl Poly {
    /// Canonicalizes. Panics if a GF(2) polynomial gets a non-binary coefficient.
    pub fn new(field: BaseField, mut coeffs: Vec<Gf4>) -> Poly {
        while coeffs.last() == Some(&Gf4::ZERO) {
            coeffs.pop();
        }
        if field == BaseField::Gf2 {
            assert!(
                coeffs.iter().all(|c| c.is_binary()),
                "non-binary coefficient in GF(2) polynomial"
            );
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: BaseField) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: BaseField) -> Poly {
        Poly {
            field,
            coeffs: vec![Gf4::ONE],
        }
    }

    /// `c x^k`.
    pub fn monomial(field: BaseField, c: Gf4, k: usize) -> Poly {
        let mut coeffs = vec![Gf4::ZERO; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: BaseField, n: usize) -> Poly {
        let mut coeffs = vec![Gf4::ZERO; n + 1];
        coeffs[0] = Gf4::ONE;
        coeffs[n] = Gf4::ONE;
        Poly { field, coeffs }
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn coeffs(&self) -> &[Gf4] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Gf4 {
        self.coeffs.get(i).copied().unwrap_or(Gf4::ZERO)
    }

    pub fn leading(&self) -> Gf4 {
        self.coeffs.last().copied().unwrap_or(Gf4::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Gf4::ONE
    }

    /// Re-tags a polynomial with binary coefficients as GF(2), or widens to GF(4).
    pub fn over(&self, field: BaseField) -> Option<Poly> {
        if field == BaseField::Gf2 && !self.coeffs.iter().all(|c| c.is_binary()) {
            return None;
        }
        Some(Poly {
            field,
            coeffs: self.coeffs.clone(),
        })
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Poly::new(self.field, coeffs))
    }

    pub fn scale(&self, c: Gf4) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let mut out = vec![Gf4::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Poly::new(self.field, out))
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut quot = vec![Gf4::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] += c * d;
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(self.field, quot), Poly::new(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn monic(&self) -> Poly {
        match self.leading().inv() {
            None => self.clone(),
            Some(inv) => self.scale(inv),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic lcm; zero if either input is zero.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let g = self.gcd(other)?;
        let (q, r) = self.mul(other)?.divmod(&g)?;
        debug_assert!(r.is_zero());
        Ok(q.monic())
    }

    /// `x^deg a * a(1/x)`, made monic when `a(0) != 0`.
    pub fn reciprocal(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let p = Poly::new(self.field, coeffs);
        if self.coeff(0).is_zero() {
            p
        } else {
            p.monic()
        }
    }

    pub fn eval(&self, x: Gf4) -> Gf4 {
        self.coeffs.iter().rev().fold(Gf4::ZERO, |acc, &c| acc * x + c)
    }

    /// Comma-separated ascending coefficients over `{0,1,w,W}`, e.g. `1,w,1`.
    /// The zero polynomial is `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::with_capacity(2 * self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push(c.to_char());
        }
        s
    }

    pub fn parse_text(field: BaseField, text: &str) -> Result<Poly> {
        let mut coeffs = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let mut chars = tok.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(Error::InvalidSymbol(tok.chars().next().unwrap_or(' '))),
            };
            let x = Gf4::from_char(c).ok_or(Error::InvalidSymbol(c))?;
            if field == BaseField::Gf2 && !x.is_binary() {
                return Err(Error::InvalidSymbol(c));
            }
            coeffs.push(x);
        }
        Ok(Poly::new(field, coeffs))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}]({})", self.field, self.to_text())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `prod_{t in T} (x - alpha^t)`, built coset by coset from minimal
/// polynomials over the field named by `T.q()`. Every coefficient of every
/// factor is checked to lie in that subfield.
pub fn generator_from_defining_set(t: &DefiningSet, ctx: &FieldContext) -> Result<Poly> {
    let field = BaseField::from_order(t.q()).ok_or(Error::WrongAlphabet { expected: 4 })?;
    if t.n() != ctx.n() as u64 {
        return Err(Error::LengthMismatch {
            expected: ctx.n() as usize,
            found: t.n() as usize,
        });
    }
    let q = t.q() as u64;
    let n = t.n();
    for &s in t.members() {
        if !t.contains(s * q % n) {
            return Err(Error::NotClosed { member: s });
        }
    }
    let mut g = Poly::one(field);
    for leader in t.coset_leaders() {
        let coset = crate::weights::cyclotomic_coset(leader, q, n)?;
        let factor = ctx.root_product(coset.iter().map(|&i| i as u32));
        let factor = ctx.restrict_poly(&factor)?;
        let factor = factor.over(field).ok_or(Error::NotInSubfield {
            exponent: leader as u32,
        })?;
        g = g.mul(&factor)?;
    }
    Ok(g)
}
