//! GF(4) = {0, 1, w, W} with w^2 + w + 1 = 0 and W = w^2 = w + 1.
//!
//! An element is stored as two bits `x0 + x1*w`: `0 = 00`, `1 = 01`,
//! `w = 10`, `W = 11` (bit 0 is `x0`). Addition is XOR of the bits.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf4(u8);

// MUL[a][b] in the two-bit encoding.
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    /// The fixed root `w` of `z^2 + z + 1`.
    pub const OMEGA: Gf4 = Gf4(2);
    /// `W = w^2 = w + 1`.
    pub const OMEGA2: Gf4 = Gf4(3);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    #[inline]
    pub const fn from_bits(bits: u8) -> Gf4 {
        Gf4(bits & 3)
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// True for 0 and 1.
    #[inline]
    pub const fn is_binary(self) -> bool {
        self.0 < 2
    }

    pub fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            1 => Some(Gf4::ONE),
            2 => Some(Gf4::OMEGA2),
            _ => Some(Gf4::OMEGA),
        }
    }

    /// Frobenius `x -> x^2`; swaps `w` and `W`.
    #[inline]
    pub fn square(self) -> Gf4 {
        self * self
    }

    /// Trace to GF(2): `x + x^2`. With `x = x0 + x1*w` this is `x1`.
    #[inline]
    pub fn trace(self) -> u8 {
        let t = self + self.square();
        debug_assert!(t.is_binary());
        t.0
    }

    pub fn to_char(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }

    pub fn from_char(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA2),
            _ => None,
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_relations() {
        let w = Gf4::OMEGA;
        let wb = Gf4::OMEGA2;
        assert_eq!(w * wb, Gf4::ONE);
        assert_eq!(w + wb, Gf4::ONE);
        assert_eq!(w * w, wb);
        assert_eq!(w * w + w + Gf4::ONE, Gf4::ZERO);
    }

    #[test]
    fn characteristic_two() {
        for x in Gf4::ALL {
            assert_eq!(x + x, Gf4::ZERO);
        }
    }

    #[test]
    fn trace_values() {
        assert_eq!(Gf4::ZERO.trace(), 0);
        assert_eq!(Gf4::ONE.trace(), 0);
        assert_eq!(Gf4::OMEGA.trace(), 1);
        assert_eq!(Gf4::OMEGA2.trace(), 1);
    }

    #[test]
    fn trace_is_additive() {
        for x in Gf4::ALL {
            for y in Gf4::ALL {
                assert_eq!(x.trace() ^ y.trace(), (x + y).trace());
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in Gf4::ALL {
            for b in Gf4::ALL {
                assert_eq!(a * b, b * a);
                for c in Gf4::ALL {
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), Gf4::ONE);
            }
        }
        assert_eq!(Gf4::ZERO.inv(), None);
    }
}
