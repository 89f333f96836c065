//! Arithmetic in GF(2^8) with reduction polynomial x^8 + x^4 + x^3 + x + 1.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Sub};

/// Reduction polynomial, including the x^8 term.
pub const POLY: u16 = 0x11B;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf256(pub u8);

impl Gf256 {
    pub const ZERO: Gf256 = Gf256(0);
    pub const ONE: Gf256 = Gf256(1);

    /// Shift-and-reduce multiplication.
    pub const fn mul(self, other: Gf256) -> Gf256 {
        let (mut a, mut b, mut acc) = (self.0, other.0, 0u8);
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            let carry = a & 0x80 != 0;
            a <<= 1;
            if carry {
                a ^= (POLY & 0xFF) as u8;
            }
            b >>= 1;
        }
        Gf256(acc)
    }

    pub const fn pow(self, mut e: u32) -> Gf256 {
        let (mut base, mut acc) = (self, Gf256::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub const fn inv(self) -> Option<Gf256> {
        if self.0 == 0 {
            None
        } else {
            // a^254 = a^-1 since the multiplicative group has order 255
            Some(self.pow(254))
        }
    }
}

pub fn gf_mul(a: Gf256, b: Gf256) -> Gf256 {
    a.mul(b)
}

impl fmt::Debug for Gf256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf256({:#04x})", self.0)
    }
}

impl From<u8> for Gf256 {
    fn from(b: u8) -> Self {
        Gf256(b)
    }
}

impl Add for Gf256 {
    type Output = Gf256;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf256) -> Gf256 {
        Gf256(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf256 {
    fn add_assign(&mut self, rhs: Gf256) {
        self.0 ^= rhs.0;
    }
}

impl Sub for Gf256 {
    type Output = Gf256;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Gf256) -> Gf256 {
        Gf256(self.0 ^ rhs.0)
    }
}

impl Mul for Gf256 {
    type Output = Gf256;
    fn mul(self, rhs: Gf256) -> Gf256 {
        Gf256::mul(self, rhs)
    }
}

impl MulAssign for Gf256 {
    fn mul_assign(&mut self, rhs: Gf256) {
        *self = Gf256::mul(*self, rhs);
    }
}

impl Div for Gf256 {
    type Output = Gf256;
    /// Panics on division by zero.
    fn div(self, rhs: Gf256) -> Gf256 {
        self * rhs.inv().expect("division by zero in GF(256)")
    }
}
