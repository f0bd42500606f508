//! Arithmetic modulo the prime 2^64 - 59.

use std::ops::{Add, Mul, Neg, Sub};

pub const MODULUS: u64 = 0xFFFF_FFFF_FFFF_FFC5;

/// 2^64 mod MODULUS.
const FOLD: u128 = 59;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Fp(u64);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn new(v: u64) -> Self {
        Fp(if v >= MODULUS { v - MODULUS } else { v })
    }

    pub fn from_i64(v: i64) -> Self {
        if v >= 0 {
            Fp::new(v as u64)
        } else {
            -Fp::new(v.unsigned_abs())
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut exp: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Fp {
        assert!(!self.is_zero(), "zero has no inverse");
        self.pow(MODULUS - 2)
    }
}

fn reduce(x: u128) -> u64 {
    let folded = (x >> 64) * FOLD + (x & u64::MAX as u128);
    let folded = (folded >> 64) * FOLD + (folded & u64::MAX as u128);
    let mut r = folded;
    while r >= MODULUS as u128 {
        r -= MODULUS as u128;
    }
    r as u64
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (s, overflow) = self.0.overflowing_add(rhs.0);
        if overflow || s >= MODULUS {
            Fp(s.wrapping_sub(MODULUS))
        } else {
            Fp(s)
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp(self.0 + (MODULUS - rhs.0))
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(MODULUS - self.0)
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(reduce(self.0 as u128 * rhs.0 as u128))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn slow_mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % MODULUS as u128) as u64
    }

    proptest! {
        #[test]
        fn mul_matches_u128_remainder(a in 0..MODULUS, b in 0..MODULUS) {
            prop_assert_eq!((Fp::new(a) * Fp::new(b)).value(), slow_mul(a, b));
        }

        #[test]
        fn add_sub_roundtrip(a in 0..MODULUS, b in 0..MODULUS) {
            let (x, y) = (Fp::new(a), Fp::new(b));
            prop_assert_eq!(x + y - y, x);
            prop_assert_eq!((x + y).value() as u128, (a as u128 + b as u128) % MODULUS as u128);
        }

        #[test]
        fn inverse_is_inverse(a in 1..MODULUS) {
            prop_assert_eq!(Fp::new(a) * Fp::new(a).inverse(), Fp::ONE);
        }
    }

    #[test]
    fn negative_integers() {
        assert_eq!(Fp::from_i64(-3) + Fp::from_i64(3), Fp::ZERO);
        assert_eq!(Fp::from_i64(-1).value(), MODULUS - 1);
    }
}
