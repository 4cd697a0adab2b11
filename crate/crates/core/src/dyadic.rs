//! Exact dyadic rationals `num / 2^exp`.
//!
//! All measure bookkeeping and the `Z[1/2]` coefficient fixtures run on this
//! type; no floating point is used anywhere in the crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dyadic rational in the normal form `num / 2^exp` with `exp == 0` or
/// `num` odd (and `0` stored as `0 / 2^0`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    /// `num / 2^exp`, normalised.
    pub fn new(num: i64, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic { num: n, exp: 0 }
    }

    /// `1 / 2^exp`, the Lebesgue measure of a depth-`exp` cell.
    pub fn unit(exp: u32) -> Self {
        Dyadic { num: 1, exp }
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num % 2 == 0 {
            self.num /= 2;
            self.exp -= 1;
        }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Value times `2^k` (`k` may be negative).
    pub fn scale_pow2(&self, k: i64) -> Self {
        if self.num == 0 {
            return *self;
        }
        let e = self.exp as i64 - k;
        if e >= 0 {
            Dyadic::new(self.num, e as u32)
        } else {
            let shift = (-e) as u32;
            let num = self
                .num
                .checked_shl(shift)
                .expect("dyadic overflow in scale_pow2");
            Dyadic { num, exp: 0 }
        }
    }

    pub fn halve(&self) -> Self {
        self.scale_pow2(-1)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let a = self.num as i128 * (1i128 << (exp - self.exp));
        let b = rhs.num as i128 * (1i128 << (exp - rhs.exp));
        let sum = a + b;
        let num = i64::try_from(sum).expect("dyadic overflow in add");
        Dyadic::new(num, exp)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        let prod = self.num as i128 * rhs.num as i128;
        let num = i64::try_from(prod).expect("dyadic overflow in mul");
        Dyadic::new(num, self.exp + rhs.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        assert_eq!(Dyadic::new(4, 2), Dyadic::from_int(1));
        assert_eq!(Dyadic::new(6, 1), Dyadic::from_int(3));
        assert_eq!(Dyadic::new(0, 7), Dyadic::ZERO);
        assert_eq!(Dyadic::new(3, 2).exponent(), 2);
    }

    #[test]
    fn arithmetic() {
        let half = Dyadic::unit(1);
        let quarter = Dyadic::unit(2);
        assert_eq!(half + quarter, Dyadic::new(3, 2));
        assert_eq!(half - half, Dyadic::ZERO);
        assert_eq!(half * half, quarter);
        assert_eq!(Dyadic::from_int(3).halve(), Dyadic::new(3, 1));
        assert_eq!(Dyadic::new(3, 1).scale_pow2(1), Dyadic::from_int(3));
    }
}
