//! Exact dyadic rationals `num / 2^log2den`. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    log2den: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, log2den: u32) -> Dyadic {
        let mut d = Dyadic { num: num.into(), log2den };
        d.normalize();
        d
    }

    pub fn zero() -> Dyadic {
        Dyadic { num: BigInt::zero(), log2den: 0 }
    }

    pub fn integer(n: impl Into<BigInt>) -> Dyadic {
        Dyadic::new(n, 0)
    }

    /// `1 / 2^k`
    pub fn half_power(k: u32) -> Dyadic {
        Dyadic { num: BigInt::from(1), log2den: k }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.log2den = 0;
            return;
        }
        let two = BigInt::from(2);
        while self.log2den > 0 && self.num.mod_floor(&two).is_zero() {
            self.num /= &two;
            self.log2den -= 1;
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn log2den(&self) -> u32 {
        self.log2den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &BigInt) -> Dyadic {
        Dyadic::new(&self.num * c, self.log2den)
    }

    pub fn halved(&self, k: u32) -> Dyadic {
        Dyadic::new(self.num.clone(), self.log2den + k)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let k = self.log2den.max(rhs.log2den);
        let a = &self.num << (k - self.log2den);
        let b = &rhs.num << (k - rhs.log2den);
        Dyadic::new(a + b, k)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num.clone(), log2den: self.log2den }
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.log2den + rhs.log2den)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log2den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.log2den)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({})", self)
    }
}
