//! Exact Gaussian-rational scalars.
//!
//! Real elements simply carry a zero imaginary part; the complex part is
//! only exercised by the gauge action at roots of unity.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Scalar {
    pub re: Rational64,
    pub im: Rational64,
}

impl Scalar {
    pub fn new(re: Rational64, im: Rational64) -> Self {
        Scalar { re, im }
    }

    pub fn int(n: i64) -> Self {
        Scalar::new(Rational64::from_integer(n), Rational64::zero())
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::new(Rational64::new(num, den), Rational64::zero())
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational64::zero(), Rational64::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(self) -> Self {
        Scalar::new(self.re, -self.im)
    }

    /// `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        let norm = self.re * self.re + self.im * self.im;
        if norm.is_zero() {
            return None;
        }
        Some(Scalar::new(self.re / norm, -self.im / norm))
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inverse()? } else { self };
        let mut acc = Scalar::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * base;
        }
        Some(acc)
    }

    /// Real and non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.im.is_zero() && self.re >= Rational64::zero()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational64> for Scalar {
    fn from(r: Rational64) -> Self {
        Scalar::new(r, Rational64::zero())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar::new(self.re + o.re, self.im + o.im)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self = *self + o;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        Scalar::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im.is_one() => f.write_str("i"),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => write!(f, "({}+{}i)", self.re, self.im),
        }
    }
}
