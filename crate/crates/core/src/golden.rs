//! Exact arithmetic in `Z[φ] = { a + bφ : a, b ∈ Z }` with `φ = (1+√5)/2`.
//!
//! Only the operations the golden potential needs are provided: addition,
//! subtraction, multiplication by `φ`, powers of `φ` and an exact total order.
//! `1/φ` is never formed as a rational; it is the element `φ − 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::euclid::fib;
use crate::{Error, Natural, Result};

/// Double-precision value of `φ`.
pub const PHI_F64: f64 = 1.618_033_988_749_895;

/// The element `a + bφ` of `Z[φ]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    a: BigInt,
    b: BigInt,
}

/// A floating-point rendering of a [`GoldenInt`]; `reliable` is false once a
/// coefficient leaves the exactly representable `f64` integer range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatApprox {
    pub value: f64,
    pub reliable: bool,
}

impl GoldenInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        GoldenInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        GoldenInt::default()
    }

    pub fn one() -> Self {
        GoldenInt::new(1, 0)
    }

    pub fn phi() -> Self {
        GoldenInt::new(0, 1)
    }

    /// `1/φ = φ − 1`.
    pub fn phi_inverse() -> Self {
        GoldenInt::new(-1, 1)
    }

    /// Rational (integer) part.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of `φ`.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `φ·(a + bφ) = b + (a + b)φ`, using `φ² = φ + 1`.
    pub fn mul_phi(&self) -> Self {
        GoldenInt {
            a: self.b.clone(),
            b: &self.a + &self.b,
        }
    }

    /// `φ^m = F_{m−1} + F_m·φ` for `m ≥ 1`.
    pub fn phi_pow(m: u64) -> Result<Self> {
        if m < 1 {
            return Err(Error::OutOfRange {
                what: "exponent",
                min: 1,
                got: m,
            });
        }
        Ok(GoldenInt::new(fib(m - 1), fib(m)))
    }

    /// Exact sign of the real number `a + bφ`.
    pub fn sign(&self) -> Sign {
        let (a, b) = (&self.a, &self.b);
        match (a.sign(), b.sign()) {
            (Sign::NoSign, Sign::NoSign) => Sign::NoSign,
            (Sign::Plus, Sign::Plus | Sign::NoSign) | (Sign::NoSign, Sign::Plus) => Sign::Plus,
            (Sign::Minus, Sign::Minus | Sign::NoSign) | (Sign::NoSign, Sign::Minus) => Sign::Minus,
            // For rational t > 0: t < φ iff t² − t − 1 < 0. Never zero since φ is irrational.
            (Sign::Minus, Sign::Plus) => {
                // |a| < bφ  iff  a² − |a|·b − b² < 0
                let abs_a = a.abs();
                if a * a - &abs_a * b - b * b < BigInt::zero() {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
            (Sign::Plus, Sign::Minus) => {
                // a > |b|φ  iff  a² − a·|b| − b² > 0
                let abs_b = b.abs();
                if a * a - a * &abs_b - b * b > BigInt::zero() {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
        }
    }

    /// Approximate real value, for display only.
    pub fn to_f64(&self) -> FloatApprox {
        const EXACT_LIMIT: u64 = 1 << f64::MANTISSA_DIGITS;
        let reliable = [&self.a, &self.b]
            .iter()
            .all(|c| c.magnitude() <= &Natural::from(EXACT_LIMIT));
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        FloatApprox {
            value: a + b * PHI_F64,
            reliable,
        }
    }
}

impl From<Natural> for GoldenInt {
    fn from(n: Natural) -> Self {
        GoldenInt {
            a: BigInt::from(n),
            b: BigInt::zero(),
        }
    }
}

impl Add for &GoldenInt {
    type Output = GoldenInt;

    fn add(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;

    fn add(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for &GoldenInt {
    type Output = GoldenInt;

    fn sub(self, rhs: &GoldenInt) -> GoldenInt {
        GoldenInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;

    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;

    fn neg(self) -> GoldenInt {
        GoldenInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}·φ", self.a, self.b.magnitude())
        } else {
            write!(f, "{}+{}·φ", self.a, self.b)
        }
    }
}
