//! The recursive Euclidean algorithm with early exits at `y = 0` and `y = 1`,
//! recorded one invocation at a time.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Natural, Result};

/// One invocation of the algorithm on the pair `(x, y)`.
///
/// `quotient` and `remainder` describe the division `x = q·y + r` that feeds
/// the next invocation; both are `None` on the terminal (base-case) step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidStep {
    pub x: Natural,
    pub y: Natural,
    pub quotient: Option<Natural>,
    pub remainder: Option<Natural>,
}

impl EuclidStep {
    pub fn is_terminal(&self) -> bool {
        self.quotient.is_none()
    }
}

/// How the public operands were mapped onto the algorithm's `x ≥ y` input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    AsGiven,
    /// The operands were given smaller first and have been swapped.
    Swapped,
    /// `x = y > 0`: the first step reduces `(x, x)` to `(x, 0)` (or exits
    /// immediately when `x = 1`).
    EqualOperands,
}

/// Full record of a run: every invocation from `(x_1, y_1)` to the base case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTrace {
    steps: Vec<EuclidStep>,
    gcd: Natural,
    normalization: Normalization,
}

impl EuclidTrace {
    pub fn steps(&self) -> &[EuclidStep] {
        &self.steps
    }

    /// Number of invocations, counting the terminal one.
    pub fn m(&self) -> usize {
        self.steps.len()
    }

    pub fn gcd(&self) -> &Natural {
        &self.gcd
    }

    /// The normalized first operand, `x_1`.
    pub fn x(&self) -> &Natural {
        &self.steps[0].x
    }

    /// The normalized second operand, `y_1`.
    pub fn y(&self) -> &Natural {
        &self.steps[0].y
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn last(&self) -> &EuclidStep {
        self.steps.last().expect("trace has at least one step")
    }
}

fn normalize(x: &Natural, y: &Natural) -> Result<(Natural, Natural, Normalization)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroZero);
    }
    Ok(match x.cmp(y) {
        std::cmp::Ordering::Greater => (x.clone(), y.clone(), Normalization::AsGiven),
        std::cmp::Ordering::Less => (y.clone(), x.clone(), Normalization::Swapped),
        std::cmp::Ordering::Equal => (x.clone(), y.clone(), Normalization::EqualOperands),
    })
}

/// Runs the algorithm on `(x, y)` and records every invocation.
///
/// Operands are accepted in either order; `(0, 0)` is rejected.
pub fn trace(x: &Natural, y: &Natural) -> Result<EuclidTrace> {
    let (mut x, mut y, normalization) = normalize(x, y)?;
    let mut steps = Vec::new();
    loop {
        if y.is_zero() {
            let gcd = x.clone();
            steps.push(EuclidStep {
                x,
                y,
                quotient: None,
                remainder: None,
            });
            return Ok(EuclidTrace {
                steps,
                gcd,
                normalization,
            });
        }
        if y.is_one() {
            steps.push(EuclidStep {
                x,
                y,
                quotient: None,
                remainder: None,
            });
            return Ok(EuclidTrace {
                steps,
                gcd: Natural::one(),
                normalization,
            });
        }
        let (q, r) = x.div_rem(&y);
        let next_x = y.clone();
        let next_y = r.clone();
        steps.push(EuclidStep {
            x,
            y,
            quotient: Some(q),
            remainder: Some(r),
        });
        x = next_x;
        y = next_y;
    }
}

/// Greatest common divisor of `x` and `y`; the same recursion as [`trace`]
/// without recording steps.
pub fn gcd(x: &Natural, y: &Natural) -> Result<Natural> {
    let (mut x, mut y, _) = normalize(x, y)?;
    loop {
        if y.is_zero() {
            return Ok(x);
        }
        if y.is_one() {
            return Ok(y);
        }
        let r = &x % &y;
        x = std::mem::replace(&mut y, r);
    }
}

/// `g = gcd(x, y)` together with Bézout coefficients `u·x + v·y = g`,
/// expressed in the caller's operand order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub g: Natural,
    pub u: BigInt,
    pub v: BigInt,
}

impl BezoutCertificate {
    pub fn verify(&self, x: &Natural, y: &Natural) -> bool {
        &self.u * BigInt::from(x.clone()) + &self.v * BigInt::from(y.clone())
            == BigInt::from(self.g.clone())
    }
}

/// Extended GCD by back-substitution through the trace.
pub fn extended_gcd(x: &Natural, y: &Natural) -> Result<BezoutCertificate> {
    let t = trace(x, y)?;
    let last = t.last();
    // Base case: (x, 0) gives 1·x + 0·0, (x, 1) gives 0·x + 1·1.
    let (mut u, mut v) = if last.y.is_zero() {
        (BigInt::one(), BigInt::zero())
    } else {
        (BigInt::zero(), BigInt::one())
    };
    // g = u'·y + v'·(x − q·y) = v'·x + (u' − q·v')·y
    for step in t.steps().iter().rev().skip(1) {
        let q = BigInt::from(step.quotient.clone().expect("non-terminal step"));
        let next_v = &u - &q * &v;
        u = std::mem::replace(&mut v, next_v);
    }
    if t.normalization() == Normalization::Swapped {
        std::mem::swap(&mut u, &mut v);
    }
    Ok(BezoutCertificate {
        g: t.gcd().clone(),
        u,
        v,
    })
}

/// The `n`-th Fibonacci number with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fib(n: u64) -> Natural {
    fib_pair(n).0
}

/// `(F_n, F_{n+1})` by fast doubling over the bits of `n`.
fn fib_pair(n: u64) -> (Natural, Natural) {
    let mut a = Natural::zero();
    let mut b = Natural::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        // F_2k = F_k·(2F_{k+1} − F_k), F_2k+1 = F_k² + F_{k+1}²
        let doubled = &a * ((&b << 1) - &a);
        let doubled_next = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = &doubled + &doubled_next;
            a = doubled_next;
        } else {
            a = doubled;
            b = doubled_next;
        }
    }
    (a, b)
}

/// The worst-case input needing exactly `k` iterations: `(F_{k+2}, F_{k+1})`.
pub fn fibonacci_pair(k: u64) -> Result<(Natural, Natural)> {
    if k < 1 {
        return Err(Error::OutOfRange {
            what: "k",
            min: 1,
            got: k,
        });
    }
    let (lo, hi) = fib_pair(k + 1);
    Ok((hi, lo))
}
