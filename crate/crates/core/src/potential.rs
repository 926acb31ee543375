//! The two potential functions over a trace and exact checks of every bound
//! derived from them.
//!
//! Additive potential: `s_i = x_i + y_i`, contracting by 2/3 per step.
//! Golden potential: `s_i = x_i + y_i/φ = (x_i − y_i) + y_i·φ`, contracting by
//! `1/φ` per step, with equality exactly at steps whose quotient is 1.
//!
//! Real-valued logarithmic bounds are replaced by equivalent integer (or
//! `Z[φ]`) inequalities:
//!
//! * `m ≤ log_1.5(x+y) + 1`  ⟺  `3^(m−1) ≤ 2^(m−1)·(x+y)`
//! * `m ≤ log_φ(φx+y)`       ⟺  `φ^m ≤ y + xφ`
//!
//! Floats only appear in the `display_bound` fields.

use num_bigint::{BigInt, Sign};
use num_traits::{One, ToPrimitive, Zero};

use crate::euclid::{fib, trace, EuclidTrace, Normalization};
use crate::golden::{GoldenInt, PHI_F64};
use crate::{Natural, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivePotentialSeries(Vec<Natural>);

impl AdditivePotentialSeries {
    pub fn values(&self) -> &[Natural] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every `s_i ≥ 1`.
    pub fn bounded_below(&self) -> bool {
        self.0.iter().all(|s| !s.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenPotentialSeries(Vec<GoldenInt>);

impl GoldenPotentialSeries {
    pub fn values(&self) -> &[GoldenInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every `s_i ≥ 1` in the order of `Z[φ]`.
    pub fn bounded_below(&self) -> bool {
        let one = GoldenInt::one();
        self.0.iter().all(|s| s.sign() == Sign::Plus && s >= &one)
    }
}

pub fn additive_series(t: &EuclidTrace) -> AdditivePotentialSeries {
    AdditivePotentialSeries(t.steps().iter().map(|s| &s.x + &s.y).collect())
}

pub fn golden_series(t: &EuclidTrace) -> GoldenPotentialSeries {
    GoldenPotentialSeries(
        t.steps()
            .iter()
            .map(|s| {
                GoldenInt::new(
                    BigInt::from(s.x.clone()) - BigInt::from(s.y.clone()),
                    s.y.clone(),
                )
            })
            .collect(),
    )
}

/// Additive contraction at step `i ≥ 2`: `3·s_i ≤ 2·s_{i−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveStepCheck {
    /// 1-based step index `i`.
    pub step: usize,
    pub holds: bool,
    /// `2·s_{i−1} − 3·s_i`
    pub margin: BigInt,
}

impl AdditiveStepCheck {
    /// The proof of the contraction leaves a margin of at least 1.
    pub fn strict(&self) -> bool {
        self.margin >= BigInt::one()
    }
}

/// Golden contraction at step `i ≥ 2`: `φ·s_i ≤ s_{i−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenStepCheck {
    pub step: usize,
    pub holds: bool,
    pub equality: bool,
    /// `s_{i−1} − φ·s_i`
    pub margin: GoldenInt,
}

pub fn check_lemma_additive(s: &AdditivePotentialSeries) -> Vec<AdditiveStepCheck> {
    s.values()
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let margin = BigInt::from(&w[0] << 1u32) - BigInt::from(&w[1] * 3u32);
            AdditiveStepCheck {
                step: i + 2,
                holds: margin.sign() != Sign::Minus,
                margin,
            }
        })
        .collect()
}

/// Checks the golden contraction for each adjacent pair of the series.
///
/// The trace is accepted so that callers can pair the checks with step
/// quotients; it must be the trace the series was built from.
pub fn check_lemma_golden(s: &GoldenPotentialSeries, t: &EuclidTrace) -> Vec<GoldenStepCheck> {
    debug_assert_eq!(s.len(), t.m());
    s.values()
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let margin = &w[0] - &w[1].mul_phi();
            let sign = margin.sign();
            GoldenStepCheck {
                step: i + 2,
                holds: sign != Sign::Minus,
                equality: sign == Sign::NoSign,
                margin,
            }
        })
        .collect()
}

/// `3^(i−1)·s_i ≤ 2^(i−1)·s_1` for every `i`.
pub fn check_cor2(s: &AdditivePotentialSeries) -> bool {
    let Some(first) = s.values().first() else {
        return true;
    };
    let mut pow3 = Natural::one();
    let mut scaled_first = first.clone();
    for value in s.values() {
        if &pow3 * value > scaled_first {
            return false;
        }
        pow3 *= 3u32;
        scaled_first <<= 1u32;
    }
    true
}

/// An exact verdict plus the real-valued bound it corresponds to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub holds: bool,
    pub display_bound: f64,
}

/// `m ≤ log_1.5(x+y) + 1`, decided as `3^(m−1) ≤ 2^(m−1)·(x+y)`.
pub fn check_thm1(x: &Natural, y: &Natural, m: usize) -> BoundCheck {
    let e = (m.max(1) - 1) as u32;
    let sum = x + y;
    let holds = m >= 1 && Natural::from(3u32).pow(e) <= (&sum << e);
    BoundCheck {
        holds,
        display_bound: ln_natural(&sum) / 1.5f64.ln() + 1.0,
    }
}

/// `m ≤ log_φ(φx+y)`, decided as `φ^m ≤ y + xφ` in `Z[φ]`.
pub fn check_thm2(x: &Natural, y: &Natural, m: usize) -> BoundCheck {
    let target = GoldenInt::new(y.clone(), x.clone());
    let holds = match GoldenInt::phi_pow(m as u64) {
        Ok(pow) => pow <= target,
        Err(_) => true,
    };
    BoundCheck {
        holds,
        display_bound: ln_phi_x_plus_y(x, y) / PHI_F64.ln(),
    }
}

/// Natural logarithm of an arbitrarily large positive integer.
pub(crate) fn ln_natural(n: &Natural) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.to_f64().unwrap_or(f64::NAN).ln()
    } else {
        let shift = bits - 64;
        (n >> shift).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// `ln(φx + y)` for `x ≥ 1`, computed as `ln x + ln(φ + y/x)` so that huge
/// operands stay in range.
fn ln_phi_x_plus_y(x: &Natural, y: &Natural) -> f64 {
    if x.is_zero() {
        return ln_natural(y);
    }
    let ratio = if y.is_zero() {
        0.0
    } else {
        (ln_natural(y) - ln_natural(x)).exp()
    };
    ln_natural(x) + (PHI_F64 + ratio).ln()
}

/// Outcome of the Fibonacci lower bound `x ≥ F_{m+2}`, `y ≥ F_{m+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LameVerdict {
    /// False for inputs with `y = 0` or `x = y`, where the bound is vacuous.
    pub applicable: bool,
    pub holds: bool,
    /// Both inequalities are equalities, i.e. the input is a Fibonacci pair.
    pub tight: bool,
}

pub fn lame_check(t: &EuclidTrace) -> LameVerdict {
    let (x, y) = (t.x(), t.y());
    if y.is_zero() || t.normalization() == Normalization::EqualOperands {
        return LameVerdict {
            applicable: false,
            holds: true,
            tight: false,
        };
    }
    let m = t.m() as u64;
    let (fx, fy) = (fib(m + 2), fib(m + 1));
    LameVerdict {
        applicable: true,
        holds: x >= &fx && y >= &fy,
        tight: x == &fx && y == &fy,
    }
}

/// Every verdict for one input pair.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// Normalized operands (`x ≥ y`).
    pub x: Natural,
    pub y: Natural,
    pub m: usize,
    pub thm1: BoundCheck,
    pub thm2: BoundCheck,
    pub additive: AdditivePotentialSeries,
    pub golden: GoldenPotentialSeries,
    pub lemma_additive: Vec<AdditiveStepCheck>,
    pub lemma_golden: Vec<GoldenStepCheck>,
    /// `is_one()` of each non-terminal quotient, aligned with `lemma_golden`.
    pub unit_quotients: Vec<bool>,
    pub cor1_holds: bool,
    pub cor2_holds: bool,
    pub lame: LameVerdict,
}

impl BoundReport {
    pub fn lemma1_per_step(&self) -> Vec<bool> {
        self.lemma_additive.iter().map(|c| c.holds).collect()
    }

    pub fn lemma2_per_step(&self) -> Vec<bool> {
        self.lemma_golden.iter().map(|c| c.holds).collect()
    }

    /// 1-based indices `i` where `φ·s_i = s_{i−1}`.
    pub fn lemma2_equality_steps(&self) -> Vec<usize> {
        self.lemma_golden
            .iter()
            .filter(|c| c.equality)
            .map(|c| c.step)
            .collect()
    }

    pub fn lemma1_holds(&self) -> bool {
        self.lemma_additive.iter().all(|c| c.holds)
    }

    pub fn lemma1_strict(&self) -> bool {
        self.lemma_additive.iter().all(AdditiveStepCheck::strict)
    }

    pub fn lemma2_holds(&self) -> bool {
        self.lemma_golden.iter().all(|c| c.holds)
    }

    /// Golden equality occurs exactly at the steps following a quotient of 1.
    pub fn lemma2_equality_matches_quotients(&self) -> bool {
        self.lemma_golden
            .iter()
            .zip(&self.unit_quotients)
            .all(|(c, &unit)| c.equality == unit)
    }

    pub fn all_pass(&self) -> bool {
        self.thm1.holds
            && self.thm2.holds
            && self.lemma1_holds()
            && self.lemma2_holds()
            && self.cor1_holds
            && self.cor2_holds
            && self.lame.holds
    }
}

pub fn analyze(x: &Natural, y: &Natural) -> Result<BoundReport> {
    let t = trace(x, y)?;
    Ok(analyze_trace(&t))
}

pub(crate) fn analyze_trace(t: &EuclidTrace) -> BoundReport {
    let (x, y, m) = (t.x(), t.y(), t.m());
    let additive = additive_series(t);
    let golden = golden_series(t);
    let lemma_additive = check_lemma_additive(&additive);
    let lemma_golden = check_lemma_golden(&golden, t);
    let unit_quotients = t
        .steps()
        .iter()
        .filter_map(|s| s.quotient.as_ref().map(One::is_one))
        .collect();
    BoundReport {
        x: x.clone(),
        y: y.clone(),
        m,
        thm1: check_thm1(x, y, m),
        thm2: check_thm2(x, y, m),
        cor1_holds: additive.bounded_below() && golden.bounded_below(),
        cor2_holds: check_cor2(&additive),
        lame: lame_check(t),
        additive,
        golden,
        lemma_additive,
        lemma_golden,
        unit_quotients,
    }
}
