//! Euclid's algorithm, traced step by step, together with exact checks of the
//! two potential-function bounds on its iteration count.
//!
//! The additive potential `x_i + y_i` shrinks by a factor of at least 2/3 per
//! iteration; the golden potential `x_i + y_i/φ` shrinks by at least `1/φ`.
//! Every verdict in this crate is decided with exact integer arithmetic: the
//! golden potential lives in [`GoldenInt`], the ring `Z[φ]`, and real-valued
//! logarithmic bounds are only ever produced for display.
//!
//! ```
//! use euclid_potential::{analyze, Natural};
//!
//! let report = analyze(&Natural::from(8u32), &Natural::from(5u32)).unwrap();
//! assert_eq!(report.m, 4);
//! assert!(report.all_pass());
//! ```

pub mod error;
pub mod euclid;
pub mod golden;
pub mod harness;
pub mod potential;

pub use error::{Error, Result};
pub use euclid::{
    extended_gcd, fib, fibonacci_pair, gcd, trace, BezoutCertificate, EuclidStep, EuclidTrace,
    Normalization,
};
pub use golden::{FloatApprox, GoldenInt};
pub use harness::{
    reference_gcd, scan, tightness_fibonacci, write_scan_csv, write_scan_csv_file,
    write_tightness_csv, write_tightness_csv_file, ScanOptions, ScanSummary, TightnessRecord,
    ViolationCounts,
};
pub use potential::{
    additive_series, analyze, check_cor2, check_lemma_additive, check_lemma_golden, check_thm1,
    check_thm2, golden_series, lame_check, AdditivePotentialSeries, AdditiveStepCheck, BoundCheck,
    BoundReport, GoldenPotentialSeries, GoldenStepCheck, LameVerdict,
};

pub use num_bigint::{BigInt, BigUint};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;
