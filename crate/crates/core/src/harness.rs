//! Exhaustive scans over all input pairs up to a limit, the Fibonacci
//! worst-case family, and CSV export of both.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_traits::{ToPrimitive, Zero};

use crate::euclid::{fibonacci_pair, trace};
use crate::golden::GoldenInt;
use crate::potential::{analyze_trace, check_thm2, BoundReport};
use crate::{Error, Natural, Result};

/// Largest `m` with its own histogram bucket; deeper traces land in this one.
pub const HISTOGRAM_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Number of x-stride partitions; partition `p` owns every `x ≡ p + 1 (mod P)`.
    pub partitions: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { partitions: 1 }
    }
}

/// Failure counts per checked property, one increment per offending pair.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ViolationCounts {
    pub thm1: u64,
    pub thm2: u64,
    /// Additive contraction failed or had a margin below 1.
    pub lemma_additive: u64,
    pub lemma_golden: u64,
    /// Golden equality did not coincide with unit quotients.
    pub golden_equality: u64,
    pub cor1: u64,
    pub cor2: u64,
    pub lame: u64,
}

impl ViolationCounts {
    fn record(&mut self, r: &BoundReport) -> bool {
        let flags = [
            (!r.thm1.holds, &mut self.thm1),
            (!r.thm2.holds, &mut self.thm2),
            (
                !(r.lemma1_holds() && r.lemma1_strict()),
                &mut self.lemma_additive,
            ),
            (!r.lemma2_holds(), &mut self.lemma_golden),
            (
                !r.lemma2_equality_matches_quotients(),
                &mut self.golden_equality,
            ),
            (!r.cor1_holds, &mut self.cor1),
            (!r.cor2_holds, &mut self.cor2),
            (!r.lame.holds, &mut self.lame),
        ];
        let mut any = false;
        for (failed, counter) in flags {
            if failed {
                *counter += 1;
                any = true;
            }
        }
        any
    }

    fn merge(&mut self, other: &ViolationCounts) {
        self.thm1 += other.thm1;
        self.thm2 += other.thm2;
        self.lemma_additive += other.lemma_additive;
        self.lemma_golden += other.lemma_golden;
        self.golden_equality += other.golden_equality;
        self.cor1 += other.cor1;
        self.cor2 += other.cor2;
        self.lame += other.lame;
    }
}

/// Range of `display_bound − m` over a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapRange {
    pub min: f64,
    pub max: f64,
}

impl GapRange {
    const EMPTY: GapRange = GapRange {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
    };

    fn include(&mut self, gap: f64) {
        self.min = self.min.min(gap);
        self.max = self.max.max(gap);
    }

    fn merge(&mut self, other: &GapRange) {
        self.min = self.min.min(other.min);
        self.max = self.max.max(other.max);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanSummary {
    pub x_max: u64,
    pub pairs_checked: u64,
    /// Pairs with at least one failed check.
    pub violations: u64,
    pub by_check: ViolationCounts,
    pub max_m: usize,
    /// Smallest `(x, y)` attaining `max_m`.
    pub max_m_witness: (u64, u64),
    pub thm1_gap: GapRange,
    pub thm2_gap: GapRange,
    pub histogram_m: BTreeMap<usize, u64>,
    /// Pairs meeting the Fibonacci lower bound with equality, ascending.
    pub lame_tight_pairs: Vec<(u64, u64)>,
}

#[derive(Debug, Clone)]
struct Accumulator {
    pairs: u64,
    violations: u64,
    by_check: ViolationCounts,
    max_m: usize,
    witness: (u64, u64),
    thm1_gap: GapRange,
    thm2_gap: GapRange,
    histogram: BTreeMap<usize, u64>,
    lame_tight: Vec<(u64, u64)>,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            pairs: 0,
            violations: 0,
            by_check: ViolationCounts::default(),
            max_m: 0,
            witness: (0, 0),
            thm1_gap: GapRange::EMPTY,
            thm2_gap: GapRange::EMPTY,
            histogram: BTreeMap::new(),
            lame_tight: Vec::new(),
        }
    }

    fn offer_witness(&mut self, m: usize, pair: (u64, u64)) {
        if m > self.max_m || (m == self.max_m && pair < self.witness) {
            self.max_m = m;
            self.witness = pair;
        }
    }

    fn add(&mut self, x: u64, y: u64, r: &BoundReport) {
        self.pairs += 1;
        if self.by_check.record(r) {
            self.violations += 1;
        }
        self.offer_witness(r.m, (x, y));
        let m = r.m as f64;
        self.thm1_gap.include(r.thm1.display_bound - m);
        self.thm2_gap.include(r.thm2.display_bound - m);
        *self.histogram.entry(r.m.min(HISTOGRAM_CAP)).or_default() += 1;
        if r.lame.tight {
            self.lame_tight.push((x, y));
        }
    }

    fn merge(&mut self, other: Accumulator) {
        self.pairs += other.pairs;
        self.violations += other.violations;
        self.by_check.merge(&other.by_check);
        self.offer_witness(other.max_m, other.witness);
        self.thm1_gap.merge(&other.thm1_gap);
        self.thm2_gap.merge(&other.thm2_gap);
        for (m, count) in other.histogram {
            *self.histogram.entry(m).or_default() += count;
        }
        self.lame_tight.extend(other.lame_tight);
    }

    fn finish(mut self, x_max: u64) -> ScanSummary {
        self.lame_tight.sort_unstable();
        ScanSummary {
            x_max,
            pairs_checked: self.pairs,
            violations: self.violations,
            by_check: self.by_check,
            max_m: self.max_m,
            max_m_witness: self.witness,
            thm1_gap: self.thm1_gap,
            thm2_gap: self.thm2_gap,
            histogram_m: self.histogram,
            lame_tight_pairs: self.lame_tight,
        }
    }
}

fn scan_partition(x_max: u64, index: usize, stride: usize) -> Accumulator {
    let mut acc = Accumulator::new();
    for x in (1 + index as u64..=x_max).step_by(stride) {
        let xn = Natural::from(x);
        for y in 0..x {
            let t = trace(&xn, &Natural::from(y)).expect("x ≥ 1");
            acc.add(x, y, &analyze_trace(&t));
        }
    }
    log::debug!("partition {index}/{stride}: {} pairs", acc.pairs);
    acc
}

/// Analyzes every pair `0 ≤ y < x ≤ x_max`.
///
/// The result does not depend on `options.partitions`: partitions run on
/// separate threads and are merged in index order with associative
/// reductions only.
pub fn scan(x_max: u64, options: ScanOptions) -> Result<ScanSummary> {
    if x_max < 1 {
        return Err(Error::OutOfRange {
            what: "x_max",
            min: 1,
            got: x_max,
        });
    }
    if options.partitions < 1 {
        return Err(Error::OutOfRange {
            what: "partitions",
            min: 1,
            got: 0,
        });
    }
    let stride = options.partitions;
    let mut total = Accumulator::new();
    if stride == 1 {
        total.merge(scan_partition(x_max, 0, 1));
    } else {
        let parts: Vec<Accumulator> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..stride)
                .map(|p| s.spawn(move || scan_partition(x_max, p, stride)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        });
        for part in parts {
            total.merge(part);
        }
    }
    Ok(total.finish(x_max))
}

/// One member of the Fibonacci worst-case family.
#[derive(Debug, Clone, PartialEq)]
pub struct TightnessRecord {
    pub k: u64,
    pub x: Natural,
    pub y: Natural,
    pub m: usize,
    pub thm2_bound: f64,
    /// `thm2_bound − m`
    pub gap: f64,
    /// Exact `φ^(m+2) ≤ y + xφ < φ^(m+3)`.
    pub exact_bracket: bool,
}

pub fn tightness_fibonacci(k_max: u64) -> Result<Vec<TightnessRecord>> {
    if k_max < 1 {
        return Err(Error::OutOfRange {
            what: "k_max",
            min: 1,
            got: k_max,
        });
    }
    (1..=k_max)
        .map(|k| {
            let (x, y) = fibonacci_pair(k)?;
            let m = trace(&x, &y)?.m();
            let bound = check_thm2(&x, &y, m).display_bound;
            let target = GoldenInt::new(y.clone(), x.clone());
            let lower = GoldenInt::phi_pow(m as u64 + 2)?;
            let exact_bracket = lower <= target && target < lower.mul_phi();
            Ok(TightnessRecord {
                k,
                x,
                y,
                m,
                thm2_bound: bound,
                gap: bound - m as f64,
                exact_bracket,
            })
        })
        .collect()
}

/// GCD by repeated subtraction; an oracle independent of division.
pub fn reference_gcd(x: &Natural, y: &Natural) -> Result<Natural> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroZero);
    }
    let (mut a, mut b) = (x.clone(), y.clone());
    while !b.is_zero() {
        if a >= b {
            a -= &b;
        } else {
            std::mem::swap(&mut a, &mut b);
        }
    }
    Ok(a)
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn fixed6(v: f64) -> String {
    format!("{v:.6}")
}

pub const TIGHTNESS_HEADER: [&str; 6] = ["k", "x", "y", "m", "thm2_bound", "gap"];
pub const SCAN_HEADER: [&str; 6] = [
    "x_max",
    "pairs",
    "violations",
    "max_m",
    "witness_x",
    "witness_y",
];

pub fn write_tightness_csv<W: Write>(records: &[TightnessRecord], out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(TIGHTNESS_HEADER)?;
    for r in records {
        w.write_record([
            r.k.to_string(),
            r.x.to_string(),
            r.y.to_string(),
            r.m.to_string(),
            fixed6(r.thm2_bound),
            fixed6(r.gap),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_scan_csv<W: Write>(summary: &ScanSummary, out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(SCAN_HEADER)?;
    let (wx, wy) = summary.max_m_witness;
    w.write_record([
        summary.x_max.to_string(),
        summary.pairs_checked.to_string(),
        summary.violations.to_string(),
        summary.max_m.to_string(),
        wx.to_string(),
        wy.to_string(),
    ])?;
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

fn write_file(path: &Path, body: impl FnOnce(&mut BufWriter<File>) -> Result<()>) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut out = BufWriter::new(file);
    body(&mut out).map_err(|e| match e {
        Error::Csv(c) if c.is_io_error() => match c.into_kind() {
            csv::ErrorKind::Io(source) => Error::Io {
                path: path.to_path_buf(),
                source,
            },
            _ => unreachable!(),
        },
        other => other,
    })?;
    out.flush().map_err(io_err)
}

pub fn write_tightness_csv_file(records: &[TightnessRecord], path: &Path) -> Result<()> {
    write_file(path, |out| write_tightness_csv(records, out))
}

pub fn write_scan_csv_file(summary: &ScanSummary, path: &Path) -> Result<()> {
    write_file(path, |out| write_scan_csv(summary, out))
}

/// Largest Fibonacci-pair index `k` whose pair fits in `x ≤ x_max`.
pub fn max_fibonacci_k(x_max: u64) -> u64 {
    let mut k = 0;
    while fibonacci_pair(k + 1)
        .map(|(x, _)| x.to_u64().is_some_and(|x| x <= x_max))
        .unwrap_or(false)
    {
        k += 1;
    }
    k
}
