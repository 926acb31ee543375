//! Shared inputs for the criterion benchmarks in `benches/`.

use euclid_potential::{fib, Natural};

/// Consecutive Fibonacci numbers `(F_{n+1}, F_n)`, the deepest input of its size.
pub fn fibonacci_operands(n: u64) -> (Natural, Natural) {
    (fib(n + 1), fib(n))
}

/// A pseudo-random operand pair of roughly `bits` bits with no special structure.
pub fn mixed_operands(bits: u32) -> (Natural, Natural) {
    let x = (Natural::from(1u32) << bits) - Natural::from(59u32);
    let y = (Natural::from(3u32) << (bits - 2)) + Natural::from(17u32);
    (x, y)
}
