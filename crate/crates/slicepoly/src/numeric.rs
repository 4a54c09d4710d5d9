//! Small exact-integer helpers used by the kernel formulas.

/// Largest Pascal row kept in the exact table.
pub(crate) const MAX_BINOMIAL_ROW: u32 = 100;

/// Binomial coefficient C(n, k) by exact integer recurrence.
///
/// Exact in `u128` for every row up to [`MAX_BINOMIAL_ROW`]; callers
/// enforce their own tighter order limits before reaching this.
pub(crate) fn binomial(n: u32, k: u32) -> f64 {
    assert!(
        n <= MAX_BINOMIAL_ROW,
        "binomial row {n} exceeds supported maximum {MAX_BINOMIAL_ROW}"
    );
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut value: u128 = 1;
    for i in 0..k {
        value = value * (n - i) as u128 / (i + 1) as u128;
    }
    value as f64
}
