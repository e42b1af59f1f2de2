//! Closed-form summand counts for cup-`n` products and Steenrod squares.
//!
//! The counts grow past 64 bits quickly (a 6-cochain against a
//! 7000-cochain already needs 68 bits), so everything is a [`BigUint`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)`, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, and C(n, i) * (n - i) is divisible by i + 1.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of tuples in the unrestricted cup-`n` sum: `C(m+1, n+1)` with
/// `m = p + q - n`.
pub fn count_oracle(p: usize, q: usize, n: usize) -> BigUint {
    let m = p as i64 + q as i64 - n as i64;
    binomial(m + 1, n as i64 + 1)
}

/// Number of tuples in the restricted cup-`n` sum:
/// `C(q - ⌊(n+1)/2⌋, ⌊n/2⌋) · C(p - ⌊n/2⌋, ⌊(n+1)/2⌋)`.
pub fn count_bounded(p: usize, q: usize, n: usize) -> BigUint {
    if n > p || n > q {
        return BigUint::zero();
    }
    let (p, q, n) = (p as i64, q as i64, n as i64);
    binomial(q - (n + 1) / 2, n / 2) * binomial(p - n / 2, (n + 1) / 2)
}

/// Number of summands in `Sq^i` of a `j`-cochain:
/// `C(⌊m/2⌋, ⌊n/2⌋) · C(⌊(m+1)/2⌋, ⌊(n+1)/2⌋)` with `m = i + j`, `n = j - i`.
pub fn count_sq(i: usize, j: usize) -> BigUint {
    if i > j {
        return BigUint::zero();
    }
    let (m, n) = ((i + j) as i64, (j - i) as i64);
    binomial(m / 2, n / 2) * binomial((m + 1) / 2, (n + 1) / 2)
}

/// One line of the summand-count comparison for `c_p ⌣_n c_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub p: usize,
    pub n: usize,
    pub q: usize,
    pub full: BigUint,
    pub bounded: BigUint,
}

impl CountRow {
    pub fn compute(p: usize, n: usize, q: usize) -> CountRow {
        CountRow {
            p,
            n,
            q,
            full: count_oracle(p, q, n),
            bounded: count_bounded(p, q, n),
        }
    }

    pub fn label(&self) -> String {
        format!("c_{} ⌣_{} c_{}", self.p, self.n, self.q)
    }
}

/// Published summand counts `(p, n, q, full, bounded)` for eight products.
pub const REFERENCE_COUNTS: [(usize, usize, usize, &str, &str); 8] = [
    (3, 2, 4, "20", "6"),
    (6, 5, 6, "28", "12"),
    (12, 4, 10, "11628", "1260"),
    (25, 5, 30, "18009460", "621621"),
    (60, 5, 70, "4925156775", "68222616"),
    (6, 5, 700, "162699437009655", "970224"),
    (60, 50, 60, "225368761961739396", "33701394635724816"),
    (6, 5, 7000, "163331343055757216550", "97902024"),
];

/// The eight reference rows, computed from the closed forms.
pub fn summand_table() -> Vec<CountRow> {
    REFERENCE_COUNTS
        .iter()
        .map(|&(p, n, q, _, _)| CountRow::compute(p, n, q))
        .collect()
}
