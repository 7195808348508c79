//! Divisor sums and the Eisenstein-type series built from them.
//!
//! G(t) = Σ_{d≥1} σ(d)·t^d = Σ_{k≥1} k·t^k/(1 − t^k) is the generating
//! series of the divisor function; G₂ = −1/24 + G is its weight-2
//! Eisenstein normalization, and G_e/G_o are the even- and odd-index parts
//! of G₂. Both displayed forms of G are implemented and cross-checked.

use crate::rational::Rational;
use crate::series::Series;

/// Sum of the positive divisors of `d`. Panics for `d == 0`.
pub fn sigma(d: u64) -> u64 {
    assert!(d >= 1, "sigma is defined for positive integers");
    let mut total = 0;
    let mut k = 1;
    while k * k <= d {
        if d.is_multiple_of(k) {
            total += k;
            let other = d / k;
            if other != k {
                total += other;
            }
        }
        k += 1;
    }
    total
}

/// σ(d) for d = 1..=N, filled by a sieve: each k adds itself to all of its
/// multiples. O(N log N) additions, all exact.
pub struct DivisorTable {
    values: Vec<u64>,
}

impl DivisorTable {
    pub fn up_to(n: u64) -> Self {
        let mut values = vec![0u64; n as usize];
        for k in 1..=n {
            let mut m = k;
            while m <= n {
                values[(m - 1) as usize] += k;
                m += k;
            }
        }
        DivisorTable { values }
    }

    pub fn limit(&self) -> u64 {
        self.values.len() as u64
    }

    /// σ(d); panics outside 1..=limit.
    pub fn sigma(&self, d: u64) -> u64 {
        assert!(
            d >= 1 && d <= self.limit(),
            "divisor table queried outside 1..={}",
            self.limit()
        );
        self.values[(d - 1) as usize]
    }
}

/// G(t) = Σ_{d=1..order} σ(d)·t^d; the constant term is zero.
pub fn g_series(order: usize) -> Series {
    let table = DivisorTable::up_to(order as u64);
    let mut coeffs = vec![Rational::zero(); order + 1];
    for d in 1..=order {
        coeffs[d] = Rational::from_int(table.sigma(d as u64) as i64);
    }
    Series::from_coeffs(coeffs)
}

/// The Lambert-series route to G: Σ_k k·t^k/(1 − t^k), expanded by
/// repeated addition of k·t^{mk} — no series division involved, so this is
/// independent of both the sieve and the division kernel.
pub fn g_series_lambert(order: usize) -> Series {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for k in 1..=order {
        let mut m = k;
        while m <= order {
            coeffs[m] += &Rational::from_int(k as i64);
            m += k;
        }
    }
    Series::from_coeffs(coeffs)
}

/// G₂(t) = −1/24 + G(t), the weight-2 Eisenstein normalization.
pub fn g2_series(order: usize) -> Series {
    g2_series_with_constant(order, &Rational::new(-1, 24))
}

/// G₂ with an arbitrary constant term. The replacement constant exists for
/// negative-control runs that corrupt the series on purpose to prove the
/// identity checks can fail; everything else uses [`g2_series`].
pub fn g2_series_with_constant(order: usize, constant: &Rational) -> Series {
    let g = g_series(order);
    &g + &Series::constant(constant.clone(), order)
}

/// Even-index part of G₂ (includes the −1/24 constant).
pub fn ge_series(order: usize) -> Series {
    g2_series(order).even_part()
}

/// Odd-index part of G₂.
pub fn go_series(order: usize) -> Series {
    g2_series(order).odd_part()
}
