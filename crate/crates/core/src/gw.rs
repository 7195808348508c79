//! Generating functions for the section-class invariants of E(n).
//!
//! The genus-0 generating function F(t) = Σ_d GW_{S+dF,0}·t^d has the
//! closed product form ∏_{d≥1}(1 − t^d)^{−12n}, equivalently it is the
//! unique solution of the Euler-derivative ODE θF = 12n·G·F with F(0) = 1.
//! The genus-1 series H(t) = Σ_d GW_{S+dF,1}(τ(F))·t^d is assembled in two
//! independent ways — from the domain-splitting recursion and from the
//! fiber-sum decomposition — and the two assemblies must agree exactly;
//! their difference is (1/12)·θF − n·G·F, so agreement is precisely the
//! ODE. Both routes are implemented and reconciled coefficient by
//! coefficient.

use crate::arith::{g_series, sigma};
use crate::error::Error;
use crate::rational::Rational;
use crate::series::{product_power, Series};
use crate::surface::{E1Lattice, LatticeVector, E1_RANK};

/// F(t) for E(n): the truncated product ∏_{d≥1}(1 − t^d)^{−12n}.
/// The exponent 12n is the Euler characteristic of E(n).
pub fn f_product(n: u32, order: usize) -> Series {
    assert!(n >= 1, "the product form is defined for E(n) with n >= 1");
    product_power(-12 * n as i64, order)
}

/// Solves the coefficient recursion for θy = a·y with y(0) = y0:
///
///   (m − a₀)·y_m = Σ_{k=1..m} a_k·y_{m−k},   m = 1..order.
///
/// When a has zero constant term (the only case the generating functions
/// need) this is the unique truncated solution with the given initial
/// value. A nonzero a₀ is tolerated unless it equals one of the integer
/// pivots, in which case the recursion is singular.
pub fn solve_theta_ode(a: &Series, y0: &Rational) -> Result<Series, Error> {
    let order = a.order();
    let a0 = a.coeff(0);
    let mut y = Vec::with_capacity(order + 1);
    y.push(y0.clone());
    for m in 1..=order {
        let pivot = &Rational::from_int(m as i64) - a0;
        if pivot.is_zero() {
            return Err(Error::SingularPivot { index: m });
        }
        let mut acc = Rational::zero();
        for k in 1..=m {
            acc += &(a.coeff(k) * &y[m - k]);
        }
        y.push(&acc / &pivot);
    }
    Ok(Series::from_coeffs(y))
}

/// H(t) assembled from the fiber-sum decomposition: (−1/12 + 2G)·F, the
/// E(0) descendent series times the genus-0 series of E(n).
pub fn h_from_sum(n: u32, order: usize) -> Series {
    &e0_descendent_series(order) * &f_product(n, order)
}

/// H(t) assembled from the domain-splitting recursion:
/// (1/12)·θF − (1/12)·F + (2−n)·G·F.
pub fn h_from_trr(n: u32, order: usize) -> Series {
    let f = f_product(n, order);
    let twelfth = Rational::new(1, 12);
    let gf = &g_series(order) * &f;
    &(&f.theta().scale(&twelfth) - &f.scale(&twelfth)) + &gf.scale_int(2 - n as i64)
}

/// The genus-1 descendent series of E(0) = S²×T²: −1/12 + 2G(t). The
/// constant −1/12 is the degenerate-map count against the canonical class
/// −2F; the 2σ(d) coefficients count torus covers of the two holomorphic
/// fibers.
pub fn e0_descendent_series(order: usize) -> Series {
    &g_series(order).scale_int(2) + &Series::constant(Rational::new(-1, 12), order)
}

/// The fiber-multiple invariant GW_{dF,1} = (2−n)·σ(d)/d.
pub fn fiber_cover_invariant(n: u32, d: u64) -> Rational {
    assert!(d >= 1, "fiber multiples are indexed by d >= 1");
    &Rational::from_int(2 - n as i64) * &Rational::new(sigma(d) as i64, d as i64)
}

/// d·GW_{dF,1} = (2−n)·σ(d), the weighted count of d-fold torus covers.
pub fn fiber_cover_weighted(n: u32, d: u64) -> i64 {
    assert!(d >= 1, "fiber multiples are indexed by d >= 1");
    (2 - n as i64) * sigma(d) as i64
}

/// Genus-0 generating function of E(n) with its defining invariant
/// (constant term 1 = the count for the bare section class).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenusZeroSeries {
    surface_index: u32,
    series: Series,
}

impl GenusZeroSeries {
    pub fn new(n: u32, order: usize) -> Self {
        let series = f_product(n, order);
        assert_eq!(series.coeff(0), &Rational::one());
        GenusZeroSeries {
            surface_index: n,
            series,
        }
    }

    pub fn surface_index(&self) -> u32 {
        self.surface_index
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    /// The invariant of the class S + d·F.
    pub fn invariant(&self, d: usize) -> &Rational {
        self.series.coeff(d)
    }
}

/// Genus-1 descendent-constrained generating function of E(n). The
/// constructor computes both assemblies and insists they agree — this is
/// the module's central consistency statement, not an optional check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenusOneSeries {
    surface_index: u32,
    series: Series,
}

impl GenusOneSeries {
    pub fn new(n: u32, order: usize) -> Self {
        let sum = h_from_sum(n, order);
        let trr = h_from_trr(n, order);
        assert_eq!(sum, trr, "genus-1 assemblies disagree for E({n})");
        GenusOneSeries {
            surface_index: n,
            series: sum,
        }
    }

    pub fn surface_index(&self) -> u32 {
        self.surface_index
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    pub fn invariant(&self, d: usize) -> &Rational {
        self.series.coeff(d)
    }
}

/// Evaluates Σ_a (A·H_a)·(−1/24)·(H^a·F) on the full E(1) lattice, where
/// {H_a} is the standard basis and {H^a} its intersection dual. By
/// dual-basis expansion the sum collapses to −(1/24)·(A·F); for the
/// classes A = S + dF that constant is −1/24 independent of d, which is
/// exactly the coefficient the degenerate-map evaluation feeds into the
/// genus-1 recursion.
pub fn diagonal_collapse_coefficient(
    lattice: &E1Lattice,
    class: &LatticeVector,
) -> Result<Rational, Error> {
    let dual = lattice.dual_basis()?;
    let fiber = lattice.fiber();
    let weight = Rational::new(-1, 24);
    let mut acc = Rational::zero();
    for (a, h_upper) in dual.iter().enumerate() {
        let mut e_a = [0i64; E1_RANK];
        e_a[a] = 1;
        let against_class = Rational::from_int(lattice.pair_vectors(class, &e_a));
        let against_fiber = Rational::from_int(lattice.pair_vectors(h_upper, &fiber));
        acc += &(&(&against_class * &weight) * &against_fiber);
    }
    Ok(acc)
}
