//! Topological model of the elliptic surfaces E(n).
//!
//! E(n) carries a section class S and a fiber class F with S·S = −n,
//! S·F = 1, F·F = 0; the canonical class is K = (n−2)F and the geometric
//! genus p_g = n−1 (clamped to 0 for the rational ruled case n = 0, which
//! exists here only to feed the degenerate-map evaluations). Dimension
//! formulas for moduli of maps and for the family-twisted moduli are
//! implemented on this data.
//!
//! For E(1) the full rank-10 second homology is modeled in the blow-up
//! basis {L, X₁..X₉} — the plane class and the nine exceptional classes —
//! whose Gram matrix diag(1, −1, …, −1) is unimodular of signature (1,9).
//! The section classes S_i = X_i and the fiber F = 3L − ΣX_i live inside
//! it as explicit vectors; note that {S₁..S₉, F} alone spans an index-3
//! sublattice (its Gram has determinant −9), so dual bases are taken in
//! the full lattice.

use std::fmt;

use num_traits::Signed;

use crate::error::Error;
use crate::rational::Rational;

/// Second-homology class a·S + b·F in the span of the section and fiber.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct HClass {
    pub s: i64,
    pub f: i64,
}

impl HClass {
    pub fn new(s: i64, f: i64) -> Self {
        HClass { s, f }
    }

    /// The class S + d·F.
    pub fn section_plus_fibers(d: i64) -> Self {
        HClass { s: 1, f: d }
    }

    /// The pure fiber multiple d·F.
    pub fn fibers(d: i64) -> Self {
        HClass { s: 0, f: d }
    }
}

impl fmt::Display for HClass {
    /// Pretty form "aS+bF" with the usual simplifications ("S+3F", "2F",
    /// "S-F", "0").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.s, self.f) {
            (0, 0) => write!(f, "0"),
            (s, 0) => write_term(f, s, "S", true),
            (0, d) => write_term(f, d, "F", true),
            (s, d) => {
                write_term(f, s, "S", true)?;
                write!(f, "{}", if d < 0 { "-" } else { "+" })?;
                write_term(f, d.abs(), "F", false)
            }
        }
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    coeff: i64,
    symbol: &str,
    with_sign: bool,
) -> fmt::Result {
    match coeff {
        1 => write!(f, "{symbol}"),
        -1 if with_sign => write!(f, "-{symbol}"),
        c => {
            if with_sign {
                write!(f, "{c}{symbol}")
            } else {
                write!(f, "{}{symbol}", c.abs())
            }
        }
    }
}

/// The elliptic surface E(n): everything the dimension and pairing
/// formulas need, derived from the index n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SurfaceModel {
    n: u32,
}

impl SurfaceModel {
    pub fn new(n: u32) -> Self {
        SurfaceModel { n }
    }

    pub fn index(&self) -> u32 {
        self.n
    }

    /// K = (n−2)·F; reproduces K = −F on E(1) and K = −2F on E(0).
    pub fn canonical_fiber_multiple(&self) -> i64 {
        self.n as i64 - 2
    }

    /// Geometric genus p_g = n − 1, clamped to 0 for n = 0.
    pub fn geometric_genus(&self) -> i64 {
        (self.n as i64 - 1).max(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        12 * self.n as i64
    }

    /// Intersection pairing with S·S = −n, S·F = 1, F·F = 0.
    pub fn pair(&self, a: HClass, b: HClass) -> i64 {
        -(self.n as i64) * a.s * b.s + a.s * b.f + a.f * b.s
    }

    /// K·A for A in the section/fiber span: (n−2)·(F·A).
    pub fn canonical_pairing(&self, a: HClass) -> i64 {
        self.canonical_fiber_multiple() * a.s
    }

    /// Dimension of the moduli of genus-g maps in class A with k marked
    /// points: 2[(g−1) − K·A] + 2k (complex-surface case).
    pub fn gw_dimension(&self, a: HClass, genus: i64, marked: i64) -> i64 {
        2 * ((genus - 1) - self.canonical_pairing(a) + marked)
    }

    /// Dimension of the family-twisted moduli: 2p_g larger than
    /// [`Self::gw_dimension`]. Defined for n ≥ 1.
    pub fn family_dimension(&self, a: HClass, genus: i64, marked: i64) -> i64 {
        assert!(
            self.n >= 1,
            "family moduli are modeled for E(n) with n >= 1"
        );
        self.gw_dimension(a, genus, marked) + 2 * self.geometric_genus()
    }

    /// Divisor-axiom multiplier A·V relating k-point and (k−1)-point
    /// invariants for a degree-2 constraint class V.
    pub fn divisor_axiom_factor(&self, a: HClass, v: HClass) -> i64 {
        self.pair(a, v)
    }
}

/// Rank of the E(1) lattice.
pub const E1_RANK: usize = 10;

/// Integer vector in the blow-up basis {L, X₁..X₉}.
pub type LatticeVector = [i64; E1_RANK];

/// Rank-10 integer lattice with an explicit Gram matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct E1Lattice {
    gram: [[i64; E1_RANK]; E1_RANK],
}

impl E1Lattice {
    /// An arbitrary symmetric Gram matrix; [`E1Lattice::geometric`] builds
    /// the one for H₂(E(1)).
    pub fn new(gram: [[i64; E1_RANK]; E1_RANK]) -> Self {
        for i in 0..E1_RANK {
            for j in 0..E1_RANK {
                assert_eq!(gram[i][j], gram[j][i], "Gram matrix must be symmetric");
            }
        }
        E1Lattice { gram }
    }

    /// H₂(E(1)) in the blow-up basis {L, X₁..X₉}: Gram = diag(1, −1⁹).
    pub fn geometric() -> Self {
        let mut gram = [[0i64; E1_RANK]; E1_RANK];
        gram[0][0] = 1;
        for i in 1..E1_RANK {
            gram[i][i] = -1;
        }
        E1Lattice { gram }
    }

    pub fn gram(&self) -> &[[i64; E1_RANK]; E1_RANK] {
        &self.gram
    }

    /// The i-th section class S_i = X_i, 1 ≤ i ≤ 9.
    pub fn section(&self, i: usize) -> LatticeVector {
        assert!((1..=9).contains(&i), "sections are indexed 1..=9");
        let mut v = [0i64; E1_RANK];
        v[i] = 1;
        v
    }

    /// The fiber class F = 3L − X₁ − ⋯ − X₉.
    pub fn fiber(&self) -> LatticeVector {
        let mut v = [-1i64; E1_RANK];
        v[0] = 3;
        v
    }

    /// The class S₉ + d·F as a lattice vector.
    pub fn section_plus_fibers(&self, d: i64) -> LatticeVector {
        let mut v = self.section(9);
        let f = self.fiber();
        for (slot, fc) in v.iter_mut().zip(f.iter()) {
            *slot += d * fc;
        }
        v
    }

    /// uᵀ·G·v.
    pub fn pair_vectors(&self, u: &LatticeVector, v: &LatticeVector) -> i64 {
        let mut total = 0;
        for i in 0..E1_RANK {
            if u[i] == 0 {
                continue;
            }
            for j in 0..E1_RANK {
                total += u[i] * self.gram[i][j] * v[j];
            }
        }
        total
    }

    /// Exact determinant of the Gram matrix.
    pub fn det(&self) -> Rational {
        linalg::determinant(&self.to_rational())
    }

    /// Basis dual to the standard basis under the pairing: vectors H^a
    /// with ⟨H^a, e_b⟩ = δ_ab. Exists over the integers iff the Gram
    /// matrix is unimodular; rows of the inverse Gram.
    pub fn dual_basis(&self) -> Result<Vec<LatticeVector>, Error> {
        let det = self.det();
        if !det.is_integer() || det.numer().abs() != num_bigint::BigInt::from(1) {
            return Err(Error::NotUnimodular {
                det: det.to_string(),
            });
        }
        let inv = linalg::inverse(&self.to_rational()).expect("nonzero determinant");
        let mut dual = Vec::with_capacity(E1_RANK);
        for row in inv {
            let mut v = [0i64; E1_RANK];
            for (slot, entry) in v.iter_mut().zip(row.iter()) {
                debug_assert!(entry.is_integer());
                *slot = int_value(entry);
            }
            dual.push(v);
        }
        Ok(dual)
    }

    /// Signature (positive, negative) computed by exact congruent
    /// diagonalization over the rationals.
    pub fn signature(&self) -> (usize, usize) {
        let diag = linalg::congruent_diagonal(&self.to_rational());
        let pos = diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_negative())
            .count();
        let neg = diag.iter().filter(|d| d.is_negative()).count();
        (pos, neg)
    }

    fn to_rational(&self) -> Vec<Vec<Rational>> {
        self.gram
            .iter()
            .map(|row| row.iter().map(|&e| Rational::from_int(e)).collect())
            .collect()
    }
}

fn int_value(r: &Rational) -> i64 {
    let s = r.numer().to_string();
    s.parse().expect("lattice entries fit in i64")
}

/// Exact dense linear algebra on small rational matrices. Sizes here are
/// fixed at rank 10, so plain Gaussian elimination is plenty.
mod linalg {
    use super::Rational;

    pub fn determinant(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        let mut a: Vec<Vec<Rational>> = m.to_vec();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !a[r][col].is_zero()) {
                Some(r) => r,
                None => return Rational::zero(),
            };
            if pivot_row != col {
                a.swap(pivot_row, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for row in col + 1..n {
                if a[row][col].is_zero() {
                    continue;
                }
                let factor = &a[row][col] / &pivot;
                for k in col..n {
                    let delta = &factor * &a[col][k];
                    a[row][k] -= &delta;
                }
            }
        }
        det
    }

    pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
        let n = m.len();
        // Augment with the identity and reduce.
        let mut a: Vec<Vec<Rational>> = m
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                r
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(pivot_row, col);
            let pivot = a[col][col].clone();
            for entry in &mut a[col] {
                *entry = &*entry / &pivot;
            }
            for row in 0..n {
                if row == col || a[row][col].is_zero() {
                    continue;
                }
                let factor = a[row][col].clone();
                for k in 0..2 * n {
                    let delta = &factor * &a[col][k];
                    a[row][k] -= &delta;
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Diagonal of PᵀAP for a symmetric A, built by simultaneous row and
    /// column operations; the inertia of A is read off the signs.
    pub fn congruent_diagonal(m: &[Vec<Rational>]) -> Vec<Rational> {
        let n = m.len();
        let mut a: Vec<Vec<Rational>> = m.to_vec();
        for i in 0..n {
            if a[i][i].is_zero() {
                // Find j > i with a[j][i] != 0 and fold row/col j into i;
                // in characteristic zero this makes the pivot 2·a[j][i].
                if let Some(j) = (i + 1..n).find(|&j| !a[j][i].is_zero()) {
                    for k in 0..n {
                        let v = a[j][k].clone();
                        a[i][k] += &v;
                    }
                    for row in a.iter_mut() {
                        let v = row[j].clone();
                        row[i] += &v;
                    }
                }
            }
            if a[i][i].is_zero() {
                continue;
            }
            let pivot = a[i][i].clone();
            for j in i + 1..n {
                if a[j][i].is_zero() {
                    continue;
                }
                let factor = &a[j][i] / &pivot;
                for k in 0..n {
                    let delta = &factor * &a[i][k];
                    a[j][k] -= &delta;
                }
                for row in a.iter_mut() {
                    let delta = &factor * &row[i];
                    row[j] -= &delta;
                }
            }
        }
        (0..n).map(|i| a[i][i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn class_pretty_printing() {
        assert_eq!(HClass::section_plus_fibers(3).to_string(), "S+3F");
        assert_eq!(HClass::new(2, 5).to_string(), "2S+5F");
        assert_eq!(HClass::new(1, -1).to_string(), "S-F");
        assert_eq!(HClass::fibers(2).to_string(), "2F");
        assert_eq!(HClass::new(-1, 0).to_string(), "-S");
        assert_eq!(HClass::new(0, 0).to_string(), "0");
    }

    #[test]
    fn pairing_examples() {
        let e1 = SurfaceModel::new(1);
        for d in 0..6 {
            let a = HClass::section_plus_fibers(d);
            assert_eq!(e1.pair(a, a), 2 * d - 1);
        }
        for n in 0..6u32 {
            let x = SurfaceModel::new(n);
            for d in 0..6 {
                let a = HClass::section_plus_fibers(d);
                assert_eq!(x.pair(a, a), 2 * d - n as i64);
            }
            assert_eq!(x.pair(HClass::fibers(1), HClass::fibers(1)), 0);
        }
    }

    #[test]
    fn pairing_is_symmetric_and_bilinear() {
        let mut rng = StdRng::seed_from_u64(11);
        let x = SurfaceModel::new(3);
        for _ in 0..100 {
            let a = HClass::new(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
            let b = HClass::new(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
            let c = HClass::new(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
            assert_eq!(x.pair(a, b), x.pair(b, a));
            let sum = HClass::new(b.s + c.s, b.f + c.f);
            assert_eq!(x.pair(a, sum), x.pair(a, b) + x.pair(a, c));
        }
    }

    #[test]
    fn canonical_class_specializations() {
        assert_eq!(SurfaceModel::new(1).canonical_fiber_multiple(), -1);
        assert_eq!(SurfaceModel::new(0).canonical_fiber_multiple(), -2);
        assert_eq!(SurfaceModel::new(2).canonical_fiber_multiple(), 0);
        assert_eq!(SurfaceModel::new(0).geometric_genus(), 0);
        assert_eq!(SurfaceModel::new(4).geometric_genus(), 3);
        assert_eq!(SurfaceModel::new(2).euler_characteristic(), 24);
    }

    #[test]
    fn dimension_formulas() {
        let e1 = SurfaceModel::new(1);
        for d in 0..8 {
            let a = HClass::section_plus_fibers(d);
            assert_eq!(e1.gw_dimension(a, 0, 0), 0);
            assert_eq!(e1.gw_dimension(a, 1, 0), 2);
        }
        for n in 1..=5u32 {
            let x = SurfaceModel::new(n);
            let a = HClass::section_plus_fibers(3);
            assert_eq!(x.gw_dimension(a, 0, 0), 2 * (1 - n as i64));
            assert_eq!(x.gw_dimension(a, 0, 0), -2 * x.geometric_genus());
            assert_eq!(x.family_dimension(a, 0, 0), 0);
        }
        // dimension is linear in the number of marked points with slope 2
        let x = SurfaceModel::new(3);
        let a = HClass::section_plus_fibers(2);
        for k in 0..5 {
            assert_eq!(x.gw_dimension(a, 0, k + 1) - x.gw_dimension(a, 0, k), 2);
        }
        // E(2), S+dF, g=1, k=1: K = 0, so 2[0 - 0 + 1 + 1] = 4
        assert_eq!(
            SurfaceModel::new(2).family_dimension(HClass::section_plus_fibers(5), 1, 1),
            4
        );
    }

    #[test]
    fn family_dimension_exceeds_gw_dimension_by_twice_genus() {
        let mut rng = StdRng::seed_from_u64(23);
        for n in 1..=6u32 {
            let x = SurfaceModel::new(n);
            for _ in 0..50 {
                let a = HClass::new(rng.gen_range(-5..=5), rng.gen_range(-5..=5));
                let g = rng.gen_range(0..4);
                let k = rng.gen_range(0..4);
                assert_eq!(
                    x.family_dimension(a, g, k) - x.gw_dimension(a, g, k),
                    2 * x.geometric_genus()
                );
            }
        }
    }

    #[test]
    fn divisor_axiom_factors() {
        let e1 = SurfaceModel::new(1);
        let fiber = HClass::fibers(1);
        assert_eq!(
            e1.divisor_axiom_factor(HClass::section_plus_fibers(4), fiber),
            1
        );
        assert_eq!(e1.divisor_axiom_factor(HClass::fibers(7), fiber), 0);
        assert_eq!(e1.divisor_axiom_factor(HClass::new(2, 3), fiber), 2);
    }

    #[test]
    fn lattice_is_unimodular_with_signature_1_9() {
        let lat = E1Lattice::geometric();
        assert_eq!(lat.det(), Rational::from_int(-1));
        assert_eq!(lat.signature(), (1, 9));
    }

    #[test]
    fn section_and_fiber_products() {
        let lat = E1Lattice::geometric();
        let f = lat.fiber();
        assert_eq!(lat.pair_vectors(&f, &f), 0);
        for i in 1..=9 {
            let si = lat.section(i);
            assert_eq!(lat.pair_vectors(&f, &si), 1);
            for j in 1..=9 {
                let sj = lat.section(j);
                assert_eq!(lat.pair_vectors(&si, &sj), if i == j { -1 } else { 0 });
            }
        }
        // (S + dF)^2 = 2d - 1 in the full lattice as well
        for d in 0..5 {
            let a = lat.section_plus_fibers(d);
            assert_eq!(lat.pair_vectors(&a, &a), 2 * d - 1);
        }
    }

    #[test]
    fn dual_basis_pairs_to_identity_and_reconstructs() {
        let lat = E1Lattice::geometric();
        let dual = lat.dual_basis().unwrap();
        for (a, ha) in dual.iter().enumerate() {
            for b in 0..E1_RANK {
                let mut e_b = [0i64; E1_RANK];
                e_b[b] = 1;
                assert_eq!(lat.pair_vectors(ha, &e_b), i64::from(a == b));
            }
        }
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..100 {
            let mut x = [0i64; E1_RANK];
            for slot in &mut x {
                *slot = rng.gen_range(-50..=50);
            }
            let mut rebuilt = [0i64; E1_RANK];
            for (a, ha) in dual.iter().enumerate() {
                let mut e_a = [0i64; E1_RANK];
                e_a[a] = 1;
                let coeff = lat.pair_vectors(&x, &e_a);
                for (slot, entry) in rebuilt.iter_mut().zip(ha.iter()) {
                    *slot += coeff * entry;
                }
            }
            assert_eq!(rebuilt, x);
        }
    }

    #[test]
    fn section_fiber_span_is_an_index_three_sublattice() {
        // The Gram of {S_1..S_9, F} alone has determinant -9: it is not a
        // basis of the full lattice, and dual_basis refuses it.
        let lat = E1Lattice::geometric();
        let mut vectors: Vec<LatticeVector> = (1..=9).map(|i| lat.section(i)).collect();
        vectors.push(lat.fiber());
        let mut gram = [[0i64; E1_RANK]; E1_RANK];
        for i in 0..E1_RANK {
            for j in 0..E1_RANK {
                gram[i][j] = lat.pair_vectors(&vectors[i], &vectors[j]);
            }
        }
        let sub = E1Lattice::new(gram);
        assert_eq!(sub.det(), Rational::from_int(-9));
        assert_eq!(
            sub.dual_basis(),
            Err(Error::NotUnimodular {
                det: "-9".to_owned()
            })
        );
    }
}
