//! Truncated formal power series over [`Rational`].
//!
//! A [`Series`] stores the coefficients c_0..c_N of Σ c_m t^m densely; N is
//! the truncation order (inclusive), so `coeffs.len() == order + 1`. Binary
//! operations require both operands to share the same order and panic
//! otherwise: the caller aligns orders explicitly, the library never
//! coerces. Silent coercion is exactly how truncation bugs sneak into
//! identity checks.
//!
//! Two series are equal iff their orders match and every coefficient
//! matches exactly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rational::Rational;

/// Truncated formal power series in t with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

fn assert_same_order(a: &Series, b: &Series) {
    assert_eq!(
        a.order(),
        b.order(),
        "series order mismatch: {} vs {}",
        a.order(),
        b.order()
    );
}

impl Series {
    /// Wraps an explicit coefficient vector; the truncation order is
    /// `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the constant term"
        );
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = value;
        Series { coeffs }
    }

    /// `coeff * t^power`, truncated to `order` (the term is dropped when
    /// `power > order`).
    pub fn monomial(coeff: Rational, power: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if power <= order {
            s.coeffs[power] = coeff;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^m. Panics when `m` exceeds the truncation order.
    pub fn coeff(&self, m: usize) -> &Rational {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Index of the lowest-order nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Series {
        self.scale(&Rational::from_int(k))
    }

    /// The Euler operator θ = t·d/dt: coefficient m of the result is m·c_m.
    pub fn theta(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| c * &Rational::from_int(m as i64))
                .collect(),
        }
    }

    /// Substitutes t ↦ t^k: result_m = c_{m/k} when k | m, else 0. The
    /// result keeps this series' order, so coefficients beyond
    /// floor(order/k) are unused. Requires `k >= 1`.
    pub fn substitute_power(&self, k: usize) -> Series {
        assert!(k >= 1, "substitution exponent must be at least 1");
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (m, slot) in coeffs.iter_mut().enumerate() {
            if m % k == 0 {
                *slot = self.coeffs[m / k].clone();
            }
        }
        Series { coeffs }
    }

    /// Zeroes out the odd-index coefficients.
    pub fn even_part(&self) -> Series {
        self.parity_part(0)
    }

    /// Zeroes out the even-index coefficients.
    pub fn odd_part(&self) -> Series {
        self.parity_part(1)
    }

    fn parity_part(&self, parity: usize) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| {
                    if m % 2 == parity {
                        c.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        }
    }

    /// Drops coefficients above `order`. Panics if `order` exceeds the
    /// current truncation order (a series never invents coefficients).
    pub fn truncated(&self, order: usize) -> Series {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {}",
            self.order(),
            order
        );
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Long division: the unique q with q·rhs == self at the shared order.
    ///
    /// Fails with [`Error::ZeroConstantTerm`] when the divisor vanishes at
    /// t = 0; such quotients are not representable as power series.
    pub fn div(&self, rhs: &Series) -> Result<Series, Error> {
        assert_same_order(self, rhs);
        let b0 = rhs.coeff(0);
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = b0.recip();
        let order = self.order();
        let mut q = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = self.coeffs[m].clone();
            for k in 1..=m {
                acc -= &(rhs.coeff(k) * &q[m - k]);
            }
            q.push(&acc * &inv);
        }
        Ok(Series { coeffs: q })
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        assert_same_order(self, rhs);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        assert_same_order(self, rhs);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Truncated Cauchy product: c_m = Σ_{k=0..m} a_k·b_{m−k}.
impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        assert_same_order(self, rhs);
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Series { coeffs }
    }
}

/// Truncated expansion of ∏_{d=1..order} (1 − t^d)^exponent.
///
/// Each factor is expanded through the generalized binomial series
/// (1 − t^d)^e = Σ_j binom(e, j)·(−1)^j·t^{dj} and multiplied in; factors
/// with d beyond the truncation order contribute nothing. Negative
/// exponents give the eta-quotient-type products such as ∏(1 − t^d)^{−12}.
pub fn product_power(exponent: i64, order: usize) -> Series {
    let mut acc = Series::one(order);
    if exponent == 0 {
        return acc;
    }
    for d in 1..=order {
        let mut factor = vec![Rational::zero(); order + 1];
        // binom(e, j) * (-1)^j, built incrementally:
        //   term_j = term_{j-1} * (e - j + 1)/j * (-1)
        let mut term = Rational::one();
        factor[0] = term.clone();
        let mut j: i64 = 1;
        while (j as usize) * d <= order {
            term *= &Rational::new(-(exponent - j + 1), j);
            factor[(j as usize) * d] = term.clone();
            if term.is_zero() {
                break; // nonnegative exponents terminate at j = e
            }
            j += 1;
        }
        acc = &acc * &Series::from_coeffs(factor);
    }
    acc
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (m, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.push(match m {
                    0 => c.to_string(),
                    1 => format!("{c}*t"),
                    _ => format!("{c}*t^{m}"),
                });
            }
            if terms.len() == 8 && m < self.order() {
                terms.push("...".to_owned());
                break;
            }
        }
        if terms.is_empty() {
            terms.push("0".to_owned());
        }
        write!(f, "{} + O(t^{})", terms.join(" + "), self.order() + 1)
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

struct SeriesVisitor;

impl<'de> Visitor<'de> for SeriesVisitor {
    type Value = Series;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a non-empty array of rational coefficient strings")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Series, A::Error> {
        let mut coeffs = Vec::new();
        while let Some(s) = seq.next_element::<String>()? {
            let r: Rational = s
                .parse()
                .map_err(|_| de::Error::custom(format!("invalid rational literal {s:?}")))?;
            coeffs.push(r);
        }
        if coeffs.is_empty() {
            return Err(de::Error::custom(
                "series must contain at least the constant term",
            ));
        }
        Ok(Series { coeffs })
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_seq(SeriesVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(values: &[i64]) -> Series {
        Series::from_coeffs(values.iter().map(|&v| Rational::from_int(v)).collect())
    }

    #[test]
    fn add_identities() {
        let a = ints(&[1, 1]);
        assert_eq!(&a + &Series::zero(1), a);
        assert_eq!(&a + &-&a, Series::zero(1));
        assert_eq!(&ints(&[1, 2]) + &ints(&[3, 4]), ints(&[4, 6]));
    }

    #[test]
    fn mul_identities() {
        let a = ints(&[3, -1, 2, 5]);
        assert_eq!(&a * &Series::one(3), a);
        assert_eq!(&ints(&[1, 1, 0]) * &ints(&[1, 1, 0]), ints(&[1, 2, 1]));
        // (1 - t) * (1 + t + ... + t^N) == 1 up to the truncation order.
        let n = 9;
        let mut geo = Series::one(n);
        for m in 1..=n {
            geo = &geo + &Series::monomial(Rational::one(), m, n);
        }
        let one_minus_t = &Series::one(n) - &Series::monomial(Rational::one(), 1, n);
        assert_eq!(&one_minus_t * &geo, Series::one(n));
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn mismatched_orders_panic() {
        let _ = &Series::one(3) + &Series::one(4);
    }

    #[test]
    fn division() {
        let n = 8;
        let one_minus_t = &Series::one(n) - &Series::monomial(Rational::one(), 1, n);
        let geo = Series::one(n).div(&one_minus_t).unwrap();
        assert!(geo.coeffs().iter().all(|c| c == &Rational::one()));

        let a = ints(&[2, -3, 5, 7, 0, 1, -4, 9, 2]);
        assert_eq!(a.div(&a).unwrap(), Series::one(n));
        assert_eq!(a.div(&Series::one(n)).unwrap(), a);
    }

    #[test]
    fn division_by_zero_constant_term_is_an_error() {
        let t = Series::monomial(Rational::one(), 1, 4);
        assert_eq!(Series::one(4).div(&t), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            Series::constant(Rational::from_int(5), 3).theta(),
            Series::zero(3)
        );
        let tk = Series::monomial(Rational::one(), 3, 5);
        assert_eq!(tk.theta(), Series::monomial(Rational::from_int(3), 3, 5));
        assert_eq!(ints(&[1, 12, 90]).theta(), ints(&[0, 12, 180]));
    }

    #[test]
    fn substitute_power_examples() {
        let a = ints(&[1, 2, 3, 4]);
        assert_eq!(a.substitute_power(1), a);
        assert_eq!(ints(&[1, 1]).substitute_power(2), ints(&[1, 0]));
        assert_eq!(ints(&[1, 1, 0, 0]).substitute_power(2), ints(&[1, 0, 1, 0]));
        // First nonzero terms of F(t^2) for the K3 product.
        let f = product_power(-24, 4);
        assert_eq!(f.substitute_power(2), ints(&[1, 0, 24, 0, 324]));
    }

    #[test]
    fn product_power_fixtures() {
        assert_eq!(product_power(0, 5), Series::one(5));
        // Frozen from the independent brute-force oracle.
        assert_eq!(
            product_power(-12, 8),
            ints(&[1, 12, 90, 520, 2535, 10908, 42614, 153960, 521235])
        );
        assert_eq!(product_power(-24, 3), ints(&[1, 24, 324, 3200]));
        // Positive exponent: Euler's pentagonal numbers for e = 1.
        assert_eq!(
            product_power(1, 12),
            ints(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])
        );
    }

    #[test]
    fn parity_parts() {
        let t = Series::monomial(Rational::one(), 1, 4);
        assert_eq!(t.even_part(), Series::zero(4));
        let a = ints(&[1, 2, 3, 4, 5]);
        assert_eq!(&a.even_part() + &a.odd_part(), a);
    }

    #[test]
    fn serde_round_trip_exact_strings() {
        let s = Series::from_coeffs(vec![
            Rational::new(-1, 24),
            Rational::one(),
            Rational::from_int(3),
        ]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[\"-1/24\",\"1\",\"3\"]");
        let back: Series = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Series>("[]").is_err());
    }

    const ORDER: usize = 12;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn arb_series() -> impl Strategy<Value = Series> {
        proptest::collection::vec(arb_rational(), ORDER + 1).prop_map(Series::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn theta_satisfies_leibniz(a in arb_series(), b in arb_series()) {
            let lhs = (&a * &b).theta();
            let rhs = &(&a.theta() * &b) + &(&a * &b.theta());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn div_inverts_mul(a in arb_series(), b in arb_series()) {
            // Force a unit constant term on the divisor.
            let mut coeffs = b.coeffs().to_vec();
            coeffs[0] = Rational::new(3, 2);
            let b = Series::from_coeffs(coeffs);
            prop_assert_eq!((&a * &b).div(&b).unwrap(), a);
        }

        #[test]
        fn substitute_power_is_a_ring_homomorphism(
            a in arb_series(),
            b in arb_series(),
            k in 1usize..=4,
        ) {
            let lhs = (&a * &b).substitute_power(k);
            let rhs = &a.substitute_power(k) * &b.substitute_power(k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn parity_decomposition(a in arb_series(), b in arb_series()) {
            prop_assert_eq!(&a.even_part() + &a.odd_part(), a.clone());
            // even-supported times odd-supported is odd-supported
            let product = &a.even_part() * &b.odd_part();
            prop_assert_eq!(product.odd_part(), product);
        }

        #[test]
        fn product_power_inverts(e in -6i64..=6) {
            let n = 16;
            let p = &product_power(e, n) * &product_power(-e, n);
            prop_assert_eq!(p, Series::one(n));
        }
    }
}
