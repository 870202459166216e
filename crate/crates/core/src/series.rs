//! Exact rational coefficients of the square-root operator expansion
//!
//! ```text
//! sqrt(1 - L^2 Delta) psi = (1 - sum_{n>=1} a_n L^{2n} Delta^n) psi,
//! a_n = (2n-3)!!/(2n)!!,   b_n = (2n-1)!!/(2n)!!,
//! ```
//!
//! with the convention (-1)!! = 1 so that a_1 = 1/2. The coefficients are
//! kept as arbitrary-precision rationals and floated only at application
//! time.
//!
//! Note: the printed value b_2 = 1/8 in the source table is inconsistent with
//! the defining double factorials, which give b_2 = 3/8; this module follows
//! the definition.

use num::bigint::BigInt;
use num::rational::BigRational;
#[cfg(test)]
use num::One;
use num::ToPrimitive;

use crate::error::{Error, Result};

/// Both expansion coefficients at a given order.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    pub order: u32,
    pub a: BigRational,
    pub b: BigRational,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// a_n = (2n-3)!!/(2n)!!, built from the recurrence
/// a_{n+1} = a_n (2n-1)/(2n+2), a_1 = 1/2.
pub fn series_coeff_a(n: u32) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain(
            "series coefficient a_n requires n >= 1 (the n = 0 term is the leading 1)".into(),
        ));
    }
    let mut a = ratio(1, 2);
    for m in 1..n as i64 {
        a *= ratio(2 * m - 1, 2 * m + 2);
    }
    Ok(a)
}

/// b_n = (2n-1)!!/(2n)!!, built from the recurrence
/// b_{n+1} = b_n (2n+1)/(2n+2), b_1 = 1/2.
pub fn series_coeff_b(n: u32) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain(
            "series coefficient b_n requires n >= 1".into(),
        ));
    }
    let mut b = ratio(1, 2);
    for m in 1..n as i64 {
        b *= ratio(2 * m + 1, 2 * m + 2);
    }
    Ok(b)
}

pub fn coefficients(n: u32) -> Result<SeriesCoefficients> {
    Ok(SeriesCoefficients {
        order: n,
        a: series_coeff_a(n)?,
        b: series_coeff_b(n)?,
    })
}

/// a_1..=a_n floated, index 0 holding a_1.
pub fn coeff_a_table(n: u32) -> Vec<f64> {
    let mut out = Vec::with_capacity(n as usize);
    let mut a = ratio(1, 2);
    for m in 1..=n as i64 {
        out.push(a.to_f64().expect("coefficient fits in f64"));
        a *= ratio(2 * m - 1, 2 * m + 2);
    }
    out
}

/// Partial sum of the operator symbol:
/// `1 - sum_{n=1}^{N} a_n (-kappa^2)^n` where `kappa = compton_length * k`.
///
/// For kappa < 1 this converges to sqrt(1 + kappa^2), the exact Fourier
/// symbol of the square-root operator.
pub fn sqrt_symbol_partial(kappa_sq: f64, n_terms: u32) -> f64 {
    let table = coeff_a_table(n_terms);
    let mut sum = 1.0;
    let mut power = 1.0; // (-kappa^2)^n
    for a_n in table {
        power *= -kappa_sq;
        sum -= a_n * power;
    }
    sum
}

/// Exact Fourier symbol sqrt(1 + kappa^2).
pub fn sqrt_symbol_exact(kappa_sq: f64) -> f64 {
    (1.0 + kappa_sq).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Independent brute-force double-factorial oracle.
    fn double_factorial(k: i64) -> BigInt {
        // (-1)!! = 1 by convention.
        let mut acc = BigInt::one();
        let mut m = k;
        while m >= 2 {
            acc *= BigInt::from(m);
            m -= 2;
        }
        acc
    }

    fn oracle_a(n: i64) -> BigRational {
        BigRational::new(double_factorial(2 * n - 3), double_factorial(2 * n))
    }

    fn oracle_b(n: i64) -> BigRational {
        BigRational::new(double_factorial(2 * n - 1), double_factorial(2 * n))
    }

    #[test]
    fn printed_values() {
        assert_eq!(series_coeff_a(1).unwrap(), ratio(1, 2));
        assert_eq!(series_coeff_a(2).unwrap(), ratio(1, 8));
        assert_eq!(series_coeff_a(3).unwrap(), ratio(3, 48));
        assert_eq!(series_coeff_b(1).unwrap(), ratio(1, 2));
        assert_eq!(series_coeff_b(3).unwrap(), ratio(15, 48));
    }

    #[test]
    fn oracle_values() {
        // a_4 = 15/384, b_2 = 3/8 (definition, not the printed table),
        // b_5 = 945/3840.
        assert_eq!(series_coeff_a(4).unwrap(), ratio(15, 384));
        assert_eq!(series_coeff_b(2).unwrap(), ratio(3, 8));
        assert_eq!(series_coeff_b(5).unwrap(), ratio(945, 3840));
        for n in 1..=64 {
            assert_eq!(series_coeff_a(n).unwrap(), oracle_a(n as i64), "a_{n}");
            assert_eq!(series_coeff_b(n).unwrap(), oracle_b(n as i64), "b_{n}");
        }
    }

    #[test]
    fn recurrences_hold_exactly() {
        for n in 1..=64u32 {
            let m = n as i64;
            assert_eq!(
                series_coeff_a(n + 1).unwrap(),
                series_coeff_a(n).unwrap() * ratio(2 * m - 1, 2 * m + 2)
            );
            assert_eq!(
                series_coeff_b(n + 1).unwrap(),
                series_coeff_b(n).unwrap() * ratio(2 * m + 1, 2 * m + 2)
            );
        }
        // Spot check from the recurrence: a_4 = a_3 * (5/8).
        assert_eq!(
            series_coeff_a(4).unwrap(),
            series_coeff_a(3).unwrap() * ratio(5, 8)
        );
    }

    #[test]
    fn positivity_and_ordering() {
        let zero = BigRational::new(BigInt::from(0), BigInt::one());
        let mut prev: Option<BigRational> = None;
        for n in 1..=64 {
            let a = series_coeff_a(n).unwrap();
            let b = series_coeff_b(n).unwrap();
            assert!(a > zero);
            if let Some(p) = prev {
                assert!(a < p, "a_n strictly decreasing at n = {n}");
            }
            if n >= 2 {
                assert!(b > a, "b_n > a_n at n = {n}");
            }
            prev = Some(a);
        }
    }

    #[test]
    fn n_zero_rejected() {
        assert!(series_coeff_a(0).is_err());
        assert!(series_coeff_b(0).is_err());
    }

    #[test]
    fn symbol_partial_sums() {
        // Plane-wave factors at kappa = 0.5 from one- and two-term arithmetic.
        assert_relative_eq!(sqrt_symbol_partial(0.25, 1), 1.125, max_relative = 1e-15);
        assert_relative_eq!(
            sqrt_symbol_partial(0.25, 2),
            1.1171875,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            sqrt_symbol_partial(0.25, 40),
            sqrt_symbol_exact(0.25),
            max_relative = 1e-14
        );
    }
}
