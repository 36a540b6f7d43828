//! Truncated power series with exact rational coefficients, and the two
//! generating functions whose coefficients count the orbit sets.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::factorial;

/// A power series truncated at `x^order`, with exact rational
/// coefficients; `coeffs[k]` is the coefficient of `x^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn zero(order: usize) -> Series {
        Series {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Series {
        let mut s = Series::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// `x/(1-x)`: coefficients 0, 1, 1, 1, ...
    pub fn x_over_one_minus_x(order: usize) -> Series {
        let mut s = Series::zero(order);
        for c in s.coeffs.iter_mut().skip(1) {
            *c = BigRational::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Series {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// Cauchy product, truncated at the common order.
    pub fn mul(&self, other: &Series) -> Series {
        assert_eq!(self.order(), other.order(), "truncation order mismatch");
        let mut out = Series::zero(self.order());
        for k in 0..self.coeffs.len() {
            for m in 0..=k {
                out.coeffs[k] += self.coeffs[m].clone() * other.coeffs[k - m].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Series) -> Series {
        assert_eq!(self.order(), other.order(), "truncation order mismatch");
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        assert_eq!(self.order(), other.order(), "truncation order mismatch");
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Multiplication by `x^i`, truncating the tail.
    pub fn shift_xpow(&self, i: usize) -> Series {
        let mut out = Series::zero(self.order());
        for k in i..self.coeffs.len() {
            out.coeffs[k] = self.coeffs[k - i].clone();
        }
        out
    }

    /// Exponential of a series with zero constant term, by the derivative
    /// recurrence `(n+1)·b_{n+1} = Σ_k (k+1)·a_{k+1}·b_{n-k}`.
    pub fn exp(&self) -> Series {
        assert!(
            self.coeffs[0].is_zero(),
            "exponential requires a zero constant term"
        );
        let order = self.order();
        let mut b = Series::zero(order);
        b.coeffs[0] = BigRational::one();
        for n in 0..order {
            let mut acc = BigRational::zero();
            for k in 0..=n {
                acc += self.coeffs[k + 1].clone()
                    * BigRational::from(BigInt::from(k + 1))
                    * b.coeffs[n - k].clone();
            }
            b.coeffs[n + 1] = acc / BigRational::from(BigInt::from(n + 1));
        }
        b
    }

    /// Division by `1-x`: coefficientwise partial sums.
    pub fn div_one_minus_x(&self) -> Series {
        let mut out = self.clone();
        for k in 1..out.coeffs.len() {
            let prev = out.coeffs[k - 1].clone();
            out.coeffs[k] += prev;
        }
        out
    }

    /// `n! · [x^n]`, which must come out a non-negative integer.
    pub fn egf_value(&self, n: usize) -> BigUint {
        let c = self.coeffs[n].clone() * BigRational::from(BigInt::from(factorial(n)));
        assert!(c.is_integer(), "coefficient {} of the series is not integral", n);
        c.to_integer()
            .to_biguint()
            .expect("series coefficient must be non-negative")
    }
}

/// `x^shift · e^{x/(1-x)}`, the generating series whose `n`-th
/// coefficient, times `n!`, counts the orbits with co-rank `shift`.
pub fn orbit_count_series(shift: usize, order: usize) -> Series {
    Series::x_over_one_minus_x(order).exp().shift_xpow(shift)
}

/// `(e^{x/(1-x)} - x)/(1-x)`, the generating series whose `n`-th
/// coefficient, times `n!`, counts all orbits over every stabilizer index.
pub fn total_count_series(order: usize) -> Series {
    let mut x = Series::zero(order);
    if order >= 1 {
        x.coeffs[1] = BigRational::one();
    }
    Series::x_over_one_minus_x(order)
        .exp()
        .sub(&x)
        .div_one_minus_x()
}

/// `n! · [x^n] (x^shift · e^{x/(1-x)})`.
pub fn egf_orbit_count(shift: usize, n: usize) -> BigUint {
    assert!(shift <= n, "coefficient index {} below the shift {}", n, shift);
    orbit_count_series(shift, n).egf_value(n)
}

/// `n! · [x^n] ((e^{x/(1-x)} - x)/(1-x))`.
pub fn egf_total_count(n: usize) -> BigUint {
    total_count_series(n).egf_value(n)
}
