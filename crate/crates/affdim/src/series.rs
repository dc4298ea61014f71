//! Truncated power-series arithmetic in the scaled disc coordinate
//! x = 2(z - 1/2), over either real or complex scalars.
//!
//! The monomials x^k have unit norm in the coefficient model of the Hardy
//! space of the disc of radius 1/2 centred at 1/2, so series coefficients
//! here are directly the basis coefficients the operator assembly needs.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A polynomial of fixed order N: f = sum_{k<N} coeffs[k] x^k. Every
/// operation is closed under truncation — coefficient k of a result depends
/// only on input coefficients 0..=k.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<T = f64> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::OrderMismatch { left: 0, right: 0 });
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Overflow);
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order.max(1)];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    /// c0 + c1 x, padded with zeros to `order`.
    pub fn affine(c0: T, c1: T, order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order.max(2)];
        coeffs[0] = c0;
        coeffs[1] = c1;
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).copied().unwrap_or_else(T::zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| a - b)
            .collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn scale(&self, k: T) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![T::zero(); n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let mut acc = T::zero();
            for j in 0..=k {
                acc = acc + self.coeffs[j] * other.coeffs[k - j];
            }
            *c = acc;
        }
        Ok(PowerSeries { coeffs })
    }

    /// Principal logarithm. Requires Re(f(0)) > 0; higher terms come from
    /// integrating g' = f'/f termwise.
    pub fn log(&self) -> Result<Self> {
        let f0 = self.coeffs[0];
        if f0.re() <= 0.0 {
            return Err(Error::LogDomain {
                re: f0.re(),
                im: f0.im(),
            });
        }
        let n = self.order();
        let mut out = vec![T::zero(); n];
        out[0] = f0.ln();
        if n == 1 {
            return PowerSeries::new(out);
        }
        // q = f'/f by the triangular solve f * q = f'.
        let mut q = vec![T::zero(); n - 1];
        for k in 0..n - 1 {
            let mut acc = T::from_f64((k + 1) as f64) * self.coeffs[k + 1];
            for j in 1..=k {
                acc = acc - self.coeffs[j] * q[k - j];
            }
            q[k] = acc / f0;
        }
        for k in 0..n - 1 {
            out[k + 1] = q[k] / T::from_f64((k + 1) as f64);
        }
        PowerSeries::new(out)
    }

    /// Exponential via the recurrence (exp f)' = f' exp f.
    pub fn exp(&self) -> Result<Self> {
        let h0 = self.coeffs[0].exp();
        if !h0.is_finite() {
            return Err(Error::Overflow);
        }
        let n = self.order();
        let mut out = vec![T::zero(); n];
        out[0] = h0;
        for k in 0..n.saturating_sub(1) {
            let mut acc = T::zero();
            for j in 0..=k {
                acc = acc + T::from_f64((j + 1) as f64) * self.coeffs[j + 1] * out[k - j];
            }
            out[k + 1] = acc / T::from_f64((k + 1) as f64);
        }
        PowerSeries::new(out)
    }

    /// f^e = exp(e log f) for a scalar exponent, real or complex.
    pub fn pow(&self, e: T) -> Result<Self> {
        self.log()?.scale(e).exp()
    }

    /// Horner evaluation of the truncated polynomial at |x0| < 1.
    pub fn eval(&self, x0: T) -> Result<T> {
        if x0.abs() >= 1.0 {
            return Err(Error::EvalOutsideDisc(x0.abs()));
        }
        let mut acc = T::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        Ok(acc)
    }

    /// sum_k |coeffs[k]|; an upper bound for the sup of |f| on the closed disc.
    pub fn coeff_abs_sum(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn max_abs_im(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.im().abs())
            .fold(0.0, f64::max)
    }
}
