use std::ops::{Add, Mul, Neg, Sub};

use crate::{BigRat, Error, Result};

/// Truncated power series `Σ_{k=0}^{N} c_k x^k` with exact coefficients.
/// Arithmetic keeps the smaller truncation order of its operands.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<BigRat>,
}

impl PowerSeries {
    /// `coeffs[k]` multiplies `x^k`; the truncation order is `len − 1`.
    pub fn new(coeffs: Vec<BigRat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "power series needs at least one coefficient".into(),
            ));
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigRat::zero(); order + 1],
        }
    }

    /// A polynomial `Σ p[k] x^k`, truncated or zero-padded to `order`.
    pub fn from_poly(p: &[BigRat], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, v) in p.iter().enumerate().take(order + 1) {
            s.coeffs[k] = v.clone();
        }
        s
    }

    pub fn from_i64s(p: &[i64], order: usize) -> Self {
        Self::from_poly(&p.iter().map(|&v| BigRat::from(v)).collect::<Vec<_>>(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn set_coeff(&mut self, k: usize, v: BigRat) {
        if k < self.coeffs.len() {
            self.coeffs[k] = v;
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(|k| self.coeff(k)).collect(),
        }
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, s: &BigRat) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `d/dx`; the result is known one order lower.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        PowerSeries {
            coeffs: (1..self.coeffs.len())
                .map(|k| &self.coeffs[k] * BigRat::from(k as i64))
                .collect(),
        }
    }

    /// `x · self`; the result is known one order higher.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { coeffs }
    }

    /// `self / d` for `d` with nonzero constant term.
    pub fn div_unit(&self, d: &Self) -> Result<Self> {
        let d0 = d.coeffs[0]
            .recip()
            .map_err(|_| Error::InvalidArgument("division by a series with zero constant term".into()))?;
        let order = self.order().min(d.order());
        let mut q: Vec<BigRat> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc -= &d.coeffs[j] * &q[k - j];
            }
            q.push(acc * &d0);
        }
        Ok(PowerSeries { coeffs: q })
    }

    pub fn exp_neg_x(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = BigRat::one();
        for k in 0..=order {
            coeffs.push(c.clone());
            c = -c / BigRat::from(k as i64 + 1);
        }
        PowerSeries { coeffs }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, o: &PowerSeries) -> PowerSeries {
        let order = self.order().min(o.order());
        PowerSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, o: &PowerSeries) -> PowerSeries {
        let order = self.order().min(o.order());
        PowerSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect(),
        }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(&BigRat::from(-1))
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, o: &PowerSeries) -> PowerSeries {
        let order = self.order().min(o.order());
        let mut coeffs = vec![BigRat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let one_minus_x = PowerSeries::from_i64s(&[1, -1], 10);
        let g = PowerSeries::from_i64s(&[1], 10).div_unit(&one_minus_x).unwrap();
        assert!(g.coeffs().iter().all(|c| *c == 1));
        let sq = &g * &g;
        assert!(sq.coeffs().iter().enumerate().all(|(k, c)| *c == (k as i64 + 1)));
        assert_eq!(
            &(&g * &one_minus_x) - &PowerSeries::from_i64s(&[1], 10),
            PowerSeries::zero(10)
        );
    }

    #[test]
    fn calculus() {
        let p = PowerSeries::from_i64s(&[1, 2, 3], 4);
        assert_eq!(p.derivative(), PowerSeries::from_i64s(&[2, 6], 3));
        assert_eq!(p.mul_x(), PowerSeries::from_i64s(&[0, 1, 2, 3], 5));
        let e = PowerSeries::exp_neg_x(6);
        assert_eq!(e.coeff(3), BigRat::ratio(-1, 6));
        assert_eq!(&e.derivative() + &e.truncate(5), PowerSeries::zero(5));
        assert!(p.div_unit(&PowerSeries::from_i64s(&[0, 1], 4)).is_err());
    }
}
