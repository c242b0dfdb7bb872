//! Truncated one-variable Laurent series with complex coefficients.
//!
//! Arithmetic is exact on retained degrees: multiplying two series and then
//! truncating gives the same coefficients as truncating the inputs first.

use crate::{Cplx, Error, Result};

/// `sum_{k >= min_deg} c_k x^k`, retained through degree `trunc`.
///
/// `coeffs[i]` holds the coefficient of `x^(min_deg + i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSeries {
    pub min_deg: i32,
    pub coeffs: Vec<Cplx>,
    pub trunc: i32,
}

impl LaurentSeries {
    pub fn new(min_deg: i32, coeffs: Vec<Cplx>, trunc: i32) -> Self {
        debug_assert_eq!(coeffs.len() as i32, trunc - min_deg + 1);
        LaurentSeries {
            min_deg,
            coeffs,
            trunc,
        }
    }

    pub fn zero(trunc: i32) -> Self {
        LaurentSeries {
            min_deg: trunc,
            coeffs: vec![Cplx::new(0.0, 0.0)],
            trunc,
        }
    }

    /// Coefficient of `x^k` (zero outside the retained window).
    pub fn coeff(&self, k: i32) -> Cplx {
        if k < self.min_deg || k > self.trunc {
            Cplx::new(0.0, 0.0)
        } else {
            self.coeffs[(k - self.min_deg) as usize]
        }
    }

    pub fn add(&self, rhs: &LaurentSeries) -> LaurentSeries {
        let trunc = self.trunc.min(rhs.trunc);
        let min_deg = self.min_deg.min(rhs.min_deg).min(trunc);
        let mut coeffs = vec![Cplx::new(0.0, 0.0); (trunc - min_deg + 1) as usize];
        for (out, k) in coeffs.iter_mut().zip(min_deg..=trunc) {
            *out = self.coeff(k) + rhs.coeff(k);
        }
        LaurentSeries {
            min_deg,
            coeffs,
            trunc,
        }
    }

    pub fn scale(&self, c: Cplx) -> LaurentSeries {
        LaurentSeries {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            trunc: self.trunc,
        }
    }

    /// Product, truncated so that every retained coefficient is exact:
    /// retained degree runs to `min(t1 + m2, t2 + m1)`.
    pub fn mul(&self, rhs: &LaurentSeries) -> LaurentSeries {
        let min_deg = self.min_deg + rhs.min_deg;
        let trunc = (self.trunc + rhs.min_deg).min(rhs.trunc + self.min_deg);
        let mut coeffs = vec![Cplx::new(0.0, 0.0); (trunc - min_deg + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            let da = self.min_deg + i as i32;
            if da + rhs.min_deg > trunc {
                break;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = da + rhs.min_deg + j as i32;
                if k > trunc {
                    break;
                }
                coeffs[(k - min_deg) as usize] += a * b;
            }
        }
        LaurentSeries {
            min_deg,
            coeffs,
            trunc,
        }
    }

    /// Termwise derivative `d/dx`.
    pub fn derivative(&self) -> LaurentSeries {
        let min_deg = self.min_deg - 1;
        let trunc = self.trunc - 1;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * Cplx::new((self.min_deg + i as i32) as f64, 0.0))
            .collect();
        LaurentSeries {
            min_deg,
            coeffs,
            trunc,
        }
    }

    /// Multiplicative inverse. Requires a nonzero coefficient at `min_deg`.
    pub fn invert(&self) -> Result<LaurentSeries> {
        let lead = self.coeffs[0];
        if lead.norm() == 0.0 {
            return Err(Error::SingularPoint(
                "series inversion needs a nonzero leading coefficient".into(),
            ));
        }
        let n = self.coeffs.len();
        // (lead x^m (1 + u))^{-1} = lead^{-1} x^{-m} (1 - u + u^2 - ...)
        let mut inv = vec![Cplx::new(0.0, 0.0); n];
        inv[0] = Cplx::new(1.0, 0.0) / lead;
        for k in 1..n {
            let mut acc = Cplx::new(0.0, 0.0);
            for j in 0..k {
                acc += inv[j] * self.coeffs[k - j];
            }
            inv[k] = -acc / lead;
        }
        let min_deg = -self.min_deg;
        Ok(LaurentSeries {
            min_deg,
            trunc: min_deg + (n as i32 - 1),
            coeffs: inv,
        })
    }

    /// Evaluate at a point (includes the pole part).
    pub fn eval(&self, x: Cplx) -> Cplx {
        let mut acc = Cplx::new(0.0, 0.0);
        // Horner on the regular part, explicit powers for the pole part.
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let k = self.min_deg + i as i32;
            if k >= 0 {
                acc = acc * x + c;
            }
        }
        let mut xpow = acc * x.powi(self.min_deg.max(0));
        if self.min_deg < 0 {
            xpow = acc;
            for (i, c) in self.coeffs.iter().enumerate() {
                let k = self.min_deg + i as i32;
                if k < 0 {
                    xpow += c * x.powi(k);
                }
            }
        }
        xpow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Cplx {
        Cplx::new(re, 0.0)
    }

    #[test]
    fn mul_truncation_commutes() {
        // (1/x + 1 + x) * (2 + x) to trunc 1
        let a = LaurentSeries::new(-1, vec![c(1.0), c(1.0), c(1.0)], 1);
        let b = LaurentSeries::new(0, vec![c(2.0), c(1.0)], 1);
        let p = a.mul(&b);
        assert_eq!(p.coeff(-1), c(2.0));
        assert_eq!(p.coeff(0), c(3.0));
        assert_eq!(p.coeff(1), c(3.0));
        // widening one input must not change retained coefficients
        let a2 = LaurentSeries::new(-1, vec![c(1.0), c(1.0), c(1.0), c(7.0)], 2);
        let p2 = a2.mul(&b);
        for k in -1..=p.trunc.min(p2.trunc) {
            assert_eq!(p.coeff(k), p2.coeff(k));
        }
    }

    #[test]
    fn invert_round_trip() {
        let a = LaurentSeries::new(-1, vec![c(2.0), c(0.5), c(-1.0), c(0.25)], 2);
        let inv = a.invert().unwrap();
        let prod = a.mul(&inv);
        assert!((prod.coeff(0) - c(1.0)).norm() < 1e-14);
        for k in 1..=prod.trunc {
            assert!(prod.coeff(k).norm() < 1e-14);
        }
    }

    #[test]
    fn invert_rejects_zero_lead() {
        let a = LaurentSeries::new(0, vec![c(0.0), c(1.0)], 1);
        assert!(a.invert().is_err());
    }

    #[test]
    fn eval_matches_pole_and_regular_parts() {
        let s = LaurentSeries::new(-2, vec![c(3.0), c(0.0), c(1.0), c(2.0)], 1);
        let x = Cplx::new(0.3, 0.1);
        let want = c(3.0) * x.powi(-2) + c(1.0) + c(2.0) * x;
        assert!((s.eval(x) - want).norm() < 1e-13);
    }
}
