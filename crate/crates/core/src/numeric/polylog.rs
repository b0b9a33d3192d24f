//! Direct summation of `Li_s(z) = sum z^k / k^s` inside the unit disc.

use crate::error::{Error, Result};

/// Partial sum together with a bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Series {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

/// `Li_s(z)` to absolute accuracy `tol`, for integer `s >= 1` and `|z| < 1`.
pub fn polylog(s: u32, z: f64, tol: f64) -> Result<f64> {
    Ok(polylog_series(s, z, tol)?.value)
}

pub fn polylog_series(s: u32, z: f64, tol: f64) -> Result<Series> {
    if s == 0 {
        return Err(Error::DomainError("polylog order must be at least 1".into()));
    }
    if z.abs().is_nan() || z.abs() >= 1.0 {
        return Err(Error::DomainError(format!("polylog series needs |z| < 1, got {z}")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::DomainError("tolerance must be positive".into()));
    }
    let r = z.abs();
    let (mut sum, mut power) = (0.0, 1.0);
    let mut k = 0usize;
    loop {
        // the tail after term k is at most |z|^(k+1) / (1 - |z|)
        let tail = r.powi(k as i32 + 1) / ((k as f64 + 1.0).powi(s as i32) * (1.0 - r));
        if tail <= tol || r == 0.0 {
            return Ok(Series { value: sum, tail_bound: tail, terms: k });
        }
        k += 1;
        power *= z;
        sum += power / (k as f64).powi(s as i32);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_is_a_logarithm() {
        let v = polylog(1, 0.5, 1e-15).unwrap();
        assert!((v - std::f64::consts::LN_2).abs() < 1e-14);
    }

    #[test]
    fn dilog_half() {
        // pi^2/12 - log(2)^2/2
        let exact = std::f64::consts::PI.powi(2) / 12.0 - std::f64::consts::LN_2.powi(2) / 2.0;
        assert!((polylog(2, 0.5, 1e-15).unwrap() - exact).abs() < 1e-14);
    }

    #[test]
    fn zero_and_domain() {
        assert_eq!(polylog(3, 0.0, 1e-12).unwrap(), 0.0);
        assert!(polylog(2, 1.0, 1e-12).is_err());
    }
}
