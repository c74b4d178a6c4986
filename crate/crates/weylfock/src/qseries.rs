//! Truncated integer q-series helpers for graded dimensions.

use crate::{Error, Result};

/// Coefficients of `prod_{k=1..n} (1 - q^k)` up to degree `n`.
pub fn euler_factor(n: usize) -> Vec<i64> {
    let mut coeffs = vec![0i64; n + 1];
    coeffs[0] = 1;
    for k in 1..=n {
        // multiply by (1 - q^k)
        for d in (k..=n).rev() {
            coeffs[d] -= coeffs[d - k];
        }
    }
    coeffs
}

/// Divides a dimension series by the Heisenberg character
/// `prod_{k>=1} (1 - q^k)^{-1}`, i.e. multiplies by the Euler factor.
/// Errors if any truncated coefficient comes out negative: that would
/// falsify a tensor-factorization with a free boson.
pub fn divide_by_heisenberg(dims: &[i64]) -> Result<Vec<i64>> {
    let n = dims.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let euler = euler_factor(n - 1);
    let mut out = vec![0i64; n];
    for (d, o) in out.iter_mut().enumerate() {
        let mut acc = 0i64;
        for k in 0..=d {
            acc += euler[k] * dims[d - k];
        }
        *o = acc;
    }
    if let Some(bad) = out.iter().position(|&c| c < 0) {
        return Err(Error::NonIntegralQuotient(format!(
            "coefficient {} at degree {bad}",
            out[bad]
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_pentagonal_prefix() {
        // prod (1-q^k) = 1 - q - q^2 + q^5 + q^7 - ...
        assert_eq!(euler_factor(7), vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn partitions_divide_to_one() {
        // p(n) series divided by the Heisenberg character is 1.
        let p = [1i64, 1, 2, 3, 5, 7, 11, 15];
        assert_eq!(divide_by_heisenberg(&p).unwrap(), vec![1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn negative_quotient_detected() {
        let dims = [1i64, 0, 0];
        assert!(divide_by_heisenberg(&dims).is_err());
    }
}
