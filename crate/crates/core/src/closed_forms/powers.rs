use super::paths::check_kd;
use crate::error::{KdError, Result};

fn check(n: usize, ell: usize) -> Result<()> {
    if n == 0 {
        return Err(KdError::param("path needs at least one vertex"));
    }
    if ell == 0 {
        return Err(KdError::param("power exponent must be at least 1"));
    }
    Ok(())
}

/// k,d-independence number of `P_n^ell`.
///
/// For `d >= k - 1` this is `alpha_path(n, (k-2) ell + 2, d ell)`; when
/// `d <= k - 2` no geodesic can hold `k` vertices and the answer is `n`.
pub fn alpha_path_power(n: usize, k: usize, d: usize, ell: usize) -> Result<usize> {
    check(n, ell)?;
    check_kd(k, d)?;
    if d + 2 <= k {
        return Ok(n);
    }
    let block = (k - 2) * ell + 1;
    let period = d * ell + 1;
    Ok(block * (n / period) + (n % period).min(block))
}

/// k,d-chromatic number of `P_n^ell` for `k <= d + 1`.
pub fn chi_path_power(n: usize, k: usize, d: usize, ell: usize) -> Result<usize> {
    check(n, ell)?;
    check_kd(k, d)?;
    if k > d + 1 {
        return Err(KdError::param(format!("need k <= d + 1, got k={k}, d={d}")));
    }
    let block = (k - 2) * ell + 1;
    let reach = d * ell;
    Ok(if n <= reach {
        n.div_ceil(block)
    } else {
        (reach + 1).div_ceil(block)
    })
}

/// The `(k, d)` with `(k-2) ell = big_k - 2` and `d ell = big_d`, if any.
pub fn reduction_parameters(big_k: usize, big_d: usize, ell: usize) -> Option<(usize, usize)> {
    if big_k < 2 || big_d == 0 || ell == 0 {
        return None;
    }
    ((big_k - 2).is_multiple_of(ell) && big_d.is_multiple_of(ell))
        .then(|| ((big_k - 2) / ell + 2, big_d / ell))
}

#[cfg(test)]
/// Same values routed through the path formulas with lifted parameters.
pub(crate) fn lifted(n: usize, k: usize, d: usize, ell: usize) -> Result<(usize, usize)> {
    use super::paths::{alpha_path, chi_path};
    let (lk, ld) = ((k - 2) * ell + 2, d * ell);
    Ok((alpha_path(n, lk, ld)?, chi_path(n, lk, ld)?))
}
