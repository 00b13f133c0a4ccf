use crate::error::{KdError, Result};
use crate::graph::VertexSet;
use crate::solvers::ColoringAssignment;

pub(super) fn check_kd(k: usize, d: usize) -> Result<()> {
    if k < 2 || d < 1 {
        return Err(KdError::param(format!(
            "need k >= 2 and d >= 1, got k={k}, d={d}"
        )));
    }
    Ok(())
}

pub(super) fn check_nontrivial(k: usize, d: usize) -> Result<()> {
    check_kd(k, d)?;
    if k > d + 1 {
        return Err(KdError::param(format!("need k <= d + 1, got k={k}, d={d}")));
    }
    Ok(())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(KdError::param("path needs at least one vertex"));
    }
    Ok(())
}

/// k,d-independence number of `P_n`.
pub fn alpha_path(n: usize, k: usize, d: usize) -> Result<usize> {
    check_n(n)?;
    check_kd(k, d)?;
    if d + 2 <= k {
        return Ok(n);
    }
    let period = d + 1;
    Ok((k - 1) * (n / period) + (n % period).min(k - 1))
}

/// The canonical largest k,d-independent set of `P_n`: the first `k - 1`
/// vertices of every block of `d + 1` consecutive vertices.
///
/// Members are 0-based; [`VertexSet::labels_one_based`] gives the usual path labels.
pub fn canonical_independent_set_path(n: usize, k: usize, d: usize) -> Result<VertexSet> {
    check_n(n)?;
    check_nontrivial(k, d)?;
    Ok((0..n).filter(|v| v % (d + 1) < k - 1).collect())
}

/// k,d-chromatic number of `P_n`.
pub fn chi_path(n: usize, k: usize, d: usize) -> Result<usize> {
    check_n(n)?;
    check_nontrivial(k, d)?;
    Ok((d + 1).min(n).div_ceil(k - 1))
}

/// k,d-chromatic number of the two-way infinite path.
pub fn chi_path_infinite(k: usize, d: usize) -> Result<usize> {
    check_nontrivial(k, d)?;
    Ok((d + 1).div_ceil(k - 1))
}

/// The periodic coloring `f(i) = floor(((i - 1) mod a) / b) + 1` of the path
/// vertices `1..=n`, stored 0-based by vertex. It uses `ceil(a / b)` colors
/// once `n >= a`: runs of `b` equal colors repeating with period `a`.
pub fn canonical_path_coloring(n: usize, a: usize, b: usize) -> Result<ColoringAssignment> {
    if a == 0 || b == 0 {
        return Err(KdError::param(
            "coloring period and run length must be positive",
        ));
    }
    ColoringAssignment::new((0..n).map(|v| (v % a) / b + 1).collect())
}

/// k,d-clique number of `P_n`: `min(d + 1, n)`, or `min(k - 1, n)` when
/// `k > d + 1` and only vacuous cliques exist.
pub fn omega_path(n: usize, k: usize, d: usize) -> Result<usize> {
    check_n(n)?;
    check_kd(k, d)?;
    if k > d + 1 {
        return Ok((k - 1).min(n));
    }
    Ok((d + 1).min(n))
}
