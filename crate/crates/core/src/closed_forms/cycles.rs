use super::maxeven::j_representation;
use super::paths::check_kd;
use crate::error::{KdError, Result};
use crate::solvers::ColoringAssignment;

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(KdError::param(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Ok(())
}

fn check_d(n: usize, d: usize) -> Result<()> {
    if d > n / 2 {
        return Err(KdError::OutsideProvenRange(format!(
            "cycle formulas need d <= floor(n/2) = {}, got d={d}",
            n / 2
        )));
    }
    Ok(())
}

/// Size of the largest maximally even independent set, `floor((k-1) n / (d+1))`.
fn independent_size(n: usize, k: usize, d: usize) -> usize {
    (k - 1) * n / (d + 1)
}

/// k,d-independence number of `C_n` for `d <= floor(n/2)` and `k <= floor(n/2) + 1`.
pub fn alpha_cycle(n: usize, k: usize, d: usize) -> Result<usize> {
    check_n(n)?;
    check_kd(k, d)?;
    check_d(n, d)?;
    if k > n / 2 + 1 {
        return Err(KdError::OutsideProvenRange(format!(
            "cycle independence formula needs k <= floor(n/2) + 1 = {}, got k={k}",
            n / 2 + 1
        )));
    }
    if d + 2 <= k {
        return Ok(n);
    }
    Ok(independent_size(n, k, d))
}

/// k,d-chromatic number of `C_n`: 1 when `d <= k - 2`, otherwise `ceil(n / m)`
/// with `m = floor((k-1) n / (d+1))`, for `d <= floor(n/2)`.
pub fn chi_cycle(n: usize, k: usize, d: usize) -> Result<usize> {
    check_n(n)?;
    check_kd(k, d)?;
    if d + 2 <= k {
        return Ok(1);
    }
    check_d(n, d)?;
    Ok(n.div_ceil(independent_size(n, k, d)))
}

/// k,d-clique number of `C_n` for `d <= floor(n/2)`.
///
/// `d + 1` once `n >= 2d + 2`. For smaller cycles (where `d = floor(n/2)`)
/// every pair lies on a geodesic, so `k = 2` gives `n`; for `k >= 3` the
/// answer is still `d + 1`, except on `C_4` where all four vertices qualify.
/// In the trivial regime the answer is `min(k - 1, n)`.
pub fn omega_cycle(n: usize, k: usize, d: usize) -> Result<usize> {
    check_n(n)?;
    check_kd(k, d)?;
    if k > d + 1 {
        return Ok((k - 1).min(n));
    }
    check_d(n, d)?;
    Ok(if n >= 2 * d + 2 {
        d + 1
    } else if k == 2 || n == 4 {
        n
    } else {
        d + 1
    })
}

/// Optimal coloring of `C_n` by rotations of `J^0_{n,m}`: color `R + 1` is
/// `J + R` for `R < floor(n/m)`, and any leftover vertices share one more color.
pub fn canonical_cycle_coloring(n: usize, k: usize, d: usize) -> Result<ColoringAssignment> {
    check_n(n)?;
    check_kd(k, d)?;
    if d + 1 < k {
        return Err(KdError::param(format!("need k <= d + 1, got k={k}, d={d}")));
    }
    check_d(n, d)?;
    let m = independent_size(n, k, d);
    let base = j_representation(n, m, 0)?;
    let rotations = n / m;
    let mut colors = vec![rotations + 1; n];
    for r in 0..rotations {
        for v in base.iter() {
            colors[(v + r) % n] = r + 1;
        }
    }
    ColoringAssignment::new(colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_cycle(12, 4, 4).unwrap(), 7);
        assert_eq!(alpha_cycle(16, 4, 6).unwrap(), 6);
        assert_eq!(alpha_cycle(5, 2, 2).unwrap(), 1);
        assert!(matches!(
            alpha_cycle(10, 2, 6),
            Err(KdError::OutsideProvenRange(_))
        ));
        assert!(alpha_cycle(2, 2, 1).is_err());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_cycle(16, 4, 6).unwrap(), 3);
        assert_eq!(chi_cycle(5, 2, 2).unwrap(), 5);
        assert_eq!(chi_cycle(12, 2, 3).unwrap(), 4);
        assert_eq!(chi_cycle(9, 6, 3).unwrap(), 1);
        assert!(chi_cycle(9, 2, 5).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_cycle(16, 4, 6).unwrap(), 7);
        assert_eq!(omega_cycle(7, 2, 3).unwrap(), 7);
        assert_eq!(omega_cycle(9, 5, 2).unwrap(), 4);
        assert_eq!(omega_cycle(5, 3, 2).unwrap(), 3);
        assert_eq!(omega_cycle(7, 3, 3).unwrap(), 4);
        assert_eq!(omega_cycle(4, 3, 2).unwrap(), 4);
        assert_eq!(omega_cycle(6, 4, 3).unwrap(), 4);
        assert!(matches!(
            omega_cycle(6, 3, 4),
            Err(KdError::OutsideProvenRange(_))
        ));
    }

    #[test]
    fn colorings() {
        let c = canonical_cycle_coloring(16, 4, 6).unwrap();
        let classes: Vec<Vec<usize>> = c.classes().iter().map(|s| s.as_slice().to_vec()).collect();
        assert_eq!(
            classes,
            vec![
                vec![0, 2, 5, 8, 10, 13],
                vec![1, 3, 6, 9, 11, 14],
                vec![4, 7, 12, 15]
            ]
        );
        let c = canonical_cycle_coloring(12, 2, 3).unwrap();
        let classes: Vec<Vec<usize>> = c.classes().iter().map(|s| s.as_slice().to_vec()).collect();
        assert_eq!(
            classes,
            vec![vec![0, 4, 8], vec![1, 5, 9], vec![2, 6, 10], vec![3, 7, 11]]
        );
        let c = canonical_cycle_coloring(6, 2, 1).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1, 2, 1, 2]);
        assert!(canonical_cycle_coloring(6, 4, 2).is_err());
    }
}
