use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{KdError, Result};
use crate::graph::VertexSet;

/// The J-representation `{ floor((n*i + r) / m) : 0 <= i < m }` on `C_n`.
pub fn j_representation(n: usize, m: usize, r: usize) -> Result<VertexSet> {
    if m == 0 || m > n {
        return Err(KdError::param(format!(
            "need 1 <= m <= n, got m={m}, n={n}"
        )));
    }
    if r >= n {
        return Err(KdError::param(format!("need 0 <= r < n, got r={r}, n={n}")));
    }
    let set: VertexSet = (0..m).map(|i| (n * i + r) / m).collect();
    debug_assert_eq!(set.len(), m);
    Ok(set)
}

/// Clockwise and geodesic distances between members of a cycle subset that
/// are `span` positions apart in cyclic order, one entry per starting member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub span: usize,
    pub clockwise: Vec<usize>,
    pub geodesic: Vec<usize>,
}

impl SpectrumEntry {
    /// Distinct clockwise distances, ascending.
    pub fn clockwise_support(&self) -> Vec<usize> {
        let mut s = self.clockwise.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

/// Spectra for every span `1..|A|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub spans: BTreeMap<usize, SpectrumEntry>,
}

fn check_cycle_set(a: &VertexSet, n: usize) -> Result<()> {
    if a.is_empty() {
        return Err(KdError::param("vertex set must be nonempty"));
    }
    a.check_range(n)
}

pub fn spectrum(a: &VertexSet, n: usize, span: usize) -> Result<SpectrumEntry> {
    check_cycle_set(a, n)?;
    let m = a.len();
    if span == 0 || span >= m {
        return Err(KdError::param(format!(
            "span must lie in 1..{m}, got {span}"
        )));
    }
    let members = a.as_slice();
    let clockwise: Vec<usize> = (0..m)
        .map(|i| (members[(i + span) % m] + n - members[i]) % n)
        .collect();
    let geodesic = clockwise.iter().map(|&c| c.min(n - c)).collect();
    Ok(SpectrumEntry {
        span,
        clockwise,
        geodesic,
    })
}

pub fn spectrum_report(a: &VertexSet, n: usize) -> Result<SpectrumReport> {
    check_cycle_set(a, n)?;
    let spans = (1..a.len())
        .map(|s| spectrum(a, n, s).map(|e| (s, e)))
        .collect::<Result<_>>()?;
    Ok(SpectrumReport { n, spans })
}

/// Every span's clockwise support is one integer or two consecutive integers.
pub fn is_maximally_even(a: &VertexSet, n: usize) -> Result<bool> {
    Ok(spectrum_report(a, n)?.spans.values().all(|e| {
        let s = e.clockwise_support();
        s.len() == 1 || (s.len() == 2 && s[1] == s[0] + 1)
    }))
}
