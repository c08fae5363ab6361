//! Finite O-sequences, Macaulay's growth bound and m-times weak Lefschetz sequences.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomials::binomial;

/// A finite O-sequence candidate `1 = h_0, h_1, ..., h_s` with `h_s > 0`.
///
/// Construction only enforces the shape (leading one, no interior zeros);
/// Macaulay admissibility is checked by [`validate_o_sequence`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OSequence {
    values: Vec<u64>,
}

impl OSequence {
    /// Normalizes `raw`: trailing zeros are stripped, interior zeros rejected.
    pub fn new(raw: &[u64]) -> Result<Self> {
        let end = raw.iter().rposition(|&v| v != 0).map_or(0, |p| p + 1);
        let values = &raw[..end];
        match values.first() {
            None => return Err(Error::NotOSequence("empty sequence".into())),
            Some(&1) => {}
            Some(&h0) => return Err(Error::NotOSequence(format!("h_0 = {h0}, expected 1"))),
        }
        if let Some(d) = values.iter().position(|&v| v == 0) {
            return Err(Error::NotOSequence(format!(
                "zero at degree {d} followed by a nonzero entry"
            )));
        }
        Ok(OSequence { values: values.to_vec() })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `h_d`, zero past the end.
    pub fn get(&self, d: usize) -> u64 {
        self.values.get(d).copied().unwrap_or(0)
    }

    /// Index of the last nonzero entry.
    pub fn length(&self) -> usize {
        self.values.len() - 1
    }

    /// Number of variables of the ambient ring, `h_1`.
    pub fn num_vars(&self) -> usize {
        self.get(1) as usize
    }

    /// First index `k` with `h_k >= h_{k+1}`.
    pub fn peak(&self) -> usize {
        (0..self.values.len())
            .find(|&d| self.get(d) >= self.get(d + 1))
            .unwrap_or(self.length())
    }

    pub fn is_unimodal(&self) -> bool {
        let k = self.peak();
        self.values[k..].windows(2).all(|w| w[0] >= w[1])
    }

    /// Sum of all entries (the vector-space dimension of the algebra).
    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl fmt::Display for OSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses comma- or whitespace-separated integers. Shape is checked, Macaulay is not.
impl FromStr for OSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OSequence::new(&parse_raw_sequence(s)?)
    }
}

pub fn parse_raw_sequence(s: &str) -> Result<Vec<u64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>().map_err(|_| Error::Parse {
                line: 1,
                message: format!("`{t}` is not a nonnegative integer"),
            })
        })
        .collect()
}

/// The `d`-th Macaulay representation of `v`: pairs `(a_i, i)` for
/// `i = d, d-1, ..., t` with `v = sum C(a_i, i)` and `a_d > ... > a_t >= t >= 1`.
pub fn macaulay_representation(v: u64, d: u64) -> Result<Vec<(u64, u64)>> {
    if d < 1 {
        return Err(Error::InvalidArgument("Macaulay representation needs d >= 1".into()));
    }
    let mut rest = v;
    let mut out = Vec::new();
    let mut i = d;
    while rest > 0 && i >= 1 {
        // greedy: the largest a with C(a, i) <= rest
        let mut a = i;
        while binomial(a + 1, i)? <= rest {
            a += 1;
        }
        rest -= binomial(a, i)?;
        out.push((a, i));
        i -= 1;
    }
    Ok(out)
}

/// `v^<d>`: the largest admissible `h_{d+1}` when `h_d = v`.
pub fn macaulay_bound(v: u64, d: u64) -> Result<u64> {
    let mut total: u64 = 0;
    for (a, i) in macaulay_representation(v, d)? {
        total = total
            .checked_add(binomial(a + 1, i + 1)?)
            .ok_or(Error::Overflow("Macaulay bound"))?;
    }
    Ok(total)
}

/// Checks Macaulay's condition, returning the normalized sequence or a reason.
pub fn validate_o_sequence(raw: &[u64]) -> Result<OSequence> {
    let h = OSequence::new(raw)?;
    for d in 1..h.length() {
        let bound = macaulay_bound(h.get(d), d as u64)?;
        if h.get(d + 1) > bound {
            return Err(Error::NotOSequence(format!(
                "h_{} = {} exceeds the Macaulay bound {}^<{}> = {}",
                d + 1,
                h.get(d + 1),
                h.get(d),
                d,
                bound
            )));
        }
    }
    Ok(h)
}

pub fn is_o_sequence(raw: &[u64]) -> bool {
    validate_o_sequence(raw).is_ok()
}

/// Truncated first difference `1, h_1 - h_0, ..., h_k - h_{k-1}` up to the peak `k`.
pub fn delta(h: &OSequence) -> Result<OSequence> {
    if !h.is_unimodal() {
        return Err(Error::NotUnimodal(h.to_string()));
    }
    let k = h.peak();
    let mut values = vec![1];
    values.extend((1..=k).map(|d| h.get(d) - h.get(d - 1)));
    OSequence::new(&values)
}

/// Outcome of [`is_m_times_wl`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlSequenceReport {
    pub holds: bool,
    pub reason: Option<String>,
    /// `i` such that `Δ^i h` is the first sequence that is not an O-sequence
    /// or is not unimodal when a difference is needed.
    pub failed_level: Option<usize>,
    /// `Δ^i h` for `i = 1..`, as far as the recursion got.
    pub deltas: Vec<OSequence>,
    /// `k_i`, the length of `Δ^i h`.
    pub lengths: Vec<usize>,
}

/// Whether `raw` is an `m`-times weak Lefschetz O-sequence.
pub fn is_m_times_wl(raw: &[u64], m: usize) -> WlSequenceReport {
    let mut report = WlSequenceReport { holds: false, reason: None, failed_level: None, deltas: Vec::new(), lengths: Vec::new() };
    let mut current = match validate_o_sequence(raw) {
        Ok(h) => h,
        Err(e) => {
            report.reason = Some(e.to_string());
            report.failed_level = Some(0);
            return report;
        }
    };
    for level in 0..m {
        let next = match delta(&current) {
            Ok(d) => d,
            Err(e) => {
                report.reason = Some(e.to_string());
                report.failed_level = Some(level);
                return report;
            }
        };
        if let Err(e) = validate_o_sequence(next.values()) {
            report.reason = Some(e.to_string());
            report.failed_level = Some(level + 1);
            return report;
        }
        report.lengths.push(next.length());
        report.deltas.push(next.clone());
        current = next;
    }
    report.holds = true;
    report
}

/// Like [`is_m_times_wl`] but returns the validated sequence or the failing level.
pub fn require_m_times_wl(raw: &[u64], m: usize) -> Result<(OSequence, WlSequenceReport)> {
    let report = is_m_times_wl(raw, m);
    if !report.holds {
        return Err(Error::NotWeakLefschetzSequence {
            m,
            level: report.failed_level.unwrap_or(0),
            reason: report.reason.unwrap_or_default(),
        });
    }
    Ok((OSequence::new(raw)?, report))
}
