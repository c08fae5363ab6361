//! Weak Lefschetz checks for strongly stable ideals, the extremal ideal
//! `W_m(h)`, Gotzmann detection, maximal Betti numbers and rigidity.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::ek_graded_betti;
use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideals::{lex_segment, MonomialIdeal};
use crate::monomials::{monomials_of_degree, monomials_of_degree_lex, Monomial};
use crate::osequences::{delta, is_m_times_wl, require_m_times_wl, OSequence};

/// Which of the three combinatorial WLP conditions failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WlpFailure {
    /// The Hilbert function is not unimodal.
    NonUnimodal,
    /// A degree-`k+1` monomial in `x1..x_{n-1}` is missing from the ideal.
    MissingPower { monomial: Monomial },
    /// A generator divisible by `x_n` has degree at most `k`.
    LowDegreeLastVariable { generator: Monomial },
}

impl std::fmt::Display for WlpFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WlpFailure::NonUnimodal => f.write_str("non-unimodal Hilbert function"),
            WlpFailure::MissingPower { monomial } => write!(f, "missing power: {monomial} not in ideal"),
            WlpFailure::LowDegreeLastVariable { generator } => {
                write!(f, "low-degree generator divisible by the last variable: {generator}")
            }
        }
    }
}

/// Verdict of the combinatorial WLP criterion with `x_n` as Lefschetz element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlpReport {
    pub has_property: bool,
    pub failure: Option<WlpFailure>,
    /// Peak index of the Hilbert function.
    pub k: usize,
    pub hilbert: OSequence,
}

fn wlp_conditions(ideal: &MonomialIdeal, full_power: bool) -> Result<WlpReport> {
    let hilbert = ideal.artinian_hilbert()?;
    let k = hilbert.peak();
    let n = ideal.n();
    let failure = if !hilbert.is_unimodal() {
        Some(WlpFailure::NonUnimodal)
    } else {
        let missing = if n < 2 {
            None
        } else if full_power {
            // (x1..x_{n-1})^{k+1} ⊆ I, monomial by monomial
            monomials_of_degree(n - 1, k as u32 + 1)
                .into_iter()
                .map(|m| m.extend(n))
                .find(|m| !ideal.contains_unchecked(m))
        } else {
            let power = Monomial::var_power(n - 1, k as u32 + 1, n);
            (!ideal.contains_unchecked(&power)).then_some(power)
        };
        match missing {
            Some(monomial) => Some(WlpFailure::MissingPower { monomial }),
            None => ideal
                .gens()
                .iter()
                .find(|g| n >= 1 && g.exponent(n) > 0 && (g.degree() as usize) <= k)
                .map(|g| WlpFailure::LowDegreeLastVariable { generator: g.clone() }),
        }
    };
    Ok(WlpReport { has_property: failure.is_none(), failure, k, hilbert })
}

/// WLP of `R/I` for a strongly stable artinian `I`: unimodal Hilbert function,
/// `x_{n-1}^{k+1} ∈ I`, and no generator divisible by `x_n` in degree `<= k`.
pub fn has_wlp_stable(ideal: &MonomialIdeal) -> Result<WlpReport> {
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable);
    }
    wlp_conditions(ideal, false)
}

/// The same three conditions for an arbitrary artinian monomial ideal, with
/// `(x1..x_{n-1})^{k+1} ⊆ I` in place of the single power. Passing proves
/// `x_n` is a weak Lefschetz element; failing proves nothing without strong stability.
pub fn wlp_monomial_criterion(ideal: &MonomialIdeal) -> Result<WlpReport> {
    wlp_conditions(ideal, true)
}

/// One level of [`has_m_wlp_stable`]: the projection to `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub nvars: usize,
    pub report: WlpReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MWlpReport {
    pub holds: bool,
    /// Levels `i = 0..`, checking `ρ_{n-i}(I)`; stops at the first failure.
    pub levels: Vec<LevelReport>,
}

/// `m`-times WLP: `x_{n-i}` is a Lefschetz element of `ρ_{n-i}(I)` for `i < m`.
pub fn has_m_wlp_stable(ideal: &MonomialIdeal, m: usize) -> Result<MWlpReport> {
    let n = ideal.n();
    if m > n {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds the {n} variables")));
    }
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable);
    }
    ideal.require_artinian()?;
    let mut levels = Vec::with_capacity(m);
    for i in 0..m {
        let projected = ideal.project_rho(n - i)?;
        let report = wlp_conditions(&projected, false)?;
        let ok = report.has_property;
        levels.push(LevelReport { nvars: n - i, report });
        if !ok {
            return Ok(MWlpReport { holds: false, levels });
        }
    }
    Ok(MWlpReport { holds: true, levels })
}

/// The extremal ideal `W_m(h)` in `h_1` variables.
pub fn build_w(raw: &[u64], m: usize) -> Result<MonomialIdeal> {
    let (h, _) = require_m_times_wl(raw, m)?;
    build_w_checked(&h, m)
}

fn build_w_checked(h: &OSequence, m: usize) -> Result<MonomialIdeal> {
    if m == 0 {
        return lex_segment(h);
    }
    let n = h.num_vars();
    if n == 0 {
        return Ok(MonomialIdeal::zero(0));
    }
    let base = build_w_checked(&delta(h)?, m - 1)?;
    complete_by_revlex(base.extend(n)?, h)
}

/// Adjoins, degree by degree, the rev-lex largest standard monomials until the
/// Hilbert function is `h` and vanishes past its length.
fn complete_by_revlex(mut ideal: MonomialIdeal, h: &OSequence) -> Result<MonomialIdeal> {
    let k = h.peak();
    for d in 0..=(h.length() as u32 + 1) {
        let standard = ideal.standard_monomials(d);
        let target = h.get(d as usize) as usize;
        if standard.len() < target {
            return Err(Error::Verification(format!(
                "degree {d}: {} standard monomials, fewer than h_{d} = {target}",
                standard.len()
            )));
        }
        let excess = standard.len() - target;
        if excess == 0 {
            continue;
        }
        if d as usize <= k {
            return Err(Error::Verification(format!(
                "base ideal has the wrong Hilbert function in degree {d} <= k = {k}"
            )));
        }
        ideal = ideal.with_generators(standard.into_iter().take(excess))?;
    }
    Ok(ideal)
}

/// Whether `|R_1 I_k| = |R_1 Lex(I_k)|` for every `k <= d_max`.
pub fn is_gotzmann(ideal: &MonomialIdeal, d_max: u32) -> bool {
    let n = ideal.n();
    (0..=d_max).all(|k| {
        let piece = ideal.degree_piece(k);
        if piece.is_empty() {
            return true;
        }
        let lex: Vec<Monomial> = monomials_of_degree_lex(n, k).into_iter().take(piece.len()).collect();
        linear_span_size(&piece, n) == linear_span_size(&lex, n)
    })
}

/// Degree bound that suffices for [`is_gotzmann`]: past the largest generator
/// degree the condition persists.
pub fn gotzmann_degree_bound(ideal: &MonomialIdeal) -> u32 {
    ideal.max_generator_degree().unwrap_or(0) + 1
}

fn linear_span_size(piece: &[Monomial], n: usize) -> usize {
    piece
        .iter()
        .flat_map(|m| (1..=n).map(move |i| m.mul_var(i)))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Truncation degree used by the Gotzmann characterization of maximal Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CutoffPolicy {
    /// Generators of degree `<= k_m`.
    Km,
    /// Generators of degree `<= k_m + 1`.
    #[default]
    KmPlusOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxBettiReport {
    /// `ρ_{n-m}(I_{<=cutoff})` is Gotzmann.
    pub characterization: bool,
    /// Betti table of `R/I` equals that of `R/W_m(h)`. Authoritative.
    pub direct: bool,
    pub cutoff: u32,
    pub k_m: usize,
    pub table: BettiTable,
    pub extremal_table: BettiTable,
}

impl MaxBettiReport {
    pub fn verdicts_agree(&self) -> bool {
        self.characterization == self.direct
    }
}

struct Prepared {
    hilbert: OSequence,
    extremal: MonomialIdeal,
}

fn prepare(ideal: &MonomialIdeal, m: usize) -> Result<Prepared> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let wlp = has_m_wlp_stable(ideal, m)?;
    if !wlp.holds {
        return Err(Error::Precondition(format!("R/I does not have {m}-times the WLP")));
    }
    let hilbert = ideal.artinian_hilbert()?;
    if hilbert.num_vars() != ideal.n() {
        return Err(Error::Precondition(format!(
            "h_1 = {} differs from the {} ambient variables (ideal contains linear forms)",
            hilbert.num_vars(),
            ideal.n()
        )));
    }
    let extremal = build_w(hilbert.values(), m)?;
    Ok(Prepared { hilbert, extremal })
}

/// Compares the Gotzmann characterization against the direct Betti comparison with `W_m(h)`.
pub fn has_maximal_betti(ideal: &MonomialIdeal, m: usize, cutoff: CutoffPolicy) -> Result<MaxBettiReport> {
    let Prepared { hilbert, extremal } = prepare(ideal, m)?;
    let seq = is_m_times_wl(hilbert.values(), m);
    let k_m = *seq
        .lengths
        .get(m - 1)
        .ok_or_else(|| Error::Verification("Hilbert function of an m-WLP algebra is not m-times WL".into()))?;
    let cutoff_degree = match cutoff {
        CutoffPolicy::Km => k_m as u32,
        CutoffPolicy::KmPlusOne => k_m as u32 + 1,
    };
    let projected = ideal.truncate_below(cutoff_degree).project_rho(ideal.n() - m)?;
    let characterization = is_gotzmann(&projected, gotzmann_degree_bound(&projected));
    let table = ek_graded_betti(ideal)?;
    let extremal_table = ek_graded_betti(&extremal)?;
    Ok(MaxBettiReport {
        characterization,
        direct: table == extremal_table,
        cutoff: cutoff_degree,
        k_m,
        table,
        extremal_table,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub totals: Vec<u64>,
    pub extremal_totals: Vec<u64>,
    /// Smallest `q` with `β_q(R/I) = β_q(R/W_m(h))`.
    pub first_equal: Option<usize>,
    /// `β_q` equal implies `β_i` equal for all `i >= q`, for every `q`.
    pub implication_holds: bool,
    /// The graded refinement: `β_{ij}` equal for all `i >= q` and all `j`.
    pub graded_holds: bool,
}

/// Checks that equal `q`-th total Betti numbers propagate to all `i >= q`.
pub fn check_rigidity(ideal: &MonomialIdeal, m: usize) -> Result<RigidityReport> {
    let Prepared { extremal, .. } = prepare(ideal, m)?;
    let table = ek_graded_betti(ideal)?;
    let extremal_table = ek_graded_betti(&extremal)?;
    let totals = table.totals();
    let extremal_totals = extremal_table.totals();
    let n = ideal.n();
    let equal_from = |q: usize| (q..=n).all(|i| totals[i - 1] == extremal_totals[i - 1]);
    let graded_from = |q: usize| {
        let rows = table.entries().chain(extremal_table.entries());
        rows.filter(|&((i, _), _)| i >= q)
            .all(|((i, j), _)| table.get(i, j) == extremal_table.get(i, j))
    };
    let equal_at: Vec<usize> = (1..=n).filter(|&q| totals[q - 1] == extremal_totals[q - 1]).collect();
    Ok(RigidityReport {
        first_equal: equal_at.first().copied(),
        implication_holds: equal_at.iter().all(|&q| equal_from(q)),
        graded_holds: equal_at.iter().all(|&q| graded_from(q)),
        totals,
        extremal_totals,
    })
}

const SAMPLE_ATTEMPTS: usize = 10_000;

/// A seeded random artinian strongly stable ideal in `n` variables.
///
/// A few monomials of degree `2..=max_degree` (degree 1 only when
/// `max_degree = 1`) are closed under Borel moves, every monomial of degree
/// `max_degree + 1` is added, and the result is minimalized. With a target,
/// samples are drawn until the Hilbert function matches.
pub fn random_strongly_stable(
    seed: u64,
    n: usize,
    max_degree: u32,
    target: Option<&OSequence>,
) -> Result<MonomialIdeal> {
    if n == 0 || max_degree == 0 {
        return Err(Error::InvalidArgument("need n >= 1 and max_degree >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = if target.is_some() { SAMPLE_ATTEMPTS } else { 1 };
    for _ in 0..attempts {
        let ideal = sample_borel(&mut rng, n, max_degree)?;
        match target {
            None => return Ok(ideal),
            Some(t) if ideal.artinian_hilbert()? == *t => return Ok(ideal),
            Some(_) => {}
        }
    }
    Err(Error::NoSample { attempts })
}

fn sample_borel(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> Result<MonomialIdeal> {
    let low = max_degree.min(2);
    let count = rng.random_range(1..=2 * n);
    let mut closed: BTreeSet<Monomial> = BTreeSet::new();
    for _ in 0..count {
        let d = rng.random_range(low..=max_degree);
        let candidates = monomials_of_degree(n, d);
        let pick = candidates[rng.random_range(0..candidates.len())].clone();
        borel_closure(pick, &mut closed);
    }
    closed.extend(monomials_of_degree(n, max_degree + 1));
    MonomialIdeal::minimalize(closed, n)
}

/// Adds every monomial reachable from `start` by moves `x_k -> x_i`, `i < k`.
pub(crate) fn borel_closure(start: Monomial, into: &mut BTreeSet<Monomial>) {
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        if into.contains(&m) {
            continue;
        }
        for k in 2..=m.n() {
            if let Some(lowered) = m.div_var(k) {
                for i in 1..k {
                    let moved = lowered.mul_var(i);
                    if !into.contains(&moved) {
                        queue.push_back(moved);
                    }
                }
            }
        }
        into.insert(m);
    }
}
