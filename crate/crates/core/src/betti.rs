//! Graded Betti numbers of `R/I`: the Eliahou-Kervaire formula for stable
//! ideals and upper Koszul simplicial complexes for any monomial ideal.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::ideals::MonomialIdeal;
use crate::linalg::rank;
use crate::monomials::{binomial, Monomial};

/// Graded Betti numbers `β_{i,j}(R/I)` for `1 <= i <= n`; `β_{0,0} = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable { n, entries: BTreeMap::new() }
    }

    /// Builds a table from diagram rows: `rows[r][i - 1] = β_{i, i + first_row + r}`.
    pub fn from_diagram_rows(n: usize, first_row: u32, rows: &[&[u64]]) -> Self {
        let mut t = BettiTable::new(n);
        for (r, row) in rows.iter().enumerate() {
            for (col, &v) in row.iter().enumerate() {
                t.add(col + 1, col as u32 + 1 + first_row + r as u32, v);
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn add(&mut self, i: usize, j: u32, v: u64) {
        assert!(i >= 1 && i <= self.n, "homological index {i} outside 1..={}", self.n);
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// `β_{i,j}(R/I)`.
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), β_{ij})`, sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti numbers `β_1..β_n`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.n];
        for (&(i, _), &v) in &self.entries {
            out[i - 1] += v;
        }
        out
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &BettiTable) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        Ok(other.entries.iter().all(|(&(i, j), &v)| self.get(i, j) >= v))
    }

    /// Text diagram: row `j` holds `β_{i,i+j}` for columns `i = 1..n`, zeros as `-`.
    ///
    /// Rows start at 1 unless some `β_{i,i}` is nonzero.
    pub fn render_diagram(&self) -> String {
        let first = if self.entries.keys().any(|&(i, j)| j as usize == i) { 0 } else { 1 };
        let last = self.entries.keys().map(|&(i, j)| j as usize - i).max();
        let rows: Vec<usize> = match last {
            Some(last) if last >= first => (first..=last).collect(),
            _ => Vec::new(),
        };
        let label_width = rows.iter().map(|r| r.to_string().len()).max().unwrap_or(1);
        let cell_width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain((1..=self.n).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);

        let mut out = String::new();
        let _ = write!(out, "{:>label_width$} |", "");
        for i in 1..=self.n {
            let _ = write!(out, " {i:>cell_width$}");
        }
        out.push('\n');
        for r in rows {
            let _ = write!(out, "{r:>label_width$} |");
            for i in 1..=self.n {
                let cell = match self.get(i, (i + r) as u32) {
                    0 => "-".to_string(),
                    v => v.to_string(),
                };
                let _ = write!(out, " {cell:>cell_width$}");
            }
            out.push('\n');
        }
        out
    }

    /// Machine-readable form: one `i j beta` line per nonzero entry.
    pub fn to_triples(&self) -> String {
        let mut out = String::new();
        for (&(i, j), &v) in &self.entries {
            let _ = writeln!(out, "{i} {j} {v}");
        }
        out
    }
}

/// `β_{i,i+j}(R/I) = Σ_{u ∈ Gens(I), deg u = j+1} C(max(u) - 1, i - 1)`.
pub fn ek_graded_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_stable() {
        return Err(Error::NotStable);
    }
    let n = ideal.n();
    let mut table = BettiTable::new(n);
    for g in ideal.gens() {
        let Some(top) = g.max_index() else { continue };
        let d = g.degree();
        for i in 1..=top {
            let b = binomial(top as u64 - 1, i as u64 - 1)?;
            table.add(i, d + i as u32 - 1, b);
        }
    }
    Ok(table)
}

/// `β_i(R/I) = Σ_{s=i}^{n} m_s(I) C(s - 1, i - 1)`.
pub fn ek_total_betti(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    if !ideal.is_stable() {
        return Err(Error::NotStable);
    }
    let n = ideal.n();
    let stats = ideal.gen_stats();
    (1..=n)
        .map(|i| {
            (i..=n).try_fold(0u64, |acc, s| {
                let term = stats
                    .m(s)
                    .checked_mul(binomial(s as u64 - 1, i as u64 - 1)?)
                    .ok_or(Error::Overflow("total Betti number"))?;
                acc.checked_add(term).ok_or(Error::Overflow("total Betti number"))
            })
        })
        .collect()
}

/// Betti table of any monomial ideal, with `β_{i,b}(R/I) = dim H̃_{i-2}(K^b)`
/// where `K^b = {F squarefree : x^{b-F} ∈ I}`, over the multidegrees `b` of
/// the lcm lattice. Exponential in the number of variables.
pub fn koszul_graded_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let n = ideal.n();
    if n > 16 {
        return Err(Error::InvalidArgument(format!("{n} variables is too many for the Koszul complex")));
    }
    let mut table = BettiTable::new(n);
    if ideal.is_zero() {
        return Ok(table);
    }
    let top: Vec<u32> = (0..n)
        .map(|p| ideal.gens().iter().map(|g| g.exponents()[p]).max().unwrap_or(0))
        .collect();
    let mut b = vec![0u32; n];
    loop {
        let mono = Monomial::new(b.clone());
        if is_lcm_of_divisors(ideal, &mono) {
            let faces = upper_koszul_faces(ideal, &mono);
            for i in 1..=n {
                let dim = reduced_homology(&faces, i as i32 - 2);
                if dim > 0 {
                    table.add(i, mono.degree(), dim);
                }
            }
        }
        let mut pos = 0;
        while pos < n && b[pos] == top[pos] {
            b[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
        b[pos] += 1;
    }
    Ok(table)
}

/// Eliahou-Kervaire when the ideal is stable, Koszul complexes otherwise.
pub fn graded_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if ideal.is_stable() {
        ek_graded_betti(ideal)
    } else {
        koszul_graded_betti(ideal)
    }
}

fn is_lcm_of_divisors(ideal: &MonomialIdeal, b: &Monomial) -> bool {
    let mut lcm = vec![0u32; b.n()];
    let mut any = false;
    for g in ideal.gens().iter().filter(|g| g.divides_unchecked(b)) {
        any = true;
        for (l, &e) in lcm.iter_mut().zip(g.exponents()) {
            *l = (*l).max(e);
        }
    }
    any && lcm == b.exponents()
}

/// Faces of `K^b` as bitmasks over the support of `b`.
fn upper_koszul_faces(ideal: &MonomialIdeal, b: &Monomial) -> Vec<u32> {
    let support: u32 = b.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (p, _)| acc | 1 << p);
    let mut faces = Vec::new();
    let mut f = support;
    loop {
        let exps: Vec<u32> = b.exponents().iter().enumerate().map(|(p, &e)| e - (f >> p & 1)).collect();
        if ideal.contains_unchecked(&Monomial::new(exps)) {
            faces.push(f);
        }
        if f == 0 {
            break;
        }
        f = (f - 1) & support;
    }
    faces
}

/// `dim H̃_q` of a simplicial complex given by its faces; the empty face has dimension -1.
fn reduced_homology(faces: &[u32], q: i32) -> u64 {
    let size = (q + 1) as u32;
    let of_size = |s: u32| -> Vec<u32> { faces.iter().copied().filter(|f| f.count_ones() == s).collect() };
    let chains = of_size(size);
    if chains.is_empty() {
        return 0;
    }
    let below = if size == 0 { 0 } else { boundary_rank(&chains, &of_size(size - 1)) };
    let above = boundary_rank(&of_size(size + 1), &chains);
    (chains.len() - below - above) as u64
}

fn boundary_rank(sources: &[u32], targets: &[u32]) -> usize {
    if sources.is_empty() || targets.is_empty() {
        return 0;
    }
    let rows = sources
        .iter()
        .map(|&f| {
            let mut row = vec![BigRational::from_integer(BigInt::from(0)); targets.len()];
            let mut sign = 1;
            for v in 0..32 {
                if f >> v & 1 == 1 {
                    if let Some(t) = targets.iter().position(|&t| t == f & !(1 << v)) {
                        row[t] = BigRational::from_integer(BigInt::from(sign));
                    }
                    sign = -sign;
                }
            }
            row
        })
        .collect();
    rank(rows)
}
