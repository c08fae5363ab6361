//! Monomial ideals given by their minimal generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomials::{count_monomials, monomials_of_degree, monomials_of_degree_lex, parse_factors, Monomial, VarNames};
use crate::osequences::{validate_o_sequence, OSequence};

/// A monomial ideal of `k[x1..xn]` stored by its minimal generating set,
/// ordered by degree and then by decreasing rev-lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The zero ideal.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// Removes duplicates and multiples of other generators.
    pub fn minimalize<I>(raw_gens: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut sorted: Vec<Monomial> = Vec::new();
        for g in raw_gens {
            if g.n() != n {
                return Err(Error::AmbientMismatch { left: n, right: g.n() });
            }
            sorted.push(g);
        }
        // ascending degree: a divisor always precedes its multiples
        sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        sorted.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !gens.iter().any(|h| h.divides_unchecked(&g)) {
                gens.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch { left: self.n, right: m.n() });
        }
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// Monomials of degree `d` outside the ideal, in decreasing rev-lex order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d)
            .into_iter()
            .filter(|m| !self.contains_unchecked(m))
            .collect()
    }

    /// Monomials of degree `d` inside the ideal (the basis of `I_d`).
    pub fn degree_piece(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d)
            .into_iter()
            .filter(|m| self.contains_unchecked(m))
            .collect()
    }

    /// `h_d(R/I)` for `d = 0..=d_max`.
    pub fn hilbert_function(&self, d_max: u32) -> Vec<u64> {
        (0..=d_max).map(|d| self.standard_monomials(d).len() as u64).collect()
    }

    /// Whether some power of every variable lies in the ideal.
    pub fn is_artinian(&self) -> bool {
        self.first_missing_power().is_none()
    }

    fn first_missing_power(&self) -> Option<usize> {
        (1..=self.n).find(|&i| {
            !self
                .gens
                .iter()
                .any(|g| g.max_index() == Some(i) && g.degree() == g.exponent(i))
        })
    }

    pub fn require_artinian(&self) -> Result<()> {
        match self.first_missing_power() {
            Some(variable) => Err(Error::NotArtinian { variable }),
            None => Ok(()),
        }
    }

    /// The full Hilbert function of an artinian quotient.
    pub fn artinian_hilbert(&self) -> Result<OSequence> {
        self.require_artinian()?;
        let mut values = Vec::new();
        for d in 0.. {
            let h = self.standard_monomials(d).len() as u64;
            if h == 0 {
                break;
            }
            values.push(h);
        }
        OSequence::new(&values)
    }

    /// Highest degree carrying a standard monomial (artinian ideals only).
    pub fn socle_degree(&self) -> Result<usize> {
        Ok(self.artinian_hilbert()?.length())
    }

    /// Closed under `M -> (x_i / x_k) M` for every `x_k | M` and `i < k`.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|g| {
            (1..=self.n).filter(|&k| g.exponent(k) > 0).all(|k| {
                let lowered = g.div_var(k).expect("x_k divides g");
                (1..k).all(|i| self.contains_unchecked(&lowered.mul_var(i)))
            })
        })
    }

    /// Closed under `M -> (x_i / x_max(M)) M` for every `i < max(M)`.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|g| match g.max_index() {
            None => true,
            Some(k) => {
                let lowered = g.div_var(k).expect("x_max divides g");
                (1..k).all(|i| self.contains_unchecked(&lowered.mul_var(i)))
            }
        })
    }

    /// `ρ_i(I)`: keep the generators supported on `x1..x_i`, as an ideal of `k[x1..x_i]`.
    pub fn project_rho(&self, i: usize) -> Result<Self> {
        if i > self.n {
            return Err(Error::InvalidArgument(format!(
                "projection to {i} variables from an ideal in {} variables",
                self.n
            )));
        }
        MonomialIdeal::minimalize(self.gens.iter().filter_map(|g| g.restrict(i)), i)
    }

    /// `I_{<=i}`: the ideal generated by the generators of degree at most `i`.
    pub fn truncate_below(&self, i: u32) -> Self {
        MonomialIdeal {
            n: self.n,
            gens: self.gens.iter().filter(|g| g.degree() <= i).cloned().collect(),
        }
    }

    /// `I·k[x1..x_n']` for `n' >= n`.
    pub fn extend(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::InvalidArgument(format!("cannot extend from {} to {n} variables", self.n)));
        }
        Ok(MonomialIdeal { n, gens: self.gens.iter().map(|g| g.extend(n)).collect() })
    }

    /// The ideal generated by `self` and `extra`.
    pub fn with_generators<I>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        MonomialIdeal::minimalize(self.gens.iter().cloned().chain(extra), self.n)
    }

    pub fn gen_stats(&self) -> MaxStats {
        max_stats(&self.gens, self.n)
    }

    /// Statistics of the monomial basis of the degree-`j` piece.
    pub fn degree_piece_stats(&self, j: u32) -> MaxStats {
        max_stats(&self.degree_piece(j), self.n)
    }

    pub fn display(&self, names: VarNames) -> IdealDisplay<'_> {
        IdealDisplay { ideal: self, names }
    }

    /// The ideal-file rendering: a `vars` header and one generator per line.
    pub fn to_file_string(&self, names: VarNames) -> String {
        let mut out = format!("vars {}\n", self.n);
        for g in &self.gens {
            out.push_str(&g.display(names).to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(VarNames::Indexed).fmt(f)
    }
}

pub struct IdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: VarNames,
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (pos, g) in self.ideal.gens.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(self.names))?;
        }
        f.write_str(")")
    }
}

/// `Lex(h)`: in every degree the lex-largest monomials of codimension `h_d`,
/// through degree `s + 1`, so the quotient is artinian with Hilbert function `h`.
pub fn lex_segment(h: &OSequence) -> Result<MonomialIdeal> {
    validate_o_sequence(h.values())?;
    let n = h.num_vars();
    let mut raw = Vec::new();
    for d in 1..=(h.length() as u32 + 1) {
        let total = count_monomials(n, d)?;
        let keep = h.get(d as usize);
        let take = total.checked_sub(keep).ok_or_else(|| {
            Error::NotOSequence(format!("h_{d} = {keep} exceeds the {total} monomials of degree {d}"))
        })?;
        raw.extend(monomials_of_degree_lex(n, d).into_iter().take(take as usize));
    }
    MonomialIdeal::minimalize(raw, n)
}

/// Counts by largest variable index: `m_i` and the partial sums `m_{<=i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxStats {
    counts: Vec<u64>,
    cumulative: Vec<u64>,
}

impl MaxStats {
    /// `m_i` for `i` in `1..=n`.
    pub fn m(&self, i: usize) -> u64 {
        self.counts[i - 1]
    }

    /// `m_{<=i}` for `i` in `1..=n`.
    pub fn m_le(&self, i: usize) -> u64 {
        self.cumulative[i - 1]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn cumulative(&self) -> &[u64] {
        &self.cumulative
    }
}

/// `m_i` / `m_{<=i}` statistics of a set of monomials in `n` variables.
/// The unit monomial has no largest variable and is not counted.
pub fn max_stats(monos: &[Monomial], n: usize) -> MaxStats {
    let mut counts = vec![0u64; n];
    for m in monos {
        if let Some(i) = m.max_index() {
            counts[i - 1] += 1;
        }
    }
    let cumulative = counts
        .iter()
        .scan(0u64, |acc, c| {
            *acc += c;
            Some(*acc)
        })
        .collect();
    MaxStats { counts, cumulative }
}

/// Result of reading an ideal file.
#[derive(Clone, Debug)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    /// Input lines that were dropped as duplicates or multiples of other generators.
    pub redundant: usize,
}

/// Reads the ideal file format: an optional `vars <n>` header, one monomial
/// per line, `#` comments and blank lines ignored.
pub fn parse_ideal_text(text: &str) -> Result<ParsedIdeal> {
    let mut declared: Option<usize> = None;
    let mut factors = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars") {
            if declared.is_some() || !factors.is_empty() {
                return Err(Error::Parse { line: line_no, message: "`vars` header must come first".into() });
            }
            let n = rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("bad variable count `{}`", rest.trim()),
            })?;
            declared = Some(n);
            continue;
        }
        let f = parse_factors(line).map_err(|message| Error::Parse { line: line_no, message })?;
        if let Some(n) = declared {
            if let Some(&(i, _)) = f.iter().find(|&&(i, _)| i > n) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("variable x{i} exceeds the declared {n} variables"),
                });
            }
        }
        factors.push(f);
    }
    let n = declared.unwrap_or_else(|| factors.iter().flatten().map(|&(i, _)| i).max().unwrap_or(0));
    let monos: Vec<Monomial> = factors.iter().map(|f| Monomial::from_factors(f, n)).collect();
    let count = monos.len();
    let ideal = MonomialIdeal::minimalize(monos, n)?;
    let redundant = count - ideal.gens().len();
    Ok(ParsedIdeal { ideal, redundant })
}

/// Convenience: parse a list of monomial strings in `n` variables.
pub fn ideal_from_strs(gens: &[&str], n: usize) -> Result<MonomialIdeal> {
    let monos = gens
        .iter()
        .map(|s| Monomial::parse(s, Some(n)).map_err(|message| Error::Parse { line: 1, message }))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(monos, n)
}
