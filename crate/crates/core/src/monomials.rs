//! Dense exponent-vector monomials with graded lex / rev-lex orders.
//!
//! Variables are numbered `x1..xn`; the exponent of `x_i` lives at slot `i - 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x1^a1 * ... * xn^an` over a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_i^e` in `n` variables, with `i` counted from 1.
    pub fn var_power(i: usize, e: u32, n: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index {i} out of range 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = e;
        Monomial { exps }
    }

    pub fn var(i: usize, n: usize) -> Self {
        Self::var_power(i, 1, n)
    }

    /// Ambient number of variables.
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Largest `i` with a positive exponent on `x_i`; `None` for the unit monomial.
    pub fn max_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|p| p + 1)
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch { left: self.n(), right: other.n() });
        }
        Ok(())
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Degree-reverse-lexicographic comparison. Lower degree compares smaller.
    pub fn cmp_revlex(&self, other: &Monomial) -> Result<Ordering> {
        self.check_ambient(other)?;
        Ok(self.revlex_unchecked(other))
    }

    fn revlex_unchecked(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // the last nonzero difference decides; negative means larger
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// Degree-lexicographic comparison. Lower degree compares smaller.
    pub fn cmp_lex(&self, other: &Monomial) -> Result<Ordering> {
        self.check_ambient(other)?;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return Ok(ord),
        }
        Ok(self.exps.cmp(&other.exps))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        })
    }

    /// Multiply by `x_i` (1-based).
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Monomial { exps }
    }

    /// Divide by `x_i` (1-based), if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i - 1] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        })
    }

    /// The same monomial viewed in `n >= self.n()` variables.
    pub fn extend(&self, n: usize) -> Monomial {
        assert!(n >= self.n());
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial { exps }
    }

    /// Restriction to `x1..x_i`, or `None` when the support leaves those variables.
    pub fn restrict(&self, i: usize) -> Option<Monomial> {
        if self.exps[i.min(self.n())..].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial { exps: self.exps[..i.min(self.n())].to_vec() })
    }

    pub fn display(&self, names: VarNames) -> MonomialDisplay<'_> {
        MonomialDisplay { mono: self, names }
    }

    /// Parse the `x1^2*x3` grammar into a monomial with `n` variables.
    /// With `n = None` the ambient count is the largest index present.
    pub fn parse(text: &str, n: Option<usize>) -> std::result::Result<Monomial, String> {
        let factors = parse_factors(text)?;
        let top = factors.iter().map(|&(i, _)| i).max().unwrap_or(0);
        let n = match n {
            Some(n) if top > n => {
                return Err(format!("variable x{top} exceeds the declared {n} variables"))
            }
            Some(n) => n,
            None => top,
        };
        Ok(Monomial::from_factors(&factors, n))
    }

    pub(crate) fn from_factors(factors: &[(usize, u32)], n: usize) -> Monomial {
        let mut exps = vec![0; n];
        for &(i, e) in factors {
            exps[i - 1] += e;
        }
        Monomial { exps }
    }
}

/// Parses a product of `x<i>` / `x<i>^<e>` factors (or the literal `1`) into
/// `(index, exponent)` pairs.
pub(crate) fn parse_factors(text: &str) -> std::result::Result<Vec<(usize, u32)>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty monomial".into());
    }
    if compact == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for factor in compact.split('*') {
        let body = factor
            .strip_prefix('x')
            .ok_or_else(|| format!("expected a factor like x1 or x1^2, found `{factor}`"))?;
        let (idx, exp) = match body.split_once('^') {
            Some((i, e)) => (i, Some(e)),
            None => (body, None),
        };
        let i: usize = idx
            .parse()
            .map_err(|_| format!("bad variable index in `{factor}`"))?;
        if i == 0 {
            return Err(format!("variable indices start at 1, found `{factor}`"));
        }
        let e: u32 = match exp {
            Some(e) => e.parse().map_err(|_| format!("bad exponent in `{factor}`"))?,
            None => 1,
        };
        out.push((i, e));
    }
    Ok(out)
}

/// Graded rev-lex after ambient size, so monomials can key ordered maps.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n().cmp(&other.n()).then_with(|| self.revlex_unchecked(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(VarNames::Indexed).fmt(f)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// How variables are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VarNames {
    /// `x1, x2, ...`
    #[default]
    Indexed,
    /// `x, y, z, t` when there are at most four variables, indexed otherwise.
    Letters,
}

impl VarNames {
    pub fn name(self, i: usize, n: usize) -> String {
        match self {
            VarNames::Letters if n <= 4 => ["x", "y", "z", "t"][i - 1].to_string(),
            _ => format!("x{i}"),
        }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: VarNames,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.mono.n();
        let mut first = true;
        for (pos, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            // letters are concatenated the way they are written by hand
            let sep = match self.names {
                VarNames::Letters if n <= 4 => "",
                _ => "*",
            };
            if !first {
                f.write_str(sep)?;
            }
            first = false;
            f.write_str(&self.names.name(pos + 1, n))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Exact binomial coefficient `C(n, k)`; errors rather than wrapping on overflow.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

/// Number of monomials of degree `d` in `n` variables.
pub fn count_monomials(n: usize, d: u32) -> Result<u64> {
    if n == 0 {
        return Ok(u64::from(d == 0));
    }
    binomial(n as u64 + d as u64 - 1, d as u64)
}

/// All monomials of degree `d` in `n` variables, in decreasing rev-lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fill(&mut exps, 0, d, &mut out);
    out.sort_by(|a, b| b.revlex_unchecked(a));
    out
}

fn fill(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos == exps.len() {
        if remaining == 0 {
            out.push(Monomial { exps: exps.clone() });
        }
        return;
    }
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial { exps: exps.clone() });
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// Monomials of degree `d` in `n` variables in decreasing lex order.
pub fn monomials_of_degree_lex(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = monomials_of_degree(n, d);
    out.sort_by(|a, b| b.exps.cmp(&a.exps));
    out
}
