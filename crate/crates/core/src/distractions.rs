//! Distraction matrices over the rationals, distracted ideals and the finite
//! point sets they cut out.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::linalg::{rank, Echelon};
use crate::monomials::{monomials_of_degree, Monomial, VarNames};

pub type Rational = BigRational;

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A linear form `c_1 x_1 + ... + c_n x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearForm { coeffs }
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[i - 1] = Rational::one();
        LinearForm { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Parses e.g. `x1 - 2*x4` or `3/2*x2 + x3` in `n` variables.
    pub fn parse(text: &str, n: usize) -> std::result::Result<Self, String> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err("empty linear form".into());
        }
        let mut coeffs = vec![Rational::zero(); n];
        let mut terms = Vec::new();
        let mut start = 0;
        for (pos, c) in compact.char_indices() {
            if (c == '+' || c == '-') && pos > 0 {
                terms.push(&compact[start..pos]);
                start = pos;
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coeff, var) = match body.rsplit_once('*') {
                Some((c, v)) => (parse_rational(c)?, v),
                None => (Rational::one(), body),
            };
            let idx = var
                .strip_prefix('x')
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| format!("expected a term like 2*x1, found `{term}` (constants are not allowed)"))?;
            if idx == 0 || idx > n {
                return Err(format!("variable x{idx} outside x1..x{n}"));
            }
            let coeff = if negative { -coeff } else { coeff };
            coeffs[idx - 1] += coeff;
        }
        Ok(LinearForm { coeffs })
    }

    pub fn display(&self, names: VarNames) -> String {
        let n = self.n();
        let mut out = String::new();
        for (pos, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = names.name(pos + 1, n);
            push_term(&mut out, c, &name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("bad rational coefficient `{text}`");
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// Appends `± c*name` to a sum being printed; `name` empty means a constant.
fn push_term(out: &mut String, c: &Rational, name: &str) {
    let first = out.is_empty();
    let magnitude = c.abs();
    if c.is_negative() {
        out.push_str(if first { "-" } else { " - " });
    } else if !first {
        out.push_str(" + ");
    }
    if name.is_empty() {
        out.push_str(&fmt_rational(&magnitude));
    } else if magnitude.is_one() {
        out.push_str(name);
    } else {
        out.push_str(&fmt_rational(&magnitude));
        out.push('*');
        out.push_str(name);
    }
}

/// Rows of linear forms `L_{ij}`, `1 <= j <= cols`; columns past `cols` repeat the last one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistractionMatrix {
    nvars: usize,
    cols: usize,
    rows: Vec<Vec<LinearForm>>,
}

impl DistractionMatrix {
    pub fn new(nvars: usize, rows: Vec<Vec<LinearForm>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::InvalidArgument("a distraction matrix needs at least one row and column".into()));
        }
        if rows.len() > nvars {
            return Err(Error::InvalidArgument(format!("{} rows for {nvars} variables", rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArgument(format!("row {} has {} columns, expected {cols}", r + 1, row.len())));
            }
            for (c, form) in row.iter().enumerate() {
                if form.n() != nvars {
                    return Err(Error::AmbientMismatch { left: nvars, right: form.n() });
                }
                if form.is_zero() {
                    return Err(Error::InvalidArgument(format!("entry ({}, {}) is the zero form", r + 1, c + 1)));
                }
            }
        }
        Ok(DistractionMatrix { nvars, cols, rows })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `L_{ij}` with 1-based indices; `j > cols` reuses column `cols`.
    pub fn entry(&self, i: usize, j: usize) -> &LinearForm {
        &self.rows[i - 1][j.clamp(1, self.cols) - 1]
    }

    /// The submatrix of the first `r` rows, forms still in all variables.
    pub fn first_rows(&self, r: usize) -> Result<Self> {
        if r == 0 || r > self.rows.len() {
            return Err(Error::InvalidArgument(format!("cannot take {r} of {} rows", self.rows.len())));
        }
        DistractionMatrix::new(self.nvars, self.rows[..r].to_vec())
    }

    /// Reads `vars <n>`, `cols <N>`, then one line per row with `;`-separated forms.
    pub fn parse(text: &str) -> Result<Self> {
        let mut nvars = None;
        let mut cols = None;
        let mut rows = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |message: String| Error::Parse { line: line_no, message };
            if let Some(rest) = line.strip_prefix("vars") {
                nvars = Some(rest.trim().parse::<usize>().map_err(|_| perr(format!("bad `vars` value `{}`", rest.trim())))?);
                continue;
            }
            if let Some(rest) = line.strip_prefix("cols") {
                cols = Some(rest.trim().parse::<usize>().map_err(|_| perr(format!("bad `cols` value `{}`", rest.trim())))?);
                continue;
            }
            let (Some(n), Some(c)) = (nvars, cols) else {
                return Err(perr("`vars` and `cols` headers must precede the rows".into()));
            };
            let row = line
                .split(';')
                .map(|f| LinearForm::parse(f, n))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(perr)?;
            if row.len() != c {
                return Err(perr(format!("{} forms on the row, expected {c}", row.len())));
            }
            rows.push(row);
        }
        let n = nvars.ok_or(Error::Parse { line: 0, message: "missing `vars` header".into() })?;
        Self::new(n, rows).map_err(|e| Error::Parse { line: 0, message: e.to_string() })
    }

    pub fn to_file_string(&self, names: VarNames) -> String {
        let mut out = format!("vars {}\ncols {}\n", self.nvars, self.cols);
        for row in &self.rows {
            let forms: Vec<String> = row.iter().map(|f| f.display(names)).collect();
            out.push_str(&forms.join("; "));
            out.push('\n');
        }
        out
    }
}

/// Default cap on the number of column selections `N^n` examined by
/// [`is_valid_distraction`] (enough for `n <= 5`, `N <= 8`).
pub const DEFAULT_SELECTION_BUDGET: u128 = 32_768;

/// Every selection `{L_{1 j_1}, ..., L_{n j_n}}` spans the space of linear forms.
pub fn is_valid_distraction(matrix: &DistractionMatrix, budget: u128) -> Result<bool> {
    let n = matrix.nvars;
    if matrix.num_rows() != n {
        return Ok(false);
    }
    let selections = (matrix.cols as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if selections > budget {
        return Err(Error::BudgetExceeded { selections, budget });
    }
    let mut choice = vec![1usize; n];
    loop {
        let forms: Vec<&LinearForm> = (1..=n).map(|i| matrix.entry(i, choice[i - 1])).collect();
        if rank(forms.iter().map(|f| f.coeffs.clone()).collect()) != n {
            return Ok(false);
        }
        // odometer over 1..=cols in each slot
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(true);
            }
            if choice[pos] < matrix.cols {
                choice[pos] += 1;
                break;
            }
            choice[pos] = 1;
            pos += 1;
        }
    }
}

/// Rows `x_i - (j-1) x_n` for `i < n` and the constant row `x_n`.
pub fn make_standard_distraction(n: usize, cols: usize) -> Result<DistractionMatrix> {
    if n < 2 || cols < 1 {
        return Err(Error::InvalidArgument("standard distraction needs n >= 2 and N >= 1".into()));
    }
    let rows = (1..=n)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut form = LinearForm::var(i, n);
                    if i < n {
                        form.coeffs[n - 1] = int(-(j as i64));
                    }
                    form
                })
                .collect()
        })
        .collect();
    DistractionMatrix::new(n, rows)
}

/// Sparse polynomial with rational coefficients, keyed by graded rev-lex monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let n = m.n();
        Polynomial { n, terms: BTreeMap::from([(m, Rational::one())]) }
    }

    pub fn from_linear(form: &LinearForm) -> Self {
        let n = form.n();
        let terms = form
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(pos, c)| (Monomial::var(pos + 1, n), c.clone()))
            .collect();
        Polynomial { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest monomial in graded rev-lex order, with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch { left: self.n, right: other.n });
        }
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *terms.entry(a.mul(b)?).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { n: self.n, terms })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| Ok((a.mul(m)?, c.clone())))
            .collect::<Result<_>>()?;
        Ok(Polynomial { n: self.n, terms })
    }

    /// Exact evaluation at a point given by `n` coordinates.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(Error::AmbientMismatch { left: self.n, right: point.len() });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    value *= x;
                }
            }
            total += value;
        }
        Ok(total)
    }

    pub fn display(&self, names: VarNames) -> String {
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let name = if m.is_one() { String::new() } else { m.display(names).to_string() };
            push_term(&mut out, c, &name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(VarNames::Indexed))
    }
}

/// `D_L(M) = ∏_i ∏_{j=1}^{a_i} L_{ij}`.
pub fn distract_monomial(matrix: &DistractionMatrix, m: &Monomial) -> Result<Polynomial> {
    if m.n() != matrix.nvars {
        return Err(Error::AmbientMismatch { left: matrix.nvars, right: m.n() });
    }
    let mut product = Polynomial::from_monomial(Monomial::one(m.n()));
    for (pos, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if pos >= matrix.num_rows() {
            return Err(Error::InvalidArgument(format!("no matrix row for x{}", pos + 1)));
        }
        for j in 1..=e as usize {
            product = product.mul(&Polynomial::from_linear(matrix.entry(pos + 1, j)))?;
        }
    }
    Ok(product)
}

/// Distractions of the minimal generators, in generator order.
pub fn distract_ideal(matrix: &DistractionMatrix, ideal: &MonomialIdeal) -> Result<Vec<Polynomial>> {
    if ideal.n() != matrix.nvars {
        return Err(Error::AmbientMismatch { left: matrix.nvars, right: ideal.n() });
    }
    ideal.gens().iter().map(|g| distract_monomial(matrix, g)).collect()
}

/// Hilbert function of `R / (gens)` through `d_max`, by exact rank of the
/// degree-`d` spans of `monomial * generator` products.
pub fn poly_ideal_hilbert(n: usize, gens: &[Polynomial], d_max: u32) -> Result<Vec<u64>> {
    for g in gens {
        if g.n != n {
            return Err(Error::AmbientMismatch { left: n, right: g.n });
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    let mut out = Vec::with_capacity(d_max as usize + 1);
    for d in 0..=d_max {
        let basis = monomials_of_degree(n, d);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut echelon = Echelon::new(basis.len());
        'gens: for g in gens.iter().filter(|g| !g.is_zero()) {
            let e = g.degree().expect("nonzero");
            if e > d {
                continue;
            }
            for u in monomials_of_degree(n, d - e) {
                let product = g.mul_monomial(&u)?;
                let mut row = vec![Rational::zero(); basis.len()];
                for (m, c) in product.terms() {
                    row[index[m]] = c.clone();
                }
                echelon.insert(row);
                if echelon.rank == basis.len() {
                    break 'gens;
                }
            }
        }
        out.push((basis.len() - echelon.rank) as u64);
    }
    Ok(out)
}

/// Canonical representative of a span: its reduced row echelon basis.
fn span_key(forms: &[&LinearForm]) -> Vec<Vec<Rational>> {
    let width = forms.first().map_or(0, |f| f.n());
    let mut e = Echelon::new(width);
    for f in forms {
        e.insert(f.coeffs.clone());
    }
    e.reduced()
}

/// Irreducible components `(x_1^{a_1+1}, ..., x_n^{a_n+1})`, one per maximal
/// standard monomial `x^a`, largest first.
pub fn irreducible_components(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    let socle = ideal.socle_degree()?;
    let n = ideal.n();
    let mut maximal = Vec::new();
    for d in (0..=socle as u32).rev() {
        for m in ideal.standard_monomials(d) {
            if (1..=n).all(|i| ideal.contains_unchecked(&m.mul_var(i))) {
                maximal.push(m);
            }
        }
    }
    let components = maximal
        .iter()
        .map(|m| {
            let powers = (1..=n).map(|i| Monomial::var_power(i, m.exponent(i) + 1, n));
            MonomialIdeal::minimalize(powers, n)
        })
        .collect::<Result<Vec<_>>>()?;

    for d in 0..=(socle as u32 + 1) {
        for m in monomials_of_degree(n, d) {
            let in_all = components.iter().all(|c| c.contains_unchecked(&m));
            if in_all != ideal.contains_unchecked(&m) {
                return Err(Error::Verification(format!("components do not intersect back to the ideal at {m}")));
            }
        }
    }
    Ok(components)
}

/// For every irreducible component and every pair of column selections
/// `s != s'`, the spans of `{L_{i s_i}}` differ.
pub fn is_radical_for(matrix: &DistractionMatrix, ideal: &MonomialIdeal) -> Result<bool> {
    if matrix.nvars < ideal.n() || matrix.num_rows() < ideal.n() {
        return Err(Error::InvalidArgument(format!(
            "matrix with {} rows in {} variables cannot distract an ideal in {} variables",
            matrix.num_rows(),
            matrix.nvars,
            ideal.n()
        )));
    }
    for component in irreducible_components(ideal)? {
        let bounds: Vec<usize> = (1..=ideal.n())
            .map(|i| {
                component
                    .gens()
                    .iter()
                    .find(|g| g.exponent(i) > 0)
                    .map_or(1, |g| g.exponent(i) as usize)
            })
            .collect();
        let mut seen: HashSet<Vec<Vec<Rational>>> = HashSet::new();
        let mut choice = vec![1usize; bounds.len()];
        loop {
            let forms: Vec<&LinearForm> = choice.iter().enumerate().map(|(p, &j)| matrix.entry(p + 1, j)).collect();
            if !seen.insert(span_key(&forms)) {
                return Ok(false);
            }
            let mut pos = 0;
            loop {
                if pos == bounds.len() {
                    break;
                }
                if choice[pos] < bounds[pos] {
                    choice[pos] += 1;
                    break;
                }
                choice[pos] = 1;
                pos += 1;
            }
            if pos == bounds.len() {
                break;
            }
        }
    }
    Ok(true)
}

/// A point of projective space with the last nonzero coordinate scaled to 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(mut coords: Vec<Rational>) -> Result<Self> {
        let last = coords
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidArgument("all coordinates are zero".into()))?;
        let scale = coords[last].clone();
        for c in &mut coords {
            *c /= &scale;
        }
        Ok(RationalPoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(fmt_rational).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Points of `D_L(I)` together with the checks that were run on them.
///
/// Betti numbers of the distracted ideal are not recomputed; their equality
/// with those of `I` rests on the theory of distractions.
#[derive(Clone, Debug)]
pub struct PointsReport {
    pub points: Vec<RationalPoint>,
    /// `D_L(g)` for the generators `g` of `I`, viewed in `n` variables.
    pub generators: Vec<Polynomial>,
    pub radical: bool,
    /// `Σ_d h_d(R'/I)`, which equals the point count.
    pub expected_count: u64,
}

/// The finite point set of `D_L(I·R)` for the standard distraction `L` in `n`
/// variables and an artinian strongly stable `I` in `n - 1` variables: one
/// point `(a_1, ..., a_{n-1}, 1)` per standard monomial `x^a`.
pub fn distraction_points(ideal: &MonomialIdeal, matrix: &DistractionMatrix) -> Result<PointsReport> {
    let n = matrix.nvars;
    if ideal.n() + 1 != n {
        return Err(Error::Precondition(format!(
            "ideal must live in {} variables for a matrix in {n}",
            n.saturating_sub(1)
        )));
    }
    if *matrix != make_standard_distraction(n, matrix.cols)? {
        return Err(Error::Precondition("point extraction needs the standard distraction matrix".into()));
    }
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable);
    }
    let hilbert = ideal.artinian_hilbert()?;
    let max_exp = ideal.gens().iter().flat_map(|g| g.exponents().iter().copied()).max().unwrap_or(0);
    if max_exp as usize > matrix.cols {
        return Err(Error::Precondition(format!(
            "matrix has {} columns but the ideal has exponent {max_exp}",
            matrix.cols
        )));
    }

    let mut points = Vec::new();
    for d in 0..=hilbert.length() as u32 {
        for m in ideal.standard_monomials(d) {
            let mut coords: Vec<Rational> = m.exponents().iter().map(|&a| int(a as i64)).collect();
            coords.push(Rational::one());
            points.push(RationalPoint::new(coords)?);
        }
    }
    let generators = distract_ideal(matrix, &ideal.extend(n)?)?;
    for g in &generators {
        for p in &points {
            if !g.eval(p.coords())?.is_zero() {
                return Err(Error::Verification(format!("{g} does not vanish at ({p})")));
            }
        }
    }
    let expected_count = hilbert.total();
    if points.len() as u64 != expected_count {
        return Err(Error::Verification(format!("{} points, expected {expected_count}", points.len())));
    }
    if points.iter().collect::<BTreeSet<_>>().len() != points.len() {
        return Err(Error::Verification("points are not pairwise distinct".into()));
    }
    let radical = is_radical_for(matrix, ideal)?;
    Ok(PointsReport { points, generators, radical, expected_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::ideal_from_strs;

    fn form(s: &str, n: usize) -> LinearForm {
        LinearForm::parse(s, n).unwrap()
    }

    #[test]
    fn linear_form_grammar() {
        let f = form("x1 - 2*x4", 4);
        assert_eq!(f.coeffs()[3], int(-2));
        assert_eq!(f.display(VarNames::Indexed), "x1 - 2*x4");
        assert_eq!(form("-x2 + 3/2*x1", 2).display(VarNames::Letters), "3/2*x - y");
        assert!(LinearForm::parse("x1 + 3", 2).is_err());
        assert!(LinearForm::parse("x3", 2).is_err());
        assert!(LinearForm::parse("1/0*x1", 2).is_err());
    }

    #[test]
    fn standard_distraction_shape() {
        let l = make_standard_distraction(3, 2).unwrap();
        assert_eq!(l.entry(1, 2).display(VarNames::Letters), "x - z");
        assert_eq!(l.entry(2, 1).display(VarNames::Letters), "y");
        assert_eq!(l.entry(3, 2).display(VarNames::Letters), "z");
        assert_eq!(l.entry(1, 9), l.entry(1, 2));
        let id = make_standard_distraction(2, 1).unwrap();
        assert_eq!(id.entry(1, 1), &LinearForm::var(1, 2));
        assert_eq!(id.entry(2, 1), &LinearForm::var(2, 2));
        assert!(make_standard_distraction(1, 3).is_err());
    }

    #[test]
    fn validity() {
        let l = make_standard_distraction(3, 3).unwrap();
        assert!(is_valid_distraction(&l, DEFAULT_SELECTION_BUDGET).unwrap());
        let constant = DistractionMatrix::new(2, vec![vec![LinearForm::var(1, 2)], vec![LinearForm::var(2, 2)]]).unwrap();
        assert!(is_valid_distraction(&constant, DEFAULT_SELECTION_BUDGET).unwrap());
        let bad = DistractionMatrix::new(2, vec![vec![LinearForm::var(1, 2)], vec![LinearForm::var(1, 2)]]).unwrap();
        assert!(!is_valid_distraction(&bad, DEFAULT_SELECTION_BUDGET).unwrap());
        let big = make_standard_distraction(5, 9).unwrap();
        assert!(matches!(is_valid_distraction(&big, DEFAULT_SELECTION_BUDGET), Err(Error::BudgetExceeded { .. })));
        assert!(DistractionMatrix::new(2, vec![vec![LinearForm::new(vec![int(0), int(0)])]]).is_err());
    }

    #[test]
    fn matrix_file_roundtrip() {
        let l = make_standard_distraction(4, 4).unwrap();
        let text = l.to_file_string(VarNames::Indexed);
        assert!(text.contains("x1 - 3*x4"));
        assert_eq!(DistractionMatrix::parse(&text).unwrap(), l);
        assert!(DistractionMatrix::parse("vars 2\nx1\n").is_err());
        assert!(DistractionMatrix::parse("vars 2\ncols 2\nx1; x1 - x2\nx2\n").is_err());
    }

    #[test]
    fn distraction_of_monomials() {
        let l = make_standard_distraction(4, 4).unwrap();
        let z4 = distract_monomial(&l, &Monomial::new(vec![0, 0, 4, 0])).unwrap();
        let expected = [(vec![0, 0, 4, 0], 1), (vec![0, 0, 3, 1], -6), (vec![0, 0, 2, 2], 11), (vec![0, 0, 1, 3], -6)];
        for (e, c) in expected {
            assert_eq!(z4.coefficient(&Monomial::new(e)), int(c));
        }
        assert_eq!(z4.terms().count(), 4);
        let xy = distract_monomial(&l, &Monomial::new(vec![1, 1, 0, 0])).unwrap();
        assert_eq!(xy.display(VarNames::Letters), "xy");
    }

    #[test]
    fn components() {
        let i = ideal_from_strs(&["x1^2", "x1*x2", "x2^2"], 2).unwrap();
        let c: Vec<String> = irreducible_components(&i).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c, ["(x2, x1^2)", "(x1, x2^2)"]);
        let p = ideal_from_strs(&["x1^3"], 1).unwrap();
        assert_eq!(irreducible_components(&p).unwrap(), vec![p.clone()]);
        let max = ideal_from_strs(&["x1", "x2", "x3"], 3).unwrap();
        assert_eq!(irreducible_components(&max).unwrap(), vec![max.clone()]);
        assert!(irreducible_components(&ideal_from_strs(&["x1"], 2).unwrap()).is_err());
    }

    #[test]
    fn radicality() {
        let constant = DistractionMatrix::new(1, vec![vec![LinearForm::var(1, 1)]]).unwrap();
        let sq = ideal_from_strs(&["x1^2"], 1).unwrap();
        assert!(!is_radical_for(&constant, &sq).unwrap());
        let max = ideal_from_strs(&["x1", "x2"], 2).unwrap();
        assert!(is_radical_for(&make_standard_distraction(2, 3).unwrap(), &max).unwrap());
    }

    #[test]
    fn hilbert_of_polynomials() {
        assert_eq!(poly_ideal_hilbert(3, &[], 3).unwrap(), vec![1, 3, 6, 10]);
        let i = ideal_from_strs(&["x1^2", "x1*x2", "x2^3"], 2).unwrap();
        let gens: Vec<Polynomial> = i.gens().iter().cloned().map(Polynomial::from_monomial).collect();
        assert_eq!(poly_ideal_hilbert(2, &gens, 4).unwrap(), i.hilbert_function(4));
        let mixed = Polynomial::from_linear(&LinearForm::var(1, 2))
            .mul(&Polynomial::from_linear(&LinearForm::var(2, 2)))
            .unwrap();
        let mut not_homog = mixed.clone();
        not_homog.terms.insert(Monomial::var(1, 2), int(1));
        assert!(matches!(poly_ideal_hilbert(2, &[not_homog], 2), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn small_point_set() {
        let i = ideal_from_strs(&["x1^2", "x1*x2", "x2^2"], 2).unwrap();
        let l = make_standard_distraction(3, 2).unwrap();
        let r = distraction_points(&i, &l).unwrap();
        let pts: Vec<String> = r.points.iter().map(|p| p.to_string()).collect();
        assert_eq!(pts, ["0 0 1", "1 0 1", "0 1 1"]);
        assert!(r.radical);
        let max = ideal_from_strs(&["x1", "x2", "x3"], 3).unwrap();
        let r = distraction_points(&max, &make_standard_distraction(4, 1).unwrap()).unwrap();
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].to_string(), "0 0 0 1");
        assert!(distraction_points(&i, &make_standard_distraction(3, 1).unwrap()).is_err());
    }

    #[test]
    fn points_normalize() {
        let p = RationalPoint::new(vec![int(2), int(4), int(0)]).unwrap();
        assert_eq!(p.to_string(), "1/2 1 0");
        assert!(RationalPoint::new(vec![int(0)]).is_err());
    }
}
