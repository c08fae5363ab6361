//! Exact linear algebra over the rationals.

use num_rational::BigRational as Rational;
use num_traits::Zero;

/// Incremental row echelon form; stored pivot rows are normalized to 1.
pub(crate) struct Echelon {
    pivots: Vec<Option<Vec<Rational>>>,
    pub(crate) rank: usize,
}

impl Echelon {
    pub(crate) fn new(width: usize) -> Self {
        Echelon { pivots: vec![None; width], rank: 0 }
    }

    /// Reduces `row` and keeps it if independent; returns whether it was kept.
    pub(crate) fn insert(&mut self, mut row: Vec<Rational>) -> bool {
        for col in 0..row.len() {
            if row[col].is_zero() {
                continue;
            }
            match &self.pivots[col] {
                Some(pivot) => {
                    let factor = row[col].clone();
                    for (x, p) in row.iter_mut().zip(pivot).skip(col) {
                        if !p.is_zero() {
                            *x -= &factor * p;
                        }
                    }
                }
                None => {
                    let lead = row[col].clone();
                    for x in row.iter_mut().skip(col) {
                        *x /= &lead;
                    }
                    self.pivots[col] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }

    /// Fully reduced basis of the row space, ordered by pivot column.
    pub(crate) fn reduced(mut self) -> Vec<Vec<Rational>> {
        let cols: Vec<usize> = (0..self.pivots.len()).filter(|&c| self.pivots[c].is_some()).collect();
        for &c in cols.iter().rev() {
            let pivot = self.pivots[c].clone().expect("pivot");
            for &other in cols.iter().filter(|&&o| o < c) {
                let row = self.pivots[other].as_mut().expect("pivot");
                let factor = row[c].clone();
                if !factor.is_zero() {
                    for (x, p) in row.iter_mut().zip(&pivot) {
                        *x -= &factor * p;
                    }
                }
            }
        }
        self.pivots.into_iter().flatten().collect()
    }
}

pub(crate) fn rank(rows: Vec<Vec<Rational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut e = Echelon::new(width);
    for r in rows {
        e.insert(r);
    }
    e.rank
}

