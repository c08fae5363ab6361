//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use mwlp_core::monomials::count_monomials;
use mwlp_core::*;
use num_rational::BigRational;
use num_traits::Zero;

pub const H: [u64; 7] = [1, 4, 7, 8, 7, 4, 1];

pub fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
    let parsed: Vec<Monomial> = gens.iter().map(|g| Monomial::parse(g, Some(n)).unwrap()).collect();
    MonomialIdeal::minimalize(parsed, n).unwrap()
}

/// Letters x, y, z, t to indexed names, for fixtures copied from written notation.
pub fn letters(g: &str) -> String {
    let mut out = String::new();
    for c in g.chars() {
        let var = match c {
            'x' => Some(1),
            'y' => Some(2),
            'z' => Some(3),
            't' => Some(4),
            _ => None,
        };
        match var {
            Some(i) => {
                if !out.is_empty() && !out.ends_with('*') {
                    out.push('*');
                }
                out.push_str(&format!("x{i}"));
            }
            None => out.push(c),
        }
    }
    out
}

pub fn ideal_letters(gens: &[&str], n: usize) -> MonomialIdeal {
    let owned: Vec<String> = gens.iter().map(|g| letters(g)).collect();
    let refs: Vec<&str> = owned.iter().map(String::as_str).collect();
    ideal(&refs, n)
}

pub fn gen_set(i: &MonomialIdeal) -> BTreeSet<Monomial> {
    i.gens().iter().cloned().collect()
}

pub fn w2_fixture() -> MonomialIdeal {
    ideal_letters(
        &["x^2", "xy", "y^2", "xz^2", "yz^2", "z^4", "z^3t", "xzt^3", "yzt^3", "z^2t^3", "xt^5", "yt^5", "zt^5", "t^7"],
        4,
    )
}

pub fn w1_fixture() -> MonomialIdeal {
    ideal_letters(
        &[
            "x^2", "xy", "xz", "y^3", "y^2z", "yz^2", "z^4", "z^3t", "y^2t^3", "yzt^3", "z^2t^3", "xt^5", "yt^5", "zt^5",
            "t^7",
        ],
        4,
    )
}

pub fn lex_fixture() -> MonomialIdeal {
    ideal_letters(
        &[
            "x^2", "xy", "xz", "xt^2", "y^3", "y^2z", "y^2t^2", "yz^3", "yz^2t", "yzt^3", "yt^4", "z^5", "z^4t", "z^3t^3",
            "z^2t^4", "zt^5", "t^7",
        ],
        4,
    )
}

pub fn i_fixture() -> MonomialIdeal {
    ideal_letters(&["x^2", "y^2", "z^2", "xyzt", "xyt^3", "xzt^3", "yzt^3", "xt^5", "yt^5", "zt^5", "t^7"], 4)
}

pub fn lex_table() -> BettiTable {
    BettiTable::from_diagram_rows(
        4,
        1,
        &[&[3, 3, 1, 0], &[3, 6, 4, 2], &[3, 8, 7, 2], &[4, 11, 10, 3], &[3, 9, 9, 3], &[1, 3, 3, 1]],
    )
}

pub fn w1_table() -> BettiTable {
    BettiTable::from_diagram_rows(
        4,
        1,
        &[&[3, 3, 1, 0], &[3, 5, 2, 0], &[2, 5, 4, 1], &[3, 9, 9, 3], &[3, 9, 9, 3], &[1, 3, 3, 1]],
    )
}

pub fn w2_table() -> BettiTable {
    BettiTable::from_diagram_rows(
        4,
        1,
        &[&[3, 2, 0, 0], &[2, 4, 2, 0], &[2, 5, 4, 1], &[3, 9, 9, 3], &[3, 9, 9, 3], &[1, 3, 3, 1]],
    )
}

pub fn i_table() -> BettiTable {
    BettiTable::from_diagram_rows(
        4,
        1,
        &[&[3, 0, 0, 0], &[0, 3, 0, 0], &[1, 3, 4, 1], &[3, 9, 9, 3], &[3, 9, 9, 3], &[1, 3, 3, 1]],
    )
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Exact rank by plain Gaussian elimination (no pivot bookkeeping shared with the library).
pub fn rank_q(mut rows: Vec<Vec<BigRational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for k in c..width {
                    let delta = &f * &pivot[k];
                    row[k] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// Betti numbers of `R/I` from the Koszul complex `K(x) ⊗ R/I` in each
/// multidegree `b`: chains `e_F ⊗ x^{b-F}` with `x^{b-F}` a standard monomial.
pub fn koszul_oracle(i: &MonomialIdeal) -> BettiTable {
    let n = i.n();
    let top: Vec<u32> = (0..n).map(|p| i.gens().iter().map(|g| g.exponents()[p]).max().unwrap_or(0)).collect();
    let mut counts: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    let mut b = vec![0u32; n];
    loop {
        // chains in homological degree s: subsets F of supp(b), |F| = s, with x^{b-F} standard
        let chain = |s: usize| -> Vec<u32> {
            (0u32..1 << n)
                .filter(|f| f.count_ones() as usize == s)
                .filter(|f| (0..n).all(|p| f >> p & 1 == 0 || b[p] > 0))
                .filter(|f| {
                    let e: Vec<u32> = (0..n).map(|p| b[p] - (f >> p & 1)).collect();
                    !i.contains(&Monomial::new(e)).unwrap()
                })
                .collect()
        };
        let diff_rank = |src: &[u32], dst: &[u32]| -> usize {
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let rows = src
                .iter()
                .map(|&f| {
                    let mut row = vec![q(0); dst.len()];
                    let mut sign = 1;
                    for p in 0..n {
                        if f >> p & 1 == 1 {
                            if let Some(t) = dst.iter().position(|&d| d == f & !(1 << p)) {
                                row[t] = q(sign);
                            }
                            sign = -sign;
                        }
                    }
                    row
                })
                .collect();
            rank_q(rows)
        };
        let degree: u32 = b.iter().sum();
        for s in 1..=n {
            let here = chain(s);
            if here.is_empty() {
                continue;
            }
            let out = diff_rank(&here, &chain(s - 1));
            let inc = if s < n { diff_rank(&chain(s + 1), &here) } else { 0 };
            let dim = (here.len() - out - inc) as u64;
            if dim > 0 {
                *counts.entry((s, degree)).or_insert(0) += dim;
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
    if counts.is_empty() {
        return BettiTable::new(n);
    }
    let first_row = if counts.keys().any(|&(s, d)| d as usize == s) { 0 } else { 1 };
    let max_row = counts.keys().map(|&(s, d)| d as usize - s).max().unwrap();
    let rows: Vec<Vec<u64>> = (first_row..=max_row)
        .map(|r| (1..=n).map(|s| counts.get(&(s, (s + r) as u32)).copied().unwrap_or(0)).collect())
        .collect();
    let refs: Vec<&[u64]> = rows.iter().map(Vec::as_slice).collect();
    BettiTable::from_diagram_rows(n, first_row as u32, &refs)
}

/// Hilbert function by inclusion-exclusion over subsets of generators.
pub fn hilbert_inclusion_exclusion(i: &MonomialIdeal, d_max: u32) -> Vec<u64> {
    let gens = i.gens();
    let n = i.n();
    assert!(gens.len() <= 20, "too many generators for inclusion-exclusion");
    let mut lcm_degrees: Vec<(u32, i64)> = Vec::new();
    for mask in 1u32..(1 << gens.len()) {
        let mut l = vec![0u32; n];
        for (k, g) in gens.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for (x, &e) in l.iter_mut().zip(g.exponents()) {
                    *x = (*x).max(e);
                }
            }
        }
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        lcm_degrees.push((l.iter().sum(), sign));
    }
    (0..=d_max)
        .map(|d| {
            let mut v = count_monomials(n, d).unwrap() as i64;
            for &(e, sign) in &lcm_degrees {
                if e <= d {
                    v -= sign * count_monomials(n, d - e).unwrap() as i64;
                }
            }
            v as u64
        })
        .collect()
}

/// Exact rank of multiplication by `ℓ` from degree `d` to `d + 1` of `R/I`,
/// `ℓ` given by its coefficients.
pub fn multiplication_rank(i: &MonomialIdeal, ell: &[i64], d: u32) -> usize {
    let n = i.n();
    let target = i.standard_monomials(d + 1);
    let index: BTreeMap<&Monomial, usize> = target.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let rows: Vec<Vec<BigRational>> = i
        .standard_monomials(d)
        .iter()
        .map(|u| {
            let mut row = vec![q(0); target.len()];
            for v in 1..=n {
                if ell[v - 1] != 0 {
                    if let Some(&k) = index.get(&u.mul_var(v)) {
                        row[k] += q(ell[v - 1]);
                    }
                }
            }
            row
        })
        .collect();
    rank_q(rows)
}

/// Whether `ℓ` has maximal rank in every degree of the artinian `R/I`.
pub fn is_lefschetz_element(i: &MonomialIdeal, ell: &[i64]) -> bool {
    let h = i.artinian_hilbert().unwrap();
    (0..h.length() as u32).all(|d| {
        let r = multiplication_rank(i, ell, d);
        r == h.get(d as usize).min(h.get(d as usize + 1)) as usize
    })
}

/// WLP oracle: `x_1 + ... + x_n` is a Lefschetz element whenever any form is, for monomial ideals.
pub fn wlp_rank_oracle(i: &MonomialIdeal) -> bool {
    is_lefschetz_element(i, &vec![1; i.n()])
}

/// Last-variable oracle: rank of `·x_n` counts standard monomials `u` with `x_n u` standard.
pub fn last_variable_oracle(i: &MonomialIdeal) -> bool {
    let n = i.n();
    let h = i.artinian_hilbert().unwrap();
    (0..h.length() as u32).all(|d| {
        let r = i.standard_monomials(d).iter().filter(|u| !i.contains(&u.mul_var(n)).unwrap()).count();
        r == h.get(d as usize).min(h.get(d as usize + 1)) as usize
    })
}

/// Distinct seeded strongly stable ideals with `m`-times the WLP and `h_1 = n`.
pub fn wlp_corpus(m: usize, wanted: usize) -> Vec<MonomialIdeal> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for seed in 0..50_000u64 {
        let n = (2 + (seed % 4) as usize).max(m);
        let dmax = 2 + ((seed / 4) % 5) as u32;
        let i = random_strongly_stable(seed, n, dmax, None).unwrap();
        if i.artinian_hilbert().unwrap().num_vars() != n {
            continue;
        }
        if !has_m_wlp_stable(&i, m).unwrap().holds {
            continue;
        }
        if seen.insert(i.to_string()) {
            out.push(i);
            if out.len() == wanted {
                return out;
            }
        }
    }
    panic!("only {} distinct {m}-WLP ideals found", out.len());
}

/// `Σ_d h_d t^d (1-t)^n` as coefficients.
pub fn hilbert_times_one_minus_t(h: &[u64], n: usize) -> Vec<i64> {
    let mut poly: Vec<i64> = h.iter().map(|&v| v as i64).collect();
    for _ in 0..n {
        let mut next = vec![0i64; poly.len() + 1];
        for (d, &c) in poly.iter().enumerate() {
            next[d] += c;
            next[d + 1] -= c;
        }
        poly = next;
    }
    while poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}

/// `Σ_{i,j} (-1)^i β_{ij} t^j` with `β_{00} = 1`.
pub fn betti_alternating(t: &BettiTable) -> Vec<i64> {
    let mut poly = vec![1i64];
    for ((i, j), v) in t.entries() {
        if poly.len() <= j as usize {
            poly.resize(j as usize + 1, 0);
        }
        poly[j as usize] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
    }
    while poly.last() == Some(&0) {
        poly.pop();
    }
    poly
}
