mod common;

use common::*;
use mwlp_core::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn random_ss(seed: u64, n: usize, dmax: u32) -> MonomialIdeal {
    random_strongly_stable(seed, n, dmax, None).unwrap()
}

/// Artinian monomial ideal with no stability: random generators plus pure powers.
fn random_monomial(seed: u64, n: usize) -> MonomialIdeal {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut gens: Vec<Monomial> = (1..=n).map(|i| Monomial::var_power(i, rng.random_range(2..=4), n)).collect();
    for _ in 0..rng.random_range(0..=4) {
        gens.push(Monomial::new((0..n).map(|_| rng.random_range(0..=2)).collect()));
    }
    gens.retain(|g| !g.is_one());
    MonomialIdeal::minimalize(gens, n).unwrap()
}

#[test]
fn eliahou_kervaire_matches_koszul_oracle() {
    for i in [w1_fixture(), w2_fixture(), lex_fixture()] {
        assert_eq!(ek_graded_betti(&i).unwrap(), koszul_oracle(&i));
    }
    for seed in 0..40 {
        let i = random_ss(seed, 2 + (seed % 3) as usize, 2 + (seed % 3) as u32);
        assert_eq!(ek_graded_betti(&i).unwrap(), koszul_oracle(&i), "{i}");
        assert_eq!(ek_total_betti(&i).unwrap(), koszul_oracle(&i).totals(), "{i}");
    }
}

#[test]
fn koszul_betti_matches_oracle_on_arbitrary_monomial_ideals() {
    for seed in 0..40 {
        let i = random_monomial(seed, 2 + (seed % 3) as usize);
        let t = koszul_graded_betti(&i).unwrap();
        assert_eq!(t, koszul_oracle(&i), "{i}");
        let h = i.artinian_hilbert().unwrap();
        assert_eq!(betti_alternating(&t), hilbert_times_one_minus_t(h.values(), i.n()), "{i}");
    }
}

#[test]
fn hilbert_function_matches_inclusion_exclusion() {
    for seed in 0..40 {
        let i = random_monomial(seed, 2 + (seed % 3) as usize);
        assert_eq!(i.hilbert_function(10), hilbert_inclusion_exclusion(&i, 10), "{i}");
    }
    let w = build_w(&H, 2).unwrap();
    assert_eq!(w.hilbert_function(9), hilbert_inclusion_exclusion(&w, 9));
}

#[test]
fn wlp_criterion_matches_rank_oracles() {
    let mut seen = [0usize; 2];
    for seed in 0..120 {
        let i = random_ss(seed, 2 + (seed % 3) as usize, 2 + (seed / 3 % 3) as u32);
        let verdict = has_wlp_stable(&i).unwrap().has_property;
        seen[verdict as usize] += 1;
        assert_eq!(verdict, last_variable_oracle(&i), "{i}");
        if i.n() <= 3 {
            assert_eq!(verdict, wlp_rank_oracle(&i), "{i}");
        }
        assert_eq!(verdict, has_m_wlp_stable(&i, 1).unwrap().holds);
        if i.n() >= 2 {
            let two = has_m_wlp_stable(&i, 2).unwrap();
            let by_levels = verdict && last_variable_oracle(&i.project_rho(i.n() - 1).unwrap());
            assert_eq!(two.holds, by_levels, "{i}");
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "corpus lacks one of the verdicts: {seen:?}");
}

#[test]
fn monomial_criterion_is_sound() {
    for seed in 0..60 {
        let i = random_monomial(seed, 2 + (seed % 2) as usize);
        if wlp_monomial_criterion(&i).unwrap().has_property {
            let mut ell = vec![0; i.n()];
            ell[i.n() - 1] = 1;
            assert!(is_lefschetz_element(&i, &ell), "{i}");
        }
    }
}

#[test]
fn maximal_betti_verdicts_agree() {
    for m in [1, 2] {
        for i in wlp_corpus(m, 60) {
            let r = has_maximal_betti(&i, m, CutoffPolicy::KmPlusOne).unwrap();
            assert!(r.verdicts_agree(), "{i} m={m}: characterization {} direct {}", r.characterization, r.direct);
            let w = build_w(i.artinian_hilbert().unwrap().values(), m).unwrap();
            assert!(has_maximal_betti(&w, m, CutoffPolicy::KmPlusOne).unwrap().direct);
        }
    }
}

#[test]
fn lex_dominates_every_strongly_stable_ideal() {
    for i in wlp_corpus(1, 60) {
        let lex = lex_segment(&i.artinian_hilbert().unwrap()).unwrap();
        assert!(ek_graded_betti(&lex).unwrap().dominates(&ek_graded_betti(&i).unwrap()).unwrap(), "{i}");
        assert!(is_gotzmann(&lex, gotzmann_degree_bound(&lex)));
    }
}

#[test]
fn distraction_preserves_hilbert_function() {
    for seed in 0..12 {
        let i = random_ss(seed, 2 + (seed % 2) as usize, 2 + (seed % 3) as u32);
        let top = i.gens().iter().flat_map(|g| g.exponents().iter().copied()).max().unwrap();
        let l = make_standard_distraction(i.n().max(2), top as usize).unwrap();
        let i = i.extend(l.nvars()).unwrap();
        let gens = distract_ideal(&l, &i).unwrap();
        let d = i.max_generator_degree().unwrap() + 1;
        assert_eq!(poly_ideal_hilbert(i.n(), &gens, d).unwrap(), i.hilbert_function(d), "{i}");
    }
    let i = i_fixture();
    let gens = distract_ideal(&make_standard_distraction(4, 7).unwrap(), &i).unwrap();
    assert_eq!(poly_ideal_hilbert(4, &gens, 7).unwrap(), i.hilbert_function(7));
}

#[test]
fn distraction_points_on_random_ideals() {
    for seed in 0..30 {
        let n = 2 + (seed % 2) as usize;
        let i = random_ss(seed, n, 2 + (seed % 4) as u32);
        let top = i.gens().iter().flat_map(|g| g.exponents().iter().copied()).max().unwrap();
        let l = make_standard_distraction(n + 1, top as usize).unwrap();
        let r = distraction_points(&i, &l).unwrap();
        assert!(r.radical, "{i}");
        assert_eq!(r.points.len() as u64, i.artinian_hilbert().unwrap().total());
        assert!(is_radical_for(&l.first_rows(n).unwrap(), &i).unwrap());
    }
}

#[test]
fn extremal_ideal_structure() {
    for m in [1, 2] {
        for i in wlp_corpus(m, 40) {
            let n = i.n();
            let h = i.artinian_hilbert().unwrap();
            let w = build_w(h.values(), m).unwrap();
            assert!(w.is_strongly_stable());
            assert_eq!(w.artinian_hilbert().unwrap(), h);
            assert!(has_m_wlp_stable(&w, m).unwrap().holds);
            let d = delta(&h).unwrap();
            if d.num_vars() == n - 1 {
                assert_eq!(w.project_rho(n - 1).unwrap(), build_w(d.values(), m - 1).unwrap(), "{w}");
            }
            let bottom = w.project_rho(n - m).unwrap();
            assert!(is_gotzmann(&bottom, gotzmann_degree_bound(&bottom)), "{w}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distracted_monomials_are_homogeneous_with_source_leading_term(
        exps in proptest::collection::vec(0u32..4, 3),
        cols in 1usize..5,
    ) {
        let m = Monomial::new(exps);
        let l = make_standard_distraction(3, cols).unwrap();
        let p = distract_monomial(&l, &m).unwrap();
        prop_assert!(p.is_homogeneous());
        prop_assert_eq!(p.degree(), Some(m.degree()));
        let (lead, c) = p.leading().unwrap();
        prop_assert_eq!(lead, &m);
        prop_assert!(c.is_one());
    }

    #[test]
    fn identity_distraction_is_identity(seed in 0u64..1000, n in 2usize..5) {
        let i = random_ss(seed, n, 3);
        let l = make_standard_distraction(n, 1).unwrap();
        let gens = distract_ideal(&l, &i).unwrap();
        let expected: Vec<Polynomial> = i.gens().iter().cloned().map(Polynomial::from_monomial).collect();
        prop_assert_eq!(gens, expected);
    }

    #[test]
    fn components_intersect_back(seed in 0u64..1000, n in 1usize..4) {
        let i = random_monomial(seed, n);
        let comps = irreducible_components(&i).unwrap();
        for d in 0..=(i.socle_degree().unwrap() as u32 + 1) {
            for m in monomials_of_degree(n, d) {
                let in_all = comps.iter().all(|c| c.contains(&m).unwrap());
                prop_assert_eq!(in_all, i.contains(&m).unwrap());
            }
        }
    }

    #[test]
    fn standard_distraction_is_radical_for_stable_ideals(seed in 0u64..1000, n in 1usize..4, dmax in 2u32..5) {
        let i = random_ss(seed, n, dmax);
        let top = i.gens().iter().flat_map(|g| g.exponents().iter().copied()).max().unwrap();
        let l = make_standard_distraction(n + 1, top as usize).unwrap();
        prop_assert!(is_radical_for(&l, &i).unwrap());
    }

    #[test]
    fn points_satisfy_generators(seed in 0u64..1000, dmax in 2u32..5) {
        let i = random_ss(seed, 2, dmax);
        let top = i.gens().iter().flat_map(|g| g.exponents().iter().copied()).max().unwrap();
        let l = make_standard_distraction(3, top as usize).unwrap();
        let r = distraction_points(&i, &l).unwrap();
        for g in &r.generators {
            for p in &r.points {
                prop_assert!(g.eval(p.coords()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn build_w_matches_its_sequence(seed in 0u64..5000, n in 2usize..5, dmax in 2u32..6, m in 1usize..3) {
        let i = random_ss(seed, n, dmax);
        let h = i.artinian_hilbert().unwrap();
        let report = is_m_times_wl(h.values(), m);
        match build_w(h.values(), m) {
            Ok(w) => {
                prop_assert!(report.holds);
                prop_assert_eq!(w.artinian_hilbert().unwrap(), h);
                prop_assert!(has_m_wlp_stable(&w, m.min(w.n())).unwrap().holds);
            }
            Err(_) => prop_assert!(!report.holds),
        }
    }
}
