//! Artinian monomial algebras with the weak Lefschetz property in several
//! general linear forms: O-sequences, the extremal ideals `W_m(h)`,
//! Eliahou-Kervaire Betti tables and distractions to point sets.

pub mod betti;
pub mod distractions;
pub mod error;
pub mod ideals;
pub mod lefschetz;
mod linalg;
pub mod monomials;
pub mod osequences;

pub use betti::{ek_graded_betti, ek_total_betti, graded_betti, koszul_graded_betti, BettiTable};
pub use distractions::{
    distract_ideal, distract_monomial, distraction_points, irreducible_components, is_radical_for,
    is_valid_distraction, make_standard_distraction, poly_ideal_hilbert, DistractionMatrix, LinearForm,
    PointsReport, Polynomial, RationalPoint, DEFAULT_SELECTION_BUDGET,
};
pub use error::{Error, Result};
pub use ideals::{lex_segment, max_stats, parse_ideal_text, MaxStats, MonomialIdeal, ParsedIdeal};
pub use lefschetz::{
    build_w, check_rigidity, gotzmann_degree_bound, has_m_wlp_stable, has_maximal_betti, has_wlp_stable,
    is_gotzmann, random_strongly_stable, wlp_monomial_criterion, CutoffPolicy, MWlpReport, MaxBettiReport,
    RigidityReport, WlpFailure, WlpReport,
};
pub use monomials::{binomial, monomials_of_degree, Monomial, VarNames};
pub use osequences::{delta, is_m_times_wl, is_o_sequence, macaulay_bound, validate_o_sequence, OSequence};
