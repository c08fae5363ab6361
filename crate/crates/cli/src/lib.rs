//! Command-line front end: sequences, ideal files and matrix files in,
//! deterministic text or `key<TAB>value` reports out.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;

use clap::{Parser, Subcommand, ValueEnum};
use mwlp_core::osequences::{parse_raw_sequence, WlSequenceReport};
use mwlp_core::*;

/// Exit code when the checked property holds or the computation finished.
pub const EXIT_OK: i32 = 0;
/// Exit code when the checked property fails.
pub const EXIT_FAILS: i32 = 1;
/// Exit code for usage, parse and precondition errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mwlp", version, about = "Artinian algebras with m-times the weak Lefschetz property")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Print x1..x4 as x, y, z, t when there are at most four variables.
    #[arg(long, global = true)]
    pub names: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Cutoff {
    /// Generators of degree at most k_m.
    #[value(name = "km")]
    Km,
    /// Generators of degree at most k_m + 1.
    #[value(name = "km+1")]
    KmPlusOne,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a sequence is an m-times weak Lefschetz O-sequence.
    CheckOseq {
        sequence: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Build the extremal ideal W_m(h).
    BuildW {
        sequence: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Build the lex-segment ideal of an O-sequence.
    Lex { sequence: String },
    /// Hilbert function of R/I.
    Hf {
        ideal: String,
        /// Last degree to print; defaults to one past the socle degree.
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// m-times weak Lefschetz property with certificate.
    Wlp {
        ideal: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Graded Betti diagram and total Betti numbers of R/I.
    Betti { ideal: String },
    /// Whether R/I has the Betti numbers of W_m(h).
    Maxbetti {
        ideal: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Cutoff::KmPlusOne)]
        cutoff: Cutoff,
    },
    /// Rigidity of the total Betti numbers against W_m(h).
    Rigidity {
        ideal: String,
        #[arg(long)]
        m: usize,
    },
    /// Apply a distraction matrix; with --points, list the points of the distracted ideal.
    Distract {
        ideal: String,
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        points: bool,
    },
    /// Seeded random artinian strongly stable ideal.
    RandomBorel {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u32,
        /// Sample until the Hilbert function equals this sequence.
        #[arg(long)]
        target: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

struct Ctx {
    format: Format,
    names: VarNames,
    out: String,
    err: String,
}

impl Ctx {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{key}\t{value}");
    }

    fn tsv(&self) -> bool {
        self.format == Format::Tsv
    }
}

/// Reads an ideal file, minimalizing with a warning when generators are redundant.
pub fn parse_ideal_file(text: &str) -> Result<(MonomialIdeal, Option<String>)> {
    let parsed = parse_ideal_text(text)?;
    let warning = (parsed.redundant > 0).then(|| {
        format!("warning: {} non-minimal generator(s) dropped while minimalizing", parsed.redundant)
    });
    Ok((parsed.ideal, warning))
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    execute(cli)
}

pub fn execute(cli: Cli) -> Outcome {
    let names = if cli.names { VarNames::Letters } else { VarNames::Indexed };
    let mut ctx = Ctx { format: cli.format, names, out: String::new(), err: String::new() };
    let result = match cli.command {
        Command::CheckOseq { sequence, m } => check_oseq(&mut ctx, &sequence, m),
        Command::BuildW { sequence, m } => build_w_cmd(&mut ctx, &sequence, m),
        Command::Lex { sequence } => lex_cmd(&mut ctx, &sequence),
        Command::Hf { ideal, dmax } => hf_cmd(&mut ctx, &ideal, dmax),
        Command::Wlp { ideal, m } => wlp_cmd(&mut ctx, &ideal, m),
        Command::Betti { ideal } => betti_cmd(&mut ctx, &ideal),
        Command::Maxbetti { ideal, m, cutoff } => maxbetti_cmd(&mut ctx, &ideal, m, cutoff),
        Command::Rigidity { ideal, m } => rigidity_cmd(&mut ctx, &ideal, m),
        Command::Distract { ideal, matrix, points } => distract_cmd(&mut ctx, &ideal, &matrix, points),
        Command::RandomBorel { seed, n, dmax, target } => random_cmd(&mut ctx, seed, n, dmax, target.as_deref()),
    };
    match result {
        Ok(code) => Outcome { code, stdout: ctx.out, stderr: ctx.err },
        Err(e) => {
            let mut o = Outcome::usage(e);
            o.stderr = ctx.err + &o.stderr;
            o
        }
    }
}

type CmdResult = std::result::Result<i32, String>;

fn read_input(path: &str) -> std::result::Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn load_ideal(ctx: &mut Ctx, path: &str) -> std::result::Result<MonomialIdeal, String> {
    let text = read_input(path)?;
    let (ideal, warning) = parse_ideal_file(&text).map_err(|e| format!("{path}: {e}"))?;
    if let Some(w) = warning {
        ctx.err.push_str(&w);
        ctx.err.push('\n');
    }
    Ok(ideal)
}

fn write_sequence_report(ctx: &mut Ctx, h: &str, m: usize, report: &WlSequenceReport) {
    if ctx.tsv() {
        ctx.kv("h", h);
        ctx.kv("m", m);
        ctx.kv("holds", report.holds);
        for (i, (d, k)) in report.deltas.iter().zip(&report.lengths).enumerate() {
            ctx.kv(&format!("delta{}", i + 1), d);
            ctx.kv(&format!("k{}", i + 1), k);
        }
        if let Some(r) = &report.reason {
            ctx.kv("reason", r);
        }
        if let Some(l) = report.failed_level {
            ctx.kv("failed_level", l);
        }
        return;
    }
    let _ = writeln!(ctx.out, "h = {h}");
    for (i, (d, k)) in report.deltas.iter().zip(&report.lengths).enumerate() {
        let _ = writeln!(ctx.out, "Δ^{} h = {d}  (k_{} = {k})", i + 1, i + 1);
    }
    if report.holds {
        let _ = writeln!(ctx.out, "{m}-times weak Lefschetz O-sequence: yes");
    } else {
        let level = report.failed_level.unwrap_or(0);
        let reason = report.reason.as_deref().unwrap_or("");
        let _ = writeln!(ctx.out, "{m}-times weak Lefschetz O-sequence: no (level {level}: {reason})");
    }
}

fn parse_sequence(text: &str) -> std::result::Result<Vec<u64>, String> {
    parse_raw_sequence(text).map_err(|e| e.to_string())
}

fn check_oseq(ctx: &mut Ctx, seq: &str, m: usize) -> CmdResult {
    let raw = parse_sequence(seq)?;
    let report = is_m_times_wl(&raw, m);
    let shown: Vec<String> = raw.iter().map(u64::to_string).collect();
    write_sequence_report(ctx, &shown.join(","), m, &report);
    Ok(if report.holds { EXIT_OK } else { EXIT_FAILS })
}

fn emit_ideal(ctx: &mut Ctx, ideal: &MonomialIdeal) {
    if ctx.tsv() {
        ctx.kv("vars", ideal.n());
        for g in ideal.gens() {
            ctx.kv("gen", g.display(ctx.names));
        }
    } else {
        ctx.out.push_str(&ideal.to_file_string(ctx.names));
    }
}

fn build_w_cmd(ctx: &mut Ctx, seq: &str, m: usize) -> CmdResult {
    let raw = parse_sequence(seq)?;
    match build_w(&raw, m) {
        Ok(w) => {
            emit_ideal(ctx, &w);
            Ok(EXIT_OK)
        }
        Err(e @ (Error::NotWeakLefschetzSequence { .. } | Error::NotOSequence(_))) => {
            let _ = writeln!(ctx.err, "{e}");
            Ok(EXIT_FAILS)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn lex_cmd(ctx: &mut Ctx, seq: &str) -> CmdResult {
    let raw = parse_sequence(seq)?;
    let h = match validate_o_sequence(&raw) {
        Ok(h) => h,
        Err(e) => {
            let _ = writeln!(ctx.err, "{e}");
            return Ok(EXIT_FAILS);
        }
    };
    emit_ideal(ctx, &lex_segment(&h).map_err(|e| e.to_string())?);
    Ok(EXIT_OK)
}

fn hf_cmd(ctx: &mut Ctx, path: &str, dmax: Option<u32>) -> CmdResult {
    let ideal = load_ideal(ctx, path)?;
    let dmax = match dmax {
        Some(d) => d,
        None => ideal
            .socle_degree()
            .map(|s| s as u32 + 1)
            .map_err(|_| "ideal is not artinian; pass --dmax".to_string())?,
    };
    let hf = ideal.hilbert_function(dmax);
    if ctx.tsv() {
        for (d, v) in hf.iter().enumerate() {
            ctx.kv(&d.to_string(), v);
        }
    } else {
        let shown: Vec<String> = hf.iter().map(u64::to_string).collect();
        let _ = writeln!(ctx.out, "{}", shown.join(","));
    }
    Ok(EXIT_OK)
}

fn wlp_cmd(ctx: &mut Ctx, path: &str, m: usize) -> CmdResult {
    let ideal = load_ideal(ctx, path)?;
    ideal.require_artinian().map_err(|e| e.to_string())?;
    if !ideal.is_strongly_stable() {
        if m != 1 {
            return Err(format!("{}; only --m 1 is available for other monomial ideals", Error::NotStronglyStable));
        }
        let report = wlp_monomial_criterion(&ideal).map_err(|e| e.to_string())?;
        write_level(ctx, 0, ideal.n(), &report);
        let verdict = if report.has_property { "holds" } else { "not certified (ideal is not strongly stable)" };
        if ctx.tsv() {
            ctx.kv("strongly_stable", false);
            ctx.kv("holds", report.has_property);
        } else {
            let _ = writeln!(ctx.out, "WLP: {verdict}");
        }
        return Ok(if report.has_property { EXIT_OK } else { EXIT_FAILS });
    }
    let report = has_m_wlp_stable(&ideal, m).map_err(|e| e.to_string())?;
    for (i, level) in report.levels.iter().enumerate() {
        write_level(ctx, i, level.nvars, &level.report);
    }
    if ctx.tsv() {
        ctx.kv("strongly_stable", true);
        ctx.kv("holds", report.holds);
    } else {
        let _ = writeln!(ctx.out, "{m}-times WLP: {}", if report.holds { "holds" } else { "fails" });
    }
    Ok(if report.holds { EXIT_OK } else { EXIT_FAILS })
}

fn write_level(ctx: &mut Ctx, level: usize, nvars: usize, report: &WlpReport) {
    let certificate = match &report.failure {
        None => {
            let var = ctx.names.name(nvars.max(1), nvars.max(1));
            format!("{var} is a weak Lefschetz element")
        }
        Some(WlpFailure::NonUnimodal) => "Hilbert function is not unimodal".to_string(),
        Some(WlpFailure::MissingPower { monomial }) => {
            format!("missing power: {} not in ideal", monomial.display(ctx.names))
        }
        Some(WlpFailure::LowDegreeLastVariable { generator }) => {
            format!("generator {} divisible by the last variable has degree <= k", generator.display(ctx.names))
        }
    };
    if ctx.tsv() {
        ctx.kv(&format!("level{level}_vars"), nvars);
        ctx.kv(&format!("level{level}_hilbert"), &report.hilbert);
        ctx.kv(&format!("level{level}_k"), report.k);
        ctx.kv(&format!("level{level}_holds"), report.has_property);
        ctx.kv(&format!("level{level}_certificate"), certificate);
    } else {
        let _ = writeln!(
            ctx.out,
            "level {level} ({nvars} variables): h = {}, k = {}: {certificate}",
            report.hilbert, report.k
        );
    }
}

fn betti_cmd(ctx: &mut Ctx, path: &str) -> CmdResult {
    let ideal = load_ideal(ctx, path)?;
    let table = graded_betti(&ideal).map_err(|e| e.to_string())?;
    if ctx.tsv() {
        ctx.out.push_str(&table.to_triples());
    } else {
        ctx.out.push_str(&table.render_diagram());
        let totals: Vec<String> = table.totals().iter().map(u64::to_string).collect();
        let _ = writeln!(ctx.out, "total: {}", totals.join(" "));
    }
    Ok(EXIT_OK)
}

fn maxbetti_cmd(ctx: &mut Ctx, path: &str, m: usize, cutoff: Cutoff) -> CmdResult {
    let ideal = load_ideal(ctx, path)?;
    let policy = match cutoff {
        Cutoff::Km => CutoffPolicy::Km,
        Cutoff::KmPlusOne => CutoffPolicy::KmPlusOne,
    };
    let r = has_maximal_betti(&ideal, m, policy).map_err(|e| e.to_string())?;
    if ctx.tsv() {
        ctx.kv("k_m", r.k_m);
        ctx.kv("cutoff", r.cutoff);
        ctx.kv("characterization", r.characterization);
        ctx.kv("direct", r.direct);
        ctx.kv("maximal", r.direct);
    } else {
        let _ = writeln!(ctx.out, "k_{m} = {}, cutoff degree = {}", r.k_m, r.cutoff);
        let _ = writeln!(ctx.out, "Gotzmann characterization: {}", r.characterization);
        let _ = writeln!(ctx.out, "direct comparison with W_{m}(h): {}", r.direct);
        let _ = writeln!(ctx.out, "maximal Betti numbers: {}", if r.direct { "yes" } else { "no" });
    }
    if !r.verdicts_agree() {
        let _ = writeln!(ctx.err, "warning: the characterization disagrees with the direct comparison at this cutoff");
    }
    Ok(if r.direct { EXIT_OK } else { EXIT_FAILS })
}

fn rigidity_cmd(ctx: &mut Ctx, path: &str, m: usize) -> CmdResult {
    let ideal = load_ideal(ctx, path)?;
    let r = check_rigidity(&ideal, m).map_err(|e| e.to_string())?;
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let first = r.first_equal.map_or("none".to_string(), |q| q.to_string());
    if ctx.tsv() {
        ctx.kv("totals", join(&r.totals));
        ctx.kv("extremal_totals", join(&r.extremal_totals));
        ctx.kv("first_equal", &first);
        ctx.kv("implication_holds", r.implication_holds);
        ctx.kv("graded_holds", r.graded_holds);
    } else {
        let _ = writeln!(ctx.out, "β(R/I)      = {}", join(&r.totals));
        let _ = writeln!(ctx.out, "β(R/W_{m}(h)) = {}", join(&r.extremal_totals));
        let _ = writeln!(ctx.out, "first equal index: {first}");
        let _ = writeln!(ctx.out, "rigidity: {}", if r.implication_holds && r.graded_holds { "holds" } else { "violated" });
    }
    Ok(if r.implication_holds && r.graded_holds { EXIT_OK } else { EXIT_FAILS })
}

fn distract_cmd(ctx: &mut Ctx, path: &str, matrix_path: &str, points: bool) -> CmdResult {
    let ideal = load_ideal(ctx, path)?;
    let matrix_text = read_input(matrix_path)?;
    let matrix = DistractionMatrix::parse(&matrix_text).map_err(|e| format!("{matrix_path}: {e}"))?;
    match is_valid_distraction(&matrix, DEFAULT_SELECTION_BUDGET) {
        Ok(true) => {}
        Ok(false) => return Err("matrix is not a distraction: some column selection is linearly dependent".into()),
        Err(e) => {
            let _ = writeln!(ctx.err, "warning: validity not checked: {e}");
        }
    }
    if points {
        let report = distraction_points(&ideal, &matrix).map_err(|e| e.to_string())?;
        for p in &report.points {
            let _ = writeln!(ctx.out, "{p}");
        }
        let _ = writeln!(ctx.err, "{} points, radical: {}", report.points.len(), report.radical);
        return Ok(EXIT_OK);
    }
    let lifted = ideal.extend(matrix.nvars()).map_err(|e| e.to_string())?;
    let gens = distract_ideal(&matrix, &lifted).map_err(|e| e.to_string())?;
    for g in &gens {
        if ctx.tsv() {
            ctx.kv("gen", g.display(ctx.names));
        } else {
            let _ = writeln!(ctx.out, "{}", g.display(ctx.names));
        }
    }
    Ok(EXIT_OK)
}

fn random_cmd(ctx: &mut Ctx, seed: u64, n: usize, dmax: u32, target: Option<&str>) -> CmdResult {
    let target = match target {
        Some(t) => Some(validate_o_sequence(&parse_sequence(t)?).map_err(|e| e.to_string())?),
        None => None,
    };
    match random_strongly_stable(seed, n, dmax, target.as_ref()) {
        Ok(i) => {
            emit_ideal(ctx, &i);
            Ok(EXIT_OK)
        }
        Err(e @ Error::NoSample { .. }) => {
            let _ = writeln!(ctx.err, "{e}");
            Ok(EXIT_FAILS)
        }
        Err(e) => Err(e.to_string()),
    }
}
