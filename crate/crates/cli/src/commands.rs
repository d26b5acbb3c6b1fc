//! Argument parsing and the commands themselves.

use std::path::PathBuf;

use catbf_core::catbernstein::{
    creation_word, dual_annihilation_check_on, fermionic_suite, relation_suite_bb, relation_suite_bbstar, sigma_suite,
    specht_check, CheckRecord, Seed, Step,
};
use catbf_core::fock::{
    psi, psi_star, verify_bernstein_clifford, verify_clifford_with, verify_correspondence_with, FermionState, FockReport,
};
use catbf_core::partition::enumerate_partitions;
use catbf_core::symfunc::SymPoly;
use catbf_core::symrep::branching::{branching_iso_check, qp_dimension_identity, Branching};
use catbf_core::{Partition, Q};
use clap::{Args, Parser, Subcommand};

use crate::cache::SpechtCache;
use crate::config::{default_cache_dir, OutputFormat, RunConfig, WindowArg};
use crate::modspec::ModuleSpec;
use crate::report::Report;
use crate::tasks::{run_named, Job};
use crate::CliError;

const DEFAULT_MAX_DEGREE: usize = 8;
const DEFAULT_FOCK_DEGREE: usize = 6;
const DEFAULT_CHARGE_RADIUS: i64 = 2;
const DEFAULT_INDEX_RADIUS: i64 = 4;

/// Verification suites for Bernstein operators, the boson-fermion correspondence
/// and their categorification on symmetric group modules.
///
/// Every global flag can also be set by an environment variable (CATBF_MAX_DEGREE,
/// CATBF_CHARGE_WINDOW, CATBF_INDEX_WINDOW, CATBF_CACHE_DIR, CATBF_NO_CACHE, CATBF_JSON,
/// CATBF_JOBS). A flag on the command line wins over the variable, which wins over the default.
#[derive(Debug, Parser)]
#[command(name = "catbf", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Largest symmetric group degree a computation may reach [default: 6 for clifford, 8 otherwise].
    #[arg(long, global = true, env = "CATBF_MAX_DEGREE")]
    pub max_degree: Option<usize>,
    /// Charges to scan: R for -R..R, LO..HI, or `empty` [default: 2].
    #[arg(long, global = true, env = "CATBF_CHARGE_WINDOW", allow_hyphen_values = true)]
    pub charge_window: Option<WindowArg>,
    /// Operator indices to scan, same grammar as --charge-window [default: 4].
    #[arg(long, global = true, env = "CATBF_INDEX_WINDOW", allow_hyphen_values = true)]
    pub index_window: Option<WindowArg>,
    /// Directory of the Specht module cache [default: $XDG_CACHE_HOME/catbf or ~/.cache/catbf].
    #[arg(long, global = true, env = "CATBF_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Do not read or write the on-disk cache.
    #[arg(long, global = true, env = "CATBF_NO_CACHE")]
    pub no_cache: bool,
    /// Emit the report as JSON.
    #[arg(long, global = true, env = "CATBF_JSON")]
    pub json: bool,
    /// Number of worker threads.
    #[arg(long, global = true, env = "CATBF_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply B_{λ_1}⋯B_{λ_k} to 1 and compare with s_λ; then annihilate back to 1.
    Schur {
        /// Comma-separated weakly decreasing parts, e.g. 3,1; `0` is the empty partition.
        partition: String,
    },
    /// Clifford anticommutators, their Bernstein form, and the boson-fermion intertwining on a window.
    Clifford {
        /// Replace ψ_0 by −ψ_0 to confirm the checks can fail.
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Categorified Bernstein operators acting on symmetric group modules.
    Cat {
        #[command(subcommand)]
        which: CatCommand,
    },
    /// Decompositions of P/Q words on a module as explicit isomorphisms.
    Branching {
        /// Module specifier: trivial:N, sign:N, reg:N or S:λ.
        #[arg(long, default_value = "trivial:0")]
        module: ModuleSpec,
        /// Largest total number of strands in the decomposed word.
        #[arg(long, default_value_t = 3)]
        strands: usize,
    },
    /// Every suite on its default grid.
    Suite,
}

#[derive(Debug, Subcommand)]
pub enum CatCommand {
    /// Homology of B_{λ_1}⋯B_{λ_k}(S_0), or with --dual of B*_{λ_k}⋯B*_{λ_1}(S_λ).
    Specht {
        partition: String,
        #[arg(long)]
        dual: bool,
        /// Keep every intermediate complex instead of replacing it by its homology.
        #[arg(long)]
        raw: bool,
    },
    /// Σ^± projector properties.
    Sigma {
        #[arg(long, default_value = "trivial:0")]
        module: ModuleSpec,
    },
    /// B_{a−1}B_b against B_{b−1}B_a (with --star, B*_{a+1}B*_b against B*_{b+1}B*_a).
    Bb {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, default_value = "trivial:0")]
        module: ModuleSpec,
        #[arg(long)]
        star: bool,
    },
    /// B_{a+1}B*_{b+1} against B*_bB_a, and the triangle when a = b.
    Bbstar {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, default_value = "trivial:0")]
        module: ModuleSpec,
    },
    /// Categorified ψ_i, ψ*_i on a module placed in one charge.
    Fermion {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        charge: i64,
        #[arg(long, default_value = "trivial:0")]
        module: ModuleSpec,
    },
}

/// What the binary prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((cfg, report)) => {
            let stdout = match cfg.format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => report.to_text(),
            };
            Outcome { code: exit_code(&cli.command, &report), stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("catbf: {e}\n") },
    }
}

fn exit_code(cmd: &Command, r: &Report) -> i32 {
    if !r.pass {
        1
    } else if !r.skipped.is_empty() && !matches!(cmd, Command::Suite | Command::Branching { .. }) {
        3
    } else {
        0
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Schur { .. } => "schur".into(),
        Command::Clifford { .. } => "clifford".into(),
        Command::Branching { .. } => "branching".into(),
        Command::Suite => "suite".into(),
        Command::Cat { which } => format!(
            "cat {}",
            match which {
                CatCommand::Specht { .. } => "specht",
                CatCommand::Sigma { .. } => "sigma",
                CatCommand::Bb { .. } => "bb",
                CatCommand::Bbstar { .. } => "bbstar",
                CatCommand::Fermion { .. } => "fermion",
            }
        ),
    }
}

/// Resolves flags, environment and per-command defaults into a validated config.
pub fn config_for(cli: &Cli) -> Result<RunConfig, CliError> {
    let g = &cli.global;
    let default_degree = if matches!(cli.command, Command::Clifford { .. }) { DEFAULT_FOCK_DEGREE } else { DEFAULT_MAX_DEGREE };
    let cfg = RunConfig {
        command: command_name(&cli.command),
        max_degree: g.max_degree.unwrap_or(default_degree),
        charge_window: g.charge_window.unwrap_or(WindowArg(catbf_core::fock::Window::symmetric(DEFAULT_CHARGE_RADIUS))).0,
        index_window: g.index_window.unwrap_or(WindowArg(catbf_core::fock::Window::symmetric(DEFAULT_INDEX_RADIUS))).0,
        cache_dir: if g.no_cache { None } else { Some(g.cache_dir.clone().unwrap_or_else(default_cache_dir)) },
        format: if g.json { OutputFormat::Json } else { OutputFormat::Text },
        jobs: g.jobs,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse::<Partition>().map_err(|e| CliError::Parse(format!("`{s}` is not a partition: {e}")))
}

fn execute(cli: &Cli) -> Result<(RunConfig, Report), CliError> {
    let cfg = config_for(cli)?;
    let cache = SpechtCache::new(cfg.cache_dir.clone());
    let report = match &cli.command {
        Command::Schur { partition } => {
            let lambda = parse_partition(partition)?;
            let mut r = Report::new("schur");
            r.param("lambda", &lambda);
            r.extend(schur_records(&lambda, cfg.max_degree)?);
            r
        }
        Command::Clifford { mutate } => clifford_report(&cfg, *mutate),
        Command::Branching { module, strands } => {
            let mut r = Report::new("branching");
            r.param("module", module);
            r.param("strands", strands);
            check_peak(module.degree() as i64 + *strands as i64, cfg.max_degree)?;
            let seed = module.resolve(&cache)?;
            branching_into(&mut r, &seed, *strands);
            r
        }
        Command::Suite => suite(&cfg, &cache),
        Command::Cat { which } => cat(which, &cfg, &cache)?,
    };
    Ok((cfg, report))
}

/// `s_λ` coefficients printed as `s[3,1] - 2 s[2]`, with `1` for `s[0]`.
pub fn pretty(f: &SymPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (l, c)) in f.terms().iter().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let basis = if l.is_empty() { None } else { Some(format!("s[{l}]")) };
        match (mag.is_one(), basis) {
            (true, Some(b)) => out.push_str(&b),
            (false, Some(b)) => out.push_str(&format!("{mag} {b}")),
            (_, None) => out.push_str(&mag.to_string()),
        }
    }
    out
}

fn word_label(word: &[Step]) -> String {
    if word.is_empty() {
        return "id".into();
    }
    word.iter().map(|s| format!("B{}_{}", if s.star { "*" } else { "" }, s.a)).collect::<Vec<_>>().join(" ")
}

/// `B_{λ_1}⋯B_{λ_k}(1) = s_λ` and `B*_{λ_k}⋯B*_{λ_1}(s_λ) = 1` on symmetric functions.
pub fn schur_records(lambda: &Partition, cap: usize) -> Result<Vec<CheckRecord>, CliError> {
    if lambda.size() > cap {
        return Err(CliError::Cap(format!("|{lambda}| = {} exceeds --max-degree {cap}", lambda.size())));
    }
    let s = SymPoly::schur(lambda.clone());
    let word = creation_word(lambda);
    let mut f = SymPoly::one();
    for st in word.iter().rev() {
        f = catbf_core::symfunc::bernstein(st.a, &f, cap)?;
    }
    let up = CheckRecord {
        name: "schur-creation".into(),
        parameters: format!("{}(1)", word_label(&word)),
        expected: pretty(&s),
        computed: pretty(&f),
        pass: f == s,
    };
    let down_word = catbf_core::catbernstein::annihilation_word(lambda);
    let mut g = s.clone();
    for st in down_word.iter().rev() {
        g = catbf_core::symfunc::bernstein_star(st.a, &g, cap)?;
    }
    let down = CheckRecord {
        name: "schur-annihilation".into(),
        parameters: format!("{}(s[{lambda}])", word_label(&down_word)),
        expected: "1".into(),
        computed: pretty(&g),
        pass: g == SymPoly::one(),
    };
    Ok(vec![up, down])
}

fn psi_mutated(j: i64, v: &FermionState) -> FermionState {
    let w = psi(j, v);
    if j == 0 {
        w.scale(&Q::from(-1))
    } else {
        w
    }
}

fn fock_record(name: &str, params: &str, r: &FockReport) -> CheckRecord {
    let computed = match r.mismatches.first() {
        None => format!("{} identities hold", r.checked),
        Some(m) => format!(
            "{} of {} fail; first: {} at c={} lambda={} indices={:?}",
            r.mismatches.len(),
            r.checked,
            m.check,
            m.charge,
            m.partition,
            m.indices
        ),
    };
    CheckRecord {
        name: name.into(),
        parameters: params.into(),
        expected: format!("{} identities hold", r.checked),
        computed,
        pass: r.pass(),
    }
}

/// Fermionic Clifford relations, their Bernstein form, and σ∘ψ = ψ^{bos}∘σ on the window.
/// Suites with nothing to check contribute no records.
pub fn clifford_report(cfg: &RunConfig, mutate: bool) -> Report {
    let mut r = Report::new("clifford");
    let (d, cw, iw) = (cfg.max_degree, cfg.charge_window, cfg.index_window);
    r.param("max_degree", d);
    r.param("charge_window", WindowArg(cw));
    r.param("index_window", WindowArg(iw));
    let p = if mutate { psi_mutated } else { psi };
    let params = format!("deg<={d} c={} i={}", WindowArg(cw), WindowArg(iw));
    let suites = [
        ("clifford-fermionic", verify_clifford_with(p, psi_star, d, cw, iw)),
        ("clifford-bernstein", verify_bernstein_clifford(d, cw, iw)),
        ("correspondence", verify_correspondence_with(p, psi_star, d, cw, iw)),
    ];
    for (name, fr) in suites {
        if fr.checked > 0 {
            r.push(fock_record(name, &params, &fr));
        }
    }
    r
}

/// Largest degree reached while applying `word` (rightmost first) to a degree-`n` module.
pub fn peak_degree(word: &[Step], n: i64) -> i64 {
    let (mut d, mut peak) = (n, n);
    for s in word.iter().rev() {
        d = if s.star { d - s.a } else { d + s.a };
        peak = peak.max(d);
    }
    peak
}

fn check_peak(peak: i64, cap: usize) -> Result<(), CliError> {
    if peak > cap as i64 {
        Err(CliError::Cap(format!("computation reaches degree {peak}, above --max-degree {cap}")))
    } else {
        Ok(())
    }
}

fn st(a: i64, star: bool) -> Step {
    Step { a, star }
}

fn cat(which: &CatCommand, cfg: &RunConfig, cache: &SpechtCache) -> Result<Report, CliError> {
    let cap = cfg.max_degree;
    let mut r = Report::new(cfg.command.clone());
    match which {
        CatCommand::Specht { partition, dual, raw } => {
            let lambda = parse_partition(partition)?;
            r.param("lambda", &lambda);
            r.param("dual", dual);
            r.param("reduce", !raw);
            r.extend(specht_records(&lambda, *dual, !raw, cap, cache)?);
        }
        CatCommand::Sigma { module } => {
            r.param("module", module);
            r.extend(sigma_records(module, cap, cache)?);
        }
        CatCommand::Bb { a, b, module, star } => {
            r.param("a", a);
            r.param("b", b);
            r.param("module", module);
            r.param("star", star);
            r.extend(bb_records(*a, *b, module, *star, cap, cache)?);
        }
        CatCommand::Bbstar { a, b, module } => {
            r.param("a", a);
            r.param("b", b);
            r.param("module", module);
            r.extend(bbstar_records(*a, *b, module, cap, cache)?);
        }
        CatCommand::Fermion { i, charge, module } => {
            r.param("i", i);
            r.param("charge", charge);
            r.param("module", module);
            check_peak(peak_degree(&[st(i - charge - 1, false)], module.degree() as i64), cap)?;
            let seed = module.resolve(cache)?;
            r.extend(fermionic_suite(*i, *charge, &seed)?);
        }
    }
    Ok(r)
}

pub fn specht_records(lambda: &Partition, dual: bool, reduce: bool, cap: usize, cache: &SpechtCache) -> Result<Vec<CheckRecord>, CliError> {
    check_peak(lambda.size() as i64, cap)?;
    if dual {
        Ok(dual_annihilation_check_on(lambda, cache.get(lambda)?, reduce)?)
    } else {
        Ok(specht_check(lambda, reduce)?)
    }
}

pub fn sigma_records(module: &ModuleSpec, cap: usize, cache: &SpechtCache) -> Result<Vec<CheckRecord>, CliError> {
    check_peak(module.degree() as i64 + 2, cap)?;
    Ok(sigma_suite(&module.resolve(cache)?)?)
}

pub fn bb_records(a: i64, b: i64, module: &ModuleSpec, star: bool, cap: usize, cache: &SpechtCache) -> Result<Vec<CheckRecord>, CliError> {
    let n = module.degree() as i64;
    let words = if star {
        [[st(a + 1, true), st(b, true)], [st(b + 1, true), st(a, true)]]
    } else {
        [[st(a - 1, false), st(b, false)], [st(b - 1, false), st(a, false)]]
    };
    for w in &words {
        check_peak(peak_degree(w, n), cap)?;
    }
    Ok(relation_suite_bb(a, b, &module.resolve(cache)?, star)?)
}

pub fn bbstar_records(a: i64, b: i64, module: &ModuleSpec, cap: usize, cache: &SpechtCache) -> Result<Vec<CheckRecord>, CliError> {
    let n = module.degree() as i64;
    for w in [[st(a + 1, false), st(b + 1, true)], [st(b, true), st(a, false)]] {
        check_peak(peak_degree(&w, n), cap)?;
    }
    Ok(relation_suite_bbstar(a, b, &module.resolve(cache)?)?)
}

/// The decompositions whose source word has at most `strands` strands.
pub fn branching_grid(strands: usize) -> Vec<Branching> {
    let mut out = Vec::new();
    for total in 2..=strands {
        for n in 1..total {
            let m = total - n;
            out.push(Branching::QStarPSwap { n, m });
            out.push(Branching::QPSwap { n, m });
            out.push(Branching::PPStarMerge { n, m });
            out.push(Branching::PPMerge { m, n });
        }
    }
    for k in 1..strands {
        for l in enumerate_partitions(k) {
            out.push(Branching::QLambdaP { mu: l.clone() });
            out.push(Branching::PLambdaP { lambda: l });
        }
    }
    out
}

/// Runs [`branching_grid`] on `seed`; decompositions that exceed a cap are reported as skipped.
pub fn branching_into(r: &mut Report, seed: &Seed, strands: usize) {
    for kind in branching_grid(strands) {
        let task = format!("{} on {}", kind.label(), seed.label);
        match branching_iso_check(&kind, seed.module.clone()) {
            Ok(b) => r.push(CheckRecord {
                name: "branching".into(),
                parameters: task,
                expected: "rho_s iota_t = delta_st id, sum iota_s rho_s = id, intertwiners".into(),
                computed: format!(
                    "dim {} = {}; orthogonal={} complete={} intertwiners={}",
                    b.source_dim,
                    b.summands.iter().map(|s| format!("{}[{}]", s.dim, s.label)).collect::<Vec<_>>().join(" + "),
                    b.orthogonal,
                    b.complete,
                    b.intertwiners
                ),
                pass: b.pass,
            }),
            Err(e) => r.skip(task, e),
        }
    }
    for total in 2..=strands {
        for n in 1..total {
            let m = total - n;
            let task = format!("QP-dimension(n={n},m={m}) on {}", seed.label);
            match qp_dimension_identity(n, m, seed.module.clone()) {
                Ok((lhs, rhs)) => r.push(CheckRecord {
                    name: "qp-dimension".into(),
                    parameters: task,
                    expected: lhs.to_string(),
                    computed: rhs.to_string(),
                    pass: lhs == rhs,
                }),
                Err(e) => r.skip(task, e),
            }
        }
    }
}

type TaskOut = Result<Vec<CheckRecord>, CliError>;

fn job<'a>(f: impl FnOnce() -> TaskOut + Send + 'a) -> Job<'a, TaskOut> {
    Box::new(f)
}

/// The default grid of every suite, run on `cfg.jobs` threads. Cap overruns become skips.
pub fn suite(cfg: &RunConfig, cache: &SpechtCache) -> Report {
    let cap = cfg.max_degree;
    let mut r = Report::new("suite");
    r.param("max_degree", cap);
    r.param("charge_window", WindowArg(cfg.charge_window));
    r.param("index_window", WindowArg(cfg.index_window));
    let mut jobs: Vec<(String, Job<'_, TaskOut>)> = Vec::new();
    for d in 0..=cap {
        jobs.push((format!("a-schur-{d:02}"), job(move || {
            let mut out = Vec::new();
            for l in enumerate_partitions(d) {
                out.extend(schur_records(&l, cap)?);
            }
            Ok(out)
        })));
    }
    let fock_cfg = RunConfig { max_degree: cap.min(DEFAULT_FOCK_DEGREE), ..cfg.clone() };
    jobs.push(("b-clifford".into(), job(move || Ok(clifford_report(&fock_cfg, false).records))));
    let specht_deg = cap.min(5);
    for d in 0..=specht_deg {
        for (i, l) in enumerate_partitions(d).into_iter().enumerate() {
            let dual = d <= 4;
            jobs.push((format!("c-specht-{d}-{i:02}"), job(move || {
                let mut out = specht_records(&l, false, true, cap, cache)?;
                if dual {
                    out.extend(specht_records(&l, true, true, cap, cache)?);
                }
                Ok(out)
            })));
        }
    }
    let seeds: Vec<ModuleSpec> = vec![ModuleSpec::Specht(Partition::empty()), ModuleSpec::Specht(Partition::row(1)), ModuleSpec::Specht(Partition::row(2))];
    for (si, m) in seeds.iter().enumerate() {
        for a in -1..=2 {
            for star in [false, true] {
                let m = m.clone();
                jobs.push((format!("d-bb-{si}-{}-{star}", a + 1), job(move || bb_records(a, a, &m, star, cap, cache))));
            }
        }
        for (a, b) in [(2, 1), (0, 1)] {
            for star in [false, true] {
                let m = m.clone();
                jobs.push((format!("e-bbshift-{si}-{a}{b}-{star}"), job(move || bb_records(a, b, &m, star, cap, cache))));
            }
            let m = m.clone();
            jobs.push((format!("f-bbstar-{si}-{a}{b}"), job(move || bbstar_records(a, b, &m, cap, cache))));
        }
        for a in 0..=1 {
            let m = m.clone();
            jobs.push((format!("g-triangle-{si}-{a}"), job(move || bbstar_records(a, a, &m, cap, cache))));
        }
    }
    let sigma_seeds = [ModuleSpec::Trivial(0), ModuleSpec::Regular(1), ModuleSpec::Specht(Partition::row(2))];
    for (si, m) in sigma_seeds.into_iter().enumerate() {
        jobs.push((format!("h-sigma-{si}"), job(move || sigma_records(&m, cap, cache))));
    }
    let branching_seeds =
        [ModuleSpec::Trivial(0), ModuleSpec::Specht(Partition::row(1)), ModuleSpec::Specht(Partition::from_parts(&[2, 1])), ModuleSpec::Regular(3)];
    type BranchOut = (Report, Option<CliError>);
    let mut branch_jobs: Vec<(String, Job<'_, BranchOut>)> = Vec::new();
    for (si, m) in branching_seeds.into_iter().enumerate() {
        branch_jobs.push((format!("i-branching-{si}"), Box::new(move || {
            let mut br = Report::new("branching");
            match m.resolve(cache) {
                Ok(seed) => branching_into(&mut br, &seed, 3),
                Err(e) => return (br, Some(e)),
            }
            (br, None)
        })));
    }
    let results = run_named(cfg.jobs, jobs);
    for (name, res) in results {
        match res {
            Ok(recs) => r.extend(recs),
            Err(CliError::Cap(why)) => r.skip(name, why),
            Err(e) => r.push(CheckRecord { name: "task-error".into(), parameters: name, expected: "ok".into(), computed: e.to_string(), pass: false }),
        }
    }
    for (name, (br, err)) in run_named(cfg.jobs, branch_jobs) {
        r.extend(br.records);
        r.skipped.extend(br.skipped);
        if let Some(e) = err {
            r.skip(name, e);
        }
    }
    r
}
