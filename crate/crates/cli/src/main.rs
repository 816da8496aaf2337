//! Command-line runner for the verification engine: resolves a symmetry
//! (built-in family or file), executes named checks or predefined suites
//! over small parameter grids, and emits one JSON report per line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use braided::gaudin::{
    check_classical_poisson, check_qh_commute, check_site_evaluation, check_trig_limit,
    tau_leading_order, EvaluationData,
};
use braided::projectors::{bi_rank, check_skew_trace_reduction};
use braided::realgebra::{
    affine_cocycle_check, braided_jacobi_check, capelli_check, check_cayley_hamilton,
    check_centrality, check_char_poly_forms, check_classical_charpoly_limit,
    check_shift_isomorphism, elementary_symmetric, re_algebra, representation_check,
    REContext, Representation, Side,
};
use braided::rmatrix::braiding_from_toml;
use braided::scalars::parse_scalar;
use braided::yangian::{
    braided_yangian, check_bethe_commute, check_chn, check_evaluation,
    check_evaluation_injection, check_level_structure, check_newton, check_qdet_central,
    YangianContext,
};
use braided::{Braiding, BraidingKind, Report, Rf};
use clap::{Parser, ValueEnum};

#[derive(Parser)]
#[command(name = "braided", version, about = "Exact checks for braided matrix algebras")]
struct Args {
    /// Run a single named check; repeatable. Names are listed in README.md.
    #[arg(long = "check", value_name = "NAME")]
    checks: Vec<String>,

    /// Run a predefined suite instead of individual checks.
    #[arg(long, value_enum, conflicts_with = "checks")]
    suite: Option<Suite>,

    /// Built-in symmetry family.
    #[arg(long, value_enum, default_value_t = FamilyArg::Dj)]
    family: FamilyArg,

    /// Dimension of the underlying space.
    #[arg(long, default_value_t = 2, value_name = "INT")]
    n: usize,

    /// Load the symmetry from a TOML file instead of a built-in family.
    #[arg(long, value_name = "PATH")]
    rmatrix: Option<PathBuf>,

    /// Truncation level for current-algebra checks.
    #[arg(long = "level-cutoff", default_value_t = 2, value_name = "INT")]
    level_cutoff: usize,

    /// Evaluation points as comma-separated rationals.
    #[arg(long, default_value = "1,2", value_name = "CSV")]
    sites: String,

    /// Write reports to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Flip,
    Superflip,
    Dj,
}

struct Config {
    braiding: Braiding,
    family: String,
    n: usize,
    cutoff: usize,
    sites: Vec<Rf>,
}

type Runner = fn(&Config) -> Vec<Report>;

struct CheckDef {
    name: &'static str,
    runner: Runner,
    /// Whether the check depends on the selected symmetry. Checks that
    /// only use the dimension run once per suite, not once per family.
    per_family: bool,
}

const REGISTRY: &[CheckDef] = &[
    CheckDef { name: "braiding-valid", runner: run_braiding_valid, per_family: true },
    CheckDef { name: "bi-rank", runner: run_bi_rank, per_family: true },
    CheckDef { name: "trace-identities", runner: run_trace_identities, per_family: true },
    CheckDef { name: "skew-trace-reduction", runner: run_skew_trace_reduction, per_family: true },
    CheckDef { name: "cayley-hamilton", runner: run_cayley_hamilton, per_family: true },
    CheckDef { name: "char-poly-forms", runner: run_char_poly_forms, per_family: true },
    CheckDef { name: "centrality", runner: run_centrality, per_family: true },
    CheckDef { name: "capelli", runner: run_capelli, per_family: false },
    CheckDef {
        name: "charpoly-classical-limit",
        runner: run_charpoly_classical_limit,
        per_family: false,
    },
    CheckDef { name: "shift-isomorphism", runner: run_shift_isomorphism, per_family: true },
    CheckDef { name: "representation", runner: run_representation, per_family: true },
    CheckDef { name: "braided-jacobi", runner: run_braided_jacobi, per_family: true },
    CheckDef { name: "affine-cocycle", runner: run_affine_cocycle, per_family: true },
    CheckDef { name: "level-grading", runner: run_level_grading, per_family: true },
    CheckDef { name: "yangian-chn", runner: run_yangian_chn, per_family: true },
    CheckDef { name: "yangian-newton", runner: run_yangian_newton, per_family: true },
    CheckDef { name: "bethe-commute", runner: run_bethe_commute, per_family: true },
    CheckDef { name: "qdet-central", runner: run_qdet_central, per_family: true },
    CheckDef { name: "yangian-evaluation", runner: run_yangian_evaluation, per_family: true },
    CheckDef {
        name: "yangian-evaluation-injection",
        runner: run_yangian_evaluation_injection,
        per_family: true,
    },
    CheckDef { name: "trig-limit", runner: run_trig_limit, per_family: true },
    CheckDef { name: "tau-leading-order", runner: run_tau_leading_order, per_family: true },
    CheckDef { name: "site-evaluation", runner: run_site_evaluation, per_family: false },
    CheckDef { name: "qh-commute", runner: run_qh_commute, per_family: false },
    CheckDef { name: "classical-poisson", runner: run_classical_poisson, per_family: false },
];

const QUICK_CHECKS: &[&str] = &[
    "braiding-valid",
    "bi-rank",
    "trace-identities",
    "skew-trace-reduction",
    "cayley-hamilton",
    "char-poly-forms",
    "centrality",
    "capelli",
    "charpoly-classical-limit",
    "shift-isomorphism",
    "representation",
    "braided-jacobi",
    "affine-cocycle",
];

const FULL_EXTRA_CHECKS: &[&str] = &[
    "level-grading",
    "yangian-chn",
    "yangian-newton",
    "bethe-commute",
    "qdet-central",
    "yangian-evaluation",
    "yangian-evaluation-injection",
    "trig-limit",
    "tau-leading-order",
    "site-evaluation",
    "qh-commute",
    "classical-poisson",
];

fn lookup(name: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|d| d.name == name)
}

fn base_params(cfg: &Config) -> Vec<(&'static str, String)> {
    vec![
        ("family", cfg.family.clone()),
        ("n", cfg.braiding.dim.to_string()),
    ]
}

fn skip(check: &str, cfg: &Config, reason: &str) -> Vec<Report> {
    vec![Report::skipped(check, &base_params(cfg), reason)]
}

fn rank_of(cfg: &Config) -> Result<(usize, usize), String> {
    let b = &cfg.braiding;
    bi_rank(b, b.dim + 4)
        .map(|r| (r.m, r.n))
        .map_err(|e| e.to_string())
}

fn left_context(cfg: &Config) -> Result<REContext, String> {
    re_algebra(&cfg.braiding, false, Side::Left).map_err(|e| e.to_string())
}

fn yangian_context(cfg: &Config) -> Result<YangianContext, String> {
    braided_yangian(&cfg.braiding, cfg.cutoff).map_err(|e| e.to_string())
}

fn evaluation_data(cfg: &Config) -> Result<EvaluationData, String> {
    EvaluationData::new(cfg.n, cfg.sites.clone()).map_err(|e| e.to_string())
}

fn run_braiding_valid(cfg: &Config) -> Vec<Report> {
    let b = &cfg.braiding;
    let mut params = base_params(cfg);
    let kind = match b.kind {
        BraidingKind::Hecke => "hecke",
        BraidingKind::Involutive => "involutive",
    };
    params.push(("kind", kind.to_string()));
    vec![Report::run("braiding-valid", &params, || {
        for (label, witness) in [
            ("braid", b.braid_witness()),
            ("kind", b.kind_witness()),
            ("skew-inverse", b.skew_inverse_witness()),
        ] {
            if let Some(w) = witness {
                return Err(format!("{}: {}", label, w));
            }
        }
        Ok(())
    })]
}

fn run_bi_rank(cfg: &Config) -> Vec<Report> {
    let mut params = base_params(cfg);
    match rank_of(cfg) {
        Ok((m, n)) => {
            params.push(("rank", format!("({}|{})", m, n)));
            vec![Report::run("bi-rank", &params, || Ok(()))]
        }
        Err(e) => vec![Report::run("bi-rank", &params, || Err(e))],
    }
}

fn run_trace_identities(cfg: &Config) -> Vec<Report> {
    match rank_of(cfg) {
        Ok((m, n)) => vec![braided::rmatrix::check_trace_identities(
            &cfg.braiding,
            (m as i64, n as i64),
            &cfg.family,
        )],
        Err(e) => vec![Report::run("trace-identities", &base_params(cfg), || Err(e))],
    }
}

fn run_skew_trace_reduction(cfg: &Config) -> Vec<Report> {
    // The reduction scalar is stated for the full tower of a row-type
    // symmetry, so m is the bi-rank degree, not a free parameter.
    let m = match rank_of(cfg) {
        Ok((m, 0)) => m,
        Ok(_) => return skip("skew-trace-reduction", cfg, "requires bi-rank of row type (m|0)"),
        Err(e) => return vec![Report::run("skew-trace-reduction", &base_params(cfg), || Err(e))],
    };
    (0..=m)
        .map(|k| check_skew_trace_reduction(&cfg.braiding, m, k, &cfg.family))
        .collect()
}

fn row_type_context(cfg: &Config, check: &str) -> Result<REContext, Vec<Report>> {
    let ctx = left_context(cfg).map_err(|e| skip(check, cfg, &e))?;
    if ctx.bi_rank.n != 0 {
        return Err(skip(check, cfg, "requires bi-rank of row type (m|0)"));
    }
    Ok(ctx)
}

fn run_cayley_hamilton(cfg: &Config) -> Vec<Report> {
    match row_type_context(cfg, "cayley-hamilton") {
        Ok(ctx) => vec![check_cayley_hamilton(&ctx)],
        Err(reports) => reports,
    }
}

fn run_char_poly_forms(cfg: &Config) -> Vec<Report> {
    match row_type_context(cfg, "char-poly-forms") {
        Ok(ctx) => vec![check_char_poly_forms(&ctx)],
        Err(reports) => reports,
    }
}

fn run_centrality(cfg: &Config) -> Vec<Report> {
    let ctx = match left_context(cfg) {
        Ok(ctx) => ctx,
        Err(e) => return skip("centrality", cfg, &e),
    };
    let mut out = Vec::new();
    for k in 1..=ctx.bi_rank.m {
        match elementary_symmetric(&ctx, k) {
            Ok(ek) => out.push(check_centrality(&ctx, &ek, &format!("e{}", k))),
            Err(e) => out.append(&mut skip("centrality", cfg, &e.to_string())),
        }
    }
    out
}

fn run_capelli(cfg: &Config) -> Vec<Report> {
    vec![capelli_check(cfg.n as u8)]
}

fn run_charpoly_classical_limit(cfg: &Config) -> Vec<Report> {
    vec![check_classical_charpoly_limit(cfg.n as u8)]
}

fn run_shift_isomorphism(cfg: &Config) -> Vec<Report> {
    match check_shift_isomorphism(&cfg.braiding) {
        Ok(rep) => vec![rep],
        Err(e) => skip("shift-isomorphism", cfg, &e.to_string()),
    }
}

fn run_representation(cfg: &Config) -> Vec<Report> {
    let mut out = Vec::new();
    for (label, which) in [
        ("vector", Representation::Vector),
        ("covector", Representation::Covector),
        ("adjoint", Representation::Adjoint),
    ] {
        match representation_check(&cfg.braiding, which) {
            Ok(rep) => out.push(rep),
            Err(e) => {
                let mut params = base_params(cfg);
                params.push(("which", label.to_string()));
                out.push(Report::skipped("representation", &params, &e.to_string()));
            }
        }
    }
    out
}

fn run_braided_jacobi(cfg: &Config) -> Vec<Report> {
    match braided_jacobi_check(&cfg.braiding) {
        Ok(rep) => vec![rep],
        Err(e) => skip("braided-jacobi", cfg, &e.to_string()),
    }
}

fn run_affine_cocycle(cfg: &Config) -> Vec<Report> {
    let samples = [(1, -1, 0), (-1, 0, 1), (0, 1, -1), (2, -1, -1), (1, 1, 1)];
    match affine_cocycle_check(&cfg.braiding, &samples) {
        Ok(rep) => vec![rep],
        Err(e) => skip("affine-cocycle", cfg, &e.to_string()),
    }
}

fn run_level_grading(cfg: &Config) -> Vec<Report> {
    match yangian_context(cfg) {
        Ok(ctx) => vec![check_level_structure(&ctx)],
        Err(e) => skip("level-grading", cfg, &e),
    }
}

fn run_yangian_chn(cfg: &Config) -> Vec<Report> {
    match yangian_context(cfg) {
        Ok(ctx) => (1..=ctx.bi_rank.m).map(|k| check_chn(&ctx, k)).collect(),
        Err(e) => skip("yangian-chn", cfg, &e),
    }
}

fn run_yangian_newton(cfg: &Config) -> Vec<Report> {
    match yangian_context(cfg) {
        Ok(ctx) => (1..=ctx.bi_rank.m).map(|k| check_newton(&ctx, k)).collect(),
        Err(e) => skip("yangian-newton", cfg, &e),
    }
}

fn run_bethe_commute(cfg: &Config) -> Vec<Report> {
    let ctx = match yangian_context(cfg) {
        Ok(ctx) => ctx,
        Err(e) => return skip("bethe-commute", cfg, &e),
    };
    let mut out = Vec::new();
    for k in 1..=ctx.bi_rank.m {
        for l in k..=ctx.bi_rank.m {
            out.push(check_bethe_commute(&ctx, k, l));
        }
    }
    out
}

fn run_qdet_central(cfg: &Config) -> Vec<Report> {
    match yangian_context(cfg) {
        Ok(ctx) if ctx.bi_rank.n == 0 => vec![check_qdet_central(&ctx)],
        Ok(_) => skip("qdet-central", cfg, "requires bi-rank of row type (m|0)"),
        Err(e) => skip("qdet-central", cfg, &e),
    }
}

fn run_yangian_evaluation(cfg: &Config) -> Vec<Report> {
    vec![check_evaluation(&cfg.braiding)]
}

fn run_yangian_evaluation_injection(cfg: &Config) -> Vec<Report> {
    if cfg.braiding.kind != BraidingKind::Involutive {
        return skip(
            "yangian-evaluation-injection",
            cfg,
            "requires an involutive symmetry",
        );
    }
    vec![check_evaluation_injection(&cfg.braiding)]
}

fn run_trig_limit(cfg: &Config) -> Vec<Report> {
    if cfg.braiding.kind != BraidingKind::Hecke {
        return skip("trig-limit", cfg, "requires a Hecke symmetry");
    }
    vec![check_trig_limit(&cfg.braiding, cfg.cutoff)]
}

fn run_tau_leading_order(cfg: &Config) -> Vec<Report> {
    if cfg.braiding.kind != BraidingKind::Hecke {
        return skip("tau-leading-order", cfg, "requires a Hecke symmetry");
    }
    let ctx = match yangian_context(cfg) {
        Ok(ctx) => ctx,
        Err(e) => return skip("tau-leading-order", cfg, &e),
    };
    (1..=ctx.bi_rank.m)
        .map(|k| tau_leading_order(&ctx, k, k))
        .collect()
}

fn run_site_evaluation(cfg: &Config) -> Vec<Report> {
    match evaluation_data(cfg) {
        Ok(data) => vec![check_site_evaluation(&data)],
        Err(e) => vec![Report::run("site-evaluation", &base_params(cfg), || Err(e))],
    }
}

fn run_qh_commute(cfg: &Config) -> Vec<Report> {
    let data = match evaluation_data(cfg) {
        Ok(data) => data,
        Err(e) => return vec![Report::run("qh-commute", &base_params(cfg), || Err(e))],
    };
    let m = cfg.n.min(3);
    let mut out = Vec::new();
    for k in 1..=m {
        for l in k..=m {
            out.push(check_qh_commute(&data, k, l));
        }
    }
    out
}

fn run_classical_poisson(cfg: &Config) -> Vec<Report> {
    let data = match evaluation_data(cfg) {
        Ok(data) => data,
        Err(e) => {
            return vec![Report::run("classical-poisson", &base_params(cfg), || {
                Err(e)
            })]
        }
    };
    let m = cfg.n.min(3);
    let mut out = Vec::new();
    for k in 1..=m {
        for l in k..=m {
            out.push(check_classical_poisson(&data, k, l));
        }
    }
    out
}

fn parse_sites(text: &str) -> Result<Vec<Rf>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| parse_scalar(s.trim()).map_err(|e| format!("site {:?}: {}", s.trim(), e)))
        .collect()
}

fn built_in(family: FamilyArg, n: usize) -> Result<(Braiding, String), String> {
    if n < 1 || n > 4 {
        return Err(format!("n = {} outside the supported range 1..=4", n));
    }
    match family {
        FamilyArg::Flip => Ok((Braiding::flip(n), "flip".into())),
        FamilyArg::Superflip => {
            if n < 2 {
                return Err("superflip requires n >= 2 (one even and n-1 odd directions)".into());
            }
            Ok((Braiding::superflip(1, n - 1), "superflip".into()))
        }
        FamilyArg::Dj => Ok((Braiding::drinfeld_jimbo(n), "dj".into())),
    }
}

fn load_config(args: &Args) -> Result<Config, String> {
    let sites = parse_sites(&args.sites)?;
    let (braiding, family) = match &args.rmatrix {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
            let b = braiding_from_toml(&text).map_err(|e| e.to_string())?;
            (b, "file".to_string())
        }
        None => built_in(args.family, args.n)?,
    };
    Ok(Config {
        n: braiding.dim,
        braiding,
        family,
        cutoff: args.level_cutoff,
        sites,
    })
}

fn suite_reports(args: &Args, suite: Suite) -> Result<Vec<Report>, String> {
    let names: Vec<&str> = match suite {
        Suite::Quick => QUICK_CHECKS.to_vec(),
        Suite::Full => QUICK_CHECKS
            .iter()
            .chain(FULL_EXTRA_CHECKS.iter())
            .copied()
            .collect(),
    };
    let configs: Vec<Config> = if args.rmatrix.is_some() {
        vec![load_config(args)?]
    } else {
        let sites = parse_sites(&args.sites)?;
        [FamilyArg::Flip, FamilyArg::Superflip, FamilyArg::Dj]
            .into_iter()
            .map(|f| {
                let (braiding, family) = built_in(f, 2)?;
                Ok(Config {
                    n: braiding.dim,
                    braiding,
                    family,
                    cutoff: args.level_cutoff,
                    sites: sites.clone(),
                })
            })
            .collect::<Result<_, String>>()?
    };
    let mut reports = Vec::new();
    for name in names {
        let def = lookup(name).expect("suite names are registered");
        if def.per_family {
            for cfg in &configs {
                reports.extend((def.runner)(cfg));
            }
        } else {
            reports.extend((def.runner)(configs.last().expect("nonempty")));
        }
    }
    Ok(reports)
}

fn collect_reports(args: &Args) -> Result<Vec<Report>, String> {
    let mut reports = if let Some(suite) = args.suite {
        suite_reports(args, suite)?
    } else {
        let names = if args.checks.is_empty() {
            return suite_reports(args, Suite::Quick);
        } else {
            args.checks.clone()
        };
        let cfg = load_config(args)?;
        let mut out = Vec::new();
        for name in &names {
            let def = lookup(name).ok_or_else(|| {
                let known: Vec<&str> = REGISTRY.iter().map(|d| d.name).collect();
                format!("unknown check {:?}; known checks: {}", name, known.join(", "))
            })?;
            out.extend((def.runner)(&cfg));
        }
        out
    };
    reports.sort_by(|a, b| (&a.check, &a.params).cmp(&(&b.check, &b.params)));
    Ok(reports)
}

fn emit(args: &Args, reports: &[Report]) -> Result<(), String> {
    let mut lines = String::new();
    for r in reports {
        let line = serde_json::to_string(r).map_err(|e| e.to_string())?;
        lines.push_str(&line);
        lines.push('\n');
    }
    match &args.out {
        Some(path) => fs::write(path, lines)
            .map_err(|e| format!("cannot write {}: {}", path.display(), e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(lines.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let reports = match collect_reports(&args) {
        Ok(reports) => reports,
        Err(msg) => {
            eprintln!("error: {}", msg);
            return ExitCode::from(2);
        }
    };
    if let Err(msg) = emit(&args, &reports) {
        eprintln!("error: {}", msg);
        return ExitCode::from(2);
    }
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
