use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bs_tiling::acceptance::{run_all, run_criterion};
use bs_tiling::ak::{
    check_window_constraints, enumerate_tileset, orbit_configuration, orbit_for_s0, weak_period_check,
    window_constraints, SamplingConfig, Strategy,
};
use bs_tiling::bsnn::{canonicalize_bsnn, coset, phi_inverse, phi_iso, FreeWord, ZxFn};
use bs_tiling::dynamics::{iterate, periodic_point_search, LinearPiece, MultSystem};
use bs_tiling::error::{Error, Result};
use bs_tiling::group::{alpha, canonical_form, lambda, parse_word, quasi_normal_form_1n, GroupParams};
use bs_tiling::io::{read_patch, tileset_to_string, write_patch, write_tileset};
use bs_tiling::rational::{self, Rational};
use bs_tiling::render::{render_svg, RenderOptions};
use bs_tiling::sigma::explicit_patch;
use bs_tiling::subst::{
    fixpoint2_windows, fixpoint_language_complexity, fixpoint_seeds, is_k_periodic, seeded_window, sigma,
};
use bs_tiling::wang::{check_multiplies, verify_patch};

/// Tilesets, patches and word problems on Baumslag-Solitar groups.
#[derive(Parser, Debug)]
#[command(name = "bs", version)]
struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 20_240_601)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group computations.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Tileset generation.
    #[command(subcommand)]
    Tileset(TilesetCmd),
    /// Patch construction and verification.
    #[command(subcommand)]
    Patch(PatchCmd),
    /// Periodicity checks on orbit configurations.
    #[command(subcommand)]
    Period(PeriodCmd),
    /// Substitution fixpoints and complexity.
    #[command(subcommand)]
    Subst(SubstCmd),
    /// The multiplicative system S0.
    #[command(subcommand)]
    Dyn(DynCmd),
    /// The Z x F_n subgroup of BS(n,n).
    #[command(subcommand)]
    Bsnn(BsnnCmd),
    /// Draws a patch as SVG.
    Render(RenderArgs),
    /// Runs the acceptance checks.
    Accept(AcceptArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct GroupArgs {
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
}

impl GroupArgs {
    fn params(self) -> Result<GroupParams> {
        GroupParams::new(self.m, self.n)
    }
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Normal form, height, alpha and lambda of a word.
    Nf {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        word: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Sampling,
    OverApproximation,
}

#[derive(Subcommand, Debug)]
enum TilesetCmd {
    /// The tileset multiplying by q on [lo, hi].
    Ak {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        lo: String,
        #[arg(long, allow_hyphen_values = true)]
        hi: String,
        #[arg(long, value_enum, default_value = "sampling")]
        strategy: StrategyArg,
        #[arg(long)]
        max_den: Option<u64>,
        #[arg(long)]
        max_radius: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum PatchCmd {
    /// Orbit configuration of S0 through x0.
    Orbit {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        x0: String,
        #[arg(long)]
        radius: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The explicit configuration of the substitution tileset on BS(1,n).
    Subst {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        radius: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adjacency (and optionally S0 window) check of a patch file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also check the window constraints of S0.
        #[arg(long)]
        windows: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PeriodCmd {
    /// Whether translating by a word fixes the orbit configuration on a ball.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        word: String,
        #[arg(long)]
        radius: u32,
        #[arg(long, default_value = "1/2")]
        x0: String,
    },
}

#[derive(Subcommand, Debug)]
enum SubstCmd {
    /// Window of the fixpoint of sigma_r (or of sigma_1^2 for n = 2).
    Fixpoint {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 27)]
        half: usize,
    },
    /// Factor complexity of the fixpoint and a period scan.
    Complexity {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 25)]
        max_len: usize,
        #[arg(long, default_value_t = 50)]
        max_period: usize,
    },
}

#[derive(Subcommand, Debug)]
enum DynCmd {
    /// S0^k(x0) for k in -steps..=steps.
    Orbit {
        #[arg(long)]
        x0: String,
        #[arg(long, default_value_t = 6)]
        steps: i64,
    },
    /// Bounded search for periodic points of S0.
    PeriodicSearch {
        #[arg(long, default_value_t = 200)]
        max_den: u64,
        #[arg(long, default_value_t = 12)]
        max_period: u32,
    },
}

#[derive(Subcommand, Debug)]
enum BsnnCmd {
    /// Coset of the subgroup H containing a word.
    Coset {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
    /// Preimage of a word under phi, or the image of (k, free word).
    Phi {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with_all = ["k", "free"])]
        word: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        free: Option<String>,
    },
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    svg: PathBuf,
    #[arg(long)]
    no_labels: bool,
}

#[derive(Args, Debug)]
struct AcceptArgs {
    /// Run a single criterion.
    #[arg(long)]
    only: Option<u8>,
    #[arg(long)]
    json: bool,
}

/// A finished command: the report to print and whether it found a problem.
struct Report {
    value: Value,
    violations: bool,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report {
            value,
            violations: false,
        }
    }
}

fn q(text: &str) -> Result<Rational> {
    rational::parse(text)
}

fn fmt_set<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Vec<String> {
    xs.into_iter().map(rational::format).collect()
}

fn group_cmd(cmd: GroupCmd) -> Result<Report> {
    let GroupCmd::Nf { group, word } = cmd;
    let p = group.params()?;
    let w = parse_word(&word)?;
    let g = canonical_form(&w, p);
    let mut out = json!({
        "word": w.to_string(),
        "normal_form": g.to_string(),
        "is_identity": g.is_identity(),
        "height": g.height(),
        "alpha": rational::format(&alpha(&w, p)),
        "lambda": rational::format(&lambda(&w, p)),
    });
    if p.m() == 1 && p.n() > 0 {
        let f = quasi_normal_form_1n(&w, p.n())?;
        out["quasi_normal_form"] = json!({
            "down": f.down,
            "power": f.power.to_string(),
            "up": f.up,
        });
    }
    Ok(Report::ok(out))
}

fn tileset_cmd(cmd: TilesetCmd) -> Result<Report> {
    let TilesetCmd::Ak {
        group,
        q: slope,
        lo,
        hi,
        strategy,
        max_den,
        max_radius,
        out,
    } = cmd;
    let p = group.params()?;
    let slope = q(&slope)?;
    let piece = LinearPiece::from_bounds(slope.clone(), &q(&lo)?, &q(&hi)?)?;
    let strategy = match strategy {
        StrategyArg::OverApproximation => Strategy::OverApproximation,
        StrategyArg::Sampling => {
            let mut cfg = SamplingConfig::default();
            if let Some(d) = max_den {
                cfg.max_den = d;
            }
            if let Some(r) = max_radius {
                cfg.max_radius = r;
            }
            Strategy::Sampling(cfg)
        }
    };
    let e = enumerate_tileset(p, &piece, &strategy)?;
    let summary = json!({
        "tiles": e.tileset.len(),
        "multiplies": check_multiplies(&e.tileset, &slope)?,
        "certificate": e.certificate,
    });
    match out {
        Some(path) => {
            write_tileset(&path, &e.tileset)?;
            Ok(Report::ok(summary))
        }
        None => {
            eprintln!("{summary}");
            Ok(Report::ok(serde_json::from_str(&tileset_to_string(&e.tileset))?))
        }
    }
}

fn emit_patch(x: &bs_tiling::wang::Patch, out: Option<PathBuf>) -> Result<Report> {
    let summary = json!({ "cells": x.len(), "tiles": x.tileset().len() });
    match out {
        Some(path) => {
            write_patch(&path, x)?;
            Ok(Report::ok(summary))
        }
        None => Ok(Report::ok(serde_json::from_str(&bs_tiling::io::patch_to_string(x))?)),
    }
}

fn patch_cmd(cmd: PatchCmd) -> Result<Report> {
    match cmd {
        PatchCmd::Orbit { group, x0, radius, out } => {
            let p = group.params()?;
            let branch = orbit_for_s0(&q(&x0)?, radius)?;
            let x = orbit_configuration(&MultSystem::s0(), &branch, p, radius)?;
            emit_patch(&x, out)
        }
        PatchCmd::Subst { n, radius, out } => emit_patch(&explicit_patch(n, radius)?, out),
        PatchCmd::Verify { input, windows } => {
            let x = read_patch(&input)?;
            let violations = verify_patch(&x);
            let shown: Vec<Value> = violations
                .iter()
                .take(20)
                .map(|v| {
                    json!({
                        "site": v.site.to_string(),
                        "neighbor": v.neighbor.to_string(),
                        "rule": format!("{:?}", v.rule),
                        "expected": v.expected.to_string(),
                        "actual": v.actual.to_string(),
                    })
                })
                .collect();
            let mut out = json!({
                "cells": x.len(),
                "violations": violations.len(),
                "first_violations": shown,
            });
            let mut bad = !violations.is_empty();
            if windows {
                let failures = check_window_constraints(&x, &window_constraints(&MultSystem::s0()))?;
                out["window_failures"] = json!(failures.len());
                bad |= !failures.is_empty();
            }
            Ok(Report { value: out, violations: bad })
        }
    }
}

fn period_cmd(cmd: PeriodCmd) -> Result<Report> {
    let PeriodCmd::Check { group, word, radius, x0 } = cmd;
    let p = group.params()?;
    let w = parse_word(&word)?;
    let branch = orbit_for_s0(&q(&x0)?, radius)?;
    let periodic = weak_period_check(&MultSystem::s0(), &branch, p, &w, radius)?;
    let g = canonical_form(&w, p);
    Ok(Report {
        value: json!({
            "period": g.to_string(),
            "periodic": periodic,
            "trivial_period": g.is_identity(),
            "alpha": rational::format(&alpha(&w, p)),
            "radius": radius,
        }),
        violations: !periodic,
    })
}

fn subst_cmd(cmd: SubstCmd) -> Result<Report> {
    match cmd {
        SubstCmd::Fixpoint { n, r, half } => {
            if n == 2 && r == 1 {
                let (u, v) = fixpoint2_windows(half);
                return Ok(Report::ok(json!({ "u": u.to_string(), "v": v.to_string() })));
            }
            let s = sigma(n, r)?;
            let windows: Vec<Value> = fixpoint_seeds(&s)
                .into_iter()
                .map(|seed| {
                    seeded_window(&s, seed, half).map(|w| json!({ "seed": [seed.left, seed.right], "window": w.to_string() }))
                })
                .collect::<Result<_>>()?;
            Ok(Report::ok(json!({ "substitution": s.to_string(), "fixpoints": windows })))
        }
        SubstCmd::Complexity { n, r, max_len, max_period } => {
            let s = sigma(n, r)?;
            // sigma_1 for n = 2 only has fixpoints as a square
            let s = if fixpoint_seeds(&s).is_empty() { s.power(2) } else { s };
            let mut out = Vec::new();
            for seed in fixpoint_seeds(&s) {
                let profile = fixpoint_language_complexity(&s, seed, max_len)?;
                let w = seeded_window(&s, seed, (2 * max_period).max(max_len) * n)?;
                let periods: Vec<usize> = (1..=max_period)
                    .filter(|&k| is_k_periodic(&w, k).unwrap_or(false))
                    .collect();
                out.push(json!({
                    "seed": [seed.left, seed.right],
                    "complexity": (1..=max_len).map(|k| profile.get(k).unwrap_or(0)).collect::<Vec<_>>(),
                    "periods_found": periods,
                }));
            }
            Ok(Report::ok(json!({ "substitution": s.to_string(), "fixpoints": out })))
        }
    }
}

fn dyn_cmd(cmd: DynCmd) -> Result<Report> {
    let s = MultSystem::s0();
    match cmd {
        DynCmd::Orbit { x0, steps } => {
            let x = q(&x0)?;
            let mut levels = serde_json::Map::new();
            for k in -steps..=steps {
                levels.insert(k.to_string(), json!(fmt_set(&iterate(&s, &x, k)?)));
            }
            Ok(Report::ok(json!({ "x0": rational::format(&x), "iterates": levels })))
        }
        DynCmd::PeriodicSearch { max_den, max_period } => {
            let found = periodic_point_search(&s, max_den, max_period)?;
            let points: Vec<Value> = found
                .iter()
                .map(|(x, k)| json!({ "x": rational::format(x), "period": k }))
                .collect();
            Ok(Report::ok(json!({ "max_den": max_den, "max_period": max_period, "periodic_points": points })))
        }
    }
}

fn bsnn_cmd(cmd: BsnnCmd) -> Result<Report> {
    match cmd {
        BsnnCmd::Coset { n, word } => {
            let w = parse_word(&word)?;
            let form = canonicalize_bsnn(&w, n)?;
            Ok(Report::ok(json!({ "coset": coset(&w, n)?, "form": form })))
        }
        BsnnCmd::Phi { n, word, k, free } => match word {
            Some(word) => {
                let z = phi_inverse(&parse_word(&word)?, n)?;
                Ok(Report::ok(json!({ "preimage": z })))
            }
            None => {
                let free: FreeWord = free.as_deref().unwrap_or("e").parse()?;
                let z = ZxFn::new(k.unwrap_or(0), free);
                Ok(Report::ok(json!({ "image": phi_iso(&z, n)?.to_string() })))
            }
        },
    }
}

fn render_cmd(args: RenderArgs) -> Result<Report> {
    let x = read_patch(&args.input)?;
    if x.is_empty() {
        return Err(Error::InvalidParameter("cannot render an empty patch".into()));
    }
    let opts = RenderOptions {
        show_labels: !args.no_labels,
        ..RenderOptions::default()
    };
    let svg = render_svg(&x, &opts);
    std::fs::write(&args.svg, &svg)?;
    Ok(Report::ok(json!({ "cells": x.len(), "svg": args.svg.display().to_string() })))
}

fn accept_cmd(args: AcceptArgs, seed: u64) -> Result<Report> {
    let reports = match args.only {
        Some(id) => vec![run_criterion(id, seed)?],
        None => run_all(seed),
    };
    if !args.json {
        let mut out = std::io::stdout().lock();
        for r in &reports {
            let _ = writeln!(out, "{r}");
        }
    }
    let failed = reports.iter().any(|r| !r.passed);
    Ok(Report {
        value: if args.json { json!(reports) } else { Value::Null },
        violations: failed,
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit(_) | Error::Inconclusive(_) => 3,
        Error::Gap(_) | Error::NotInSubgroup { .. } | Error::BranchWindow(_) => 2,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(4) } else { ExitCode::SUCCESS };
        }
    };
    let seed = cli.seed;
    let result = match cli.command {
        Command::Group(c) => group_cmd(c),
        Command::Tileset(c) => tileset_cmd(c),
        Command::Patch(c) => patch_cmd(c),
        Command::Period(c) => period_cmd(c),
        Command::Subst(c) => subst_cmd(c),
        Command::Dyn(c) => dyn_cmd(c),
        Command::Bsnn(c) => bsnn_cmd(c),
        Command::Render(a) => render_cmd(a),
        Command::Accept(a) => accept_cmd(a, seed),
    };
    match result {
        Ok(report) => {
            if !report.value.is_null() {
                // a closed pipe is not an error worth reporting
                let _ = writeln!(
                    std::io::stdout().lock(),
                    "{}",
                    serde_json::to_string_pretty(&report.value).expect("serializable")
                );
            }
            if report.violations {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(exit_code(&e))
        }
    }
}
