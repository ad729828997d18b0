//! `tri` — command-line surface for the exact triangle-arithmetic library.
//!
//! Exit codes: 0 = true/pass, 1 = false/fail, 2 = usage or parse error.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use triarith::chain::{eq26_residual, eq8_residual, Chain};
use triarith::dissection::{
    builtin_script, interpret, parse_script, verify_perfect, Builtin, DissectionResult,
};
use triarith::identity::{self, ArithVerdict, IdentityInstance};
use triarith::lattice::{solve_params, Eq8Layout, LatticeCoord, PlacedTriangle};
use triarith::render::{dissection_scene, eq26_scene, eq8_scene, to_svg};
use triarith::{Int, Mode, Rational, RationalTriangle, Triangle};

#[derive(Parser)]
#[command(
    name = "tri",
    version,
    about = "Exact arithmetic of similar triangles: identity checking, lattice constructions, chain verification, perfect dissections"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check an identity in the arithmetic or geometric sense
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Replay a dissection script and certify the result
    Dissect(DissectArgs),
    /// Classify a construction configuration into its ten cases
    Classify(ClassifyArgs),
    /// Recover the increments taking one triangle to another
    Solve(SolveArgs),
    /// Emit SVG figures
    #[command(subcommand)]
    Render(RenderCmd),
    /// Exhaustive construction sweeps with case coverage
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    N2,
    N20,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::N2 => Mode::N2,
            ModeArg::N20 => Mode::N20,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SenseArg {
    Arith,
    Geom,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// The seven-piece based sum rule ⟨n+k+l+t⟩
    Eq8(VerifyEq8Args),
    /// A catalogued identity family
    Identity(VerifyIdentityArgs),
}

#[derive(Args)]
struct VerifyEq8Args {
    #[arg(long, allow_negative_numbers = true)]
    n: Int,
    #[arg(long, allow_negative_numbers = true)]
    k: Int,
    #[arg(long, allow_negative_numbers = true)]
    l: Int,
    #[arg(long, allow_negative_numbers = true)]
    t: Int,
    #[arg(long, value_enum, default_value = "n20")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "arith")]
    sense: SenseArg,
    /// Base anchor as i,j (geometric sense only)
    #[arg(long, default_value = "0,0", value_parser = parse_coord, allow_hyphen_values = true)]
    base: (Int, Int),
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Eq3,
    Eq26,
    Eq27,
    Eq28,
    Eq29,
    Eq30,
    Eq31,
    Eq32,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Eq3 => "eq3",
            Family::Eq26 => "eq26",
            Family::Eq27 => "eq27",
            Family::Eq28 => "eq28",
            Family::Eq29 => "eq29",
            Family::Eq30 => "eq30",
            Family::Eq31 => "eq31",
            Family::Eq32 => "eq32",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Eq3 | Family::Eq28 | Family::Eq29 => 3,
            Family::Eq27 => 4,
            _ => 1,
        }
    }

    fn default_mode(self) -> Mode {
        match self {
            Family::Eq3 => Mode::N2,
            _ => Mode::N20,
        }
    }

    fn build(self, p: &[Int]) -> IdentityInstance {
        match self {
            Family::Eq3 => identity::eq3(p[0], p[1], p[2]),
            Family::Eq26 => identity::eq26(p[0]),
            Family::Eq27 => identity::eq27(p[0], p[1], p[2], p[3]),
            Family::Eq28 => identity::eq28(p[0], p[1], p[2]),
            Family::Eq29 => identity::eq29(p[0], p[1], p[2]),
            Family::Eq30 => identity::eq30(p[0]),
            Family::Eq31 => identity::eq31(p[0]),
            Family::Eq32 => identity::eq32(p[0]),
        }
    }
}

#[derive(Args)]
struct VerifyIdentityArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Parameters, comma separated (arity depends on the family)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    params: Vec<Int>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, value_enum, default_value = "arith")]
    sense: SenseArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DissectArgs {
    /// Dissection script file
    file: Option<std::path::PathBuf>,
    /// Use a built-in script instead of a file
    #[arg(long, value_parser = parse_builtin, conflicts_with = "file")]
    builtin: Option<Builtin>,
    /// Write the resulting figure as SVG
    #[arg(long)]
    svg: Option<std::path::PathBuf>,
    /// Override the root anchor as i,j
    #[arg(long, value_parser = parse_coord, allow_hyphen_values = true)]
    anchor: Option<(Int, Int)>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    n: Int,
    #[arg(long, allow_negative_numbers = true)]
    k: Int,
    #[arg(long, allow_negative_numbers = true)]
    l: Int,
    #[arg(long, allow_negative_numbers = true)]
    t: Int,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolveArgs {
    /// Base triangle as i,j,size (rationals allowed, e.g. -1/2,0,2)
    #[arg(long, value_parser = parse_rat3, allow_hyphen_values = true)]
    base: (Rational, Rational, Rational),
    /// Target triangle as i,j,size
    #[arg(long, value_parser = parse_rat3, allow_hyphen_values = true)]
    target: (Rational, Rational, Rational),
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum RenderCmd {
    /// The placed seven-piece construction
    Eq8(RenderEq8Args),
    /// The unit decomposition with overlap markers
    Eq26(RenderEq26Args),
}

#[derive(Args)]
struct RenderEq8Args {
    #[arg(long, allow_negative_numbers = true)]
    n: Int,
    #[arg(long, allow_negative_numbers = true)]
    k: Int,
    #[arg(long, allow_negative_numbers = true)]
    l: Int,
    #[arg(long, allow_negative_numbers = true)]
    t: Int,
    #[arg(long, default_value = "0,0", value_parser = parse_coord, allow_hyphen_values = true)]
    base: (Int, Int),
    /// Output SVG path
    #[arg(short, long)]
    out: std::path::PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderEq26Args {
    #[arg(long, allow_negative_numbers = true)]
    n: Int,
    /// Output SVG path
    #[arg(short, long)]
    out: std::path::PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Chain mode: n2 sweeps ±6/±12 by default, n20 sweeps ±4/±8
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Override the increment range
    #[arg(long)]
    nkl: Option<Int>,
    /// Override the base-size range
    #[arg(long)]
    t: Option<Int>,
    #[arg(long)]
    json: bool,
}

fn parse_coord(s: &str) -> Result<(Int, Int), String> {
    let (i, j) = s.split_once(',').ok_or("expected i,j")?;
    Ok((
        i.trim().parse().map_err(|e| format!("bad i: {e}"))?,
        j.trim().parse().map_err(|e| format!("bad j: {e}"))?,
    ))
}

fn parse_rat3(s: &str) -> Result<(Rational, Rational, Rational), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected i,j,size".to_string());
    }
    let parse = |p: &str| {
        Rational::from_str(p.trim()).map_err(|e| format!("bad rational '{}': {e}", p.trim()))
    };
    Ok((parse(parts[0])?, parse(parts[1])?, parse(parts[2])?))
}

fn parse_builtin(s: &str) -> Result<Builtin, String> {
    match s.to_ascii_lowercase().as_str() {
        "a" => Ok(Builtin::A),
        "b" => Ok(Builtin::B),
        _ => Err("expected 'a' or 'b'".to_string()),
    }
}

/// Machine-readable report envelope; identical inputs produce an
/// identical schema (key order is alphabetical and stable).
struct Report {
    started: Instant,
    body: Value,
}

impl Report {
    fn new() -> Self {
        Report {
            started: Instant::now(),
            body: json!({
                "command": std::env::args().collect::<Vec<_>>().join(" "),
            }),
        }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.body[key] = value;
    }

    fn finish(mut self, json_mode: bool, human: &str) {
        if json_mode {
            self.body["timing_ms"] = json!(self.started.elapsed().as_secs_f64() * 1000.0);
            println!("{}", serde_json::to_string_pretty(&self.body).unwrap());
        } else {
            println!("{human}");
        }
    }
}

fn usage_error(msg: impl Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn verdict_json(v: &ArithVerdict) -> Value {
    json!({
        "holds": v.holds(),
        "residual": {
            "sq": v.residual_sq,
            "lin": v.residual_lin,
            "count": v.residual_count,
        },
    })
}

fn residual_json(residual: &Chain) -> Value {
    json!({
        "empty": residual.is_empty(),
        "simplices": residual.len(),
        "summary": residual.summary(8),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 0 for --help/--version, 2 for usage errors
        Err(e) => e.exit(),
    };
    match cli.cmd {
        Cmd::Verify(VerifyCmd::Eq8(args)) => cmd_verify_eq8(args),
        Cmd::Verify(VerifyCmd::Identity(args)) => cmd_verify_identity(args),
        Cmd::Dissect(args) => cmd_dissect(args),
        Cmd::Classify(args) => cmd_classify(args),
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Render(RenderCmd::Eq8(args)) => cmd_render_eq8(args),
        Cmd::Render(RenderCmd::Eq26(args)) => cmd_render_eq26(args),
        Cmd::Sweep(args) => cmd_sweep(args),
    }
}

fn cmd_verify_eq8(args: VerifyEq8Args) -> ExitCode {
    let mut report = Report::new();
    let mode: Mode = args.mode.into();
    let (n, k, l, t) = (args.n, args.k, args.l, args.t);
    report.set("params", json!({ "n": n, "k": k, "l": l, "t": t }));
    report.set("mode", json!(mode.to_string()));

    let ok = match args.sense {
        SenseArg::Arith => {
            let inst = identity::eq8(n, k, l, t);
            let v = inst.arith_check(mode);
            report.set("sense", json!("arith"));
            report.set("verdict", verdict_json(&v));
            let human = format!("{inst}\narithmetic sense ({mode}): {v}");
            report.finish(args.json, &human);
            v.holds()
        }
        SenseArg::Geom => {
            let base = Triangle::at(args.base.0, args.base.1, t);
            let layout = Eq8Layout::new(base, n, k, l);
            let residual = eq8_residual(&layout, mode);
            report.set("sense", json!("geom"));
            report.set("base", json!(base.to_string()));
            report.set("big", json!(layout.big().to_string()));
            report.set("residual", residual_json(&residual));
            let ok = residual.is_empty();
            let human = format!(
                "base {base}, assembled {}\ngeometric sense ({mode}): {} (residual {})",
                layout.big(),
                if ok { "true" } else { "false" },
                residual.summary(6)
            );
            report.finish(args.json, &human);
            ok
        }
    };
    ExitCode::from(if ok { 0 } else { 1 })
}

fn cmd_verify_identity(args: VerifyIdentityArgs) -> ExitCode {
    let family = args.family;
    if args.params.len() != family.arity() {
        return usage_error(format!(
            "family {} takes {} parameter(s), got {}",
            family.name(),
            family.arity(),
            args.params.len()
        ));
    }
    let mode: Mode = args
        .mode
        .map(Into::into)
        .unwrap_or_else(|| family.default_mode());
    let inst = family.build(&args.params);

    let mut report = Report::new();
    report.set("family", json!(family.name()));
    report.set("params", json!(args.params));
    report.set("mode", json!(mode.to_string()));
    report.set("instance", json!(inst.to_string()));

    let ok = match args.sense {
        SenseArg::Arith => {
            let v = inst.arith_check(mode);
            report.set("sense", json!("arith"));
            report.set("verdict", verdict_json(&v));
            let human = format!("{inst}\narithmetic sense ({mode}): {v}");
            report.finish(args.json, &human);
            v.holds()
        }
        SenseArg::Geom => {
            if !matches!(family, Family::Eq26) || args.params[0] < 1 {
                return usage_error(format!(
                    "geometric checking is available for family eq26 with n ≥ 1 only \
                     (family {} has no canonical placement; check witnesses via 'verify eq8 --sense geom')",
                    family.name()
                ));
            }
            let residual = eq26_residual(args.params[0], LatticeCoord::origin());
            let ok = residual.is_empty();
            report.set("sense", json!("geom"));
            report.set("residual", residual_json(&residual));
            let human = format!(
                "{inst}\ngeometric sense (n20, canonical placement): {} (residual {})",
                if ok { "true" } else { "false" },
                residual.summary(6)
            );
            report.finish(args.json, &human);
            ok
        }
    };
    ExitCode::from(if ok { 0 } else { 1 })
}

fn pieces_json(r: &DissectionResult) -> Value {
    json!(r
        .pieces
        .iter()
        .map(|(sign, t)| json!({
            "sign": sign.to_string(),
            "size": t.size,
            "anchor": [t.anchor.i, t.anchor.j],
        }))
        .collect::<Vec<_>>())
}

fn cmd_dissect(args: DissectArgs) -> ExitCode {
    let text = match (&args.file, args.builtin) {
        (Some(path), None) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return usage_error(format!("cannot read {}: {e}", path.display())),
        },
        (None, Some(which)) => builtin_script(which).to_string(),
        (None, None) => return usage_error("give a script file or --builtin a|b"),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };

    let script = match parse_script(&text) {
        Ok(s) => s,
        Err(diags) => {
            for d in &diags {
                eprintln!("error: {d}");
            }
            return ExitCode::from(2);
        }
    };

    let anchor = args
        .anchor
        .map(|(i, j)| LatticeCoord::new(i, j))
        .unwrap_or(script.target_anchor);
    let target = PlacedTriangle::new(anchor, script.target_size);

    let mut report = Report::new();
    report.set("target", json!(target.to_string()));
    report.set("steps", json!(script.steps.len()));

    let result = match interpret(&script, anchor) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("verification failed: {e}");
            return ExitCode::from(1);
        }
    };

    if let Some(path) = &args.svg {
        let svg = to_svg(&dissection_scene(&result, &target));
        if let Err(e) = std::fs::write(path, svg) {
            return usage_error(format!("cannot write {}: {e}", path.display()));
        }
    }

    let perfect = verify_perfect(&result, &target);
    let mut sizes = result.stats.signed_sizes.clone();
    sizes.sort_unstable_by_key(|s| (s.abs(), *s));
    report.set("pieces", pieces_json(&result));
    report.set("signed_sizes", json!(sizes));
    report.set("piece_count", json!(result.stats.piece_count));
    report.set("sum_squares", json!(result.stats.sum_squares));
    report.set(
        "cancellations",
        json!(result
            .cancellations
            .iter()
            .map(|c| json!({ "tag": c.tag, "at": c.tri.to_string() }))
            .collect::<Vec<_>>()),
    );
    report.set(
        "perfect",
        json!({
            "pass": perfect.pass(),
            "signs_ok": perfect.signs_ok,
            "tiling_ok": perfect.tiling_ok,
            "unit_multiplicity_ok": perfect.unit_multiplicity_ok,
            "distinct_ok": perfect.distinct_ok,
            "squares_ok": perfect.squares_ok,
            "failures": perfect.failures,
        }),
    );

    let mut human = format!(
        "{} pieces tiling {target}; Σ size² = {}\nsizes: {}\ncancelled pairs: {}\n",
        result.stats.piece_count,
        result.stats.sum_squares,
        sizes
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        result
            .cancellations
            .iter()
            .map(|c| format!("{}@{}", c.tag, c.tri))
            .collect::<Vec<_>>()
            .join(" ")
    );
    if perfect.pass() {
        human.push_str("perfect dissection: PASS");
    } else {
        human.push_str(&format!(
            "perfect dissection: FAIL ({})",
            perfect.failures.join("; ")
        ));
    }
    let pass = perfect.pass();
    report.finish(args.json, &human);
    ExitCode::from(if pass { 0 } else { 1 })
}

fn cmd_classify(args: ClassifyArgs) -> ExitCode {
    let mut report = Report::new();
    let [n, k, l, t] = identity::normalize_params(args.n, args.k, args.l, args.t);
    let case = identity::case_classify(n, k, l, t).expect("normalized increments");
    report.set(
        "input",
        json!({ "n": args.n, "k": args.k, "l": args.l, "t": args.t }),
    );
    report.set("normalized", json!({ "n": n, "k": k, "l": l, "t": t }));
    report.set("case", json!(case.case_number));
    report.set("canonical_case", json!(case.canonical_case));
    let human = if (n, k, l, t) == (args.n, args.k, args.l, args.t) {
        format!("case {}, canonical {}", case.case_number, case.canonical_case)
    } else {
        format!(
            "case {}, canonical {} (after sign normalization to n={n} k={k} l={l} t={t})",
            case.case_number, case.canonical_case
        )
    };
    report.finish(args.json, &human);
    ExitCode::from(0)
}

fn cmd_solve(args: SolveArgs) -> ExitCode {
    let base = RationalTriangle::at(args.base.0, args.base.1, args.base.2);
    let target = RationalTriangle::at(args.target.0, args.target.1, args.target.2);
    let (n, k, l) = solve_params(&base, &target);

    // round-trip guard: the increments must rebuild the target exactly
    let layout = Eq8Layout::new(
        RationalTriangle::new(target.anchor.shifted(k, l), base.size),
        n,
        k,
        l,
    );
    assert_eq!(layout.big(), target, "solver round trip");

    let mut report = Report::new();
    report.set("base", json!(base.to_string()));
    report.set("target", json!(target.to_string()));
    report.set(
        "increments",
        json!({ "n": n.to_string(), "k": k.to_string(), "l": l.to_string() }),
    );
    report.finish(args.json, &format!("{n} {k} {l}"));
    ExitCode::from(0)
}

fn write_svg(path: &std::path::Path, svg: &str, report: &mut Report) -> Option<ExitCode> {
    if let Err(e) = std::fs::write(path, svg) {
        return Some(usage_error(format!("cannot write {}: {e}", path.display())));
    }
    report.set("out", json!(path.display().to_string()));
    report.set("bytes", json!(svg.len()));
    None
}

fn cmd_render_eq8(args: RenderEq8Args) -> ExitCode {
    let mut report = Report::new();
    let base = Triangle::at(args.base.0, args.base.1, args.t);
    let layout = Eq8Layout::new(base, args.n, args.k, args.l);
    let svg = to_svg(&eq8_scene(&layout));
    if let Some(code) = write_svg(&args.out, &svg, &mut report) {
        return code;
    }
    report.finish(
        args.json,
        &format!("wrote {} ({} bytes)", args.out.display(), svg.len()),
    );
    ExitCode::from(0)
}

fn cmd_render_eq26(args: RenderEq26Args) -> ExitCode {
    if args.n < 1 {
        return usage_error("the unit decomposition renders for n ≥ 1");
    }
    let mut report = Report::new();
    let svg = to_svg(&eq26_scene(args.n, LatticeCoord::origin()));
    if let Some(code) = write_svg(&args.out, &svg, &mut report) {
        return code;
    }
    report.finish(
        args.json,
        &format!("wrote {} ({} bytes)", args.out.display(), svg.len()),
    );
    ExitCode::from(0)
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    let mode: Mode = args.mode.into();
    let (nkl, trange) = match mode {
        Mode::N2 => (args.nkl.unwrap_or(6), args.t.unwrap_or(12)),
        Mode::N20 => (args.nkl.unwrap_or(4), args.t.unwrap_or(8)),
    };
    let mut report = Report::new();
    let mut configs: u64 = 0;
    let mut nonempty: u64 = 0;
    let mut cases: BTreeSet<u8> = BTreeSet::new();
    for n in -nkl..=nkl {
        for k in -nkl..=nkl {
            for l in -nkl..=nkl {
                for t in -trange..=trange {
                    configs += 1;
                    let layout = Eq8Layout::new(Triangle::at(0, 0, t), n, k, l);
                    if !eq8_residual(&layout, mode).is_empty() {
                        nonempty += 1;
                    }
                    let [nn, nk, nl, nt] = identity::normalize_params(n, k, l, t);
                    cases.insert(
                        identity::case_classify(nn, nk, nl, nt)
                            .expect("normalized increments")
                            .case_number,
                    );
                }
            }
        }
    }
    let all_cases = cases.len() == 10;
    let ok = nonempty == 0 && all_cases;
    report.set("mode", json!(mode.to_string()));
    report.set("ranges", json!({ "nkl": nkl, "t": trange }));
    report.set("configs", json!(configs));
    report.set("nonempty_residuals", json!(nonempty));
    report.set("cases_seen", json!(cases.iter().collect::<Vec<_>>()));
    report.set("ok", json!(ok));
    let human = format!(
        "{configs} configurations, {nonempty} nonzero residuals, cases seen: {:?} → {}",
        cases,
        if ok { "PASS" } else { "FAIL" }
    );
    report.finish(args.json, &human);
    ExitCode::from(if ok { 0 } else { 1 })
}
