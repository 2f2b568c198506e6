use std::fmt::Write as _;
use std::path::Path;

use johnson_cover::bounds::{bounds_report, recursive_upper_bound, theta_closed_form};
use johnson_cover::codes::{check_lexicode, theta_cover_from_code};
use johnson_cover::constructions::{
    cliques_from_code, code_from_cover_simple, code_from_cover_two_element, cover_from_blocks,
    find_conversion_element,
};
use johnson_cover::fixtures::{table_theta, ThetaValue};
use johnson_cover::graph::{complement_cover, cover_stats, CoverStats};
use johnson_cover::io::{parse_blocks, parse_code, parse_cover, write_code, write_cover, write_solver_log, CodeFile};
use johnson_cover::solver::{greedy_cover, IncumbentEvent};
use johnson_cover::{
    anneal_cover, cover_closed_form, cover_recursive, exact_theta, lexicode as build_lexicode, simple_lower_bound,
    verify_cover, AnnealSchedule, BlockRole, BudgetTier, Code, Cover, Error, GraphParams, LexicodeOptions,
    SolveOutcome, SolveStatus, Subset, VerifyReport,
};
use serde::Serialize;

use crate::failure::Failure;
use crate::{
    BoundsArgs, ConvertArgs, CoverArgs, Direction, Format, LexicodeArgs, Method, StatsArgs, TableArgs, VerifyArgs,
};

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Lib(Error::Io(format!("{}: {e}", path.display()))))
}

/// Writes an artifact to `out`, or to stdout when absent. Returns whether
/// stdout was used so the report can move to stderr.
fn write_artifact(out: Option<&Path>, text: &str) -> Result<bool, Failure> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Lib(Error::Io(format!("{}: {e}", p.display()))))?;
            Ok(false)
        }
        None => {
            print!("{text}");
            Ok(true)
        }
    }
}

fn emit<T: Serialize>(format: Format, report: &T, text: String, to_stderr: bool) {
    let body = match format {
        Format::Structured => serde_json::to_string_pretty(report).expect("serializable report") + "\n",
        Format::Text => text,
    };
    if to_stderr {
        eprint!("{body}");
    } else {
        print!("{body}");
    }
}

fn params(n: u32, k: u32) -> Result<GraphParams, Failure> {
    Ok(GraphParams::new(n, k)?)
}

fn list_subsets(vs: &[Subset], limit: usize) -> String {
    let mut s: Vec<String> = vs.iter().take(limit).map(|v| v.to_string()).collect();
    if vs.len() > limit {
        s.push(format!("... ({} more)", vs.len() - limit));
    }
    s.join(" ")
}

#[derive(Serialize)]
struct TableCell {
    n: u32,
    k: u32,
    lo: u64,
    hi: u64,
    known: Option<ThetaValue>,
    consistent: bool,
}

#[derive(Serialize)]
struct TableReport {
    max_n: u32,
    tier: &'static str,
    bounds_only: bool,
    cells: Vec<TableCell>,
    mismatches: usize,
}

fn closed_bounds(p: GraphParams) -> (u64, u64) {
    match theta_closed_form(p) {
        Some(v) => (v, v),
        None => (simple_lower_bound(p), recursive_upper_bound(p)),
    }
}

fn solved_bounds(p: GraphParams, tier: BudgetTier, seed: u64) -> Result<(u64, u64), Failure> {
    let (lo, hi) = closed_bounds(p);
    if lo == hi {
        return Ok((lo, hi));
    }
    let warm = tier.warm_start().map(|s| anneal_cover(p, &s, seed).cover);
    let sol = exact_theta(p, tier.budget(), warm.as_ref())?;
    Ok((sol.outcome.lower_bound.max(lo), sol.outcome.best_value.min(hi)))
}

pub fn table(args: &TableArgs, format: Format) -> Outcome {
    let tier = BudgetTier::from(args.tier);
    let mut cells = Vec::new();
    for n in 2..=args.max_n {
        for k in 1..=n / 2 {
            let p = params(n, k)?;
            let (lo, hi) = if args.bounds_only { closed_bounds(p) } else { solved_bounds(p, tier, args.seed)? };
            let mirror = if k == n - k { vec![k] } else { vec![k, n - k] };
            for kk in mirror {
                let known = table_theta(params(n, kk)?);
                let consistent = known.map_or(true, |t| lo <= t.hi && t.lo <= hi);
                cells.push(TableCell { n, k: kk, lo, hi, known, consistent });
            }
        }
    }
    cells.sort_by_key(|c| (c.n, c.k));
    let mismatches = cells.iter().filter(|c| !c.consistent).count();

    let mut text = String::new();
    let _ = writeln!(text, "theta(J(N,k)), tier {}{}", tier.name(), if args.bounds_only { ", bounds only" } else { "" });
    let _ = writeln!(text, "{:>3} | {}", "N", (1..args.max_n).map(|k| format!("{k:>9}")).collect::<String>());
    for n in 2..=args.max_n {
        let _ = write!(text, "{n:>3} |");
        for c in cells.iter().filter(|c| c.n == n) {
            let mut v = if c.lo == c.hi { c.lo.to_string() } else { format!("{}-{}", c.lo, c.hi) };
            if !c.consistent {
                v.push('!');
            }
            let _ = write!(text, "{v:>9}");
        }
        text.push('\n');
    }
    for c in cells.iter().filter(|c| !c.consistent) {
        let known = c.known.map(|t| t.to_string()).unwrap_or_default();
        let _ = writeln!(text, "mismatch J({},{}): computed {}-{}, table {known}", c.n, c.k, c.lo, c.hi);
    }
    let report = TableReport { max_n: args.max_n, tier: tier.name(), bounds_only: args.bounds_only, cells, mismatches };
    emit(format, &report, text, false);
    if mismatches > 0 {
        return Err(Failure::Verification(format!("{mismatches} cells disagree with the bundled table")));
    }
    Ok(())
}

#[derive(Serialize)]
struct CoverReport<'a> {
    n: u32,
    k: u32,
    method: &'a str,
    size: usize,
    covered: bool,
    disjoint: bool,
    lower_simple: u64,
    known: Option<ThetaValue>,
    solve: Option<&'a SolveOutcome>,
}

fn cover_text(r: &CoverReport<'_>) -> String {
    let mut t = format!(
        "J({},{}) {}: {} cliques, {}{}\nlower bound {}",
        r.n,
        r.k,
        r.method,
        r.size,
        if r.covered { "covers" } else { "DOES NOT cover" },
        if r.disjoint { ", disjoint" } else { "" },
        r.lower_simple,
    );
    if let Some(known) = r.known {
        let _ = write!(t, ", known theta {known}");
    }
    if let Some(s) = r.solve {
        let _ = write!(t, "\nsolver {:?}: [{}, {}] after {} nodes", s.status, s.lower_bound, s.best_value, s.nodes_explored);
    }
    t.push('\n');
    t
}

fn auto_role(p: GraphParams, s: u32) -> Result<BlockRole, Failure> {
    if s == p.k() + 1 {
        Ok(BlockRole::CoveringDesign)
    } else if s + 1 == p.k() {
        Ok(BlockRole::TuranSystem)
    } else {
        Err(Error::Precondition(format!("blocks of size {s} fit neither k+1 nor k-1 for {p}")).into())
    }
}

fn cover_from_block_file(p: GraphParams, path: &Path) -> Result<Cover, Failure> {
    let file = parse_blocks(&read(path)?)?;
    if file.v != p.n() {
        return Err(Error::Precondition(format!("block file is over [{}], expected [{}]", file.v, p.n())).into());
    }
    Ok(cover_from_blocks(p, &file.blocks, auto_role(p, file.s)?)?)
}

struct Built {
    cover: Cover,
    solve: Option<SolveOutcome>,
    log: Vec<IncumbentEvent>,
}

impl From<Cover> for Built {
    fn from(cover: Cover) -> Self {
        Built { cover, solve: None, log: Vec::new() }
    }
}

fn build(args: &CoverArgs, p: GraphParams) -> Result<Built, Failure> {
    let tier = BudgetTier::from(args.tier);
    Ok(match args.method {
        Method::ClosedForm => cover_closed_form(p)
            .ok_or_else(|| Error::Precondition(format!("no closed-form cover for {p}; needs min(k, n-k) <= 3")))?
            .into(),
        Method::Recursive => cover_recursive(p)?.into(),
        Method::Lexicode => {
            if p.n() != 2 * p.k() {
                return Err(Error::Precondition(format!("lexicode covers need n = 2k, got {p}")).into());
            }
            let opts = LexicodeOptions { order: args.order_convention.into(), heavy: tier == BudgetTier::Heavy };
            theta_cover_from_code(&build_lexicode(p.k(), opts)?)?.into()
        }
        Method::Blocks => {
            let path = args
                .blocks
                .as_deref()
                .ok_or_else(|| Error::Precondition("--method blocks needs --blocks <file>".into()))?;
            cover_from_block_file(p, path)?.into()
        }
        Method::Exact => {
            let warm = tier.warm_start().map(|s| anneal_cover(p, &s, args.seed).cover);
            let sol = exact_theta(p, tier.budget(), warm.as_ref())?;
            Built { cover: sol.cover, solve: Some(sol.outcome), log: sol.log }
        }
        Method::Anneal => anneal_cover(p, &AnnealSchedule::default(), args.seed).cover.into(),
        Method::Greedy => greedy_cover(p).into(),
    })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::ClosedForm => "closed_form",
        Method::Recursive => "recursive",
        Method::Lexicode => "lexicode",
        Method::Blocks => "blocks",
        Method::Exact => "exact",
        Method::Anneal => "anneal",
        Method::Greedy => "greedy",
    }
}

pub fn cover(args: &CoverArgs, format: Format) -> Outcome {
    let p = params(args.n, args.k)?;
    let built = build(args, p)?;
    let check = verify_cover(&built.cover);
    let report = CoverReport {
        n: p.n(),
        k: p.k(),
        method: method_name(args.method),
        size: built.cover.len(),
        covered: check.covered,
        disjoint: check.disjoint(),
        lower_simple: simple_lower_bound(p),
        known: table_theta(p),
        solve: built.solve.as_ref(),
    };
    if !check.covered {
        emit(format, &report, cover_text(&report), true);
        return Err(Failure::Verification(format!("{} vertices uncovered", check.uncovered.len())));
    }
    let on_stdout = write_artifact(args.out.as_deref(), &write_cover(&built.cover, built.solve.as_ref()))?;
    if let Some(path) = &args.log {
        std::fs::write(path, write_solver_log(&built.log))?;
    }
    emit(format, &report, cover_text(&report), on_stdout);
    match &built.solve {
        Some(s) if s.status != SolveStatus::Optimal => {
            Err(Failure::Budget(format!("{:?} with theta in [{}, {}]", s.status, s.lower_bound, s.best_value)))
        }
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    n: u32,
    k: u32,
    size: usize,
    covered: bool,
    disjoint: bool,
    uncovered: &'a [Subset],
    stats: &'a CoverStats,
    lower_simple: u64,
    known: Option<ThetaValue>,
}

fn verify_text(v: &VerifyOut<'_>, report: &VerifyReport) -> String {
    let mut t = format!("J({},{}): {} cliques (n_A={}, n_B={})\n", v.n, v.k, v.size, v.stats.n_a, v.stats.n_b);
    if v.covered {
        let _ = writeln!(t, "valid cover{}", if v.disjoint { ", pairwise disjoint" } else { "" });
    } else {
        let _ = writeln!(t, "INVALID: {} uncovered: {}", v.uncovered.len(), list_subsets(&report.uncovered, 20));
    }
    let _ = write!(t, "lower bound {}", v.lower_simple);
    if let Some(known) = v.known {
        let _ = write!(t, ", known theta {known}");
        if (v.size as u64) < known.lo {
            t.push_str(" (smaller than the known minimum!)");
        } else if known.is_exact() && v.size as u64 == known.hi {
            t.push_str(" (minimal)");
        }
    }
    t.push('\n');
    t
}

pub fn verify(args: &VerifyArgs, format: Format) -> Outcome {
    let mut cover = parse_cover(&read(&args.file)?)?.cover;
    if args.complement {
        cover = complement_cover(&cover);
    }
    let p = cover.params();
    let report = verify_cover(&cover);
    let stats = cover_stats(&cover);
    let out = VerifyOut {
        n: p.n(),
        k: p.k(),
        size: cover.len(),
        covered: report.covered,
        disjoint: report.disjoint(),
        uncovered: &report.uncovered,
        stats: &stats,
        lower_simple: simple_lower_bound(p),
        known: table_theta(p),
    };
    emit(format, &out, verify_text(&out, &report), false);
    if !report.covered {
        return Err(Failure::Verification(format!("{} vertices uncovered", report.uncovered.len())));
    }
    if let Some(path) = &args.out {
        std::fs::write(path, write_cover(&cover, None))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ConvertOut {
    direction: &'static str,
    n: u32,
    k: u32,
    j: u32,
    j2: Option<u32>,
    size: usize,
    valid: bool,
}

fn convert_text(c: &ConvertOut) -> String {
    let rule = match c.j2 {
        Some(j2) => format!("j1={}, j2={j2}", c.j),
        None => format!("j={}", c.j),
    };
    let what = if c.direction == "cover_to_code" { "codewords, distance 4" } else { "cliques, disjoint cover" };
    format!("J({},{}) {} with {rule}: {} {what}\n", c.n, c.k, c.direction, c.size)
}

pub fn convert(args: &ConvertArgs, format: Format) -> Outcome {
    let text = read(&args.file)?;
    match args.direction {
        Direction::CoverToCode => {
            let cover = parse_cover(&text)?.cover;
            let p = cover.params();
            let (code, j) = match (args.j, args.j2) {
                (Some(j1), Some(j2)) => {
                    let conv = code_from_cover_two_element(&cover, j1, j2)?;
                    if !conv.is_code {
                        return Err(Failure::Verification("converted words are not a distance-4 code".into()));
                    }
                    (conv.into_code(p)?, j1)
                }
                (Some(j), None) => (code_from_cover_simple(&cover, j)?, j),
                (None, _) => {
                    let j = find_conversion_element(&cover).ok_or_else(|| {
                        Error::Precondition("no single conversion element; pass --j and --j2".into())
                    })?;
                    (code_from_cover_simple(&cover, j)?, j)
                }
            };
            let out = ConvertOut { direction: "cover_to_code", n: p.n(), k: p.k(), j, j2: args.j2, size: code.len(), valid: true };
            let on_stdout = write_artifact(args.out.as_deref(), &write_code(&CodeFile::from_code(&code, None)))?;
            emit(format, &out, convert_text(&out), on_stdout);
        }
        Direction::CodeToCover => {
            let file = parse_code(&text)?;
            let p = params(file.n, file.w)?;
            let code = Code::new(p, file.words)?;
            let candidates: Vec<u32> = match args.j {
                Some(j) => vec![j],
                None => (1..=p.n()).collect(),
            };
            let mut found = None;
            for &j in &candidates {
                let cover = Cover::new(p, cliques_from_code(&code, j)?)?;
                if verify_cover(&cover).covered {
                    found = Some((cover, j));
                    break;
                }
            }
            let Some((cover, j)) = found else {
                return Err(Failure::Verification(format!(
                    "the {} cliques from this code do not cover {p} for any tried element",
                    code.len()
                )));
            };
            let out = ConvertOut { direction: "code_to_cover", n: p.n(), k: p.k(), j, j2: None, size: cover.len(), valid: true };
            let on_stdout = write_artifact(args.out.as_deref(), &write_cover(&cover, None))?;
            emit(format, &out, convert_text(&out), on_stdout);
        }
    }
    Ok(())
}

pub fn bounds(args: &BoundsArgs, format: Format) -> Outcome {
    let p = params(args.n, args.k)?;
    let design = match &args.blocks {
        Some(path) => Some(cover_from_block_file(p, path)?.len() as u64),
        None => None,
    };
    let r = bounds_report(p, design);
    let mut t = format!("J({},{}): {} vertices, clique number {}\n", r.n, r.k, r.vertices, r.omega);
    let _ = writeln!(t, "lower  simple         {}", r.lower_simple);
    let _ = writeln!(t, "upper  recursive      {}", r.upper_recursive);
    if let Some(v) = r.closed_form {
        let _ = writeln!(t, "exact  closed form    {v}");
    }
    if let Some(v) = r.design_upper {
        let _ = writeln!(t, "upper  blocks         {v}");
    }
    if let Some(v) = r.known_theta {
        let _ = writeln!(t, "known  table          {v}");
    }
    if let Some(v) = r.alpha_upper_johnson {
        let _ = writeln!(t, "alpha  <= {v} (Johnson), <= {} (refined)", r.alpha_upper_refined);
    }
    if let Some(c) = r.catalan {
        let _ = write!(t, "catalan {c}");
        if let Some(tight) = r.catalan_tight {
            let _ = write!(t, ", tightness test {}", if tight { "passes" } else { "fails" });
        }
        t.push('\n');
    }
    let _ = writeln!(t, "theta in [{}, {}]", r.best_lower(), r.best_upper());
    emit(format, &r, t, false);
    Ok(())
}

#[derive(Serialize)]
struct LexicodeOut {
    k: u32,
    order: &'static str,
    words: usize,
    target: u64,
    pairwise_intersecting: bool,
    cover_size: Option<usize>,
}

pub fn lexicode(args: &LexicodeArgs, format: Format) -> Outcome {
    let tier = BudgetTier::from(args.tier);
    let order = args.order_convention.into();
    let code = build_lexicode(args.k, LexicodeOptions { order, heavy: tier == BudgetTier::Heavy })?;
    let check = check_lexicode(&code)?;
    let mut out = LexicodeOut {
        k: check.k,
        order: order.name(),
        words: check.words,
        target: check.target,
        pairwise_intersecting: check.pairwise_intersecting,
        cover_size: None,
    };
    let artifact = if args.emit_code {
        let c = Code::new(code.params, code.words.clone())?;
        write_code(&CodeFile::from_code(&c, Some(order)))
    } else {
        if !check.succeeds() {
            return Err(Failure::Verification(format!(
                "lexicode has {} words (need {}, pairwise intersecting: {})",
                check.words, check.target, check.pairwise_intersecting
            )));
        }
        let cover = theta_cover_from_code(&code)?;
        let report = verify_cover(&cover);
        if !report.covered {
            return Err(Failure::Verification(format!("{} vertices uncovered", report.uncovered.len())));
        }
        out.cover_size = Some(cover.len());
        write_cover(&cover, None)
    };
    let mut t = format!(
        "lexicode k={} ({}): {} words, target {}, pairwise intersecting: {}\n",
        out.k, out.order, out.words, out.target, out.pairwise_intersecting
    );
    if let Some(s) = out.cover_size {
        let _ = writeln!(t, "cover of J({},{}): {s} disjoint cliques", 2 * out.k, out.k);
    }
    let on_stdout = write_artifact(args.out.as_deref(), &artifact)?;
    emit(format, &out, t, on_stdout);
    Ok(())
}

pub fn stats(args: &StatsArgs, format: Format) -> Outcome {
    let cover = parse_cover(&read(&args.file)?)?.cover;
    let s = cover_stats(&cover);
    let mut t = format!("J({},{}): n_A={} n_B={}\n  j  a_j  b_j\n", cover.params().n(), cover.params().k(), s.n_a, s.n_b);
    for j in 1..=cover.params().n() {
        let _ = writeln!(t, "{j:>3} {:>4} {:>4}", s.a_count(j), s.b_count(j));
    }
    emit(format, &s, t, false);
    Ok(())
}
