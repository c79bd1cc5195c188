//! Command-line front end. `verify` recomputes a built-in identity family
//! and prints a pass/fail report; `solve` assembles solutions of the
//! commutator equation from family blocks; `bimodule decompose` splits a
//! polynomial along the base-word direct sum; `gap` reports degree
//! statistics for a pair of polynomials.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use freealg::{
    commutative_pairs, degree_gap_report, parse_poly, parse_word, verify_ex11, verify_ex23,
    verify_ex24, verify_intro, verify_thm31, verify_thm42, Equation, Letter, Rational, Solution,
    UPoly2, UniPoly, VerificationReport,
};

#[derive(Parser)]
#[command(name = "freealg", version, about = "Exact checks in the free associative algebra")]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute a built-in identity family and report each check.
    #[command(subcommand)]
    Verify(Claim),
    /// Assemble and verify a solution of [u^(lm), s] = [u^(ln), r].
    Solve(SolveArgs),
    /// Operations on the bimodule decomposition over a base word.
    #[command(subcommand)]
    Bimodule(BimoduleOp),
    /// Degree statistics for a pair of polynomials in x, y.
    Gap(GapArgs),
}

#[derive(Subcommand)]
enum Claim {
    /// Degree-dropping commutator pair built on u = (xy)^k x.
    Thm31 {
        #[arg(long)]
        k: u32,
    },
    /// Square-root series in the free group algebra and its positive part.
    Thm42 {
        #[arg(long)]
        k: u32,
        /// Lowest component degree kept in the series.
        #[arg(long)]
        cutoff: Option<i64>,
    },
    /// Bivariate pair with Jacobian y from the scaling recurrence.
    Ex11 {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// Random sums of solution families for [u^(lm), s] = [u^(ln), r],
    /// plus a completeness oracle on small instances.
    Ex23 {
        #[arg(long)]
        u: String,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Border identity for xyx + yxx and overlap pairs of (xy)^k x.
    Ex24,
    /// Commutator of y + (x + y^k)^m with (x + y^k)^n.
    Intro {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Args)]
struct SolveArgs {
    /// Base word u, e.g. "xyx".
    #[arg(long)]
    u: String,
    #[arg(long)]
    l: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Polynomial part r1(u) of r, e.g. "u^2 + 2u".
    #[arg(long)]
    r1: Option<String>,
    /// Polynomial part s1(u) of s.
    #[arg(long)]
    s1: Option<String>,
    /// Free-generator block CORE:R2 with R2 over commuting a (left action
    /// by u) and b (right action), e.g. "yy:a + 2b". Repeatable.
    #[arg(long = "free", value_name = "CORE:R2")]
    free_blocks: Vec<String>,
    /// Overlap block PAIR:A:XI[:S3] with S3 homogeneous over a, b of
    /// degree a - l(n-1), e.g. "0:2:1:ab". Repeatable.
    #[arg(long = "overlap", value_name = "PAIR:A:XI[:S3]")]
    overlap_blocks: Vec<String>,
}

#[derive(Subcommand)]
enum BimoduleOp {
    /// Split a polynomial into unit, overlap, and free components.
    Decompose {
        /// Base word u, e.g. "xyx".
        #[arg(long)]
        u: String,
        #[arg(long)]
        poly: String,
    },
}

#[derive(Args)]
struct GapArgs {
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
    /// Optional composition polynomial in x, y to test the weighted bound.
    #[arg(long)]
    p: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    };
    // tolerate a closed pipe on the reading side
    let _ = std::io::stdout().write_all(out.as_bytes());
    code
}

fn run(cli: &Cli, out: &mut String) -> Result<bool> {
    match &cli.command {
        Command::Verify(claim) => {
            let reports = match claim {
                Claim::Thm31 { k } => vec![verify_thm31(*k)?],
                Claim::Thm42 { k, cutoff } => vec![verify_thm42(*k, *cutoff)?],
                Claim::Ex11 { a, b } => vec![verify_ex11(*a, *b)?],
                Claim::Ex23 { u, l, m, n, seed } => {
                    let base = parse_word(u)?;
                    let eq = Equation::new(&base, *l, *m, *n)?;
                    vec![verify_ex23(&eq, 20, *seed)?]
                }
                Claim::Ex24 => {
                    (2..=4).map(verify_ex24).collect::<freealg::Result<Vec<_>>>()?
                }
                Claim::Intro { k, m, n } => vec![verify_intro(*k, *m, *n)?],
            };
            emit_reports(&reports, cli.json, out)
        }
        Command::Solve(args) => {
            let solved = solve(args)?;
            print_solution(args, &solved, cli.json, out)?;
            Ok(true)
        }
        Command::Bimodule(BimoduleOp::Decompose { u, poly }) => {
            decompose(u, poly, cli.json, out)?;
            Ok(true)
        }
        Command::Gap(args) => {
            let f = parse_poly(&args.f)?;
            let g = parse_poly(&args.g)?;
            let p = args.p.as_deref().map(parse_poly).transpose()?;
            let report = degree_gap_report(&f, &g, p.as_ref())?;
            emit_reports(&[report], cli.json, out)
        }
    }
}

fn emit_reports(reports: &[VerificationReport], json: bool, out: &mut String) -> Result<bool> {
    if json {
        if let [single] = reports {
            out.push_str(&serde_json::to_string(single)?);
            out.push('\n');
        } else {
            out.push_str(&serde_json::to_string(reports)?);
            out.push('\n');
        }
    } else {
        for (i, report) in reports.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&format!("{report}\n"));
        }
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn letter(c: char) -> Letter {
    Letter::from_char(c).expect("fixed letter")
}

/// Reads a polynomial in the single variable `u` into power-coefficient form.
fn parse_unipoly(text: &str) -> Result<UniPoly> {
    let poly = parse_poly(text).with_context(|| format!("reading {text:?}"))?;
    let pairs = commutative_pairs(&poly, letter('u'), letter('u'))
        .with_context(|| format!("{text:?} must use only the variable u"))?;
    let mut out = UniPoly::zero();
    for ((power, _), coeff) in pairs {
        out.add_term(power, coeff);
    }
    Ok(out)
}

/// Reads a polynomial over the commuting action variables `a` and `b`.
fn parse_action_poly(text: &str) -> Result<UPoly2> {
    let poly = parse_poly(text).with_context(|| format!("reading {text:?}"))?;
    let pairs = commutative_pairs(&poly, letter('a'), letter('b'))
        .with_context(|| format!("{text:?} must use only the variables a and b"))?;
    let mut out = UPoly2::zero();
    for ((left, right), coeff) in pairs {
        out.add_term(left, right, coeff);
    }
    Ok(out)
}

fn parse_rational(text: &str) -> Result<Rational> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| anyhow!("{text:?} is not a rational number"))
}

fn solve(args: &SolveArgs) -> Result<Solution> {
    let base = parse_word(&args.u)?;
    let eq = Equation::new(&base, args.l, args.m, args.n)?;
    let r1 = args.r1.as_deref().map(parse_unipoly).transpose()?.unwrap_or_else(UniPoly::zero);
    let s1 = args.s1.as_deref().map(parse_unipoly).transpose()?.unwrap_or_else(UniPoly::zero);
    let mut sum = eq.base_solution(&r1, &s1);
    for block in &args.free_blocks {
        let (core_text, r2_text) = block
            .split_once(':')
            .ok_or_else(|| anyhow!("free block {block:?} is not of the form CORE:R2"))?;
        let core = parse_word(core_text)?;
        let r2 = parse_action_poly(r2_text)?;
        sum = &sum + &eq.free_solution(&core, &r2)?;
    }
    for block in &args.overlap_blocks {
        let parts: Vec<&str> = block.split(':').collect();
        if parts.len() < 3 || parts.len() > 4 {
            bail!("overlap block {block:?} is not of the form PAIR:A:XI[:S3]");
        }
        let pair: usize = parts[0].parse().context("overlap pair index")?;
        if pair >= eq.bimodule().pairs().len() {
            bail!(
                "pair index {pair} out of range: {} has {} overlap pair(s)",
                eq.base(),
                eq.bimodule().pairs().len()
            );
        }
        let a: u32 = parts[1].parse().context("overlap power a")?;
        let xi = parse_rational(parts[2])?;
        let s3 = match parts.get(3) {
            Some(text) => parse_action_poly(text)?,
            None => UPoly2::zero(),
        };
        sum = &sum + &eq.overlap_solution(pair, a, xi, &s3)?;
    }
    eq.verify(&sum)?;
    Ok(sum)
}

fn print_solution(args: &SolveArgs, solution: &Solution, json: bool, out: &mut String) -> Result<()> {
    let lm = args.l * args.m;
    let ln = args.l * args.n;
    if json {
        let value = serde_json::json!({
            "u": args.u,
            "l": args.l,
            "m": args.m,
            "n": args.n,
            "r": solution.r.to_string(),
            "s": solution.s.to_string(),
            "verified": true,
        });
        out.push_str(&format!("{value}\n"));
    } else {
        out.push_str(&format!("r = {}\n", solution.r));
        out.push_str(&format!("s = {}\n", solution.s));
        out.push_str(&format!("[u^{lm}, s] = [u^{ln}, r] verified exactly\n"));
    }
    Ok(())
}

fn decompose(base_text: &str, poly_text: &str, json: bool, out: &mut String) -> Result<()> {
    let base = parse_word(base_text)?;
    let bm = freealg::Bimodule::new(&base)?;
    let poly = parse_poly(poly_text)?;
    let form = bm.decompose(&poly);
    if form.to_poly() != poly {
        bail!("decomposition failed to reassemble the input");
    }
    if json {
        let overlap: Vec<serde_json::Value> = form
            .overlap()
            .iter()
            .enumerate()
            .map(|(i, (t1_part, t2_part))| {
                serde_json::json!({
                    "pair": i,
                    "t1": bm.pairs()[i].t1.to_string(),
                    "t2": bm.pairs()[i].t2.to_string(),
                    "t1_part": t1_part.display_with("u1").to_string(),
                    "t2_part": t2_part.to_string(),
                })
            })
            .collect();
        let free: serde_json::Map<String, serde_json::Value> = form
            .free()
            .map(|(core, part)| (core.to_string(), part.to_string().into()))
            .collect();
        let value = serde_json::json!({
            "u": base.to_string(),
            "unit": form.unit().display_with("u").to_string(),
            "overlap": overlap,
            "free": free,
        });
        out.push_str(&format!("{value}\n"));
    } else {
        out.push_str(&format!("base u = {base}\n"));
        out.push_str(&format!("unit part: {}\n", form.unit().display_with("u")));
        for (i, (t1_part, t2_part)) in form.overlap().iter().enumerate() {
            let pair = &bm.pairs()[i];
            out.push_str(&format!("pair {i} (t1 = {}, t2 = {}):\n", pair.t1, pair.t2));
            out.push_str(&format!("  t1 part: {}\n", t1_part.display_with("u1")));
            out.push_str(&format!("  t2 part: {t2_part}\n"));
        }
        for (core, part) in form.free() {
            out.push_str(&format!("free {core}: {part}\n"));
        }
    }
    Ok(())
}
