//! Command-line verbs. Results go to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse or usage error, 3 when a
//! checked property fails.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use homore::exactnum::Rational;
use homore::hommodule::{
    chain_stabilization, generated_submodule, module_axioms_check, parse_module, quotient_module,
    render_module, HomModule,
};
use homore::homring::{
    hom_associativity_check, load_algebra, nuclei, nucleus_membership, parse_algebra, Algebra,
    AlgebraElement, AlphaChoice,
};
use homore::linalg::{parse_rows, Matrix, SubspaceBasis};
use homore::ore::{convert_form, opposite_iso, random_poly, FormDirection, OreContext, OrePoly};
use homore::ring::SampleBound;
use homore::weyl::{build_weyl, reduce, AlphaMode, CdPolyRing, WeylContext, WeylElement};

use crate::domain::{AlgebraDomain, OreDomain};
use crate::expr::{parse_expression, Domain};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn domain(e: impl ToString) -> CliError {
    CliError::Domain(e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "homore", version, about = "Exact arithmetic in hom-associative rings and Ore extensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlphaArg {
    Zero,
    Identity,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ContextArgs {
    /// Octonionic Weyl algebra (the default context).
    #[arg(long, conflicts_with_all = ["algebra", "octonions"])]
    pub weyl: bool,
    /// Algebra definition file, or a built-in name.
    #[arg(long, conflicts_with = "octonions")]
    pub algebra: Option<String>,
    /// Built-in octonions.
    #[arg(long)]
    pub octonions: bool,
    /// Replace the twisting map. Defaults: zero for the Weyl algebra, the
    /// file's own map for algebras, identity for the octonions.
    #[arg(long, value_enum)]
    pub alpha: Option<AlphaArg>,
}

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    /// Random samples for checks that are not exhaustive.
    #[arg(long, env = "HOMORE_SAMPLES", default_value_t = 100)]
    pub samples: usize,
    /// X-degree bound for random polynomials.
    #[arg(long, default_value_t = 5)]
    pub degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct ModuleArgs {
    /// Module definition file.
    #[arg(long)]
    pub module: String,
    /// Algebra files the module may refer to by name.
    #[arg(long = "algebra")]
    pub algebras: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    LeftToRight,
    RightToLeft,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Left-nested product of the expressions.
    Mul {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(num_args = 2.., required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Sum of the expressions.
    Add {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(num_args = 2.., required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Associator (ab)c - a(bc).
    Assoc {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Checks α(a)(bc) = (ab)α(c): on all basis triples of an algebra, on
    /// random triples in the Weyl algebra.
    Homcheck {
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Nuclei of an algebra, or nucleus membership of an element.
    Nucleus {
        #[command(flatten)]
        ctx: ContextArgs,
        #[command(flatten)]
        sampling: SampleArgs,
        /// Test X^k in the Weyl algebra.
        #[arg(long)]
        k: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// π_i^m over the Weyl coefficients: its words with --show, or its value
    /// on a coefficient.
    Pi {
        #[arg(long = "i")]
        i: usize,
        #[arg(long = "m")]
        m: usize,
        #[arg(long)]
        show: bool,
        #[arg(long, value_enum)]
        alpha: Option<AlphaArg>,
        #[arg(allow_hyphen_values = true)]
        coefficient: Option<String>,
    },
    /// Converts between Σ X^i a_i and Σ a_i X^i in the Weyl algebra. For
    /// left-to-right the input's coefficients are read as the a_i of Σ X^i a_i.
    Convert {
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long, value_enum)]
        alpha: Option<AlphaArg>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Image under the isomorphism from the opposite-coefficient extension
    /// onto the opposite Weyl algebra, Σ r_i X^i ↦ Σ X^i r_i.
    Opiso {
        #[arg(long, value_enum)]
        alpha: Option<AlphaArg>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Leading-term reduction in the Weyl algebra; prints the remainder.
    Reduce {
        #[arg(long)]
        weyl: bool,
        #[arg(long, value_enum)]
        alpha: Option<AlphaArg>,
        #[arg(long = "gen", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
        /// Also print every reduction step.
        #[arg(long)]
        trace: bool,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Checks the hom-module axioms.
    Modcheck {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Quotient by the submodule spanned by the given rows.
    Quotient {
        #[command(flatten)]
        module: ModuleArgs,
        /// `;`-separated rows spanning a hom-submodule.
        #[arg(long)]
        sub: String,
    },
    /// Smallest hom-submodule containing the given rows.
    Closure {
        #[command(flatten)]
        module: ModuleArgs,
        rows: String,
    },
    /// Ascending chain generated by successive row sets.
    Chain {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long = "gens", required = true)]
        gens: Vec<String>,
    },
}

fn alpha_mode(a: Option<AlphaArg>) -> AlphaMode {
    match a {
        Some(AlphaArg::Identity) => AlphaMode::Identity,
        Some(AlphaArg::Zero) | None => AlphaMode::Zero,
    }
}

fn weyl(a: Option<AlphaArg>) -> Result<WeylContext, CliError> {
    build_weyl(alpha_mode(a)).map_err(domain)
}

/// A path if it exists, otherwise a built-in name.
fn load_named_algebra(name: &str) -> Result<Algebra, CliError> {
    if Path::new(name).exists() {
        let text = std::fs::read_to_string(name).map_err(|e| usage(format!("{name}: {e}")))?;
        let spec = parse_algebra(&text).map_err(|e| usage(format!("{name}: {e}")))?;
        return load_algebra(spec).map_err(|e| domain(format!("{name}: {e}")));
    }
    builtin_algebra(name).ok_or_else(|| usage(format!("no algebra file or built-in named `{name}`")))
}

fn builtin_algebra(name: &str) -> Option<Algebra> {
    if let Some(n) = name.strip_prefix("trunc").and_then(|n| n.parse().ok()) {
        return (n > 0).then(|| Algebra::truncated_polynomial(n));
    }
    Algebra::builtin(name, AlphaChoice::Identity)
}

enum Context {
    Weyl(WeylContext),
    Algebra(Algebra),
}

fn context(args: &ContextArgs) -> Result<Context, CliError> {
    let alg = if args.octonions {
        Algebra::octonions(AlphaChoice::Identity)
    } else if let Some(name) = &args.algebra {
        load_named_algebra(name)?
    } else {
        return weyl(args.alpha).map(Context::Weyl);
    };
    let alg = match args.alpha {
        None => Ok(alg),
        Some(AlphaArg::Zero) => alg.with_alpha(Matrix::zeros(alg.dim(), alg.dim())),
        Some(AlphaArg::Identity) => alg.with_alpha(Matrix::identity(alg.dim())),
    }
    .map_err(domain)?;
    Ok(Context::Algebra(alg))
}

fn parse<D: Domain>(text: &str, d: &D, err: &mut dyn Write) -> Result<D::Elem, CliError> {
    let parsed = parse_expression(text, d).map_err(|e| usage(format!("`{text}`: {e}")))?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "warning: `{text}`: {w}");
    }
    Ok(parsed.value)
}

fn fold_values<D: Domain>(
    d: &D,
    exprs: &[String],
    chain: &str,
    err: &mut dyn Write,
    f: impl Fn(&D, &D::Elem, &D::Elem) -> D::Elem,
) -> Result<String, CliError> {
    let values = exprs
        .iter()
        .map(|e| parse(e, d, err))
        .collect::<Result<Vec<_>, _>>()?;
    let product = !chain.is_empty();
    let loose = values.iter().filter(|v| !d.is_nuclear(v)).count();
    if product && !d.is_associative() && loose >= 3 {
        let _ = writeln!(err, "warning: {chain}: evaluated as a left-nested product of {loose} non-nuclear factors");
    }
    let mut it = values.into_iter();
    let first = it.next().expect("at least two expressions");
    Ok(d.render(&it.fold(first, |acc, v| f(d, &acc, &v))))
}

fn fold_in_context(
    ctx: &ContextArgs,
    exprs: &[String],
    err: &mut dyn Write,
    add: bool,
) -> Result<String, CliError> {
    match context(ctx)? {
        Context::Weyl(w) => {
            let d = OreDomain::new(&w);
            if add {
                fold_values(&d, exprs, "", err, |d, a, b| d.add(a, b))
            } else {
                fold_values(&d, exprs, "mul", err, |d, a, b| d.mul(a, b))
            }
        }
        Context::Algebra(alg) => {
            let d = AlgebraDomain::new(&alg);
            if add {
                fold_values(&d, exprs, "", err, |d, a, b| d.add(a, b))
            } else {
                fold_values(&d, exprs, "mul", err, |d, a, b| d.mul(a, b))
            }
        }
    }
}

fn associator<D: Domain>(d: &D, abc: [&str; 3], err: &mut dyn Write) -> Result<String, CliError> {
    let [a, b, c] = abc;
    let (a, b, c) = (parse(a, d, err)?, parse(b, d, err)?, parse(c, d, err)?);
    let left = d.mul(&d.mul(&a, &b), &c);
    let right = d.mul(&a, &d.mul(&b, &c));
    Ok(d.render(&d.add(&left, &d.neg(&right))))
}

/// Output text and whether the checked property held.
struct Outcome {
    text: String,
    holds: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, holds: true }
    }
}

fn homcheck(ctx: &ContextArgs, s: &SampleArgs) -> Result<Outcome, CliError> {
    match context(ctx)? {
        Context::Algebra(alg) => {
            let report = hom_associativity_check(&alg);
            let d = alg.dim();
            let mut text = if report.passed() {
                format!("hom-associativity holds on all {} basis triples of {}", d * d * d, alg.name())
            } else {
                format!(
                    "hom-associativity fails on {} of {} basis triples of {}",
                    report.failures.len(),
                    d * d * d,
                    alg.name()
                )
            };
            let names = alg.basis_names();
            for (i, j, k) in report.failures.iter().take(10) {
                text.push_str(&format!("\n  ({}, {}, {})", names[*i], names[*j], names[*k]));
            }
            Ok(Outcome {
                text,
                holds: report.passed(),
            })
        }
        Context::Weyl(w) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
            let report = homore::ore::check_ore_hom_associativity(
                &w,
                s.samples,
                s.degree,
                &SampleBound::default(),
                &mut rng,
            );
            let mut text = format!(
                "hom-associativity {} on {} random triples of X-degree at most {}",
                if report.passed() { "holds" } else { "fails" },
                s.samples,
                s.degree
            );
            if let Some([p, q, r]) = report.failures.first() {
                text.push_str(&format!("\n  p = {p}\n  q = {q}\n  r = {r}"));
            }
            Ok(Outcome {
                text,
                holds: report.passed(),
            })
        }
    }
}

fn render_span(alg: &Algebra, s: &SubspaceBasis) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let elems: Vec<String> = s
        .rows()
        .iter()
        .map(|r| alg.element(r.clone()).expect("ambient dimension").to_string())
        .collect();
    elems.join(", ")
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn weyl_nucleus(w: &WeylContext, x: &WeylElement, s: &SampleArgs) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let bound = SampleBound::default();
    let assoc = |a: &WeylElement, b: &WeylElement, c: &WeylElement| &(a * b) * c - a * &(b * c);
    let mut fails = [0usize; 3];
    for _ in 0..s.samples {
        let p = random_poly(w, &mut rng, s.degree, &bound);
        let q = random_poly(w, &mut rng, s.degree, &bound);
        for (slot, v) in [assoc(x, &p, &q), assoc(&p, x, &q), assoc(&p, &q, x)].iter().enumerate() {
            if !v.is_zero() {
                fails[slot] += 1;
            }
        }
    }
    let text = format!(
        "{} random pairs of X-degree at most {}\nleft: {}\nmiddle: {}\nright: {}",
        s.samples,
        s.degree,
        flag(fails[0] == 0),
        flag(fails[1] == 0),
        flag(fails[2] == 0)
    );
    Outcome {
        text,
        holds: fails == [0; 3],
    }
}

fn nucleus(
    ctx: &ContextArgs,
    s: &SampleArgs,
    k: Option<usize>,
    element: Option<&str>,
    err: &mut dyn Write,
) -> Result<Outcome, CliError> {
    match context(ctx)? {
        Context::Weyl(w) => {
            let x = match (k, element) {
                (Some(_), Some(_)) => return Err(usage("give either --k or an element")),
                (Some(k), None) => OrePoly::x_power(&w, k).expect("Weyl coefficients are unital"),
                (None, Some(e)) => parse(e, &OreDomain::new(&w), err)?,
                (None, None) => return Err(usage("the Weyl algebra needs --k or an element")),
            };
            Ok(weyl_nucleus(&w, &x, s))
        }
        Context::Algebra(alg) => {
            if k.is_some() {
                return Err(usage("--k applies to the Weyl algebra"));
            }
            match element {
                Some(e) => {
                    let x: AlgebraElement = parse(e, &AlgebraDomain::new(&alg), err)?;
                    let f = nucleus_membership(&alg, &x).map_err(domain)?;
                    Ok(Outcome {
                        text: format!(
                            "left: {}\nmiddle: {}\nright: {}",
                            flag(f.left),
                            flag(f.middle),
                            flag(f.right)
                        ),
                        holds: f.full(),
                    })
                }
                None => {
                    let n = nuclei(&alg);
                    Ok(Outcome::ok(format!(
                        "left: {}\nmiddle: {}\nright: {}\nnucleus: {}",
                        render_span(&alg, &n.left),
                        render_span(&alg, &n.middle),
                        render_span(&alg, &n.right),
                        render_span(&alg, &n.full)
                    )))
                }
            }
        }
    }
}

fn x_free(p: &WeylElement, text: &str) -> Result<homore::weyl::CdPoly, CliError> {
    if p.degree().finite().unwrap_or(0) > 0 {
        return Err(domain(format!("`{text}` is not a coefficient (it involves X)")));
    }
    Ok(p.coefficient(0))
}

fn pi(i: usize, m: usize, show: bool, alpha: Option<AlphaArg>, coef: Option<&str>, err: &mut dyn Write) -> Result<String, CliError> {
    if i > m {
        return Err(usage("need i <= m"));
    }
    let mut lines = Vec::new();
    if show {
        let words = OreContext::<CdPolyRing>::pi_words(i, m).map_err(domain)?;
        lines.push(homore::ore::render_words(&words));
    }
    if let Some(text) = coef {
        let w = weyl(alpha)?;
        let a = x_free(&parse(text, &OreDomain::new(&w), err)?, text)?;
        lines.push(w.pi(i as i64, m, &a).to_string());
    }
    if lines.is_empty() {
        return Err(usage("give --show, a coefficient, or both"));
    }
    Ok(lines.join("\n"))
}

fn render_left_form(terms: &[(usize, homore::weyl::CdPoly)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    if let [(0, c)] = terms {
        return c.to_string();
    }
    terms
        .iter()
        .rev()
        .map(|(k, c)| match k {
            0 => format!("({c})"),
            1 => format!("X*({c})"),
            k => format!("X^{k}*({c})"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn convert(direction: DirectionArg, alpha: Option<AlphaArg>, text: &str, err: &mut dyn Write) -> Result<String, CliError> {
    let w = weyl(alpha)?;
    let p = parse(text, &OreDomain::new(&w), err)?;
    let terms: Vec<_> = p.terms().map(|(k, c)| (k, c.clone())).collect();
    Ok(match direction {
        DirectionArg::LeftToRight => {
            let out = convert_form(&w, &terms, FormDirection::LeftToRight).map_err(domain)?;
            OrePoly::from_terms(&w, out).to_string()
        }
        DirectionArg::RightToLeft => {
            render_left_form(&convert_form(&w, &terms, FormDirection::RightToLeft).map_err(domain)?)
        }
    })
}

fn opiso(alpha: Option<AlphaArg>, text: &str, err: &mut dyn Write) -> Result<String, CliError> {
    let w = weyl(alpha)?;
    let op = w.opposite().map_err(domain)?;
    let p = parse(text, &OreDomain::new(&op), err)?;
    Ok(opposite_iso(&p, &w).map_err(domain)?.to_string())
}

fn run_reduce(
    alpha: Option<AlphaArg>,
    gens: &[String],
    show_trace: bool,
    text: &str,
    err: &mut dyn Write,
) -> Result<String, CliError> {
    let w = weyl(alpha)?;
    let d = OreDomain::new(&w);
    let generators = gens
        .iter()
        .map(|g| parse(g, &d, err))
        .collect::<Result<Vec<_>, _>>()?;
    let p = parse(text, &d, err)?;
    let trace = reduce(&p, &generators).map_err(domain)?;
    if !trace.verify() {
        return Err(domain("reduction trace does not reconstruct its input"));
    }
    if !trace.complete {
        let _ = writeln!(
            err,
            "warning: no generator's leading coefficient divides the remainder's; the remainder certifies nothing"
        );
    }
    let mut lines = Vec::new();
    if show_trace {
        for (n, step) in trace.steps.iter().enumerate() {
            let cofactors: Vec<String> = step.cofactors.iter().map(ToString::to_string).collect();
            lines.push(format!(
                "step {}: generator {}, cofactor {}, shift {}: {}",
                n + 1,
                step.generator,
                cofactors.join(" then "),
                step.shift,
                step.subtracted
            ));
        }
    }
    lines.push(trace.remainder.to_string());
    Ok(lines.join("\n"))
}

fn load_module(args: &ModuleArgs) -> Result<HomModule, CliError> {
    let algebras = args
        .algebras
        .iter()
        .map(|a| load_named_algebra(a))
        .collect::<Result<Vec<_>, _>>()?;
    let text = std::fs::read_to_string(&args.module).map_err(|e| usage(format!("{}: {e}", args.module)))?;
    let resolve = |name: &str| {
        algebras
            .iter()
            .find(|a| a.name() == name)
            .cloned()
            .or_else(|| builtin_algebra(name))
    };
    parse_module(&text, resolve).map_err(|e| match e {
        homore::hommodule::ModuleError::Parse { .. } => usage(format!("{}: {e}", args.module)),
        other => domain(format!("{}: {other}", args.module)),
    })
}

fn rows(text: &str, dim: usize) -> Result<Vec<Vec<Rational>>, CliError> {
    let rows = parse_rows(text).map_err(|e| usage(format!("`{text}`: {e}")))?;
    if let Some(r) = rows.iter().find(|r| r.len() != dim) {
        return Err(usage(format!("row of length {} in a module of dimension {dim}", r.len())));
    }
    Ok(rows)
}

fn modcheck(args: &ModuleArgs) -> Result<Outcome, CliError> {
    let m = load_module(args)?;
    let report = module_axioms_check(&m);
    let mut text = if report.passed() {
        format!("hom-module axioms hold for {}", m.name())
    } else {
        format!("hom-module axioms fail for {} on {} cases", m.name(), report.failures.len())
    };
    for (v, i, j) in report.failures.iter().take(10) {
        text.push_str(&format!("\n  basis vector {v}, ring basis ({i}, {j})"));
    }
    Ok(Outcome {
        text,
        holds: report.passed(),
    })
}

fn run_command(cmd: &Command, err: &mut dyn Write) -> Result<Outcome, CliError> {
    Ok(match cmd {
        Command::Mul { ctx, exprs } => Outcome::ok(fold_in_context(ctx, exprs, err, false)?),
        Command::Add { ctx, exprs } => Outcome::ok(fold_in_context(ctx, exprs, err, true)?),
        Command::Assoc { ctx, a, b, c } => {
            let abc = [a.as_str(), b.as_str(), c.as_str()];
            Outcome::ok(match context(ctx)? {
                Context::Weyl(w) => associator(&OreDomain::new(&w), abc, err)?,
                Context::Algebra(alg) => associator(&AlgebraDomain::new(&alg), abc, err)?,
            })
        }
        Command::Homcheck { ctx, sampling } => homcheck(ctx, sampling)?,
        Command::Nucleus {
            ctx,
            sampling,
            k,
            element,
        } => nucleus(ctx, sampling, *k, element.as_deref(), err)?,
        Command::Pi {
            i,
            m,
            show,
            alpha,
            coefficient,
        } => Outcome::ok(pi(*i, *m, *show, *alpha, coefficient.as_deref(), err)?),
        Command::Convert { direction, alpha, expr } => Outcome::ok(convert(*direction, *alpha, expr, err)?),
        Command::Opiso { alpha, expr } => Outcome::ok(opiso(*alpha, expr, err)?),
        Command::Reduce {
            weyl: _,
            alpha,
            gens,
            trace,
            expr,
        } => Outcome::ok(run_reduce(*alpha, gens, *trace, expr, err)?),
        Command::Modcheck { module } => modcheck(module)?,
        Command::Quotient { module, sub } => {
            let m = load_module(module)?;
            let n = SubspaceBasis::span(m.dim(), rows(sub, m.dim())?);
            let (q, _) = quotient_module(&m, &n).map_err(domain)?;
            Outcome::ok(render_module(&q).trim_end().to_string())
        }
        Command::Closure { module, rows: text } => {
            let m = load_module(module)?;
            let s = generated_submodule(&m, &rows(text, m.dim())?).map_err(domain)?;
            Outcome::ok(format!("dim {}\n{}", s.dim(), s.render()))
        }
        Command::Chain { module, gens } => {
            let m = load_module(module)?;
            let sets = gens
                .iter()
                .map(|g| rows(g, m.dim()))
                .collect::<Result<Vec<_>, _>>()?;
            let report = chain_stabilization(&m, &sets).map_err(domain)?;
            let dims: Vec<String> = report.submodules.iter().map(|s| s.dim().to_string()).collect();
            Outcome::ok(format!(
                "dimensions {}\nstrict increases {}\nstable from index {}",
                dims.join(" "),
                report.strict_increases,
                report.index
            ))
        }
    })
}

/// Runs one command and returns its exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_command(&cli.command, err) {
        Ok(outcome) => {
            let _ = writeln!(out, "{}", outcome.text);
            if outcome.holds {
                0
            } else {
                3
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
