//! Command-line front-end for `ncring`: expression parsing, normal forms,
//! identity verification over parameter grids, Bernoulli tables, and the
//! `w`-basis action matrices.
//!
//! Exit codes: 0 when every check passed, 1 when a verification failed, 2 on
//! usage or parse errors.

pub mod emit;
pub mod parse;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use ncring::bernoulli::{bernoulli_alt, bernoulli_table};
use ncring::identities::{self as ids, Congruence, IdentityId, VerificationReport};
use ncring::wmodule::{self, Acting, WBasis};
use ncring::{AlgebraError, Algebra, MonomialOrder, NcPolynomial, Preset, Rational};
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ncring", version, about = "Exact PBW normal forms and Bernoulli-type relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print B_0..B_max (B_1 = +1/2; --alt gives (-1)^n B_n).
    Bernoulli {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        alt: bool,
    },
    /// Reduce an expression to PBW normal form.
    Normalize {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check an identity over a parameter grid.
    Verify {
        id: String,
        #[arg(long = "k-max")]
        k_max: usize,
        #[arg(long = "l-max")]
        l_max: Option<usize>,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Designated x for ak/bk/ck.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Designated y for ak/bk/ck.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// One JSON object per instance.
        #[arg(long)]
        json: bool,
        /// Print the U_k remainder of each ak/bk instance.
        #[arg(long)]
        show_remainder: bool,
    },
    /// Coordinates of an element of W in the w_{k,l} basis.
    Wbasis {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long = "k-max")]
        k_max: usize,
        #[arg(long = "l-max")]
        l_max: usize,
    },
    /// Matrix of left multiplication by x or y on the truncated w-basis.
    Action {
        #[arg(long = "gen", value_enum)]
        generator: GenArg,
        #[arg(long = "k-max")]
        k_max: usize,
        #[arg(long = "l-max")]
        l_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Certify that the truncated w_{k,l} family is linearly independent.
    Independence {
        #[arg(long = "k-max")]
        k_max: usize,
        #[arg(long = "l-max")]
        l_max: usize,
    },
}

#[derive(Debug, clap::Args)]
struct AlgebraArgs {
    /// L2 | heisenberg | typeC | typeD_alpha(Q) | typeD_plus | sl2
    #[arg(long)]
    algebra: Option<String>,
    /// Parameter of typeD_alpha when not given inline.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// natural | reversed | x-first | y-first | comma-separated generator names
    #[arg(long)]
    order: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenArg {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// A usage problem reported with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error(transparent)]
    Parse(#[from] parse::ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Message(String),
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError::Message(msg.into())
}

fn parse_rational(s: &str) -> Result<Rational, UsageError> {
    let p = parse::parse_with_names(s, &[])?;
    match p.terms().next() {
        None => Ok(Rational::from_integer(0.into())),
        Some((w, c)) if w.is_empty() && p.len() == 1 => Ok(c.clone()),
        _ => Err(usage(format!("not a rational number: {s}"))),
    }
}

/// Resolve a preset name; `typeD_alpha` takes its parameter inline
/// (`typeD_alpha(2/3)`) or from `alpha`.
pub fn parse_preset(name: &str, alpha: Option<&str>) -> Result<Preset, UsageError> {
    let preset = match name {
        "L2" => Preset::L2,
        "heisenberg" => Preset::Heisenberg,
        "typeC" => Preset::TypeC,
        "typeD_plus" => Preset::TypeDPlus,
        "sl2" => Preset::Sl2,
        "typeD_alpha" => {
            let a = alpha.ok_or_else(|| usage("typeD_alpha needs --alpha or typeD_alpha(Q)"))?;
            Preset::TypeDAlpha(parse_rational(a)?)
        }
        other => {
            let inner = other
                .strip_prefix("typeD_alpha(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| usage(format!("unknown algebra {other:?}")))?;
            Preset::TypeDAlpha(parse_rational(inner)?)
        }
    };
    Ok(preset)
}

fn resolve_algebra(args: &AlgebraArgs) -> Result<(Algebra, String), UsageError> {
    let name = args.algebra.as_deref().unwrap_or("L2");
    let preset = parse_preset(name, args.alpha.as_deref())?;
    let pres = preset.build()?;
    let dim = pres.dim();
    let order = match args.order.as_deref() {
        None | Some("natural") | Some("x-first") => MonomialOrder::natural(dim),
        Some("reversed") | Some("y-first") => MonomialOrder::reversed(dim),
        Some(list) => {
            let seq = list
                .split(',')
                .map(|n| {
                    pres.index_of(n.trim())
                        .ok_or_else(|| usage(format!("unknown generator {n:?} in --order")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            MonomialOrder::from_sequence(&seq)?
        }
    };
    Ok((Algebra::new(pres, order)?, name.to_string()))
}

fn names(alg: &Algebra) -> Vec<&str> {
    alg.presentation().names()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GridShape {
    /// k in start..=kmax
    K { start: usize },
    /// k in 1..=kmax, l in 0..=lmax
    KL,
}

fn grid_shape(id: IdentityId) -> GridShape {
    use IdentityId::*;
    match id {
        Br1 | Br1Literal | Br2 => GridShape::KL,
        PropIi | PropIii | Ck => GridShape::K { start: 0 },
        _ => GridShape::K { start: 1 },
    }
}

fn needs_generators(id: IdentityId) -> bool {
    matches!(id, IdentityId::Ak | IdentityId::Bk | IdentityId::Ck)
}

struct Designated {
    algebra: Algebra,
    x: NcPolynomial,
    y: NcPolynomial,
}

fn evaluate(
    id: IdentityId,
    k: usize,
    l: usize,
    designated: Option<&Designated>,
) -> Result<VerificationReport, AlgebraError> {
    use IdentityId::*;
    let gens = || designated.expect("generators resolved for ak/bk/ck");
    match id {
        Br1 => ids::verify_br1(k, l),
        Br1Literal => ids::verify_br1_literal(k, l),
        Br2 => ids::verify_br2(k, l),
        Sbr1 => ids::verify_sbr1(k),
        Sbr2 => ids::verify_sbr2(k),
        Pk => ids::verify_pk(k),
        Qk => ids::verify_qk(k),
        PkLiteral => ids::verify_pk_literal(k),
        PkDplus => ids::verify_pk_dplus(k),
        QkDplus => ids::verify_qk_dplus(k),
        PropIi => ids::verify_prop_ii(k),
        PropIii => ids::verify_prop_iii(k),
        Ak => {
            let d = gens();
            ids::verify_congruence(&d.algebra, Congruence::A, &d.x, &d.y, k)
        }
        Bk => {
            let d = gens();
            ids::verify_congruence(&d.algebra, Congruence::B, &d.x, &d.y, k)
        }
        Ck => {
            let d = gens();
            ids::verify_ck_report(&d.algebra, &d.x, &d.y, k)
        }
    }
}

fn format_params(r: &VerificationReport) -> String {
    r.params
        .iter()
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

struct VerifyOptions<'a> {
    id: &'a str,
    k_max: usize,
    l_max: Option<usize>,
    algebra: &'a AlgebraArgs,
    x: Option<&'a str>,
    y: Option<&'a str>,
    json: bool,
    show_remainder: bool,
}

fn verify(opts: VerifyOptions<'_>, out: &mut dyn Write) -> Result<i32, UsageError> {
    let id = IdentityId::parse(opts.id).ok_or_else(|| {
        let known: Vec<&str> = IdentityId::ALL.iter().map(|i| i.as_str()).collect();
        usage(format!("unknown identity {:?}; expected one of {}", opts.id, known.join(", ")))
    })?;
    let shape = grid_shape(id);
    if opts.l_max.is_some() && shape != GridShape::KL {
        return Err(usage(format!("{id} has no l parameter")));
    }

    let designated = if needs_generators(id) {
        let (algebra, _) = resolve_algebra(opts.algebra)?;
        let (x, y) = match (opts.x, opts.y, algebra.dim()) {
            (Some(x), Some(y), _) => (
                parse::parse(x, algebra.presentation())?,
                parse::parse(y, algebra.presentation())?,
            ),
            (None, None, 2) => (algebra.generator(0), algebra.generator(1)),
            (None, None, _) => {
                return Err(usage(format!(
                    "{id} on a three-dimensional algebra needs --x and --y"
                )))
            }
            _ => return Err(usage("--x and --y must be given together")),
        };
        Some(Designated { algebra, x, y })
    } else {
        if opts.algebra.algebra.is_some() || opts.x.is_some() || opts.y.is_some() {
            return Err(usage(format!(
                "{id} is checked in a fixed algebra; --algebra/--x/--y do not apply"
            )));
        }
        None
    };

    let params: Vec<(usize, usize)> = match shape {
        GridShape::K { start } => (start..=opts.k_max).map(|k| (k, 0)).collect(),
        GridShape::KL => {
            let lmax = opts.l_max.unwrap_or(0);
            (1..=opts.k_max)
                .flat_map(|k| (0..=lmax).map(move |l| (k, l)))
                .collect()
        }
    };
    let total = params.len();
    let chunk = rayon::current_num_threads().max(1) * 2;
    let mut checked = 0;
    for block in params.chunks(chunk) {
        let reports: Vec<Result<VerificationReport, AlgebraError>> = block
            .par_iter()
            .map(|&(k, l)| evaluate(id, k, l, designated.as_ref()))
            .collect();
        for report in reports {
            let report = report?;
            checked += 1;
            if opts.json {
                writeln!(out, "{}", emit::report_json(&report)).ok();
            }
            if opts.show_remainder && !opts.json {
                if let (Some(d), Some(k)) = (designated.as_ref(), report.param("k")) {
                    let which = if id == IdentityId::Bk { Congruence::B } else { Congruence::A };
                    if id != IdentityId::Ck {
                        let u = ids::remainder(&d.algebra, which, &d.x, &d.y, k)?;
                        let nf = d.algebra.normal_form(&u.reconstruct(&d.x, &d.y))?;
                        writeln!(out, "k={k} u = {}", nf.render(&names(&d.algebra))).ok();
                    }
                }
            }
            if !report.equal {
                if !opts.json {
                    writeln!(out, "FAIL at {}", format_params(&report)).ok();
                    writeln!(out, "  lhs: {}", report.render(&report.lhs)).ok();
                    writeln!(out, "  rhs: {}", report.render(&report.rhs)).ok();
                    writeln!(out, "  residual: {}", report.render(&report.residual)).ok();
                    writeln!(out, "({checked}/{total} instances checked)").ok();
                }
                return Ok(EXIT_FAIL);
            }
        }
    }
    if !opts.json {
        writeln!(out, "PASS {total}/{total}").ok();
    }
    Ok(EXIT_OK)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, UsageError> {
    match cli.command {
        Command::Bernoulli { max, alt } => {
            let table = bernoulli_table(max);
            for (n, b) in table.into_iter().enumerate() {
                let value = if alt { bernoulli_alt(n) } else { b };
                writeln!(out, "{n}\t{value}").ok();
            }
            Ok(EXIT_OK)
        }
        Command::Normalize { algebra, expr } => {
            let (alg, _) = resolve_algebra(&algebra)?;
            let p = parse::parse(&expr, alg.presentation())?;
            let nf = alg.normal_form(&p)?;
            writeln!(out, "{}", nf.render(&names(&alg))).ok();
            Ok(EXIT_OK)
        }
        Command::Verify {
            id,
            k_max,
            l_max,
            algebra,
            x,
            y,
            json,
            show_remainder,
        } => verify(
            VerifyOptions {
                id: &id,
                k_max,
                l_max,
                algebra: &algebra,
                x: x.as_deref(),
                y: y.as_deref(),
                json,
                show_remainder,
            },
            out,
        ),
        Command::Wbasis { expr, k_max, l_max } => {
            if k_max == 0 {
                return Err(usage("--k-max must be at least 1"));
            }
            let p = parse::parse_with_names(&expr, &["x", "y"])?;
            let basis = WBasis::new(k_max, l_max)?;
            match basis.express(&p) {
                Ok(coords) => {
                    for ((k, l), c) in coords.entries() {
                        writeln!(out, "w({k},{l})\t{c}").ok();
                    }
                    Ok(EXIT_OK)
                }
                Err(AlgebraError::NotInTruncatedSpan {
                    residual,
                    top_degree,
                }) => {
                    writeln!(
                        out,
                        "not in the span of w(k,l), k <= {k_max}, l <= {l_max}; residual {} (degree {top_degree})",
                        residual.render(&["x", "y"])
                    )
                    .ok();
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Action {
            generator,
            k_max,
            l_max,
            format,
        } => {
            let g = match generator {
                GenArg::X => Acting::X,
                GenArg::Y => Acting::Y,
            };
            let m = wmodule::action_matrix(g, k_max, l_max)?;
            match format {
                Format::Csv => {
                    emit::action_matrix_csv(&m, &mut *out)
                        .map_err(|e| usage(format!("writing CSV: {e}")))?;
                }
                Format::Json => {
                    let text = emit::action_matrix_json(&m)
                        .map_err(|e| usage(format!("writing JSON: {e}")))?;
                    writeln!(out, "{text}").ok();
                }
            }
            Ok(EXIT_OK)
        }
        Command::Independence { k_max, l_max } => {
            if k_max == 0 {
                return Err(usage("--k-max must be at least 1"));
            }
            let basis = WBasis::new(k_max, l_max)?;
            let independent = basis.rank() == basis.len();
            writeln!(
                out,
                "{} vectors, rank {}: {}",
                basis.len(),
                basis.rank(),
                if independent { "independent" } else { "dependent" }
            )
            .ok();
            Ok(if independent { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

/// Run the command line `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                write!(err, "{e}").ok();
            } else {
                write!(out, "{e}").ok();
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            EXIT_USAGE
        }
    }
}
