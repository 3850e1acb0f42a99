//! Command-line surface: parsing, dispatch and output formatting.
//!
//! Exit codes: 0 success, 1 domain/capacity errors, 2 malformed input.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::closures::{
    build_graph, build_graph_prime, closure_polynomial, enumerate_closures,
    jones_constrained_counts,
};
use crate::contfrac::{
    expand_negative, expand_regular, neg_to_reg, reg_to_neg, CFNegative, CFRegular, Rational,
};
use crate::deform::{
    continuant_neg, continuant_reg, matrix_neg, matrix_reg, qdeform, ContinuantVar, QRationalJson,
    StartParity,
};
use crate::farey::{farey_tree, quiddity_classify, QuiddityClass};
use crate::jones::{jones_polynomial, jones_via_closures, jones_via_continuant};
use crate::poly::{IntPoly, LatexPoly, LaurentPoly, PolyJson};
use crate::sequences::{triangle_rows, TriangleKind};
use crate::verify::{all_suite_names, conjectures, run_suite, Bounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "qrat",
    about = "Exact q-deformed rationals, q-continued fractions and rational-knot Jones polynomials",
    version
)]
pub struct Cli {
    /// Output format (also via QRAT_FORMAT).
    #[arg(
        long,
        global = true,
        value_enum,
        env = "QRAT_FORMAT",
        default_value = "text"
    )]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// q-deformation of a rational r/s.
    Qrat { fraction: String },
    /// Regular and negative continued-fraction expansions of r/s.
    Expand { fraction: String },
    /// Convert between regular "[1,2,1,1]" and negative "[[2,2,3]]" form.
    Convert { expansion: String },
    /// q-continuant of a coefficient list.
    Continuant {
        /// Comma-separated coefficients, e.g. 2,2,3.
        coefficients: String,
        /// Interpret as regular-expansion (K+) continuant.
        #[arg(long)]
        regular: bool,
        /// Compute in the variable q^-1 instead of q.
        #[arg(long)]
        q_inverse: bool,
    },
    /// Matrix of convergents of an expansion.
    Matrix { expansion: String },
    /// Weighted Farey tree on [1, oo).
    Farey {
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
    /// Closure counts of the path quiver of r/s.
    Closures {
        fraction: String,
        /// Use the denominator graph instead.
        #[arg(long)]
        prime: bool,
        /// List the closures as sorted vertex index arrays.
        #[arg(long)]
        multivariate: bool,
        /// Jones-constrained counts on the extended graph.
        #[arg(long)]
        jones: bool,
    },
    /// Jones polynomial of the rational knot C(r/s).
    Jones {
        fraction: String,
        #[arg(long, value_enum, default_value = "auto")]
        route: JonesRoute,
        /// Shorthand for --format latex.
        #[arg(long)]
        latex: bool,
    },
    /// q-Fibonacci polynomial pair and triangle rows.
    Fib {
        n: u64,
        #[arg(long)]
        triangle: bool,
        #[arg(long)]
        csv: bool,
        /// OEIS b-file lines (row-reading order).
        #[arg(long)]
        bfile: bool,
    },
    /// q-Pell polynomial pair and triangle rows.
    Pell {
        n: u64,
        #[arg(long)]
        triangle: bool,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        bfile: bool,
    },
    /// Classify a quiddity sequence.
    Quiddity {
        /// Comma-separated sequence, e.g. 3,3,1,2,4,3,1,2,4,1.
        #[arg(long)]
        check: String,
    },
    /// Run the theorem-verification suites.
    Verify {
        /// Suite names (default: all).
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// r+s bound for the equality/degrees sweeps.
        #[arg(long)]
        max_sum: Option<u64>,
        /// sum(a_i) bound for the brute-force closure sweep.
        #[arg(long)]
        max_a_sum: Option<u64>,
        /// Farey tree depth.
        #[arg(long)]
        depth: Option<u32>,
        /// PRNG seed for the randomized suites.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Conjecture scans (reports counterexamples, always exits 0).
    Conjectures {
        #[arg(long, default_value_t = 30)]
        max_sum: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JonesRoute {
    Auto,
    Continuant,
    Closures,
}

/// Either kind of expansion, as parsed from the CLI.
enum AnyCf {
    Regular(CFRegular),
    Negative(CFNegative),
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| CliError::usage(format!("bad integer {part:?}")))
        })
        .collect()
}

fn parse_expansion(text: &str) -> Result<AnyCf, CliError> {
    let t = text.trim();
    let usage = || CliError::usage(format!("cannot parse expansion {text:?}"));
    if let Some(inner) = t.strip_prefix("[[").and_then(|s| s.strip_suffix("]]")) {
        let c = parse_u64_list(inner)?;
        Ok(AnyCf::Negative(
            CFNegative::new(c).map_err(CliError::domain)?,
        ))
    } else if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        let a = parse_u64_list(inner)?;
        Ok(AnyCf::Regular(CFRegular::new(a).map_err(CliError::domain)?))
    } else {
        Err(usage())
    }
}

/// CLI-level error carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn domain(err: impl fmt::Display) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: err.to_string(),
        }
    }
}

fn parse_fraction(text: &str) -> Result<(Rational, bool), CliError> {
    let parts: Vec<&str> = text.split('/').collect();
    let parse = |s: &str| -> Result<BigInt, CliError> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| CliError::usage(format!("cannot parse fraction {text:?}")))
    };
    let (r, s) = match parts.as_slice() {
        [r] => (parse(r)?, BigInt::from(1)),
        [r, s] => (parse(r)?, parse(s)?),
        _ => return Err(CliError::usage(format!("cannot parse fraction {text:?}"))),
    };
    Rational::new_reduced(r, s).map_err(CliError::domain)
}

/// Parses `argv` (without the program name) and runs it, writing program
/// output to `out`. Returns the process exit code.
pub fn run<W: Write>(argv: &[String], out: &mut W) -> i32 {
    let mut full = vec!["qrat".to_string()];
    full.extend_from_slice(argv);
    let cli = match Cli::try_parse_from(&full) {
        Ok(cli) => cli,
        Err(err) => {
            // clap renders its own help/usage text
            let _ = write!(out, "{err}");
            return if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(out, "error: {}", e.message);
            e.code
        }
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<(), CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Qrat { fraction } => {
            let (x, reduced) = parse_fraction(fraction)?;
            let d = qdeform(&x).map_err(CliError::domain)?;
            match fmt {
                Format::Json => {
                    let j = QRationalJson::new(&d, reduced.then_some(true));
                    writeln!(out, "{}", serde_json::to_string_pretty(&j).unwrap()).ok();
                }
                Format::Latex => {
                    writeln!(out, "{}", d.latex()).ok();
                }
                Format::Text => {
                    if reduced {
                        writeln!(out, "reduced to {}", x).ok();
                    }
                    writeln!(out, "[{}]_q = {}", x, d).ok();
                }
            }
            Ok(())
        }
        Command::Expand { fraction } => {
            let (x, _) = parse_fraction(fraction)?;
            let a = expand_regular(&x).map_err(CliError::domain)?;
            let c = expand_negative(&x).map_err(CliError::domain)?;
            match fmt {
                Format::Json => {
                    let payload = json!({
                        "fraction": x.to_string(),
                        "regular": {"kind": "regular", "coeffs": a.coeffs()},
                        "negative": {"kind": "negative", "coeffs": c.coeffs()},
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
                }
                _ => {
                    writeln!(out, "{x} = {a} = {c}").ok();
                }
            }
            Ok(())
        }
        Command::Convert { expansion } => {
            match parse_expansion(expansion)? {
                AnyCf::Regular(a) => {
                    let c = reg_to_neg(&a);
                    emit_expansion(out, fmt, "negative", c.coeffs(), &c.to_string());
                }
                AnyCf::Negative(c) => {
                    let a = neg_to_reg(&c);
                    emit_expansion(out, fmt, "regular", a.coeffs(), &a.to_string());
                }
            }
            Ok(())
        }
        Command::Continuant {
            coefficients,
            regular,
            q_inverse,
        } => {
            let coeffs = parse_u64_list(coefficients)?;
            if coeffs.contains(&0) {
                return Err(CliError::domain("coefficients must be positive"));
            }
            let value = if *regular {
                let k = continuant_reg(&coeffs, StartParity::Odd);
                if *q_inverse {
                    k.subst_q_inverse()
                } else {
                    k
                }
            } else {
                let var = if *q_inverse {
                    ContinuantVar::QInverse
                } else {
                    ContinuantVar::Q
                };
                continuant_neg(&coeffs, var)
            };
            emit_laurent(out, fmt, &value);
            Ok(())
        }
        Command::Matrix { expansion } => {
            let m = match parse_expansion(expansion)? {
                AnyCf::Regular(a) => matrix_reg(&a),
                AnyCf::Negative(c) => matrix_neg(&c),
            };
            match fmt {
                Format::Json => {
                    let payload = json!({
                        "entries": [
                            [PolyJson::from(m.entry(0, 0)), PolyJson::from(m.entry(0, 1))],
                            [PolyJson::from(m.entry(1, 0)), PolyJson::from(m.entry(1, 1))],
                        ]
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
                }
                _ => {
                    writeln!(out, "{m}").ok();
                }
            }
            Ok(())
        }
        Command::Farey { depth } => {
            // 2^(depth+1) nodes; bound the output to something printable
            if *depth > 20 {
                return Err(CliError::usage("depth capped at 20"));
            }
            let nodes = farey_tree(*depth);
            match fmt {
                Format::Json => {
                    let items: Vec<_> = nodes
                        .iter()
                        .map(|n| {
                            json!({
                                "value": n.node.value.to_string(),
                                "num": PolyJson::from(&n.node.label.num),
                                "den": PolyJson::from(&n.node.label.den),
                                "depth": n.depth,
                                "parents": [n.left_parent.to_string(), n.right_parent.to_string()],
                                "parent_edge_weight_exponent": n.edge_exponent,
                            })
                        })
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&items).unwrap()).ok();
                }
                _ => {
                    for n in &nodes {
                        writeln!(
                            out,
                            "depth {} {} = {}  (parents {}, {}; right edge q^{})",
                            n.depth,
                            n.node.value,
                            n.node.label,
                            n.left_parent,
                            n.right_parent,
                            n.edge_exponent
                        )
                        .ok();
                    }
                }
            }
            Ok(())
        }
        Command::Closures {
            fraction,
            prime,
            multivariate,
            jones,
        } => {
            let (x, _) = parse_fraction(fraction)?;
            let a = expand_regular(&x).map_err(CliError::domain)?;
            if *jones {
                let counts = jones_constrained_counts(&a).map_err(CliError::domain)?;
                return emit_counts(out, fmt, "jones-constrained", &counts);
            }
            let g = if *prime {
                build_graph_prime(&a)
            } else {
                build_graph(&a)
            };
            if *multivariate {
                let (counts, gf) = enumerate_closures(&g).map_err(CliError::domain)?;
                match fmt {
                    Format::Json => {
                        let payload = json!({
                            "graph": g.to_string(),
                            "counts": counts,
                            "closures": gf.subsets_as_indices(),
                        });
                        writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
                    }
                    _ => {
                        writeln!(out, "{g}").ok();
                        for subset in gf.subsets_as_indices() {
                            writeln!(out, "{subset:?}").ok();
                        }
                    }
                }
                return Ok(());
            }
            let counts: Vec<u64> = closure_polynomial(&g)
                .map_err(CliError::domain)?
                .coeffs()
                .iter()
                .map(|c| u64::try_from(c).unwrap_or(u64::MAX))
                .collect();
            emit_counts(out, fmt, if *prime { "prime" } else { "plain" }, &counts)
        }
        Command::Jones {
            fraction,
            route,
            latex,
        } => {
            let (x, _) = parse_fraction(fraction)?;
            let j = match route {
                JonesRoute::Continuant => jones_via_continuant(&x).map_err(CliError::domain)?,
                JonesRoute::Closures => jones_via_closures(&x).map_err(CliError::domain)?,
                JonesRoute::Auto => jones_polynomial(&x).map_err(CliError::domain)?,
            };
            let fmt = if *latex { Format::Latex } else { fmt };
            match fmt {
                Format::Json => {
                    let payload = json!({
                        "fraction": x.to_string(),
                        "j": PolyJson::from(&j.j),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
                }
                Format::Latex => {
                    writeln!(out, "{}", LatexPoly(&LaurentPoly::from(&j.j))).ok();
                }
                Format::Text => {
                    writeln!(out, "J_{{{x}}}(q) = {}", j.j).ok();
                }
            }
            Ok(())
        }
        Command::Fib {
            n,
            triangle,
            csv,
            bfile,
        } => emit_sequence(out, fmt, TriangleKind::Fib, *n, *triangle, *csv, *bfile),
        Command::Pell {
            n,
            triangle,
            csv,
            bfile,
        } => emit_sequence(out, fmt, TriangleKind::Pell, *n, *triangle, *csv, *bfile),
        Command::Quiddity { check } => {
            let coeffs = parse_u64_list(check)?;
            if coeffs.len() < 3 {
                return Err(CliError::domain("quiddity needs at least 3 entries"));
            }
            let class = quiddity_classify(&coeffs);
            let n = coeffs.len();
            let scalar = match class {
                QuiddityClass::Triangulation => format!("-q^{}", n - 3),
                QuiddityClass::ThreeDDissection => format!("+q^{}", n - 3),
                QuiddityClass::Neither => "none".to_string(),
            };
            match fmt {
                Format::Json => {
                    let payload = json!({
                        "sequence": coeffs,
                        "class": class.to_string(),
                        "scalar": scalar,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
                }
                _ => {
                    writeln!(out, "{class} (M_q = {scalar} * Id)").ok();
                }
            }
            Ok(())
        }
        Command::Verify {
            suites,
            max_sum,
            max_a_sum,
            depth,
            seed,
        } => {
            let mut bounds = Bounds {
                seed: *seed,
                ..Bounds::default()
            };
            if let Some(m) = max_sum {
                bounds.equality_sum = *m;
                bounds.qminus1_sum = (*m).min(bounds.qminus1_sum);
                bounds.matrices_sum = (*m).min(bounds.matrices_sum);
                bounds.quiddity_sum = (*m).min(bounds.quiddity_sum);
                bounds.positivity_sum = (*m).min(bounds.positivity_sum);
                bounds.ptolemy_sum = (*m).min(bounds.ptolemy_sum);
                bounds.jones_sum = (*m).min(bounds.jones_sum);
            }
            if let Some(m) = max_a_sum {
                bounds.closures_a_sum = *m;
            }
            if let Some(d) = depth {
                bounds.farey_depth = *d;
            }
            let names: Vec<String> = if suites.is_empty() {
                all_suite_names().iter().map(|s| s.to_string()).collect()
            } else {
                suites.clone()
            };
            let mut all_pass = true;
            for name in &names {
                let report = run_suite(name, &bounds)
                    .ok_or_else(|| CliError::usage(format!("unknown suite {name:?}")))?;
                writeln!(out, "{report}").ok();
                all_pass &= report.passed();
            }
            writeln!(out, "seed {}", bounds.seed).ok();
            if all_pass {
                Ok(())
            } else {
                Err(CliError::domain("verification failures"))
            }
        }
        Command::Conjectures { max_sum } => {
            let report = conjectures(*max_sum);
            writeln!(out, "{report}").ok();
            Ok(())
        }
    }
}

fn emit_expansion<W: Write>(out: &mut W, fmt: Format, kind: &str, coeffs: &[u64], text: &str) {
    match fmt {
        Format::Json => {
            let payload = json!({"kind": kind, "coeffs": coeffs});
            writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
        }
        _ => {
            writeln!(out, "{text}").ok();
        }
    }
}

fn emit_laurent<W: Write>(out: &mut W, fmt: Format, p: &LaurentPoly) {
    match fmt {
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&PolyJson::from(p)).unwrap()
            )
            .ok();
        }
        Format::Latex => {
            writeln!(out, "{}", LatexPoly(p)).ok();
        }
        Format::Text => {
            writeln!(out, "{p}").ok();
        }
    }
}

fn emit_counts<W: Write>(
    out: &mut W,
    fmt: Format,
    label: &str,
    counts: &[u64],
) -> Result<(), CliError> {
    let poly = IntPoly::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect());
    match fmt {
        Format::Json => {
            let payload = json!({"route": label, "counts": counts, "poly": PolyJson::from(&poly)});
            writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
        }
        Format::Latex => {
            writeln!(out, "{}", LatexPoly(&LaurentPoly::from(&poly))).ok();
        }
        Format::Text => {
            writeln!(out, "counts {counts:?}").ok();
            writeln!(out, "{poly}").ok();
        }
    }
    Ok(())
}

fn emit_sequence<W: Write>(
    out: &mut W,
    fmt: Format,
    kind: TriangleKind,
    n: u64,
    triangle: bool,
    csv: bool,
    bfile: bool,
) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::usage("index starts at 1"));
    }
    if triangle || csv || bfile {
        let rows = triangle_rows(kind, n);
        if bfile {
            let mut idx = 1u64;
            for row in &rows {
                for value in row {
                    writeln!(out, "{idx} {value}").ok();
                    idx += 1;
                }
            }
            return Ok(());
        }
        if csv {
            for row in &rows {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                writeln!(out, "{}", cells.join(",")).ok();
            }
            return Ok(());
        }
        match fmt {
            Format::Json => {
                let items: Vec<Vec<String>> = rows
                    .iter()
                    .map(|row| row.iter().map(|c| c.to_string()).collect())
                    .collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&items).unwrap()).ok();
            }
            _ => {
                for row in &rows {
                    let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                    writeln!(out, "{}", cells.join(" ")).ok();
                }
            }
        }
        return Ok(());
    }
    let (p, m) = match kind {
        TriangleKind::Fib | TriangleKind::FibMirror => crate::sequences::q_fibonacci(n),
        TriangleKind::Pell | TriangleKind::PellMirror => crate::sequences::q_pell(n),
    };
    match fmt {
        Format::Json => {
            let payload = json!({
                "n": n,
                "plain": PolyJson::from(&p),
                "mirror": PolyJson::from(&m),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&payload).unwrap()).ok();
        }
        _ => {
            writeln!(out, "plain:  {p}").ok();
            writeln!(out, "mirror: {m}").ok();
        }
    }
    Ok(())
}

/// Entry point used by `main`.
pub fn main_entry() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdout = std::io::stdout();
    let code = run(&args, &mut stdout);
    let _ = stdout.flush();
    code
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "latex" => Ok(Self::Latex),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}
