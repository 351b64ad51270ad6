//! Argument grammar and dispatch. Exit codes: 0 on success or pass, 1 when a
//! verification fails or an internal invariant is violated, 2 on usage and
//! parse errors.

use clap::{Args, Parser, Subcommand};

use baseloci_core::base_loci::SplitBundle;
use baseloci_core::chern::{
    ch_split_bundle, ch_split_degrees, exp_lc, lc, lc_add, GradedClass, LogClass,
};
use baseloci_core::cohomology::SplitDegrees;
use baseloci_core::config::parse_surface_config;
use baseloci_core::lattice::{presets, DivisorClass, SurfaceLattice};
use baseloci_core::parse::parse_class;
use baseloci_core::schur::{
    kostka, pieri_summand_certificate, tensor_power_decomposition, witness_exponents, Partition,
};
use baseloci_core::zariski::{decompose, Zariski};
use baseloci_core::Error;

use crate::output::{render_certificate, render_report, Format, Node};
use crate::suites;

#[derive(Debug, Parser)]
#[command(
    name = "baseloci",
    about = "Exact Zariski decompositions, base loci and positivity certificates on explicit surfaces",
    version
)]
pub struct Cli {
    /// Output style for reports and certificates
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Show a surface lattice, or analyze one class on it
    Lattice {
        /// Preset name (`p2`, `p2-double-blowup`) or path to a `.surface` file
        surface: String,
        /// A class to analyze, e.g. `2L - F̄ + 3/2F′` (aliases `Fb`, `Fp`)
        #[arg(long)]
        class: Option<String>,
    },
    /// Zariski decomposition of a rational class
    Zariski { surface: String, class: String },
    /// Augmented and diminished base loci of a class or a split bundle
    Baselocus {
        surface: String,
        #[arg(long, conflicts_with = "bundle")]
        divisor: Option<String>,
        /// Comma-separated summand classes, e.g. `L+Fb, 0`
        #[arg(long)]
        bundle: Option<String>,
        /// Rational twist class applied to every summand
        #[arg(long, requires = "bundle")]
        twist: Option<String>,
    },
    /// Partition and Schur-functor combinatorics
    Schur {
        #[command(subcommand)]
        command: SchurCommand,
    },
    /// Chern and log-Chern characters of split bundles
    Chern {
        #[command(subcommand)]
        command: ChernCommand,
    },
    /// Run a verification certificate
    Verify {
        /// One of: b-minus-example, b-plus-example, l-counter, pullback,
        /// zariski-properties, base-loci-laws, chern-laws, schur-suite, all
        target: String,
        #[command(flatten)]
        options: VerifyOptions,
    },
}

#[derive(Debug, Args)]
pub struct VerifyOptions {
    /// Seed for the randomized suites (printed in the certificate)
    #[arg(long, default_value_t = suites::DEFAULT_SEED)]
    pub seed: u64,
    /// Cases for the randomized suites
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, default_value_t = 6)]
    pub n_max: u32,
    #[arg(long, default_value_t = 6)]
    pub l_max: u32,
}

#[derive(Debug, Subcommand)]
pub enum SchurCommand {
    /// Schur summands of the n-th tensor power at rank r
    Decompose { n: u32, r: u32 },
    /// Kostka number for a shape and a content, both comma-separated
    Kostka { lambda: String, mu: String },
    /// Multiplicity of the shape in the product of its symmetric powers
    Pieri { lambda: String, r: u32 },
    /// Exponent bookkeeping for a shape of weight M*q
    Witness {
        lambda: String,
        m: u32,
        q: u32,
        #[arg(name = "M")]
        big_m: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChernCommand {
    /// Chern character of a split bundle
    Ch {
        /// `p1`, `p2`, ... for projective space (bundle = integer degrees),
        /// or a surface preset/file (bundle = class expressions)
        space: String,
        bundle: String,
        #[arg(long)]
        twist: Option<String>,
    },
    /// Log-Chern character of a split bundle
    Lc {
        space: String,
        bundle: String,
        #[arg(long)]
        twist: Option<String>,
    },
    /// Check lc(E⊗F) = lc(E) ⊞ lc(F) on a concrete pair
    CheckAdditivity {
        space: String,
        bundle1: String,
        bundle2: String,
    },
}

/// Runs the CLI against explicit arguments, writing to the given sinks.
/// Returns the process exit code.
pub fn run<O: std::io::Write, E: std::io::Write>(
    args: &[String],
    out: &mut O,
    err: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(clap_err) => {
            let rendered = clap_err.render().to_string();
            if clap_err.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                return 2;
            }
            // help and version requests exit cleanly
            let _ = out.write_all(rendered.as_bytes());
            return 0;
        }
    };
    match dispatch(&cli) {
        Ok(Outcome::Pass(text)) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Ok(Outcome::Fail(text)) => {
            let _ = out.write_all(text.as_bytes());
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvariantViolation(_) => 1,
                _ => 2,
            }
        }
    }
}

pub enum Outcome {
    Pass(String),
    Fail(String),
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Lattice { surface, class } => {
            let lattice = load_surface(surface)?;
            match class {
                None => Ok(Outcome::Pass(render_report(
                    &format!("lattice {}", lattice.name()),
                    &lattice_node(&lattice),
                    format,
                ))),
                Some(expr) => {
                    let d = parse_class(&lattice, expr)?;
                    Ok(Outcome::Pass(render_report(
                        &format!("class {d} on {}", lattice.name()),
                        &class_node(&d)?,
                        format,
                    )))
                }
            }
        }
        Command::Zariski { surface, class } => {
            let lattice = load_surface(surface)?;
            let d = parse_class(&lattice, class)?;
            Ok(Outcome::Pass(render_report(
                &format!("zariski {d} on {}", lattice.name()),
                &zariski_node(&d)?,
                format,
            )))
        }
        Command::Baselocus {
            surface,
            divisor,
            bundle,
            twist,
        } => {
            let lattice = load_surface(surface)?;
            match (divisor, bundle) {
                (Some(expr), None) => {
                    let d = parse_class(&lattice, expr)?;
                    let node = Node::map(vec![
                        ("class", Node::leaf(&d)),
                        ("b_minus", Node::leaf(d.b_minus()?)),
                        ("b_plus", Node::leaf(d.b_plus()?)),
                        ("big", Node::leaf(d.is_big()?)),
                        ("psef", Node::leaf(d.is_psef())),
                    ]);
                    Ok(Outcome::Pass(render_report(
                        &format!("baselocus {d} on {}", lattice.name()),
                        &node,
                        format,
                    )))
                }
                (None, Some(list)) => {
                    let e = parse_bundle(&lattice, list, twist.as_deref())?;
                    let node = bundle_node(&e)?;
                    Ok(Outcome::Pass(render_report(
                        &format!("baselocus bundle on {}", lattice.name()),
                        &node,
                        format,
                    )))
                }
                _ => Err(Error::domain(
                    "exactly one of --divisor or --bundle is required",
                )),
            }
        }
        Command::Schur { command } => schur_command(command, format),
        Command::Chern { command } => chern_command(command, format),
        Command::Verify { target, options } => verify_command(target, options, format),
    }
}

pub fn load_surface(name: &str) -> Result<SurfaceLattice, Error> {
    if let Some(preset) = presets::by_name(name) {
        return Ok(preset);
    }
    let text = std::fs::read_to_string(name)
        .map_err(|e| Error::domain(format!("cannot read surface file `{name}`: {e}")))?;
    parse_surface_config(&text)
}

fn parse_bundle(
    lattice: &SurfaceLattice,
    list: &str,
    twist: Option<&str>,
) -> Result<SplitBundle, Error> {
    let summands = list
        .split(',')
        .map(|expr| parse_class(lattice, expr))
        .collect::<Result<Vec<_>, _>>()?;
    let twist = match twist {
        Some(expr) => parse_class(lattice, expr)?,
        None => lattice.zero_class(),
    };
    SplitBundle::new(summands, twist)
}

fn lattice_node(lattice: &SurfaceLattice) -> Node {
    let gram = Node::List(
        lattice
            .gram()
            .iter()
            .map(|row| {
                Node::leaf(
                    row.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                )
            })
            .collect(),
    );
    let curves = Node::List(
        lattice
            .curve_catalog()
            .iter()
            .map(|c| {
                Node::leaf(format!(
                    "{} = {} (self-intersection {})",
                    c.label, c.class, c.self_intersection
                ))
            })
            .collect(),
    );
    let mori = Node::List(
        lattice
            .mori_generators()
            .iter()
            .map(Node::leaf)
            .collect(),
    );
    Node::map(vec![
        ("name", Node::leaf(lattice.name())),
        ("rank", Node::leaf(lattice.rank())),
        ("basis", Node::leaf(lattice.basis_labels().join(" "))),
        ("gram", gram),
        ("curves", curves),
        ("mori_generators", mori),
        ("polarization", Node::leaf(lattice.polarization())),
    ])
}

fn class_node(d: &DivisorClass) -> Result<Node, Error> {
    Ok(Node::map(vec![
        ("class", Node::leaf(d)),
        ("self_intersection", Node::leaf(d.self_intersection())),
        (
            "degree_on_polarization",
            Node::leaf(d.intersect(&d.lattice().polarization())?),
        ),
        ("nef", Node::leaf(d.is_nef())),
        ("ample", Node::leaf(d.is_ample())),
        ("psef", Node::leaf(d.is_psef())),
        ("big", Node::leaf(d.is_big()?)),
    ]))
}

fn zariski_node(d: &DivisorClass) -> Result<Node, Error> {
    match decompose(d)? {
        Zariski::NotPseudoeffective => Ok(Node::map(vec![
            ("input", Node::leaf(d)),
            ("pseudoeffective", Node::leaf(false)),
        ])),
        Zariski::Decomposition(z) => {
            let negative = Node::List(
                z.negative()
                    .iter()
                    .map(|(label, mult)| Node::leaf(format!("{label}: {mult}")))
                    .collect(),
            );
            let invariants = Node::List(
                z.verify_invariants()?
                    .iter()
                    .map(|name| Node::leaf(name))
                    .collect(),
            );
            Ok(Node::map(vec![
                ("input", Node::leaf(d)),
                ("pseudoeffective", Node::leaf(true)),
                ("positive", Node::leaf(z.positive())),
                (
                    "negative",
                    if z.negative().is_empty() {
                        Node::leaf("(none)")
                    } else {
                        negative
                    },
                ),
                ("verified_invariants", invariants),
            ]))
        }
    }
}

fn bundle_node(e: &SplitBundle) -> Result<Node, Error> {
    let summands = Node::List(e.summands().iter().map(Node::leaf).collect());
    Ok(Node::map(vec![
        ("rank", Node::leaf(e.rank())),
        ("summands", summands),
        ("twist", Node::leaf(e.twist())),
        ("b_minus", Node::leaf(e.b_minus()?)),
        ("b_plus", Node::leaf(e.b_plus()?)),
        ("v_big", Node::leaf(e.is_v_big()?)),
        ("v_psef", Node::leaf(e.is_v_psef()?)),
    ]))
}

fn schur_command(command: &SchurCommand, format: Format) -> Result<Outcome, Error> {
    match command {
        SchurCommand::Decompose { n, r } => {
            if *n == 0 || *r == 0 {
                return Err(Error::domain("n and r must be positive"));
            }
            if *n > 20 || *r > 8 {
                return Err(Error::domain(
                    "supported range is n <= 20, r <= 8 (exact machine counting)",
                ));
            }
            let summands = tensor_power_decomposition(*n, *r);
            let total: u128 = summands
                .iter()
                .map(|s| s.tableau_multiplicity as u128 * s.dimension_at_rank(*r) as u128)
                .sum();
            let list = Node::List(
                summands
                    .iter()
                    .map(|s| {
                        Node::leaf(format!(
                            "{} multiplicity {} dimension {}",
                            s.partition,
                            s.tableau_multiplicity,
                            s.dimension_at_rank(*r)
                        ))
                    })
                    .collect(),
            );
            let node = Node::map(vec![
                ("summands", list),
                ("total_dimension", Node::leaf(total)),
                ("expected_total", Node::leaf((*r as u128).pow(*n))),
            ]);
            Ok(Outcome::Pass(render_report(
                &format!("tensor power decomposition n={n} r={r}"),
                &node,
                format,
            )))
        }
        SchurCommand::Kostka { lambda, mu } => {
            let shape: Partition = lambda.parse()?;
            let content: Partition = mu.parse()?;
            if shape.weight() > 12 {
                return Err(Error::domain(
                    "tableaux are enumerated one by one; supported weight is <= 12",
                ));
            }
            let value = kostka(&shape, content.parts())?;
            let node = Node::map(vec![
                ("shape", Node::leaf(&shape)),
                ("content", Node::leaf(&content)),
                ("kostka", Node::leaf(value)),
            ]);
            Ok(Outcome::Pass(render_report(
                &format!("kostka {shape} {content}"),
                &node,
                format,
            )))
        }
        SchurCommand::Pieri { lambda, r } => {
            let shape: Partition = lambda.parse()?;
            let value = pieri_summand_certificate(&shape, *r)?;
            let node = Node::map(vec![
                ("shape", Node::leaf(&shape)),
                ("rank", Node::leaf(r)),
                ("multiplicity", Node::leaf(value)),
                ("direct_summand", Node::leaf(value >= 1)),
            ]);
            Ok(Outcome::Pass(render_report(
                &format!("pieri certificate {shape} at rank {r}"),
                &node,
                format,
            )))
        }
        SchurCommand::Witness {
            lambda,
            m,
            q,
            big_m,
        } => {
            let shape: Partition = lambda.parse()?;
            let w = witness_exponents(&shape, *m, *q, *big_m)?;
            let node = Node::map(vec![
                ("shape", Node::leaf(&shape)),
                (
                    "a",
                    Node::leaf(
                        w.a.iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(","),
                    ),
                ),
                (
                    "b",
                    Node::leaf(
                        w.b.iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(","),
                    ),
                ),
                ("lhs", Node::leaf(&w.lhs)),
                ("rhs", Node::leaf(&w.rhs)),
                ("identity_holds", Node::leaf(w.lhs == w.rhs)),
            ]);
            Ok(Outcome::Pass(render_report(
                &format!("witness exponents {shape} m={m} q={q} M={big_m}"),
                &node,
                format,
            )))
        }
    }
}

/// `p1`, `p2`, ... name projective spaces.
fn projective_dim(space: &str) -> Option<usize> {
    let digits = space.strip_prefix('p')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&d| d >= 1)
}

/// Either a projective-space ch (from integer degrees) or a surface ch
/// (from class expressions).
fn parse_chern_input(space: &str, bundle: &str) -> Result<GradedClass, Error> {
    if let Some(dim) = projective_dim(space) {
        let degrees = bundle
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::domain(format!("invalid degree `{d}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let split = SplitDegrees::new(dim, degrees.into_iter().map(|d| (d, 1)).collect())?;
        return ch_split_degrees(&split);
    }
    let lattice = load_surface(space)?;
    let e = parse_bundle(&lattice, bundle, None)?;
    ch_split_bundle(&e)
}

fn graded_node(x: &GradedClass) -> Node {
    Node::List(
        (0..=x.ring().dimension())
            .map(|k| {
                let piece = x.component(k);
                let rendered = if piece.len() == 1 {
                    piece[0].to_string()
                } else {
                    format!(
                        "({})",
                        piece
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                };
                Node::leaf(format!("degree {k}: {rendered}"))
            })
            .collect(),
    )
}

fn log_node(l: &LogClass) -> Node {
    Node::map(vec![
        ("rank", Node::leaf(l.rank())),
        ("higher", graded_node(l.higher())),
        (
            "degree_one",
            Node::leaf(
                l.degree_one()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
        ),
    ])
}

fn chern_command(command: &ChernCommand, format: Format) -> Result<Outcome, Error> {
    match command {
        ChernCommand::Ch {
            space,
            bundle,
            twist,
        } => {
            let mut x = parse_chern_input(space, bundle)?;
            if let Some(t) = twist {
                x = apply_twist(&x, t)?;
            }
            let node = Node::map(vec![
                ("space", Node::leaf(space)),
                ("components", graded_node(&x)),
            ]);
            Ok(Outcome::Pass(render_report(
                &format!("ch of {bundle} on {space}"),
                &node,
                format,
            )))
        }
        ChernCommand::Lc {
            space,
            bundle,
            twist,
        } => {
            let mut x = parse_chern_input(space, bundle)?;
            if let Some(t) = twist {
                x = apply_twist(&x, t)?;
            }
            let l = lc(&x)?;
            let node = log_node(&l);
            Ok(Outcome::Pass(render_report(
                &format!("lc of {bundle} on {space}"),
                &node,
                format,
            )))
        }
        ChernCommand::CheckAdditivity {
            space,
            bundle1,
            bundle2,
        } => {
            let a = parse_chern_input(space, bundle1)?;
            let b = parse_chern_input(space, bundle2)?;
            let product = a.mul(&b);
            let additive = lc_add(&lc(&a)?, &lc(&b)?)?;
            let holds = lc(&product)? == additive && exp_lc(&additive) == product;
            let node = Node::map(vec![
                ("lc_of_product", log_node(&lc(&product)?)),
                ("sum_of_lcs", log_node(&additive)),
                ("additivity_holds", Node::leaf(holds)),
            ]);
            let rendered = render_report(
                &format!("lc additivity for {bundle1} ⊗ {bundle2} on {space}"),
                &node,
                format,
            );
            if holds {
                Ok(Outcome::Pass(rendered))
            } else {
                Ok(Outcome::Fail(rendered))
            }
        }
    }
}

fn apply_twist(x: &GradedClass, twist: &str) -> Result<GradedClass, Error> {
    let coeffs = match x.ring().surface_lattice() {
        Some(lattice) => parse_class(lattice, twist)?.coeffs().to_vec(),
        None => vec![twist
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("invalid rational twist `{twist}`")))?],
    };
    let line = x.ring().degree_one(coeffs)?;
    Ok(x.mul(&line.exp_nilpotent()))
}

fn verify_command(
    target: &str,
    options: &VerifyOptions,
    format: Format,
) -> Result<Outcome, Error> {
    let seed = options.seed;
    let certs = match target {
        "b-minus-example" => vec![suites::b_minus_example()?],
        "b-plus-example" => vec![suites::b_plus_example()?],
        "l-counter" => vec![suites::l_counter(options.n_max, options.l_max)?],
        "pullback" => vec![suites::pullback_suite()?],
        "zariski-properties" => {
            vec![suites::zariski_properties(seed, options.count.unwrap_or(200))?]
        }
        "base-loci-laws" => vec![suites::base_loci_laws(seed, options.count.unwrap_or(100))?],
        "chern-laws" => vec![suites::chern_laws(seed, options.count.unwrap_or(100))?],
        "schur-suite" => vec![suites::schur_suite()?],
        "all" => suites::all_suites(seed, options.n_max, options.l_max)?,
        other => {
            return Err(Error::domain(format!(
                "unknown verification target `{other}`"
            )))
        }
    };
    let mut text = String::new();
    let mut all_pass = true;
    for cert in &certs {
        text.push_str(&render_certificate(cert, format));
        all_pass &= cert.passed();
    }
    if all_pass {
        Ok(Outcome::Pass(text))
    } else {
        Ok(Outcome::Fail(text))
    }
}
