//! `diamond`: decide the diamond property for nilpotent Lie superalgebras
//! given by rational structure constants, with verified witnesses, plus a
//! calculator for the enveloping-algebra, Weyl-algebra and Clifford-algebra
//! arithmetic behind the decision.
//!
//! Exit codes: 0 success, 1 I/O or input-format errors, 2 mathematical
//! precondition failures (non-nilpotent input to the diamond criterion,
//! axiom violations in algebra files used as computation input, failed
//! witness searches over the rationals).

mod report;

use clap::{Args, Parser, Subcommand};
use diamond_core::classify::{classify_with_seed, verify_witness_detailed, ClassificationResult, ClassifyError};
use diamond_core::env::{supercentralizing_chain, EnvAlgebra, EnvError};
use diamond_core::exactmath::{format_rational, parse_rational};
use diamond_core::factors::{
    clifford_center_dim, heisenberg_to_weyl, stafford_alpha, CliffordElement, CliffordError,
    FactorsError, WeylElement, WeylError,
};
use diamond_core::indexcalc::{has_diamond_with_seed, index_with_seed, weyl_order, IndexError};
use diamond_core::liealg::{
    catalog, parse_algebra_str, parse_catalog_spec, to_canonical_json, CatalogError, FormatError,
    LieSuperAlgebra, Subspace,
};
use report::{functional_json, matrix_json, subspace_json, InputEcho, Report};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "diamond", version, about = "Diamond-property decisions for nilpotent Lie superalgebras")]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Algebra file (JSON structure-constant format)
    #[arg(long, conflicts_with = "catalog", conflicts_with = "batch")]
    algebra: Option<PathBuf>,
    /// Catalog name, e.g. h5, filiform:6, heis:2, heis_super:even,2,1
    #[arg(long, conflicts_with = "batch")]
    catalog: Option<String>,
    /// Directory of algebra files; processed in lexicographic order
    #[arg(long)]
    batch: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Seed for all randomized searches (fully determines the output)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Machine-readable output (one JSON object per report)
    #[arg(long, global = true)]
    json: bool,
    /// Include witness data (matrices, bases, functionals) in reports
    #[arg(long, global = true)]
    witness: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the grading, super-antisymmetry and super-Jacobi axioms
    Validate {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Lower central series, center and derived subalgebra dimensions
    Series {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Index of the even part, with a verified witness functional
    Index {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide the diamond property (nilpotent input only)
    Diamond {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Structural classification of the even part, with verified witness
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Multiply two enveloping-algebra elements (PBW normal form)
    EnvMul {
        #[command(flatten)]
        input: InputArgs,
        /// Left factor, e.g. "y1*x1"
        left: String,
        /// Right factor
        right: String,
    },
    /// Test supercentrality and extract a supercentral element
    EnvSupercentral {
        #[command(flatten)]
        input: InputArgs,
        /// Element expression, e.g. "x1*y1"
        element: String,
    },
    /// Build a supercentralizing chain for the span of the generators
    EnvChain {
        #[command(flatten)]
        input: InputArgs,
        /// Truncation degree
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// Generator expressions
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Weyl algebra arithmetic
    Weyl {
        /// Order n of A_n
        #[arg(long)]
        order: usize,
        #[command(subcommand)]
        op: WeylOp,
    },
    /// Clifford algebra arithmetic
    Clifford {
        /// Number of generators q of Cliff_q
        #[arg(long)]
        order: usize,
        #[command(subcommand)]
        op: CliffordOp,
    },
    /// Print a catalog algebra in the canonical file format
    CatalogDump {
        /// Catalog name, e.g. h5, filiform:6
        #[arg(long)]
        catalog: String,
    },
}

#[derive(Subcommand)]
enum WeylOp {
    /// Multiply two elements (names x1..xn, y1..yn)
    Mul { left: String, right: String },
    /// The explicit maximal-right-ideal generator candidate
    Stafford {
        /// Comma-separated nonzero rationals l_2..l_n
        #[arg(long)]
        lambdas: String,
    },
    /// Map an enveloping-algebra element of a Heisenberg algebra to A_n
    HeisMap {
        /// Catalog Heisenberg, e.g. heis:2
        #[arg(long)]
        catalog: String,
        /// Image of the central element, nonzero rational
        #[arg(long, default_value = "1")]
        scale: String,
        /// Element expression over the Heisenberg basis
        element: String,
    },
}

#[derive(Subcommand)]
enum CliffordOp {
    /// Multiply two elements (names e1..eq)
    Mul { left: String, right: String },
    /// Dimension of the (ordinary) center
    CenterDim,
}

/// Error wrapper carrying the exit code contract.
enum AppError {
    /// I/O, syntax, unknown names, bad usage.
    Input(String),
    /// Violated mathematical preconditions.
    Math(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Input(_) => 1,
            AppError::Math(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Input(m) | AppError::Math(m) => m,
        }
    }
}

impl From<FormatError> for AppError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Invalid(_) => AppError::Math(e.to_string()),
            other => AppError::Input(other.to_string()),
        }
    }
}

impl From<CatalogError> for AppError {
    fn from(e: CatalogError) -> Self {
        AppError::Input(e.to_string())
    }
}

impl From<IndexError> for AppError {
    fn from(e: IndexError) -> Self {
        AppError::Math(e.to_string())
    }
}

impl From<ClassifyError> for AppError {
    fn from(e: ClassifyError) -> Self {
        AppError::Math(e.to_string())
    }
}

impl From<EnvError> for AppError {
    fn from(e: EnvError) -> Self {
        match e {
            EnvError::Expr(inner) => AppError::Input(inner.to_string()),
            other => AppError::Math(other.to_string()),
        }
    }
}

impl From<WeylError> for AppError {
    fn from(e: WeylError) -> Self {
        match e {
            WeylError::Expr(inner) => AppError::Input(inner.to_string()),
            other => AppError::Input(other.to_string()),
        }
    }
}

impl From<CliffordError> for AppError {
    fn from(e: CliffordError) -> Self {
        AppError::Input(e.to_string())
    }
}

impl From<FactorsError> for AppError {
    fn from(e: FactorsError) -> Self {
        match e {
            FactorsError::Weyl(inner) => inner.into(),
            other => AppError::Math(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let common = cli.common;
    match cli.command {
        Command::Validate { input } => algebra_command("validate", input, common, cmd_validate),
        Command::Series { input } => algebra_command("series", input, common, cmd_series),
        Command::Index { input } => algebra_command("index", input, common, cmd_index),
        Command::Diamond { input } => algebra_command("diamond", input, common, cmd_diamond),
        Command::Classify { input } => algebra_command("classify", input, common, cmd_classify),
        Command::EnvMul { input, left, right } => {
            let (g, echo) = load_single(&input)?;
            let started = Instant::now();
            let env = EnvAlgebra::new(g)?;
            let product = env.parse_element(&left)?.mul(&env.parse_element(&right)?)?;
            let report = Report {
                command: "env-mul".to_string(),
                input: echo,
                seed: None,
                verdict: json!({
                    "left": left,
                    "right": right,
                    "product": product.to_string(),
                }),
                witness: None,
                elapsed_ms: started.elapsed().as_millis(),
            };
            emit(&report, common.json);
            Ok(())
        }
        Command::EnvSupercentral { input, element } => {
            let (g, echo) = load_single(&input)?;
            let started = Instant::now();
            let env = EnvAlgebra::new(g)?;
            let parsed = env.parse_element(&element)?;
            let supercentral = env.is_supercentral(&parsed);
            let extracted = env.extract_supercentral(&parsed)?;
            let report = Report {
                command: "env-supercentral".to_string(),
                input: echo,
                seed: None,
                verdict: json!({
                    "element": element,
                    "supercentral": supercentral,
                    "extracted": extracted.to_string(),
                    "extracted_supercentral": env.is_supercentral(&extracted),
                }),
                witness: None,
                elapsed_ms: started.elapsed().as_millis(),
            };
            emit(&report, common.json);
            Ok(())
        }
        Command::EnvChain { input, degree, gens } => {
            let (g, echo) = load_single(&input)?;
            let started = Instant::now();
            let env = EnvAlgebra::new(g)?;
            let parsed: Result<Vec<_>, EnvError> =
                gens.iter().map(|s| env.parse_element(s)).collect();
            let result = supercentralizing_chain(&env, &parsed?, degree)?;
            let report = Report {
                command: "env-chain".to_string(),
                input: echo,
                seed: None,
                verdict: json!({
                    "generators": gens,
                    "degree_bound": degree,
                    "complete": result.complete,
                    "length": result.elements.len(),
                    "elements": result.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                    "blocked": result.blocked,
                    "span_dim": result.ideal.span().dim(),
                }),
                witness: None,
                elapsed_ms: started.elapsed().as_millis(),
            };
            emit(&report, common.json);
            Ok(())
        }
        Command::Weyl { order, op } => {
            let started = Instant::now();
            let (verdict, echo) = match op {
                WeylOp::Mul { left, right } => {
                    let product = WeylElement::parse(order, &left)?
                        .mul(&WeylElement::parse(order, &right)?)?;
                    (
                        json!({"left": left, "right": right, "product": product.to_string()}),
                        InputEcho::new(format!("weyl:{order}"), &format!("{left}|{right}")),
                    )
                }
                WeylOp::Stafford { lambdas } => {
                    let parsed: Result<Vec<_>, _> =
                        lambdas.split(',').map(|t| parse_rational(t.trim())).collect();
                    let parsed = parsed.map_err(|e| AppError::Input(e.to_string()))?;
                    let alpha = stafford_alpha(order, &parsed)?;
                    (
                        json!({
                            "lambdas": lambdas,
                            "alpha": alpha.to_string(),
                            "terms": alpha.num_terms(),
                            "degree": alpha.degree(),
                        }),
                        InputEcho::new(format!("weyl:{order}"), &lambdas),
                    )
                }
                WeylOp::HeisMap { catalog: name, scale, element } => {
                    let spec = parse_catalog_spec(&name)?;
                    let g = catalog(&spec)?;
                    let env = EnvAlgebra::new(g)?;
                    let parsed = env.parse_element(&element)?;
                    let scale = parse_rational(&scale).map_err(|e| AppError::Input(e.to_string()))?;
                    let image = heisenberg_to_weyl(&parsed, &scale)?;
                    if image.order() != order {
                        return Err(AppError::Input(format!(
                            "catalog {name} maps onto order {} but --order {order} was given",
                            image.order()
                        )));
                    }
                    (
                        json!({
                            "element": element,
                            "scale": format_rational(&scale),
                            "image": image.to_string(),
                        }),
                        InputEcho::new(format!("weyl:{order}"), &format!("{name}|{scale}|{element}")),
                    )
                }
            };
            let report = Report {
                command: "weyl".to_string(),
                input: echo,
                seed: None,
                verdict,
                witness: None,
                elapsed_ms: started.elapsed().as_millis(),
            };
            emit(&report, common.json);
            Ok(())
        }
        Command::Clifford { order, op } => {
            let started = Instant::now();
            let verdict = match op {
                CliffordOp::Mul { left, right } => {
                    let product = CliffordElement::parse(order, &left)?
                        .mul(&CliffordElement::parse(order, &right)?)?;
                    json!({"left": left, "right": right, "product": product.to_string()})
                }
                CliffordOp::CenterDim => {
                    json!({"center_dim": clifford_center_dim(order), "dimension": 1u64 << order})
                }
            };
            let report = Report {
                command: "clifford".to_string(),
                input: InputEcho::new(format!("clifford:{order}"), &order.to_string()),
                seed: None,
                verdict,
                witness: None,
                elapsed_ms: started.elapsed().as_millis(),
            };
            emit(&report, common.json);
            Ok(())
        }
        Command::CatalogDump { catalog: name } => {
            let spec = parse_catalog_spec(&name)?;
            let g = catalog(&spec)?;
            println!("{}", to_canonical_json(&g));
            Ok(())
        }
    }
}

type AlgebraHandler = fn(&LieSuperAlgebra, &CommonArgs) -> Result<(Value, Option<Value>), AppError>;

fn algebra_command(
    name: &str,
    input: InputArgs,
    common: CommonArgs,
    handler: AlgebraHandler,
) -> Result<(), AppError> {
    if let Some(dir) = &input.batch {
        let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(|e| AppError::Input(format!("cannot read {}: {e}", dir.display())))?
            .filter_map(|r| r.ok().map(|d| d.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        entries.sort();
        if entries.is_empty() {
            return Err(AppError::Input(format!("no .json files in {}", dir.display())));
        }
        let mut worst: Option<AppError> = None;
        for path in entries {
            match run_one_file(name, &path, &common, handler) {
                Ok(()) => {}
                Err(e) => {
                    eprintln!("error [{}]: {}", path.display(), e.message());
                    if worst.as_ref().is_none_or(|w| e.code() > w.code()) {
                        worst = Some(e);
                    }
                }
            }
        }
        return match worst {
            None => Ok(()),
            Some(e) => Err(e),
        };
    }

    let (g, echo) = load_single(&input)?;
    let started = Instant::now();
    if name == "validate" {
        // validation outcome is the verdict, not an error
        let report = build_validation_report(&g, echo, started);
        emit(&report, common.json);
        return Ok(());
    }
    g.validate().map_err(|v| AppError::Math(format!("algebra axiom violated: {v}")))?;
    let (verdict, witness) = handler(&g, &common)?;
    let report = Report {
        command: name.to_string(),
        input: echo,
        seed: Some(common.seed),
        verdict,
        witness: if common.witness { witness } else { None },
        elapsed_ms: started.elapsed().as_millis(),
    };
    emit(&report, common.json);
    Ok(())
}

fn run_one_file(
    name: &str,
    path: &Path,
    common: &CommonArgs,
    handler: AlgebraHandler,
) -> Result<(), AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Input(format!("cannot read {}: {e}", path.display())))?;
    let started = Instant::now();
    if name == "validate" {
        let g = diamond_core::liealg::read_algebra_str(&text)?;
        let echo = InputEcho::new(format!("file:{}", path.display()), &text);
        let report = build_validation_report(&g, echo, started);
        emit(&report, common.json);
        return Ok(());
    }
    let g = parse_algebra_str(&text)?;
    let echo = InputEcho::new(format!("file:{}", path.display()), &to_canonical_json(&g));
    let (verdict, witness) = handler(&g, common)?;
    let report = Report {
        command: name.to_string(),
        input: echo,
        seed: Some(common.seed),
        verdict,
        witness: if common.witness { witness } else { None },
        elapsed_ms: started.elapsed().as_millis(),
    };
    emit(&report, common.json);
    Ok(())
}

fn build_validation_report(g: &LieSuperAlgebra, echo: InputEcho, started: Instant) -> Report {
    let verdict = match g.validate() {
        Ok(()) => json!({"ok": true}),
        Err(v) => json!({"ok": false, "violation": v.to_string()}),
    };
    Report {
        command: "validate".to_string(),
        input: echo,
        seed: None,
        verdict,
        witness: None,
        elapsed_ms: started.elapsed().as_millis(),
    }
}

fn load_single(input: &InputArgs) -> Result<(LieSuperAlgebra, InputEcho), AppError> {
    match (&input.algebra, &input.catalog) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| AppError::Input(format!("cannot read {}: {e}", path.display())))?;
            // structural parse; axiom validation is the caller's business
            let g = diamond_core::liealg::read_algebra_str(&text)?;
            let echo = InputEcho::new(format!("file:{}", path.display()), &to_canonical_json(&g));
            Ok((g, echo))
        }
        (None, Some(name)) => {
            let spec = parse_catalog_spec(name)?;
            let g = catalog(&spec)?;
            let echo = InputEcho::new(format!("catalog:{name}"), &to_canonical_json(&g));
            Ok((g, echo))
        }
        _ => Err(AppError::Input(
            "exactly one of --algebra <path> or --catalog <name> is required".to_string(),
        )),
    }
}

fn cmd_validate(_: &LieSuperAlgebra, _: &CommonArgs) -> Result<(Value, Option<Value>), AppError> {
    unreachable!("validate is special-cased")
}

fn cmd_series(g: &LieSuperAlgebra, _: &CommonArgs) -> Result<(Value, Option<Value>), AppError> {
    let series = g.lower_central_series();
    let dims: Vec<usize> = series.iter().map(Subspace::dim).collect();
    let (nilpotent, class) = g.is_nilpotent();
    let center = g.center();
    let derived = g.derived_subalgebra();
    let verdict = json!({
        "dim_even": g.dim_even(),
        "dim_odd": g.dim_odd(),
        "series_dims": dims,
        "nilpotent": nilpotent,
        "class": class,
        "center_dim": center.dim(),
        "derived_dim": derived.dim(),
    });
    let witness = json!({
        "series": series.iter().map(subspace_json).collect::<Vec<_>>(),
        "center": subspace_json(&center),
        "derived": subspace_json(&derived),
    });
    Ok((verdict, Some(witness)))
}

fn cmd_index(g: &LieSuperAlgebra, common: &CommonArgs) -> Result<(Value, Option<Value>), AppError> {
    let even = g.even_part();
    let report = index_with_seed(&even, common.seed)?;
    let p = weyl_order(&even, &report.witness)?;
    let verdict = json!({
        "dim_even": even.dim(),
        "index": report.index,
        "generic_rank": report.generic_rank,
        "weyl_order": p,
    });
    let witness = json!({
        "functional": functional_json(&report.witness),
        "stabilizer_dim": report.index,
    });
    Ok((verdict, Some(witness)))
}

fn cmd_diamond(g: &LieSuperAlgebra, common: &CommonArgs) -> Result<(Value, Option<Value>), AppError> {
    let diamond = has_diamond_with_seed(g, common.seed)?;
    let even = g.even_part();
    let report = index_with_seed(&even, common.seed)?;
    let verdict = json!({
        "diamond": diamond,
        "dim_even": even.dim(),
        "index": report.index,
    });
    let witness = json!({"functional": functional_json(&report.witness)});
    Ok((verdict, Some(witness)))
}

fn cmd_classify(g: &LieSuperAlgebra, common: &CommonArgs) -> Result<(Value, Option<Value>), AppError> {
    let even = g.even_part();
    let result = classify_with_seed(&even, common.seed)?;
    verify_witness_detailed(&even, &result)
        .map_err(|e| AppError::Math(format!("witness failed verification: {e}")))?;
    let verdict = match &result {
        ClassificationResult::Abelian { dim } => json!({
            "kind": "Abelian", "dim_even": dim, "diamond": true,
        }),
        ClassificationResult::AbelianCodimOne { ideal } => json!({
            "kind": "AbelianCodimOne", "ideal_dim": ideal.dim(), "diamond": true,
        }),
        ClassificationResult::H5Factor { abelian_dims, .. } => json!({
            "kind": "H5Factor", "abelian_dims": [abelian_dims.0, abelian_dims.1], "diamond": true,
        }),
        ClassificationResult::H6Factor { abelian_dims, .. } => json!({
            "kind": "H6Factor", "abelian_dims": [abelian_dims.0, abelian_dims.1], "diamond": true,
        }),
        ClassificationResult::NotAlmostMaximal { index, dim } => json!({
            "kind": "NotAlmostMaximal", "index": index, "dim_even": dim, "diamond": false,
        }),
    };
    let witness = match &result {
        ClassificationResult::AbelianCodimOne { ideal } => Some(json!({"ideal": subspace_json(ideal)})),
        ClassificationResult::H5Factor { change_of_basis, .. }
        | ClassificationResult::H6Factor { change_of_basis, .. } => {
            Some(json!({"change_of_basis": matrix_json(change_of_basis)}))
        }
        _ => None,
    };
    Ok((verdict, witness))
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_human());
    }
}
