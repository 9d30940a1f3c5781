//! Command-line front end. `run` parses arguments, writes results to `out`
//! and diagnostics to `err`, and returns the process exit code.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::checks::{run_check, CheckKind, CheckOptions, CheckReport};
use crate::decide::{equals_parent, is_full, DecideOptions, DecisionReport};
use crate::dynkin::{guaranteed_constituents, minimal_chains, part_weight};
use crate::error::{Error, Result};
use crate::matrixrep::{
    commutant_dimension, commutant_dimension_group, isotypic_profile, lie_closure, load_rep,
    rep_to_json, split_reductive, standard_generators, tensor_square, tensor_with_dual, Backend,
    ClassicalFamily, CommutantOptions, CommutantResult, IsotypicProfile, MatrixRep, ProfileOptions,
    DEFAULT_SEED, DEFAULT_TOLERANCE,
};
use crate::par::Execution;
use crate::repdecomp::{
    dim_semisimple, dual_weight_semisimple, non_self_dual, scan_tables_with, square,
    tensor_decompose, Decomposition, ScanRow, SquareKind,
};
use crate::reptype::{fs_oracle, malcev_class, RepClass};
use crate::rootsys::{SemisimpleAlgebra, Weight};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "liesq",
    version,
    about = "Highest-weight calculus and tensor-square commutant tests"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Linear-algebra backend for matrix commands (default: exact up to
    /// 36×36 matrices, float beyond; LIESQ_BACKEND overrides).
    #[arg(long, global = true)]
    backend: Option<Backend>,
    /// Float tolerance (ignored by the exact backend).
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    /// Seed for randomized steps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Disable data parallelism.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Dimension of an irreducible representation.
    Dim { algebra: String, weight: String },
    /// Decompose the tensor product of two irreducibles.
    Decompose {
        algebra: String,
        left: String,
        right: String,
    },
    /// Alternating or symmetric square of an irreducible.
    Square {
        #[arg(long, conflicts_with = "sym", required_unless_present = "sym")]
        alt: bool,
        #[arg(long)]
        sym: bool,
        algebra: String,
        weight: String,
    },
    /// Highest weight of the dual representation.
    Dual { algebra: String, weight: String },
    /// Orthogonal, symplectic or unitary type.
    Classify {
        algebra: String,
        weight: String,
        /// Confirm with invariant forms in the squares.
        #[arg(long)]
        verify: bool,
    },
    /// Minimal chains and the constituents they guarantee.
    Chains {
        algebra: String,
        left: String,
        right: String,
    },
    /// Subalgebra and weight after deleting Dynkin nodes (1-based).
    Parts {
        algebra: String,
        weight: String,
        #[arg(long, value_delimiter = ',', required = true)]
        delete: Vec<usize>,
    },
    /// Irreducible rows of the alternating or symmetric square scan.
    Tables {
        #[arg(long)]
        kind: SquareKind,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = 3)]
        max_sum: u32,
        /// Keep only representations that are not self-dual.
        #[arg(long)]
        non_self_dual: bool,
    },
    /// Commutant dimension of a matrix set.
    Commutant(MatrixArgs),
    /// Lie closure of a matrix set.
    Closure {
        #[arg(long)]
        input: PathBuf,
        /// Also split off the center.
        #[arg(long)]
        split: bool,
    },
    /// Isotypic block structure.
    Profile(MatrixArgs),
    /// Decide whether generators span the full algebra.
    Decide {
        procedure: Procedure,
        /// Matrix size (defaults to the size of the input matrices).
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        input: PathBuf,
        /// Parent generators for `parent`.
        #[arg(long, required_if_eq("procedure", "parent"))]
        parent: Option<PathBuf>,
        /// Compare with the Lie closure.
        #[arg(long)]
        cross_check: bool,
        /// Take semisimplicity of the parent on trust.
        #[arg(long)]
        assume_semisimple: bool,
    },
    /// Run property sweeps.
    Check {
        /// One of cz, two-norm, kw, malcev-fs, alt-sym, constituents,
        /// subordination, parts, ptranspose, or all.
        kind: String,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 2)]
        max_sum: u32,
        /// Add fixed cases up to rank 8.
        #[arg(long)]
        spot: bool,
    },
    /// Standard basis of su(n), so(n) or sp(ℓ) as a matrix file.
    Generators {
        family: ClassicalFamily,
        size: usize,
    },
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[arg(long)]
    input: PathBuf,
    /// Representation to analyze, built from the input matrices.
    #[arg(long, value_enum, default_value_t = Construct::None)]
    construct: Construct,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construct {
    /// The matrices as given.
    None,
    /// `A⊗1 + 1⊗A`.
    TensorSquare,
    /// `A⊗1 − 1⊗Aᵀ`.
    WithDual,
    /// Unitaries `U⊗U` (commutant only).
    Group,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Procedure {
    Su,
    So,
    Sp,
    Parent,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimOutput {
    pub algebra: String,
    pub weight: Weight,
    pub dim: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualOutput {
    pub algebra: String,
    pub weight: Weight,
    pub dual: Weight,
    pub self_dual: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyOutput {
    pub algebra: String,
    pub weight: Weight,
    pub class: RepClass,
    pub invariant_forms: Option<RepClass>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainsOutput {
    pub algebra: String,
    pub left: Weight,
    pub right: Weight,
    /// 1-based node labels.
    pub chains: Vec<Vec<usize>>,
    pub guaranteed: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartsOutput {
    pub algebra: String,
    pub weight: Weight,
    pub deleted: Vec<usize>,
    pub subalgebra: String,
    pub part: Weight,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TablesOutput {
    pub kind: SquareKind,
    pub max_rank: usize,
    pub max_sum: u32,
    pub non_self_dual: bool,
    pub rows: Vec<ScanRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutantOutput {
    pub construct: Construct,
    pub analyzed_dim: usize,
    pub result: CommutantResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosureOutput {
    /// Real dimension.
    pub dim: usize,
    pub backend: Backend,
    pub center_dim: Option<usize>,
    pub semisimple_dim: Option<usize>,
}

fn algebra(s: &str) -> Result<SemisimpleAlgebra> {
    s.parse()
}

fn weight(g: &SemisimpleAlgebra, s: &str) -> Result<Weight> {
    let w: Weight = s.parse()?;
    g.check(&w)?;
    Ok(w)
}

fn simple(g: &SemisimpleAlgebra) -> Result<crate::rootsys::SimpleType> {
    g.as_simple().ok_or_else(|| Error::NotSimple(g.to_string()))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownAlgebra(_)
        | Error::ParseWeight(_)
        | Error::InvalidRank { .. }
        | Error::RankMismatch { .. }
        | Error::NotDominant(_)
        | Error::NotSimple(_) => EXIT_USAGE,
        _ => EXIT_DATA,
    }
}

struct Ctx<'a, W: Write> {
    json: bool,
    out: &'a mut W,
}

impl<W: Write> Ctx<'_, W> {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            writeln!(self.out, "{}", serde_json::to_string_pretty(value)?)?;
        } else {
            let t = text();
            write!(self.out, "{t}")?;
            if !t.ends_with('\n') {
                writeln!(self.out)?;
            }
        }
        Ok(())
    }
}

fn weights_line(ws: &[Weight]) -> String {
    ws.iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Tab-separated table with a header line.
pub fn tables_text(rows: &[ScanRow]) -> String {
    let mut s = String::from("algebra\ttype\tweight\tdim\tsquare\tsquare_dim\tnote\n");
    for r in rows {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.algebra,
            r.algebra.label(),
            r.weight,
            r.dim,
            r.square_weight,
            r.square_dim,
            r.note.as_deref().unwrap_or("")
        ));
    }
    s
}

fn commutant_text(c: &CommutantResult) -> String {
    let mut s = match c.dim {
        Some(d) => format!("commutant dimension (complex): {d}\n"),
        None => format!(
            "commutant dimension: indeterminate (estimate {})\n",
            c.estimate
        ),
    };
    s.push_str(&format!("backend: {}\n", c.backend));
    if let Some(g) = c.gap {
        s.push_str(&format!(
            "tolerance: {:e}\nspectral gap: {g:.3e}\n",
            c.tolerance.unwrap_or(DEFAULT_TOLERANCE)
        ));
    }
    s
}

fn profile_text(p: &IsotypicProfile) -> String {
    let mut s = String::new();
    match &p.indeterminate {
        Some(why) => s.push_str(&format!("profile: indeterminate ({why})\n")),
        None => {
            let blocks: Vec<String> = p.blocks.iter().map(|(d, m)| format!("{d}x{m}")).collect();
            s.push_str(&format!(
                "blocks (dim x multiplicity): {}\n",
                blocks.join(" ")
            ));
        }
    }
    if let Some(c) = p.commutant_dim {
        s.push_str(&format!("commutant dimension: {c}\n"));
    }
    s.push_str(&format!("seed: {}\n", p.seed));
    s
}

fn decision_text(r: &DecisionReport) -> String {
    let mut s = format!("{}: {}\n", r.procedure, r.verdict);
    let show = |x: Option<usize>| x.map_or("indeterminate".to_string(), |d| d.to_string());
    s.push_str(&format!("commutant dimension: {}\n", show(r.commutant_dim)));
    s.push_str(&format!("expected: {}\n", show(r.expected_dim)));
    s.push_str(&format!("backend: {}\n", r.backend));
    if let Some(g) = r.gap {
        s.push_str(&format!("spectral gap: {g:.3e}\n"));
    }
    if let Some(c) = r.parent_center_dim {
        s.push_str(&format!("parent center dimension: {c}\n"));
    }
    if let Some(c) = &r.closure {
        s.push_str(&format!(
            "closure: {} of {} (agrees: {})\n",
            c.dim, c.full_dim, c.agrees
        ));
    }
    for n in &r.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    s
}

fn check_text(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!(
            "{}: {} cases, {} violations\n",
            r.kind,
            r.cases,
            r.violations.len()
        ));
        for v in &r.violations {
            s.push_str(&format!("  {v}\n"));
        }
    }
    s
}

fn load(path: &PathBuf) -> Result<MatrixRep> {
    load_rep(path)
}

fn construct(r: &MatrixRep, c: Construct) -> MatrixRep {
    match c {
        Construct::None | Construct::Group => r.clone(),
        Construct::TensorSquare => tensor_square(r),
        Construct::WithDual => tensor_with_dual(r),
    }
}

fn execute<W: Write>(cli: Cli, ctx: &mut Ctx<W>) -> Result<i32> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let copts = CommutantOptions {
        backend: cli.backend,
        tolerance: cli.tol,
        exec,
    };
    match cli.cmd {
        Cmd::Dim {
            algebra: a,
            weight: w,
        } => {
            let g = algebra(&a)?;
            let w = weight(&g, &w)?;
            let out = DimOutput {
                algebra: g.to_string(),
                dim: dim_semisimple(&g, &w)?,
                weight: w,
            };
            ctx.emit(&out, || out.dim.to_string())?;
        }
        Cmd::Decompose {
            algebra: a,
            left,
            right,
        } => {
            let g = algebra(&a)?;
            let d = tensor_decompose(&g, &weight(&g, &left)?, &weight(&g, &right)?)?;
            ctx.emit(&d, || d.to_string())?;
        }
        Cmd::Square {
            alt,
            algebra: a,
            weight: w,
            ..
        } => {
            let g = algebra(&a)?;
            let kind = if alt {
                SquareKind::Alt
            } else {
                SquareKind::Sym
            };
            let d: Decomposition = square(&g, &weight(&g, &w)?, kind)?;
            ctx.emit(&d, || d.to_string())?;
        }
        Cmd::Dual {
            algebra: a,
            weight: w,
        } => {
            let g = algebra(&a)?;
            let w = weight(&g, &w)?;
            let dual = dual_weight_semisimple(&g, &w)?;
            let out = DualOutput {
                algebra: g.to_string(),
                self_dual: dual == w,
                weight: w,
                dual,
            };
            ctx.emit(&out, || {
                format!(
                    "{}{}",
                    out.dual,
                    if out.self_dual { " (self-dual)" } else { "" }
                )
            })?;
        }
        Cmd::Classify {
            algebra: a,
            weight: w,
            verify,
        } => {
            let g = algebra(&a)?;
            let t = simple(&g)?;
            let w = weight(&g, &w)?;
            let class = malcev_class(t, &w)?;
            let forms = if verify {
                Some(fs_oracle(t, &w)?)
            } else {
                None
            };
            let out = ClassifyOutput {
                algebra: g.to_string(),
                weight: w,
                class,
                invariant_forms: forms,
            };
            ctx.emit(&out, || match out.invariant_forms {
                Some(f) => format!("{class} (invariant forms: {f})"),
                None => class.to_string(),
            })?;
            if forms.is_some_and(|f| f != class) {
                return Ok(1);
            }
        }
        Cmd::Chains {
            algebra: a,
            left,
            right,
        } => {
            let g = algebra(&a)?;
            let t = simple(&g)?;
            let (l, r) = (weight(&g, &left)?, weight(&g, &right)?);
            let chains = minimal_chains(t, &l, &r)?;
            let guaranteed: Vec<Weight> = guaranteed_constituents(t, &l, &r)?.into_iter().collect();
            let out = ChainsOutput {
                algebra: g.to_string(),
                chains: chains
                    .iter()
                    .map(|c| c.root_indices.iter().map(|j| j + 1).collect())
                    .collect(),
                guaranteed,
                left: l,
                right: r,
            };
            ctx.emit(&out, || {
                let cs: Vec<String> = chains.iter().map(|c| c.to_string()).collect();
                format!(
                    "chains: {}\nguaranteed: {}",
                    cs.join(" "),
                    weights_line(&out.guaranteed)
                )
            })?;
        }
        Cmd::Parts {
            algebra: a,
            weight: w,
            delete,
        } => {
            let g = algebra(&a)?;
            let t = simple(&g)?;
            let w = weight(&g, &w)?;
            if delete.contains(&0) {
                return Err(Error::InvalidInput("node labels start at 1".into()));
            }
            let deleted: BTreeSet<usize> = delete.iter().map(|j| j - 1).collect();
            let (h, part) = part_weight(t, &w, &deleted)?;
            let out = PartsOutput {
                algebra: g.to_string(),
                weight: w,
                deleted: deleted.iter().map(|j| j + 1).collect(),
                subalgebra: h.to_string(),
                part,
            };
            ctx.emit(&out, || format!("{} {}", out.subalgebra, out.part))?;
        }
        Cmd::Tables {
            kind,
            max_rank,
            max_sum,
            non_self_dual: nsd,
        } => {
            let mut rows = scan_tables_with(exec, kind, max_rank, max_sum)?;
            if nsd {
                rows = non_self_dual(rows);
            }
            let out = TablesOutput {
                kind,
                max_rank,
                max_sum,
                non_self_dual: nsd,
                rows,
            };
            ctx.emit(&out, || tables_text(&out.rows))?;
        }
        Cmd::Commutant(m) => {
            let r = load(&m.input)?;
            let (analyzed_dim, result) = if m.construct == Construct::Group {
                let us = r.exact_generators().ok_or_else(|| {
                    Error::InvalidInput("group commutant needs exact input".into())
                })?;
                (r.dim() * r.dim(), commutant_dimension_group(us, &copts)?)
            } else {
                let a = construct(&r, m.construct);
                (a.dim(), commutant_dimension(&a, &copts)?)
            };
            let out = CommutantOutput {
                construct: m.construct,
                analyzed_dim,
                result,
            };
            ctx.emit(&out, || commutant_text(&out.result))?;
            if out.result.dim.is_none() {
                return Ok(2);
            }
        }
        Cmd::Closure { input, split } => {
            let r = load(&input)?;
            let backend = cli.backend.unwrap_or(if r.is_exact() {
                Backend::Exact
            } else {
                Backend::Float
            });
            let cl = lie_closure(&r, backend, cli.tol);
            let sp = if split {
                Some(split_reductive(&cl)?)
            } else {
                None
            };
            let out = ClosureOutput {
                dim: cl.dim,
                backend: cl.backend,
                center_dim: sp.as_ref().map(|s| s.center_dim),
                semisimple_dim: sp.as_ref().map(|s| s.semisimple_dim),
            };
            ctx.emit(&out, || {
                let mut s = format!("closure dimension (real): {}\n", out.dim);
                if let (Some(c), Some(ss)) = (out.center_dim, out.semisimple_dim) {
                    s.push_str(&format!("center: {c}\nsemisimple part: {ss}\n"));
                }
                s
            })?;
        }
        Cmd::Profile(m) => {
            if m.construct == Construct::Group {
                return Err(Error::InvalidInput(
                    "profile does not take group input".into(),
                ));
            }
            let r = construct(&load(&m.input)?, m.construct);
            let opts = ProfileOptions {
                seed: cli.seed.unwrap_or(DEFAULT_SEED),
                tolerance: cli.tol,
                commutant: copts,
            };
            let p = isotypic_profile(&r, &opts)?;
            ctx.emit(&p, || profile_text(&p))?;
            if !p.is_determinate() {
                return Ok(2);
            }
        }
        Cmd::Decide {
            procedure,
            dim,
            input,
            parent,
            cross_check,
            assume_semisimple,
        } => {
            let r = load(&input)?;
            let opts = DecideOptions {
                commutant: copts,
                cross_check,
                assume_semisimple,
            };
            let size = dim.unwrap_or(r.dim());
            let rep = match procedure {
                Procedure::Su => is_full(ClassicalFamily::Su, &r, size, &opts)?,
                Procedure::So => is_full(ClassicalFamily::So, &r, size, &opts)?,
                Procedure::Sp => is_full(ClassicalFamily::Sp, &r, size, &opts)?,
                Procedure::Parent => {
                    let g = load(parent.as_ref().expect("clap requires --parent"))?;
                    equals_parent(&r, &g, &opts)?
                }
            };
            ctx.emit(&rep, || decision_text(&rep))?;
            return Ok(rep.verdict.exit_code());
        }
        Cmd::Check {
            kind,
            max_rank,
            max_sum,
            spot,
        } => {
            let kinds: Vec<CheckKind> = if kind == "all" {
                CheckKind::ALL.to_vec()
            } else {
                vec![kind.parse()?]
            };
            let opts = CheckOptions {
                max_rank,
                max_sum,
                spot,
                exec,
            };
            let reports = kinds
                .iter()
                .map(|k| run_check(*k, &opts))
                .collect::<Result<Vec<_>>>()?;
            ctx.emit(&reports, || check_text(&reports))?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(1);
            }
        }
        Cmd::Generators { family, size } => {
            let r = standard_generators(family, size)?;
            writeln!(ctx.out, "{}", rep_to_json(&r)?)?;
        }
    }
    Ok(0)
}

/// Run the CLI on `args` (including the program name).
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        let _ = writeln!(err, "error: --tol must be a positive number");
        return EXIT_USAGE;
    }
    let json = cli.json || cli.format == Format::Json;
    let mut ctx = Ctx { json, out };
    match execute(cli, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
