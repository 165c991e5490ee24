//! `ushift`: exact p-adic shift operators and their functional models.
//!
//! JSON in, JSON out. Exit codes: 0 success, 1 input parse error,
//! 2 precondition violation, 3 precision exhaustion.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use ushift_cli::demos::{self, DemoParams};
use ushift_cli::output::*;
use ushift_core::io::{
    norm_to_json, parse_rational, BlockSequenceJson, FactorialSeriesJson, GridJson, MatrixJson,
    PolyJson, ScalarJson, SeriesJson, VectorJson,
};
use ushift_core::mahler::{
    coherent_state, difference, indefinite_sum, mahler_coeffs, mahler_eval, shifted_convolution,
    MahlerCoeffs,
};
use ushift_core::models::{embed_w, verify_universality, EVector};
use ushift_core::padic::{PadicScalar, PrimeConfig};
use ushift_core::sequence::{
    cyclic_error, cyclic_vector, densify_cyclic, pairing, BoundedVector, CyclicKind,
};
use ushift_core::tate::{commutant_poly_approx, divides, ideal_member, weierstrass_reduce};
use ushift_core::Error;

#[derive(Parser)]
#[command(
    name = "ushift",
    version,
    about = "Exact p-adic shift operators: sequence spaces, Mahler calculus, \
             Tate algebra, and the factorial model"
)]
struct Cli {
    /// Write the JSON output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Continuous functions on Z_p: Mahler transform, indefinite sum,
    /// difference operator, convolution, coherent states.
    #[command(subcommand)]
    Mahler(MahlerCmd),
    /// Truncated c_0 and l^infinity: shifts, pairing, cyclic vectors.
    #[command(subcommand)]
    Seq(SeqCmd),
    /// Truncated Tate algebra: norms, products, reduction, ideals.
    #[command(subcommand)]
    Tate(TateCmd),
    /// Factorial-series model and the universality embedding.
    #[command(subcommand)]
    Model(ModelCmd),
    /// Canned theorem demonstrations with seeded random trials.
    #[command(subcommand)]
    Demo(DemoCmd),
}

#[derive(Subcommand)]
enum MahlerCmd {
    /// Mahler coefficients of a grid function (finite differences at 0).
    Coeffs {
        /// Grid JSON: file path or inline object.
        #[arg(long)]
        grid: String,
    },
    /// Evaluate a Mahler coefficient vector at an integer point.
    Eval {
        /// Coefficient vector JSON: file path or inline object.
        #[arg(long)]
        coeffs: String,
        /// Integer point x >= 0.
        #[arg(long)]
        at: u64,
    },
    /// Indefinite sum (the unilateral shift in this model).
    Sum {
        #[arg(long)]
        grid: String,
    },
    /// Forward difference (the backward shift in this model).
    Diff {
        #[arg(long)]
        grid: String,
    },
    /// Shifted convolution of two grid functions.
    Conv {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
    },
    /// Coherent state (1 + lambda)^x, an eigenfunction of the difference.
    Coherent {
        /// Eigenvalue as a rational "a/b"; needs |lambda|_p <= 1/p.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Grid size M.
        #[arg(long, default_value_t = 16)]
        m: usize,
        #[arg(long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 24)]
        prec: u32,
    },
}

#[derive(Subcommand)]
enum SeqCmd {
    /// Unilateral shift: prepend a zero.
    ShiftS {
        #[arg(long)]
        x: String,
    },
    /// Backward shift: drop the head.
    ShiftT {
        #[arg(long)]
        x: String,
    },
    /// Duality pairing sum x_n y_n.
    Pair {
        /// l^infinity side, vector JSON.
        #[arg(long)]
        x: String,
        /// c_0 side, vector JSON.
        #[arg(long)]
        y: String,
    },
    /// Build a cyclic vector and report its e_0-approximation errors.
    Cyclic {
        #[arg(long, value_enum, default_value_t = KindArg::Quadratic)]
        kind: KindArg,
        /// Largest step k to report the error at.
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        k0: usize,
        /// Vector length; defaults to k0 + k + 2.
        #[arg(long)]
        len: Option<usize>,
        #[arg(long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 24)]
        prec: u32,
    },
    /// Splice a cyclic tail onto a vector within epsilon = p^-eps-exp.
    Densify {
        #[arg(long)]
        y: String,
        #[arg(long)]
        eps_exp: i64,
        #[arg(long, value_enum, default_value_t = KindArg::Quadratic)]
        kind: KindArg,
        /// Tail entries kept beyond the splice index.
        #[arg(long, default_value_t = 4)]
        tail: usize,
    },
}

#[derive(Subcommand)]
enum TateCmd {
    /// Gauss norm and tail bound of a series.
    Norm {
        #[arg(long)]
        f: String,
    },
    /// Product of two series; --len truncates and reports the tail norm.
    Mul {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        len: Option<usize>,
    },
    /// Evaluate a series at a point of the unit ball.
    Eval {
        #[arg(long)]
        f: String,
        /// Point as a rational "a/b" with |z|_p <= 1.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Weierstrass-style reduction f = q P + r with deg r < deg P.
    Reduce {
        #[arg(long)]
        f: String,
        #[arg(long)]
        poly: String,
    },
    /// Ideal membership g in P H, decided by the remainder at precision.
    Member {
        #[arg(long)]
        g: String,
        #[arg(long)]
        poly: String,
    },
    /// Divisibility of monic polynomials: does divisor divide dividend?
    Divides {
        #[arg(long)]
        dividend: String,
        #[arg(long)]
        divisor: String,
        #[arg(long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 24)]
        prec: u32,
    },
    /// Polynomial-in-the-shift approximation of a multiplication operator.
    Commutant {
        #[arg(long)]
        f: String,
        #[arg(long)]
        cutoff: usize,
    },
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Differentiation of a factorial-weighted series.
    T3 {
        #[arg(long)]
        g: String,
    },
    /// Embedding W u = (u, Au, A^2 u, ...).
    Embed {
        /// Contraction matrix JSON (entries in p Z_p).
        #[arg(long)]
        matrix: String,
        /// Vector JSON for u; supplies p and the precision.
        #[arg(long)]
        u: String,
        #[arg(long, default_value_t = 8)]
        len: usize,
    },
    /// Instance check of the universality conjugacy T_E W u = W A u.
    Universal {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        u: String,
        #[arg(long, default_value_t = 12)]
        len: usize,
    },
}

#[derive(Subcommand)]
enum DemoCmd {
    /// Invariant subspaces and the commutant of the unilateral shift.
    Thm1(DemoArgs),
    /// Cyclic vectors of the backward shift.
    Thm2(DemoArgs),
    /// Universality of the backward shift over Q_p^d.
    Thm3(DemoArgs),
    /// Adjoint identities, annihilators, and backward-shift models.
    Duality(DemoArgs),
}

#[derive(Args)]
struct DemoArgs {
    #[arg(long, default_value_t = 5)]
    p: u64,
    #[arg(long, default_value_t = 24)]
    prec: u32,
    #[arg(long, default_value_t = 16)]
    len: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

impl DemoArgs {
    fn params(&self) -> DemoParams {
        DemoParams {
            p: self.p,
            prec: self.prec,
            len: self.len,
            trials: self.trials,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Quadratic,
    DoublyExponential,
}

impl From<KindArg> for CyclicKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Quadratic => CyclicKind::QuadraticGap,
            KindArg::DoublyExponential => CyclicKind::DoublyExponential,
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Parse { .. } => 1,
            Error::DivisorZeroAtPrecision { .. } | Error::PrecisionBudget { .. } => 3,
            _ => 2,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

fn load<T: DeserializeOwned>(arg: &str, field: &str) -> Result<T, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_owned()
    } else {
        fs::read_to_string(arg).map_err(|e| CliError {
            code: 1,
            message: format!("invalid {field}: cannot read {arg:?}: {e}"),
        })?
    };
    serde_json::from_str(&text).map_err(|e| CliError {
        code: 1,
        message: format!("invalid {field}: {e}"),
    })
}

fn render<T: Serialize>(value: &T) -> Result<String, CliError> {
    let body = serde_json::to_string_pretty(value).map_err(|e| CliError {
        code: 2,
        message: format!("cannot serialize output: {e}"),
    })?;
    Ok(format!("{body}\n"))
}

fn scalar_from_flag(arg: &str, cfg: PrimeConfig, field: &str) -> Result<PadicScalar, CliError> {
    let (a, b) = parse_rational(arg, field)?;
    Ok(PadicScalar::from_rational(cfg, &a, &b)?)
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Mahler(cmd) => run_mahler(cmd),
        Command::Seq(cmd) => run_seq(cmd),
        Command::Tate(cmd) => run_tate(cmd),
        Command::Model(cmd) => run_model(cmd),
        Command::Demo(cmd) => run_demo(cmd),
    }
}

fn run_mahler(cmd: MahlerCmd) -> Result<String, CliError> {
    match cmd {
        MahlerCmd::Coeffs { grid } => {
            let (cfg, phi) = load::<GridJson>(&grid, "grid")?.to_grid()?;
            let b = mahler_coeffs(&phi)?;
            render(&VectorOut {
                vector: VectorJson::from_c0(b.coeffs()),
                norm: norm_to_json(b.sup_norm(), cfg.p()),
            })
        }
        MahlerCmd::Eval { coeffs, at } => {
            let (_, v) = load::<VectorJson>(&coeffs, "coeffs")?.to_c0()?;
            let b = MahlerCoeffs::new(v);
            render(&ScalarJson::from_scalar(&mahler_eval(&b, at)?))
        }
        MahlerCmd::Sum { grid } => {
            let (_, phi) = load::<GridJson>(&grid, "grid")?.to_grid()?;
            render(&GridJson::from_grid(&indefinite_sum(&phi)?))
        }
        MahlerCmd::Diff { grid } => {
            let (_, phi) = load::<GridJson>(&grid, "grid")?.to_grid()?;
            render(&GridJson::from_grid(&difference(&phi)?))
        }
        MahlerCmd::Conv { phi, psi } => {
            let (_, phi) = load::<GridJson>(&phi, "phi")?.to_grid()?;
            let (_, psi) = load::<GridJson>(&psi, "psi")?.to_grid()?;
            render(&GridJson::from_grid(&shifted_convolution(&phi, &psi)?))
        }
        MahlerCmd::Coherent { lambda, m, p, prec } => {
            let cfg = PrimeConfig::new(p, prec)?;
            let lambda = scalar_from_flag(&lambda, cfg, "lambda")?;
            render(&GridJson::from_grid(&coherent_state(&lambda, m)?))
        }
    }
}

fn run_seq(cmd: SeqCmd) -> Result<String, CliError> {
    match cmd {
        SeqCmd::ShiftS { x } => {
            let (cfg, v) = load::<VectorJson>(&x, "x")?.to_c0()?;
            let out = v.shift_s();
            render(&VectorOut {
                vector: VectorJson::from_c0(&out),
                norm: norm_to_json(out.sup_norm(), cfg.p()),
            })
        }
        SeqCmd::ShiftT { x } => {
            let (cfg, v) = load::<VectorJson>(&x, "x")?.to_c0()?;
            let out = v.shift_t();
            render(&VectorOut {
                vector: VectorJson::from_c0(&out),
                norm: norm_to_json(out.sup_norm(), cfg.p()),
            })
        }
        SeqCmd::Pair { x, y } => {
            let (_, xv) = load::<VectorJson>(&x, "x")?.to_c0()?;
            let (_, yv) = load::<VectorJson>(&y, "y")?.to_c0()?;
            let value = pairing(&BoundedVector::from_c0(xv), &yv)?;
            render(&ScalarJson::from_scalar(&value))
        }
        SeqCmd::Cyclic {
            kind,
            k,
            k0,
            len,
            p,
            prec,
        } => {
            let cfg = PrimeConfig::new(p, prec)?;
            let kind: CyclicKind = kind.into();
            let len = len.unwrap_or(k0 + k + 2);
            let x = cyclic_vector(kind, k0, len, cfg)?;
            let mut errors = Vec::with_capacity(k + 1);
            for step in k0..=(k0 + k) {
                errors.push(CyclicStepOut {
                    k: step,
                    error: norm_to_json(cyclic_error(&x, step)?, p),
                });
            }
            render(&CyclicOut {
                kind: kind.name(),
                k0,
                vector: VectorJson::from_c0(&x),
                errors,
            })
        }
        SeqCmd::Densify {
            y,
            eps_exp,
            kind,
            tail,
        } => {
            let (cfg, yv) = load::<VectorJson>(&y, "y")?.to_c0()?;
            let out = densify_cyclic(&yv, eps_exp, kind.into(), tail)?;
            render(&DensifyOut {
                k0: out.k0,
                distance: norm_to_json(out.distance, cfg.p()),
                vector: VectorJson::from_c0(&out.vector),
            })
        }
    }
}

fn run_tate(cmd: TateCmd) -> Result<String, CliError> {
    match cmd {
        TateCmd::Norm { f } => {
            let (cfg, f) = load::<SeriesJson>(&f, "f")?.to_series()?;
            render(&NormOut {
                norm: norm_to_json(f.gauss_norm(), cfg.p()),
                tail_bound: norm_to_json(f.tail_bound(), cfg.p()),
            })
        }
        TateCmd::Mul { f, g, len } => {
            let (_, f) = load::<SeriesJson>(&f, "f")?.to_series()?;
            let (_, g) = load::<SeriesJson>(&g, "g")?.to_series()?;
            let mut prod = f.multiply(&g)?;
            if let Some(len) = len {
                prod = prod.truncate(len);
            }
            render(&SeriesJson::from_series(&prod))
        }
        TateCmd::Eval { f, at } => {
            let (cfg, f) = load::<SeriesJson>(&f, "f")?.to_series()?;
            let z = scalar_from_flag(&at, cfg, "at")?;
            render(&ScalarJson::from_scalar(&f.evaluate(&z)?))
        }
        TateCmd::Reduce { f, poly } => {
            let (cfg, f) = load::<SeriesJson>(&f, "f")?.to_series()?;
            let poly = load::<PolyJson>(&poly, "poly")?.to_poly(cfg)?;
            let (q, r) = weierstrass_reduce(&f, &poly)?;
            render(&ReduceOut {
                quotient: SeriesJson::from_series(&q),
                remainder: SeriesJson::from_series(&r),
            })
        }
        TateCmd::Member { g, poly } => {
            let (cfg, g) = load::<SeriesJson>(&g, "g")?.to_series()?;
            let poly = load::<PolyJson>(&poly, "poly")?.to_poly(cfg)?;
            let m = ideal_member(&g, &poly)?;
            render(&MemberOut {
                member: m.member,
                remainder_norm: norm_to_json(m.remainder_norm, cfg.p()),
            })
        }
        TateCmd::Divides {
            dividend,
            divisor,
            p,
            prec,
        } => {
            let cfg = PrimeConfig::new(p, prec)?;
            let dividend = load::<PolyJson>(&dividend, "dividend")?.to_poly(cfg)?;
            let divisor = load::<PolyJson>(&divisor, "divisor")?.to_poly(cfg)?;
            render(&DividesOut {
                divides: divides(&divisor, &dividend)?,
            })
        }
        TateCmd::Commutant { f, cutoff } => {
            let (cfg, f) = load::<SeriesJson>(&f, "f")?.to_series()?;
            let approx = commutant_poly_approx(&f, cutoff)?;
            render(&CommutantOut {
                cutoff,
                error: norm_to_json(approx.error(), cfg.p()),
                symbol: SeriesJson::from_series(approx.symbol()),
            })
        }
    }
}

fn run_model(cmd: ModelCmd) -> Result<String, CliError> {
    match cmd {
        ModelCmd::T3 { g } => {
            let (cfg, g) = load::<FactorialSeriesJson>(&g, "g")?.to_series()?;
            let out = g.t3_apply();
            render(&T3Out {
                series: FactorialSeriesJson::from_series(&out),
                norm: norm_to_json(out.norm(), cfg.p()),
            })
        }
        ModelCmd::Embed { matrix, u, len } => {
            let (cfg, uv) = load::<VectorJson>(&u, "u")?.to_c0()?;
            let u = EVector::new(cfg, uv.entries().to_vec())?;
            let a = load::<MatrixJson>(&matrix, "matrix")?.to_matrix(cfg)?;
            let w = embed_w(&a, &u, len)?;
            render(&EmbedOut {
                sequence: BlockSequenceJson::from_sequence(&w),
                norm: norm_to_json(w.sup_norm(), cfg.p()),
                isometry: w.sup_norm() == u.sup_norm(),
            })
        }
        ModelCmd::Universal { matrix, u, len } => {
            let (cfg, uv) = load::<VectorJson>(&u, "u")?.to_c0()?;
            let u = EVector::new(cfg, uv.entries().to_vec())?;
            let a = load::<MatrixJson>(&matrix, "matrix")?.to_matrix(cfg)?;
            let report = verify_universality(&a, &u, len)?;
            render(&UniversalOut {
                conjugacy_holds: report.conjugacy_holds,
                first_mismatch: report.first_mismatch,
                isometry_holds: report.isometry_holds,
                vector_norm: norm_to_json(report.vector_norm, cfg.p()),
                embedded_norm: norm_to_json(report.embedded_norm, cfg.p()),
                range_invariant: report.range_invariant,
                blocks_checked: report.blocks_checked,
                pass: report.passed(),
            })
        }
    }
}

fn run_demo(cmd: DemoCmd) -> Result<String, CliError> {
    let report = match cmd {
        DemoCmd::Thm1(args) => demos::thm1(&args.params())?,
        DemoCmd::Thm2(args) => demos::thm2(&args.params())?,
        DemoCmd::Thm3(args) => demos::thm3(&args.params())?,
        DemoCmd::Duality(args) => demos::duality(&args.params())?,
    };
    render(&report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    ExitCode::SUCCESS
                }
                _ => {
                    eprintln!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(cli.command) {
        Ok(body) => {
            if let Some(path) = cli.out {
                if let Err(e) = fs::write(&path, &body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{body}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
