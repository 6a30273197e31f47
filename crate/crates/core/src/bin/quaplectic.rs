use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use quaplectic::fock::{verify_rep, FockSpace, GeneratorTable};
use quaplectic::gaussian::{symplectic_eigenvalues, williamson, SqueezeParameters};
use quaplectic::invariants::{born_green_spectrum, invariance_sweep, reciprocity_map, SweepConfig, SweepGroup};
use quaplectic::io::{parse_zeta, read_json, to_json, write_json, PhiFile, StateFile};
use quaplectic::states::{sr_check, CovarianceData, Observables, StateVector};
use quaplectic::suites::{
    algebra_suite, contraction_suite, exact_alpha, sweep_reference_state, verify_all, RunConfig,
};
use quaplectic::units::{derive_scales, newton_constant, scale_consistency, ConstantSet};
use quaplectic::{Error, Result};

/// Verification toolkit for the quaplectic group and its Fock representation.
#[derive(Parser)]
#[command(name = "quaplectic", version)]
struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true, env = "QUAPLECTIC_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Fock cutoff (highest occupation per mode).
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    /// Replace every tolerance.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[arg(long, global = true)]
    alpha_hbar: Option<f64>,
    /// Also write the JSON report here.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Record wall-clock time per suite.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reciprocal-relativity scales from b, c, ħ.
    Scales(ScalesArgs),
    /// Exact Jacobi, conjugation, tensor-form and contraction checks.
    CheckAlgebra,
    /// Commutators of the Fock operators against the structure constants.
    VerifyRep {
        #[arg(long, default_value_t = 2)]
        margin: usize,
    },
    /// Build a squeezed coherent state.
    State(StateArgs),
    /// Covariance and commutator matrices of a state file.
    Covariance {
        #[arg(long)]
        state: PathBuf,
    },
    /// Schrödinger–Robertson determinant check.
    SrCheck(InputArgs),
    /// Williamson normal form of a covariance.
    Williamson(InputArgs),
    /// det Σ sweep over a transformation group.
    Sweep(SweepArgs),
    /// Born–Green operator spectrum on the interior block.
    Spectrum {
        #[arg(long, default_value_t = 2)]
        margin: usize,
    },
    /// Apply the reciprocity map to a covariance.
    Reciprocity {
        #[arg(long)]
        cov: PathBuf,
    },
    /// Run every suite.
    VerifyAll,
}

#[derive(Args)]
struct ScalesArgs {
    /// JSON constant set; defaults to SI values with Planck-scale b.
    #[arg(long)]
    constants: Option<PathBuf>,
    #[arg(long, conflicts_with = "constants")]
    natural: bool,
}

#[derive(Args)]
struct StateArgs {
    /// Squeeze generator: 8×8 real symmetric A, or complex compound φ.
    #[arg(long)]
    phi: Option<PathBuf>,
    /// Displacement as JSON `[[re, im], x4]`.
    #[arg(long)]
    zeta: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    #[arg(long)]
    state: Option<PathBuf>,
    #[arg(long)]
    cov: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value = "u31")]
    group: SweepGroup,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    scale: Option<f64>,
    /// State to sweep; defaults to the mode-1 squeezed reference state.
    #[arg(long)]
    state: Option<PathBuf>,
}

enum Failure {
    Config(Error),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Parse(_) | Error::Io(_) => Failure::Config(e),
            _ => Failure::Run(e),
        }
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg: RunConfig = match &cli.config {
        Some(p) => read_json(p)?,
        None => RunConfig::default(),
    };
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(c) = cli.cutoff {
        cfg.cutoff = c;
    }
    if let Some(a) = cli.alpha_hbar {
        cfg.alpha_hbar = a;
    }
    if cli.tolerance.is_some() {
        cfg.tolerance = cli.tolerance;
    }
    if cli.output.is_some() {
        cfg.output = cli.output.clone();
    }
    cfg.timing |= cli.timing;
    cfg.validate()?;
    Ok(cfg)
}

fn print(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit<T: Serialize>(cfg: &RunConfig, result: &T, passed: bool) -> Result<bool> {
    let doc = json!({ "config": cfg, "passed": passed, "result": result });
    print(&to_json(&doc)?)?;
    if let Some(p) = &cfg.output {
        write_json(p, &doc)?;
    }
    Ok(passed)
}

fn load_covariance(args: &InputArgs) -> Result<CovarianceData> {
    match (&args.state, &args.cov) {
        (Some(p), _) => {
            let file: StateFile = read_json(p)?;
            let state = file.to_state()?;
            Observables::new(state.space(), file.frame)?.covariance_matrix(&state)
        }
        (None, Some(p)) => read_json(p),
        (None, None) => Err(Error::Parse("need --state or --cov".into())),
    }
}

fn run(cli: &Cli) -> std::result::Result<bool, Failure> {
    let cfg = load_config(cli)?;
    let frame = cfg.frame()?;
    let tol = cfg.tolerances();
    let state_cutoff = cli.cutoff.unwrap_or(cfg.state_cutoff);
    let passed = match &cli.command {
        Command::Scales(a) => {
            let consts = match (&a.constants, a.natural) {
                (Some(p), _) => read_json(p)?,
                (None, true) => ConstantSet::natural(),
                (None, false) => ConstantSet::si_planck(),
            };
            let scales = derive_scales(&consts)?;
            let consistency = scale_consistency(&consts, &scales);
            let ok = consistency.iter().all(|&d| d < tol.scales);
            emit(
                &cfg,
                &json!({
                    "constants": consts,
                    "scales": scales,
                    "newton_constant": newton_constant(&consts)?,
                    "consistency": consistency,
                }),
                ok,
            )?
        }
        Command::CheckAlgebra => {
            let alg = algebra_suite(exact_alpha(cfg.alpha_hbar)?);
            let con = contraction_suite(&tol)?;
            let ok = alg.passed && con.passed;
            emit(&cfg, &json!({ "algebra": alg, "contraction": con }), ok)?
        }
        Command::VerifyRep { margin } => {
            let space = FockSpace::new(cfg.cutoff)?;
            let rep = verify_rep(&space, &GeneratorTable::new(frame), *margin)?;
            let ok = rep.passed(tol.representation);
            emit(&cfg, &rep, ok)?
        }
        Command::State(a) => {
            let zeta = match &a.zeta {
                Some(z) => {
                    let v: Vec<[f64; 2]> = serde_json::from_str(z).map_err(|e| Error::Parse(format!("--zeta: {e}")))?;
                    parse_zeta(&v)?
                }
                None => SqueezeParameters::default().zeta,
            };
            let params = match &a.phi {
                Some(p) => read_json::<PhiFile>(p)?.to_params(zeta)?,
                None => SqueezeParameters::displacement(zeta),
            };
            let obs = Observables::new(FockSpace::new(state_cutoff)?, frame)?;
            let state = obs.squeezed_state(&params)?;
            let file = StateFile::from_state(&state, frame);
            if let Some(out) = &a.out {
                write_json(out, &file)?;
            }
            emit(
                &cfg,
                &json!({
                    "cutoff": state_cutoff,
                    "leakage": state.leakage(),
                    "renormalization": state.renormalization(),
                    "out": a.out,
                    "state": if a.out.is_none() { Some(&file) } else { None },
                }),
                true,
            )?
        }
        Command::Covariance { state } => {
            let file: StateFile = read_json(state)?;
            let s = file.to_state()?;
            let cov = Observables::new(s.space(), file.frame)?.covariance_matrix(&s)?;
            let ok = cov.physicality() > -tol.physicality * cov.hbar;
            emit(&cfg, &cov, ok)?
        }
        Command::SrCheck(a) => {
            let cov = load_covariance(a)?;
            let r = sr_check(&cov);
            let ok = r.relative_margin() >= -tol.sr_floor;
            emit(&cfg, &json!({ "report": r, "relative_margin": r.relative_margin() }), ok)?
        }
        Command::Williamson(a) => {
            let cov = load_covariance(a)?;
            let w = williamson(&cov.sigma)?;
            let nus = symplectic_eigenvalues(&cov.sigma)?;
            let ok = nus.iter().all(|&n| n >= 0.5 * cov.hbar * (1.0 - tol.sr_floor));
            emit(&cfg, &json!({ "williamson": w, "half_hbar": 0.5 * cov.hbar }), ok)?
        }
        Command::Sweep(a) => {
            let obs = Observables::new(FockSpace::new(state_cutoff)?, frame)?;
            let state: StateVector = match &a.state {
                Some(p) => read_json::<StateFile>(p)?.to_state()?,
                None => sweep_reference_state(&obs)?,
            };
            let mut sc = SweepConfig::new(a.group);
            sc.seed = cfg.seed;
            sc.cutoff = state.space().cutoff();
            sc.samples = a.samples.unwrap_or(cfg.samples);
            sc.tolerance = tol.invariance;
            if let Some(s) = a.scale {
                sc.parameter_scale = s;
            }
            let obs = if sc.cutoff == state_cutoff {
                obs
            } else {
                Observables::new(state.space(), frame)?
            };
            let r = invariance_sweep(&obs, &state, &sc)?;
            let ok = r.passed;
            emit(&cfg, &r, ok)?
        }
        Command::Spectrum { margin } => {
            let space = FockSpace::new(cfg.cutoff)?;
            let s = born_green_spectrum(&space, &GeneratorTable::new(frame), *margin)?;
            let scale = frame.alpha_hbar.max(1.0);
            let ok = s.offdiagonal_max < tol.spectrum
                && s.spacing_deviation < tol.spectrum * scale
                && s.affine_residual < tol.spectrum * scale
                && s.degeneracies_match;
            emit(&cfg, &s, ok)?
        }
        Command::Reciprocity { cov } => {
            let c: CovarianceData = read_json(cov)?;
            let mapped = reciprocity_map(&c, &frame);
            let before = c.sigma.determinant();
            let after = mapped.sigma.determinant();
            let dev = ((after - before) / before).abs();
            emit(
                &cfg,
                &json!({ "covariance": mapped, "det_before": before, "det_after": after, "relative_deviation": dev }),
                dev < tol.invariance,
            )?
        }
        Command::VerifyAll => {
            let r = verify_all(&cfg)?;
            print(&to_json(&r)?)?;
            if let Some(p) = &cfg.output {
                write_json(p, &r)?;
            }
            if !r.passed {
                eprintln!("failing suites: {}", r.failed.join(", "));
            }
            r.passed
        }
    };
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Config(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
