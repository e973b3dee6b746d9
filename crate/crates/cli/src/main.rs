//! `schmidt3`: canonical decomposition toolkit for three-qubit pure states.
//!
//! Reads newline-delimited JSON state files (`-` for stdin), writes one JSON
//! report per line. Exit codes: 0 ok, 1 verify failure, 2 parse error,
//! 3 invalid state, 4 mathematically impossible request.

mod report;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schmidt3::{
    canonical_form_tol, classify, classify_state, erasing_states_tol, haar_random,
    invariants_direct, invariants_from_canonical, invariants_j, permute_parties,
    product_plus_biseparable, reconstruct, set2_form, two_product, Error, Party, Permutation,
    ThreeQubitState, DEFAULT_TOL,
};

use report::{
    to_json_line, BiseparableReport, CanonReport, ClassifyReport, EraseReport, ErrorBody,
    InvariantsReport, Set2Report, StateFile, TwoProductReport, VerifyCheck, VerifyReport,
};

#[derive(Parser)]
#[command(name = "schmidt3", version, about = "Generalized Schmidt decomposition of three-qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "UPPER")]
enum PartyArg {
    A,
    B,
    C,
}

impl From<PartyArg> for Party {
    fn from(p: PartyArg) -> Party {
        match p {
            PartyArg::A => Party::A,
            PartyArg::B => Party::B,
            PartyArg::C => Party::C,
        }
    }
}

#[derive(clap::Args)]
struct StateArgs {
    /// State file, `-` for stdin.
    file: String,
    /// Rescale the input to unit norm instead of rejecting it.
    #[arg(long)]
    normalize: bool,
    /// Emit JSON (default; reserved for a future text mode).
    #[arg(long, default_value_t = true, hide = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical five-term form with the local unitaries achieving it.
    Canon {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Party singled out by the decomposition.
        #[arg(long, value_enum, default_value_t = PartyArg::A)]
        party: PartyArg,
    },
    /// Polynomial local-unitary invariants I₁–I₅ and J₁–J₅.
    Invariants {
        #[command(flatten)]
        state: StateArgs,
    },
    /// Entanglement type (1, 2a, 2b, 3a, 3b, 4a–4c, 5, generic).
    Classify {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Single-party directions that leave the other two parties in a product.
    Erase {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, value_enum, default_value_t = PartyArg::A)]
        party: PartyArg,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Sum of two (generically nonorthogonal) product states.
    TwoProduct {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// cos θ|000⟩ + sin θ|1⟩(cos ω|0'0''⟩ + sin ω|1'1''⟩) splitting.
    BiseparableSplit {
        #[command(flatten)]
        state: StateArgs,
    },
    /// Canonical state over the second five-term support set.
    Set2 {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Haar-random states as newline-delimited state files.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Self-check battery on one state; exit 0 iff every check passes.
    Verify {
        #[command(flatten)]
        state: StateArgs,
    },
}

const EXIT_PARSE: u8 = 2;
const EXIT_STATE: u8 = 3;
const EXIT_IMPOSSIBLE: u8 = 4;

struct Failure {
    code: u8,
    body: ErrorBody,
}

impl Failure {
    fn new(code: u8, error: impl Into<String>) -> Self {
        Failure {
            code,
            body: ErrorBody {
                error: error.into(),
                type_label: None,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            println!("{}", to_json_line(&f.body));
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Canon { state, tol, party } => {
            let s = load_state(&state)?;
            let party: Party = party.into();
            let fronted = permute_parties(&s, &Permutation::bring_to_front(party));
            let cf = canonical_form_tol(&fronted, tol);
            let report = CanonReport::new(&cf, &party.to_string(), cf.transform_residual(&fronted));
            println!("{}", to_json_line(&report));
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { state } => {
            let s = load_state(&state)?;
            let inv = invariants_direct(&s);
            let j = invariants_j(&canonical_form_tol(&s, DEFAULT_TOL));
            println!("{}", to_json_line(&InvariantsReport::new(&inv, &j)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { state, tol } => {
            let s = load_state(&state)?;
            let c = classify_state(&s, tol);
            println!("{}", to_json_line(&ClassifyReport::new(&c)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Erase { state, party, tol } => {
            let s = load_state(&state)?;
            let party: Party = party.into();
            let dirs = erasing_states_tol(&s, party, tol);
            println!("{}", to_json_line(&EraseReport::new(&party.to_string(), &dirs)));
            Ok(ExitCode::SUCCESS)
        }
        Command::TwoProduct { state, tol } => {
            let s = load_state(&state)?;
            match two_product(&s, tol) {
                Ok(d) => {
                    let report = TwoProductReport::new(&d, d.reconstruction_residual(&s));
                    println!("{}", to_json_line(&report));
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::NotDecomposable { type_label }) => Err(Failure {
                    code: EXIT_IMPOSSIBLE,
                    body: ErrorBody {
                        error: "I5=0 genuinely tripartite: no two-product decomposition exists"
                            .into(),
                        type_label: Some(type_label),
                    },
                }),
                Err(e) => Err(Failure::new(EXIT_STATE, e.to_string())),
            }
        }
        Command::BiseparableSplit { state } => {
            let s = load_state(&state)?;
            let cf = canonical_form_tol(&s, DEFAULT_TOL);
            let f = product_plus_biseparable(&cf);
            let report = BiseparableReport::new(&f, f.reconstruction_residual(&s));
            println!("{}", to_json_line(&report));
            Ok(ExitCode::SUCCESS)
        }
        Command::Set2 { state, tol } => {
            let s = load_state(&state)?;
            let cf = canonical_form_tol(&s, DEFAULT_TOL);
            let f = set2_form(&cf, tol);
            println!("{}", to_json_line(&Set2Report::new(&f)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Random { seed, count } => {
            for i in 0..count {
                let n = seed.wrapping_add(i);
                let s = haar_random(n);
                let file = StateFile {
                    amplitudes: std::array::from_fn(|k| {
                        let a = s.amplitudes()[k];
                        [a.re, a.im]
                    }),
                    label: Some(format!("haar-{n}")),
                };
                println!("{}", to_json_line(&file));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { state } => {
            let s = load_state(&state)?;
            let report = verify_battery(&s);
            println!("{}", to_json_line(&report));
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn load_state(args: &StateArgs) -> Result<ThreeQubitState, Failure> {
    let text = if args.file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&args.file)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", args.file)))?
    };
    let file: StateFile = serde_json::from_str(&text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("malformed state file: {e}")))?;
    if file
        .amplitudes
        .iter()
        .any(|[re, im]| !re.is_finite() || !im.is_finite())
    {
        return Err(Failure::new(EXIT_STATE, "amplitudes must be finite"));
    }
    let amps = std::array::from_fn(|k| {
        schmidt3::linalg::C64::new(file.amplitudes[k][0], file.amplitudes[k][1])
    });
    ThreeQubitState::from_amplitudes(amps, args.normalize)
        .map_err(|e| Failure::new(EXIT_STATE, e.to_string()))
}

/// Round trip, dual-path invariants, hyperdeterminant identity, invariant
/// bounds and erasing determinants on a single state.
fn verify_battery(s: &ThreeQubitState) -> VerifyReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, value: f64, bound: f64| {
        checks.push(VerifyCheck {
            name: name.to_string(),
            value,
            bound,
            pass: value <= bound,
        });
    };

    push("norm_deviation", (s.norm() - 1.0).abs(), 1e-9);

    let cf = canonical_form_tol(s, DEFAULT_TOL);
    let back = reconstruct(&cf).expect("canonical form is always reconstructible");
    push("round_trip_infidelity", 1.0 - back.fidelity(s), 1e-8);
    push("transform_residual", cf.transform_residual(s), 1e-8);

    let direct = invariants_direct(s);
    let from_cf = invariants_from_canonical(&cf);
    let dual = [
        (direct.i1 - from_cf.i1).abs(),
        (direct.i2 - from_cf.i2).abs(),
        (direct.i3 - from_cf.i3).abs(),
        (direct.i4 - from_cf.i4).abs(),
        (direct.i5 - from_cf.i5).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    push("dual_path_invariants", dual, 1e-9);

    let mu = cf.mu;
    push(
        "hdet_identity",
        (direct.i5 - mu[0] * mu[0] * mu[4] * mu[4]).abs(),
        1e-10,
    );

    let j = invariants_j(&cf);
    let bound_violation = [
        0.5 - direct.i1,
        direct.i1 - 1.0,
        0.5 - direct.i2,
        direct.i2 - 1.0,
        0.5 - direct.i3,
        direct.i3 - 1.0,
        0.25 - direct.i4,
        direct.i4 - 1.0,
        -direct.i5,
        direct.i5 - 1.0 / 16.0,
        -j.j1,
        j.j1 - 0.25,
        -j.j2,
        j.j2 - 0.25,
        -j.j3,
        j.j3 - 0.25,
        -j.j4,
        j.j4 - 0.25,
    ]
    .into_iter()
    .fold(0.0, f64::max);
    push("invariant_bounds_violation", bound_violation, 1e-9);

    let mut worst_det: f64 = 0.0;
    let mut count_ok = true;
    for party in Party::ALL {
        let dirs = erasing_states_tol(s, party, DEFAULT_TOL);
        for d in &dirs {
            worst_det = worst_det.max(d.residual_det());
        }
        let expect_two = direct.i5 > 1e-9;
        if expect_two != (dirs.len() == 2 && !dirs[0].degenerate) && expect_two {
            count_ok = false;
        }
    }
    push("erasing_residual_det", worst_det, 1e-10);
    push("erasing_count", if count_ok { 0.0 } else { 1.0 }, 0.5);

    let label = classify(&cf, 1e-8);
    push(
        "classification_identities",
        label.j_signature.max_residual(),
        1e-6,
    );

    let pass = checks.iter().all(|c| c.pass);
    VerifyReport { checks, pass }
}
