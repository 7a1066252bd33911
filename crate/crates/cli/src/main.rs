//! Command-line surface: validation, enumeration, family construction,
//! Diophantine solving, and the oracle cross-check.
//!
//! Exit codes are a stable contract: 0 success/valid, 1 domain failure
//! (invalid tuple or parameters), 2 usage error, 3 capacity refusal.

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use frusta::{
    build_general, build_prop2, build_prop3, cross_check, enumerate_integral,
    enumerate_three_squares, enumerate_two_square, find_params_for, integrality_criterion,
    three_squares_from_params, two_square_from_params, validate, GeneralSeed, ModThreeBranch,
    Prop2Seed, Prop3Seed, SearchBounds, SearchError, ThreeSquaresParams, TwoSquareParams,
};
use frusta_cli::record::{emit, Format, OutputRecord};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "frusta",
    version,
    about = "Integral regular truncated pyramids with rectangular bases: \
             validate candidates, build parametric families, enumerate, and cross-check"
)]
struct Cli {
    /// Cap the number of search worker threads (default: machine parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a six-tuple a b c d H t against every condition
    #[command(allow_negative_numbers = true)]
    Verify {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        #[arg(name = "H")]
        h: i64,
        t: i64,
    },
    /// Enumerate every integral frustum with t <= t-max and d <= d-max
    Enumerate {
        #[arg(long = "t-max")]
        t_max: i64,
        /// Defaults to t-max
        #[arg(long = "d-max")]
        d_max: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build one member of a parametric family
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Solve the underlying quadratic Diophantine equations
    #[command(subcommand)]
    Solve(SolveCommand),
    /// Diff the condition-driven enumerator against the brute-force oracle
    Crosscheck {
        #[arg(long = "t-max")]
        t_max: i64,
        /// Defaults to t-max
        #[arg(long = "d-max")]
        d_max: Option<i64>,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// General assembly from a seed (x, y, H, t, d) with t^2 = H^2 + y^2 + x^2
    General {
        #[arg(long)]
        x: i64,
        #[arg(long)]
        y: i64,
        #[arg(long = "H")]
        h: i64,
        #[arg(long)]
        t: i64,
        #[arg(long)]
        d: i64,
        /// Print which seed conditions held
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Three-parameter non-square family from (l, m, D)
    Prop2 {
        #[arg(long)]
        l: i64,
        #[arg(long)]
        m: i64,
        #[arg(long = "D")]
        scale: i64,
        /// Print the admissibility clauses and the mod-3 branch
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Four-parameter square-base family from (c, D, m, n)
    Prop3 {
        #[arg(long)]
        c: i64,
        #[arg(long = "D")]
        scale: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        /// Print the derived quantities and the integrality criterion
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SolveCommand {
    /// t^2 = x^2 + y^2 + z^2: one solution from --l --m --n, or all with t <= --t-max
    ThreeSquares {
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long = "t-max")]
        t_max: Option<i64>,
        /// Attach a reproducing (l, m, n) witness to every enumerated line
        #[arg(long)]
        witness: bool,
    },
    /// Z^2 = X^2 + 2Y^2: one solution from --delta --m --n, or all with Z <= --z-max
    TwoSquare {
        #[arg(long)]
        delta: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long = "z-max")]
        z_max: Option<i64>,
    },
}

#[derive(Serialize)]
struct QuadLine {
    x: i64,
    y: i64,
    z: i64,
    t: i64,
}

#[derive(Serialize)]
struct QuadWitnessLine {
    x: i64,
    y: i64,
    z: i64,
    t: i64,
    l: i64,
    m: i64,
    n: i64,
}

#[derive(Serialize)]
struct TripleLine {
    #[serde(rename = "X")]
    x: i64,
    #[serde(rename = "Y")]
    y: i64,
    #[serde(rename = "Z")]
    z: i64,
}

enum Failure {
    Domain(String),
    Usage(String),
    Capacity(String),
}

impl Failure {
    fn code(&self) -> ExitCode {
        match self {
            Failure::Domain(_) => ExitCode::from(1),
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Capacity(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(msg) | Failure::Usage(msg) | Failure::Capacity(msg) => msg,
        }
    }
}

fn domain(err: impl std::fmt::Display) -> Failure {
    Failure::Domain(err.to_string())
}

fn from_search(err: SearchError) -> Failure {
    match err {
        SearchError::Capacity { .. } => Failure::Capacity(err.to_string()),
        SearchError::InvalidBounds(_) => Failure::Usage(err.to_string()),
        other => Failure::Domain(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.threads {
        Some(threads) => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                Ok(pool) => pool,
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(2);
                }
            };
            pool.install(|| run(cli.command))
        }
        None => run(cli.command),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Verify { a, b, c, d, h, t } => cmd_verify(a, b, c, d, h, t),
        Command::Enumerate {
            t_max,
            d_max,
            format,
        } => cmd_enumerate(t_max, d_max, format),
        Command::Family(family) => cmd_family(family),
        Command::Solve(solve) => cmd_solve(solve),
        Command::Crosscheck { t_max, d_max } => cmd_crosscheck(t_max, d_max),
    }
}

fn condition_text(label: &str) -> &'static str {
    match label {
        "positivity" => "positivity: all six lengths >= 1",
        "ordering" => "ordering: a >= b and c >= d",
        "shrink" => "shrink: a > c and b > d",
        "key ratio" => "key ratio: a*d = b*c",
        "even gaps" => "even gaps: a-c and b-d both even",
        "key equation" => "key equation: 4*t^2 = 4*H^2 + (a-c)^2 + (b-d)^2",
        "offset divisibility" => "offset divisibility: x divides y*d",
        "volume integrality" => "volume integrality: exact volume is an integer",
        other => unreachable!("unknown condition {other}"),
    }
}

fn cmd_verify(a: i64, b: i64, c: i64, d: i64, h: i64, t: i64) -> Result<ExitCode, Failure> {
    let report = validate(a, b, c, d, h, t).map_err(domain)?;
    let out = io::stdout();
    let mut out = out.lock();
    let mut print = |line: String| writeln!(out, "{line}").map_err(domain);

    print(format!(
        "candidate (a, b, c, d, H, t) = ({a}, {b}, {c}, {d}, {h}, {t})"
    ))?;
    for (label, pass) in report.conditions() {
        print(format!(
            "  {:68} {}",
            condition_text(label),
            if pass { "pass" } else { "FAIL" }
        ))?;
    }
    if let Some(q) = &report.derived {
        print(format!("offsets: x = {}, y = {}", q.x, q.y))?;
        if let Ok(dec) = frusta::decompose(a, b, c, d) {
            print(format!(
                "decomposition: N = {}, M = {}, k1 = {}, k2 = {}",
                dec.base_gcd, dec.top_gcd, dec.k1, dec.k2
            ))?;
        }
        if q.is_integral {
            print(format!("volume = {}", q.volume))?;
        } else if report.overall_valid() {
            print(format!(
                "volume = {} (not an integer: 3 does not divide H*y*x)",
                q.volume
            ))?;
        } else {
            print(format!("volume = {}", q.volume))?;
        }
    }

    if report.overall_integral() {
        print("verdict: integral frustum".to_string())?;
        Ok(ExitCode::SUCCESS)
    } else if report.overall_valid() {
        print("verdict: geometrically valid, but the volume is not an integer".to_string())?;
        Ok(ExitCode::from(1))
    } else {
        if report.canonicalizable() {
            print(
                "note: swapping width and depth (a<->b, c<->d) gives a canonical candidate"
                    .to_string(),
            )?;
        }
        print("verdict: not a valid frustum".to_string())?;
        Ok(ExitCode::from(1))
    }
}

fn cmd_enumerate(t_max: i64, d_max: Option<i64>, format: Format) -> Result<ExitCode, Failure> {
    let bounds =
        SearchBounds::with_d_max(t_max, d_max.unwrap_or(t_max)).map_err(from_search)?;
    let found = enumerate_integral(&bounds).map_err(from_search)?;
    let records: Vec<OutputRecord> = found
        .iter()
        .map(|(f, q)| OutputRecord::from_parts(f, q))
        .collect::<Result<_, _>>()
        .map_err(domain)?;
    emit(&records, format, &mut io::stdout().lock()).map_err(domain)?;
    Ok(ExitCode::SUCCESS)
}

fn emit_single(record: &OutputRecord, format: Format) -> Result<(), Failure> {
    emit(std::slice::from_ref(record), format, &mut io::stdout().lock()).map_err(domain)
}

fn cmd_family(family: FamilyCommand) -> Result<ExitCode, Failure> {
    match family {
        FamilyCommand::General {
            x,
            y,
            h,
            t,
            d,
            explain,
            format,
        } => {
            let seed = GeneralSeed::new(x, y, h, t, d).map_err(domain)?;
            let (frustum, derived) = build_general(&seed).map_err(domain)?;
            if explain {
                eprintln!(
                    "seed: t^2 = H^2 + y^2 + x^2 ({t}^2 = {h}^2 + {y}^2 + {x}^2); \
                     y >= x; x | y*d; top width c = y*d/x = {}",
                    frustum.c()
                );
                eprintln!(
                    "integrality criterion 3 | H*y*x: {}",
                    if integrality_criterion(h, y, x) {
                        "holds"
                    } else {
                        "fails"
                    }
                );
            }
            let record = OutputRecord::from_parts(&frustum, &derived).map_err(domain)?;
            emit_single(&record, format)?;
            Ok(ExitCode::SUCCESS)
        }
        FamilyCommand::Prop2 {
            l,
            m,
            scale,
            explain,
            format,
        } => {
            let seed = Prop2Seed::new(l, m, scale).map_err(domain)?;
            let (frustum, derived) = build_prop2(&seed).map_err(domain)?;
            if explain {
                let adm = frusta::prop2_admissible(l, m);
                eprintln!(
                    "admissible: m = {m} divides l^2 - 1 = {} with v = {}; 1 <= m < l; \
                     l*(m + v) = 0 (mod 3)",
                    l * l - 1,
                    seed.v()
                );
                match adm.branch {
                    Some(ModThreeBranch::DividesL) => {
                        eprintln!("mod-3 branch: 3 | l, forcing 3 | m + v")
                    }
                    Some(ModThreeBranch::DividesMAndV) => {
                        eprintln!("mod-3 branch: 3 does not divide l, forcing 3 | m and 3 | v")
                    }
                    None => {}
                }
            }
            let record = OutputRecord::from_parts(&frustum, &derived).map_err(domain)?;
            emit_single(&record, format)?;
            Ok(ExitCode::SUCCESS)
        }
        FamilyCommand::Prop3 {
            c,
            scale,
            m,
            n,
            explain,
            format,
        } => {
            let seed = Prop3Seed::new(c, scale, m, n).map_err(domain)?;
            let (frustum, derived) = build_prop3(&seed).map_err(domain)?;
            if explain {
                eprintln!(
                    "square bases: a = b = {}, c = d = {}; H = D*|m^2 - 2n^2| = {}; \
                     t = D*(m^2 + 2n^2) = {}; offsets x = y = 2*D*m*n = {}",
                    frustum.a(),
                    frustum.c(),
                    frustum.height(),
                    frustum.edge(),
                    derived.y
                );
            }
            if !derived.is_integral {
                eprintln!(
                    "warning: volume = {} is not an integer (3 does not divide H*y*x); \
                     this family member is not an integral frustum",
                    derived.volume
                );
            }
            let record = OutputRecord::from_parts(&frustum, &derived).map_err(domain)?;
            emit_single(&record, format)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_json(value: &impl Serialize) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(domain)?;
    println!("{line}");
    Ok(())
}

fn refuse_beyond_work_limit(estimated: u128, what: &str) -> Result<(), Failure> {
    if estimated > frusta::WORK_LIMIT {
        return Err(Failure::Capacity(format!(
            "{what} implies about {estimated} candidates, above the work limit {}",
            frusta::WORK_LIMIT
        )));
    }
    Ok(())
}

fn cmd_solve(solve: SolveCommand) -> Result<ExitCode, Failure> {
    match solve {
        SolveCommand::ThreeSquares {
            l,
            m,
            n,
            t_max,
            witness,
        } => match (l, m, n, t_max) {
            (Some(l), Some(m), Some(n), None) => {
                if witness {
                    return Err(Failure::Usage(
                        "--witness applies to enumeration (--t-max) only".into(),
                    ));
                }
                let params = ThreeSquaresParams::new(l, m, n).map_err(domain)?;
                let s = three_squares_from_params(&params).map_err(domain)?;
                print_json(&QuadLine {
                    x: s.x,
                    y: s.y,
                    z: s.z,
                    t: s.t,
                })?;
                Ok(ExitCode::SUCCESS)
            }
            (None, None, None, Some(t_max)) => {
                refuse_beyond_work_limit(
                    (t_max.max(0) as u128).pow(3) / 11,
                    "the coordinate cube for this --t-max",
                )?;
                for s in enumerate_three_squares(t_max).map_err(domain)? {
                    if witness {
                        let w = find_params_for(&s).map_err(domain)?;
                        print_json(&QuadWitnessLine {
                            x: s.x,
                            y: s.y,
                            z: s.z,
                            t: s.t,
                            l: w.params.l,
                            m: w.params.m,
                            n: w.params.n,
                        })?;
                    } else {
                        print_json(&QuadLine {
                            x: s.x,
                            y: s.y,
                            z: s.z,
                            t: s.t,
                        })?;
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
            _ => Err(Failure::Usage(
                "provide either --l --m --n (one solution) or --t-max (enumeration)".into(),
            )),
        },
        SolveCommand::TwoSquare { delta, m, n, z_max } => match (delta, m, n, z_max) {
            (Some(delta), Some(m), Some(n), None) => {
                let params = TwoSquareParams::new(delta, m, n).map_err(domain)?;
                let s = two_square_from_params(&params).map_err(domain)?;
                print_json(&TripleLine {
                    x: s.x,
                    y: s.y,
                    z: s.z,
                })?;
                Ok(ExitCode::SUCCESS)
            }
            (None, None, None, Some(z_max)) => {
                refuse_beyond_work_limit(
                    (z_max.max(0) as u128).pow(2) / 2,
                    "the scan space for this --z-max",
                )?;
                for s in enumerate_two_square(z_max).map_err(domain)? {
                    print_json(&TripleLine {
                        x: s.x,
                        y: s.y,
                        z: s.z,
                    })?;
                }
                Ok(ExitCode::SUCCESS)
            }
            _ => Err(Failure::Usage(
                "provide either --delta --m --n (one solution) or --z-max (enumeration)".into(),
            )),
        },
    }
}

fn cmd_crosscheck(t_max: i64, d_max: Option<i64>) -> Result<ExitCode, Failure> {
    let bounds =
        SearchBounds::with_d_max(t_max, d_max.unwrap_or(t_max)).map_err(from_search)?;
    let start = Instant::now();
    let report = cross_check(&bounds).map_err(from_search)?;
    let elapsed = start.elapsed();
    if report.is_clean() {
        println!(
            "OK: {} = {}, 0 mismatches (t_max = {}, d_max = {}, {:.3?})",
            report.count_conditional,
            report.count_oracle,
            bounds.t_max(),
            bounds.d_max(),
            elapsed
        );
        Ok(ExitCode::SUCCESS)
    } else {
        println!(
            "MISMATCH: conditional = {}, oracle = {}, {} mismatches (t_max = {}, d_max = {}, {:.3?})",
            report.count_conditional,
            report.count_oracle,
            report.mismatches.len(),
            bounds.t_max(),
            bounds.d_max(),
            elapsed
        );
        for mismatch in &report.mismatches {
            let [a, b, c, d, h, t] = mismatch.tuple;
            println!(
                "  {:?}: ({a}, {b}, {c}, {d}, {h}, {t})",
                mismatch.side
            );
        }
        Ok(ExitCode::from(1))
    }
}
