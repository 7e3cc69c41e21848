//! `loref` builds, decomposes, and classifies Lorentz transformations from
//! hyperplane reflections. Inputs are JSON on stdin (or `--in FILE`),
//! outputs are JSON on stdout with diagnostics on stderr.
//!
//! Exit codes: 0 success, 2 invalid input (precondition violation),
//! 3 no solution (the exceptional lightlike-antipodal linking case),
//! 4 numerical validation failure.

mod output;

use clap::{Parser, Subcommand};
use lorentz_reflections::{
    boost_linking, checks, factor_into_reflections, hyperplane_reflection, line_reflection,
    observer_metric, polar_decompose, relative_velocity, thomas_rotation, Error, FourVector,
    LorentzTransform, Mat4, DEFAULT_TOL,
};
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "loref", version, about = "Lorentz transformations from hyperplane reflections")]
struct Cli {
    /// Relative tolerance for lightlike/degeneracy detection.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Observer 4-velocity as a JSON array [t,x,y,z]; defaults to [1,0,0,0].
    #[arg(long, global = true, value_name = "JSON")]
    observer: Option<String>,

    /// Read the input JSON document from a file instead of stdin.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hyperplane reflection S_u (or line reflection -S_u) from a normal.
    /// Input: {"normal": [t,x,y,z], "line": bool?, "vector": [t,x,y,z]?}
    Reflect,
    /// The unique observer-boost carrying x to x'.
    /// Input: {"x": [t,x,y,z], "x_prime": [t,x,y,z]}
    BoostLink,
    /// Closed-form relative velocity of the linking boost.
    /// Input: {"x": [t,x,y,z], "x_prime": [t,x,y,z]}
    Velocity,
    /// Thomas rotation of the boost triangle u -> u' -> u'' -> u.
    /// Input: {"u": [...], "u_prime": [...], "u_double_prime": [...]}
    Thomas,
    /// Boost-rotation split of an orthochronous transform.
    /// Input: {"transform": [[...4x4 row-major...]]}
    Polar {
        /// Emit the right-order split: transform = rotation * boost.
        #[arg(long)]
        right_polar: bool,
    },
    /// Factor a transform into hyperplane reflections with parity counts.
    /// Input: {"transform": [[...]]}
    Factor,
    /// Classify a transform into its Lorentz-group component.
    /// Input: {"transform": [[...]]}
    Classify,
    /// Run the seeded property suites and print a pass/fail report.
    Check {
        /// Base seed for every suite.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

struct Failure {
    kind: &'static str,
    message: String,
    code: i32,
}

impl Failure {
    fn invalid(message: String) -> Failure {
        Failure { kind: "invalid_input", message, code: 2 }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::NoSuchBoost => 3,
            Error::ValidationFailure { .. } => 4,
            _ => 2,
        };
        Failure { kind: e.kind(), message: e.to_string(), code }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: &'a str,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(json) => {
            println!("{json}");
        }
        Err(failure) => {
            let report = ErrorReport {
                error: ErrorBody { kind: failure.kind, message: &failure.message },
            };
            println!("{}", output::to_json(&report));
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::invalid(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_doc<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::invalid(format!("malformed input JSON: {e}")))
}

fn vector(a: [f64; 4]) -> Result<FourVector, Failure> {
    FourVector::try_from_array(a).map_err(Failure::from)
}

fn observer_from(cli_observer: &Option<String>) -> Result<FourVector, Failure> {
    match cli_observer {
        None => Ok(FourVector::E0),
        Some(text) => {
            let a: [f64; 4] = serde_json::from_str(text)
                .map_err(|e| Failure::invalid(format!("malformed --observer JSON: {e}")))?;
            vector(a)
        }
    }
}

fn transform_from(m: [[f64; 4]; 4], tol: f64) -> Result<LorentzTransform, Failure> {
    LorentzTransform::try_new(Mat4(m), tol.max(1e-9)).map_err(Failure::from)
}

fn matrix_rows(m: &Mat4) -> [[f64; 4]; 4] {
    m.0
}

#[derive(Deserialize)]
struct ReflectInput {
    normal: [f64; 4],
    #[serde(default)]
    line: bool,
    #[serde(default)]
    vector: Option<[f64; 4]>,
}

#[derive(Serialize)]
struct ReflectOutput {
    normal: [f64; 4],
    normal_class: &'static str,
    line: bool,
    tensor: [[f64; 4]; 4],
    component: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reflected: Option<[f64; 4]>,
    residuals: ReflectResiduals,
}

#[derive(Serialize)]
struct ReflectResiduals {
    eta_orthogonality: f64,
    involution: f64,
}

#[derive(Deserialize)]
struct PairInput {
    x: [f64; 4],
    x_prime: [f64; 4],
}

#[derive(Serialize)]
struct BoostLinkOutput {
    matrix: [[f64; 4]; 4],
    w: [f64; 4],
    observer: [f64; 4],
    velocity: [f64; 3],
    speed: f64,
    component: &'static str,
    residuals: LinkResiduals,
}

#[derive(Serialize)]
struct LinkResiduals {
    eta_orthogonality: f64,
    link: f64,
    frame_symmetry: f64,
}

#[derive(Serialize)]
struct VelocityOutput {
    velocity: [f64; 3],
    speed: f64,
    residuals: VelocityResiduals,
}

#[derive(Serialize)]
struct VelocityResiduals {
    boost_matrix_agreement: f64,
}

#[derive(Deserialize)]
struct ThomasInput {
    u: [f64; 4],
    u_prime: [f64; 4],
    u_double_prime: [f64; 4],
}

#[derive(Serialize)]
struct ThomasOutput {
    matrix: [[f64; 4]; 4],
    angle: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    axis: Option<[f64; 3]>,
    observer: [f64; 4],
    residuals: ThomasResiduals,
}

#[derive(Serialize)]
struct ThomasResiduals {
    eta_orthogonality: f64,
    observer_fix: f64,
}

#[derive(Deserialize)]
struct TransformInput {
    transform: [[f64; 4]; 4],
}

#[derive(Serialize)]
struct PolarOutput {
    boost: [[f64; 4]; 4],
    rotation: [[f64; 4]; 4],
    observer: [f64; 4],
    order: &'static str,
    residuals: PolarResiduals,
}

#[derive(Serialize)]
struct PolarResiduals {
    reconstruction: f64,
    boost_u_symmetry: f64,
    rotation_u_orthogonality: f64,
}

#[derive(Serialize)]
struct FactorOutput {
    normals: Vec<[f64; 4]>,
    count_spacelike_hyperplane: usize,
    count_timelike_hyperplane: usize,
    component: &'static str,
    residuals: FactorResiduals,
}

#[derive(Serialize)]
struct FactorResiduals {
    reconstruction: f64,
}

#[derive(Serialize)]
struct ClassifyOutput {
    component: &'static str,
    det: f64,
    m00: f64,
    residuals: ClassifyResiduals,
}

#[derive(Serialize)]
struct ClassifyResiduals {
    eta_orthogonality: f64,
}

#[derive(Serialize)]
struct SubCheckOutput {
    label: &'static str,
    residual: f64,
    tolerance: f64,
    passed: bool,
}

#[derive(Serialize)]
struct SuiteOutput {
    name: &'static str,
    trials: usize,
    passed: bool,
    subchecks: Vec<SubCheckOutput>,
}

#[derive(Serialize)]
struct CheckOutput {
    seed: u64,
    all_passed: bool,
    suites: Vec<SuiteOutput>,
}

fn run(cli: Cli) -> Result<String, Failure> {
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Failure::invalid(format!("--tol must be a nonnegative real, got {tol}")));
    }
    match &cli.command {
        Command::Reflect => {
            let doc: ReflectInput = parse_doc(&read_input(&cli.input)?)?;
            let normal = vector(doc.normal)?;
            let refl = hyperplane_reflection(&normal, tol)?;
            let transform = if doc.line {
                line_reflection(&normal, tol)?
            } else {
                refl.as_transform()?
            };
            let reflected = match doc.vector {
                Some(a) => Some(transform.apply(&vector(a)?).as_array()),
                None => None,
            };
            let t = transform.matrix();
            let out = ReflectOutput {
                normal: refl.normal().as_array(),
                normal_class: refl.normal_class().name(),
                line: doc.line,
                tensor: matrix_rows(t),
                component: transform.classify_component().name(),
                reflected,
                residuals: ReflectResiduals {
                    eta_orthogonality: transform.eta_residual(),
                    involution: t.mul(t).max_diff(&Mat4::IDENTITY),
                },
            };
            Ok(output::to_json(&out))
        }
        Command::BoostLink => {
            let doc: PairInput = parse_doc(&read_input(&cli.input)?)?;
            let u = observer_from(&cli.observer)?;
            let x = vector(doc.x)?;
            let xp = vector(doc.x_prime)?;
            let b = boost_linking(&u, &x, &xp, tol)?;
            let v = relative_velocity(&u, &x, &xp, tol)?;
            let frame = lorentz_reflections::ObserverFrame::new(&u)?;
            let fm = frame.matrix_in_frame(&b.transform);
            let out = BoostLinkOutput {
                matrix: matrix_rows(b.transform.matrix()),
                w: b.w.as_array(),
                observer: b.observer.as_array(),
                velocity: v.as_array(),
                speed: v.speed(),
                component: b.transform.classify_component().name(),
                residuals: LinkResiduals {
                    eta_orthogonality: b.transform.eta_residual(),
                    link: (b.transform.apply(&x) - xp).euclid_norm(),
                    frame_symmetry: fm.max_diff(&fm.transpose()),
                },
            };
            Ok(output::to_json(&out))
        }
        Command::Velocity => {
            let doc: PairInput = parse_doc(&read_input(&cli.input)?)?;
            let u = observer_from(&cli.observer)?;
            let x = vector(doc.x)?;
            let xp = vector(doc.x_prime)?;
            let v = relative_velocity(&u, &x, &xp, tol)?;
            let b = boost_linking(&u, &x, &xp, tol)?;
            let frame = lorentz_reflections::ObserverFrame::new(&u)?;
            let rebuilt = lorentz_reflections::standard_boost(&v)?;
            let out = VelocityOutput {
                velocity: v.as_array(),
                speed: v.speed(),
                residuals: VelocityResiduals {
                    boost_matrix_agreement: rebuilt
                        .matrix()
                        .max_diff(&frame.matrix_in_frame(&b.transform)),
                },
            };
            Ok(output::to_json(&out))
        }
        Command::Thomas => {
            let doc: ThomasInput = parse_doc(&read_input(&cli.input)?)?;
            let u = vector(doc.u)?;
            let u1 = vector(doc.u_prime)?;
            let u2 = vector(doc.u_double_prime)?;
            let r = thomas_rotation(&u, &u1, &u2)?;
            let out = ThomasOutput {
                matrix: matrix_rows(r.transform.matrix()),
                angle: r.angle,
                axis: r.axis,
                observer: r.observer.as_array(),
                residuals: ThomasResiduals {
                    eta_orthogonality: r.transform.eta_residual(),
                    observer_fix: (r.transform.apply(&r.observer) - r.observer).euclid_norm(),
                },
            };
            Ok(output::to_json(&out))
        }
        Command::Polar { right_polar } => {
            let doc: TransformInput = parse_doc(&read_input(&cli.input)?)?;
            let u = observer_from(&cli.observer)?;
            let l = transform_from(doc.transform, tol)?;
            let f = polar_decompose(&l, &u)?;
            let (boost, rotation, order) = if *right_polar {
                let (rot, boost) = f.right_order()?;
                (boost, rot, "rotation_boost")
            } else {
                (f.boost, f.rotation, "boost_rotation")
            };
            let rebuilt = if *right_polar {
                rotation.matrix().mul(boost.matrix())
            } else {
                boost.matrix().mul(rotation.matrix())
            };
            let metric = observer_metric(&u)?;
            let ub = metric.tensor.mul(boost.matrix());
            let out = PolarOutput {
                boost: matrix_rows(boost.matrix()),
                rotation: matrix_rows(rotation.matrix()),
                observer: f.observer.as_array(),
                order,
                residuals: PolarResiduals {
                    reconstruction: rebuilt.max_diff(l.matrix()),
                    boost_u_symmetry: ub.max_diff(&ub.transpose()),
                    rotation_u_orthogonality: lorentz_reflections::check_rotation_u_orthogonal(
                        &f.rotation,
                        &u,
                        tol.max(1e-7),
                    )?,
                },
            };
            Ok(output::to_json(&out))
        }
        Command::Factor => {
            let doc: TransformInput = parse_doc(&read_input(&cli.input)?)?;
            let u = observer_from(&cli.observer)?;
            let l = transform_from(doc.transform, tol)?;
            let rec = factor_into_reflections(&l, &u)?;
            let rebuilt = rec.reconstruct()?;
            let out = FactorOutput {
                normals: rec.normals.iter().map(|n| n.as_array()).collect(),
                count_spacelike_hyperplane: rec.count_spacelike_hyperplane,
                count_timelike_hyperplane: rec.count_timelike_hyperplane,
                component: rec.component.name(),
                residuals: FactorResiduals {
                    reconstruction: rebuilt.matrix().max_diff(l.matrix()),
                },
            };
            Ok(output::to_json(&out))
        }
        Command::Classify => {
            let doc: TransformInput = parse_doc(&read_input(&cli.input)?)?;
            let l = transform_from(doc.transform, tol)?;
            let out = ClassifyOutput {
                component: l.classify_component().name(),
                det: l.det(),
                m00: l.matrix().0[0][0],
                residuals: ClassifyResiduals { eta_orthogonality: l.eta_residual() },
            };
            Ok(output::to_json(&out))
        }
        Command::Check { seed } => {
            let suites = checks::run_all(*seed);
            let all_passed = suites.iter().all(|s| s.passed);
            for s in &suites {
                let status = if s.passed { "pass" } else { "FAIL" };
                eprintln!("{status}  {} ({} trials)", s.name, s.trials);
            }
            let out = CheckOutput {
                seed: *seed,
                all_passed,
                suites: suites
                    .into_iter()
                    .map(|s| SuiteOutput {
                        name: s.name,
                        trials: s.trials,
                        passed: s.passed,
                        subchecks: s
                            .subchecks
                            .into_iter()
                            .map(|c| SubCheckOutput {
                                label: c.label,
                                residual: c.residual,
                                tolerance: c.tolerance,
                                passed: c.passed,
                            })
                            .collect(),
                    })
                    .collect(),
            };
            let json = output::to_json(&out);
            if all_passed {
                Ok(json)
            } else {
                println!("{json}");
                eprintln!("error: one or more property suites failed");
                std::process::exit(4);
            }
        }
    }
}
