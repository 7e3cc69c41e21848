//! Seeded property suites covering every module invariant, shipped as a
//! library so the same checks run from the CLI (`check` subcommand) and
//! from the acceptance test target. Each suite derives its own generator
//! from the base seed, so suites are reproducible individually and
//! independent of execution order.

use crate::boost::{boost_from_pair, boost_linking, relative_velocity, standard_boost, Velocity3};
use crate::factor::{component_from_parities, factor_into_reflections};
use crate::frame::ObserverFrame;
use crate::matrix::{Mat4, ETA};
use crate::minkowski::{causal_class, CausalClass, FourVector, DEFAULT_TOL};
use crate::polar::{check_rotation_u_orthogonal, check_u_positive, check_u_symmetric, observer_metric, polar_decompose};
use crate::reflection::hyperplane_reflection;
use crate::rotation::{rotation_angle, rotation_from_plane, thomas_rotation};
use crate::testkit::{oracle_polar_sqrt, random_direction, random_four_vector, random_lorentz, random_unit_timelike, TestRng};
use crate::transform::{compose, LorentzComponent, LorentzTransform};

/// One named bound inside a suite.
#[derive(Clone, Debug)]
pub struct SubCheck {
    pub label: &'static str,
    /// Worst observed value (a residual, a count of violations, or a
    /// minimum that must stay positive, depending on the label).
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl SubCheck {
    fn bounded(label: &'static str, residual: f64, tolerance: f64) -> SubCheck {
        SubCheck { label, residual, tolerance, passed: residual.is_finite() && residual <= tolerance }
    }

    fn positive(label: &'static str, minimum: f64) -> SubCheck {
        SubCheck { label, residual: minimum, tolerance: 0.0, passed: minimum.is_finite() && minimum > 0.0 }
    }

    fn count(label: &'static str, violations: usize) -> SubCheck {
        SubCheck { label, residual: violations as f64, tolerance: 0.0, passed: violations == 0 }
    }
}

/// Result of one suite.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub subchecks: Vec<SubCheck>,
    pub passed: bool,
}

impl CheckOutcome {
    fn new(name: &'static str, trials: usize, subchecks: Vec<SubCheck>) -> CheckOutcome {
        let passed = subchecks.iter().all(|s| s.passed);
        CheckOutcome { name, trials, subchecks, passed }
    }

    /// Worst subcheck as a (label, residual, tolerance) triple.
    pub fn worst(&self) -> Option<&SubCheck> {
        self.subchecks
            .iter()
            .filter(|s| s.tolerance > 0.0)
            .max_by(|a, b| {
                (a.residual / a.tolerance)
                    .partial_cmp(&(b.residual / b.tolerance))
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    }
}

const REFLECTION_TRIALS: usize = 10_000;
const LINK_TRIALS: usize = 10_000;
const EXCEPTIONAL_TRIALS: usize = 1_000;
const THOMAS_TRIALS: usize = 10_000;
const POLAR_TRIALS: usize = 1_000;
const IDENTITY_TRIALS: usize = 10_000;
const POSITIVITY_TRIALS: usize = 10_000;
const PARITY_TRIALS: usize = 10_000;
const FACTOR_TRIALS: usize = 10_000;

/// Rapidity caps for random draws. They bound matrix entries, hence the
/// floating-point noise floor of each suite, while keeping the draws firmly
/// relativistic (1.2 rapidity is v = 0.83).
const NORMAL_RAPIDITY: f64 = 1.5;
const OBSERVER_RAPIDITY: f64 = 1.2;
const PAIR_RAPIDITY: f64 = 0.8;

/// Criterion 1: S_u^2 = I, S_u^T eta S_u = eta, det S_u = -1, each to 1e-11
/// over seeded random non-null normals.
pub fn reflection_axioms(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0xA11CE);
    let mut worst_inv = 0.0_f64;
    let mut worst_eta = 0.0_f64;
    let mut worst_det = 0.0_f64;
    for _ in 0..REFLECTION_TRIALS {
        let n = crate::testkit::random_unit_normal(&mut rng, NORMAL_RAPIDITY);
        let s = hyperplane_reflection(&n, DEFAULT_TOL).expect("unit normals are non-null");
        let t = s.tensor();
        worst_inv = worst_inv.max(t.mul(t).max_diff(&Mat4::IDENTITY));
        worst_eta = worst_eta.max(t.transpose().mul(&ETA).mul(t).max_diff(&ETA));
        worst_det = worst_det.max((t.det() + 1.0).abs());
    }
    CheckOutcome::new(
        "reflection_axioms",
        REFLECTION_TRIALS,
        vec![
            SubCheck::bounded("involution", worst_inv, 1e-11),
            SubCheck::bounded("eta_orthogonality", worst_eta, 1e-11),
            SubCheck::bounded("determinant", worst_det, 1e-11),
        ],
    )
}

/// A random valid linking triple: observer plus an equal-eta-norm causal
/// pair of the same orientation, alternating timelike and lightlike pairs.
/// Draws whose boost entries exceed a conditioning cap are redrawn; the
/// near-exceptional regime is exercised by crafted inputs instead.
fn conditioned_link_triple(
    rng: &mut TestRng,
    lightlike: bool,
) -> (FourVector, FourVector, FourVector, crate::boost::BoostResult) {
    loop {
        let u = random_unit_timelike(rng, OBSERVER_RAPIDITY);
        let (x, xp) = if lightlike {
            let n = random_direction(rng);
            let np = random_direction(rng);
            let r = rng.uniform(0.3, 3.0);
            let rp = rng.uniform(0.3, 3.0);
            (
                FourVector::new(r, r * n[0], r * n[1], r * n[2]),
                FourVector::new(rp, rp * np[0], rp * np[1], rp * np[2]),
            )
        } else {
            let s = rng.uniform(0.3, 3.0);
            (
                random_unit_timelike(rng, NORMAL_RAPIDITY).scale(s),
                random_unit_timelike(rng, NORMAL_RAPIDITY).scale(s),
            )
        };
        match boost_linking(&u, &x, &xp, DEFAULT_TOL) {
            Ok(b) if b.transform.matrix().max_abs() <= 100.0 => return (u, x, xp, b),
            _ => continue,
        }
    }
}

/// Criterion 2: the linking boost carries x to x' to 1e-9 relative, is
/// proper orthochronous, and is symmetric in the observer's frame; the
/// canonical rest-frame case yields v = 0.6 to 1e-12.
pub fn boost_linking_correctness(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0xB005);
    let mut worst_link = 0.0_f64;
    let mut worst_sym = 0.0_f64;
    let mut component_violations = 0usize;
    for i in 0..LINK_TRIALS {
        let (u, x, xp, b) = conditioned_link_triple(&mut rng, i % 2 == 0);
        let moved = b.transform.apply(&x);
        worst_link = worst_link.max((moved - xp).euclid_norm() / xp.euclid_norm());
        if b.transform.classify_component() != LorentzComponent::ProperOrthochronous {
            component_violations += 1;
        }
        let frame = ObserverFrame::new(&u).expect("observer draws are timelike");
        let m = frame.matrix_in_frame(&b.transform);
        worst_sym = worst_sym.max(m.max_diff(&m.transpose()));
    }

    let canonical = relative_velocity(
        &FourVector::E0,
        &FourVector::E0,
        &FourVector::new(1.25, 0.75, 0.0, 0.0),
        DEFAULT_TOL,
    )
    .expect("canonical case is valid");
    let canonical_err = (canonical.vx - 0.6)
        .abs()
        .max(canonical.vy.abs())
        .max(canonical.vz.abs());

    CheckOutcome::new(
        "boost_linking",
        LINK_TRIALS,
        vec![
            SubCheck::bounded("relative_link_residual", worst_link, 1e-9),
            SubCheck::count("proper_orthochronous_violations", component_violations),
            SubCheck::bounded("frame_matrix_symmetry", worst_sym, 1e-10),
            SubCheck::bounded("canonical_velocity_error", canonical_err, 1e-12),
        ],
    )
}

/// Criterion 3: the closed-form velocity agrees with the boost matrix, the
/// doubling relation |v| = 2 w / (1 + w^2) holds, and the textbook matrix
/// of the extracted velocity reproduces the reflection-built boost.
pub fn velocity_formula(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0x7E10);
    let mut worst_column = 0.0_f64;
    let mut worst_double = 0.0_f64;
    let mut worst_matrix = 0.0_f64;
    let mut worst_align = 0.0_f64;
    for i in 0..LINK_TRIALS {
        let (u, x, xp, b) = conditioned_link_triple(&mut rng, i % 2 == 0);
        let v = relative_velocity(&u, &x, &xp, DEFAULT_TOL).expect("triple is valid");
        let frame = ObserverFrame::new(&u).expect("observer draws are timelike");
        let m = frame.matrix_in_frame(&b.transform);
        let va = v.as_array();
        for k in 0..3 {
            worst_column = worst_column.max((va[k] - m.0[k + 1][0] / m.0[0][0]).abs());
        }

        let (w0, ws) = frame.components(&b.w);
        let wbar = (ws[0] * ws[0] + ws[1] * ws[1] + ws[2] * ws[2]).sqrt() / w0;
        worst_double = worst_double.max((v.speed() - 2.0 * wbar / (1.0 + wbar * wbar)).abs());

        let rebuilt = standard_boost(&v).expect("velocity is subluminal");
        worst_matrix = worst_matrix.max(rebuilt.matrix().max_diff(&m));

        // v is parallel to the spatial part of w.
        if wbar > 1e-3 {
            let wn = (ws[0] * ws[0] + ws[1] * ws[1] + ws[2] * ws[2]).sqrt();
            let vn = v.speed();
            let cross = [
                va[1] * ws[2] - va[2] * ws[1],
                va[2] * ws[0] - va[0] * ws[2],
                va[0] * ws[1] - va[1] * ws[0],
            ];
            let cn = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
            worst_align = worst_align.max(cn / (vn * wn));
        }
    }
    CheckOutcome::new(
        "velocity_formula",
        LINK_TRIALS,
        vec![
            SubCheck::bounded("matrix_column_agreement", worst_column, 1e-10),
            SubCheck::bounded("doubling_relation", worst_double, 1e-10),
            SubCheck::bounded("standard_boost_agreement", worst_matrix, 1e-9),
            SubCheck::bounded("bisector_alignment", worst_align, 1e-9),
        ],
    )
}

/// Criterion 4: spatially antipodal lightlike pairs must always produce
/// NoSuchBoost, from both the boost construction and the velocity formula.
pub fn exceptional_lightlike(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0xE8CE);
    let mut wrong = 0usize;
    for _ in 0..EXCEPTIONAL_TRIALS {
        let u = random_unit_timelike(&mut rng, NORMAL_RAPIDITY);
        let frame = ObserverFrame::new(&u).expect("observer draws are timelike");
        let n = random_direction(&mut rng);
        let r = rng.uniform(0.3, 3.0);
        let rp = rng.uniform(0.3, 3.0);
        let x = frame.from_components(r, [r * n[0], r * n[1], r * n[2]]);
        let xp = frame.from_components(rp, [-rp * n[0], -rp * n[1], -rp * n[2]]);
        if !matches!(
            boost_linking(&u, &x, &xp, DEFAULT_TOL),
            Err(crate::error::Error::NoSuchBoost)
        ) {
            wrong += 1;
        }
        if relative_velocity(&u, &x, &xp, DEFAULT_TOL) != Err(crate::error::Error::NoSuchBoost) {
            wrong += 1;
        }
    }
    CheckOutcome::new(
        "exceptional_lightlike",
        EXCEPTIONAL_TRIALS,
        vec![SubCheck::count("non_error_outcomes", wrong)],
    )
}

/// Criterion 5: the six-reflection product fixes u and is proper
/// orthochronous; it equals the composition of the three linking boosts;
/// the perpendicular worked case reproduces 2 atan(0.225).
pub fn thomas_rotation_properties(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0x7809);
    let mut worst_fix = 0.0_f64;
    let mut worst_paths = 0.0_f64;
    let mut component_violations = 0usize;
    for _ in 0..THOMAS_TRIALS {
        let u = random_unit_timelike(&mut rng, OBSERVER_RAPIDITY);
        let u1 = random_unit_timelike(&mut rng, OBSERVER_RAPIDITY);
        let u2 = random_unit_timelike(&mut rng, OBSERVER_RAPIDITY);
        let r = thomas_rotation(&u, &u1, &u2).expect("future unit triples are valid");
        worst_fix = worst_fix.max((r.transform.apply(&u) - u).euclid_norm());
        if r.transform.classify_component() != LorentzComponent::ProperOrthochronous {
            component_violations += 1;
        }
        let b1 = boost_linking(&u, &u, &u1, DEFAULT_TOL).expect("leg 1");
        let b2 = boost_linking(&u1, &u1, &u2, DEFAULT_TOL).expect("leg 2");
        let b3 = boost_linking(&u2, &u2, &u, DEFAULT_TOL).expect("leg 3");
        let composite = b3.transform.matrix().mul(b2.transform.matrix()).mul(b1.transform.matrix());
        worst_paths = worst_paths.max(composite.max_diff(r.transform.matrix()));
    }

    // Perpendicular legs at beta = beta' = 0.6.
    let bx = standard_boost(&Velocity3::new(0.6, 0.0, 0.0).unwrap()).unwrap();
    let by = standard_boost(&Velocity3::new(0.0, 0.6, 0.0).unwrap()).unwrap();
    let u0 = FourVector::E0;
    let u1 = bx.apply(&u0);
    let u2 = bx.apply(&by.apply(&u0));
    let r = thomas_rotation(&u0, &u1, &u2).expect("worked example is valid");
    let oracle = compose(
        &compose(
            &standard_boost(&Velocity3::new(-0.6, -0.48, 0.0).unwrap()).unwrap(),
            &bx,
        )
        .unwrap(),
        &by,
    )
    .unwrap();
    let oracle_angle = rotation_angle(&oracle, &u0, DEFAULT_TOL)
        .expect("oracle is a u-rotation")
        .angle;
    // tan(theta) = gamma gamma' beta beta' / (gamma + gamma') = 0.225.
    let closed_form = 0.225_f64.atan();

    CheckOutcome::new(
        "thomas_rotation",
        THOMAS_TRIALS,
        vec![
            SubCheck::bounded("observer_fix_residual", worst_fix, 1e-10),
            SubCheck::count("proper_orthochronous_violations", component_violations),
            SubCheck::bounded("six_reflections_vs_linked_boosts", worst_paths, 1e-10),
            SubCheck::bounded("perpendicular_angle_vs_oracle", (r.angle - oracle_angle).abs(), 1e-10),
            SubCheck::bounded("oracle_vs_closed_form", (oracle_angle - closed_form).abs(), 1e-10),
        ],
    )
}

fn random_orthochronous(rng: &mut TestRng, max_factors: usize) -> LorentzTransform {
    loop {
        let k = (rng.uniform(0.0, (max_factors + 1) as f64) as usize).min(max_factors);
        let l = random_lorentz(rng, k);
        if l.transform.classify_component().is_orthochronous() {
            return l.transform;
        }
    }
}

/// Criterion 6: the reflection-built polar decomposition reconstructs the
/// input, its boost factor is U-symmetric positive, its rotation factor is
/// U-orthogonal, both match the classical square-root oracle, and the
/// operator identity UB = S_u^T W S_u holds.
pub fn polar_decomposition_suite(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0x901A);
    let mut worst_recon = 0.0_f64;
    let mut worst_sym = 0.0_f64;
    let mut min_eig = f64::INFINITY;
    let mut worst_ortho = 0.0_f64;
    let mut worst_oracle = 0.0_f64;
    let mut errors = 0usize;
    for _ in 0..POLAR_TRIALS {
        let l = random_orthochronous(&mut rng, 4);
        let u = random_unit_timelike(&mut rng, PAIR_RAPIDITY);
        let (f, oracle) = match (polar_decompose(&l, &u), oracle_polar_sqrt(&l, &u)) {
            (Ok(f), Ok(o)) => (f, o),
            _ => {
                errors += 1;
                continue;
            }
        };

        let rebuilt = f.boost.matrix().mul(f.rotation.matrix());
        worst_recon = worst_recon.max(rebuilt.max_diff(l.matrix()));

        let sym = check_u_symmetric(&f.boost, &u, 8, &mut rng).expect("observer is timelike");
        worst_sym = worst_sym.max(sym.operator_residual).max(sym.sampled_max);
        min_eig = min_eig.min(check_u_positive(&f.boost, &u).expect("observer is timelike"));
        worst_ortho = worst_ortho
            .max(check_rotation_u_orthogonal(&f.rotation, &u, 1e-7).expect("rotation fixes u"));

        worst_oracle = worst_oracle
            .max(f.boost.matrix().max_diff(oracle.boost.matrix()))
            .max(f.rotation.matrix().max_diff(oracle.rotation.matrix()));
    }

    let mut worst_identity = 0.0_f64;
    for _ in 0..IDENTITY_TRIALS {
        let u = random_unit_timelike(&mut rng, PAIR_RAPIDITY);
        let w = random_unit_timelike(&mut rng, PAIR_RAPIDITY);
        let b = boost_from_pair(&u, &w).expect("timelike pair");
        let um = observer_metric(&u).expect("timelike");
        let wm = observer_metric(&w).expect("timelike");
        let su = hyperplane_reflection(&b.observer, DEFAULT_TOL).expect("unit timelike");
        let lhs = um.tensor.mul(b.transform.matrix());
        let rhs = su.tensor().transpose().mul(&wm.tensor).mul(su.tensor());
        worst_identity = worst_identity.max(lhs.max_diff(&rhs));
    }

    CheckOutcome::new(
        "polar_decomposition",
        POLAR_TRIALS + IDENTITY_TRIALS,
        vec![
            SubCheck::count("decomposition_errors", errors),
            SubCheck::bounded("reconstruction", worst_recon, 1e-10),
            SubCheck::bounded("boost_u_symmetry", worst_sym, 1e-10),
            SubCheck::positive("boost_min_eigenvalue", min_eig),
            SubCheck::bounded("rotation_u_orthogonality", worst_ortho, 1e-10),
            SubCheck::bounded("factors_vs_sqrt_oracle", worst_oracle, 1e-9),
            SubCheck::bounded("ub_equals_conjugated_w", worst_identity, 1e-11),
        ],
    )
}

/// Criterion 7: the boost positivity identity holds to 1e-12 across the
/// velocity range, including the worked point where both sides equal 1.
pub fn positivity_identity(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0x9051);
    let mut worst = 0.0_f64;
    for _ in 0..POSITIVITY_TRIALS {
        let speed = rng.uniform(1e-3, 0.999);
        let n = random_direction(&mut rng);
        let v = Velocity3::new(speed * n[0], speed * n[1], speed * n[2])
            .expect("speed below 1");
        let t = rng.uniform(-1.0, 1.0);
        let xs = [
            rng.uniform(-1.0, 1.0),
            rng.uniform(-1.0, 1.0),
            rng.uniform(-1.0, 1.0),
        ];
        let (lhs, rhs) = crate::polar::positivity_identity_check(&v, t, xs)
            .expect("velocity in range");
        worst = worst.max((lhs - rhs).abs());
    }
    let (lhs, rhs) = crate::polar::positivity_identity_check(
        &Velocity3::new(0.6, 0.0, 0.0).unwrap(),
        1.0,
        [1.0, 0.0, 0.0],
    )
    .unwrap();
    let worked = (lhs - 1.0).abs().max((rhs - 1.0).abs());
    CheckOutcome::new(
        "positivity_identity",
        POSITIVITY_TRIALS,
        vec![
            SubCheck::bounded("identity_residual", worst, 1e-12),
            SubCheck::bounded("worked_point", worked, 1e-12),
        ],
    )
}

/// Criterion 8: the component read from (det, m00) matches the parity pair
/// of the generating reflection product, with zero mismatches.
pub fn parity_classification(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0x9A87);
    let mut mismatches = 0usize;
    for _ in 0..PARITY_TRIALS {
        let k = (rng.uniform(0.0, 7.0) as usize).min(6);
        let l = random_lorentz(&mut rng, k);
        let predicted =
            component_from_parities(l.spacelike_normal_count, l.timelike_normal_count);
        if predicted != l.transform.classify_component() {
            mismatches += 1;
        }
    }
    CheckOutcome::new(
        "parity_classification",
        PARITY_TRIALS,
        vec![SubCheck::count("component_mismatches", mismatches)],
    )
}

/// Criterion 9: factorization round-trips to 1e-9, stays within four
/// normals on proper orthochronous input, and its parity pair is observer
/// independent.
pub fn factorization_round_trip(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0xFAC7);
    let mut worst_recon = 0.0_f64;
    let mut length_violations = 0usize;
    let mut parity_violations = 0usize;
    let mut errors = 0usize;
    for i in 0..FACTOR_TRIALS {
        let k = (rng.uniform(0.0, 7.0) as usize).min(6);
        let l = random_lorentz(&mut rng, k);
        let observer = if i % 2 == 0 {
            FourVector::E0
        } else {
            random_unit_timelike(&mut rng, PAIR_RAPIDITY)
        };
        let rec = match factor_into_reflections(&l.transform, &observer) {
            Ok(rec) => rec,
            Err(_) => {
                errors += 1;
                continue;
            }
        };
        let rebuilt = rec.reconstruct().expect("emitted normals are non-null");
        worst_recon = worst_recon.max(rebuilt.matrix().max_diff(l.transform.matrix()));
        if l.transform.classify_component() == LorentzComponent::ProperOrthochronous
            && rec.normals.len() > 4
        {
            length_violations += 1;
        }
        // Parity invariance across observers.
        if i % 8 == 0 {
            let other = random_unit_timelike(&mut rng, PAIR_RAPIDITY);
            match factor_into_reflections(&l.transform, &other) {
                Ok(rec2) => {
                    if rec2.component != rec.component
                        || rec2.count_spacelike_hyperplane % 2 != rec.count_spacelike_hyperplane % 2
                        || rec2.count_timelike_hyperplane % 2 != rec.count_timelike_hyperplane % 2
                    {
                        parity_violations += 1;
                    }
                }
                Err(_) => errors += 1,
            }
        }
    }
    CheckOutcome::new(
        "factorization_round_trip",
        FACTOR_TRIALS,
        vec![
            SubCheck::count("factorization_errors", errors),
            SubCheck::bounded("reconstruction", worst_recon, 1e-9),
            SubCheck::count("length_violations_proper_orthochronous", length_violations),
            SubCheck::count("parity_observer_dependence", parity_violations),
        ],
    )
}

/// Module invariant: reflections of vectors in a 2-plane stay in the plane.
pub fn plane_closure(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0x900);
    let trials = 10_000;
    let mut worst = 0.0_f64;
    for _ in 0..trials {
        let a = crate::testkit::random_unit_normal(&mut rng, NORMAL_RAPIDITY);
        let b = crate::testkit::random_unit_normal(&mut rng, NORMAL_RAPIDITY);
        let x = a.scale(rng.uniform(-2.0, 2.0)) + b.scale(rng.uniform(-2.0, 2.0));
        if x.euclid_norm() < 1e-3 {
            continue;
        }
        let sa = hyperplane_reflection(&a, DEFAULT_TOL).expect("unit normal");
        let sb = hyperplane_reflection(&b, DEFAULT_TOL).expect("unit normal");

        // Euclidean orthonormalization of the plane: span membership does
        // not depend on the metric, and this stays robust when the plane is
        // eta-degenerate.
        let dot = |p: &FourVector, q: &FourVector| p.t * q.t + p.x * q.x + p.y * q.y + p.z * q.z;
        let e1 = a.scale(1.0 / a.euclid_norm());
        let raw2 = b - e1.scale(dot(&b, &e1));
        let n = raw2.euclid_norm();
        let e2 = if n < 1e-6 { None } else { Some(raw2.scale(1.0 / n)) };
        let residual = |v: &FourVector| -> f64 {
            let mut r = *v - e1.scale(dot(v, &e1));
            if let Some(e2) = &e2 {
                r = r - e2.scale(dot(v, e2));
            }
            r.euclid_norm()
        };
        for image in [sa.apply(&x), sb.apply(&x), sa.apply(&sb.apply(&x))] {
            worst = worst.max(residual(&image) / x.euclid_norm());
        }
    }
    CheckOutcome::new(
        "plane_closure",
        trials,
        vec![SubCheck::bounded("span_residual", worst, 1e-10)],
    )
}

/// Module invariant: any u-boost B is reproduced by the bisector pair
/// construction from u and B u.
pub fn boost_reproduction(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0xB00);
    let trials = 10_000;
    let mut worst = 0.0_f64;
    for _ in 0..trials {
        let u = random_unit_timelike(&mut rng, OBSERVER_RAPIDITY);
        let w = random_unit_timelike(&mut rng, OBSERVER_RAPIDITY);
        let b = boost_from_pair(&u, &w).expect("timelike pair");
        let u1 = b.transform.apply(&u);
        let rebuilt = boost_from_pair(&u, &(u + u1)).expect("bisector is timelike");
        worst = worst.max(rebuilt.transform.matrix().max_diff(b.transform.matrix()));
    }
    CheckOutcome::new(
        "boost_reproduction",
        trials,
        vec![SubCheck::bounded("bisector_rebuild", worst, 1e-10)],
    )
}

/// Module invariants: the half-angle construction agrees with trace
/// extraction, and swapping the mirrors inverts the rotation.
pub fn rotation_consistency(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0x807);
    let trials = 10_000;
    let mut worst_angle = 0.0_f64;
    let mut worst_inverse = 0.0_f64;
    let mut worst_axis_fix = 0.0_f64;
    for _ in 0..trials {
        let u = random_unit_timelike(&mut rng, OBSERVER_RAPIDITY);
        let frame = ObserverFrame::new(&u).expect("timelike");
        let na = random_direction(&mut rng);
        let nb = random_direction(&mut rng);
        let a = frame.from_components(0.0, [na[0], na[1], na[2]]).scale(rng.uniform(0.5, 2.0));
        let b = frame.from_components(0.0, [nb[0], nb[1], nb[2]]).scale(rng.uniform(0.5, 2.0));
        let built = match rotation_from_plane(&u, &a, &b, DEFAULT_TOL) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let read = rotation_angle(&built.transform, &u, 1e-7).expect("fixes u");
        worst_angle = worst_angle.max((built.angle - read.angle).abs());

        // The axis direction is fixed vectorwise, like the observer.
        if let Some(axis) = built.axis {
            let axis_vec = frame.from_components(0.0, axis);
            worst_axis_fix =
                worst_axis_fix.max((built.transform.apply(&axis_vec) - axis_vec).euclid_norm());
        }

        let swapped = rotation_from_plane(&u, &b, &a, DEFAULT_TOL).expect("same plane");
        let prod = built.transform.matrix().mul(swapped.transform.matrix());
        worst_inverse = worst_inverse.max(prod.max_diff(&Mat4::IDENTITY));
    }
    CheckOutcome::new(
        "rotation_consistency",
        trials,
        vec![
            SubCheck::bounded("half_angle_vs_trace", worst_angle, 1e-10),
            SubCheck::bounded("axis_fixed_vectorwise", worst_axis_fix, 1e-10),
            SubCheck::bounded("swap_inverts", worst_inverse, 1e-11),
        ],
    )
}

/// Module invariant: re-decomposing the recombined factors returns them
/// unchanged (a uniqueness probe).
pub fn polar_uniqueness(seed: u64) -> CheckOutcome {
    let mut rng = TestRng::new(seed ^ 0x0901A);
    let trials = 1_000;
    let mut worst = 0.0_f64;
    for _ in 0..trials {
        let l = random_orthochronous(&mut rng, 4);
        let u = random_unit_timelike(&mut rng, PAIR_RAPIDITY);
        let f = polar_decompose(&l, &u).expect("orthochronous");
        let recombined = compose(&f.boost, &f.rotation).expect("factors compose");
        let f2 = polar_decompose(&recombined, &u).expect("orthochronous");
        worst = worst
            .max(f2.boost.matrix().max_diff(f.boost.matrix()))
            .max(f2.rotation.matrix().max_diff(f.rotation.matrix()));
    }
    CheckOutcome::new(
        "polar_uniqueness",
        trials,
        vec![SubCheck::bounded("refactor_stability", worst, 1e-10)],
    )
}

/// Module invariant: generators are class-correct and seed-deterministic.
pub fn generator_checks(seed: u64) -> CheckOutcome {
    let trials = 100_000;
    let mut rng = TestRng::new(seed ^ 0x9E0);
    let classes = [
        CausalClass::TimelikeFuture,
        CausalClass::TimelikePast,
        CausalClass::LightlikeFuture,
        CausalClass::LightlikePast,
        CausalClass::Spacelike,
    ];
    let mut wrong_class = 0usize;
    for i in 0..trials {
        let class = classes[i % classes.len()];
        let v = random_four_vector(&mut rng, class);
        if causal_class(&v, DEFAULT_TOL) != class {
            wrong_class += 1;
        }
    }
    let mut a = TestRng::new(seed);
    let mut b = TestRng::new(seed);
    let mut determinism_breaks = 0usize;
    for i in 0..1_000 {
        let class = classes[i % classes.len()];
        if random_four_vector(&mut a, class) != random_four_vector(&mut b, class) {
            determinism_breaks += 1;
        }
    }
    CheckOutcome::new(
        "generators",
        trials,
        vec![
            SubCheck::count("class_mismatches", wrong_class),
            SubCheck::count("determinism_breaks", determinism_breaks),
        ],
    )
}

/// Runs every suite. The first nine entries are the acceptance criteria in
/// order; the remainder are the per-module invariants.
pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    vec![
        reflection_axioms(seed),
        boost_linking_correctness(seed),
        velocity_formula(seed),
        exceptional_lightlike(seed),
        thomas_rotation_properties(seed),
        polar_decomposition_suite(seed),
        positivity_identity(seed),
        parity_classification(seed),
        factorization_round_trip(seed),
        plane_closure(seed),
        boost_reproduction(seed),
        rotation_consistency(seed),
        polar_uniqueness(seed),
        generator_checks(seed),
    ]
}
