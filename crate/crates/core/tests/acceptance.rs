//! Acceptance suite. Runs every exit criterion at its pinned tolerance and
//! prints one PASS/FAIL line each; exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use salpeter_bounds::bounds::{lower_bound, theorem1_bounds, upper_bound};
use salpeter_bounds::kinetic::{
    energy_from_kinetic_potential, geometric_grid, kinetic_potential_from_curve, p_log, p_lower,
    p_schrodinger, p_variational, CouplingCurve, PKind,
};
use salpeter_bounds::oracle::{
    coupling_curve, salpeter_ground, schrodinger_ground, ultrarelativistic_ground, Kinetic,
    OracleSettings,
};
use salpeter_bounds::{Error, PotentialSum, Problem};

// ground state of p² + r (first zero of Ai); equals that of p + r² by duality
const AIRY_ZERO: f64 = 2.338_107_410_459_767;

/// Collects failed checks for one criterion.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn close(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        let diff = (got - want).abs();
        if diff.is_nan() || diff > tol {
            self.failures.push(format!(
                "{label}: got {got:.10}, want {want:.10} (|diff| {diff:.2e} > {tol:.0e})"
            ));
        }
    }

    fn holds(&mut self, label: impl Into<String>, ok: bool) {
        if !ok {
            self.failures.push(label.into());
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn finish(self) -> Result<String, String> {
        if self.failures.is_empty() {
            Ok(self.notes.join("; "))
        } else {
            Err(self.failures.join("; "))
        }
    }
}

type Outcome = Result<String, String>;

fn lib<T>(r: Result<T, Error>) -> Result<T, String> {
    r.map_err(|e| format!("library error: {e}"))
}

fn mass_grid() -> Vec<f64> {
    (0..21).map(|i| 0.5 * i as f64).collect()
}

fn nondecreasing(xs: &[f64]) -> bool {
    xs.windows(2).all(|w| w[1] >= w[0])
}

fn table_regeneration() -> Outcome {
    let start = Instant::now();
    let settings = OracleSettings::default();
    let mut c = Checks::default();
    let power = |q: f64| lib(PotentialSum::pure_power(q));
    let log = PotentialSum::pure_log();

    // (q, E2, tol, P2)
    let schrodinger = [
        (-1.0, -0.25, 1e-6, 1.0),
        (0.0, 1.0443325, 1e-5, 1.218669),
        (1.0, 2.3381075, 1e-6, 1.376084),
        (2.0, 3.0, 1e-9, 1.5),
    ];
    for (q, e_want, tol, p_want) in schrodinger {
        let v = if q == 0.0 { log.clone() } else { power(q)? };
        let e = lib(schrodinger_ground(&v, 1.0, &settings))?.energy;
        c.close(&format!("E2({q})"), e, e_want, tol);
        let p = if q == 0.0 {
            lib(p_log(PKind::Schrodinger, e))?
        } else {
            lib(p_schrodinger(q, e))?
        };
        c.close(&format!("P2({q})"), p, p_want, tol);
    }

    // (q, E1, P1), all at 5e-4
    let relativistic = [
        (0.0, 1.06365, 1.0657),
        (1.0, 2.23225, 1.2457),
        (2.0, 2.338107, 1.366687),
    ];
    for (q, e_want, p_want) in relativistic {
        let v = if q == 0.0 { log.clone() } else { power(q)? };
        let e = lib(ultrarelativistic_ground(&v, &settings))?.energy;
        c.close(&format!("E1({q})"), e, e_want, 5e-4);
        let p = if q == 0.0 {
            lib(p_log(PKind::RelativisticLower, e))?
        } else {
            lib(p_lower(q, e))?
        };
        c.close(&format!("P1({q})"), p, p_want, 5e-4);
    }

    let elapsed = start.elapsed();
    c.holds(
        format!("runtime {elapsed:?} over one minute"),
        elapsed < Duration::from_secs(60),
    );
    c.note(format!("runtime {:.2}s", elapsed.as_secs_f64()));
    c.finish()
}

fn p_number_formulas() -> Outcome {
    let mut c = Checks::default();
    c.close(
        "p_schrodinger(-1, -0.25)",
        lib(p_schrodinger(-1.0, -0.25))?,
        1.0,
        1e-12,
    );
    c.close(
        "p_schrodinger(2, 3)",
        lib(p_schrodinger(2.0, 3.0))?,
        1.5,
        1e-12,
    );
    c.close(
        "p_variational(2, 2)",
        lib(p_variational(2.0, 2.0))?,
        1.5,
        1e-12,
    );
    c.finish()
}

fn figure1_bracket() -> Outcome {
    let mut c = Checks::default();
    let linear = lib(PotentialSum::pure_power(1.0))?;
    let (mut lows, mut highs) = (Vec::new(), Vec::new());
    for m in mass_grid() {
        let (lo, hi) = lib(theorem1_bounds(&lib(Problem::new(1.0, m, linear.clone()))?))?;
        if m == 0.0 {
            c.close("lower(m=0)", lo.value, 2.0 * 1.2457f64.sqrt(), 1e-3);
            c.close("upper(m=0)", hi.value, 2.0 * 1.376084f64.sqrt(), 1e-3);
        }
        c.holds(format!("lower > upper at m={m}"), lo.value <= hi.value);
        lows.push(lo.value);
        highs.push(hi.value);
    }
    c.holds("lower not nondecreasing in m", nondecreasing(&lows));
    c.holds("upper not nondecreasing in m", nondecreasing(&highs));
    c.note(format!("m=0 bracket [{:.6}, {:.6}]", lows[0], highs[0]));
    c.finish()
}

fn sandwich(coefficients: (f64, f64, f64, f64), nu: f64) -> Outcome {
    let (a, b, cl, d) = coefficients;
    let potential = lib(PotentialSum::from_coefficients(a, b, cl, d))?;
    let settings = OracleSettings::with_dim(25);
    let mut c = Checks::default();
    let mut columns = (Vec::new(), Vec::new(), Vec::new());
    for m in mass_grid() {
        let problem = lib(Problem::new(1.0, m, potential.clone()))?;
        let lower = lib(lower_bound(&problem))?.value;
        let oracle = lib(salpeter_ground(&problem, &settings))?.energy;
        let upper = lib(upper_bound(&problem, nu))?.value;
        c.holds(
            format!("m={m}: lower {lower:.8} > oracle {oracle:.8}"),
            lower <= oracle,
        );
        c.holds(
            format!("m={m}: oracle {oracle:.8} > upper {upper:.8}"),
            oracle <= upper,
        );
        columns.0.push(lower);
        columns.1.push(oracle);
        columns.2.push(upper);
    }
    c.holds("lower not monotone in m", nondecreasing(&columns.0));
    c.holds("oracle not monotone in m", nondecreasing(&columns.1));
    c.holds("upper not monotone in m", nondecreasing(&columns.2));
    c.note(format!(
        "m=10: {:.6} <= {:.6} <= {:.6}",
        columns.0[20], columns.1[20], columns.2[20]
    ));
    c.finish()
}

fn figure2_sandwich() -> Outcome {
    sandwich((0.1, 0.0, 0.25, 0.0), 1.6)
}

fn figure4_ordering() -> Outcome {
    sandwich((0.1, 0.25, 0.25, 0.25), 1.4)
}

fn scaling_curves() -> Result<Vec<(String, CouplingCurve)>, String> {
    let settings = OracleSettings::default();
    let grid = [0.5, 1.0, 2.0];
    let mut curves = Vec::new();
    for q in [1.0, 2.0] {
        let base = lib(PotentialSum::pure_power(q))?;
        for (name, kinetic) in [
            ("p^2", Kinetic::Schrodinger),
            ("p", Kinetic::Ultrarelativistic),
        ] {
            curves.push((
                format!("K={name} q={q}"),
                lib(coupling_curve(kinetic, &base, &grid, &settings))?,
            ));
        }
    }
    curves.push((
        "K=p^2 ln r".into(),
        lib(coupling_curve(
            Kinetic::Schrodinger,
            &PotentialSum::pure_log(),
            &grid,
            &settings,
        ))?,
    ));
    Ok(curves)
}

fn scaling_laws() -> Outcome {
    let mut c = Checks::default();
    for (label, curve) in scaling_curves()? {
        if label.ends_with("ln r") {
            let f1 = curve.samples()[1].1;
            for &(v, f) in [curve.samples()[0], curve.samples()[2]].iter() {
                c.close(
                    &format!("{label} v={v}"),
                    f,
                    v * f1 - 0.5 * v * v.ln(),
                    1e-3,
                );
            }
            continue;
        }
        let q: f64 = label.rsplit('=').next().unwrap().parse().unwrap();
        let expected = if label.starts_with("K=p^2") {
            2.0 / (2.0 + q)
        } else {
            1.0 / (1.0 + q)
        };
        let k = lib(curve.power_law_exponent())?;
        c.close(&format!("{label} exponent"), k, expected, 1e-3);
    }
    c.finish()
}

fn concavity_and_round_trip() -> Outcome {
    let mut c = Checks::default();
    let settings = OracleSettings::default();
    let mut sampled = scaling_curves()?;
    let linear = lib(PotentialSum::pure_power(1.0))?;
    let v_grid = lib(geometric_grid(0.25, 4.0, 31))?;
    let dense = lib(coupling_curve(
        Kinetic::Schrodinger,
        &linear,
        &v_grid,
        &settings,
    ))?;
    sampled.push(("K=p^2 q=1 dense".into(), dense.clone()));
    sampled.push((
        "K=salpeter m=1 q=1".into(),
        lib(coupling_curve(
            Kinetic::Salpeter {
                mass: 1.0,
                beta: 1.0,
            },
            &linear,
            &[0.5, 1.0, 2.0],
            &settings,
        ))?,
    ));
    for (label, curve) in &sampled {
        c.holds(
            format!("{label} fails concavity"),
            CouplingCurve::new(curve.samples().to_vec()).is_ok(),
        );
    }
    let kp = lib(kinetic_potential_from_curve(&dense))?;
    let mut worst: f64 = 0.0;
    for &(v, f) in dense.samples() {
        let e = lib(energy_from_kinetic_potential(&kp, v))?.energy;
        worst = worst.max((e - f).abs());
        c.close(&format!("round trip v={v:.4}"), e, f, 1e-6);
    }
    c.note(format!(
        "{} curves concave, worst round-trip error {worst:.1e}",
        sampled.len()
    ));
    c.finish()
}

fn coulomb_path() -> Outcome {
    let mut c = Checks::default();
    let v: f64 = 0.1;
    // closed-form Coulomb lower bound m·[(1 + √(1 − 4v²))/2]^{1/2} at m = 1
    let expected = ((1.0 + (1.0 - 4.0 * v * v).sqrt()) / 2.0).sqrt();
    let coulomb = lib(PotentialSum::pure_power(-1.0))?;
    let problem = lib(Problem::new(1.0, 1.0, lib(coulomb.scaled(v))?))?;
    let got = lib(lower_bound(&problem))?.value;
    c.close("lower(-0.1/r)", got, expected, 1e-6);
    c.note(format!("value {got:.9}"));

    for (beta, a) in [(1.0, 0.5), (1.0, 0.6), (0.4, 0.2)] {
        let potential = lib(coulomb.scaled(a))?;
        c.holds(
            format!("a/beta = {} accepted by Problem::new", a / beta),
            matches!(
                Problem::new(beta, 1.0, potential.clone()),
                Err(Error::CouplingTooLarge { .. })
            ),
        );
        let unchecked = Problem {
            beta,
            m: 1.0,
            potential,
        };
        c.holds(
            format!("a/beta = {} accepted by lower_bound", a / beta),
            matches!(lower_bound(&unchecked), Err(Error::CouplingTooLarge { .. })),
        );
    }
    c.finish()
}

fn massless_exactness() -> Outcome {
    let mut c = Checks::default();
    // Reference energies and the stored P⁽¹⁾. Stored lower P-numbers are
    // truncated rather than rounded, so their precision is one unit in the
    // last digit.
    let cases = [
        (1.0, 2.23225, 1.2457, 1e-4),
        (2.0, AIRY_ZERO, 1.376083, 1e-6),
    ];
    for (q, reference, p_stored, unit) in cases {
        // min_r 1/r + (P r)^q
        let closed = |p: f64| (1.0 + 1.0 / q) * (q * p.powf(q)).powf(1.0 / (1.0 + q));
        let tol = closed(p_stored + unit) - closed(p_stored);
        let problem = lib(Problem::new(1.0, 0.0, lib(PotentialSum::pure_power(q))?))?;
        let got = lib(lower_bound(&problem))?.value;
        c.close(&format!("lower(r^{q}) vs E1({q})"), got, reference, tol);
        c.note(format!("q={q}: {got:.8} (tol {tol:.1e})"));
    }
    c.finish()
}

fn duality() -> Outcome {
    let mut c = Checks::default();
    let settings = OracleSettings::default();
    let a = lib(ultrarelativistic_ground(
        &lib(PotentialSum::pure_power(2.0))?,
        &settings,
    ))?
    .energy;
    let b = lib(schrodinger_ground(
        &lib(PotentialSum::pure_power(1.0))?,
        1.0,
        &settings,
    ))?
    .energy;
    c.close("p + r^2 vs p^2 + r", a, b, 1e-3);
    c.note(format!("{a:.8} vs {b:.8}"));
    c.finish()
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "table of component eigenvalues and P-numbers",
            table_regeneration,
        ),
        ("P-number formula identities", p_number_formulas),
        ("single-power bracket for V = r", figure1_bracket),
        ("Coulomb plus linear sandwich", figure2_sandwich),
        ("four-term potential ordering", figure4_ordering),
        ("coupling scaling laws", scaling_laws),
        (
            "concavity and Legendre round trip",
            concavity_and_round_trip,
        ),
        ("Coulomb lower bound and coupling limit", coulomb_path),
        ("massless single-power exactness", massless_exactness),
        ("p + r^2 and p^2 + r duality", duality),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{secs:.2}s] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} [{secs:.2}s] {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
