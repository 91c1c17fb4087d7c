use salpeter_bounds::kinetic::{
    geometric_grid, kinetic_potential_from_curve, p_schrodinger, CouplingCurve,
};
use salpeter_bounds::oracle::{
    coupling_curve, ground_state_in, salpeter_ground, schrodinger_ground, ultrarelativistic_ground,
    BasisFamily, Kinetic, OracleSettings,
};
use salpeter_bounds::{Error, PotentialSum, Problem};

// first zero of Ai, i.e. the ground state of p² + r
const AIRY_ZERO: f64 = 2.338_107_410_459_767;

fn defaults() -> OracleSettings {
    OracleSettings::default()
}

#[test]
fn schrodinger_table_values() {
    let coulomb =
        schrodinger_ground(&PotentialSum::pure_power(-1.0).unwrap(), 1.0, &defaults()).unwrap();
    assert!((coulomb.energy + 0.25).abs() < 1e-6, "{}", coulomb.energy);
    let linear =
        schrodinger_ground(&PotentialSum::pure_power(1.0).unwrap(), 1.0, &defaults()).unwrap();
    assert!(
        (linear.energy - AIRY_ZERO).abs() < 1e-7,
        "{}",
        linear.energy
    );
    assert!(linear.residual <= 1e-7, "residual {}", linear.residual);
    let osc =
        schrodinger_ground(&PotentialSum::pure_power(2.0).unwrap(), 1.0, &defaults()).unwrap();
    assert!((osc.energy - 3.0).abs() < 1e-9);
    let log = schrodinger_ground(&PotentialSum::pure_log(), 1.0, &defaults()).unwrap();
    assert!((log.energy - 1.044_332_5).abs() < 1e-5);
}

#[test]
fn schrodinger_coupling_scales_potential() {
    // p² + v·r has energy v^{2/3}·E(1)
    let r = schrodinger_ground(&PotentialSum::pure_power(1.0).unwrap(), 8.0, &defaults()).unwrap();
    assert!((r.energy - 4.0 * AIRY_ZERO).abs() < 1e-6);
    assert!(schrodinger_ground(&PotentialSum::pure_power(1.0).unwrap(), 0.0, &defaults()).is_err());
}

#[test]
fn ultrarelativistic_table_values() {
    let cases = [
        (PotentialSum::pure_power(1.0).unwrap(), 2.23225),
        (PotentialSum::pure_power(2.0).unwrap(), 2.338107),
        (PotentialSum::pure_log(), 1.06365),
    ];
    for (v, expected) in cases {
        let e = ultrarelativistic_ground(&v, &defaults()).unwrap().energy;
        assert!((e - expected).abs() < 5e-4, "{v}: {e} vs {expected}");
    }
}

#[test]
fn ultrarelativistic_refusals() {
    let coulomb = PotentialSum::pure_power(-1.0).unwrap();
    assert!(matches!(
        ultrarelativistic_ground(&coulomb, &defaults()),
        Err(Error::NoDiscreteSpectrum(_))
    ));
    let steep = PotentialSum::new(
        vec![
            salpeter_bounds::PowerTerm::new(-1.5, 0.1).unwrap(),
            salpeter_bounds::PowerTerm::new(1.0, 1.0).unwrap(),
        ],
        0.0,
    )
    .unwrap();
    assert!(matches!(
        ultrarelativistic_ground(&steep, &defaults()),
        Err(Error::UnsupportedTerm { .. })
    ));
}

#[test]
fn duality_between_kinetic_operators() {
    let a = ultrarelativistic_ground(&PotentialSum::pure_power(2.0).unwrap(), &defaults()).unwrap();
    let b = schrodinger_ground(&PotentialSum::pure_power(1.0).unwrap(), 1.0, &defaults()).unwrap();
    assert!((a.energy - b.energy).abs() < 1e-3);
}

#[test]
fn salpeter_massless_linear_inside_single_power_bracket() {
    let p = Problem::new(1.0, 0.0, PotentialSum::pure_power(1.0).unwrap()).unwrap();
    let e = salpeter_ground(&p, &defaults()).unwrap().energy;
    assert!(
        e >= 2.0 * 1.2457f64.sqrt() && e <= 2.0 * 1.376084f64.sqrt(),
        "{e}"
    );
}

#[test]
fn salpeter_coulomb_energy_is_proportional_to_mass() {
    let v = PotentialSum::pure_power(-1.0).unwrap().scaled(0.3).unwrap();
    let per_mass: Vec<f64> = [0.5, 1.0, 4.0]
        .iter()
        .map(|&m| {
            let p = Problem::new(1.0, m, v.clone()).unwrap();
            salpeter_ground(&p, &defaults()).unwrap().energy / m
        })
        .collect();
    for w in per_mass.windows(2) {
        assert!((w[0] - w[1]).abs() < 1e-4, "{per_mass:?}");
    }
    // and never below the closed-form Coulomb lower bound
    assert!(per_mass[0] >= ((1.0 + (1.0f64 - 0.36).sqrt()) / 2.0).sqrt());
}

#[test]
fn salpeter_refusals() {
    let p = Problem::new(
        1.0,
        0.0,
        PotentialSum::pure_power(-1.0).unwrap().scaled(0.2).unwrap(),
    )
    .unwrap();
    assert!(matches!(
        salpeter_ground(&p, &defaults()),
        Err(Error::NoDiscreteSpectrum(_))
    ));
    let coulomb = PotentialSum::from_coefficients(0.6, 0.0, 1.0, 0.0).unwrap();
    assert!(matches!(
        Problem::new(1.0, 1.0, coulomb),
        Err(Error::CouplingTooLarge { .. })
    ));
}

#[test]
fn salpeter_grows_with_mass() {
    let v = PotentialSum::from_coefficients(0.1, 0.0, 0.25, 0.0).unwrap();
    let energies: Vec<f64> = [0.0, 5.0, 20.0, 50.0]
        .iter()
        .map(|&m| {
            salpeter_ground(&Problem::new(1.0, m, v.clone()).unwrap(), &defaults())
                .unwrap()
                .energy
        })
        .collect();
    assert!(energies.windows(2).all(|w| w[1] > w[0]), "{energies:?}");
    // √(m² + p²) ≤ m + p²/2m, so E − m sits just below E(p² + 2mV)/2m
    let m = 50.0;
    let nonrel = schrodinger_ground(&v, 2.0 * m, &defaults()).unwrap().energy / (2.0 * m);
    let binding = energies[3] - m;
    assert!(binding <= nonrel + 1e-6, "{binding} vs {nonrel}");
    assert!(binding >= nonrel - 5e-3, "{binding} vs {nonrel}");
}

#[test]
fn variational_monotonicity_in_basis_size() {
    let linear = PotentialSum::pure_power(1.0).unwrap();
    let kinetics = [
        Kinetic::Schrodinger,
        Kinetic::Ultrarelativistic,
        Kinetic::Salpeter {
            mass: 1.0,
            beta: 1.0,
        },
    ];
    for kinetic in kinetics {
        let mut last = f64::INFINITY;
        for dim in [10, 15, 20, 25, 30] {
            let settings = OracleSettings {
                basis_dim: dim,
                scale: 0.8,
                scale_auto: false,
                ..defaults()
            };
            let r = ground_state_in(
                BasisFamily::Oscillator,
                kinetic,
                &|r| linear.value(r),
                &settings,
            )
            .unwrap();
            assert!(r.energy <= last + 1e-12, "{kinetic:?} dim {dim}");
            assert!(r.residual >= 0.0);
            last = r.energy;
        }
    }
}

#[test]
fn optimized_scale_is_stationary() {
    let linear = PotentialSum::pure_power(1.0).unwrap();
    let kinetic = Kinetic::Salpeter {
        mass: 1.0,
        beta: 1.0,
    };
    let best = ground_state_in(
        BasisFamily::Oscillator,
        kinetic,
        &|r| linear.value(r),
        &defaults(),
    )
    .unwrap();
    for factor in [0.95, 1.05] {
        let settings = OracleSettings {
            scale: best.settings_used.scale * factor,
            scale_auto: false,
            ..defaults()
        };
        let e = ground_state_in(
            BasisFamily::Oscillator,
            kinetic,
            &|r| linear.value(r),
            &settings,
        )
        .unwrap()
        .energy;
        assert!(e >= best.energy - 1e-12);
        assert!(
            e - best.energy <= best.residual.max(1e-9),
            "{} vs {}",
            e - best.energy,
            best.residual
        );
    }
}

#[test]
fn coupling_curve_exponents() {
    let grid = [0.5, 1.0, 2.0];
    for (q, kinetic, expected) in [
        (1.0, Kinetic::Schrodinger, 2.0 / 3.0),
        (2.0, Kinetic::Schrodinger, 0.5),
        (1.0, Kinetic::Ultrarelativistic, 0.5),
        (2.0, Kinetic::Ultrarelativistic, 1.0 / 3.0),
    ] {
        let curve = coupling_curve(
            kinetic,
            &PotentialSum::pure_power(q).unwrap(),
            &grid,
            &defaults(),
        )
        .unwrap();
        let k = curve.power_law_exponent().unwrap();
        assert!((k - expected).abs() < 1e-3, "{kinetic:?} q={q}: {k}");
    }
}

#[test]
fn log_coupling_law() {
    let curve = coupling_curve(
        Kinetic::Schrodinger,
        &PotentialSum::pure_log(),
        &[0.5, 1.0, 2.0],
        &defaults(),
    )
    .unwrap();
    let f1 = curve.samples()[1].1;
    for &(v, f) in curve.samples() {
        assert!((f - (v * f1 - 0.5 * v * v.ln())).abs() < 1e-3, "v={v}");
    }
}

#[test]
fn schrodinger_linear_kinetic_potential_has_power_form() {
    // for K = p² the kinetic potential of r is P·r with s = 1/r²
    let v_grid = geometric_grid(0.5, 2.0, 21).unwrap();
    let curve: CouplingCurve = coupling_curve(
        Kinetic::Schrodinger,
        &PotentialSum::pure_power(1.0).unwrap(),
        &v_grid,
        &defaults(),
    )
    .unwrap();
    let expected = p_schrodinger(1.0, 2.338_107_5).unwrap();
    for point in &kinetic_potential_from_curve(&curve).unwrap()[2..19] {
        let p = point.hbar * point.s.sqrt();
        assert!((p - expected).abs() < 1e-3, "{p} vs {expected}");
    }
}

#[test]
fn settings_bounds() {
    assert!(OracleSettings::with_dim(129).validate().is_err());
    let p = Problem::new(1.0, 1.0, PotentialSum::pure_power(1.0).unwrap()).unwrap();
    assert!(salpeter_ground(&p, &OracleSettings::with_dim(1)).is_err());
    let high = salpeter_ground(&p, &OracleSettings::with_dim(64)).unwrap();
    let low = salpeter_ground(&p, &OracleSettings::with_dim(25)).unwrap();
    assert!(high.energy <= low.energy + 1e-12);
}
