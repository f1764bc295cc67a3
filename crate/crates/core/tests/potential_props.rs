use proptest::prelude::*;

use susy_ces::potential::{
    ces_residual, critical_structure, potential, potential_derivative, potential_factorized, shape_invariance_gap,
    superpotential, superpotential_derivative, term_scale, ulp, PotentialSpec, Sector,
};

proptest! {
    #[test]
    fn shape_invariance_is_exact(m in -20.0..20.0f64, lx in -8.0..8.0f64) {
        prop_assume!(m.abs() > 1e-6);
        prop_assert_eq!(shape_invariance_gap(10f64.powf(lx), m).unwrap(), 0.0);
    }

    #[test]
    fn factorized_form_agrees(m in -10.0..10.0f64, lx in -6.0..6.0f64, plus in any::<bool>()) {
        prop_assume!(m.abs() > 1e-6);
        let spec = PotentialSpec::new(m, if plus { Sector::Plus } else { Sector::Minus }).unwrap();
        let x = 10f64.powf(lx);
        let d = (potential(x, spec).unwrap() - potential_factorized(x, spec).unwrap()).abs();
        prop_assert!(d <= 4.0 * ulp(term_scale(x, spec)));
    }

    #[test]
    fn ces_constraint_holds(m in -100.0..100.0f64) {
        prop_assert!(ces_residual(m).abs() <= 4.0 * ulp(m * m));
    }

    #[test]
    fn derivative_matches_finite_difference(m in 0.1..5.0f64, x in 0.05..20.0f64, plus in any::<bool>()) {
        let spec = PotentialSpec::new(m, if plus { Sector::Plus } else { Sector::Minus }).unwrap();
        let h = 1e-4 * x;
        let fd = (potential(x + h, spec).unwrap() - potential(x - h, spec).unwrap()) / (2.0 * h);
        let d = potential_derivative(x, spec).unwrap();
        prop_assert!((fd - d).abs() <= 1e-6 * d.abs().max(term_scale(x, spec) / x));
        let fdw = (superpotential(x + h, m).unwrap() - superpotential(x - h, m).unwrap()) / (2.0 * h);
        prop_assert!((fdw - superpotential_derivative(x, m).unwrap()).abs() <= 1e-7 * fdw.abs());
    }

    #[test]
    fn critical_points(m in 0.05..10.0f64) {
        let c = critical_structure(m).unwrap();
        let spec = PotentialSpec::new(m, Sector::Minus).unwrap();
        prop_assert!(potential(c.x0, spec).unwrap().abs() <= 4.0 * ulp(term_scale(c.x0, spec)));
        let dv = potential_derivative(c.x1, spec).unwrap();
        prop_assert!(dv.abs() <= 1e-12 * (m * m / (c.x1 * c.x1)));
        // a maximum: V₋ is lower on both sides
        let v1 = potential(c.x1, spec).unwrap();
        prop_assert!(potential(c.x1 * 0.9, spec).unwrap() < v1);
        prop_assert!(potential(c.x1 * 1.1, spec).unwrap() < v1);
        prop_assert_eq!(c.w_plus, 0.0);
    }

    #[test]
    fn v_plus_is_decreasing(m in 0.05..10.0f64, x in 1e-3..100.0f64) {
        let spec = PotentialSpec::new(m, Sector::Plus).unwrap();
        prop_assert!(potential_derivative(x, spec).unwrap() < 0.0);
        prop_assert!(potential(x, spec).unwrap() > 0.0);
    }
}

#[test]
fn examples() {
    assert_eq!(superpotential(4.0, 1.0).unwrap(), -0.5);
    assert_eq!(potential(1.0, PotentialSpec::new(1.0, Sector::Plus).unwrap()).unwrap(), 1.5);
    assert_eq!(potential(1.0, PotentialSpec::new(1.0, Sector::Minus).unwrap()).unwrap(), 0.5);
    assert!(superpotential(0.0, 1.0).is_err());
    assert!(potential(-1.0, PotentialSpec::new(1.0, Sector::Plus).unwrap()).is_err());
    assert!(critical_structure(0.0).is_err());
    let c = critical_structure(2.0).unwrap();
    assert_eq!(c.x0, 1.0 / 16.0);
    assert_eq!(c.x1, 9.0 / 64.0);
}
