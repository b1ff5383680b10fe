use proptest::prelude::*;
use sextica_oracle::{find_roots, OracleConfig};
use sextica_poly::{c64, ComplexScalar, Polynomial};

fn separated_roots() -> impl Strategy<Value = Vec<ComplexScalar>> {
    prop::collection::vec((-7.0f64..7.0, -7.0f64..7.0), 1..=8)
        .prop_map(|v| v.into_iter().map(|(re, im)| c64(re, im)).collect::<Vec<_>>())
        .prop_filter("separation ≥ 0.1", |rs| {
            rs.iter().enumerate().all(|(i, a)| rs[i + 1..].iter().all(|b| (a - b).norm() >= 0.1))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn every_true_root_is_found(roots in separated_roots()) {
        let p = Polynomial::from_roots(&roots).unwrap();
        let rep = find_roots(&p, &OracleConfig::default()).unwrap();
        prop_assert!(rep.converged);
        for t in &roots {
            let d = rep.roots.iter().map(|r| (r - t).norm()).fold(f64::INFINITY, f64::min);
            prop_assert!(d <= 1e-8, "root {t} missed by {d}");
        }
        for r in &rep.roots {
            prop_assert!(p.backward_residual(*r) <= 1e-10);
        }
    }

    #[test]
    fn real_coefficients_scaled(roots in separated_roots(), k in 0.1f64..10.0) {
        let p = Polynomial::from_roots(&roots).unwrap();
        let scaled = Polynomial::new(p.coeffs().iter().map(|c| c * k).collect()).unwrap();
        let a = find_roots(&scaled, &OracleConfig::default()).unwrap();
        prop_assert!(a.converged);
        prop_assert_eq!(a.roots.len(), roots.len());
    }
}
